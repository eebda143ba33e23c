//! Coinvariants and the certificate for `M ≅ M^coH × H`.
//!
//! Every equation the construction relies on is evaluated as it is needed,
//! and the first one that fails aborts the build with its name. On success
//! the certificate carries the full list of verified equations.

use serde::Serialize;
use thiserror::Error;

use super::{check_hopf_module, HopfModule};
use crate::axioms::{Entry, Group, Verdict};
use crate::linear::{equalizer, same_image, split_idempotent, LinMap};

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
#[error("{equation} ({statement}) fails: {verdict:?}")]
pub struct CertificateFailure {
    pub equation: String,
    pub statement: String,
    pub verdict: Verdict,
}

/// `q_M = φ∘(M⊗λ)∘ρ` split as `i_M∘p_M`.
#[derive(Clone, Debug)]
pub struct CoinvariantData {
    pub q: LinMap,
    pub inclusion: LinMap,
    pub projection: LinMap,
    pub coh_dim: usize,
    pub checks: Vec<Entry>,
}

#[derive(Clone, Debug)]
pub struct FundamentalCertificate {
    pub coinvariants: CoinvariantData,
    /// `∇_M` on `M^coH ⊗ H`.
    pub nabla: LinMap,
    pub nabla_rank: usize,
    pub nabla_inclusion: LinMap,
    pub nabla_projection: LinMap,
    /// `α: M → M^coH × H` and its inverse.
    pub alpha: LinMap,
    pub alpha_inv: LinMap,
    /// `(M^coH × H, φ_×, ρ_×)`
    pub induced: HopfModule,
    /// `φ^α = α⁻¹∘φ_×∘(α⊗H)`
    pub twisted_action: LinMap,
    pub checks: Vec<Entry>,
}

struct Recorder<'a> {
    module: &'a HopfModule,
    prefix: &'a str,
    entries: Vec<Entry>,
}

impl<'a> Recorder<'a> {
    fn new(module: &'a HopfModule, prefix: &'a str) -> Recorder<'a> {
        Recorder { module, prefix, entries: Vec::new() }
    }

    fn push(&mut self, id: &str, statement: &str, verdict: Verdict) -> Result<(), CertificateFailure> {
        let id = format!("{}{id}", self.prefix);
        let anchor = id.rsplit('/').next().unwrap_or(&id).split('.').next().unwrap_or(&id).to_string();
        let ok = verdict.holds();
        self.entries.push(Entry {
            id: id.clone(),
            anchor,
            group: Group::Certificate,
            statement: statement.to_string(),
            verdict: verdict.clone(),
        });
        if ok {
            Ok(())
        } else {
            Err(CertificateFailure { equation: id, statement: statement.to_string(), verdict })
        }
    }

    /// Maps out of `M ⊗ H^{⊗k}`.
    fn eq(&mut self, id: &str, statement: &str, lhs: &LinMap, rhs: &LinMap) -> Result<(), CertificateFailure> {
        let v = self.module.compare(lhs, rhs);
        self.push(id, statement, v)
    }

    /// Maps out of spaces other than `M ⊗ H^{⊗k}`: witnesses are plain indices.
    fn eq_raw(&mut self, id: &str, statement: &str, lhs: &LinMap, rhs: &LinMap) -> Result<(), CertificateFailure> {
        let v = match lhs.first_difference(rhs) {
            Ok(None) => Verdict::Pass,
            Ok(Some(j)) => Verdict::Fail { witness: j, input: format!("v{j}") },
            Err(e) => Verdict::Broken { reason: e.to_string() },
        };
        self.push(id, statement, v)
    }

    fn law(&mut self, id: &str, statement: &str, ok: Result<(), String>) -> Result<(), CertificateFailure> {
        let v = match ok {
            Ok(()) => Verdict::Pass,
            Err(reason) => Verdict::Broken { reason },
        };
        self.push(id, statement, v)
    }

    fn module_axioms(&mut self, module: &HopfModule) -> Result<(), CertificateFailure> {
        for e in check_hopf_module(module).entries {
            self.push(&e.id, &e.statement, e.verdict)?;
        }
        Ok(())
    }
}

fn coinvariants_in(rec: &mut Recorder) -> Result<CoinvariantData, CertificateFailure> {
    let n = rec.module;
    let h = n.base();
    let (phi, rho, m) = (n.action(), n.coaction(), n.id());
    rec.module_axioms(n)?;
    let q = phi * m.tensor(h.antipode()) * rho;
    rec.eq("idemp-1", "ρ∘q = (M⊗Π^L)∘ρ∘q", &(rho * &q), &(m.tensor(h.pi_l()) * rho * &q))?;
    rec.eq("idempotent", "q∘q = q", &(&q * &q), &q)?;
    let split = split_idempotent(&q).map_err(|e| CertificateFailure {
        equation: format!("{}idempotent", rec.prefix),
        statement: "q splits".into(),
        verdict: Verdict::Broken { reason: e.to_string() },
    })?;
    let (i, p) = (split.section, split.retraction);
    let image_is = |other: &LinMap| -> Result<(), String> {
        let e = equalizer(rho, &(other * rho)).map_err(|e| e.to_string())?;
        match same_image(&i, &e) {
            Ok(true) => Ok(()),
            Ok(false) => Err("Im q differs from the equalizer".into()),
            Err(e) => Err(e.to_string()),
        }
    };
    rec.law("idempotent-equalizer", "Im q = eq(ρ, (M⊗Π̄^R)∘ρ)", image_is(&m.tensor(h.pi_bar_r())))?;
    rec.law("idem-2", "Im q = eq(ρ, (M⊗Π^L)∘ρ)", image_is(&m.tensor(h.pi_l())))?;
    rec.eq("new-c5-2-1", "φ∘(q⊗H)∘ρ = id", &(phi * q.tensor(h.id()) * rho), &m)?;
    let phi_i = phi * i.tensor(h.id());
    rec.eq_raw("new-c5-2-2", "ρ∘φ∘(i⊗H) = (φ⊗H)∘(i⊗δ)", &(rho * &phi_i), &(phi.tensor(h.id()) * i.tensor(h.comul())))?;
    rec.eq_raw("new-c5-2-3", "p∘φ∘(i⊗H) = p∘φ∘(i⊗Π^L)", &(&p * &phi_i), &(&p * phi * i.tensor(h.pi_l())))?;
    rec.eq_raw("new-c5-2-4", "p∘φ∘(i⊗H) = p∘φ∘(i⊗Π̄^L)", &(&p * &phi_i), &(&p * phi * i.tensor(h.pi_bar_l())))?;
    let coh_dim = i.domain_dim();
    Ok(CoinvariantData { q, inclusion: i, projection: p, coh_dim, checks: Vec::new() })
}

/// Splits `q_M` after checking the module axioms and the identities the
/// splitting relies on.
pub fn coinvariants(n: &HopfModule) -> Result<CoinvariantData, CertificateFailure> {
    let mut rec = Recorder::new(n, "");
    let mut data = coinvariants_in(&mut rec)?;
    data.checks = rec.entries;
    Ok(data)
}

struct AlphaData {
    coinvariants: CoinvariantData,
    nabla: LinMap,
    nabla_inclusion: LinMap,
    nabla_projection: LinMap,
    alpha: LinMap,
    alpha_inv: LinMap,
    induced_action: LinMap,
    induced_coaction: LinMap,
    twisted_action: LinMap,
}

fn alpha_data(rec: &mut Recorder) -> Result<AlphaData, CertificateFailure> {
    let cd = coinvariants_in(rec)?;
    let n = rec.module;
    let h = n.base();
    let (phi, rho, m) = (n.action(), n.coaction(), n.id());
    let hid = h.id();
    let (i, p, q) = (&cd.inclusion, &cd.projection, &cd.q);
    let c = LinMap::identity(h.field(), cd.coh_dim);

    let omega = phi * i.tensor(hid);
    let omega_p = p.tensor(hid) * rho;
    let nabla = &omega_p * &omega;
    rec.eq_raw("tensor-idempotent", "∇∘∇ = ∇", &(&nabla * &nabla), &nabla)?;
    rec.eq_raw("tensor-idempotent-1", "∇ = ((p∘φ)⊗H)∘(i⊗δ)", &nabla, &((p * phi).tensor(hid) * i.tensor(h.comul())))?;
    rec.eq_raw(
        "tensor-idempotent-2",
        "(C⊗δ)∘∇ = (∇⊗H)∘(C⊗δ)",
        &(c.tensor(h.comul()) * &nabla),
        &(nabla.tensor(hid) * c.tensor(h.comul())),
    )?;
    rec.eq_raw(
        "tensor-idempotent-3",
        "∇ = (C⊗μ)∘((∇∘(C⊗η))⊗H)",
        &nabla,
        &(c.tensor(h.mul()) * (&nabla * c.tensor(h.unit())).tensor(hid)),
    )?;
    rec.eq("Th-mod.1", "ω∘ω′ = id", &(&omega * &omega_p), &m)?;
    let split = split_idempotent(&nabla).map_err(|e| CertificateFailure {
        equation: format!("{}tensor-idempotent", rec.prefix),
        statement: "∇ splits".into(),
        verdict: Verdict::Broken { reason: e.to_string() },
    })?;
    let (ni, np) = (split.section, split.retraction);
    let alpha = &np * &omega_p;
    let alpha_inv = &omega * &ni;
    rec.eq("Th-mod.2", "α⁻¹∘α = id", &(&alpha_inv * &alpha), &m)?;
    rec.eq_raw("Th-mod.3", "α∘α⁻¹ = id", &(&alpha * &alpha_inv), &LinMap::identity(h.field(), ni.domain_dim()))?;
    let induced_coaction = np.tensor(hid) * c.tensor(h.comul()) * &ni;
    let induced_action = &np * c.tensor(h.mul()) * ni.tensor(hid);
    rec.eq("Th-mod.4", "ρ_×∘α = (α⊗H)∘ρ", &(&induced_coaction * &alpha), &(alpha.tensor(hid) * rho))?;
    let twisted_action = &alpha_inv * &induced_action * alpha.tensor(hid);
    rec.eq("action-alpha", "φ^α = φ∘(q⊗μ)∘(ρ⊗H)", &twisted_action, &(phi * q.tensor(h.mul()) * rho.tensor(hid)))?;
    rec.eq_raw("nabla-i-phi", "φ∘(i⊗H)∘∇ = φ∘(i⊗H)", &(&omega * &nabla), &omega)?;
    rec.eq("rho-p-phi", "∇∘(p⊗H)∘ρ = (p⊗H)∘ρ", &(&nabla * &omega_p), &omega_p)?;
    Ok(AlphaData {
        coinvariants: cd,
        nabla,
        nabla_inclusion: ni,
        nabla_projection: np,
        alpha,
        alpha_inv,
        induced_action,
        induced_coaction,
        twisted_action,
    })
}

/// Builds `α: M ≅ M^coH × H` and verifies that it is an isomorphism of Hopf
/// modules, together with every identity used along the way.
pub fn fundamental_certificate(n: &HopfModule) -> Result<FundamentalCertificate, CertificateFailure> {
    let h = n.base();
    let hid = h.id();
    let mut rec = Recorder::new(n, "");
    let ad = alpha_data(&mut rec)?;
    let mut checks = rec.entries;

    let broken = |equation: &str, reason: String| CertificateFailure {
        equation: equation.into(),
        statement: "the induced coaction is a comodule structure".into(),
        verdict: Verdict::Broken { reason },
    };
    let rank = ad.nabla_inclusion.domain_dim();
    let induced = HopfModule::new(n.base_arc().clone(), ad.induced_action.clone(), ad.induced_coaction.clone())
        .and_then(|m| m.with_labels((0..rank).map(|k| format!("v{k}")).collect()))
        .map_err(|e| broken("structure-times", e.to_string()))?;
    let mut rec = Recorder::new(&induced, "structure-times/");
    rec.module_axioms(&induced)?;
    checks.append(&mut rec.entries);

    // the same comodule with the pulled-back action
    let twisted = n.with_action(ad.twisted_action.clone()).map_err(|e| broken("isomorphism", e.to_string()))?;
    let mut rec = Recorder::new(&twisted, "isomorphism/");
    let tw = alpha_data(&mut rec)?;
    rec.eq("q-alpha", "q^α = q", &tw.coinvariants.q, &ad.coinvariants.q)?;
    rec.eq_raw("idemp-1-2", "∇^α = ∇", &tw.nabla, &ad.nabla)?;
    rec.eq("alpha-alpha", "α^α = α", &tw.alpha, &ad.alpha)?;
    rec.eq("phi-square", "(φ^α)^α = φ^α", &tw.twisted_action, &ad.twisted_action)?;
    checks.append(&mut rec.entries);

    let mut rec = Recorder::new(&induced, "strong-hoof/");
    let ind = alpha_data(&mut rec)?;
    let c = LinMap::identity(h.field(), ad.coinvariants.coh_dim);
    rec.eq(
        "new-q",
        "q_× = p_⊗∘(C⊗Π^L)∘i_⊗",
        &ind.coinvariants.q,
        &(&ad.nabla_projection * c.tensor(h.pi_l()) * &ad.nabla_inclusion),
    )?;
    rec.eq("quasilineal-1", "φ_×^α = φ_×", &ind.twisted_action, &ad.induced_action)?;
    checks.append(&mut rec.entries);

    let mut rec = Recorder::new(n, "");
    rec.eq(
        "quasilineal",
        "φ_×^α∘(α⊗H) = α∘φ^α",
        &(&ind.twisted_action * ad.alpha.tensor(hid)),
        &(&ad.alpha * &ad.twisted_action),
    )?;
    if n.is_regular() {
        rec.eq("regular-twist", "φ_H^α = μ", &ad.twisted_action, h.mul())?;
    }
    checks.append(&mut rec.entries);

    Ok(FundamentalCertificate {
        nabla_rank: rank,
        coinvariants: ad.coinvariants,
        nabla: ad.nabla,
        nabla_inclusion: ad.nabla_inclusion,
        nabla_projection: ad.nabla_projection,
        alpha: ad.alpha,
        alpha_inv: ad.alpha_inv,
        induced,
        twisted_action: ad.twisted_action,
        checks,
    })
}
