//! Right-right Hopf modules over a weak Hopf quasigroup, their coinvariants
//! and the isomorphism `M ≅ M^coH × H`.
//!
//! Only the comodule laws are enforced when a module is built; the Hopf
//! module axioms are verdicts of [`check_hopf_module`].

mod certificate;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::axioms::{Entry, Group, Verdict};
use crate::linear::{inverse, LinMap, LinalgError};
use crate::structure::Whq;
use crate::tensor;

pub use certificate::{
    coinvariants, fundamental_certificate, CertificateFailure, CoinvariantData, FundamentalCertificate,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("module dimension must be positive")]
    ZeroDimension,
    #[error("{map} has shape {found_rows}x{found_cols}, expected {rows}x{cols}")]
    Shape { map: &'static str, rows: usize, cols: usize, found_rows: usize, found_cols: usize },
    #[error("module maps and H are defined over different fields")]
    FieldMismatch,
    #[error("not a comodule: {law} fails at basis vector {witness}")]
    NotComodule { law: &'static str, witness: usize },
    #[error("not a comodule isomorphism: {0}")]
    NotComoduleIso(String),
    #[error("modules over different weak Hopf quasigroups")]
    DifferentBase,
    #[error(transparent)]
    Certificate(#[from] Box<CertificateFailure>),
    #[error("{0}")]
    Linalg(#[from] LinalgError),
}

/// `(M, φ_M, ρ_M)` with `φ_M: M⊗H → M` and `ρ_M: M → M⊗H`.
#[derive(Clone, Debug)]
pub struct HopfModule {
    h: Arc<Whq>,
    dim: usize,
    action: LinMap,
    coaction: LinMap,
    labels: Option<Vec<String>>,
    regular: bool,
}

fn check_shape(map: &'static str, m: &LinMap, rows: usize, cols: usize) -> Result<(), ModuleError> {
    if m.codomain_dim() != rows || m.domain_dim() != cols {
        return Err(ModuleError::Shape { map, rows, cols, found_rows: m.codomain_dim(), found_cols: m.domain_dim() });
    }
    Ok(())
}

impl HopfModule {
    /// Checks shapes and the comodule laws `(M⊗ε)∘ρ = id` and `(ρ⊗H)∘ρ = (M⊗δ)∘ρ`.
    pub fn new(h: Arc<Whq>, action: LinMap, coaction: LinMap) -> Result<HopfModule, ModuleError> {
        let m = coaction.codomain_dim() / h.dim().max(1);
        if m == 0 {
            return Err(ModuleError::ZeroDimension);
        }
        let n = h.dim();
        check_shape("coaction", &coaction, m * n, m)?;
        check_shape("action", &action, m, m * n)?;
        if action.field() != h.field() || coaction.field() != h.field() {
            return Err(ModuleError::FieldMismatch);
        }
        let id_m = LinMap::identity(h.field(), m);
        if let Some(w) = (id_m.tensor(h.counit()) * &coaction).first_difference(&id_m)? {
            return Err(ModuleError::NotComodule { law: "(M⊗ε)∘ρ = id", witness: w });
        }
        let lhs = coaction.tensor(h.id()) * &coaction;
        let rhs = id_m.tensor(h.comul()) * &coaction;
        if let Some(w) = lhs.first_difference(&rhs)? {
            return Err(ModuleError::NotComodule { law: "(ρ⊗H)∘ρ = (M⊗δ)∘ρ", witness: w });
        }
        Ok(HopfModule { h, dim: m, action, coaction, labels: None, regular: false })
    }

    /// `(H, μ, δ)`
    pub fn regular(h: Arc<Whq>) -> HopfModule {
        let labels = (0..h.dim()).map(|i| h.label(i)).collect();
        let (action, coaction) = (h.mul().clone(), h.comul().clone());
        let mut m = HopfModule::new(h, action, coaction).expect("δ is a coassociative, counital coaction");
        m.labels = Some(labels);
        m.regular = true;
        m
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<HopfModule, ModuleError> {
        if labels.len() != self.dim {
            return Err(ModuleError::Shape {
                map: "labels",
                rows: self.dim,
                cols: 1,
                found_rows: labels.len(),
                found_cols: 1,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Same coaction, new action.
    pub fn with_action(&self, action: LinMap) -> Result<HopfModule, ModuleError> {
        let mut m = HopfModule::new(self.h.clone(), action, self.coaction.clone())?;
        m.labels = self.labels.clone();
        Ok(m)
    }

    pub fn base(&self) -> &Whq {
        &self.h
    }

    pub fn base_arc(&self) -> &Arc<Whq> {
        &self.h
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    /// Whether this is the regular module `(H, μ, δ)` as built by [`HopfModule::regular`].
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map_or_else(|| format!("m{i}"), |l| l[i].clone())
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.h.field(), self.dim)
    }

    /// Name of basis input `j` of `M ⊗ H^{⊗k}`.
    pub fn input_label(&self, domain_dim: usize, j: usize) -> String {
        let n = self.h.dim();
        let mut size = self.dim;
        let mut k = 0;
        while size < domain_dim {
            size *= n;
            k += 1;
        }
        if size != domain_dim {
            return j.to_string();
        }
        let mut parts = Vec::with_capacity(k + 1);
        let mut rest = j;
        for _ in 0..k {
            parts.push(self.h.label(rest % n));
            rest /= n;
        }
        parts.push(self.label(rest));
        parts.reverse();
        parts.join("⊗")
    }

    pub(crate) fn compare(&self, lhs: &LinMap, rhs: &LinMap) -> Verdict {
        match lhs.first_difference(rhs) {
            Ok(None) => Verdict::Pass,
            Ok(Some(j)) => Verdict::Fail { witness: j, input: self.input_label(lhs.domain_dim(), j) },
            Err(e) => Verdict::Broken { reason: e.to_string() },
        }
    }
}

/// Verdicts of a module-level check list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleReport {
    pub entries: Vec<Entry>,
}

impl ModuleReport {
    pub fn passes(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.holds())
    }

    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries.iter().find(|e| !e.verdict.holds())
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

fn entry(id: &str, anchor: &str, statement: &str, verdict: Verdict) -> Entry {
    Entry { id: id.into(), anchor: anchor.into(), group: Group::Module, statement: statement.into(), verdict }
}

/// The Hopf module axioms and the identities they imply.
pub fn check_hopf_module(n: &HopfModule) -> ModuleReport {
    let h = n.base();
    let (phi, rho, m) = (n.action(), n.coaction(), n.id());
    let hid = h.id();
    let mut out = Vec::new();
    let mut eq = |id: &str, anchor: &str, stmt: &str, l: LinMap, r: LinMap| {
        out.push(entry(id, anchor, stmt, n.compare(&l, &r)));
    };
    eq("c1.1", "c1", "(M⊗ε)∘ρ = id", m.tensor(h.counit()) * rho, m.clone());
    eq("c1.2", "c1", "(ρ⊗H)∘ρ = (M⊗δ)∘ρ", rho.tensor(hid) * rho, m.tensor(h.comul()) * rho);
    eq("c2-1", "c2-1", "φ∘(M⊗η) = id", phi * m.tensor(h.unit()), m.clone());
    eq(
        "c2-2",
        "c2-2",
        "ρ∘φ = (φ⊗μ)∘(M⊗c⊗H)∘(ρ⊗δ)",
        rho * phi,
        phi.tensor(h.mul()) * tensor![m, h.braiding(), hid] * rho.tensor(h.comul()),
    );
    eq(
        "c3",
        "c3",
        "φ∘(φ⊗λ)∘(M⊗δ) = φ∘(M⊗Π^L)",
        phi * phi.tensor(h.antipode()) * m.tensor(h.comul()),
        phi * m.tensor(h.pi_l()),
    );
    eq(
        "c4",
        "c4",
        "φ∘(φ⊗H)∘(M⊗λ⊗H)∘(M⊗δ) = φ∘(M⊗Π^R)",
        phi * phi.tensor(hid) * tensor![m, h.antipode(), hid] * m.tensor(h.comul()),
        phi * m.tensor(h.pi_r()),
    );
    let c5_lhs = phi * phi.tensor(hid) * tensor![m, h.pi_l(), hid] * m.tensor(h.comul());
    let new_c5_lhs = phi * phi.tensor(h.pi_r()) * m.tensor(h.comul());
    eq("c5", "c5", "φ∘(φ⊗H)∘(M⊗Π^L⊗H)∘(M⊗δ) = φ", c5_lhs.clone(), phi.clone());
    eq("new-c5", "c5", "φ∘(φ⊗Π^R)∘(M⊗δ) = φ", new_c5_lhs.clone(), phi.clone());
    eq("new-c5-1", "new-c5-1", "φ∘(φ⊗Π^R)∘(M⊗δ) = φ∘(φ⊗H)∘(M⊗Π^L⊗H)∘(M⊗δ)", new_c5_lhs, c5_lhs);
    eq("new-c2-2-1", "new-c2-2-1", "φ∘(M⊗Π^R)∘ρ = id", phi * m.tensor(h.pi_r()) * rho, m.clone());
    let m_de = m.tensor(h.delta_eta());
    eq(
        "new-c5-2",
        "new-c5-2",
        "φ∘(φ⊗H)∘(M⊗Π^L⊗H)∘(M⊗δη) = id",
        phi * phi.tensor(hid) * tensor![m, h.pi_l(), hid] * &m_de,
        m.clone(),
    );
    eq("new-c5-3", "new-c5-3", "φ∘(φ⊗Π^R)∘(M⊗δη) = id", phi * phi.tensor(h.pi_r()) * &m_de, m.clone());
    ModuleReport { entries: out }
}

fn same_base(a: &HopfModule, b: &HopfModule) -> Result<(), ModuleError> {
    if Arc::ptr_eq(&a.h, &b.h) || a.h == b.h {
        Ok(())
    } else {
        Err(ModuleError::DifferentBase)
    }
}

/// `(M, g⁻¹∘φ_N∘(g⊗H), ρ_M)` for a comodule isomorphism `g: M → N`.
pub fn twisted_module(m: &HopfModule, n: &HopfModule, g: &LinMap) -> Result<HopfModule, ModuleError> {
    same_base(m, n)?;
    check_shape("g", g, n.dim(), m.dim())?;
    let g_inv = inverse(g).map_err(|_| ModuleError::NotComoduleIso("g is not invertible".into()))?;
    let h = m.base();
    if let Some(w) = (n.coaction() * g).first_difference(&(g.tensor(h.id()) * m.coaction()))? {
        return Err(ModuleError::NotComoduleIso(format!("ρ_N∘g ≠ (g⊗H)∘ρ_M at basis vector {}", m.label(w))));
    }
    m.with_action(&g_inv * n.action() * g.tensor(h.id()))
}

/// Whether `φ_N^α∘(f⊗H) = f∘φ_M^α`, with the twisted actions of both certificates.
pub fn is_quasilinear(f: &LinMap, m: &HopfModule, n: &HopfModule) -> Result<Verdict, ModuleError> {
    same_base(m, n)?;
    check_shape("f", f, n.dim(), m.dim())?;
    let cm = fundamental_certificate(m).map_err(Box::new)?;
    let cn = fundamental_certificate(n).map_err(Box::new)?;
    let lhs = &cn.twisted_action * f.tensor(m.base().id());
    let rhs = f * &cm.twisted_action;
    Ok(m.compare(&lhs, &rhs))
}
