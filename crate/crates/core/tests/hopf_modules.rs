use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use whq::axioms::Verdict;
use whq::constructors::{cyclic_group, GroupoidPresentation};
use whq::corpus::corpus;
use whq::hopf_module::{
    check_hopf_module, coinvariants, fundamental_certificate, is_quasilinear, twisted_module, HopfModule,
};
use whq::linear::{rank, Field, LinMap};
use whq::structure::Whq;

const REQUIRED: &[&str] = &[
    "idemp-1",
    "idempotent",
    "idempotent-equalizer",
    "idem-2",
    "tensor-idempotent",
    "tensor-idempotent-1",
    "tensor-idempotent-2",
    "tensor-idempotent-3",
    "Th-mod.1",
    "Th-mod.2",
    "Th-mod.3",
    "Th-mod.4",
    "isomorphism/q-alpha",
    "isomorphism/idemp-1-2",
    "isomorphism/alpha-alpha",
    "isomorphism/phi-square",
    "quasilineal",
    "regular-twist",
];

#[test]
fn regular_modules_of_the_corpus_are_certified() {
    for ex in corpus() {
        let h = Arc::new(ex.whq);
        let objects = ex.presentation.table().objects().len();
        let m = HopfModule::regular(h.clone());
        let cert = fundamental_certificate(&m).unwrap_or_else(|e| panic!("{}: {e}", ex.name));
        for id in REQUIRED {
            let e = cert.checks.iter().find(|e| e.id == *id).unwrap_or_else(|| panic!("{}: no {id}", ex.name));
            assert_eq!(e.verdict, Verdict::Pass, "{}: {id}", ex.name);
        }
        assert!(cert.checks.iter().all(|e| e.verdict.holds()));
        // q = Π^L on H, so the coinvariants are H_L, one dimension per object
        assert_eq!(&cert.coinvariants.q, h.pi_l(), "{}", ex.name);
        assert_eq!(cert.coinvariants.coh_dim, objects, "{}", ex.name);
        assert_eq!(cert.nabla_rank, h.dim(), "{}", ex.name);
        assert_eq!(rank(&cert.nabla), cert.nabla_rank);
        assert!((&cert.alpha * &cert.alpha_inv).is_identity());
    }
}

#[test]
fn small_coinvariant_dimensions() {
    let z2 = Arc::new(cyclic_group(2, Field::Rationals).unwrap());
    let c = coinvariants(&HopfModule::regular(z2)).unwrap();
    assert_eq!(c.coh_dim, 1);
    let pair = Arc::new(GroupoidPresentation::pair(2).unwrap().build(Field::Rationals).unwrap());
    let c = fundamental_certificate(&HopfModule::regular(pair)).unwrap();
    assert_eq!(c.coinvariants.coh_dim, 2);
    assert_eq!(c.nabla_rank, 4);
}

/// `H ⊕ H` with the regular structure on each summand.
fn doubled_regular(h: &Arc<Whq>) -> HopfModule {
    let n = h.dim();
    let f = h.field();
    let mut action = Vec::new();
    let mut coaction = Vec::new();
    for i in 0..2 {
        for a in 0..n {
            for b in 0..n {
                for (r, v) in h.mul().column(a * n + b) {
                    action.push((i * n + r, (i * n + a) * n + b, v.clone()));
                }
            }
            for (r, v) in h.comul().column(a) {
                // (x⊗y) in H⊗H becomes (i·n + x)⊗y in M⊗H
                let (x, y) = (r / n, r % n);
                coaction.push(((i * n + x) * n + y, i * n + a, v.clone()));
            }
        }
    }
    let action = LinMap::from_triples(f, 2 * n, 2 * n * n, action).unwrap();
    let coaction = LinMap::from_triples(f, 2 * n * n, 2 * n, coaction).unwrap();
    HopfModule::new(h.clone(), action, coaction).unwrap()
}

#[test]
fn direct_sum_doubles_the_coinvariants() {
    for ex in corpus().into_iter().filter(|e| e.whq.dim() <= 8) {
        let h = Arc::new(ex.whq);
        let single = fundamental_certificate(&HopfModule::regular(h.clone())).unwrap();
        let m = doubled_regular(&h);
        assert!(check_hopf_module(&m).passes(), "{}", ex.name);
        let double = fundamental_certificate(&m).unwrap_or_else(|e| panic!("{}: {e}", ex.name));
        assert_eq!(double.coinvariants.coh_dim, 2 * single.coinvariants.coh_dim, "{}", ex.name);
        assert_eq!(double.nabla_rank, 2 * h.dim());
    }
}

#[test]
fn scalar_twist_leaves_the_action_alone() {
    for ex in corpus().into_iter().filter(|e| e.whq.dim() <= 8) {
        let h = Arc::new(ex.whq);
        let m = HopfModule::regular(h.clone());
        let two = LinMap::identity(h.field(), h.dim()).scale(&h.field().from_i64(2));
        let t = twisted_module(&m, &m, &two).unwrap();
        assert_eq!(t.action(), m.action(), "{}", ex.name);
        assert_eq!(is_quasilinear(&two, &m, &m).unwrap(), Verdict::Pass);
    }
}

#[test]
fn random_map_is_not_quasilinear() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let h = Arc::new(GroupoidPresentation::pair(2).unwrap().build(Field::Rationals).unwrap());
    let m = HopfModule::regular(h.clone());
    let rows: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-5..=5)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let f = LinMap::from_int_rows(Field::Rationals, &refs);
    assert!(matches!(is_quasilinear(&f, &m, &m).unwrap(), Verdict::Fail { .. }));
    assert_eq!(is_quasilinear(&m.id(), &m, &m).unwrap(), Verdict::Pass);
}

#[test]
fn non_comodule_map_cannot_twist() {
    let h = Arc::new(cyclic_group(3, Field::Rationals).unwrap());
    let m = HopfModule::regular(h.clone());
    // the cyclic shift e ↦ g1 ↦ g2 does not commute with δ
    let shift = LinMap::from_basis_map(Field::Rationals, 3, &[1, 2, 0]).unwrap();
    assert!(twisted_module(&m, &m, &shift).is_err());
}

#[test]
fn corrupted_action_fails_the_module_axioms() {
    let h = Arc::new(cyclic_group(3, Field::Rationals).unwrap());
    // φ∘(M⊗λ)
    let action = h.mul() * LinMap::identity(h.field(), 3).tensor(h.antipode());
    let m = HopfModule::new(h.clone(), action, h.comul().clone()).unwrap();
    let r = check_hopf_module(&m);
    assert_eq!(r.first_failure().unwrap().id, "c2-2");
    assert!(r.entry("c2-1").unwrap().verdict.holds());
    let err = fundamental_certificate(&m).unwrap_err();
    assert_eq!(err.equation, "c2-2");
}
