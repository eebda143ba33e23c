//! The identity catalog: the defining axioms followed by the identities
//! derived from them, each frozen as an explicit composition pipeline.
//!
//! Notation in the statements: `H` is `id_H`, `c` the braiding, `c⁻¹` its
//! inverse, `εμ = ε∘μ`, `δη = δ∘η`, `Π̄` the barred idempotents.

use crate::linear::LinMap;
use crate::structure::Whq;
use crate::tensor;

pub(crate) type Sides = fn(&Whq) -> (LinMap, LinMap);
pub(crate) type Law = fn(&Whq) -> Result<(), String>;

#[derive(Clone, Copy)]
pub(crate) enum Check {
    Equation(Sides),
    Law(Law),
}

/// One catalog entry. `anchor` groups entries that split a chained equality.
#[derive(Clone, Copy)]
pub struct Identity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub statement: &'static str,
    pub(crate) check: Check,
}

macro_rules! eq {
    ($id:expr, $anchor:expr, $stmt:expr, $f:expr) => {
        Identity { id: $id, anchor: $anchor, statement: $stmt, check: Check::Equation($f) }
    };
}

macro_rules! law {
    ($id:expr, $anchor:expr, $stmt:expr, $f:expr) => {
        Identity { id: $id, anchor: $anchor, statement: $stmt, check: Check::Law($f) }
    };
}

fn conv(h: &Whq, f: &LinMap, g: &LinMap) -> LinMap {
    h.convolution(f, g).expect("endomorphisms of H")
}

fn t(a: &LinMap, b: &LinMap) -> LinMap {
    a.tensor(b)
}

/// The defining axioms, with chained equalities split against their first composite.
pub static AXIOMS: &[Identity] = &[
    eq!("a1", "a1", "δ∘μ = (μ⊗μ)∘δ_{H⊗H}", |h| {
        (h.comul() * h.mul(), t(h.mul(), h.mul()) * h.comul_tensor())
    }),
    eq!("a2.1", "a2", "εμ∘(μ⊗H) = εμ∘(H⊗μ)", |h| {
        (h.eps_mu() * t(h.mul(), h.id()), h.eps_mu() * t(h.id(), h.mul()))
    }),
    eq!("a2.2", "a2", "εμ∘(μ⊗H) = (εμ⊗εμ)∘(H⊗δ⊗H)", |h| {
        (h.eps_mu() * t(h.mul(), h.id()), t(h.eps_mu(), h.eps_mu()) * tensor![h.id(), h.comul(), h.id()])
    }),
    eq!("a2.3", "a2", "εμ∘(μ⊗H) = (εμ⊗εμ)∘(H⊗(c⁻¹∘δ)⊗H)", |h| {
        (
            h.eps_mu() * t(h.mul(), h.id()),
            t(h.eps_mu(), h.eps_mu()) * tensor![h.id(), h.braiding_inv() * h.comul(), h.id()],
        )
    }),
    eq!("a3.1", "a3", "(δ⊗H)∘δη = (H⊗μ⊗H)∘(δη⊗δη)", |h| {
        (t(h.comul(), h.id()) * h.delta_eta(), tensor![h.id(), h.mul(), h.id()] * t(h.delta_eta(), h.delta_eta()))
    }),
    eq!("a3.2", "a3", "(δ⊗H)∘δη = (H⊗(μ∘c⁻¹)⊗H)∘(δη⊗δη)", |h| {
        (
            t(h.comul(), h.id()) * h.delta_eta(),
            tensor![h.id(), h.mul() * h.braiding_inv(), h.id()] * t(h.delta_eta(), h.delta_eta()),
        )
    }),
    eq!("a4-1", "a4-1", "id∗λ = (εμ⊗H)∘(H⊗c)∘(δη⊗H)", |h| (h.pi_l().clone(), h.pi_l_closed().clone())),
    eq!("a4-2", "a4-2", "λ∗id = (H⊗εμ)∘(c⊗H)∘(H⊗δη)", |h| (h.pi_r().clone(), h.pi_r_closed().clone())),
    eq!("a4-3.1", "a4-3", "λ∗Π^L = λ", |h| (conv(h, h.antipode(), h.pi_l()), h.antipode().clone())),
    eq!("a4-3.2", "a4-3", "Π^R∗λ = λ", |h| (conv(h, h.pi_r(), h.antipode()), h.antipode().clone())),
    eq!("a4-4", "a4-4", "μ∘(λ⊗μ)∘(δ⊗H) = μ∘(Π^R⊗H)", |h| {
        (h.mul() * t(h.antipode(), h.mul()) * t(h.comul(), h.id()), h.mul() * t(h.pi_r(), h.id()))
    }),
    eq!("a4-5", "a4-5", "μ∘(H⊗μ)∘(H⊗λ⊗H)∘(δ⊗H) = μ∘(Π^L⊗H)", |h| {
        (
            h.mul() * t(h.id(), h.mul()) * tensor![h.id(), h.antipode(), h.id()] * t(h.comul(), h.id()),
            h.mul() * t(h.pi_l(), h.id()),
        )
    }),
    eq!("a4-6", "a4-6", "μ∘(μ⊗λ)∘(H⊗δ) = μ∘(H⊗Π^L)", |h| {
        (h.mul() * t(h.mul(), h.antipode()) * t(h.id(), h.comul()), h.mul() * t(h.id(), h.pi_l()))
    }),
    eq!("a4-7", "a4-7", "μ∘(μ⊗H)∘(H⊗λ⊗H)∘(H⊗δ) = μ∘(H⊗Π^R)", |h| {
        (
            h.mul() * t(h.mul(), h.id()) * tensor![h.id(), h.antipode(), h.id()] * t(h.id(), h.comul()),
            h.mul() * t(h.id(), h.pi_r()),
        )
    }),
];

/// Identities that hold in every weak Hopf quasigroup.
pub static DERIVED: &[Identity] = &[
    eq!("new-pi-1.1", "new-pi-1", "Π^L = ((εμ∘c⁻¹)⊗H)∘(H⊗δη)", |h| {
        (h.pi_l().clone(), t(&(h.eps_mu() * h.braiding_inv()), h.id()) * t(h.id(), h.delta_eta()))
    }),
    eq!("new-pi-1.2", "new-pi-1", "Π^L = (H⊗εμ)∘((c⁻¹∘δη)⊗H)", |h| {
        (h.pi_l().clone(), t(h.id(), h.eps_mu()) * t(&(h.braiding_inv() * h.delta_eta()), h.id()))
    }),
    eq!("new-pi-2.1", "new-pi-2", "Π^R = (H⊗(εμ∘c⁻¹))∘(δη⊗H)", |h| {
        (h.pi_r().clone(), t(h.id(), &(h.eps_mu() * h.braiding_inv())) * t(h.delta_eta(), h.id()))
    }),
    eq!("new-pi-2.2", "new-pi-2", "Π^R = (εμ⊗H)∘(H⊗(c⁻¹∘δη))", |h| {
        (h.pi_r().clone(), t(h.eps_mu(), h.id()) * t(h.id(), &(h.braiding_inv() * h.delta_eta())))
    }),
    eq!("pi-l.1", "pi-l", "Π^L∗H = H", |h| (conv(h, h.pi_l(), h.id()), h.id().clone())),
    eq!("pi-l.2", "pi-l", "H∗Π^R = H", |h| (conv(h, h.id(), h.pi_r()), h.id().clone())),
    eq!("pi-eta.1", "pi-eta", "Π^L∘η = η", |h| (h.pi_l() * h.unit(), h.unit().clone())),
    eq!("pi-eta.2", "pi-eta", "Π^R∘η = η", |h| (h.pi_r() * h.unit(), h.unit().clone())),
    eq!("pi-varep.1", "pi-varep", "ε∘Π^L = ε", |h| (h.counit() * h.pi_l(), h.counit().clone())),
    eq!("pi-varep.2", "pi-varep", "ε∘Π^R = ε", |h| (h.counit() * h.pi_r(), h.counit().clone())),
    eq!("antipode-1.1", "antipode-1", "λ∘η = η", |h| (h.antipode() * h.unit(), h.unit().clone())),
    eq!("antipode-1.2", "antipode-1", "ε∘λ = ε", |h| (h.counit() * h.antipode(), h.counit().clone())),
    eq!("idemp.1", "idemp", "Π^L∘Π^L = Π^L", |h| (h.pi_l() * h.pi_l(), h.pi_l().clone())),
    eq!("idemp.2", "idemp", "Π^R∘Π^R = Π^R", |h| (h.pi_r() * h.pi_r(), h.pi_r().clone())),
    eq!("idemp.3", "idemp", "Π̄^L∘Π̄^L = Π̄^L", |h| (h.pi_bar_l() * h.pi_bar_l(), h.pi_bar_l().clone())),
    eq!("idemp.4", "idemp", "Π̄^R∘Π̄^R = Π̄^R", |h| (h.pi_bar_r() * h.pi_bar_r(), h.pi_bar_r().clone())),
    eq!("mu-pi-l", "mu-pi-l", "μ∘(H⊗Π^L) = (εμ⊗H)∘(H⊗c)∘(δ⊗H)", |h| {
        (h.mul() * t(h.id(), h.pi_l()), t(h.eps_mu(), h.id()) * t(h.id(), h.braiding()) * t(h.comul(), h.id()))
    }),
    eq!("mu-pi-r", "mu-pi-r", "μ∘(Π^R⊗H) = (H⊗εμ)∘(c⊗H)∘(H⊗δ)", |h| {
        (h.mul() * t(h.pi_r(), h.id()), t(h.id(), h.eps_mu()) * t(h.braiding(), h.id()) * t(h.id(), h.comul()))
    }),
    eq!("mu-pi-l-var", "mu-pi-l-var", "μ∘(H⊗Π̄^L) = (H⊗εμ)∘(δ⊗H)", |h| {
        (h.mul() * t(h.id(), h.pi_bar_l()), t(h.id(), h.eps_mu()) * t(h.comul(), h.id()))
    }),
    eq!("mu-pi-r-var", "mu-pi-r-var", "μ∘(Π̄^R⊗H) = (εμ⊗H)∘(H⊗δ)", |h| {
        (h.mul() * t(h.pi_bar_r(), h.id()), t(h.eps_mu(), h.id()) * t(h.id(), h.comul()))
    }),
    eq!("mu-pi-l-varep", "mu-pi-l-varep", "εμ∘(H⊗Π^L) = εμ", |h| {
        (h.eps_mu() * t(h.id(), h.pi_l()), h.eps_mu().clone())
    }),
    eq!("mu-pi-r-varep", "mu-pi-r-varep", "εμ∘(Π^R⊗H) = εμ", |h| {
        (h.eps_mu() * t(h.pi_r(), h.id()), h.eps_mu().clone())
    }),
    eq!("mu-pi-l-var-varep", "mu-pi-l-var-varep", "εμ∘(H⊗Π̄^L) = εμ", |h| {
        (h.eps_mu() * t(h.id(), h.pi_bar_l()), h.eps_mu().clone())
    }),
    eq!("mu-pi-r-var-varep", "mu-pi-r-var-varep", "εμ∘(Π̄^R⊗H) = εμ", |h| {
        (h.eps_mu() * t(h.pi_bar_r(), h.id()), h.eps_mu().clone())
    }),
    eq!("delta-pi-l", "delta-pi-l", "(H⊗Π^L)∘δ = (μ⊗H)∘(H⊗c)∘(δη⊗H)", |h| {
        (t(h.id(), h.pi_l()) * h.comul(), t(h.mul(), h.id()) * t(h.id(), h.braiding()) * t(h.delta_eta(), h.id()))
    }),
    eq!("delta-pi-r", "delta-pi-r", "(Π^R⊗H)∘δ = (H⊗μ)∘(c⊗H)∘(H⊗δη)", |h| {
        (t(h.pi_r(), h.id()) * h.comul(), t(h.id(), h.mul()) * t(h.braiding(), h.id()) * t(h.id(), h.delta_eta()))
    }),
    eq!("delta-pi-l-var", "delta-pi-l-var", "(Π̄^L⊗H)∘δ = (H⊗μ)∘(δη⊗H)", |h| {
        (t(h.pi_bar_l(), h.id()) * h.comul(), t(h.id(), h.mul()) * t(h.delta_eta(), h.id()))
    }),
    eq!("delta-pi-r-var", "delta-pi-r-var", "(H⊗Π̄^R)∘δ = (μ⊗H)∘(H⊗δη)", |h| {
        (t(h.id(), h.pi_bar_r()) * h.comul(), t(h.mul(), h.id()) * t(h.id(), h.delta_eta()))
    }),
    eq!("aux-1", "aux-1", "(μ⊗H)∘(H⊗c)∘(δη⊗H) = ((μ∘c⁻¹)⊗H)∘(H⊗δη)", |h| {
        (
            t(h.mul(), h.id()) * t(h.id(), h.braiding()) * t(h.delta_eta(), h.id()),
            t(&(h.mul() * h.braiding_inv()), h.id()) * t(h.id(), h.delta_eta()),
        )
    }),
    eq!("aux-2", "aux-2", "(H⊗μ)∘(c⊗H)∘(H⊗δη) = (H⊗(μ∘c⁻¹))∘(δη⊗H)", |h| {
        (
            t(h.id(), h.mul()) * t(h.braiding(), h.id()) * t(h.id(), h.delta_eta()),
            t(h.id(), &(h.mul() * h.braiding_inv())) * t(h.delta_eta(), h.id()),
        )
    }),
    eq!("delta-pi-l-eta", "delta-pi-l-eta", "(H⊗Π^L)∘δη = δη", |h| {
        (t(h.id(), h.pi_l()) * h.delta_eta(), h.delta_eta().clone())
    }),
    eq!("delta-pi-r-eta", "delta-pi-r-eta", "(Π^R⊗H)∘δη = δη", |h| {
        (t(h.pi_r(), h.id()) * h.delta_eta(), h.delta_eta().clone())
    }),
    eq!("delta-pi-l-var-eta", "delta-pi-l-var-eta", "(Π̄^L⊗H)∘δη = δη", |h| {
        (t(h.pi_bar_l(), h.id()) * h.delta_eta(), h.delta_eta().clone())
    }),
    eq!("delta-pi-r-var-eta", "delta-pi-r-var-eta", "(H⊗Π̄^R)∘δη = δη", |h| {
        (t(h.id(), h.pi_bar_r()) * h.delta_eta(), h.delta_eta().clone())
    }),
    eq!("pi-delta-mu-pi-1", "pi-delta-mu-pi-1", "Π^L∘μ∘(H⊗Π^L) = Π^L∘μ", |h| {
        (h.pi_l() * h.mul() * t(h.id(), h.pi_l()), h.pi_l() * h.mul())
    }),
    eq!("pi-delta-mu-pi-2", "pi-delta-mu-pi-2", "Π^R∘μ∘(Π^R⊗H) = Π^R∘μ", |h| {
        (h.pi_r() * h.mul() * t(h.pi_r(), h.id()), h.pi_r() * h.mul())
    }),
    eq!("pi-delta-mu-pi-3", "pi-delta-mu-pi-3", "(H⊗Π^L)∘δ∘Π^L = δ∘Π^L", |h| {
        (t(h.id(), h.pi_l()) * h.comul() * h.pi_l(), h.comul() * h.pi_l())
    }),
    eq!("pi-delta-mu-pi-4", "pi-delta-mu-pi-4", "(Π^R⊗H)∘δ∘Π^R = δ∘Π^R", |h| {
        (t(h.pi_r(), h.id()) * h.comul() * h.pi_r(), h.comul() * h.pi_r())
    }),
    eq!("pi-delta-mu-pi-1-var", "pi-delta-mu-pi-1-var", "Π̄^L∘μ∘(H⊗Π^L) = Π̄^L∘μ", |h| {
        (h.pi_bar_l() * h.mul() * t(h.id(), h.pi_l()), h.pi_bar_l() * h.mul())
    }),
    eq!("pi-delta-mu-pi-2-var", "pi-delta-mu-pi-2-var", "Π̄^R∘μ∘(Π^R⊗H) = Π̄^R∘μ", |h| {
        (h.pi_bar_r() * h.mul() * t(h.pi_r(), h.id()), h.pi_bar_r() * h.mul())
    }),
    eq!("pi-delta-mu-pi-3-var", "pi-delta-mu-pi-3-var", "(Π^R⊗H)∘δ∘Π̄^L = δ∘Π̄^L", |h| {
        (t(h.pi_r(), h.id()) * h.comul() * h.pi_bar_l(), h.comul() * h.pi_bar_l())
    }),
    eq!("pi-delta-mu-pi-4-var", "pi-delta-mu-pi-4-var", "(H⊗Π^L)∘δ∘Π̄^R = δ∘Π̄^R", |h| {
        (t(h.id(), h.pi_l()) * h.comul() * h.pi_bar_r(), h.comul() * h.pi_bar_r())
    }),
    eq!("pi-composition-1.1", "pi-composition-1", "Π^L∘Π̄^L = Π^L", |h| {
        (h.pi_l() * h.pi_bar_l(), h.pi_l().clone())
    }),
    eq!("pi-composition-1.2", "pi-composition-1", "Π^L∘Π̄^R = Π̄^R", |h| {
        (h.pi_l() * h.pi_bar_r(), h.pi_bar_r().clone())
    }),
    eq!("pi-composition-2.1", "pi-composition-2", "Π̄^L∘Π^L = Π̄^L", |h| {
        (h.pi_bar_l() * h.pi_l(), h.pi_bar_l().clone())
    }),
    eq!("pi-composition-2.2", "pi-composition-2", "Π̄^R∘Π^L = Π^L", |h| {
        (h.pi_bar_r() * h.pi_l(), h.pi_l().clone())
    }),
    eq!("pi-composition-3.1", "pi-composition-3", "Π^R∘Π̄^L = Π̄^L", |h| {
        (h.pi_r() * h.pi_bar_l(), h.pi_bar_l().clone())
    }),
    eq!("pi-composition-3.2", "pi-composition-3", "Π^R∘Π̄^R = Π^R", |h| {
        (h.pi_r() * h.pi_bar_r(), h.pi_r().clone())
    }),
    eq!("pi-composition-4.1", "pi-composition-4", "Π̄^L∘Π^R = Π^R", |h| {
        (h.pi_bar_l() * h.pi_r(), h.pi_r().clone())
    }),
    eq!("pi-composition-4.2", "pi-composition-4", "Π̄^R∘Π^R = Π̄^R", |h| {
        (h.pi_bar_r() * h.pi_r(), h.pi_bar_r().clone())
    }),
    eq!("pi-antipode-composition-1.1", "pi-antipode-composition-1", "Π^L∘λ = Π^L∘Π^R", |h| {
        (h.pi_l() * h.antipode(), h.pi_l() * h.pi_r())
    }),
    eq!("pi-antipode-composition-1.2", "pi-antipode-composition-1", "Π^L∘λ = λ∘Π^R", |h| {
        (h.pi_l() * h.antipode(), h.antipode() * h.pi_r())
    }),
    eq!("pi-antipode-composition-2.1", "pi-antipode-composition-2", "Π^R∘λ = Π^R∘Π^L", |h| {
        (h.pi_r() * h.antipode(), h.pi_r() * h.pi_l())
    }),
    eq!("pi-antipode-composition-2.2", "pi-antipode-composition-2", "Π^R∘λ = λ∘Π^L", |h| {
        (h.pi_r() * h.antipode(), h.antipode() * h.pi_l())
    }),
    eq!("pi-antipode-composition-3.1", "pi-antipode-composition-3", "Π^L = Π̄^R∘λ", |h| {
        (h.pi_l().clone(), h.pi_bar_r() * h.antipode())
    }),
    eq!("pi-antipode-composition-3.2", "pi-antipode-composition-3", "Π^L = λ∘Π̄^L", |h| {
        (h.pi_l().clone(), h.antipode() * h.pi_bar_l())
    }),
    eq!("pi-antipode-composition-4.1", "pi-antipode-composition-4", "Π^R = Π̄^L∘λ", |h| {
        (h.pi_r().clone(), h.pi_bar_l() * h.antipode())
    }),
    eq!("pi-antipode-composition-4.2", "pi-antipode-composition-4", "Π^R = λ∘Π̄^R", |h| {
        (h.pi_r().clone(), h.antipode() * h.pi_bar_r())
    }),
    law!(
        "magma-comonad",
        "magma-comonad",
        "H_L = Im Π^L splits as an equalizer of δ and a coequalizer of μ, with induced unital magma and comonoid",
        |h| h.subobject_l().map(|_| ()).map_err(|e| e.to_string())
    ),
    law!(
        "more",
        "more",
        "H_R = Im Π^R splits as an equalizer of δ and a coequalizer of μ, with induced unital magma and comonoid",
        |h| h.subobject_r().map(|_| ()).map_err(|e| e.to_string())
    ),
    eq!("mu-assoc-1.1", "mu-assoc-1", "μ∘(μ⊗H)∘(H⊗((Π^L⊗H)∘δ)) = μ", |h| {
        (h.mul() * t(h.mul(), h.id()) * t(h.id(), &(t(h.pi_l(), h.id()) * h.comul())), h.mul().clone())
    }),
    eq!("mu-assoc-1.2", "mu-assoc-1", "μ∘(μ⊗Π^R)∘(H⊗δ) = μ", |h| {
        (h.mul() * t(h.mul(), h.pi_r()) * t(h.id(), h.comul()), h.mul().clone())
    }),
    eq!("mu-assoc-2.1", "mu-assoc-2", "μ∘(Π^L⊗μ)∘(δ⊗H) = μ", |h| {
        (h.mul() * t(h.pi_l(), h.mul()) * t(h.comul(), h.id()), h.mul().clone())
    }),
    eq!("mu-assoc-2.2", "mu-assoc-2", "μ∘(H⊗(μ∘(Π^R⊗H)))∘(δ⊗H) = μ", |h| {
        (h.mul() * t(h.id(), &(h.mul() * t(h.pi_r(), h.id()))) * t(h.comul(), h.id()), h.mul().clone())
    }),
    eq!("mu-assoc-3.1", "mu-assoc-3", "μ∘(λ⊗(μ∘(Π^L⊗H)))∘(δ⊗H) = μ∘(λ⊗H)", |h| {
        (
            h.mul() * t(h.antipode(), &(h.mul() * t(h.pi_l(), h.id()))) * t(h.comul(), h.id()),
            h.mul() * t(h.antipode(), h.id()),
        )
    }),
    eq!("mu-assoc-3.2", "mu-assoc-3", "μ∘(Π^R⊗(μ∘(λ⊗H)))∘(δ⊗H) = μ∘(λ⊗H)", |h| {
        (
            h.mul() * t(h.pi_r(), &(h.mul() * t(h.antipode(), h.id()))) * t(h.comul(), h.id()),
            h.mul() * t(h.antipode(), h.id()),
        )
    }),
    eq!("mu-assoc-4.1", "mu-assoc-4", "μ∘(μ⊗H)∘(H⊗((λ⊗Π^L)∘δ)) = μ∘(H⊗λ)", |h| {
        (
            h.mul() * t(h.mul(), h.id()) * t(h.id(), &(t(h.antipode(), h.pi_l()) * h.comul())),
            h.mul() * t(h.id(), h.antipode()),
        )
    }),
    eq!("mu-assoc-4.2", "mu-assoc-4", "μ∘(μ⊗H)∘(H⊗((Π^R⊗λ)∘δ)) = μ∘(H⊗λ)", |h| {
        (
            h.mul() * t(h.mul(), h.id()) * t(h.id(), &(t(h.pi_r(), h.antipode()) * h.comul())),
            h.mul() * t(h.id(), h.antipode()),
        )
    }),
    eq!(
        "2-mu-delta-pi-l",
        "2-mu-delta-pi-l",
        "(μ⊗(μ∘(H⊗Π^L)))∘δ_{H⊗H} = (μ⊗H)∘(H⊗c)∘(δ⊗H)",
        |h| {
            (
                t(h.mul(), &(h.mul() * t(h.id(), h.pi_l()))) * h.comul_tensor(),
                t(h.mul(), h.id()) * t(h.id(), h.braiding()) * t(h.comul(), h.id()),
            )
        }
    ),
    eq!(
        "2-mu-delta-pi-r",
        "2-mu-delta-pi-r",
        "((μ∘(Π^R⊗H))⊗μ)∘δ_{H⊗H} = (H⊗μ)∘(c⊗H)∘(H⊗δ)",
        |h| {
            (
                t(&(h.mul() * t(h.pi_r(), h.id())), h.mul()) * h.comul_tensor(),
                t(h.id(), h.mul()) * t(h.braiding(), h.id()) * t(h.id(), h.comul()),
            )
        }
    ),
    eq!("mu-assoc-5.1", "mu-assoc-5", "Π^L∗H = H", |h| (conv(h, h.pi_l(), h.id()), h.id().clone())),
    eq!("mu-assoc-5.2", "mu-assoc-5", "H = H∗Π^R", |h| (h.id().clone(), conv(h, h.id(), h.pi_r()))),
    eq!("mu-delta-anti-1", "mu-delta-anti-1", "μ∘(Π^L⊗Π^R) = μ∘c⁻¹∘(Π^L⊗Π^R)", |h| {
        let p = t(h.pi_l(), h.pi_r());
        (h.mul() * &p, h.mul() * h.braiding_inv() * &p)
    }),
    eq!("mu-delta-anti-2", "mu-delta-anti-2", "(Π^L⊗Π^R)∘δ = (Π^L⊗Π^R)∘c⁻¹∘δ", |h| {
        let p = t(h.pi_l(), h.pi_r());
        (&p * h.comul(), &p * h.braiding_inv() * h.comul())
    }),
    eq!("mu-delta-anti-3", "mu-delta-anti-3", "μ∘(Π^R⊗Π^L) = μ∘c∘(Π^R⊗Π^L)", |h| {
        let p = t(h.pi_r(), h.pi_l());
        (h.mul() * &p, h.mul() * h.braiding() * &p)
    }),
    eq!("mu-delta-anti-4", "mu-delta-anti-4", "(Π^R⊗Π^L)∘δ = (Π^R⊗Π^L)∘c∘δ", |h| {
        let p = t(h.pi_r(), h.pi_l());
        (&p * h.comul(), &p * h.braiding() * h.comul())
    }),
    eq!("anti-antipode-1", "anti-antipode-1", "λ∘μ = μ∘c∘(λ⊗λ)", |h| {
        (h.antipode() * h.mul(), h.mul() * h.braiding() * t(h.antipode(), h.antipode()))
    }),
    eq!("anti-antipode-2", "anti-antipode-2", "δ∘λ = (λ⊗λ)∘c∘δ", |h| {
        (h.comul() * h.antipode(), t(h.antipode(), h.antipode()) * h.braiding() * h.comul())
    }),
];
