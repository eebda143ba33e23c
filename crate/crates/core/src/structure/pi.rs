//! Convolution and the target/source morphisms.

use super::{StructureError, Whq};
use crate::linear::{LinMap, LinalgError};

impl Whq {
    /// `f ∗ g = μ∘(f⊗g)∘δ` for endomorphisms of `H`.
    pub fn convolution(&self, f: &LinMap, g: &LinMap) -> Result<LinMap, StructureError> {
        for m in [f, g] {
            if m.codomain_dim() != self.dim || m.domain_dim() != self.dim {
                return Err(LinalgError::DimensionMismatch {
                    op: "convolution",
                    expected: self.dim,
                    found: if m.codomain_dim() != self.dim { m.codomain_dim() } else { m.domain_dim() },
                }
                .into());
            }
        }
        Ok(&(&self.mul * &f.tensor(g)) * &self.comul)
    }

    fn conv(&self, f: &LinMap, g: &LinMap) -> LinMap {
        self.convolution(f, g).expect("endomorphisms of H")
    }

    /// Target morphism `Π^L = id ∗ λ`.
    pub fn pi_l(&self) -> &LinMap {
        self.derived.pi_l.get_or_init(|| self.conv(self.id(), &self.antipode))
    }

    /// Source morphism `Π^R = λ ∗ id`.
    pub fn pi_r(&self) -> &LinMap {
        self.derived.pi_r.get_or_init(|| self.conv(&self.antipode, self.id()))
    }

    /// `((ε∘μ)⊗H)∘(H⊗c)∘((δ∘η)⊗H)`, which a weak Hopf quasigroup requires to equal `Π^L`.
    pub fn pi_l_closed(&self) -> &LinMap {
        self.derived.pi_l_closed.get_or_init(|| {
            let h = self.id();
            &(&self.eps_mu().tensor(h) * &h.tensor(&self.braiding)) * &self.delta_eta().tensor(h)
        })
    }

    /// `(H⊗(ε∘μ))∘(c⊗H)∘(H⊗(δ∘η))`, which a weak Hopf quasigroup requires to equal `Π^R`.
    pub fn pi_r_closed(&self) -> &LinMap {
        self.derived.pi_r_closed.get_or_init(|| {
            let h = self.id();
            &(&h.tensor(self.eps_mu()) * &self.braiding.tensor(h)) * &h.tensor(self.delta_eta())
        })
    }

    /// `Π̄^L = (H⊗(ε∘μ))∘((δ∘η)⊗H)`
    pub fn pi_bar_l(&self) -> &LinMap {
        self.derived.pi_bar_l.get_or_init(|| {
            let h = self.id();
            &h.tensor(self.eps_mu()) * &self.delta_eta().tensor(h)
        })
    }

    /// `Π̄^R = ((ε∘μ)⊗H)∘(H⊗(δ∘η))`
    pub fn pi_bar_r(&self) -> &LinMap {
        self.derived.pi_bar_r.get_or_init(|| {
            let h = self.id();
            &self.eps_mu().tensor(h) * &h.tensor(self.delta_eta())
        })
    }

    /// `η∘ε`, the value of both target and source morphisms in the Hopf quasigroup case.
    pub fn unit_counit(&self) -> LinMap {
        &self.unit * &self.counit
    }

    /// `λⁿ`
    pub fn antipode_power(&self, n: usize) -> LinMap {
        self.antipode.pow(n).expect("antipode is square")
    }
}

#[cfg(test)]
mod tests {
    use crate::constructors::{cyclic_group, pair_groupoid};
    use crate::linear::{Field, LinMap};

    #[test]
    fn group_algebra_target_is_unit_counit() {
        let h = cyclic_group(2, Field::Rationals).unwrap();
        // 2×2 hand computation: id∗λ sends e ↦ e·e = e and g ↦ g·g⁻¹ = e
        let expected = LinMap::from_int_rows(Field::Rationals, &[&[1, 1], &[0, 0]]);
        assert_eq!(h.pi_l(), &expected);
        assert_eq!(h.pi_l(), &h.unit_counit());
        assert_eq!(h.pi_bar_l(), &h.unit_counit());
        assert_eq!(h.pi_bar_r(), &h.unit_counit());
    }

    #[test]
    fn target_convolved_with_identity() {
        for h in [cyclic_group(3, Field::Rationals).unwrap(), pair_groupoid(2, Field::Rationals).unwrap()] {
            assert_eq!(&h.convolution(h.pi_l(), h.id()).unwrap(), h.id());
            assert_eq!(h.pi_l(), h.pi_l_closed());
            assert_eq!(&(h.pi_l() * h.pi_l()), h.pi_l());
        }
    }

    #[test]
    fn convolution_rejects_wrong_shape() {
        let h = cyclic_group(2, Field::Rationals).unwrap();
        let bad = LinMap::identity(Field::Rationals, 3);
        assert!(h.convolution(&bad, h.id()).is_err());
    }
}
