//! The weak Hopf quasigroup data type.
//!
//! A [`Whq`] holds a finite-dimensional space `H` with unit, product, counit,
//! coproduct, antipode and an invertible braiding on `H ⊗ H`. Construction
//! enforces only the unital magma, counital comagma, coassociativity and
//! braiding laws; the weak Hopf quasigroup axioms are verdicts of
//! [`crate::axioms`], so non-examples can be represented and diagnosed.

mod pi;
mod subobject;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::linear::{flip, inverse, Field, LinMap, LinalgError};

pub use subobject::{Side, SubobjectData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("{map} has shape {found_rows}x{found_cols}, expected {rows}x{cols}")]
    Shape { map: &'static str, rows: usize, cols: usize, found_rows: usize, found_cols: usize },
    #[error("structure maps are defined over different fields")]
    FieldMismatch,
    #[error("basis labels: {0} given for dimension {1}")]
    Labels(usize, usize),
    #[error("unit law {side} fails at basis vector {witness}")]
    NotUnital { side: &'static str, witness: usize },
    #[error("counit law {side} fails at basis vector {witness}")]
    NotCounital { side: &'static str, witness: usize },
    #[error("coproduct is not coassociative (basis vector {witness})")]
    NotCoassociative { witness: usize },
    #[error("braiding is not invertible")]
    BraidingNotInvertible,
    #[error("braiding inverse does not invert the braiding")]
    BraidingInverseMismatch,
    #[error("braiding violates the Yang-Baxter relation at basis vector {witness}")]
    BraidingNotYangBaxter { witness: usize },
    #[error("H_{side}: {law} fails")]
    Subobject { side: Side, law: &'static str },
    #[error("{0}")]
    Linalg(#[from] LinalgError),
}

/// Raw structure maps, as handed to [`Whq::new`].
#[derive(Clone, Debug)]
pub struct WhqParts {
    pub unit: LinMap,
    pub mul: LinMap,
    pub counit: LinMap,
    pub comul: LinMap,
    pub antipode: LinMap,
    /// Defaults to the flip of `H ⊗ H`.
    pub braiding: Option<LinMap>,
    /// Computed by elimination when absent.
    pub braiding_inv: Option<LinMap>,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default)]
struct Derived {
    id: OnceLock<LinMap>,
    eps_mu: OnceLock<LinMap>,
    delta_eta: OnceLock<LinMap>,
    pi_l: OnceLock<LinMap>,
    pi_r: OnceLock<LinMap>,
    pi_l_closed: OnceLock<LinMap>,
    pi_r_closed: OnceLock<LinMap>,
    pi_bar_l: OnceLock<LinMap>,
    pi_bar_r: OnceLock<LinMap>,
    sub_l: OnceLock<Result<Arc<SubobjectData>, StructureError>>,
    sub_r: OnceLock<Result<Arc<SubobjectData>, StructureError>>,
}

/// A weak Hopf quasigroup candidate. Immutable; derived maps are memoized.
#[derive(Clone, Debug)]
pub struct Whq {
    field: Field,
    dim: usize,
    unit: LinMap,
    mul: LinMap,
    counit: LinMap,
    comul: LinMap,
    antipode: LinMap,
    braiding: LinMap,
    braiding_inv: LinMap,
    flip_braiding: bool,
    labels: Option<Vec<String>>,
    derived: Derived,
}

/// Equality of the structure maps (labels and caches are ignored).
impl PartialEq for Whq {
    fn eq(&self, other: &Whq) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.mul == other.mul
            && self.counit == other.counit
            && self.comul == other.comul
            && self.antipode == other.antipode
            && self.braiding == other.braiding
    }
}

fn check_shape(map: &'static str, m: &LinMap, rows: usize, cols: usize) -> Result<(), StructureError> {
    if m.codomain_dim() != rows || m.domain_dim() != cols {
        return Err(StructureError::Shape {
            map,
            rows,
            cols,
            found_rows: m.codomain_dim(),
            found_cols: m.domain_dim(),
        });
    }
    Ok(())
}

fn witness(a: &LinMap, b: &LinMap) -> Result<Option<usize>, StructureError> {
    Ok(a.first_difference(b)?)
}

impl Whq {
    pub fn new(parts: WhqParts) -> Result<Whq, StructureError> {
        let WhqParts { unit, mul, counit, comul, antipode, braiding, braiding_inv, labels } = parts;
        let n = unit.codomain_dim();
        if n == 0 {
            return Err(StructureError::ZeroDimension);
        }
        let field = unit.field();
        check_shape("unit", &unit, n, 1)?;
        check_shape("product", &mul, n, n * n)?;
        check_shape("counit", &counit, 1, n)?;
        check_shape("coproduct", &comul, n * n, n)?;
        check_shape("antipode", &antipode, n, n)?;
        let maps = [&mul, &counit, &comul, &antipode];
        if maps.iter().any(|m| m.field() != field) {
            return Err(StructureError::FieldMismatch);
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(StructureError::Labels(l.len(), n));
            }
        }

        let id = LinMap::identity(field, n);
        if let Some(w) = witness(&(&mul * &unit.tensor(&id)), &id)? {
            return Err(StructureError::NotUnital { side: "μ∘(η⊗H) = id", witness: w });
        }
        if let Some(w) = witness(&(&mul * &id.tensor(&unit)), &id)? {
            return Err(StructureError::NotUnital { side: "μ∘(H⊗η) = id", witness: w });
        }
        if let Some(w) = witness(&(&counit.tensor(&id) * &comul), &id)? {
            return Err(StructureError::NotCounital { side: "(ε⊗H)∘δ = id", witness: w });
        }
        if let Some(w) = witness(&(&id.tensor(&counit) * &comul), &id)? {
            return Err(StructureError::NotCounital { side: "(H⊗ε)∘δ = id", witness: w });
        }
        let left = &comul.tensor(&id) * &comul;
        let right = &id.tensor(&comul) * &comul;
        if let Some(w) = witness(&left, &right)? {
            return Err(StructureError::NotCoassociative { witness: w });
        }

        let default_flip = flip(field, n, n);
        let (braiding, braiding_inv, flip_braiding) = match braiding {
            None => (default_flip.clone(), default_flip, true),
            Some(c) => {
                check_shape("braiding", &c, n * n, n * n)?;
                if c.field() != field {
                    return Err(StructureError::FieldMismatch);
                }
                let c_inv = match braiding_inv {
                    Some(ci) => {
                        check_shape("braiding inverse", &ci, n * n, n * n)?;
                        let id2 = LinMap::identity(field, n * n);
                        if &c * &ci != id2 || &ci * &c != id2 {
                            return Err(StructureError::BraidingInverseMismatch);
                        }
                        ci
                    }
                    None => inverse(&c).map_err(|e| match e {
                        LinalgError::NotInvertible => StructureError::BraidingNotInvertible,
                        other => other.into(),
                    })?,
                };
                let is_flip = c == default_flip;
                if !is_flip {
                    let c1 = c.tensor(&id);
                    let c2 = id.tensor(&c);
                    let lhs = &(&c1 * &c2) * &c1;
                    let rhs = &(&c2 * &c1) * &c2;
                    if let Some(w) = witness(&lhs, &rhs)? {
                        return Err(StructureError::BraidingNotYangBaxter { witness: w });
                    }
                }
                (c, c_inv, is_flip)
            }
        };

        Ok(Whq {
            field,
            dim: n,
            unit,
            mul,
            counit,
            comul,
            antipode,
            braiding,
            braiding_inv,
            flip_braiding,
            labels,
            derived: Derived::default(),
        })
    }

    /// The parts this value was built from, with the braiding made explicit.
    pub fn parts(&self) -> WhqParts {
        WhqParts {
            unit: self.unit.clone(),
            mul: self.mul.clone(),
            counit: self.counit.clone(),
            comul: self.comul.clone(),
            antipode: self.antipode.clone(),
            braiding: if self.flip_braiding { None } else { Some(self.braiding.clone()) },
            braiding_inv: if self.flip_braiding { None } else { Some(self.braiding_inv.clone()) },
            labels: self.labels.clone(),
        }
    }

    /// Same structure with a replaced antipode (the laws checked at
    /// construction do not involve it).
    pub fn with_antipode(&self, antipode: LinMap) -> Result<Whq, StructureError> {
        let mut parts = self.parts();
        parts.antipode = antipode;
        Whq::new(parts)
    }

    /// Relabels the basis: new basis vector `k` is old basis vector `order[k]`.
    pub fn permute_basis(&self, order: &[usize]) -> Result<Whq, StructureError> {
        let n = self.dim;
        let mut inv = vec![usize::MAX; n];
        for (k, &old) in order.iter().enumerate() {
            if old >= n || inv[old] != usize::MAX {
                return Err(LinalgError::IndexOutOfRange { index: old, bound: n }.into());
            }
            inv[old] = k;
        }
        if order.len() != n {
            return Err(StructureError::Labels(order.len(), n));
        }
        // to_new: e_old ↦ e_{inv[old]}; from_new: e_k ↦ e_{order[k]}
        let to_new = LinMap::from_basis_map(self.field, n, &inv)?;
        let from_new = LinMap::from_basis_map(self.field, n, order)?;
        let to2 = to_new.tensor(&to_new);
        let from2 = from_new.tensor(&from_new);
        let labels = self.labels.as_ref().map(|l| order.iter().map(|&o| l[o].clone()).collect());
        Whq::new(WhqParts {
            unit: &to_new * &self.unit,
            mul: &(&to_new * &self.mul) * &from2,
            counit: &self.counit * &from_new,
            comul: &(&to2 * &self.comul) * &from_new,
            antipode: &(&to_new * &self.antipode) * &from_new,
            braiding: if self.flip_braiding { None } else { Some(&(&to2 * &self.braiding) * &from2) },
            braiding_inv: None,
            labels,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of basis vector `i`, or its index when unlabeled.
    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map_or_else(|| format!("e{i}"), |l| l[i].clone())
    }

    /// η: K → H
    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    /// μ: H⊗H → H
    pub fn mul(&self) -> &LinMap {
        &self.mul
    }

    /// ε: H → K
    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    /// δ: H → H⊗H
    pub fn comul(&self) -> &LinMap {
        &self.comul
    }

    /// λ: H → H
    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn braiding(&self) -> &LinMap {
        &self.braiding
    }

    pub fn braiding_inv(&self) -> &LinMap {
        &self.braiding_inv
    }

    pub fn has_flip_braiding(&self) -> bool {
        self.flip_braiding
    }

    /// id_H
    pub fn id(&self) -> &LinMap {
        self.derived.id.get_or_init(|| LinMap::identity(self.field, self.dim))
    }

    /// The identity of the unit object.
    pub fn unit_object(&self) -> LinMap {
        LinMap::identity(self.field, 1)
    }

    /// ε∘μ: H⊗H → K
    pub fn eps_mu(&self) -> &LinMap {
        self.derived.eps_mu.get_or_init(|| &self.counit * &self.mul)
    }

    /// δ∘η: K → H⊗H
    pub fn delta_eta(&self) -> &LinMap {
        self.derived.delta_eta.get_or_init(|| &self.comul * &self.unit)
    }

    /// δ_{H⊗H} = (H⊗c⊗H)∘(δ⊗δ)
    pub fn comul_tensor(&self) -> LinMap {
        let h = self.id();
        &tensor_all3(h, &self.braiding, h) * &self.comul.tensor(&self.comul)
    }

    /// μ_{H⊗H} = (μ⊗μ)∘(H⊗c⊗H)
    pub fn mul_tensor(&self) -> LinMap {
        let h = self.id();
        &self.mul.tensor(&self.mul) * &tensor_all3(h, &self.braiding, h)
    }
}

fn tensor_all3(a: &LinMap, b: &LinMap, c: &LinMap) -> LinMap {
    a.tensor(b).tensor(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::cyclic_group;

    #[test]
    fn rejects_non_coassociative_coproduct() {
        let q = Field::Rationals;
        let h = cyclic_group(3, q).unwrap();
        // in the basis e, x = g − e, y = g² − e: δ(x) = e⊗x + x⊗e + x⊗y, δ(y) = e⊗y + y⊗e;
        // counital, but (δ⊗H)∘δ(x) has an x⊗y⊗y term that (H⊗δ)∘δ(x) lacks
        let one = q.one();
        let delta_new = LinMap::from_triples(
            q,
            9,
            3,
            vec![
                (0, 0, one.clone()),
                (1, 1, one.clone()),
                (3, 1, one.clone()),
                (5, 1, one.clone()),
                (2, 2, one.clone()),
                (6, 2, one),
            ],
        )
        .unwrap();
        let p = LinMap::from_int_rows(q, &[&[1, -1, -1], &[0, 1, 0], &[0, 0, 1]]);
        let p_inv = crate::linear::inverse(&p).unwrap();
        let mut parts = h.parts();
        parts.comul = &(&p.tensor(&p) * &delta_new) * &p_inv;
        assert!(matches!(Whq::new(parts), Err(StructureError::NotCoassociative { .. })));
    }

    #[test]
    fn rejects_singular_braiding() {
        let h = cyclic_group(2, Field::Rationals).unwrap();
        let mut parts = h.parts();
        parts.braiding = Some(LinMap::zero(Field::Rationals, 4, 4));
        assert_eq!(Whq::new(parts).unwrap_err(), StructureError::BraidingNotInvertible);
    }

    #[test]
    fn rejects_broken_unit() {
        let h = cyclic_group(3, Field::Rationals).unwrap();
        let mut parts = h.parts();
        parts.unit = LinMap::from_int_rows(Field::Rationals, &[&[0], &[1], &[0]]);
        assert!(matches!(Whq::new(parts), Err(StructureError::NotUnital { .. })));
    }

    #[test]
    fn permutation_roundtrip() {
        let h = cyclic_group(3, Field::Rationals).unwrap();
        let p = h.permute_basis(&[2, 0, 1]).unwrap();
        assert_ne!(p, h);
        let back = p.permute_basis(&[1, 2, 0]).unwrap();
        assert_eq!(back, h);
    }
}
