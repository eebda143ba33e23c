//! The images `H_L = Im Π^L` and `H_R = Im Π^R` with their induced unital
//! magma and comonoid structures.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{StructureError, Whq};
use crate::linear::{kernel_basis, same_image, split_idempotent, LinMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::L => "L",
            Side::R => "R",
        })
    }
}

/// A split image of `Π^L` or `Π^R`, with structure maps transported along
/// the splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubobjectData {
    pub side: Side,
    /// `i: H_• → H`
    pub inclusion: LinMap,
    /// `p: H → H_•`
    pub projection: LinMap,
    /// `p∘η`
    pub unit: LinMap,
    /// `p∘μ∘(i⊗i)`
    pub mul: LinMap,
    /// `ε∘i`
    pub counit: LinMap,
    /// `(p⊗p)∘δ∘i`
    pub comul: LinMap,
}

impl SubobjectData {
    pub fn dim(&self) -> usize {
        self.inclusion.domain_dim()
    }

    fn build(h: &Whq, side: Side) -> Result<SubobjectData, StructureError> {
        let pi = match side {
            Side::L => h.pi_l(),
            Side::R => h.pi_r(),
        };
        let s = split_idempotent(pi)?;
        let (i, p) = (s.section, s.retraction);
        let id = h.id();
        let fail = |law: &'static str| StructureError::Subobject { side, law };

        // i equalizes δ and each Π-corrected coproduct; p coequalizes μ and each Π-corrected product
        let (delta_forms, mu_forms) = match side {
            Side::L => (
                [&id.tensor(pi) * h.comul(), &id.tensor(h.pi_bar_r()) * h.comul()],
                [h.mul() * &id.tensor(pi), h.mul() * &id.tensor(h.pi_bar_l())],
            ),
            Side::R => (
                [&pi.tensor(id) * h.comul(), &h.pi_bar_l().tensor(id) * h.comul()],
                [h.mul() * &pi.tensor(id), h.mul() * &h.pi_bar_r().tensor(id)],
            ),
        };
        for d in &delta_forms {
            if !same_image(&kernel_basis(&h.comul().sub(d)?), &i)? {
                return Err(fail("inclusion is an equalizer"));
            }
        }
        let p_kernel = kernel_basis(&p);
        for m in &mu_forms {
            if !same_image(&p_kernel, &h.mul().sub(m)?)? {
                return Err(fail("projection is a coequalizer"));
            }
        }

        let unit = &p * h.unit();
        let mul = &(&p * h.mul()) * &i.tensor(&i);
        let counit = h.counit() * &i;
        let comul = &(&p.tensor(&p) * h.comul()) * &i;

        let k = LinMap::identity(h.field(), i.domain_dim());
        if &mul * &unit.tensor(&k) != k || &mul * &k.tensor(&unit) != k {
            return Err(fail("induced unit"));
        }
        if &counit.tensor(&k) * &comul != k || &k.tensor(&counit) * &comul != k {
            return Err(fail("induced counit"));
        }
        if &comul.tensor(&k) * &comul != &k.tensor(&comul) * &comul {
            return Err(fail("induced coassociativity"));
        }
        Ok(SubobjectData { side, inclusion: i, projection: p, unit, mul, counit, comul })
    }
}

impl Whq {
    /// `H_L` with its induced structure; fails when `Π^L` is not idempotent
    /// or the induced maps break the magma/comonoid laws.
    pub fn subobject_l(&self) -> Result<Arc<SubobjectData>, StructureError> {
        self.derived.sub_l.get_or_init(|| SubobjectData::build(self, Side::L).map(Arc::new)).clone()
    }

    /// `H_R` with its induced structure.
    pub fn subobject_r(&self) -> Result<Arc<SubobjectData>, StructureError> {
        self.derived.sub_r.get_or_init(|| SubobjectData::build(self, Side::R).map(Arc::new)).clone()
    }

    pub fn subobject(&self, side: Side) -> Result<Arc<SubobjectData>, StructureError> {
        match side {
            Side::L => self.subobject_l(),
            Side::R => self.subobject_r(),
        }
    }
}
