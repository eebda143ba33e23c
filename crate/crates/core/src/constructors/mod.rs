//! Weak Hopf quasigroups from combinatorial data: loops, groupoids and
//! normal bigroupoids.
//!
//! Every construction here is a "cell algebra": the basis is a finite set of
//! cells, the product is a partial composition (absent composites are 0),
//! every basis cell is grouplike (`δ(f) = f⊗f`, `ε(f) = 1`) and the antipode
//! sends a cell to a chosen inverse.

mod cells;
mod loops;
mod quotient;
mod search;

use thiserror::Error;

use crate::linear::{Field, LinMap};
use crate::structure::{StructureError, Whq, WhqParts};

pub use cells::{BigroupoidPresentation, Cell, CellTable, GroupoidPresentation};
pub use loops::{cyclic_group, octonion_loop, LoopTable};
pub use quotient::{from_bigroupoid, QuotientResult};
pub use search::{associativity_witness, for_each_ip_loop, is_associative, smallest_nonassociative_ip_loop};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("not a loop: {0}")]
    NotLoop(String),
    #[error("not an inverse-property loop: {law} fails at ({}, {}, {})", triple[0], triple[1], triple[2])]
    NotIPLoop { triple: [usize; 3], law: &'static str },
    #[error("not a groupoid: {0}")]
    NotGroupoid(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("inconsistent inverse for 1-cell {cell}: {reason}")]
    InconsistentPresentation { cell: String, reason: String },
    #[error("the ideal is not proper: {0}")]
    ImproperIdeal(String),
    #[error("quotient is not well defined: {0}")]
    IllDefinedQuotient(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
}

/// The algebra on cells `0..n` with `μ(a⊗b) = product(a, b)` (or 0), unit
/// `Σ units`, grouplike coproduct and `λ(a) = inverse[a]`.
pub(crate) fn cell_algebra(
    field: Field,
    n: usize,
    product: impl Fn(usize, usize) -> Option<usize>,
    units: &[usize],
    inverse: &[usize],
    labels: Vec<String>,
) -> Result<Whq, ConstructError> {
    let one = field.one();
    let mut mul = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = product(a, b) {
                mul.push((c, a * n + b, one.clone()));
            }
        }
    }
    let mul = LinMap::from_triples(field, n, n * n, mul).map_err(StructureError::from)?;
    let unit =
        LinMap::from_triples(field, n, 1, units.iter().map(|&u| (u, 0, one.clone()))).map_err(StructureError::from)?;
    let counit =
        LinMap::from_triples(field, 1, n, (0..n).map(|a| (0, a, one.clone()))).map_err(StructureError::from)?;
    let diagonal: Vec<usize> = (0..n).map(|a| a * n + a).collect();
    let comul = LinMap::from_basis_map(field, n * n, &diagonal).map_err(StructureError::from)?;
    let antipode = LinMap::from_basis_map(field, n, inverse).map_err(StructureError::from)?;
    Ok(Whq::new(WhqParts {
        unit,
        mul,
        counit,
        comul,
        antipode,
        braiding: None,
        braiding_inv: None,
        labels: Some(labels),
    })?)
}

/// The pair groupoid on `n` objects: exactly one arrow between any two objects.
pub fn pair_groupoid(n: usize, field: Field) -> Result<Whq, ConstructError> {
    GroupoidPresentation::pair(n)?.build(field)
}

/// Disjoint union of two copies of the groupoid ℤ/2.
pub fn two_copies_of_z2(field: Field) -> Result<Whq, ConstructError> {
    let z2 = GroupoidPresentation::from_group(&LoopTable::cyclic(2), "a")?;
    let z2b = GroupoidPresentation::from_group(&LoopTable::cyclic(2), "b")?;
    GroupoidPresentation::disjoint_union(&z2, &z2b)?.build(field)
}
