//! The named examples every verifier is run against.

use crate::constructors::{
    from_bigroupoid, smallest_nonassociative_ip_loop, BigroupoidPresentation, ConstructError, GroupoidPresentation,
    LoopTable,
};
use crate::linear::Field;
use crate::structure::Whq;

#[derive(Clone, Debug)]
pub struct Example {
    pub name: String,
    pub whq: Whq,
    /// The cell presentation the algebra is the quotient of.
    pub presentation: BigroupoidPresentation,
}

/// The smallest nonassociative inverse-property loop (order 7).
pub fn smallest_ip_loop() -> LoopTable {
    smallest_nonassociative_ip_loop(7).expect("an order-7 nonassociative IP loop exists")
}

fn example(name: &str, presentation: BigroupoidPresentation, field: Field) -> Result<Example, ConstructError> {
    let q = from_bigroupoid(&presentation, field)?;
    Ok(Example { name: name.to_string(), whq: q.whq, presentation })
}

fn group(n: usize) -> BigroupoidPresentation {
    BigroupoidPresentation::from_loop(&LoopTable::cyclic(n), "").expect("cyclic groups are IP loops")
}

/// Loops, groupoids and bigroupoids over ℚ and 𝔽₅, smallest first.
pub fn corpus() -> Vec<Example> {
    let f5 = Field::prime(5).expect("5 is prime");
    let q = Field::Rationals;
    let two_z2 = GroupoidPresentation::disjoint_union(
        &GroupoidPresentation::from_group(&LoopTable::cyclic(2), "a").unwrap(),
        &GroupoidPresentation::from_group(&LoopTable::cyclic(2), "b").unwrap(),
    )
    .unwrap();
    let ip7 = BigroupoidPresentation::from_loop(&smallest_ip_loop(), "").unwrap();
    let point = BigroupoidPresentation::from_loop(&LoopTable::cyclic(1), "p").unwrap();
    let ip7_point = BigroupoidPresentation::disjoint_union(
        &BigroupoidPresentation::from_loop(&smallest_ip_loop(), "q").unwrap(),
        &point,
    )
    .unwrap();
    let list = [
        ("z2", group(2), q),
        ("z3", group(3), q),
        ("z2-f5", group(2), f5),
        ("z3-f5", group(3), f5),
        ("pair-groupoid-2", BigroupoidPresentation::from_groupoid(&GroupoidPresentation::pair(2).unwrap()), q),
        ("two-z2", BigroupoidPresentation::from_groupoid(&two_z2), q),
        ("ip-loop-7", ip7, q),
        ("ip-loop-7-and-point", ip7_point, q),
        ("doubled-arrow", BigroupoidPresentation::doubled_arrow(), q),
        ("octonion-loop", BigroupoidPresentation::from_loop(&LoopTable::octonion(), "").unwrap(), q),
    ];
    list.into_iter().map(|(name, p, field)| example(name, p, field).expect("corpus presentations are valid")).collect()
}

/// One corpus member by name.
pub fn by_name(name: &str) -> Option<Example> {
    corpus().into_iter().find(|e| e.name == name)
}
