//! The pair groupoid on two objects: its algebra is the 2×2 matrix algebra,
//! a weak Hopf algebra whose counit is not multiplicative.

use whq::axioms::{verify, Level};
use whq::constructors::GroupoidPresentation;
use whq::linear::Field;

fn main() {
    let g = GroupoidPresentation::pair(2).unwrap();
    let h = g.build(Field::Rationals).unwrap();
    let labels: Vec<String> = (0..h.dim()).map(|i| h.label(i)).collect();
    println!("basis: {}", labels.join(", "));
    let r = verify(&h, Level::Full, true);
    println!("{} checks pass: {}", r.entries.len(), r.passes());
    println!("flags: {:?}", r.flags);
    let eps = h.counit();
    if let Some(j) = h.eps_mu().first_difference(&eps.tensor(eps)).unwrap() {
        let (a, b) = (j / h.dim(), j % h.dim());
        println!("ε∘μ ≠ ε⊗ε on {}⊗{}: the arrows do not compose", h.label(a), h.label(b));
    }
    println!("\nΠ^L (f ↦ identity at the target of f):\n{}", h.pi_l());
    println!("Π^R (f ↦ identity at the source of f):\n{}", h.pi_r());
    let sub = h.subobject_l().unwrap();
    println!("dim H_L = {}", sub.inclusion.domain_dim());
}
