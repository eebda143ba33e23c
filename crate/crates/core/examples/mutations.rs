//! Breaks one structure map at a time and shows which identity notices.

use std::sync::Arc;

use whq::axioms::check_axioms;
use whq::constructors::{cyclic_group, GroupoidPresentation};
use whq::hopf_module::{check_hopf_module, HopfModule};
use whq::linear::{Field, LinMap};
use whq::structure::{Whq, WhqParts};

fn first_failure(name: &str, h: &Whq) {
    match check_axioms(h).first_failure() {
        Some(e) => println!("{name:<28} fails {} ({}): {:?}", e.id, e.statement, e.verdict),
        None => println!("{name:<28} passes"),
    }
}

fn main() {
    let q = Field::Rationals;
    let pair = GroupoidPresentation::pair(2).unwrap().build(q).unwrap();
    let z3 = cyclic_group(3, q).unwrap();

    first_failure("antipode zeroed", &pair.with_antipode(LinMap::zero(q, 4, 4)).unwrap());
    let mut bumped = pair.antipode().clone();
    // λ(x1>x1) = x1>x1 + x2>x2
    bumped = bumped.add(&LinMap::from_triples(q, 4, 4, [(3, 0, q.one())]).unwrap()).unwrap();
    first_failure("antipode perturbed", &pair.with_antipode(bumped).unwrap());
    first_failure("antipode = id on Z/3", &z3.with_antipode(LinMap::identity(q, 3)).unwrap());

    // (x2>x1)·(x1>x2) = x1>x1 rewritten to x2>x2
    let mut parts = pair.parts();
    let n = 4;
    let col = 2 * n + 1;
    let mut triples: Vec<_> = parts.mul.triples().into_iter().filter(|t| t.1 != col).collect();
    triples.push((3, col, q.one()));
    parts.mul = LinMap::from_triples(q, n, n * n, triples).unwrap();
    match Whq::new(parts) {
        Ok(h) => first_failure("product table corrupted", &h),
        Err(e) => println!("{:<28} rejected: {e}", "product table corrupted"),
    }

    let singular = WhqParts { braiding: Some(LinMap::zero(q, 9, 9)), ..z3.parts() };
    println!("{:<28} rejected: {}", "braiding zero", Whq::new(singular).unwrap_err());

    let h = Arc::new(z3);
    let twisted = h.mul() * LinMap::identity(q, 3).tensor(h.antipode());
    let m = HopfModule::new(h.clone(), twisted, h.comul().clone()).unwrap();
    let e = check_hopf_module(&m).first_failure().cloned().unwrap();
    println!("{:<28} fails {} ({})", "module action φ∘(M⊗λ)", e.id, e.statement);
}
