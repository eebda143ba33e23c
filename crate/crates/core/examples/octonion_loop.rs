//! The 16-element loop of signed octonion units. Its loop algebra is a Hopf
//! quasigroup that is not associative; the full catalog runs on
//! `H⊗H⊗H` of dimension 4096.

use std::time::Instant;

use whq::axioms::{verify, Level};
use whq::constructors::{associativity_witness, LoopTable};
use whq::linear::Field;

fn main() {
    let l = LoopTable::octonion();
    let [a, b, c] = associativity_witness(&l).expect("the octonions are not associative");
    let name = |x: usize| l.labels()[x].clone();
    println!(
        "({}·{})·{} = {} but {}·({}·{}) = {}",
        name(a),
        name(b),
        name(c),
        name(l.mul(l.mul(a, b), c)),
        name(a),
        name(b),
        name(c),
        name(l.mul(a, l.mul(b, c)))
    );
    let h = l.build(Field::Rationals).unwrap();
    for parallel in [false, true] {
        let start = Instant::now();
        let r = verify(&h, Level::Full, parallel);
        println!("parallel {parallel}: {} checks, all pass {}, {:.2?}", r.entries.len(), r.passes(), start.elapsed());
    }
    let f = verify(&h, Level::Axioms, true).flags;
    println!(
        "associative {}, hopf quasigroup {}, weak hopf algebra {}",
        f.associative, f.hopf_quasigroup, f.weak_hopf_algebra
    );
}
