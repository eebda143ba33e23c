//! Finds the smallest inverse-property loop that is not a group and checks
//! that its algebra is a Hopf quasigroup but not a weak Hopf algebra.

use std::time::Instant;

use whq::constructors::{associativity_witness, smallest_nonassociative_ip_loop};
use whq::linear::Field;

fn main() {
    let start = Instant::now();
    let l = smallest_nonassociative_ip_loop(7).expect("an order-7 example exists");
    println!("order {} found in {:.2?}", l.order(), start.elapsed());
    for row in l.table() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
    let [a, b, c] = associativity_witness(&l).expect("nonassociative");
    println!("({a}·{b})·{c} = {} but {a}·({b}·{c}) = {}", l.mul(l.mul(a, b), c), l.mul(a, l.mul(b, c)));
    let h = l.build(Field::Rationals).expect("IP loops give loop algebras");
    let f = whq::axioms::check_axioms(&h).flags;
    println!(
        "algebra of dimension {}: hopf quasigroup {}, weak hopf algebra {}",
        h.dim(),
        f.hopf_quasigroup,
        f.weak_hopf_algebra
    );
}
