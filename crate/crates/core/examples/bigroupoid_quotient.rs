//! Bigroupoid presentations and their quotient algebras: a 1-cell with two
//! inverses, the order-7 IP loop next to a point, and the loop times the
//! pair groupoid. The last two are weak Hopf quasigroups that are neither
//! weak Hopf algebras nor Hopf quasigroups.

use whq::axioms::{verify, Level};
use whq::constructors::{from_bigroupoid, BigroupoidPresentation, GroupoidPresentation, LoopTable};
use whq::corpus::smallest_ip_loop;
use whq::linear::Field;

fn report(name: &str, p: &BigroupoidPresentation) {
    let q = from_bigroupoid(p, Field::Rationals).unwrap();
    let r = verify(&q.whq, Level::Derived, true);
    let reps: Vec<&str> = q.representatives.iter().map(|&f| p.table().name(f)).collect();
    println!(
        "{name}: {} cells, ideal dim {}, quotient dim {}; WHQ {} WHA {} HQ {}",
        p.table().len(),
        q.ideal_dim,
        q.whq.dim(),
        r.flags.weak_hopf_quasigroup,
        r.flags.weak_hopf_algebra,
        r.flags.hopf_quasigroup
    );
    if reps.len() <= 8 {
        println!("  classes: {}", reps.join(", "));
    }
    if let Some(e) = r.first_failure() {
        println!("  FAIL {}: {:?}", e.id, e.verdict);
    }
}

fn main() {
    report("doubled arrow", &BigroupoidPresentation::doubled_arrow());
    let l = smallest_ip_loop();
    let point = BigroupoidPresentation::from_loop(&LoopTable::cyclic(1), "p").unwrap();
    let with_point =
        BigroupoidPresentation::disjoint_union(&BigroupoidPresentation::from_loop(&l, "q").unwrap(), &point).unwrap();
    report("IP loop of order 7 and a point", &with_point);
    let pair = GroupoidPresentation::pair(2).unwrap();
    report("IP loop × pair groupoid", &BigroupoidPresentation::loop_times_groupoid(&l, &pair).unwrap());
}
