//! Runs the full identity catalog on every corpus example and prints the
//! classification flags, the number of identities checked and the time taken.

use std::time::Instant;

use whq::axioms::{verify, Level};
use whq::corpus::corpus;

fn main() {
    let total = Instant::now();
    println!("{:<22} {:>4} {:>5} {:>6} {:>5} {:>5} {:>5}  time", "example", "dim", "ids", "ok", "WHQ", "WHA", "HQ");
    for ex in corpus() {
        let start = Instant::now();
        let r = verify(&ex.whq, Level::Full, true);
        let f = r.flags;
        println!(
            "{:<22} {:>4} {:>5} {:>6} {:>5} {:>5} {:>5}  {:.2?}",
            ex.name,
            ex.whq.dim(),
            r.entries.len(),
            r.passes(),
            f.weak_hopf_quasigroup,
            f.weak_hopf_algebra,
            f.hopf_quasigroup,
            start.elapsed()
        );
        for e in r.failures() {
            println!("    FAIL {} ({}): {:?}", e.id, e.statement, e.verdict);
        }
    }
    println!("total {:.2?}", total.elapsed());
}
