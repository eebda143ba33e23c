//! The group algebra of ℤ/n over ℚ and over 𝔽₅: a Hopf algebra, so both a
//! weak Hopf algebra and a Hopf quasigroup, with `Π^L = Π^R = η∘ε`.

use whq::axioms::{verify, Level};
use whq::constructors::cyclic_group;
use whq::linear::Field;

fn main() {
    for field in [Field::Rationals, Field::prime(5).unwrap()] {
        for n in [2, 3, 4] {
            let h = cyclic_group(n, field).unwrap();
            let r = verify(&h, Level::Full, true);
            let eta_eps = h.unit() * h.counit();
            println!(
                "Z/{n} over {field}: {} checks, all pass {}, WHA {}, HQ {}, Π^L = η∘ε {}",
                r.entries.len(),
                r.passes(),
                r.flags.weak_hopf_algebra,
                r.flags.hopf_quasigroup,
                h.pi_l() == &eta_eps
            );
        }
    }
    let h = cyclic_group(3, Field::Rationals).unwrap();
    println!("\nantipode of Z/3 (g ↦ g⁻¹):\n{}", h.antipode());
}
