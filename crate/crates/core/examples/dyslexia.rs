//! The antipode anti-(co)multiplicativity theorem and dyslexia: if `λⁿ = id`
//! then `μ∘cⁿ = μ` and `cⁿ∘δ = δ`, checked for the actual order of `λ`.

use whq::axioms::{antipode_order, check_dyslexia, ANTIPODE_ORDER_BOUND};
use whq::corpus::corpus;

fn main() {
    for ex in corpus() {
        let h = &ex.whq;
        let lam = h.antipode();
        let anti_mul = lam * h.mul() == h.mul() * h.braiding() * lam.tensor(lam);
        let anti_comul = h.comul() * lam == lam.tensor(lam) * h.braiding() * h.comul();
        let n = antipode_order(h, ANTIPODE_ORDER_BOUND).expect("finite order");
        let (dys, codys) = check_dyslexia(h, n);
        println!(
            "{:<22} λ∘μ = μ∘c∘(λ⊗λ) {anti_mul}  δ∘λ = (λ⊗λ)∘c∘δ {anti_comul}  ord λ = {n}  {n}-dyslectic {dys}  {n}-codyslectic {codys}",
            ex.name
        );
    }
}
