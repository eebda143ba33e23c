//! The quotient of a bigroupoid's cell algebra by the ideal generated by
//! `h − g∘(f∘h)` and `p − (p∘f)∘g` (`g ∈ Inv(f)`).
//!
//! The algebra is not associative, so the two-sided ideal is computed as a
//! span fixpoint: every spanning vector is multiplied by every basis cell on
//! both sides until nothing new appears. When the ideal is proper it is
//! spanned by differences of cells, and the quotient basis is the set of
//! classes those differences induce.

use super::{cell_algebra, BigroupoidPresentation, ConstructError};
use crate::linear::{Field, Scalar};
use crate::structure::Whq;

#[derive(Clone, Debug)]
pub struct QuotientResult {
    pub whq: Whq,
    /// Basis index of the class of each 1-cell (`None` would mean the cell
    /// lies in the ideal, which a proper ideal rules out).
    pub class_of: Vec<Option<usize>>,
    /// First member of each class, in presentation order.
    pub representatives: Vec<usize>,
    pub ideal_dim: usize,
}

/// A subspace of `K^n` kept in reduced row echelon form.
struct Span {
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Span {
    fn new() -> Span {
        Span { rows: Vec::new(), pivots: Vec::new() }
    }

    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &(&c * r);
                    }
                }
            }
        }
        v
    }

    fn contains(&self, v: Vec<Scalar>) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    *x = &*x - &(&c * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// `e_a − e_b` in `K^n`.
fn difference(field: Field, n: usize, a: usize, b: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[a] = field.one();
    v[b] = &v[b] - &field.one();
    v
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Builds `H = 𝔽𝓑/I(𝓑)`.
pub fn from_bigroupoid(b: &BigroupoidPresentation, field: Field) -> Result<QuotientResult, ConstructError> {
    let t = b.table();
    let n = t.len();
    let mut span = Span::new();
    let mut work: Vec<Vec<Scalar>> = Vec::new();

    let push = |span: &mut Span, work: &mut Vec<Vec<Scalar>>, v: Vec<Scalar>| {
        if span.insert(v.clone()) {
            work.push(v);
        }
    };

    for f in 0..n {
        for g in b.inverses_of(f) {
            for h in 0..n {
                if t.composable(f, h) {
                    let fh = t.compose(f, h).unwrap();
                    let gfh = t.compose(g, fh).expect("s(g) = t(f)");
                    if gfh != h {
                        push(&mut span, &mut work, difference(field, n, h, gfh));
                    }
                }
            }
            for p in 0..n {
                if t.composable(p, f) {
                    let pf = t.compose(p, f).unwrap();
                    let pfg = t.compose(pf, g).expect("s(f) = t(g)");
                    if pfg != p {
                        push(&mut span, &mut work, difference(field, n, p, pfg));
                    }
                }
            }
        }
    }

    // close under multiplication by basis cells on both sides
    while let Some(v) = work.pop() {
        for c in 0..n {
            let mut left = vec![field.zero(); n];
            let mut right = vec![field.zero(); n];
            for (f, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                if let Some(cf) = t.compose(c, f) {
                    left[cf] = &left[cf] + x;
                }
                if let Some(fc) = t.compose(f, c) {
                    right[fc] = &right[fc] + x;
                }
            }
            push(&mut span, &mut work, left);
            push(&mut span, &mut work, right);
        }
    }
    let ideal_dim = span.dim();

    for f in 0..n {
        let mut e = vec![field.zero(); n];
        e[f] = field.one();
        if span.contains(e) {
            return Err(ConstructError::ImproperIdeal(format!(
                "the ideal contains the 1-cell {:?}, so the quotient is zero",
                t.name(f)
            )));
        }
    }

    let mut parent: Vec<usize> = (0..n).collect();
    for a in 0..n {
        for c in a + 1..n {
            if find(&mut parent, a) != find(&mut parent, c) && span.contains(difference(field, n, a, c)) {
                let (ra, rc) = (find(&mut parent, a), find(&mut parent, c));
                let (lo, hi) = (ra.min(rc), ra.max(rc));
                parent[hi] = lo;
            }
        }
    }
    let mut representatives = Vec::new();
    let mut class_of = vec![None; n];
    for f in 0..n {
        let r = find(&mut parent, f);
        if r == f {
            representatives.push(f);
        }
    }
    for f in 0..n {
        let r = find(&mut parent, f);
        class_of[f] = Some(representatives.binary_search(&r).expect("roots are representatives"));
    }
    if n - representatives.len() != ideal_dim {
        return Err(ConstructError::ImproperIdeal(format!(
            "the ideal has dimension {ideal_dim} but its cell differences span only {}",
            n - representatives.len()
        )));
    }

    let class = |f: usize| class_of[f].expect("no cell lies in a proper ideal");
    for f in 0..n {
        let r = representatives[class(f)];
        let (cf, cr) = (&t.cells()[f], &t.cells()[r]);
        if cf.source != cr.source || cf.target != cr.target {
            return Err(ConstructError::IllDefinedQuotient(format!(
                "{:?} and {:?} share a class but not their endpoints",
                t.name(f),
                t.name(r)
            )));
        }
        for g in b.inverses_of(f) {
            if class(g) != class(b.inverse()[r]) {
                return Err(ConstructError::IllDefinedQuotient(format!(
                    "inverse classes of {:?} and {:?} differ",
                    t.name(f),
                    t.name(r)
                )));
            }
        }
    }
    for g in 0..n {
        for f in 0..n {
            if let Some(gf) = t.compose(g, f) {
                let reps = t.compose(representatives[class(g)], representatives[class(f)]);
                if reps.map(class) != Some(class(gf)) {
                    return Err(ConstructError::IllDefinedQuotient(format!(
                        "the class of {:?} ∘ {:?} depends on representatives",
                        t.name(g),
                        t.name(f)
                    )));
                }
            }
        }
    }

    let dim = representatives.len();
    let units: Vec<usize> = t.identities().iter().map(|&i| class(i)).collect();
    let inverse: Vec<usize> = representatives.iter().map(|&r| class(b.inverse()[r])).collect();
    let labels = representatives.iter().map(|&r| t.name(r).to_string()).collect();
    let product = |x: usize, y: usize| t.compose(representatives[x], representatives[y]).map(class);
    let whq = cell_algebra(field, dim, product, &units, &inverse, labels)?;
    Ok(QuotientResult { whq, class_of, representatives, ideal_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::GroupoidPresentation;

    #[test]
    fn groupoid_input_has_zero_ideal() {
        let g = GroupoidPresentation::pair(2).unwrap();
        let q = from_bigroupoid(&BigroupoidPresentation::from_groupoid(&g), Field::Rationals).unwrap();
        assert_eq!(q.ideal_dim, 0);
        assert_eq!(q.whq, g.build(Field::Rationals).unwrap());
    }

    #[test]
    fn doubled_arrow_collapses_to_pair_groupoid() {
        let q = from_bigroupoid(&BigroupoidPresentation::doubled_arrow(), Field::Rationals).unwrap();
        assert_eq!(q.ideal_dim, 1);
        assert_eq!(q.whq.dim(), 4);
        // f and f′ share a class
        assert_eq!(q.class_of[2], q.class_of[3]);
    }
}
