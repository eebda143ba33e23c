//! Backtracking search for small inverse-property loops.
//!
//! In an IP loop the inverse map `J` is an involution and every entry
//! `a·b = c` forces `J(a)·c = b`, `c·J(b) = a` and `J(b)·J(a) = J(c)`. The search
//! fixes `J` first and then fills the table with these forced entries
//! propagated eagerly, which prunes almost every branch.

use super::LoopTable;

/// First triple `(a, b, c)` with `(ab)c ≠ a(bc)`.
pub fn associativity_witness(l: &LoopTable) -> Option<[usize; 3]> {
    let n = l.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if l.mul(l.mul(a, b), c) != l.mul(a, l.mul(b, c)) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

pub fn is_associative(l: &LoopTable) -> bool {
    associativity_witness(l).is_none()
}

#[derive(Clone)]
struct Partial {
    n: usize,
    cell: Vec<Option<usize>>,
    row_has: Vec<Vec<bool>>,
    col_has: Vec<Vec<bool>>,
}

impl Partial {
    fn new(n: usize) -> Partial {
        Partial { n, cell: vec![None; n * n], row_has: vec![vec![false; n]; n], col_has: vec![vec![false; n]; n] }
    }

    /// Sets `a·b = c` together with every entry it forces; `false` on a contradiction.
    fn assign(&mut self, j: &[usize], a: usize, b: usize, c: usize) -> bool {
        let mut queue = vec![(a, b, c)];
        while let Some((a, b, c)) = queue.pop() {
            match self.cell[a * self.n + b] {
                Some(x) if x == c => continue,
                Some(_) => return false,
                None => {}
            }
            if self.row_has[a][c] || self.col_has[b][c] {
                return false;
            }
            self.cell[a * self.n + b] = Some(c);
            self.row_has[a][c] = true;
            self.col_has[b][c] = true;
            queue.push((j[a], c, b));
            queue.push((c, j[b], a));
            queue.push((j[b], j[a], j[c]));
        }
        true
    }

    fn to_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.cell[a * self.n + b].expect("complete table")).collect()).collect()
    }
}

/// Involutions of `0..n` fixing 0, in lexicographic order of the image list.
fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn extend(j: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = j.iter().position(Option::is_none) else {
            out.push(j.iter().map(|x| x.unwrap()).collect());
            return;
        };
        for partner in first..j.len() {
            if j[partner].is_some() {
                continue;
            }
            j[first] = Some(partner);
            j[partner] = Some(first);
            extend(j, out);
            j[first] = None;
            j[partner] = None;
        }
    }
    let mut j = vec![None; n];
    j[0] = Some(0);
    let mut out = Vec::new();
    extend(&mut j, &mut out);
    out
}

fn fill(p: Partial, j: &[usize], found: &mut dyn FnMut(Vec<Vec<usize>>) -> bool) -> bool {
    let Some(pos) = p.cell.iter().position(Option::is_none) else {
        return found(p.to_table());
    };
    let (a, b) = (pos / p.n, pos % p.n);
    for c in 0..p.n {
        if p.row_has[a][c] || p.col_has[b][c] {
            continue;
        }
        let mut next = p.clone();
        if next.assign(j, a, b, c) && fill(next, j, found) {
            return true;
        }
    }
    false
}

/// Calls `visit` on every IP loop of order `n` with identity 0 (labelled
/// tables, possibly isomorphic to each other) until it returns `true`.
pub fn for_each_ip_loop(n: usize, mut visit: impl FnMut(LoopTable) -> bool) -> bool {
    for j in involutions(n) {
        let mut p = Partial::new(n);
        let mut ok = true;
        for x in 0..n {
            ok &= p.assign(&j, 0, x, x) && p.assign(&j, x, 0, x) && p.assign(&j, x, j[x], 0);
        }
        if !ok {
            continue;
        }
        let mut found = |t: Vec<Vec<usize>>| visit(LoopTable::new(t, 0, None).expect("search yields loops"));
        if fill(p, &j, &mut found) {
            return true;
        }
    }
    false
}

/// The first nonassociative IP loop met by the search, scanning orders
/// `1..=max_order` upward; the result has the least possible order.
pub fn smallest_nonassociative_ip_loop(max_order: usize) -> Option<LoopTable> {
    for n in 1..=max_order {
        let mut hit = None;
        for_each_ip_loop(n, |l| {
            if is_associative(&l) {
                false
            } else {
                hit = Some(l);
                true
            }
        });
        if hit.is_some() {
            return hit;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        // involutions of n−1 points: 1, 1, 2, 4, 10, 26
        let counts: Vec<usize> = (1..=6).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26]);
    }

    #[test]
    fn small_ip_loops_are_valid() {
        for n in 1..=5 {
            for_each_ip_loop(n, |l| {
                assert!(l.ip_inverses().is_ok());
                false
            });
        }
    }
}
