//! Loop tables and their (quasi)group algebras.

use super::{cell_algebra, ConstructError};
use crate::linear::Field;
use crate::structure::Whq;

/// A finite loop given by its Cayley table: `table[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    labels: Vec<String>,
}

impl LoopTable {
    /// Checks that the table is a Latin square and that `identity` is a
    /// two-sided identity.
    pub fn new(
        table: Vec<Vec<usize>>,
        identity: usize,
        labels: Option<Vec<String>>,
    ) -> Result<LoopTable, ConstructError> {
        let n = table.len();
        let bad = |m: String| Err(ConstructError::NotLoop(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if identity >= n {
            return bad(format!("identity index {identity} out of range"));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}, expected {n}", row.len()));
            }
            let mut seen = vec![false; n];
            for &c in row {
                if c >= n || seen[c] {
                    return bad(format!("row {a} is not a permutation"));
                }
                seen[c] = true;
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                if seen[row[b]] {
                    return bad(format!("column {b} is not a permutation"));
                }
                seen[row[b]] = true;
            }
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return bad(format!("element {identity} is not an identity (fails at {a})"));
            }
        }
        let labels = match labels {
            Some(l) if l.len() != n => return bad(format!("{} labels for order {n}", l.len())),
            Some(l) => l,
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(LoopTable { table, identity, labels })
    }

    /// The cyclic group `ℤ/n`, elements `0..n` under addition.
    pub fn cyclic(n: usize) -> LoopTable {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|k| if k == 0 { "e".to_string() } else { format!("g{k}") }).collect();
        LoopTable::new(table, 0, Some(labels)).expect("cyclic group table")
    }

    /// The Moufang loop `{±e_0, …, ±e_7}` of octonion basis elements up to
    /// sign. Index `k < 8` is `+e_k`, index `k + 8` is `−e_k`.
    pub fn octonion() -> LoopTable {
        const TRIPLES: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];
        // unit products e_i·e_j = sign · e_k
        let unit_product = |i: usize, j: usize| -> (bool, usize) {
            if i == 0 {
                return (false, j);
            }
            if j == 0 {
                return (false, i);
            }
            if i == j {
                return (true, 0);
            }
            for t in TRIPLES {
                for r in 0..3 {
                    let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
                    if (i, j) == (a, b) {
                        return (false, c);
                    }
                    if (i, j) == (b, a) {
                        return (true, c);
                    }
                }
            }
            unreachable!("every pair of distinct imaginary units lies on one line")
        };
        let table = (0..16)
            .map(|a| {
                (0..16)
                    .map(|b| {
                        let (neg, k) = unit_product(a % 8, b % 8);
                        let neg = neg ^ (a >= 8) ^ (b >= 8);
                        k + if neg { 8 } else { 0 }
                    })
                    .collect()
            })
            .collect();
        let labels = (0..16)
            .map(|k| {
                let sign = if k >= 8 { "-" } else { "" };
                if k % 8 == 0 {
                    format!("{sign}1")
                } else {
                    format!("{sign}e{}", k % 8)
                }
            })
            .collect();
        LoopTable::new(table, 0, Some(labels)).expect("octonion sign table")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Two-sided inverses satisfying `a⁻¹(ab) = b` and `(ba)a⁻¹ = b`.
    pub fn ip_inverses(&self) -> Result<Vec<usize>, ConstructError> {
        let n = self.order();
        let e = self.identity;
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            let r = (0..n).find(|&b| self.mul(a, b) == e).expect("Latin rows contain the identity");
            if self.mul(r, a) != e {
                return Err(ConstructError::NotIPLoop { triple: [a, r, e], law: "two-sided inverse" });
            }
            inv.push(r);
        }
        for a in 0..n {
            for b in 0..n {
                if self.mul(inv[a], self.mul(a, b)) != b {
                    return Err(ConstructError::NotIPLoop { triple: [inv[a], a, b], law: "a⁻¹(ab) = b" });
                }
                if self.mul(self.mul(b, a), inv[a]) != b {
                    return Err(ConstructError::NotIPLoop { triple: [b, a, inv[a]], law: "(ba)a⁻¹ = b" });
                }
            }
        }
        Ok(inv)
    }

    /// The loop algebra: grouplike basis, `λ(a) = a⁻¹`. Requires the inverse properties.
    pub fn build(&self, field: Field) -> Result<Whq, ConstructError> {
        let inv = self.ip_inverses()?;
        let n = self.order();
        cell_algebra(field, n, |a, b| Some(self.mul(a, b)), &[self.identity], &inv, self.labels.clone())
    }
}

/// Group algebra of `ℤ/n`.
pub fn cyclic_group(n: usize, field: Field) -> Result<Whq, ConstructError> {
    LoopTable::cyclic(n).build(field)
}

/// Algebra of the 16-element octonion sign loop.
pub fn octonion_loop(field: Field) -> Result<Whq, ConstructError> {
    LoopTable::octonion().build(field)
}
