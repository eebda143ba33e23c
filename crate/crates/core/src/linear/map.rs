//! Exact linear maps between tensor powers of finite-dimensional spaces.
//!
//! A map `A → B` is a `dim(B) × dim(A)` matrix stored column by column; column
//! `j` is the image of the basis vector `e_j` as a sparse vector. Tensor
//! products use the row-major flat index: `e_i ⊗ e_j` in `A ⊗ B` sits at
//! `i·dim(B) + j`, applied recursively for higher powers. The unit object is
//! the one-dimensional space, so `K ⊗ A` and `A` share their flat indices.

use std::fmt;
use std::ops::Mul;

use super::field::{Field, Scalar};
use super::LinalgError;

/// A sparse column: `(row, value)` pairs sorted by row, no explicit zeros.
pub type SparseColumn = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct LinMap {
    field: Field,
    rows: usize,
    cols: usize,
    columns: Vec<SparseColumn>,
    domain_labels: Option<Vec<String>>,
    codomain_labels: Option<Vec<String>>,
}

/// Exact equality of the matrices. Labels are presentation data and are ignored.
impl PartialEq for LinMap {
    fn eq(&self, other: &LinMap) -> bool {
        self.field == other.field && self.rows == other.rows && self.cols == other.cols && self.columns == other.columns
    }
}

impl Eq for LinMap {}

fn normalize(mut entries: Vec<(usize, Scalar)>) -> SparseColumn {
    if entries.len() > 1 {
        entries.sort_by_key(|(r, _)| *r);
    }
    let mut out: SparseColumn = Vec::with_capacity(entries.len());
    for (r, v) in entries {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = &*lv + &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

impl LinMap {
    pub fn zero(field: Field, codomain_dim: usize, domain_dim: usize) -> LinMap {
        LinMap {
            field,
            rows: codomain_dim,
            cols: domain_dim,
            columns: vec![Vec::new(); domain_dim],
            domain_labels: None,
            codomain_labels: None,
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let one = field.one();
        LinMap {
            field,
            rows: n,
            cols: n,
            columns: (0..n).map(|j| vec![(j, one.clone())]).collect(),
            domain_labels: None,
            codomain_labels: None,
        }
    }

    /// The map sending `e_j` to `e_{images[j]}`.
    pub fn from_basis_map(field: Field, codomain_dim: usize, images: &[usize]) -> Result<LinMap, LinalgError> {
        let one = field.one();
        let mut columns = Vec::with_capacity(images.len());
        for &r in images {
            if r >= codomain_dim {
                return Err(LinalgError::IndexOutOfRange { index: r, bound: codomain_dim });
            }
            columns.push(vec![(r, one.clone())]);
        }
        Ok(LinMap {
            field,
            rows: codomain_dim,
            cols: images.len(),
            columns,
            domain_labels: None,
            codomain_labels: None,
        })
    }

    /// Builds a map from sparse columns. Entries are summed by row and zeros dropped.
    pub fn from_columns(
        field: Field,
        codomain_dim: usize,
        columns: Vec<Vec<(usize, Scalar)>>,
    ) -> Result<LinMap, LinalgError> {
        let mut out = Vec::with_capacity(columns.len());
        for col in columns {
            for (r, v) in &col {
                if *r >= codomain_dim {
                    return Err(LinalgError::IndexOutOfRange { index: *r, bound: codomain_dim });
                }
                if v.field() != field {
                    return Err(LinalgError::FieldMismatch);
                }
            }
            out.push(normalize(col));
        }
        Ok(LinMap {
            field,
            rows: codomain_dim,
            cols: out.len(),
            columns: out,
            domain_labels: None,
            codomain_labels: None,
        })
    }

    /// Builds a map from `(row, col, value)` triples; a repeated position is an error.
    pub fn from_triples(
        field: Field,
        codomain_dim: usize,
        domain_dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<LinMap, LinalgError> {
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); domain_dim];
        for (r, c, v) in triples {
            if c >= domain_dim {
                return Err(LinalgError::IndexOutOfRange { index: c, bound: domain_dim });
            }
            if columns[c].iter().any(|(rr, _)| *rr == r) {
                return Err(LinalgError::DuplicateEntry { row: r, col: c });
            }
            columns[c].push((r, v));
        }
        LinMap::from_columns(field, codomain_dim, columns)
    }

    /// Builds a map from dense rows (`rows[r][c]`).
    pub fn from_rows(field: Field, domain_dim: usize, rows: &[Vec<Scalar>]) -> Result<LinMap, LinalgError> {
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); domain_dim];
        for (r, row) in rows.iter().enumerate() {
            if row.len() != domain_dim {
                return Err(LinalgError::DimensionMismatch { op: "from_rows", expected: domain_dim, found: row.len() });
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    columns[c].push((r, v.clone()));
                }
            }
        }
        LinMap::from_columns(field, rows.len(), columns)
    }

    /// Convenience for small integer matrices given row by row.
    pub fn from_int_rows(field: Field, rows: &[&[i64]]) -> LinMap {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        LinMap::from_rows(field, cols, &dense).expect("rectangular integer matrix")
    }

    pub fn with_domain_labels(mut self, labels: Vec<String>) -> Result<LinMap, LinalgError> {
        if labels.len() != self.cols {
            return Err(LinalgError::LabelLength { expected: self.cols, found: labels.len() });
        }
        self.domain_labels = Some(labels);
        Ok(self)
    }

    pub fn with_codomain_labels(mut self, labels: Vec<String>) -> Result<LinMap, LinalgError> {
        if labels.len() != self.rows {
            return Err(LinalgError::LabelLength { expected: self.rows, found: labels.len() });
        }
        self.codomain_labels = Some(labels);
        Ok(self)
    }

    pub fn domain_labels(&self) -> Option<&[String]> {
        self.domain_labels.as_deref()
    }

    pub fn codomain_labels(&self) -> Option<&[String]> {
        self.codomain_labels.as_deref()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseColumn] {
        &self.columns
    }

    pub fn get(&self, row: usize, col: usize) -> Scalar {
        match self.columns[col].binary_search_by_key(&row, |(r, _)| *r) {
            Ok(k) => self.columns[col][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Nonzero entries as `(row, col, value)`, ordered by column then row.
    pub fn triples(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out.push((*r, c, v.clone()));
            }
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.columns.iter().enumerate().all(|(j, col)| col.len() == 1 && col[0].0 == j && col[0].1.is_one())
    }

    /// Applies the map to a sparse vector of the domain.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseColumn {
        let mut acc = Vec::new();
        for (k, a) in v {
            for (r, b) in &self.columns[*k] {
                acc.push((*r, a * b));
            }
        }
        normalize(acc)
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != f.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != f.rows {
            return Err(LinalgError::DimensionMismatch { op: "compose", expected: self.cols, found: f.rows });
        }
        Ok(LinMap {
            field: self.field,
            rows: self.rows,
            cols: f.cols,
            columns: f.columns.iter().map(|col| self.apply(col)).collect(),
            domain_labels: f.domain_labels.clone(),
            codomain_labels: self.codomain_labels.clone(),
        })
    }

    /// Kronecker product `self ⊗ g` under the row-major flat index.
    pub fn tensor(&self, g: &LinMap) -> LinMap {
        assert_eq!(self.field, g.field, "tensor of maps over different fields");
        let mut columns = Vec::with_capacity(self.cols * g.cols);
        for fc in &self.columns {
            for gc in &g.columns {
                let mut col = Vec::with_capacity(fc.len() * gc.len());
                for (r, a) in fc {
                    for (s, b) in gc {
                        col.push((r * g.rows + s, a * b));
                    }
                }
                // already sorted: r-major, then s ascending
                col.retain(|(_, v): &(usize, Scalar)| !v.is_zero());
                columns.push(col);
            }
        }
        LinMap {
            field: self.field,
            rows: self.rows * g.rows,
            cols: self.cols * g.cols,
            columns,
            domain_labels: tensor_labels(&self.domain_labels, &g.domain_labels),
            codomain_labels: tensor_labels(&self.codomain_labels, &g.codomain_labels),
        }
    }

    fn check_same_shape(&self, other: &LinMap, op: &'static str) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch { op, expected: self.rows, found: other.rows });
        }
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { op, expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.check_same_shape(other, "add")?;
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| normalize(a.iter().chain(b).cloned().collect()))
            .collect();
        Ok(LinMap { columns, ..self.unlabeled_shell() })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|(r, v)| (*r, v * s)).filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        LinMap { columns, ..self.clone() }
    }

    pub fn transpose(&self) -> LinMap {
        let mut columns: Vec<SparseColumn> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                columns[*r].push((c, v.clone()));
            }
        }
        LinMap {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            columns,
            domain_labels: self.codomain_labels.clone(),
            codomain_labels: self.domain_labels.clone(),
        }
    }

    /// `n`-fold composite of an endomorphism; `pow(0)` is the identity.
    pub fn pow(&self, n: usize) -> Result<LinMap, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut acc = LinMap::identity(self.field, self.rows);
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, which: &[usize]) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: which.len(),
            columns: which.iter().map(|&j| self.columns[j].clone()).collect(),
            domain_labels: None,
            codomain_labels: self.codomain_labels.clone(),
        }
    }

    /// Juxtaposes the columns of `self` and `other` (both into the same codomain).
    pub fn hcat(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != other.rows {
            return Err(LinalgError::DimensionMismatch { op: "hcat", expected: self.rows, found: other.rows });
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Ok(LinMap {
            field: self.field,
            rows: self.rows,
            cols: columns.len(),
            columns,
            domain_labels: None,
            codomain_labels: None,
        })
    }

    /// Lowest column index where the two maps differ, if any. Shapes must agree.
    pub fn first_difference(&self, other: &LinMap) -> Result<Option<usize>, LinalgError> {
        self.check_same_shape(other, "compare")?;
        Ok((0..self.cols).find(|&j| self.columns[j] != other.columns[j]))
    }

    fn unlabeled_shell(&self) -> LinMap {
        LinMap {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            columns: Vec::new(),
            domain_labels: None,
            codomain_labels: None,
        }
    }
}

fn tensor_labels(a: &Option<Vec<String>>, b: &Option<Vec<String>>) -> Option<Vec<String>> {
    match (a, b) {
        (Some(a), Some(b)) => Some(a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()),
        _ => None,
    }
}

/// `g * f` is the composite `g ∘ f`. Panics on a shape or field mismatch;
/// use [`LinMap::compose`] where the shapes are not known to agree.
impl Mul for &LinMap {
    type Output = LinMap;
    fn mul(self, f: &LinMap) -> LinMap {
        self.compose(f).unwrap_or_else(|e| panic!("composite of incompatible maps: {e}"))
    }
}

impl Mul<LinMap> for &LinMap {
    type Output = LinMap;
    fn mul(self, f: LinMap) -> LinMap {
        self * &f
    }
}

impl Mul<&LinMap> for LinMap {
    type Output = LinMap;
    fn mul(self, f: &LinMap) -> LinMap {
        &self * f
    }
}

impl Mul for LinMap {
    type Output = LinMap;
    fn mul(self, f: LinMap) -> LinMap {
        &self * &f
    }
}

/// The symmetric braiding `A ⊗ B → B ⊗ A`, sending flat index `i·b + j` to `j·a + i`.
pub fn flip(field: Field, a: usize, b: usize) -> LinMap {
    let images: Vec<usize> = (0..a * b).map(|k| (k % b) * a + k / b).collect();
    LinMap::from_basis_map(field, a * b, &images).expect("flip images are in range")
}

/// Tensor product of a list of maps, left to right.
pub fn tensor_all(maps: &[&LinMap]) -> LinMap {
    let (first, rest) = maps.split_first().expect("tensor of at least one map");
    rest.iter().fold((*first).clone(), |acc, m| acc.tensor(m))
}

/// `tensor![a, b, c]` is `a ⊗ b ⊗ c` for `&LinMap` arguments.
#[macro_export]
macro_rules! tensor {
    ($($m:expr),+ $(,)?) => {
        $crate::linear::tensor_all(&[$(&$m),+])
    };
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn identity_composites() {
        let id2 = LinMap::identity(q(), 2);
        assert_eq!(&id2 * &id2, id2);
        assert!(id2.is_identity());
    }

    #[test]
    fn flip_is_an_involution() {
        let c = flip(q(), 2, 2);
        assert_eq!(&c * &c, LinMap::identity(q(), 4));
        // (0)(1 2)(3)
        let expected = LinMap::from_basis_map(q(), 4, &[0, 2, 1, 3]).unwrap();
        assert_eq!(c, expected);
        assert_eq!(flip(q(), 1, 5), LinMap::identity(q(), 5));
        assert_eq!(&flip(q(), 3, 2) * &flip(q(), 2, 3), LinMap::identity(q(), 6));
    }

    #[test]
    fn tensor_of_identities() {
        let t = LinMap::identity(q(), 2).tensor(&LinMap::identity(q(), 3));
        assert_eq!(t, LinMap::identity(q(), 6));
    }

    #[test]
    fn tensor_on_basis_vectors() {
        let f = LinMap::from_int_rows(q(), &[&[1, 2], &[3, 4]]);
        let g = LinMap::from_int_rows(q(), &[&[0, 1, 5], &[7, 0, 0]]);
        let fg = f.tensor(&g);
        for i in 0..2 {
            for j in 0..3 {
                for r in 0..2 {
                    for s in 0..2 {
                        assert_eq!(fg.get(r * 2 + s, i * 3 + j), &f.get(r, i) * &g.get(s, j));
                    }
                }
            }
        }
    }

    #[test]
    fn compose_checks_shapes() {
        let a = LinMap::zero(q(), 2, 3);
        let b = LinMap::zero(q(), 2, 3);
        assert!(matches!(a.compose(&b), Err(LinalgError::DimensionMismatch { .. })));
        let f5 = LinMap::zero(Field::prime(5).unwrap(), 3, 3);
        assert_eq!(a.compose(&f5), Err(LinalgError::FieldMismatch));
    }

    #[test]
    fn duplicate_triples_are_rejected() {
        let one = q().one();
        let r = LinMap::from_triples(q(), 2, 2, vec![(0, 0, one.clone()), (0, 0, one)]);
        assert_eq!(r, Err(LinalgError::DuplicateEntry { row: 0, col: 0 }));
    }

    #[test]
    fn label_lengths_are_checked() {
        let m = LinMap::identity(q(), 2);
        assert!(m.clone().with_domain_labels(vec!["a".into()]).is_err());
        let m = m.with_domain_labels(vec!["a".into(), "b".into()]).unwrap();
        let t = m.tensor(&m.clone());
        assert_eq!(t.domain_labels().unwrap()[1], "a⊗b");
    }

    #[test]
    fn first_difference_reports_lowest_column() {
        let a = LinMap::from_int_rows(q(), &[&[1, 0, 0], &[0, 1, 0]]);
        let b = LinMap::from_int_rows(q(), &[&[1, 0, 1], &[0, 2, 0]]);
        assert_eq!(a.first_difference(&b).unwrap(), Some(1));
        assert_eq!(a.first_difference(&a).unwrap(), None);
    }
}
