//! Gaussian elimination over the exact field: rank, bases, splittings,
//! equalizers and coequalizers.
//!
//! Every basis is read off the reduced row echelon form with left-to-right
//! pivoting, so all results are deterministic.

use super::field::Scalar;
use super::map::LinMap;
use super::LinalgError;

/// Reduced row echelon form of a dense matrix.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Nonzero rows of the reduced form, one per pivot.
    pub rows: Vec<Vec<Scalar>>,
    /// Pivot column of each row, increasing.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn of(m: &LinMap) -> Echelon {
        reduce(m.to_dense(), m.domain_dim())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn reduce(mut a: Vec<Vec<Scalar>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for x in a[r].iter_mut().skip(c) {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots, cols }
}

pub fn rank(f: &LinMap) -> usize {
    Echelon::of(f).rank()
}

/// Columns of `f` at the pivot positions: a basis of the image, as a map
/// `K^rank → codomain`.
pub fn image_basis(f: &LinMap) -> LinMap {
    let e = Echelon::of(f);
    f.select_columns(&e.pivots)
}

/// Basis of `ker f` as an injective map `K^k → domain`. One vector per free
/// column, with that coordinate 1 and the other free coordinates 0.
pub fn kernel_basis(f: &LinMap) -> LinMap {
    let field = f.field();
    let n = f.domain_dim();
    let e = Echelon::of(f);
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let one = field.one();
    let columns: Vec<Vec<(usize, Scalar)>> = (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut col = vec![(free, one.clone())];
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                if !row[free].is_zero() {
                    col.push((p, -&row[free]));
                }
            }
            col
        })
        .collect();
    LinMap::from_columns(field, n, columns).expect("kernel vectors lie in the domain")
}

/// A split idempotent `e = section ∘ retraction` with `retraction ∘ section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub section: LinMap,
    pub retraction: LinMap,
}

impl Splitting {
    pub fn rank(&self) -> usize {
        self.section.domain_dim()
    }
}

/// Splits an idempotent through its image: `section` is the pivot columns
/// of `e` and `retraction` the nonzero rows of its reduced echelon form, so
/// `e = section ∘ retraction` is the rank factorization.
pub fn split_idempotent(e: &LinMap) -> Result<Splitting, LinalgError> {
    if !e.is_square() {
        return Err(LinalgError::NotSquare { rows: e.codomain_dim(), cols: e.domain_dim() });
    }
    if &(e * e) != e {
        return Err(LinalgError::NotIdempotent);
    }
    let ech = Echelon::of(e);
    let section = e.select_columns(&ech.pivots);
    let retraction = LinMap::from_rows(e.field(), e.domain_dim(), &ech.rows)?;
    Ok(Splitting { section, retraction })
}

/// Injective map onto `ker(f − g)`.
pub fn equalizer(f: &LinMap, g: &LinMap) -> Result<LinMap, LinalgError> {
    Ok(kernel_basis(&f.sub(g)?))
}

/// Surjection with kernel `im(f − g)`: the transpose of a kernel basis of `(f − g)ᵀ`.
pub fn coequalizer(f: &LinMap, g: &LinMap) -> Result<LinMap, LinalgError> {
    Ok(kernel_basis(&f.sub(g)?.transpose()).transpose())
}

/// Whether two maps into the same space have equal images.
pub fn same_image(a: &LinMap, b: &LinMap) -> Result<bool, LinalgError> {
    let ra = rank(a);
    if ra != rank(b) {
        return Ok(false);
    }
    Ok(rank(&a.hcat(b)?) == ra)
}

/// Inverse of a square matrix by Gauss–Jordan elimination.
pub fn inverse(f: &LinMap) -> Result<LinMap, LinalgError> {
    if !f.is_square() {
        return Err(LinalgError::NotSquare { rows: f.codomain_dim(), cols: f.domain_dim() });
    }
    let n = f.domain_dim();
    let field = f.field();
    let aug = f.hcat(&LinMap::identity(field, n))?;
    let e = reduce(aug.to_dense(), 2 * n);
    // the augmented matrix always has rank n; f is invertible iff every pivot lies in the left block
    if e.pivots.iter().any(|&p| p >= n) {
        return Err(LinalgError::NotInvertible);
    }
    let rows: Vec<Vec<Scalar>> = e.rows.iter().map(|r| r[n..].to_vec()).collect();
    LinMap::from_rows(field, n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(rank(&LinMap::identity(q(), 5)), 5);
        assert_eq!(rank(&LinMap::zero(q(), 3, 4)), 0);
    }

    #[test]
    fn split_of_coordinate_projection() {
        let e = LinMap::from_int_rows(q(), &[&[1, 0], &[0, 0]]);
        let s = split_idempotent(&e).unwrap();
        assert_eq!(s.section, LinMap::from_int_rows(q(), &[&[1], &[0]]));
        assert_eq!(s.retraction, LinMap::from_int_rows(q(), &[&[1, 0]]));
    }

    #[test]
    fn split_of_identity() {
        let id = LinMap::identity(q(), 3);
        let s = split_idempotent(&id).unwrap();
        assert_eq!(s.section, id);
        assert_eq!(s.retraction, id);
    }

    #[test]
    fn split_rejects_non_idempotent() {
        let e = LinMap::from_int_rows(q(), &[&[2, 0], &[0, 0]]);
        assert_eq!(split_idempotent(&e), Err(LinalgError::NotIdempotent));
    }

    #[test]
    fn equalizer_trivial_cases() {
        let f = LinMap::from_int_rows(q(), &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(equalizer(&f, &f).unwrap(), LinMap::identity(q(), 3));
        let id = LinMap::identity(q(), 3);
        let z = LinMap::zero(q(), 3, 3);
        let eq = equalizer(&id, &z).unwrap();
        assert_eq!(eq.domain_dim(), 0);
        assert_eq!(eq.codomain_dim(), 3);
    }

    #[test]
    fn coequalizer_trivial_cases() {
        let f = LinMap::from_int_rows(q(), &[&[1, 2, 3], &[0, 1, 1]]);
        assert_eq!(coequalizer(&f, &f).unwrap(), LinMap::identity(q(), 2));
        let id = LinMap::identity(q(), 3);
        let z = LinMap::zero(q(), 3, 3);
        let co = coequalizer(&id, &z).unwrap();
        assert_eq!(co.codomain_dim(), 0);
        assert_eq!(co.domain_dim(), 3);
    }

    #[test]
    fn inverse_roundtrip_and_singular() {
        let a = LinMap::from_int_rows(q(), &[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(&a * &inv, LinMap::identity(q(), 2));
        let s = LinMap::from_int_rows(q(), &[&[1, 2], &[2, 4]]);
        assert_eq!(inverse(&s), Err(LinalgError::NotInvertible));
    }

    #[test]
    fn kernel_over_prime_field() {
        // x + y = 0 over F_2 has kernel spanned by (1, 1)
        let f2 = Field::prime(2).unwrap();
        let f = LinMap::from_int_rows(f2, &[&[1, 1]]);
        let k = kernel_basis(&f);
        assert_eq!(k, LinMap::from_int_rows(f2, &[&[1], &[1]]));
    }
}
