use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use whq::linear::{
    coequalizer, equalizer, flip, image_basis, inverse, kernel_basis, rank, same_image, split_idempotent, Field,
    LinMap, LinalgError,
};
use whq::tensor;

fn q() -> Field {
    Field::Rationals
}

fn f3() -> Field {
    Field::prime(3).unwrap()
}

fn int_map(field: Field, rows: &[Vec<i64>]) -> LinMap {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    LinMap::from_int_rows(field, &refs)
}

/// Dense rank over ℚ by textbook elimination.
fn dense_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let k = &a[i][c] / &a[r][c];
                let pivot = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot) {
                    *x -= &k * p;
                }
            }
        }
        r += 1;
    }
    r
}

/// `|ker f|` over 𝔽₃ by enumerating every vector.
fn brute_kernel_size_f3(rows: &[Vec<i64>]) -> usize {
    let n = rows[0].len();
    let mut count = 0;
    for code in 0..3usize.pow(n as u32) {
        let v: Vec<i64> = (0..n).map(|i| ((code / 3usize.pow(i as u32)) % 3) as i64).collect();
        if rows.iter().all(|r| r.iter().zip(&v).map(|(a, b)| a * b).sum::<i64>().rem_euclid(3) == 0) {
            count += 1;
        }
    }
    count
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

#[test]
fn rank_of_known_matrices() {
    let m = int_map(q(), &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
    assert_eq!(rank(&m), 2);
    // over 𝔽₃ the rows (1,1) and (1,−2) coincide
    let m = int_map(f3(), &[vec![1, 1], vec![1, -2]]);
    assert_eq!(rank(&m), 1);
    assert_eq!(rank(&int_map(q(), &[vec![1, 1], vec![1, -2]])), 2);
}

#[test]
fn singular_matrix_has_no_inverse() {
    let m = int_map(q(), &[vec![1, 2], vec![2, 4]]);
    assert_eq!(inverse(&m), Err(LinalgError::NotInvertible));
}

#[test]
fn scalars_parse_exactly() {
    let f5 = Field::prime(5).unwrap();
    assert_eq!(f5.parse("3/2").unwrap(), f5.from_i64(4));
    assert_eq!(f5.parse("4 mod 5").unwrap(), f5.from_i64(-1));
    assert!(f5.parse("1 mod 7").is_err());
    assert!(f5.parse("1/5").is_err());
    assert_eq!(q().parse("-6/4").unwrap().to_string(), "-3/2");
    assert!(q().parse("1 mod 5").is_err());
    assert!(Field::prime(6).is_err());
}

#[test]
fn flip_swaps_tensor_factors() {
    let a = int_map(q(), &[vec![1, 2], vec![0, 1]]);
    let b = int_map(q(), &[vec![3, 0, 1]]);
    // c_{U,V}: U⊗V → V⊗U
    let lhs = &flip(q(), 1, 2) * &tensor![a, b];
    let rhs = &tensor![b, a] * &flip(q(), 2, 3);
    assert_eq!(lhs, rhs);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha, ..ProptestConfig::default() })]

    #[test]
    fn rank_matches_dense_oracle(rows in matrix(4, 5)) {
        prop_assert_eq!(rank(&int_map(q(), &rows)), dense_rank(&rows));
    }

    #[test]
    fn kernel_size_over_f3_matches_enumeration(rows in matrix(3, 4)) {
        let m = int_map(f3(), &rows);
        let k = kernel_basis(&m);
        prop_assert_eq!(3usize.pow(k.domain_dim() as u32), brute_kernel_size_f3(&rows));
        prop_assert!((&m * &k).is_zero());
        prop_assert_eq!(rank(&k), k.domain_dim());
    }

    #[test]
    fn rank_nullity(rows in matrix(4, 6)) {
        let m = int_map(q(), &rows);
        prop_assert_eq!(rank(&m) + kernel_basis(&m).domain_dim(), 6);
        prop_assert_eq!(image_basis(&m).domain_dim(), rank(&m));
        prop_assert!(same_image(&image_basis(&m), &m).unwrap());
    }

    #[test]
    fn composition_is_associative(a in matrix(2, 3), b in matrix(3, 3), c in matrix(3, 2)) {
        let (a, b, c) = (int_map(q(), &a), int_map(q(), &b), int_map(q(), &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn tensor_interchange(a in matrix(2, 2), b in matrix(2, 3), c in matrix(2, 2), d in matrix(3, 2)) {
        let (a, b, c, d) = (int_map(q(), &a), int_map(q(), &b), int_map(q(), &c), int_map(q(), &d));
        prop_assert_eq!(&tensor![a, b] * &tensor![c, d], tensor![&a * &c, &b * &d]);
    }

    #[test]
    fn tensor_is_associative(a in matrix(2, 2), b in matrix(1, 2), c in matrix(2, 1)) {
        let (a, b, c) = (int_map(q(), &a), int_map(q(), &b), int_map(q(), &c));
        prop_assert_eq!(a.tensor(&b).tensor(&c), a.tensor(&b.tensor(&c)));
    }

    #[test]
    fn inverse_inverts(rows in matrix(3, 3)) {
        let m = int_map(q(), &rows);
        match inverse(&m) {
            Ok(inv) => {
                prop_assert!((&m * &inv).is_identity());
                prop_assert!((&inv * &m).is_identity());
            }
            Err(_) => prop_assert!(dense_rank(&rows) < 3),
        }
    }

    /// `e = s∘(r∘s)⁻¹∘r` is idempotent for any `s`, `r` with `r∘s` invertible.
    #[test]
    fn idempotents_split_through_their_image(s in matrix(4, 2), r in matrix(2, 4)) {
        let (s, r) = (int_map(q(), &s), int_map(q(), &r));
        if let Ok(w) = inverse(&(&r * &s)) {
            let e = &(&s * &w) * &r;
            prop_assert_eq!(&e * &e, e.clone());
            let sp = split_idempotent(&e).unwrap();
            prop_assert_eq!(&sp.section * &sp.retraction, e.clone());
            prop_assert!((&sp.retraction * &sp.section).is_identity());
            prop_assert_eq!(sp.section.domain_dim(), 2);
        }
    }

    #[test]
    fn equalizer_and_coequalizer_universality(f in matrix(3, 4), g in matrix(3, 4)) {
        let (f, g) = (int_map(q(), &f), int_map(q(), &g));
        let e = equalizer(&f, &g).unwrap();
        prop_assert_eq!(&f * &e, &g * &e);
        let c = coequalizer(&f, &g).unwrap();
        prop_assert_eq!(&c * &f, &c * &g);
        // both are as large as possible
        let diff = f.sub(&g).unwrap();
        prop_assert_eq!(e.domain_dim(), 4 - rank(&diff));
        prop_assert_eq!(c.codomain_dim(), 3 - rank(&diff));
    }
}

#[test]
fn non_idempotent_is_rejected() {
    let m = int_map(q(), &[vec![1, 1], vec![0, 0]]);
    assert!(split_idempotent(&m).is_ok());
    let m = int_map(q(), &[vec![2, 0], vec![0, 0]]);
    assert_eq!(split_idempotent(&m).unwrap_err(), LinalgError::NotIdempotent);
}
