use whq::constructors::{
    associativity_witness, from_bigroupoid, smallest_nonassociative_ip_loop, BigroupoidPresentation, ConstructError,
    GroupoidPresentation, LoopTable,
};
use whq::corpus::corpus;
use whq::linear::{same_image, Field};

/// Every reduced Latin square of order `n` (first row and column `0..n`).
fn reduced_latin_squares(n: usize, visit: &mut impl FnMut(&[Vec<usize>])) {
    fn fill(t: &mut Vec<Vec<usize>>, n: usize, cell: usize, visit: &mut impl FnMut(&[Vec<usize>])) {
        if cell == n * n {
            visit(t);
            return;
        }
        let (r, c) = (cell / n, cell % n);
        if r == 0 || c == 0 {
            t[r][c] = r + c;
            return fill(t, n, cell + 1, visit);
        }
        for v in 0..n {
            if (0..c).all(|j| t[r][j] != v) && (0..r).all(|i| t[i][c] != v) {
                t[r][c] = v;
                fill(t, n, cell + 1, visit);
            }
        }
        t[r][c] = usize::MAX;
    }
    let mut t = vec![vec![usize::MAX; n]; n];
    fill(&mut t, n, 0, visit);
}

fn has_inverse_property(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).any(|x| (0..n).all(|b| t[x][t[a][b]] == b && t[t[b][a]][x] == b)))
}

fn associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

#[test]
fn enumerator_counts_reduced_latin_squares() {
    let expected = [1, 1, 1, 4, 56, 9408];
    for (n, &want) in (1..=6).zip(&expected) {
        let mut count = 0;
        reduced_latin_squares(n, &mut |_| count += 1);
        assert_eq!(count, want, "order {n}");
    }
}

#[test]
fn inverse_property_loops_up_to_order_six_are_groups() {
    for n in 1..=6 {
        let mut ip = 0;
        reduced_latin_squares(n, &mut |t| {
            if has_inverse_property(t) {
                ip += 1;
                assert!(associative(t), "order {n}: nonassociative IP loop {t:?}");
                let l = LoopTable::new(t.to_vec(), 0, None).unwrap();
                assert!(l.ip_inverses().is_ok());
                assert_eq!(associativity_witness(&l), None);
            }
        });
        assert!(ip > 0);
    }
    assert!(smallest_nonassociative_ip_loop(6).is_none());
}

#[test]
fn order_seven_loop_is_a_nonassociative_ip_loop() {
    let l = smallest_nonassociative_ip_loop(7).expect("an order-7 example exists");
    assert_eq!(l.order(), 7);
    let t = l.table().to_vec();
    assert!(has_inverse_property(&t));
    assert!(!associative(&t));
    let [a, b, c] = associativity_witness(&l).unwrap();
    assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
}

#[test]
fn octonion_loop_is_moufang_and_nonassociative() {
    let l = LoopTable::octonion();
    let t = l.table().to_vec();
    assert_eq!(t.len(), 16);
    assert!(has_inverse_property(&t));
    assert!(!associative(&t));
    // Moufang: z(x(zy)) = ((zx)z)y
    for x in 0..16 {
        for y in 0..16 {
            for z in 0..16 {
                assert_eq!(t[z][t[x][t[z][y]]], t[t[t[z][x]][z]][y]);
            }
        }
    }
}

#[test]
fn non_ip_loop_is_rejected() {
    // order-5 loop without the inverse property
    let t =
        vec![vec![0, 1, 2, 3, 4], vec![1, 0, 3, 4, 2], vec![2, 4, 0, 1, 3], vec![3, 2, 4, 0, 1], vec![4, 3, 1, 2, 0]];
    assert!(!has_inverse_property(&t));
    let l = LoopTable::new(t, 0, None).unwrap();
    assert!(matches!(l.ip_inverses(), Err(ConstructError::NotIPLoop { .. })));
    assert!(matches!(LoopTable::new(vec![vec![0, 1], vec![0, 1]], 0, None), Err(ConstructError::NotLoop(_))));
}

#[test]
fn quotient_agrees_with_direct_constructions() {
    for field in [Field::Rationals, Field::prime(5).unwrap()] {
        let groupoids = [
            GroupoidPresentation::pair(1).unwrap(),
            GroupoidPresentation::pair(3).unwrap(),
            GroupoidPresentation::from_group(&LoopTable::cyclic(4), "").unwrap(),
        ];
        for g in &groupoids {
            let q = from_bigroupoid(&BigroupoidPresentation::from_groupoid(g), field).unwrap();
            assert_eq!(q.ideal_dim, 0);
            assert_eq!(q.whq, g.build(field).unwrap());
            assert_eq!(q.whq.labels(), g.build(field).unwrap().labels());
        }
        for l in [LoopTable::cyclic(3), smallest_nonassociative_ip_loop(7).unwrap()] {
            let q = from_bigroupoid(&BigroupoidPresentation::from_loop(&l, "").unwrap(), field).unwrap();
            assert_eq!(q.ideal_dim, 0);
            assert_eq!(q.whq, l.build(field).unwrap());
        }
    }
}

#[test]
fn pair_groupoid_is_the_matrix_algebra() {
    // μ(a⊗b) is the unique arrow s(b) → t(a) when s(a) = t(b), else 0
    let n = 3;
    let h = GroupoidPresentation::pair(n).unwrap().build(Field::Rationals).unwrap();
    let g = GroupoidPresentation::pair(n).unwrap();
    let t = g.table();
    for a in 0..n * n {
        for b in 0..n * n {
            let (ca, cb) = (&t.cells()[a], &t.cells()[b]);
            let col = h.mul().column(a * n * n + b);
            if ca.source == cb.target {
                let want = t.cells().iter().position(|c| c.source == cb.source && c.target == ca.target).unwrap();
                assert_eq!(col.len(), 1);
                assert_eq!(col[0].0, want);
                assert!(col[0].1.is_one());
            } else {
                assert!(col.is_empty());
            }
        }
    }
}

#[test]
fn target_and_source_maps_on_cell_algebras() {
    for ex in corpus() {
        let p = &ex.presentation;
        let q = from_bigroupoid(p, ex.whq.field()).unwrap();
        let h = &q.whq;
        let t = p.table();
        let class = |f: usize| q.class_of[f].unwrap();
        for (f, cell) in t.cells().iter().enumerate() {
            let l = h.pi_l().column(class(f));
            let r = h.pi_r().column(class(f));
            assert_eq!(l.len(), 1, "{}", ex.name);
            assert_eq!(l[0].0, class(t.identities()[cell.target]), "{}: Π^L of {}", ex.name, cell.name);
            assert!(l[0].1.is_one());
            assert_eq!(r.len(), 1);
            assert_eq!(r[0].0, class(t.identities()[cell.source]), "{}: Π^R of {}", ex.name, cell.name);
            assert!(r[0].1.is_one());
        }
        let mut object_classes: Vec<usize> = t.identities().iter().map(|&i| class(i)).collect();
        object_classes.sort_unstable();
        object_classes.dedup();
        let sub_l = h.subobject_l().unwrap();
        let sub_r = h.subobject_r().unwrap();
        assert_eq!(sub_l.inclusion.domain_dim(), object_classes.len(), "{}", ex.name);
        assert!(same_image(&sub_l.inclusion, &sub_r.inclusion).unwrap(), "{}", ex.name);
    }
}

#[test]
fn invalid_presentations_are_rejected() {
    // an "inverse" running the wrong way
    let err = GroupoidPresentation::from_names(
        &["x", "y"],
        &[("1x", "x", "x"), ("1y", "y", "y"), ("a", "x", "y")],
        &[("x", "1x"), ("y", "1y")],
        &[("1x", "1x", "1x"), ("1y", "1y", "1y"), ("a", "1x", "a"), ("1y", "a", "a")],
        &[("1x", "1x"), ("1y", "1y"), ("a", "a")],
    );
    assert!(err.is_err());
    // no identity for x
    let err = BigroupoidPresentation::from_names(
        &["x"],
        &[("1x", "x", "x")],
        &[],
        &[("1x", "1x", "1x")],
        &[("1x", "1x")],
        &[],
    );
    assert!(matches!(err, Err(ConstructError::InvalidPresentation(_))));
}
