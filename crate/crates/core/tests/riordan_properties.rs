mod common;

use riordan_core::rational::int;
use riordan_core::{a_sequence, RiordanArray, Series, TriangularMatrix};

#[test]
fn to_matrix_matches_column_generating_functions() {
    let mut rng = common::rng(11);
    for n in [0, 1, 4, 8] {
        for _ in 0..10 {
            let t = common::random_array(&mut rng, n);
            assert_eq!(t.to_matrix(), common::brute_matrix(&t));
        }
    }
}

#[test]
fn to_matrix_is_a_homomorphism() {
    let mut rng = common::rng(12);
    for n in 1..=10 {
        for _ in 0..4 {
            let a = common::random_array(&mut rng, n);
            let b = common::random_array(&mut rng, n);
            let product = a.multiply(&b).unwrap();
            assert_eq!(
                product.to_matrix(),
                common::dense_product(&a.to_matrix(), &b.to_matrix())
            );
        }
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = common::rng(13);
    for _ in 0..10 {
        let [a, b, c] = [0, 1, 2].map(|_| common::random_array(&mut rng, 6));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn inverses_on_both_sides() {
    let mut rng = common::rng(14);
    for _ in 0..30 {
        let t = common::random_array(&mut rng, 8);
        let inv = t.inverse();
        assert!(t.multiply(&inv).unwrap().is_identity());
        assert!(inv.multiply(&t).unwrap().is_identity());
        assert_eq!(inv.inverse(), t);
    }
}

#[test]
fn a_sequence_inverts_t_one_phi() {
    let mut rng = common::rng(15);
    for _ in 0..30 {
        let n = 8;
        let phi = common::unit_series(&mut rng, n, 2);
        let a = a_sequence(&phi).unwrap();
        let t = RiordanArray::new(Series::one(n), phi.clone()).unwrap();
        let ta = RiordanArray::new(Series::one(n), a.clone()).unwrap();
        assert!(t.multiply(&ta).unwrap().is_identity());
        // x/A composed with x/phi is x
        let x_over = |s: &Series| s.with_order(n + 1).reciprocal().unwrap().times_x();
        assert_eq!(
            x_over(&a).compose(&x_over(&phi)).unwrap().with_order(n),
            Series::x(n)
        );
    }
}

#[test]
fn diagonal_is_geometric() {
    let mut rng = common::rng(16);
    for _ in 0..20 {
        let t = common::random_array(&mut rng, 7);
        let f0 = t.f().coeff(0);
        let g0 = t.g().coeff(0);
        let ratio = f0 / g0;
        let step = g0.recip();
        let diag = t.to_matrix().diagonal_entries();
        for (n, entry) in diag.iter().enumerate() {
            assert_eq!(entry, &(&ratio * step.pow(n as i32)));
        }
    }
}

#[test]
fn probe_order_screens_diagonal_without_powering() {
    let mut rng = common::rng(17);
    let mut screened = 0;
    for _ in 0..40 {
        let t = common::random_array(&mut rng, 6);
        if !t.diagonal_admits_finite_order() {
            screened += 1;
            assert_eq!(t.probe_order(1000), None);
        }
    }
    assert!(screened > 0);
}

#[test]
fn probe_order_finds_involutions() {
    let mut rng = common::rng(18);
    for _ in 0..10 {
        let t = common::random_involution(&mut rng, 8);
        assert_eq!(t.probe_order(6), Some(2));
    }
    assert_eq!(RiordanArray::pascal(6).probe_order(6), None);
}

#[test]
fn alternating_matrix() {
    let m = RiordanArray::alternating(9);
    let signs: Vec<_> = (0..10).map(|n| int(if n % 2 == 0 { 1 } else { -1 })).collect();
    assert_eq!(m.to_matrix(), TriangularMatrix::diagonal(&signs));
    assert!(m.multiply(&m).unwrap().is_identity());
}

#[test]
fn pascal_is_pseudo_involution_at_order_16() {
    let pm = RiordanArray::pascal(16)
        .multiply(&RiordanArray::alternating(16))
        .unwrap();
    assert!(pm.multiply(&pm).unwrap().is_identity());
    assert_eq!(
        pm,
        RiordanArray::new(
            Series::from_ints(&[-1], 16).unwrap(),
            Series::from_ints(&[-1, 1], 16).unwrap()
        )
        .unwrap()
    );
}
