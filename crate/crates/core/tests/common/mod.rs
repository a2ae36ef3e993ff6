//! Shared generators and independent oracles for integration tests.
#![allow(dead_code)]

use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use riordan_core::rational::{frac, int};
use riordan_core::{
    build_involution, InvolutionParams, Rational, RiordanArray, Series, Sign, TriangularMatrix,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    int(rng.gen_range(-bound..=bound))
}

pub fn unit_or_two(rng: &mut ChaCha8Rng) -> Rational {
    const CHOICES: [i64; 4] = [1, -1, 2, -2];
    int(CHOICES[rng.gen_range(0..4)])
}

/// Coefficients in `[-bound, bound]`, constant term in `{±1, ±2}`.
pub fn unit_series(rng: &mut ChaCha8Rng, order: usize, bound: i64) -> Series {
    let mut c = vec![unit_or_two(rng)];
    c.extend((1..=order).map(|_| small(rng, bound)));
    Series::new(c, order).unwrap()
}

/// Zero constant term, linear term in `{±1, ±2}`.
pub fn admissible_series(rng: &mut ChaCha8Rng, order: usize, bound: i64) -> Series {
    let mut c = vec![Rational::zero(), unit_or_two(rng)];
    c.extend((2..=order).map(|_| small(rng, bound)));
    Series::new(c, order).unwrap()
}

pub fn odd_series(rng: &mut ChaCha8Rng, order: usize, bound: i64) -> Series {
    Series::from_fn(order, |n| {
        if n % 2 == 1 {
            small(rng, bound)
        } else {
            Rational::zero()
        }
    })
}

pub fn even_series(rng: &mut ChaCha8Rng, order: usize, bound: i64) -> Series {
    let mut s = Series::from_fn(order, |n| {
        if n % 2 == 0 {
            small(rng, bound)
        } else {
            Rational::zero()
        }
    });
    if s.coeff(0).is_zero() {
        let mut c = s.into_coeffs();
        c[0] = unit_or_two(rng);
        s = Series::new(c, order).unwrap();
    }
    s
}

pub fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_params(rng: &mut ChaCha8Rng, order: usize) -> InvolutionParams {
    let phi = unit_series(rng, order, 2);
    let u = odd_series(rng, order, 2);
    InvolutionParams::new(phi, u, random_sign(rng)).unwrap()
}

pub fn random_involution(rng: &mut ChaCha8Rng, order: usize) -> RiordanArray {
    build_involution(&random_params(rng, order)).unwrap()
}

pub fn random_array(rng: &mut ChaCha8Rng, order: usize) -> RiordanArray {
    RiordanArray::new(unit_series(rng, order, 2), unit_series(rng, order, 2)).unwrap()
}

/// Lagrange inversion: `[x^n] s' = (1/n) [x^(n-1)] (x/s)^n`.
pub fn lagrange_inverse(s: &Series) -> Series {
    let order = s.order();
    // x/s through x^(order-1) only needs s_1..s_order
    let x_over_s = s.divide_by_x().unwrap().reciprocal().unwrap();
    let mut power = Series::one(order);
    let mut out = vec![Rational::zero(); order + 1];
    for (n, slot) in out.iter_mut().enumerate().skip(1) {
        power = power.mul(&x_over_s).unwrap();
        *slot = power.coeff(n - 1) * frac(1, n as i64);
    }
    Series::new(out, order).unwrap()
}

/// Dense square product of two lower-triangular matrices, written out
/// without the library's triangular product.
pub fn dense_product(a: &TriangularMatrix, b: &TriangularMatrix) -> TriangularMatrix {
    let size = a.order() + 1;
    let mut out = vec![vec![Rational::zero(); size]; size];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            for k in 0..size {
                *cell += a.get(i, k) * b.get(k, j);
            }
        }
    }
    TriangularMatrix::from_square(out).unwrap()
}

/// Column `k` of `T(f|g)` by brute force: `f * x^k / g^(k+1)`.
pub fn brute_matrix(t: &RiordanArray) -> TriangularMatrix {
    let n = t.order();
    let g_inv = t.g().reciprocal().unwrap();
    let mut square = vec![vec![Rational::zero(); n + 1]; n + 1];
    for k in 0..=n {
        let col = t
            .f()
            .mul(&Series::x(n).pow(k))
            .unwrap()
            .mul(&g_inv.pow(k + 1))
            .unwrap();
        for (i, row) in square.iter_mut().enumerate() {
            row[k] = col.coeff(i).clone();
        }
    }
    TriangularMatrix::from_square(square).unwrap()
}
