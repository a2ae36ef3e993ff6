//! Hadamard-weighted polynomial sequences and umbral composition.
//!
//! A polynomial sequence `p_0..p_N` is stored as its lower-triangular
//! coefficient matrix (row `n` holds the coefficients of `p_n`). Weighting
//! by a series `h` with all `h_n != 0` multiplies column `k` by `h_k`.
//!
//! The weighting convention here multiplies the `k`-th coefficient of every
//! polynomial by `h_k`; some of the literature instead scales the whole
//! `n`-th polynomial, which differs by a Hadamard factor.
//!
//! Umbral composition `p #_h q` substitutes `q_k / h_k` for `x^k` in each
//! `p_n`. On matrices this is `P * diag(1/h) * Q`, so `e_n = h_n x^n` is
//! neutral and `#_h` on weighted sequences mirrors the product of the
//! underlying Riordan matrices.

use num::Zero;

use crate::error::{check_orders, Error, Result};
use crate::fps::Series;
use crate::rational::{self, Rational};
use crate::riordan::{RiordanArray, TriangularMatrix};

/// A series with every coefficient through its order nonzero.
///
/// Nonvanishing is only checked up to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight {
    h: Series,
}

impl Weight {
    pub fn new(h: Series) -> Result<Self> {
        if let Some(n) = h.coeffs().iter().position(Zero::is_zero) {
            return Err(Error::precondition(format!(
                "weight coefficient h_{n} must be nonzero"
            )));
        }
        Ok(Weight { h })
    }

    /// `h_n = 1`
    pub fn ones(order: usize) -> Self {
        Weight {
            h: Series::geometric(order),
        }
    }

    /// `h_n = 1/n!`, i.e. `h = e^x`.
    pub fn exp(order: usize) -> Self {
        Weight {
            h: Series::exponential(order),
        }
    }

    /// `h_n = 1/(n+1)`
    pub fn harmonic(order: usize) -> Self {
        Weight {
            h: Series::from_fn(order, |n| rational::frac(1, n as i64 + 1)),
        }
    }

    /// Looks up `"ones"`, `"exp"` or `"harmonic"`.
    pub fn preset(name: &str, order: usize) -> Result<Self> {
        match name {
            "ones" => Ok(Weight::ones(order)),
            "exp" => Ok(Weight::exp(order)),
            "harmonic" => Ok(Weight::harmonic(order)),
            _ => Err(Error::invalid(format!(
                "unknown weight preset {name:?} (expected ones, exp or harmonic)"
            ))),
        }
    }

    pub fn series(&self) -> &Series {
        &self.h
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    fn reciprocals(&self) -> Vec<Rational> {
        self.h.coeffs().iter().map(|c| c.recip()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    matrix: TriangularMatrix,
}

impl PolySequence {
    pub fn from_matrix(matrix: TriangularMatrix) -> Self {
        PolySequence { matrix }
    }

    /// `p_n(x) = x^n`
    pub fn monomials(order: usize) -> Self {
        PolySequence::from_matrix(TriangularMatrix::identity(order))
    }

    /// The neutral element `e_n(x) = h_n x^n`.
    pub fn neutral(h: &Weight) -> Self {
        PolySequence::from_matrix(TriangularMatrix::diagonal(h.series().coeffs()))
    }

    /// Sequence whose coefficient matrix is the Riordan matrix of `t`.
    pub fn from_riordan(t: &RiordanArray) -> Self {
        PolySequence::from_matrix(t.to_matrix())
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn matrix(&self) -> &TriangularMatrix {
        &self.matrix
    }

    /// Coefficients of `p_n`, lowest degree first.
    pub fn polynomial(&self, n: usize) -> &[Rational] {
        self.matrix.row(n)
    }

    /// Every `p_n` has exact degree `n`.
    pub fn is_riordan_type(&self) -> bool {
        self.matrix.diagonal_entries().iter().all(|c| !c.is_zero())
    }

    /// `p_n * h` (Hadamard) for every `n`.
    pub fn weight(&self, h: &Weight) -> Result<PolySequence> {
        check_orders(self.order(), h.order())?;
        Ok(PolySequence::from_matrix(
            self.matrix.scale_columns(h.series().coeffs()),
        ))
    }

    pub fn unweight(&self, h: &Weight) -> Result<PolySequence> {
        check_orders(self.order(), h.order())?;
        Ok(PolySequence::from_matrix(
            self.matrix.scale_columns(&h.reciprocals()),
        ))
    }

    /// `p #_h q`: row `n` of the result is `sum_k (p_{n,k} / h_k) q_k(x)`.
    pub fn umbral_compose(&self, q: &PolySequence, h: &Weight) -> Result<PolySequence> {
        check_orders(self.order(), q.order())?;
        check_orders(self.order(), h.order())?;
        let n = self.order();
        let inv = h.reciprocals();
        let mut rows = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = vec![Rational::zero(); i + 1];
            for (k, c) in self.polynomial(i).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let factor = c * &inv[k];
                for (j, qc) in q.polynomial(k).iter().enumerate() {
                    row[j] += &factor * qc;
                }
            }
            rows.push(row);
        }
        Ok(PolySequence::from_matrix(TriangularMatrix::from_rows(rows)?))
    }

    /// Left-associated `p #_h p #_h ... #_h p` with `times` factors.
    pub fn n_fold(&self, times: usize, h: &Weight) -> Result<PolySequence> {
        if times == 0 {
            return Err(Error::invalid("n-fold composition needs at least one factor"));
        }
        check_orders(self.order(), h.order())?;
        let mut acc = self.clone();
        for _ in 1..times {
            acc = acc.umbral_compose(self, h)?;
        }
        Ok(acc)
    }

    /// Whether `p_n = h_n x^n` for every `n`.
    pub fn is_neutral(&self, h: &Weight) -> bool {
        self.order() == h.order() && *self == PolySequence::neutral(h)
    }
}

/// Classical Laguerre polynomials `L_0..L_N`: entry `(n, k)` is
/// `(-1)^k C(n, k) / k!`.
pub fn laguerre(order: usize) -> PolySequence {
    let rows = (0..=order)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let sign = rational::int(if k % 2 == 0 { 1 } else { -1 });
                    sign * rational::binomial(n, k) / rational::factorial(k)
                })
                .collect()
        })
        .collect();
    PolySequence::from_matrix(TriangularMatrix::from_rows(rows).expect("triangular"))
}

/// Evaluates both sides of the correspondence for `d` and `times`:
/// whether the `times`-fold `#_h` power of the weighted sequence of `d` is
/// neutral, and whether `d^times` is the identity matrix.
///
/// The group side multiplies in the Riordan group and compares the
/// resulting matrix with the identity, so both sides see the same
/// `(N+1) x (N+1)` window. The two flags agree for every input.
pub fn prop1_equivalence(d: &RiordanArray, times: usize, h: &Weight) -> Result<(bool, bool)> {
    check_orders(d.order(), h.order())?;
    let weighted = PolySequence::from_riordan(d).weight(h)?;
    let sheffer_side = weighted.n_fold(times, h)?.is_neutral(h);
    let group_side = d.pow(times).to_matrix().is_identity();
    Ok((sheffer_side, group_side))
}
