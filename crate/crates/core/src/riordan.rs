//! Riordan arrays in `T(f|g)` coordinates.
//!
//! Column `k` of `T(f|g)` has generating function `(f/g) * (x/g)^k`, so the
//! classical pair is `d = f/g`, `h = x/g`. A `RiordanArray` of order `N`
//! stores `f` and `g` through `x^N`, which pins down `d` through `x^N` and
//! `h` through `x^(N+1)`. Products, inverses and powers are computed on
//! that pair and are exact at the stored order. Two arrays are equal when
//! their `f` and `g` agree coefficient-wise; this is slightly finer than
//! comparing the `(N+1) x (N+1)` matrices, which never see `h_(N+1)`.
//!
//! A check such as "T is an involution" therefore certifies `T^2 = I` only
//! at the working order; larger orders can always be requested.

use num::{One, Zero};

use crate::error::{check_orders, Error, Result};
use crate::fps::Series;
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    f: Series,
    g: Series,
}

impl RiordanArray {
    pub fn new(f: Series, g: Series) -> Result<Self> {
        check_orders(f.order(), g.order())?;
        if f.coeff(0).is_zero() {
            return Err(Error::precondition(
                "f constant term must be nonzero",
            ));
        }
        if g.coeff(0).is_zero() {
            return Err(Error::precondition(
                "g constant term must be nonzero",
            ));
        }
        Ok(RiordanArray { f, g })
    }

    /// `I = T(1|1)`
    pub fn identity(order: usize) -> Self {
        RiordanArray {
            f: Series::one(order),
            g: Series::one(order),
        }
    }

    /// `-I = T(-1|1)`
    pub fn minus_identity(order: usize) -> Self {
        RiordanArray {
            f: Series::constant(-rational::one(), order),
            g: Series::one(order),
        }
    }

    /// Pascal's triangle, `T(1|1-x)`.
    pub fn pascal(order: usize) -> Self {
        let g = Series::from_ints(&[1, -1], order.max(1))
            .expect("fits")
            .with_order(order);
        RiordanArray {
            f: Series::one(order),
            g,
        }
    }

    /// `M = T(-1|-1)`, the diagonal matrix `diag((-1)^n)`.
    pub fn alternating(order: usize) -> Self {
        let minus_one = Series::constant(-rational::one(), order);
        RiordanArray {
            f: minus_one.clone(),
            g: minus_one,
        }
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    /// `d = f/g` at order `N`.
    pub fn d(&self) -> Series {
        self.f.div(&self.g).expect("g_0 != 0 by construction")
    }

    /// `h = x/g` at order `N + 1`. The padded coefficient `g_(N+1)` only
    /// reaches `h_(N+2)`, so the result is exact.
    pub fn h_extended(&self) -> Series {
        let n = self.order();
        self.g
            .with_order(n + 1)
            .reciprocal()
            .expect("g_0 != 0 by construction")
            .times_x()
    }

    /// `h = x/g` at order `N`.
    pub fn h(&self) -> Series {
        self.h_extended().with_order(self.order())
    }

    /// Rebuilds `T(f|g)` from `d` (order `N`) and `h` (order `N + 1`) via
    /// `g = x/h`, `f = d * g`.
    pub fn from_dh(d: &Series, h: &Series) -> Result<Self> {
        let n = d.order();
        check_orders(n + 1, h.order())?;
        if d.coeff(0).is_zero() {
            return Err(Error::precondition("d constant term must be nonzero"));
        }
        if !h.coeff(0).is_zero() || h.coeff(1).is_zero() {
            return Err(Error::precondition(
                "h must have zero constant term and nonzero linear term",
            ));
        }
        let g = h.divide_by_x()?.reciprocal()?.with_order(n);
        let f = d.mul(&g)?;
        RiordanArray::new(f, g)
    }

    /// Materializes the `(N+1) x (N+1)` lower-triangular matrix.
    pub fn to_matrix(&self) -> TriangularMatrix {
        let n = self.order();
        let h = self.h();
        let mut column = self.d();
        let mut rows: Vec<Vec<Rational>> = (0..=n).map(|i| Vec::with_capacity(i + 1)).collect();
        for k in 0..=n {
            for (i, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(column.coeff(i).clone());
            }
            column = column.mul(&h).expect("same order");
        }
        TriangularMatrix { rows }
    }

    /// Group product. On classical pairs:
    /// `(d1, h1) * (d2, h2) = (d1 * d2(h1), h2(h1))`.
    pub fn multiply(&self, other: &RiordanArray) -> Result<RiordanArray> {
        check_orders(self.order(), other.order())?;
        let n = self.order();
        let h1 = self.h_extended();
        let h2 = other.h_extended();
        let d = self.d().mul(&other.d().compose(&h1.with_order(n))?)?;
        let h = h2.compose(&h1)?;
        RiordanArray::from_dh(&d, &h)
    }

    /// Group inverse: `h' = h^(-1)` under composition and `d' = 1 / d(h')`.
    pub fn inverse(&self) -> RiordanArray {
        let n = self.order();
        let h_inv = self
            .h_extended()
            .comp_inverse()
            .expect("h_0 = 0, h_1 = 1/g_0 != 0");
        let d_inv = self
            .d()
            .compose(&h_inv.with_order(n))
            .and_then(|s| s.reciprocal())
            .expect("d_0 != 0");
        RiordanArray::from_dh(&d_inv, &h_inv).expect("inverse of a group element")
    }

    pub fn pow(&self, k: usize) -> RiordanArray {
        let mut acc = RiordanArray::identity(self.order());
        for _ in 0..k {
            acc = acc.multiply(self).expect("same order");
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        let one = rational::one();
        self.f.is_constant(&one) && self.g.is_constant(&one)
    }

    /// `T^2 = I` at the working order.
    pub fn is_involution(&self) -> bool {
        self.multiply(self).expect("same order").is_identity()
    }

    /// Whether `T * M` is an involution, with `M = T(-1|-1)`.
    pub fn is_pseudo_involution(&self) -> bool {
        self.multiply(&RiordanArray::alternating(self.order()))
            .expect("same order")
            .is_involution()
    }

    /// Diagonal entries are `(f_0/g_0) * (1/g_0)^n`. A finite order forces
    /// both ratios to be roots of unity, which over the rationals means `±1`.
    pub fn diagonal_admits_finite_order(&self) -> bool {
        let f0 = self.f.coeff(0);
        let g0 = self.g.coeff(0);
        rational::is_unit(&(f0 / g0)) && rational::is_unit(g0)
    }

    /// Smallest `k <= max` with `T^k = I`, if any.
    pub fn probe_order(&self, max: usize) -> Option<usize> {
        if !self.diagonal_admits_finite_order() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=max {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.multiply(self).expect("same order");
        }
        None
    }
}

/// The A-sequence of `T(1|phi)`: the series `A` with `x/A` the
/// compositional inverse of `x/phi`. Then `T(1|A) = T(1|phi)^(-1)`.
pub fn a_sequence(phi: &Series) -> Result<Series> {
    if phi.coeff(0).is_zero() {
        return Err(Error::precondition("phi constant term must be nonzero"));
    }
    let n = phi.order();
    let s = phi.with_order(n + 1).reciprocal()?.times_x();
    let s_inv = s.comp_inverse()?;
    Ok(s_inv.divide_by_x()?.reciprocal()?.with_order(n))
}

/// A dense lower-triangular matrix; row `n` stores entries `0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularMatrix {
    rows: Vec<Vec<Rational>>,
}

impl TriangularMatrix {
    /// Accepts ragged rows where row `n` has exactly `n + 1` entries.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::invalid("matrix needs at least one row"));
        }
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::invalid(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(TriangularMatrix { rows })
    }

    /// Lower-triangular part of a square matrix; nonzero entries above the
    /// diagonal are rejected.
    pub fn from_square(square: Vec<Vec<Rational>>) -> Result<Self> {
        let size = square.len();
        let mut rows = Vec::with_capacity(size);
        for (n, row) in square.into_iter().enumerate() {
            if row.len() != size {
                return Err(Error::invalid("matrix is not square"));
            }
            if row[n + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::invalid(format!(
                    "row {n} has a nonzero entry above the diagonal"
                )));
            }
            rows.push(row[..=n].to_vec());
        }
        TriangularMatrix::from_rows(rows)
    }

    pub fn identity(order: usize) -> Self {
        TriangularMatrix::diagonal(&vec![rational::one(); order + 1])
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let rows = entries
            .iter()
            .enumerate()
            .map(|(n, c)| {
                let mut row = vec![Rational::zero(); n + 1];
                row[n] = c.clone();
                row
            })
            .collect();
        TriangularMatrix { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `(n, k)`; zero above the diagonal.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        if k > n {
            Rational::zero()
        } else {
            self.rows[n][k].clone()
        }
    }

    pub fn entry(&self, n: usize, k: usize) -> Option<&Rational> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rational] {
        &self.rows[n]
    }

    pub fn diagonal_entries(&self) -> Vec<Rational> {
        self.rows.iter().enumerate().map(|(n, r)| r[n].clone()).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(n, row)| {
            row.iter()
                .enumerate()
                .all(|(k, c)| if k == n { c.is_one() } else { c.is_zero() })
        })
    }

    pub fn mul(&self, other: &TriangularMatrix) -> Result<TriangularMatrix> {
        check_orders(self.order(), other.order())?;
        let rows = (0..=self.order())
            .map(|n| {
                (0..=n)
                    .map(|k| {
                        (k..=n)
                            .map(|j| &self.rows[n][j] * &other.rows[j][k])
                            .fold(Rational::zero(), |a, b| a + b)
                    })
                    .collect()
            })
            .collect();
        Ok(TriangularMatrix { rows })
    }

    /// Scales column `k` by `factors[k]`.
    pub fn scale_columns(&self, factors: &[Rational]) -> TriangularMatrix {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().zip(factors).map(|(c, w)| c * w).collect())
            .collect();
        TriangularMatrix { rows }
    }

    /// One row per line, entries up to the diagonal.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(rational::format_rational).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split(',')
                    .map(rational::parse_rational)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TriangularMatrix::from_rows(rows)
    }

    /// Column-aligned text rendering.
    pub fn to_pretty(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(rational::format_rational).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, int};

    fn ser(c: &[i64], n: usize) -> Series {
        Series::from_ints(c, n).unwrap()
    }

    fn arr(f: &[i64], g: &[i64], n: usize) -> RiordanArray {
        RiordanArray::new(ser(f, n), ser(g, n)).unwrap()
    }

    /// Explicit Pascal rows C(n, k).
    fn pascal_rows(n: usize) -> TriangularMatrix {
        TriangularMatrix::from_rows(
            (0..=n).map(|i| (0..=i).map(|k| binomial(i, k)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn constructor_checks() {
        assert!(RiordanArray::new(ser(&[0, 1], 3), ser(&[1], 3))
            .unwrap_err()
            .is_precondition());
        assert!(RiordanArray::new(ser(&[1], 3), ser(&[0, 1], 3))
            .unwrap_err()
            .is_precondition());
        assert!(RiordanArray::new(ser(&[1], 3), ser(&[1], 4)).is_err());
    }

    #[test]
    fn classical_pair_invariants() {
        let t = arr(&[2, 1, -1], &[3, -1, 2], 6);
        let h = t.h_extended();
        assert!(h.coeff(0).is_zero());
        assert_eq!(h.coeff(1), &rational::frac(1, 3));
        assert_eq!(RiordanArray::from_dh(&t.d(), &h).unwrap(), t);
    }

    #[test]
    fn matrices() {
        assert!(RiordanArray::identity(5).to_matrix().is_identity());
        assert_eq!(RiordanArray::pascal(3).to_matrix(), pascal_rows(3));
        let minus = RiordanArray::minus_identity(4).to_matrix();
        assert_eq!(minus, TriangularMatrix::diagonal(&vec![int(-1); 5]));
        let alt = RiordanArray::alternating(5).to_matrix();
        let signs: Vec<_> = (0..6).map(|n| int(if n % 2 == 0 { 1 } else { -1 })).collect();
        assert_eq!(alt, TriangularMatrix::diagonal(&signs));
    }

    #[test]
    fn multiplication() {
        let t = arr(&[2, 1, -1], &[3, -1, 2], 6);
        let id = RiordanArray::identity(6);
        assert_eq!(t.multiply(&id).unwrap(), t);
        assert_eq!(id.multiply(&t).unwrap(), t);

        let p = RiordanArray::pascal(5);
        let p2 = p.multiply(&p).unwrap().to_matrix();
        let oracle = pascal_rows(5).mul(&pascal_rows(5)).unwrap();
        assert_eq!(p2, oracle);
        for n in 0..=5 {
            for k in 0..=n {
                let expected = binomial(n, k) * int(2).pow((n - k) as i32);
                assert_eq!(p2.get(n, k), expected);
            }
        }

        let minus = RiordanArray::minus_identity(4);
        assert_eq!(minus.multiply(&minus).unwrap(), RiordanArray::identity(4));
        assert!(t.multiply(&RiordanArray::identity(5)).is_err());
    }

    #[test]
    fn inverses() {
        assert_eq!(
            RiordanArray::identity(4).inverse(),
            RiordanArray::identity(4)
        );
        let t = arr(&[2, 1, -1], &[3, -1, 2], 6);
        let inv = t.inverse();
        assert!(t.multiply(&inv).unwrap().is_identity());
        assert!(inv.multiply(&t).unwrap().is_identity());

        let pinv = RiordanArray::pascal(4).inverse().to_matrix();
        for n in 0..=4 {
            for k in 0..=n {
                let sign = int(if (n - k) % 2 == 0 { 1 } else { -1 });
                assert_eq!(pinv.get(n, k), sign * binomial(n, k));
            }
        }
        assert!(pascal_rows(4).mul(&pinv).unwrap().is_identity());
    }

    #[test]
    fn a_sequences() {
        assert_eq!(a_sequence(&ser(&[1, -1], 8)).unwrap(), ser(&[1, 1], 8));
        assert_eq!(a_sequence(&Series::one(5)).unwrap(), Series::one(5));
        assert!(a_sequence(&ser(&[0, 1], 4)).unwrap_err().is_precondition());

        let phi = ser(&[2, -1, 0, 1, 1], 7);
        let a = a_sequence(&phi).unwrap();
        let t = RiordanArray::new(Series::one(7), phi).unwrap();
        let ta = RiordanArray::new(Series::one(7), a).unwrap();
        assert!(t.multiply(&ta).unwrap().is_identity());
        assert_eq!(t.inverse(), ta);
    }

    #[test]
    fn orders() {
        assert_eq!(RiordanArray::identity(6).probe_order(5), Some(1));
        assert_eq!(RiordanArray::minus_identity(6).probe_order(5), Some(2));
        assert_eq!(arr(&[1], &[-1, 1], 8).probe_order(5), Some(2));
        assert_eq!(RiordanArray::pascal(8).probe_order(5), None);
        // diagonal screen: (1/g_0)^n is not a root of unity
        let big = arr(&[1], &[2], 6);
        assert!(!big.diagonal_admits_finite_order());
        assert_eq!(big.probe_order(10), None);
        assert_eq!(RiordanArray::alternating(4).probe_order(1), None);
    }

    #[test]
    fn pseudo_involutions() {
        assert!(RiordanArray::pascal(8).is_pseudo_involution());
        assert!(RiordanArray::identity(8).is_pseudo_involution());
        // generalized Pascal T(1|1-bx) is a pseudo-involution for every b
        assert!(arr(&[1], &[1, -2], 8).is_pseudo_involution());
        // T(1|1-x-x^2) is not; cross-check on explicit matrices
        let fib = arr(&[1], &[1, -1, -1], 8);
        assert!(!fib.is_pseudo_involution());
        let tm = fib.to_matrix().mul(&RiordanArray::alternating(8).to_matrix()).unwrap();
        assert!(!tm.mul(&tm).unwrap().is_identity());
        let b2 = arr(&[1], &[1, -2], 8);
        let tm = b2.to_matrix().mul(&RiordanArray::alternating(8).to_matrix()).unwrap();
        assert!(tm.mul(&tm).unwrap().is_identity());
        assert!(!RiordanArray::pascal(8).is_involution());
        let m = RiordanArray::alternating(8);
        assert!(m.is_involution());
    }

    #[test]
    fn csv_round_trip() {
        let m = RiordanArray::pascal(4).inverse().to_matrix();
        let text = m.to_csv();
        assert!(text.starts_with("1\n-1,1\n1,-2,1\n"));
        assert_eq!(TriangularMatrix::from_csv(&text).unwrap(), m);
        assert!(TriangularMatrix::from_csv("1\n1\n").is_err());
    }

    #[test]
    fn square_conversion() {
        let sq = vec![vec![int(1), int(0)], vec![int(2), int(3)]];
        let m = TriangularMatrix::from_square(sq).unwrap();
        assert_eq!(m.get(1, 0), int(2));
        assert_eq!(m.get(0, 1), int(0));
        let bad = vec![vec![int(1), int(1)], vec![int(2), int(3)]];
        assert!(TriangularMatrix::from_square(bad).is_err());
    }
}
