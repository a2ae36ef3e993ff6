//! Truncated formal power series over the rationals.
//!
//! A [`Series`] of order `N` holds exactly the coefficients `c_0..=c_N`;
//! everything from `x^(N+1)` on is unknown. Binary operations require both
//! operands to carry the same order and fail otherwise.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{check_orders, Error, Result};
use crate::rational::{self, format_rational, parse_rational, Rational};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

/// Parity of a truncated series, judged on coefficients `0..=N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Zero,
    Even,
    Odd,
    Neither,
}

impl Parity {
    /// The zero series counts as both even and odd.
    pub fn is_even(self) -> bool {
        matches!(self, Parity::Zero | Parity::Even)
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Parity::Zero | Parity::Odd)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Zero => "zero",
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Neither => "neither",
        })
    }
}

impl Series {
    /// Builds a series of the given order, padding missing high coefficients
    /// with zeros. Supplying more than `order + 1` coefficients is an error.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::invalid(format!(
                "{} coefficients do not fit truncation order {order}",
                coeffs.len()
            )));
        }
        coeffs.resize(order + 1, Rational::zero());
        Ok(Series { coeffs })
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Result<Self> {
        Series::new(coeffs.iter().map(|&c| rational::int(c)).collect(), order)
    }

    /// Series from a generator `n -> c_n`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=order).map(&mut f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `x`. At order 0 this is the zero series.
    pub fn x(order: usize) -> Self {
        Series::monomial(Rational::one(), 1, order)
    }

    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// `1 + x + x^2 + ...`
    pub fn geometric(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::one())
    }

    /// `e^x`
    pub fn exponential(order: usize) -> Self {
        Series::from_fn(order, |n| rational::factorial(n).recip())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the series is the constant `c`.
    pub fn is_constant(&self, c: &Rational) -> bool {
        &self.coeffs[0] == c && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Re-truncates or zero-pads to a new order.
    ///
    /// Padding only makes sense when the caller knows the appended
    /// coefficients cannot influence the result it is about to compute.
    pub fn with_order(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        check_orders(self.order(), other.order())?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        check_orders(self.order(), other.order())?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, r: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Cauchy product truncated at the shared order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        check_orders(self.order(), other.order())?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Series) -> Series {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Series {
        let mut acc = Series::one(self.order());
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// Multiplicative inverse, solved term by term from `a * c = 1`.
    pub fn reciprocal(&self) -> Result<Series> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::precondition(
                "reciprocal requires a nonzero constant term",
            ));
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut c: Vec<Rational> = Vec::with_capacity(n + 1);
        c.push(inv0.clone());
        for m in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &c[m - i];
                }
            }
            c.push(-acc * &inv0);
        }
        Ok(Series { coeffs: c })
    }

    /// `self / other`, i.e. `self * reciprocal(other)`.
    pub fn div(&self, other: &Series) -> Result<Series> {
        check_orders(self.order(), other.order())?;
        Ok(self.mul_unchecked(&other.reciprocal()?))
    }

    /// `outer(inner(x))`, evaluated by Horner's scheme.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        check_orders(self.order(), inner.order())?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::precondition(
                "composition requires the inner series to have zero constant term",
            ));
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for c in self.coeffs[..n].iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// `a(-x)`
    pub fn reflect(&self) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Compositional inverse, by back-substitution on `t(s(x)) = x`.
    ///
    /// With `t = sum t_k x^k`, the coefficient of `x^n` in `t(s)` is
    /// `sum_{k<=n} t_k [x^n] s^k`, and `[x^n] s^n = s_1^n`, so each `t_n`
    /// follows from the ones already known.
    pub fn comp_inverse(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition(
                "compositional inverse requires zero constant term",
            ));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        let s1 = &self.coeffs[1];
        if s1.is_zero() {
            return Err(Error::precondition(
                "compositional inverse requires a nonzero linear coefficient",
            ));
        }
        let mut powers = Vec::with_capacity(n + 1);
        powers.push(Series::one(n));
        for k in 1..=n {
            let next = powers[k - 1].mul_unchecked(self);
            powers.push(next);
        }
        let mut t = vec![Rational::zero(); n + 1];
        for m in 1..=n {
            let mut acc = if m == 1 {
                Rational::one()
            } else {
                Rational::zero()
            };
            for k in 1..m {
                if !t[k].is_zero() {
                    acc -= &t[k] * &powers[k].coeffs[m];
                }
            }
            t[m] = acc / &powers[m].coeffs[m];
        }
        Ok(Series { coeffs: t })
    }

    /// `exp(a)` for `a_0 = 0`, as the truncated sum of `a^k / k!`.
    pub fn exp_series(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition(
                "exp requires zero constant term",
            ));
        }
        let n = self.order();
        let mut acc = Series::one(n);
        let mut term = Series::one(n);
        for k in 1..=n {
            term = term
                .mul_unchecked(self)
                .scale(&rational::frac(1, k as i64));
            acc = acc.zip_with(&term, |a, b| a + b);
        }
        Ok(acc)
    }

    /// `log(a)` for `a_0 = 1`, as the truncated sum of `(-1)^(k+1) (a-1)^k / k`.
    pub fn log_series(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::precondition(
                "log requires constant term 1",
            ));
        }
        let n = self.order();
        let mut t = self.clone();
        t.coeffs[0] = Rational::zero();
        let mut acc = Series::zero(n);
        let mut power = Series::one(n);
        for k in 1..=n {
            power = power.mul_unchecked(&t);
            let c = rational::frac(if k % 2 == 1 { 1 } else { -1 }, k as i64);
            acc = acc.zip_with(&power.scale(&c), |a, b| a + b);
        }
        Ok(acc)
    }

    /// Coefficient-wise product.
    pub fn hadamard(&self, other: &Series) -> Result<Series> {
        check_orders(self.order(), other.order())?;
        Ok(self.zip_with(other, |a, b| a * b))
    }

    /// `s / x` at the same order.
    ///
    /// The top coefficient of the result would need `s_(N+1)`, which the
    /// series does not carry, so it is set to zero. Callers that need it
    /// exact work one order higher and truncate afterwards.
    pub fn divide_by_x(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::precondition(
                "division by x requires zero constant term",
            ));
        }
        let mut coeffs: Vec<Rational> = self.coeffs[1..].to_vec();
        coeffs.push(Rational::zero());
        Ok(Series { coeffs })
    }

    /// `x * a` at the same order; exact, since `a_N x^(N+1)` is beyond the truncation.
    pub fn times_x(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Series { coeffs }
    }

    pub fn parity(&self) -> Parity {
        let odd_clear = self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero);
        let even_clear = self.coeffs.iter().step_by(2).all(Zero::is_zero);
        match (odd_clear, even_clear) {
            (true, true) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (false, false) => Parity::Neither,
        }
    }

    /// Parses a bracketed literal such as `[1,-1/2,0,1/3]`, padding to `order`.
    pub fn parse_literal(text: &str, order: usize) -> Result<Series> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| {
                Error::parse(format!("series literal must be bracketed: {text:?}"))
            })?;
        let coeffs = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?
        };
        Series::new(coeffs, order)
    }

    /// Bracketed literal with trailing zeros dropped; `parse_literal` at the
    /// same order restores the series.
    pub fn to_literal(&self) -> String {
        let last = self
            .coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0);
        let parts: Vec<String> = self.coeffs[..=last].iter().map(format_rational).collect();
        format!("[{}]", parts.join(","))
    }

    fn zip_with(&self, other: &Series, f: impl Fn(&Rational, &Rational) -> Rational) -> Series {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

/// Renders coefficients (lowest degree first) as `1 - 2*x + 1/2*x^2`.
pub fn polynomial_string(coeffs: &[Rational]) -> String {
    let mut out = String::new();
    for (n, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag_text = format_rational(&mag);
        match n {
            0 => out.push_str(&mag_text),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag_text);
                    out.push('*');
                }
                if n == 1 {
                    out.push('x');
                } else {
                    out.push_str(&format!("x^{n}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Series {
    /// Polynomial notation with an explicit `O(x^(N+1))` tail.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + O(x^{})",
            polynomial_string(&self.coeffs),
            self.order() + 1
        )
    }
}
