//! Construction and decomposition of Riordan involutions.
//!
//! Every involution other than `±I` has the form `T(f|g)` with
//!
//! ```text
//! s = x/phi,   s' = compositional inverse of s  (= x/A)
//! g = x / s'(-s)
//! f = ±g * exp(u(s))
//! ```
//!
//! for some `phi` with `phi_0 != 0` and some odd series `u`. The pair
//! `(phi, u)` is far from unique; [`decompose_involution`] returns one
//! canonical choice.

use std::fmt;

use num::{One, Zero};

use crate::error::{check_orders, Error, Result};
use crate::fps::Series;
use crate::rational::{self, Rational};
use crate::riordan::RiordanArray;

/// The `±` in front of `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::invalid(format!("sign must be +1 or -1, got {v}"))),
        }
    }

    /// Recovers a sign from a rational that must be `±1`.
    pub fn from_rational(r: &Rational) -> Option<Sign> {
        if r.is_one() {
            Some(Sign::Plus)
        } else if (-r).is_one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_rational(self) -> Rational {
        rational::int(self.as_i64())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Parameters `(phi, u, sign)` of a nontrivial involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionParams {
    phi: Series,
    u: Series,
    sign: Sign,
}

impl InvolutionParams {
    /// Validates `phi_0 != 0` and that `u` is odd. A non-odd `u` is rejected,
    /// not projected onto its odd part.
    pub fn new(phi: Series, u: Series, sign: Sign) -> Result<Self> {
        check_orders(phi.order(), u.order())?;
        if phi.coeff(0).is_zero() {
            return Err(Error::precondition("phi constant term must be nonzero"));
        }
        if !u.parity().is_odd() {
            return Err(Error::invalid(
                "u must be an odd series (even-indexed coefficients must vanish)",
            ));
        }
        Ok(InvolutionParams { phi, u, sign })
    }

    pub fn phi(&self) -> &Series {
        &self.phi
    }

    pub fn u(&self) -> &Series {
        &self.u
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }
}

/// `x/phi` at one order above `phi`; exact, since `[x^(N+1)] x/phi` only
/// involves `phi_0..phi_N`.
fn x_over_phi_extended(phi: &Series) -> Result<Series> {
    Ok(phi.with_order(phi.order() + 1).reciprocal()?.times_x())
}

/// `g = x / s'(-s)` with `s = x/phi` and `s'` its compositional inverse.
///
/// The denominator is evaluated one order higher so that `g` is exact
/// through `x^N`.
pub fn g_from_phi(phi: &Series) -> Result<Series> {
    if phi.coeff(0).is_zero() {
        return Err(Error::precondition("phi constant term must be nonzero"));
    }
    let n = phi.order();
    let s = x_over_phi_extended(phi)?;
    let s_inv = s.comp_inverse()?;
    let denom = s_inv.compose(&s.neg())?;
    if !denom.coeff(0).is_zero() || denom.coeff(1).is_zero() {
        return Err(Error::defect(
            "x/A(-x/phi) must have zero constant and nonzero linear term",
        ));
    }
    Ok(denom.divide_by_x()?.reciprocal()?.with_order(n))
}

/// `f = sign * g * exp(u(x/phi))`.
pub fn f_from_params(p: &InvolutionParams) -> Result<Series> {
    let n = p.order();
    let g = g_from_phi(&p.phi)?;
    let s = x_over_phi_extended(&p.phi)?.with_order(n);
    let e = p.u.compose(&s)?.exp_series()?;
    Ok(g.mul(&e)?.scale(&p.sign.as_rational()))
}

/// Builds `T(f|g)` and checks `T^2 = I` at the working order.
pub fn build_involution(p: &InvolutionParams) -> Result<RiordanArray> {
    let g = g_from_phi(&p.phi)?;
    let f = f_from_params(p)?;
    let t = RiordanArray::new(f, g)?;
    if !t.is_involution() {
        return Err(Error::defect(format!(
            "constructed array does not square to the identity at order {}",
            t.order()
        )));
    }
    Ok(t)
}

/// The involutions with `g = 1`: exactly `T(1|1)` and `T(-1|1)`.
pub fn trivial_involutions(order: usize) -> Vec<RiordanArray> {
    vec![
        RiordanArray::identity(order),
        RiordanArray::minus_identity(order),
    ]
}

/// Recovers parameters `(phi, u, sign)` that rebuild `t` exactly.
///
/// With `h = x/g` (an involution under composition, `h_1 = -1`), the series
/// `s = (x - h)/2` satisfies `s(h) = -s` and `s_1 = 1`. Taking `phi = x/s`
/// reproduces `g`. With `sign = f_0/g_0` and `w = f/(sign * g)`, the series
/// `u = log(w)(s')` is odd and reproduces `f`. Both facts are checked rather
/// than assumed.
///
/// The parameters returned are one witness among many; only the rebuilt
/// array is guaranteed to match.
pub fn decompose_involution(t: &RiordanArray) -> Result<InvolutionParams> {
    let n = t.order();
    if !t.is_involution() {
        return Err(Error::precondition(format!(
            "not an involution at order {n}"
        )));
    }
    if t.g().is_constant(&rational::one()) {
        return Err(Error::invalid("trivial involution; parameters undefined"));
    }
    let h = t.h_extended();
    if h.coeff(1) != &-rational::one() {
        return Err(Error::defect(
            "nontrivial involution with h_1 != -1",
        ));
    }
    let x = Series::x(n + 1);
    let s = x.sub(&h)?.scale(&rational::frac(1, 2));
    if s.compose(&h)? != s.neg() {
        return Err(Error::defect("linearizer does not satisfy s(h) = -s"));
    }
    let phi = s.divide_by_x()?.reciprocal()?.with_order(n);

    let sign = Sign::from_rational(&(t.f().coeff(0) / t.g().coeff(0)))
        .ok_or_else(|| Error::defect("f_0/g_0 of an involution is not ±1"))?;
    let w = t.f().div(&t.g().scale(&sign.as_rational()))?;
    let s_inv = s.comp_inverse()?.with_order(n);
    let u = w.log_series()?.compose(&s_inv)?;
    if !u.parity().is_odd() {
        return Err(Error::defect(format!(
            "recovered u is {} rather than odd",
            u.parity()
        )));
    }
    InvolutionParams::new(phi, u, sign)
}

/// Whether `g_from_phi(phi)` is the constant `-1`. This holds exactly
/// when `phi` is even.
pub fn parity_criterion(phi: &Series) -> Result<bool> {
    Ok(g_from_phi(phi)?.is_constant(&-rational::one()))
}

/// `phi = alpha x / log(1 - alpha x)` for `alpha != 0`.
///
/// With `u = -alpha x` this produces `T(∓1 | alpha x - 1)`.
pub fn alpha_log_phi(alpha: &Rational, order: usize) -> Result<Series> {
    if alpha.is_zero() {
        return Err(Error::precondition("alpha must be nonzero"));
    }
    let one_minus = Series::new(vec![rational::one(), -alpha.clone()], order + 1)?;
    let log_over_x = one_minus.log_series()?.divide_by_x()?.with_order(order);
    Ok(log_over_x.reciprocal()?.scale(alpha))
}
