//! Scalar backends.
//!
//! Two ordered fields back the octonion type: [`Rational`], an
//! arbitrary-precision fraction that is always kept in lowest terms with a
//! positive denominator, and `f64`. Exact comparisons only make sense on the
//! rational backend, so [`Scalar::EXACT`] lets callers reject tolerances there.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar. `num_rational` normalizes after every operation,
/// so equality is structural.
pub type Rational = num_rational::BigRational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True for backends where equality is exact and tolerances must be zero.
    const EXACT: bool;
    /// Human-readable backend name, used in diagnostics.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn from_ratio(numer: i64, denom: i64) -> Self;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Parses one coefficient: an integer, a fraction `p/q`, or (float
    /// backend only) a decimal with an optional signed exponent.
    fn parse_coeff(text: &str) -> Result<Self>;

    /// Renders a coefficient so that [`Scalar::parse_coeff`] reads it back.
    fn format_coeff(&self) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Octonion product of two coefficient arrays. Backends may override this
    /// with a faster route that gives the same result.
    fn octonion_product(a: &[Self; 8], b: &[Self; 8]) -> [Self; 8] {
        crate::octonion::table_product(a, b)
    }
}

fn invalid(text: &str, reason: &str) -> Error {
    Error::InvalidNumber {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const NAME: &'static str = "exact";

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_coeff(text: &str) -> Result<Self> {
        if text.contains(['.', 'e', 'E']) {
            return Err(invalid(
                text,
                "decimal coefficients require the float backend",
            ));
        }
        let (numer, denom) = match text.split_once('/') {
            Some((p, q)) => (p, q),
            None => (text, "1"),
        };
        let numer: BigInt = numer
            .parse()
            .map_err(|_| invalid(text, "not an integer or fraction"))?;
        let denom: BigInt = denom
            .parse()
            .map_err(|_| invalid(text, "not an integer or fraction"))?;
        if Zero::is_zero(&denom) {
            return Err(invalid(text, "zero denominator"));
        }
        Ok(Rational::new(numer, denom))
    }

    /// Scales both operands to integer vectors over their common
    /// denominators, multiplies in integers and reduces once per coefficient.
    fn octonion_product(a: &[Self; 8], b: &[Self; 8]) -> [Self; 8] {
        let (a_int, a_den) = to_integer_vector(a);
        let (b_int, b_den) = to_integer_vector(b);
        let table = crate::cayley_dickson::basis_table();
        let mut out: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
        for (i, x) in a_int.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in b_int.iter().enumerate() {
                if Zero::is_zero(y) {
                    continue;
                }
                let entry = table[i][j];
                let term = x * y;
                if entry.sign > 0 {
                    out[entry.index] += term;
                } else {
                    out[entry.index] -= term;
                }
            }
        }
        let den = a_den * b_den;
        out.map(|numer| Rational::new(numer, den.clone()))
    }

    fn format_coeff(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }
}

fn to_integer_vector(v: &[Rational; 8]) -> ([BigInt; 8], BigInt) {
    let den = v.iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let ints = std::array::from_fn(|i| v[i].numer() * (&den / v[i].denom()));
    (ints, den)
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const NAME: &'static str = "float";

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }

    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_coeff(text: &str) -> Result<Self> {
        let value = match text.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.parse().map_err(|_| invalid(text, "bad numerator"))?;
                let q: f64 = q.parse().map_err(|_| invalid(text, "bad denominator"))?;
                if q == 0.0 {
                    return Err(invalid(text, "zero denominator"));
                }
                p / q
            }
            None => text.parse().map_err(|_| invalid(text, "not a number"))?,
        };
        if !value.is_finite() {
            return Err(invalid(text, "not finite"));
        }
        Ok(value)
    }

    /// Each coefficient is an eight-term signed dot product; it is summed
    /// with error-free transformations (FMA products, two-sum accumulation)
    /// so the result is as accurate as if computed in twice the precision.
    fn octonion_product(a: &[Self; 8], b: &[Self; 8]) -> [Self; 8] {
        let table = crate::cayley_dickson::basis_table();
        let mut sum = [0.0f64; 8];
        let mut err = [0.0f64; 8];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let entry = table[i][j];
                let x = if entry.sign > 0 { x } else { -x };
                let p = x * y;
                let p_err = x.mul_add(y, -p);
                let k = entry.index;
                let s = sum[k] + p;
                let bp = s - sum[k];
                let s_err = (sum[k] - (s - bp)) + (p - bp);
                sum[k] = s;
                err[k] += p_err + s_err;
            }
        }
        std::array::from_fn(|k| sum[k] + err[k])
    }

    fn format_coeff(&self) -> String {
        // Display for f64 never uses exponent notation and round-trips.
        if *self == 0.0 {
            "0".to_string()
        } else {
            format!("{self}")
        }
    }
}
