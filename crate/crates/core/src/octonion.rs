use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::cayley_dickson::basis_table;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// An octonion `c0 + c1 e1 + ... + c7 e7`.
///
/// Values are immutable; arithmetic returns new values. Multiplication follows
/// the Cayley–Dickson table in [`crate::cayley_dickson`] and is neither
/// commutative nor associative.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S: Scalar> {
    c: [S; 8],
}

pub type ExactOctonion = Octonion<Rational>;
pub type FloatOctonion = Octonion<f64>;

impl<S: Scalar> Octonion<S> {
    pub fn new(c: [S; 8]) -> Self {
        Octonion { c }
    }

    /// Builds an octonion from a coefficient list, rejecting any length but 8.
    pub fn from_slice(coeffs: &[S]) -> Result<Self> {
        let c: [S; 8] = coeffs
            .to_vec()
            .try_into()
            .map_err(|v: Vec<S>| Error::InvalidLength(v.len()))?;
        Ok(Octonion { c })
    }

    pub fn from_integers(c: [i64; 8]) -> Self {
        Octonion {
            c: c.map(S::from_i64),
        }
    }

    pub fn zero() -> Self {
        Self::real(S::zero())
    }

    pub fn one() -> Self {
        Self::real(S::one())
    }

    pub fn real(s: S) -> Self {
        let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
        c[0] = s;
        Octonion { c }
    }

    /// The basis element `e_k`; `e0` is 1.
    ///
    /// # Panics
    /// If `k > 7`.
    pub fn unit(k: usize) -> Self {
        assert!(k < 8, "no basis element e{k}");
        let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
        c[k] = S::one();
        Octonion { c }
    }

    pub fn coeffs(&self) -> &[S; 8] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.c[k]
    }

    pub fn real_part(&self) -> &S {
        &self.c[0]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(S::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.c[1..].iter().all(S::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn conjugate(&self) -> Self {
        let mut c = self.c.clone();
        for v in &mut c[1..] {
            *v = -v.clone();
        }
        Octonion { c }
    }

    /// Sum of squared coefficients. Exact on the rational backend.
    pub fn norm_sq(&self) -> S {
        self.c
            .iter()
            .fold(S::zero(), |acc, v| acc + v.clone() * v.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() * s.clone()),
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        Octonion {
            c: S::octonion_product(&self.c, &other.c),
        }
    }

    /// `conjugate(x) / norm_sq(x)`. Fails on zero.
    pub fn inverse(&self) -> Result<Self> {
        self.inverse_named("operand")
    }

    /// Like [`Octonion::inverse`], naming the operand in the error.
    pub fn inverse_named(&self, operand: &str) -> Result<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return Err(Error::ZeroDivision {
                operand: operand.to_string(),
            });
        }
        let recip = S::one() / n;
        Ok(self.conjugate().scale(&recip))
    }

    /// Compares two octonions. On the exact backend the tolerance must be
    /// zero and equality is structural; on the float backend the largest
    /// componentwise absolute difference must not exceed `tolerance`.
    pub fn equals(&self, other: &Self, tolerance: &S) -> Result<bool> {
        check_tolerance(tolerance)?;
        if S::EXACT {
            return Ok(self == other);
        }
        Ok(self
            .c
            .iter()
            .zip(&other.c)
            .all(|(a, b)| (a.clone() - b.clone()).abs() <= *tolerance))
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(&self, other: &Self) -> S {
        self.c
            .iter()
            .zip(&other.c)
            .map(|(a, b)| (a.clone() - b.clone()).abs())
            .fold(S::zero(), |m, d| if d > m { d } else { m })
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> S {
        self.c
            .iter()
            .map(S::abs)
            .fold(S::zero(), |m, v| if v > m { v } else { m })
    }

    /// Comma-separated coefficients, `c0,...,c7`.
    pub fn to_machine(&self) -> String {
        self.c
            .iter()
            .map(S::format_coeff)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_f64(&self) -> FloatOctonion {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].to_f64()),
        }
    }
}

/// Coefficientwise product through the basis table.
pub fn table_product<S: Scalar>(a: &[S; 8], b: &[S; 8]) -> [S; 8] {
    let table = basis_table();
    let mut out: [S; 8] = std::array::from_fn(|_| S::zero());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let entry = table[i][j];
            let term = x.clone() * y.clone();
            let slot = &mut out[entry.index];
            *slot = if entry.sign > 0 {
                slot.clone() + term
            } else {
                slot.clone() - term
            };
        }
    }
    out
}

/// Validates a tolerance for the backend `S`.
pub fn check_tolerance<S: Scalar>(tolerance: &S) -> Result<()> {
    if tolerance.is_negative() {
        return Err(Error::InvalidTolerance(format!(
            "{} is negative",
            tolerance.format_coeff()
        )));
    }
    if S::EXACT && !tolerance.is_zero() {
        return Err(Error::InvalidTolerance(format!(
            "{} on the exact backend; exact comparisons take tolerance 0",
            tolerance.format_coeff()
        )));
    }
    Ok(())
}

impl<S: Scalar> fmt::Display for Octonion<S> {
    /// Sum of terms, e.g. `2 - 3/4e1 + e7`. Unit coefficients are elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let negative = v.is_negative();
            let magnitude = v.abs();
            let body = if k > 0 && magnitude == S::one() {
                format!("e{k}")
            } else if k > 0 {
                format!("{}e{k}", magnitude.format_coeff())
            } else {
                magnitude.format_coeff()
            };
            match (first, negative) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<S: Scalar> FromStr for Octonion<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::text::parse_octonion(s)
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: Self) -> Octonion<S> {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()),
        }
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: Self) -> Octonion<S> {
        Octonion {
            c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()),
        }
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: Self) -> Octonion<S> {
        self.multiply(rhs)
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion {
            c: std::array::from_fn(|i| -self.c[i].clone()),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl<S: Scalar> $trait for Octonion<S> {
            type Output = Octonion<S>;
            fn $method(self, rhs: Self) -> Octonion<S> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        -&self
    }
}
