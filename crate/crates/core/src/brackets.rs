//! Commutators and associators, in additive and multiplicative form.
//!
//! The additive brackets measure the failure to commute or associate as a
//! difference. The multiplicative brackets are the unit-norm factors that turn
//! one product into the other:
//!
//! ```text
//! (x y) c = y x                 c = y^-1 x^-1 y x
//! ((x y) z) a = x (y z)         a = (z^-1 (y^-1 x^-1)) (x (y z))
//! ```
//!
//! Both rely on bi-associativity: anything built from two octonions, their
//! conjugates, inverses and real scalars does not depend on bracketing.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::octonion::Octonion;
use crate::scalar::Scalar;
use crate::trees::ProductTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BracketKind {
    AdditiveCommutator,
    AdditiveAssociator,
    MultiplicativeCommutator,
    MultiplicativeAssociator,
}

impl BracketKind {
    pub fn arity(self) -> usize {
        match self {
            BracketKind::AdditiveCommutator | BracketKind::MultiplicativeCommutator => 2,
            BracketKind::AdditiveAssociator | BracketKind::MultiplicativeAssociator => 3,
        }
    }

    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            BracketKind::MultiplicativeCommutator | BracketKind::MultiplicativeAssociator
        )
    }
}

impl fmt::Display for BracketKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BracketKind::AdditiveCommutator => "additive-commutator",
            BracketKind::AdditiveAssociator => "additive-associator",
            BracketKind::MultiplicativeCommutator => "multiplicative-commutator",
            BracketKind::MultiplicativeAssociator => "multiplicative-associator",
        })
    }
}

/// A computed bracket together with what produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketResult<S: Scalar> {
    pub value: Octonion<S>,
    pub kind: BracketKind,
    pub operands: Vec<Octonion<S>>,
}

impl<S: Scalar> BracketResult<S> {
    pub fn compute(kind: BracketKind, operands: &[Octonion<S>]) -> Result<Self> {
        if operands.len() != kind.arity() {
            return Err(Error::ShapeMismatch {
                leaves: kind.arity(),
                factors: operands.len(),
            });
        }
        let o = operands;
        let value = match kind {
            BracketKind::AdditiveCommutator => additive_commutator(&o[0], &o[1]),
            BracketKind::AdditiveAssociator => additive_associator(&o[0], &o[1], &o[2]),
            BracketKind::MultiplicativeCommutator => multiplicative_commutator(&o[0], &o[1])?,
            BracketKind::MultiplicativeAssociator => {
                multiplicative_associator(&o[0], &o[1], &o[2])?
            }
        };
        Ok(BracketResult {
            value,
            kind,
            operands: operands.to_vec(),
        })
    }
}

const POSITIONS: [&str; 3] = ["x", "y", "z"];

fn require_nonzero<S: Scalar>(operands: &[&Octonion<S>]) -> Result<()> {
    for (name, x) in POSITIONS.iter().zip(operands) {
        if x.is_zero() {
            return Err(Error::ZeroDivision {
                operand: (*name).to_string(),
            });
        }
    }
    Ok(())
}

/// `xy - yx`
pub fn additive_commutator<S: Scalar>(x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
    &(x * y) - &(y * x)
}

/// `x(yz) - (xy)z`
pub fn additive_associator<S: Scalar>(
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> Octonion<S> {
    &(x * &(y * z)) - &(&(x * y) * z)
}

/// `y^-1 x^-1 y x`, evaluated as `((y^-1 x^-1) y) x`.
pub fn multiplicative_commutator<S: Scalar>(
    x: &Octonion<S>,
    y: &Octonion<S>,
) -> Result<Octonion<S>> {
    require_nonzero(&[x, y])?;
    let x_inv = x.inverse_named("x")?;
    let y_inv = y.inverse_named("y")?;
    Ok(&(&(&y_inv * &x_inv) * y) * x)
}

/// `(z^-1 (y^-1 x^-1)) (x (yz))`, bracketed exactly so.
pub fn multiplicative_associator<S: Scalar>(
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> Result<Octonion<S>> {
    require_nonzero(&[x, y, z])?;
    let x_inv = x.inverse_named("x")?;
    let y_inv = y.inverse_named("y")?;
    let z_inv = z.inverse_named("z")?;
    let inverse_of_left = &z_inv * &(&y_inv * &x_inv);
    let right = x * &(y * z);
    Ok(&inverse_of_left * &right)
}

/// Left side minus right side of
///
/// ```text
/// a[x,y,z] + [a,x,y]z = [ax,y,z] - [a,xy,z] + [a,x,yz]
/// ```
///
/// with the additive associator. Always zero in an alternative algebra.
pub fn schafer_residual<S: Scalar>(
    a: &Octonion<S>,
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> Octonion<S> {
    let (lhs, rhs) = schafer_sides(a, x, y, z);
    &lhs - &rhs
}

/// `a[x,y,z]`, `[a,x,y]z`, `[ax,y,z]`, `[a,xy,z]`, `[a,x,yz]`.
fn schafer_terms<S: Scalar>(
    a: &Octonion<S>,
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> [Octonion<S>; 5] {
    [
        a * &additive_associator(x, y, z),
        &additive_associator(a, x, y) * z,
        additive_associator(&(a * x), y, z),
        additive_associator(a, &(x * y), z),
        additive_associator(a, x, &(y * z)),
    ]
}

/// The two sides of the identity in [`schafer_residual`], separately.
pub fn schafer_sides<S: Scalar>(
    a: &Octonion<S>,
    x: &Octonion<S>,
    y: &Octonion<S>,
    z: &Octonion<S>,
) -> (Octonion<S>, Octonion<S>) {
    let [t1, t2, t3, t4, t5] = schafer_terms(a, x, y, z);
    let lhs = &t1 + &t2;
    let rhs = &(&t3 - &t4) + &t5;
    (lhs, rhs)
}

/// One letter of a word over two generators.
#[derive(Clone, Debug, PartialEq)]
pub enum Letter<S: Scalar> {
    X,
    Y,
    ConjX,
    ConjY,
    InvX,
    InvY,
    Scalar(S),
}

impl<S: Scalar> Letter<S> {
    fn substitute(&self, x: &Octonion<S>, y: &Octonion<S>) -> Result<Octonion<S>> {
        Ok(match self {
            Letter::X => x.clone(),
            Letter::Y => y.clone(),
            Letter::ConjX => x.conjugate(),
            Letter::ConjY => y.conjugate(),
            Letter::InvX => x.inverse_named("x")?,
            Letter::InvY => y.inverse_named("y")?,
            Letter::Scalar(s) => Octonion::real(s.clone()),
        })
    }
}

impl<S: Scalar> fmt::Display for Letter<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X => f.write_str("X"),
            Letter::Y => f.write_str("Y"),
            Letter::ConjX => f.write_str("conj(X)"),
            Letter::ConjY => f.write_str("conj(Y)"),
            Letter::InvX => f.write_str("inv(X)"),
            Letter::InvY => f.write_str("inv(Y)"),
            Letter::Scalar(s) => write!(f, "scalar({})", s.format_coeff()),
        }
    }
}

/// A product word in `x`, `y`, their conjugates and inverses, and real
/// scalars. The text form is whitespace- or comma-separated letters such as
/// `X Y conj(X) inv(Y) scalar(3/4)`; any other generator is rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct Word<S: Scalar>(Vec<Letter<S>>);

impl<S: Scalar> Word<S> {
    pub fn new(letters: Vec<Letter<S>>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord(
                "a word needs at least one letter".into(),
            ));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter<S>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_inverse(&self) -> bool {
        self.0
            .iter()
            .any(|l| matches!(l, Letter::InvX | Letter::InvY))
    }

    /// Replaces each letter by its value.
    pub fn substitute(&self, x: &Octonion<S>, y: &Octonion<S>) -> Result<Vec<Octonion<S>>> {
        self.0.iter().map(|l| l.substitute(x, y)).collect()
    }
}

impl<S: Scalar> fmt::Display for Word<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn parse_letter<S: Scalar>(token: &str) -> Result<Letter<S>> {
    let call = |prefix: &str| {
        token
            .strip_prefix(prefix)
            .and_then(|rest| rest.strip_prefix('('))
            .and_then(|rest| rest.strip_suffix(')'))
            .map(str::trim)
    };
    let letter = match token {
        "X" => Letter::X,
        "Y" => Letter::Y,
        _ => match (call("conj"), call("inv"), call("scalar")) {
            (Some("X"), _, _) => Letter::ConjX,
            (Some("Y"), _, _) => Letter::ConjY,
            (_, Some("X"), _) => Letter::InvX,
            (_, Some("Y"), _) => Letter::InvY,
            (_, _, Some(s)) => Letter::Scalar(S::parse_coeff(s)?),
            _ => {
                return Err(Error::InvalidWord(format!(
                    "`{token}` is not one of X, Y, conj(X), conj(Y), inv(X), inv(Y), scalar(s)"
                )))
            }
        },
    };
    Ok(letter)
}

impl<S: Scalar> FromStr for Word<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_letter)
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters)
    }
}

/// Evaluates `word` at `(x, y)` under two bracketings and reports whether the
/// results agree (within `tolerance` on the float backend).
pub fn biassociativity_check<S: Scalar>(
    x: &Octonion<S>,
    y: &Octonion<S>,
    word: &Word<S>,
    tree1: &ProductTree,
    tree2: &ProductTree,
    tolerance: &S,
) -> Result<bool> {
    for tree in [tree1, tree2] {
        if tree.leaf_count() != word.len() {
            return Err(Error::ShapeMismatch {
                leaves: tree.leaf_count(),
                factors: word.len(),
            });
        }
    }
    let factors = word.substitute(x, y)?;
    let first = tree1.evaluate(&factors)?;
    let second = tree2.evaluate(&factors)?;
    first.equals(&second, tolerance)
}
