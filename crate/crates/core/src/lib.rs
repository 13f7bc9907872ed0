//! Octonion arithmetic over exact rationals or binary64, with additive and
//! multiplicative commutators and associators, every bracketing of an
//! n-factor product, and the associators relating those bracketings.
//!
//! ```
//! use octassoc::{multiplicative_associator, ExactOctonion};
//!
//! let e = ExactOctonion::unit;
//! let (x, y, z) = (e(1), e(2), e(4));
//! let a = multiplicative_associator(&x, &y, &z).unwrap();
//! assert_eq!(&(&(&x * &y) * &z) * &a, &x * &(&y * &z));
//! ```

pub mod brackets;
pub mod cayley_dickson;
pub mod error;
pub mod expr;
pub mod identities;
pub mod octonion;
pub mod sample;
pub mod scalar;
pub mod text;
pub mod trees;

pub use brackets::{
    additive_associator, additive_commutator, biassociativity_check, multiplicative_associator,
    multiplicative_commutator, schafer_residual, schafer_sides, BracketKind, BracketResult, Letter,
    Word,
};
pub use error::{Error, Result};
pub use expr::{eval_expr, parse, DefaultedChain, Environment, Expr, Parsed};
pub use octonion::{check_tolerance, ExactOctonion, FloatOctonion, Octonion};
pub use scalar::{Rational, Scalar};
pub use trees::{
    associator_between, enumerate_trees, generalized_associator, AssociatorMatrix, ChainCensus,
    ProductTree,
};
