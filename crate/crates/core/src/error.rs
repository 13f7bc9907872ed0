use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An inverse of zero was requested. `operand` names the value that was zero.
    #[error("division by zero: {operand} is zero and has no inverse")]
    ZeroDivision { operand: String },

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("shape mismatch: tree has {leaves} leaves but {factors} factors were given")]
    ShapeMismatch { leaves: usize, factors: usize },

    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("tree index {index} out of range for {count} trees")]
    IndexError { index: usize, count: usize },

    #[error("an octonion needs exactly 8 coefficients, got {0}")]
    InvalidLength(usize),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid number `{text}`: {reason}")]
    InvalidNumber { text: String, reason: String },

    #[error("syntax error at byte {offset}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("`{0}` is a reserved unit name and cannot be bound")]
    ReservedIdentifier(String),

    #[error("`{0}` is not a valid identifier")]
    InvalidIdentifier(String),

    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
}
