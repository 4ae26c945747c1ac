use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("invalid exponent at position {position}: {message}")]
    BadExponent { position: usize, message: String },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("length mismatch: expected {0}, got {1}")]
    LengthMismatch(usize, usize),
    #[error("ideal has no nonzero generator")]
    ZeroIdeal,
    #[error("ideal is the unit ideal")]
    ImproperIdeal,
    #[error("ideal is not zero-dimensional (no pure power of `{0}` among leading terms)")]
    NotZeroDimensional(String),
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("subspace is not stable under the module action")]
    NotSubmodule,
    #[error("map does not commute with the module actions")]
    NotModuleMap,
    #[error("q is undefined: codim Y equals dim X")]
    ZeroDenominator,
    #[error("q requires codim Y > dim X (codim Y = {codim_y}, dim X = {dim_x})")]
    NegativeDenominator { codim_y: usize, dim_x: usize },
    #[error("declared dim X = {declared} disagrees with the computed dimension {computed}")]
    DeclaredDimension { declared: usize, computed: usize },
    #[error("the ring has {available} variables, {needed} are needed")]
    TooFewVariables { needed: usize, available: usize },
    #[error("invalid Boardman symbol: {0}")]
    BoardmanSymbol(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}
