//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("constant polynomials are not allowed here")]
    ConstantPolynomial,

    #[error("polynomial does not vanish at the origin")]
    NonzeroConstantTerm,

    #[error("polynomial is not weighted homogeneous for the given weights")]
    NotWeightedHomogeneous,

    #[error("this computation requires a weighted homogeneous germ; weights were not given and could not be inferred")]
    RequiresWeightedHomogeneous,

    #[error("singularity at the origin is not isolated")]
    NonIsolated,

    #[error("alpha must lie in (0, 1]")]
    AlphaOutOfRange,

    #[error("beta must be positive")]
    BetaNotPositive,

    #[error("weights must lie in the open interval (0, 1)")]
    WeightOutOfRange,

    #[error("weights do not define an isolated weighted homogeneous singularity spectrum")]
    NotASpectrum,

    #[error("polynomial is not convenient: no pure power of variable `{0}`")]
    NotConvenient(String),

    #[error("Newton polyhedron machinery supports at most 3 variables, got {0}")]
    TooManyVariables(usize),

    #[error("polynomial is degenerate along its Newton boundary")]
    Degenerate,

    #[error("local colength did not stabilize within the safety bound N <= {bound}")]
    SafetyBoundExceeded { bound: u32 },

    #[error("standard-monomial enumeration exceeded the cap of {0}")]
    EnumerationCapExceeded(usize),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
