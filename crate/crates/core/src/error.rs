use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// An exact division in `Z[q, q^-1]` had a nonzero remainder.
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },

    #[error("iteration cap exceeded: {0}")]
    NonTerminating(String),

    /// The intermediate vector of a symbol is not congruent to the symbol's
    /// standard basis vector modulo `q`.
    #[error("leading term mismatch for symbol {symbol}: coefficient {coefficient}")]
    LeadingTermMismatch { symbol: String, coefficient: String },

    /// A computed canonical basis vector failed the `b ≡ v mod qL` check.
    #[error("lattice violation for symbol {symbol} at {at}: coefficient {coefficient}")]
    LatticeViolation {
        symbol: String,
        at: String,
        coefficient: String,
    },

    #[error("{0}: ratio -k#/c0 is not an integer")]
    NonIntegralRatio(String),

    #[error("parameters are not sorted: {0}")]
    UnsortedParameters(String),

    /// The parameters match none of the degenerate regimes and yet the
    /// discriminant of the characteristic polynomial is a square.
    #[error("regime mismatch: {0}")]
    RegimeMismatch(String),

    #[error("negative multiplicity {mult} of {dpartition} at q = 1")]
    NegativeMultiplicity { dpartition: String, mult: String },
}
