//! Crate-wide error type.

use core::fmt;

/// Errors reported by the algebra, table, and summation operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands live in Pascal spaces of different dimension.
    DimensionMismatch { left: usize, right: usize },
    /// Two operands carry different commutation modes.
    ModeMismatch,
    /// Dimension outside the supported range `1..=MAX_DIM` (or outside an
    /// operation-specific bound, e.g. the 2x2 matrix oracle stops at 3).
    InvalidDimension(usize),
    /// A generator position outside `0..dim`.
    InvalidPosition(usize),
    /// A multi-index exponent was negative where only nonnegative exponents
    /// are allowed, or negative in a non-dominant Laurent position.
    NegativeExponent,
    /// A Laurent-mode element was passed where a polynomial one is required.
    LaurentInput,
    /// The element has no invertible leading term at the dominant position.
    DominantAbsent,
    /// The element is not of a shape the series inversion supports.
    UnsupportedShape,
    /// Multinomial arguments do not sum to the stated total.
    SumMismatch,
    /// A multinomial part was negative where nonnegative parts are required.
    NegativePart,
    /// More than one Gamma argument stays at a pole after pairing, so the
    /// limit does not exist.
    PoleRemains,
    /// A generating function was evaluated at a zero of its denominator.
    PoleAtEvaluation,
    /// An index or parameter outside the operation's stated domain.
    OutOfRange(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::ModeMismatch => write!(f, "commutation mode mismatch"),
            Error::InvalidDimension(d) => write!(f, "unsupported dimension {d}"),
            Error::InvalidPosition(p) => write!(f, "generator position {p} out of range"),
            Error::NegativeExponent => write!(f, "negative exponent outside the dominant position"),
            Error::LaurentInput => write!(f, "Laurent element where a polynomial one is required"),
            Error::DominantAbsent => write!(f, "no invertible term at the dominant position"),
            Error::UnsupportedShape => write!(f, "element shape not supported by series inversion"),
            Error::SumMismatch => write!(f, "multinomial parts do not sum to the total"),
            Error::NegativePart => write!(f, "negative multinomial part"),
            Error::PoleRemains => write!(f, "Gamma pole remains after pairing"),
            Error::PoleAtEvaluation => write!(f, "generating function evaluated at a pole"),
            Error::OutOfRange(what) => write!(f, "argument out of range: {what}"),
        }
    }
}

/// Convenience alias for results carrying [`Error`].
pub type Result<T> = core::result::Result<T, Error>;
