use thiserror::Error;

/// Errors produced by the exact-arithmetic core and the modules built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("incompatible radicands {left} and {right}: composite fields are not supported")]
    IncompatibleRadicands { left: u64, right: u64 },

    #[error("radicand exceeds the supported range")]
    RadicandTooLarge,

    #[error("point is mapped to infinity (zero denominator)")]
    Pole,

    #[error("matrix is not unimodular: determinant {0}")]
    NotUnimodular(String),

    #[error("matrix must have determinant +1")]
    NotSpecialLinear,

    #[error("degenerate lattice: periods are not linearly independent over the reals")]
    DegenerateLattice,

    #[error("point is not in the upper half plane")]
    NotInUpperHalfPlane,

    #[error("value must be strictly positive: {0}")]
    NotPositive(&'static str),

    #[error("matrix does not preserve the positive cone: {0} would be non-positive")]
    PositivityViolation(&'static str),

    #[error("irrational theta required, got a rational number")]
    ThetaRational,

    #[error("malformed continued fraction: {0}")]
    MalformedContinuedFraction(String),

    #[error("period not closed within {0} terms")]
    MaxTermsExhausted(usize),

    #[error("continued fraction has only {available} terms, {requested} requested")]
    NotEnoughTerms { available: usize, requested: usize },

    #[error("tails do not coincide at the given indices")]
    TailMismatch,

    #[error("witness fails the order-isomorphism check at ({0}, {1})")]
    OrderCheckFailed(i64, i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::IncompatibleRadicands { .. } => "incompatible_radicands",
            Error::RadicandTooLarge => "radicand_too_large",
            Error::Pole => "pole",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::NotSpecialLinear => "not_special_linear",
            Error::DegenerateLattice => "degenerate_lattice",
            Error::NotInUpperHalfPlane => "not_in_upper_half_plane",
            Error::NotPositive(_) => "not_positive",
            Error::PositivityViolation(_) => "positivity_violation",
            Error::ThetaRational => "theta_rational",
            Error::MalformedContinuedFraction(_) => "malformed_cf",
            Error::MaxTermsExhausted(_) => "max_terms_exhausted",
            Error::NotEnoughTerms { .. } => "not_enough_terms",
            Error::TailMismatch => "tail_mismatch",
            Error::OrderCheckFailed(..) => "order_check_failed",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::Parse(_) => "parse_error",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
