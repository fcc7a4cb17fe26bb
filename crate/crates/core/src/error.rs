use thiserror::Error;

/// Errors raised by the polynomial, series, bounds and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index must be at least 1, got {0}")]
    InvalidIndex(usize),

    #[error("characteristic roots coincide (discriminant = 0); use the recurrence instead")]
    RepeatedRoot,

    #[error("division by a series with zero constant term")]
    DivisionByZeroConstantTerm,

    #[error("inner series of a composition must have zero constant term")]
    InnerConstantTermNonzero,

    #[error("series must be normalized as z + c2 z^2 + ... to be inverted")]
    NotNormalized,

    /// A bound or Θ divides by a quantity that vanishes at this point.
    #[error("degenerate denominator: {quantity}")]
    DegenerateDenominator { quantity: String },

    #[error("eta must be set for the Fekete-Szego functional")]
    MissingEta,

    #[error("alpha shift {alpha_shift} differs from a = {a}; f'(0) cannot equal 1")]
    AlphaShiftMismatch { alpha_shift: f64, a: f64 },

    #[error("Schwarz point is infeasible: {0}")]
    InfeasiblePoint(String),

    #[error("feasible set is empty")]
    EmptyFeasibleSet,

    #[error("grid must be ≥ 11 per axis, got {0}")]
    GridTooCoarse(usize),

    #[error("family {family} requires (a, b, p, q) = {expected}")]
    FamilyMismatch { family: String, expected: String },

    #[error("invalid number {0:?}")]
    ParseNumber(String),
}

impl Error {
    pub(crate) fn degenerate(quantity: impl Into<String>) -> Self {
        Error::DegenerateDenominator {
            quantity: quantity.into(),
        }
    }

    /// True for errors caused by the mathematics of the input point rather than by misuse.
    pub fn is_degeneracy(&self) -> bool {
        matches!(
            self,
            Error::DegenerateDenominator { .. } | Error::RepeatedRoot | Error::EmptyFeasibleSet
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
