use thiserror::Error;

/// Errors raised by frame construction and the exterior-calculus operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("frame mismatch: operands live on spaces of dimension {left} and {right}")]
    FrameMismatch { left: usize, right: usize },

    #[error("degree underflow: operation needs a form of degree >= {needed}, got {got}")]
    DegreeUnderflow { needed: usize, got: usize },

    #[error("type projection is only defined for forms of degree 2 or 3, got {0}")]
    DegreeUnsupported(usize),

    #[error("covariant derivative supports tensors of valence <= 4, got {0}")]
    UnsupportedValence(usize),

    #[error("operation requires complex dimension m >= 2, got m = {0}")]
    UnsupportedDimension(usize),

    #[error("metric is not symmetric positive definite: {0}")]
    InvalidMetric(String),

    #[error("invalid complex structure: {0}")]
    InvalidComplexStructure(String),

    #[error("structure constants violate the Jacobi identity (residual {0:.3e})")]
    JacobiViolation(f64),

    #[error("almost complex structure is not integrable (Nijenhuis norm {0:.3e}); no characteristic connection")]
    NoCharacteristicConnection(f64),

    #[error("characteristic torsion is not parallel (residual {0:.3e})")]
    NonParallelTorsion(f64),

    #[error("Lee form vanishes; no distinguished direction to decompose along")]
    NoLeeDirection,

    #[error("endomorphisms A+ and A- do not commute (residual {0:.3e}); eigenspace split failed")]
    DecompositionFailure(f64),

    #[error("modification pair (g', J') is not parallel for the characteristic connection (residual {0:.3e})")]
    NonParallelPair(f64),

    #[error("invalid parallel modification: {0}")]
    InvalidModification(String),

    #[error("not a valid Sasakian frame: {0}")]
    InvalidSasakian(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("conformal factor must be positive over a full period (min sample {0:.3e})")]
    InvalidConformalFactor(f64),

    #[error("function is not periodic with the declared period (residual {0:.3e})")]
    NotPeriodic(f64),

    #[error("constructed frame violates '{check}' (residual {residual:.3e})")]
    InvariantViolation { check: String, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
