//! Error types shared across the library.

use thiserror::Error;

use crate::series::ValOrBound;

/// Failures in the arithmetic substrate: fields, polynomials, series.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field spec {0:?} (expected \"Q\" or \"Fp:<prime>\")")]
    BadFieldSpec(String),
    #[error("cannot parse coefficient {0:?}")]
    BadCoefficient(String),
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("arguments must share one precision, got {0} and {1}")]
    PrecisionMismatch(usize, usize),
    #[error("series is not a unit: constant coefficient is zero")]
    NonUnit,
}

/// Failures when validating or transporting arcs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArcError {
    #[error("arc does not lie on the scheme: equation {index} has valuation {witness}")]
    NotOnScheme { index: usize, witness: usize },
    #[error("ord_along requires at least one generator; pass [0] or [1] explicitly")]
    EmptyIdeal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Failures in the tangent-map pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("source is not smooth along the arc (center lies in the singular locus)")]
    SmoothnessFailure,
    #[error("image arc not certified outside the singular arcs of the target: ord = {0}")]
    SingularTargetArc(ValOrBound),
    #[error("Jacobian rank {found} contradicts the expected corank (expected {expected})")]
    RankMismatch { expected: usize, found: usize },
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("solve failure: {0}")]
    SolveFailure(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Arc(#[from] ArcError),
}

impl From<AlgebraError> for TangentError {
    fn from(e: AlgebraError) -> Self {
        TangentError::Arc(ArcError::Algebra(e))
    }
}

/// Failures in jet enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JetError {
    #[error("enumeration budget exceeded: {candidates} candidates > budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
