//! Crate-wide error type.

use crate::engines::ResonanceReport;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, HeunError>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Resonance,
    Precondition,
    Internal,
}

#[derive(Debug, Clone, Error)]
pub enum HeunError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("constant term of the series is not invertible")]
    NonUnit,
    #[error("binomial expansion needs a factor of the form 1 + u with u of positive valuation")]
    NotUnitForm,
    #[error("argument must vanish at order zero")]
    NonPositiveValuation,
    #[error("zero factor in Pochhammer symbol ({0})_{1}")]
    PochhammerPole(String, i64),
    #[error("resonance: {0}")]
    Resonance(ResonanceReport),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("Laurent window too small: nonzero term at xi^{exp}, q^{order} was clipped")]
    WindowTooSmall { exp: i64, order: usize },
    #[error("branch hazard: {0}")]
    BranchHazard(String),
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("iteration did not stabilise: {0}")]
    NoConvergence(String),
}

impl HeunError {
    pub fn class(&self) -> ErrorClass {
        match self {
            HeunError::Resonance(_) => ErrorClass::Resonance,
            HeunError::PochhammerPole(..)
            | HeunError::Precondition(_)
            | HeunError::BranchHazard(_)
            | HeunError::Domain(_) => ErrorClass::Precondition,
            _ => ErrorClass::Internal,
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        HeunError::Precondition(msg.into())
    }
}
