use thiserror::Error;

use crate::rational::{Frac, Mat2};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A fraction or order outside the values this library works with.
    #[error("domain error: {0}")]
    Domain(String),

    /// A matrix image left [0, 1] or had a non-positive denominator.
    #[error("{matrix} sends {input} to [{h}, {k}], which is not a fraction in [0, 1]")]
    OutOfDomain {
        matrix: Mat2,
        input: Frac,
        h: i64,
        k: i64,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid sequence spec: {0}")]
    Spec(String),

    #[error("order {order} exceeds the configured cap {cap}")]
    Cap { order: i64, cap: i64 },

    #[error("no closed-form count for {0}; count the generated sequence instead")]
    NoFormula(String),

    #[error("identity law {law} fails at {params}")]
    IdentityViolation { law: &'static str, params: String },

    #[error("map {map} failed verification: {detail}")]
    VerificationFailure { map: String, detail: String },

    #[error("neighbor condition fails at index {index}: {detail}")]
    NeighborViolation { index: usize, detail: String },

    #[error("unknown map id `{0}`")]
    UnknownMap(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: &'static str },
}
