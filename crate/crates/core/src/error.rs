use thiserror::Error;

use crate::norm::NormInterval;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("({x}, {y}, {z}) is not a Markov triple")]
    NotMarkov { x: String, y: String, z: String },

    #[error("invalid slope {p}/{q}: {reason}")]
    InvalidSlope {
        p: u64,
        q: u64,
        reason: &'static str,
    },

    #[error("slope {p}/{q} is a boundary fraction and has no tree position")]
    OutOfRange { p: u64, q: u64 },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("trace {0} is not hyperbolic (|t| <= 2)")]
    NotHyperbolic(String),

    #[error("the zero vector has no direction")]
    ZeroVector,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("tolerance not reached within {steps} refinements; best interval [{}, {}]", interval.lo, interval.hi)]
    AccuracyLimit {
        interval: NormInterval,
        steps: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
