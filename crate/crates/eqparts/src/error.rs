//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by parsing, enumeration, asymptotics and sampling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Part-set syntax error at a byte position, with the token class
    /// expected there.
    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: &'static str },

    /// A part set must contain at least one part with nonzero weight.
    #[error("part set is empty")]
    EmptySet,

    /// Part value 0 is rejected unless zero parts were explicitly enabled.
    #[error("part value 0 is not allowed here")]
    ZeroPart,

    /// Asymptotics need the weights to sum beyond 1 (possibly to infinity)
    /// so that the singularity of 1/(1 - p(z)) is a pole inside the disk of
    /// convergence of p.
    #[error("weight sum {weight_sum} does not exceed 1; asymptotic regime undefined")]
    NotSupercritical { weight_sum: String },

    /// Asymptotics need gcd of the support to be 1.
    #[error("part set is periodic with gcd {gcd}")]
    Periodic { gcd: u32 },

    /// Conditional probability is undefined when a coordinate admits no
    /// composition of n at all.
    #[error("coordinate {coordinate} has no compositions of {n}; probability undefined")]
    UndefinedProbability { coordinate: usize, n: u64 },

    /// Sampling from an empty set of compositions.
    #[error("no compositions of {n} for this part set")]
    NoCompositions { n: u64 },

    /// Requested table size exceeds the configured ceiling.
    #[error("requested n = {requested} exceeds capacity cap {cap}")]
    CapacityExceeded { requested: u64, cap: u64 },

    /// Evaluation point outside the domain of convergence.
    #[error("evaluation point outside domain: {message}")]
    OutOfDomain { message: String },
}

impl Error {
    /// Stable short name, used by the command-line interface to label
    /// domain errors.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "Parse",
            Error::EmptySet => "EmptySet",
            Error::ZeroPart => "ZeroPart",
            Error::NotSupercritical { .. } => "NotSupercritical",
            Error::Periodic { .. } => "Periodic",
            Error::UndefinedProbability { .. } => "UndefinedProbability",
            Error::NoCompositions { .. } => "NoCompositions",
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::OutOfDomain { .. } => "OutOfDomain",
        }
    }
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
