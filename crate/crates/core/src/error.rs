use thiserror::Error;

use crate::attached::AttachedSet;
use crate::ideal::IdealError;

/// Errors of the module-level and realization operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("a module needs at least one minimal prime")]
    EmptyModule,
    #[error("minimal primes {0} and {1} are comparable")]
    ComparablePrimes(usize, usize),
    #[error("module has Krull dimension 0; a positive dimension is required")]
    ZeroDimensional,
    #[error("index {index} is out of range for {len} maximal-dimensional primes")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the attached set is empty")]
    EmptyAttachedSet,
    #[error("{0} is not a minimal prime of the module outside the target set")]
    NotExcludedPrime(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("no dimension-one prime over {prime} found with coefficients up to {bound}")]
    ConstructionFailed { prime: String, bound: u32 },
    #[error("{count} maximal-dimensional primes exceed the enumeration limit of {limit}")]
    TooManyComponents { count: usize, limit: usize },
    #[error("subset {subset}: {source}")]
    Subset {
        subset: AttachedSet,
        #[source]
        source: Box<Error>,
    },
    #[error("verification fault: {0}")]
    Fault(String),
}

impl Error {
    /// Unsupported input or exhausted search, as opposed to bad input or a fault.
    pub fn is_unsupported(&self) -> bool {
        match self {
            Error::Unsupported(_) | Error::ConstructionFailed { .. } => true,
            Error::Subset { source, .. } => source.is_unsupported(),
            _ => false,
        }
    }

    pub fn is_fault(&self) -> bool {
        match self {
            Error::Fault(_) | Error::Ideal(IdealError::Fault(_)) => true,
            Error::Subset { source, .. } => source.is_fault(),
            _ => false,
        }
    }
}
