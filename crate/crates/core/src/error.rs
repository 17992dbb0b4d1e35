use crate::moebius::{CountFamily, SelectorKind};

/// Errors surfaced by the counting library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("sieve limit must be at least 2, got {0}")]
    LimitTooSmall(u64),
    #[error("sieve limit {0} exceeds the supported table size (max {max})", max = u32::MAX)]
    LimitTooLarge(u64),
    #[error("{n} is outside the sieve range [1, {limit}]")]
    OutOfSieveRange { n: u64, limit: u64 },
    #[error("sieve limit {limit} is too small, need at least {needed}")]
    SieveTooSmall { needed: u64, limit: u64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be an odd prime, got {0}")]
    DegreeNotOddPrime(u64),
    #[error("degree {degree} polynomial needs {degree} lower coefficients, got {got}")]
    CoefficientCount { degree: u64, got: usize },
    #[error("modulus {0} is not squarefree")]
    NotSquarefree(u64),
    #[error("modulus {s} must be coprime to the degree {d}")]
    NotCoprimeToDegree { s: u64, d: u32 },
    #[error("selector {selector:?} is incompatible with family {family:?}: its members must be coprime to the degree")]
    SelectorFamilyMismatch {
        selector: SelectorKind,
        family: CountFamily,
    },
    #[error("enumeration of {cost} polynomials exceeds the budget of {budget}")]
    BudgetExceeded { cost: u128, budget: u128 },
    #[error("coefficient space (2*{height}+1)^{degree} exceeds the 128-bit accumulator range")]
    SpaceTooLarge { height: u64, degree: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
