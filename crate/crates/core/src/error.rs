use thiserror::Error;

use crate::arith::Natural;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    ZeroArgument,
    #[error("{0} is not prime")]
    NotPrime(Natural),
    #[error("expected an integer >= {min}, got {got}")]
    TooSmall { min: u32, got: Natural },

    #[error("ring needs at least one modulus, each >= 1")]
    InvalidRing,
    #[error("operands live over different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },
    #[error("element has {got} components, ring has {expected}")]
    ElementArity { expected: usize, got: usize },
    #[error("divisor is not monic")]
    NotMonic,

    #[error("{0} is prime; the minimal vanishing polynomial over a field is monic")]
    PrimeModulus(Natural),
    #[error("value too large to materialize: {0}")]
    TooLarge(String),

    #[error("component index {index} out of range for {len} components")]
    BadIndex { index: usize, len: usize },
    #[error("product of the zero divisors is nonzero")]
    NonzeroProduct,
    #[error("grouping reduction produced a non-vanishing polynomial")]
    GroupingNotVanishing,

    #[error("budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coefficient tuple at {pos} has {got} entries, ring has {expected} components")]
    CoefficientArity {
        pos: usize,
        expected: usize,
        got: usize,
    },
}
