use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("divisor has no variable in which it is monic up to a unit")]
    UnsupportedDivisor,
    #[error("fraction is not a Laurent polynomial")]
    NotPolynomial,
    #[error("polynomial is not symmetric in the z-variables")]
    NotSymmetric,
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },
    #[error("wheel indices must not all coincide")]
    AllEqual,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("basis became dependent at a specialization; re-sample")]
    RankDrop,
    #[error("non-integral coefficient in a series expected to be integral")]
    NonIntegralCoefficient,
}

pub type Result<T> = std::result::Result<T, Error>;
