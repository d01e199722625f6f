use thiserror::Error;

/// Everything that can go wrong while building or combining q-Appell data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q must not be 0, 1, or -1")]
    InvalidQ,

    #[error("invalid rational literal `{0}`")]
    ParseScalar(String),

    #[error("the leading determining coefficient a_0 must be nonzero")]
    ZeroLeadingCoefficient,

    #[error("degree {requested} requested but only coefficients up to {available} are available")]
    InsufficientCoefficients { requested: usize, available: usize },

    #[error("series constant term is not invertible")]
    NonUnitConstantTerm,

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cannot differentiate an order-0 series without losing its top coefficient")]
    OrderUnderflow,

    #[error("sequences use different values of q")]
    ContextMismatch,

    #[error("sum of determining functions has a vanishing constant term")]
    DegenerateSum,

    #[error("beta must be nonzero")]
    ZeroBeta,

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("C_1 must be nonzero for a nondegenerate three-term recurrence")]
    DegenerateRecurrence,

    #[error("the recursion formula starts at n = 1")]
    RecursionIndex,

    #[error("polynomial {index} does not have exact degree {index}")]
    WrongDegree { index: usize },

    #[error("sequence violates D_q f_n = [n]_q f_(n-1)(qx) at n = {index}")]
    NotTypeTwo { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
