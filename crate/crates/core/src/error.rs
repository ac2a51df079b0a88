use thiserror::Error;

/// Errors raised by the exact-arithmetic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not invertible in the coefficient ring")]
    NotInvertible(String),

    #[error("constant term must be {expected}, found {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },

    #[error("compositional reversion needs f0 = 0 and an invertible f1")]
    NotRevertible,

    #[error("truncation order must be positive")]
    ZeroOrder,

    #[error("insufficient order: need {needed} coefficients, have {available}")]
    InsufficientOrder { needed: usize, available: usize },

    #[error("matrix kinds differ ({0} vs {1})")]
    KindMismatch(&'static str, &'static str),

    #[error("no consistent B-sequence: recurrence fails at row {row}, column {col}")]
    NoConsistentBSequence { row: usize, col: usize },

    #[error("factorization inconsistency: {0}")]
    FactorizationInconsistency(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("partition enumeration limited to n <= {max}, requested {n}")]
    PartitionLimit { n: usize, max: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
