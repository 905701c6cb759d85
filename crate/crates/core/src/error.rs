use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} variables vs {right} variables")]
    Dimension { left: usize, right: usize },

    #[error("the ideal has no generators")]
    EmptyIdeal,

    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),

    #[error("the unit monomial cannot be an ideal generator")]
    UnitGenerator,

    #[error("variable index x{index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("{what}: size {size} exceeds the limit {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },

    #[error("malformed partition: {0}")]
    Structural(String),

    #[error("step budget of {0} exhausted before the stop condition held")]
    Budget(usize),

    #[error("partition violates the Schmitt-Vogel conditions: {0}")]
    InvalidPartition(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
