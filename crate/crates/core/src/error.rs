use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra must have at least one element")]
    EmptyAlgebra,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("cayley table is malformed: {0}")]
    InvalidTable(String),
    #[error("permutation is not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("algebra is not a BCI-algebra")]
    NotBci,
    #[error("bijection is not an automorphism")]
    NotAutomorphism,
    #[error("set of bijections is not a group of automorphisms")]
    NotAutomorphismGroup,
    #[error("automorphism group is not Boolean")]
    NotBooleanGroup,
    #[error("identity index {0} outside 1..=60")]
    FenyvesIndex(usize),
    #[error("identity F{0} is not covered by a transfer theorem")]
    UnsupportedIndex(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("enumeration exceeded its time budget")]
    BudgetExceeded,
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
