use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Location and expectation set of a DSL syntax failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset into the source where parsing stopped.
    pub offset: usize,
    pub expected: BTreeSet<String>,
    pub found: Option<String>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SyntaxError at offset {}", self.offset)?;
        if !self.expected.is_empty() {
            let expected: Vec<&str> = self.expected.iter().map(String::as_str).collect();
            write!(f, ": expected one of {}", expected.join(", "))?;
        }
        match &self.found {
            Some(tok) => write!(f, ", found {tok}"),
            None => write!(f, ", found end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: {0}")]
    DivisionNotExact(String),
    #[error("division by the zero class")]
    DivisionByZero,
    #[error("symmetric power needs an effective class, coefficient of L^{index} is {coefficient}")]
    NotEffective { index: usize, coefficient: String },
    #[error("{what} = {value} is out of range ({allowed})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        allowed: &'static str,
    },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Syntax(SyntaxError),
    #[error("ArityError at offset {offset}: {message}")]
    Arity { offset: usize, message: String },
    #[error("enumeration budget exceeded: {needed} generator pairs > limit {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },
    #[error("registry: {0}")]
    Registry(String),
}

impl From<SyntaxError> for Error {
    fn from(err: SyntaxError) -> Self {
        Error::Syntax(err)
    }
}
