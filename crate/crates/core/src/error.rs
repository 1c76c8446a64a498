use thiserror::Error;

/// Errors raised by constructions whose preconditions fail.
///
/// Property failures (a functor that is not an equivalence, a non-invertible
/// Beck–Chevalley cell, ...) are reported as values, never as errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("structural error: {0}")]
    Structural(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("not a descent datum at {0}")]
    NotDescentDatum(String),
    #[error("component at {0} is not a morphism of the lax descent category")]
    NotDescentMorphism(String),
    #[error("no mediating morphism at {0}")]
    NoMediator(String),
    #[error("{line}:{col}: {message}; expected one of: {}", expected.join(", "))]
    Syntax {
        line: usize,
        col: usize,
        message: String,
        expected: Vec<String>,
    },
    #[error("{line}:{col}: {message}")]
    Semantic {
        line: usize,
        col: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
