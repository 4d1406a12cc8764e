use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("scheme mismatch: {0}")]
    SchemeMismatch(String),

    #[error("invalid scheme: {0}")]
    InvalidScheme(String),

    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("projection attributes {attrs:?} are not a subset of the operand scheme")]
    ProjectionNotSubset { attrs: Vec<String> },

    #[error("value `{value}` is not in the domain of attribute `{attribute}`")]
    DomainViolation { attribute: String, value: String },

    #[error("tuple has {found} values, scheme has {expected} attributes")]
    ArityMismatch { expected: usize, found: usize },

    #[error("grade out of range: {0}")]
    GradeOutOfRange(String),

    #[error("malformed grade `{0}`")]
    MalformedGrade(String),

    #[error("relation is not total")]
    NotTotal,

    #[error("relation is not consistent")]
    NotConsistent,

    #[error("relation is not functional: tuple {tuple} carries {pairs} confidence pairs")]
    NotFunctional { tuple: String, pairs: usize },

    #[error("grade {grade} is not on the grid with denominator {denominator}")]
    OffGrid { grade: String, denominator: u32 },

    #[error("materializing {size} tuples exceeds the cap of {cap}")]
    MaterializationLimit { size: u128, cap: u64 },

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("operator expects {expected} operand(s), got {found}")]
    OperandCount { expected: usize, found: usize },

    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

/// Parse failure with a 1-based source position and the tokens that would
/// have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SyntaxError {
    pub line: usize,
    pub column: usize,
    pub found: String,
    pub expected: Vec<String>,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: found {}",
            self.line, self.column, self.found
        )?;
        if !self.expected.is_empty() {
            write!(f, ", expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}
