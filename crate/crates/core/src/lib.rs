//! Relational algebra over neutrosophic relations: tuples graded by
//! ⟨belief, doubt⟩ pairs that may be incomplete or inconsistent.
//!
//! - [`relation`]: exact grades, schemes, tuples, relation values.
//! - [`algebra`]: the operators, split/combine, robust evaluation.
//! - [`oracle`]: the fuzzy reference algebra and exhaustive generalization checks.
//! - [`query`]: the query language.

pub mod algebra;
pub mod error;
pub mod oracle;
pub mod query;
pub mod relation;

#[cfg(test)]
mod testkit;

pub use error::{Error, Result, SyntaxError};
pub use relation::{ConfidencePair, Grade, NeutrosophicRelation, Scheme};
