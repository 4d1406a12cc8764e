//! Core value types: grades, schemes, tuples, and the two relation kinds.

pub mod fuzzy;
pub mod grade;
pub mod neutro;
pub mod scheme;

pub use fuzzy::FuzzyRelation;
pub use grade::{ConfidencePair, Grade};
pub use neutro::{canonicalize, NeutrosophicRelation, PairSet, RelationClassification};
pub use scheme::{Attribute, AttributeDomain, Scheme, Tuple, TupleSpace};
