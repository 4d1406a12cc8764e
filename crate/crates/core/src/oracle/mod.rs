//! Fuzzy reference algebra and exhaustive generalization checks.

mod check;
mod fuzzy_ops;
mod reps;

pub use check::{
    check_representation, check_strong, check_weak, consistent_relations, formula_suite,
    representation_schemes, standard_suite, total_relations, Budget, CheckCase, CheckOutcome,
    Verdict,
};
pub use fuzzy_ops::{
    fuzzy_join, fuzzy_project, fuzzy_select, fuzzy_set_op, FuzzyOperator, FuzzySetOp,
};
pub use reps::{reps, reps_cardinality, s_image, FuzzyRelationSet, GradeGrid};
