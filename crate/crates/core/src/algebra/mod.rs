//! Operators on neutrosophic relations.
//!
//! Every operator is defined pointwise over the whole tuple space with ⟨0,0⟩
//! for unstored tuples, and returns a canonical relation. Operands carrying
//! several pairs per tuple are handled by combining pairs: binary operators
//! over the product of the two pair sets, unary ones pair by pair.
//!
//! [`robust_apply`] is the evaluation recipe for arbitrary (possibly
//! inconsistent) operands: split every operand, apply the operator, combine.

mod formula;
mod relational;
mod set_ops;
mod split;

pub use formula::{CompiledFormula, SelectionFormula};
pub use relational::{join, project, select};
pub use set_ops::{complement, difference, intersection, union};
pub use split::{combine, split};

use std::fmt;

use crate::error::{Error, Result};
use crate::relation::{NeutrosophicRelation, Scheme};

/// Default bound on the tuple space a selection may materialize.
pub const DEFAULT_MATERIALIZE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    /// Largest tuple space a selection will enumerate.
    pub materialize_cap: u64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            materialize_cap: DEFAULT_MATERIALIZE_CAP,
        }
    }
}

/// The generalized operators, as first-class values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Operator {
    Union,
    Intersection,
    Difference,
    Complement,
    Join,
    Project(Vec<String>),
    Select(SelectionFormula),
}

impl Operator {
    pub fn arity(&self) -> usize {
        match self {
            Operator::Union | Operator::Intersection | Operator::Difference | Operator::Join => 2,
            Operator::Complement | Operator::Project(_) | Operator::Select(_) => 1,
        }
    }

    fn check_arity<T>(&self, operands: &[T]) -> Result<()> {
        if operands.len() == self.arity() {
            Ok(())
        } else {
            Err(Error::OperandCount {
                expected: self.arity(),
                found: operands.len(),
            })
        }
    }

    /// Result scheme for operands on `schemes`.
    pub fn output_scheme(&self, schemes: &[&Scheme]) -> Result<Scheme> {
        self.check_arity(schemes)?;
        match self {
            Operator::Union | Operator::Intersection | Operator::Difference => {
                set_ops::same_scheme(schemes[0], schemes[1])?;
                Ok(schemes[0].clone())
            }
            Operator::Join => schemes[0].join(schemes[1]),
            Operator::Complement => Ok(schemes[0].clone()),
            Operator::Project(attrs) => schemes[0].project_onto(attrs),
            Operator::Select(f) => {
                f.check(schemes[0])?;
                Ok(schemes[0].clone())
            }
        }
    }

    /// Applies the operator directly. Projection rejects multi-pair operands.
    pub fn apply(
        &self,
        operands: &[&NeutrosophicRelation],
        config: &EvalConfig,
    ) -> Result<NeutrosophicRelation> {
        self.check_arity(operands)?;
        match self {
            Operator::Union => union(operands[0], operands[1]),
            Operator::Intersection => intersection(operands[0], operands[1]),
            Operator::Difference => difference(operands[0], operands[1]),
            Operator::Join => join(operands[0], operands[1]),
            Operator::Complement => Ok(complement(operands[0])),
            Operator::Project(attrs) => project(operands[0], attrs),
            Operator::Select(f) => select(operands[0], f, config),
        }
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Union => write!(f, "union"),
            Operator::Intersection => write!(f, "intersection"),
            Operator::Difference => write!(f, "difference"),
            Operator::Complement => write!(f, "complement"),
            Operator::Join => write!(f, "join"),
            Operator::Project(attrs) => write!(f, "project[{}]", attrs.join(",")),
            Operator::Select(formula) => {
                write!(f, "select[{}]", crate::query::format_formula(formula))
            }
        }
    }
}

/// `combine(op(split(R₁), …, split(Rₙ)))`.
///
/// Projection over split operands uses the choice-function reading: every
/// extension contributes one of its pairs, the extrema are taken per choice,
/// and combine collapses the choices. That reduces to belief = max over
/// extensions of the largest pair belief, doubt = min over extensions of the
/// largest pair doubt.
pub fn robust_apply(
    op: &Operator,
    operands: &[&NeutrosophicRelation],
    config: &EvalConfig,
) -> Result<NeutrosophicRelation> {
    op.check_arity(operands)?;
    let split_operands: Vec<NeutrosophicRelation> = operands.iter().map(|r| split(r)).collect();
    let refs: Vec<&NeutrosophicRelation> = split_operands.iter().collect();
    let inner = match op {
        Operator::Project(attrs) => relational::project_collapsed(refs[0], attrs)?,
        _ => op.apply(&refs, config)?,
    };
    Ok(combine(&inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{example2_r, example2_s, rows_of};
    use crate::relation::ConfidencePair;

    #[test]
    fn robust_join_gives_fifteen_rows() {
        let cfg = EvalConfig::default();
        let t1 = robust_apply(&Operator::Join, &[&example2_r(), &example2_s()], &cfg).unwrap();
        assert_eq!(t1.stored_len(), 15);
        let t2 = robust_apply(&Operator::Project(vec!["X".into(), "Z".into()]), &[&t1], &cfg).unwrap();
        assert_eq!(
            rows_of(&t2),
            vec![
                ("(a,a)".to_string(), vec![ConfidencePair::FALSE]),
                ("(a,b)".to_string(), vec![ConfidencePair::FALSE]),
                ("(a,c)".to_string(), vec![ConfidencePair::FALSE]),
                ("(b,a)".to_string(), vec![ConfidencePair::TRUE]),
                ("(c,a)".to_string(), vec![ConfidencePair::TRUE]),
            ]
        );
    }

    #[test]
    fn robust_matches_raw_on_consistent_functional_operands() {
        let cfg = EvalConfig::default();
        let r = combine(&split(&example2_r()));
        let consistent = crate::algebra::select(&r, &SelectionFormula::eq_const("X", "a"), &cfg).unwrap();
        assert!(consistent.is_consistent());
        for op in [
            Operator::Complement,
            Operator::Project(vec!["Y".into()]),
            Operator::Select(SelectionFormula::eq_attr("X", "Y")),
        ] {
            assert_eq!(
                robust_apply(&op, &[&consistent], &cfg).unwrap(),
                op.apply(&[&consistent], &cfg).unwrap()
            );
        }
        for op in [Operator::Union, Operator::Intersection, Operator::Difference, Operator::Join] {
            assert_eq!(
                robust_apply(&op, &[&consistent, &consistent], &cfg).unwrap(),
                op.apply(&[&consistent, &consistent], &cfg).unwrap()
            );
        }
    }

    #[test]
    fn arity_is_checked() {
        let r = example2_r();
        let cfg = EvalConfig::default();
        assert!(matches!(
            Operator::Union.apply(&[&r], &cfg),
            Err(Error::OperandCount { expected: 2, found: 1 })
        ));
        assert!(robust_apply(&Operator::Complement, &[&r, &r], &cfg).is_err());
    }

    #[test]
    fn output_scheme_rules() {
        let r = example2_r();
        let s = example2_s();
        let joined = Operator::Join.output_scheme(&[r.scheme(), s.scheme()]).unwrap();
        assert_eq!(joined.names().collect::<Vec<_>>(), ["X", "Y", "Z"]);
        assert!(Operator::Union.output_scheme(&[r.scheme(), s.scheme()]).is_err());
    }
}
