//! The classical fuzzy-relation algebra the neutrosophic operators generalize.

use std::fmt;

use crate::algebra::{Operator, SelectionFormula};
use crate::error::{Error, Result};
use crate::relation::{FuzzyRelation, Grade};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FuzzySetOp {
    Union,
    Complement,
    Intersection,
    Difference,
}

/// Fuzzy counterparts of [`Operator`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FuzzyOperator {
    Union,
    Complement,
    Intersection,
    Difference,
    Join,
    Project(Vec<String>),
    Select(SelectionFormula),
}

impl FuzzyOperator {
    /// The fuzzy operator a neutrosophic operator is meant to generalize.
    pub fn counterpart(op: &Operator) -> Self {
        match op {
            Operator::Union => FuzzyOperator::Union,
            Operator::Intersection => FuzzyOperator::Intersection,
            Operator::Difference => FuzzyOperator::Difference,
            Operator::Complement => FuzzyOperator::Complement,
            Operator::Join => FuzzyOperator::Join,
            Operator::Project(a) => FuzzyOperator::Project(a.clone()),
            Operator::Select(f) => FuzzyOperator::Select(f.clone()),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            FuzzyOperator::Union
            | FuzzyOperator::Intersection
            | FuzzyOperator::Difference
            | FuzzyOperator::Join => 2,
            _ => 1,
        }
    }

    pub fn apply(&self, operands: &[&FuzzyRelation]) -> Result<FuzzyRelation> {
        if operands.len() != self.arity() {
            return Err(Error::OperandCount {
                expected: self.arity(),
                found: operands.len(),
            });
        }
        let r = operands[0];
        match self {
            FuzzyOperator::Union => fuzzy_set_op(FuzzySetOp::Union, r, Some(operands[1])),
            FuzzyOperator::Intersection => {
                fuzzy_set_op(FuzzySetOp::Intersection, r, Some(operands[1]))
            }
            FuzzyOperator::Difference => {
                fuzzy_set_op(FuzzySetOp::Difference, r, Some(operands[1]))
            }
            FuzzyOperator::Complement => fuzzy_set_op(FuzzySetOp::Complement, r, None),
            FuzzyOperator::Join => fuzzy_join(r, operands[1]),
            FuzzyOperator::Project(attrs) => fuzzy_project(r, attrs),
            FuzzyOperator::Select(f) => fuzzy_select(r, f),
        }
    }
}

impl fmt::Display for FuzzyOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuzzyOperator::Union => write!(f, "fuzzy union"),
            FuzzyOperator::Complement => write!(f, "fuzzy complement"),
            FuzzyOperator::Intersection => write!(f, "fuzzy intersection"),
            FuzzyOperator::Difference => write!(f, "fuzzy difference"),
            FuzzyOperator::Join => write!(f, "fuzzy join"),
            FuzzyOperator::Project(a) => write!(f, "fuzzy project[{}]", a.join(",")),
            FuzzyOperator::Select(formula) => {
                write!(f, "fuzzy select[{}]", crate::query::format_formula(formula))
            }
        }
    }
}

/// max, 1 − x, min, and min(r, 1 − s), pointwise.
pub fn fuzzy_set_op(
    kind: FuzzySetOp,
    r: &FuzzyRelation,
    s: Option<&FuzzyRelation>,
) -> Result<FuzzyRelation> {
    let binary = |f: fn(Grade, Grade) -> Grade| -> Result<FuzzyRelation> {
        let s = s.ok_or(Error::OperandCount {
            expected: 2,
            found: 1,
        })?;
        if r.scheme() != s.scheme() {
            return Err(Error::SchemeMismatch(format!("{} vs {}", r.scheme(), s.scheme())));
        }
        let grades = r
            .grades()
            .iter()
            .zip(s.grades())
            .map(|(&a, &b)| f(a, b))
            .collect();
        FuzzyRelation::from_dense(r.scheme().clone(), grades)
    };
    match kind {
        FuzzySetOp::Union => binary(|a, b| a.max(b)),
        FuzzySetOp::Intersection => binary(|a, b| a.min(b)),
        FuzzySetOp::Difference => binary(|a, b| a.min(b.complement())),
        FuzzySetOp::Complement => {
            let grades = r.grades().iter().map(|g| g.complement()).collect();
            FuzzyRelation::from_dense(r.scheme().clone(), grades)
        }
    }
}

/// min of the two projected grades.
pub fn fuzzy_join(r: &FuzzyRelation, s: &FuzzyRelation) -> Result<FuzzyRelation> {
    let scheme = r.scheme().join(s.scheme())?;
    let r_pos = scheme.embedding(r.scheme())?;
    let s_pos = scheme.embedding(s.scheme())?;
    let grades = scheme
        .tuple_space()
        .map(|t| r.grade(&t.pick(&r_pos)).min(s.grade(&t.pick(&s_pos))))
        .collect();
    FuzzyRelation::from_dense(scheme, grades)
}

/// max over extensions.
pub fn fuzzy_project<S: AsRef<str>>(r: &FuzzyRelation, attrs: &[S]) -> Result<FuzzyRelation> {
    let source = r.scheme();
    let target = source.project_onto(attrs)?;
    let positions = source.embedding(&target)?;
    let mut grades = FuzzyRelation::zero(target.clone())?.into_grades();
    for (u, &g) in source.tuple_space().zip(r.grades()) {
        let slot = &mut grades[target.rank(&u.pick(&positions))];
        *slot = (*slot).max(g);
    }
    FuzzyRelation::from_dense(target, grades)
}

/// Keeps the grade where the formula holds, 0 elsewhere.
pub fn fuzzy_select(r: &FuzzyRelation, formula: &SelectionFormula) -> Result<FuzzyRelation> {
    let compiled = formula.compile(r.scheme())?;
    let grades = r
        .scheme()
        .tuple_space()
        .zip(r.grades())
        .map(|(t, &g)| if compiled.holds(&t) { g } else { Grade::ZERO })
        .collect();
    FuzzyRelation::from_dense(r.scheme().clone(), grades)
}
