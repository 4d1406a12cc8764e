use std::fmt;

use crate::error::{Error, Result};
use crate::relation::grade::Grade;
use crate::relation::scheme::{Scheme, Tuple};

/// A map from every tuple of a scheme to one membership grade.
///
/// Grades are held densely in tuple-space order; fuzzy relations only appear
/// as reference objects for the oracle, where schemes are small.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzyRelation {
    scheme: Scheme,
    grades: Vec<Grade>,
}

impl FuzzyRelation {
    /// The all-zero relation.
    pub fn zero(scheme: Scheme) -> Result<Self> {
        let n = dense_len(&scheme)?;
        Ok(FuzzyRelation {
            scheme,
            grades: vec![Grade::ZERO; n],
        })
    }

    /// `grades` in tuple-space order.
    pub fn from_dense(scheme: Scheme, grades: Vec<Grade>) -> Result<Self> {
        let n = dense_len(&scheme)?;
        if grades.len() != n {
            return Err(Error::SchemeMismatch(format!(
                "expected {n} grades, got {}",
                grades.len()
            )));
        }
        Ok(FuzzyRelation { scheme, grades })
    }

    /// Sparse construction; unlisted tuples get grade 0.
    pub fn from_grades<I>(scheme: Scheme, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Tuple, Grade)>,
    {
        let mut rel = FuzzyRelation::zero(scheme)?;
        for (t, g) in entries {
            rel.scheme.check(&t)?;
            let i = rel.scheme.rank(&t);
            rel.grades[i] = g;
        }
        Ok(rel)
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn grade(&self, tuple: &Tuple) -> Grade {
        self.grades[self.scheme.rank(tuple)]
    }

    /// Tuples with a nonzero grade, in tuple-space order.
    pub fn support(&self) -> impl Iterator<Item = (Tuple, Grade)> + '_ {
        self.scheme
            .tuple_space()
            .zip(self.grades.iter().copied())
            .filter(|(_, g)| !g.is_zero())
    }

    pub(crate) fn into_grades(self) -> Vec<Grade> {
        self.grades
    }
}

fn dense_len(scheme: &Scheme) -> Result<usize> {
    usize::try_from(scheme.tuple_space_size())
        .ok()
        .filter(|&n| n <= 1 << 24)
        .ok_or_else(|| Error::MaterializationLimit {
            size: scheme.tuple_space_size(),
            cap: 1 << 24,
        })
}

impl fmt::Debug for FuzzyRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.scheme)?;
        for (i, (t, g)) in self.support().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " {}: {}", self.scheme.render(&t), g)?;
        }
        write!(f, " }}")
    }
}
