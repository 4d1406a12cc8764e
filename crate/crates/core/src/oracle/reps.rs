use std::collections::BTreeSet;

use super::fuzzy_ops::FuzzyOperator;
use crate::error::{Error, Result};
use crate::relation::{FuzzyRelation, Grade, NeutrosophicRelation, Scheme};

/// The finite grade set {0, 1/k, …, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GradeGrid {
    k: u32,
}

impl GradeGrid {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::BudgetExceeded("grid denominator must be positive".into()));
        }
        Ok(GradeGrid { k })
    }

    pub fn denominator(self) -> u32 {
        self.k
    }

    pub fn points(self) -> Vec<Grade> {
        (0..=self.k as u64)
            .map(|i| Grade::new(i, self.k as u64).expect("i <= k"))
            .collect()
    }

    /// Index `i` with `grade = i/k`, if the grade is on the grid.
    pub fn index_of(self, grade: Grade) -> Option<u64> {
        let scaled = grade.numer() as u128 * self.k as u128;
        scaled.is_multiple_of(grade.denom() as u128).then(|| (scaled / grade.denom() as u128) as u64)
    }

    pub fn contains(self, grade: Grade) -> bool {
        self.index_of(grade).is_some()
    }

    fn require(self, grade: Grade) -> Result<u64> {
        self.index_of(grade).ok_or(Error::OffGrid {
            grade: grade.to_string(),
            denominator: self.k,
        })
    }

    /// Grid points in `[lo, hi]`.
    pub fn between(self, lo: Grade, hi: Grade) -> Result<Vec<Grade>> {
        let (lo, hi) = (self.require(lo)?, self.require(hi)?);
        Ok((lo..=hi)
            .map(|i| Grade::new(i, self.k as u64).expect("i <= k"))
            .collect())
    }
}

/// A set of fuzzy relations over one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRelationSet {
    scheme: Scheme,
    members: BTreeSet<Vec<Grade>>,
}

impl FuzzyRelationSet {
    pub fn new(scheme: Scheme) -> Self {
        FuzzyRelationSet {
            scheme,
            members: BTreeSet::new(),
        }
    }

    pub fn singleton(r: FuzzyRelation) -> Self {
        let mut set = FuzzyRelationSet::new(r.scheme().clone());
        set.members.insert(r.into_grades());
        set
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    /// Returns whether the relation was new.
    pub fn insert(&mut self, r: FuzzyRelation) -> Result<bool> {
        if r.scheme() != &self.scheme {
            return Err(Error::SchemeMismatch(format!("{} vs {}", r.scheme(), self.scheme)));
        }
        Ok(self.members.insert(r.into_grades()))
    }

    pub fn contains(&self, r: &FuzzyRelation) -> bool {
        r.scheme() == &self.scheme && self.members.contains(r.grades())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = FuzzyRelation> + '_ {
        self.members.iter().map(|g| {
            FuzzyRelation::from_dense(self.scheme.clone(), g.clone()).expect("members match the scheme")
        })
    }
}

/// Per-tuple grid intervals `[b, 1 − d]` of a consistent functional relation.
fn completion_intervals(r: &NeutrosophicRelation, grid: GradeGrid) -> Result<Vec<Vec<Grade>>> {
    r.ensure_functional()?;
    if !r.is_consistent() {
        return Err(Error::NotConsistent);
    }
    r.scheme()
        .tuple_space()
        .map(|t| {
            let p = r.stored(&t).map_or(Default::default(), |ps| ps.pairs()[0]);
            grid.between(p.belief, p.doubt.complement())
        })
        .collect()
}

/// All grid completions of a consistent functional relation: fuzzy relations
/// `Q` with `b(t) ≤ Q(t) ≤ 1 − d(t)` everywhere.
pub fn reps(r: &NeutrosophicRelation, grid: GradeGrid) -> Result<FuzzyRelationSet> {
    let intervals = completion_intervals(r, grid)?;
    let mut out = FuzzyRelationSet::new(r.scheme().clone());
    let mut idx = vec![0usize; intervals.len()];
    loop {
        out.members
            .insert(idx.iter().zip(&intervals).map(|(&i, iv)| iv[i]).collect());
        let mut pos = intervals.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < intervals[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// |reps(R)| from the per-tuple interval sizes, without enumerating.
pub fn reps_cardinality(r: &NeutrosophicRelation, grid: GradeGrid) -> Result<u128> {
    Ok(completion_intervals(r, grid)?
        .iter()
        .map(|iv| iv.len() as u128)
        .product())
}

/// S(Θ): images of every combination drawn from the input sets.
pub fn s_image(op: &FuzzyOperator, sets: &[&FuzzyRelationSet]) -> Result<FuzzyRelationSet> {
    if sets.len() != op.arity() {
        return Err(Error::OperandCount {
            expected: op.arity(),
            found: sets.len(),
        });
    }
    let members: Vec<Vec<FuzzyRelation>> = sets.iter().map(|s| s.iter().collect()).collect();
    // The output scheme is fixed by the operand schemes, even when a set is empty.
    let probes: Vec<FuzzyRelation> = sets
        .iter()
        .map(|s| FuzzyRelation::zero(s.scheme().clone()))
        .collect::<Result<_>>()?;
    let probe_refs: Vec<&FuzzyRelation> = probes.iter().collect();
    let mut out = FuzzyRelationSet::new(op.apply(&probe_refs)?.scheme().clone());
    if members.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut idx = vec![0usize; members.len()];
    loop {
        let operands: Vec<&FuzzyRelation> =
            idx.iter().zip(&members).map(|(&i, m)| &m[i]).collect();
        out.insert(op.apply(&operands)?)?;
        let mut pos = members.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < members[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}
