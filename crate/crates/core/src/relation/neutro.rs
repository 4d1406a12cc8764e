use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::relation::fuzzy::FuzzyRelation;
use crate::relation::grade::{ConfidencePair, Grade};
use crate::relation::scheme::{Scheme, Tuple};

/// Non-empty, sorted, duplicate-free set of confidence pairs held by one tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairSet(Vec<ConfidencePair>);

impl PairSet {
    pub fn single(pair: ConfidencePair) -> Self {
        PairSet(vec![pair])
    }

    /// `None` for an empty input.
    pub fn from_pairs<I: IntoIterator<Item = ConfidencePair>>(pairs: I) -> Option<Self> {
        let mut v: Vec<ConfidencePair> = pairs.into_iter().collect();
        if v.is_empty() {
            return None;
        }
        v.sort_unstable();
        v.dedup();
        Some(PairSet(v))
    }

    pub fn unknown() -> Self {
        PairSet::single(ConfidencePair::UNKNOWN)
    }

    pub fn pairs(&self) -> &[ConfidencePair] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = ConfidencePair> + '_ {
        self.0.iter().copied()
    }

    pub fn is_unknown(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_unknown()
    }

    /// The single pair of a functional row.
    pub fn as_single(&self) -> Option<ConfidencePair> {
        match self.0.as_slice() {
            [p] => Some(*p),
            _ => None,
        }
    }

    pub fn max_belief(&self) -> Grade {
        self.iter().map(|p| p.belief).max().unwrap_or_default()
    }

    pub fn max_doubt(&self) -> Grade {
        self.iter().map(|p| p.doubt).max().unwrap_or_default()
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// A relation whose tuples carry sets of ⟨belief, doubt⟩ pairs.
///
/// Unstored tuples read as the single pair ⟨0, 0⟩. Values are always held in
/// canonical form (no stored `{⟨0,0⟩}` rows, deduplicated pair sets), so
/// derived equality coincides with semantic equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NeutrosophicRelation {
    scheme: Scheme,
    rows: BTreeMap<Tuple, PairSet>,
}

/// Classification flags of a relation; see [`NeutrosophicRelation::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RelationClassification {
    pub consistent: bool,
    pub complete: bool,
    pub total: bool,
    pub pseudo_consistent: bool,
    pub functional: bool,
}

impl NeutrosophicRelation {
    pub fn empty(scheme: Scheme) -> Self {
        NeutrosophicRelation {
            scheme,
            rows: BTreeMap::new(),
        }
    }

    /// Builds a relation from possibly repeated `(tuple, pair)` rows.
    ///
    /// Rows for the same tuple accumulate into one pair set. The result is
    /// canonical: see [`canonicalize`].
    pub fn from_rows<I>(scheme: Scheme, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Tuple, ConfidencePair)>,
    {
        let mut grouped: BTreeMap<Tuple, Vec<ConfidencePair>> = BTreeMap::new();
        for (t, p) in rows {
            scheme.check(&t)?;
            grouped.entry(t).or_default().push(p);
        }
        canonicalize(scheme, grouped)
    }

    /// Rows given as value strings, e.g. `(&["a", "b"], pair)`.
    pub fn from_values<S: AsRef<str>>(
        scheme: Scheme,
        rows: &[(&[S], ConfidencePair)],
    ) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|(vals, p)| Ok((scheme.tuple(vals)?, *p)))
            .collect::<Result<Vec<_>>>()?;
        NeutrosophicRelation::from_rows(scheme, rows)
    }

    /// Internal fast path for operator results that are already grouped.
    pub(crate) fn from_pair_sets(scheme: Scheme, rows: BTreeMap<Tuple, PairSet>) -> Self {
        let rows = rows.into_iter().filter(|(_, ps)| !ps.is_unknown()).collect();
        NeutrosophicRelation { scheme, rows }
    }

    pub fn scheme(&self) -> &Scheme {
        &self.scheme
    }

    /// Stored (non-default) rows in tuple-space order.
    pub fn rows(&self) -> impl Iterator<Item = (&Tuple, &PairSet)> {
        self.rows.iter()
    }

    pub fn stored_len(&self) -> usize {
        self.rows.len()
    }

    pub fn stored(&self, tuple: &Tuple) -> Option<&PairSet> {
        self.rows.get(tuple)
    }

    /// The pair set of `tuple`, `{⟨0,0⟩}` when it is not stored.
    pub fn value_of(&self, tuple: &Tuple) -> Result<PairSet> {
        self.scheme.check(tuple)?;
        Ok(self.value_unchecked(tuple))
    }

    pub(crate) fn value_unchecked(&self, tuple: &Tuple) -> PairSet {
        self.rows.get(tuple).cloned().unwrap_or_else(PairSet::unknown)
    }

    pub fn is_functional(&self) -> bool {
        self.rows.values().all(|ps| ps.len() == 1)
    }

    /// Errors with the first multi-pair tuple, if any.
    pub fn ensure_functional(&self) -> Result<()> {
        match self.rows.iter().find(|(_, ps)| ps.len() != 1) {
            None => Ok(()),
            Some((t, ps)) => Err(Error::NotFunctional {
                tuple: self.scheme.render(t),
                pairs: ps.len(),
            }),
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.rows.values().all(|ps| ps.iter().all(ConfidencePair::is_consistent))
    }

    pub fn classify(&self) -> RelationClassification {
        let functional = self.is_functional();
        let consistent = self.is_consistent();
        // Unstored tuples are ⟨0,0⟩, so completeness needs every tuple stored.
        let complete = self.rows.len() as u128 == self.scheme.tuple_space_size()
            && self.rows.values().all(|ps| ps.iter().any(ConfidencePair::is_complete));
        let total = functional && consistent && complete;
        let pseudo_consistent = self.rows.values().any(is_pseudo_consistent_row);
        RelationClassification {
            consistent,
            complete,
            total,
            pseudo_consistent,
            functional,
        }
    }

    /// λ: a total relation read as the fuzzy relation of its beliefs.
    pub fn lambda(&self) -> Result<FuzzyRelation> {
        if !self.classify().total {
            return Err(Error::NotTotal);
        }
        let grades = self
            .rows
            .values()
            .map(|ps| ps.pairs()[0].belief)
            .collect();
        FuzzyRelation::from_dense(self.scheme.clone(), grades)
    }

    /// Embeds a fuzzy relation as the total relation with pairs ⟨g, 1 − g⟩.
    pub fn from_fuzzy(fuzzy: &FuzzyRelation) -> Self {
        let scheme = fuzzy.scheme().clone();
        let rows = scheme
            .tuple_space()
            .zip(fuzzy.grades().iter())
            .map(|(t, &g)| (t, PairSet::single(ConfidencePair::new(g, g.complement()))))
            .collect();
        NeutrosophicRelation::from_pair_sets(scheme, rows)
    }
}

/// Maxima of belief and doubt sum above 1 while every pair attaining either
/// maximum sits exactly on b + d = 1.
fn is_pseudo_consistent_row(ps: &PairSet) -> bool {
    let max_b = ps.max_belief();
    let max_d = ps.max_doubt();
    if max_b.complement() >= max_d {
        return false;
    }
    ps.iter()
        .filter(|p| p.belief == max_b || p.doubt == max_d)
        .all(ConfidencePair::is_exact)
}

/// Normalizes raw grouped rows: dedupes pair sets and drops rows that are
/// exactly `{⟨0,0⟩}`. Grades are reduced by construction.
pub fn canonicalize<I, P>(scheme: Scheme, rows: I) -> Result<NeutrosophicRelation>
where
    I: IntoIterator<Item = (Tuple, P)>,
    P: IntoIterator<Item = ConfidencePair>,
{
    let mut out: BTreeMap<Tuple, PairSet> = BTreeMap::new();
    for (t, pairs) in rows {
        scheme.check(&t)?;
        let merged = match out.remove(&t) {
            Some(existing) => PairSet::from_pairs(existing.iter().chain(pairs)),
            None => PairSet::from_pairs(pairs),
        };
        if let Some(ps) = merged {
            out.insert(t, ps);
        }
    }
    Ok(NeutrosophicRelation::from_pair_sets(scheme, out))
}

impl fmt::Debug for NeutrosophicRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.scheme)?;
        for (t, ps) in &self.rows {
            writeln!(f, "  {} {:?}", self.scheme.render(t), ps)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::{example1, example2_r, pair};

    #[test]
    fn value_of_stored_and_default() {
        let r = example2_r();
        let s = r.scheme().clone();
        assert_eq!(
            r.value_of(&s.tuple(&["b", "b"]).unwrap()).unwrap(),
            PairSet::single(pair("1", "0"))
        );
        assert_eq!(
            r.value_of(&s.tuple(&["b", "a"]).unwrap()).unwrap(),
            PairSet::unknown()
        );
        let e1 = example1();
        let a = e1.scheme().tuple(&["a"]).unwrap();
        assert_eq!(
            e1.value_of(&a).unwrap(),
            PairSet::from_pairs([pair("0.3", "0.7"), pair("0.4", "0.6")]).unwrap()
        );
    }

    #[test]
    fn value_of_rejects_foreign_tuple() {
        let r = example2_r();
        assert!(r.value_of(&Tuple::from_indices(vec![0])).is_err());
        assert!(r.value_of(&Tuple::from_indices(vec![0, 7])).is_err());
    }

    #[test]
    fn classify_worked_examples() {
        let c = example1().classify();
        assert!(c.pseudo_consistent);
        assert!(!c.functional);
        assert!(c.consistent);
        assert!(!c.complete);

        let c = example2_r().classify();
        assert!(!c.consistent);
        assert!(!c.total);
        assert!(c.functional);
    }

    #[test]
    fn everything_true_is_total() {
        let s = Scheme::build(&[("X", &["a", "b"]), ("Y", &["a", "b"])]).unwrap();
        let rows: Vec<_> = s.tuple_space().map(|t| (t, ConfidencePair::TRUE)).collect();
        let r = NeutrosophicRelation::from_rows(s, rows).unwrap();
        let c = r.classify();
        assert!(c.total && c.consistent && c.complete && c.functional);
        assert!(!c.pseudo_consistent);
    }

    #[test]
    fn one_missing_tuple_breaks_completeness() {
        let s = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let r = NeutrosophicRelation::from_values(s, &[(&["a"], ConfidencePair::TRUE)]).unwrap();
        let c = r.classify();
        assert!(c.consistent && !c.complete && !c.total);
    }

    #[test]
    fn lambda_reads_beliefs() {
        let s = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let r = NeutrosophicRelation::from_values(
            s.clone(),
            &[(&["a"], pair("0.25", "0.75")), (&["b"], ConfidencePair::TRUE)],
        )
        .unwrap();
        let f = r.lambda().unwrap();
        assert_eq!(f.grade(&s.tuple(&["a"]).unwrap()), "0.25".parse().unwrap());
        assert_eq!(f.grade(&s.tuple(&["b"]).unwrap()), Grade::ONE);
        assert_eq!(NeutrosophicRelation::from_fuzzy(&f), r);
    }

    #[test]
    fn lambda_rejects_non_total() {
        assert_eq!(example2_r().lambda(), Err(Error::NotTotal));
    }

    #[test]
    fn canonicalize_elides_defaults_and_dedupes() {
        let s = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let t = s.tuple(&["a"]).unwrap();
        let r = canonicalize(s.clone(), [(t.clone(), vec![ConfidencePair::UNKNOWN])]).unwrap();
        assert_eq!(r.stored_len(), 0);

        let r = canonicalize(
            s.clone(),
            [(t.clone(), vec![ConfidencePair::TRUE, ConfidencePair::TRUE])],
        )
        .unwrap();
        assert_eq!(r.stored(&t).unwrap().len(), 1);

        let half = ConfidencePair::new(Grade::new(2, 4).unwrap(), Grade::ZERO);
        let r = canonicalize(s, [(t.clone(), vec![half])]).unwrap();
        let stored = r.stored(&t).unwrap().pairs()[0].belief;
        assert_eq!((stored.numer(), stored.denom()), (1, 2));
    }

    #[test]
    fn unknown_inside_a_larger_set_is_kept() {
        let s = Scheme::build(&[("X", &["a"])]).unwrap();
        let t = s.tuple(&["a"]).unwrap();
        let r = canonicalize(s, [(t.clone(), vec![ConfidencePair::UNKNOWN, ConfidencePair::FALSE])])
            .unwrap();
        assert_eq!(r.stored(&t).unwrap().len(), 2);
    }
}
