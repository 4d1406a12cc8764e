//! Pointwise set-theoretic operators.
//!
//! Binary operators combine every pair of the left operand's pair set with
//! every pair of the right one at the same tuple; on functional operands this
//! is the plain pointwise formula. All of them map ⟨0,0⟩ × ⟨0,0⟩ to ⟨0,0⟩, so
//! only tuples stored in at least one operand need visiting.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::relation::{ConfidencePair, NeutrosophicRelation, PairSet, Scheme, Tuple};

pub(crate) fn same_scheme(a: &Scheme, b: &Scheme) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SchemeMismatch(format!("{a} vs {b}")))
    }
}

/// Every combination of one pair from `a` and one from `b`, mapped through `f`.
pub(crate) fn lift2(
    a: &PairSet,
    b: &PairSet,
    f: impl Fn(ConfidencePair, ConfidencePair) -> ConfidencePair,
) -> PairSet {
    PairSet::from_pairs(a.iter().flat_map(|p| b.iter().map(move |q| (p, q))).map(|(p, q)| f(p, q)))
        .expect("product of non-empty sets is non-empty")
}

pub(crate) fn lift1(a: &PairSet, f: impl Fn(ConfidencePair) -> ConfidencePair) -> PairSet {
    PairSet::from_pairs(a.iter().map(f)).expect("image of a non-empty set is non-empty")
}

fn pointwise(
    r: &NeutrosophicRelation,
    s: &NeutrosophicRelation,
    f: impl Fn(ConfidencePair, ConfidencePair) -> ConfidencePair + Copy,
) -> Result<NeutrosophicRelation> {
    same_scheme(r.scheme(), s.scheme())?;
    let keys: BTreeSet<&Tuple> = r.rows().map(|(t, _)| t).chain(s.rows().map(|(t, _)| t)).collect();
    let rows: BTreeMap<Tuple, PairSet> = keys
        .into_iter()
        .map(|t| {
            let ps = lift2(&r.value_unchecked(t), &s.value_unchecked(t), f);
            (t.clone(), ps)
        })
        .collect();
    Ok(NeutrosophicRelation::from_pair_sets(r.scheme().clone(), rows))
}

pub(crate) fn union_pair(p: ConfidencePair, q: ConfidencePair) -> ConfidencePair {
    ConfidencePair::new(p.belief.max(q.belief), p.doubt.min(q.doubt))
}

pub(crate) fn intersection_pair(p: ConfidencePair, q: ConfidencePair) -> ConfidencePair {
    ConfidencePair::new(p.belief.min(q.belief), p.doubt.max(q.doubt))
}

pub(crate) fn difference_pair(p: ConfidencePair, q: ConfidencePair) -> ConfidencePair {
    ConfidencePair::new(p.belief.min(q.doubt), p.doubt.max(q.belief))
}

/// ⟨max belief, min doubt⟩.
pub fn union(r: &NeutrosophicRelation, s: &NeutrosophicRelation) -> Result<NeutrosophicRelation> {
    pointwise(r, s, union_pair)
}

/// ⟨min belief, max doubt⟩.
pub fn intersection(
    r: &NeutrosophicRelation,
    s: &NeutrosophicRelation,
) -> Result<NeutrosophicRelation> {
    pointwise(r, s, intersection_pair)
}

/// ⟨min(b_R, d_S), max(d_R, b_S)⟩.
pub fn difference(
    r: &NeutrosophicRelation,
    s: &NeutrosophicRelation,
) -> Result<NeutrosophicRelation> {
    pointwise(r, s, difference_pair)
}

/// Swaps belief and doubt on every pair.
pub fn complement(r: &NeutrosophicRelation) -> NeutrosophicRelation {
    let rows = r
        .rows()
        .map(|(t, ps)| (t.clone(), lift1(ps, ConfidencePair::swap)))
        .collect();
    NeutrosophicRelation::from_pair_sets(r.scheme().clone(), rows)
}
