//! Join, projection and selection.

use std::collections::{BTreeMap, BTreeSet};

use super::formula::SelectionFormula;
use super::set_ops::{intersection_pair, lift2};
use super::EvalConfig;
use crate::error::{Error, Result};
use crate::relation::{ConfidencePair, Grade, NeutrosophicRelation, PairSet, Tuple};

/// Natural join on Σ ∪ Δ with ⟨min belief, max doubt⟩ per pair combination.
pub fn join(r: &NeutrosophicRelation, s: &NeutrosophicRelation) -> Result<NeutrosophicRelation> {
    let scheme = r.scheme().join(s.scheme())?;
    let r_pos = scheme.embedding(r.scheme())?;
    let s_pos = scheme.embedding(s.scheme())?;

    // A result tuple is non-default only if one of its projections is stored.
    let mut candidates = BTreeSet::new();
    for (t, _) in r.rows() {
        candidates.extend(scheme.extensions(r.scheme(), t)?);
    }
    for (t, _) in s.rows() {
        candidates.extend(scheme.extensions(s.scheme(), t)?);
    }

    let rows: BTreeMap<Tuple, PairSet> = candidates
        .into_iter()
        .map(|t| {
            let a = r.value_unchecked(&t.pick(&r_pos));
            let b = s.value_unchecked(&t.pick(&s_pos));
            let ps = lift2(&a, &b, intersection_pair);
            (t, ps)
        })
        .collect();
    Ok(NeutrosophicRelation::from_pair_sets(scheme, rows))
}

/// Projection onto `attrs`: ⟨max belief, min doubt⟩ over each tuple's
/// extensions, unstored extensions included. Requires a functional operand.
pub fn project<S: AsRef<str>>(r: &NeutrosophicRelation, attrs: &[S]) -> Result<NeutrosophicRelation> {
    r.ensure_functional()?;
    project_collapsed(r, attrs)
}

/// Projection where each extension contributes ⟨max pair belief, max pair
/// doubt⟩. On functional input this is the plain projection; on split input
/// it is the per-extension choice of one pair, collapsed by combine.
pub(crate) fn project_collapsed<S: AsRef<str>>(
    r: &NeutrosophicRelation,
    attrs: &[S],
) -> Result<NeutrosophicRelation> {
    let source = r.scheme();
    let target = source.project_onto(attrs)?;
    let positions = source.embedding(&target)?;
    let extension_count = source.tuple_space_size() / target.tuple_space_size();

    let mut groups: BTreeMap<Tuple, (Grade, Grade, u128)> = BTreeMap::new();
    for (t, ps) in r.rows() {
        let (b, d) = (ps.max_belief(), ps.max_doubt());
        groups
            .entry(t.pick(&positions))
            .and_modify(|(gb, gd, n)| {
                *gb = (*gb).max(b);
                *gd = (*gd).min(d);
                *n += 1;
            })
            .or_insert((b, d, 1));
    }
    let rows = groups
        .into_iter()
        .map(|(t, (b, d, n))| {
            // Unstored extensions contribute ⟨0,0⟩: no effect on the max
            // belief, but they pull the min doubt to 0.
            let d = if n < extension_count { Grade::ZERO } else { d };
            (t, PairSet::single(ConfidencePair::new(b, d)))
        })
        .collect();
    Ok(NeutrosophicRelation::from_pair_sets(target, rows))
}

/// Selection: satisfying tuples keep their pair set, every other tuple of the
/// tuple space becomes ⟨0,1⟩.
pub fn select(
    r: &NeutrosophicRelation,
    formula: &SelectionFormula,
    config: &EvalConfig,
) -> Result<NeutrosophicRelation> {
    let scheme = r.scheme();
    let compiled = formula.compile(scheme)?;
    let size = scheme.tuple_space_size();
    if size > config.materialize_cap as u128 {
        return Err(Error::MaterializationLimit {
            size,
            cap: config.materialize_cap,
        });
    }
    let rejected = PairSet::single(ConfidencePair::FALSE);
    let mut rows = BTreeMap::new();
    for t in scheme.tuple_space() {
        if compiled.holds(&t) {
            if let Some(ps) = r.stored(&t) {
                rows.insert(t, ps.clone());
            }
        } else {
            rows.insert(t, rejected.clone());
        }
    }
    Ok(NeutrosophicRelation::from_pair_sets(scheme.clone(), rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::split::split;
    use crate::relation::Scheme;
    use crate::testkit::{example2_r, example2_s, pair, rows_of};

    #[test]
    fn join_reads_worked_rows() {
        let t1 = join(&split(&example2_r()), &split(&example2_s())).unwrap();
        let s = t1.scheme().clone();
        assert_eq!(
            t1.stored(&s.tuple(&["b", "c", "b"]).unwrap()).unwrap(),
            &PairSet::single(ConfidencePair::FALSE)
        );
        assert_eq!(
            t1.stored(&s.tuple(&["c", "b", "a"]).unwrap()).unwrap(),
            &PairSet::from_pairs([ConfidencePair::TRUE, ConfidencePair::FALSE]).unwrap()
        );
        assert!(t1.stored(&s.tuple(&["b", "a", "c"]).unwrap()).is_none());
    }

    #[test]
    fn join_of_disjoint_schemes_covers_the_product() {
        let x = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let y = Scheme::build(&[("Y", &["p", "q"])]).unwrap();
        let r = NeutrosophicRelation::from_values(x, &[(&["a"], pair("0.5", "0.5"))]).unwrap();
        let s = NeutrosophicRelation::from_values(
            y,
            &[(&["p"], pair("0.25", "0.25")), (&["q"], pair("1", "0"))],
        )
        .unwrap();
        let j = join(&r, &s).unwrap();
        assert_eq!(
            rows_of(&j),
            vec![
                ("(a,p)".to_string(), vec![pair("0.25", "0.5")]),
                ("(a,q)".to_string(), vec![pair("0.5", "0.5")]),
                ("(b,p)".to_string(), vec![pair("0", "0.25")]),
            ]
        );
    }

    #[test]
    fn join_rejects_conflicting_domains() {
        let a = NeutrosophicRelation::empty(Scheme::build(&[("X", &["a"])]).unwrap());
        let b = NeutrosophicRelation::empty(Scheme::build(&[("X", &["b"])]).unwrap());
        assert!(matches!(join(&a, &b), Err(Error::SchemeMismatch(_))));
    }

    #[test]
    fn projection_floors_doubt_through_defaults() {
        let s = Scheme::build(&[
            ("Object-id", &["o1", "o2", "o3"]),
            ("Reading", &["r1", "r2", "r3", "r4"]),
            ("Object", &["T-60", "T-72", "T-80"]),
        ])
        .unwrap();
        let r = NeutrosophicRelation::from_values(
            s,
            &[(&["o3", "r4", "T-80"], pair("0.85", "0.10"))],
        )
        .unwrap();
        let p = project(&r, &["Object-id", "Object"]).unwrap();
        assert_eq!(
            rows_of(&p),
            vec![("(o3,T-80)".to_string(), vec![pair("0.85", "0")])]
        );
    }

    #[test]
    fn projection_onto_whole_scheme_is_identity() {
        let r = example2_r();
        assert_eq!(project(&r, &["X", "Y"]).unwrap(), r);
    }

    #[test]
    fn projection_errors() {
        let r = example2_r();
        assert!(matches!(project(&r, &["Q"]), Err(Error::ProjectionNotSubset { .. })));
        let multi = split(&r);
        assert!(matches!(project(&multi, &["X"]), Err(Error::NotFunctional { .. })));
    }

    #[test]
    fn selection_materializes_rejected_defaults() {
        let s = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let r = NeutrosophicRelation::from_values(s, &[(&["b"], pair("0.5", "0.25"))]).unwrap();
        let out = select(&r, &SelectionFormula::eq_const("X", "b"), &EvalConfig::default()).unwrap();
        assert_eq!(
            rows_of(&out),
            vec![
                ("(a)".to_string(), vec![ConfidencePair::FALSE]),
                ("(b)".to_string(), vec![pair("0.5", "0.25")]),
            ]
        );
    }

    #[test]
    fn selection_respects_the_cap() {
        let r = example2_r();
        let f = SelectionFormula::eq_const("X", "a");
        let cfg = EvalConfig { materialize_cap: 8 };
        assert!(matches!(select(&r, &f, &cfg), Err(Error::MaterializationLimit { size: 9, cap: 8 })));
        let cfg = EvalConfig { materialize_cap: 9 };
        assert!(select(&r, &f, &cfg).is_ok());
        let bad = SelectionFormula::eq_const("Q", "a");
        assert!(matches!(select(&r, &bad, &cfg), Err(Error::UnknownAttribute(_))));
    }
}
