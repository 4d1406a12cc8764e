use crate::relation::{ConfidencePair, NeutrosophicRelation, PairSet};

/// Replaces every inconsistent pair ⟨b,d⟩ (b + d > 1) by ⟨b, 1−b⟩ and
/// ⟨1−d, d⟩. Consistent pairs pass through.
pub fn split(r: &NeutrosophicRelation) -> NeutrosophicRelation {
    let rows = r
        .rows()
        .map(|(t, ps)| {
            let pairs = ps.iter().flat_map(|p| {
                if p.is_consistent() {
                    [Some(p), None]
                } else {
                    [
                        Some(ConfidencePair::new(p.belief, p.belief.complement())),
                        Some(ConfidencePair::new(p.doubt.complement(), p.doubt)),
                    ]
                }
            });
            let ps = PairSet::from_pairs(pairs.flatten()).expect("split keeps every row non-empty");
            (t.clone(), ps)
        })
        .collect();
    NeutrosophicRelation::from_pair_sets(r.scheme().clone(), rows)
}

/// Collapses each pair set to ⟨max belief, max doubt⟩.
pub fn combine(r: &NeutrosophicRelation) -> NeutrosophicRelation {
    let rows = r
        .rows()
        .map(|(t, ps)| {
            let p = ConfidencePair::new(ps.max_belief(), ps.max_doubt());
            (t.clone(), PairSet::single(p))
        })
        .collect();
    NeutrosophicRelation::from_pair_sets(r.scheme().clone(), rows)
}
