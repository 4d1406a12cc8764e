//! Shared fixtures for unit tests.

use crate::relation::{ConfidencePair, NeutrosophicRelation, Scheme};

const ABC: &[&str] = &["a", "b", "c"];

pub fn pair(b: &str, d: &str) -> ConfidencePair {
    ConfidencePair::parse(b, d).unwrap()
}

/// One-attribute, one-value relation holding `p`.
pub fn single(p: ConfidencePair) -> NeutrosophicRelation {
    let s = Scheme::build(&[("X", &["a"])]).unwrap();
    NeutrosophicRelation::from_values(s, &[(&["a"], p)]).unwrap()
}

pub fn example1() -> NeutrosophicRelation {
    let s = Scheme::build(&[("X", ABC)]).unwrap();
    NeutrosophicRelation::from_values(
        s,
        &[
            (&["a"], pair("0.3", "0.7")),
            (&["a"], pair("0.4", "0.6")),
            (&["b"], pair("0.2", "0.5")),
            (&["c"], pair("0.4", "0.3")),
        ],
    )
    .unwrap()
}

pub fn example2_r() -> NeutrosophicRelation {
    let s = Scheme::build(&[("X", ABC), ("Y", ABC)]).unwrap();
    NeutrosophicRelation::from_values(
        s,
        &[
            (&["a", "a"], pair("0", "1")),
            (&["a", "b"], pair("0", "1")),
            (&["a", "c"], pair("0", "1")),
            (&["b", "b"], pair("1", "0")),
            (&["b", "c"], pair("1", "0")),
            (&["c", "b"], pair("1", "1")),
        ],
    )
    .unwrap()
}

pub fn example2_s() -> NeutrosophicRelation {
    let s = Scheme::build(&[("Y", ABC), ("Z", ABC)]).unwrap();
    NeutrosophicRelation::from_values(
        s,
        &[
            (&["a", "c"], pair("1", "0")),
            (&["b", "a"], pair("1", "1")),
            (&["c", "b"], pair("0", "1")),
        ],
    )
    .unwrap()
}

/// Stored rows as `("(a,b)", pairs)` for compact assertions.
pub fn rows_of(r: &NeutrosophicRelation) -> Vec<(String, Vec<ConfidencePair>)> {
    r.rows()
        .map(|(t, ps)| (r.scheme().render(t), ps.pairs().to_vec()))
        .collect()
}
