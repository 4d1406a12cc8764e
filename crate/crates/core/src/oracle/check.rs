//! Exhaustive generalization checks on a finite grade grid.
//!
//! A neutrosophic operator Ψ is a *weak* generalization of a fuzzy operator Θ
//! when it maps total relations to total relations and `λ(Ψ(R…)) = Θ(λ(R…))`.
//! It is a *strong* generalization when it maps consistent relations to
//! consistent relations and `reps(Ψ(R…)) = S(Θ)(reps(R…))`. Both are checked
//! here by enumerating every operand on the grid; counterexamples are reported
//! in enumeration order, the first one winning.

use rayon::prelude::*;

use super::fuzzy_ops::FuzzyOperator;
use super::reps::{reps, s_image, FuzzyRelationSet, GradeGrid};
use crate::algebra::{EvalConfig, Operator, SelectionFormula};
use crate::error::{Error, Result};
use crate::relation::{ConfidencePair, NeutrosophicRelation, PairSet, Scheme};

/// Limits on exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Largest tuple space allowed for any operand or result scheme.
    pub max_tuple_space: u128,
    /// Largest grid denominator.
    pub max_grid: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_tuple_space: 4,
            max_grid: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The first failing operand list.
    Counterexample(Vec<NeutrosophicRelation>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Operand combinations examined (all of them when the check holds).
    pub instances: u64,
    pub verdict: Verdict,
}

fn check_budget(schemes: &[&Scheme], grid: GradeGrid, budget: &Budget) -> Result<()> {
    if grid.denominator() > budget.max_grid {
        return Err(Error::BudgetExceeded(format!(
            "grid denominator {} > {}",
            grid.denominator(),
            budget.max_grid
        )));
    }
    for s in schemes {
        if s.tuple_space_size() > budget.max_tuple_space {
            return Err(Error::BudgetExceeded(format!(
                "scheme {s} has {} tuples, budget is {}",
                s.tuple_space_size(),
                budget.max_tuple_space
            )));
        }
    }
    Ok(())
}

/// Every functional relation on `scheme` whose per-tuple pair comes from
/// `choices` (⟨0,0⟩ choices are left unstored), in lexicographic order.
fn enumerate_relations(scheme: &Scheme, choices: &[ConfidencePair]) -> Vec<NeutrosophicRelation> {
    let tuples: Vec<_> = scheme.tuple_space().collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; tuples.len()];
    loop {
        let rows = tuples
            .iter()
            .zip(&idx)
            .filter(|(_, &i)| !choices[i].is_unknown())
            .map(|(t, &i)| (t.clone(), PairSet::single(choices[i])))
            .collect();
        out.push(NeutrosophicRelation::from_pair_sets(scheme.clone(), rows));
        let mut pos = tuples.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// All total relations with grades on the grid.
pub fn total_relations(scheme: &Scheme, grid: GradeGrid) -> Vec<NeutrosophicRelation> {
    let choices: Vec<_> = grid
        .points()
        .into_iter()
        .map(|g| ConfidencePair::new(g, g.complement()))
        .collect();
    enumerate_relations(scheme, &choices)
}

/// All consistent functional relations with grades on the grid.
pub fn consistent_relations(scheme: &Scheme, grid: GradeGrid) -> Vec<NeutrosophicRelation> {
    let points = grid.points();
    let choices: Vec<_> = points
        .iter()
        .flat_map(|&b| {
            points
                .iter()
                .filter(move |&&d| d <= b.complement())
                .map(move |&d| ConfidencePair::new(b, d))
        })
        .collect();
    enumerate_relations(scheme, &choices)
}

/// Runs `fails` over the Cartesian product of `domains` and returns the first
/// failing combination in lexicographic order.
fn first_failure<F>(domains: &[Vec<NeutrosophicRelation>], fails: F) -> Result<CheckOutcome>
where
    F: Fn(&[usize]) -> Result<bool> + Sync,
{
    let total: u64 = domains.iter().map(|d| d.len() as u64).product();
    let decode = |mut n: u64| {
        let mut idx = vec![0usize; domains.len()];
        for (slot, d) in idx.iter_mut().zip(domains).rev() {
            *slot = (n % d.len() as u64) as usize;
            n /= d.len() as u64;
        }
        idx
    };
    let found = (0..total).into_par_iter().find_map_first(|n| {
        let idx = decode(n);
        match fails(&idx) {
            Ok(false) => None,
            Ok(true) => Some(Ok((n, idx))),
            Err(e) => Some(Err(e)),
        }
    });
    match found {
        None => Ok(CheckOutcome {
            instances: total,
            verdict: Verdict::Holds,
        }),
        Some(Err(e)) => Err(e),
        Some(Ok((n, idx))) => Ok(CheckOutcome {
            instances: n + 1,
            verdict: Verdict::Counterexample(
                idx.iter().zip(domains).map(|(&i, d)| d[i].clone()).collect(),
            ),
        }),
    }
}

fn prepare(
    neutro_op: &Operator,
    fuzzy_op: &FuzzyOperator,
    schemes: &[Scheme],
    grid: GradeGrid,
    budget: &Budget,
) -> Result<()> {
    let refs: Vec<&Scheme> = schemes.iter().collect();
    let out = neutro_op.output_scheme(&refs)?;
    if fuzzy_op.arity() != neutro_op.arity() {
        return Err(Error::OperandCount {
            expected: neutro_op.arity(),
            found: fuzzy_op.arity(),
        });
    }
    let mut all = refs.clone();
    all.push(&out);
    check_budget(&all, grid, budget)
}

fn config_for(schemes: &[Scheme]) -> EvalConfig {
    let largest = schemes.iter().map(Scheme::tuple_space_size).max().unwrap_or(1);
    EvalConfig {
        materialize_cap: largest.min(u64::MAX as u128) as u64,
    }
}

/// Weak generalization over every combination of total grid relations.
pub fn check_weak(
    neutro_op: &Operator,
    fuzzy_op: &FuzzyOperator,
    schemes: &[Scheme],
    grid: GradeGrid,
    budget: &Budget,
) -> Result<CheckOutcome> {
    prepare(neutro_op, fuzzy_op, schemes, grid, budget)?;
    let config = config_for(schemes);
    let domains: Vec<Vec<NeutrosophicRelation>> =
        schemes.iter().map(|s| total_relations(s, grid)).collect();
    let lambdas: Vec<Vec<_>> = domains
        .iter()
        .map(|d| d.iter().map(|r| r.lambda()).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    first_failure(&domains, |idx| {
        let operands: Vec<&NeutrosophicRelation> =
            idx.iter().zip(&domains).map(|(&i, d)| &d[i]).collect();
        let result = neutro_op.apply(&operands, &config)?;
        let lifted = match result.lambda() {
            Ok(f) => f,
            Err(Error::NotTotal) => return Ok(true),
            Err(e) => return Err(e),
        };
        let fuzzy_operands: Vec<_> = idx.iter().zip(&lambdas).map(|(&i, l)| &l[i]).collect();
        Ok(lifted != fuzzy_op.apply(&fuzzy_operands)?)
    })
}

/// Strong generalization over every combination of consistent grid relations.
pub fn check_strong(
    neutro_op: &Operator,
    fuzzy_op: &FuzzyOperator,
    schemes: &[Scheme],
    grid: GradeGrid,
    budget: &Budget,
) -> Result<CheckOutcome> {
    prepare(neutro_op, fuzzy_op, schemes, grid, budget)?;
    let config = config_for(schemes);
    let domains: Vec<Vec<NeutrosophicRelation>> =
        schemes.iter().map(|s| consistent_relations(s, grid)).collect();
    let completions: Vec<Vec<FuzzyRelationSet>> = domains
        .iter()
        .map(|d| d.iter().map(|r| reps(r, grid)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    first_failure(&domains, |idx| {
        let operands: Vec<&NeutrosophicRelation> =
            idx.iter().zip(&domains).map(|(&i, d)| &d[i]).collect();
        let result = neutro_op.apply(&operands, &config)?;
        let expected = match reps(&result, grid) {
            Ok(set) => set,
            Err(Error::NotConsistent | Error::OffGrid { .. } | Error::NotFunctional { .. }) => {
                return Ok(true)
            }
            Err(e) => return Err(e),
        };
        let sets: Vec<&FuzzyRelationSet> =
            idx.iter().zip(&completions).map(|(&i, c)| &c[i]).collect();
        Ok(expected != s_image(fuzzy_op, &sets)?)
    })
}

/// reps(R) is a singleton exactly when R is total, and then equals {λ(R)}.
pub fn check_representation(scheme: &Scheme, grid: GradeGrid, budget: &Budget) -> Result<CheckOutcome> {
    check_budget(&[scheme], grid, budget)?;
    let domain = vec![consistent_relations(scheme, grid)];
    first_failure(&domain, |idx| {
        let r = &domain[0][idx[0]];
        let set = reps(r, grid)?;
        let total = r.classify().total;
        if total {
            Ok(set != FuzzyRelationSet::singleton(r.lambda()?))
        } else {
            Ok(set.len() == 1)
        }
    })
}

/// One operator pairing over fixed operand schemes.
#[derive(Debug, Clone)]
pub struct CheckCase {
    pub name: String,
    pub neutro_op: Operator,
    pub fuzzy_op: FuzzyOperator,
    pub schemes: Vec<Scheme>,
}

impl CheckCase {
    fn paired(op: Operator, schemes: Vec<Scheme>) -> Self {
        let shown: Vec<String> = schemes.iter().map(ToString::to_string).collect();
        CheckCase {
            name: format!("{op} on {}", shown.join(" x ")),
            fuzzy_op: FuzzyOperator::counterpart(&op),
            neutro_op: op,
            schemes,
        }
    }
}

/// Selection formulas checked by default: constant tests, their negation, and
/// attribute-equality conjunctions.
pub fn formula_suite() -> Vec<SelectionFormula> {
    use SelectionFormula as F;
    vec![
        F::eq_const("X", "a"),
        F::not(F::eq_const("X", "b")),
        F::eq_attr("X", "Y"),
        F::and(F::eq_attr("X", "Y"), F::eq_const("X", "a")),
        F::and(F::not(F::eq_attr("X", "Y")), F::not(F::eq_const("X", "c"))),
        F::or(F::eq_const("X", "a"), F::eq_attr("X", "Y")),
    ]
}

fn scheme(attrs: &[(&str, &[&str])]) -> Scheme {
    Scheme::build(attrs).expect("static scheme")
}

/// Operator pairings over every operand shape up to three tuples (four for a
/// join result).
pub fn standard_suite() -> Vec<CheckCase> {
    let x1 = scheme(&[("X", &["a"])]);
    let x2 = scheme(&[("X", &["a", "b"])]);
    let x3 = scheme(&[("X", &["a", "b", "c"])]);
    let y2 = scheme(&[("Y", &["a", "b"])]);
    let y3 = scheme(&[("Y", &["a", "b", "c"])]);
    let xy_3x1 = scheme(&[("X", &["a", "b", "c"]), ("Y", &["a"])]);
    let xy_1x3 = scheme(&[("X", &["a"]), ("Y", &["a", "b", "c"])]);
    let xy_2x1 = scheme(&[("X", &["a", "b"]), ("Y", &["a"])]);
    let yz_1x2 = scheme(&[("Y", &["a"]), ("Z", &["a", "b"])]);
    let y1 = scheme(&[("Y", &["a"])]);

    let mut cases = Vec::new();
    for s in [&x1, &x2, &x3] {
        cases.push(CheckCase::paired(Operator::Complement, vec![s.clone()]));
        for op in [Operator::Union, Operator::Intersection, Operator::Difference] {
            cases.push(CheckCase::paired(op, vec![s.clone(), s.clone()]));
        }
    }
    for (l, r) in [
        (&x3, &x3),
        (&x1, &y3),
        (&xy_3x1, &y1),
        (&xy_2x1, &xy_2x1),
        (&x2, &y2),
        (&xy_2x1, &yz_1x2),
    ] {
        cases.push(CheckCase::paired(Operator::Join, vec![l.clone(), r.clone()]));
    }
    for (s, attrs) in [
        (&x3, vec!["X"]),
        (&xy_3x1, vec!["X"]),
        (&xy_3x1, vec!["Y"]),
        (&xy_1x3, vec!["X"]),
        (&xy_1x3, vec!["Y", "X"]),
    ] {
        let attrs = attrs.into_iter().map(String::from).collect();
        cases.push(CheckCase::paired(Operator::Project(attrs), vec![s.clone()]));
    }
    for f in formula_suite() {
        cases.push(CheckCase::paired(Operator::Select(f), vec![xy_3x1.clone()]));
    }
    cases.push(CheckCase::paired(
        Operator::Select(SelectionFormula::eq_const("X", "a")),
        vec![x3.clone()],
    ));
    cases
}

/// Schemes on which the representation property is checked by default.
pub fn representation_schemes() -> Vec<Scheme> {
    vec![
        scheme(&[("X", &["a"])]),
        scheme(&[("X", &["a", "b"])]),
        scheme(&[("X", &["a", "b", "c"])]),
        scheme(&[("X", &["a", "b"]), ("Y", &["a"])]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> GradeGrid {
        GradeGrid::new(2).unwrap()
    }

    fn x2() -> Scheme {
        Scheme::build(&[("X", &["a", "b"])]).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        // (k+1)^n total, ((k+1)(k+2)/2)^n consistent.
        assert_eq!(total_relations(&x2(), half()).len(), 9);
        assert_eq!(consistent_relations(&x2(), half()).len(), 36);
        let x3 = Scheme::build(&[("X", &["a", "b", "c"])]).unwrap();
        assert_eq!(consistent_relations(&x3, GradeGrid::new(4).unwrap()).len(), 15usize.pow(3));
    }

    #[test]
    fn weak_union_and_complement_hold() {
        let b = Budget::default();
        let out = check_weak(&Operator::Union, &FuzzyOperator::Union, &[x2(), x2()], half(), &b).unwrap();
        assert_eq!(out, CheckOutcome { instances: 81, verdict: Verdict::Holds });
        let out = check_weak(&Operator::Complement, &FuzzyOperator::Complement, &[x2()], half(), &b).unwrap();
        assert_eq!(out, CheckOutcome { instances: 9, verdict: Verdict::Holds });
    }

    #[test]
    fn weak_detects_wrong_pairing() {
        let out = check_weak(
            &Operator::Union,
            &FuzzyOperator::Intersection,
            &[x2(), x2()],
            half(),
            &Budget::default(),
        )
        .unwrap();
        // Operands enumerate lexicographically from all-zero beliefs; the first
        // disagreement is R = {a:0, b:0} against S = {a:0, b:1/2}.
        let Verdict::Counterexample(ops) = out.verdict else {
            panic!("expected a counterexample");
        };
        assert_eq!(out.instances, 2);
        let g = |s: &str| s.parse().unwrap();
        let beliefs = |r: &NeutrosophicRelation| r.lambda().unwrap().grades().to_vec();
        assert_eq!(beliefs(&ops[0]), vec![g("0"), g("0")]);
        assert_eq!(beliefs(&ops[1]), vec![g("0"), g("0.5")]);
    }

    #[test]
    fn strong_union_and_shared_join_hold() {
        let b = Budget::default();
        let out = check_strong(&Operator::Union, &FuzzyOperator::Union, &[x2(), x2()], half(), &b).unwrap();
        assert_eq!(out.instances, 36 * 36);
        assert!(out.verdict.holds());
        let x = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let out = check_strong(&Operator::Join, &FuzzyOperator::Join, &[x.clone(), x], half(), &b).unwrap();
        assert!(out.verdict.holds());
    }

    #[test]
    fn strong_join_fails_on_a_cartesian_product() {
        // reps of the all-unknown join contains the "diagonal" completion
        // {(a,a):1, (a,b):0, (b,a):0, (b,b):1}, which no min(r(x), s(y)) produces.
        let x = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let y = Scheme::build(&[("Y", &["a", "b"])]).unwrap();
        let out = check_strong(&Operator::Join, &FuzzyOperator::Join, &[x, y], GradeGrid::new(1).unwrap(), &Budget::default())
            .unwrap();
        let Verdict::Counterexample(ops) = out.verdict else {
            panic!("expected a counterexample");
        };
        assert_eq!(out.instances, 1);
        assert!(ops.iter().all(|r| r.stored_len() == 0));
    }

    #[test]
    fn strong_holding_implies_weak_holding() {
        let b = Budget::default();
        for case in standard_suite() {
            if case.schemes.iter().any(|s| s.tuple_space_size() > 2) {
                continue;
            }
            let strong = check_strong(&case.neutro_op, &case.fuzzy_op, &case.schemes, half(), &b).unwrap();
            if strong.verdict.holds() {
                let weak = check_weak(&case.neutro_op, &case.fuzzy_op, &case.schemes, half(), &b).unwrap();
                assert!(weak.verdict.holds(), "{}", case.name);
            }
        }
    }

    #[test]
    fn representation_property() {
        for s in representation_schemes() {
            let out = check_representation(&s, half(), &Budget::default()).unwrap();
            assert!(out.verdict.holds(), "{s}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let x5 = Scheme::build(&[("X", &["a", "b", "c", "d", "e"])]).unwrap();
        let b = Budget::default();
        assert!(matches!(
            check_weak(&Operator::Complement, &FuzzyOperator::Complement, &[x5], half(), &b),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            check_strong(&Operator::Complement, &FuzzyOperator::Complement, &[x2()], GradeGrid::new(5).unwrap(), &b),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn suite_respects_default_budget() {
        let b = Budget::default();
        for case in standard_suite() {
            let refs: Vec<&Scheme> = case.schemes.iter().collect();
            let out = case.neutro_op.output_scheme(&refs).unwrap();
            assert!(case.schemes.iter().all(|s| s.tuple_space_size() <= 3), "{}", case.name);
            assert!(out.tuple_space_size() <= b.max_tuple_space, "{}", case.name);
        }
    }
}
