use std::collections::BTreeMap;

use super::ast::QueryExpr;
use crate::algebra::{combine, robust_apply, split, EvalConfig, Operator};
use crate::error::{Error, Result};
use crate::relation::{NeutrosophicRelation, Scheme};

/// Named relations a query can refer to.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    relations: BTreeMap<String, NeutrosophicRelation>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    /// Adds or replaces a relation, returning the previous one.
    pub fn insert(&mut self, name: impl Into<String>, r: NeutrosophicRelation) -> Option<NeutrosophicRelation> {
        self.relations.insert(name.into(), r)
    }

    pub fn get(&self, name: &str) -> Result<&NeutrosophicRelation> {
        self.relations
            .get(name)
            .ok_or_else(|| Error::UnknownRelation(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.relations.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &NeutrosophicRelation)> {
        self.relations.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

impl FromIterator<(String, NeutrosophicRelation)> for Catalog {
    fn from_iter<I: IntoIterator<Item = (String, NeutrosophicRelation)>>(iter: I) -> Self {
        Catalog {
            relations: iter.into_iter().collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Operators applied as defined; multi-pair operands are rejected.
    Raw,
    /// Every operator node runs as split, apply, combine.
    #[default]
    Robust,
}

/// Splits an algebra node into its operator and operand expressions.
fn as_operator(e: &QueryExpr) -> Option<(Operator, Vec<&QueryExpr>)> {
    Some(match e {
        QueryExpr::Union(l, r) => (Operator::Union, vec![l, r]),
        QueryExpr::Intersect(l, r) => (Operator::Intersection, vec![l, r]),
        QueryExpr::Minus(l, r) => (Operator::Difference, vec![l, r]),
        QueryExpr::Join(l, r) => (Operator::Join, vec![l, r]),
        QueryExpr::Complement(x) => (Operator::Complement, vec![x]),
        QueryExpr::Project(attrs, x) => (Operator::Project(attrs.clone()), vec![x]),
        QueryExpr::Select(f, x) => (Operator::Select(f.clone()), vec![x]),
        _ => return None,
    })
}

/// Result scheme of `e`, checking every scheme rule along the way.
pub fn infer_scheme(e: &QueryExpr, catalog: &Catalog) -> Result<Scheme> {
    match e {
        QueryExpr::Relation(name) => Ok(catalog.get(name)?.scheme().clone()),
        QueryExpr::Split(x) | QueryExpr::Combine(x) => infer_scheme(x, catalog),
        _ => {
            let (op, operands) = as_operator(e).expect("algebra node");
            let schemes = operands
                .into_iter()
                .map(|x| infer_scheme(x, catalog))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&Scheme> = schemes.iter().collect();
            op.output_scheme(&refs)
        }
    }
}

fn eval_node(
    e: &QueryExpr,
    catalog: &Catalog,
    mode: Mode,
    config: &EvalConfig,
) -> Result<NeutrosophicRelation> {
    match e {
        QueryExpr::Relation(name) => Ok(catalog.get(name)?.clone()),
        QueryExpr::Split(x) => Ok(split(&eval_node(x, catalog, mode, config)?)),
        QueryExpr::Combine(x) => Ok(combine(&eval_node(x, catalog, mode, config)?)),
        _ => {
            let (op, operands) = as_operator(e).expect("algebra node");
            let values = operands
                .into_iter()
                .map(|x| eval_node(x, catalog, mode, config))
                .collect::<Result<Vec<_>>>()?;
            let refs: Vec<&NeutrosophicRelation> = values.iter().collect();
            match mode {
                Mode::Robust => robust_apply(&op, &refs, config),
                Mode::Raw => {
                    for r in &refs {
                        r.ensure_functional()?;
                    }
                    op.apply(&refs, config)
                }
            }
        }
    }
}

/// Evaluates `e` bottom-up against `catalog`.
pub fn evaluate(
    e: &QueryExpr,
    catalog: &Catalog,
    mode: Mode,
    config: &EvalConfig,
) -> Result<NeutrosophicRelation> {
    infer_scheme(e, catalog)?;
    eval_node(e, catalog, mode, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::query::parse;
    use crate::relation::ConfidencePair;
    use crate::testkit::{example1, example2_r, example2_s, pair, rows_of};

    fn catalog() -> Catalog {
        let mut c = Catalog::new();
        c.insert("R", example2_r());
        c.insert("S", example2_s());
        c.insert("E", example1());
        c
    }

    fn run(text: &str, mode: Mode) -> Result<NeutrosophicRelation> {
        evaluate(&parse(text).unwrap(), &catalog(), mode, &EvalConfig::default())
    }

    #[test]
    fn scheme_inference() {
        let c = catalog();
        let s = infer_scheme(&parse("R JOIN S").unwrap(), &c).unwrap();
        assert_eq!(s.names().collect::<Vec<_>>(), ["X", "Y", "Z"]);
        let s = infer_scheme(&parse("PROJECT[X,Z](R JOIN S)").unwrap(), &c).unwrap();
        assert_eq!(s.names().collect::<Vec<_>>(), ["X", "Z"]);
        assert!(matches!(
            infer_scheme(&parse("PROJECT[X](R) UNION PROJECT[Y](S)").unwrap(), &c),
            Err(Error::SchemeMismatch(_))
        ));
        assert_eq!(
            infer_scheme(&parse("BOGUS UNION R").unwrap(), &c),
            Err(Error::UnknownRelation("BOGUS".into()))
        );
        assert_eq!(
            infer_scheme(&parse("SELECT[W = 'a'](R)").unwrap(), &c),
            Err(Error::UnknownAttribute("W".into()))
        );
        assert!(matches!(
            infer_scheme(&parse("PROJECT[W](R)").unwrap(), &c),
            Err(Error::ProjectionNotSubset { .. })
        ));
    }

    #[test]
    fn example_pipeline() {
        let t3 = run("SELECT[NOT(X=Z)](PROJECT[X,Z](R JOIN S))", Mode::Robust).unwrap();
        let rendered: Vec<String> = rows_of(&t3).into_iter().map(|(t, _)| t).collect();
        assert_eq!(
            rendered,
            ["(a,a)", "(a,b)", "(a,c)", "(b,a)", "(b,b)", "(c,a)", "(c,c)"]
        );
        assert_eq!(t3.value_of(&t3.scheme().tuple(&["b", "b"]).unwrap()).unwrap().pairs(), [ConfidencePair::FALSE]);
    }

    #[test]
    fn explicit_split_combine_matches_robust_join() {
        let robust = run("R JOIN S", Mode::Robust).unwrap();
        let explicit = run("COMBINE(SPLIT(R) JOIN SPLIT(S))", Mode::Robust).unwrap();
        assert_eq!(robust, explicit);
        assert_eq!(robust.stored_len(), 15);
    }

    #[test]
    fn raw_mode_rejects_multi_pair_operands() {
        assert!(matches!(run("NOT E", Mode::Raw), Err(Error::NotFunctional { .. })));
        assert!(matches!(
            run("SPLIT(R) JOIN S", Mode::Raw),
            Err(Error::NotFunctional { .. })
        ));
        let robust = run("NOT E", Mode::Robust).unwrap();
        assert_eq!(rows_of(&robust)[0].1, vec![pair("0.7", "0.4")]);
    }

    #[test]
    fn raw_and_robust_agree_on_consistent_data() {
        let q = "PROJECT[X](SELECT[X = 'a' OR Y = 'c'](SELECT[X = 'a'](R) MINUS NOT SELECT[Y = 'c'](R)))";
        let raw = run(q, Mode::Raw).unwrap();
        assert!(raw.is_consistent());
        assert_eq!(raw, run(q, Mode::Robust).unwrap());
    }

    #[test]
    fn result_scheme_matches_inference() {
        let c = catalog();
        for q in ["R JOIN S", "PROJECT[Z,X](R JOIN S)", "NOT R UNION R", "SPLIT(E)"] {
            let e = parse(q).unwrap();
            let r = evaluate(&e, &c, Mode::Robust, &EvalConfig::default()).unwrap();
            assert_eq!(r.scheme(), &infer_scheme(&e, &c).unwrap(), "{q}");
        }
    }
}
