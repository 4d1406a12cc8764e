use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::relation::{Scheme, Tuple};

/// Selection predicate: equality atoms under negation, conjunction and
/// disjunction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SelectionFormula {
    AttrEqConst { attr: String, literal: String },
    AttrEqAttr(String, String),
    Not(Box<SelectionFormula>),
    And(Box<SelectionFormula>, Box<SelectionFormula>),
    Or(Box<SelectionFormula>, Box<SelectionFormula>),
}

impl SelectionFormula {
    pub fn eq_const(attr: impl Into<String>, literal: impl Into<String>) -> Self {
        SelectionFormula::AttrEqConst {
            attr: attr.into(),
            literal: literal.into(),
        }
    }

    pub fn eq_attr(a: impl Into<String>, b: impl Into<String>) -> Self {
        SelectionFormula::AttrEqAttr(a.into(), b.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: SelectionFormula) -> Self {
        SelectionFormula::Not(Box::new(f))
    }

    pub fn and(l: SelectionFormula, r: SelectionFormula) -> Self {
        SelectionFormula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: SelectionFormula, r: SelectionFormula) -> Self {
        SelectionFormula::Or(Box::new(l), Box::new(r))
    }

    /// Attribute names mentioned anywhere in the formula.
    pub fn attributes(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_attributes(&mut out);
        out
    }

    fn collect_attributes<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            SelectionFormula::AttrEqConst { attr, .. } => {
                out.insert(attr);
            }
            SelectionFormula::AttrEqAttr(a, b) => {
                out.insert(a);
                out.insert(b);
            }
            SelectionFormula::Not(f) => f.collect_attributes(out),
            SelectionFormula::And(l, r) | SelectionFormula::Or(l, r) => {
                l.collect_attributes(out);
                r.collect_attributes(out);
            }
        }
    }

    /// Every attribute must belong to `scheme`.
    pub fn check(&self, scheme: &Scheme) -> Result<()> {
        match self.attributes().into_iter().find(|a| scheme.position(a).is_none()) {
            Some(a) => Err(Error::UnknownAttribute(a.to_string())),
            None => Ok(()),
        }
    }

    /// Resolves attribute names to positions of `scheme`.
    pub fn compile<'s>(&self, scheme: &'s Scheme) -> Result<CompiledFormula<'s>> {
        Ok(CompiledFormula {
            scheme,
            root: Node::build(self, scheme)?,
        })
    }
}

/// A formula bound to one scheme, ready to test tuples.
#[derive(Debug, Clone)]
pub struct CompiledFormula<'s> {
    scheme: &'s Scheme,
    root: Node,
}

#[derive(Debug, Clone)]
enum Node {
    // `None` when the literal is outside the attribute's domain.
    EqConst(usize, Option<u32>),
    EqAttr(usize, usize),
    Not(Box<Node>),
    And(Box<Node>, Box<Node>),
    Or(Box<Node>, Box<Node>),
}

impl Node {
    fn build(f: &SelectionFormula, scheme: &Scheme) -> Result<Node> {
        let pos = |a: &str| {
            scheme
                .position(a)
                .ok_or_else(|| Error::UnknownAttribute(a.to_string()))
        };
        Ok(match f {
            SelectionFormula::AttrEqConst { attr, literal } => {
                let p = pos(attr)?;
                Node::EqConst(p, scheme.attributes()[p].domain().index_of(literal))
            }
            SelectionFormula::AttrEqAttr(a, b) => Node::EqAttr(pos(a)?, pos(b)?),
            SelectionFormula::Not(inner) => Node::Not(Box::new(Node::build(inner, scheme)?)),
            SelectionFormula::And(l, r) => Node::And(
                Box::new(Node::build(l, scheme)?),
                Box::new(Node::build(r, scheme)?),
            ),
            SelectionFormula::Or(l, r) => Node::Or(
                Box::new(Node::build(l, scheme)?),
                Box::new(Node::build(r, scheme)?),
            ),
        })
    }
}

impl CompiledFormula<'_> {
    pub fn holds(&self, tuple: &Tuple) -> bool {
        self.eval(&self.root, tuple)
    }

    fn eval(&self, node: &Node, tuple: &Tuple) -> bool {
        let v = tuple.indices();
        match node {
            Node::EqConst(p, lit) => Some(v[*p]) == *lit,
            Node::EqAttr(a, b) => {
                let attrs = self.scheme.attributes();
                attrs[*a].domain().value(v[*a]) == attrs[*b].domain().value(v[*b])
            }
            Node::Not(f) => !self.eval(f, tuple),
            Node::And(l, r) => self.eval(l, tuple) && self.eval(r, tuple),
            Node::Or(l, r) => self.eval(l, tuple) || self.eval(r, tuple),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_connectives() {
        let s = Scheme::build(&[("X", &["a", "b"]), ("Z", &["a", "b", "c"])]).unwrap();
        let f = SelectionFormula::or(
            SelectionFormula::not(SelectionFormula::eq_attr("X", "Z")),
            SelectionFormula::and(
                SelectionFormula::eq_const("X", "a"),
                SelectionFormula::eq_const("Z", "a"),
            ),
        );
        let c = f.compile(&s).unwrap();
        let holds: Vec<String> = s
            .tuple_space()
            .filter(|t| c.holds(t))
            .map(|t| s.render(&t))
            .collect();
        assert_eq!(holds, ["(a,a)", "(a,b)", "(a,c)", "(b,a)", "(b,c)"]);
    }

    #[test]
    fn literal_outside_domain_never_matches() {
        let s = Scheme::build(&[("X", &["a", "b"])]).unwrap();
        let c = SelectionFormula::eq_const("X", "zzz").compile(&s).unwrap();
        assert!(s.tuple_space().all(|t| !c.holds(&t)));
    }

    #[test]
    fn unknown_attribute_is_an_error() {
        let s = Scheme::build(&[("X", &["a"])]).unwrap();
        let f = SelectionFormula::eq_attr("X", "Q");
        assert_eq!(f.check(&s), Err(Error::UnknownAttribute("Q".into())));
        assert!(f.compile(&s).is_err());
    }
}
