use crate::algebra::SelectionFormula;

/// Query abstract syntax tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum QueryExpr {
    Relation(String),
    Union(Box<QueryExpr>, Box<QueryExpr>),
    Intersect(Box<QueryExpr>, Box<QueryExpr>),
    Minus(Box<QueryExpr>, Box<QueryExpr>),
    /// Expression-level `NOT`.
    Complement(Box<QueryExpr>),
    Join(Box<QueryExpr>, Box<QueryExpr>),
    Project(Vec<String>, Box<QueryExpr>),
    Select(SelectionFormula, Box<QueryExpr>),
    Split(Box<QueryExpr>),
    Combine(Box<QueryExpr>),
}

impl QueryExpr {
    pub fn relation(name: impl Into<String>) -> Self {
        QueryExpr::Relation(name.into())
    }

    pub fn union(l: QueryExpr, r: QueryExpr) -> Self {
        QueryExpr::Union(Box::new(l), Box::new(r))
    }

    pub fn intersect(l: QueryExpr, r: QueryExpr) -> Self {
        QueryExpr::Intersect(Box::new(l), Box::new(r))
    }

    pub fn minus(l: QueryExpr, r: QueryExpr) -> Self {
        QueryExpr::Minus(Box::new(l), Box::new(r))
    }

    pub fn complement(e: QueryExpr) -> Self {
        QueryExpr::Complement(Box::new(e))
    }

    pub fn join(l: QueryExpr, r: QueryExpr) -> Self {
        QueryExpr::Join(Box::new(l), Box::new(r))
    }

    pub fn project<S: Into<String>>(attrs: impl IntoIterator<Item = S>, e: QueryExpr) -> Self {
        QueryExpr::Project(attrs.into_iter().map(Into::into).collect(), Box::new(e))
    }

    pub fn select(f: SelectionFormula, e: QueryExpr) -> Self {
        QueryExpr::Select(f, Box::new(e))
    }

    pub fn split(e: QueryExpr) -> Self {
        QueryExpr::Split(Box::new(e))
    }

    pub fn combine(e: QueryExpr) -> Self {
        QueryExpr::Combine(Box::new(e))
    }

    /// Names of the catalog relations the expression reads.
    pub fn relations(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.walk(&mut |e| {
            if let QueryExpr::Relation(n) = e {
                out.push(n.as_str());
            }
        });
        out
    }

    fn walk<'a>(&'a self, f: &mut impl FnMut(&'a QueryExpr)) {
        f(self);
        match self {
            QueryExpr::Relation(_) => {}
            QueryExpr::Union(l, r)
            | QueryExpr::Intersect(l, r)
            | QueryExpr::Minus(l, r)
            | QueryExpr::Join(l, r) => {
                l.walk(f);
                r.walk(f);
            }
            QueryExpr::Complement(e)
            | QueryExpr::Project(_, e)
            | QueryExpr::Select(_, e)
            | QueryExpr::Split(e)
            | QueryExpr::Combine(e) => e.walk(f),
        }
    }
}
