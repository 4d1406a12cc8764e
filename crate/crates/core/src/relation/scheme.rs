//! Attribute domains, ordered schemes and tuples.
//!
//! A [`Tuple`] stores one domain index per scheme attribute, so the derived
//! lexicographic order on tuples is exactly the tuple-space order of the
//! scheme (attribute order first, then declared value order).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Finite, non-empty list of distinct symbolic values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AttributeDomain {
    values: Vec<String>,
}

impl AttributeDomain {
    pub fn new<I, S>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let values: Vec<String> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(Error::InvalidScheme("attribute domain is empty".into()));
        }
        for (i, v) in values.iter().enumerate() {
            if values[..i].contains(v) {
                return Err(Error::InvalidScheme(format!("duplicate domain value `{v}`")));
            }
        }
        Ok(AttributeDomain { values })
    }

    pub fn values(&self) -> &[String] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index_of(&self, value: &str) -> Option<u32> {
        self.values.iter().position(|v| v == value).map(|i| i as u32)
    }

    pub fn value(&self, index: u32) -> &str {
        &self.values[index as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Attribute {
    name: String,
    domain: Arc<AttributeDomain>,
}

impl Attribute {
    pub fn new(name: impl Into<String>, domain: AttributeDomain) -> Self {
        Attribute {
            name: name.into(),
            domain: Arc::new(domain),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &AttributeDomain {
        &self.domain
    }
}

/// Ordered list of uniquely named attributes. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scheme {
    attrs: Arc<[Attribute]>,
}

impl Scheme {
    pub fn new(attrs: Vec<Attribute>) -> Result<Self> {
        for (i, a) in attrs.iter().enumerate() {
            if attrs[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::InvalidScheme(format!(
                    "duplicate attribute `{}`",
                    a.name
                )));
            }
        }
        Ok(Scheme {
            attrs: attrs.into(),
        })
    }

    /// Convenience constructor: `Scheme::build(&[("X", &["a", "b"])])`.
    pub fn build(columns: &[(&str, &[&str])]) -> Result<Self> {
        let attrs = columns
            .iter()
            .map(|(name, values)| Ok(Attribute::new(*name, AttributeDomain::new(values.iter().copied())?)))
            .collect::<Result<Vec<_>>>()?;
        Scheme::new(attrs)
    }

    pub fn attributes(&self) -> &[Attribute] {
        &self.attrs
    }

    pub fn arity(&self) -> usize {
        self.attrs.len()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.attrs.iter().map(|a| a.name.as_str())
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.attrs.iter().position(|a| a.name == name)
    }

    pub fn attribute(&self, name: &str) -> Option<&Attribute> {
        self.attrs.iter().find(|a| a.name == name)
    }

    /// |τ(Σ)|, the product of the domain sizes.
    pub fn tuple_space_size(&self) -> u128 {
        self.attrs
            .iter()
            .map(|a| a.domain.len() as u128)
            .fold(1u128, |acc, n| acc.saturating_mul(n))
    }

    /// Every tuple on this scheme, in lexicographic order.
    pub fn tuple_space(&self) -> TupleSpace {
        TupleSpace::new(
            self.attrs.iter().map(|a| a.domain.len() as u32).collect(),
            Vec::new(),
        )
    }

    /// Builds a tuple from its values in attribute order.
    pub fn tuple<S: AsRef<str>>(&self, values: &[S]) -> Result<Tuple> {
        if values.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: values.len(),
            });
        }
        values
            .iter()
            .zip(self.attrs.iter())
            .map(|(v, a)| {
                a.domain
                    .index_of(v.as_ref())
                    .ok_or_else(|| Error::DomainViolation {
                        attribute: a.name.clone(),
                        value: v.as_ref().to_string(),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(Tuple)
    }

    /// Checks that `tuple` was built for a scheme of this shape.
    pub fn check(&self, tuple: &Tuple) -> Result<()> {
        if tuple.0.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                found: tuple.0.len(),
            });
        }
        for (&v, a) in tuple.0.iter().zip(self.attrs.iter()) {
            if v as usize >= a.domain.len() {
                return Err(Error::SchemeMismatch(format!(
                    "value index {v} outside the domain of `{}`",
                    a.name
                )));
            }
        }
        Ok(())
    }

    pub fn values<'a>(&'a self, tuple: &'a Tuple) -> impl Iterator<Item = &'a str> + 'a {
        tuple
            .0
            .iter()
            .zip(self.attrs.iter())
            .map(|(&v, a)| a.domain.value(v))
    }

    /// `(a,b,c)` rendering used in messages and tables.
    pub fn render(&self, tuple: &Tuple) -> String {
        let parts: Vec<&str> = self.values(tuple).collect();
        format!("({})", parts.join(","))
    }

    /// The scheme restricted to `names`, in the order given.
    pub fn project_onto<S: AsRef<str>>(&self, names: &[S]) -> Result<Scheme> {
        let mut attrs = Vec::with_capacity(names.len());
        let mut missing = Vec::new();
        for n in names {
            match self.attribute(n.as_ref()) {
                Some(a) => attrs.push(a.clone()),
                None => missing.push(n.as_ref().to_string()),
            }
        }
        if !missing.is_empty() {
            return Err(Error::ProjectionNotSubset { attrs: missing });
        }
        Scheme::new(attrs)
    }

    /// Σ ∪ Δ: this scheme's attributes followed by the new ones of `other`.
    pub fn join(&self, other: &Scheme) -> Result<Scheme> {
        let mut attrs: Vec<Attribute> = self.attrs.to_vec();
        for b in other.attrs.iter() {
            match self.attribute(&b.name) {
                Some(a) if a.domain != b.domain => {
                    return Err(Error::SchemeMismatch(format!(
                        "attribute `{}` is bound to different domains",
                        b.name
                    )))
                }
                Some(_) => {}
                None => attrs.push(b.clone()),
            }
        }
        Scheme::new(attrs)
    }

    /// For each attribute of `sub`, its position in `self`. Fails unless
    /// `sub` ⊆ `self` with identical domains.
    pub fn embedding(&self, sub: &Scheme) -> Result<Vec<usize>> {
        sub.attrs
            .iter()
            .map(|b| match self.position(&b.name) {
                Some(i) if self.attrs[i].domain == b.domain => Ok(i),
                Some(_) => Err(Error::SchemeMismatch(format!(
                    "attribute `{}` is bound to different domains",
                    b.name
                ))),
                None => Err(Error::SchemeMismatch(format!(
                    "attribute `{}` does not occur in the target scheme",
                    b.name
                ))),
            })
            .collect()
    }

    /// Position of `tuple` in [`Scheme::tuple_space`] order.
    pub fn rank(&self, tuple: &Tuple) -> usize {
        tuple
            .0
            .iter()
            .zip(self.attrs.iter())
            .fold(0usize, |acc, (&v, a)| acc * a.domain.len() + v as usize)
    }

    /// Extensions t^Σ of `tuple` (on `sub`) into this scheme.
    pub fn extensions(&self, sub: &Scheme, tuple: &Tuple) -> Result<TupleSpace> {
        sub.check(tuple)?;
        let positions = self.embedding(sub)?;
        let fixed = positions
            .into_iter()
            .zip(tuple.0.iter().copied())
            .collect();
        Ok(TupleSpace::new(
            self.attrs.iter().map(|a| a.domain.len() as u32).collect(),
            fixed,
        ))
    }
}

impl fmt::Debug for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `⟨X{a,b,c}, Y{a,b,c}⟩`-style rendering.
impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, a) in self.attrs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{{{}}}", a.name, a.domain.values.join(","))?;
        }
        write!(f, ">")
    }
}

/// Domain indices, one per attribute of the owning scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple(pub(crate) Vec<u32>);

impl Tuple {
    pub fn from_indices(indices: Vec<u32>) -> Self {
        Tuple(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Sub-tuple at the given positions.
    pub fn pick(&self, positions: &[usize]) -> Tuple {
        Tuple(positions.iter().map(|&p| self.0[p]).collect())
    }
}

/// Odometer over a mixed-radix space with some digits pinned.
#[derive(Debug, Clone)]
pub struct TupleSpace {
    radices: Vec<u32>,
    free: Vec<usize>,
    current: Option<Vec<u32>>,
}

impl TupleSpace {
    fn new(radices: Vec<u32>, fixed: Vec<(usize, u32)>) -> Self {
        let mut start = vec![0u32; radices.len()];
        for &(pos, v) in &fixed {
            start[pos] = v;
        }
        let free = (0..radices.len())
            .filter(|i| !fixed.iter().any(|(p, _)| p == i))
            .collect();
        let empty = radices.contains(&0);
        TupleSpace {
            radices,
            free,
            current: if empty { None } else { Some(start) },
        }
    }
}

impl Iterator for TupleSpace {
    type Item = Tuple;

    fn next(&mut self) -> Option<Tuple> {
        let current = self.current.as_mut()?;
        let out = Tuple(current.clone());
        let mut advanced = false;
        for &pos in self.free.iter().rev() {
            current[pos] += 1;
            if current[pos] < self.radices[pos] {
                advanced = true;
                break;
            }
            current[pos] = 0;
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}
