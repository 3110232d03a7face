use std::collections::BTreeMap;

use num::{One, Zero};

use super::{Colour, Graph, Q};
use crate::error::{Error, Result};

/// Finite linear combination of canonical graph keys with exact coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphVector {
    terms: BTreeMap<Graph, Q>,
}

impl GraphVector {
    pub fn new() -> Self {
        Self::default()
    }

    /// Vector holding the class of a raw term (zero if the class vanishes).
    pub fn from_graph(g: &Graph) -> Result<Self> {
        let mut v = Self::new();
        v.add_raw(g, &Q::one())?;
        Ok(v)
    }

    /// Like [`from_graph`](Self::from_graph) for terms known to be valid.
    pub fn of(g: &Graph) -> Self {
        Self::from_graph(g).expect("valid graph")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Graph, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &Graph> {
        self.terms.keys()
    }

    pub fn coeff(&self, g: &Graph) -> Q {
        self.terms.get(g).cloned().unwrap_or_else(Q::zero)
    }

    pub fn colour(&self) -> Option<Colour> {
        self.terms.keys().next().map(|g| g.colour)
    }

    /// Adds `c` times an already canonical key.
    pub fn add_canonical(&mut self, g: Graph, c: &Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c` times the class of a raw term.
    pub fn add_raw(&mut self, g: &Graph, c: &Q) -> Result<()> {
        g.validate()?;
        self.add_raw_unchecked(g, c);
        Ok(())
    }

    pub(crate) fn add_raw_unchecked(&mut self, g: &Graph, c: &Q) {
        if let Some((k, s)) = g.canon_unchecked() {
            if s > 0 {
                self.add_canonical(k, c);
            } else {
                self.add_canonical(k, &-c);
            }
        }
    }

    /// `self += c * other` without colour checks.
    pub fn axpy(&mut self, c: &Q, other: &GraphVector) {
        if c.is_zero() {
            return;
        }
        for (g, x) in &other.terms {
            self.add_canonical(g.clone(), &(c * x));
        }
    }

    pub fn check_colour(&self, other: &GraphVector) -> Result<()> {
        match (self.colour(), other.colour()) {
            (Some(a), Some(b)) if a != b => {
                Err(Error::ColourMismatch(format!("{} vs {}", a.tag(), b.tag())))
            }
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &GraphVector) -> Result<GraphVector> {
        self.check_colour(other)?;
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        Ok(out)
    }

    pub fn sub(&self, other: &GraphVector) -> Result<GraphVector> {
        self.check_colour(other)?;
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Q) -> GraphVector {
        if c.is_zero() {
            return GraphVector::new();
        }
        GraphVector { terms: self.terms.iter().map(|(g, x)| (g.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> GraphVector {
        GraphVector { terms: self.terms.iter().map(|(g, x)| (g.clone(), -x)).collect() }
    }

    /// Homogeneous part of one (m, n, l) bigrade.
    pub fn extract(&self, m: usize, n: usize, l: usize) -> GraphVector {
        self.filter(|g| g.bigrade() == (m, n, l))
    }

    pub fn filter(&self, f: impl Fn(&Graph) -> bool) -> GraphVector {
        GraphVector {
            terms: self.terms.iter().filter(|(g, _)| f(g)).map(|(g, x)| (g.clone(), x.clone())).collect(),
        }
    }

    /// Applies a linear map defined on basis keys.
    pub fn map_linear(&self, f: impl Fn(&Graph) -> GraphVector) -> GraphVector {
        let mut out = GraphVector::new();
        for (g, c) in &self.terms {
            out.axpy(c, &f(g));
        }
        out
    }

    pub fn bigrades(&self) -> Vec<(usize, usize, usize)> {
        let mut b: Vec<_> = self.terms.keys().map(|g| g.bigrade()).collect();
        b.sort();
        b.dedup();
        b
    }

    pub fn max_vertices(&self) -> usize {
        self.terms.keys().map(|g| g.n_vertices()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut items: Vec<(String, serde_json::Value)> =
            self.terms.iter().map(|(g, c)| (g.key(), g.to_json(c))).collect();
        items.sort_by(|a, b| a.0.cmp(&b.0));
        serde_json::Value::Array(items.into_iter().map(|(_, v)| v).collect())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<GraphVector> {
        let mut out = GraphVector::new();
        match v {
            serde_json::Value::Array(items) => {
                for it in items {
                    let (g, c) = Graph::from_json(it)?;
                    out.add_raw(&g, &c)?;
                }
            }
            serde_json::Value::Object(_) => {
                let (g, c) = Graph::from_json(v)?;
                out.add_raw(&g, &c)?;
            }
            _ => return Err(Error::Parse("expected a JSON term or array of terms".into())),
        }
        Ok(out)
    }
}

impl FromIterator<(Graph, Q)> for GraphVector {
    /// Collects raw terms, canonicalizing each (invalid terms panic).
    fn from_iter<I: IntoIterator<Item = (Graph, Q)>>(iter: I) -> Self {
        let mut out = GraphVector::new();
        for (g, c) in iter {
            out.add_raw(&g, &c).expect("valid graph term");
        }
        out
    }
}
