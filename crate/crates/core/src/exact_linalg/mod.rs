//! Sparse exact-rational linear algebra over graph bases.

mod complexes;
mod echelon;
mod matrix;

pub use complexes::{
    block_basis, block_report, cocycle_basis, cohomology_dim, cohomology_report, differential, differential_matrix,
    is_coboundary, is_cocycle, quotient_injectivity, solve_in_span, BasisIndex, BlockReport, Coboundary,
    CohomologyReport, InjectivityReport,
};
pub use echelon::Echelon;
pub use matrix::SparseRationalMatrix;

use std::collections::HashMap;

use crate::graph_core::{Graph, GraphVector, Q};

/// Sparse vector as sorted `(index, value)` pairs.
pub type SparseVec = Vec<(usize, Q)>;

/// Assigns stable indices to graph keys in insertion order.
#[derive(Clone, Debug, Default)]
pub struct KeyIndex {
    keys: Vec<Graph>,
    pos: HashMap<Graph, usize>,
}

impl KeyIndex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_keys<'a>(keys: impl IntoIterator<Item = &'a Graph>) -> Self {
        let mut k = Self::new();
        for g in keys {
            k.index(g);
        }
        k
    }

    pub fn index(&mut self, g: &Graph) -> usize {
        if let Some(&i) = self.pos.get(g) {
            return i;
        }
        self.keys.push(g.clone());
        self.pos.insert(g.clone(), self.keys.len() - 1);
        self.keys.len() - 1
    }

    pub fn get(&self, g: &Graph) -> Option<usize> {
        self.pos.get(g).copied()
    }

    pub fn key(&self, i: usize) -> &Graph {
        &self.keys[i]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Sparse coordinates of `v`, registering unseen keys.
    pub fn coords(&mut self, v: &GraphVector) -> SparseVec {
        let mut out: SparseVec = v.iter().map(|(g, c)| (self.index(g), c.clone())).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    pub fn vector(&self, s: &[(usize, Q)]) -> GraphVector {
        let mut v = GraphVector::new();
        for (i, c) in s {
            v.add_canonical(self.keys[*i].clone(), c);
        }
        v
    }
}
