use std::collections::BTreeMap;

use num::{One, Zero};

use super::SparseVec;
use crate::graph_core::Q;

#[derive(Clone, Debug)]
struct Row {
    v: SparseVec,
    prov: SparseVec,
}

/// Incremental row-echelon basis over the rationals.
///
/// Each stored vector has pivot coefficient 1 at its smallest index. With provenance
/// tracking, every stored vector remembers its expression in the inserted inputs.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, Row>,
    track: bool,
}

fn axpy_map(w: &mut BTreeMap<usize, Q>, c: &Q, v: &[(usize, Q)]) {
    for (i, x) in v {
        let e = w.entry(*i).or_insert_with(Q::zero);
        *e += c * x;
        if e.is_zero() {
            w.remove(i);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_provenance() -> Self {
        Echelon { rows: BTreeMap::new(), track: true }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Stored basis vectors in pivot order.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values().map(|r| &r.v)
    }

    fn reduce_full(&self, v: &[(usize, Q)], prov: &mut BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        let mut w: BTreeMap<usize, Q> = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = w.range(cursor..).map(|(k, _)| *k).find(|k| self.rows.contains_key(k));
            let Some(p) = next else { break };
            let c = w[&p].clone();
            let row = &self.rows[&p];
            axpy_map(&mut w, &-&c, &row.v);
            if self.track {
                axpy_map(prov, &-&c, &row.prov);
            }
            cursor = p + 1;
        }
        w
    }

    /// Remainder of `v` after reduction (zero iff `v` lies in the span).
    pub fn reduce(&self, v: &[(usize, Q)]) -> SparseVec {
        let mut prov = BTreeMap::new();
        self.reduce_full(v, &mut prov).into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, Q)]) -> bool {
        self.reduce(v).is_empty()
    }

    fn store(&mut self, w: BTreeMap<usize, Q>, prov: BTreeMap<usize, Q>) -> bool {
        let Some((&p, lead)) = w.iter().next() else { return false };
        let inv = Q::one() / lead;
        let v = w.iter().map(|(i, x)| (*i, x * &inv)).collect();
        let prov = prov.iter().map(|(i, x)| (*i, x * &inv)).collect();
        self.rows.insert(p, Row { v, prov });
        true
    }

    /// Inserts `v`; returns whether it was independent of the stored span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut prov = BTreeMap::new();
        let w = self.reduce_full(&v, &mut prov);
        self.store(w, prov)
    }

    /// Inserts `v` as input number `id` (provenance tracking).
    pub fn insert_with_id(&mut self, v: SparseVec, id: usize) -> bool {
        let mut prov = BTreeMap::new();
        prov.insert(id, Q::one());
        let w = self.reduce_full(&v, &mut prov);
        self.store(w, prov)
    }

    /// Inserts `v` as input `id`; when it depends on earlier inputs, returns the relation
    /// Σ c_i input_i = 0 (with c_id = 1) instead of storing it.
    pub fn insert_or_relation(&mut self, v: SparseVec, id: usize) -> Option<SparseVec> {
        let mut prov = BTreeMap::new();
        prov.insert(id, Q::one());
        let w = self.reduce_full(&v, &mut prov);
        if w.is_empty() {
            return Some(prov.into_iter().collect());
        }
        self.store(w, prov);
        None
    }

    /// Coefficients over input ids expressing `t`, or `None` if `t` is not in the span.
    pub fn solve(&self, t: &[(usize, Q)]) -> Option<SparseVec> {
        let mut prov = BTreeMap::new();
        let w = self.reduce_full(t, &mut prov);
        if !w.is_empty() {
            return None;
        }
        // t - Σ c_i row_i = 0 was tracked as -Σ c_i prov_i
        Some(prov.into_iter().map(|(i, x)| (i, -x)).collect())
    }
}
