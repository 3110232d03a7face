//! Differential matrices, cohomology ranks and coboundary solves on the named complexes.

use std::collections::{BTreeMap, HashMap};

use num::Zero;
use serde::Serialize;

use super::{Echelon, KeyIndex, SparseRationalMatrix, SparseVec};
use crate::deformation_complexes::ideals::ideal_prime_basis;
use crate::deformation_complexes::{ComplexId, MacElement};
use crate::error::{Error, Result};
use crate::graph_core::{Budget, Colour, Graph, GraphVector, Q};

type Bigrade = (usize, usize, usize);

/// Ordered, duplicate-free basis of one bigrade of a named complex.
#[derive(Clone, Debug)]
pub struct BasisIndex {
    pub complex: ComplexId,
    pub bigrade: Bigrade,
    pub keys: Vec<Graph>,
    pos: HashMap<Graph, usize>,
}

impl BasisIndex {
    pub fn new(complex: ComplexId, bigrade: Bigrade, budget: Budget) -> Result<Self> {
        let keys = complex.basis(bigrade, budget)?;
        let pos = keys.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();
        Ok(BasisIndex { complex, bigrade, keys, pos })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn position(&self, g: &Graph) -> Option<usize> {
        self.pos.get(g).copied()
    }
}

fn mac_terms(x: &MacElement) -> impl Iterator<Item = (&Graph, &Q)> {
    x.def.iter().chain(x.gc.iter())
}

fn add_term(x: &mut MacElement, g: &Graph, c: &Q) {
    if g.colour == Colour::One {
        x.gc.add_canonical(g.clone(), c);
    } else {
        x.def.add_canonical(g.clone(), c);
    }
}

/// Matrix of δ out of one bigrade: columns follow the source basis, rows the concatenated
/// target bases.
pub fn differential_matrix(id: ComplexId, bigrade: Bigrade, budget: Budget) -> Result<SparseRationalMatrix> {
    let src = BasisIndex::new(id, bigrade, budget)?;
    let targets: Vec<BasisIndex> =
        id.target_bigrades(bigrade).into_iter().map(|b| BasisIndex::new(id, b, budget)).collect::<Result<_>>()?;
    let mut offset = Vec::new();
    let mut rows = 0;
    for t in &targets {
        offset.push(rows);
        rows += t.len();
    }
    let mut mat = SparseRationalMatrix::new(rows, src.len());
    for (j, g) in src.keys.iter().enumerate() {
        let img = id.d_key(g);
        for (h, c) in mac_terms(&img) {
            let hit = targets.iter().zip(&offset).find_map(|(t, o)| t.position(h).map(|p| p + o));
            let r = hit.ok_or_else(|| {
                Error::Invalid(format!("δ({}) has term {} outside the {} basis", g.key(), h.key(), id.name()))
            })?;
            mat.add_to(r, j, c);
        }
    }
    Ok(mat)
}

/// Basis of the block of fixed degree and k (concatenated bigrades).
pub fn block_basis(id: ComplexId, degree: i64, k: i64, budget: Budget) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for b in id.bigrades_at(degree, k) {
        out.extend(id.basis(b, budget)?);
    }
    Ok(out)
}

/// Ideal vectors for a quotient complex in the Def bigrades of a block.
fn block_ideal(id: ComplexId, degree: i64, k: i64, budget: Budget) -> Result<Vec<GraphVector>> {
    if !id.is_quotient() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for b in id.bigrades_at(degree, k) {
        if b.0 > 0 {
            out.extend(ideal_prime_basis(b, budget)?.iter().cloned());
        }
    }
    Ok(out)
}

fn coords(idx: &mut KeyIndex, x: &MacElement) -> SparseVec {
    let mut v: SparseVec = mac_terms(x).map(|(g, c)| (idx.index(g), c.clone())).collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

fn span_rank(idx: &mut KeyIndex, vs: impl IntoIterator<Item = MacElement>) -> usize {
    let mut ech = Echelon::new();
    for v in vs {
        let c = coords(idx, &v);
        ech.insert(c);
    }
    ech.rank()
}

/// dim(I ∩ C) for the keys `c` of a block.
fn ideal_meet_dim(block: &[Graph], ideal: &[GraphVector]) -> usize {
    let inside: std::collections::HashSet<&Graph> = block.iter().collect();
    let mut idx = KeyIndex::new();
    for v in ideal {
        for g in v.keys() {
            if !inside.contains(g) {
                idx.index(g);
            }
        }
    }
    let boundary = idx.len();
    let mut ech = Echelon::new();
    for v in ideal {
        let c = idx.coords(v);
        ech.insert(c);
    }
    ech.pivots().filter(|&p| p >= boundary).count()
}

/// Rank of δ on a block, modulo the target ideal for quotient complexes.
fn block_rank(id: ComplexId, src: &[Graph], target_ideal: &[GraphVector]) -> usize {
    let mut idx = KeyIndex::new();
    let images: Vec<MacElement> = src.iter().map(|g| id.d_key(g)).collect();
    if target_ideal.is_empty() {
        return span_rank(&mut idx, images);
    }
    let ideal: Vec<MacElement> = target_ideal.iter().map(|v| MacElement::from_def(v.clone())).collect();
    let with = span_rank(&mut idx, images.into_iter().chain(ideal.iter().cloned()));
    with - span_rank(&mut idx, ideal)
}

/// Cohomology of one block of fixed (degree, k).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlockReport {
    pub k: i64,
    pub bigrades: Vec<Bigrade>,
    pub dim: usize,
    pub ideal_dim: usize,
    pub rank_out: usize,
    pub rank_in: usize,
    pub cohomology: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CohomologyReport {
    pub complex: String,
    pub degree: i64,
    pub vertex_cap: usize,
    pub blocks: Vec<BlockReport>,
    pub total: usize,
}

pub fn block_report(id: ComplexId, degree: i64, k: i64, budget: Budget) -> Result<BlockReport> {
    let c = block_basis(id, degree, k, budget)?;
    let ideal_here = block_ideal(id, degree, k, budget)?;
    let ideal_dim = if ideal_here.is_empty() { 0 } else { ideal_meet_dim(&c, &ideal_here) };
    let dim = c.len() - ideal_dim;
    let rank_out = if dim == 0 { 0 } else { block_rank(id, &c, &block_ideal(id, degree + 1, k, budget)?) };
    let prev = block_basis(id, degree - 1, k, budget)?;
    let rank_in = if dim == 0 { 0 } else { block_rank(id, &prev, &ideal_here) };
    let cohomology = dim.checked_sub(rank_out + rank_in).ok_or_else(|| {
        Error::Invalid(format!("{} block ({degree},{k}): ranks exceed dimension; δ² ≠ 0?", id.name()))
    })?;
    Ok(BlockReport { k, bigrades: id.bigrades_at(degree, k), dim, ideal_dim, rank_out, rank_in, cohomology })
}

/// Σ over blocks with at most `cap` vertices of dim ker - dim im at the given degree.
pub fn cohomology_report(id: ComplexId, degree: i64, cap: usize, budget: Budget) -> Result<CohomologyReport> {
    let mut blocks = Vec::new();
    if cap > 0 {
        let k_max = cap as i64 - id.block_vertices(degree, 0);
        let k_min = -(cap as i64) - degree.abs() - 2;
        for k in k_min..=k_max {
            if id.bigrades_at(degree, k).is_empty() || id.block_vertices(degree, k) < 1 {
                continue;
            }
            let r = block_report(id, degree, k, budget)?;
            if r.dim > 0 {
                blocks.push(r);
            }
        }
    }
    let total = blocks.iter().map(|b| b.cohomology).sum();
    Ok(CohomologyReport { complex: id.name().into(), degree, vertex_cap: cap, blocks, total })
}

pub fn cohomology_dim(id: ComplexId, degree: i64, cap: usize) -> Result<usize> {
    Ok(cohomology_report(id, degree, cap, Budget::default())?.total)
}

/// δx for an element of a named complex.
pub fn differential(id: ComplexId, x: &MacElement) -> MacElement {
    let mut out = MacElement::zero();
    for (g, c) in mac_terms(x) {
        out.axpy(c, &id.d_key(g));
    }
    out
}

fn in_ideal(dx: &MacElement) -> Result<bool> {
    if !dx.gc.is_zero() {
        return Ok(false);
    }
    for (m, n, l) in dx.def.bigrades() {
        let part = dx.def.extract(m, n, l);
        let basis = ideal_prime_basis((m, n, l), Budget::default())?;
        let mut idx = KeyIndex::new();
        let mut ech = Echelon::new();
        for v in basis.iter() {
            let c = idx.coords(v);
            ech.insert(c);
        }
        let c = idx.coords(&part);
        if !ech.contains(&c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// δx = 0 (δx ∈ I'_•• for quotient complexes).
pub fn is_cocycle(id: ComplexId, x: &MacElement) -> Result<bool> {
    let dx = differential(id, x);
    if dx.is_zero() {
        return Ok(true);
    }
    if id.is_quotient() {
        return in_ideal(&dx);
    }
    Ok(false)
}

/// Result of a coboundary solve.
#[derive(Clone, Debug)]
pub struct Coboundary {
    pub is_coboundary: bool,
    /// Some y with δy = x (modulo the ideal for quotient complexes).
    pub preimage: Option<MacElement>,
}

/// Groups the terms of x by (degree, k).
fn blocks_of(id: ComplexId, x: &MacElement) -> Result<(i64, BTreeMap<i64, MacElement>)> {
    let mut degree = None;
    let mut parts: BTreeMap<i64, MacElement> = BTreeMap::new();
    for (g, c) in mac_terms(x) {
        let (d, k) = id.grade(g);
        if *degree.get_or_insert(d) != d {
            return Err(Error::Invalid("element is not homogeneous in degree".into()));
        }
        add_term(parts.entry(k).or_default(), g, c);
    }
    Ok((degree.unwrap_or(0), parts))
}

/// Solves δy = x block by block using the incoming differential.
pub fn is_coboundary(id: ComplexId, x: &MacElement) -> Result<Coboundary> {
    let budget = Budget::default();
    let (degree, parts) = blocks_of(id, x)?;
    let mut pre = MacElement::zero();
    for (k, part) in parts {
        let src = block_basis(id, degree - 1, k, budget)?;
        let ideal = block_ideal(id, degree, k, budget)?;
        let mut idx = KeyIndex::new();
        let mut ech = Echelon::with_provenance();
        for (j, g) in src.iter().enumerate() {
            let c = coords(&mut idx, &id.d_key(g));
            ech.insert_with_id(c, j);
        }
        for (j, v) in ideal.iter().enumerate() {
            let c = idx.coords(v);
            ech.insert_with_id(c, src.len() + j);
        }
        let t = coords(&mut idx, &part);
        match ech.solve(&t) {
            None => return Ok(Coboundary { is_coboundary: false, preimage: None }),
            Some(combo) => {
                for (j, c) in combo {
                    if j < src.len() {
                        add_term(&mut pre, &src[j], &c);
                    }
                }
            }
        }
    }
    Ok(Coboundary { is_coboundary: true, preimage: Some(pre) })
}

/// Some y in the span of `basis` with f(y) = target, or `None`.
pub fn solve_in_span(
    basis: &[Graph],
    f: impl Fn(&GraphVector) -> GraphVector,
    target: &GraphVector,
) -> Result<Option<GraphVector>> {
    let mut idx = KeyIndex::new();
    let mut ech = Echelon::with_provenance();
    for (j, g) in basis.iter().enumerate() {
        let c = idx.coords(&f(&GraphVector::of(g)));
        ech.insert_with_id(c, j);
    }
    let t = idx.coords(target);
    Ok(ech.solve(&t).map(|combo| {
        let mut y = GraphVector::new();
        for (j, c) in combo {
            y.add_canonical(basis[j].clone(), &c);
        }
        y
    }))
}

/// Kernel basis of δ on a block.
pub fn cocycle_basis(id: ComplexId, degree: i64, k: i64, budget: Budget) -> Result<Vec<MacElement>> {
    let src = block_basis(id, degree, k, budget)?;
    let mut idx = KeyIndex::new();
    let mut ech = Echelon::with_provenance();
    let mut out = Vec::new();
    for (j, g) in src.iter().enumerate() {
        let c = coords(&mut idx, &id.d_key(g));
        if let Some(rel) = ech.insert_or_relation(c, j) {
            let mut z = MacElement::zero();
            for (i, c) in rel {
                if !c.is_zero() {
                    add_term(&mut z, &src[i], &c);
                }
            }
            out.push(z);
        }
    }
    Ok(out)
}

/// Whether degree-`degree` cohomology of Def(Ass∞ → Graphs) injects into the I'_•• quotient
/// on the block k: dim(Z + I) - dim(B + I) = dim Z - dim B.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InjectivityReport {
    pub k: i64,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_z_plus_i: usize,
    pub dim_b_plus_i: usize,
    pub injective: bool,
}

pub fn quotient_injectivity(degree: i64, k: i64, budget: Budget) -> Result<InjectivityReport> {
    let id = ComplexId::DefAssGraphs;
    let z = cocycle_basis(id, degree, k, budget)?;
    let b: Vec<MacElement> = block_basis(id, degree - 1, k, budget)?.iter().map(|g| id.d_key(g)).collect();
    let ideal: Vec<MacElement> = block_ideal(ComplexId::DefAssGraphsQuot, degree, k, budget)?
        .into_iter()
        .map(MacElement::from_def)
        .collect();
    let mut idx = KeyIndex::new();
    let dim_z = span_rank(&mut idx, z.iter().cloned());
    let dim_b = span_rank(&mut idx, b.iter().cloned());
    let dim_z_plus_i = span_rank(&mut idx, z.iter().cloned().chain(ideal.iter().cloned()));
    let dim_b_plus_i = span_rank(&mut idx, b.iter().cloned().chain(ideal.iter().cloned()));
    let injective = dim_z_plus_i - dim_b_plus_i == dim_z - dim_b;
    Ok(InjectivityReport { k, dim_z, dim_b, dim_z_plus_i, dim_b_plus_i, injective })
}
