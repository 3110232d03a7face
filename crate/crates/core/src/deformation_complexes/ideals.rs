//! The ideals I_•• and I'_•• realized as explicit spans per bigrade.

use std::collections::{HashMap, VecDeque};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use super::gc::edge;
use super::registry::GRAPHS_ALL_VALENCE;
use crate::error::{Error, Result};
use crate::exact_linalg::{Echelon, KeyIndex};
use crate::graph_core::{enumerate, Budget, Colour, Constraints, Graph, GraphVector, Q};
use crate::operad_calculus::compose_raw;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ideal {
    /// Operadic ideal of Gra generated by the edge between two vertices.
    Ibb,
    /// Two-coloured ideal spanned by the images of the edge action on blacks.
    IbbPrime,
}

impl Ideal {
    pub fn name(self) -> &'static str {
        match self {
            Ideal::Ibb => "I_bb",
            Ideal::IbbPrime => "I_bb_prime",
        }
    }
}

impl FromStr for Ideal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I_bb" | "ibb" | "bb" => Ok(Ideal::Ibb),
            "I_bb_prime" | "ibb_prime" | "bb_prime" => Ok(Ideal::IbbPrime),
            _ => Err(Error::Parse(format!("unknown ideal '{s}'"))),
        }
    }
}

type Bigrade = (usize, usize, usize);
type SpanCache = Mutex<HashMap<(Ideal, Bigrade), Arc<Vec<GraphVector>>>>;

fn cache() -> &'static SpanCache {
    static C: OnceLock<SpanCache> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Growing span of vectors in the keys of one bigrade.
struct Span {
    idx: KeyIndex,
    ech: Echelon,
    queue: VecDeque<GraphVector>,
}

impl Span {
    fn new() -> Self {
        Span { idx: KeyIndex::new(), ech: Echelon::new(), queue: VecDeque::new() }
    }

    fn push(&mut self, v: GraphVector) {
        if v.is_zero() {
            return;
        }
        let c = self.idx.coords(&v);
        if self.ech.insert(c) {
            self.queue.push_back(v);
        }
    }

    /// Closes the span under adjacent transpositions of the first `m` vertices.
    fn close_under_swaps(&mut self, m: usize, colour: Colour) {
        while let Some(v) = self.queue.pop_front() {
            for i in 0..m.saturating_sub(1) {
                let mut w = GraphVector::new();
                for (g, c) in v.iter() {
                    let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
                    perm.swap(i, i + 1);
                    let h = Graph { colour, ..g.relabel(&perm) };
                    w.add_raw_unchecked(&h, c);
                }
                self.push(w);
            }
        }
    }

    fn basis(&self) -> Vec<GraphVector> {
        self.ech.basis().map(|r| self.idx.vector(r)).collect()
    }
}

fn compose_vec(host: &GraphVector, slot: usize, guest: &GraphVector, out: &mut GraphVector) {
    for (h, a) in host.iter() {
        for (g, b) in guest.iter() {
            let c: Q = a * b;
            compose_raw(h, slot, g, |t| out.add_raw_unchecked(&t, &c)).expect("white-slot composition");
        }
    }
}

/// Echelon basis of I'_•• at an ordered two-coloured bigrade.
pub fn ideal_prime_basis(bigrade: Bigrade, budget: Budget) -> Result<Arc<Vec<GraphVector>>> {
    if let Some(v) = cache().lock().unwrap().get(&(Ideal::IbbPrime, bigrade)) {
        return Ok(v.clone());
    }
    let (m, n, l) = bigrade;
    let mut span = Span::new();
    if n >= 2 && l >= 1 && m >= 1 {
        let e = edge();
        for z in enumerate(Colour::Ordered, m, n - 1, l - 1, GRAPHS_ALL_VALENCE, budget)?.iter() {
            let mut v = GraphVector::new();
            for b in z.m()..z.n_vertices() {
                compose_raw(z, b, &e, |t| v.add_raw_unchecked(&t, &Q::from_integer(1.into())))?;
            }
            span.push(v);
        }
        for mx in 1..=m {
            for nx in 0..=n - 2 {
                for lx in 0..l {
                    if (mx, nx, lx) == (1, 0, 0) {
                        continue;
                    }
                    let xs = enumerate(Colour::Ordered, mx, nx, lx, GRAPHS_ALL_VALENCE, budget)?;
                    if xs.is_empty() {
                        continue;
                    }
                    let jb = (m - mx + 1, n - nx, l - lx);
                    let js = ideal_prime_basis(jb, budget)?;
                    for x in xs.iter() {
                        let xv = GraphVector::of(x);
                        for j in js.iter() {
                            for i in 0..mx {
                                let mut v = GraphVector::new();
                                compose_vec(&xv, i, j, &mut v);
                                span.push(v);
                            }
                            for i in 0..jb.0 {
                                let mut v = GraphVector::new();
                                compose_vec(j, i, &xv, &mut v);
                                span.push(v);
                            }
                        }
                    }
                }
            }
        }
        span.close_under_swaps(m, Colour::Ordered);
    }
    let basis = Arc::new(span.basis());
    cache().lock().unwrap().insert((Ideal::IbbPrime, bigrade), basis.clone());
    Ok(basis)
}

/// Labelled-level span of the edge ideal in Gra: vertices treated as ordered whites.
fn labelled_edge_ideal(n: usize, l: usize, budget: Budget) -> Result<Arc<Vec<GraphVector>>> {
    let key = (Ideal::Ibb, (n, 0, l));
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut span = Span::new();
    if (n, l) == (2, 1) {
        span.push(GraphVector::of(&Graph::ord(2, 0, &[(0, 1)])));
    } else if n > 2 && l >= 1 {
        for nx in 2..n {
            for lx in 0..l {
                let (nj, lj) = (n - nx + 1, l - lx);
                if nj < 2 {
                    continue;
                }
                let js = labelled_edge_ideal(nj, lj, budget)?;
                if js.is_empty() {
                    continue;
                }
                let xs = enumerate(Colour::Ordered, nx, 0, lx, Constraints::NONE, budget)?;
                for x in xs.iter() {
                    let xv = GraphVector::of(x);
                    for j in js.iter() {
                        for i in 0..nx {
                            let mut v = GraphVector::new();
                            compose_vec(&xv, i, j, &mut v);
                            span.push(v);
                        }
                        for i in 0..nj {
                            let mut v = GraphVector::new();
                            compose_vec(j, i, &xv, &mut v);
                            span.push(v);
                        }
                    }
                }
            }
        }
    }
    span.close_under_swaps(n, Colour::Ordered);
    let basis = Arc::new(span.basis());
    cache().lock().unwrap().insert(key, basis.clone());
    Ok(basis)
}

/// Echelon basis of the image of I_•• in one-coloured classes at (n, l).
pub fn ideal_bb_basis(n: usize, l: usize, budget: Budget) -> Result<Vec<GraphVector>> {
    let mut span = Span::new();
    for v in labelled_edge_ideal(n, l, budget)?.iter() {
        let mut w = GraphVector::new();
        for (g, c) in v.iter() {
            w.add_raw_unchecked(&Graph::new(Colour::One, 0, g.n_vertices(), g.edges.clone()), c);
        }
        span.push(w);
    }
    Ok(span.basis())
}

/// Echelon basis of an ideal at a bigrade (`m = 0` for the one-coloured I_••).
pub fn ideal_basis(ideal: Ideal, bigrade: Bigrade, budget: Budget) -> Result<Vec<GraphVector>> {
    match ideal {
        Ideal::Ibb => {
            if bigrade.0 != 0 {
                return Err(Error::ColourMismatch("I_bb lives in one-coloured graphs (m = 0)".into()));
            }
            ideal_bb_basis(bigrade.1, bigrade.2, budget)
        }
        Ideal::IbbPrime => {
            if bigrade.0 == 0 {
                return Err(Error::ColourMismatch("I_bb_prime lives in two-coloured graphs (m ≥ 1)".into()));
            }
            Ok(ideal_prime_basis(bigrade, budget)?.to_vec())
        }
    }
}

/// Reduction of a vector against an ideal at one bigrade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub representative: GraphVector,
    pub member: bool,
    pub ideal_dim: usize,
}

/// Reduces the homogeneous part of `x` at `bigrade` against a fixed echelon basis of the ideal.
pub fn quotient_project(x: &GraphVector, ideal: Ideal, bigrade: Bigrade) -> Result<Projection> {
    let basis = ideal_basis(ideal, bigrade, Budget::default())?;
    let (m, n, l) = bigrade;
    let xh = match ideal {
        Ideal::Ibb => x.filter(|g| g.colour == Colour::One && g.n() == n && g.n_edges() == l),
        Ideal::IbbPrime => x.extract(m, n, l),
    };
    let mut idx = KeyIndex::new();
    let mut ech = Echelon::new();
    for v in basis.iter() {
        let c = idx.coords(v);
        ech.insert(c);
    }
    let c = idx.coords(&xh);
    let r = ech.reduce(&c);
    Ok(Projection { member: r.is_empty(), representative: idx.vector(&r), ideal_dim: basis.len() })
}
