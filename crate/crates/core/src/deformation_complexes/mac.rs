//! The mapping cone MaC(𝔚) of the Willwacher map.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::One;
use serde_json::json;

use super::def::{act_terms, delta_def, odd as odd_def, star_terms, wb, ww};
use super::gc::{delta_bb_gc, mc_gc, odd as odd_gc, pre_lie_terms};
use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, GraphVector, Q};

/// A pair (Γ, γ) with Γ in the Def complex and γ in fGC₂.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MacElement {
    pub def: GraphVector,
    pub gc: GraphVector,
}

impl MacElement {
    pub fn new(def: GraphVector, gc: GraphVector) -> Result<Self> {
        if def.colour().is_some_and(|c| c == Colour::One) {
            return Err(Error::ColourMismatch("Def part must be two-coloured".into()));
        }
        if gc.colour().is_some_and(|c| c != Colour::One) {
            return Err(Error::ColourMismatch("GC part must be one-coloured".into()));
        }
        Ok(MacElement { def, gc })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_def(def: GraphVector) -> Self {
        MacElement { def, gc: GraphVector::new() }
    }

    pub fn from_gc(gc: GraphVector) -> Self {
        MacElement { def: GraphVector::new(), gc }
    }

    pub fn is_zero(&self) -> bool {
        self.def.is_zero() && self.gc.is_zero()
    }

    pub fn axpy(&mut self, c: &Q, other: &MacElement) {
        self.def.axpy(c, &other.def);
        self.gc.axpy(c, &other.gc);
    }

    pub fn add(&self, other: &MacElement) -> MacElement {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &MacElement) -> MacElement {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    pub fn scale(&self, c: &Q) -> MacElement {
        MacElement { def: self.def.scale(c), gc: self.gc.scale(c) }
    }

    /// Largest total vertex count over all terms (0 when empty).
    pub fn max_vertices(&self) -> usize {
        self.def.max_vertices().max(self.gc.max_vertices())
    }

    pub fn min_vertices(&self) -> Option<usize> {
        self.def.keys().chain(self.gc.keys()).map(|g| g.n_vertices()).min()
    }

    /// Terms with at most `k` vertices.
    pub fn truncate(&self, k: usize) -> MacElement {
        MacElement {
            def: self.def.filter(|g| g.n_vertices() <= k),
            gc: self.gc.filter(|g| g.n_vertices() <= k),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({"def": self.def.to_json(), "gc": self.gc.to_json()})
    }

    pub fn from_json(v: &serde_json::Value) -> Result<MacElement> {
        let def = v.get("def").map(GraphVector::from_json).transpose()?.unwrap_or_default();
        let gc = v.get("gc").map(GraphVector::from_json).transpose()?.unwrap_or_default();
        MacElement::new(def, gc)
    }
}

fn fits(a: &Graph, b: &Graph, cap: Option<usize>) -> bool {
    cap.is_none_or(|k| a.n_vertices() + b.n_vertices() - 1 <= k)
}

/// The cone bracket
/// [(Γ₁,γ₁),(Γ₂,γ₂)] = ([Γ₁,Γ₂] + Γ₁∘γ₂ - (-1)^{|Γ₂||γ₁|} Γ₂∘γ₁, [γ₁,γ₂]),
/// dropping products with more than `cap` vertices.
pub fn mac_bracket_capped(a: &MacElement, b: &MacElement, cap: Option<usize>) -> MacElement {
    let mut def = GraphVector::new();
    let mut gc = GraphVector::new();
    for (x, cx) in a.def.iter() {
        for (y, cy) in b.def.iter() {
            if !fits(x, y, cap) {
                continue;
            }
            let c = cx * cy;
            star_terms(x, y, &c, &mut def);
            let c2 = if odd_def(x) && odd_def(y) { c } else { -c };
            star_terms(y, x, &c2, &mut def);
        }
        for (g, cg) in b.gc.iter() {
            if fits(x, g, cap) {
                act_terms(x, g, &(cx * cg), &mut def);
            }
        }
    }
    for (y, cy) in b.def.iter() {
        for (g, cg) in a.gc.iter() {
            if fits(y, g, cap) {
                let c = cx_sign(odd_def(y) && odd_gc(g)) * (cy * cg);
                act_terms(y, g, &c, &mut def);
            }
        }
    }
    for (x, cx) in a.gc.iter() {
        for (y, cy) in b.gc.iter() {
            if !fits(x, y, cap) {
                continue;
            }
            let c = cx * cy;
            pre_lie_terms(x, y, &c, &mut gc);
            let c2 = if odd_gc(x) && odd_gc(y) { c } else { -c };
            pre_lie_terms(y, x, &c2, &mut gc);
        }
    }
    MacElement { def, gc }
}

/// -(-1)^{odd}
fn cx_sign(odd: bool) -> Q {
    if odd {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn mac_bracket(a: &MacElement, b: &MacElement) -> MacElement {
    mac_bracket_capped(a, b, None)
}

/// Γ₀ = (○○ + ○−•, ½·edge).
pub fn gamma0() -> MacElement {
    let mut def = GraphVector::of(&ww());
    def.axpy(&Q::one(), &GraphVector::of(&wb()));
    MacElement { def, gc: mc_gc() }
}

/// 𝔚(γ) = (○−•)∘γ: a new white vertex joined to each vertex of γ in turn, new edge first.
pub fn willwacher(gamma: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    let h = wb();
    for (g, c) in gamma.iter() {
        act_terms(&h, g, c, &mut out);
    }
    out
}

type Cache = Mutex<HashMap<Graph, GraphVector>>;

fn cached(cache: &'static OnceLock<Cache>, g: &Graph, f: impl FnOnce(&Graph) -> GraphVector) -> GraphVector {
    let c = cache.get_or_init(Default::default);
    if let Some(v) = c.lock().unwrap().get(g) {
        return v.clone();
    }
    let v = f(g);
    c.lock().unwrap().insert(g.clone(), v.clone());
    v
}

static D_DEF: OnceLock<Cache> = OnceLock::new();
static D_GC: OnceLock<Cache> = OnceLock::new();
static W: OnceLock<Cache> = OnceLock::new();

/// δ of a single Def basis key (memoized).
pub fn delta_def_key(g: &Graph) -> GraphVector {
    cached(&D_DEF, g, |g| delta_def(&GraphVector::of(g)))
}

/// δ_•• of a single fGC₂ basis key (memoized).
pub fn delta_gc_key(g: &Graph) -> GraphVector {
    cached(&D_GC, g, |g| delta_bb_gc(&GraphVector::of(g)))
}

/// 𝔚 of a single fGC₂ basis key (memoized).
pub fn willwacher_key(g: &Graph) -> GraphVector {
    cached(&W, g, |g| willwacher(&GraphVector::of(g)))
}

/// d(Γ, γ) = (δΓ + 𝔚γ, δ_••γ), which equals [Γ₀, (Γ, γ)].
pub fn mac_differential(a: &MacElement) -> MacElement {
    let mut def = GraphVector::new();
    for (g, c) in a.def.iter() {
        def.axpy(c, &delta_def_key(g));
    }
    let mut gc = GraphVector::new();
    for (g, c) in a.gc.iter() {
        def.axpy(c, &willwacher_key(g));
        gc.axpy(c, &delta_gc_key(g));
    }
    MacElement { def, gc }
}

/// [X, X] truncated to `cap` vertices.
pub fn mc_residual(x: &MacElement, cap: Option<usize>) -> MacElement {
    mac_bracket_capped(x, x, cap)
}
