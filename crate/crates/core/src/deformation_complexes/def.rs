//! The deformation complex Def(Ass∞ → fGraphs) with ordered white vertices.

use num::One;

use super::gc::edge;
use crate::graph_core::{q, Colour, Graph, GraphVector, Q};
use crate::operad_calculus::compose_raw;

/// Two whites, no edge.
pub fn ww() -> Graph {
    Graph::ord(2, 0, &[])
}

/// One white joined to one black.
pub fn wb() -> Graph {
    Graph::ord(1, 1, &[(0, 1)])
}

/// The 3-graph: one black joined to three ordered whites, edges in white order.
pub fn three_graph() -> Graph {
    Graph::ord(3, 1, &[(0, 3), (1, 3), (2, 3)])
}

/// Degree 2n + m - l - 1.
pub fn degree_def(g: &Graph) -> i64 {
    2 * g.n() as i64 + g.m() as i64 - g.n_edges() as i64 - 1
}

pub(crate) fn odd(g: &Graph) -> bool {
    (g.n_edges() + g.m() + 1) % 2 == 1
}

/// Γ₁ ⋆ Γ₂ = Σ_i (-1)^{(q-1)(l₁+i-1)} Γ₁ ∘_i Γ₂ over white slots i, accumulated with `c`.
pub(crate) fn star_terms(g1: &Graph, g2: &Graph, c: &Q, out: &mut GraphVector) {
    let q_ = g2.m();
    let l1 = g1.n_edges();
    for i in 1..=g1.m() {
        let neg = q_.is_multiple_of(2) && (l1 + i - 1) % 2 == 1;
        let coeff = if neg { -c.clone() } else { c.clone() };
        compose_raw(g1, i - 1, g2, |t| out.add_raw_unchecked(&t, &coeff)).expect("white-slot composition");
    }
}

/// The pre-Lie product ⋆ extended bilinearly.
pub fn star(x: &GraphVector, y: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            star_terms(a, b, &(ca * cb), &mut out);
        }
    }
    out
}

/// [X, Y] = X⋆Y - (-1)^{|X||Y|} Y⋆X.
pub fn bracket_def(x: &GraphVector, y: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca * cb;
            star_terms(a, b, &c, &mut out);
            let c2 = if odd(a) && odd(b) { c } else { -c };
            star_terms(b, a, &c2, &mut out);
        }
    }
    out
}

/// Σ_{v black} Γ ∘_v γ, accumulated with `c`.
pub(crate) fn act_terms(g: &Graph, gamma: &Graph, c: &Q, out: &mut GraphVector) {
    for v in g.m()..g.n_vertices() {
        compose_raw(g, v, gamma, |t| out.add_raw_unchecked(&t, c)).expect("black-slot composition");
    }
}

/// Γ∘γ, the action of one-coloured graphs on black vertices.
pub fn act(x: &GraphVector, gamma: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    for (a, ca) in x.iter() {
        for (b, cb) in gamma.iter() {
            act_terms(a, b, &(ca * cb), &mut out);
        }
    }
    out
}

/// δ_○○ = [○○, ·].
pub fn delta_ww(x: &GraphVector) -> GraphVector {
    bracket_def(&GraphVector::of(&ww()), x)
}

/// δ_○• = [○−•, ·].
pub fn delta_wb(x: &GraphVector) -> GraphVector {
    bracket_def(&GraphVector::of(&wb()), x)
}

/// Twisted δ_••: Γ ↦ -(-1)^{|Γ|} ½ Γ∘edge.
pub fn delta_bb_def(x: &GraphVector) -> GraphVector {
    let e = edge();
    let mut out = GraphVector::new();
    for (g, c) in x.iter() {
        // -(-1)^{|Γ|}: + for odd Γ, - for even Γ
        let s = if odd(g) { q(1, 2) } else { q(-1, 2) };
        act_terms(g, &e, &(c * s), &mut out);
    }
    out
}

/// δ' = δ_○• + δ_••.
pub fn delta_prime(x: &GraphVector) -> GraphVector {
    let mut out = delta_wb(x);
    out.axpy(&Q::one(), &delta_bb_def(x));
    out
}

/// δ = δ_○○ + δ_○• + δ_••.
pub fn delta_def(x: &GraphVector) -> GraphVector {
    let mut out = delta_ww(x);
    out.axpy(&Q::one(), &delta_prime(x));
    out
}

/// Σ_v γ with vertex v made white.
pub fn whiten(gamma: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    for (g, c) in gamma.iter() {
        debug_assert_eq!(g.colour, Colour::One);
        let n = g.n_vertices();
        for v in 0..n {
            let perm: Vec<usize> = (0..n).map(|u| if u == v { 0 } else if u < v { u + 1 } else { u }).collect();
            let edges =
                g.edges.iter().map(|&(a, b)| (perm[a as usize] as u8, perm[b as usize] as u8)).collect();
            out.add_raw_unchecked(&Graph::new(Colour::Ordered, 1, n - 1, edges), c);
        }
    }
    out
}
