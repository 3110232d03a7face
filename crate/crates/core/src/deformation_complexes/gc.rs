//! The one-coloured graph Lie algebra fGC₂ and its subcomplex GC₂.

use crate::graph_core::{q, Graph, GraphVector, Q};
use crate::operad_calculus::compose_raw;

pub fn edge() -> Graph {
    Graph::one(2, &[(0, 1)])
}

pub fn vertex() -> Graph {
    Graph::one(1, &[])
}

/// The tetrahedron K₄ with lexicographically ordered edges.
pub fn k4() -> Graph {
    Graph::one(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Degree 2n - l - 2.
pub fn degree_gc(g: &Graph) -> i64 {
    2 * g.n() as i64 - g.n_edges() as i64 - 2
}

/// Degree parity equals edge parity.
pub(crate) fn odd(g: &Graph) -> bool {
    g.n_edges() % 2 == 1
}

/// Σ_v a ∘_v b, accumulated with coefficient `c`.
pub(crate) fn pre_lie_terms(a: &Graph, b: &Graph, c: &Q, out: &mut GraphVector) {
    for v in 0..a.n_vertices() {
        compose_raw(a, v, b, |t| out.add_raw_unchecked(&t, c)).expect("one-coloured composition");
    }
}

/// [x, y] = x•y - (-1)^{|x||y|} y•x with x•y = Σ_v x ∘_v y.
pub fn bracket_gc(x: &GraphVector, y: &GraphVector) -> GraphVector {
    let mut out = GraphVector::new();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let c = ca * cb;
            pre_lie_terms(a, b, &c, &mut out);
            let c2 = if odd(a) && odd(b) { c } else { -c };
            pre_lie_terms(b, a, &c2, &mut out);
        }
    }
    out
}

/// The Maurer-Cartan element ½·edge.
pub fn mc_gc() -> GraphVector {
    GraphVector::of(&edge()).scale(&q(1, 2))
}

/// δ_•• = [½·edge, ·].
pub fn delta_bb_gc(x: &GraphVector) -> GraphVector {
    bracket_gc(&mc_gc(), x)
}
