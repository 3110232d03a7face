use std::fmt;

use num::Zero;

use super::Polyvector;
use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, Q};

pub const MAX_DIM: usize = 8;

/// Monomial x^α ψ_S with ψ's in increasing index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono {
    pub x: [u8; MAX_DIM],
    pub psi: u8,
}

impl Mono {
    pub const ONE: Mono = Mono { x: [0; MAX_DIM], psi: 0 };

    pub fn odd_degree(&self) -> usize {
        self.psi.count_ones() as usize
    }

    pub fn even_degree(&self) -> usize {
        self.x.iter().map(|&e| e as usize).sum()
    }

    pub fn total_degree(&self) -> usize {
        self.odd_degree() + self.even_degree()
    }

    /// ∂/∂x^a: (result, multiplicity).
    #[inline]
    pub fn dx(&self, a: usize) -> Option<(Mono, i64)> {
        let e = self.x[a];
        if e == 0 {
            return None;
        }
        let mut m = *self;
        m.x[a] -= 1;
        Some((m, e as i64))
    }

    /// Left derivative ∂/∂ψ_a: (result, sign).
    #[inline]
    pub fn dpsi(&self, a: usize) -> Option<(Mono, i64)> {
        let bit = 1u8 << a;
        if self.psi & bit == 0 {
            return None;
        }
        let below = (self.psi & (bit - 1)).count_ones();
        let mut m = *self;
        m.psi &= !bit;
        Some((m, if below.is_multiple_of(2) { 1 } else { -1 }))
    }

    /// Product self·other with the sign of sorting the ψ's.
    #[inline]
    pub fn mul(&self, other: &Mono) -> Option<(Mono, i64)> {
        if self.psi & other.psi != 0 {
            return None;
        }
        let mut inv = 0u32;
        let mut b = other.psi;
        while b != 0 {
            let j = b.trailing_zeros();
            inv += (self.psi >> j).count_ones();
            b &= b - 1;
        }
        let mut m = *self;
        for (e, o) in m.x.iter_mut().zip(other.x.iter()) {
            *e += o;
        }
        m.psi |= other.psi;
        Some((m, if inv.is_multiple_of(2) { 1 } else { -1 }))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (a, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", a + 1)),
                _ => parts.push(format!("x{}^{}", a + 1, e)),
            }
        }
        for a in 0..MAX_DIM {
            if self.psi & (1 << a) != 0 {
                parts.push(format!("p{}", a + 1));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// Applies Π_e Δ_e (last edge first) to a tensor of monomials, then multiplies the slots in
/// order. Edges are given in tensor positions.
pub(crate) fn eval_monos(
    d: usize,
    edges: &[(usize, usize)],
    slots: &mut [Mono],
    coeff: i64,
    emit: &mut impl FnMut(Mono, i64),
) {
    match edges.split_last() {
        None => {
            let mut acc = Mono::ONE;
            let mut c = coeff;
            for m in slots.iter() {
                match acc.mul(m) {
                    Some((p, s)) => {
                        acc = p;
                        c *= s;
                    }
                    None => return,
                }
            }
            emit(acc, c);
        }
        Some((&(i, j), rest)) => {
            for a in 0..d {
                // ∂x^a at i, ∂ψ_a at j, and ∂ψ_a at i, ∂x^a at j
                for (xs, ps) in [(i, j), (j, i)] {
                    let Some((pm, ps_sign)) = slots[ps].dpsi(a) else { continue };
                    let Some((xm, xk)) = slots[xs].dx(a) else { continue };
                    let koszul: u32 = slots[..ps].iter().map(|m| m.psi.count_ones()).sum();
                    let sign = if koszul.is_multiple_of(2) { ps_sign } else { -ps_sign };
                    let (old_p, old_x) = (slots[ps], slots[xs]);
                    slots[ps] = pm;
                    slots[xs] = xm;
                    eval_monos(d, rest, slots, coeff * sign * xk, emit);
                    slots[ps] = old_p;
                    slots[xs] = old_x;
                }
            }
        }
    }
}

/// Tensor position of each vertex: one colour keeps vertex order; two colours put the
/// blacks first, then the whites.
pub(crate) fn tensor_positions(g: &Graph) -> Vec<usize> {
    if g.colour == Colour::One {
        return (0..g.n_vertices()).collect();
    }
    let (m, n) = (g.m(), g.n());
    (0..m + n).map(|v| if v < m { n + v } else { v - m }).collect()
}

pub(crate) fn tensor_edges(g: &Graph) -> Vec<(usize, usize)> {
    let pos = tensor_positions(g);
    g.edges.iter().map(|&(u, v)| (pos[u as usize], pos[v as usize])).collect()
}

/// Φ(Γ) on arguments listed in tensor order.
pub(crate) fn phi_tensor(d: usize, edges: &[(usize, usize)], args: &[&Polyvector]) -> Polyvector {
    let mut out = Polyvector::zero(d);
    let lists: Vec<Vec<(Mono, Q)>> = args.iter().map(|p| p.terms().map(|(m, c)| (*m, c.clone())).collect()).collect();
    let mut slots = vec![Mono::ONE; args.len()];
    fn rec(
        k: usize,
        d: usize,
        edges: &[(usize, usize)],
        lists: &[Vec<(Mono, Q)>],
        slots: &mut Vec<Mono>,
        c: Q,
        out: &mut Polyvector,
    ) {
        if k == lists.len() {
            let mut hits: Vec<(Mono, i64)> = Vec::new();
            eval_monos(d, edges, slots, 1, &mut |m, x| hits.push((m, x)));
            for (m, x) in hits {
                out.add_term(m, &(&c * Q::from_integer(x.into())));
            }
            return;
        }
        for (m, x) in &lists[k] {
            slots[k] = *m;
            rec(k + 1, d, edges, lists, slots, &c * x, out);
        }
    }
    if args.iter().all(|a| !a.is_zero()) {
        rec(0, d, edges, &lists, &mut slots, Q::from_integer(1.into()), &mut out);
    }
    out.terms.retain(|_, c| !c.is_zero());
    out
}

fn check_dims(args: &[&Polyvector]) -> Result<usize> {
    let d = args.first().map(|a| a.dim).unwrap_or(0);
    if args.iter().any(|a| a.dim != d) {
        return Err(Error::Dimension("arguments of different dimensions".into()));
    }
    if d > MAX_DIM {
        return Err(Error::Dimension(format!("dimension {d} exceeds {MAX_DIM}")));
    }
    Ok(d)
}

/// Φ(Γ)(args) with one argument per vertex, listed by vertex index (whites, then blacks).
/// For two-coloured graphs the operator acts on the tensor with black arguments first.
pub fn phi(g: &Graph, args: &[Polyvector]) -> Result<Polyvector> {
    if args.len() != g.n_vertices() {
        return Err(Error::Invalid(format!("{} arguments for {} vertices", args.len(), g.n_vertices())));
    }
    let refs: Vec<&Polyvector> = args.iter().collect();
    let d = check_dims(&refs)?;
    let pos = tensor_positions(g);
    let mut ordered: Vec<&Polyvector> = refs.clone();
    for (v, a) in refs.iter().enumerate() {
        ordered[pos[v]] = a;
    }
    Ok(phi_tensor(d, &tensor_edges(g), &ordered))
}

/// Φ(Γ) on a two-coloured graph with every black vertex decorated by `black`.
pub fn phi_two(g: &Graph, black: &Polyvector, whites: &[Polyvector]) -> Result<Polyvector> {
    if g.colour == Colour::One {
        return Err(Error::ColourMismatch("phi_two needs a two-coloured graph".into()));
    }
    if whites.len() != g.m() {
        return Err(Error::Invalid(format!("{} white arguments for {} whites", whites.len(), g.m())));
    }
    let mut refs: Vec<&Polyvector> = vec![black; g.n()];
    refs.extend(whites.iter());
    let d = check_dims(&refs)?;
    Ok(phi_tensor(d, &tensor_edges(g), &refs))
}

