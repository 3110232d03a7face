//! The splittings 𝔰 and 𝔰̂ of GC₂ into the mapping cone.

use num::One;

use super::def::{delta_prime, delta_ww, whiten};
use super::mac::{willwacher, MacElement};
use super::registry::ComplexId;
use crate::error::{Error, Result};
use crate::exact_linalg::solve_in_span;
use crate::graph_core::{Budget, GraphVector, Q};

/// 𝔰(γ) = (Σ_v γ_{v→○}, γ).
pub fn splitting_s(gamma: &GraphVector) -> MacElement {
    MacElement { def: whiten(gamma), gc: gamma.clone() }
}

/// Outcome of the whitening procedure.
#[derive(Clone, Debug)]
pub struct Whitening {
    /// (γ_○ + γ_○○ + …, γ)
    pub element: MacElement,
    /// Successive corrections, one per number of whites.
    pub layers: Vec<GraphVector>,
    /// Black-free part of δ_○○ of the corrections; d𝔰̂(γ) = (residual, 0) for a cocycle γ.
    pub residual: GraphVector,
    /// δ'γ_○ + 𝔚(γ), zero for δ_•• cocycles.
    pub defect: GraphVector,
}

/// Solves δ'H_{k+1} = -δ_○○H_k layer by layer, starting from H_1 = γ_○.
pub fn splitting_s_hat(gamma: &GraphVector, max_whitenings: usize) -> Result<Whitening> {
    let h1 = whiten(gamma);
    let mut defect = delta_prime(&h1);
    defect.axpy(&Q::one(), &willwacher(gamma));
    let mut layers = vec![h1];
    let mut residual = GraphVector::new();
    loop {
        let r = delta_ww(layers.last().unwrap());
        residual.axpy(&Q::one(), &r.filter(|g| g.n() == 0));
        let black = r.filter(|g| g.n() > 0);
        if black.is_zero() {
            break;
        }
        if layers.len() >= max_whitenings {
            return Err(Error::ResourceCap(format!("whitening did not terminate within {max_whitenings} steps")));
        }
        let mut next = GraphVector::new();
        for (m, n, l) in black.bigrades() {
            let target = black.extract(m, n, l).neg();
            let basis = ComplexId::DefAssFgraphs.basis((m, n - 1, l - 1), Budget::default())?;
            let pre = solve_in_span(&basis, delta_prime, &target)?.ok_or_else(|| {
                Error::NoPreimage(format!("δ'-preimage of the δ_○○ residual at ({m},{n},{l})"))
            })?;
            next.axpy(&Q::one(), &pre);
        }
        layers.push(next);
    }
    let mut def = GraphVector::new();
    for h in &layers {
        def.axpy(&Q::one(), h);
    }
    Ok(Whitening { element: MacElement { def, gc: gamma.clone() }, layers, residual, defect })
}
