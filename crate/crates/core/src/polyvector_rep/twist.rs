//! Twisting Def-complex elements by ℏπ into A∞ structures on polyvector fields.

use std::collections::BTreeMap;

use num::One;

use super::checks::CheckReport;
use super::eval::{phi_tensor, tensor_edges};
use super::Polyvector;
use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, GraphVector, Q};

/// Truncated power series Σ_{k<order} ℏ^k a_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    pub dim: usize,
    pub coeffs: Vec<Polyvector>,
}

impl FormalSeries {
    pub fn zero(dim: usize, order: usize) -> Self {
        FormalSeries { dim, coeffs: vec![Polyvector::zero(dim); order] }
    }

    pub fn constant(p: &Polyvector, order: usize) -> Self {
        let mut s = Self::zero(p.dim, order);
        if order > 0 {
            s.coeffs[0] = p.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn axpy(&mut self, c: &Q, other: &FormalSeries) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.axpy(c, b);
        }
    }

    /// Odd degree if every coefficient is homogeneous of the same degree.
    pub fn degree(&self) -> Option<usize> {
        let mut ds = self.coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.degree());
        let first = ds.next()?;
        ds.all(|d| d == first).then_some(first).flatten()
    }
}

/// μ_m(x₁..x_m) = Σ_n ℏⁿ Σ_Γ c_Γ Φ(Γ)(π, …, π; x₁, …, x_m) over source terms with m whites
/// and n blacks.
#[derive(Clone, Debug)]
pub struct TwistedAssStructure {
    pub dim: usize,
    pub order: usize,
    pub pi: Polyvector,
    pub source: GraphVector,
    arities: BTreeMap<usize, Vec<(Graph, Q)>>,
}

pub fn twist_by_poisson(source: &GraphVector, pi: &Polyvector, order: usize) -> Result<TwistedAssStructure> {
    if !pi.is_zero() && pi.degree() != Some(2) {
        return Err(Error::Invalid(format!("π must be a bivector, got {pi}")));
    }
    let mut arities: BTreeMap<usize, Vec<(Graph, Q)>> = BTreeMap::new();
    for (g, c) in source.iter() {
        if g.colour == Colour::One {
            return Err(Error::ColourMismatch("twist source must be two-coloured".into()));
        }
        arities.entry(g.m()).or_default().push((g.clone(), c.clone()));
    }
    Ok(TwistedAssStructure { dim: pi.dim, order, pi: pi.clone(), source: source.clone(), arities })
}

impl TwistedAssStructure {
    pub fn arities(&self) -> impl Iterator<Item = usize> + '_ {
        self.arities.keys().copied()
    }

    pub fn has_arity(&self, m: usize) -> bool {
        self.arities.contains_key(&m)
    }

    /// μ_m on formal-series arguments, truncated at ℏ^order.
    pub fn mu(&self, args: &[FormalSeries]) -> FormalSeries {
        let mut out = FormalSeries::zero(self.dim, self.order);
        let Some(terms) = self.arities.get(&args.len()) else { return out };
        for (g, c) in terms {
            let n = g.n();
            if n >= self.order || (n > 0 && self.pi.is_zero()) {
                continue;
            }
            let edges = tensor_edges(g);
            for powers in power_tuples(args.len(), self.order - 1 - n) {
                if powers.iter().zip(args).any(|(&p, a)| a.coeffs[p].is_zero()) {
                    continue;
                }
                let total = n + powers.iter().sum::<usize>();
                let mut refs: Vec<&Polyvector> = vec![&self.pi; n];
                refs.extend(powers.iter().zip(args).map(|(&p, a)| &a.coeffs[p]));
                out.coeffs[total].axpy(c, &phi_tensor(self.dim, &edges, &refs));
            }
        }
        out
    }

    /// Σ_{p+q=N+1} Σ_i (-1)^{(q-1)(p+i-1)} μ_p ∘_i μ_q on one tuple.
    pub fn ainf_residual(&self, xs: &[FormalSeries]) -> FormalSeries {
        let big_n = xs.len();
        let mut out = FormalSeries::zero(self.dim, self.order);
        for q in 1..=big_n {
            let p = big_n + 1 - q;
            if !self.has_arity(p) || !self.has_arity(q) {
                continue;
            }
            for i in 1..=p {
                let inner = self.mu(&xs[i - 1..i - 1 + q]);
                if inner.is_zero() {
                    continue;
                }
                let before: usize = xs[..i - 1].iter().map(|x| x.degree().unwrap_or(0)).sum();
                let odd = ((q - 1) * (p + i - 1) + q * before) % 2 == 1;
                let mut args: Vec<FormalSeries> = xs[..i - 1].to_vec();
                args.push(inner);
                args.extend_from_slice(&xs[i - 1 + q..]);
                let v = self.mu(&args);
                out.axpy(&if odd { -Q::one() } else { Q::one() }, &v);
            }
        }
        out
    }
}

/// All tuples of nonnegative integers of length `len` with sum ≤ `budget`.
fn power_tuples(len: usize, budget: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..=budget {
        for mut rest in power_tuples(len - 1, budget - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Checks the A∞ relations for every arity ≤ `max_arity` on all tuples of `samples`.
pub fn ainf_relation_check(t: &TwistedAssStructure, max_arity: usize, samples: &[Polyvector]) -> Result<CheckReport> {
    if samples.iter().any(|s| s.dim != t.dim) {
        return Err(Error::Dimension("sample dimension differs from π".into()));
    }
    let series: Vec<FormalSeries> = samples.iter().map(|s| FormalSeries::constant(s, t.order)).collect();
    let mut report = CheckReport { name: format!("A-infinity up to arity {max_arity} mod hbar^{}", t.order), checked: 0, failures: 0, witnesses: Vec::new() };
    for arity in 1..=max_arity {
        let mut idx = vec![0usize; arity];
        if series.is_empty() {
            break;
        }
        loop {
            let xs: Vec<FormalSeries> = idx.iter().map(|&i| series[i].clone()).collect();
            let r = t.ainf_residual(&xs);
            report.checked += 1;
            if !r.is_zero() {
                report.failures += 1;
                if report.witnesses.len() < 5 {
                    let a: Vec<String> = idx.iter().map(|&i| format!("[{}]", samples[i])).collect();
                    let rs: Vec<String> = r.coeffs.iter().map(|c| c.to_string()).collect();
                    report.witnesses.push(format!("arity {arity} {}: residual {}", a.join(""), rs.join(" | ")));
                }
            }
            let mut k = arity;
            let mut done = true;
            while k > 0 {
                k -= 1;
                idx[k] += 1;
                if idx[k] < series.len() {
                    done = false;
                    break;
                }
                idx[k] = 0;
            }
            if done {
                break;
            }
        }
    }
    Ok(report)
}
