//! Gauge action of degree-0 cone elements, computed through the vertex-count filtration.

use num::One;

use super::def::degree_def;
use super::gc::degree_gc;
use super::mac::{mac_bracket_capped, MacElement};
use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, Q};

fn degree(g: &Graph) -> i64 {
    if g.colour == Colour::One {
        degree_gc(g)
    } else {
        degree_def(g)
    }
}

fn check_generator(h: &MacElement) -> Result<()> {
    for g in h.def.keys().chain(h.gc.keys()) {
        if degree(g) != 0 {
            return Err(Error::Invalid(format!("gauge generator term {} has degree {}", g.key(), degree(g))));
        }
        if g.n_vertices() < 2 {
            return Err(Error::Invalid(format!("gauge generator term {} does not raise the filtration", g.key())));
        }
    }
    Ok(())
}

fn check_trunc(x: &MacElement, trunc: usize) -> Result<()> {
    match x.min_vertices() {
        Some(v) if v > trunc => Err(Error::Invalid(format!("truncation {trunc} is below every input term ({v} vertices)"))),
        _ => Ok(()),
    }
}

/// Σ_j c_j ad_h^j(x) truncated at `trunc` vertices.
fn series(h: &MacElement, x: &MacElement, trunc: usize, coeff: impl Fn(usize) -> Q) -> MacElement {
    let mut out = x.truncate(trunc).scale(&coeff(0));
    let mut term = x.truncate(trunc);
    for j in 1.. {
        term = mac_bracket_capped(h, &term, Some(trunc));
        if term.is_zero() {
            break;
        }
        out.axpy(&coeff(j), &term);
    }
    out
}

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * Q::from_integer(k.into()))
}

/// e^{ad_h} mc, truncated at `trunc` vertices.
pub fn gauge_transform(mc: &MacElement, h: &MacElement, trunc: usize) -> Result<MacElement> {
    check_generator(h)?;
    check_trunc(mc, trunc)?;
    Ok(series(h, mc, trunc, |j| Q::one() / factorial(j)))
}

/// base + e^{ad_h}(mc - base) - ((e^{ad_h} - 1)/ad_h) d h with d = [base, ·].
pub fn gauge_transform_deformation(
    base: &MacElement,
    mc: &MacElement,
    h: &MacElement,
    trunc: usize,
) -> Result<MacElement> {
    check_generator(h)?;
    check_trunc(mc, trunc)?;
    let eps = mc.sub(base);
    let mut out = base.truncate(trunc);
    if !eps.is_zero() {
        out = out.add(&series(h, &eps, trunc, |j| Q::one() / factorial(j)));
    }
    let dh = mac_bracket_capped(base, h, Some(trunc));
    let corr = series(h, &dh, trunc, |j| Q::one() / factorial(j + 1));
    Ok(out.sub(&corr))
}

/// Terms of [x, x] with at most `trunc` vertices, which are exact for x known to that order.
pub fn residual_in_cover(x: &MacElement, trunc: usize) -> MacElement {
    mac_bracket_capped(x, x, Some(trunc)).truncate(trunc)
}

