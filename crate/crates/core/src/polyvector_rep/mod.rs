//! Graphs acting as multidifferential operators on polynomial polyvector fields.
//!
//! A polyvector in dimension d is a polynomial in even coordinates x1..xd and odd
//! coordinates p1..pd (the ψ's). Odd variables are stored in increasing index order.

mod checks;
mod eval;
mod twist;

pub use checks::{check_operad_morphism, monomial_basis, relation_check, CheckReport, Relation};
pub use eval::{phi, phi_two, Mono, MAX_DIM};
pub use twist::{ainf_relation_check, twist_by_poisson, FormalSeries, TwistedAssStructure};

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::graph_core::{parse_q, Q};

/// Exact polynomial polyvector field on R^d.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polyvector {
    pub dim: usize,
    terms: BTreeMap<Mono, Q>,
}

impl Polyvector {
    pub fn zero(dim: usize) -> Self {
        Polyvector { dim, terms: BTreeMap::new() }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, Mono::ONE, Q::one())
    }

    pub fn monomial(dim: usize, m: Mono, c: Q) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(m, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn axpy(&mut self, c: &Q, other: &Polyvector) {
        for (m, x) in &other.terms {
            self.add_term(*m, &(c * x));
        }
    }

    pub fn add(&self, other: &Polyvector) -> Polyvector {
        let mut out = self.clone();
        out.axpy(&Q::one(), other);
        out
    }

    pub fn sub(&self, other: &Polyvector) -> Polyvector {
        let mut out = self.clone();
        out.axpy(&-Q::one(), other);
        out
    }

    pub fn scale(&self, c: &Q) -> Polyvector {
        let mut out = Self::zero(self.dim);
        out.axpy(c, self);
        out
    }

    /// Odd degree when homogeneous; `None` for mixed or zero polyvectors.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.odd_degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Parses `3/2 x1^2 x3 p2 p4 + -1 p1`; terms are `+`-separated, a `-` between terms is
    /// also accepted. Indices must not exceed `dim`.
    pub fn parse(text: &str, dim: usize) -> Result<Polyvector> {
        if dim > MAX_DIM {
            return Err(Error::Dimension(format!("dimension {dim} exceeds {MAX_DIM}")));
        }
        let mut out = Polyvector::zero(dim);
        let normalized = text.replace(" - ", " + -");
        for raw in normalized.split('+') {
            let t = raw.trim();
            if t.is_empty() {
                continue;
            }
            let mut coeff = Q::one();
            let mut mono = Mono::ONE;
            let mut sign = 1i64;
            for (i, tok) in t.split_whitespace().enumerate() {
                let (var, rest) = tok.split_at(tok.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(tok.len()));
                if !var.is_empty() && rest.is_empty() {
                    if i != 0 {
                        return Err(Error::Parse(format!("coefficient '{tok}' must come first")));
                    }
                    coeff = if var == "-" { -Q::one() } else { parse_q(var)? };
                    continue;
                }
                if var == "-" {
                    sign = -sign;
                } else if !var.is_empty() {
                    return Err(Error::Parse(format!("bad token '{tok}'")));
                }
                let (kind, idx_pow) = rest.split_at(1);
                let (idx, pow) = match idx_pow.split_once('^') {
                    Some((a, b)) => (a, b.parse::<u8>().map_err(|_| Error::Parse(format!("bad power in '{tok}'")))?),
                    None => (idx_pow, 1),
                };
                let a: usize = idx.parse().map_err(|_| Error::Parse(format!("bad index in '{tok}'")))?;
                if a == 0 || a > dim {
                    return Err(Error::Dimension(format!("variable '{tok}' outside dimension {dim}")));
                }
                match kind {
                    "x" => mono.x[a - 1] += pow,
                    "p" => {
                        if pow != 1 {
                            return Err(Error::Parse(format!("odd variable '{tok}' squares to zero")));
                        }
                        let bit = 1u8 << (a - 1);
                        if mono.psi & bit != 0 {
                            mono.psi = 0;
                            coeff = Q::zero();
                        } else {
                            // appending on the right: move past the higher ψ's already present
                            if (mono.psi >> a).count_ones() % 2 == 1 {
                                sign = -sign;
                            }
                            mono.psi |= bit;
                        }
                    }
                    _ => return Err(Error::Parse(format!("unknown variable '{tok}'"))),
                }
            }
            out.add_term(mono, &(coeff * Q::from_integer(sign.into())));
        }
        Ok(out)
    }
}

impl fmt::Display for Polyvector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let vars = m.to_string();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars
                } else {
                    format!("{c} {vars}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
