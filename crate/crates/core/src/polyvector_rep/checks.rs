//! Exhaustive checks of the representation: operad morphism and operad relations.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::eval::{eval_monos, phi_tensor, Mono, MAX_DIM};
use super::Polyvector;
use crate::error::{Error, Result};
use crate::graph_core::{Colour, Graph, Q};
use crate::operad_calculus::compose_raw;

const MAX_WITNESSES: usize = 5;

/// Outcome of an exhaustive identity check.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

impl CheckReport {
    fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), checked: 0, failures: 0, witnesses: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, w: impl FnOnce() -> String) {
        self.failures += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(w());
        }
    }
}

/// All monomials of total degree ≤ `max_degree` in d even and d odd variables.
pub fn monomial_basis(d: usize, max_degree: usize) -> Vec<Mono> {
    assert!(d <= MAX_DIM);
    let mut out = Vec::new();
    for psi in 0u16..(1 << d) {
        let od = psi.count_ones() as usize;
        if od > max_degree {
            continue;
        }
        let mut x = [0u8; MAX_DIM];
        fn rec(a: usize, d: usize, left: usize, x: &mut [u8; MAX_DIM], psi: u8, out: &mut Vec<Mono>) {
            if a == d {
                out.push(Mono { x: *x, psi });
                return;
            }
            for e in 0..=left {
                x[a] = e as u8;
                rec(a + 1, d, left - e, x, psi, out);
            }
            x[a] = 0;
        }
        rec(0, d, max_degree - od, &mut x, psi as u8, &mut out);
    }
    out.sort();
    out
}

type SmallPoly = Vec<(Mono, i64)>;

fn push(p: &mut SmallPoly, m: Mono, c: i64) {
    if let Some(e) = p.iter_mut().find(|(k, _)| *k == m) {
        e.1 += c;
    } else {
        p.push((m, c));
    }
}

fn normalize(mut p: SmallPoly) -> SmallPoly {
    p.retain(|(_, c)| *c != 0);
    p.sort();
    p
}

fn fmt_poly(p: &SmallPoly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter().map(|(m, c)| format!("{c} {m}")).collect::<Vec<_>>().join(" + ")
}

/// Vertices of a composite in operadic order: host vertices before the slot, guest
/// vertices, then the remaining host vertices.
fn operadic_order(n1: usize, n2: usize, slot: usize) -> Vec<usize> {
    (0..n1 + n2 - 1)
        .map(|r| {
            if r < slot {
                r
            } else if r < n1 - 1 {
                r + n2
            } else {
                slot + (r - (n1 - 1))
            }
        })
        .collect()
}

/// Verifies Φ(Γ₁ ∘_slot Γ₂) = Φ(Γ₁) ∘_slot Φ(Γ₂) on every tuple of monomials of degree
/// ≤ `max_degree` in dimension `d`. Both graphs are one-coloured with labelled vertices.
pub fn check_operad_morphism(g1: &Graph, g2: &Graph, slot: usize, d: usize, max_degree: usize) -> Result<CheckReport> {
    if g1.colour != Colour::One || g2.colour != Colour::One {
        return Err(Error::ColourMismatch("morphism check runs on one-coloured graphs".into()));
    }
    if d > MAX_DIM {
        return Err(Error::Dimension(format!("dimension {d} exceeds {MAX_DIM}")));
    }
    let (n1, n2) = (g1.n_vertices(), g2.n_vertices());
    if slot >= n1 {
        return Err(Error::IllegalComposition(format!("slot {slot} not in host")));
    }
    let order = operadic_order(n1, n2, slot);
    let mut raws: Vec<Vec<(usize, usize)>> = Vec::new();
    compose_raw(g1, slot, g2, |t| {
        raws.push(t.edges.iter().map(|&(u, v)| (order[u as usize], order[v as usize])).collect())
    })?;
    let e1: Vec<(usize, usize)> = g1.edges.iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    let e2: Vec<(usize, usize)> = g2.edges.iter().map(|&(u, v)| (u as usize, v as usize)).collect();
    let basis = monomial_basis(d, max_degree);
    let b = basis.len();
    let nt = n1 + n2 - 1;

    // guest values on every n2-tuple
    let mut guest: Vec<SmallPoly> = Vec::with_capacity(b.pow(n2 as u32));
    let mut tuple = vec![Mono::ONE; n2];
    for idx in 0..b.pow(n2 as u32) {
        let mut r = idx;
        for k in (0..n2).rev() {
            tuple[k] = basis[r % b];
            r /= b;
        }
        let mut p = SmallPoly::new();
        eval_monos(d, &e2, &mut tuple, 1, &mut |m, c| push(&mut p, m, c));
        guest.push(normalize(p));
    }

    let odd_guest = e2.len() % 2 == 1;
    let mut report = CheckReport::new(format!("morphism {} o_{} {} d={d}", g1.key(), slot + 1, g2.key()));
    let mut args = vec![Mono::ONE; nt];
    let mut host = vec![Mono::ONE; n1];
    let mut counters = vec![0usize; nt];
    loop {
        for k in 0..nt {
            args[k] = basis[counters[k]];
        }
        let mut lhs = SmallPoly::new();
        for edges in &raws {
            let mut t = args.clone();
            eval_monos(d, edges, &mut t, 1, &mut |m, c| push(&mut lhs, m, c));
        }
        let mut gi = 0usize;
        for k in slot..slot + n2 {
            gi = gi * b + counters[k];
        }
        let koszul: u32 = args[..slot].iter().map(|m| m.psi.count_ones()).sum();
        let sign = if odd_guest && koszul % 2 == 1 { -1 } else { 1 };
        let mut rhs = SmallPoly::new();
        for (gm, gc) in &guest[gi] {
            host[..slot].copy_from_slice(&args[..slot]);
            host[slot] = *gm;
            host[slot + 1..].copy_from_slice(&args[slot + n2..]);
            eval_monos(d, &e1, &mut host, sign * gc, &mut |m, c| push(&mut rhs, m, c));
        }
        let (lhs, rhs) = (normalize(lhs), normalize(rhs));
        report.checked += 1;
        if lhs != rhs {
            report.fail(|| {
                let a: Vec<String> = args.iter().map(|m| format!("[{m}]")).collect();
                format!("args {}: composite {} vs {}", a.join(""), fmt_poly(&lhs), fmt_poly(&rhs))
            });
        }
        // odometer
        let mut k = nt;
        loop {
            if k == 0 {
                return Ok(report);
            }
            k -= 1;
            counters[k] += 1;
            if counters[k] < b {
                break;
            }
            counters[k] = 0;
        }
    }
}

/// Relations of the two-coloured operad checked through the generator images
/// m = ○ ○, ρ = •−○ and β = •−•.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Assoc,
    Jacobi,
    NcgCompat1,
    NcgCompat2,
    GerstenhaberCompat,
}

impl Relation {
    pub const ALL: [Relation; 5] =
        [Relation::Assoc, Relation::Jacobi, Relation::NcgCompat1, Relation::NcgCompat2, Relation::GerstenhaberCompat];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Assoc => "assoc",
            Relation::Jacobi => "jacobi",
            Relation::NcgCompat1 => "ncg-compat-1",
            Relation::NcgCompat2 => "ncg-compat-2",
            Relation::GerstenhaberCompat => "gerstenhaber-compat",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL.into_iter().find(|r| r.name() == s).ok_or_else(|| Error::Parse(format!("unknown relation '{s}'")))
    }
}

struct Generators {
    d: usize,
}

impl Generators {
    fn m(&self, a: &Polyvector, b: &Polyvector) -> Polyvector {
        phi_tensor(self.d, &[], &[a, b])
    }

    /// β = Φ(•−•)
    fn beta(&self, a: &Polyvector, b: &Polyvector) -> Polyvector {
        phi_tensor(self.d, &[(0, 1)], &[a, b])
    }

    /// ρ(a, x) = Φ(•−○)(a; x): the black argument comes first in the tensor.
    fn rho(&self, a: &Polyvector, x: &Polyvector) -> Polyvector {
        let g = Graph::ord(1, 1, &[(0, 1)]);
        super::phi_two(&g, a, std::slice::from_ref(x)).expect("generator image")
    }
}

fn sgn(odd: bool) -> Q {
    if odd {
        -Q::from_integer(1.into())
    } else {
        Q::from_integer(1.into())
    }
}

/// Residual of a relation on one tuple (zero when it holds).
fn residual(rel: Relation, g: &Generators, t: &[&Polyvector]) -> Polyvector {
    let deg = |p: &Polyvector| p.degree().unwrap_or(0);
    match rel {
        Relation::Assoc => {
            let (a, b, c) = (t[0], t[1], t[2]);
            g.m(&g.m(a, b), c).sub(&g.m(a, &g.m(b, c)))
        }
        Relation::Jacobi => {
            let (a, b, c) = (t[0], t[1], t[2]);
            let (da, db, dc) = (deg(a), deg(b), deg(c));
            let mut r = g.beta(&g.beta(a, b), c);
            r.axpy(&sgn(dc * db % 2 == 1), &g.beta(&g.beta(a, c), b));
            r.axpy(&sgn(da * (db + dc) % 2 == 1), &g.beta(&g.beta(b, c), a));
            r
        }
        Relation::NcgCompat1 | Relation::GerstenhaberCompat => {
            let (a, x, y) = (t[0], t[1], t[2]);
            let op = |p: &Polyvector, q: &Polyvector| {
                if rel == Relation::NcgCompat1 {
                    g.rho(p, q)
                } else {
                    g.beta(p, q)
                }
            };
            let mut r = op(a, &g.m(x, y));
            r.axpy(&-Q::from_integer(1.into()), &g.m(&op(a, x), y));
            r.axpy(&-sgn(deg(x) * (deg(a) + 1) % 2 == 1), &g.m(x, &op(a, y)));
            r
        }
        Relation::NcgCompat2 => {
            let (a, b, x) = (t[0], t[1], t[2]);
            let (da, db) = (deg(a), deg(b));
            let mut r = g.rho(&g.beta(a, b), x);
            r.axpy(&sgn((da + 1) * db % 2 == 1), &g.rho(b, &g.rho(a, x)));
            r.axpy(&sgn(da % 2 == 1), &g.rho(a, &g.rho(b, x)));
            r
        }
    }
}

/// Checks a relation on every triple drawn from `samples` (homogeneous polyvectors).
pub fn relation_check(rel: Relation, d: usize, samples: &[Polyvector]) -> Result<CheckReport> {
    if samples.iter().any(|s| s.dim != d) {
        return Err(Error::Dimension("sample dimension differs from d".into()));
    }
    let g = Generators { d };
    let mut report = CheckReport::new(format!("{rel} d={d}"));
    for a in samples {
        for b in samples {
            for c in samples {
                let r = residual(rel, &g, &[a, b, c]);
                report.checked += 1;
                if !r.is_zero() {
                    report.fail(|| format!("({a}, {b}, {c}) -> {r}"));
                }
            }
        }
    }
    Ok(report)
}
