//! Monte Carlo estimates of configuration-space weights ∫ ∧_e dArg(z_i - z_j)/2π over
//! m ordered white points on the real line and n black points in the plane, modulo real
//! translations and positive dilations.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num::{One, ToPrimitive};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::deformation_complexes::{mac_bracket_capped, MacElement};
use crate::graph_core::{enumerate, Budget, Colour, Constraints, Graph, GraphVector, Q};

/// Choice of section of the affine action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Gauge {
    /// White 1 at 0 and white 2 at 1; free coordinates (x3, …, xm, z1, …, zn).
    PinWhites,
    /// White 1 at 0 and black 1 on the unit circle; free coordinates (θ, x2, …, xm, z2, …, zn).
    PinBlack,
    /// PinWhites when m ≥ 2, otherwise PinBlack.
    Auto,
}

impl Gauge {
    fn resolve(self, m: usize) -> Gauge {
        match self {
            Gauge::Auto if m >= 2 => Gauge::PinWhites,
            Gauge::Auto => Gauge::PinBlack,
            g => g,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Gauge::PinWhites => "pin-whites",
            Gauge::PinBlack => "pin-black",
            Gauge::Auto => "auto",
        }
    }
}

impl fmt::Display for Gauge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gauge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pin-whites" => Ok(Gauge::PinWhites),
            "pin-black" => Ok(Gauge::PinBlack),
            "auto" => Ok(Gauge::Auto),
            _ => Err(Error::Parse(format!("unknown gauge '{s}'"))),
        }
    }
}

/// Real dimension 2n + m - 2 of the configuration space.
pub fn config_dim(m: usize, n: usize) -> i64 {
    2 * n as i64 + m as i64 - 2
}

/// A gauge-fixed configuration with the proposal density of its free coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration {
    pub whites: Vec<f64>,
    pub blacks: Vec<(f64, f64)>,
    /// Angle of black 1 in the PinBlack gauge.
    pub theta: Option<f64>,
    pub density: f64,
}

/// Gap s ≥ 0 with density 1/(1+s)².
fn gap(rng: &mut impl Rng) -> (f64, f64) {
    let u: f64 = rng.gen();
    let s = u / (1.0 - u);
    (s, 1.0 / ((1.0 + s) * (1.0 + s)))
}

/// Mixture components (centre, scale): one per anchor point with the distance to its nearest
/// neighbour as scale, plus one covering all anchors.
fn components(anchors: &[(f64, f64)]) -> Vec<((f64, f64), f64)> {
    let dist = |a: (f64, f64), b: (f64, f64)| ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt();
    let mut out: Vec<((f64, f64), f64)> = anchors
        .iter()
        .map(|&a| {
            let s = anchors.iter().map(|&b| dist(a, b)).filter(|&d| d > 0.0).fold(f64::INFINITY, f64::min);
            (a, if s.is_finite() { s } else { 1.0 })
        })
        .collect();
    let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
    for a in anchors {
        lo = (lo.0.min(a.0), lo.1.min(a.1));
        hi = (hi.0.max(a.0), hi.1.max(a.1));
    }
    let diam = dist(lo, hi).max(1.0);
    out.push((((lo.0 + hi.0) / 2.0, (lo.1 + hi.1) / 2.0), diam));
    out
}

/// Planar point from a mixture of heavy-tailed radial laws.
fn planar(rng: &mut impl Rng, comps: &[((f64, f64), f64)]) -> (f64, f64) {
    let (c, scale) = comps[rng.gen_range(0..comps.len())];
    let u: f64 = rng.gen();
    let r = u / (1.0 - u) * scale;
    let phi = rng.gen::<f64>() * 2.0 * PI;
    (c.0 + r * phi.cos(), c.1 + r * phi.sin())
}

fn planar_density(z: (f64, f64), comps: &[((f64, f64), f64)]) -> f64 {
    let mut acc = 0.0;
    for &(c, scale) in comps {
        let rho = ((z.0 - c.0).powi(2) + (z.1 - c.1).powi(2)).sqrt() / scale;
        acc += 1.0 / (2.0 * PI * rho * (1.0 + rho) * (1.0 + rho)) / (scale * scale);
    }
    acc / comps.len() as f64
}

fn distinct(c: &Configuration) -> bool {
    let pts: Vec<(f64, f64)> = c.whites.iter().map(|&x| (x, 0.0)).chain(c.blacks.iter().copied()).collect();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if (pts[i].0 - pts[j].0).abs() + (pts[i].1 - pts[j].1).abs() < 1e-12 {
                return false;
            }
        }
        if !pts[i].0.is_finite() || !pts[i].1.is_finite() {
            return false;
        }
    }
    true
}

fn draw(m: usize, n: usize, gauge: Gauge, rng: &mut impl Rng) -> Configuration {
    let mut density = 1.0;
    let mut whites = vec![0.0];
    let mut blacks = Vec::with_capacity(n);
    let mut theta = None;
    match gauge {
        Gauge::PinWhites => {
            whites.push(1.0);
            for _ in 2..m {
                let (s, p) = gap(rng);
                whites.push(whites.last().unwrap() + s);
                density *= p;
            }
            let comps = components(&whites.iter().map(|&x| (x, 0.0)).collect::<Vec<_>>());
            for _ in 0..n {
                let z = planar(rng, &comps);
                density *= planar_density(z, &comps);
                blacks.push(z);
            }
        }
        _ => {
            let t = rng.gen::<f64>() * 2.0 * PI;
            density /= 2.0 * PI;
            theta = Some(t);
            blacks.push((t.cos(), t.sin()));
            for _ in 1..m {
                let (s, p) = gap(rng);
                whites.push(whites.last().unwrap() + s);
                density *= p;
            }
            let mut anchors: Vec<(f64, f64)> = whites.iter().map(|&x| (x, 0.0)).collect();
            anchors.push(blacks[0]);
            let comps = components(&anchors);
            for _ in 1..n {
                let z = planar(rng, &comps);
                density *= planar_density(z, &comps);
                blacks.push(z);
            }
        }
    }
    Configuration { whites, blacks, theta, density }
}

/// Draws a gauge-fixed configuration from the proposal.
pub fn sample_configuration(m: usize, n: usize, gauge: Gauge, rng: &mut impl Rng) -> Result<Configuration> {
    let gauge = gauge.resolve(m);
    if m == 0 {
        return Err(Error::Invalid("no white vertex to pin".into()));
    }
    if gauge == Gauge::PinWhites && m < 2 {
        return Err(Error::Invalid("pin-whites gauge needs two whites".into()));
    }
    if gauge == Gauge::PinBlack && n < 1 {
        return Err(Error::Invalid("pin-black gauge needs a black vertex".into()));
    }
    for _ in 0..100 {
        let c = draw(m, n, gauge, rng);
        if distinct(&c) {
            return Ok(c);
        }
    }
    Err(Error::Invalid("collision resampling exhausted".into()))
}

/// ∂(Re z_v, Im z_v)/∂(free coordinate k) for every vertex.
fn tangents(m: usize, n: usize, gauge: Gauge, c: &Configuration) -> Vec<Vec<(f64, f64)>> {
    let dim = config_dim(m, n) as usize;
    let mut t = vec![vec![(0.0, 0.0); dim]; m + n];
    match gauge {
        Gauge::PinWhites => {
            let mut k = 0;
            for v in 2..m {
                t[v][k] = (1.0, 0.0);
                k += 1;
            }
            for b in 0..n {
                t[m + b][k] = (1.0, 0.0);
                t[m + b][k + 1] = (0.0, 1.0);
                k += 2;
            }
        }
        _ => {
            let th = c.theta.unwrap();
            t[m][0] = (-th.sin(), th.cos());
            let mut k = 1;
            for v in 1..m {
                t[v][k] = (1.0, 0.0);
                k += 1;
            }
            for b in 1..n {
                t[m + b][k] = (1.0, 0.0);
                t[m + b][k + 1] = (0.0, 1.0);
                k += 2;
            }
        }
    }
    t
}

fn det(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut d = 1.0;
    for col in 0..n {
        let p = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).unwrap();
        if a[p][col] == 0.0 {
            return 0.0;
        }
        if p != col {
            a.swap(p, col);
            d = -d;
        }
        d *= a[col][col];
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f != 0.0 {
                for k in col..n {
                    a[r][k] -= f * a[col][k];
                }
            }
        }
    }
    d
}

/// Top-form density ∧_e dArg/2π at a configuration, in the chart's free coordinates.
pub fn form_density(g: &Graph, gauge: Gauge, c: &Configuration) -> f64 {
    let (m, n) = (g.m(), g.n());
    let gauge = gauge.resolve(m);
    let tan = tangents(m, n, gauge, c);
    let pos = |v: usize| if v < m { (c.whites[v], 0.0) } else { c.blacks[v - m] };
    let rows: Vec<Vec<f64>> = g
        .edges
        .iter()
        .map(|&(i, j)| {
            let (i, j) = (i as usize, j as usize);
            let (zi, zj) = (pos(i), pos(j));
            let (a, b) = (zi.0 - zj.0, zi.1 - zj.1);
            let r2 = a * a + b * b;
            (0..tan[i].len())
                .map(|k| {
                    let da = tan[i][k].0 - tan[j][k].0;
                    let db = tan[i][k].1 - tan[j][k].1;
                    (a * db - b * da) / r2
                })
                .collect()
        })
        .collect();
    det(rows) / (2.0 * PI).powi(g.n_edges() as i32)
}

/// Sampling parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeightConfig {
    pub samples: u64,
    pub seed: u64,
    pub gauge: Gauge,
    pub batch: u64,
}

impl Default for WeightConfig {
    fn default() -> Self {
        WeightConfig { samples: 1_000_000, seed: 1, gauge: Gauge::Auto, batch: 1 << 16 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WeightEstimate {
    pub graph: String,
    pub value: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    pub gauge: String,
    /// Reason for an exact zero (no sampling performed).
    pub exact: Option<String>,
}

impl WeightEstimate {
    fn exact_zero(g: &Graph, cfg: &WeightConfig, why: &str) -> Self {
        WeightEstimate {
            graph: g.key(),
            value: 0.0,
            std_error: 0.0,
            samples: 0,
            seed: cfg.seed,
            gauge: cfg.gauge.name().into(),
            exact: Some(why.into()),
        }
    }

    /// Flags estimates whose standard error exceeds `threshold`.
    pub fn converged(&self, threshold: f64) -> bool {
        self.std_error <= threshold
    }
}

/// Running mean and variance (Chan et al. merge).
#[derive(Clone, Copy, Debug, Default)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn push(&mut self, x: f64) {
        self.n += 1;
        let d = x - self.mean;
        self.mean += d / self.n as f64;
        self.m2 += d * (x - self.mean);
    }

    fn merge(&mut self, o: &Moments) {
        if o.n == 0 {
            return;
        }
        let n = self.n + o.n;
        let d = o.mean - self.mean;
        self.mean += d * o.n as f64 / n as f64;
        self.m2 += o.m2 + d * d * (self.n as f64) * (o.n as f64) / n as f64;
        self.n = n;
    }
}

/// Estimates the weight of a two-coloured graph; exact zeros are returned without sampling.
pub fn weight(g: &Graph, cfg: &WeightConfig) -> Result<WeightEstimate> {
    if g.colour == Colour::One {
        return Err(Error::ColourMismatch("weights are defined for two-coloured graphs".into()));
    }
    g.validate()?;
    let (m, n) = (g.m(), g.n());
    if m == 0 {
        return Err(Error::Invalid("weight needs at least one white vertex".into()));
    }
    if g.n_edges() as i64 != config_dim(m, n) {
        return Ok(WeightEstimate::exact_zero(g, cfg, "edge count differs from the configuration dimension"));
    }
    let mut seen = std::collections::BTreeSet::new();
    if g.edges.iter().any(|&(u, v)| !seen.insert((u.min(v), u.max(v)))) {
        return Ok(WeightEstimate::exact_zero(g, cfg, "doubled edge"));
    }
    if g.edges.iter().any(|&(u, v)| (u as usize) < m && (v as usize) < m) {
        return Ok(WeightEstimate::exact_zero(g, cfg, "edge between two whites"));
    }
    if g.n_edges() == 0 {
        // a point: the empty form integrates to 1
        return Ok(WeightEstimate { value: 1.0, exact: Some("zero-dimensional configuration space".into()), ..WeightEstimate::exact_zero(g, cfg, "") });
    }
    let gauge = cfg.gauge.resolve(m);
    let mut total = Moments::default();
    let batches = cfg.samples.div_ceil(cfg.batch.max(1));
    for b in 0..batches {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(b);
        let count = cfg.batch.min(cfg.samples - b * cfg.batch);
        let mut acc = Moments::default();
        for _ in 0..count {
            let c = sample_configuration(m, n, gauge, &mut rng)?;
            acc.push(form_density(g, gauge, &c) / c.density);
        }
        total.merge(&acc);
    }
    let var = if total.n > 1 { total.m2 / (total.n - 1) as f64 } else { 0.0 };
    Ok(WeightEstimate {
        graph: g.key(),
        value: total.mean,
        std_error: (var / total.n as f64).sqrt(),
        samples: total.n,
        seed: cfg.seed,
        gauge: gauge.name().into(),
        exact: None,
    })
}

/// Number of black relabellings preserving the edge set (whites are ordered and stay fixed).
pub fn automorphism_count(g: &Graph) -> usize {
    let (m, n) = (g.m(), g.n());
    let norm = |u: usize, v: usize| (u.min(v), u.max(v));
    let edges: std::collections::BTreeSet<(usize, usize)> =
        g.edges.iter().map(|&(u, v)| norm(u as usize, v as usize)).collect();
    (0..n)
        .permutations(n)
        .filter(|p| {
            let f = |v: usize| if v < m { v } else { m + p[v - m] };
            g.edges.iter().all(|&(u, v)| edges.contains(&norm(f(u as usize), f(v as usize))))
        })
        .count()
}

/// One term w_Γ/|Aut Γ|·Γ of the configuration-space element.
#[derive(Clone, Debug, Serialize)]
pub struct ExoticTerm {
    pub graph: String,
    pub automorphisms: usize,
    pub weight: WeightEstimate,
    pub coefficient: f64,
    pub std_error: f64,
}

/// Terms on every two-coloured class with m + n ≤ `max_vertices`, m ≥ 1, 2n + m - 2 edges and
/// no black vertex of valence zero.
pub fn exotic_element(max_vertices: usize, cfg: &WeightConfig) -> Result<Vec<ExoticTerm>> {
    let mut out = Vec::new();
    for total in 1..=max_vertices {
        for m in 1..=total {
            let n = total - m;
            let l = config_dim(m, n);
            if l < 0 {
                continue;
            }
            let budget = Budget { max_vertices: max_vertices.max(total), ..Budget::default() };
            let cons = Constraints { min_black_valence: 1, ..Constraints::NONE };
            for g in enumerate(Colour::Ordered, m, n, l as usize, cons, budget)?.iter() {
                let w = weight(g, cfg)?;
                let a = automorphism_count(g);
                out.push(ExoticTerm {
                    graph: g.key(),
                    automorphisms: a,
                    coefficient: w.value / a as f64,
                    std_error: w.std_error / a as f64,
                    weight: w,
                });
            }
        }
    }
    Ok(out)
}

/// Coefficient of one class in [X, X] with its propagated standard error.
#[derive(Clone, Debug, Serialize)]
pub struct ResidualEntry {
    pub part: &'static str,
    pub graph: String,
    pub value: f64,
    pub std_error: f64,
}

impl ResidualEntry {
    /// |value| in units of the standard error (0 for an exact zero).
    pub fn sigmas(&self) -> f64 {
        if self.value.abs() < 1e-12 {
            0.0
        } else if self.std_error == 0.0 {
            f64::INFINITY
        } else {
            self.value.abs() / self.std_error
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExoticResidual {
    /// Every residual class with at most this many vertices is fully determined.
    pub cover: usize,
    pub entries: Vec<ResidualEntry>,
}

impl ExoticResidual {
    pub fn max_sigmas(&self) -> f64 {
        self.entries.iter().map(ResidualEntry::sigmas).fold(0.0, f64::max)
    }
}

type Coords = BTreeMap<(&'static str, Graph), f64>;

fn coords(x: &MacElement) -> Coords {
    let f = |c: &Q| c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
    let mut out = Coords::new();
    for (g, c) in x.def.iter() {
        out.insert(("def", g.clone()), f(c));
    }
    for (g, c) in x.gc.iter() {
        out.insert(("gc", g.clone()), f(c));
    }
    out
}

/// [X, X] for X = (Σ c_Γ Γ, ½·edge) restricted to classes with at most `cover` vertices, with
/// first-order error propagation from the coefficient errors.
pub fn exotic_mc_residual(terms: &[ExoticTerm], cover: usize) -> Result<ExoticResidual> {
    let gens: Vec<MacElement> = terms
        .iter()
        .map(|t| Ok(MacElement::from_def(GraphVector::of(&Graph::from_key(&t.graph)?))))
        .collect::<Result<_>>()?;
    let e = MacElement::from_gc(crate::deformation_complexes::gc::mc_gc());
    let cap = Some(cover);
    let c: Vec<f64> = terms.iter().map(|t| t.coefficient).collect();
    let k = gens.len();
    // pair[i][j] = [G_i, G_j], lin[i] = [G_i, E] + [E, G_i]
    let pair: Vec<Vec<Coords>> =
        (0..k).map(|i| (0..k).map(|j| coords(&mac_bracket_capped(&gens[i], &gens[j], cap))).collect()).collect();
    let lin: Vec<Coords> = (0..k)
        .map(|i| {
            let mut v = mac_bracket_capped(&gens[i], &e, cap);
            v.axpy(&Q::one(), &mac_bracket_capped(&e, &gens[i], cap));
            coords(&v)
        })
        .collect();
    let constant = coords(&mac_bracket_capped(&e, &e, cap));
    let mut keys: BTreeSet<(&'static str, Graph)> = constant.keys().cloned().collect();
    for i in 0..k {
        keys.extend(lin[i].keys().cloned());
        for j in 0..k {
            keys.extend(pair[i][j].keys().cloned());
        }
    }
    let at = |m: &Coords, key: &(&'static str, Graph)| m.get(key).copied().unwrap_or(0.0);
    let mut entries = Vec::new();
    for key in keys.into_iter().filter(|(_, g)| g.n_vertices() <= cover) {
        let mut value = at(&constant, &key);
        let mut var = 0.0;
        for a in 0..k {
            value += c[a] * at(&lin[a], &key);
            let mut grad = at(&lin[a], &key);
            for b in 0..k {
                value += c[a] * c[b] * at(&pair[a][b], &key);
                grad += c[b] * (at(&pair[a][b], &key) + at(&pair[b][a], &key));
            }
            var += (grad * terms[a].std_error).powi(2);
        }
        entries.push(ResidualEntry { part: key.0, graph: key.1.key(), value, std_error: var.sqrt() });
    }
    Ok(ExoticResidual { cover, entries })
}
