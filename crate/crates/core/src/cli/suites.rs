//! Named verification suites. Each suite records the caps it ran with.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config_weights::{exotic_element, exotic_mc_residual, weight, Gauge, WeightConfig};
use crate::deformation_complexes::def::{degree_def, three_graph};
use crate::deformation_complexes::gc::{degree_gc, edge, k4};
use crate::deformation_complexes::{
    bracket_gc, gamma0, gauge_transform, mac_bracket, mac_differential, quotient_project, residual_in_cover,
    splitting_s, splitting_s_hat, willwacher, ComplexId, Ideal, MacElement,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{cohomology_dim, is_coboundary, is_cocycle, quotient_injectivity};
use crate::graph_core::{enumerate, Budget, Colour, Constraints, Graph, GraphVector, Q};
use crate::polyvector_rep::{
    ainf_relation_check, check_operad_morphism, monomial_basis, phi, relation_check, twist_by_poisson, CheckReport,
    Polyvector, Relation,
};

/// Caps shared by every suite; unset fields fall back to each suite's defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Caps {
    pub max_vertices: Option<usize>,
    pub max_edges: Option<usize>,
    pub hbar_order: Option<usize>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub checked: u64,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, checked: u64) -> Self {
        Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            checked,
            data: Value::Null,
            witness: None,
        }
    }

    fn data(mut self, v: Value) -> Self {
        self.data = v;
        self
    }

    fn witness(mut self, w: Option<Value>) -> Self {
        if self.status == Status::Fail {
            self.witness = w;
        }
        self
    }

    fn from_report(r: &CheckReport) -> Self {
        let w = r.witnesses.first().map(|s| json!(s));
        Check::new(r.name.clone(), r.passed(), r.checked).witness(w)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub caps: Value,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    DSquared,
    Jacobi,
    WillwacherChain,
    McGamma0,
    K4Class,
    SplittingLie,
    NogoWitness,
    Whitening,
    GaugeConsistency,
    RepMorphism,
    AinfTwist,
    WeightsAnchor,
    ExoticMcResidual,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::DSquared,
        Suite::Jacobi,
        Suite::WillwacherChain,
        Suite::McGamma0,
        Suite::K4Class,
        Suite::SplittingLie,
        Suite::NogoWitness,
        Suite::Whitening,
        Suite::GaugeConsistency,
        Suite::RepMorphism,
        Suite::AinfTwist,
        Suite::WeightsAnchor,
        Suite::ExoticMcResidual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DSquared => "d-squared",
            Suite::Jacobi => "jacobi",
            Suite::WillwacherChain => "willwacher-chain",
            Suite::McGamma0 => "mc-gamma0",
            Suite::K4Class => "k4-class",
            Suite::SplittingLie => "splitting-lie",
            Suite::NogoWitness => "nogo-witness",
            Suite::Whitening => "whitening",
            Suite::GaugeConsistency => "gauge-consistency",
            Suite::RepMorphism => "rep-morphism",
            Suite::AinfTwist => "ainf-twist",
            Suite::WeightsAnchor => "weights-anchor",
            Suite::ExoticMcResidual => "exotic-mc-residual",
        }
    }

    pub fn run(self, caps: &Caps) -> Result<SuiteReport> {
        let (caps_json, checks) = match self {
            Suite::DSquared => d_squared(caps)?,
            Suite::Jacobi => jacobi(caps)?,
            Suite::WillwacherChain => willwacher_chain(caps)?,
            Suite::McGamma0 => mc_gamma0(),
            Suite::K4Class => k4_class(caps)?,
            Suite::SplittingLie => splitting_lie(caps)?,
            Suite::NogoWitness => nogo_witness(caps)?,
            Suite::Whitening => whitening(caps)?,
            Suite::GaugeConsistency => gauge_consistency(caps)?,
            Suite::RepMorphism => rep_morphism(caps)?,
            Suite::AinfTwist => ainf_twist(caps)?,
            Suite::WeightsAnchor => weights_anchor(caps)?,
            Suite::ExoticMcResidual => exotic_residual(caps)?,
        };
        Ok(SuiteReport {
            suite: self.name().into(),
            passed: checks.iter().all(Check::passed),
            caps: caps_json,
            checks,
            elapsed_ms: None,
        })
    }

    /// Runs the suite and records wall time.
    pub fn run_timed(self, caps: &Caps) -> Result<SuiteReport> {
        let t = Instant::now();
        let mut r = self.run(caps)?;
        r.elapsed_ms = Some(t.elapsed().as_millis());
        Ok(r)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

type SuiteOut = Result<(Value, Vec<Check>)>;

fn budget(vertices: usize) -> Budget {
    Budget { max_vertices: vertices.max(Budget::default().max_vertices), ..Budget::default() }
}

/// Every nonzero one-coloured class with 1..=n vertices and at most `max_edges` edges.
fn gc_generators(n: usize, max_edges: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for v in 1..=n {
        for l in 0..=(v * (v - 1) / 2).min(max_edges) {
            out.extend(enumerate(Colour::One, 0, v, l, Constraints::NONE, budget(n))?.iter().cloned());
        }
    }
    Ok(out)
}

/// Every nonzero ordered two-coloured class with 1 ≤ m and m + n ≤ `total`.
fn def_generators(total: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for t in 1..=total {
        for m in 1..=t {
            for l in 0..=t * (t - 1) / 2 {
                out.extend(enumerate(Colour::Ordered, m, t - m, l, Constraints::NONE, budget(total))?.iter().cloned());
            }
        }
    }
    Ok(out)
}

fn vector_witness(g: &Graph, v: &MacElement) -> Value {
    json!({"graph": g.key(), "image": v.to_json()})
}

/// Checks that `f` vanishes on every generator.
fn all_zero(name: &str, gens: &[Graph], f: impl Fn(&Graph) -> MacElement) -> Check {
    let mut witness = None;
    let mut bad = 0u64;
    for g in gens {
        let v = f(g);
        if !v.is_zero() {
            bad += 1;
            witness.get_or_insert_with(|| vector_witness(g, &v));
        }
    }
    Check::new(name, bad == 0, gens.len() as u64).data(json!({"failures": bad})).witness(witness)
}

fn element(g: &Graph) -> MacElement {
    if g.colour == Colour::One {
        MacElement::from_gc(GraphVector::of(g))
    } else {
        MacElement::from_def(GraphVector::of(g))
    }
}

fn d_squared(caps: &Caps) -> SuiteOut {
    let gc_n = caps.max_vertices.unwrap_or(6);
    let gc_l = caps.max_edges.unwrap_or(9);
    let def_n = gc_n.saturating_sub(1);
    let gc = gc_generators(gc_n, gc_l)?;
    let cone_gc: Vec<Graph> = gc.iter().filter(|g| g.n_vertices() < gc_n).cloned().collect();
    let def = def_generators(def_n)?;
    let checks = vec![
        all_zero("delta_bb^2 = 0 on fGC2", &gc, |g| {
            let once = mac_differential(&element(g));
            MacElement::from_gc(mac_differential(&MacElement::from_gc(once.gc)).gc)
        }),
        all_zero("delta^2 = 0 on Def(Ass -> fGraphs)", &def, |g| mac_differential(&mac_differential(&element(g)))),
        all_zero("d^2 = 0 on the mapping cone", &cone_gc.iter().chain(&def).cloned().collect::<Vec<_>>(), |g| {
            mac_differential(&mac_differential(&element(g)))
        }),
    ];
    Ok((json!({"gc_vertices": gc_n, "gc_edges": gc_l, "def_vertices": def_n, "cone_gc_vertices": gc_n - 1}), checks))
}

fn mac_degree(g: &Graph) -> i64 {
    if g.colour == Colour::One {
        degree_gc(g)
    } else {
        degree_def(g)
    }
}

fn sign(odd: bool) -> Q {
    if odd {
        -Q::one()
    } else {
        Q::one()
    }
}

fn jacobi(caps: &Caps) -> SuiteOut {
    let n = caps.max_vertices.unwrap_or(3);
    let mut gens = gc_generators(n, usize::MAX)?;
    gens.extend(def_generators(n)?);
    let els: Vec<(MacElement, i64)> = gens.iter().map(|g| (element(g), mac_degree(g))).collect();
    let (mut anti_bad, mut jac_bad) = (0u64, 0u64);
    let (mut anti_w, mut jac_w) = (None, None);
    let table: Vec<Vec<MacElement>> = els.iter().map(|(a, _)| els.iter().map(|(b, _)| mac_bracket(a, b)).collect()).collect();
    let mut triples = 0u64;
    for (i, (a, da)) in els.iter().enumerate() {
        for (j, (b, db)) in els.iter().enumerate() {
            let mut s = table[i][j].clone();
            s.axpy(&sign((da * db) % 2 != 0), &table[j][i]);
            if !s.is_zero() {
                anti_bad += 1;
                anti_w.get_or_insert_with(|| json!({"a": gens[i].key(), "b": gens[j].key(), "sum": s.to_json()}));
            }
            for (k, (c, dc)) in els.iter().enumerate() {
                triples += 1;
                // (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]]
                let mut r = mac_bracket(a, &table[j][k]).scale(&sign((da * dc) % 2 != 0));
                r.axpy(&sign((db * da) % 2 != 0), &mac_bracket(b, &table[k][i]));
                r.axpy(&sign((dc * db) % 2 != 0), &mac_bracket(c, &table[i][j]));
                if !r.is_zero() {
                    jac_bad += 1;
                    jac_w.get_or_insert_with(
                        || json!({"a": gens[i].key(), "b": gens[j].key(), "c": gens[k].key(), "sum": r.to_json()}),
                    );
                }
            }
        }
    }
    let pairs = (els.len() * els.len()) as u64;
    Ok((
        json!({"max_vertices": n, "generators": gens.len()}),
        vec![
            Check::new("graded antisymmetry of the cone bracket", anti_bad == 0, pairs).witness(anti_w),
            Check::new("graded Jacobi identity of the cone bracket", jac_bad == 0, triples).witness(jac_w),
        ],
    ))
}

fn willwacher_chain(caps: &Caps) -> SuiteOut {
    let n = caps.max_vertices.unwrap_or(5);
    let gens = gc_generators(n, caps.max_edges.unwrap_or(usize::MAX))?;
    let check = all_zero("delta_def W + W delta_bb = 0", &gens, |g| {
        let v = GraphVector::of(g);
        let d = mac_differential(&MacElement::from_def(willwacher(&v)));
        let mut lhs = d.def;
        lhs.axpy(&Q::one(), &willwacher(&mac_differential(&MacElement::from_gc(v)).gc));
        MacElement::from_def(lhs)
    });
    Ok((json!({"max_vertices": n}), vec![check]))
}

fn mc_gamma0() -> (Value, Vec<Check>) {
    let e = MacElement::from_gc(GraphVector::of(&edge()));
    let ee = mac_bracket(&e, &e);
    let g = gamma0();
    let gg = mac_bracket(&g, &g);
    let checks = vec![
        Check::new("[edge, edge] = 0", ee.is_zero(), 1).witness(Some(ee.to_json())),
        Check::new("[Gamma0, Gamma0] = 0", gg.is_zero(), 1).data(json!({"gamma0": g.to_json()})).witness(Some(gg.to_json())),
    ];
    (json!({}), checks)
}

fn k4_class(caps: &Caps) -> SuiteOut {
    let n = caps.max_vertices.unwrap_or(4);
    let x = MacElement::from_gc(GraphVector::of(&k4()));
    let cocycle = is_cocycle(ComplexId::Gc2, &x)?;
    let cob = is_coboundary(ComplexId::Gc2, &x)?;
    let h = cohomology_dim(ComplexId::Gc2, 0, n)?;
    let expected = if n >= 4 { 1 } else { 0 };
    Ok((
        json!({"max_vertices": n}),
        vec![
            Check::new("K4 has degree 0", degree_gc(&k4()) == 0, 1),
            Check::new("K4 is a delta_bb cocycle", cocycle, 1),
            Check::new("K4 is not a coboundary", !cob.is_coboundary, 1)
                .witness(cob.preimage.map(|p| p.to_json())),
            Check::new(format!("dim H^0(gc2, n <= {n}) = {expected}"), h == expected, 1).data(json!({"dim": h})),
        ],
    ))
}

fn splitting_lie(caps: &Caps) -> SuiteOut {
    let n = caps.max_vertices.unwrap_or(4);
    let gens = gc_generators(n, caps.max_edges.unwrap_or(usize::MAX))?;
    let mut bad = 0u64;
    let mut w = None;
    for a in &gens {
        for b in &gens {
            let (va, vb) = (GraphVector::of(a), GraphVector::of(b));
            let lhs = mac_bracket(&splitting_s(&va), &splitting_s(&vb));
            let rhs = splitting_s(&bracket_gc(&va, &vb));
            if lhs != rhs {
                bad += 1;
                w.get_or_insert_with(|| json!({"a": a.key(), "b": b.key(), "difference": lhs.sub(&rhs).to_json()}));
            }
        }
    }
    Ok((
        json!({"max_vertices": n}),
        vec![Check::new("[s(a), s(b)] = s([a, b])", bad == 0, (gens.len() * gens.len()) as u64).witness(w)],
    ))
}

fn nogo_witness(caps: &Caps) -> SuiteOut {
    let n = caps.max_vertices.unwrap_or(5);
    let w = willwacher(&GraphVector::of(&k4()));
    let x = MacElement::from_def(w.clone());
    let mut checks = vec![
        Check::new("attach-K4 is a cocycle in the quotient", is_cocycle(ComplexId::DefAssGraphsQuot, &x)?, 1),
    ];
    let p = quotient_project(&w, Ideal::IbbPrime, (1, 4, 7))?;
    checks.push(Check::new("attach-K4 survives the quotient by I'", !p.member, 1).data(json!({"ideal_dim": p.ideal_dim})));
    for id in [ComplexId::DefAssGraphs, ComplexId::DefAssGraphsQuot] {
        let c = is_coboundary(id, &x)?;
        checks.push(
            Check::new(format!("attach-K4 is not a coboundary in {id}"), !c.is_coboundary, 1)
                .witness(c.preimage.map(|p| p.to_json())),
        );
    }
    // degree-1 blocks of Def have m + n = k + 2
    let mut reports = Vec::new();
    for k in -1..=n as i64 - 2 {
        reports.push(quotient_injectivity(1, k, budget(n))?);
    }
    let ok = reports.iter().all(|r| r.injective);
    checks.push(
        Check::new("H^1 of the quotient injects into cocycles mod coboundaries", ok, reports.len() as u64)
            .data(serde_json::to_value(&reports).expect("serializable")),
    );
    Ok((json!({"max_vertices": n, "bigrade": [1, 4, 7]}), checks))
}

fn whitening(caps: &Caps) -> SuiteOut {
    let cap = caps.max_vertices.unwrap_or(6);
    let w = splitting_s_hat(&GraphVector::of(&k4()), cap)?;
    let d = mac_differential(&w.element);
    let layers: Vec<Value> = w.layers.iter().map(|l| json!(l.bigrades())).collect();
    let black_free = w.residual.keys().all(|g| g.n() == 0);
    Ok((
        json!({"max_whitenings": cap}),
        vec![
            Check::new("delta' H_1 + W(K4) = 0", w.defect.is_zero(), 1).witness(Some(w.defect.to_json())),
            Check::new("residual has no black vertices", black_free, 1)
                .data(json!({"layers": layers, "residual_bigrades": w.residual.bigrades()})),
            Check::new("d s_hat(K4) = (residual, 0)", d.def == w.residual && d.gc.is_zero(), 1)
                .witness(Some(d.to_json())),
        ],
    ))
}

fn gauge_consistency(caps: &Caps) -> SuiteOut {
    let trunc = caps.max_vertices.unwrap_or(6);
    let kv = GraphVector::of(&k4());
    let sh = splitting_s_hat(&kv, trunc)?;
    let g0 = gamma0();
    let mut checks = Vec::new();
    for (name, h) in [("(0, K4)", MacElement::from_gc(kv.clone())), ("s(K4)", splitting_s(&kv)), ("s_hat(K4)", sh.element)] {
        let x = gauge_transform(&g0, &h, trunc)?;
        let r = residual_in_cover(&x, trunc);
        checks.push(Check::new(format!("exp(ad {name}) Gamma0 is MC up to {trunc} vertices"), r.is_zero(), 1).witness(Some(r.to_json())));
        if name == "s_hat(K4)" {
            let first = mac_bracket(&h, &g0);
            let low = |v: &MacElement| v.def.filter(|g| matches!((g.m(), g.n()), (2, 0) | (1, 1)));
            checks.push(Check::new("s_hat(K4) keeps the (2,0) and (1,1) parts of Gamma0", low(&x) == low(&g0), 1));
            let black_free = first.gc.is_zero() && first.def.keys().all(|g| g.n() == 0);
            checks.push(
                Check::new("first-order correction by s_hat(K4) is black-free", black_free, 1)
                    .data(json!({"bigrades": first.def.bigrades()}))
                    .witness(Some(first.to_json())),
            );
        }
    }
    Ok((json!({"truncation": trunc}), checks))
}

/// Representatives of every labelled one-coloured graph shape with at most three vertices.
fn small_gra() -> Vec<Graph> {
    vec![
        Graph::one(1, &[]),
        Graph::one(2, &[]),
        Graph::one(2, &[(0, 1)]),
        Graph::one(3, &[]),
        Graph::one(3, &[(0, 1)]),
        Graph::one(3, &[(0, 1), (1, 2)]),
        Graph::one(3, &[(0, 1), (1, 2), (0, 2)]),
    ]
}

fn rep_morphism(caps: &Caps) -> SuiteOut {
    let dmax = caps.max_vertices.map(|v| v.min(3)).unwrap_or(3);
    let deg = 2;
    let gs = small_gra();
    let mut checks = Vec::new();
    let (mut checked, mut bad) = (0u64, 0u64);
    let mut w = None;
    for d in 1..=dmax {
        for g1 in &gs {
            for slot in 0..g1.n_vertices() {
                for g2 in &gs {
                    let r = check_operad_morphism(g1, g2, slot, d, deg)?;
                    checked += r.checked;
                    bad += r.failures;
                    if !r.passed() && w.is_none() {
                        w = Some(json!({"check": r.name, "witness": r.witnesses.first()}));
                    }
                }
            }
        }
    }
    checks.push(Check::new("phi(G1 o_i G2) = phi(G1) o_i phi(G2)", bad == 0, checked).witness(w));
    for rel in Relation::ALL {
        for d in 1..=dmax {
            let samples: Vec<Polyvector> =
                monomial_basis(d, deg).into_iter().map(|m| Polyvector::monomial(d, m, Q::one())).collect();
            checks.push(Check::from_report(&relation_check(rel, d, &samples)?));
        }
    }
    let pi = sl2_pi();
    let e = phi(&edge(), &[pi.clone(), pi.clone()])?;
    checks.push(Check::new("[pi, pi] = 0 for the sl2 bivector", e.is_zero(), 1).witness(Some(json!(e.to_string()))));
    Ok((json!({"max_dim": dmax, "max_degree": deg, "max_graph_vertices": 3}), checks))
}

/// Linear Poisson bivector of sl₂ on R³.
pub fn sl2_pi() -> Polyvector {
    Polyvector::parse("2 x2 p1 p2 - 2 x3 p1 p3 + x1 p2 p3", 3).expect("literal")
}

fn ainf_twist(caps: &Caps) -> SuiteOut {
    let order = caps.hbar_order.unwrap_or(3);
    let deg = 3;
    let pi = sl2_pi();
    let t = twist_by_poisson(&gamma0().def, &pi, order)?;
    let samples: Vec<Polyvector> = monomial_basis(3, deg).into_iter().map(|m| Polyvector::monomial(3, m, Q::one())).collect();
    let r = ainf_relation_check(&t, 3, &samples)?;
    Ok((
        json!({"dim": 3, "hbar_order": order, "max_degree": deg, "max_arity": 3, "pi": pi.to_string()}),
        vec![Check::from_report(&r)],
    ))
}

fn weight_cfg(caps: &Caps) -> WeightConfig {
    WeightConfig {
        samples: caps.samples.unwrap_or(1_000_000),
        seed: caps.seed.unwrap_or(1),
        gauge: Gauge::Auto,
        ..WeightConfig::default()
    }
}

fn weights_anchor(caps: &Caps) -> SuiteOut {
    let cfg = weight_cfg(caps);
    let t = weight(&three_graph(), &cfg)?;
    let target = 1.0 / 3.0;
    let mut checks = vec![Check::new("3-graph weight = 1/3 +- 0.02", (t.value - target).abs() <= 0.02, t.samples)
        .data(json!({"value": t.value, "std_error": t.std_error}))];
    let analytic = 1.0 / 24.0;
    checks.push(
        Check::new("3-graph weight agrees with 1/24 within 4 standard errors", (t.value - analytic).abs() <= 4.0 * t.std_error, t.samples)
            .data(json!({"value": t.value, "std_error": t.std_error})),
    );
    let short = Graph::ord(3, 1, &[(0, 3), (1, 3)]);
    let doubled = Graph::ord(3, 1, &[(0, 3), (0, 3), (1, 3)]);
    for (name, g) in [("dimension mismatch", short), ("doubled edge", doubled)] {
        let w = weight(&g, &cfg)?;
        checks.push(
            Check::new(format!("{name} weight is exactly 0 with 0 samples"), w.value == 0.0 && w.samples == 0, 1)
                .data(json!({"reason": w.exact})),
        );
    }
    Ok((json!({"samples": cfg.samples, "seed": cfg.seed}), checks))
}

fn exotic_residual(caps: &Caps) -> SuiteOut {
    let cfg = weight_cfg(caps);
    let n = caps.max_vertices.unwrap_or(4);
    let terms = exotic_element(n, &cfg)?;
    let r = exotic_mc_residual(&terms, n + 1)?;
    let worst = r.entries.iter().max_by(|a, b| a.sigmas().total_cmp(&b.sigmas()));
    let sampled = terms.iter().filter(|t| t.weight.exact.is_none()).count();
    let check = Check::new("MC residual within 3 combined standard errors", r.max_sigmas() <= 3.0, r.entries.len() as u64)
        .data(json!({"max_sigmas": r.max_sigmas(), "terms": terms.len(), "sampled_terms": sampled, "worst": worst}));
    Ok((json!({"max_vertices": n, "cover": n + 1, "samples": cfg.samples, "seed": cfg.seed}), vec![check]))
}

/// Dispatches `verify <name>`; `all` runs every suite.
pub fn run_suites(name: &str, caps: &Caps, timed: bool) -> Result<Vec<SuiteReport>> {
    let suites: Vec<Suite> = if name == "all" { Suite::ALL.to_vec() } else { vec![name.parse()?] };
    suites.into_iter().map(|s| if timed { s.run_timed(caps) } else { s.run(caps) }).collect()
}
