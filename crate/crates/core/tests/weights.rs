use graphcx::config_weights::{
    automorphism_count, config_dim, exotic_element, exotic_mc_residual, sample_configuration, weight, Gauge,
    WeightConfig,
};
use graphcx::deformation_complexes::def::three_graph;
use graphcx::graph_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cfg(samples: u64, seed: u64, gauge: Gauge) -> WeightConfig {
    WeightConfig { samples, seed, gauge, ..WeightConfig::default() }
}

// ∫ over x3 > 1 and z ∈ C of the three-edge form, done by hand in the pinned-whites chart.
const THREE_GRAPH: f64 = 1.0 / 24.0;

#[test]
fn free_coordinates() {
    assert_eq!(config_dim(3, 1), 3);
    assert_eq!(config_dim(2, 0), 0);
    assert_eq!(config_dim(1, 1), 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let c = sample_configuration(3, 1, Gauge::Auto, &mut rng).unwrap();
    assert_eq!((c.whites[0], c.whites[1]), (0.0, 1.0));
    assert!(c.whites[2] > 1.0);
    let c = sample_configuration(2, 2, Gauge::PinBlack, &mut rng).unwrap();
    let z = c.blacks[0];
    assert!((z.0 * z.0 + z.1 * z.1 - 1.0).abs() < 1e-12);
    assert!(sample_configuration(1, 0, Gauge::Auto, &mut rng).is_err());
    assert!(sample_configuration(0, 2, Gauge::Auto, &mut rng).is_err());
}

#[test]
fn exact_zeros_skip_sampling() {
    let c = cfg(1000, 1, Gauge::Auto);
    for g in [
        Graph::ord(3, 1, &[(0, 3), (1, 3)]),
        Graph::ord(3, 1, &[(0, 3), (0, 3), (1, 3)]),
        Graph::ord(2, 1, &[(0, 1), (0, 2)]),
    ] {
        let w = weight(&g, &c).unwrap();
        assert_eq!((w.value, w.std_error, w.samples), (0.0, 0.0, 0));
        assert!(w.exact.is_some());
    }
}

#[test]
fn rejects_bad_input() {
    let c = cfg(10, 1, Gauge::Auto);
    assert!(weight(&Graph::ord(0, 2, &[(0, 1)]), &c).is_err());
    assert!(weight(&Graph::one(2, &[(0, 1)]), &c).is_err());
}

#[test]
fn two_vertex_weights_are_one() {
    let c = cfg(2000, 5, Gauge::Auto);
    assert_eq!(weight(&Graph::ord(2, 0, &[]), &c).unwrap().value, 1.0);
    let w = weight(&Graph::ord(1, 1, &[(0, 1)]), &c).unwrap();
    assert!((w.value - 1.0).abs() < 1e-9, "{w:?}");
}

#[test]
fn three_graph_weight() {
    let w = weight(&three_graph(), &cfg(400_000, 11, Gauge::PinWhites)).unwrap();
    assert!((w.value - THREE_GRAPH).abs() < 4.0 * w.std_error, "{w:?}");
    assert!(w.std_error < 2e-4);
}

#[test]
fn gauge_independence() {
    let a = weight(&three_graph(), &cfg(400_000, 2, Gauge::PinWhites)).unwrap();
    let b = weight(&three_graph(), &cfg(400_000, 2, Gauge::PinBlack)).unwrap();
    let s = (a.std_error.powi(2) + b.std_error.powi(2)).sqrt();
    assert!((a.value - b.value).abs() < 3.0 * s, "{a:?} {b:?}");
}

#[test]
fn relabelling_consistency() {
    let c = cfg(200_000, 4, Gauge::PinWhites);
    let base = weight(&three_graph(), &c).unwrap();
    // reversed edge order is an odd permutation of the orientation
    let rev = Graph::ord(3, 1, &[(2, 3), (1, 3), (0, 3)]);
    let (canon, sign) = rev.canonicalize().unwrap().unwrap();
    assert_eq!(canon, three_graph());
    let w = weight(&rev, &c).unwrap();
    assert!((w.value - sign as f64 * base.value).abs() < 1e-9 * base.value.abs());
    // black relabelling on a two-black graph
    let g = Graph::ord(2, 2, &[(0, 2), (1, 3), (2, 3), (0, 3)]);
    let h = Graph::ord(2, 2, &[(0, 3), (1, 2), (3, 2), (0, 2)]);
    let (wg, wh) = (weight(&g, &c).unwrap(), weight(&h, &c).unwrap());
    let s = (wg.std_error.powi(2) + wh.std_error.powi(2)).sqrt();
    assert!((wg.value - wh.value).abs() < 4.0 * s, "{wg:?} {wh:?}");
}

#[test]
fn deterministic_batches() {
    let c = WeightConfig { samples: 50_000, seed: 9, gauge: Gauge::Auto, batch: 4096 };
    let a = weight(&three_graph(), &c).unwrap();
    let b = weight(&three_graph(), &c).unwrap();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let other = weight(&three_graph(), &WeightConfig { seed: 10, ..c }).unwrap();
    assert_ne!(a.value, other.value);
}

#[test]
fn standard_error_scaling() {
    let g = three_graph();
    let mut ratios = Vec::new();
    for rep in 0..10 {
        let a = weight(&g, &cfg(20_000, 100 + rep, Gauge::PinWhites)).unwrap();
        let b = weight(&g, &cfg(40_000, 200 + rep, Gauge::PinWhites)).unwrap();
        ratios.push(b.std_error / a.std_error);
    }
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let target = std::f64::consts::FRAC_1_SQRT_2;
    assert!((mean - target).abs() <= 0.15, "{ratios:?}");
}

#[test]
fn automorphisms() {
    assert_eq!(automorphism_count(&three_graph()), 1);
    assert_eq!(automorphism_count(&Graph::ord(2, 2, &[(0, 2), (0, 3), (1, 2), (1, 3)])), 2);
    assert_eq!(automorphism_count(&Graph::ord(1, 3, &[(0, 1), (0, 2), (0, 3)])), 6);
}

#[test]
fn exotic_residual_small() {
    let terms = exotic_element(3, &cfg(100_000, 1, Gauge::Auto)).unwrap();
    let keys: Vec<&str> = terms.iter().map(|t| t.graph.as_str()).collect();
    assert!(keys.contains(&"c:ord;v:2,0;e:"));
    assert!(keys.contains(&"c:ord;v:1,1;e:(w1,b1)"));
    let r = exotic_mc_residual(&terms, 4).unwrap();
    assert!(r.entries.iter().all(|e| !e.graph.is_empty()));
    assert!(r.max_sigmas() <= 3.0, "{r:?}");
}
