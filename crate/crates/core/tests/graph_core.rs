use std::collections::BTreeSet;

use graphcx::graph_core::{enumerate, q, qi, Budget, Colour, Constraints, Graph, GraphVector};
use itertools::Itertools;
use proptest::prelude::*;

/// Brute-force class count: all labelled edge sets, quotient by the full symmetry group.
fn brute_count(colour: Colour, m: usize, n: usize, l: usize, cons: Constraints) -> usize {
    let nv = m + n;
    let pairs: Vec<(usize, usize)> = (0..nv).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = match colour {
        Colour::One => (0..nv).permutations(nv).collect(),
        Colour::Ordered => (m..nv)
            .permutations(n)
            .map(|p| (0..m).chain(p).collect())
            .collect(),
        Colour::Symmetric => (0..m)
            .permutations(m)
            .cartesian_product((m..nv).permutations(n).collect::<Vec<_>>())
            .map(|(a, b)| a.into_iter().chain(b).collect())
            .collect(),
    };
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    let mut count = 0;
    for combo in pairs.iter().copied().combinations(l) {
        if seen.contains(&combo) {
            continue;
        }
        let g = Graph::new(colour, m, n, combo.iter().map(|&(u, v)| (u as u8, v as u8)).collect());
        let mut zero = false;
        for p in &perms {
            let mut img: Vec<(usize, usize)> = combo
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            // parity of the sort of the image
            let mut inv = 0;
            for i in 0..img.len() {
                for j in i + 1..img.len() {
                    if img[i] > img[j] {
                        inv += 1;
                    }
                }
            }
            img.sort();
            if img == combo && inv % 2 == 1 {
                zero = true;
            }
            seen.insert(img);
        }
        if !zero && cons.admits(&g) {
            count += 1;
        }
    }
    count
}

#[test]
fn single_edge_relabels_to_sorted_key() {
    let g = Graph::one(2, &[(1, 0)]);
    let (k, s) = g.canonicalize().unwrap().unwrap();
    assert_eq!(k.edges, vec![(0, 1)]);
    assert_eq!(s, 1);
    assert_eq!(k.key(), "c:one;v:0,2;e:(b1,b2)");
}

#[test]
fn swapped_edges_flip_sign() {
    let a = Graph::ord(3, 0, &[(0, 1), (0, 2)]).canonicalize().unwrap().unwrap();
    let b = Graph::ord(3, 0, &[(0, 2), (0, 1)]).canonicalize().unwrap().unwrap();
    assert_eq!(a.0, b.0);
    assert_eq!(a.1, -b.1);
}

#[test]
fn double_edge_is_zero() {
    assert!(Graph::one(2, &[(0, 1), (0, 1)]).canonicalize().unwrap().is_none());
}

#[test]
fn tadpole_and_range_errors() {
    assert!(Graph::one(2, &[(1, 1)]).canonicalize().is_err());
    assert!(Graph::one(2, &[(0, 2)]).canonicalize().is_err());
}

#[test]
fn path_of_three_is_zero_but_k4_is_not() {
    assert!(Graph::one(3, &[(0, 1), (1, 2)]).canonicalize().unwrap().is_none());
    let k4 = Graph::one(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    assert!(k4.canonicalize().unwrap().is_some());
}

#[test]
fn small_enumerations() {
    let b = Budget::default();
    assert_eq!(enumerate(Colour::One, 0, 2, 1, Constraints::NONE, b).unwrap().len(), 1);
    assert_eq!(enumerate(Colour::One, 0, 2, 2, Constraints::NONE, b).unwrap().len(), 0);
    let k4 = enumerate(Colour::One, 0, 4, 6, Constraints::GC2, b).unwrap();
    assert_eq!(k4.len(), 1);
    assert_eq!(k4[0].n_edges(), 6);
}

#[test]
fn enumeration_matches_brute_force_one_colour() {
    for n in 1..=5 {
        for l in 0..=(n * (n - 1) / 2) {
            for cons in [Constraints::NONE, Constraints::GC2] {
                let fast = enumerate(Colour::One, 0, n, l, cons, Budget::default()).unwrap().len();
                assert_eq!(fast, brute_count(Colour::One, 0, n, l, cons), "n={n} l={l}");
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force_two_colours() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3), (1, 4), (2, 3), (3, 2)] {
        let nv = m + n;
        for l in 0..=(nv * (nv - 1) / 2) {
            for colour in [Colour::Ordered, Colour::Symmetric] {
                for cons in [Constraints::NONE, Constraints::TRIVALENT] {
                    let fast = enumerate(colour, m, n, l, cons, Budget::default()).unwrap().len();
                    assert_eq!(fast, brute_count(colour, m, n, l, cons), "{colour:?} m={m} n={n} l={l}");
                }
            }
        }
    }
}

#[test]
fn enumeration_budget_guard() {
    let b = Budget { max_vertices: 4, ..Budget::default() };
    assert!(enumerate(Colour::One, 0, 5, 3, Constraints::NONE, b).is_err());
}

#[test]
fn vector_arithmetic() {
    let e = GraphVector::of(&Graph::one(2, &[(0, 1)]));
    assert!(e.add(&e.neg()).unwrap().is_zero());
    assert!(e.scale(&qi(0)).is_zero());
    let mut v = e.scale(&q(1, 2));
    v.axpy(&q(1, 3), &e);
    assert_eq!(v.coeff(&Graph::one(2, &[(0, 1)])), q(5, 6));
    let w = GraphVector::of(&Graph::ord(1, 1, &[(0, 1)]));
    assert!(e.add(&w).is_err());
}

#[test]
fn key_and_json_round_trip() {
    let g = Graph::ord(2, 2, &[(0, 2), (1, 2), (2, 3), (0, 3), (1, 3)]);
    let (c, _) = g.canonicalize().unwrap().unwrap();
    assert_eq!(Graph::from_key(&c.key()).unwrap(), c);
    let j = c.to_json(&q(-3, 4));
    let (back, coeff) = Graph::from_json(&j).unwrap();
    assert_eq!(back, c);
    assert_eq!(coeff, q(-3, 4));
}

fn arb_graph() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(u8, u8)> = (0..n as u8).tuple_combinations().collect();
        let np = pairs.len();
        (
            proptest::sample::subsequence(pairs, 0..=np),
            Just(n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_flat_map(|(edges, n, perm)| {
                let l = edges.len();
                (Just(Graph::one(n, &edges)), Just(perm), Just((0..l).collect::<Vec<_>>()).prop_shuffle())
            })
    })
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent((g, _, _) in arb_graph()) {
        if let Some((k, _)) = g.canonicalize().unwrap() {
            let (k2, s2) = k.canonicalize().unwrap().unwrap();
            prop_assert_eq!(k2, k);
            prop_assert_eq!(s2, 1);
        }
    }

    #[test]
    fn sign_equivariance((g, perm, order) in arb_graph()) {
        let relabelled = g.relabel(&perm);
        let reordered = Graph { edges: order.iter().map(|&i| relabelled.edges[i]).collect(), ..relabelled };
        let mut inv = 0;
        for i in 0..order.len() {
            for j in i + 1..order.len() {
                if order[i] > order[j] { inv += 1; }
            }
        }
        let tau = if inv % 2 == 0 { 1 } else { -1 };
        match (g.canonicalize().unwrap(), reordered.canonicalize().unwrap()) {
            (None, None) => {}
            (Some((a, sa)), Some((b, sb))) => {
                prop_assert_eq!(a, b);
                prop_assert_eq!(sb, sa * tau);
            }
            _ => prop_assert!(false, "zero status changed"),
        }
    }
}
