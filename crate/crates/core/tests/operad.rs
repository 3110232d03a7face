use graphcx::graph_core::{Graph, GraphVector, Q};
use graphcx::operad_calculus::{compose_raw, insert, pre_lie};
use num::One;
use proptest::prelude::*;

fn raw_insert(hosts: &[Graph], slot: usize, guest: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for h in hosts {
        compose_raw(h, slot, guest, |g| out.push(g)).unwrap();
    }
    out
}

fn collect(raw: &[Graph]) -> GraphVector {
    let mut v = GraphVector::new();
    for g in raw {
        // doubled edges are zero classes
        let _ = v.add_raw(g, &Q::one());
    }
    v
}

fn arb_one(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs: Vec<(u8, u8)> = (0..n as u8).flat_map(|i| (i + 1..n as u8).map(move |j| (i, j))).collect();
        let k = pairs.len();
        proptest::sample::subsequence(pairs, 0..=k)
            .prop_shuffle()
            .prop_map(move |edges| Graph::one(n, &edges))
    })
}

fn arb_two(max_w: usize, max_b: usize) -> impl Strategy<Value = Graph> {
    (1..=max_w, 0..=max_b).prop_flat_map(|(m, n)| {
        let t = (m + n) as u8;
        let pairs: Vec<(u8, u8)> = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).collect();
        let k = pairs.len().min(4);
        proptest::sample::subsequence(pairs, 0..=k)
            .prop_shuffle()
            .prop_map(move |edges| Graph::ord(m, n, &edges))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sequential_associativity_one_colour(a in arb_one(3), b in arb_one(3), c in arb_one(2), i in 0usize..3, j in 0usize..3) {
        let (i, j) = (i % a.n_vertices(), j % b.n_vertices());
        // B's vertex j sits at position |A| - 1 + j in A ∘_i B
        let left = raw_insert(&raw_insert(std::slice::from_ref(&a), i, &b), a.n_vertices() - 1 + j, &c);
        let right = over_guests(&a, i, &raw_insert(std::slice::from_ref(&b), j, &c));
        prop_assert_eq!(collect(&left), collect(&right));
    }

    #[test]
    fn parallel_associativity_one_colour(a in arb_one(3), b in arb_one(2), c in arb_one(2), i in 0usize..3, k in 0usize..3) {
        prop_assume!(a.n_vertices() >= 2);
        let i = i % a.n_vertices();
        let mut k = k % a.n_vertices();
        if k == i { k = (k + 1) % a.n_vertices(); }
        let pos = |v: usize, s: usize| if v < s { v } else { v - 1 };
        let left = raw_insert(&raw_insert(std::slice::from_ref(&a), i, &b), pos(k, i), &c);
        let right = raw_insert(&raw_insert(std::slice::from_ref(&a), k, &c), pos(i, k), &b);
        // odd edges: B and C edge blocks trade places
        let mut right = collect(&right);
        if b.n_edges() * c.n_edges() % 2 == 1 {
            right = right.neg();
        }
        prop_assert_eq!(collect(&left), right);
    }

    #[test]
    fn sequential_associativity_white_slots(a in arb_two(2, 1), b in arb_two(2, 1), c in arb_two(2, 1), i in 0usize..2, j in 0usize..2) {
        let (i, j) = (i % a.m(), j % b.m());
        let left = raw_insert(&raw_insert(std::slice::from_ref(&a), i, &b), i + j, &c);
        let right = over_guests(&a, i, &raw_insert(std::slice::from_ref(&b), j, &c));
        prop_assert_eq!(collect(&left), collect(&right));
    }

    #[test]
    fn pre_lie_associator_is_symmetric(x in arb_one(2), y in arb_one(2), z in arb_one(2)) {
        let v = |g: &Graph| collect(std::slice::from_ref(g));
        let (x, y, z, py, pz) = (v(&x), v(&y), v(&z), y.n_edges(), z.n_edges());
        let assoc = |b: &GraphVector, c: &GraphVector| {
            let l = pre_lie(&pre_lie(&x, b).unwrap(), c).unwrap();
            let r = pre_lie(&x, &pre_lie(b, c).unwrap()).unwrap();
            l.sub(&r).unwrap()
        };
        let mut swapped = assoc(&z, &y);
        if py * pz % 2 == 1 {
            swapped = swapped.neg();
        }
        prop_assert_eq!(assoc(&y, &z), swapped);
    }

    #[test]
    fn insert_matches_raw_terms(a in arb_one(3), b in arb_one(3), i in 0usize..3) {
        let i = i % a.n_vertices();
        prop_assert_eq!(insert(&a, i, &b).unwrap(), collect(&raw_insert(std::slice::from_ref(&a), i, &b)));
    }
}

fn over_guests(host: &Graph, slot: usize, guests: &[Graph]) -> Vec<Graph> {
    guests.iter().flat_map(|g| raw_insert(std::slice::from_ref(host), slot, g)).collect()
}
