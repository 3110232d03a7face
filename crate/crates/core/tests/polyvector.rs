use graphcx::deformation_complexes::gamma0;
use graphcx::graph_core::{q, Graph};
use graphcx::polyvector_rep::{
    ainf_relation_check, check_operad_morphism, monomial_basis, phi, phi_two, relation_check, twist_by_poisson,
    FormalSeries, Mono, Polyvector, Relation,
};

fn pv(s: &str, d: usize) -> Polyvector {
    Polyvector::parse(s, d).unwrap()
}

fn edge() -> Graph {
    Graph::one(2, &[(0, 1)])
}

#[test]
fn parse_and_display() {
    let p = pv("3/2 x1^2 x3 p2 p4", 4);
    assert_eq!(p.to_string(), "3/2 x1^2 x3 p2 p4");
    assert_eq!(pv("p2 p1", 2), pv("-1 p1 p2", 2));
    assert_eq!(pv("x1 - x1", 1), Polyvector::zero(1));
    assert!(pv("p1 p1", 1).is_zero());
    assert!(Polyvector::parse("x3", 2).is_err());
}

#[test]
fn wedge_of_isolated_vertices() {
    let a = pv("x1 p1", 2);
    let b = pv("p2", 2);
    let r = phi(&Graph::one(2, &[]), &[a, b]).unwrap();
    assert_eq!(r, pv("x1 p1 p2", 2));
}

#[test]
fn schouten_examples() {
    assert_eq!(phi(&edge(), &[pv("x1 p1", 1), pv("x1", 1)]).unwrap(), pv("x1", 1));
    assert_eq!(phi(&edge(), &[pv("p1 p2", 2), pv("x1", 2)]).unwrap(), pv("p2", 2));
}

#[test]
fn black_argument_goes_first() {
    let g = Graph::ord(1, 1, &[(0, 1)]);
    let r = phi_two(&g, &pv("p1 p2", 2), &[pv("x1", 2)]).unwrap();
    assert_eq!(r, pv("p2", 2));
}

#[test]
fn argument_count_checked() {
    assert!(phi(&edge(), &[pv("x1", 1)]).is_err());
}

#[test]
fn morphism_small() {
    for d in 1..=2 {
        for (g1, g2) in [(edge(), edge()), (Graph::one(2, &[]), edge()), (edge(), Graph::one(1, &[]))] {
            for slot in 0..g1.n_vertices() {
                let r = check_operad_morphism(&g1, &g2, slot, d, 2).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
    }
}

fn samples(d: usize, deg: usize) -> Vec<Polyvector> {
    monomial_basis(d, deg).into_iter().map(|m| Polyvector::monomial(d, m, q(1, 1))).collect()
}

#[test]
fn relations_hold() {
    for rel in Relation::ALL {
        for d in 1..=2 {
            let r = relation_check(rel, d, &samples(d, 2)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn jacobi_example() {
    let s = [pv("p1 p2", 2), pv("x1 p1", 2), pv("x2", 2)];
    assert!(relation_check(Relation::Jacobi, 2, &s).unwrap().passed());
}

#[test]
fn twist_gamma0_constant_pi() {
    let pi = pv("p1 p2", 2);
    let t = twist_by_poisson(&gamma0().def, &pi, 2).unwrap();
    let mu1 = t.mu(&[FormalSeries::constant(&pv("x1", 2), 2)]);
    assert!(mu1.coeffs[0].is_zero());
    assert_eq!(mu1.coeffs[1], pv("p2", 2));
    let r = ainf_relation_check(&twist_by_poisson(&gamma0().def, &pi, 3).unwrap(), 3, &samples(2, 2)).unwrap();
    assert!(r.passed(), "{r:?}");
}

#[test]
fn sl2_is_poisson() {
    let pi = pv("2 x2 p1 p2 - 2 x3 p1 p3 + x1 p2 p3", 3);
    assert!(phi(&edge(), &[pi.clone(), pi]).unwrap().is_zero());
}

#[test]
fn monomial_counts() {
    assert_eq!(monomial_basis(3, 2).len(), 25);
    assert_eq!(monomial_basis(3, 3).len(), 63);
    assert_eq!(monomial_basis(1, 0), vec![Mono::ONE]);
}
