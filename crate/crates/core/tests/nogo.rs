use graphcx::deformation_complexes::gc::k4;
use graphcx::deformation_complexes::{quotient_project, willwacher, ComplexId, Ideal, MacElement};
use graphcx::exact_linalg::{is_coboundary, is_cocycle, quotient_injectivity, block_report};
use graphcx::graph_core::{Budget, GraphVector};

#[test]
fn attach_k4_is_not_a_quotient_coboundary() {
    let w = willwacher(&GraphVector::of(&k4()));
    eprintln!("W(K4) bigrades {:?}, {} terms", w.bigrades(), w.len());
    let x = MacElement::from_def(w.clone());
    assert!(is_cocycle(ComplexId::DefAssGraphs, &x).unwrap());
    assert!(is_cocycle(ComplexId::DefAssGraphsQuot, &x).unwrap());
    let p = quotient_project(&w, Ideal::IbbPrime, (1, 4, 7)).unwrap();
    eprintln!("ideal dim {} rep terms {}", p.ideal_dim, p.representative.len());
    assert!(!p.member);
    assert!(!is_coboundary(ComplexId::DefAssGraphs, &x).unwrap().is_coboundary);
    assert!(!is_coboundary(ComplexId::DefAssGraphsQuot, &x).unwrap().is_coboundary);
}

#[test]
fn injectivity_small() {
    for k in -1..=3 {
        let r = quotient_injectivity(1, k, Budget::default()).unwrap();
        eprintln!("{r:?}");
        assert!(r.injective);
    }
    for k in 0..=3 {
        eprintln!("{:?}", block_report(ComplexId::DefAssGraphs, 1, k, Budget::default()).unwrap());
        eprintln!("{:?}", block_report(ComplexId::DefAssGraphsQuot, 1, k, Budget::default()).unwrap());
    }
}
