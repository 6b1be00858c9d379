use bigraded::constructions::*;
use bigraded::graded::GradedModulePresentation;
use bigraded::resolution::*;
use bigraded::{Bidegree, PrimeField, PolyRing, RingPresentation};
use std::sync::Arc;
use std::time::Instant;

fn ring(n: usize, m: usize, rels: &[&[(i64, &[(usize, u32)])]]) -> Arc<RingPresentation> {
    let amb = PolyRing::standard_bigraded(n, m, PrimeField::default_field());
    let rels: Vec<_> = rels.iter().map(|r| amb.poly(r)).collect();
    Arc::new(RingPresentation::new(amb, rels).unwrap())
}

fn main() {
    let rings: Vec<(&str, Arc<RingPresentation>)> = vec![
        ("S22", ring(2, 2, &[])),
        ("S/(x1y1)", ring(2, 2, &[&[(1, &[(0, 1), (2, 1)])]])),
        ("S/(x1y1,x2y2)", ring(2, 2, &[&[(1, &[(0, 1), (2, 1)])], &[(1, &[(1, 1), (3, 1)])]])),
        ("Segre", ring(2, 2, &[&[(1, &[(0, 1), (3, 1)]), (-1, &[(1, 1), (2, 1)])]])),
    ];
    for (name, r) in &rings {
        for (a, b, tilde) in [(2u32, 3u32, false), (2, 3, true), (2, 2, false)] {
            let spec = if tilde { DiagonalSpec::tilde(a, b).unwrap() } else { DiagonalSpec::delta(a, b).unwrap() };
            let t = Instant::now();
            let diag = diagonal_presentation(r, spec).unwrap();
            let deg = diag.ring.groebner_basis().max_degree();
            println!("{name} ({a},{b},tilde={tilde}): {} rels, gbdeg {deg}, {:?}", diag.ring.relations().len(), t.elapsed());
        }
    }
    // criterion 7: K over S(m) for A = K[x1,x2]/(x1^2,x2^2)
    let a = ring(2, 0, &[&[(1, &[(0, 2)])], &[(1, &[(1, 2)])]]);
    let amb = a.ambient();
    let m = GradedModulePresentation::ideal_module(a.clone(), &[amb.poly(&[(1, &[(0, 1)])]), amb.poly(&[(1, &[(1, 1)])])], 6).unwrap();
    let sym = symmetric_algebra_presentation(&a, &m).unwrap();
    let t = Instant::now();
    let verdict = koszul_test(&sym, 4).unwrap();
    println!("S(m) verdict {verdict:?} in {:?}", t.elapsed());
}
