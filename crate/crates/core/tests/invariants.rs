//! Cross-module property tests backed by independent oracles: brute-force
//! order comparison, dense-span ideal membership, fraction-free ranks,
//! Hilbert-value consistency of the construction pipeline, and the
//! initial-term/polarization interplay used by the symmetric-algebra basis.

use bigraded::constructions::{
    diagonal_presentation, shift_decompose, strand_module, symmetric_algebra_presentation,
    symmetric_quadratic_basis, DiagonalSpec, ShiftResult,
};
use bigraded::graded::{hilbert_value, GradedModulePresentation};
use bigraded::groebner::{
    buchberger, generic_initial_ideal, initial_ideal, is_groebner_basis, normal_form,
    quadrics_are_stable,
};
use bigraded::linalg::{rank_of_rows, RowEchelon};
use bigraded::resolution::{linearity_test, strand_regularity_bound};
use bigraded::{Bidegree, Monomial, PolyRing, Polynomial, PrimeField, RingPresentation, TermOrder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::sync::Arc;

fn field() -> PrimeField {
    PrimeField::default_field()
}

fn arc_ring(n: usize, m: usize, rels: &[&[(i64, &[(usize, u32)])]]) -> Arc<RingPresentation> {
    let amb = PolyRing::standard_bigraded(n, m, field());
    let rels: Vec<Polynomial> = rels.iter().map(|r| amb.poly(r)).collect();
    Arc::new(RingPresentation::new(amb, rels).unwrap())
}

fn monomials_of_degree(nv: usize, deg: u32) -> Vec<Monomial> {
    fn rec(rem: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(Monomial::from_exps(cur.clone()));
            return;
        }
        for e in 0..=rem {
            cur[pos] = e;
            rec(rem - e, pos + 1, cur, out);
        }
    }
    let mut out = vec![];
    let mut cur = vec![0; nv];
    rec(deg, 0, &mut cur, &mut out);
    out
}

/// Independent revlex oracle: same degree ties are broken by the exponent of
/// the last variable (less of it wins), recursing on the truncated vectors.
fn oracle_revlex(u: &[u32], v: &[u32]) -> Ordering {
    let du: u32 = u.iter().sum();
    let dv: u32 = v.iter().sum();
    match du.cmp(&dv) {
        Ordering::Equal => {}
        o => return o,
    }
    if u.is_empty() {
        return Ordering::Equal;
    }
    let last = u.len() - 1;
    match u[last].cmp(&v[last]) {
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => oracle_revlex(&u[..last], &v[..last]),
    }
}

#[test]
fn order_agrees_with_brute_force_oracle() {
    let order = TermOrder::DegRevLex;
    for deg in 1..=3u32 {
        let ms = monomials_of_degree(3, deg);
        for u in &ms {
            for v in &ms {
                assert_eq!(
                    order.cmp_unchecked(u, v),
                    oracle_revlex(u.exps(), v.exps()),
                    "disagreement on {:?} vs {:?}",
                    u.exps(),
                    v.exps()
                );
            }
        }
    }
    // the frozen value: x2^2 beats x1*x3
    assert_eq!(
        oracle_revlex(&[1, 0, 1], &[0, 2, 0]),
        Ordering::Less,
        "oracle: x1*x3 < x2^2"
    );
}

/// Dense-span membership oracle: f lies in (gens) up to degree deg(f) when f
/// is in the K-span of all monomial multiples m*g with deg(m*g) <= deg(f).
/// Valid for ideals generated in a single degree block where membership of
/// an element of degree e only involves multiples of degree at most e.
fn span_membership(ring: &PolyRing, gens: &[Polynomial], f: &Polynomial) -> bool {
    let Some(fdeg) = f.total_degree() else {
        return true;
    };
    // coordinates: all monomials of total degree <= fdeg
    let mut coords = vec![];
    for d in 0..=fdeg {
        coords.extend(monomials_of_degree(ring.nvars(), d));
    }
    let index: std::collections::HashMap<&Monomial, usize> =
        coords.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_vec = |p: &Polynomial| -> Vec<u64> {
        let mut v = vec![0u64; coords.len()];
        for (m, c) in p.terms() {
            v[index[m]] = *c;
        }
        v
    };
    let mut span = RowEchelon::new(ring.field(), coords.len());
    for g in gens {
        let gdeg = g.total_degree().unwrap();
        for d in 0..=fdeg.saturating_sub(gdeg) {
            for m in monomials_of_degree(ring.nvars(), d) {
                span.insert(to_vec(&ring.mul_term(g, 1, &m)));
            }
        }
    }
    span.contains(&to_vec(f))
}

#[test]
fn normal_form_matches_span_membership_oracle() {
    let cases: Vec<(Arc<RingPresentation>, Vec<&[(i64, &[(usize, u32)])]>)> = vec![
        (arc_ring(2, 0, &[]), vec![&[(1, &[(0, 2)])], &[(1, &[(0, 1), (1, 1)])]]),
        (
            arc_ring(2, 2, &[]),
            vec![
                &[(1, &[(0, 1), (3, 1)]), (-1, &[(1, 1), (2, 1)])],
                &[(1, &[(0, 1), (2, 1)])],
            ],
        ),
        (
            arc_ring(2, 1, &[]),
            vec![&[(1, &[(0, 1), (2, 1)]), (2, &[(1, 1), (2, 1)])]],
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for (ring, gen_spec) in cases {
        let amb = ring.ambient();
        let gens: Vec<Polynomial> = gen_spec.iter().map(|g| amb.poly(g)).collect();
        let gb = buchberger(amb, &gens);
        let mut in_count = 0;
        for _ in 0..60 {
            // random polynomial of degree <= 3
            let mut terms = vec![];
            for d in 0..=3u32 {
                for m in monomials_of_degree(amb.nvars(), d) {
                    if rng.gen_range(0..4) == 0 {
                        terms.push((m, rng.gen_range(-3i64..=3)));
                    }
                }
            }
            let f = amb.polynomial(terms);
            let nf_zero = normal_form(amb, &f, &gb).is_zero();
            let oracle = span_membership(amb, &gens, &f);
            assert_eq!(nf_zero, oracle, "membership disagreement");
            if nf_zero {
                in_count += 1;
            }
            // also check a guaranteed member: f_random reduced by its NF
            let nf = normal_form(amb, &f, &gb);
            let member = amb.sub(&f, &nf);
            assert!(span_membership(amb, &gens, &member));
        }
        // the sample should include nontrivial members thanks to the
        // constructed ones above; count kept for signal only
        let _ = in_count;
    }
}

#[test]
fn buchberger_outputs_are_groebner_and_contain_inputs() {
    let cases: Vec<(Arc<RingPresentation>, Vec<&[(i64, &[(usize, u32)])]>)> = vec![
        (
            arc_ring(2, 2, &[]),
            vec![
                &[(1, &[(0, 1), (3, 1)]), (-1, &[(1, 1), (2, 1)])],
                &[(1, &[(0, 1), (2, 1)])],
            ],
        ),
        (
            arc_ring(3, 0, &[]),
            vec![
                &[(1, &[(0, 1), (1, 1)]), (1, &[(2, 2)])],
                &[(1, &[(0, 1), (2, 1)]), (-1, &[(1, 2)])],
            ],
        ),
    ];
    for (ring, gen_spec) in cases {
        let amb = ring.ambient();
        let gens: Vec<Polynomial> = gen_spec.iter().map(|g| amb.poly(g)).collect();
        let gb = buchberger(amb, &gens);
        assert!(is_groebner_basis(amb, gb.generators()));
        for g in &gens {
            assert!(normal_form(amb, g, &gb).is_zero());
        }
        // reducedness: no term of a generator is divisible by another's LT
        for (i, g) in gb.generators().iter().enumerate() {
            for (j, h) in gb.generators().iter().enumerate() {
                if i == j {
                    continue;
                }
                let lt = h.leading_monomial().unwrap();
                for (m, _) in g.terms() {
                    assert!(!lt.divides(m), "basis is not reduced");
                }
            }
        }
    }
}

#[test]
fn fraction_free_rank_oracle() {
    // Bareiss elimination over the integers vs GF(p) row reduction
    fn bareiss_rank(mat: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<i128>> = mat
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let (rows, cols) = (a.len(), a[0].len());
        let mut rank = 0;
        let mut prev: i128 = 1;
        let mut row = 0;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let Some(p) = (row..rows).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(row, p);
            for r in row + 1..rows {
                for c in col + 1..cols {
                    a[r][c] = (a[r][c] * a[row][col] - a[r][col] * a[row][c]) / prev;
                }
                a[r][col] = 0;
            }
            prev = a[row][col];
            row += 1;
            rank += 1;
        }
        rank
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let mat: Vec<Vec<i64>> = (0..6)
            .map(|_| (0..6).map(|_| rng.gen_range(-4i64..=4)).collect())
            .collect();
        let f = field();
        let rows: Vec<Vec<u64>> = mat
            .iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect();
        assert_eq!(rank_of_rows(f, 6, rows), bareiss_rank(&mat));
    }
}

#[test]
fn hilbert_consistency_on_random_quotients() {
    // five seeded random quotient rings with n+m <= 4: the rank computation
    // on the ambient presentation matches standard-monomial counting
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let shapes = [(1usize, 1usize), (2, 1), (1, 2), (2, 2), (3, 1)];
    for (n, m) in shapes {
        let amb = PolyRing::standard_bigraded(n, m, field());
        // up to two random bihomogeneous relations of small bidegree
        let mut rels: Vec<Polynomial> = vec![];
        for _ in 0..2 {
            let p = rng.gen_range(0..=2u32);
            let q = rng.gen_range(0..=2u32);
            if p + q == 0 {
                continue;
            }
            let monos = amb.monomials_of_bidegree(Bidegree::new(p, q));
            if monos.is_empty() {
                continue;
            }
            let terms: Vec<(Monomial, i64)> = monos
                .iter()
                .map(|mo| (mo.clone(), rng.gen_range(0i64..3)))
                .collect();
            let f = amb.polynomial(terms);
            if !f.is_zero() {
                rels.push(f);
            }
        }
        let free = Arc::new(RingPresentation::new(amb.clone(), vec![]).unwrap());
        let quotient = Arc::new(RingPresentation::new(amb, rels.clone()).unwrap());
        let as_module = GradedModulePresentation::cyclic_quotient(free, &rels).unwrap();
        for total in 0..=6u32 {
            for x in 0..=total {
                let d = Bidegree::new(x, total - x);
                assert_eq!(
                    hilbert_value(&as_module, d).unwrap(),
                    quotient.standard_monomials(d).len(),
                    "({n},{m}) degree {d}"
                );
            }
        }
    }
}

#[test]
fn strand_decomposition_reassembles_the_ring() {
    // every bidegree of R belongs to exactly one canonical strand, and the
    // presented strand reproduces the component dimension
    let rings = [arc_ring(2, 1, &[]), arc_ring(2, 2, &[&[(1, &[(0, 1), (2, 1)])]])];
    for r in rings {
        for (a, b) in [(1u32, 1u32), (2, 1), (1, 2), (2, 3)] {
            let spec = DiagonalSpec::delta(a, b).unwrap();
            let diag = diagonal_presentation(&r, spec).unwrap();
            let rmod = GradedModulePresentation::free(r.clone(), vec![Bidegree::ZERO]);
            for p in 0..=5u32 {
                for q in 0..=(5 - p.min(5)) {
                    let want = r.standard_monomials(Bidegree::new(p, q)).len();
                    // locate the unique strand containing (p,q)
                    let i = if a > 0 && b > 0 {
                        (p / a).min(q / b)
                    } else if a > 0 {
                        p / a
                    } else {
                        q / b
                    };
                    let off = Bidegree::new(p - i * a, q - i * b);
                    assert!(spec.index_set_contains(off), "offset {off} escaped the index set");
                    let bound = i + 1;
                    let strand = strand_module(&diag, &rmod, off, bound, bound).unwrap();
                    let got = hilbert_value(&strand, Bidegree::new(i, 0)).unwrap();
                    assert_eq!(got, want, "ring component ({p},{q}) via strand {off} at {i}");
                }
            }
        }
    }
}

#[test]
fn shift_decompose_matches_component_dimensions() {
    // both sides of the canonical rewrite have the same Hilbert values
    let rings = [
        arc_ring(2, 2, &[]),
        arc_ring(2, 1, &[&[(1, &[(0, 1), (2, 1)])]]),
    ];
    let specs = [
        DiagonalSpec::delta(1, 0).unwrap(),
        DiagonalSpec::delta(0, 1).unwrap(),
        DiagonalSpec::delta(2, 0).unwrap(),
        DiagonalSpec::delta(1, 1).unwrap(),
        DiagonalSpec::delta(2, 3).unwrap(),
        DiagonalSpec::tilde(1, 1).unwrap(),
        DiagonalSpec::tilde(2, 3).unwrap(),
        DiagonalSpec::tilde(2, 0).unwrap(),
    ];
    for r in &rings {
        let dim = |p: i64, q: i64| -> usize {
            if p < 0 || q < 0 {
                0
            } else {
                r.standard_monomials(Bidegree::new(p as u32, q as u32)).len()
            }
        };
        for spec in &specs {
            for off in spec.canonical_offsets(4) {
                for p in 0..=4u32 {
                    for q in 0..=4u32 {
                        let res = shift_decompose(spec, off, p, q).unwrap();
                        // compare components over internal degrees <= 6
                        for i in 0..=6i64 {
                            for j in 0..=6i64 {
                                let (lhs, rhs);
                                match spec.mode {
                                    bigraded::constructions::DiagonalMode::Delta => {
                                        if j > 0 {
                                            continue;
                                        }
                                        lhs = dim(
                                            i * spec.a as i64 + off.x as i64 - p as i64,
                                            i * spec.b as i64 + off.y as i64 - q as i64,
                                        );
                                        rhs = match res {
                                            ShiftResult::Zero => 0,
                                            ShiftResult::Delta { offset, shift } => {
                                                let ii = i - shift as i64;
                                                if ii < 0 {
                                                    0
                                                } else {
                                                    dim(
                                                        ii * spec.a as i64 + offset.x as i64,
                                                        ii * spec.b as i64 + offset.y as i64,
                                                    )
                                                }
                                            }
                                            ShiftResult::Tilde { .. } => unreachable!(),
                                        };
                                    }
                                    bigraded::constructions::DiagonalMode::Tilde => {
                                        lhs = dim(
                                            i * spec.a as i64 + off.x as i64 - p as i64,
                                            j * spec.b as i64 + off.y as i64 - q as i64,
                                        );
                                        rhs = match res {
                                            ShiftResult::Zero => 0,
                                            ShiftResult::Tilde {
                                                offset,
                                                shift_x,
                                                shift_y,
                                            } => {
                                                let ii = i - shift_x as i64;
                                                let jj = j - shift_y as i64;
                                                if ii < 0 || jj < 0 {
                                                    0
                                                } else {
                                                    dim(
                                                        ii * spec.a as i64 + offset.x as i64,
                                                        jj * spec.b as i64 + offset.y as i64,
                                                    )
                                                }
                                            }
                                            ShiftResult::Delta { .. } => unreachable!(),
                                        };
                                    }
                                }
                                assert_eq!(
                                    lhs, rhs,
                                    "spec {spec:?} off {off} twist ({p},{q}) at ({i},{j})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn regularity_bound_worked_examples() {
    let d23 = DiagonalSpec::delta(2, 3).unwrap();
    assert_eq!(
        strand_regularity_bound(&d23, Bidegree::new(1, 0), 4).unwrap(),
        2
    );
    let t23 = DiagonalSpec::tilde(2, 3).unwrap();
    assert_eq!(
        strand_regularity_bound(&t23, Bidegree::new(1, 2), 4).unwrap(),
        2
    );
    // r = 0 gives bound 0 on canonical delta offsets
    assert_eq!(
        strand_regularity_bound(&d23, Bidegree::new(1, 2), 0).unwrap(),
        0
    );
    // swapped two-block case agrees with the symmetric orientation
    let t32 = DiagonalSpec::tilde(3, 2).unwrap();
    assert_eq!(
        strand_regularity_bound(&t32, Bidegree::new(2, 1), 4).unwrap(),
        strand_regularity_bound(&t23, Bidegree::new(1, 2), 4).unwrap()
    );
    assert!(strand_regularity_bound(&d23, Bidegree::new(2, 3), 1).is_err());
}

#[test]
fn tilde_composition_matches_delta() {
    // the (1,1)-diagonal of the two-block subring equals the (a,b)-diagonal,
    // componentwise
    let rings = [arc_ring(2, 1, &[]), arc_ring(2, 2, &[&[(1, &[(0, 1), (2, 1)])]])];
    for r in &rings {
        for (a, b) in [(1u32, 1u32), (2, 1), (2, 3)] {
            let tilde = diagonal_presentation(&r, DiagonalSpec::tilde(a, b).unwrap()).unwrap();
            let inner =
                diagonal_presentation(&tilde.ring, DiagonalSpec::delta(1, 1).unwrap()).unwrap();
            let delta = diagonal_presentation(r, DiagonalSpec::delta(a, b).unwrap()).unwrap();
            let free_inner =
                GradedModulePresentation::free(inner.ring.clone(), vec![Bidegree::ZERO]);
            let free_delta =
                GradedModulePresentation::free(delta.ring.clone(), vec![Bidegree::ZERO]);
            for i in 0..=4u32 {
                assert_eq!(
                    hilbert_value(&free_inner, Bidegree::new(i, 0)).unwrap(),
                    hilbert_value(&free_delta, Bidegree::new(i, 0)).unwrap(),
                    "({a},{b}) at degree {i}"
                );
            }
        }
    }
}

#[test]
fn quadratic_basis_generates_symmetric_algebra_ideal() {
    // the explicit quadratic set and the symmetric-algebra presentation of
    // the maximal ideal define the same ideal (reduced bases coincide)
    for (n, rels) in [
        (2usize, vec![vec![(1i64, vec![(0usize, 2u32)])]]),
        (
            3,
            vec![
                vec![(1, vec![(0, 2)])],
                vec![(1, vec![(0, 1), (1, 1)])],
            ],
        ),
    ] {
        let amb = PolyRing::standard_bigraded(n, 0, field());
        let rels: Vec<Polynomial> = rels
            .iter()
            .map(|terms| {
                amb.polynomial(
                    terms
                        .iter()
                        .map(|(c, vars)| {
                            let mut mo = Monomial::one(n);
                            for &(v, e) in vars {
                                mo = mo.mul(&Monomial::var(n, v, e));
                            }
                            (mo, *c)
                        })
                        .collect(),
                )
            })
            .collect();
        let a = Arc::new(RingPresentation::new(amb.clone(), rels).unwrap());
        let (big, basis) = symmetric_quadratic_basis(&a).unwrap();
        assert!(basis
            .iter()
            .all(|g| g.total_degree() == Some(2) && big.is_bihomogeneous(g)));
        assert!(is_groebner_basis(&big, &basis));

        let maximal = GradedModulePresentation::ideal_module(
            a.clone(),
            &(0..n).map(|v| a.ambient().var_poly(v)).collect::<Vec<_>>(),
            6,
        )
        .unwrap();
        let sym = symmetric_algebra_presentation(&a, &maximal).unwrap();
        let gb1 = buchberger(&big, &basis);
        let gb2 = buchberger(sym.ambient(), sym.relations());
        assert_eq!(gb1.generators(), gb2.generators(), "n = {n}");
    }
}

#[test]
fn initial_terms_respect_depolarization_on_sorted_leads() {
    // for random bihomogeneous combinations over the quadratic symmetric
    // basis whose lead is index-sorted, the y-to-x substitution commutes with
    // taking initial terms and polarization recovers the lead
    let a = arc_ring(3, 0, &[&[(1, &[(0, 2)])], &[(1, &[(0, 1), (1, 1)])]]);
    let (big, basis) = symmetric_quadratic_basis(&a).unwrap();
    let n = 3usize;
    let phi: Vec<Polynomial> = (0..2 * n).map(|v| big.poly(&[(1, &[(v % n, 1)])])).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3403);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 100 && attempts < 4000 {
        attempts += 1;
        // random bihomogeneous combination of fixed bidegree
        let s = rng.gen_range(1..=2u32);
        let t = rng.gen_range(0..=2u32);
        let mut f = Polynomial::zero();
        for g in &basis {
            let gd = big.bidegree_of(g).unwrap();
            let Some(rem) = Bidegree::new(s, t).checked_sub(&gd) else {
                continue;
            };
            for mo in big.monomials_of_bidegree(rem) {
                if rng.gen_range(0..5) == 0 {
                    let c = rng.gen_range(1i64..5);
                    f = big.add(&f, &big.mul_term(g, big.field().from_i64(c), &mo));
                }
            }
        }
        if f.is_zero() {
            continue;
        }
        let lead = f.leading_monomial().unwrap().clone();
        // sorted-lead condition: every x-index <= every y-index
        let max_x = lead.exps()[..n]
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(v, _)| v)
            .max();
        let min_y = lead.exps()[n..]
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(v, _)| v)
            .min();
        if let (Some(mx), Some(my)) = (max_x, min_y) {
            if mx > my {
                continue;
            }
        }
        accepted += 1;
        let t_actual: u32 = lead.exps()[n..].iter().sum();
        let phif = big.substitute(&f, &phi);
        assert!(!phif.is_zero());
        let phi_lead_poly = big.substitute(&big.polynomial(vec![(lead.clone(), 1)]), &phi);
        let phi_lead = phi_lead_poly.leading_monomial().unwrap().clone();
        assert_eq!(
            phif.leading_monomial().unwrap(),
            &phi_lead,
            "initial term does not commute with the substitution"
        );
        let back = big.polarize(&phi_lead_poly, t_actual).unwrap();
        assert_eq!(back.leading_monomial().unwrap(), &lead);
    }
    assert!(accepted >= 100, "only {accepted} sorted leads in {attempts} draws");
}

#[test]
fn two_linear_ideals_have_stable_quadratic_gins() {
    // ideals with a 2-linear resolution certificate straighten to stable
    // quadratic monomial ideals
    let r = arc_ring(3, 0, &[]);
    let amb = r.ambient();
    for gens in [
        vec![amb.poly(&[(1, &[(0, 1), (1, 1)])]), amb.poly(&[(1, &[(0, 1), (2, 1)])])],
        vec![amb.poly(&[(1, &[(0, 1), (1, 1)])])],
    ] {
        let module = GradedModulePresentation::ideal_module(r.clone(), &gens, 6).unwrap();
        let lin = linearity_test(&module, 2, 3).unwrap();
        assert!(lin.linear, "certificate missing: {:?}", lin.witness);
        let gin = generic_initial_ideal(amb, &gens, 5, 424242).unwrap();
        assert!(gin.ideal.generators().iter().all(|m| m.total_degree() == 2));
        assert!(quadrics_are_stable(&gin.ideal).unwrap());
    }
}

#[test]
fn strand_functor_preserves_hilbert_additivity() {
    // short exact sequence: the y-block ideal, the ring, and its quotient
    let r = arc_ring(2, 2, &[&[(1, &[(0, 1), (2, 1)])]]);
    let amb = r.ambient();
    let ny = GradedModulePresentation::ideal_module(
        r.clone(),
        &[amb.var_poly(2), amb.var_poly(3)],
        8,
    )
    .unwrap();
    let rmod = GradedModulePresentation::free(r.clone(), vec![Bidegree::ZERO]);
    let quot =
        GradedModulePresentation::cyclic_quotient(r.clone(), &[amb.var_poly(2), amb.var_poly(3)])
            .unwrap();
    for spec in [DiagonalSpec::delta(1, 1).unwrap(), DiagonalSpec::delta(2, 1).unwrap()] {
        let diag = diagonal_presentation(&r, spec).unwrap();
        for off in spec.canonical_offsets(1) {
            let bound = 3;
            let s_ny = strand_module(&diag, &ny, off, bound, bound).unwrap();
            let s_r = strand_module(&diag, &rmod, off, bound, bound).unwrap();
            let s_q = strand_module(&diag, &quot, off, bound, bound).unwrap();
            for i in 0..=bound {
                let d = Bidegree::new(i, 0);
                assert_eq!(
                    hilbert_value(&s_ny, d).unwrap() + hilbert_value(&s_q, d).unwrap(),
                    hilbert_value(&s_r, d).unwrap(),
                    "spec {spec:?} offset {off} degree {i}"
                );
            }
        }
    }
}

#[test]
fn segre_kernel_vanishes_under_substitution() {
    // the elimination kernel of the two-by-two coincidence ring maps to zero
    // and has the right Hilbert count in low degrees
    let r = arc_ring(2, 2, &[]);
    let diag = diagonal_presentation(&r, DiagonalSpec::delta(1, 1).unwrap()).unwrap();
    let samb = r.ambient();
    for rel in diag.ring.relations() {
        let mut acc = Polynomial::zero();
        for (mono, c) in rel.terms() {
            let mut term = samb.poly(&[(1, &[])]);
            for (v, &e) in mono.exps().iter().enumerate() {
                for _ in 0..e {
                    term = samb.mul(&term, &diag.segment_map[v]);
                }
            }
            acc = samb.add(&acc, &samb.scale(&term, *c));
        }
        assert!(r.reduce(&acc).is_zero());
    }
    // Hilbert count of the quotient in degrees <= 3 matches the source
    let free = GradedModulePresentation::free(diag.ring.clone(), vec![Bidegree::ZERO]);
    for i in 0..=3u32 {
        assert_eq!(
            hilbert_value(&free, Bidegree::new(i, 0)).unwrap(),
            (i as usize + 1) * (i as usize + 1)
        );
    }
}

#[test]
fn gin_is_deterministic_for_a_seed() {
    let r = arc_ring(3, 0, &[]);
    let gens = [
        r.ambient().poly(&[(1, &[(0, 1), (1, 1)])]),
        r.ambient().poly(&[(1, &[(0, 1), (2, 1)])]),
    ];
    let a = generic_initial_ideal(r.ambient(), &gens, 5, 99).unwrap();
    let b = generic_initial_ideal(r.ambient(), &gens, 5, 99).unwrap();
    assert_eq!(a.ideal, b.ideal);
    assert_eq!(a.change, b.change);
    // the recorded change really produces the consensus initial ideal
    let transformed: Vec<Polynomial> = gens
        .iter()
        .map(|g| r.ambient().substitute(g, &a.change))
        .collect();
    let gb = buchberger(r.ambient(), &transformed);
    assert_eq!(initial_ideal(&gb), a.ideal);
}
