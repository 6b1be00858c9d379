//! Buchberger's algorithm, normal forms, initial ideals, elimination and
//! randomized generic initial ideals.

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::rank_of_rows;
use crate::monomial::{Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    generators: Vec<Polynomial>,
    order: TermOrder,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn max_degree(&self) -> u32 {
        self.generators
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Wrap externally obtained generators; callers must know they form a
    /// (reduced) basis for the claimed order.
    pub fn from_parts(generators: Vec<Polynomial>, order: TermOrder, reduced: bool) -> Self {
        GroebnerBasis {
            generators,
            order,
            reduced,
        }
    }
}

/// Fully reduce `f` against the basis: no term of the result is divisible by
/// any leading monomial.
pub fn normal_form(ring: &PolyRing, f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    reduce_against(ring, f, gb.generators())
}

fn reduce_against(ring: &PolyRing, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut work = f.clone();
    let mut out: Vec<(Monomial, u64)> = vec![];
    'outer: while let Some((lm, lc)) = work.terms().first().cloned() {
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let glm = g.leading_monomial().unwrap();
            if glm.divides(&lm) {
                let quot = glm.div_into(&lm);
                let c = ring.field().div(lc, g.leading_coeff().unwrap());
                work = ring.sub_mul_term(&work, c, &quot, g);
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the output
        out.push((lm.clone(), lc));
        work = Polynomial::from_sorted(work.terms()[1..].to_vec());
    }
    Polynomial::from_sorted(out)
}

fn s_polynomial(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let lf = f.leading_monomial().unwrap();
    let lg = g.leading_monomial().unwrap();
    let lcm = lf.lcm(lg);
    let a = ring.mul_term(f, ring.field().inv(f.leading_coeff().unwrap()), &lf.div_into(&lcm));
    let b = ring.mul_term(g, ring.field().inv(g.leading_coeff().unwrap()), &lg.div_into(&lcm));
    ring.sub(&a, &b)
}

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's
/// active order. S-pairs are processed by ascending lcm degree with ties
/// broken by the order on lcms; the product and chain criteria prune pairs.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.monic(&ring.renormalize(g)))
        .collect();

    let mut pairs: Vec<(usize, usize, Monomial)> = vec![];
    for i in 0..basis.len() {
        for j in 0..i {
            let lcm = basis[i]
                .leading_monomial()
                .unwrap()
                .lcm(basis[j].leading_monomial().unwrap());
            pairs.push((j, i, lcm));
        }
    }

    let pair_cmp = |ring: &PolyRing, a: &Monomial, b: &Monomial| -> Ordering {
        match a.total_degree().cmp(&b.total_degree()) {
            Ordering::Equal => ring.order().cmp_unchecked(a, b),
            o => o,
        }
    };

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            if pair_cmp(ring, &pairs[k].2, &pairs[best].2) == Ordering::Less {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        let (fi, fj) = (&basis[i], &basis[j]);
        let (li, lj) = (
            fi.leading_monomial().unwrap(),
            fj.leading_monomial().unwrap(),
        );
        // product criterion
        if li.coprime(lj) {
            continue;
        }
        // chain criterion: a third element strictly dividing the lcm whose
        // pairs with i and j are both gone
        let chain = basis.iter().enumerate().any(|(k, gk)| {
            if k == i || k == j || gk.is_zero() {
                return false;
            }
            let lk = gk.leading_monomial().unwrap();
            lk.divides(&lcm)
                && lk.lcm(li) != lcm
                && lk.lcm(lj) != lcm
                && !pairs.iter().any(|(a, b, _)| {
                    (*a == i.min(k) && *b == i.max(k)) || (*a == j.min(k) && *b == j.max(k))
                })
        });
        if chain {
            continue;
        }
        let s = s_polynomial(ring, fi, fj);
        let r = reduce_against(ring, &s, &basis);
        if !r.is_zero() {
            let r = ring.monic(&r);
            let lr = r.leading_monomial().unwrap().clone();
            basis.push(r);
            let newi = basis.len() - 1;
            for k in 0..newi {
                if !basis[k].is_zero() {
                    let lcm = basis[k].leading_monomial().unwrap().lcm(&lr);
                    pairs.push((k, newi, lcm));
                }
            }
        }
    }

    // minimalize: drop generators whose leading monomial is divisible by
    // another generator's leading monomial
    let lts: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] && lts[j].divides(&lts[i]) && (lts[j] != lts[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(&keep)
        .filter_map(|(g, &k)| k.then_some(g))
        .collect();

    // interreduce tails
    let mut reduced: Vec<Polynomial> = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<Polynomial> = reduced
            .iter()
            .enumerate()
            .filter_map(|(j, g)| (j != i).then(|| g.clone()))
            .collect();
        reduced[i] = ring.monic(&reduce_against(ring, &reduced[i], &others));
    }
    reduced.retain(|g| !g.is_zero());
    reduced.sort_by(|a, b| {
        ring.order()
            .cmp_unchecked(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });

    GroebnerBasis {
        generators: reduced,
        order: ring.order(),
        reduced: true,
    }
}

/// Buchberger's criterion: every S-pair reduces to zero against the set.
pub fn is_groebner_basis(ring: &PolyRing, gens: &[Polynomial]) -> bool {
    let basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| ring.renormalize(g))
        .collect();
    for i in 0..basis.len() {
        for j in 0..i {
            let li = basis[i].leading_monomial().unwrap();
            let lj = basis[j].leading_monomial().unwrap();
            if li.coprime(lj) {
                continue;
            }
            let s = s_polynomial(ring, &basis[i], &basis[j]);
            if !reduce_against(ring, &s, &basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// A monomial ideal stored by its minimal (antichain) generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(|a, b| {
            a.total_degree()
                .cmp(&b.total_degree())
                .then(TermOrder::DegRevLex.cmp_unchecked(b, a))
        });
        gens.dedup();
        let mut minimal: Vec<Monomial> = vec![];
        for m in gens {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        MonomialIdeal { gens: minimal }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Minimal monomial generators of the initial ideal of a reduced basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(
        gb.generators()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect(),
    )
}

/// Intersect a Groebner basis with the subring on the trailing variables,
/// assuming the active order eliminates the leading `discard` block. The
/// result is a Groebner basis of the elimination ideal (still expressed in
/// the full ring).
pub fn eliminate(ring: &PolyRing, gb: &GroebnerBasis, discard: usize) -> Result<Vec<Polynomial>> {
    if !ring.order().eliminates(discard) {
        return Err(Error::BadOrder(discard));
    }
    Ok(gb
        .generators()
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|(m, _)| m.exps()[..discard].iter().all(|&e| e == 0))
        })
        .cloned()
        .collect())
}

/// Rebuild polynomials supported on the last `ring.nvars() - discard`
/// variables inside the restricted ring (degrevlex).
pub fn restrict_to_tail(
    ring: &PolyRing,
    polys: &[Polynomial],
    discard: usize,
) -> (PolyRing, Vec<Polynomial>) {
    let sub = PolyRing::new(
        ring.var_names()[discard..].to_vec(),
        ring.var_degrees()[discard..].to_vec(),
        ring.field(),
        TermOrder::DegRevLex,
    );
    let mapped = polys
        .iter()
        .map(|p| {
            sub.polynomial(
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        debug_assert!(m.exps()[..discard].iter().all(|&e| e == 0));
                        (Monomial::from_exps(m.exps()[discard..].to_vec()), *c as i64)
                    })
                    .collect(),
            )
        })
        .collect();
    (sub, mapped)
}

/// Outcome of a stabilized generic-initial-ideal computation.
#[derive(Debug, Clone)]
pub struct GinOutcome {
    pub ideal: MonomialIdeal,
    /// Images of the x-variables under the recorded coordinate change
    /// (trial 0), for replaying the transformation.
    pub change: Vec<Polynomial>,
    pub seed: u64,
    pub trials: usize,
}

fn random_invertible_change(ring: &PolyRing, nx: usize, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let p = ring.field().modulus();
    loop {
        let mat: Vec<Vec<u64>> = (0..nx)
            .map(|_| (0..nx).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if rank_of_rows(ring.field(), nx, mat.iter().cloned()) == nx {
            let mut images: Vec<Polynomial> = (0..nx)
                .map(|i| {
                    ring.polynomial(
                        (0..nx)
                            .map(|j| (Monomial::var(ring.nvars(), j, 1), mat[i][j] as i64))
                            .collect(),
                    )
                })
                .collect();
            for v in nx..ring.nvars() {
                images.push(ring.var_poly(v));
            }
            return images;
        }
    }
}

/// Generic initial ideal by randomized dense coordinate changes of the
/// x-block. All `trials` runs must agree, otherwise `Unstable` is returned.
pub fn generic_initial_ideal(
    ring: &PolyRing,
    gens: &[Polynomial],
    trials: usize,
    seed: u64,
) -> Result<GinOutcome> {
    if trials < 2 {
        return Err(Error::InvalidInput("gin needs at least 2 trials".into()));
    }
    let (nx, _) = ring
        .standard_split()
        .ok_or_else(|| Error::InvalidInput("gin needs a standard bigraded ring".into()))?;
    for g in gens {
        let d = ring.bidegree_of(g)?;
        if d.y != 0 {
            return Err(Error::InvalidInput(
                "gin only applies to ideals in the x-block".into(),
            ));
        }
    }

    let runs: Vec<(MonomialIdeal, Vec<Polynomial>)> = exec::map_indexed(trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let change = random_invertible_change(ring, nx, &mut rng);
        let transformed: Vec<Polynomial> =
            gens.iter().map(|g| ring.substitute(g, &change)).collect();
        let gb = buchberger(ring, &transformed);
        (initial_ideal(&gb), change)
    });

    let first = runs[0].0.clone();
    if runs.iter().any(|(ideal, _)| *ideal != first) {
        return Err(Error::Unstable { trials, seed });
    }
    Ok(GinOutcome {
        ideal: first,
        change: runs.into_iter().next().unwrap().1,
        seed,
        trials,
    })
}

/// Stability of a set of monomial quadrics: whenever x_i*x_j (i <= j) lies in
/// the ideal, so does x_i*x_k for every k < j.
pub fn quadrics_are_stable(ideal: &MonomialIdeal) -> Result<bool> {
    let mut pairs = vec![];
    for g in ideal.generators() {
        if g.total_degree() != 2 {
            return Err(Error::NotQuadratic(format!("{:?}", g.exps())));
        }
        let mut idx = vec![];
        for (v, &e) in g.exps().iter().enumerate() {
            for _ in 0..e {
                idx.push(v);
            }
        }
        pairs.push((idx[0], idx[1], g.nvars()));
    }
    for &(i, j, nv) in &pairs {
        for k in 0..j {
            let mut exps = vec![0u32; nv];
            exps[i] += 1;
            exps[k] += 1;
            if !ideal.contains(&Monomial::from_exps(exps)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
