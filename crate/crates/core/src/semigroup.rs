//! Standard bigraded affine semigroups: grading validation, divisor posets,
//! boundary complexes of open intervals, reduced simplicial homology over
//! GF(p), Cohen-Macaulayness scans, semigroup diagonals and toric
//! presentations.

use crate::error::{Error, Result};
use crate::exec;
use crate::field::PrimeField;
use crate::groebner::{buchberger, eliminate, restrict_to_tail};
use crate::linalg::rank_of_rows;
use crate::monomial::{Bidegree, Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingPresentation};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// A finitely generated subsemigroup of N^d whose generators carry bidegree
/// (1,0) (x-block) or (0,1) (y-block).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSemigroup {
    pub ambient_dim: usize,
    pub x_generators: Vec<Vec<u32>>,
    pub y_generators: Vec<Vec<u32>>,
}

pub type Members = BTreeMap<Vec<u32>, Bidegree>;

impl AffineSemigroup {
    pub fn new(
        ambient_dim: usize,
        x_generators: Vec<Vec<u32>>,
        y_generators: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for g in x_generators.iter().chain(&y_generators) {
            if g.len() != ambient_dim {
                return Err(Error::InvalidInput(format!(
                    "generator {g:?} does not live in dimension {ambient_dim}"
                )));
            }
            if g.iter().all(|&c| c == 0) {
                return Err(Error::InvalidInput("zero generator".into()));
            }
            if !seen.insert(g.clone()) {
                return Err(Error::InvalidInput(format!("duplicate generator {g:?}")));
            }
        }
        Ok(AffineSemigroup {
            ambient_dim,
            x_generators,
            y_generators,
        })
    }

    /// All sums of at most `max_total` generators with their bidegrees.
    /// Since every generator has bidegree total 1, this is exactly the set of
    /// elements of bidegree total at most `max_total`. Fails with a witness
    /// when one vector arises with two distinct bidegrees.
    fn scan(&self, max_total: u32) -> Result<Members> {
        let mut table: Members = BTreeMap::new();
        table.insert(vec![0; self.ambient_dim], Bidegree::ZERO);
        let mut level: Vec<Vec<u32>> = vec![vec![0; self.ambient_dim]];
        for _ in 0..max_total {
            let mut next: Vec<Vec<u32>> = vec![];
            for v in &level {
                let vdeg = table[v];
                let gens = self
                    .x_generators
                    .iter()
                    .map(|g| (g, Bidegree::new(1, 0)))
                    .chain(self.y_generators.iter().map(|g| (g, Bidegree::new(0, 1))));
                for (g, gdeg) in gens {
                    let sum: Vec<u32> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                    let deg = vdeg.add(&gdeg);
                    match table.get(&sum) {
                        None => {
                            table.insert(sum.clone(), deg);
                            next.push(sum);
                        }
                        Some(&existing) if existing == deg => {}
                        Some(&existing) => {
                            return Err(Error::GradingConflict {
                                vector: sum,
                                first: existing,
                                second: deg,
                            });
                        }
                    }
                }
            }
            next.sort();
            next.dedup();
            level = next;
        }
        Ok(table)
    }

    /// Check well-definedness of the bigrading on all sums of at most
    /// `bound` generators.
    pub fn validate(&self, bound: u32) -> Result<()> {
        self.scan(bound).map(|_| ())
    }

    /// Elements with bidegree componentwise at most `deg_bound`.
    pub fn members_up_to(&self, deg_bound: Bidegree) -> Result<Members> {
        let table = self.scan(deg_bound.total())?;
        Ok(table
            .into_iter()
            .filter(|(_, d)| d.le(&deg_bound))
            .collect())
    }
}

/// The divisor order on a set of semigroup elements: mu <= lambda when the
/// difference lies in the semigroup. Poset axioms are asserted on
/// construction.
#[derive(Debug, Clone)]
pub struct DivisorPoset {
    pub elements: Vec<Vec<u32>>,
    pub leq: Vec<Vec<bool>>,
}

impl DivisorPoset {
    pub fn new(elements: Vec<Vec<u32>>, members: &Members) -> Self {
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = divides(&elements[i], &elements[j], members);
            }
        }
        for i in 0..n {
            assert!(leq[i][i], "divisor order must be reflexive");
            for j in 0..n {
                if i != j {
                    assert!(
                        !(leq[i][j] && leq[j][i]),
                        "divisor order must be antisymmetric"
                    );
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] {
                        assert!(leq[i][k], "divisor order must be transitive");
                    }
                }
            }
        }
        DivisorPoset { elements, leq }
    }
}

fn divides(mu: &[u32], lambda: &[u32], members: &Members) -> bool {
    let mut diff = Vec::with_capacity(mu.len());
    for (a, b) in lambda.iter().zip(mu) {
        if a < b {
            return false;
        }
        diff.push(a - b);
    }
    members.contains_key(&diff)
}

/// A finite simplicial complex on indexed vertices; faces are stored as
/// sorted index lists and include the empty face whenever the complex is
/// nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertex_count: usize,
    pub faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// The complex {∅} (no vertices, one empty face).
    pub fn irrelevant() -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(vec![]);
        SimplicialComplex {
            vertex_count: 0,
            faces,
        }
    }

    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Self {
        let mut faces = BTreeSet::new();
        faces.insert(vec![]);
        for f in facets {
            let mut sorted = f.clone();
            sorted.sort_unstable();
            sorted.dedup();
            let k = sorted.len();
            for mask in 0u64..(1 << k) {
                let sub: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| sorted[b]).collect();
                faces.insert(sub);
            }
        }
        SimplicialComplex {
            vertex_count,
            faces,
        }
    }

    /// Top face dimension; the complex {∅} has dimension -1 and the void
    /// complex `None`.
    pub fn dim(&self) -> Option<i32> {
        self.faces.iter().map(|f| f.len() as i32 - 1).max()
    }

    pub fn euler_characteristic_reduced(&self) -> i64 {
        // alternating sum over all faces including the empty one
        self.faces
            .iter()
            .map(|f| if f.len() % 2 == 0 { -1i64 } else { 1 })
            .sum()
    }

    /// The link of a face: all faces disjoint from it whose union with it is
    /// a face.
    pub fn link(&self, sigma: &[usize]) -> SimplicialComplex {
        let sset: BTreeSet<usize> = sigma.iter().copied().collect();
        let mut faces = BTreeSet::new();
        for f in &self.faces {
            if f.iter().any(|v| sset.contains(v)) {
                continue;
            }
            let mut union: Vec<usize> = f.iter().copied().chain(sigma.iter().copied()).collect();
            union.sort_unstable();
            if self.faces.contains(&union) {
                faces.insert(f.clone());
            }
        }
        SimplicialComplex {
            vertex_count: self.vertex_count,
            faces,
        }
    }
}

/// Dimensions of reduced homology over GF(p), indexed from -1: the returned
/// vector is [H_{-1}, H_0, ..., H_dim]. The void complex returns an empty
/// vector.
pub fn reduced_homology(complex: &SimplicialComplex, field: PrimeField) -> Vec<usize> {
    let Some(dim) = complex.dim() else {
        return vec![];
    };
    // faces by dimension, deterministically ordered
    let mut by_dim: Vec<Vec<&Vec<usize>>> = vec![vec![]; (dim + 2) as usize];
    for f in &complex.faces {
        by_dim[f.len()].push(f);
    }
    // boundary ranks: rank_k = rank of d_k : C_k -> C_{k-1} for k = 0..=dim
    // (chain index shifted: by_dim[k] holds faces with k vertices, i.e.
    // dimension k-1)
    let mut ranks = vec![0usize; (dim + 3) as usize];
    for k in 1..=(dim + 1) as usize {
        let target: BTreeMap<&Vec<usize>, usize> = by_dim[k - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i))
            .collect();
        let rows: Vec<Vec<u64>> = by_dim[k]
            .iter()
            .map(|f| {
                let mut row = vec![0u64; target.len()];
                for omit in 0..k {
                    let sub: Vec<usize> = f
                        .iter()
                        .enumerate()
                        .filter(|(pos, _)| *pos != omit)
                        .map(|(_, v)| *v)
                        .collect();
                    let col = target[&sub];
                    let sign = if omit % 2 == 0 { 1 } else { field.modulus() - 1 };
                    row[col] = field.add(row[col], sign);
                }
                row
            })
            .collect();
        ranks[k] = rank_of_rows(field, target.len(), rows);
    }
    let mut out = vec![];
    for k in 0..=(dim + 1) as usize {
        let dim_ck = by_dim[k].len();
        let h = dim_ck - ranks[k] - ranks[k + 1];
        out.push(h);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub is_cm: bool,
    /// first failing (face, homological index) under Reisner's criterion
    pub witness: Option<(Vec<usize>, i32)>,
}

/// Reisner's criterion over GF(p): every link (including the whole complex)
/// has reduced homology only in its top dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: PrimeField) -> CmVerdict {
    for sigma in &complex.faces {
        let link = complex.link(sigma);
        let Some(ldim) = link.dim() else { continue };
        let h = reduced_homology(&link, field);
        for (pos, &dimh) in h.iter().enumerate() {
            let i = pos as i32 - 1;
            if i < ldim && dimh != 0 {
                return CmVerdict {
                    is_cm: false,
                    witness: Some((sigma.clone(), i)),
                };
            }
        }
    }
    CmVerdict {
        is_cm: true,
        witness: None,
    }
}

/// The boundary complex of the open interval (0, lambda): vertices are the
/// strictly intermediate divisors, faces the chains of the divisor order.
pub fn interval_complex(semigroup: &AffineSemigroup, lambda: &[u32]) -> Result<SimplicialComplex> {
    let coord_sum: u32 = lambda.iter().sum();
    let members = semigroup.scan(coord_sum)?;
    interval_complex_with(&members, lambda)
}

pub fn interval_complex_with(members: &Members, lambda: &[u32]) -> Result<SimplicialComplex> {
    if !members.contains_key(lambda) {
        return Err(Error::NotMember(lambda.to_vec()));
    }
    let zero = vec![0u32; lambda.len()];
    let vertices: Vec<Vec<u32>> = members
        .keys()
        .filter(|v| {
            **v != zero && v.as_slice() != lambda && divides(v, &lambda.to_vec(), members)
        })
        .cloned()
        .collect();
    if vertices.is_empty() {
        return Ok(SimplicialComplex::irrelevant());
    }
    let poset = DivisorPoset::new(vertices, members);
    let n = poset.elements.len();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    // depth-first chain enumeration; elements are sorted, and comparability
    // implies a strict bidegree increase, so chains go up in index order
    fn extend(
        chain: &mut Vec<usize>,
        start: usize,
        n: usize,
        leq: &[Vec<bool>],
        faces: &mut BTreeSet<Vec<usize>>,
    ) {
        faces.insert(chain.clone());
        for next in start..n {
            let ok = chain.iter().all(|&c| leq[c][next] || leq[next][c]);
            if ok {
                chain.push(next);
                extend(chain, next + 1, n, leq, faces);
                chain.pop();
            }
        }
    }
    let mut chain = vec![];
    extend(&mut chain, 0, n, &poset.leq, &mut faces);
    Ok(SimplicialComplex {
        vertex_count: n,
        faces,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CmSummary {
    AllCm,
    NonCm {
        element: Vec<u32>,
        witness: Option<(Vec<usize>, i32)>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct CmReport {
    pub modulus: u64,
    pub verdicts: Vec<(Vec<u32>, CmVerdict)>,
    pub summary: CmSummary,
}

/// Run the interval/Reisner test for every nonzero element with bidegree at
/// most `deg_bound`. Intervals are independent and scan in parallel.
pub fn cm_scan(
    semigroup: &AffineSemigroup,
    deg_bound: Bidegree,
    field: PrimeField,
) -> Result<CmReport> {
    let members = semigroup.members_up_to(deg_bound)?;
    // membership tests need divisors of scanned elements, all of which have
    // bidegree <= deg_bound, so the same table is closed under the tests
    let zero = vec![0u32; semigroup.ambient_dim];
    let lambdas: Vec<Vec<u32>> = members.keys().filter(|v| **v != zero).cloned().collect();
    let verdicts: Vec<(Vec<u32>, CmVerdict)> = exec::map_slice(&lambdas, |lambda| {
        let complex = interval_complex_with(&members, lambda).expect("member by construction");
        (lambda.clone(), is_cohen_macaulay(&complex, field))
    });
    let summary = verdicts
        .iter()
        .find(|(_, v)| !v.is_cm)
        .map(|(l, v)| CmSummary::NonCm {
            element: l.clone(),
            witness: v.witness.clone(),
        })
        .unwrap_or(CmSummary::AllCm);
    Ok(CmReport {
        modulus: field.modulus(),
        verdicts,
        summary,
    })
}

/// The diagonal semigroup: all elements of bidegree (a,b) as new degree-(1,0)
/// generators (mode Delta), or the (a,0)- and (0,b)-elements as the two new
/// blocks (mode Tilde).
pub fn semigroup_diagonal(
    semigroup: &AffineSemigroup,
    spec: &crate::constructions::DiagonalSpec,
) -> Result<AffineSemigroup> {
    use crate::constructions::DiagonalMode;
    let table = semigroup.scan(spec.a + spec.b)?;
    let of_degree = |d: Bidegree| -> Vec<Vec<u32>> {
        table
            .iter()
            .filter(|(_, deg)| **deg == d)
            .map(|(v, _)| v.clone())
            .collect()
    };
    let (xg, yg) = match spec.mode {
        DiagonalMode::Delta => (of_degree(Bidegree::new(spec.a, spec.b)), vec![]),
        DiagonalMode::Tilde => {
            let xs = if spec.a >= 1 {
                of_degree(Bidegree::new(spec.a, 0))
            } else {
                vec![]
            };
            let ys = if spec.b >= 1 {
                of_degree(Bidegree::new(0, spec.b))
            } else {
                vec![]
            };
            (xs, ys)
        }
    };
    if xg.is_empty() && yg.is_empty() {
        return Err(Error::EmptyDiagonal);
    }
    AffineSemigroup::new(semigroup.ambient_dim, xg, yg)
}

/// The toric presentation of the semigroup ring: one variable per generator,
/// kernel of the monomial map by elimination of the ambient lattice
/// variables.
pub fn toric_presentation(
    semigroup: &AffineSemigroup,
    field: PrimeField,
) -> Result<Arc<RingPresentation>> {
    let d = semigroup.ambient_dim;
    let n = semigroup.x_generators.len();
    let m = semigroup.y_generators.len();
    let total = d + n + m;
    let mut names: Vec<String> = (1..=d).map(|i| format!("t{i}")).collect();
    let mut degs = vec![Bidegree::ZERO; d];
    for i in 1..=n {
        names.push(format!("z{i}"));
        degs.push(Bidegree::new(1, 0));
    }
    for j in 1..=m {
        names.push(format!("w{j}"));
        degs.push(Bidegree::new(0, 1));
    }
    let big = PolyRing::new(names, degs, field, TermOrder::Elim { block: d });
    let mut gens = vec![];
    for (k, g) in semigroup
        .x_generators
        .iter()
        .chain(&semigroup.y_generators)
        .enumerate()
    {
        let mut exps = vec![0u32; total];
        exps[..d].copy_from_slice(g);
        let tmono = Monomial::from_exps(exps);
        let zvar = big.poly(&[(1, &[(d + k, 1)])]);
        gens.push(big.sub(&zvar, &big.polynomial(vec![(tmono, 1)])));
    }
    let gb = buchberger(&big, &gens);
    let kept = eliminate(&big, &gb, d)?;
    let (sub, polys) = restrict_to_tail(&big, &kept, d);
    let amb = PolyRing::standard_bigraded(n, m, field);
    let rels: Vec<Polynomial> = polys
        .iter()
        .map(|p| amb.renormalize(&sub.renormalize(p)))
        .collect();
    Ok(Arc::new(RingPresentation::new(amb, rels)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::DiagonalSpec;

    fn f() -> PrimeField {
        PrimeField::default_field()
    }

    fn numeric(gens: &[u32]) -> AffineSemigroup {
        AffineSemigroup::new(1, gens.iter().map(|&g| vec![g]).collect(), vec![]).unwrap()
    }

    #[test]
    fn free_numeric_semigroup_validates() {
        assert!(numeric(&[1]).validate(5).is_ok());
    }

    #[test]
    fn grading_conflict_on_345() {
        // the scan surfaces the smallest clash: 3+3+3 = 4+5 = 9 with
        // lengths 3 vs 2 (12 = 3+3+3+3 = 4+4+4 clashes too, later)
        let s = numeric(&[3, 4, 5]);
        match s.validate(4) {
            Err(Error::GradingConflict { vector, first, second }) => {
                assert_eq!(vector, vec![9]);
                let degs = [first, second];
                assert!(degs.contains(&Bidegree::new(3, 0)));
                assert!(degs.contains(&Bidegree::new(2, 0)));
            }
            other => panic!("expected a grading conflict, got {other:?}"),
        }
    }

    fn quadric_cone() -> AffineSemigroup {
        AffineSemigroup::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 2]], vec![]).unwrap()
    }

    fn rational_quartic() -> AffineSemigroup {
        AffineSemigroup::new(
            2,
            vec![vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn quadric_cone_validates_and_counts() {
        let s = quadric_cone();
        assert!(s.validate(5).is_ok());
        let members = s.members_up_to(Bidegree::new(2, 0)).unwrap();
        let deg2: Vec<_> = members
            .iter()
            .filter(|(_, d)| **d == Bidegree::new(2, 0))
            .collect();
        assert_eq!(deg2.len(), 5);
    }

    #[test]
    fn quartic_degree_two_coincidence() {
        let s = rational_quartic();
        let members = s.members_up_to(Bidegree::new(2, 0)).unwrap();
        let deg2: Vec<_> = members
            .iter()
            .filter(|(_, d)| **d == Bidegree::new(2, 0))
            .collect();
        // 10 pair-sums with exactly one coincidence (4,4)
        assert_eq!(deg2.len(), 9);
    }

    #[test]
    fn interval_of_chain_semigroup() {
        let s = numeric(&[1]);
        let c = interval_complex(&s, &[3]).unwrap();
        // vertices {1, 2}, one edge: contractible
        assert_eq!(c.vertex_count, 2);
        assert!(c.faces.contains(&vec![0, 1]));
        let h = reduced_homology(&c, f());
        assert!(h.iter().all(|&d| d == 0));
    }

    #[test]
    fn degenerate_interval_is_irrelevant_complex() {
        let s = numeric(&[1]);
        let c = interval_complex(&s, &[1]).unwrap();
        assert_eq!(c, SimplicialComplex::irrelevant());
        let h = reduced_homology(&c, f());
        assert_eq!(h, vec![1]); // H_{-1} = 1 for {∅}
        // declared CM by convention
        assert!(is_cohen_macaulay(&c, f()).is_cm);
    }

    #[test]
    fn interval_of_quadric_cone_at_22() {
        // three incomparable vertices
        let s = quadric_cone();
        let c = interval_complex(&s, &[2, 2]).unwrap();
        assert_eq!(c.vertex_count, 3);
        assert!(c.faces.iter().all(|fc| fc.len() <= 1));
        let h = reduced_homology(&c, f());
        assert_eq!(h[1], 2); // three points: reduced H_0 has rank 2
    }

    #[test]
    fn nonmember_rejected() {
        let s = numeric(&[2]);
        assert!(matches!(
            interval_complex(&s, &[3]),
            Err(Error::NotMember(_))
        ));
    }

    #[test]
    fn homology_of_small_complexes() {
        // single point
        let pt = SimplicialComplex::from_facets(1, &[vec![0]]);
        assert!(reduced_homology(&pt, f()).iter().all(|&d| d == 0));
        // two points
        let two = SimplicialComplex::from_facets(2, &[vec![0], vec![1]]);
        assert_eq!(reduced_homology(&two, f()), vec![0, 1]);
        // hollow triangle
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(reduced_homology(&tri, f()), vec![0, 0, 1]);
        // full simplex
        let full = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]);
        assert!(reduced_homology(&full, f()).iter().all(|&d| d == 0));
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        for complex in [
            SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]),
            SimplicialComplex::from_facets(4, &[vec![0, 1], vec![2, 3]]),
            SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]]),
            SimplicialComplex::irrelevant(),
        ] {
            let h = reduced_homology(&complex, f());
            let alt: i64 = h
                .iter()
                .enumerate()
                .map(|(pos, &d)| if pos % 2 == 1 { d as i64 } else { -(d as i64) })
                .sum();
            assert_eq!(alt, complex.euler_characteristic_reduced());
        }
    }

    #[test]
    fn reisner_examples() {
        let full = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]);
        assert!(is_cohen_macaulay(&full, f()).is_cm);
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert!(is_cohen_macaulay(&tri, f()).is_cm);
        let disjoint = SimplicialComplex::from_facets(4, &[vec![0, 1], vec![2, 3]]);
        let v = is_cohen_macaulay(&disjoint, f());
        assert!(!v.is_cm);
        assert_eq!(v.witness, Some((vec![], 0)));
    }

    #[test]
    fn cm_scan_of_chain_and_cone() {
        let s = numeric(&[1]);
        let r = cm_scan(&s, Bidegree::new(4, 0), f()).unwrap();
        assert_eq!(r.summary, CmSummary::AllCm);

        let cone = quadric_cone();
        let r = cm_scan(&cone, Bidegree::new(3, 0), f()).unwrap();
        assert_eq!(r.summary, CmSummary::AllCm);
    }

    #[test]
    fn cm_scan_flags_rational_quartic() {
        let s = rational_quartic();
        let r = cm_scan(&s, Bidegree::new(3, 0), f()).unwrap();
        assert!(matches!(r.summary, CmSummary::NonCm { .. }));
    }

    #[test]
    fn diagonal_of_numeric_semigroup() {
        let s = numeric(&[1]);
        let d = semigroup_diagonal(&s, &DiagonalSpec::delta(2, 0).unwrap()).unwrap();
        assert_eq!(d.x_generators, vec![vec![2]]);
        assert!(d.y_generators.is_empty());
    }

    #[test]
    fn diagonal_of_bigraded_lattice() {
        // N^2 with e1 of bidegree (1,0), e2 of (0,1): the (1,1)-diagonal is
        // generated by e1 + e2
        let s = AffineSemigroup::new(2, vec![vec![1, 0]], vec![vec![0, 1]]).unwrap();
        let d = semigroup_diagonal(&s, &DiagonalSpec::delta(1, 1).unwrap()).unwrap();
        assert_eq!(d.x_generators, vec![vec![1, 1]]);
    }

    #[test]
    fn toric_presentation_of_quadric_cone() {
        let s = quadric_cone();
        let r = toric_presentation(&s, f()).unwrap();
        assert_eq!(r.n(), 3);
        assert_eq!(r.relations().len(), 1);
        assert_eq!(r.relations()[0].total_degree(), Some(2));
    }

    #[test]
    fn toric_presentation_of_quartic_has_cubic() {
        let s = rational_quartic();
        let r = toric_presentation(&s, f()).unwrap();
        let maxdeg = r.groebner_basis().max_degree();
        assert!(maxdeg >= 3, "quartic toric ideal needs a cubic, got {maxdeg}");
    }
}
