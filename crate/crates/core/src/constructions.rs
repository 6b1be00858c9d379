//! Subalgebra and module constructions on standard bigraded rings: diagonal
//! subalgebras, generalized Veronese subrings, strand modules with shift
//! bookkeeping, symmetric algebras, Rees algebras, and tensor, Segre and
//! Veronese products.

use crate::error::{Error, Result};
use crate::graded::{GradedModulePresentation, ModuleComponents, Truncation};
use crate::groebner::{buchberger, eliminate, restrict_to_tail, GroebnerBasis};
use crate::linalg::{kernel_basis, RowEchelon};
use crate::monomial::{Bidegree, Monomial, TermOrder};
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingPresentation};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

/// Which family of subalgebras a diagonal request targets: the single-graded
/// diagonal along (sa, sb), or the bigraded two-parameter family along
/// (sa, tb).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DiagonalMode {
    Delta,
    Tilde,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiagonalSpec {
    pub a: u32,
    pub b: u32,
    pub mode: DiagonalMode,
}

impl DiagonalSpec {
    pub fn new(a: u32, b: u32, mode: DiagonalMode) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidInput("diagonal needs (a,b) != (0,0)".into()));
        }
        Ok(DiagonalSpec { a, b, mode })
    }

    pub fn delta(a: u32, b: u32) -> Result<Self> {
        DiagonalSpec::new(a, b, DiagonalMode::Delta)
    }

    pub fn tilde(a: u32, b: u32) -> Result<Self> {
        DiagonalSpec::new(a, b, DiagonalMode::Tilde)
    }

    /// Membership of an offset in the canonical index set: the offsets whose
    /// strands are generated in degree 0.
    pub fn index_set_contains(&self, off: Bidegree) -> bool {
        let (a, b) = (self.a, self.b);
        match self.mode {
            DiagonalMode::Delta => off.x < a || off.y < b,
            DiagonalMode::Tilde => {
                if a >= 1 && b >= 1 {
                    off.x < a && off.y < b
                } else if a >= 1 {
                    off.x < a && off.y == 0
                } else {
                    off.x == 0 && off.y < b
                }
            }
        }
    }

    /// Canonical offsets with both coordinates at most `max`.
    pub fn canonical_offsets(&self, max: u32) -> Vec<Bidegree> {
        let mut out = vec![];
        for c in 0..=max {
            for d in 0..=max {
                let off = Bidegree::new(c, d);
                if self.index_set_contains(off) {
                    out.push(off);
                }
            }
        }
        out
    }
}

/// How a twisted strand rewrites over the canonical index set: either it
/// vanishes, or it is a canonical strand shifted in internal degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftResult {
    Zero,
    Delta { offset: Bidegree, shift: u32 },
    Tilde { offset: Bidegree, shift_x: u32, shift_y: u32 },
}

/// Rewrite the (c,d)-strand of the twist R(-p,-q) as a shifted canonical
/// strand, following the mode's case split.
pub fn shift_decompose(spec: &DiagonalSpec, off: Bidegree, p: u32, q: u32) -> Result<ShiftResult> {
    if !spec.index_set_contains(off) {
        return Err(Error::BadOffset(off));
    }
    let (a, b) = (spec.a as i64, spec.b as i64);
    let (c, d) = (off.x as i64, off.y as i64);
    let (p, q) = (p as i64, q as i64);
    let alpha = |z: i64| -> i64 { z.rem_euclid(a) };
    let beta = |z: i64| -> i64 { z.rem_euclid(b) };
    let lceil = |num: i64, den: i64| -> i64 { crate::resolution::ceil_div(num, den) };
    Ok(match spec.mode {
        DiagonalMode::Delta => {
            if b == 0 {
                if q > d {
                    ShiftResult::Zero
                } else {
                    ShiftResult::Delta {
                        offset: Bidegree::new(alpha(c - p) as u32, (d - q) as u32),
                        shift: 0.max(lceil(p - c, a)) as u32,
                    }
                }
            } else if a == 0 {
                if p > c {
                    ShiftResult::Zero
                } else {
                    ShiftResult::Delta {
                        offset: Bidegree::new((c - p) as u32, beta(d - q) as u32),
                        shift: 0.max(lceil(q - d, b)) as u32,
                    }
                }
            } else {
                let l = 0.max(lceil(p - c, a)).max(lceil(q - d, b));
                ShiftResult::Delta {
                    offset: Bidegree::new((l * a + c - p) as u32, (l * b + d - q) as u32),
                    shift: l as u32,
                }
            }
        }
        DiagonalMode::Tilde => {
            if b == 0 {
                if q > 0 {
                    ShiftResult::Zero
                } else {
                    ShiftResult::Tilde {
                        offset: Bidegree::new(alpha(c - p) as u32, 0),
                        shift_x: 0.max(lceil(p - c, a)) as u32,
                        shift_y: 0,
                    }
                }
            } else if a == 0 {
                if p > 0 {
                    ShiftResult::Zero
                } else {
                    ShiftResult::Tilde {
                        offset: Bidegree::new(0, beta(d - q) as u32),
                        shift_x: 0,
                        shift_y: 0.max(lceil(q - d, b)) as u32,
                    }
                }
            } else {
                ShiftResult::Tilde {
                    offset: Bidegree::new(alpha(c - p) as u32, beta(d - q) as u32),
                    shift_x: 0.max(lceil(p - c, a)) as u32,
                    shift_y: 0.max(lceil(q - d, b)) as u32,
                }
            }
        }
    })
}

/// A subalgebra or blowup algebra presented on fresh variables, together with
/// the images of those variables in the source ring.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation {
    /// the presented algebra; its defining relations are a reduced basis
    pub ring: Arc<RingPresentation>,
    /// image of each new variable in the source ambient ring
    pub segment_map: Vec<Polynomial>,
    pub source: Arc<RingPresentation>,
    pub spec: Option<DiagonalSpec>,
}

impl AlgebraPresentation {
    /// Segment images as monomials (diagonal presentations only).
    pub fn segment_monomials(&self) -> Result<Vec<Monomial>> {
        self.segment_map
            .iter()
            .map(|p| {
                if p.terms().len() == 1 && p.leading_coeff() == Some(1) {
                    Ok(p.leading_monomial().unwrap().clone())
                } else {
                    Err(Error::InvalidInput(
                        "segment images are not monomials".into(),
                    ))
                }
            })
            .collect()
    }
}

/// Kernel of the map sending fresh variables to elements of the source ring,
/// by elimination: variables of the source ambient come first and are
/// discarded.
fn elimination_kernel(
    source: &RingPresentation,
    images: &[Polynomial],
    new_names: Vec<String>,
    new_elim_degrees: Vec<Bidegree>,
) -> (PolyRing, Vec<Polynomial>) {
    let samb = source.ambient();
    let sn = samb.nvars();
    let total = sn + images.len();
    let mut names = samb.var_names().to_vec();
    names.extend(new_names);
    let mut degs = samb.var_degrees().to_vec();
    degs.extend(new_elim_degrees);
    let big = PolyRing::new(names, degs, samb.field(), TermOrder::Elim { block: sn });

    let pad = |p: &Polynomial| -> Polynomial {
        big.polynomial(
            p.terms()
                .iter()
                .map(|(m, c)| {
                    let mut e = m.exps().to_vec();
                    e.resize(total, 0);
                    (Monomial::from_exps(e), *c as i64)
                })
                .collect(),
        )
    };

    let mut gens: Vec<Polynomial> = source.relations().iter().map(&pad).collect();
    for (k, img) in images.iter().enumerate() {
        let zvar = big.poly(&[(1, &[(sn + k, 1)])]);
        gens.push(big.sub(&zvar, &pad(img)));
    }
    let gb = buchberger(&big, &gens);
    let kept = eliminate(&big, &gb, sn).expect("elimination order by construction");
    restrict_to_tail(&big, &kept, sn)
}

/// The diagonal subalgebra (mode `Delta`) or generalized Veronese subring
/// (mode `Tilde`) of a presented ring, on one fresh variable per ambient
/// monomial of the generating bidegrees, with kernel by elimination.
pub fn diagonal_presentation(
    source: &Arc<RingPresentation>,
    spec: DiagonalSpec,
) -> Result<AlgebraPresentation> {
    let samb = source.ambient();
    let (xsegs, ysegs): (Vec<Monomial>, Vec<Monomial>) = match spec.mode {
        DiagonalMode::Delta => (
            samb.monomials_of_bidegree(Bidegree::new(spec.a, spec.b)),
            vec![],
        ),
        DiagonalMode::Tilde => {
            let xs = if spec.a >= 1 {
                samb.monomials_of_bidegree(Bidegree::new(spec.a, 0))
            } else {
                vec![]
            };
            let ys = if spec.b >= 1 {
                samb.monomials_of_bidegree(Bidegree::new(0, spec.b))
            } else {
                vec![]
            };
            (xs, ys)
        }
    };
    if xsegs.is_empty() && ysegs.is_empty() {
        return Err(Error::EmptyDiagonal);
    }

    let mut names = vec![];
    let mut elim_degs = vec![];
    let mut std_degs = vec![];
    for (k, m) in xsegs.iter().enumerate() {
        names.push(format!("z{}", k + 1));
        elim_degs.push(samb.bidegree_of_monomial(m));
        std_degs.push(Bidegree::new(1, 0));
    }
    for (k, m) in ysegs.iter().enumerate() {
        names.push(format!("w{}", k + 1));
        elim_degs.push(samb.bidegree_of_monomial(m));
        std_degs.push(Bidegree::new(0, 1));
    }
    let images: Vec<Polynomial> = xsegs
        .iter()
        .chain(&ysegs)
        .map(|m| samb.polynomial(vec![(m.clone(), 1)]))
        .collect();

    let (sub, kernel) = elimination_kernel(source, &images, names.clone(), elim_degs);
    // reinterpret the fresh variables as a standard (bi)graded ring
    let ring_amb = PolyRing::new(names, std_degs, samb.field(), TermOrder::DegRevLex);
    let kernel: Vec<Polynomial> = kernel
        .iter()
        .map(|p| ring_amb.renormalize(&sub.renormalize(p)))
        .collect();
    let gb = GroebnerBasis::from_parts(
        kernel.iter().map(|p| ring_amb.monic(p)).collect(),
        TermOrder::DegRevLex,
        true,
    );
    let ring = Arc::new(RingPresentation::with_groebner_basis(
        ring_amb,
        gb.generators().to_vec(),
        gb,
    )?);
    Ok(AlgebraPresentation {
        ring,
        segment_map: images,
        source: source.clone(),
        spec: Some(spec),
    })
}

/// Internal-to-source bidegree translation for a strand.
fn strand_source_bidegree(spec: &DiagonalSpec, off: Bidegree, internal: Bidegree) -> Bidegree {
    match spec.mode {
        DiagonalMode::Delta => Bidegree::new(
            internal.x * spec.a + off.x,
            internal.x * spec.b + off.y,
        ),
        DiagonalMode::Tilde => Bidegree::new(
            internal.x * spec.a + off.x,
            internal.y * spec.b + off.y,
        ),
    }
}

/// Extract the (c,d)-strand of a module as a presented module over the
/// diagonal algebra. Generators and relations are found degree by degree and
/// the result carries its truncation bounds.
pub fn strand_module(
    diag: &AlgebraPresentation,
    module: &GradedModulePresentation,
    off: Bidegree,
    gen_bound: u32,
    rel_bound: u32,
) -> Result<GradedModulePresentation> {
    if rel_bound < gen_bound {
        return Err(Error::InvalidInput(
            "strand needs rel_bound >= gen_bound".into(),
        ));
    }
    let spec = diag
        .spec
        .ok_or_else(|| Error::InvalidInput("strand extraction needs a diagonal".into()))?;
    if module.ring != diag.source {
        return Err(Error::InvalidInput(
            "module is not presented over the diagonal's source ring".into(),
        ));
    }
    let segments = diag.segment_monomials()?;
    let dring = &diag.ring;
    let damb = dring.ambient();
    let field = dring.field();
    let mut mc = ModuleComponents::new(module);

    let internal_degrees: Vec<Bidegree> = match spec.mode {
        DiagonalMode::Delta => (0..=rel_bound).map(|i| Bidegree::new(i, 0)).collect(),
        DiagonalMode::Tilde => {
            let mut v = vec![];
            for total in 0..=rel_bound {
                v.extend(crate::resolution::bidegrees_of_total(total));
            }
            v
        }
    };

    // phase 1: generators, completing each internal degree
    let mut gen_shifts: Vec<Bidegree> = vec![];
    let mut gen_elements: Vec<Vec<u64>> = vec![];
    for &di in &internal_degrees {
        let dsrc = strand_source_bidegree(&spec, off, di);
        let dim = mc.dim(dsrc)?;
        if dim == 0 {
            continue;
        }
        let mut span = RowEchelon::new(field, dim);
        for (v, seg) in segments.iter().enumerate() {
            let step = damb.var_degrees()[v];
            let Some(prev) = di.checked_sub(&step) else { continue };
            let psrc = strand_source_bidegree(&spec, off, prev);
            let pdim = mc.dim(psrc)?;
            for k in 0..pdim {
                let mut e = vec![0u64; pdim];
                e[k] = 1;
                span.insert(mc.mul_monomial(psrc, &e, seg)?);
            }
        }
        for k in 0..dim {
            let mut e = vec![0u64; dim];
            e[k] = 1;
            if span.insert(e.clone()) {
                if di.total() > gen_bound {
                    return Err(Error::TruncationTooSmall {
                        needed: di.total(),
                        bound: gen_bound,
                    });
                }
                gen_shifts.push(di);
                gen_elements.push(e);
            }
        }
    }

    // phase 2: relations among those generators
    let mut relation_shifts: Vec<Bidegree> = vec![];
    let mut columns: Vec<Vec<Polynomial>> = vec![];
    let mut coords_at: HashMap<Bidegree, Vec<(usize, Monomial)>> = HashMap::new();
    let mut kernel_at: HashMap<Bidegree, Vec<Vec<u64>>> = HashMap::new();
    for &di in &internal_degrees {
        let mut coords: Vec<(usize, Monomial)> = vec![];
        for (g, s) in gen_shifts.iter().enumerate() {
            if let Some(rem) = di.checked_sub(s) {
                for m in dring.standard_monomials(rem) {
                    coords.push((g, m));
                }
            }
        }
        if coords.is_empty() {
            continue;
        }
        let dsrc = strand_source_bidegree(&spec, off, di);
        let tdim = mc.dim(dsrc)?;
        let rows: Vec<Vec<u64>> = coords
            .iter()
            .map(|(g, w)| {
                // image of w under the segment map, as a source monomial
                let mut img = Monomial::one(diag.source.ambient().nvars());
                for (v, &e) in w.exps().iter().enumerate() {
                    for _ in 0..e {
                        img = img.mul(&segments[v]);
                    }
                }
                let gsrc = strand_source_bidegree(&spec, off, gen_shifts[*g]);
                mc.mul_monomial(gsrc, &gen_elements[*g], &img)
            })
            .collect::<Result<_>>()?;
        let kernel = kernel_basis(field, tdim, &rows);

        let mut span = RowEchelon::new(field, coords.len());
        let cindex: HashMap<(usize, Monomial), usize> = coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();
        for v in 0..damb.nvars() {
            let dv = damb.var_degrees()[v];
            let Some(pd) = di.checked_sub(&dv) else { continue };
            let (Some(pc), Some(pk)) = (coords_at.get(&pd), kernel_at.get(&pd)) else {
                continue;
            };
            for k in pk {
                let mut vec = vec![0u64; coords.len()];
                for (pos, c) in k.iter().enumerate() {
                    if *c == 0 {
                        continue;
                    }
                    let (g, u) = &pc[pos];
                    for (m, mc2) in dring.nf_mul_var(u, v).terms() {
                        let t = cindex[&(*g, m.clone())];
                        vec[t] = field.mul_add(vec[t], *c, *mc2);
                    }
                }
                span.insert(vec);
            }
        }
        for k in &kernel {
            if span.insert(k.clone()) {
                let mut col = vec![Polynomial::zero(); gen_shifts.len()];
                for (pos, c) in k.iter().enumerate() {
                    if *c == 0 {
                        continue;
                    }
                    let (g, u) = &coords[pos];
                    let t = damb.polynomial(vec![(u.clone(), *c as i64)]);
                    col[*g] = damb.add(&col[*g], &t);
                }
                relation_shifts.push(di);
                columns.push(col);
            }
        }
        coords_at.insert(di, coords);
        kernel_at.insert(di, kernel);
    }

    GradedModulePresentation::new(
        dring.clone(),
        gen_shifts,
        relation_shifts,
        columns,
        Some(Truncation {
            gen_bound,
            rel_bound,
        }),
    )
}

/// The symmetric algebra of a module generated in one degree: ambient
/// variables are the source x-block plus one y-variable per module generator;
/// relations are the source relations plus one bilinear form per relation
/// column of the module.
pub fn symmetric_algebra_presentation(
    a: &Arc<RingPresentation>,
    module: &GradedModulePresentation,
) -> Result<Arc<RingPresentation>> {
    if !a.is_single_graded() {
        return Err(Error::InvalidInput(
            "symmetric algebra base must be single-graded".into(),
        ));
    }
    if module.ring != *a {
        return Err(Error::InvalidInput(
            "module is not presented over the given base ring".into(),
        ));
    }
    let shifts = &module.generator_shifts;
    if let Some(first) = shifts.first() {
        if let Some(bad) = shifts.iter().find(|s| *s != first) {
            return Err(Error::MixedGeneratorDegrees(*first, *bad));
        }
    }
    let n = a.n();
    let m = shifts.len();
    let big = PolyRing::standard_bigraded(n, m, a.field());
    let pad = |p: &Polynomial| -> Polynomial {
        big.polynomial(
            p.terms()
                .iter()
                .map(|(mono, c)| {
                    let mut e = mono.exps().to_vec();
                    e.resize(n + m, 0);
                    (Monomial::from_exps(e), *c as i64)
                })
                .collect(),
        )
    };
    let mut rels: Vec<Polynomial> = a.relations().iter().map(&pad).collect();
    for col in &module.columns {
        let mut g = Polynomial::zero();
        for (i, entry) in col.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            let yvar = big.poly(&[(1, &[(n + i, 1)])]);
            g = big.add(&g, &big.mul(&pad(entry), &yvar));
        }
        if !g.is_zero() {
            rels.push(g);
        }
    }
    Ok(Arc::new(RingPresentation::new(big, rels)?))
}

/// The explicit quadratic generating set for the defining ideal of the
/// symmetric algebra of the maximal ideal, when the base ring's relations are
/// a quadratic Groebner basis whose initial quadrics are stable: the
/// relations, their first polarizations, and the exchange forms
/// x_i y_j - x_j y_i (i < j).
pub fn symmetric_quadratic_basis(
    a: &Arc<RingPresentation>,
) -> Result<(PolyRing, Vec<Polynomial>)> {
    if !a.is_single_graded() {
        return Err(Error::InvalidInput(
            "quadratic basis construction needs a single-graded base".into(),
        ));
    }
    let gb = a.groebner_basis();
    for g in gb.generators() {
        if g.total_degree() != Some(2) {
            return Err(Error::NotQuadratic(a.ambient().poly_to_string(g)));
        }
    }
    let init = crate::groebner::initial_ideal(gb);
    if !crate::groebner::quadrics_are_stable(&init)? {
        // locate a witness pair for the error report
        for g in init.generators() {
            let mut idx = vec![];
            for (v, &e) in g.exps().iter().enumerate() {
                for _ in 0..e {
                    idx.push(v);
                }
            }
            let (i, j) = (idx[0], idx[1]);
            for k in 0..j {
                let mut e = vec![0u32; g.nvars()];
                e[i] += 1;
                e[k] += 1;
                let need = Monomial::from_exps(e);
                if !init.contains(&need) {
                    return Err(Error::StarViolated {
                        present: format!("{:?}", g.exps()),
                        missing: format!("{:?}", need.exps()),
                    });
                }
            }
        }
        unreachable!("instability without witness");
    }

    let n = a.n();
    let big = PolyRing::standard_bigraded(n, n, a.field());
    let mut basis: Vec<Polynomial> = vec![];
    for g in gb.generators() {
        let lifted = big.polynomial(
            g.terms()
                .iter()
                .map(|(mono, c)| {
                    let mut e = mono.exps().to_vec();
                    e.resize(2 * n, 0);
                    (Monomial::from_exps(e), *c as i64)
                })
                .collect(),
        );
        basis.push(lifted);
    }
    for g in basis.clone() {
        basis.push(big.polarize(&g, 1)?);
    }
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(big.poly(&[(1, &[(i, 1), (n + j, 1)]), (-1, &[(j, 1), (n + i, 1)])]));
        }
    }
    Ok((big, basis))
}

/// The Rees algebra of an ideal generated in one degree, presented on the
/// source variables plus one y-variable per generator; the kernel is computed
/// by eliminating the auxiliary blowup variable.
pub fn rees_presentation(
    a: &Arc<RingPresentation>,
    ideal_gens: &[Polynomial],
) -> Result<AlgebraPresentation> {
    if !a.is_single_graded() {
        return Err(Error::InvalidInput("rees base must be single-graded".into()));
    }
    if ideal_gens.is_empty() {
        return Err(Error::InvalidInput("rees needs ideal generators".into()));
    }
    let samb = a.ambient();
    let mut deg = None;
    for f in ideal_gens {
        let d = samb.bidegree_of(f)?;
        match deg {
            None => deg = Some(d.x),
            Some(e) if e == d.x => {}
            Some(e) => return Err(Error::UnequalDegrees(e, d.x)),
        }
        if d.y != 0 {
            return Err(Error::InvalidInput("rees generators must be x-graded".into()));
        }
    }
    let d = deg.unwrap();
    let n = a.n();
    let m = ideal_gens.len();

    // elimination ambient [t | x-block | y-block]; in this grading
    // deg t = (0,1), deg y_j = (d,1), so the whole ideal is homogeneous and
    // the restricted kernel is bihomogeneous in the Rees bigrading.
    let mut names = vec!["t".to_string()];
    let mut degs = vec![Bidegree::new(0, 1)];
    names.extend(samb.var_names().iter().cloned());
    degs.extend(samb.var_degrees().iter().cloned());
    for j in 1..=m {
        names.push(format!("y{j}"));
        degs.push(Bidegree::new(d, 1));
    }
    let big = PolyRing::new(names, degs, samb.field(), TermOrder::Elim { block: 1 });
    let pad = |p: &Polynomial| -> Polynomial {
        big.polynomial(
            p.terms()
                .iter()
                .map(|(mono, c)| {
                    let mut e = vec![0u32; 1 + n + m];
                    e[1..1 + mono.nvars()].copy_from_slice(mono.exps());
                    (Monomial::from_exps(e), *c as i64)
                })
                .collect(),
        )
    };
    let mut gens: Vec<Polynomial> = a.relations().iter().map(&pad).collect();
    for (j, f) in ideal_gens.iter().enumerate() {
        let yvar = big.poly(&[(1, &[(1 + n + j, 1)])]);
        let tvar = Monomial::var(1 + n + m, 0, 1);
        let ft = big.mul_term(&pad(f), 1, &tvar);
        gens.push(big.sub(&yvar, &ft));
    }
    let gb = buchberger(&big, &gens);
    let kept = eliminate(&big, &gb, 1)?;
    let (sub, polys) = restrict_to_tail(&big, &kept, 1);

    // reinterpret with standard bidegrees deg x = (1,0), deg y = (0,1)
    let ring_amb = PolyRing::standard_bigraded(n, m, samb.field());
    let kernel: Vec<Polynomial> = polys
        .iter()
        .map(|p| ring_amb.renormalize(&sub.renormalize(p)))
        .collect();
    let gbk = GroebnerBasis::from_parts(
        kernel.iter().map(|p| ring_amb.monic(p)).collect(),
        TermOrder::DegRevLex,
        true,
    );
    let ring = Arc::new(RingPresentation::with_groebner_basis(
        ring_amb,
        gbk.generators().to_vec(),
        gbk,
    )?);
    let mut segment_map: Vec<Polynomial> = (0..n).map(|v| samb.var_poly(v)).collect();
    segment_map.extend(ideal_gens.iter().cloned());
    Ok(AlgebraPresentation {
        ring,
        segment_map,
        source: a.clone(),
        spec: None,
    })
}

/// Tensor product of two single-graded presented rings, as a standard
/// bigraded ring: the second factor's variables become the y-block.
pub fn tensor_product(
    a: &Arc<RingPresentation>,
    b: &Arc<RingPresentation>,
) -> Result<Arc<RingPresentation>> {
    if !a.is_single_graded() || !b.is_single_graded() {
        return Err(Error::InvalidInput("tensor factors must be single-graded".into()));
    }
    let (na, nb) = (a.n(), b.n());
    let big = PolyRing::standard_bigraded(na, nb, a.field());
    if a.field() != b.field() {
        return Err(Error::InvalidInput("tensor factors over different fields".into()));
    }
    let mut rels: Vec<Polynomial> = a
        .relations()
        .iter()
        .map(|p| {
            big.polynomial(
                p.terms()
                    .iter()
                    .map(|(mono, c)| {
                        let mut e = mono.exps().to_vec();
                        e.resize(na + nb, 0);
                        (Monomial::from_exps(e), *c as i64)
                    })
                    .collect(),
            )
        })
        .collect();
    rels.extend(b.relations().iter().map(|p| {
        big.polynomial(
            p.terms()
                .iter()
                .map(|(mono, c)| {
                    let mut e = vec![0u32; na + nb];
                    e[na..na + mono.nvars()].copy_from_slice(mono.exps());
                    (Monomial::from_exps(e), *c as i64)
                })
                .collect(),
        )
    }));
    Ok(Arc::new(RingPresentation::new(big, rels)?))
}

/// Segre product: the (1,1)-diagonal of the tensor product.
pub fn segre_product(
    a: &Arc<RingPresentation>,
    b: &Arc<RingPresentation>,
) -> Result<AlgebraPresentation> {
    let t = tensor_product(a, b)?;
    diagonal_presentation(&t, DiagonalSpec::delta(1, 1)?)
}

/// d-th Veronese subring of a single-graded presented ring, as the
/// (d,0)-diagonal.
pub fn veronese_subring(a: &Arc<RingPresentation>, d: u32) -> Result<AlgebraPresentation> {
    if !a.is_single_graded() {
        return Err(Error::InvalidInput("veronese base must be single-graded".into()));
    }
    if d == 0 {
        return Err(Error::InvalidInput("veronese needs d >= 1".into()));
    }
    diagonal_presentation(a, DiagonalSpec::delta(d, 0)?)
}
