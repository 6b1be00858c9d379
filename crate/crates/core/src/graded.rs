//! Bigraded components of presented modules: monomial bases, Hilbert values
//! and the exact linear algebra that powers syzygies and strand extraction.

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, RowEchelon};
use crate::monomial::{Bidegree, Monomial};
use crate::poly::Polynomial;
use crate::ring::RingPresentation;
use std::collections::HashMap;
use std::rc::Rc;
use std::sync::Arc;

/// A deterministic K-basis of one bigraded component, as pairs of
/// (generator index, standard monomial). Ring components use index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBasis {
    pub bidegree: Bidegree,
    pub monomials: Vec<(usize, Monomial)>,
}

/// Standard monomials of the quotient ring in one bidegree.
pub fn standard_monomial_basis(ring: &RingPresentation, d: Bidegree) -> ComponentBasis {
    ComponentBasis {
        bidegree: d,
        monomials: ring
            .standard_monomials(d)
            .into_iter()
            .map(|m| (0, m))
            .collect(),
    }
}

/// Honesty bounds for presentations assembled degree by degree: generators
/// are complete up to internal total degree `gen_bound`, relations up to
/// `rel_bound`. Consumers must refuse requests beyond `rel_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub gen_bound: u32,
    pub rel_bound: u32,
}

/// A bigraded module presented as the cokernel of a matrix of bihomogeneous
/// polynomials over a presented ring. Columns are relations; the entry in
/// column j, row i has bidegree `relation_shifts[j] - generator_shifts[i]`.
#[derive(Debug, Clone)]
pub struct GradedModulePresentation {
    pub ring: Arc<RingPresentation>,
    pub generator_shifts: Vec<Bidegree>,
    pub relation_shifts: Vec<Bidegree>,
    /// column-major: columns[j][i] is the row-i entry of relation j
    pub columns: Vec<Vec<Polynomial>>,
    pub truncation: Option<Truncation>,
}

impl GradedModulePresentation {
    pub fn new(
        ring: Arc<RingPresentation>,
        generator_shifts: Vec<Bidegree>,
        relation_shifts: Vec<Bidegree>,
        columns: Vec<Vec<Polynomial>>,
        truncation: Option<Truncation>,
    ) -> Result<Self> {
        if columns.len() != relation_shifts.len() {
            return Err(Error::InvalidInput(format!(
                "{} relation shifts for {} columns",
                relation_shifts.len(),
                columns.len()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != generator_shifts.len() {
                return Err(Error::InvalidInput(format!(
                    "column {j} has {} rows, expected {}",
                    col.len(),
                    generator_shifts.len()
                )));
            }
            for (i, entry) in col.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let d = ring.ambient().bidegree_of(entry)?;
                let expected = relation_shifts[j]
                    .checked_sub(&generator_shifts[i])
                    .ok_or_else(|| Error::BadDegree {
                        expected: format!("shift {} >= {}", relation_shifts[j], generator_shifts[i]),
                        got: format!("entry of degree {d}"),
                    })?;
                if d != expected {
                    return Err(Error::BadDegree {
                        expected: expected.to_string(),
                        got: d.to_string(),
                    });
                }
            }
        }
        Ok(GradedModulePresentation {
            ring,
            generator_shifts,
            relation_shifts,
            columns,
            truncation,
        })
    }

    /// Free module with the given generator bidegrees (twists).
    pub fn free(ring: Arc<RingPresentation>, shifts: Vec<Bidegree>) -> Self {
        GradedModulePresentation {
            ring,
            generator_shifts: shifts,
            relation_shifts: vec![],
            columns: vec![],
            truncation: None,
        }
    }

    /// The residue field K = R / (all variables).
    pub fn residue_field(ring: Arc<RingPresentation>) -> Self {
        let nv = ring.ambient().nvars();
        let mut relation_shifts = vec![];
        let mut columns = vec![];
        for v in 0..nv {
            relation_shifts.push(ring.ambient().var_degrees()[v]);
            columns.push(vec![ring.ambient().var_poly(v)]);
        }
        GradedModulePresentation {
            ring,
            generator_shifts: vec![Bidegree::ZERO],
            relation_shifts,
            columns,
            truncation: None,
        }
    }

    /// Cyclic quotient R/I for bihomogeneous ideal generators.
    pub fn cyclic_quotient(ring: Arc<RingPresentation>, gens: &[Polynomial]) -> Result<Self> {
        let mut relation_shifts = vec![];
        let mut columns = vec![];
        for g in gens {
            let d = ring.ambient().bidegree_of(g)?;
            relation_shifts.push(d);
            columns.push(vec![g.clone()]);
        }
        GradedModulePresentation::new(
            ring,
            vec![Bidegree::ZERO],
            relation_shifts,
            columns,
            None,
        )
    }

    /// The submodule of R generated by the given bihomogeneous elements,
    /// presented on exactly those generators with its first syzygies computed
    /// degree by degree up to `rel_bound` (internal total degree).
    pub fn ideal_module(
        ring: Arc<RingPresentation>,
        elements: &[Polynomial],
        rel_bound: u32,
    ) -> Result<Self> {
        let shifts: Vec<Bidegree> = elements
            .iter()
            .map(|f| ring.ambient().bidegree_of(f))
            .collect::<Result<_>>()?;
        let ambient = ring.ambient().clone();
        let field = ambient.field();
        let nv = ambient.nvars();

        let mut relation_shifts = vec![];
        let mut columns: Vec<Vec<Polynomial>> = vec![];
        // per-bidegree data reused for the minimality sweep
        let mut coords_at: HashMap<Bidegree, Rc<Vec<(usize, Monomial)>>> = HashMap::new();
        let mut kernel_at: HashMap<Bidegree, Vec<Vec<u64>>> = HashMap::new();

        for total in 0..=rel_bound {
            for x in (0..=total).rev() {
                let d = Bidegree::new(x, total - x);
                let mut coords: Vec<(usize, Monomial)> = vec![];
                for (i, s) in shifts.iter().enumerate() {
                    if let Some(rem) = d.checked_sub(s) {
                        for m in ring.standard_monomials(rem) {
                            coords.push((i, m));
                        }
                    }
                }
                if coords.is_empty() {
                    continue;
                }
                let target = ring.standard_monomials(d);
                let tindex: HashMap<&Monomial, usize> =
                    target.iter().enumerate().map(|(k, m)| (m, k)).collect();
                let rows: Vec<Vec<u64>> = coords
                    .iter()
                    .map(|(i, w)| {
                        let mut row = vec![0u64; target.len()];
                        let prod = nf_mul_poly(&ring, w, &elements[*i]);
                        for (m, c) in prod.terms() {
                            row[tindex[m]] = *c;
                        }
                        row
                    })
                    .collect();
                let kernel = kernel_basis(field, target.len(), &rows);
                let coords = Rc::new(coords);

                // multiples of lower-degree syzygies
                let mut span = RowEchelon::new(field, coords.len());
                let cindex: HashMap<&(usize, Monomial), usize> =
                    coords.iter().enumerate().map(|(k, c)| (c, k)).collect();
                for v in 0..nv {
                    let dv = ambient.var_degrees()[v];
                    let Some(prev) = d.checked_sub(&dv) else { continue };
                    let (Some(pcoords), Some(pkernel)) = (coords_at.get(&prev), kernel_at.get(&prev))
                    else {
                        continue;
                    };
                    for k in pkernel {
                        let mut vec = vec![0u64; coords.len()];
                        for (pos, c) in k.iter().enumerate() {
                            if *c == 0 {
                                continue;
                            }
                            let (gi, u) = &pcoords[pos];
                            for (m, mc) in ring.nf_mul_var(u, v).terms() {
                                let t = cindex[&(*gi, m.clone())];
                                vec[t] = field.mul_add(vec[t], *c, *mc);
                            }
                        }
                        span.insert(vec);
                    }
                }

                for k in &kernel {
                    if span.insert(k.clone()) {
                        // new minimal syzygy: convert to a polynomial column
                        let mut col = vec![Polynomial::zero(); elements.len()];
                        for (pos, c) in k.iter().enumerate() {
                            if *c == 0 {
                                continue;
                            }
                            let (gi, u) = &coords[pos];
                            let t = ambient.polynomial(vec![(u.clone(), *c as i64)]);
                            col[*gi] = ambient.add(&col[*gi], &t);
                        }
                        relation_shifts.push(d);
                        columns.push(col);
                    }
                }

                coords_at.insert(d, coords);
                kernel_at.insert(d, kernel);
            }
        }

        GradedModulePresentation::new(
            ring,
            shifts,
            relation_shifts,
            columns,
            Some(Truncation {
                gen_bound: rel_bound,
                rel_bound,
            }),
        )
    }

    pub fn check_bound(&self, requested: u32) -> Result<()> {
        if let Some(t) = self.truncation {
            if requested > t.rel_bound {
                return Err(Error::BoundExceeded {
                    requested,
                    bound: t.rel_bound,
                });
            }
        }
        Ok(())
    }

    /// Least total degree with a nonzero component, scanning up to `bound`.
    pub fn initial_degree(&self, bound: u32) -> Result<Option<u32>> {
        let mut comps = ModuleComponents::new(self);
        for total in 0..=bound {
            for x in (0..=total).rev() {
                if comps.dim(Bidegree::new(x, total - x))? > 0 {
                    return Ok(Some(total));
                }
            }
        }
        Ok(None)
    }
}

/// dim_K of one component of the cokernel.
pub fn hilbert_value(module: &GradedModulePresentation, d: Bidegree) -> Result<usize> {
    ModuleComponents::new(module).dim(d)
}

pub(crate) fn nf_mul_poly(ring: &RingPresentation, w: &Monomial, f: &Polynomial) -> Polynomial {
    let amb = ring.ambient();
    let mut acc = Polynomial::zero();
    for (m, c) in f.terms() {
        let nf = ring.nf_mul(m, w);
        acc = amb.add(&acc, &amb.scale(&nf, *c));
    }
    acc
}

/// One computed component of a presented module: the free-cover coordinates,
/// the span of the relation image, and the resulting quotient basis.
#[derive(Debug)]
pub struct ComponentSpace {
    pub coords: Vec<(usize, Monomial)>,
    coord_index: HashMap<(usize, Monomial), usize>,
    rel_span: RowEchelon,
    pub quotient_cols: Vec<usize>,
}

impl ComponentSpace {
    pub fn dim(&self) -> usize {
        self.quotient_cols.len()
    }

    /// Lift quotient coordinates to free-cover coordinates (the canonical
    /// section supported on non-pivot columns).
    pub fn lift(&self, q: &[u64]) -> Vec<u64> {
        let mut full = vec![0u64; self.coords.len()];
        for (k, &col) in self.quotient_cols.iter().enumerate() {
            full[col] = q[k];
        }
        full
    }

    /// Project a free-cover coordinate vector to quotient coordinates.
    pub fn project(&self, mut full: Vec<u64>) -> Vec<u64> {
        self.rel_span.reduce_in_place(&mut full);
        self.quotient_cols.iter().map(|&c| full[c]).collect()
    }
}

/// Lazily computed component spaces of one module, with the variable action.
pub struct ModuleComponents<'m> {
    module: &'m GradedModulePresentation,
    spaces: HashMap<Bidegree, Rc<ComponentSpace>>,
}

impl<'m> ModuleComponents<'m> {
    pub fn new(module: &'m GradedModulePresentation) -> Self {
        ModuleComponents {
            module,
            spaces: HashMap::new(),
        }
    }

    pub fn module(&self) -> &'m GradedModulePresentation {
        self.module
    }

    pub fn space(&mut self, d: Bidegree) -> Result<Rc<ComponentSpace>> {
        self.module.check_bound(d.total())?;
        if let Some(s) = self.spaces.get(&d) {
            return Ok(s.clone());
        }
        let ring = &self.module.ring;
        let field = ring.field();
        let mut coords: Vec<(usize, Monomial)> = vec![];
        for (i, s) in self.module.generator_shifts.iter().enumerate() {
            if let Some(rem) = d.checked_sub(s) {
                for m in ring.standard_monomials(rem) {
                    coords.push((i, m));
                }
            }
        }
        let coord_index: HashMap<(usize, Monomial), usize> = coords
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), k))
            .collect();
        let mut rel_span = RowEchelon::new(field, coords.len());
        for (j, col) in self.module.columns.iter().enumerate() {
            let Some(rem) = d.checked_sub(&self.module.relation_shifts[j]) else {
                continue;
            };
            for w in ring.standard_monomials(rem) {
                let mut row = vec![0u64; coords.len()];
                for (i, entry) in col.iter().enumerate() {
                    if entry.is_zero() {
                        continue;
                    }
                    for (m, c) in nf_mul_poly(ring, &w, entry).terms() {
                        let t = coord_index[&(i, m.clone())];
                        row[t] = field.add(row[t], *c);
                    }
                }
                rel_span.insert(row);
            }
        }
        let quotient_cols = rel_span.free_columns();
        let space = Rc::new(ComponentSpace {
            coords,
            coord_index,
            rel_span,
            quotient_cols,
        });
        self.spaces.insert(d, space.clone());
        Ok(space)
    }

    pub fn dim(&mut self, d: Bidegree) -> Result<usize> {
        Ok(self.space(d)?.dim())
    }

    /// Multiply an element (quotient coordinates at `d`) by an ambient
    /// monomial `w`; the result lives at `d + deg(w)`.
    pub fn mul_monomial(&mut self, d: Bidegree, q: &[u64], w: &Monomial) -> Result<Vec<u64>> {
        let src = self.space(d)?;
        let wdeg = self.module.ring.ambient().bidegree_of_monomial(w);
        let tgt = self.space(d.add(&wdeg))?;
        let field = self.module.ring.field();
        let full = src.lift(q);
        let mut out = vec![0u64; tgt.coords.len()];
        for (pos, c) in full.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let (i, u) = &src.coords[pos];
            for (m, mc) in self.module.ring.nf_mul(u, w).terms() {
                let t = tgt.coord_index[&(*i, m.clone())];
                out[t] = field.mul_add(out[t], *c, *mc);
            }
        }
        Ok(tgt.project(out))
    }
}
