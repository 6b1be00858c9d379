//! Ambient polynomial rings and finitely presented bigraded quotient rings.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::groebner::{buchberger, normal_form, GroebnerBasis};
use crate::monomial::{Bidegree, Monomial, TermOrder};
use crate::poly::Polynomial;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// The free polynomial ring context: variable names, their bidegrees, the
/// coefficient field and the active term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    var_names: Vec<String>,
    var_degrees: Vec<Bidegree>,
    field: PrimeField,
    order: TermOrder,
}

impl PolyRing {
    pub fn new(
        var_names: Vec<String>,
        var_degrees: Vec<Bidegree>,
        field: PrimeField,
        order: TermOrder,
    ) -> Self {
        assert_eq!(var_names.len(), var_degrees.len());
        PolyRing {
            var_names,
            var_degrees,
            field,
            order,
        }
    }

    /// K[x1..xn, y1..ym] with deg(xi) = (1,0), deg(yj) = (0,1), degrevlex.
    pub fn standard_bigraded(n: usize, m: usize, field: PrimeField) -> Self {
        let mut names = Vec::with_capacity(n + m);
        let mut degs = Vec::with_capacity(n + m);
        for i in 1..=n {
            names.push(format!("x{i}"));
            degs.push(Bidegree::new(1, 0));
        }
        for j in 1..=m {
            names.push(format!("y{j}"));
            degs.push(Bidegree::new(0, 1));
        }
        PolyRing::new(names, degs, field, TermOrder::DegRevLex)
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn with_order(&self, order: TermOrder) -> PolyRing {
        let mut r = self.clone();
        r.order = order;
        r
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var_degrees(&self) -> &[Bidegree] {
        &self.var_degrees
    }

    pub fn var_poly(&self, v: usize) -> Polynomial {
        self.poly(&[(1, &[(v, 1)])])
    }

    /// `Some((n, m))` when the variables are an x-block of degree (1,0)
    /// followed by a y-block of degree (0,1).
    pub fn standard_split(&self) -> Option<(usize, usize)> {
        let n = self
            .var_degrees
            .iter()
            .take_while(|d| **d == Bidegree::new(1, 0))
            .count();
        if self.var_degrees[n..]
            .iter()
            .all(|d| *d == Bidegree::new(0, 1))
        {
            Some((n, self.var_degrees.len() - n))
        } else {
            None
        }
    }

    pub fn bidegree_of_monomial(&self, m: &Monomial) -> Bidegree {
        debug_assert_eq!(m.nvars(), self.nvars());
        let mut d = Bidegree::ZERO;
        for (v, &e) in m.exps().iter().enumerate() {
            d.x += e * self.var_degrees[v].x;
            d.y += e * self.var_degrees[v].y;
        }
        d
    }

    /// All monomials of the given bidegree, sorted descending in the active
    /// order. Works for arbitrary variable bidegrees.
    pub fn monomials_of_bidegree(&self, d: Bidegree) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.nvars()];
        self.enumerate_rec(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.order.cmp_unchecked(b, a));
        out
    }

    fn enumerate_rec(&self, pos: usize, rem: Bidegree, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rem == Bidegree::ZERO {
            let mut m = cur.clone();
            for e in m.iter_mut().skip(pos) {
                *e = 0;
            }
            out.push(Monomial::from_exps(m));
            return;
        }
        if pos == self.nvars() {
            return;
        }
        let dv = self.var_degrees[pos];
        if dv == Bidegree::ZERO {
            // ungraded variable: only exponent 0 participates in graded pieces
            cur[pos] = 0;
            self.enumerate_rec(pos + 1, rem, cur, out);
            return;
        }
        let max_e = {
            let ex = if dv.x > 0 { rem.x / dv.x } else { u32::MAX };
            let ey = if dv.y > 0 { rem.y / dv.y } else { u32::MAX };
            ex.min(ey)
        };
        for e in 0..=max_e {
            let used = Bidegree::new(e * dv.x, e * dv.y);
            if let Some(r) = rem.checked_sub(&used) {
                cur[pos] = e;
                self.enumerate_rec(pos + 1, r, cur, out);
            }
        }
        cur[pos] = 0;
    }
}

/// A bigraded quotient ring R = S/J presented by bihomogeneous relations.
/// The reduced Groebner basis of J is computed once on demand and cached,
/// as is the multiplication table of standard monomials by variables.
#[derive(Debug)]
pub struct RingPresentation {
    ambient: PolyRing,
    relations: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
    mul_cache: Mutex<HashMap<(Monomial, usize), Polynomial>>,
}

impl Clone for RingPresentation {
    fn clone(&self) -> Self {
        RingPresentation {
            ambient: self.ambient.clone(),
            relations: self.relations.clone(),
            gb: self.gb.clone(),
            mul_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.relations == other.relations
    }
}
impl Eq for RingPresentation {}

impl RingPresentation {
    pub fn new(ambient: PolyRing, relations: Vec<Polynomial>) -> Result<Self> {
        if ambient.standard_split().is_none() {
            return Err(Error::InvalidInput(
                "presented rings must have an x-block of degree (1,0) followed by a y-block of degree (0,1)".into(),
            ));
        }
        for r in &relations {
            if r.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            ambient.bidegree_of(r)?;
            if r.is_unit() {
                return Err(Error::UnitRelation);
            }
        }
        Ok(RingPresentation {
            ambient,
            relations,
            gb: OnceLock::new(),
            mul_cache: Mutex::new(HashMap::new()),
        })
    }

    /// Free polynomial ring K[x1..xn, y1..ym].
    pub fn free_bigraded(n: usize, m: usize, field: PrimeField) -> Self {
        RingPresentation::new(PolyRing::standard_bigraded(n, m, field), vec![]).unwrap()
    }

    /// Presentation whose reduced Groebner basis was already computed (the
    /// relations must equal the basis generators in the ambient order).
    pub fn with_groebner_basis(
        ambient: PolyRing,
        relations: Vec<Polynomial>,
        gb: GroebnerBasis,
    ) -> Result<Self> {
        let pres = RingPresentation::new(ambient, relations)?;
        let _ = pres.gb.set(gb);
        Ok(pres)
    }

    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn field(&self) -> PrimeField {
        self.ambient.field()
    }

    /// Count of degree-(1,0) variables.
    pub fn n(&self) -> usize {
        self.ambient.standard_split().unwrap().0
    }

    /// Count of degree-(0,1) variables.
    pub fn m(&self) -> usize {
        self.ambient.standard_split().unwrap().1
    }

    pub fn is_single_graded(&self) -> bool {
        self.m() == 0
    }

    /// The cached reduced Groebner basis of the defining ideal.
    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| buchberger(&self.ambient, &self.relations))
    }

    /// Normal form modulo the defining ideal.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        normal_form(&self.ambient, p, self.groebner_basis())
    }

    /// Ambient monomials of bidegree `d` not divisible by any leading term:
    /// a K-basis of the component R_d.
    pub fn standard_monomials(&self, d: Bidegree) -> Vec<Monomial> {
        let gb = self.groebner_basis();
        self.ambient
            .monomials_of_bidegree(d)
            .into_iter()
            .filter(|m| {
                !gb.generators()
                    .iter()
                    .any(|g| g.leading_monomial().unwrap().divides(m))
            })
            .collect()
    }

    /// Normal form of `u * x_v` for a standard monomial `u`, cached.
    pub fn nf_mul_var(&self, u: &Monomial, v: usize) -> Polynomial {
        let key = (u.clone(), v);
        if let Some(p) = self.mul_cache.lock().unwrap().get(&key) {
            return p.clone();
        }
        let prod = self
            .ambient
            .polynomial(vec![(u.mul(&Monomial::var(self.ambient.nvars(), v, 1)), 1)]);
        let nf = self.reduce(&prod);
        self.mul_cache.lock().unwrap().insert(key, nf.clone());
        nf
    }

    /// Normal form of `u * w` where `u` is standard, stepping one variable at
    /// a time so the per-variable cache is reused.
    pub fn nf_mul(&self, u: &Monomial, w: &Monomial) -> Polynomial {
        let mut acc = self.ambient.polynomial(vec![(u.clone(), 1)]);
        for (v, &e) in w.exps().iter().enumerate() {
            for _ in 0..e {
                let mut next = Polynomial::zero();
                for (m, c) in acc.terms() {
                    let step = self.nf_mul_var(m, v);
                    next = self.ambient.add(&next, &self.ambient.scale(&step, *c));
                }
                acc = next;
                if acc.is_zero() {
                    return acc;
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_split_detection() {
        let r = PolyRing::standard_bigraded(2, 3, PrimeField::default_field());
        assert_eq!(r.standard_split(), Some((2, 3)));
        let odd = PolyRing::new(
            vec!["z".into()],
            vec![Bidegree::new(2, 3)],
            PrimeField::default_field(),
            TermOrder::DegRevLex,
        );
        assert_eq!(odd.standard_split(), None);
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = PolyRing::standard_bigraded(2, 1, PrimeField::default_field());
        // bidegree (1,1): x1*y1, x2*y1
        let ms = r.monomials_of_bidegree(Bidegree::new(1, 1));
        assert_eq!(ms.len(), 2);
        // bidegree (2,0) in 2 x-vars: 3 monomials
        assert_eq!(r.monomials_of_bidegree(Bidegree::new(2, 0)).len(), 3);
        // weighted variables
        let w = PolyRing::new(
            vec!["z1".into(), "z2".into()],
            vec![Bidegree::new(2, 3), Bidegree::new(2, 3)],
            PrimeField::default_field(),
            TermOrder::DegRevLex,
        );
        assert_eq!(w.monomials_of_bidegree(Bidegree::new(4, 6)).len(), 3);
        assert_eq!(w.monomials_of_bidegree(Bidegree::new(2, 0)).len(), 0);
    }

    #[test]
    fn presentation_validation() {
        let amb = PolyRing::standard_bigraded(1, 1, PrimeField::default_field());
        let bad = amb.poly(&[(1, &[(0, 1)]), (1, &[(1, 1)])]);
        assert!(RingPresentation::new(amb.clone(), vec![bad]).is_err());
        let unit = amb.poly(&[(3, &[])]);
        assert!(matches!(
            RingPresentation::new(amb.clone(), vec![unit]),
            Err(Error::UnitRelation)
        ));
        let ok = amb.poly(&[(1, &[(0, 1), (1, 2)])]);
        assert!(RingPresentation::new(amb, vec![ok]).is_ok());
    }

    #[test]
    fn standard_monomials_of_hypersurface() {
        // R = K[x1,y1]/(x1*y1^2)
        let amb = PolyRing::standard_bigraded(1, 1, PrimeField::default_field());
        let rel = amb.poly(&[(1, &[(0, 1), (1, 2)])]);
        let r = RingPresentation::new(amb, vec![rel]).unwrap();
        assert_eq!(r.standard_monomials(Bidegree::new(1, 2)).len(), 0);
        assert_eq!(r.standard_monomials(Bidegree::new(2, 1)).len(), 1);
        assert_eq!(r.standard_monomials(Bidegree::new(0, 5)).len(), 1);
    }
}
