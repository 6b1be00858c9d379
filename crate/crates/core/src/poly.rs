//! Polynomials with GF(p) coefficients over an ambient [`PolyRing`].
//!
//! Terms are kept sorted in descending term order with no zero coefficients,
//! so equality, leading terms and serialization are canonical. All arithmetic
//! goes through the ring handle that owns the field and the order.

use crate::error::{Error, Result};
use crate::monomial::{Bidegree, Monomial};
use crate::ring::PolyRing;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.terms.first().map(|(_, c)| *c)
    }

    /// A single constant? (degree-(0,0) nonzero polynomial)
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub(crate) fn from_sorted(terms: Vec<(Monomial, u64)>) -> Self {
        Polynomial { terms }
    }
}

impl PolyRing {
    /// Build a polynomial from (monomial, signed coefficient) pairs, merging
    /// duplicates, dropping zeros and sorting by the active order.
    pub fn polynomial(&self, terms: Vec<(Monomial, i64)>) -> Polynomial {
        let f = self.field();
        let mut map: HashMap<Monomial, u64> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), self.nvars());
            let c = f.from_i64(c);
            let e = map.entry(m).or_insert(0);
            *e = f.add(*e, c);
        }
        let mut out: Vec<(Monomial, u64)> = map.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort_by(|a, b| self.order().cmp_unchecked(&b.0, &a.0));
        Polynomial::from_sorted(out)
    }

    /// Convenience constructor from sparse (var, exp) term descriptions.
    pub fn poly(&self, terms: &[(i64, &[(usize, u32)])]) -> Polynomial {
        let built = terms
            .iter()
            .map(|(c, vars)| {
                let mut m = Monomial::one(self.nvars());
                for &(v, e) in *vars {
                    m = m.mul(&Monomial::var(self.nvars(), v, e));
                }
                (m, *c)
            })
            .collect();
        self.polynomial(built)
    }

    /// Re-sort a polynomial that was built under another order.
    pub fn renormalize(&self, p: &Polynomial) -> Polynomial {
        self.polynomial(p.terms().iter().map(|(m, c)| (m.clone(), *c as i64)).collect())
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms: Vec<(Monomial, i64)> = a
            .terms()
            .iter()
            .map(|(m, c)| (m.clone(), *c as i64))
            .collect();
        terms.extend(b.terms().iter().map(|(m, c)| (m.clone(), *c as i64)));
        self.polynomial(terms)
    }

    pub fn neg(&self, a: &Polynomial) -> Polynomial {
        let f = self.field();
        Polynomial::from_sorted(
            a.terms()
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(*c)))
                .collect(),
        )
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add(a, &self.neg(b))
    }

    /// a - c * w * b, the division-step combination.
    pub fn sub_mul_term(&self, a: &Polynomial, c: u64, w: &Monomial, b: &Polynomial) -> Polynomial {
        let mut terms: Vec<(Monomial, i64)> = a
            .terms()
            .iter()
            .map(|(m, k)| (m.clone(), *k as i64))
            .collect();
        let f = self.field();
        for (m, k) in b.terms() {
            let coeff = f.neg(f.mul(c, *k));
            terms.push((m.mul(w), coeff as i64));
        }
        self.polynomial(terms)
    }

    pub fn mul_term(&self, a: &Polynomial, c: u64, w: &Monomial) -> Polynomial {
        let f = self.field();
        Polynomial::from_sorted(
            a.terms()
                .iter()
                .filter_map(|(m, k)| {
                    let ck = f.mul(c, *k);
                    (ck != 0).then(|| (m.mul(w), ck))
                })
                .collect(),
        )
    }

    pub fn scale(&self, a: &Polynomial, c: u64) -> Polynomial {
        self.mul_term(a, c, &Monomial::one(self.nvars()))
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms: Vec<(Monomial, i64)> = Vec::with_capacity(a.terms().len() * b.terms().len());
        let f = self.field();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                terms.push((ma.mul(mb), f.mul(*ca, *cb) as i64));
            }
        }
        self.polynomial(terms)
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self, a: &Polynomial) -> Polynomial {
        match a.leading_coeff() {
            None | Some(1) => a.clone(),
            Some(c) => self.scale(a, self.field().inv(c)),
        }
    }

    /// Substitute each variable by the given image polynomial.
    pub fn substitute(&self, p: &Polynomial, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars());
        let mut acc = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut term = self.poly(&[(1, &[])]);
            for (v, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term = self.mul(&term, &images[v]);
                }
            }
            acc = self.add(&acc, &self.scale(&term, *c));
        }
        acc
    }

    /// The common bidegree of all terms.
    pub fn bidegree_of(&self, p: &Polynomial) -> Result<Bidegree> {
        let mut it = p.terms().iter();
        let first = it.next().ok_or(Error::ZeroPolynomial)?;
        let d = self.bidegree_of_monomial(&first.0);
        for (m, _) in it {
            let e = self.bidegree_of_monomial(m);
            if e != d {
                return Err(Error::NotBihomogeneous(d, e));
            }
        }
        Ok(d)
    }

    pub fn is_bihomogeneous(&self, p: &Polynomial) -> bool {
        p.is_zero() || self.bidegree_of(p).is_ok()
    }

    /// Replace the trailing `k` x-factors (in sorted index order) of each
    /// monomial of a bidegree-(d,0) form by the matching y-variables.
    pub fn polarize(&self, p: &Polynomial, k: u32) -> Result<Polynomial> {
        let (n, m) = self
            .standard_split()
            .ok_or_else(|| Error::InvalidInput("polarization needs a standard bigraded ring".into()))?;
        if m < n {
            return Err(Error::InvalidInput(format!(
                "polarization target needs at least {n} y-variables, ring has {m}"
            )));
        }
        let d = self.bidegree_of(p)?;
        if d.y != 0 || k > d.x {
            return Err(Error::BadDegree {
                expected: format!("({},0) with 0 <= k <= {}", d.x, d.x),
                got: format!("{d} with k = {k}"),
            });
        }
        let keep = (d.x - k) as usize;
        let terms = p
            .terms()
            .iter()
            .map(|(mono, c)| {
                let mut indices = Vec::with_capacity(d.x as usize);
                for (v, &e) in mono.exps()[..n].iter().enumerate() {
                    for _ in 0..e {
                        indices.push(v);
                    }
                }
                let mut exps = vec![0u32; self.nvars()];
                for &i in &indices[..keep] {
                    exps[i] += 1;
                }
                for &i in &indices[keep..] {
                    exps[n + i] += 1;
                }
                (Monomial::from_exps(exps), *c as i64)
            })
            .collect();
        Ok(self.polynomial(terms))
    }

    pub fn poly_to_string(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let half = self.field().modulus() / 2;
        let mut out = String::new();
        for (i, (m, c)) in p.terms().iter().enumerate() {
            // print coefficients in the balanced range for readability
            let (sign, mag) = if *c > half {
                ("-", self.field().modulus() - c)
            } else {
                ("+", *c)
            };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut factors = vec![];
            if mag != 1 || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 1 {
                    factors.push(self.var_names()[v].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.var_names()[v], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn s21() -> PolyRing {
        PolyRing::standard_bigraded(2, 1, PrimeField::default_field())
    }

    #[test]
    fn bidegree_examples() {
        let r = PolyRing::standard_bigraded(1, 1, PrimeField::default_field());
        // x1*y1^2
        let f = r.poly(&[(1, &[(0, 1), (1, 2)])]);
        assert_eq!(r.bidegree_of(&f).unwrap(), Bidegree::new(1, 2));
        // x1 + y1 is not bihomogeneous
        let g = r.poly(&[(1, &[(0, 1)]), (1, &[(1, 1)])]);
        assert!(matches!(r.bidegree_of(&g), Err(Error::NotBihomogeneous(_, _))));
        assert!(matches!(
            r.bidegree_of(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn bidegree_of_exchange_relation() {
        // x1*y2 - x2*y1 has bidegree (1,1)
        let r = PolyRing::standard_bigraded(2, 2, PrimeField::default_field());
        let d = r.poly(&[(1, &[(0, 1), (3, 1)]), (-1, &[(1, 1), (2, 1)])]);
        assert_eq!(r.bidegree_of(&d).unwrap(), Bidegree::new(1, 1));
    }

    #[test]
    fn arithmetic_cancels() {
        let r = s21();
        let f = r.poly(&[(1, &[(0, 2)]), (3, &[(0, 1), (1, 1)])]);
        let g = r.poly(&[(-1, &[(0, 2)]), (2, &[(1, 2)])]);
        let h = r.add(&f, &g);
        assert_eq!(h.terms().len(), 2);
        assert!(r.sub(&f, &f).is_zero());
        let sq = r.mul(&f, &f);
        assert_eq!(r.bidegree_of(&sq).unwrap(), Bidegree::new(4, 0));
    }

    #[test]
    fn polarize_identity_and_square() {
        let r = PolyRing::standard_bigraded(2, 2, PrimeField::default_field());
        let f = r.poly(&[(1, &[(0, 2)]), (1, &[(0, 1), (1, 1)])]);
        assert_eq!(r.polarize(&f, 0).unwrap(), f);
        // x1^2 -> x1*y1
        let sq = r.poly(&[(1, &[(0, 2)])]);
        let expect = r.poly(&[(1, &[(0, 1), (2, 1)])]);
        assert_eq!(r.polarize(&sq, 1).unwrap(), expect);
    }

    #[test]
    fn polarize_triple() {
        // x1*x2*x3 with k=2 -> x1*y2*y3
        let r = PolyRing::standard_bigraded(3, 3, PrimeField::default_field());
        let f = r.poly(&[(1, &[(0, 1), (1, 1), (2, 1)])]);
        let expect = r.poly(&[(1, &[(0, 1), (4, 1), (5, 1)])]);
        assert_eq!(r.polarize(&f, 2).unwrap(), expect);
    }

    #[test]
    fn polarize_rejects_bad_input() {
        let r = PolyRing::standard_bigraded(2, 2, PrimeField::default_field());
        let f = r.poly(&[(1, &[(0, 1), (2, 1)])]); // bidegree (1,1)
        assert!(r.polarize(&f, 1).is_err());
        let g = r.poly(&[(1, &[(0, 2)])]);
        assert!(r.polarize(&g, 3).is_err());
    }

    #[test]
    fn depolarization_roundtrip() {
        // Mapping y_i back to x_i undoes polarization on (d,0)-forms.
        let r = PolyRing::standard_bigraded(3, 3, PrimeField::default_field());
        let f = r.poly(&[(1, &[(0, 1), (1, 2)]), (5, &[(2, 3)]), (-2, &[(0, 1), (1, 1), (2, 1)])]);
        let images: Vec<Polynomial> = (0..6)
            .map(|v| r.poly(&[(1, &[(v % 3, 1)])]))
            .collect();
        for k in 0..=3 {
            let p = r.polarize(&f, k).unwrap();
            assert_eq!(r.substitute(&p, &images), f, "k = {k}");
            if !p.is_zero() {
                assert_eq!(r.bidegree_of(&p).unwrap(), Bidegree::new(3 - k, k));
            }
        }
    }
}
