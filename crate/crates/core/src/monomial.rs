//! Bidegrees, exponent-vector monomials and term orders.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A degree in the Z^2 grading. `x` counts the (1,0)-block, `y` the (0,1)-block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub x: u32,
    pub y: u32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { x: 0, y: 0 };

    pub fn new(x: u32, y: u32) -> Self {
        Bidegree { x, y }
    }

    pub fn total(&self) -> u32 {
        self.x + self.y
    }

    /// Componentwise comparison (partial order on N^2).
    pub fn le(&self, other: &Bidegree) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn add(&self, other: &Bidegree) -> Bidegree {
        Bidegree::new(self.x + other.x, self.y + other.y)
    }

    /// Componentwise difference, `None` if any coordinate would go negative.
    pub fn checked_sub(&self, other: &Bidegree) -> Option<Bidegree> {
        if other.le(self) {
            Some(Bidegree::new(self.x - other.x, self.y - other.y))
        } else {
            None
        }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

/// A monomial as a dense exponent vector over the ambient ring's variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exp;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Term orders used by the toolkit.
///
/// `DegRevLex` is graded reverse lexicographic with the variables ranked in
/// list order (the x-block before the y-block in standard bigraded rings).
/// `Elim` is the product order that makes the leading `block` variables an
/// elimination block: degrevlex on that block first, then degrevlex on the
/// rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    DegRevLex,
    Elim { block: usize },
}

fn revlex_on(ua: &[u32], va: &[u32]) -> Ordering {
    let da: u32 = ua.iter().sum();
    let db: u32 = va.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // Same degree: the monomial whose last nonzero coordinate of u - v is
    // negative is the larger one.
    for (a, b) in ua.iter().zip(va).rev() {
        match a.cmp(b) {
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {}
        }
    }
    Ordering::Equal
}

impl TermOrder {
    pub fn compare(&self, u: &Monomial, v: &Monomial) -> Result<Ordering> {
        if u.nvars() != v.nvars() {
            return Err(Error::DimensionMismatch(u.nvars(), v.nvars()));
        }
        Ok(self.cmp_unchecked(u, v))
    }

    #[inline]
    pub fn cmp_unchecked(&self, u: &Monomial, v: &Monomial) -> Ordering {
        match *self {
            TermOrder::DegRevLex => revlex_on(u.exps(), v.exps()),
            TermOrder::Elim { block } => {
                let o = revlex_on(&u.exps()[..block], &v.exps()[..block]);
                if o != Ordering::Equal {
                    return o;
                }
                revlex_on(&u.exps()[block..], &v.exps()[block..])
            }
        }
    }

    /// True when monomials in the kept suffix can never dominate a monomial
    /// involving one of the first `discard` variables.
    pub fn eliminates(&self, discard: usize) -> bool {
        match *self {
            TermOrder::DegRevLex => discard == 0,
            TermOrder::Elim { block } => block == discard,
        }
    }
}
