//! Arithmetic in GF(p) for an odd prime p.
//!
//! Elements are plain `u64` values reduced into `[0, p)`. All operations go
//! through a [`PrimeField`] handle so the modulus can be chosen at runtime.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Default coefficient field modulus, the customary large Macaulay prime.
pub const DEFAULT_PRIME: u64 = 32003;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PrimeField {
    modulus: u64,
    /// floor(2^64 / modulus), for Barrett reduction of 62-bit products
    #[serde(skip, default)]
    barrett: u64,
}

impl PartialEq for PrimeField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}
impl Eq for PrimeField {}

impl std::hash::Hash for PrimeField {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.modulus.hash(state);
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// An odd prime modulus, at least 3 (characteristic 2 is excluded
    /// throughout) and below 2^31 so products never overflow u64.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus >= 1 << 31 {
            return Err(Error::ModulusTooLarge(modulus));
        }
        if modulus < 3 || !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(PrimeField {
            modulus,
            barrett: ((1u128 << 64) / modulus as u128) as u64,
        })
    }

    pub fn default_field() -> Self {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    /// Reduce a value below 2^62 with two multiplications instead of a
    /// hardware division.
    #[inline]
    fn barrett_reduce(&self, x: u64) -> u64 {
        if self.barrett == 0 {
            // deserialized handle without the cached constant
            return x % self.modulus;
        }
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x - q * self.modulus;
        while r >= self.modulus {
            r -= self.modulus;
        }
        r
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.modulus as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.modulus {
            s - self.modulus
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.modulus - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.barrett_reduce(a * b)
    }

    /// Multiply-accumulate `acc + a*b` without intermediate reduction.
    #[inline]
    pub fn mul_add(&self, acc: u64, a: u64, b: u64) -> u64 {
        self.barrett_reduce(acc + a * b)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.modulus;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.modulus != 0, "inverse of zero in GF(p)");
        self.pow(a, self.modulus - 2)
    }

    #[inline]
    pub fn div(&self, a: u64, b: u64) -> u64 {
        self.mul(a, self.inv(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes_and_two() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(32001).is_err()); // 3 * 10667
        assert!(PrimeField::new(1 << 32).is_err());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for p in [3u64, 101] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p {
                assert_eq!(f.mul(a, f.inv(a)), 1, "a*a^-1 != 1 for a={a}, p={p}");
            }
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(f.add(a, b), (a + b) % p);
                    assert_eq!(f.sub(f.add(a, b), b), a);
                    assert_eq!(f.mul(a, b), a * b % p);
                }
            }
        }
    }

    #[test]
    fn inverses_default_prime() {
        let f = PrimeField::default_field();
        for a in [1u64, 2, 5, 1017, 31999, 32002] {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn signed_reduction() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.from_i64(-7), 0);
        assert_eq!(f.from_i64(15), 1);
    }
}
