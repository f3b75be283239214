//! Arithmetic in the prime field F_p.
//!
//! Coefficients throughout the library live in F_p for a small prime p.
//! Keeping the coefficient field prime makes every element a fixed point
//! of the Frobenius endomorphism (a^p = a), so p^e-th roots of
//! coefficients are the identity map.

use crate::error::{Error, Result};

/// A prime field F_p, 2 <= p <= 2^31 - 1.
///
/// The field object owns the modulus; elements are bare residues that
/// only make sense relative to a field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

/// A canonical residue in [0, p). Arithmetic goes through [`PrimeField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement(pub u64);

const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_CHARACTERISTIC).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Canonical element from any integer residue.
    pub fn elem(&self, v: i64) -> FieldElement {
        let p = self.p as i64;
        FieldElement(v.rem_euclid(p) as u64)
    }

    pub fn elem_u64(&self, v: u64) -> FieldElement {
        FieldElement(v % self.p)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1 % self.p)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + self.p - b.0 })
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        // p < 2^31, so the product fits in u64.
        FieldElement((a.0 * b.0) % self.p)
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a.0 != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.0 == 0
    }

    pub fn value(&self) -> u64 {
        self.0
    }
}
