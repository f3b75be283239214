//! Monomials and monomial orders.
//!
//! Exponents are machine naturals capped at 2^20: Frobenius powers
//! multiply exponents by p^e, and a silent wrap here would corrupt every
//! ideal computation downstream, so all exponent arithmetic is checked.

use crate::error::{Error, Result};
use std::cmp::Ordering;

/// Hard cap on any single exponent.
pub const MAX_EXPONENT: u32 = 1 << 20;

/// Exponent vector; length always equals the ring's variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::ExponentOverflow);
        }
        Ok(Monomial { exps })
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            let s = a.checked_add(b).ok_or(Error::ExponentOverflow)?;
            if s > MAX_EXPONENT {
                return Err(Error::ExponentOverflow);
            }
            exps.push(s);
        }
        Ok(Monomial { exps })
    }

    /// Raise every exponent by the integer factor `k`.
    pub fn pow_scale(&self, k: u64) -> Result<Self> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for &a in &self.exps {
            let s = (a as u64).checked_mul(k).ok_or(Error::ExponentOverflow)?;
            if s > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOverflow);
            }
            exps.push(s as u32);
        }
        Ok(Monomial { exps })
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Quotient monomial; caller guarantees divisibility.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Componentwise quotient and residue mod q: exps = q * quot + rem,
    /// each residue in [0, q). Carrier step of the Frobenius root.
    pub fn div_rem_scalar(&self, q: u64) -> (Monomial, Monomial) {
        let mut quot = Vec::with_capacity(self.exps.len());
        let mut rem = Vec::with_capacity(self.exps.len());
        for &a in &self.exps {
            quot.push((a as u64 / q) as u32);
            rem.push((a as u64 % q) as u32);
        }
        (Monomial { exps: quot }, Monomial { exps: rem })
    }
}

/// Monomial orders: grevlex and lex are global orders; block(k) is the
/// elimination order that makes the first k variables dominate (grevlex
/// on each block).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block(usize),
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            // Reverse lexicographic from the last variable, reversed sense.
            for (x, y) in a.iter().zip(b.iter()).rev() {
                match y.cmp(x) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match *self {
            MonomialOrder::Lex => lex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::GrevLex => grevlex_cmp(a.exponents(), b.exponents()),
            MonomialOrder::Block(k) => {
                let (a1, a2) = a.exponents().split_at(k);
                let (b1, b2) = b.exponents().split_at(k);
                grevlex_cmp(a1, b1).then_with(|| grevlex_cmp(a2, b2))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec()).unwrap()
    }

    #[test]
    fn lex_order() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn grevlex_order() {
        let o = MonomialOrder::GrevLex;
        // degree decides first
        assert_eq!(o.cmp(&m(&[0, 3]), &m(&[2, 0])), Ordering::Greater);
        // x^2 y > x y^2 > y^3 at equal degree (3 vars: x y z)
        assert_eq!(o.cmp(&m(&[2, 1, 0]), &m(&[1, 2, 0])), Ordering::Greater);
        // classic grevlex separation: x z vs y^2 -- y^2 has smaller last entry
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        // block(1) in [t, x, y]: anything with t beats anything without
        let o = MonomialOrder::Block(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn exponent_cap() {
        assert!(Monomial::new(vec![MAX_EXPONENT + 1]).is_err());
        let big = m(&[MAX_EXPONENT]);
        assert!(big.mul(&m(&[1])).is_err());
        assert!(m(&[3]).pow_scale(1 << 40).is_err());
    }

    #[test]
    fn div_rem_by_q() {
        let (q, r) = m(&[9, 4]).div_rem_scalar(4);
        assert_eq!(q, m(&[2, 1]));
        assert_eq!(r, m(&[1, 0]));
    }
}
