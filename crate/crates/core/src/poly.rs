//! Sparse multivariate polynomials over F_p in canonical form.
//!
//! A polynomial is a list of (monomial, coefficient) terms, strictly
//! descending in the ring's monomial order with no zero coefficients.
//! Canonical form makes equality structural, so ideal-equality checks
//! reduce to comparing reduced Groebner bases term by term.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: Arc::clone(ring), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<PolyRing>, v: i64) -> Self {
        let c = ring.field().elem(v);
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((Monomial::one(ring.nvars()), c));
        }
        Polynomial { ring: Arc::clone(ring), terms }
    }

    pub fn var(ring: &Arc<PolyRing>, index: usize) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![(Monomial::var(ring.nvars(), index), ring.field().one())],
        }
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: FieldElement) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((m, c));
        }
        Polynomial { ring: Arc::clone(ring), terms }
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts
    /// descending in the ring order.
    pub fn from_terms(ring: &Arc<PolyRing>, raw: Vec<(Monomial, FieldElement)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::with_capacity(raw.len());
        for (m, c) in raw {
            debug_assert_eq!(m.nvars(), ring.nvars());
            let e = acc.entry(m).or_insert_with(|| field.zero());
            *e = field.add(*e, c);
        }
        let order = ring.order();
        let mut terms: Vec<(Monomial, FieldElement)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial { ring: Arc::clone(ring), terms }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.value() == 1
    }

    /// Leading monomial; panics on zero (callers guard).
    pub fn leading_monomial(&self) -> &Monomial {
        &self.terms[0].0
    }

    /// Everything but the leading term.
    pub fn tail(&self) -> Self {
        if self.terms.is_empty() {
            return self.clone();
        }
        Polynomial { ring: Arc::clone(&self.ring), terms: self.terms[1..].to_vec() }
    }

    /// Trusted constructor for terms already strictly descending in the
    /// ring order with nonzero coefficients.
    pub(crate) fn from_sorted_terms(
        ring: &Arc<PolyRing>,
        terms: Vec<(Monomial, FieldElement)>,
    ) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: Arc::clone(ring), terms }
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.terms[0].1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if PolyRing::same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        Ok(self.merge(other, true))
    }

    /// Sorted two-pointer merge; monomial orders are translation-invariant
    /// so both inputs are already in the output order.
    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            let cb = if negate_other { field.neg(*cb) } else { *cb };
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(*ca, cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for (m, c) in &other.terms[j..] {
            let c = if negate_other { field.neg(*c) } else { *c };
            out.push((m.clone(), c));
        }
        Polynomial { ring: Arc::clone(&self.ring), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect(),
        }
    }

    /// Multiply by the single term c * m (sort order is preserved).
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (ma, ca) in &self.terms {
            terms.push((ma.mul(m)?, field.mul(*ca, c)));
        }
        Ok(Polynomial { ring: Arc::clone(&self.ring), terms })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, self.terms[0].1);
        }
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb)?;
                let e = acc.entry(m).or_insert_with(|| field.zero());
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        Ok(Self::from_terms(&self.ring, acc.into_iter().collect()))
    }

    pub fn pow(&self, e: u64) -> Result<Self> {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// The Frobenius power f^{p^e}, computed termwise: coefficients in F_p
    /// are Frobenius-fixed, so (c x^a)^{p^e} = c x^{p^e a}, and additivity
    /// of the p-th power map in characteristic p glues the terms.
    pub fn q_power(&self, e: u32) -> Result<Self> {
        if e == 0 {
            return Ok(self.clone());
        }
        let p = self.ring.characteristic();
        let q = p.checked_pow(e).ok_or(Error::ArithmeticOverflow("p^e"))?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.pow_scale(q)?, *c));
        }
        Ok(Polynomial { ring: Arc::clone(&self.ring), terms })
    }

    /// Make the leading coefficient 1.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        if lc.value() == 1 {
            return self.clone();
        }
        self.scale(self.ring.field().inv(lc))
    }

    /// Transport into another ring over the same field. `var_map[i]` gives
    /// the target index of source variable i, or None when the variable is
    /// required to be absent (contraction after elimination).
    pub(crate) fn map_vars(
        &self,
        target: &Arc<PolyRing>,
        var_map: &[Option<usize>],
    ) -> Result<Polynomial> {
        debug_assert_eq!(var_map.len(), self.ring.nvars());
        let mut raw = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match var_map[i] {
                    Some(j) => exps[j] = e,
                    None => return Err(Error::RingMismatch),
                }
            }
            raw.push((Monomial::new(exps)?, *c));
        }
        Ok(Polynomial::from_terms(target, raw))
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the expression grammar the parser accepts, so
    /// parse(print(f)) = f: terms descending in the ring order, explicit
    /// `*` between factors, `^` only for exponents above 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (t, (m, c)) in self.terms.iter().enumerate() {
            if t > 0 {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if c.value() != 1 || m.is_one() {
                write!(f, "{}", c.value())?;
                wrote_factor = true;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", vars[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ring2() -> Arc<PolyRing> {
        PolyRing::new(2, vec!["X", "Y"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn char_2_cancellation() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        assert!(x.add(&x).unwrap().is_zero());
    }

    #[test]
    fn freshman_dream() {
        let r = ring2();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let s = x.add(&y).unwrap();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, s.q_power(1).unwrap());
        assert_eq!(sq.to_string(), "X^2 + Y^2");
    }

    #[test]
    fn q_power_matches_repeated_mul_char_3() {
        let r = PolyRing::new(3, vec!["X", "Y"], MonomialOrder::GrevLex).unwrap();
        let f = Polynomial::var(&r, 0)
            .add(&Polynomial::var(&r, 1))
            .unwrap()
            .add(&Polynomial::one(&r))
            .unwrap();
        assert_eq!(f.q_power(1).unwrap(), f.pow(3).unwrap());
        assert_eq!(f.q_power(1).unwrap().to_string(), "X^3 + Y^3 + 1");
        assert_eq!(f.q_power(2).unwrap(), f.pow(9).unwrap());
    }

    #[test]
    fn display_canonical() {
        let r = PolyRing::new(5, vec!["X", "Y"], MonomialOrder::GrevLex).unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // 3xy + x + 4
        let f = x
            .mul(&y)
            .unwrap()
            .scale(r.field().elem(3))
            .add(&x)
            .unwrap()
            .add(&Polynomial::constant(&r, 4))
            .unwrap();
        assert_eq!(f.to_string(), "3*X*Y + X + 4");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    #[test]
    fn cross_ring_rejected() {
        let r1 = ring2();
        let r2 = PolyRing::new(3, vec!["X", "Y"], MonomialOrder::GrevLex).unwrap();
        let a = Polynomial::var(&r1, 0);
        let b = Polynomial::var(&r2, 0);
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }
}
