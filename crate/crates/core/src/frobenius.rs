//! Frobenius powers I^{[p^e]}, Frobenius roots I^{[1/p^e]}, and the ω_n
//! exponent sequence.
//!
//! Over S = F_p[x_1..x_r] the ring is free over its Frobenius image with
//! monomial basis {x^μ : all exponents of μ < q}, q = p^e. Writing each
//! term c·x^a as c·(x^{⌊a/q⌋})^q · x^{a mod q} decomposes any g uniquely
//! as g = Σ_μ (h_μ)^q x^μ, and the Frobenius root of an ideal — the
//! smallest t with I ⊆ t^{[q]} — is generated by the h_μ over all
//! generators and residues μ. Coefficients need no root-taking: F_p is
//! fixed by Frobenius.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::par;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::HashMap;
use std::sync::Arc;

/// Largest allowed q = p^e; larger values would let a single Frobenius
/// power blow through the monomial exponent cap.
pub const MAX_Q: u64 = 1 << 20;

/// A fixed (p, e, q = p^e) triple with the q-cap enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusContext {
    p: u64,
    e: u32,
    q: u64,
}

impl FrobeniusContext {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        let q = p.checked_pow(e).filter(|&q| q <= MAX_Q).ok_or(Error::ExponentOverflow)?;
        Ok(FrobeniusContext { p, e, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// ω_n = 1 + p + ⋯ + p^{n−1}, with ω_0 = 0; equivalently the recurrence
/// ω_{n+1} = 1 + p·ω_n. Values are capped below 2^63.
pub fn omega(n: u32, p: u64) -> Result<u64> {
    const CAP: u64 = 1 << 63;
    let mut w: u64 = 0;
    for _ in 0..n {
        w = p
            .checked_mul(w)
            .and_then(|x| x.checked_add(1))
            .filter(|&x| x < CAP)
            .ok_or(Error::ArithmeticOverflow("omega"))?;
    }
    Ok(w)
}

/// The prefix ω_0..ω_k for a fixed characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSequence {
    p: u64,
    values: Vec<u64>,
}

impl OmegaSequence {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        let mut values = Vec::with_capacity(k as usize + 1);
        for n in 0..=k {
            values.push(omega(n, p)?);
        }
        Ok(OmegaSequence { p, values })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, n: usize) -> u64 {
        self.values[n]
    }
}

/// The decomposition g = Σ_μ (h_μ)^q x^μ over the free Frobenius basis;
/// zero components are omitted and residues are sorted descending in the
/// ring order for reproducibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDecomposition {
    ring: Arc<PolyRing>,
    q: u64,
    components: Vec<(Monomial, Polynomial)>,
}

impl FrobeniusDecomposition {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn components(&self) -> &[(Monomial, Polynomial)] {
        &self.components
    }

    /// Σ_μ (h_μ)^q x^μ; equals the decomposed polynomial exactly.
    pub fn reconstruct(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(&self.ring);
        let one = self.ring.field().one();
        for (mu, h) in &self.components {
            let powed = h.q_power(e)?;
            acc = acc.add(&powed.mul(&Polynomial::term(&self.ring, mu.clone(), one))?)?;
        }
        Ok(acc)
    }
}

/// Split g over the basis x^μ, μ < q componentwise.
pub fn frobenius_decompose(g: &Polynomial, e: u32) -> Result<FrobeniusDecomposition> {
    let ring = g.ring();
    let ctx = FrobeniusContext::new(ring.characteristic(), e)?;
    let mut buckets: HashMap<Monomial, Vec<(Monomial, FieldElement)>> = HashMap::new();
    for (m, c) in g.terms() {
        let (quot, rem) = m.div_rem_scalar(ctx.q());
        buckets.entry(rem).or_default().push((quot, *c));
    }
    let mut components: Vec<(Monomial, Polynomial)> = buckets
        .into_iter()
        .map(|(mu, raw)| (mu, Polynomial::from_terms(ring, raw)))
        .filter(|(_, h)| !h.is_zero())
        .collect();
    let order = ring.order();
    components.sort_by(|a, b| order.cmp(&b.0, &a.0));
    Ok(FrobeniusDecomposition { ring: Arc::clone(ring), q: ctx.q(), components })
}

/// I^{[p^e]}: generated by the p^e-th powers of the generators (generator
/// powers suffice by flatness of Frobenius over a polynomial ring; the
/// test suite validates this on small instances against a degree-bounded
/// oracle).
pub fn frobenius_power(i: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Ok(i.clone());
    }
    let gens = par::try_map_collect(i.generators(), |g| g.q_power(e))?;
    Ideal::new(i.ring(), gens)
}

/// I^{[1/p^e]}: the smallest ideal t with I ⊆ t^{[p^e]}, generated by the
/// decomposition components of the generators. Per-generator work fans
/// out in parallel; the merge keeps generator order, so the output is
/// identical to the sequential build.
pub fn frobenius_root(i: &Ideal, e: u32) -> Result<Ideal> {
    if e == 0 {
        return Ok(i.clone());
    }
    let per_gen: Vec<Vec<Polynomial>> = par::try_map_collect(i.generators(), |g| {
        let dec = frobenius_decompose(g, e)?;
        Ok::<_, Error>(dec.components.into_iter().map(|(_, h)| h).collect())
    })?;
    Ideal::new(i.ring(), per_gen.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parser::parse_poly;

    fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(p, vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn gb_strings(i: &Ideal) -> Vec<String> {
        i.groebner_basis().unwrap().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn omega_values_and_recurrence() {
        assert_eq!(omega(0, 2).unwrap(), 0);
        assert_eq!(omega(1, 2).unwrap(), 1);
        assert_eq!(omega(3, 2).unwrap(), 7);
        assert_eq!(omega(3, 3).unwrap(), 13);
        for p in [2u64, 3, 5] {
            for n in 0..10 {
                assert_eq!(omega(n + 1, p).unwrap(), 1 + p * omega(n, p).unwrap());
            }
        }
        assert_eq!(omega(64, 2).unwrap_err(), Error::ArithmeticOverflow("omega"));
        let seq = OmegaSequence::new(2, 4).unwrap();
        assert_eq!(seq.values(), &[0, 1, 3, 7, 15]);
    }

    #[test]
    fn context_caps_q() {
        assert_eq!(FrobeniusContext::new(2, 3).unwrap().q(), 8);
        assert!(FrobeniusContext::new(2, 21).is_err());
        assert!(FrobeniusContext::new(3, 40).is_err());
    }

    #[test]
    fn decompose_single_terms() {
        let r = ring(2, &["X", "Y"]);
        // X^q for q = 4
        let g = parse_poly("X^4", &r).unwrap();
        let d = frobenius_decompose(&g, 2).unwrap();
        assert_eq!(d.components().len(), 1);
        let (mu, h) = &d.components()[0];
        assert!(mu.is_one());
        assert_eq!(h.to_string(), "X");

        // X^3 at q = 2: 3 = 2·1 + 1
        let g = parse_poly("X^3", &r).unwrap();
        let d = frobenius_decompose(&g, 1).unwrap();
        let (mu, h) = &d.components()[0];
        assert_eq!(mu.exponents(), &[1, 0]);
        assert_eq!(h.to_string(), "X");

        // X^2 Y^3 at q = 2 → μ = Y, h = XY
        let g = parse_poly("X^2*Y^3", &r).unwrap();
        let d = frobenius_decompose(&g, 1).unwrap();
        assert_eq!(d.components().len(), 1);
        let (mu, h) = &d.components()[0];
        assert_eq!(mu.exponents(), &[0, 1]);
        assert_eq!(h.to_string(), "X*Y");
        assert_eq!(d.reconstruct(1).unwrap(), g);
    }

    #[test]
    fn decompose_reconstructs_random_shapes() {
        let r = ring(3, &["x", "y"]);
        for s in ["x^7 + 2*y^5 + x*y", "x^9*y^9 + x + 1", "2*x^4*y^2 + y^8 + 2"] {
            let g = parse_poly(s, &r).unwrap();
            for e in 1..=2 {
                assert_eq!(frobenius_decompose(&g, e).unwrap().reconstruct(e).unwrap(), g);
            }
        }
    }

    #[test]
    fn power_examples() {
        let r = ring(2, &["X", "Y"]);
        let i = Ideal::parse(&r, &["X", "Y"]).unwrap();
        let sq = frobenius_power(&i, 1).unwrap();
        assert_eq!(gb_strings(&sq), vec!["X^2", "Y^2"]);
        assert!(frobenius_power(&Ideal::zero(&r), 3).unwrap().is_zero_ideal());

        let r2 = ring(2, &["W", "Y"]);
        let a = Ideal::parse(&r2, &["W^2", "W*Y"]).unwrap();
        let a2 = frobenius_power(&a, 1).unwrap();
        let expect = Ideal::parse(&r2, &["W^4", "W^2*Y^2"]).unwrap();
        assert!(a2.equals(&expect).unwrap());
    }

    #[test]
    fn root_examples() {
        let r = ring(2, &["X", "Y"]);
        for e in 1..=3u32 {
            let q = 1u64 << e;
            let i = Ideal::parse(&r, &[&format!("X^{q}")]).unwrap();
            let root = frobenius_root(&i, e).unwrap();
            assert_eq!(gb_strings(&root), vec!["X"]);
        }
        assert!(frobenius_root(&Ideal::zero(&r), 2).unwrap().is_zero_ideal());

        let r2 = ring(2, &["W", "Y"]);
        let w3 = Ideal::parse(&r2, &["W^3"]).unwrap();
        let root = frobenius_root(&w3, 1).unwrap();
        assert_eq!(gb_strings(&root), vec!["W"]);
        // the defining containment: (W^3) ⊆ (W)^{[2]} = (W^2)
        let back = frobenius_power(&root, 1).unwrap();
        assert!(back.contains_ideal(&w3).unwrap());
    }

    #[test]
    fn root_laws_small() {
        let r = ring(2, &["x", "y"]);
        let samples = [
            Ideal::parse(&r, &["x^2 + y", "x*y"]).unwrap(),
            Ideal::parse(&r, &["x^3*y + y^2", "x + y"]).unwrap(),
            Ideal::parse(&r, &["x^5", "y^3 + x"]).unwrap(),
        ];
        for i in &samples {
            for e in 1..=2u32 {
                // round trip and containment
                let pow = frobenius_power(i, e).unwrap();
                assert!(frobenius_root(&pow, e).unwrap().equals(i).unwrap());
                let root = frobenius_root(i, e).unwrap();
                assert!(frobenius_power(&root, e).unwrap().contains_ideal(i).unwrap());
            }
            // tower law
            let t1 = frobenius_root(&frobenius_root(i, 1).unwrap(), 1).unwrap();
            let t2 = frobenius_root(i, 2).unwrap();
            assert!(t1.equals(&t2).unwrap());
        }
    }

    #[test]
    fn root_level_zero_is_identity() {
        let r = ring(2, &["x"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(frobenius_root(&i, 0).unwrap().equals(&i).unwrap());
        assert!(frobenius_power(&i, 0).unwrap().equals(&i).unwrap());
    }
}
