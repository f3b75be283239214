//! The ideal calculus: sum, product, intersection, colon, elimination,
//! and saturation.
//!
//! Intersection goes through the tag-variable construction — the simplest
//! method that is exact at this scale: I ∩ J is the elimination of t from
//! t·I + (1−t)·J in S[t] under an order making t dominate. Colon is built
//! on intersection plus exact division, and saturation iterates colon to
//! a fixpoint (Noetherianity terminates the loop; no step cap needed).

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

fn check_same_ring(i: &Ideal, j: &Ideal) -> Result<()> {
    if PolyRing::same_ring(i.ring(), j.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn ideal_sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let mut gens = i.generators().to_vec();
    gens.extend_from_slice(j.generators());
    Ideal::new(i.ring(), gens)
}

pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let mut gens = Vec::with_capacity(i.generators().len() * j.generators().len());
    for a in i.generators() {
        for b in j.generators() {
            gens.push(a.mul(b)?);
        }
    }
    Ideal::new(i.ring(), gens)
}

/// I ∩ (subring generated by all but the first `k` variables), returned
/// as an ideal of that smaller ring. Computed with a block order that
/// makes the first `k` variables dominate; basis elements free of them
/// generate the elimination ideal.
pub fn ideal_eliminate(i: &Ideal, k: usize) -> Result<Ideal> {
    let ring = i.ring();
    let n = ring.nvars();
    if k == 0 || k >= n {
        return Err(Error::InvalidElimination(k, n));
    }
    let small_order = match ring.order() {
        MonomialOrder::Block(_) => MonomialOrder::GrevLex,
        o => o,
    };
    let small = PolyRing::new(ring.characteristic(), ring.vars()[k..].to_vec(), small_order)?;
    let down: Vec<Option<usize>> = (0..n).map(|v| if v < k { None } else { Some(v - k) }).collect();
    let elim_gens = eliminate_in_place(i, k)?;
    let mapped = elim_gens.iter().map(|g| g.map_vars(&small, &down)).collect::<Result<Vec<_>>>()?;
    Ideal::new(&small, mapped)
}

/// The elimination computation itself: basis elements (in the same ring)
/// not involving the first `k` variables.
fn eliminate_in_place(i: &Ideal, k: usize) -> Result<Vec<Polynomial>> {
    let ring = i.ring();
    let block_ring = ring.with_order(MonomialOrder::Block(k))?;
    let ident: Vec<Option<usize>> = (0..ring.nvars()).map(Some).collect();
    let gens = i
        .generators()
        .iter()
        .map(|g| g.map_vars(&block_ring, &ident))
        .collect::<Result<Vec<_>>>()?;
    let gb = Ideal::new(&block_ring, gens)?;
    let mut kept = Vec::new();
    for g in gb.groebner_basis()? {
        let free = g.terms().iter().all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0));
        if free {
            kept.push(g.map_vars(ring, &ident)?);
        }
    }
    Ok(kept)
}

/// I ∩ J via the tag variable: eliminate t from t·I + (1−t)·J.
pub fn ideal_intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    let ring = i.ring();
    if i.is_zero_ideal() || j.is_zero_ideal() {
        return Ok(Ideal::zero(ring));
    }
    let tag = ring.fresh_var_name("t");
    let ext = ring.extended(&[&tag], MonomialOrder::Block(1))?;
    let up: Vec<Option<usize>> = (0..ring.nvars()).map(|v| Some(v + 1)).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = Polynomial::one(&ext).sub(&t)?;
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for g in i.generators() {
        gens.push(g.map_vars(&ext, &up)?.mul(&t)?);
    }
    for g in j.generators() {
        gens.push(g.map_vars(&ext, &up)?.mul(&one_minus_t)?);
    }
    let tagged = Ideal::new(&ext, gens)?;
    let down: Vec<Option<usize>> =
        std::iter::once(None).chain((0..ring.nvars()).map(Some)).collect();
    let mut kept = Vec::new();
    for g in tagged.groebner_basis()? {
        let free = g.terms().iter().all(|(m, _)| m.exponents()[0] == 0);
        if free {
            kept.push(g.map_vars(ring, &down)?);
        }
    }
    Ideal::new(ring, kept)
}

/// Exact quotient f / g for f ∈ (g); division failure is a bug, not an
/// input condition, and aborts loudly.
fn exact_div(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut work = f.clone();
    let mut quot = Polynomial::zero(ring);
    while !work.is_zero() {
        let lm = work.leading_monomial().clone();
        assert!(g.leading_monomial().divides(&lm), "exact division failed: {work} by {g}");
        let tm = lm.div(g.leading_monomial());
        let tc = field.mul(work.leading_coeff(), field.inv(g.leading_coeff()));
        let term = Polynomial::term(ring, tm, tc);
        work = work.sub(&g.mul(&term).expect("division step overflow")).expect("same ring");
        quot = quot.add(&term).expect("same ring");
    }
    quot
}

/// (I : g) for a single nonzero g: generators of I ∩ (g), each divided
/// exactly by g.
pub fn ideal_colon_elem(i: &Ideal, g: &Polynomial) -> Result<Ideal> {
    if g.is_zero() {
        return Err(Error::ColonByZero);
    }
    if !PolyRing::same_ring(g.ring(), i.ring()) {
        return Err(Error::RingMismatch);
    }
    let meet = ideal_intersect(i, &Ideal::principal(g.clone()))?;
    let gens: Vec<Polynomial> = meet.generators().iter().map(|f| exact_div(f, g)).collect();
    Ideal::new(i.ring(), gens)
}

/// (I : J) = { h : hJ ⊆ I }, as the intersection of (I : g) over the
/// generators g of J.
pub fn ideal_colon(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    check_same_ring(i, j)?;
    if j.is_zero_ideal() {
        return Err(Error::ColonByZero);
    }
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let q = ideal_colon_elem(i, g)?;
        acc = Some(match acc {
            None => q,
            Some(prev) => ideal_intersect(&prev, &q)?,
        });
    }
    Ok(acc.expect("nonzero ideal has a generator"))
}

/// (I : f^∞): iterate (· : f) until the chain stabilizes.
pub fn ideal_saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::SaturateByZero);
    }
    let mut prev = i.clone();
    loop {
        let next = ideal_colon_elem(&prev, f)?;
        if next.equals(&prev)? {
            return Ok(prev);
        }
        prev = next;
    }
}
