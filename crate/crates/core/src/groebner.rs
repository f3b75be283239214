//! Buchberger's algorithm, normal forms, and the membership / equality
//! primitives the rest of the library is built on.
//!
//! The reduced Groebner basis (monic, auto-reduced, sorted descending by
//! leading monomial) is the canonical form of an ideal: two ideals over
//! the same ring and order are equal iff their reduced bases agree term
//! by term. The S-pair queue is a `BTreeSet` keyed by (lcm degree, i, j),
//! so runs are reproducible bytewise; the reduced basis is additionally
//! unique as a mathematical object, which makes the output independent of
//! the selection strategy altogether.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::monomial::Monomial;
use crate::par;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

/// An ideal of a polynomial ring, given by generators, with a lazily
/// computed (at most once) reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    gb: OnceLock<Result<Vec<Polynomial>>>,
}

/// S-pair selection order. `DegreeThenIndex` is the production strategy;
/// `IndexOrder` exists so the test suite can confirm the canonical output
/// does not depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SPairStrategy {
    DegreeThenIndex,
    IndexOrder,
}

impl Ideal {
    /// Zero generators are dropped; all generators must share `ring`.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !PolyRing::same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: Arc::clone(ring),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Ideal { ring: Arc::clone(ring), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn principal(f: Polynomial) -> Self {
        let ring = Arc::clone(f.ring());
        Ideal {
            generators: if f.is_zero() { Vec::new() } else { vec![f] },
            ring,
            gb: OnceLock::new(),
        }
    }

    /// Convenience constructor from expression strings.
    pub fn parse(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Self> {
        let gens =
            gens.iter().map(|s| crate::parser::parse_poly(s, ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// The reduced Groebner basis under the ring's order, cached on first
    /// use (single-assignment; concurrent callers may race to compute but
    /// the stored value is written once and identical either way).
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        let r = self.gb.get_or_init(|| {
            reduced_groebner_basis(&self.ring, &self.generators, SPairStrategy::DegreeThenIndex)
        });
        match r {
            Ok(v) => Ok(v.as_slice()),
            Err(e) => Err(e.clone()),
        }
    }

    /// The unique remainder of `f` modulo the reduced Groebner basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !PolyRing::same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        reduce_full(f, self.groebner_basis()?)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        if !PolyRing::same_ring(&other.ring, &self.ring) {
            return Err(Error::RingMismatch);
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via canonical forms: reduced bases coincide termwise.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !PolyRing::same_ring(&other.ring, &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].is_one())
    }
}

/// Full reduction: returns the remainder with no term divisible by any
/// basis leading monomial. Reducer selection (first match in basis order)
/// is fixed, so the computation path is deterministic.
pub(crate) fn reduce_full(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring();
    let field = ring.field();
    let mut work = f.clone();
    let mut remainder: Vec<(Monomial, FieldElement)> = Vec::new();
    'outer: while !work.is_zero() {
        let lm = work.leading_monomial().clone();
        let lc = work.leading_coeff();
        for g in basis {
            if g.leading_monomial().divides(&lm) {
                let t = lm.div(g.leading_monomial());
                let factor = field.mul(lc, field.inv(g.leading_coeff()));
                work = work.sub(&g.mul_term(&t, factor)?)?;
                continue 'outer;
            }
        }
        remainder.push((lm, lc));
        work = work.tail();
    }
    // Successive leading monomials strictly decrease, so `remainder` is
    // already in canonical order.
    Ok(Polynomial::from_sorted_terms(ring, remainder))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let field = f.ring().field();
    let l = f.leading_monomial().lcm(g.leading_monomial());
    let a = f.mul_term(&l.div(f.leading_monomial()), field.inv(f.leading_coeff()))?;
    let b = g.mul_term(&l.div(g.leading_monomial()), field.inv(g.leading_coeff()))?;
    a.sub(&b)
}

/// Buchberger's algorithm with the product and chain criteria, followed
/// by minimalization and tail reduction to the unique reduced basis.
pub fn reduced_groebner_basis(
    ring: &Arc<PolyRing>,
    generators: &[Polynomial],
    strategy: SPairStrategy,
) -> Result<Vec<Polynomial>> {
    let mut basis: Vec<Polynomial> = generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let pair_key = |basis: &[Polynomial], i: usize, j: usize| -> (u64, usize, usize) {
        let deg = match strategy {
            SPairStrategy::DegreeThenIndex => {
                basis[i].leading_monomial().lcm(basis[j].leading_monomial()).degree()
            }
            SPairStrategy::IndexOrder => 0,
        };
        (deg, i, j)
    };

    let mut pending: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert(pair_key(&basis, i, j));
        }
    }

    while let Some(&entry) = pending.iter().next() {
        pending.remove(&entry);
        let (_, i, j) = entry;
        let lm_i = basis[i].leading_monomial();
        let lm_j = basis[j].leading_monomial();
        // Product criterion: coprime leading monomials reduce to zero.
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        // Chain criterion: skip when some k divides the lcm and both
        // companion pairs have already been handled.
        let lcm = lm_i.lcm(lm_j);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().divides(&lcm)
                && !pending.contains(&pair_key(&basis, i.min(k), i.max(k)))
                && !pending.contains(&pair_key(&basis, j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = reduce_full(&s, &basis)?;
        if !r.is_zero() {
            basis.push(r.monic());
            let n = basis.len() - 1;
            for i2 in 0..n {
                pending.insert(pair_key(&basis, i2, n));
            }
        }
    }

    // Minimalize: keep only elements whose leading monomial is not
    // divisible by another kept one (scan ascending so divisors win).
    let order = ring.order();
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| order.cmp(basis[a].leading_monomial(), basis[b].leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for &i in &idx {
        if !minimal.iter().any(|h| h.leading_monomial().divides(basis[i].leading_monomial())) {
            minimal.push(basis[i].clone());
        }
    }

    // Tail-reduce each element against a snapshot of the others. Leading
    // monomials are pairwise non-dividing, so they survive; the outcome is
    // the unique reduced basis, independent of sweep order — which is what
    // lets the sweep run in parallel.
    let snapshot = minimal.clone();
    let mut reduced: Vec<Polynomial> = par::try_map_collect(&minimal, |g| {
        let others: Vec<Polynomial> = snapshot
            .iter()
            .filter(|h| h.leading_monomial() != g.leading_monomial())
            .cloned()
            .collect();
        Ok::<_, Error>(reduce_full(g, &others)?.monic())
    })?;
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial(), a.leading_monomial()));
    Ok(reduced)
}
