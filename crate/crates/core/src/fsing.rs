//! F-singularity invariants of quotients R = S/a in characteristic p:
//! the adjoint colon ideal (a^{[p]} : a), Fedder's F-purity criterion,
//! selection of multipliers u ∈ (a^{[p]} : a) \ q^{[p]}, the descending
//! chains t_n = (S u^{ω_n})^{[1/p^n]} + a whose stabilization index is the
//! HSL number, and the test-ideal lower bound built from the stabilized
//! chain data.

use crate::error::{Error, Result};
use crate::frobenius::{frobenius_power, frobenius_root, omega};
use crate::groebner::Ideal;
use crate::ideal_ops::{ideal_colon, ideal_sum};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// (a^{[p]} : a); by convention the whole ring when a = 0.
pub fn frobenius_adjoint(a: &Ideal) -> Result<Ideal> {
    if a.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    if a.is_zero_ideal() {
        return Ideal::new(a.ring(), vec![Polynomial::one(a.ring())]);
    }
    let ap = frobenius_power(a, 1)?;
    ideal_colon(&ap, a)
}

/// Fedder's criterion: S/a is F-pure at the maximal ideal m iff
/// (a^{[p]} : a) ⊄ m^{[p]}.
pub fn fedder_fpure(a: &Ideal, m: &Ideal) -> Result<bool> {
    if m.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    if !m.contains_ideal(a)? {
        return Err(Error::NotContained);
    }
    let adjoint = frobenius_adjoint(a)?;
    let mp = frobenius_power(m, 1)?;
    Ok(!mp.contains_ideal(&adjoint)?)
}

/// Multiplier candidates at q, with the F-purity status they witness.
#[derive(Debug, Clone)]
pub struct SelectUReport {
    /// Reduced-basis generators of (a^{[p]} : a) lying outside q^{[p]}.
    pub candidates: Vec<Polynomial>,
    /// False exactly when the candidate list is empty: if every generator
    /// of the adjoint lies in q^{[p]}, so does the whole adjoint.
    pub f_pure: bool,
}

/// The elements u_1, …, u_l ∈ (a^{[p]} : a) \ q^{[p]}, taken from the
/// canonical reduced basis of the adjoint.
pub fn select_u_candidates(a: &Ideal, q: &Ideal) -> Result<SelectUReport> {
    if q.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    if !q.contains_ideal(a)? {
        return Err(Error::NotContained);
    }
    let adjoint = frobenius_adjoint(a)?;
    let qp = frobenius_power(q, 1)?;
    let mut candidates = Vec::new();
    for g in adjoint.groebner_basis()? {
        if !qp.contains(g)? {
            candidates.push(g.clone());
        }
    }
    let f_pure = !candidates.is_empty();
    Ok(SelectUReport { candidates, f_pure })
}

/// Data for an HSL chain run: a defining ideal a, a multiplier
/// u ∈ (a^{[p]} : a) (checked at construction), and a length cap.
#[derive(Debug, Clone)]
pub struct HSLChainSpec {
    a: Ideal,
    u: Polynomial,
    max_e: u32,
}

impl HSLChainSpec {
    pub fn new(a: Ideal, u: Polynomial, max_e: u32) -> Result<Self> {
        if !PolyRing::same_ring(u.ring(), a.ring()) {
            return Err(Error::RingMismatch);
        }
        if !frobenius_adjoint(&a)?.contains(&u)? {
            return Err(Error::InvalidU);
        }
        Ok(HSLChainSpec { a, u, max_e })
    }

    pub fn a(&self) -> &Ideal {
        &self.a
    }

    pub fn u(&self) -> &Polynomial {
        &self.u
    }

    pub fn max_e(&self) -> u32 {
        self.max_e
    }
}

/// The computed chain t_0 ⊇ t_1 ⊇ ⋯ with its stabilization index.
#[derive(Debug, Clone)]
pub struct HSLReport {
    /// t_0, …, t_{hsl+1} when stable; t_0, …, t_{max_e} otherwise.
    pub chain: Vec<Ideal>,
    /// The least n with t_n = t_{n+1}, when found within max_e.
    pub hsl: Option<u32>,
    pub stable: bool,
}

fn chain_element(a: &Ideal, u: &Polynomial, n: u32) -> Result<Ideal> {
    let p = a.ring().characteristic();
    let u_pow = u.pow(omega(n, p)?)?;
    let root = frobenius_root(&Ideal::principal(u_pow), n)?;
    ideal_sum(&root, a)
}

/// Compute t_n = (S u^{ω_n})^{[1/p^n]} + a until two consecutive chain
/// ideals agree; the first such index is the HSL number (once equal the
/// chain is constant, so searching for the first equality is exact).
/// The descending-chain law t_n ⊇ t_{n+1} is asserted at every step, and
/// persistence is spot-checked one step past stabilization.
pub fn hsl_chain(spec: &HSLChainSpec) -> Result<HSLReport> {
    let mut chain = vec![chain_element(&spec.a, &spec.u, 0)?];
    for n in 0..spec.max_e {
        let next = chain_element(&spec.a, &spec.u, n + 1)?;
        let prev = chain.last().expect("chain nonempty");
        if !prev.contains_ideal(&next)? {
            return Err(Error::ChainViolation(n as usize));
        }
        let stable = prev.equals(&next)?;
        chain.push(next);
        if stable {
            // Persistence: one more element must agree as well. Skip only
            // if computing it overflows the exponent caps the run itself
            // stayed inside.
            if let Ok(after) = chain_element(&spec.a, &spec.u, n + 2) {
                if !after.equals(chain.last().expect("chain nonempty"))? {
                    return Err(Error::ChainViolation(n as usize + 1));
                }
            }
            return Ok(HSLReport { chain, hsl: Some(n), stable: true });
        }
    }
    Ok(HSLReport { chain, hsl: None, stable: false })
}

/// The global stabilization index of the chain, bounding the HSL number
/// of every localization; `None` means unresolved within max_e.
pub fn uniform_hsl_bound(a: &Ideal, u: &Polynomial, max_e: u32) -> Result<Option<u32>> {
    let spec = HSLChainSpec::new(a.clone(), u.clone(), max_e)?;
    Ok(hsl_chain(&spec)?.hsl)
}

/// Data for the test-ideal lower bound t = a + Σ_{n≥h} (S d^{p^h} u^{ω_n})^{[1/p^n]}.
#[derive(Debug, Clone)]
pub struct TestIdealBoundSpec {
    a: Ideal,
    u: Polynomial,
    d: Polynomial,
    h: u32,
    max_e: u32,
}

impl TestIdealBoundSpec {
    /// Validates d ∉ a, u ∈ (a^{[p]} : a), and h ≥ the chain's
    /// stabilization index (when the chain stabilizes within max_e; an
    /// unresolved chain cannot be checked and is accepted as-is).
    pub fn new(a: Ideal, u: Polynomial, d: Polynomial, h: u32, max_e: u32) -> Result<Self> {
        if !PolyRing::same_ring(u.ring(), a.ring()) || !PolyRing::same_ring(d.ring(), a.ring()) {
            return Err(Error::RingMismatch);
        }
        if a.contains(&d)? {
            return Err(Error::DInDefiningIdeal);
        }
        let chain_spec = HSLChainSpec::new(a.clone(), u.clone(), max_e)?;
        if let Some(hsl) = hsl_chain(&chain_spec)?.hsl {
            if h < hsl {
                return Err(Error::HBelowHsl { h: h as usize, hsl: hsl as usize });
            }
        }
        Ok(TestIdealBoundSpec { a, u, d, h, max_e })
    }

    pub fn a(&self) -> &Ideal {
        &self.a
    }
}

/// Result of the partial-sum computation.
#[derive(Debug, Clone)]
pub struct TestIdealBound {
    /// The stabilized (or truncated) partial sum σ_k.
    pub ideal: Ideal,
    /// True when σ_k = σ_{k+1} was reached; the first repeat is a
    /// stopping heuristic, recorded honestly rather than claimed as proof
    /// that the tail adds nothing.
    pub stable: bool,
    /// The positivity claim in its checkable form: σ_k ⊋ a.
    pub strictly_contains_a: bool,
}

/// Ascending partial sums σ_k = a + Σ_{h≤n≤k} (S d^{p^h} u^{ω_n})^{[1/p^n]},
/// stopping at the first k with σ_k = σ_{k+1} or at max_e.
pub fn test_ideal_lower_bound(spec: &TestIdealBoundSpec) -> Result<TestIdealBound> {
    let p = spec.a.ring().characteristic();
    let d_pow = spec.d.q_power(spec.h)?;
    let summand = |n: u32| -> Result<Ideal> {
        let g = d_pow.mul(&spec.u.pow(omega(n, p)?)?)?;
        frobenius_root(&Ideal::principal(g), n)
    };
    let mut sigma = ideal_sum(&spec.a, &summand(spec.h)?)?;
    let mut stable = false;
    let mut k = spec.h;
    while k < spec.max_e {
        let next = ideal_sum(&sigma, &summand(k + 1)?)?;
        if next.equals(&sigma)? {
            stable = true;
            break;
        }
        sigma = next;
        k += 1;
    }
    let strictly_contains_a = !spec.a.contains_ideal(&sigma)?;
    Ok(TestIdealBound { ideal: sigma, stable, strictly_contains_a })
}
