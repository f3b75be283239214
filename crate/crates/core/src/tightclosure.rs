//! Bounded-level tight-closure certificates on quotients R = S/a.
//!
//! Tight closure quantifies over all n ≫ 0; no finite computation decides
//! it in general. Everything here is therefore a *certificate*: a pass at
//! levels 0..N is evidence consistent with membership, never a theorem.
//! Negative directions are exact where stated (a failed level is a real
//! failure; nilpotency checks return "unresolved" rather than a definite
//! no). Minimal primes are trusted user input — computing them would need
//! primary decomposition, which is out of scope — but every supplied list
//! is validated for containment and pairwise incomparability.

use crate::error::{Error, Result};
use crate::frobenius::frobenius_power;
use crate::groebner::Ideal;
use crate::ideal_ops::{ideal_saturate, ideal_sum};
use crate::par;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::num::NonZeroU32;
use std::sync::Arc;

/// A quotient R = S/a together with optional user-supplied minimal
/// primes of a (hand-verified in all shipped examples).
#[derive(Debug, Clone)]
pub struct QuotientRingCtx {
    a: Ideal,
    min_primes: Option<Vec<Ideal>>,
}

impl QuotientRingCtx {
    pub fn new(a: Ideal, min_primes: Option<Vec<Ideal>>) -> Result<Self> {
        if a.is_unit_ideal()? {
            return Err(Error::UnitIdeal);
        }
        if let Some(primes) = &min_primes {
            if primes.is_empty() {
                return Err(Error::EmptyFamily);
            }
            for (i, p) in primes.iter().enumerate() {
                if !PolyRing::same_ring(p.ring(), a.ring()) {
                    return Err(Error::RingMismatch);
                }
                if !p.contains_ideal(&a)? {
                    return Err(Error::MinPrimeDoesNotContain(i));
                }
            }
            for i in 0..primes.len() {
                for j in (i + 1)..primes.len() {
                    if primes[i].contains_ideal(&primes[j])?
                        || primes[j].contains_ideal(&primes[i])?
                    {
                        return Err(Error::MinPrimesComparable(i, j));
                    }
                }
            }
        }
        Ok(QuotientRingCtx { a, min_primes })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        self.a.ring()
    }

    pub fn a(&self) -> &Ideal {
        &self.a
    }

    pub fn min_primes(&self) -> Option<&[Ideal]> {
        self.min_primes.as_deref()
    }
}

/// c ∈ R°: outside every minimal prime of a. Demands the prime list —
/// guessing R° without it would be unsound.
pub fn in_r_circ(c: &Polynomial, q: &QuotientRingCtx) -> Result<bool> {
    let primes = q.min_primes().ok_or(Error::MinPrimesMissing)?;
    if !PolyRing::same_ring(c.ring(), q.ring()) {
        return Err(Error::RingMismatch);
    }
    for p in primes {
        if p.contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One candidate membership r ∈ b^* with witness c, checked at levels
/// 0..=level.
#[derive(Debug, Clone)]
pub struct TightClosureQuery {
    pub r: Polynomial,
    pub b: Ideal,
    pub c: Polynomial,
    pub level: NonZeroU32,
}

/// Per-level outcomes of a certificate run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TcReport {
    /// levels[n] ⟺ c·r^{p^n} ∈ b^{[p^n]} + a.
    pub levels: Vec<bool>,
    pub all_pass: bool,
}

/// Check c·r^{p^n} ∈ b^{[p^n]} + a for n = 0..=N. Levels are independent
/// and fan out in parallel; the report keeps level order.
pub fn tc_certificate(query: &TightClosureQuery, q: &QuotientRingCtx) -> Result<TcReport> {
    let ring = q.ring();
    if !PolyRing::same_ring(query.r.ring(), ring)
        || !PolyRing::same_ring(query.c.ring(), ring)
        || !PolyRing::same_ring(query.b.ring(), ring)
    {
        return Err(Error::RingMismatch);
    }
    let ns: Vec<u32> = (0..=query.level.get()).collect();
    let levels = par::try_map_collect(&ns, |&n| {
        let target = ideal_sum(&frobenius_power(&query.b, n)?, q.a())?;
        let elem = query.c.mul(&query.r.q_power(n)?)?;
        target.contains(&elem)
    })?;
    let all_pass = levels.iter().all(|&ok| ok);
    Ok(TcReport { levels, all_pass })
}

/// Certificate data for one ideal of the family.
#[derive(Debug, Clone)]
pub struct FamilyEntryReport {
    /// One report per supplied closure element, in input order.
    pub per_element: Vec<TcReport>,
}

/// Outcome of a test-element certificate over an ideal family.
#[derive(Debug, Clone)]
pub struct TestElementReport {
    pub entries: Vec<FamilyEntryReport>,
    pub all_pass: bool,
}

/// Check that c witnesses r ∈ b^* at levels 0..=N for every ideal b of
/// the family and every supplied closure element r. An all-pass makes c
/// a test-element candidate for the family at these levels.
pub fn test_element_certificate(
    c: &Polynomial,
    ideals: &[Ideal],
    closure_elems: &[Vec<Polynomial>],
    level: NonZeroU32,
    q: &QuotientRingCtx,
) -> Result<TestElementReport> {
    if ideals.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if closure_elems.len() != ideals.len() {
        return Err(Error::FamilyShapeMismatch(closure_elems.len()));
    }
    if !in_r_circ(c, q)? {
        return Err(Error::NotInRCirc);
    }
    let mut entries = Vec::with_capacity(ideals.len());
    let mut all_pass = true;
    for (b, elems) in ideals.iter().zip(closure_elems) {
        let per_element = elems
            .iter()
            .map(|r| {
                tc_certificate(
                    &TightClosureQuery { r: r.clone(), b: b.clone(), c: c.clone(), level },
                    q,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        all_pass &= per_element.iter().all(|rep| rep.all_pass);
        entries.push(FamilyEntryReport { per_element });
    }
    Ok(TestElementReport { entries, all_pass })
}

/// Bounded nilpotency: never a definite "no" — failure to reach a power
/// inside `a` within k_max levels is inconclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    /// r^{p^k} ∈ a at this k (the first one found).
    NilpotentAtLevel(u32),
    Unresolved,
}

pub fn is_nilpotent(r: &Polynomial, q: &QuotientRingCtx, k_max: u32) -> Result<Nilpotency> {
    if !PolyRing::same_ring(r.ring(), q.ring()) {
        return Err(Error::RingMismatch);
    }
    for k in 1..=k_max {
        if q.a().contains(&r.q_power(k)?)? {
            return Ok(Nilpotency::NilpotentAtLevel(k));
        }
    }
    Ok(Nilpotency::Unresolved)
}

/// Outcome of the (R_0) check: the saturation-extracted primary
/// component at each minimal prime, and whether all of them are prime
/// (equal to the supplied minimal primes).
#[derive(Debug, Clone)]
pub struct R0Report {
    pub components: Vec<Ideal>,
    pub holds: bool,
}

/// (R_0) certificate: for each supplied minimal prime π_i, extract the
/// π_i-primary component of a as (a : s_i^∞) using a user-chosen
/// separator s_i ∈ (⋂_{j≠i} π_j) \ π_i (the intersection condition is
/// vacuous for a single prime), and compare it with π_i. A `false` means
/// this separator choice failed to certify, not a disproof.
pub fn r0_certificate(q: &QuotientRingCtx, separators: &[Polynomial]) -> Result<R0Report> {
    let primes = q.min_primes().ok_or(Error::MinPrimesMissing)?;
    if separators.len() != primes.len() {
        return Err(Error::FamilyShapeMismatch(separators.len()));
    }
    for (i, s) in separators.iter().enumerate() {
        if !PolyRing::same_ring(s.ring(), q.ring()) {
            return Err(Error::RingMismatch);
        }
        if primes[i].contains(s)? {
            return Err(Error::InvalidSeparator(i));
        }
        for (j, p) in primes.iter().enumerate() {
            if j != i && !p.contains(s)? {
                return Err(Error::InvalidSeparator(i));
            }
        }
    }
    let mut components = Vec::with_capacity(primes.len());
    let mut holds = true;
    for (p, s) in primes.iter().zip(separators) {
        let component = ideal_saturate(q.a(), s)?;
        holds &= component.equals(p)?;
        components.push(component);
    }
    Ok(R0Report { components, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parser::parse_poly;

    fn ring(p: u64, vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(p, vars.to_vec(), MonomialOrder::GrevLex).unwrap()
    }

    fn in2_ctx() -> (Arc<PolyRing>, QuotientRingCtx) {
        let r = ring(2, &["W", "Y"]);
        let a = Ideal::parse(&r, &["W^2", "W*Y"]).unwrap();
        let w = Ideal::parse(&r, &["W"]).unwrap();
        let q = QuotientRingCtx::new(a, Some(vec![w])).unwrap();
        (r, q)
    }

    fn lvl(n: u32) -> NonZeroU32 {
        NonZeroU32::new(n).unwrap()
    }

    #[test]
    fn r_circ_membership() {
        let (r, q) = in2_ctx();
        assert!(in_r_circ(&parse_poly("Y", &r).unwrap(), &q).unwrap());
        assert!(!in_r_circ(&parse_poly("W", &r).unwrap(), &q).unwrap());
        assert!(!in_r_circ(&Polynomial::zero(&r), &q).unwrap());

        let no_primes = QuotientRingCtx::new(Ideal::parse(&r, &["W"]).unwrap(), None).unwrap();
        assert_eq!(
            in_r_circ(&parse_poly("Y", &r).unwrap(), &no_primes).unwrap_err(),
            Error::MinPrimesMissing
        );
    }

    #[test]
    fn ctx_validation() {
        let r = ring(2, &["X", "Y"]);
        let unit = Ideal::parse(&r, &["1"]).unwrap();
        assert_eq!(QuotientRingCtx::new(unit, None).unwrap_err(), Error::UnitIdeal);

        let a = Ideal::parse(&r, &["X*Y"]).unwrap();
        let bad = QuotientRingCtx::new(
            a.clone(),
            Some(vec![Ideal::parse(&r, &["Y"]).unwrap(), Ideal::parse(&r, &["X", "Y"]).unwrap()]),
        );
        assert_eq!(bad.unwrap_err(), Error::MinPrimesComparable(0, 1));

        let bad = QuotientRingCtx::new(a, Some(vec![Ideal::parse(&r, &["X + 1"]).unwrap()]));
        assert_eq!(bad.unwrap_err(), Error::MinPrimeDoesNotContain(0));
    }

    #[test]
    fn tc_levels_pass_for_annihilated_product() {
        let (r, q) = in2_ctx();
        let query = TightClosureQuery {
            r: parse_poly("W", &r).unwrap(),
            b: Ideal::parse(&r, &["Y"]).unwrap(),
            c: parse_poly("Y", &r).unwrap(),
            level: lvl(5),
        };
        let report = tc_certificate(&query, &q).unwrap();
        assert!(report.all_pass);
        assert_eq!(report.levels.len(), 6);
    }

    #[test]
    fn tc_member_with_unit_witness() {
        let (r, q) = in2_ctx();
        let query = TightClosureQuery {
            r: parse_poly("Y", &r).unwrap(),
            b: Ideal::parse(&r, &["Y"]).unwrap(),
            c: Polynomial::one(&r),
            level: lvl(4),
        };
        assert!(tc_certificate(&query, &q).unwrap().all_pass);
    }

    #[test]
    fn tc_fails_at_level_zero() {
        let r = ring(2, &["X", "Y"]);
        let q = QuotientRingCtx::new(Ideal::zero(&r), None).unwrap();
        let query = TightClosureQuery {
            r: parse_poly("Y", &r).unwrap(),
            b: Ideal::parse(&r, &["X"]).unwrap(),
            c: Polynomial::one(&r),
            level: lvl(3),
        };
        let report = tc_certificate(&query, &q).unwrap();
        assert!(!report.all_pass);
        assert!(!report.levels[0]);
    }

    #[test]
    fn tc_level_zero_is_plain_membership() {
        let (r, q) = in2_ctx();
        for (rr, bb, cc) in [("W", "Y", "Y"), ("Y", "W + Y", "Y"), ("W + Y", "Y^2", "Y")] {
            let b = Ideal::parse(&r, &[bb]).unwrap();
            let query = TightClosureQuery {
                r: parse_poly(rr, &r).unwrap(),
                b: b.clone(),
                c: parse_poly(cc, &r).unwrap(),
                level: lvl(1),
            };
            let report = tc_certificate(&query, &q).unwrap();
            let direct =
                ideal_sum(&b, q.a()).unwrap().contains(&query.c.mul(&query.r).unwrap()).unwrap();
            assert_eq!(report.levels[0], direct);
        }
    }

    #[test]
    fn witness_monotonicity() {
        let (r, q) = in2_ctx();
        for s in ["Y", "W + Y", "Y^2 + Y"] {
            let scaled = parse_poly("Y", &r).unwrap().mul(&parse_poly(s, &r).unwrap()).unwrap();
            let query = TightClosureQuery {
                r: parse_poly("W", &r).unwrap(),
                b: Ideal::parse(&r, &["Y"]).unwrap(),
                c: scaled,
                level: lvl(5),
            };
            assert!(tc_certificate(&query, &q).unwrap().all_pass);
        }
    }

    #[test]
    fn in2_test_element_family() {
        let (r, q) = in2_ctx();
        let c = parse_poly("Y", &r).unwrap();
        let ideals = vec![
            Ideal::zero(&r),
            Ideal::parse(&r, &["Y"]).unwrap(),
            Ideal::parse(&r, &["Y^2"]).unwrap(),
            Ideal::parse(&r, &["W + Y"]).unwrap(),
        ];
        let w = parse_poly("W", &r).unwrap();
        let closure: Vec<Vec<Polynomial>> = ideals
            .iter()
            .map(|b| {
                let mut elems = b.generators().to_vec();
                elems.push(w.clone());
                elems
            })
            .collect();
        let report = test_element_certificate(&c, &ideals, &closure, lvl(6), &q).unwrap();
        assert!(report.all_pass);

        // W is inside the minimal prime (W): not an admissible witness.
        assert_eq!(
            test_element_certificate(&w, &ideals, &closure, lvl(6), &q).unwrap_err(),
            Error::NotInRCirc
        );
    }

    #[test]
    fn unit_witness_in_regular_ring() {
        let r = ring(2, &["X", "Y"]);
        let q = QuotientRingCtx::new(Ideal::zero(&r), Some(vec![Ideal::zero(&r)])).unwrap();
        let ideals =
            vec![Ideal::parse(&r, &["X"]).unwrap(), Ideal::parse(&r, &["X", "Y"]).unwrap()];
        let closure: Vec<Vec<Polynomial>> =
            ideals.iter().map(|b| b.generators().to_vec()).collect();
        let report =
            test_element_certificate(&Polynomial::one(&r), &ideals, &closure, lvl(4), &q).unwrap();
        assert!(report.all_pass);
    }

    #[test]
    fn nilpotency_checks() {
        let (r, q) = in2_ctx();
        assert_eq!(
            is_nilpotent(&parse_poly("W", &r).unwrap(), &q, 3).unwrap(),
            Nilpotency::NilpotentAtLevel(1)
        );
        assert_eq!(
            is_nilpotent(&parse_poly("Y", &r).unwrap(), &q, 3).unwrap(),
            Nilpotency::Unresolved
        );
        assert_eq!(
            is_nilpotent(&Polynomial::zero(&r), &q, 3).unwrap(),
            Nilpotency::NilpotentAtLevel(1)
        );
    }

    #[test]
    fn r0_in2_example() {
        let (r, q) = in2_ctx();
        let report = r0_certificate(&q, &[parse_poly("Y", &r).unwrap()]).unwrap();
        assert!(report.holds);
        assert_eq!(
            report.components[0]
                .groebner_basis()
                .unwrap()
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>(),
            vec!["W"]
        );

        // An admissible but unhelpful separator fails to certify: the
        // saturation at 1 leaves the embedded component in place.
        let weak = r0_certificate(&q, &[Polynomial::one(&r)]).unwrap();
        assert!(!weak.holds);

        // a separator inside the prime is rejected outright
        assert_eq!(
            r0_certificate(&q, &[parse_poly("W", &r).unwrap()]).unwrap_err(),
            Error::InvalidSeparator(0)
        );
    }

    #[test]
    fn r0_detects_non_reduced_line() {
        let r = ring(2, &["X", "Y"]);
        let a = Ideal::parse(&r, &["X^2"]).unwrap();
        let q = QuotientRingCtx::new(a, Some(vec![Ideal::parse(&r, &["X"]).unwrap()])).unwrap();
        let report = r0_certificate(&q, &[parse_poly("Y", &r).unwrap()]).unwrap();
        assert!(!report.holds);
    }

    #[test]
    fn r0_prime_defining_ideal() {
        let r = ring(2, &["X", "Y"]);
        let a = Ideal::parse(&r, &["X"]).unwrap();
        let q = QuotientRingCtx::new(a, Some(vec![Ideal::parse(&r, &["X"]).unwrap()])).unwrap();
        let report = r0_certificate(&q, &[parse_poly("Y", &r).unwrap()]).unwrap();
        assert!(report.holds);
    }

    #[test]
    fn r0_two_primes_with_cross_separators() {
        let r = ring(2, &["X", "Y"]);
        let a = Ideal::parse(&r, &["X*Y"]).unwrap();
        let primes = vec![Ideal::parse(&r, &["X"]).unwrap(), Ideal::parse(&r, &["Y"]).unwrap()];
        let q = QuotientRingCtx::new(a, Some(primes)).unwrap();
        // s_1 must lie in (Y) \ (X), s_2 in (X) \ (Y)
        let report =
            r0_certificate(&q, &[parse_poly("Y", &r).unwrap(), parse_poly("X", &r).unwrap()])
                .unwrap();
        assert!(report.holds);

        // swapped separators violate the membership precondition
        assert_eq!(
            r0_certificate(&q, &[parse_poly("X", &r).unwrap(), parse_poly("Y", &r).unwrap()],)
                .unwrap_err(),
            Error::InvalidSeparator(0)
        );
    }
}
