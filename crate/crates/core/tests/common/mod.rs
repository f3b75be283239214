//! Independent oracles and generators shared by the integration suites.
//!
//! The oracles deliberately avoid the library's Groebner machinery: the
//! membership oracle solves f = Σ h_i g_i as a dense linear system over
//! F_p by Gaussian elimination, and the monomial-ideal oracles use the
//! lcm/gcd combinatorics directly on exponent vectors. They were written
//! (and frozen) before being compared against the engine, so agreement is
//! evidence rather than circularity.

use charp::{Ideal, Monomial, Polynomial};
use rand::Rng;

/// All exponent vectors in `nvars` variables of total degree ≤ `d`, in a
/// fixed deterministic order.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, idx: usize, left: u32) {
        if idx == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[idx] = e;
            rec(out, cur, idx + 1, left - e);
        }
        cur[idx] = 0;
    }
    rec(&mut out, &mut cur, 0, d);
    out
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a nonzero mod p
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Gaussian elimination over F_p on an augmented matrix; returns true iff
/// the system A·x = b is consistent.
fn consistent(mut rows: Vec<Vec<u64>>, p: u64) -> bool {
    if rows.is_empty() {
        return true;
    }
    let cols = rows[0].len(); // last column is the RHS
    let mut pivot_row = 0usize;
    for col in 0..cols - 1 {
        let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(pivot_row, found);
        let inv = modinv(rows[pivot_row][col] % p, p);
        for v in rows[pivot_row][col..].iter_mut() {
            *v = *v % p * inv % p;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_multiple_of(p) {
                let factor = row[col] % p;
                for (v, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    let sub = factor * pv % p;
                    *v = (*v % p + p - sub) % p;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    // any row 0 = nonzero is a contradiction
    !rows.iter().any(|r| r[..cols - 1].iter().all(|&v| v % p == 0) && r[cols - 1] % p != 0)
}

/// Decide whether f = Σ h_i g_i has a solution with deg h_i ≤ `d`, by
/// brute-force linear algebra. A positive answer is sound at any bound; a
/// negative answer only rules out representations within the bound.
pub fn oracle_member_at(f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let ring = f.ring();
    let p = ring.characteristic();
    let nvars = ring.nvars();
    let h_monomials = monomials_up_to(nvars, d);

    // column layout: one unknown per (generator, multiplier monomial)
    let mut col_of = Vec::new();
    for (gi, _) in gens.iter().enumerate() {
        for m in &h_monomials {
            col_of.push((gi, m.clone()));
        }
    }

    // row layout: one equation per product monomial that can occur
    let mut row_index: std::collections::HashMap<Vec<u32>, usize> =
        std::collections::HashMap::new();
    let touch = |key: Vec<u32>, row_index: &mut std::collections::HashMap<Vec<u32>, usize>| {
        let next = row_index.len();
        *row_index.entry(key).or_insert(next)
    };
    let mut entries: Vec<(usize, usize, u64)> = Vec::new();
    for (col, (gi, m)) in col_of.iter().enumerate() {
        for (gm, gc) in gens[*gi].terms() {
            let prod: Vec<u32> = gm.exponents().iter().zip(m.iter()).map(|(a, b)| a + b).collect();
            let row = touch(prod, &mut row_index);
            entries.push((row, col, gc.value()));
        }
    }
    for (fm, _) in f.terms() {
        touch(fm.exponents().to_vec(), &mut row_index);
    }

    let ncols = col_of.len() + 1;
    let mut rows = vec![vec![0u64; ncols]; row_index.len()];
    for (r, c, v) in entries {
        rows[r][c] = (rows[r][c] + v) % p;
    }
    for (fm, fc) in f.terms() {
        let r = row_index[fm.exponents()];
        rows[r][ncols - 1] = fc.value();
    }
    consistent(rows, p)
}

/// Escalating-bound membership oracle: tries the given degree bounds in
/// order and reports the first positive, or false if none certify.
pub fn oracle_member(f: &Polynomial, gens: &[Polynomial], bounds: &[u32]) -> bool {
    bounds.iter().any(|&d| oracle_member_at(f, gens, d))
}

/// Intersection of two monomial ideals: generated by pairwise lcms.
#[allow(dead_code)] // not every test target exercises every oracle
pub fn oracle_monomial_intersect(i: &Ideal, j: &Ideal) -> Ideal {
    let ring = i.ring();
    let mut gens = Vec::new();
    for a in i.generators() {
        for b in j.generators() {
            assert_eq!(a.terms().len(), 1, "oracle needs monomial ideals");
            assert_eq!(b.terms().len(), 1, "oracle needs monomial ideals");
            let m = a.terms()[0].0.lcm(&b.terms()[0].0);
            gens.push(Polynomial::term(ring, m, ring.field().one()));
        }
    }
    Ideal::new(ring, gens).expect("same ring")
}

/// Colon of a monomial ideal by a single monomial: divide each generator
/// by its gcd with the divisor.
#[allow(dead_code)] // not every test target exercises every oracle
pub fn oracle_monomial_colon(i: &Ideal, m: &Monomial) -> Ideal {
    let ring = i.ring();
    let mut gens = Vec::new();
    for g in i.generators() {
        assert_eq!(g.terms().len(), 1, "oracle needs monomial ideals");
        let gm = &g.terms()[0].0;
        let q = gm.div(&gm.gcd(m));
        gens.push(Polynomial::term(ring, q, ring.field().one()));
    }
    Ideal::new(ring, gens).expect("same ring")
}

/// Random polynomial with `terms` terms of degree ≤ `deg` (possibly
/// fewer after cancellation, possibly zero).
#[allow(dead_code)] // not every test target exercises every helper
pub fn random_poly<R: Rng>(
    rng: &mut R,
    ring: &std::sync::Arc<charp::PolyRing>,
    terms: usize,
    deg: u32,
) -> Polynomial {
    let p = ring.characteristic();
    let mut acc = Polynomial::zero(ring);
    for _ in 0..terms {
        let mut exps = vec![0u32; ring.nvars()];
        let mut left = deg;
        for e in exps.iter_mut() {
            *e = rng.gen_range(0..=left);
            left -= *e;
        }
        let c = rng.gen_range(0..p) as i64;
        let term =
            Polynomial::term(ring, Monomial::new(exps).expect("within cap"), ring.field().elem(c));
        acc = acc.add(&term).expect("same ring");
    }
    acc
}

/// Random nonzero polynomial.
#[allow(dead_code)] // not every test target exercises every helper
pub fn random_nonzero_poly<R: Rng>(
    rng: &mut R,
    ring: &std::sync::Arc<charp::PolyRing>,
    terms: usize,
    deg: u32,
) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, terms, deg);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random ideal with up to `max_gens` nonzero generators.
#[allow(dead_code)] // not every test target exercises every helper
pub fn random_ideal<R: Rng>(
    rng: &mut R,
    ring: &std::sync::Arc<charp::PolyRing>,
    max_gens: usize,
    terms: usize,
    deg: u32,
) -> Ideal {
    let n = rng.gen_range(1..=max_gens);
    let gens: Vec<Polynomial> =
        (0..n).map(|_| random_nonzero_poly(rng, ring, terms, deg)).collect();
    Ideal::new(ring, gens).expect("same ring")
}
