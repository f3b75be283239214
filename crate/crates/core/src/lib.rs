//! Exact characteristic-p commutative algebra over multivariate
//! polynomial rings with prime-field coefficients.
//!
//! On top of a deterministic Groebner engine the library provides:
//! Frobenius powers I^{[p^e]} and roots I^{[1/p^e]} of ideals, the Fedder
//! F-purity test with multiplier selection, stabilization indices of the
//! descending chains (S u^{ω_n})^{[1/p^n]} + a (HSL numbers), lower
//! bounds for test ideals built from stabilized chain data, and
//! bounded-level tight-closure certificates on quotients S/a.
//!
//! All arithmetic is exact over F_p, and every result is produced in a
//! canonical form (reduced Groebner bases; sorted term lists), so outputs
//! are reproducible bytewise across runs, thread counts, and the
//! `parallel` feature.

pub mod error;
pub mod field;
pub mod frobenius;
pub mod fsing;
pub mod groebner;
pub mod ideal_ops;
pub mod monomial;
pub mod par;
pub mod parser;
pub mod poly;
pub mod ring;
pub mod tightclosure;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use frobenius::{
    frobenius_decompose, frobenius_power, frobenius_root, omega, FrobeniusContext,
    FrobeniusDecomposition, OmegaSequence, MAX_Q,
};
pub use fsing::{
    fedder_fpure, frobenius_adjoint, hsl_chain, select_u_candidates, test_ideal_lower_bound,
    uniform_hsl_bound, HSLChainSpec, HSLReport, SelectUReport, TestIdealBound, TestIdealBoundSpec,
};
pub use groebner::{reduced_groebner_basis, Ideal, SPairStrategy};
pub use ideal_ops::{
    ideal_colon, ideal_colon_elem, ideal_eliminate, ideal_intersect, ideal_product, ideal_saturate,
    ideal_sum,
};
pub use monomial::{Monomial, MonomialOrder, MAX_EXPONENT};
pub use parser::parse_poly;
pub use poly::Polynomial;
pub use ring::PolyRing;
pub use tightclosure::{
    in_r_circ, is_nilpotent, r0_certificate, tc_certificate, test_element_certificate,
    FamilyEntryReport, Nilpotency, QuotientRingCtx, R0Report, TcReport, TestElementReport,
    TightClosureQuery,
};
