//! Polynomial ring descriptors: a prime field, an ordered list of named
//! variables, and a monomial order. Rings are shared behind `Arc` so that
//! polynomials can be cheaply tagged with (and checked against) the ring
//! they live in.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::MonomialOrder;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(p: u64, vars: Vec<S>, order: MonomialOrder) -> Result<Arc<Self>> {
        let field = PrimeField::new(p)?;
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for v in &vars {
            if !valid_var_name(v) {
                return Err(Error::InvalidVariableName(v.clone()));
            }
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariableName(v.clone()));
            }
        }
        if let MonomialOrder::Block(k) = order {
            if k == 0 || k >= vars.len() {
                return Err(Error::InvalidBlock(k, vars.len()));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same ring contents (used to reject cross-ring arithmetic); pointer
    /// equality is the fast path since rings are normally shared.
    pub fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
        Arc::ptr_eq(a, b) || a == b
    }

    /// A copy of this ring with a different monomial order (used by the
    /// elimination-based ideal operations).
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Result<Arc<Self>> {
        PolyRing::new(self.field.characteristic(), self.vars.clone(), order)
    }

    /// Extend by fresh leading variables (ordered before the existing ones)
    /// under the given order. Used for tag-variable constructions.
    pub fn extended(self: &Arc<Self>, fresh: &[&str], order: MonomialOrder) -> Result<Arc<Self>> {
        let mut vars: Vec<String> = fresh.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        PolyRing::new(self.field.characteristic(), vars, order)
    }

    /// Pick a tag-variable name not colliding with any ring variable.
    pub fn fresh_var_name(&self, stem: &str) -> String {
        if self.var_index(stem).is_none() {
            return stem.to_string();
        }
        let mut i = 0u64;
        loop {
            let cand = format!("{stem}_{i}");
            if self.var_index(&cand).is_none() {
                return cand;
            }
            i += 1;
        }
    }
}
