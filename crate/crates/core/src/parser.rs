//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (shared verbatim with the CLI):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' INT)?
//! base   := INT | VAR | '(' expr ')'
//! ```
//!
//! Variables match `[A-Za-z][A-Za-z0-9_]*` and must be declared in the
//! ring; integer literals reduce mod p. Whitespace between tokens is
//! ignored. There is no unary minus: canonical output never needs one
//! because coefficients print as residues in [0, p).

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::sync::Arc;

pub fn parse_poly(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                self.skip_ws();
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                self.skip_ws();
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                self.skip_ws();
                acc = acc.mul(&self.factor()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            base.pow(e)
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(Polynomial::term(
                    self.ring,
                    crate::monomial::Monomial::one(self.ring.nvars()),
                    self.ring.field().elem_u64(v),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
                }
            }
            _ => Err(self.err("expected integer, variable, or `(`")),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| Error::Parse { pos: start, msg: "integer literal too large".to_string() })
    }
}
