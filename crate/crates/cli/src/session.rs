//! Session files: named rings, ideals, polynomials, and minimal-prime
//! lists shared by every subcommand.
//!
//! The grammar is line-oriented. `#` starts a comment that runs to the end
//! of the line; blank lines are skipped. Statements:
//!
//! ```text
//! ring NAME = F INT [ VAR {, VAR} ] [order (lex|grevlex)]
//! ideal NAME = polyexpr {, polyexpr}
//! poly NAME = polyexpr
//! minprimes NAME = IDEALNAME {, IDEALNAME}
//! ```
//!
//! Ideals, polynomials, and minimal-prime lists bind to the most recently
//! declared ring. Names are unique per namespace; errors carry line and
//! column numbers.

use anyhow::{bail, Result};
use charp::{parse_poly, Ideal, MonomialOrder, PolyRing, Polynomial};
use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

#[derive(Debug, Default)]
pub struct Session {
    pub rings: HashMap<String, Arc<PolyRing>>,
    pub ideals: HashMap<String, Ideal>,
    pub polys: HashMap<String, Polynomial>,
    pub minprimes: HashMap<String, Vec<Ideal>>,
    /// The most recently declared ring; inline expressions parse here.
    pub current_ring: Option<Arc<PolyRing>>,
}

pub fn load_session(path: &Path) -> Result<Session> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read session file {}: {e}", path.display()))?;
    parse_session(&text)
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut session = Session::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if stripped.trim().is_empty() {
            continue;
        }
        statement(&mut session, stripped, line)?;
    }
    Ok(session)
}

/// Cursor over one statement line, tracking columns for error messages.
struct Line<'a> {
    src: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Line<'a> {
    fn col(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.src.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    /// A bare word: letters, digits, underscores.
    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| !c.is_ascii_alphanumeric() && c != '_').unwrap_or(rest.len());
        if len == 0 {
            bail!(
                "session parse error at line {}, column {}: expected a name",
                self.line,
                self.col()
            );
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn expect(&mut self, token: char) -> Result<()> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            bail!(
                "session parse error at line {}, column {}: expected `{token}`",
                self.line,
                self.col()
            )
        }
    }

    /// Everything up to the next top-level comma (parenthesis-aware) or the
    /// end of the line.
    fn until_comma(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        for (i, c) in self.src[start..].char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    self.pos = start + i;
                    return self.src[start..start + i].trim();
                }
                _ => {}
            }
        }
        self.pos = self.src.len();
        self.src[start..].trim()
    }
}

fn statement(session: &mut Session, src: &str, line: usize) -> Result<()> {
    let mut cur = Line { src, pos: 0, line };
    let keyword = cur.word()?;
    let name = cur.word()?.to_string();
    cur.expect('=')?;
    match keyword {
        "ring" => {
            check_fresh(session.rings.contains_key(&name), "ring", &name, line)?;
            let ring = ring_decl(&mut cur)?;
            session.current_ring = Some(Arc::clone(&ring));
            session.rings.insert(name, ring);
        }
        "ideal" => {
            check_fresh(session.ideals.contains_key(&name), "ideal", &name, line)?;
            let ring = current(session, line, cur.col())?;
            let mut gens = Vec::new();
            loop {
                let expr = cur.until_comma();
                gens.push(parse_in(expr, &ring, line, cur.col() - expr.len())?);
                if cur.at_end() {
                    break;
                }
                cur.expect(',')?;
            }
            session.ideals.insert(name, Ideal::new(&ring, gens)?);
        }
        "poly" => {
            check_fresh(session.polys.contains_key(&name), "poly", &name, line)?;
            let ring = current(session, line, cur.col())?;
            let expr = cur.until_comma();
            if !cur.at_end() {
                bail!(
                    "session parse error at line {line}, column {}: \
                     a poly statement takes a single expression",
                    cur.col()
                );
            }
            session.polys.insert(name, parse_in(expr, &ring, line, 1)?);
        }
        "minprimes" => {
            check_fresh(session.minprimes.contains_key(&name), "minprimes", &name, line)?;
            let mut primes = Vec::new();
            loop {
                let col = {
                    cur.skip_ws();
                    cur.col()
                };
                let ideal_name = cur.word()?;
                match session.ideals.get(ideal_name) {
                    Some(i) => primes.push(i.clone()),
                    None => bail!(
                        "session error at line {line}, column {col}: \
                         unknown ideal `{ideal_name}` in minprimes list"
                    ),
                }
                if cur.at_end() {
                    break;
                }
                cur.expect(',')?;
            }
            session.minprimes.insert(name, primes);
        }
        other => bail!(
            "session parse error at line {line}, column 1: \
             unknown statement `{other}` (expected ring, ideal, poly, or minprimes)"
        ),
    }
    Ok(())
}

fn check_fresh(exists: bool, kind: &str, name: &str, line: usize) -> Result<()> {
    if exists {
        bail!("session error at line {line}: duplicate {kind} name `{name}`");
    }
    Ok(())
}

fn current(session: &Session, line: usize, col: usize) -> Result<Arc<PolyRing>> {
    session.current_ring.clone().ok_or_else(|| {
        anyhow::anyhow!("session error at line {line}, column {col}: no ring declared yet")
    })
}

fn parse_in(expr: &str, ring: &Arc<PolyRing>, line: usize, col: usize) -> Result<Polynomial> {
    parse_poly(expr, ring)
        .map_err(|e| anyhow::anyhow!("session error at line {line}, column {col}: {e}"))
}

/// `F INT [ VAR {, VAR} ] [order (lex|grevlex)]` after the `=`.
fn ring_decl(cur: &mut Line) -> Result<Arc<PolyRing>> {
    let f = cur.word()?;
    if f != "F" {
        bail!(
            "session parse error at line {}, column {}: expected `F <characteristic>`",
            cur.line,
            cur.col()
        );
    }
    let p_word = cur.word()?;
    let p: u64 = p_word.parse().map_err(|_| {
        anyhow::anyhow!(
            "session parse error at line {}, column {}: `{p_word}` is not a characteristic",
            cur.line,
            cur.col()
        )
    })?;
    cur.expect('[')?;
    let mut vars = Vec::new();
    loop {
        vars.push(cur.word()?.to_string());
        if cur.peek() == Some(']') {
            cur.expect(']')?;
            break;
        }
        cur.expect(',')?;
    }
    let order = if cur.at_end() {
        MonomialOrder::GrevLex
    } else {
        let kw = cur.word()?;
        if kw != "order" {
            bail!(
                "session parse error at line {}, column {}: expected `order`",
                cur.line,
                cur.col()
            );
        }
        match cur.word()? {
            "lex" => MonomialOrder::Lex,
            "grevlex" => MonomialOrder::GrevLex,
            other => bail!(
                "session parse error at line {}, column {}: \
                 unknown order `{other}` (expected lex or grevlex)",
                cur.line,
                cur.col()
            ),
        }
    };
    if !cur.at_end() {
        bail!("session parse error at line {}, column {}: trailing input", cur.line, cur.col());
    }
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    Ok(PolyRing::new(p, names, order)?)
}
