//! `charp` — exact characteristic-p commutative algebra from the command
//! line. One subcommand per library operation; a session file (`--session`)
//! declares the rings, ideals, polynomials, and minimal-prime lists that
//! arguments may reference by name. Arguments not matching a declared name
//! are parsed as inline expressions in the most recently declared ring.
//!
//! Output goes to standard out (text: one generator per line; `--json`: a
//! single CommandResult object), diagnostics to standard error. Exit codes:
//! 0 ok, 1 mathematical negative (non-member, not F-pure, failed
//! certificate), 2 error, 3 unresolved within the configured bounds.

mod session;

use anyhow::{anyhow, bail, Result};
use charp::{
    fedder_fpure, frobenius_adjoint, frobenius_power, frobenius_root, hsl_chain, ideal_colon,
    ideal_eliminate, ideal_intersect, ideal_saturate, is_nilpotent, omega, parse_poly,
    r0_certificate, select_u_candidates, tc_certificate, test_element_certificate,
    test_ideal_lower_bound, uniform_hsl_bound, HSLChainSpec, Ideal, Nilpotency, PolyRing,
    Polynomial, QuotientRingCtx, TestIdealBoundSpec, TightClosureQuery,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use session::Session;
use std::num::NonZeroU32;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "charp", version, about = "exact characteristic-p commutative algebra")]
struct Cli {
    /// Emit the full CommandResult as JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Session file declaring rings, ideals, polys, and minprimes lists
    #[arg(long, global = true, value_name = "FILE")]
    session: Option<PathBuf>,

    /// Stabilization search bound for chain computations
    #[arg(long, global = true, value_name = "INT", default_value_t = 16)]
    max_e: u32,

    /// Certificate level bound N for tight-closure checks
    #[arg(long, global = true, value_name = "INT", default_value_t = 6)]
    level: u32,

    /// Nilpotency search bound
    #[arg(long, global = true, value_name = "INT", default_value_t = 8)]
    k_max: u32,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of an ideal
    Gb {
        #[arg(long)]
        ideal: String,
    },
    /// Normal form of a polynomial modulo an ideal
    Nf {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal membership (exit 1 on a non-member)
    Member {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        ideal: String,
    },
    /// Ideal quotient (I : J)
    Colon {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Intersection of two ideals
    Intersect {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        with: String,
    },
    /// Saturation (I : f^infinity)
    Saturate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Eliminate the first k variables
    Eliminate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        k: usize,
    },
    /// Frobenius power I^{[p^e]}
    Fpow {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        e: u32,
    },
    /// Frobenius root I^{[1/p^e]}
    Froot {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        e: u32,
    },
    /// omega_n = 1 + p + ... + p^(n-1)
    Omega {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u64,
    },
    /// Frobenius adjoint (a^{[p]} : a)
    Adjoint {
        #[arg(long)]
        ideal: String,
    },
    /// Fedder F-purity criterion at a maximal ideal (exit 1 when not F-pure)
    Fedder {
        #[arg(long)]
        ideal: String,
        #[arg(long = "max-ideal")]
        max_ideal: String,
    },
    /// Adjoint generators outside q^{[p]} (exit 1 when none exist)
    SelectU {
        #[arg(long)]
        ideal: String,
        #[arg(long = "max-ideal")]
        max_ideal: String,
    },
    /// HSL chain and stabilization index (exit 3 if unstable within --max-e)
    Hsl {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        u: String,
    },
    /// Uniform HSL bound (exit 3 if unresolved within --max-e)
    HslBound {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        u: String,
    },
    /// Test-ideal lower bound from level h onward (exit 3 if unstable)
    TestIdealBound {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        d: String,
        #[arg(long)]
        h: u32,
    },
    /// Bounded-level tight-closure certificate (exit 1 when a level fails)
    TcCert {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        r: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        minprimes: Option<String>,
        #[arg(long = "prime")]
        primes: Vec<String>,
    },
    /// Test-element certificate over an ideal family (exit 1 when one fails)
    TestElement {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        c: String,
        /// Family member (repeatable)
        #[arg(long = "b")]
        family: Vec<String>,
        /// Closure elements for the matching --b, `;`-separated (repeatable)
        #[arg(long)]
        closure: Vec<String>,
        /// Element appended to every family member's own generators
        #[arg(long)]
        extra: Vec<String>,
        #[arg(long)]
        minprimes: Option<String>,
        #[arg(long = "prime")]
        primes: Vec<String>,
    },
    /// Bounded nilpotency check (exit 3 when unresolved at --k-max)
    Nilpotent {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        r: String,
    },
    /// (R_0) certificate from minimal primes and separators (exit 1 on failure)
    R0Cert {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        minprimes: Option<String>,
        #[arg(long = "prime")]
        primes: Vec<String>,
        /// Separator for the matching minimal prime (repeatable)
        #[arg(long = "sep")]
        separators: Vec<String>,
    },
}

fn cmd_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Gb { .. } => "gb",
        Cmd::Nf { .. } => "nf",
        Cmd::Member { .. } => "member",
        Cmd::Colon { .. } => "colon",
        Cmd::Intersect { .. } => "intersect",
        Cmd::Saturate { .. } => "saturate",
        Cmd::Eliminate { .. } => "eliminate",
        Cmd::Fpow { .. } => "fpow",
        Cmd::Froot { .. } => "froot",
        Cmd::Omega { .. } => "omega",
        Cmd::Adjoint { .. } => "adjoint",
        Cmd::Fedder { .. } => "fedder",
        Cmd::SelectU { .. } => "select-u",
        Cmd::Hsl { .. } => "hsl",
        Cmd::HslBound { .. } => "hsl-bound",
        Cmd::TestIdealBound { .. } => "test-ideal-bound",
        Cmd::TcCert { .. } => "tc-cert",
        Cmd::TestElement { .. } => "test-element",
        Cmd::Nilpotent { .. } => "nilpotent",
        Cmd::R0Cert { .. } => "r0-cert",
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Status {
    Ok,
    Unresolved,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Unresolved => "unresolved",
        }
    }
}

/// One finished command: status, exit code, payload, and the text-mode
/// projection of that payload.
struct Outcome {
    status: Status,
    exit: u8,
    payload: Value,
    text: String,
}

impl Outcome {
    fn ok(payload: Value, text: String) -> Self {
        Outcome { status: Status::Ok, exit: 0, payload, text }
    }

    fn negative(payload: Value, text: String) -> Self {
        Outcome { status: Status::Ok, exit: 1, payload, text }
    }

    fn unresolved(payload: Value, text: String) -> Self {
        Outcome { status: Status::Unresolved, exit: 3, payload, text }
    }

    fn from_flag(positive: bool, payload: Value, text: String) -> Self {
        if positive {
            Outcome::ok(payload, text)
        } else {
            Outcome::negative(payload, text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let name = cmd_name(&cli.cmd);
    let json = cli.json;
    match run(&cli) {
        Ok(out) => {
            if json {
                let result = json!({
                    "command": name,
                    "status": out.status.as_str(),
                    "payload": out.payload,
                });
                println!("{result}");
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.status == Status::Unresolved {
                eprintln!("unresolved: raise --max-e or --k-max to search further");
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            if json {
                let result = json!({
                    "command": name,
                    "status": "error",
                    "payload": {"error": e.to_string()},
                });
                println!("{result}");
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Session plus the global numeric flags, resolved once.
struct Ctx {
    session: Session,
    max_e: u32,
    level: u32,
    k_max: u32,
}

impl Ctx {
    fn ring(&self) -> Result<Arc<PolyRing>> {
        self.session
            .current_ring
            .clone()
            .ok_or_else(|| anyhow!("no ring available; declare one in a --session file"))
    }

    /// A declared ideal name, or an inline expression like `(X^2, X*Y)`.
    fn ideal(&self, arg: &str) -> Result<Ideal> {
        if let Some(i) = self.session.ideals.get(arg) {
            return Ok(i.clone());
        }
        parse_ideal_expr(arg, &self.ring()?)
    }

    /// A declared polynomial name, or an inline expression.
    fn poly(&self, arg: &str) -> Result<Polynomial> {
        if let Some(f) = self.session.polys.get(arg) {
            return Ok(f.clone());
        }
        Ok(parse_poly(arg, &self.ring()?)?)
    }

    /// Minimal primes from a named session list or repeated --prime flags.
    fn min_primes(&self, named: &Option<String>, inline: &[String]) -> Result<Option<Vec<Ideal>>> {
        if let Some(name) = named {
            let list = self
                .session
                .minprimes
                .get(name)
                .ok_or_else(|| anyhow!("unknown minprimes list `{name}`"))?;
            return Ok(Some(list.clone()));
        }
        if inline.is_empty() {
            return Ok(None);
        }
        let primes: Result<Vec<Ideal>> = inline.iter().map(|s| self.ideal(s)).collect();
        Ok(Some(primes?))
    }

    fn cert_level(&self) -> Result<NonZeroU32> {
        NonZeroU32::new(self.level).ok_or_else(|| anyhow!("--level must be at least 1"))
    }
}

/// Inline ideal syntax: optional outer parentheses around a comma-separated
/// generator list, e.g. `(X^2, X*Y)` or `X^2`.
fn parse_ideal_expr(arg: &str, ring: &Arc<PolyRing>) -> Result<Ideal> {
    let mut inner = arg.trim();
    while let Some(stripped) = strip_outer_parens(inner) {
        inner = stripped;
    }
    let mut gens = Vec::new();
    for part in split_top_level(inner) {
        let part = part.trim();
        if part.is_empty() {
            bail!("empty generator in ideal expression `{arg}`");
        }
        gens.push(parse_poly(part, ring)?);
    }
    Ok(Ideal::new(ring, gens)?)
}

/// Strips one layer of parentheses when the opening one closes at the very
/// end, so `(X, Y)` unwraps but `(X)*(Y)` does not.
fn strip_outer_parens(s: &str) -> Option<&str> {
    let rest = s.strip_prefix('(')?;
    let mut depth = 1usize;
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return if i == rest.len() - 1 { Some(rest[..i].trim()) } else { None };
                }
            }
            _ => {}
        }
    }
    None
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Canonical form of an ideal-valued payload: the reduced Groebner basis,
/// monic and order-sorted, one string per generator.
fn canonical_gens(i: &Ideal) -> Result<Vec<String>> {
    Ok(i.groebner_basis()?.iter().map(|g| g.to_string()).collect())
}

fn ideal_outcome(i: &Ideal) -> Result<Outcome> {
    let gens = canonical_gens(i)?;
    let text = gens.join("\n");
    Ok(Outcome::ok(json!({ "generators": gens }), text))
}

fn bools(levels: &[bool]) -> String {
    levels.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Outcome> {
    let session = match &cli.session {
        Some(path) => session::load_session(path)?,
        None => Session::default(),
    };
    let ctx = Ctx { session, max_e: cli.max_e, level: cli.level, k_max: cli.k_max };

    match &cli.cmd {
        Cmd::Gb { ideal } => ideal_outcome(&ctx.ideal(ideal)?),
        Cmd::Nf { poly, ideal } => {
            let nf = ctx.ideal(ideal)?.normal_form(&ctx.poly(poly)?)?;
            let s = nf.to_string();
            Ok(Outcome::ok(json!({ "normal_form": s }), s))
        }
        Cmd::Member { poly, ideal } => {
            let m = ctx.ideal(ideal)?.contains(&ctx.poly(poly)?)?;
            Ok(Outcome::from_flag(m, json!({ "member": m }), m.to_string()))
        }
        Cmd::Colon { ideal, by } => {
            ideal_outcome(&ideal_colon(&ctx.ideal(ideal)?, &ctx.ideal(by)?)?)
        }
        Cmd::Intersect { ideal, with } => {
            ideal_outcome(&ideal_intersect(&ctx.ideal(ideal)?, &ctx.ideal(with)?)?)
        }
        Cmd::Saturate { ideal, by } => {
            ideal_outcome(&ideal_saturate(&ctx.ideal(ideal)?, &ctx.poly(by)?)?)
        }
        Cmd::Eliminate { ideal, k } => ideal_outcome(&ideal_eliminate(&ctx.ideal(ideal)?, *k)?),
        Cmd::Fpow { ideal, e } => ideal_outcome(&frobenius_power(&ctx.ideal(ideal)?, *e)?),
        Cmd::Froot { ideal, e } => ideal_outcome(&frobenius_root(&ctx.ideal(ideal)?, *e)?),
        Cmd::Omega { n, p } => {
            let w = omega(*n, *p)?;
            Ok(Outcome::ok(json!({ "omega": w }), w.to_string()))
        }
        Cmd::Adjoint { ideal } => ideal_outcome(&frobenius_adjoint(&ctx.ideal(ideal)?)?),
        Cmd::Fedder { ideal, max_ideal } => {
            let pure = fedder_fpure(&ctx.ideal(ideal)?, &ctx.ideal(max_ideal)?)?;
            Ok(Outcome::from_flag(pure, json!({ "f_pure": pure }), pure.to_string()))
        }
        Cmd::SelectU { ideal, max_ideal } => {
            let report = select_u_candidates(&ctx.ideal(ideal)?, &ctx.ideal(max_ideal)?)?;
            let cands: Vec<String> = report.candidates.iter().map(|g| g.to_string()).collect();
            let mut text = format!("f_pure: {}", report.f_pure);
            for c in &cands {
                text.push('\n');
                text.push_str(c);
            }
            if !report.f_pure {
                text.push_str("\nnot F-pure at the supplied maximal ideal");
            }
            Ok(Outcome::from_flag(
                report.f_pure,
                json!({ "candidates": cands, "f_pure": report.f_pure }),
                text,
            ))
        }
        Cmd::Hsl { ideal, u } => {
            let spec = HSLChainSpec::new(ctx.ideal(ideal)?, ctx.poly(u)?, ctx.max_e)?;
            let report = hsl_chain(&spec)?;
            let chain: Vec<Vec<String>> =
                report.chain.iter().map(canonical_gens).collect::<Result<_>>()?;
            let mut text = match report.hsl {
                Some(h) => format!("hsl: {h}\nstable: {}", report.stable),
                None => format!("hsl: unresolved\nstable: {}", report.stable),
            };
            for (n, gens) in chain.iter().enumerate() {
                text.push_str(&format!("\nchain {n}:"));
                for g in gens {
                    text.push('\n');
                    text.push_str(g);
                }
            }
            let payload = json!({ "chain": chain, "hsl": report.hsl, "stable": report.stable });
            if report.stable {
                Ok(Outcome::ok(payload, text))
            } else {
                Ok(Outcome::unresolved(payload, text))
            }
        }
        Cmd::HslBound { ideal, u } => {
            let bound = uniform_hsl_bound(&ctx.ideal(ideal)?, &ctx.poly(u)?, ctx.max_e)?;
            let payload = json!({ "bound": bound, "stable": bound.is_some() });
            match bound {
                Some(h) => Ok(Outcome::ok(payload, h.to_string())),
                None => Ok(Outcome::unresolved(payload, "unresolved".to_string())),
            }
        }
        Cmd::TestIdealBound { ideal, u, d, h } => {
            let spec = TestIdealBoundSpec::new(
                ctx.ideal(ideal)?,
                ctx.poly(u)?,
                ctx.poly(d)?,
                *h,
                ctx.max_e,
            )?;
            let bound = test_ideal_lower_bound(&spec)?;
            let gens = canonical_gens(&bound.ideal)?;
            let mut text = format!(
                "stable: {}\nstrictly_contains_a: {}",
                bound.stable, bound.strictly_contains_a
            );
            for g in &gens {
                text.push('\n');
                text.push_str(g);
            }
            let payload = json!({
                "generators": gens,
                "stable": bound.stable,
                "strictly_contains_a": bound.strictly_contains_a,
            });
            if bound.stable {
                Ok(Outcome::ok(payload, text))
            } else {
                Ok(Outcome::unresolved(payload, text))
            }
        }
        Cmd::TcCert { ideal, r, b, c, minprimes, primes } => {
            let q = QuotientRingCtx::new(ctx.ideal(ideal)?, ctx.min_primes(minprimes, primes)?)?;
            let query = TightClosureQuery {
                r: ctx.poly(r)?,
                b: ctx.ideal(b)?,
                c: ctx.poly(c)?,
                level: ctx.cert_level()?,
            };
            let report = tc_certificate(&query, &q)?;
            let text = format!("all_pass: {}\nlevels: {}", report.all_pass, bools(&report.levels));
            Ok(Outcome::from_flag(
                report.all_pass,
                json!({ "levels": report.levels, "all_pass": report.all_pass }),
                text,
            ))
        }
        Cmd::TestElement { ideal, c, family, closure, extra, minprimes, primes } => {
            if family.is_empty() {
                bail!("supply at least one family member with --b");
            }
            let ideals: Vec<Ideal> = family.iter().map(|s| ctx.ideal(s)).collect::<Result<_>>()?;
            let closures: Vec<Vec<Polynomial>> = if closure.is_empty() {
                // default: each ideal's own generators, plus any --extra
                // elements asserted to lie in every closure
                let extras: Vec<Polynomial> =
                    extra.iter().map(|s| ctx.poly(s)).collect::<Result<_>>()?;
                ideals
                    .iter()
                    .map(|b| {
                        let mut elems = b.generators().to_vec();
                        elems.extend(extras.iter().cloned());
                        elems
                    })
                    .collect()
            } else {
                if closure.len() != ideals.len() {
                    bail!(
                        "--closure given {} times for {} family members",
                        closure.len(),
                        ideals.len()
                    );
                }
                closure
                    .iter()
                    .map(|list| {
                        list.split(';')
                            .map(|s| ctx.poly(s.trim()))
                            .collect::<Result<Vec<Polynomial>>>()
                    })
                    .collect::<Result<_>>()?
            };
            let q = QuotientRingCtx::new(ctx.ideal(ideal)?, ctx.min_primes(minprimes, primes)?)?;
            let report =
                test_element_certificate(&ctx.poly(c)?, &ideals, &closures, ctx.cert_level()?, &q)?;
            let mut text = format!("all_pass: {}", report.all_pass);
            let entries: Vec<Value> = report
                .entries
                .iter()
                .enumerate()
                .map(|(i, entry)| {
                    let per: Vec<Value> = entry
                        .per_element
                        .iter()
                        .enumerate()
                        .map(|(j, tc)| {
                            text.push_str(&format!(
                                "\nideal {i} element {j} levels: {}",
                                bools(&tc.levels)
                            ));
                            json!({ "levels": tc.levels, "all_pass": tc.all_pass })
                        })
                        .collect();
                    json!({ "per_element": per })
                })
                .collect();
            Ok(Outcome::from_flag(
                report.all_pass,
                json!({ "entries": entries, "all_pass": report.all_pass }),
                text,
            ))
        }
        Cmd::Nilpotent { ideal, r } => {
            let q = QuotientRingCtx::new(ctx.ideal(ideal)?, None)?;
            match is_nilpotent(&ctx.poly(r)?, &q, ctx.k_max)? {
                Nilpotency::NilpotentAtLevel(k) => Ok(Outcome::ok(
                    json!({ "nilpotent_at_level": k }),
                    format!("nilpotent_at_level: {k}"),
                )),
                Nilpotency::Unresolved => Ok(Outcome::unresolved(
                    json!({ "nilpotent_at_level": Value::Null }),
                    "unresolved".to_string(),
                )),
            }
        }
        Cmd::R0Cert { ideal, minprimes, primes, separators } => {
            let min = ctx
                .min_primes(minprimes, primes)?
                .ok_or_else(|| anyhow!("supply minimal primes via --minprimes or --prime"))?;
            let q = QuotientRingCtx::new(ctx.ideal(ideal)?, Some(min))?;
            let seps: Vec<Polynomial> =
                separators.iter().map(|s| ctx.poly(s)).collect::<Result<_>>()?;
            let report = r0_certificate(&q, &seps)?;
            let comps: Vec<Vec<String>> =
                report.components.iter().map(canonical_gens).collect::<Result<_>>()?;
            let mut text = format!("holds: {}", report.holds);
            for (i, gens) in comps.iter().enumerate() {
                text.push_str(&format!("\ncomponent {i}:"));
                for g in gens {
                    text.push('\n');
                    text.push_str(g);
                }
            }
            Ok(Outcome::from_flag(
                report.holds,
                json!({ "components": comps, "holds": report.holds }),
                text,
            ))
        }
    }
}
