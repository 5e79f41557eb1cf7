//! Command-line front end. Every subcommand prints one JSON document on
//! stdout; numbers in payloads are strings so that they stay exact.
//!
//! Exit codes: 0 ok, 1 usage error, 2 domain error, 3 inconclusive or
//! search bound exhausted, 4 resource limit.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::SquareClass;
use crate::brauer::{embeds, hilbert, is_isomorphic, ram_set, QuaternionAlgebra};
use crate::error::Error;
use crate::oracle::hilbert_bruteforce;
use crate::places::{OddPrime, Place, DEFAULT_SEARCH_BOUND};
use crate::quadform::{Monomial, PfisterForm};
use crate::theorems::{
    crux_witness_qt_within, crux_witness_within, distinguish_pfister_within, distinguish_quaternions_within,
    rost_step_within, tractable_search_local, tractable_verify, CaseTag, CruxReport, Side, TractableBase,
    TractableConfig,
};

#[derive(Parser, Debug)]
#[command(name = "witnesslab", version, about = "Distinguishing witnesses for quaternion algebras and Pfister forms over Q")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Candidate budget for square-class searches.
    #[arg(long, global = true, env = "WITNESSLAB_BOUND", default_value_t = DEFAULT_SEARCH_BOUND)]
    bound: usize,
    /// Also run the brute-force oracle where one exists.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Local Hilbert symbol (a, b)_v.
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        /// `inf`, `2` or an odd prime.
        #[arg(long)]
        place: String,
    },
    /// Ramification set of (a, b).
    Ram(Algebra),
    /// Whether (a1, b1) ≅ (a2, b2).
    Iso(AlgebraPair),
    /// Whether Q(√c) embeds in the division algebra (a, b).
    Embeds {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[command(flatten)]
        algebra: Algebra,
    },
    /// A quadratic field in exactly one of two quaternion algebras.
    Distinguish(AlgebraPair),
    /// A (d−1)-Pfister form dividing exactly one of two d-Pfister forms.
    PfisterDistinguish {
        #[arg(long)]
        d: usize,
        /// Comma-separated slots.
        #[arg(long, allow_hyphen_values = true)]
        phi1: String,
        #[arg(long, allow_hyphen_values = true)]
        phi2: String,
    },
    /// Divisor separating two Pfister forms at an odd prime or at t.
    Crux {
        /// An odd prime, or `t` for monomial forms over Q(t).
        #[arg(long)]
        place: String,
        #[arg(long, allow_hyphen_values = true)]
        phi1: String,
        #[arg(long, allow_hyphen_values = true)]
        phi2: String,
    },
    /// Tractability of six square classes, or an exhaustive local scan.
    Tractable {
        #[arg(value_enum)]
        mode: TractableMode,
        /// `q`, `2`, an odd prime, or `inf`.
        #[arg(long)]
        base: String,
        /// a1 a2 a3 b1 b2 b3 (verify only).
        #[arg(allow_hyphen_values = true)]
        slots: Vec<String>,
    },
    /// One step of the tower for (a1, b) and (a2, b).
    Rost {
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Args, Debug)]
struct Algebra {
    #[arg(allow_hyphen_values = true)]
    a: String,
    #[arg(allow_hyphen_values = true)]
    b: String,
}

#[derive(Args, Debug)]
struct AlgebraPair {
    #[arg(allow_hyphen_values = true)]
    a1: String,
    #[arg(allow_hyphen_values = true)]
    b1: String,
    #[arg(allow_hyphen_values = true)]
    a2: String,
    #[arg(allow_hyphen_values = true)]
    b2: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TractableMode {
    Verify,
    Search,
}

/// Outcome class of one invocation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    UsageError,
    DomainError,
    Inconclusive,
    ResourceError,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::UsageError => "usage-error",
            Status::DomainError => "domain-error",
            Status::Inconclusive => "inconclusive",
            Status::ResourceError => "resource-error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::UsageError => 1,
            Status::DomainError => 2,
            Status::Inconclusive => 3,
            Status::ResourceError => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    /// The JSON document for stdout. On failure it carries `status` and
    /// `error`.
    pub payload: Value,
    /// Diagnostic for stderr, or help text for stdout.
    pub message: Option<String>,
    pub pretty: bool,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn stdout(&self) -> String {
        if self.payload.is_null() {
            return self.message.clone().unwrap_or_default();
        }
        if self.pretty {
            serde_json::to_string_pretty(&self.payload).expect("JSON values serialize")
        } else {
            self.payload.to_string()
        }
    }

    pub fn stderr(&self) -> Option<String> {
        match self.status {
            Status::Ok => None,
            _ => self.message.clone(),
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

/// Parses `argv` (program name first) and runs the subcommand.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandResult {
                    status: Status::Ok,
                    payload: Value::Null,
                    message: Some(text),
                    pretty: false,
                },
                _ => failure(Status::UsageError, text, false),
            };
        }
    };
    let pretty = cli.pretty;
    match run(&cli) {
        Ok(payload) => CommandResult {
            status: Status::Ok,
            payload,
            message: None,
            pretty,
        },
        Err(Failure::Usage(msg)) => failure(Status::UsageError, msg, pretty),
        Err(Failure::Lib(e)) => {
            let status = match e {
                Error::Domain(_) => Status::DomainError,
                Error::Resource(_) => Status::ResourceError,
                Error::SearchExhausted { .. } | Error::Inconclusive(_) => Status::Inconclusive,
            };
            failure(status, e.to_string(), pretty)
        }
    }
}

fn failure(status: Status, message: String, pretty: bool) -> CommandResult {
    let first_line = message.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
    CommandResult {
        status,
        payload: json!({ "status": status.as_str(), "error": first_line }),
        message: Some(message),
        pretty,
    }
}

fn parse<T: FromStr<Err = Error>>(what: &str, s: &str) -> std::result::Result<T, Failure> {
    s.parse().map_err(|e: Error| Failure::Usage(format!("bad {what} `{s}`: {e}")))
}

fn class(s: &str) -> std::result::Result<SquareClass, Failure> {
    parse("slot", s)
}

fn algebra(a: &str, b: &str) -> std::result::Result<QuaternionAlgebra, Failure> {
    Ok(QuaternionAlgebra::new(class(a)?, class(b)?))
}

fn slots<T: FromStr<Err = Error>>(s: &str) -> std::result::Result<Vec<T>, Failure> {
    s.split(',').map(|x| parse("slot", x.trim())).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn side_name(side: Side, names: [&str; 2]) -> &str {
    names[side.index()]
}

fn case_name(case: CaseTag) -> &'static str {
    match case {
        CaseTag::Real => "real",
        CaseTag::OddPlace => "odd-place",
    }
}

fn run(cli: &Cli) -> Outcome {
    let bound = cli.bound;
    match &cli.command {
        Command::Hilbert { a, b, place } => {
            let (a, b) = (class(a)?, class(b)?);
            let v: Place = parse("place", place)?;
            let symbol = hilbert(a, b, v);
            let mut out = json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "place": v.to_string(),
                "symbol": symbol.to_string(),
            });
            if cli.oracle {
                let o = hilbert_bruteforce(a.value(), b.value(), v.prime_number())?;
                out["oracle"] = json!(o.to_string());
                out["agree"] = json!(o == symbol);
            }
            Ok(out)
        }
        Command::Ram(Algebra { a, b }) => {
            let d = algebra(a, b)?;
            let ram = ram_set(&d);
            let mut out = json!({
                "ramified": ram.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "division": !ram.is_empty(),
            });
            if cli.oracle {
                let mut agree = true;
                for v in crate::places::support(&[d.a, d.b]) {
                    let o = hilbert_bruteforce(d.a.value(), d.b.value(), v.prime_number())?;
                    agree &= (o == -1) == ram.contains(v);
                }
                out["oracle_agrees"] = json!(agree);
            }
            Ok(out)
        }
        Command::Iso(p) => {
            let (d1, d2) = (algebra(&p.a1, &p.b1)?, algebra(&p.a2, &p.b2)?);
            Ok(json!({ "isomorphic": is_isomorphic(&d1, &d2) }))
        }
        Command::Embeds { c, algebra: Algebra { a, b } } => {
            let c = class(c)?;
            let d = algebra(a, b)?;
            Ok(json!({ "embeds": embeds(c, &d)? }))
        }
        Command::Distinguish(p) => {
            let (d1, d2) = (algebra(&p.a1, &p.b1)?, algebra(&p.a2, &p.b2)?);
            Ok(match distinguish_quaternions_within(&d1, &d2, bound)? {
                None => json!({ "witness": null, "isomorphic": true }),
                Some(r) => json!({
                    "witness": r.witness.to_string(),
                    "embeds_in": side_name(r.embeds_in, ["D1", "D2"]),
                    "case": case_name(r.case),
                    "place": r.place.to_string(),
                    "verification": { "D1": r.verification[0], "D2": r.verification[1] },
                }),
            })
        }
        Command::PfisterDistinguish { d, phi1, phi2 } => {
            let (s1, s2): (Vec<SquareClass>, Vec<SquareClass>) = (slots(phi1)?, slots(phi2)?);
            if s1.len() != *d || s2.len() != *d {
                return Err(Failure::Usage(format!(
                    "--d {d} but the forms have {} and {} slots",
                    s1.len(),
                    s2.len()
                )));
            }
            let (f1, f2) = (PfisterForm::new(s1), PfisterForm::new(s2));
            Ok(match distinguish_pfister_within(&f1, &f2, bound)? {
                None => json!({ "witness": null, "isometric": true }),
                Some(r) => json!({
                    "witness": strings(r.witness.slots()),
                    "divides": side_name(r.embeds_in, ["phi1", "phi2"]),
                    "case": case_name(r.case),
                    "place": r.place.to_string(),
                    "verification": { "phi1": r.verification[0], "phi2": r.verification[1] },
                }),
            })
        }
        Command::Crux { place, phi1, phi2 } => {
            if place == "t" {
                let (f1, f2) = (PfisterForm::<Monomial>::new(slots(phi1)?), PfisterForm::new(slots(phi2)?));
                Ok(crux_json(&crux_witness_qt_within(&f1, &f2, bound)?))
            } else {
                let p: u64 = place
                    .parse()
                    .map_err(|_| Failure::Usage(format!("bad place `{place}`: expected an odd prime or t")))?;
                let p = OddPrime::new(p)?;
                let (f1, f2) = (PfisterForm::<SquareClass>::new(slots(phi1)?), PfisterForm::new(slots(phi2)?));
                Ok(crux_json(&crux_witness_within(&f1, &f2, p, bound)?))
            }
        }
        Command::Tractable { mode, base, slots: raw } => {
            let base = if base.eq_ignore_ascii_case("q") {
                TractableBase::Rational
            } else {
                TractableBase::Local(parse("base", base)?)
            };
            match mode {
                TractableMode::Verify => {
                    if raw.len() != 6 {
                        return Err(Failure::Usage(format!("verify takes 6 slots, got {}", raw.len())));
                    }
                    let s = raw.iter().map(|x| class(x)).collect::<std::result::Result<Vec<_>, _>>()?;
                    let cfg = TractableConfig {
                        a: [s[0], s[1], s[2]],
                        b: [s[3], s[4], s[5]],
                        base,
                    };
                    let r = tractable_verify(&cfg);
                    Ok(json!({
                        "premises_hold": r.premises_hold,
                        "conclusion_holds": r.conclusion_holds,
                        "violation": r.is_violation(),
                    }))
                }
                TractableMode::Search => {
                    if !raw.is_empty() {
                        return Err(Failure::Usage("search takes no slots".into()));
                    }
                    let TractableBase::Local(v) = base else {
                        return Err(Failure::Lib(Error::domain("search needs a local base: 2 or an odd prime")));
                    };
                    Ok(match tractable_search_local(v)? {
                        None => json!({ "base": v.to_string(), "tractable": true, "violation": null }),
                        Some(cfg) => json!({
                            "base": v.to_string(),
                            "tractable": false,
                            "violation": { "a": strings(&cfg.a), "b": strings(&cfg.b) },
                        }),
                    })
                }
            }
        }
        Command::Rost { a1, a2, b } => {
            let b = class(b)?;
            let q1 = QuaternionAlgebra::new(class(a1)?, b);
            let q2 = QuaternionAlgebra::new(class(a2)?, b);
            let r = rost_step_within(&q1, &q2, bound)?;
            Ok(json!({
                "c": r.c.to_string(),
                "i": r.i.to_string(),
                "q": strings(r.q.entries()),
                "anisotropic": r.anisotropic,
                "determinant": r.determinant.to_string(),
                "determinant_nonsquare": r.determinant_nonsquare,
                "not_similar": {
                    "phi1": r.not_similar.phi1,
                    "phi2": r.not_similar.phi2,
                    "gamma": r.not_similar.gamma,
                },
                "albert": {
                    "gamma": strings(r.albert.gamma.slots()),
                    "scale": r.albert.scale.to_string(),
                    "anisotropic_dim": r.albert.anisotropic_dim.to_string(),
                    "witt_class_matches": r.albert.witt_class_matches,
                },
            }))
        }
    }
}

fn crux_json<E: crate::quadform::FormEntry>(r: &CruxReport<E>) -> Value {
    let mut out = json!({
        "gamma": strings(r.gamma.slots()),
        "case": serde_json::to_value(r.case).expect("enum serializes"),
        "branch": serde_json::to_value(r.branch).expect("enum serializes"),
        "divides": side_name(r.divides, ["phi1", "phi2"]),
        "verification": { "phi1": r.verification[0], "phi2": r.verification[1] },
    });
    if let Some(w) = &r.adrian {
        out["adrian"] = json!({
            "residue_zero": strings(&w.residue_zero),
            "pivot": w.pivot.to_string(),
            "r": w.r.to_string(),
            "s": w.s.to_string(),
        });
    }
    out
}
