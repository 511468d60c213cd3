//! Command-line front end.
//!
//! Exit codes: `0` success, `1` parse or usage error, `2` domain error,
//! `3` self-check failure. A polynomial argument of `-` is read from the
//! next non-empty line of standard input.

use std::ffi::OsString;
use std::io::{self, BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bivariate::{bezout_report, BezoutReport, Window};
use crate::corpus::relprime_line;
use crate::division::{divides_linear, verify_division};
use crate::error::Error;
use crate::factor::{factor_min_ghosts, Factorization};
use crate::resultant::{
    decide, resultant, resultant_blockwise, resultant_nu, resultant_quadratic, resultant_raw,
    resultant_recursive, resultant_tangible_product, RelPrimeReport,
};
use crate::selfcheck::{self, SelfCheckReport};
use crate::semiring::{fmt_rational, Element, Layer, Rational};
use crate::text::{
    bipoly_json, element_json, format_poly, parse_bipoly, parse_poly, parse_tangible, poly_json,
    rational_json,
};
use crate::upoly::{canonical_full, essential_part, tangible_roots, Bound, IntervalSet};

#[derive(Debug, Parser)]
#[command(name = "supertrop", version, about = "Supertropical polynomial algebra")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dp,
    Recursive,
    Product,
    Quadratic,
    Blocks,
    Nu,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical full form and essential part.
    Canon {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Tangible root set.
    Roots {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Factorization minimal in ghosts.
    Factor {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Sylvester resultant.
    Resultant {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
        /// Permanent of the Sylvester matrix of the inputs as given.
        #[arg(long)]
        raw: bool,
    },
    /// Relative primeness decision.
    #[command(name = "relprime")]
    RelPrime {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Division witness for `x + a`.
    Divides {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Checks that `f + q*g` is ghost with the ghost value of `f`.
    VerifyDivision {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Grid probe of common roots of two bivariate polynomials.
    Bezout {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// `x_min,x_max,y_min,y_max`
        #[arg(long, allow_hyphen_values = true, default_value = "-10,10,-10,10")]
        window: String,
        #[arg(long, default_value = "1/4")]
        step: String,
        /// Print the sampled locus as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Randomized property suite and worked-example corpus.
    Selfcheck {
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Parse(String),
    Domain(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_parse_error() {
            Failure::Parse(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

struct Inputs<'a> {
    stdin: &'a mut dyn BufRead,
}

impl Inputs<'_> {
    fn resolve(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        let mut line = String::new();
        loop {
            line.clear();
            let n = self
                .stdin
                .read_line(&mut line)
                .map_err(|e| Failure::Parse(format!("cannot read standard input: {e}")))?;
            if n == 0 {
                return Err(Failure::Parse("standard input is exhausted".into()));
            }
            if !line.trim().is_empty() {
                return Ok(line.trim().to_string());
            }
        }
    }
}

fn layer_word(e: &Element) -> &'static str {
    match e.layer() {
        None => "zero",
        Some(Layer::Tangible) => "tangible",
        Some(Layer::Ghost) => "ghost",
    }
}

fn bound_json(b: &Bound) -> Value {
    json!(b.to_string())
}

fn roots_json(s: &IntervalSet) -> Value {
    let ivs: Vec<Value> =
        s.intervals().iter().map(|iv| json!({"lo": bound_json(&iv.lo), "hi": bound_json(&iv.hi)})).collect();
    json!({"intervals": ivs, "root_at_bottom": s.root_at_bottom})
}

fn factor_json(f: &Factorization) -> Value {
    json!({
        "lead": element_json(&f.lead),
        "power_of_lambda": f.power_of_lambda,
        "linears": f.linears.iter().map(|l| json!({
            "root": rational_json(&l.root),
            "multiplicity": l.multiplicity,
        })).collect::<Vec<_>>(),
        "quadratics": f.quadratics.iter().map(|q| json!({
            "b": rational_json(&q.b),
            "c": rational_json(&q.c),
            "multiplicity": q.multiplicity,
        })).collect::<Vec<_>>(),
        "left_ghost": f.left_ghost.as_ref().map(rational_json),
        "right_ghost": f.right_ghost.as_ref().map(rational_json),
        "text": f.to_string(),
    })
}

fn relprime_json(r: &RelPrimeReport) -> Value {
    json!({
        "resultant": element_json(&r.resultant),
        "relatively_prime": r.relatively_prime,
        "common_root_witness": r.common_root_witness.as_ref().map(rational_json),
        "common_root_set": roots_json(&r.common_root_set),
    })
}

fn point_json(p: &(Rational, Rational)) -> Value {
    json!([fmt_rational(&p.0), fmt_rational(&p.1)])
}

fn bezout_json(r: &BezoutReport) -> Value {
    json!({
        "m": r.m,
        "n": r.n,
        "bound": r.bound,
        "sampled_common_roots": r.sampled_common_roots.iter().map(point_json).collect::<Vec<_>>(),
        "cluster_of": r.cluster_of,
        "ordinary_points": r.ordinary_points.iter().map(point_json).collect::<Vec<_>>(),
        "ordinary_count": r.ordinary_count,
        "bound_holds": r.bound_holds,
        "experimental_component_count": r.component_count,
    })
}

fn bezout_text(r: &BezoutReport) -> String {
    let pts: Vec<String> = r
        .ordinary_points
        .iter()
        .map(|(x, y)| format!("({}, {})", fmt_rational(x), fmt_rational(y)))
        .collect();
    format!(
        "degrees {} {}; bound {}\nsampled common roots {}\nordinary {}{}\nbound holds {}\ncomponents {} (EXPERIMENTAL)",
        r.m,
        r.n,
        r.bound,
        r.sampled_common_roots.len(),
        r.ordinary_count,
        if pts.is_empty() { String::new() } else { format!(": {}", pts.join(" ")) },
        r.bound_holds,
        r.component_count
    )
}

fn selfcheck_text(r: &SelfCheckReport) -> String {
    let mut lines = Vec::new();
    for p in &r.properties {
        let tag = if p.failures.is_empty() { "PASS" } else { "FAIL" };
        lines.push(format!("{} {} ({} cases, {} failures)", tag, p.name, p.cases, p.failures.len()));
        lines.extend(p.failures.iter().take(3).map(|f| format!("    {}", f)));
    }
    let bad: Vec<_> = r.corpus.iter().filter(|o| !o.passed()).collect();
    let tag = if bad.is_empty() { "PASS" } else { "FAIL" };
    lines.push(format!("{} worked examples ({} lines, {} failures)", tag, r.corpus.len(), bad.len()));
    for o in bad {
        lines.push(format!(
            "    line {}: {} got '{}' expected '{}'",
            o.case.line, o.case.op, o.got, o.case.expected
        ));
    }
    lines.join("\n")
}

fn selfcheck_json(r: &SelfCheckReport) -> Value {
    json!({
        "passed": r.passed(),
        "properties": r.properties.iter().map(|p| json!({
            "name": p.name,
            "cases": p.cases,
            "failures": p.failures,
        })).collect::<Vec<_>>(),
        "corpus": {
            "lines": r.corpus.len(),
            "failures": r.corpus.iter().filter(|o| !o.passed()).map(|o| json!({
                "line": o.case.line,
                "got": o.got,
                "expected": o.case.expected,
            })).collect::<Vec<_>>(),
        },
    })
}

fn parse_window(text: &str) -> Result<Window, Failure> {
    let parts = text.split(',').map(|s| parse_tangible(s.trim())).collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [x_min, x_max, y_min, y_max] => Ok(Window { x_min, x_max, y_min, y_max }),
        _ => Err(Failure::Parse("window needs four values a,b,c,d".into())),
    }
}

fn execute(cli: &Cli, inputs: &mut Inputs<'_>) -> Result<String, Failure> {
    let mut poly = |s: &str| -> Result<_, Failure> { Ok(parse_poly(&inputs.resolve(s)?)?) };
    let json = cli.json;
    let out = match &cli.command {
        Command::Canon { f } => {
            let f = poly(f)?;
            let full = canonical_full(&f)?.to_poly();
            let ess = essential_part(&f)?;
            if json {
                json!({"full": poly_json(&full), "essential": poly_json(&ess)}).to_string()
            } else {
                format!("{}\nessential {}", format_poly(&full), format_poly(&ess))
            }
        }
        Command::Roots { f } => {
            let r = tangible_roots(&poly(f)?)?;
            if json {
                roots_json(&r).to_string()
            } else {
                r.to_string()
            }
        }
        Command::Factor { f } => {
            let fac = factor_min_ghosts(&poly(f)?)?;
            if json {
                factor_json(&fac).to_string()
            } else {
                fac.to_string()
            }
        }
        Command::Resultant { f, g, method, raw } => {
            let (f, g) = (poly(f)?, poly(g)?);
            let r = match (method, raw) {
                (Method::Dp, false) => resultant(&f, &g)?,
                (Method::Dp, true) => resultant_raw(&f, &g)?,
                (_, true) => {
                    return Err(Failure::Domain("--raw applies only to --method dp".into()));
                }
                (Method::Recursive, _) => resultant_recursive(&f, &g)?,
                (Method::Product, _) => resultant_tangible_product(&f, &g)?,
                (Method::Quadratic, _) => resultant_quadratic(&f, &g)?,
                (Method::Blocks, _) => resultant_blockwise(&f, &g)?,
                (Method::Nu, _) => resultant_nu(&f, &g)?,
            };
            if json {
                let mut v = element_json(&r);
                v["method"] = json!(format!("{:?}", method).to_lowercase());
                v["raw"] = json!(raw);
                v.to_string()
            } else {
                format!("{} ({})", r, layer_word(&r))
            }
        }
        Command::RelPrime { f, g } => {
            let (f, g) = (poly(f)?, poly(g)?);
            if json {
                relprime_json(&decide(&f, &g)?).to_string()
            } else {
                relprime_line(&f, &g)?
            }
        }
        Command::Divides { f, a } => {
            let f = poly(f)?;
            let a = parse_tangible(&inputs.resolve(a)?)?;
            let w = divides_linear(&f, a)?;
            match (json, w) {
                (true, Some(w)) => {
                    json!({"divides": true, "q": poly_json(&w.q), "ghost_sum": poly_json(&w.ghost_sum)})
                        .to_string()
                }
                (true, None) => json!({"divides": false, "q": null, "ghost_sum": null}).to_string(),
                (false, Some(w)) => format!("{}\nghost sum {}", format_poly(&w.q), format_poly(&w.ghost_sum)),
                (false, None) => "no".into(),
            }
        }
        Command::VerifyDivision { f, g, q } => {
            let (f, g, q) = (poly(f)?, poly(g)?, poly(q)?);
            let ok = verify_division(&f, &g, &q)?;
            if json {
                json!({"verified": ok}).to_string()
            } else {
                ok.to_string()
            }
        }
        Command::Bezout { f, g, window, step, csv } => {
            let fb = parse_bipoly(&inputs.resolve(f)?)?;
            let gb = parse_bipoly(&inputs.resolve(g)?)?;
            let window = parse_window(window)?;
            let step = parse_tangible(step)?;
            let r = bezout_report(&fb, &gb, &window, step)?;
            if *csv {
                r.to_csv().trim_end().to_string()
            } else if json {
                let mut v = bezout_json(&r);
                v["f"] = bipoly_json(&fb);
                v["g"] = bipoly_json(&gb);
                v.to_string()
            } else {
                bezout_text(&r)
            }
        }
        Command::Selfcheck { cases, seed } => {
            let r = selfcheck::run(*cases, *seed);
            let text = if json { selfcheck_json(&r).to_string() } else { selfcheck_text(&r) };
            if !r.passed() {
                return Err(Failure::Check(text));
            }
            text
        }
    };
    Ok(out)
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut inputs = Inputs { stdin };
    match execute(&cli, &mut inputs) {
        Ok(text) => {
            let _ = writeln!(out, "{}", text);
            0
        }
        Err(Failure::Parse(m)) => {
            let _ = writeln!(err, "error: {}", m);
            1
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {}", m);
            2
        }
        Err(Failure::Check(text)) => {
            let _ = writeln!(out, "{}", text);
            3
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = io::stdin();
    run_with(args, &mut stdin.lock(), &mut io::stdout(), &mut io::stderr())
}
