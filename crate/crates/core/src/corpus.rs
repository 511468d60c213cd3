//! The checked-in corpus of worked examples.
//!
//! Each line of `data/worked_examples.txt` reads `op args ; args => expected`.
//! [`evaluate`] runs one operation and renders its result in the same text
//! form, so a line passes when the rendering matches `expected` exactly.

use crate::bivariate::{bezout_report, resultant_in_second, BiPoly, Var, Window};
use crate::division::{divides_linear, radical_member_check, verify_division};
use crate::error::{Error, Result};
use crate::factor::{e_divides, factor_min_ghosts, split_tan_intan};
use crate::resultant::{
    decide, permanent, resultant, resultant_nu, resultant_quadratic, resultant_raw, resultant_recursive,
    resultant_tangible_product, sylvester, SupMatrix,
};
use crate::semiring::{fmt_rational, Element, Layer, Rational};
use crate::text::{format_poly, parse_bipoly, parse_poly, parse_scalar, parse_tangible};
use crate::upoly::{
    analyze_ghost_sum, canonical_full, classify_half_tangible, e_equiv, essential_part, ggraph,
    tangible_roots, GhostSumAnalysis, Operand, Poly, Side, Translation,
};

pub const WORKED_EXAMPLES: &str = include_str!("../data/worked_examples.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub line: usize,
    pub op: String,
    pub args: Vec<String>,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub case: Case,
    pub got: String,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.got == self.case.expected
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<Case>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            let (lhs, expected) = l
                .split_once("=>")
                .ok_or_else(|| Error::Syntax { pos: 0, msg: format!("line {}: missing '=>'", i + 1) })?;
            let lhs = lhs.trim();
            let (op, rest) = lhs.split_once(char::is_whitespace).unwrap_or((lhs, ""));
            Ok(Case {
                line: i + 1,
                op: op.to_string(),
                args: rest.split(';').map(|a| a.trim().to_string()).collect(),
                expected: expected.trim().to_string(),
            })
        })
        .collect()
}

fn arg(args: &[String], i: usize) -> Result<&str> {
    args.get(i).map(String::as_str).ok_or_else(|| Error::precondition(format!("missing argument {}", i + 1)))
}

fn poly(args: &[String], i: usize) -> Result<Poly> {
    parse_poly(arg(args, i)?)
}

fn scalar(args: &[String], i: usize) -> Result<Element> {
    parse_scalar(arg(args, i)?)
}

fn nat(args: &[String], i: usize) -> Result<u32> {
    arg(args, i)?.parse().map_err(|_| Error::precondition("expected a natural number"))
}

fn var(args: &[String], i: usize) -> Result<Var> {
    match arg(args, i)? {
        "x" => Ok(Var::First),
        "y" => Ok(Var::Second),
        other => Err(Error::UnknownVariable { pos: 0, name: other.to_string() }),
    }
}

fn layer_letter(l: Layer) -> &'static str {
    match l {
        Layer::Tangible => "t",
        Layer::Ghost => "g",
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// Rows separated by ` / `, entries by spaces.
pub fn format_matrix(m: &SupMatrix) -> String {
    join(m.to_rows().iter().map(|r| join(r, " ")), " / ")
}

pub fn parse_matrix(text: &str) -> Result<SupMatrix> {
    let rows = text
        .split('/')
        .map(|r| r.split_whitespace().map(parse_scalar).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    SupMatrix::from_rows(rows)
}

/// Renders a univariate result in the named variable.
fn format_in(p: &Poly, name: &str) -> String {
    let s = format_poly(p);
    if name == "x" {
        s
    } else {
        s.replace('x', name)
    }
}

/// Runs one operation; domain errors render as `error`.
pub fn evaluate(op: &str, args: &[String]) -> Result<String> {
    let elt = |a: Element| a.to_string();
    let out = match op {
        "add" => elt(scalar(args, 0)? + scalar(args, 1)?),
        "mul" => elt(scalar(args, 0)? * scalar(args, 1)?),
        "nu" => elt(scalar(args, 0)?.nu()),
        "hat" => elt(scalar(args, 0)?.hat()),
        "pow" => elt(scalar(args, 0)?.pow(nat(args, 1)?)),
        "div" => elt(scalar(args, 0)?.try_div(&scalar(args, 1)?)?),
        "padd" => format_poly(&(&poly(args, 0)? + &poly(args, 1)?)),
        "pmul" => format_poly(&(&poly(args, 0)? * &poly(args, 1)?)),
        "eval" => elt(poly(args, 0)?.eval(scalar(args, 1)?)),
        "canon" => format_poly(&canonical_full(&poly(args, 0)?)?.to_poly()),
        "essential" => format_poly(&essential_part(&poly(args, 0)?)?),
        "eequiv" => e_equiv(&poly(args, 0)?, &poly(args, 1)?).to_string(),
        "roots" => tangible_roots(&poly(args, 0)?)?.to_string(),
        "graph" => {
            let g = ggraph(&poly(args, 0)?)?;
            format!(
                "slopes {}; breakpoints {}; layers {}",
                join(g.pieces.iter().map(|p| p.slope), " "),
                join(g.breakpoints.iter().map(fmt_rational), " "),
                join(g.pieces.iter().map(|p| layer_letter(p.layer)), " "),
            )
        }
        "half" => match classify_half_tangible(&poly(args, 0)?)? {
            None => "none".into(),
            Some(h) => {
                let side = if h.side == Side::Left { "left" } else { "right" };
                format!("{} {}", side, fmt_rational(&h.alpha))
            }
        },
        "ghostsum" => match analyze_ghost_sum(&poly(args, 0)?, &poly(args, 1)?)? {
            GhostSumAnalysis::CommonRoot(a) => format!("common {}", fmt_rational(&a)),
            GhostSumAnalysis::HalfTangible { alpha, beta, left } => format!(
                "half {} {} {}",
                fmt_rational(&alpha),
                fmt_rational(&beta),
                if left == Operand::First { "first" } else { "second" }
            ),
            GhostSumAnalysis::NotGhostSum => "none".into(),
        },
        "frobenius" => format_poly(&poly(args, 0)?.frobenius(nat(args, 1)?)?),
        "mulshift" => {
            let b = parse_tangible(arg(args, 1)?)?;
            format_poly(&poly(args, 0)?.translate(Translation::Multiplicative(b)))
        }
        "addshift" => format_poly(&poly(args, 0)?.translate(Translation::Additive(scalar(args, 1)?))),
        "factor" => factor_min_ghosts(&poly(args, 0)?)?.to_string(),
        "expand" => format_poly(&poly(args, 0)?),
        "split" => {
            let (t, i) = split_tan_intan(&poly(args, 0)?)?;
            format!("{} ; {}", format_poly(&t), format_poly(&i))
        }
        "edivides" => e_divides(&poly(args, 0)?, &poly(args, 1)?)?.to_string(),
        "sylvester" => format_matrix(&sylvester(&poly(args, 0)?, &poly(args, 1)?)?),
        "perm" => elt(permanent(&parse_matrix(arg(args, 0)?)?)?),
        "resultant" => elt(resultant(&poly(args, 0)?, &poly(args, 1)?)?),
        "raw" => elt(resultant_raw(&poly(args, 0)?, &poly(args, 1)?)?),
        "recursive" => elt(resultant_recursive(&poly(args, 0)?, &poly(args, 1)?)?),
        "product" => elt(resultant_tangible_product(&poly(args, 0)?, &poly(args, 1)?)?),
        "rnu" => elt(resultant_nu(&poly(args, 0)?, &poly(args, 1)?)?),
        "quadratic" => elt(resultant_quadratic(&poly(args, 0)?, &poly(args, 1)?)?),
        "relprime" => relprime_line(&poly(args, 0)?, &poly(args, 1)?)?,
        "verify" => verify_division(&poly(args, 0)?, &poly(args, 1)?, &poly(args, 2)?)?.to_string(),
        "divides" => {
            let a = parse_tangible(arg(args, 1)?)?;
            match divides_linear(&poly(args, 0)?, a)? {
                Some(w) => format_poly(&w.q),
                None => "no".into(),
            }
        }
        "radical" => radical_member_check(&poly(args, 0)?, nat(args, 1)?, &poly(args, 2)?, &poly(args, 3)?)?
            .to_string(),
        "bieval" => elt(parse_bipoly(arg(args, 0)?)?.eval(scalar(args, 1)?, scalar(args, 2)?)),
        "bires" => {
            format_poly(&resultant_in_second(&parse_bipoly(arg(args, 0)?)?, &parse_bipoly(arg(args, 1)?)?)?)
        }
        "specialize" => {
            let v = var(args, 1)?;
            let p = parse_bipoly(arg(args, 0)?)?.specialize(v, scalar(args, 2)?);
            format_in(&p, if v == Var::First { "y" } else { "x" })
        }
        "bezout" => {
            let f: BiPoly = parse_bipoly(arg(args, 0)?)?;
            let g: BiPoly = parse_bipoly(arg(args, 1)?)?;
            let r = bezout_report(&f, &g, &Window::default(), Rational::new(1, 4))?;
            format!("ordinary {}; bound {}; holds {}", r.ordinary_count, r.bound, r.bound_holds)
        }
        other => {
            return Err(Error::precondition(format!("unknown corpus operation '{}'", other)));
        }
    };
    Ok(out)
}

/// `relatively prime; resultant R` or `not relatively prime; common root a`.
pub fn relprime_line(f: &Poly, g: &Poly) -> Result<String> {
    let r = decide(f, g)?;
    Ok(if r.relatively_prime {
        format!("relatively prime; resultant {}", r.resultant)
    } else {
        let w = r.common_root_witness.map_or_else(|| "-inf".to_string(), |a| fmt_rational(&a));
        format!("not relatively prime; common root {}", w)
    })
}

pub fn run_case(case: &Case) -> Outcome {
    let got = match evaluate(&case.op, &case.args) {
        Ok(s) => s,
        Err(e) if e.is_parse_error() => format!("parse error: {}", e),
        Err(_) => "error".into(),
    };
    Outcome { case: case.clone(), got }
}

/// Runs every line of the built-in corpus.
pub fn run_worked_examples() -> Vec<Outcome> {
    parse_corpus(WORKED_EXAMPLES).expect("built-in corpus is well formed").iter().map(run_case).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        let outcomes = run_worked_examples();
        assert!(outcomes.len() > 100);
        let failed: Vec<String> = outcomes
            .iter()
            .filter(|o| !o.passed())
            .map(|o| {
                format!(
                    "line {} {} {:?}: got '{}', expected '{}'",
                    o.case.line, o.case.op, o.case.args, o.got, o.case.expected
                )
            })
            .collect();
        assert!(failed.is_empty(), "{}", failed.join("\n"));
    }

    #[test]
    fn matrix_text() {
        let m = parse_matrix("2v 0 / 1 -inf").unwrap();
        assert_eq!(format_matrix(&m), "2v 0 / 1 -inf");
        assert!(parse_matrix("1 2 / 3").is_err());
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_corpus("add 1 ; 2").is_err());
        let cases = parse_corpus("# c\n\nadd 1 ; 2 => 2\n").unwrap();
        assert_eq!(cases.len(), 1);
        assert_eq!(cases[0].line, 3);
        assert_eq!(
            run_case(&Case { line: 0, op: "nope".into(), args: vec![], expected: String::new() }).got,
            "error"
        );
    }
}
