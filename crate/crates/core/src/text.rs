//! Expression syntax and rendering.
//!
//! ```text
//! poly     := term ('+' term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' nat)?
//! atom     := scalar | 'x' | 'y' | '(' poly ')'
//! scalar   := '-inf' | rational 'v'?
//! rational := '-'? digits ('/' digits)?
//! ```
//!
//! A trailing `v` marks a ghost value. Whitespace is ignored.
//!
//! ```
//! use supertrop::text::{format_poly, parse_poly};
//!
//! let f = parse_poly("(x+2)*(x+2)").unwrap();
//! assert_eq!(format_poly(&f), "x^2 + 2v*x + 4");
//! ```

use serde_json::{json, Value};

use crate::bivariate::{BiPoly, Var};
use crate::error::{Error, Result};
use crate::semiring::{fmt_rational, Element, Layer, Rational};
use crate::upoly::Poly;

/// Parsed expression before expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    Pow(Box<Expr>, u32),
    Var(Var),
    Const(Element),
}

impl Expr {
    pub fn uses_second(&self) -> bool {
        match self {
            Expr::Sum(v) | Expr::Prod(v) => v.iter().any(Expr::uses_second),
            Expr::Pow(b, _) => b.uses_second(),
            Expr::Var(v) => *v == Var::Second,
            Expr::Const(_) => false,
        }
    }

    pub fn expand(&self) -> BiPoly {
        match self {
            Expr::Sum(v) => v.iter().fold(BiPoly::zero(), |acc, e| &acc + &e.expand()),
            Expr::Prod(v) => v.iter().fold(BiPoly::constant(Element::ONE), |acc, e| &acc * &e.expand()),
            Expr::Pow(b, k) => b.expand().pow(*k),
            Expr::Var(Var::First) => BiPoly::x(),
            Expr::Var(Var::Second) => BiPoly::y(),
            Expr::Const(c) => BiPoly::constant(*c),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn poly(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Prod(factors) })
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            let d = self.digits().ok_or_else(|| self.syntax("expected an exponent"))?;
            let k: u32 =
                d.parse().map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.poly()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"x" => Ok(Expr::Var(Var::First)),
                    b"y" => Ok(Expr::Var(Var::Second)),
                    name => Err(Error::UnknownVariable {
                        pos: start,
                        name: String::from_utf8_lossy(name).into_owned(),
                    }),
                }
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => Ok(Expr::Const(self.scalar()?)),
            Some(c) => Err(self.syntax(format!("unexpected character '{}'", c as char))),
        }
    }

    fn scalar(&mut self) -> Result<Element> {
        let start = self.pos;
        let neg = self.src[self.pos] == b'-';
        if neg {
            self.pos += 1;
            if self.src[self.pos..].starts_with(b"inf") {
                self.pos += 3;
                return Ok(Element::Zero);
            }
        }
        let bad = |msg: &str| Error::BadRational { pos: start, msg: msg.into() };
        let num = self.digits().ok_or_else(|| bad("expected digits"))?;
        let mut value: Rational =
            num.parse::<i128>().map(Rational::from_integer).map_err(|_| bad("numerator too large"))?;
        if self.src.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let den = self.digits().ok_or_else(|| bad("expected denominator digits"))?;
            let den: i128 = den.parse().map_err(|_| bad("denominator too large"))?;
            if den == 0 {
                return Err(bad("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        if neg {
            value = -value;
        }
        if self.src.get(self.pos) == Some(&b'v') {
            self.pos += 1;
            return Ok(Element::Ghost(value));
        }
        Ok(Element::Tangible(value))
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.poly()?;
    if p.peek().is_some() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

pub fn parse_bipoly(text: &str) -> Result<BiPoly> {
    Ok(parse_expr(text)?.expand())
}

/// Parses a polynomial in `x` only.
pub fn parse_poly(text: &str) -> Result<Poly> {
    let e = parse_expr(text)?;
    if e.uses_second() {
        let pos = text.find('y').unwrap_or(0);
        return Err(Error::UnknownVariable { pos, name: "y".into() });
    }
    Ok(e.expand().specialize(Var::Second, Element::ONE))
}

pub fn parse_scalar(text: &str) -> Result<Element> {
    match parse_expr(text)? {
        Expr::Const(c) => Ok(c),
        _ => Err(Error::Syntax { pos: 0, msg: "expected a scalar".into() }),
    }
}

/// A finite tangible value, e.g. a root to test.
pub fn parse_tangible(text: &str) -> Result<Rational> {
    match parse_scalar(text)? {
        Element::Tangible(r) => Ok(r),
        _ => Err(Error::BadRational { pos: 0, msg: "expected a finite tangible value".into() }),
    }
}

fn monomial(c: Element, powers: &[(&str, u32)]) -> String {
    let vars: Vec<String> = powers
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(v, k)| if *k == 1 { v.to_string() } else { format!("{}^{}", v, k) })
        .collect();
    if vars.is_empty() {
        return c.to_string();
    }
    if c == Element::ONE {
        vars.join("*")
    } else {
        format!("{}*{}", c, vars.join("*"))
    }
}

/// Highest degree first, e.g. `x^2 + 6v*x + 7`; the zero polynomial is `-inf`.
pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return Element::Zero.to_string();
    }
    p.terms().rev().map(|(d, c)| monomial(c, &[("x", d)])).collect::<Vec<_>>().join(" + ")
}

fn bi_order(p: &BiPoly) -> Vec<((u32, u32), Element)> {
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|((a, b), _), ((c, d), _)| (c + d, c).cmp(&(a + b, a)));
    terms
}

/// Total degree descending, then `x`-degree descending.
pub fn format_bipoly(p: &BiPoly) -> String {
    if p.is_zero() {
        return Element::Zero.to_string();
    }
    bi_order(p)
        .into_iter()
        .map(|((i, j), c)| monomial(c, &[("x", i), ("y", j)]))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn layer_name(e: &Element) -> Value {
    match e.layer() {
        None => Value::Null,
        Some(Layer::Tangible) => json!("tangible"),
        Some(Layer::Ghost) => json!("ghost"),
    }
}

pub fn rational_json(r: &Rational) -> Value {
    json!(fmt_rational(r))
}

pub fn element_json(e: &Element) -> Value {
    json!({
        "value": e.magnitude().map_or("-inf".to_string(), |m| fmt_rational(&m)),
        "layer": layer_name(e),
    })
}

pub fn poly_json(p: &Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(d, c)| {
            json!({
                "i": d,
                "value": fmt_rational(&c.magnitude().unwrap()),
                "layer": layer_name(&c),
            })
        })
        .collect();
    json!({ "vars": 1, "terms": terms })
}

pub fn bipoly_json(p: &BiPoly) -> Value {
    let terms: Vec<Value> = bi_order(p)
        .into_iter()
        .map(|((i, j), c)| {
            json!({
                "i": i,
                "j": j,
                "value": fmt_rational(&c.magnitude().unwrap()),
                "layer": layer_name(&c),
            })
        })
        .collect();
    json!({ "vars": 2, "terms": terms })
}
