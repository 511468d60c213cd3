//! Factorization into tangible linear factors and a minimal set of ghost
//! factors.
//!
//! Every nonzero polynomial is e-equivalent to
//! `lead · λ^k · (λ^ν + a_l) · (λ + a_r^ν) · Π (λ + a_i)^{m_i} · Π (λ² + b_j^ν λ + c_j)`
//! where each factor is optional. Each ghost factor spans a maximal run of
//! ghost-dominated pieces of the graph; every remaining unit of slope change
//! becomes a tangible linear factor at its corner. When the polynomial is
//! ghost everywhere the ghost is carried by `lead` instead.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::semiring::{fmt_rational, qadd, Element, Rational};
use crate::upoly::{canonical_full, e_equiv, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Linear {
    pub root: Rational,
    pub multiplicity: u32,
}

/// `(λ² + b^ν λ + c)^multiplicity`, with tangible roots `[c - b, b]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quadratic {
    pub b: Rational,
    pub c: Rational,
    pub multiplicity: u32,
}

impl Quadratic {
    pub fn poly(&self) -> Poly {
        Poly::from_terms([(2, Element::ONE), (1, Element::Ghost(self.b)), (0, Element::Tangible(self.c))])
    }

    pub fn root_interval(&self) -> (Rational, Rational) {
        (self.c - self.b, self.b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    pub lead: Element,
    pub power_of_lambda: u32,
    /// `λ^ν + a`, ghost on `[a, +inf)`.
    pub left_ghost: Option<Rational>,
    /// `λ + a^ν`, ghost on `(-inf, a]`.
    pub right_ghost: Option<Rational>,
    pub linears: Vec<Linear>,
    pub quadratics: Vec<Quadratic>,
}

impl Default for Factorization {
    fn default() -> Self {
        Factorization {
            lead: Element::ONE,
            power_of_lambda: 0,
            left_ghost: None,
            right_ghost: None,
            linears: Vec::new(),
            quadratics: Vec::new(),
        }
    }
}

fn left_ghost_poly(a: Rational) -> Poly {
    Poly::from_terms([(1, Element::Ghost(Rational::from_integer(0))), (0, Element::Tangible(a))])
}

fn right_ghost_poly(a: Rational) -> Poly {
    Poly::from_terms([(1, Element::ONE), (0, Element::Ghost(a))])
}

impl Factorization {
    /// Product of the tangible linear factors and the power of `λ`.
    pub fn tangible_part(&self) -> Poly {
        self.linears.iter().fold(Poly::var().pow(self.power_of_lambda), |acc, l| {
            &acc * &Poly::linear(l.root).pow(l.multiplicity)
        })
    }

    /// Product of the ghost factors, including a ghost unit when the lead is ghost.
    pub fn intangible_part(&self) -> Poly {
        let mut acc = if self.lead.is_ghost() { Poly::constant(Element::ONE.nu()) } else { Poly::one() };
        if let Some(a) = self.left_ghost {
            acc = &acc * &left_ghost_poly(a);
        }
        if let Some(a) = self.right_ghost {
            acc = &acc * &right_ghost_poly(a);
        }
        for q in &self.quadratics {
            acc = &acc * &q.poly().pow(q.multiplicity);
        }
        acc
    }

    pub fn expand(&self) -> Poly {
        (&self.tangible_part() * &self.intangible_part()).scale(self.lead.hat())
    }

    /// Total degree of all factors.
    pub fn degree(&self) -> u32 {
        self.power_of_lambda
            + self.left_ghost.map_or(0, |_| 1)
            + self.right_ghost.map_or(0, |_| 1)
            + self.linears.iter().map(|l| l.multiplicity).sum::<u32>()
            + self.quadratics.iter().map(|q| 2 * q.multiplicity).sum::<u32>()
    }

    /// Tangible root sets of the non-linear factors, as `(lo, hi)` with `None` for infinity.
    pub fn ghost_factor_intervals(&self) -> Vec<(Option<Rational>, Option<Rational>)> {
        let mut out: Vec<_> = self
            .quadratics
            .iter()
            .map(|q| {
                let (lo, hi) = q.root_interval();
                (Some(lo), Some(hi))
            })
            .collect();
        out.extend(self.right_ghost.map(|a| (None, Some(a))));
        out.extend(self.left_ghost.map(|a| (Some(a), None)));
        out
    }
}

pub fn factor_min_ghosts(f: &Poly) -> Result<Factorization> {
    let c = canonical_full(f)?;
    let vs = c.vertices();
    let corners = c.corners();
    let top = c.coeffs[*vs.last().unwrap()];
    let mut out = Factorization { lead: top.hat(), power_of_lambda: c.shift, ..Factorization::default() };
    let mut mult: Vec<u32> = corners.iter().map(|k| k.multiplicity).collect();
    let ghost = |k: usize| c.coeffs[vs[k]].is_ghost();
    if c.is_ghost() {
        out.lead = top;
    } else {
        let mut k = 0;
        while k < vs.len() {
            if !ghost(k) {
                k += 1;
                continue;
            }
            let start = k;
            while k < vs.len() && ghost(k) {
                k += 1;
            }
            let end = k - 1;
            match (start > 0, end + 1 < vs.len()) {
                (true, true) => {
                    let lo = corners[start - 1].value;
                    let hi = corners[end].value;
                    out.quadratics.push(Quadratic { b: hi, c: qadd(lo, hi), multiplicity: 1 });
                    mult[start - 1] -= 1;
                    mult[end] -= 1;
                }
                (false, true) => {
                    out.right_ghost = Some(corners[end].value);
                    mult[end] -= 1;
                }
                (true, false) => {
                    out.left_ghost = Some(corners[start - 1].value);
                    mult[start - 1] -= 1;
                }
                (false, false) => unreachable!("an all-ghost form carries its ghost in the lead"),
            }
        }
    }
    out.linears = corners
        .iter()
        .zip(mult)
        .filter(|(_, m)| *m > 0)
        .map(|(k, m)| Linear { root: k.value, multiplicity: m })
        .collect();
    Ok(out)
}

/// `(tangible part, intangible part)`; their product times the lead is e-equivalent to `f`.
pub fn split_tan_intan(f: &Poly) -> Result<(Poly, Poly)> {
    let fac = factor_min_ghosts(f)?;
    Ok((fac.tangible_part(), fac.intangible_part()))
}

fn linear_counts(fac: &Factorization) -> BTreeMap<Rational, u32> {
    fac.linears.iter().map(|l| (l.root, l.multiplicity)).collect()
}

fn quadratic_counts(fac: &Factorization) -> BTreeMap<(Rational, Rational), u32> {
    fac.quadratics.iter().map(|q| ((q.b, q.c), q.multiplicity)).collect()
}

fn sub_counts<K: Ord + Copy>(big: &BTreeMap<K, u32>, small: &BTreeMap<K, u32>) -> Option<BTreeMap<K, u32>> {
    let mut rest = big.clone();
    for (k, m) in small {
        let have = rest.get_mut(k)?;
        *have = have.checked_sub(*m)?;
    }
    rest.retain(|_, m| *m > 0);
    Some(rest)
}

fn sub_opt(big: Option<Rational>, small: Option<Rational>) -> Option<Option<Rational>> {
    match (big, small) {
        (_, None) => Some(big),
        (Some(a), Some(b)) if a == b => Some(None),
        _ => None,
    }
}

/// A cofactor `h` with `g·h` e-equivalent to `f`, read off the factorizations.
pub fn e_quotient(g: &Poly, f: &Poly) -> Result<Option<Poly>> {
    let fg = factor_min_ghosts(g)?;
    let ff = factor_min_ghosts(f)?;
    if fg.lead.is_ghost() && !ff.lead.is_ghost() {
        return Ok(None);
    }
    let Some(power) = ff.power_of_lambda.checked_sub(fg.power_of_lambda) else {
        return Ok(None);
    };
    let (Some(lg), Some(rg)) =
        (sub_opt(ff.left_ghost, fg.left_ghost), sub_opt(ff.right_ghost, fg.right_ghost))
    else {
        return Ok(None);
    };
    let (Some(lin), Some(quad)) = (
        sub_counts(&linear_counts(&ff), &linear_counts(&fg)),
        sub_counts(&quadratic_counts(&ff), &quadratic_counts(&fg)),
    ) else {
        return Ok(None);
    };
    let lead = ff.lead.hat().try_div(&fg.lead.hat())?;
    let cof = Factorization {
        lead: if ff.lead.is_ghost() && !fg.lead.is_ghost() { lead.nu() } else { lead },
        power_of_lambda: power,
        left_ghost: lg,
        right_ghost: rg,
        linears: lin.into_iter().map(|(root, multiplicity)| Linear { root, multiplicity }).collect(),
        quadratics: quad.into_iter().map(|((b, c), multiplicity)| Quadratic { b, c, multiplicity }).collect(),
    };
    let h = cof.expand();
    Ok(e_equiv(&(g * &h), f).then_some(h))
}

/// Whether `g·h` is e-equivalent to `f` for some polynomial `h`.
pub fn e_divides(g: &Poly, f: &Poly) -> Result<bool> {
    Ok(e_quotient(g, f)?.is_some())
}

fn power_suffix(m: u32) -> String {
    if m == 1 {
        String::new()
    } else {
        format!("^{}", m)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.lead != Element::ONE {
            parts.push(self.lead.to_string());
        }
        for l in &self.linears {
            parts.push(format!("(x + {}){}", fmt_rational(&l.root), power_suffix(l.multiplicity)));
        }
        for q in &self.quadratics {
            parts.push(format!(
                "(x^2 + {}v*x + {}){}",
                fmt_rational(&q.b),
                fmt_rational(&q.c),
                power_suffix(q.multiplicity)
            ));
        }
        if let Some(a) = self.right_ghost {
            parts.push(format!("(x + {}v)", fmt_rational(&a)));
        }
        if let Some(a) = self.left_ghost {
            parts.push(format!("(0v*x + {})", fmt_rational(&a)));
        }
        match self.power_of_lambda {
            0 => {}
            1 => parts.push("x".into()),
            k => parts.push(format!("x^{}", k)),
        }
        if parts.is_empty() {
            parts.push(Element::ONE.to_string());
        }
        write!(f, "{}", parts.join("*"))
    }
}
