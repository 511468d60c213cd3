//! Oracles shared by the integration tests. They use only evaluation and
//! brute force, never the hull or factorization code under test.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::SeedableRng;
use supertrop::{Element, Poly, Rational};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn t(n: i64) -> Element {
    Element::tangible(n)
}

pub fn g(n: i64) -> Element {
    Element::ghost(n)
}

pub fn r(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

/// Every point where two monomials of `f` tie, for all coefficient pairs.
/// The graph of `f` can only bend at these points.
pub fn tie_points(f: &Poly) -> Vec<Rational> {
    let terms: Vec<(u32, Rational)> = f.terms().filter_map(|(d, c)| c.magnitude().map(|m| (d, m))).collect();
    let mut out = Vec::new();
    for (i, &(di, ci)) in terms.iter().enumerate() {
        for &(dj, cj) in &terms[i + 1..] {
            out.push((ci - cj) / Rational::from_integer(dj as i128 - di as i128));
        }
    }
    out
}

/// Tie points of all inputs, midpoints between consecutive ones, and one
/// point beyond each end.
pub fn probe_points(polys: &[&Poly]) -> Vec<Rational> {
    let mut pts: Vec<Rational> = polys.iter().flat_map(|p| tie_points(p)).collect();
    pts.sort();
    pts.dedup();
    let mut out = pts.clone();
    for w in pts.windows(2) {
        out.push((w[0] + w[1]) / r(2));
    }
    let lo = pts.first().copied().unwrap_or(r(0));
    let hi = pts.last().copied().unwrap_or(r(0));
    out.push(lo - r(1));
    out.push(hi + r(1));
    out.sort();
    out.dedup();
    out
}

pub fn is_root(f: &Poly, a: Rational) -> bool {
    f.eval(Element::Tangible(a)).in_ghost_ideal()
}

/// Common finite tangible root by evaluation at the probe points. The
/// intersection of two finite unions of closed intervals, if nonempty,
/// contains an endpoint of one of them or is unbounded.
pub fn common_root_by_eval(f: &Poly, g: &Poly) -> bool {
    probe_points(&[f, g]).into_iter().any(|a| is_root(f, a) && is_root(g, a))
}

/// Functional equality checked at probe points and their ghost images.
pub fn same_function(f: &Poly, h: &Poly) -> bool {
    probe_points(&[f, h]).into_iter().all(|a| {
        let (x, xv) = (Element::Tangible(a), Element::Ghost(a));
        f.eval(x) == h.eval(x) && f.eval(xv) == h.eval(xv)
    })
}

/// Product of linear factors `λ + a_i` from a root list, with lead `c`.
pub fn from_roots(c: Element, roots: &[Rational]) -> Poly {
    roots.iter().fold(Poly::constant(c), |acc, &a| &acc * &Poly::linear(a))
}
