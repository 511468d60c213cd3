//! Seeded generators of scalars, polynomials and matrices for property
//! checks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bivariate::BiPoly;
use crate::resultant::SupMatrix;
use crate::semiring::{q, Element, Rational};
use crate::upoly::{canonical_full, Poly};

/// Small rational, occasionally with denominator 2 or 3.
pub fn rational<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    let n = rng.gen_range(lo..=hi);
    match rng.gen_range(0..8) {
        0 => Rational::new(2 * n as i128 + 1, 2),
        1 => Rational::new(3 * n as i128 + 1, 3),
        _ => q(n),
    }
}

/// Integer-valued rational in `lo..=hi`.
pub fn integer<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> Rational {
    q(rng.gen_range(lo..=hi))
}

pub fn element<R: Rng>(rng: &mut R, p_zero: f64, p_ghost: f64) -> Element {
    if rng.gen_bool(p_zero) {
        return Element::Zero;
    }
    let m = rational(rng, -8, 8);
    if rng.gen_bool(p_ghost) {
        Element::Ghost(m)
    } else {
        Element::Tangible(m)
    }
}

/// Nonzero polynomial of degree at most `max_deg` with mixed layers.
pub fn poly<R: Rng>(rng: &mut R, max_deg: u32, p_ghost: f64) -> Poly {
    loop {
        let d = rng.gen_range(0..=max_deg);
        let f = Poly::from_terms((0..=d).map(|i| (i, element(rng, 0.25, p_ghost))));
        if !f.is_zero() {
            return f;
        }
    }
}

/// Polynomial of degree between 1 and `max_deg` with nonzero constant term.
pub fn nonconstant_poly<R: Rng>(rng: &mut R, max_deg: u32, p_ghost: f64) -> Poly {
    loop {
        let f = poly(rng, max_deg, p_ghost);
        if !f.is_constant() && (f.ldeg() == Some(0) || rng.gen_bool(0.2)) {
            return f;
        }
    }
}

/// Canonical full form of a random polynomial with leading coefficient `0`.
pub fn monic_full<R: Rng>(rng: &mut R, max_deg: u32, p_ghost: f64) -> Poly {
    let d = rng.gen_range(1..=max_deg);
    let mut f = Poly::from_terms((0..d).map(|i| (i, element(rng, 0.25, p_ghost))));
    f = &f + &Poly::monomial(Element::ONE, d);
    canonical_full(&f).unwrap().to_poly()
}

/// Monic `Π (λ + a_i)` with distinct integer roots `a_i`.
pub fn tangible_split<R: Rng>(rng: &mut R, deg: u32) -> Poly {
    let mut roots: Vec<i64> = (-12..=12).collect();
    roots.shuffle(rng);
    roots[..deg as usize].iter().fold(Poly::one(), |acc, &a| &acc * &Poly::linear(q(a)))
}

/// Flips the layer of each nonzero coefficient with probability one half.
pub fn perturb_layers<R: Rng>(rng: &mut R, f: &Poly) -> Poly {
    Poly::from_terms(f.terms().map(|(d, c)| {
        let c = if rng.gen_bool(0.5) { c.nu() } else { c.hat() };
        (d, c)
    }))
}

/// Random polynomial with tangible coefficients.
pub fn tangible_poly<R: Rng>(rng: &mut R, max_deg: u32) -> Poly {
    poly(rng, max_deg, 0.0).hat()
}

/// A left half-tangible `f` and right half-tangible `g` whose sum is ghost.
pub fn half_tangible_pair<R: Rng>(rng: &mut R) -> (Poly, Poly) {
    let k = rng.gen_range(1..=3u32);
    let c = integer(rng, -5, 5);
    let alpha = integer(rng, -6, 2);
    let beta = alpha + integer(rng, 1, 6);
    let up = rng.gen_range(1..=2u32);
    let down = rng.gen_range(1..=k);
    let f = Poly::from_terms([(k, Element::Tangible(c)), (k + up, Element::Ghost(c - beta * q(up as i64)))]);
    let g =
        Poly::from_terms([(k, Element::Tangible(c)), (k - down, Element::Ghost(c + alpha * q(down as i64)))]);
    if rng.gen_bool(0.5) {
        (f, g)
    } else {
        (g, f)
    }
}

/// A pair of non-monomials biased toward having a ghost sum.
pub fn ghost_sum_pair<R: Rng>(rng: &mut R) -> (Poly, Poly) {
    loop {
        let (f, g) = match rng.gen_range(0..4) {
            0 => half_tangible_pair(rng),
            1 => {
                let f = nonconstant_poly(rng, 4, 0.3);
                let g = perturb_layers(rng, &f);
                (f, g)
            }
            2 => {
                let f = nonconstant_poly(rng, 4, 0.3);
                let h = nonconstant_poly(rng, 2, 0.3);
                let g = &f.nu() + &h;
                (f, g)
            }
            _ => (nonconstant_poly(rng, 4, 0.4), nonconstant_poly(rng, 4, 0.4)),
        };
        if !f.is_monomial() && !g.is_monomial() {
            return (f, g);
        }
    }
}

pub fn matrix<R: Rng>(rng: &mut R, side: usize) -> SupMatrix {
    let rows = (0..side).map(|_| (0..side).map(|_| element(rng, 0.2, 0.3)).collect()).collect();
    SupMatrix::from_rows(rows).unwrap()
}

/// Bivariate polynomial of total degree between 1 and `max_deg`.
pub fn bipoly<R: Rng>(rng: &mut R, max_deg: u32, p_ghost: f64) -> BiPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                if rng.gen_bool(0.6) {
                    let m = integer(rng, -6, 6);
                    let e = if rng.gen_bool(p_ghost) { Element::Ghost(m) } else { Element::Tangible(m) };
                    terms.push(((i, j), e));
                }
            }
        }
        let f = BiPoly::from_terms(terms);
        if f.total_deg().is_some_and(|t| t > 0) {
            return f;
        }
    }
}
