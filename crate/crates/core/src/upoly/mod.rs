//! Univariate supertropical polynomials.
//!
//! A [`Poly`] is a sparse coefficient map. The same polynomial is also a
//! piecewise-linear function of its argument; [`canonical`] computes the
//! unique representative of that function, and [`roots`] reads tangible root
//! sets, graphs and half-tangibility off the representative.

pub mod canonical;
pub mod roots;

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::semiring::{Element, Rational, Semiring};

pub use canonical::{canonical_full, e_equiv, essential_part, Corner, FullPoly};
pub use roots::{
    analyze_ghost_sum, classify_half_tangible, ggraph, tangible_domain, tangible_roots, Bound,
    GhostSumAnalysis, HalfTangible, Interval, IntervalSet, Operand, Piece, PiecewiseLinear, Side,
};

/// Sparse polynomial `Σ α_i λ^i`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: BTreeMap<u32, Element>,
}

/// Substitutions accepted by [`Poly::translate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Translation {
    /// `λ ↦ b·λ` for a finite tangible `b`; tangible roots move by `-b`.
    Multiplicative(Rational),
    /// `λ ↦ λ + β`.
    Additive(Element),
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Element::ONE)
    }

    pub fn constant(c: Element) -> Self {
        Poly::monomial(c, 0)
    }

    /// `λ`.
    pub fn var() -> Self {
        Poly::monomial(Element::ONE, 1)
    }

    pub fn monomial(c: Element, deg: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(deg, c);
        }
        Poly { coeffs }
    }

    /// Builds from `(degree, coefficient)` pairs, summing repeated degrees.
    pub fn from_terms<I: IntoIterator<Item = (u32, Element)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<u32, Element> = BTreeMap::new();
        for (d, c) in terms {
            let e = coeffs.entry(d).or_insert(Element::Zero);
            *e = *e + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Poly { coeffs }
    }

    /// Builds from a dense slice indexed by degree.
    pub fn from_dense(coeffs: &[Element]) -> Self {
        Poly::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as u32, *c)))
    }

    /// `(λ + a)` for a tangible root `a`.
    pub fn linear(root: Rational) -> Self {
        Poly::from_terms([(1, Element::ONE), (0, Element::Tangible(root))])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, deg: u32) -> Element {
        self.coeffs.get(&deg).copied().unwrap_or(Element::Zero)
    }

    /// Stored terms in ascending degree.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, Element)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, *c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn deg(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Degree of the lowest monomial.
    pub fn ldeg(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn leading(&self) -> Element {
        self.coeffs.values().next_back().copied().unwrap_or(Element::Zero)
    }

    pub fn is_constant(&self) -> bool {
        self.deg().is_none_or(|d| d == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// True when every stored coefficient is tangible.
    pub fn is_tangible(&self) -> bool {
        self.coeffs.values().all(Element::is_tangible)
    }

    /// Dense coefficient vector `α_0..=α_deg` (empty for the zero polynomial).
    pub fn dense(&self) -> Vec<Element> {
        match self.deg() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i)).collect(),
        }
    }

    pub fn eval(&self, a: Element) -> Element {
        self.terms().map(|(d, c)| c * a.pow(d)).sum()
    }

    pub fn nu(&self) -> Poly {
        self.map_coeffs(|c| c.nu())
    }

    pub fn hat(&self) -> Poly {
        self.map_coeffs(|c| c.hat())
    }

    pub fn scale(&self, c: Element) -> Poly {
        self.map_coeffs(|x| x * c)
    }

    fn map_coeffs(&self, f: impl Fn(Element) -> Element) -> Poly {
        Poly::from_terms(self.terms().map(|(d, c)| (d, f(c))))
    }

    /// Multiplies by `λ^k`.
    pub fn shift_up(&self, k: u32) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|(d, c)| (d + k, *c)).collect() }
    }

    /// Splits `f = λ^k · g` with `g` having a nonzero constant term.
    pub fn strip_lambda(&self) -> (u32, Poly) {
        let k = self.ldeg().unwrap_or(0);
        let g = Poly { coeffs: self.coeffs.iter().map(|(d, c)| (d - k, *c)).collect() };
        (k, g)
    }

    /// The truncation `Σ_{i ≥ ℓ} α_i λ^{i-ℓ}`, so `f = λ^ℓ f⁽ℓ⁾ + lower terms`.
    pub fn truncation(&self, l: u32) -> Poly {
        Poly { coeffs: self.coeffs.range(l..).map(|(d, c)| (d - l, *c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Partial Frobenius map `λ ↦ λ^m`.
    pub fn frobenius(&self, m: u32) -> Result<Poly> {
        if m == 0 {
            return Err(Error::precondition("Frobenius exponent must be positive"));
        }
        Ok(Poly { coeffs: self.coeffs.iter().map(|(d, c)| (d * m, *c)).collect() })
    }

    pub fn translate(&self, t: Translation) -> Poly {
        match t {
            Translation::Multiplicative(b) => {
                Poly::from_terms(self.terms().map(|(d, c)| (d, c * Element::Tangible(b).pow(d))))
            }
            Translation::Additive(beta) => {
                let base = Poly::from_terms([(1, Element::ONE), (0, beta)]);
                let mut acc = Poly::zero();
                let mut power = Poly::one();
                let mut next = 0u32;
                for (d, c) in self.terms() {
                    while next < d {
                        power = &power * &base;
                        next += 1;
                    }
                    acc = &acc + &power.scale(c);
                }
                acc
            }
        }
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        for (d, c) in rhs.terms() {
            let e = coeffs.entry(d).or_insert(Element::Zero);
            *e = *e + c;
        }
        Poly { coeffs }
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut coeffs: BTreeMap<u32, Element> = BTreeMap::new();
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                let e = coeffs.entry(i + j).or_insert(Element::Zero);
                *e = *e + a * b;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Poly { coeffs }
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Semiring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }

    fn one() -> Self {
        Poly::one()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn times(&self, other: &Self) -> Self {
        self * other
    }

    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}
