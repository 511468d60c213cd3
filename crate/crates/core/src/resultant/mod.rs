//! Sylvester resultants and relative primeness.
//!
//! The resultant of `f` and `g` is the permanent of their Sylvester matrix.
//! It is ghost exactly when `f` and `g` share a tangible root, so it decides
//! relative primeness without searching for witness polynomials.
//!
//! All entry points share the same reductions:
//!
//! * a constant `g = β` gives `β^{deg f}` (symmetrically for `f`), and two
//!   constants give `0`;
//! * if both inputs are divisible by `λ` the resultant is `-inf`;
//! * otherwise the powers of `λ` are removed, contributing the tangible
//!   magnitude of the other constant term, and the rest is computed on
//!   canonical full forms.
//!
//! ```
//! use supertrop::{Element, Poly};
//! use supertrop::resultant::resultant;
//!
//! let f = Poly::from_terms([(1, Element::tangible(0)), (0, Element::ghost(2))]);
//! let g = Poly::linear(1.into());
//! assert_eq!(resultant(&f, &g).unwrap(), Element::ghost(2));
//! ```

pub mod blocks;
pub mod matrix;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::semiring::{Element, Rational, Semiring};
use crate::upoly::{canonical_full, tangible_roots, IntervalSet, Poly};

pub use blocks::{block_resultant, resultant_blockwise, semitangible_blocks};
pub use matrix::{permanent, permanent_generic, permanent_oracle, SupMatrix};

/// Sylvester array of two dense coefficient vectors (ascending degree).
///
/// The first `deg g` rows carry shifted copies of `f`, the last `deg f` rows
/// shifted copies of `g`.
pub fn sylvester_dense<T: Semiring>(f: &[T], g: &[T]) -> Vec<Vec<T>> {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    let side = m + n;
    let shifted = |coeffs: &[T], s: usize| -> Vec<T> {
        let mut row = vec![T::zero(); side];
        for (i, c) in coeffs.iter().enumerate() {
            row[s + i] = c.clone();
        }
        row
    };
    (0..n).map(|s| shifted(f, s)).chain((0..m).map(|s| shifted(g, s))).collect()
}

fn sylvester_of(f: &Poly, g: &Poly) -> Result<SupMatrix> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::precondition("Sylvester matrix needs two nonconstant polynomials"));
    }
    SupMatrix::from_rows(sylvester_dense(&f.dense(), &g.dense()))
}

fn full(f: &Poly) -> Result<Poly> {
    Ok(canonical_full(f)?.to_poly())
}

/// Sylvester matrix of the canonical full forms.
pub fn sylvester(f: &Poly, g: &Poly) -> Result<SupMatrix> {
    sylvester_of(&full(f)?, &full(g)?)
}

/// Sylvester matrix of the coefficients exactly as given.
pub fn sylvester_raw(f: &Poly, g: &Poly) -> Result<SupMatrix> {
    sylvester_of(f, g)
}

fn constant_rule(f: &Poly, g: &Poly) -> Option<Element> {
    match (f.is_constant(), g.is_constant()) {
        (true, true) => Some(Element::ONE),
        (false, true) => Some(g.leading().pow(f.deg().unwrap())),
        (true, false) => Some(f.leading().pow(g.deg().unwrap())),
        (false, false) => None,
    }
}

/// Applies the shared reductions, then `core` on full forms with nonzero
/// constant terms and positive degrees.
fn reduced<F>(f: &Poly, g: &Poly, core: F) -> Result<Element>
where
    F: FnOnce(&Poly, &Poly) -> Result<Element>,
{
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    if let Some(r) = constant_rule(f, g) {
        return Ok(r);
    }
    let (kf, f1) = f.strip_lambda();
    let (kg, g1) = g.strip_lambda();
    if kf > 0 && kg > 0 {
        return Ok(Element::Zero);
    }
    let scale = g1.coeff(0).hat().pow(kf) * f1.coeff(0).hat().pow(kg);
    let (f1, g1) = (full(&f1)?, full(&g1)?);
    let r = match constant_rule(&f1, &g1) {
        Some(r) => r,
        None => core(&f1, &g1)?,
    };
    Ok(scale * r)
}

/// The resultant via the permanent of the Sylvester matrix.
pub fn resultant(f: &Poly, g: &Poly) -> Result<Element> {
    reduced(f, g, |a, b| permanent(&sylvester_of(a, b)?))
}

/// Permanent of the Sylvester matrix of the coefficients as given, with no
/// canonicalization and no removal of `λ` powers.
pub fn resultant_raw(f: &Poly, g: &Poly) -> Result<Element> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    if let Some(r) = constant_rule(f, g) {
        return Ok(r);
    }
    permanent(&sylvester_of(f, g)?)
}

/// Expansion along the first column: with `R(i, j)` the resultant of the
/// truncations `f⁽ⁱ⁾` and `g⁽ʲ⁾`,
/// `R(i, j) = α_i R(i, j+1) + β_j R(i+1, j)`.
fn recursive_core(f: &Poly, g: &Poly) -> Element {
    let (fa, ga) = (f.dense(), g.dense());
    let (m, n) = (fa.len() - 1, ga.len() - 1);
    let mut memo: HashMap<(usize, usize), Element> = HashMap::new();
    fn r(
        i: usize,
        j: usize,
        fa: &[Element],
        ga: &[Element],
        memo: &mut HashMap<(usize, usize), Element>,
    ) -> Element {
        let (m, n) = (fa.len() - 1, ga.len() - 1);
        if i == m {
            return fa[m].pow((n - j) as u32);
        }
        if j == n {
            return ga[n].pow((m - i) as u32);
        }
        if let Some(v) = memo.get(&(i, j)) {
            return *v;
        }
        let v = fa[i] * r(i, j + 1, fa, ga, memo) + ga[j] * r(i + 1, j, fa, ga, memo);
        memo.insert((i, j), v);
        v
    }
    debug_assert!(m > 0 && n > 0);
    r(0, 0, &fa, &ga, &mut memo)
}

/// The resultant by recursion on truncations; needs nonzero constant terms.
pub fn resultant_recursive(f: &Poly, g: &Poly) -> Result<Element> {
    for p in [f, g] {
        if !p.is_zero() && p.ldeg() != Some(0) {
            return Err(Error::precondition("recursive resultant needs nonzero constant terms"));
        }
    }
    reduced(f, g, |a, b| Ok(recursive_core(a, b)))
}

/// Leading magnitude and corner roots (with multiplicity) of a full form.
fn corner_data(f: &Poly, require_tangible: bool) -> Result<(Rational, Vec<Rational>)> {
    if require_tangible && !essentially_tangible(f)? {
        return Err(Error::precondition("product formula needs tangible essential coefficients"));
    }
    let c = canonical_full(f)?;
    let roots =
        c.corners().iter().flat_map(|k| std::iter::repeat_n(k.value, k.multiplicity as usize)).collect();
    Ok((c.coeffs.last().unwrap().magnitude().unwrap(), roots))
}

fn product_formula(f: &Poly, g: &Poly, tangible: bool) -> Result<Element> {
    let (lf, ra) = corner_data(f, tangible)?;
    let (lg, rb) = corner_data(g, tangible)?;
    let (m, n) = (ra.len() as u32, rb.len() as u32);
    let lead = Element::Tangible(lf).pow(n) * Element::Tangible(lg).pow(m);
    let pairs: Element = ra
        .iter()
        .flat_map(|a| rb.iter().map(move |b| Element::Tangible(*a) + Element::Tangible(*b)))
        .product();
    Ok(lead * pairs)
}

/// `α_m^n β_n^m Π (a_i + b_j)` over the corner roots; inputs must be
/// e-equivalent to polynomials with tangible coefficients.
pub fn resultant_tangible_product(f: &Poly, g: &Poly) -> Result<Element> {
    for p in [f, g] {
        if !p.is_zero() && !essentially_tangible(p)? {
            return Err(Error::precondition("product formula needs tangible essential coefficients"));
        }
    }
    reduced(f, g, |a, b| product_formula(a, b, true))
}

fn essentially_tangible(p: &Poly) -> Result<bool> {
    let c = canonical_full(p)?;
    Ok(c.vertices().iter().all(|&v| c.coeffs[v].is_tangible()))
}

/// The ν-value of the resultant from tangible lifts of the corner roots.
pub fn resultant_nu(f: &Poly, g: &Poly) -> Result<Element> {
    Ok(reduced(f, g, |a, b| product_formula(a, b, false))?.nu())
}

/// Closed form against a monic quadratic `g = λ² + β₁λ + β₀` with
/// `2β₁ ≥ β₀`:
/// `Σ_{ℓ<m} α_ℓ β₀^ℓ f⁽ℓ⁾(β₁) + β₀^m α_m²`.
pub fn resultant_quadratic(f: &Poly, g: &Poly) -> Result<Element> {
    let (b1, b0) = (g.coeff(1), g.coeff(0));
    let ok = g.deg() == Some(2)
        && g.leading() == Element::ONE
        && !b1.is_zero()
        && !b0.is_zero()
        && b1.pow(2).nu_cmp(&b0).is_ge();
    if !ok {
        return Err(Error::precondition("second argument must be λ² + β₁λ + β₀ with β₁² ≥ β₀ in ν-value"));
    }
    reduced(f, g, |fa, _| {
        let coeffs = fa.dense();
        let m = coeffs.len() - 1;
        let sum: Element =
            (0..m).map(|l| coeffs[l] * b0.pow(l as u32) * fa.truncation(l as u32).eval(b1)).sum();
        Ok(sum + b0.pow(m as u32) * coeffs[m].pow(2))
    })
}

/// Outcome of the relative-primeness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelPrimeReport {
    pub resultant: Element,
    pub relatively_prime: bool,
    pub common_root_witness: Option<Rational>,
    /// Common tangible roots; the bottom flag is set when both inputs are divisible by `λ`.
    pub common_root_set: IntervalSet,
}

/// Decides relative primeness through the resultant and cross-checks it
/// against the intersection of the tangible root sets.
pub fn decide(f: &Poly, g: &Poly) -> Result<RelPrimeReport> {
    if f.is_constant() || g.is_constant() {
        return Err(Error::precondition("relative primeness needs nonconstant inputs"));
    }
    let res = resultant(f, g)?;
    let mut common = tangible_roots(f)?.intersect(&tangible_roots(g)?);
    common.root_at_bottom = f.ldeg() > Some(0) && g.ldeg() > Some(0);
    let shared = !common.is_empty() || common.root_at_bottom;
    if shared == res.is_tangible() {
        return Err(Error::Inconsistent(format!(
            "resultant {} disagrees with common root set {}",
            res, common
        )));
    }
    Ok(RelPrimeReport {
        resultant: res,
        relatively_prime: res.is_tangible(),
        common_root_witness: common.representative(),
        common_root_set: common,
    })
}

/// Every method agrees on `(f, g)`; returns the common value.
pub fn cross_check(f: &Poly, g: &Poly) -> Result<Element> {
    let r = resultant(f, g)?;
    let rec = if f.ldeg() == Some(0) && g.ldeg() == Some(0) { resultant_recursive(f, g)? } else { r };
    if rec != r {
        return Err(Error::Inconsistent(format!("permanent {} vs recursion {}", r, rec)));
    }
    let nu = resultant_nu(f, g)?;
    if nu != r.nu() {
        return Err(Error::Inconsistent(format!("permanent {} vs ν-formula {}", r, nu)));
    }
    Ok(r)
}
