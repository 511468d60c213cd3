//! Supertropical divisibility.
//!
//! `g` divides `f` with witness `q` when `f + q·g` is ghost and has the same
//! ν-values as `f`. For a linear divisor `λ + a` a witness exists whenever
//! `a` is a tangible root of `f`; [`divides_linear`] builds one from the
//! factorization.

use crate::error::{Error, Result};
use crate::factor::{factor_min_ghosts, Factorization};
use crate::semiring::{qsub, Element, Rational};
use crate::upoly::{canonical_full, ggraph, tangible_roots, Poly};

/// A certificate that `λ + a` (or some `g`) divides `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionWitness {
    pub q: Poly,
    pub ghost_sum: Poly,
}

fn is_ghost_poly(p: &Poly) -> Result<bool> {
    Ok(canonical_full(p)?.is_ghost())
}

/// Checks that `f + q·g` is ghost and ν-equal to `f`.
pub fn verify_division(f: &Poly, g: &Poly, q: &Poly) -> Result<bool> {
    if !q.is_tangible() {
        return Err(Error::precondition("division witness must have tangible coefficients"));
    }
    let sum = f + &(q * g);
    if sum.is_zero() || f.is_zero() {
        return Ok(sum.is_zero() && f.is_zero());
    }
    Ok(is_ghost_poly(&sum)? && canonical_full(&sum.nu())? == canonical_full(&f.nu())?)
}

/// Certifies `a ∈ √I` for an ideal containing `b`: `a^k` divides `b` with witness `q`.
pub fn radical_member_check(a: &Poly, k: u32, b: &Poly, q: &Poly) -> Result<bool> {
    if k == 0 {
        return Err(Error::precondition("radical exponent must be positive"));
    }
    verify_division(b, &a.pow(k), q)
}

/// Local witness for the factor of `f` whose root set contains `a`, and the
/// factorization with that factor removed.
fn local_witness(fac: &Factorization, a: Rational) -> Option<(Poly, Factorization)> {
    let mut rest = fac.clone();
    if let Some(i) = fac.linears.iter().position(|l| l.root == a) {
        rest.linears[i].multiplicity -= 1;
        rest.linears.retain(|l| l.multiplicity > 0);
        return Some((Poly::one(), rest));
    }
    if let Some(i) = fac.quadratics.iter().position(|q| {
        let (lo, hi) = q.root_interval();
        lo <= a && a <= hi
    }) {
        let quad = fac.quadratics[i];
        rest.quadratics[i].multiplicity -= 1;
        rest.quadratics.retain(|q| q.multiplicity > 0);
        return Some((Poly::linear(qsub(quad.c, a)), rest));
    }
    if fac.right_ghost.is_some_and(|r| a <= r) {
        rest.right_ghost = None;
        return Some((Poly::one(), rest));
    }
    if let Some(l) = fac.left_ghost.filter(|l| *l <= a) {
        rest.left_ghost = None;
        return Some((Poly::constant(Element::Tangible(qsub(l, a))), rest));
    }
    None
}

/// Witness for a polynomial that is ghost everywhere: a monomial `c·λ^k`
/// whose product with `λ + a` stays below `f`.
fn ghost_witness(f: &Poly, a: Rational) -> Result<Option<Poly>> {
    let (k, core) = f.strip_lambda();
    if core.is_monomial() {
        return Ok(None);
    }
    let graph = ggraph(&core)?;
    let gap = |x: Rational| qsub(graph.value_at(x).0, x.max(a));
    let c = graph.breakpoints.iter().copied().chain(std::iter::once(a)).map(gap).min().unwrap();
    Ok(Some(Poly::monomial(Element::Tangible(c), k)))
}

/// A witness that `λ + a` divides `f`, if `a` is a tangible root of `f`.
///
/// Ghost monomials `c^ν λ^k` vanish everywhere yet admit no nonzero witness,
/// so they always yield `None`.
pub fn divides_linear(f: &Poly, a: Rational) -> Result<Option<DivisionWitness>> {
    if f.is_constant() {
        return Err(Error::precondition("linear divisibility needs a nonconstant polynomial"));
    }
    if !tangible_roots(f)?.contains(a) {
        return Ok(None);
    }
    let fac = factor_min_ghosts(f)?;
    let q = if fac.lead.is_ghost() {
        match ghost_witness(f, a)? {
            Some(q) => q,
            None => return Ok(None),
        }
    } else {
        let (local, rest) = local_witness(&fac, a)
            .ok_or_else(|| Error::Inconsistent(format!("no factor of {:?} contains the root", fac)))?;
        (&local * &rest.expand()).hat()
    };
    let g = Poly::linear(a);
    if !verify_division(f, &g, &q)? {
        return Err(Error::Inconsistent("constructed division witness fails".into()));
    }
    let ghost_sum = f + &(&q * &g);
    Ok(Some(DivisionWitness { q, ghost_sum }))
}
