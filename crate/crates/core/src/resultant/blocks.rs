//! Splitting a full polynomial at its tangible essential monomials.
//!
//! Between two consecutive tangible vertices every coefficient is ghost, so
//! each piece has a single interval of tangible roots and the pieces have
//! disjoint root sets. When two polynomials have disjoint root sets the
//! resultant factors over pairs of pieces, and each pair has a closed form.

use crate::error::{Error, Result};
use crate::semiring::Element;
use crate::upoly::{canonical_full, tangible_roots, Bound, Poly};

use super::reduced;

/// Pieces of the canonical form of `f` with the powers of `λ` removed,
/// ordered by ascending roots. Their product is e-equivalent to that form.
///
/// The last piece is the truncation at the top tangible vertex and carries
/// the leading coefficient; every other piece is monic.
pub fn semitangible_blocks(f: &Poly) -> Result<Vec<Poly>> {
    let c = canonical_full(f)?;
    let tan: Vec<usize> = c.vertices().into_iter().filter(|&v| c.coeffs[v].is_tangible()).collect();
    let Some(&last) = tan.last() else {
        return Ok(vec![Poly::from_dense(&c.coeffs)]);
    };
    let piece = |lo: usize, hi: usize| -> Result<Poly> {
        let top = c.coeffs[hi];
        let terms = (lo..=hi)
            .map(|i| Ok(((i - lo) as u32, c.coeffs[i].try_div(&top)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_terms(terms))
    };
    let mut out = Vec::new();
    if tan[0] > 0 {
        out.push(piece(0, tan[0])?);
    }
    for w in tan.windows(2) {
        out.push(piece(w[0], w[1])?);
    }
    out.push(Poly::from_dense(&c.coeffs[last..]));
    Ok(out)
}

fn root_extent(p: &Poly) -> Result<Option<(Bound, Bound)>> {
    let r = tangible_roots(p)?;
    Ok(match (r.intervals().first(), r.intervals().last()) {
        (Some(a), Some(b)) => Some((a.lo, b.hi)),
        _ => None,
    })
}

/// Resultant of two pieces with disjoint root intervals: when the roots of
/// `a` lie above those of `b` it is `a(0)^{deg b} · lc(b)^{deg a}`.
pub fn block_resultant(a: &Poly, b: &Poly) -> Result<Element> {
    let (da, db) = (a.deg().unwrap_or(0), b.deg().unwrap_or(0));
    let above = |hi: &Poly, lo: &Poly, dh: u32, dl: u32| hi.coeff(0).pow(dl) * lo.leading().pow(dh);
    match (root_extent(a)?, root_extent(b)?) {
        (None, _) | (_, None) => Ok(above(a, b, da, db)),
        (Some((alo, ahi)), Some((blo, bhi))) => {
            if bhi < alo {
                Ok(above(a, b, da, db))
            } else if ahi < blo {
                Ok(above(b, a, db, da))
            } else {
                Err(Error::precondition("block root sets are not disjoint"))
            }
        }
    }
}

/// The resultant as a product of block resultants; requires disjoint
/// tangible root sets.
pub fn resultant_blockwise(f: &Poly, g: &Poly) -> Result<Element> {
    reduced(f, g, |a, b| {
        let (fb, gb) = (semitangible_blocks(a)?, semitangible_blocks(b)?);
        fb.iter().flat_map(|x| gb.iter().map(move |y| block_resultant(x, y))).product()
    })
}
