//! Canonical full forms.
//!
//! Two polynomials are e-equivalent when they define the same function. After
//! removing the largest power of `λ`, the function is determined by the upper
//! concave hull of the points `(i, ν(α_i))` together with the layer of each
//! hull vertex. The full form keeps vertex coefficients and fills every other
//! slot with the ghost of the interpolated hull value.

use crate::error::{Error, Result};
use crate::semiring::{qadd, qscale, qsub, Element, Rational};

use super::Poly;

/// Canonical representative `λ^shift · Σ coeffs[i] λ^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullPoly {
    pub shift: u32,
    pub coeffs: Vec<Element>,
    pub vertex: Vec<bool>,
}

/// A corner root of the graph, between two consecutive hull vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Corner {
    pub value: Rational,
    pub multiplicity: u32,
    /// Index of the vertex dominating just left of the corner.
    pub left: usize,
    /// Index of the vertex dominating just right of the corner.
    pub right: usize,
}

impl FullPoly {
    pub fn degree(&self) -> u32 {
        self.shift + self.coeffs.len() as u32 - 1
    }

    /// Hull vertex indices, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| self.vertex[i]).collect()
    }

    pub fn corners(&self) -> Vec<Corner> {
        let vs = self.vertices();
        vs.windows(2)
            .map(|w| {
                let (a, b) = (w[0], w[1]);
                let ca = self.coeffs[a].magnitude().unwrap();
                let cb = self.coeffs[b].magnitude().unwrap();
                Corner {
                    value: qsub(ca, cb) / Rational::from_integer((b - a) as i128),
                    multiplicity: (b - a) as u32,
                    left: a,
                    right: b,
                }
            })
            .collect()
    }

    /// True when the polynomial takes ghost values everywhere.
    pub fn is_ghost(&self) -> bool {
        self.vertices().iter().all(|&i| self.coeffs[i].is_ghost())
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_dense(&self.coeffs).shift_up(self.shift)
    }

    /// Only the hull vertices, i.e. the essential monomials.
    pub fn essential(&self) -> Poly {
        Poly::from_terms(self.vertices().into_iter().map(|i| (i as u32 + self.shift, self.coeffs[i])))
    }
}

/// `true` when the middle point lies on or below the chord of its neighbours.
fn not_above(p1: (u32, Rational), p2: (u32, Rational), p3: (u32, Rational)) -> bool {
    let lhs = qscale(qsub(p2.1, p1.1), (p3.0 - p1.0) as i128);
    let rhs = qscale(qsub(p3.1, p1.1), (p2.0 - p1.0) as i128);
    lhs <= rhs
}

pub fn canonical_full(f: &Poly) -> Result<FullPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("canonical form"));
    }
    let (shift, g) = f.strip_lambda();
    let pts: Vec<(u32, Rational)> = g.terms().map(|(d, c)| (d, c.magnitude().unwrap())).collect();
    let mut hull: Vec<(u32, Rational)> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while hull.len() >= 2 && not_above(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    let n = g.deg().unwrap() as usize + 1;
    let mut coeffs = vec![Element::Zero; n];
    let mut vertex = vec![false; n];
    for &(d, _) in &hull {
        coeffs[d as usize] = g.coeff(d);
        vertex[d as usize] = true;
    }
    for w in hull.windows(2) {
        let ((a, ya), (b, yb)) = (w[0], w[1]);
        let slope = qsub(yb, ya) / Rational::from_integer((b - a) as i128);
        for i in a + 1..b {
            coeffs[i as usize] = Element::Ghost(qadd(ya, qscale(slope, (i - a) as i128)));
        }
    }
    Ok(FullPoly { shift, coeffs, vertex })
}

/// The essential part: the sum of the monomials that dominate somewhere.
pub fn essential_part(f: &Poly) -> Result<Poly> {
    Ok(canonical_full(f)?.essential())
}

/// Function equality. The zero polynomial is only equivalent to itself.
pub fn e_equiv(f: &Poly, g: &Poly) -> bool {
    match (canonical_full(f), canonical_full(g)) {
        (Ok(a), Ok(b)) => a == b,
        _ => f.is_zero() && g.is_zero(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::q;

    fn t(n: i64) -> Element {
        Element::tangible(n)
    }
    fn g(n: i64) -> Element {
        Element::ghost(n)
    }
    fn p(terms: &[(u32, Element)]) -> Poly {
        Poly::from_terms(terms.iter().copied())
    }

    #[test]
    fn quasi_essential_terms_become_ghost() {
        let f = p(&[(2, t(0)), (1, t(1)), (0, t(2))]);
        let c = canonical_full(&f).unwrap();
        assert_eq!(c.coeffs, vec![t(2), g(1), t(0)]);
        assert_eq!(c.vertex, vec![true, false, true]);
        assert!(e_equiv(&f, &p(&[(2, t(0)), (1, g(1)), (0, t(2))])));
    }

    #[test]
    fn inessential_terms_are_replaced() {
        let f = p(&[(2, t(0)), (1, t(0)), (0, t(4))]);
        let c = canonical_full(&f).unwrap();
        assert_eq!(c.coeffs, vec![t(4), g(2), t(0)]);
        assert_eq!(essential_part(&f).unwrap(), p(&[(2, t(0)), (0, t(4))]));
    }

    #[test]
    fn ghost_vertices_are_kept() {
        let f = p(&[(2, t(0)), (1, g(5)), (0, t(4))]);
        let c = canonical_full(&f).unwrap();
        assert_eq!(c.coeffs, vec![t(4), g(5), t(0)]);
        assert_eq!(c.vertices(), vec![0, 1, 2]);
        let corners = c.corners();
        assert_eq!(corners.len(), 2);
        assert_eq!(corners[0].value, q(-1));
        assert_eq!(corners[1].value, q(5));
    }

    #[test]
    fn lambda_powers_are_factored_out() {
        let f = p(&[(3, t(0)), (1, t(2))]);
        let c = canonical_full(&f).unwrap();
        assert_eq!(c.shift, 1);
        assert_eq!(c.coeffs, vec![t(2), g(1), t(0)]);
        assert_eq!(c.degree(), 3);
        assert_eq!(c.to_poly(), p(&[(3, t(0)), (2, g(1)), (1, t(2))]));
    }

    #[test]
    fn monomials_and_zero() {
        let c = canonical_full(&Poly::monomial(g(3), 2)).unwrap();
        assert_eq!(c.coeffs, vec![g(3)]);
        assert!(c.is_ghost());
        assert!(canonical_full(&Poly::zero()).is_err());
        assert!(e_equiv(&Poly::zero(), &Poly::zero()));
        assert!(!e_equiv(&Poly::zero(), &Poly::one()));
    }

    #[test]
    fn fractional_interpolation() {
        let f = p(&[(2, t(0)), (0, t(1))]);
        let c = canonical_full(&f).unwrap();
        assert_eq!(c.coeffs[1], Element::Ghost(Rational::new(1, 2)));
        assert_eq!(c.corners()[0].value, Rational::new(1, 2));
    }
}
