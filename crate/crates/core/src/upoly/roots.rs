//! Tangible root sets, graphs and half-tangibility.

use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{fmt_rational, qadd, qscale, Layer, Rational};

use super::canonical::canonical_full;
use super::Poly;

/// Interval endpoint on the extended tangible line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<Rational> {
        match *self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::Finite(r) => write!(f, "{}", fmt_rational(r)),
            Bound::PosInf => write!(f, "+inf"),
        }
    }
}

/// Closed interval; infinite ends are open by necessity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound) -> Self {
        debug_assert!(lo <= hi && lo != Bound::PosInf && hi != Bound::NegInf);
        Interval { lo, hi }
    }

    pub fn point(a: Rational) -> Self {
        Interval::new(Bound::Finite(a), Bound::Finite(a))
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval::new(Bound::Finite(lo), Bound::Finite(hi))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, a: Rational) -> bool {
        self.lo <= Bound::Finite(a) && Bound::Finite(a) <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// A finite member: the least finite endpoint, or `0` for the whole line.
    pub fn representative(&self) -> Rational {
        self.lo.finite().or_else(|| self.hi.finite()).unwrap_or_else(|| Rational::from_integer(0))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return write!(f, "{{{}}}", self.lo);
        }
        let open = if self.lo == Bound::NegInf { '(' } else { '[' };
        let close = if self.hi == Bound::PosInf { ')' } else { ']' };
        write!(f, "{}{}, {}{}", open, self.lo, self.hi, close)
    }
}

/// Sorted, pairwise disjoint closed intervals plus a flag for the bottom
/// element `-inf` being a root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
    pub root_at_bottom: bool,
}

impl IntervalSet {
    /// Sorts and merges overlapping or touching intervals.
    pub fn new(mut intervals: Vec<Interval>, root_at_bottom: bool) -> Self {
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => last.hi = last.hi.max(iv.hi),
                _ => merged.push(iv),
            }
        }
        IntervalSet { intervals: merged, root_at_bottom }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// No finite tangible roots (the bottom flag is ignored).
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, a: Rational) -> bool {
        self.intervals.iter().any(|iv| iv.contains(a))
    }

    pub fn intersect(&self, other: &IntervalSet) -> IntervalSet {
        let parts = self
            .intervals
            .iter()
            .flat_map(|a| other.intervals.iter().filter_map(move |b| a.intersect(b)))
            .collect();
        IntervalSet::new(parts, self.root_at_bottom && other.root_at_bottom)
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let parts = self.intervals.iter().chain(&other.intervals).copied().collect();
        IntervalSet::new(parts, self.root_at_bottom || other.root_at_bottom)
    }

    /// Leftmost member of the leftmost component, by the least-finite-endpoint rule.
    pub fn representative(&self) -> Option<Rational> {
        self.intervals.first().map(Interval::representative)
    }

    /// The open gaps between components, i.e. the tangible domain components.
    pub fn gaps(&self) -> Vec<(Bound, Bound)> {
        let mut out = Vec::new();
        let mut left = Bound::NegInf;
        for iv in &self.intervals {
            if iv.lo > left || (left == Bound::NegInf && iv.lo != Bound::NegInf) {
                out.push((left, iv.lo));
            }
            left = iv.hi;
        }
        if left != Bound::PosInf {
            out.push((left, Bound::PosInf));
        }
        out
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            write!(f, "{{}}")?;
        }
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{}", iv)?;
        }
        Ok(())
    }
}

pub fn tangible_roots(f: &Poly) -> Result<IntervalSet> {
    let c = canonical_full(f).map_err(|_| Error::ZeroPolynomial("tangible roots"))?;
    let vs = c.vertices();
    let corners = c.corners();
    let mut parts: Vec<Interval> = corners.iter().map(|k| Interval::point(k.value)).collect();
    for (k, &v) in vs.iter().enumerate() {
        if c.coeffs[v].is_ghost() {
            let lo = if k == 0 { Bound::NegInf } else { Bound::Finite(corners[k - 1].value) };
            let hi = corners.get(k).map_or(Bound::PosInf, |x| Bound::Finite(x.value));
            parts.push(Interval::new(lo, hi));
        }
    }
    Ok(IntervalSet::new(parts, c.shift > 0 || c.coeffs[0].is_ghost()))
}

/// Components of the set where `f` takes tangible values, as open intervals.
pub fn tangible_domain(f: &Poly) -> Result<Vec<(Bound, Bound)>> {
    Ok(tangible_roots(f)?.gaps())
}

/// One affine piece `slope·x + intercept` of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Piece {
    pub slope: u32,
    pub intercept: Rational,
    pub layer: Layer,
}

/// The graph of `x ↦ f(x)` over tangible `x`, with layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiecewiseLinear {
    pub breakpoints: Vec<Rational>,
    pub breakpoint_layers: Vec<Layer>,
    pub pieces: Vec<Piece>,
}

impl PiecewiseLinear {
    /// Value and layer at `x`.
    pub fn value_at(&self, x: Rational) -> (Rational, Layer) {
        if let Ok(i) = self.breakpoints.binary_search(&x) {
            let p = self.pieces[i];
            return (qadd(p.intercept, qscale(x, p.slope as i128)), self.breakpoint_layers[i]);
        }
        let i = self.breakpoints.partition_point(|b| *b < x);
        let p = self.pieces[i];
        (qadd(p.intercept, qscale(x, p.slope as i128)), p.layer)
    }
}

pub fn ggraph(f: &Poly) -> Result<PiecewiseLinear> {
    let c = canonical_full(f).map_err(|_| Error::ZeroPolynomial("graph"))?;
    let pieces = c
        .vertices()
        .into_iter()
        .map(|v| Piece {
            slope: c.shift + v as u32,
            intercept: c.coeffs[v].magnitude().unwrap(),
            layer: c.coeffs[v].layer().unwrap(),
        })
        .collect();
    let corners = c.corners();
    Ok(PiecewiseLinear {
        breakpoints: corners.iter().map(|k| k.value).collect(),
        breakpoint_layers: vec![Layer::Ghost; corners.len()],
        pieces,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `Left` with `alpha`: tangible exactly on `(-inf, alpha)`.
/// `Right` with `alpha`: tangible exactly on `(alpha, +inf)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfTangible {
    pub side: Side,
    pub alpha: Rational,
}

pub fn classify_half_tangible(f: &Poly) -> Result<Option<HalfTangible>> {
    let roots = tangible_roots(f)?;
    Ok(match roots.intervals() {
        [Interval { lo: Bound::Finite(a), hi: Bound::PosInf }] => {
            Some(HalfTangible { side: Side::Left, alpha: *a })
        }
        [Interval { lo: Bound::NegInf, hi: Bound::Finite(a) }] => {
            Some(HalfTangible { side: Side::Right, alpha: *a })
        }
        _ => None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operand {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GhostSumAnalysis {
    CommonRoot(Rational),
    /// The right-half-tangible summand is tangible exactly above `alpha`,
    /// the left one exactly below `beta`; `left` names the latter.
    HalfTangible {
        alpha: Rational,
        beta: Rational,
        left: Operand,
    },
    NotGhostSum,
}

/// Why a sum of two polynomials can be ghost: a shared tangible root, or two
/// complementary half-tangible summands.
pub fn analyze_ghost_sum(f: &Poly, g: &Poly) -> Result<GhostSumAnalysis> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("ghost sum analysis"));
    }
    if f.is_monomial() || g.is_monomial() {
        return Err(Error::precondition("ghost sum analysis needs non-monomial inputs"));
    }
    if !canonical_full(&(f + g))?.is_ghost() {
        return Ok(GhostSumAnalysis::NotGhostSum);
    }
    let common = tangible_roots(f)?.intersect(&tangible_roots(g)?);
    if let Some(a) = common.representative() {
        return Ok(GhostSumAnalysis::CommonRoot(a));
    }
    let hf = classify_half_tangible(f)?;
    let hg = classify_half_tangible(g)?;
    let (l, r, left) = match (hf, hg) {
        (Some(a), Some(b)) if a.side == Side::Left && b.side == Side::Right => (a, b, Operand::First),
        (Some(a), Some(b)) if a.side == Side::Right && b.side == Side::Left => (b, a, Operand::Second),
        _ => return Err(Error::Inconsistent("ghost sum without common root or half-tangible pair".into())),
    };
    if r.alpha >= l.alpha {
        return Err(Error::Inconsistent("half-tangible thresholds out of order".into()));
    }
    Ok(GhostSumAnalysis::HalfTangible { alpha: r.alpha, beta: l.alpha, left })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semiring::{q, Element};

    fn t(n: i64) -> Element {
        Element::tangible(n)
    }
    fn g(n: i64) -> Element {
        Element::ghost(n)
    }
    fn p(terms: &[(u32, Element)]) -> Poly {
        Poly::from_terms(terms.iter().copied())
    }

    fn quartics() -> (Poly, Poly) {
        let lin = |a: Element| p(&[(1, t(0)), (0, a)]);
        let f = [lin(t(2)), lin(g(5)), lin(g(8)), lin(t(9))].iter().fold(Poly::one(), |acc, x| &acc * x);
        let h = [lin(t(3)), lin(t(4)), p(&[(1, g(0)), (0, t(7))]), lin(t(10))]
            .iter()
            .fold(Poly::one(), |acc, x| &acc * x);
        (f, h)
    }

    #[test]
    fn root_sets() {
        let f = p(&[(2, t(0)), (1, g(6)), (0, t(7))]);
        let r = tangible_roots(&f).unwrap();
        assert_eq!(r.intervals(), &[Interval::closed(q(1), q(6))]);
        assert!(!r.root_at_bottom);

        let f = p(&[(1, t(0)), (0, g(2))]);
        let r = tangible_roots(&f).unwrap();
        assert_eq!(r.intervals(), &[Interval::new(Bound::NegInf, Bound::Finite(q(2)))]);
        assert!(r.root_at_bottom);

        let f = &Poly::linear(q(1)) * &Poly::linear(q(2));
        let r = tangible_roots(&f).unwrap();
        assert_eq!(r.intervals(), &[Interval::point(q(1)), Interval::point(q(2))]);
        assert_eq!(r.to_string(), "{1} u {2}");
    }

    #[test]
    fn root_set_edge_cases() {
        assert!(tangible_roots(&Poly::zero()).is_err());
        assert!(tangible_roots(&Poly::one()).unwrap().is_empty());
        let whole = tangible_roots(&Poly::monomial(g(1), 2)).unwrap();
        assert_eq!(whole.intervals(), &[Interval::new(Bound::NegInf, Bound::PosInf)]);
        assert!(whole.root_at_bottom);
        let lam = tangible_roots(&Poly::monomial(t(0), 1)).unwrap();
        assert!(lam.is_empty() && lam.root_at_bottom);
    }

    #[test]
    fn domain_gaps() {
        let f = &Poly::linear(q(1)) * &Poly::linear(q(2));
        let gaps = tangible_domain(&f).unwrap();
        assert_eq!(gaps.len(), 3);
        assert_eq!(gaps[1], (Bound::Finite(q(1)), Bound::Finite(q(2))));
        let f = p(&[(1, t(0)), (0, g(2))]);
        assert_eq!(tangible_domain(&f).unwrap(), vec![(Bound::Finite(q(2)), Bound::PosInf)]);
    }

    #[test]
    fn graphs() {
        let gr = ggraph(&Poly::linear(q(3))).unwrap();
        assert_eq!(gr.pieces.iter().map(|p| p.slope).collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(gr.breakpoints, vec![q(3)]);
        assert_eq!(gr.breakpoint_layers, vec![Layer::Ghost]);

        let gr = ggraph(&p(&[(2, t(0)), (1, g(6)), (0, t(7))])).unwrap();
        assert_eq!(gr.pieces.iter().map(|p| p.slope).collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(gr.breakpoints, vec![q(1), q(6)]);
        assert_eq!(gr.pieces[1].layer, Layer::Ghost);
        assert_eq!(gr.value_at(q(3)), (q(9), Layer::Ghost));
        assert_eq!(gr.value_at(q(10)), (q(20), Layer::Tangible));

        let gr = ggraph(&Poly::constant(t(5))).unwrap();
        assert_eq!(gr.pieces.len(), 1);
        assert_eq!(gr.pieces[0].slope, 0);
        assert_eq!(gr.pieces[0].layer, Layer::Tangible);
    }

    #[test]
    fn half_tangible() {
        let f = p(&[(2, g(0)), (1, t(1))]);
        assert_eq!(classify_half_tangible(&f).unwrap(), Some(HalfTangible { side: Side::Left, alpha: q(1) }));
        let h = p(&[(1, t(1)), (0, g(0))]);
        assert_eq!(
            classify_half_tangible(&h).unwrap(),
            Some(HalfTangible { side: Side::Right, alpha: q(-1) })
        );
        let k = &Poly::linear(q(1)) * &Poly::linear(q(2));
        assert_eq!(classify_half_tangible(&k).unwrap(), None);
    }

    #[test]
    fn ghost_sums() {
        let f = p(&[(2, g(0)), (1, t(1))]);
        let h = p(&[(1, t(1)), (0, g(0))]);
        assert_eq!(
            analyze_ghost_sum(&f, &h).unwrap(),
            GhostSumAnalysis::HalfTangible { alpha: q(-1), beta: q(1), left: Operand::First }
        );
        assert_eq!(
            analyze_ghost_sum(&h, &f).unwrap(),
            GhostSumAnalysis::HalfTangible { alpha: q(-1), beta: q(1), left: Operand::Second }
        );
        let (a, b) = quartics();
        assert_eq!(analyze_ghost_sum(&a, &b).unwrap(), GhostSumAnalysis::CommonRoot(q(3)));
        assert_eq!(
            analyze_ghost_sum(&Poly::linear(q(1)), &Poly::linear(q(5))).unwrap(),
            GhostSumAnalysis::NotGhostSum
        );
        assert!(analyze_ghost_sum(&Poly::monomial(t(0), 1), &h).is_err());
    }

    #[test]
    fn frobenius_moves_roots() {
        let f = Poly::linear(q(3)).frobenius(2).unwrap();
        let r = tangible_roots(&f).unwrap();
        assert_eq!(r.intervals(), &[Interval::point(Rational::new(3, 2))]);
        let shifted = Poly::linear(q(3)).translate(super::super::Translation::Multiplicative(q(2)));
        assert_eq!(tangible_roots(&shifted).unwrap().intervals(), &[Interval::point(q(1))]);
    }
}
