//! Polynomials in two variables, resultants with polynomial coefficients and
//! a grid-based Bézout check.
//!
//! The grid probe only sees common roots that land on (or next to) grid
//! points, so its counts are lower bounds for what a polyhedral computation
//! would find.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::ops::{Add, Mul};

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::resultant::{permanent_generic, sylvester_dense};
use crate::semiring::{fmt_rational, q, qadd, Element, Rational};
use crate::upoly::Poly;

/// Sparse polynomial in `x` (first variable) and `y` (second variable).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Element>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Element)>>(terms: I) -> Self {
        let mut coeffs: BTreeMap<(u32, u32), Element> = BTreeMap::new();
        for (k, c) in terms {
            let e = coeffs.entry(k).or_insert(Element::Zero);
            *e = *e + c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        BiPoly { coeffs }
    }

    pub fn constant(c: Element) -> Self {
        BiPoly::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        BiPoly::from_terms([((1, 0), Element::ONE)])
    }

    pub fn y() -> Self {
        BiPoly::from_terms([((0, 1), Element::ONE)])
    }

    /// Embeds a univariate polynomial in the given variable.
    pub fn from_poly(p: &Poly, var: Var) -> Self {
        BiPoly::from_terms(p.terms().map(|(d, c)| match var {
            Var::First => ((d, 0), c),
            Var::Second => ((0, d), c),
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Element {
        self.coeffs.get(&(i, j)).copied().unwrap_or(Element::Zero)
    }

    /// Terms as `((i, j), coefficient)` in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Element)> + '_ {
        self.coeffs.iter().map(|(k, c)| (*k, *c))
    }

    pub fn total_deg(&self) -> Option<u32> {
        self.coeffs.keys().map(|(i, j)| i + j).max()
    }

    pub fn deg_in(&self, var: Var) -> Option<u32> {
        self.coeffs.keys().map(|&(i, j)| if var == Var::First { i } else { j }).max()
    }

    pub fn pow(&self, k: u32) -> BiPoly {
        (0..k).fold(BiPoly::constant(Element::ONE), |acc, _| &acc * self)
    }

    pub fn eval(&self, x: Element, y: Element) -> Element {
        self.terms().map(|((i, j), c)| c * x.pow(i) * y.pow(j)).sum()
    }

    /// Substitutes `c` for one variable.
    pub fn specialize(&self, var: Var, c: Element) -> Poly {
        Poly::from_terms(self.terms().map(|((i, j), coef)| match var {
            Var::First => (j, coef * c.pow(i)),
            Var::Second => (i, coef * c.pow(j)),
        }))
    }

    /// Coefficients in `y`, each a polynomial in `x`, indexed by `y`-degree.
    pub fn coefficients_in_second(&self) -> Vec<Poly> {
        let n = self.deg_in(Var::Second).map_or(0, |d| d as usize + 1);
        let mut out = vec![Poly::zero(); n];
        for ((i, j), c) in self.terms() {
            out[j as usize] = &out[j as usize] + &Poly::monomial(c, i);
        }
        out
    }

    /// Partial Frobenius `x ↦ x^m`.
    pub fn frobenius_first(&self, m: u32) -> Result<BiPoly> {
        if m == 0 {
            return Err(Error::precondition("Frobenius exponent must be positive"));
        }
        Ok(BiPoly::from_terms(self.terms().map(|((i, j), c)| ((i * m, j), c))))
    }
}

pub fn bieval(f: &BiPoly, x: Element, y: Element) -> Element {
    f.eval(x, y)
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms().chain(rhs.terms()))
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(
            self.terms().flat_map(|((i, j), a)| rhs.terms().map(move |((k, l), b)| ((i + k, j + l), a * b))),
        )
    }
}

/// Resultant with respect to `y`, computed over the semiring of
/// polynomials in `x` from the coefficients as given.
pub fn resultant_in_second(f: &BiPoly, g: &BiPoly) -> Result<Poly> {
    let (fc, gc) = (f.coefficients_in_second(), g.coefficients_in_second());
    if fc.len() < 2 || gc.len() < 2 {
        return Err(Error::precondition("both polynomials must involve the second variable"));
    }
    permanent_generic(&sylvester_dense(&fc, &gc))
}

/// Axis-aligned closed box of rational sample coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub x_min: Rational,
    pub x_max: Rational,
    pub y_min: Rational,
    pub y_max: Rational,
}

impl Default for Window {
    fn default() -> Self {
        Window { x_min: q(-10), x_max: q(10), y_min: q(-10), y_max: q(10) }
    }
}

impl Window {
    fn axis(lo: Rational, hi: Rational, step: Rational) -> Vec<Rational> {
        let mut out = Vec::new();
        let mut v = lo;
        while v <= hi {
            out.push(v);
            v = qadd(v, step);
        }
        out
    }
}

fn is_common_root(f: &BiPoly, g: &BiPoly, x: Rational, y: Rational) -> bool {
    let (a, b) = (Element::Tangible(x), Element::Tangible(y));
    f.eval(a, b).in_ghost_ideal() && g.eval(a, b).in_ghost_ideal()
}

fn check_grid(window: &Window, step: Rational) -> Result<()> {
    if step <= q(0) {
        return Err(Error::precondition("grid step must be positive"));
    }
    if window.x_min > window.x_max || window.y_min > window.y_max {
        return Err(Error::precondition("empty sampling window"));
    }
    Ok(())
}

/// Grid points of the window that are common tangible roots, sorted.
pub fn common_roots_sample(
    f: &BiPoly,
    g: &BiPoly,
    window: &Window,
    step: Rational,
) -> Result<Vec<(Rational, Rational)>> {
    check_grid(window, step)?;
    let xs = Window::axis(window.x_min, window.x_max, step);
    let ys = Window::axis(window.y_min, window.y_max, step);
    Ok(xs
        .iter()
        .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
        .filter(|&(x, y)| is_common_root(f, g, x, y))
        .collect())
}

/// Result of the grid Bézout probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutReport {
    pub m: u32,
    pub n: u32,
    pub bound: u32,
    pub sampled_common_roots: Vec<(Rational, Rational)>,
    /// Cluster index of each sampled root.
    pub cluster_of: Vec<usize>,
    pub ordinary_points: Vec<(Rational, Rational)>,
    pub ordinary_count: u32,
    pub bound_holds: bool,
    /// EXPERIMENTAL: number of connected clusters of sampled common roots.
    pub component_count: u32,
}

impl BezoutReport {
    /// `x,y,cluster,ordinary` rows for plotting.
    pub fn to_csv(&self) -> String {
        let ordinary: BTreeSet<_> = self.ordinary_points.iter().collect();
        let mut out = String::from("x,y,cluster,ordinary\n");
        for (pt, c) in self.sampled_common_roots.iter().zip(&self.cluster_of) {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                fmt_rational(&pt.0),
                fmt_rational(&pt.1),
                c,
                ordinary.contains(pt)
            );
        }
        out
    }
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut i = i;
    while parent[i] != r {
        let next = parent[i];
        parent[i] = r;
        i = next;
    }
    r
}

/// Counts isolated sampled common roots against the bound `deg F · deg G`.
///
/// Hits within Chebyshev distance `max(deg F, deg G) · step` are joined into
/// one cluster, so that edges of slope up to the degree stay connected. A
/// cluster is counted as 2-ordinary when it is a single point and none of its
/// eight half-step neighbours is a common root.
pub fn bezout_report(f: &BiPoly, g: &BiPoly, window: &Window, step: Rational) -> Result<BezoutReport> {
    let (m, n) = match (f.total_deg(), g.total_deg()) {
        (Some(m), Some(n)) if m > 0 && n > 0 => (m, n),
        _ => return Err(Error::precondition("Bézout check needs nonconstant polynomials")),
    };
    let pts = common_roots_sample(f, g, window, step)?;
    let reach = step * Rational::from_integer(m.max(n) as i128);
    let mut parent: Vec<usize> = (0..pts.len()).collect();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if pts[j].0 - pts[i].0 > reach {
                break;
            }
            if (pts[j].1 - pts[i].1).abs() <= reach {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut cluster_of = Vec::with_capacity(pts.len());
    let mut sizes: Vec<usize> = Vec::new();
    for i in 0..pts.len() {
        let root = find(&mut parent, i);
        let next = label.len();
        let c = *label.entry(root).or_insert(next);
        if c == sizes.len() {
            sizes.push(0);
        }
        sizes[c] += 1;
        cluster_of.push(c);
    }
    let half = step / Rational::from_integer(2);
    let offsets = [-half, q(0), half];
    let ordinary_points: Vec<_> = pts
        .iter()
        .zip(&cluster_of)
        .filter(|(_, c)| sizes[**c] == 1)
        .map(|(p, _)| *p)
        .filter(|&(x, y)| {
            offsets.iter().all(|&dx| {
                offsets.iter().all(|&dy| (dx == q(0) && dy == q(0)) || !is_common_root(f, g, x + dx, y + dy))
            })
        })
        .collect();
    let ordinary_count = ordinary_points.len() as u32;
    Ok(BezoutReport {
        m,
        n,
        bound: m * n,
        bound_holds: ordinary_count <= m * n,
        component_count: sizes.len() as u32,
        sampled_common_roots: pts,
        cluster_of,
        ordinary_points,
        ordinary_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> Element {
        Element::tangible(n)
    }
    fn b(terms: &[((u32, u32), Element)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().copied())
    }
    fn line(a: i64, c: i64) -> BiPoly {
        b(&[((1, 0), t(0)), ((0, 1), t(a)), ((0, 0), t(c))])
    }

    #[test]
    fn evaluation() {
        let f = b(&[((1, 0), t(0)), ((0, 1), t(0)), ((0, 0), t(0))]);
        assert_eq!(f.eval(t(1), t(2)), t(2));
        assert_eq!(f.eval(t(0), t(0)), Element::ghost(0));
        let xy = b(&[((1, 1), t(0))]);
        assert_eq!(bieval(&xy, t(2), t(3)), t(5));
    }

    #[test]
    fn resultants() {
        let f = b(&[((0, 1), t(0)), ((1, 0), t(0))]);
        let g = b(&[((0, 1), t(0)), ((0, 0), t(4))]);
        assert_eq!(resultant_in_second(&f, &g).unwrap(), Poly::from_terms([(1, t(0)), (0, t(4))]));
        assert_eq!(resultant_in_second(&f, &f).unwrap(), Poly::monomial(Element::ghost(0), 1));
        assert!(resultant_in_second(&f, &BiPoly::x()).is_err());
    }

    #[test]
    fn specialization() {
        let f = b(&[((1, 0), t(0)), ((0, 1), t(0)), ((0, 0), t(0))]);
        assert_eq!(f.specialize(Var::Second, t(1)), Poly::linear(q(1)));
        let h = b(&[((1, 1), t(0)), ((0, 0), t(3))]);
        assert_eq!(h.specialize(Var::First, t(2)), Poly::from_terms([(1, t(2)), (0, t(3))]));
        let p = Poly::linear(q(5));
        assert_eq!(BiPoly::from_poly(&p, Var::First).specialize(Var::Second, Element::Zero), p);
    }

    #[test]
    fn line_pairs() {
        let (f, g) = (line(0, 0), line(2, 1));
        let pts = common_roots_sample(&f, &g, &Window::default(), Rational::new(1, 4)).unwrap();
        assert!(!pts.is_empty());
        let rep = bezout_report(&f, &g, &Window::default(), Rational::new(1, 4)).unwrap();
        assert_eq!(rep.component_count, 1);
        assert!(rep.ordinary_count <= 1 && rep.bound_holds);

        let same = bezout_report(&f, &f, &Window::default(), q(1)).unwrap();
        assert_eq!(same.ordinary_count, 0);
        assert!(same.bound_holds);
        assert!(same.sampled_common_roots.len() > 10);
        assert!(same.to_csv().starts_with("x,y,cluster,ordinary\n"));
    }

    #[test]
    fn transversal_point_is_ordinary() {
        let f = b(&[((1, 0), t(0)), ((0, 0), t(0))]);
        let g = b(&[((0, 1), t(0)), ((0, 0), t(0))]);
        let rep = bezout_report(&f, &g, &Window::default(), q(1)).unwrap();
        assert_eq!(rep.ordinary_points, vec![(q(0), q(0))]);
        assert_eq!(rep.ordinary_count, 1);
    }

    #[test]
    fn no_common_roots() {
        let f = b(&[((1, 0), t(0)), ((0, 0), t(0))]);
        let g = b(&[((1, 0), t(0)), ((0, 0), t(5))]);
        assert!(common_roots_sample(&f, &g, &Window::default(), q(1)).unwrap().is_empty());
        let bad = Window { x_min: q(1), x_max: q(0), ..Window::default() };
        assert!(common_roots_sample(&f, &g, &bad, q(1)).is_err());
        assert!(common_roots_sample(&f, &g, &Window::default(), q(0)).is_err());
    }
}
