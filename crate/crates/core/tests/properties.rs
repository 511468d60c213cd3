mod common;

use std::collections::BTreeSet;

use common::{probe_points, same_function};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use supertrop::bivariate::{common_roots_sample, BiPoly, Window};
use supertrop::division::{divides_linear, radical_member_check, verify_division};
use supertrop::factor::{e_divides, factor_min_ghosts, Factorization, Linear, Quadratic};
use supertrop::random;
use supertrop::resultant::{resultant, resultant_blockwise};
use supertrop::text::{format_bipoly, format_poly, parse_bipoly, parse_poly};
use supertrop::upoly::{
    analyze_ghost_sum, canonical_full, e_equiv, tangible_roots, Bound, GhostSumAnalysis, Operand,
};
use supertrop::{Element, Poly, Rational, Translation};

fn rat() -> impl Strategy<Value = Rational> {
    (-8i64..=8, prop_oneof![4 => Just(1i64), 1 => Just(2i64), 1 => Just(3i64)])
        .prop_map(|(n, d)| Rational::new(n as i128, d as i128))
}

fn elem() -> impl Strategy<Value = Element> {
    prop_oneof![
        1 => Just(Element::Zero),
        4 => rat().prop_map(Element::Tangible),
        2 => rat().prop_map(Element::Ghost),
    ]
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(elem(), 1..=max_deg + 1)
        .prop_map(|v| Poly::from_dense(&v))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonconstant", |p| !p.is_constant())
}

fn tangible_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    nonconstant(max_deg).prop_map(|p| p.hat())
}

fn full(f: &Poly) -> Poly {
    canonical_full(f).unwrap().to_poly()
}

fn seeded() -> impl Strategy<Value = StdRng> {
    any::<u64>().prop_map(StdRng::seed_from_u64)
}

/// A factorization in the form `factor_min_ghosts` produces: ghost factor
/// intervals separated by gaps, linears anywhere.
fn valid_factorization() -> impl Strategy<Value = Factorization> {
    (
        rat(),
        0u32..=2,
        prop::collection::btree_set(-12i64..=12, 0..=6),
        any::<(bool, bool)>(),
        prop::collection::btree_map(-12i64..=12, 1u32..=2, 0..=4),
    )
        .prop_map(|(lead, power, anchors, (right, left), lin)| {
            let mut pts: Vec<Rational> =
                anchors.into_iter().map(|k| Rational::from_integer(k as i128)).collect();
            let right_ghost = if right && !pts.is_empty() { Some(pts.remove(0)) } else { None };
            let left_ghost = if left && !pts.is_empty() { pts.pop() } else { None };
            let quadratics =
                pts.chunks_exact(2).map(|w| Quadratic { b: w[1], c: w[0] + w[1], multiplicity: 1 }).collect();
            let linears = lin
                .into_iter()
                .map(|(k, m)| Linear { root: Rational::from_integer(k as i128), multiplicity: m })
                .collect();
            Factorization {
                lead: Element::Tangible(lead),
                power_of_lambda: power,
                left_ghost,
                right_ghost,
                linears,
                quadratics,
            }
        })
}

fn ghost_factor_polys(fac: &Factorization) -> Vec<Poly> {
    let mut out: Vec<Poly> = fac.quadratics.iter().map(Quadratic::poly).collect();
    out.extend(fac.right_ghost.map(|a| Poly::from_terms([(1, Element::ONE), (0, Element::Ghost(a))])));
    out.extend(fac.left_ghost.map(|a| Poly::from_terms([(1, Element::ONE.nu()), (0, Element::Tangible(a))])));
    out
}

/// Sample points of a root set: finite endpoints, midpoints, and points
/// beyond unbounded ends.
fn root_samples(f: &Poly) -> Vec<Rational> {
    let one = Rational::from_integer(1);
    tangible_roots(f)
        .unwrap()
        .intervals()
        .iter()
        .flat_map(|iv| match (iv.lo, iv.hi) {
            (Bound::Finite(a), Bound::Finite(b)) => vec![a, b, (a + b) / Rational::from_integer(2)],
            (Bound::NegInf, Bound::Finite(b)) => vec![b, b - one],
            (Bound::Finite(a), Bound::PosInf) => vec![a, a + one],
            _ => vec![Rational::from_integer(0)],
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn semiring_laws(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(a + (b + c), (a + b) + c);
        prop_assert_eq!(a * (b * c), (a * b) * c);
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + Element::Zero, a);
        prop_assert_eq!(a * Element::ONE, a);
        prop_assert_eq!(a * Element::Zero, Element::Zero);
    }

    #[test]
    fn supertropicality_and_bipotence(a in elem(), b in elem()) {
        if a.nu() == b.nu() {
            prop_assert_eq!(a + b, a.nu());
        } else {
            prop_assert!(a + b == a || a + b == b);
        }
    }

    #[test]
    fn ghost_map_is_idempotent_homomorphism(a in elem(), b in elem()) {
        prop_assert_eq!((a + b).nu(), a.nu() + b.nu());
        prop_assert_eq!((a * b).nu(), a.nu() * b.nu());
        prop_assert_eq!(a.nu().nu(), a.nu());
        prop_assert_eq!(a.hat().nu(), a.nu());
    }

    #[test]
    fn evaluation_is_homomorphism(f in poly(4), h in poly(4), a in elem()) {
        prop_assert_eq!((&f + &h).eval(a), f.eval(a) + h.eval(a));
        prop_assert_eq!((&f * &h).eval(a), f.eval(a) * h.eval(a));
    }

    #[test]
    fn canonical_form_preserves_function(f in poly(6)) {
        let c = full(&f);
        prop_assert_eq!(full(&c), c.clone());
        prop_assert!(e_equiv(&f, &c));
        prop_assert!(same_function(&f, &c));
        prop_assert_eq!(e_equiv(&f, &c.nu()), same_function(&f, &c.nu()));
    }

    #[test]
    fn e_equivalence_is_equivalence(f in poly(5), mut rng in seeded()) {
        let variant = |rng: &mut StdRng| {
            let c = full(&f);
            let fc = canonical_full(&f).unwrap();
            let vertices: BTreeSet<u32> = fc.vertices().iter().map(|&v| fc.shift + v as u32).collect();
            Poly::from_terms(c.terms().map(|(d, e)| {
                if vertices.contains(&d) { (d, e) } else { (d, random::perturb_layers(rng, &Poly::constant(e)).coeff(0)) }
            }))
        };
        let (g1, g2) = (variant(&mut rng), variant(&mut rng));
        prop_assert!(e_equiv(&f, &f));
        prop_assert!(e_equiv(&f, &g1) && e_equiv(&g1, &f));
        prop_assert!(e_equiv(&g1, &g2) && e_equiv(&f, &g2));
        let other = &f + &Poly::monomial(Element::Tangible(Rational::from_integer(20)), 1);
        prop_assert_eq!(e_equiv(&f, &other), same_function(&f, &other));
    }

    #[test]
    fn ghost_sums_survive_layer_perturbation(mut rng in seeded(), p in poly(3)) {
        let (f, h) = random::ghost_sum_pair(&mut rng);
        prop_assume!(canonical_full(&(&f + &h)).unwrap().is_ghost());
        let q = random::perturb_layers(&mut rng, &p);
        let combo = &(&p * &f) + &(&q * &h);
        prop_assert!(canonical_full(&combo).unwrap().is_ghost());
    }

    #[test]
    fn ghost_sum_trichotomy(mut rng in seeded()) {
        let (f, h) = random::ghost_sum_pair(&mut rng);
        prop_assume!(canonical_full(&(&f + &h)).unwrap().is_ghost());
        match analyze_ghost_sum(&f, &h).unwrap() {
            GhostSumAnalysis::CommonRoot(a) => {
                prop_assert!(common::is_root(&f, a) && common::is_root(&h, a));
            }
            GhostSumAnalysis::HalfTangible { left, .. } => {
                let (l, r) = if left == Operand::First { (&f, &h) } else { (&h, &f) };
                prop_assert!(l.deg() > r.deg());
                prop_assert!(l.ldeg() > r.ldeg());
            }
            GhostSumAnalysis::NotGhostSum => prop_assert!(false, "ghost sum missed"),
        }
    }

    #[test]
    fn root_transforms(f in nonconstant(4), m in 1u32..=3, b in rat()) {
        let phi = f.frobenius(m).unwrap();
        let shifted = f.translate(Translation::Multiplicative(b));
        let mr = Rational::from_integer(m as i128);
        for a in probe_points(&[&f, &phi]) {
            prop_assert_eq!(common::is_root(&phi, a), common::is_root(&f, a * mr));
            prop_assert_eq!(common::is_root(&shifted, a - b), common::is_root(&f, a));
        }
    }

    #[test]
    fn roots_of_products(f in nonconstant(3), h in nonconstant(3)) {
        let rf = tangible_roots(&f).unwrap();
        let rh = tangible_roots(&h).unwrap();
        let prod = &f * &h;
        let (lhs, rhs) = (tangible_roots(&prod).unwrap(), rf.union(&rh));
        prop_assert_eq!(lhs.intervals(), rhs.intervals());
        for a in probe_points(&[&f, &h]) {
            prop_assert_eq!(common::is_root(&prod, a), common::is_root(&f, a) || common::is_root(&h, a));
        }
    }

    #[test]
    fn factorization_round_trip(mut rng in seeded()) {
        let f = random::monic_full(&mut rng, 8, 0.4);
        let fac = factor_min_ghosts(&f).unwrap();
        prop_assert!(e_equiv(&fac.expand(), &f));
        prop_assert!(same_function(&fac.expand(), &f));
        prop_assert!(e_equiv(&parse_poly(&fac.to_string()).unwrap(), &f));
    }

    #[test]
    fn factorization_is_unique(fac in valid_factorization()) {
        let again = factor_min_ghosts(&fac.expand()).unwrap();
        prop_assert_eq!(again, fac);
    }

    #[test]
    fn ghost_factors_of_products_divide(f in nonconstant(4), h in tangible_poly(3)) {
        let prod = factor_min_ghosts(&(&f * &h)).unwrap();
        prop_assume!(prod.lead.is_tangible());
        for p in ghost_factor_polys(&prod) {
            prop_assert!(e_divides(&p, &f).unwrap(), "{} does not e-divide {}", format_poly(&p), format_poly(&f));
        }
    }

    #[test]
    fn resultant_symmetry_and_scaling(f in nonconstant(4), h in nonconstant(4), c in rat()) {
        let r = resultant(&f, &h).unwrap();
        prop_assert_eq!(resultant(&h, &f).unwrap(), r);
        let m = f.deg().unwrap();
        let scaled = h.scale(Element::Tangible(c));
        prop_assert_eq!(resultant(&f, &scaled).unwrap(), Element::Tangible(c).pow(m) * r);
        prop_assert_eq!(resultant(&f.hat(), &h.hat()).unwrap().nu(), r.nu());
    }

    #[test]
    fn common_ghost_factor_forces_ghost_resultant(
        base in nonconstant(2), p in nonconstant(2), q in nonconstant(2), mut rng in seeded(),
    ) {
        prop_assume!(base.ldeg() == Some(0));
        let (h1, h2) = (base.clone(), random::perturb_layers(&mut rng, &base));
        let res = resultant(&(&h1 * &q), &(&h2 * &p)).unwrap();
        prop_assert!(!res.is_tangible());
        let bottom = q.ldeg() > Some(0) && p.ldeg() > Some(0);
        prop_assert_eq!(res.is_ghost(), !bottom);
    }

    #[test]
    fn blockwise_resultant_on_disjoint_roots(f in nonconstant(4), h in nonconstant(4)) {
        prop_assume!(f.ldeg() == Some(0) && h.ldeg() == Some(0));
        prop_assume!(!common::common_root_by_eval(&f, &h));
        prop_assert_eq!(resultant_blockwise(&f, &h).unwrap(), resultant(&f, &h).unwrap());
    }

    #[test]
    fn grammar_round_trip(f in poly(6), mut rng in seeded()) {
        let c = full(&f);
        prop_assert_eq!(parse_poly(&format_poly(&c)).unwrap(), c);
        prop_assert_eq!(parse_poly(&format_poly(&f)).unwrap(), f);
        let b = random::bipoly(&mut rng, 3, 0.3);
        prop_assert_eq!(parse_bipoly(&format_bipoly(&b)).unwrap(), b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn division_witnesses_are_sound(f in nonconstant(4), a in rat()) {
        let inside = tangible_roots(&f).unwrap().contains(a);
        match divides_linear(&f, a).unwrap() {
            Some(w) => {
                prop_assert!(inside);
                prop_assert!(w.q.is_tangible());
                prop_assert!(verify_division(&f, &Poly::linear(a), &w.q).unwrap());
                prop_assert_eq!(w.ghost_sum, &f + &(&w.q * &Poly::linear(a)));
            }
            None => prop_assert!(!inside || f.is_monomial()),
        }
    }

    #[test]
    fn division_complete_on_roots(f in nonconstant(4)) {
        prop_assume!(!f.is_monomial());
        for a in root_samples(&f) {
            let w = divides_linear(&f, a).unwrap();
            prop_assert!(w.is_some(), "no witness for {} at {}", format_poly(&f), a);
        }
    }

    #[test]
    fn radical_closure(
        a1 in nonconstant(2), a2 in nonconstant(2), h1 in poly(2), h2 in poly(2),
        k1 in 1u32..=2, k2 in 1u32..=2, kinds in (0u8..3, 0u8..3),
    ) {
        let cert = |a: &Poly, k: u32, h: &Poly, kind: u8| {
            let ak = a.pow(k);
            match kind {
                0 => ak,
                1 => (&ak * &(&Poly::one() + h)).nu(),
                _ => &ak + &(&ak * h).nu(),
            }
        };
        let b1 = cert(&a1, k1, &h1, kinds.0);
        let b2 = cert(&a2, k2, &h2, kinds.1);
        prop_assert!(radical_member_check(&a1, k1, &b1, &Poly::one()).unwrap());
        prop_assert!(radical_member_check(&a2, k2, &b2, &Poly::one()).unwrap());
        let composite = &b1.pow(k2) + &b2.pow(k1);
        prop_assert!(radical_member_check(&(&a1 + &a2), k1 * k2, &composite, &Poly::one()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Bounded search for a witness at a point outside the root set.
    #[test]
    fn no_witness_off_the_roots(f in nonconstant(2), a in -6i64..=10) {
        let a = Rational::from_integer(a as i128);
        prop_assume!(!tangible_roots(&f).unwrap().contains(a));
        let grid: Vec<Element> = std::iter::once(Element::Zero)
            .chain((-6..=10).map(Element::tangible))
            .collect();
        let deg = f.deg().unwrap() as usize;
        let g = Poly::linear(a);
        let mut idx = vec![0usize; deg + 1];
        loop {
            let q = Poly::from_dense(&idx.iter().map(|&i| grid[i]).collect::<Vec<_>>());
            if !q.is_zero() {
                prop_assert!(!verify_division(&f, &g, &q).unwrap(), "witness {} for {} at {}", format_poly(&q), format_poly(&f), a);
            }
            let mut k = 0;
            while k <= deg {
                idx[k] += 1;
                if idx[k] < grid.len() { break; }
                idx[k] = 0;
                k += 1;
            }
            if k > deg { break; }
        }
    }

    #[test]
    fn frobenius_transports_common_roots(seed in any::<u64>(), m in 2u32..=3) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (fb, gb): (BiPoly, BiPoly) = (random::bipoly(&mut rng, 2, 0.3), random::bipoly(&mut rng, 2, 0.3));
        let step = Rational::new(1, 2);
        let mr = Rational::from_integer(m as i128);
        let coarse = common_roots_sample(&fb, &gb, &Window::default(), step).unwrap();
        let fine_window = Window {
            x_min: Rational::from_integer(-10) / mr,
            x_max: Rational::from_integer(10) / mr,
            ..Window::default()
        };
        let fine: BTreeSet<_> = common_roots_sample(
            &fb.frobenius_first(m).unwrap(),
            &gb.frobenius_first(m).unwrap(),
            &fine_window,
            step / mr,
        )
        .unwrap()
        .into_iter()
        .collect();
        for (x, y) in &coarse {
            prop_assert!(fine.contains(&(*x / mr, *y)), "({}, {}) not transported", x, y);
        }
    }
}
