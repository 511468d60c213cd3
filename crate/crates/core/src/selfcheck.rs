//! Seeded randomized property suite plus the worked-example corpus.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::bivariate::{resultant_in_second, Var};
use crate::corpus::{run_worked_examples, Outcome};
use crate::division::{divides_linear, verify_division};
use crate::factor::factor_min_ghosts;
use crate::random;
use crate::resultant::{decide, permanent, permanent_oracle, resultant, resultant_raw};
use crate::semiring::Element;
use crate::text::{format_bipoly, format_poly, parse_bipoly, parse_poly};
use crate::upoly::{canonical_full, e_equiv, tangible_roots, Poly};

type Check = fn(&mut StdRng) -> Result<(), String>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub corpus: Vec<Outcome>,
    pub properties: Vec<PropertyResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.corpus.iter().all(Outcome::passed) && self.properties.iter().all(|p| p.failures.is_empty())
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn semiring_laws(rng: &mut StdRng) -> Result<(), String> {
    let [a, b, c] = [0; 3].map(|_| random::element(rng, 0.2, 0.4));
    ensure(a + (b + c) == (a + b) + c, || format!("+ assoc {a} {b} {c}"))?;
    ensure(a * (b * c) == (a * b) * c, || format!("* assoc {a} {b} {c}"))?;
    ensure(a + b == b + a && a * b == b * a, || format!("commutativity {a} {b}"))?;
    ensure(a * (b + c) == a * b + a * c, || format!("distributivity {a} {b} {c}"))?;
    ensure((a + b).nu() == a.nu() + b.nu() && (a * b).nu() == a.nu() * b.nu(), || {
        format!("nu homomorphism {a} {b}")
    })?;
    ensure(a + a == a.nu(), || format!("supertropicality {a}"))
}

fn canonical_forms(rng: &mut StdRng) -> Result<(), String> {
    let f = random::poly(rng, 6, 0.3);
    let c = canonical_full(&f).map_err(|e| e.to_string())?.to_poly();
    let cc = canonical_full(&c).map_err(|e| e.to_string())?.to_poly();
    ensure(c == cc, || format!("not idempotent on {}", format_poly(&f)))?;
    ensure(e_equiv(&f, &c), || format!("canonical form differs from {}", format_poly(&f)))
}

fn roots_of_products(rng: &mut StdRng) -> Result<(), String> {
    let f = random::nonconstant_poly(rng, 3, 0.3);
    let g = random::nonconstant_poly(rng, 3, 0.3);
    let rf = tangible_roots(&f).map_err(|e| e.to_string())?;
    let rg = tangible_roots(&g).map_err(|e| e.to_string())?;
    let rfg = tangible_roots(&(&f * &g)).map_err(|e| e.to_string())?;
    ensure(rfg.intervals() == rf.union(&rg).intervals(), || {
        format!("roots of {} * {}", format_poly(&f), format_poly(&g))
    })
}

fn factor_round_trip(rng: &mut StdRng) -> Result<(), String> {
    let f = random::monic_full(rng, 8, 0.4);
    let fac = factor_min_ghosts(&f).map_err(|e| e.to_string())?;
    ensure(e_equiv(&fac.expand(), &f), || format!("{} factors as {}", format_poly(&f), fac))
}

fn permanent_oracle_agrees(rng: &mut StdRng) -> Result<(), String> {
    let side = rng.gen_range(1..=6);
    let m = random::matrix(rng, side);
    let (dp, brute) = (permanent(&m), permanent_oracle(&m));
    ensure(dp == brute, || format!("permanent {dp:?} vs oracle {brute:?} on\n{m}"))
}

fn resultant_decides(rng: &mut StdRng) -> Result<(), String> {
    let f = random::nonconstant_poly(rng, 5, 0.3);
    let g = random::nonconstant_poly(rng, 5, 0.3);
    let r = decide(&f, &g).map_err(|e| e.to_string())?;
    let back = resultant(&g, &f).map_err(|e| e.to_string())?;
    ensure(r.resultant == back, || {
        format!("asymmetric resultant on {} , {}", format_poly(&f), format_poly(&g))
    })
}

fn linear_division(rng: &mut StdRng) -> Result<(), String> {
    let f = random::nonconstant_poly(rng, 4, 0.3);
    let roots = tangible_roots(&f).map_err(|e| e.to_string())?;
    let Some(a) = roots.representative() else {
        return Ok(());
    };
    let w = divides_linear(&f, a).map_err(|e| e.to_string())?;
    match w {
        Some(w) => ensure(verify_division(&f, &Poly::linear(a), &w.q).unwrap_or(false), || {
            format!("bad witness for {} at {a}", format_poly(&f))
        }),
        None => ensure(f.is_monomial(), || format!("no witness for {} at {a}", format_poly(&f))),
    }
}

fn text_round_trip(rng: &mut StdRng) -> Result<(), String> {
    let f = canonical_full(&random::poly(rng, 6, 0.4)).map_err(|e| e.to_string())?.to_poly();
    let back = parse_poly(&format_poly(&f)).map_err(|e| e.to_string())?;
    ensure(back == f, || format!("round trip of {}", format_poly(&f)))?;
    let b = random::bipoly(rng, 3, 0.3);
    let back = parse_bipoly(&format_bipoly(&b)).map_err(|e| e.to_string())?;
    ensure(back == b, || format!("round trip of {}", format_bipoly(&b)))
}

fn specialization(rng: &mut StdRng) -> Result<(), String> {
    let f = random::bipoly(rng, 2, 0.3);
    let g = random::bipoly(rng, 2, 0.3);
    let (Some(m), Some(n)) = (f.deg_in(Var::Second), g.deg_in(Var::Second)) else {
        return Ok(());
    };
    if m == 0 || n == 0 {
        return Ok(());
    }
    let c = Element::Tangible(random::rational(rng, -6, 6));
    let lhs = resultant_in_second(&f, &g).map_err(|e| e.to_string())?.eval(c);
    let (fc, gc) = (f.specialize(Var::First, c), g.specialize(Var::First, c));
    let rhs = if fc.deg() == Some(m) && gc.deg() == Some(n) {
        resultant_raw(&fc, &gc).map_err(|e| e.to_string())?
    } else {
        return Ok(());
    };
    ensure(lhs == rhs, || format!("specialization at {c}: {lhs} vs {rhs}"))
}

pub const PROPERTIES: &[(&str, Check)] = &[
    ("semiring laws", semiring_laws),
    ("canonical forms", canonical_forms),
    ("roots of products", roots_of_products),
    ("factor round trip", factor_round_trip),
    ("permanent vs oracle", permanent_oracle_agrees),
    ("resultant decides primeness", resultant_decides),
    ("linear division witnesses", linear_division),
    ("text round trip", text_round_trip),
    ("bivariate specialization", specialization),
];

/// Runs every property `cases` times from `seed`, then the corpus.
pub fn run(cases: usize, seed: u64) -> SelfCheckReport {
    let properties = PROPERTIES
        .iter()
        .enumerate()
        .map(|(k, (name, check))| {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(k as u64));
            let failures = (0..cases).filter_map(|_| check(&mut rng).err()).collect();
            PropertyResult { name, cases, failures }
        })
        .collect();
    SelfCheckReport { corpus: run_worked_examples(), properties }
}
