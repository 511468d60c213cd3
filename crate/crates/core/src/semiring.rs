//! The supertropical semifield over the rationals, in logarithmic notation.
//!
//! Elements are either the bottom element `Zero` (written `-inf`), a tangible
//! rational `q`, or its ghost copy `q^ν` (written `qv`). Multiplication adds
//! magnitudes, addition keeps the ν-dominant summand and turns ties into
//! ghosts:
//!
//! ```
//! use supertrop::Element;
//!
//! let two = Element::tangible(2);
//! assert_eq!(two + two, Element::ghost(2));
//! assert_eq!(two * Element::tangible(3), Element::tangible(5));
//! assert_eq!(Element::ghost(1) + Element::tangible(0), Element::ghost(1));
//! ```

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub};

use crate::error::{Error, Result};

/// Exact rational magnitudes.
pub type Rational = Ratio<i128>;

pub(crate) fn q(n: i64) -> Rational {
    Rational::from_integer(n as i128)
}

pub(crate) fn qadd(a: Rational, b: Rational) -> Rational {
    a.checked_add(&b).expect("rational overflow in addition")
}

pub(crate) fn qsub(a: Rational, b: Rational) -> Rational {
    a.checked_sub(&b).expect("rational overflow in subtraction")
}

pub(crate) fn qscale(a: Rational, k: i128) -> Rational {
    a.checked_mul(&Rational::from_integer(k)).expect("rational overflow in scaling")
}

/// Which copy of the value set an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Layer {
    Tangible,
    Ghost,
}

impl Layer {
    fn join(self, other: Layer) -> Layer {
        if self == Layer::Tangible && other == Layer::Tangible {
            Layer::Tangible
        } else {
            Layer::Ghost
        }
    }
}

/// A scalar of the supertropical semifield.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Element {
    #[default]
    Zero,
    Tangible(Rational),
    Ghost(Rational),
}

impl Element {
    /// The multiplicative identity `0`.
    pub const ONE: Element = Element::Tangible(Ratio::new_raw(0, 1));

    pub fn tangible(n: i64) -> Self {
        Element::Tangible(q(n))
    }

    pub fn ghost(n: i64) -> Self {
        Element::Ghost(q(n))
    }

    pub fn with_layer(magnitude: Rational, layer: Layer) -> Self {
        match layer {
            Layer::Tangible => Element::Tangible(magnitude),
            Layer::Ghost => Element::Ghost(magnitude),
        }
    }

    pub fn magnitude(&self) -> Option<Rational> {
        match *self {
            Element::Zero => None,
            Element::Tangible(m) | Element::Ghost(m) => Some(m),
        }
    }

    /// Layer of a nonzero element; `None` for `Zero`.
    pub fn layer(&self) -> Option<Layer> {
        match self {
            Element::Zero => None,
            Element::Tangible(_) => Some(Layer::Tangible),
            Element::Ghost(_) => Some(Layer::Ghost),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Element::Zero)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, Element::Tangible(_))
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, Element::Ghost(_))
    }

    /// Membership in the ghost ideal `{Zero} ∪ ghosts`.
    pub fn in_ghost_ideal(&self) -> bool {
        !self.is_tangible()
    }

    /// The ghost map.
    pub fn nu(&self) -> Element {
        match *self {
            Element::Zero => Element::Zero,
            Element::Tangible(m) | Element::Ghost(m) => Element::Ghost(m),
        }
    }

    /// The tangible lift of the ghost map (a retract of `nu`).
    pub fn hat(&self) -> Element {
        match *self {
            Element::Zero => Element::Zero,
            Element::Tangible(m) | Element::Ghost(m) => Element::Tangible(m),
        }
    }

    /// Compares ν-values; `Zero` is below everything.
    pub fn nu_cmp(&self, other: &Element) -> Ordering {
        self.magnitude().cmp(&other.magnitude())
    }

    /// `a^k`. By convention `Zero^0` is the identity.
    pub fn pow(&self, k: u32) -> Element {
        if k == 0 {
            return Element::ONE;
        }
        match *self {
            Element::Zero => Element::Zero,
            Element::Tangible(m) => Element::Tangible(qscale(m, k as i128)),
            Element::Ghost(m) => Element::Ghost(qscale(m, k as i128)),
        }
    }

    /// `a / b`; tangible only when both operands are tangible.
    pub fn try_div(&self, b: &Element) -> Result<Element> {
        let (bm, bl) = match *b {
            Element::Zero => return Err(Error::DivisionByZero),
            Element::Tangible(m) => (m, Layer::Tangible),
            Element::Ghost(m) => (m, Layer::Ghost),
        };
        Ok(match *self {
            Element::Zero => Element::Zero,
            Element::Tangible(m) => Element::with_layer(qsub(m, bm), bl),
            Element::Ghost(m) => Element::Ghost(qsub(m, bm)),
        })
    }

    /// Multiplies the magnitude by a tangible rational offset (log-scale shift).
    pub fn shift(&self, by: Rational) -> Element {
        match *self {
            Element::Zero => Element::Zero,
            Element::Tangible(m) => Element::Tangible(qadd(m, by)),
            Element::Ghost(m) => Element::Ghost(qadd(m, by)),
        }
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        match (self, rhs) {
            (Element::Zero, x) | (x, Element::Zero) => x,
            (a, b) => match a.nu_cmp(&b) {
                Ordering::Greater => a,
                Ordering::Less => b,
                Ordering::Equal => a.nu(),
            },
        }
    }
}

impl Mul for Element {
    type Output = Element;

    fn mul(self, rhs: Element) -> Element {
        match (self, rhs) {
            (Element::Zero, _) | (_, Element::Zero) => Element::Zero,
            (a, b) => {
                let layer = a.layer().unwrap().join(b.layer().unwrap());
                Element::with_layer(qadd(a.magnitude().unwrap(), b.magnitude().unwrap()), layer)
            }
        }
    }
}

impl std::iter::Sum for Element {
    fn sum<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::Zero, |acc, x| acc + x)
    }
}

impl std::iter::Product for Element {
    fn product<I: Iterator<Item = Element>>(iter: I) -> Element {
        iter.fold(Element::ONE, |acc, x| acc * x)
    }
}

pub(crate) fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zero => write!(f, "-inf"),
            Element::Tangible(m) => write!(f, "{}", fmt_rational(m)),
            Element::Ghost(m) => write!(f, "{}v", fmt_rational(m)),
        }
    }
}

/// Commutative semiring interface used by the generic permanent.
pub trait Semiring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Semiring for Element {
    fn zero() -> Self {
        Element::Zero
    }

    fn one() -> Self {
        Element::ONE
    }

    fn plus(&self, other: &Self) -> Self {
        *self + *other
    }

    fn times(&self, other: &Self) -> Self {
        *self * *other
    }

    fn is_zero(&self) -> bool {
        Element::is_zero(self)
    }
}
