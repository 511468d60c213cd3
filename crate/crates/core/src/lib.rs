//! Supertropical polynomial algebra over the rationals.

pub mod bivariate;
pub mod cli;
pub mod corpus;
pub mod division;
pub mod error;
pub mod factor;
pub mod random;
pub mod resultant;
pub mod selfcheck;
pub mod semiring;
pub mod text;
pub mod upoly;

pub use error::{Error, Result};
pub use semiring::{Element, Layer, Rational, Semiring};
pub use upoly::{Poly, Translation};
