//! Exact rational dynamics of the Lyness map `x_{n+2} = (a + x_{n+1}) / x_n`.
//!
//! The crate covers the map itself, the chord-tangent group law on its
//! invariant cubics, normal-form transformations to Tate, Weierstrass and
//! quartic models, and the constructions producing rational periodic orbits.
//! All arithmetic is exact.

pub mod curve;
pub mod error;
pub mod exactnum;
pub mod forms;
pub mod lyness;
pub mod special;
pub mod suites;

pub use error::{Error, Result};
pub use exactnum::Rational;
