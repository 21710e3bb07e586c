//! Exact algebra behind the isosceles two-bisector construction problem.
//!
//! Given the apex bisector `q` and a base-vertex bisector normalized to `p = 1`,
//! the shape ratio `t = l/b` is a root of `2X^3 + 3X^2 - 4q^2 X - 1`. This crate
//! builds that cubic, isolates its geometric root, decides whether `t` is
//! constructible with straightedge and compass, and emits certificates that
//! can be re-checked independently. Everything is exact rational arithmetic.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bivariate;
pub mod constructibility;
pub mod derivation;
mod divisors;
pub mod error;
pub mod geometry;
pub mod interval;
pub mod irreducibility;
pub mod polynomial;
pub mod rational;
pub mod roots;

pub use bivariate::{bisector_cubic, general_cubic, BiPoly};
pub use error::{Error, Result};
pub use polynomial::QPoly;
pub use rational::Rat;
pub use roots::Isolation;
