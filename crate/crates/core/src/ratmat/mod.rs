//! Exact rational linear algebra: matrices, row reduction, characteristic
//! polynomials and univariate polynomials over ℚ.

mod matrix;
mod poly;
mod rational;

pub use matrix::{Matrix, Rref};
pub use poly::UniPoly;
pub use rational::{format_rational, int, parse_rational, rat, Rational};
