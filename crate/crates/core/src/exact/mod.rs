//! Exact number types and dense linear algebra over them.
//!
//! Everything here is exact: rationals are arbitrary precision and
//! cyclotomic numbers are kept reduced modulo the cyclotomic polynomial of
//! their conductor, so equality and zero-testing are coefficient checks.

mod cyclotomic;
mod matrix;
mod rational;

pub use cyclotomic::{cyclotomic_poly, euler_phi, CyclotomicNumber, IntPoly};
pub use matrix::{ExactMatrix, FieldElem};
pub use rational::{frac_part, is_positive_integer, parse_rational, parse_rational_list, rat, Rational};
