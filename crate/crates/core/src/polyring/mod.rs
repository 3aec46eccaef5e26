//! Exact rationals, variable sets with block structure, monomial orders and
//! sparse multivariate polynomials.

pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod ring;

pub use matrix::{binomial, combinations, determinant, generic_matrix, matrix_minors, Grid};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{poly_arith, ArithOp, Polynomial};
pub use rational::Rational;
pub use ring::{BlockTag, Ring, RingDescriptor};
