//! Exact and numerical machinery for the multiple zeta values
//! `zeta(m, 1, ..., 1)` and the triangle integrals
//!
//! ```text
//! I_n = integral over T of (-ln(xy))^n / (xy) dx dy,
//! T = triangle with vertices (1,0), (0,1), (1,1).
//! ```
//!
//! `I_n` equals `n!` times the sum of `zeta(n-k+2, {1}_k)` over `k = 0..=n`,
//! and every member of that family reduces to a polynomial with rational
//! coefficients in ordinary zeta values. This crate computes those
//! reductions exactly by two independent symbolic routes and checks them
//! numerically:
//!
//! * [`kolbig`] — the classical composition-sum formula for the integral
//!   `int_0^1 (-ln(1-x))^k/(1-x) * (-ln x)^l dx`;
//! * [`genfunc`] — coefficients of a truncated bivariate power series
//!   exponential (the generating function of the family);
//! * [`numerics`] — arbitrary-precision evaluation: zeta values by
//!   Euler-Maclaurin summation, polynomial evaluation, and direct nested
//!   sums with a rigorous-style tail bound;
//! * [`quadrature`] — tanh-sinh (double exponential) integration of the
//!   log-singular integrals, including two independent numeric routes to
//!   `I_n`.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI, and file formats
//! live in the companion binary crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod genfunc;
pub mod kolbig;
pub mod mzv;
pub mod numerics;
pub mod quadrature;
pub mod ring;

pub use error::Error;
pub use exact::Rational;
pub use mzv::{MzvCombination, MzvIndex};
pub use numerics::{EvalContext, HighPrec, MathEnv};
pub use quadrature::QuadResult;
pub use ring::{Weight, ZetaMonomial, ZetaPoly};
