//! Exact scalar tower: rationals, polynomials in `q`, rational functions in `q`.

pub mod gcd;
pub mod poly;
pub mod qrat;
pub mod rational;

pub use gcd::euclidean_gcd;
pub use poly::{poly_arith, poly_divrem, poly_gcd, PolyOp, QPolynomial};
pub use qrat::{qrat_arith, qrat_eval, QRatOp, QRational};
pub use rational::{rat_arith, RatOp, Rational};
