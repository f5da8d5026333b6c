//! Exact continued fraction expansion of the q-tangent.
//!
//! With `[n] = 1 + q + ... + q^{n-1}` and `[n]! = [1][2]...[n]`, the series
//!
//! ```text
//! sin_q(z) = sum (-1)^n q^{n^2} z^{2n+1} / [2n+1]!
//! cos_q(z) = sum (-1)^n q^{n^2} z^{2n}   / [2n]!
//! ```
//!
//! give `z tan_q(z) = z^2 / (C_1 - z^2 / (C_2 - ...))` with
//! `C_i = [2i-1] q^{(-1)^{i-1} i(i-1)/2 - i + 1}`. This crate builds everything
//! in exact arithmetic over the field `Q(q)`, runs the expansion, and checks
//! it against the closed forms for the partial denominators and the
//! remainder series.
//!
//! Layout:
//! - [`arith`]: rationals, polynomials in `q`, canonical rational functions.
//! - [`qseries`]: truncated series in `w = z^2` and the closed forms.
//! - [`cfrac`]: the expansion engine, convergents, and the verifier.

pub mod arith;
pub mod cfrac;
pub mod error;
pub mod qseries;

mod par;

pub use error::{Error, Result};
pub use par::is_parallel;
