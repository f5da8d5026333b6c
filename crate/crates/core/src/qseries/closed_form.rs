//! q-brackets, the q-trigonometric series, and the closed forms of the
//! continued fraction data for `z tan_q(z)`.
//!
//! The partial denominators are `C_i = [2i-1] q^{e(i)}` with
//! `e(i) = (-1)^{i-1} i(i-1)/2 - i + 1`.

use crate::arith::{QPolynomial, QRational, Rational};
use crate::error::{Error, Result};
use crate::par;

use super::wseries::WSeries;

/// Largest |exponent| of `q` this module will build.
pub const EXPONENT_BOUND: i64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigKind {
    /// `sin_q(z) / z`, coefficients `(-1)^n q^{n^2} / [2n+1]!`.
    SinOverZ,
    /// `cos_q(z)`, coefficients `(-1)^n q^{n^2} / [2n]!`.
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QTrigSpec {
    pub kind: TrigKind,
    pub order: usize,
}

fn checked_exponent(e: i64) -> Result<i64> {
    if e.abs() > EXPONENT_BOUND {
        return Err(Error::ExponentOutOfRange {
            exponent: e,
            bound: EXPONENT_BOUND,
        });
    }
    Ok(e)
}

fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `binom(m, 2)` for `m >= 0`.
fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

fn iverson(p: bool) -> i64 {
    i64::from(p)
}

/// `[n] = 1 + q + ... + q^{n-1}`; `[0] = 0`.
pub fn q_bracket(n: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![Rational::one(); n])
}

/// `[n]! = [1][2]...[n]`; `[0]! = 1`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::one(), |acc, k| &acc * &q_bracket(k))
}

pub fn trig_series(spec: QTrigSpec) -> Result<WSeries> {
    checked_exponent((spec.order as i64).saturating_pow(2))?;
    let coeffs = par::try_map_range(spec.order + 1, |n| {
        let e = checked_exponent((n * n) as i64)?;
        let fact = match spec.kind {
            TrigKind::SinOverZ => q_factorial(2 * n + 1),
            TrigKind::Cos => q_factorial(2 * n),
        };
        let numer = QPolynomial::monomial(sign(n), e as usize);
        QRational::new(numer, fact)
    })?;
    Ok(WSeries::new(coeffs))
}

/// `e(i) = (-1)^{i-1} i(i-1)/2 - i + 1`.
pub fn partial_exponent(i: usize) -> i64 {
    let i = i as i64;
    let s = if i % 2 == 1 { 1 } else { -1 };
    s * choose2(i) - i + 1
}

/// Same exponent written for `C_{i+1}`: `(-1)^i binom(i+1, 2) - i`.
fn shifted_partial_exponent(i: usize) -> i64 {
    let i = i as i64;
    let s = if i % 2 == 0 { 1 } else { -1 };
    s * choose2(i + 1) - i
}

/// `C_i = [2i-1] q^{e(i)}` for `i >= 1`.
pub fn c_closed_form(i: usize) -> Result<QRational> {
    if i == 0 {
        return Err(Error::Domain("partial denominators are indexed from 1".into()));
    }
    let e = checked_exponent(partial_exponent(i))?;
    let alt = shifted_partial_exponent(i - 1);
    assert_eq!(e, alt, "exponent forms disagree for C_{i}");
    let bracket = QRational::from_poly(q_bracket(2 * i - 1));
    Ok(&bracket * &QRational::q_pow(e))
}

/// Closed-form remainder series `b_i` for `i >= -1`, truncated at `order`.
///
/// `b_{-1}` is `cos_q`. For `i >= 0` the coefficient of `w^n` is
/// `(-1)^n / [2n+2i+1]! * prod_{j=1..i} [2n+2j] * q^{(n + floor((i+1)/2))^2 + [i odd] binom(i+1, 2)}`.
pub fn b_closed_form(i: i64, order: usize) -> Result<WSeries> {
    if i < -1 {
        return Err(Error::Domain(format!("b_{i} is not defined")));
    }
    if i == -1 {
        return trig_series(QTrigSpec {
            kind: TrigKind::Cos,
            order,
        });
    }
    checked_exponent(b_exponent(i, order as i64))?;
    let coeffs = par::try_map_range(order + 1, |n| b_coefficient(i, n))?;
    Ok(WSeries::new(coeffs))
}

fn b_exponent(i: i64, n: i64) -> i64 {
    (n + (i + 1) / 2).saturating_pow(2) + iverson(i % 2 == 1) * choose2(i + 1)
}

fn b_coefficient(i: i64, n: usize) -> Result<QRational> {
    let ni = n as i64;
    let e = checked_exponent(b_exponent(i, ni))?;
    let evens = (1..=i).fold(QPolynomial::one(), |acc, j| {
        &acc * &q_bracket((2 * ni + 2 * j) as usize)
    });
    let numer = &evens * &QPolynomial::monomial(sign(n), e as usize);
    QRational::new(numer, q_factorial((2 * ni + 2 * i + 1) as usize))
}

/// Checks the two-term bracket simplification inside the induction step:
///
/// `(1 - q^{2i+1}) q^{(n+floor((i+1)/2))^2 + [i even] binom(i+1,2) - i}
///   - (1 - q^{2n+2i+1}) q^{(n+floor(i/2))^2 + [i even] binom(i,2)}`
///
/// equals `-q^{(n+i/2)^2 + binom(i,2) + 2i + 1} (1 - q^{2n})` for even `i` and
/// `-q^{(n+(i-1)/2)^2} (1 - q^{2n})` for odd `i`.
pub fn bracket_simplification_check(i: usize, n: usize) -> Result<bool> {
    let (i, n) = (i as i64, n as i64);
    let even = i % 2 == 0;
    let one_minus = |k: i64| &QRational::one() - &QRational::q_pow(k);
    let pow = |k: i64| checked_exponent(k).map(QRational::q_pow);

    let first = &one_minus(2 * i + 1)
        * &pow((n + (i + 1) / 2).pow(2) + iverson(even) * choose2(i + 1) - i)?;
    let second = &one_minus(2 * n + 2 * i + 1) * &pow((n + i / 2).pow(2) + iverson(even) * choose2(i))?;
    let lhs = &first - &second;

    let rhs_exp = if even {
        (n + i / 2).pow(2) + choose2(i) + 2 * i + 1
    } else {
        (n + (i - 1) / 2).pow(2)
    };
    let rhs = -(&pow(rhs_exp)? * &one_minus(2 * n));
    Ok(lhs == rhs)
}
