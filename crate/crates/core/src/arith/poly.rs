//! Dense univariate polynomials in `q` over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gcd;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Polynomial in `q`; `coeffs[n]` is the coefficient of `q^n`.
///
/// The highest stored coefficient is never zero, so the zero polynomial is
/// the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub(crate) fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(Rational::is_one)
    }

    /// Multiplicity of the root `q = 0`; zero for the zero polynomial.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub(crate) fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub(crate) fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.is_integral()
            .then(|| self.coeffs.iter().map(|c| c.numer().clone()).collect())
    }

    /// `(d, P)` with `self = P / d` and `P` integral.
    pub(crate) fn cleared(&self) -> (BigInt, Vec<BigInt>) {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| if c.is_integer() { acc } else { acc.lcm(c.denom()) });
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                if d.is_one() {
                    c.numer().clone()
                } else {
                    c.numer() * (&d / c.denom())
                }
            })
            .collect();
        (d, ints)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Divide by `q^k`, which must divide `self`.
    pub(crate) fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.low_order() || self.is_zero());
        QPolynomial {
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    /// Scaled to leading coefficient one. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.checked_inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation at `q0`.
    pub fn eval(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    /// Euclidean division: `self = quotient * divisor + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divrem(&self, divisor: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        if let (Some(a), Some(b)) = (self.to_bigints(), divisor.to_bigints()) {
            if b[dd].is_one() {
                let (q, r) = divrem_monic_int(a, &b);
                return Ok((Self::from_bigints(q), Self::from_bigints(r)));
            }
        }
        let lc_inv = divisor.coeffs[dd].checked_inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let t = &rem[k + dd] * &lc_inv;
            if t.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[k + j] -= &(&t * d);
                }
            }
            quot[k] = t;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn exact_div(&self, divisor: &QPolynomial) -> Result<QPolynomial> {
        let (q, r) = self.divrem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    pub fn pow(&self, e: u32) -> QPolynomial {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn divrem_monic_int(mut rem: Vec<BigInt>, divisor: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
    let dd = divisor.len() - 1;
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let t = std::mem::take(&mut rem[k + dd]);
        if t.is_zero() {
            continue;
        }
        for (j, d) in divisor[..dd].iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &t * d;
            }
        }
        quot[k] = t;
    }
    rem.truncate(dd);
    (quot, rem)
}

/// Exact polynomial arithmetic.
pub fn poly_arith(a: &QPolynomial, b: &QPolynomial, op: PolyOp) -> QPolynomial {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}

/// Euclidean division; errors on a zero divisor.
pub fn poly_divrem(a: &QPolynomial, b: &QPolynomial) -> Result<(QPolynomial, QPolynomial)> {
    a.divrem(b)
}

/// Monic greatest common divisor; `gcd(0, 0)` is an error.
pub fn poly_gcd(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial> {
    gcd::modular_gcd(a, b)
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let (da, a) = self.cleared();
        let (db, b) = rhs.cleared();
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        let den = da * db;
        if den.is_one() {
            QPolynomial::from_bigints(out)
        } else {
            QPolynomial::from_coeffs(
                out.into_iter()
                    .map(|c| Rational::new(c, den.clone()).expect("nonzero denominator"))
                    .collect(),
            )
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QPolynomial {
            type Output = QPolynomial;
            fn $method(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Ascending powers, e.g. `1 - q + 2*q^3`; the zero polynomial is `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}
