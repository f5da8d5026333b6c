//! Rational functions in `q` in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::gcd::gcd_cofactors;
use super::poly::QPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

/// A reduced fraction `numer / denom` with monic denominator.
///
/// Reduction plus the monic denominator make the representation unique, so
/// the derived `PartialEq` is equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    numer: QPolynomial,
    denom: QPolynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QRatOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            numer: QPolynomial::zero(),
            denom: QPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPolynomial::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(QPolynomial::constant(c))
    }

    pub fn from_poly(p: QPolynomial) -> Self {
        QRational {
            numer: p,
            denom: QPolynomial::one(),
        }
    }

    /// `q^k` for any integer `k`; negative powers live in the denominator.
    pub fn q_pow(k: i64) -> Self {
        let m = k.unsigned_abs() as usize;
        if k >= 0 {
            Self::from_poly(QPolynomial::q_pow(m))
        } else {
            QRational {
                numer: QPolynomial::one(),
                denom: QPolynomial::q_pow(m),
            }
        }
    }

    /// Builds `numer / denom` and brings it to canonical form.
    pub fn new(numer: QPolynomial, denom: QPolynomial) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::zero());
        }
        let (_, n, d) = gcd_cofactors(&numer, &denom)?;
        Ok(Self::normalized(n, d))
    }

    /// Makes the denominator monic; assumes the pair is already coprime.
    fn normalized(numer: QPolynomial, denom: QPolynomial) -> Self {
        if numer.is_zero() {
            return Self::zero();
        }
        let lc = denom.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            QRational { numer, denom }
        } else {
            let inv = lc.checked_inv().expect("nonzero leading coefficient");
            QRational {
                numer: numer.scale(&inv),
                denom: denom.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &QPolynomial {
        &self.numer
    }

    pub fn denom(&self) -> &QPolynomial {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QRational {
            numer: self.numer.scale(c),
            denom: self.denom.clone(),
        }
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.denom.clone(), self.numer.clone()))
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        let d = self.denom.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole { q0: q0.to_string() });
        }
        self.numer.eval(q0).checked_div(&d)
    }

    fn add_impl(&self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.denom == rhs.denom {
            let n = &self.numer + &rhs.numer;
            return Self::new(n, self.denom.clone()).expect("nonzero denominator");
        }
        // Henrici: only the common part of the denominators can cancel.
        let (g, b1, d1) = gcd_cofactors(&self.denom, &rhs.denom).expect("nonzero denominators");
        let t = &(&self.numer * &d1) + &(&rhs.numer * &b1);
        if t.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return Self::normalized(t, &self.denom * &rhs.denom);
        }
        let (_, t, g_red) = gcd_cofactors(&t, &g).expect("nonzero");
        Self::normalized(t, &(&b1 * &d1) * &g_red)
    }

    fn mul_impl(&self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Cross-cancel before multiplying; inputs are reduced so the result is.
        let (a, d) = cancel(&self.numer, &rhs.denom);
        let (c, b) = cancel(&rhs.numer, &self.denom);
        Self::normalized(&a * &c, &b * &d)
    }
}

fn cancel(n: &QPolynomial, d: &QPolynomial) -> (QPolynomial, QPolynomial) {
    if d.is_one() || n.is_constant() {
        return (n.clone(), d.clone());
    }
    let (_, n, d) = gcd_cofactors(n, d).expect("nonzero operands");
    (n, d)
}

/// Exact arithmetic in the field of rational functions. `b` is ignored by
/// the unary operations.
pub fn qrat_arith(a: &QRational, b: &QRational, op: QRatOp) -> Result<QRational> {
    Ok(match op {
        QRatOp::Add => a + b,
        QRatOp::Sub => a - b,
        QRatOp::Mul => a * b,
        QRatOp::Div => a.checked_div(b)?,
        QRatOp::Neg => -a,
        QRatOp::Inv => a.checked_inv()?,
    })
}

/// Exact evaluation at `q0`; a vanishing denominator is an error naming `q0`.
pub fn qrat_eval(x: &QRational, q0: &Rational) -> Result<Rational> {
    x.eval(q0)
}

impl From<QPolynomial> for QRational {
    fn from(p: QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        self.add_impl(rhs)
    }
}

impl Sub for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self.add_impl(&-rhs)
    }
}

impl Mul for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        self.mul_impl(rhs)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for QRational {
            type Output = QRational;
            fn $method(self, rhs: QRational) -> QRational {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// `(numer)/(denom)`, or the bare numerator when the denominator is 1.
impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}
