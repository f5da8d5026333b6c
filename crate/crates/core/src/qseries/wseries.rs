//! Truncated power series in `w = z^2` with rational-function coefficients.

use std::fmt;

use crate::arith::{QRational, Rational};
use crate::error::{Error, Result};
use crate::par;

/// `coeffs[n]` is the coefficient of `w^n`, known for `n = 0..=order`.
///
/// Zeros are stored explicitly up to the order, so the range of validity
/// survives [`WSeries::shift_down`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WSeries {
    coeffs: Vec<QRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    /// Multiply the left operand by a scalar; the right operand is ignored.
    ScaleBy(QRational),
    /// Divide the left operand by `w`; the right operand is ignored.
    ShiftDown,
}

impl WSeries {
    /// Panics on an empty coefficient list, which has no order.
    pub fn new(coeffs: Vec<QRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the w^0 coefficient");
        WSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![QRational::zero(); order + 1])
    }

    pub fn constant(c: QRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(QRational::one(), order)
    }

    /// The series `w` itself.
    pub fn w(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = QRational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &QRational {
        &self.coeffs[n]
    }

    pub fn constant_term(&self) -> &QRational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QRational::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    /// Index of the first nonzero coefficient, `None` if all stored ones vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Largest `m` such that coefficients `0..=m` agree, capped at the common
    /// order; `None` when even the constant terms differ.
    pub fn agreement_order(&self, other: &WSeries) -> Option<usize> {
        let n = self.order().min(other.order());
        match (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k]) {
            Some(0) => None,
            Some(k) => Some(k - 1),
            None => Some(n),
        }
    }

    pub fn add(&self, rhs: &WSeries) -> WSeries {
        let n = self.order().min(rhs.order());
        Self::new(par::map_range(n + 1, |k| &self.coeffs[k] + &rhs.coeffs[k]))
    }

    pub fn sub(&self, rhs: &WSeries) -> WSeries {
        let n = self.order().min(rhs.order());
        Self::new(par::map_range(n + 1, |k| &self.coeffs[k] - &rhs.coeffs[k]))
    }

    pub fn neg(&self) -> WSeries {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &WSeries) -> WSeries {
        let n = self.order().min(rhs.order());
        Self::new(par::map_range(n + 1, |k| {
            (0..=k).fold(QRational::zero(), |acc, j| {
                let (a, b) = (&self.coeffs[j], &rhs.coeffs[k - j]);
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        }))
    }

    pub fn scale(&self, c: &QRational) -> WSeries {
        Self::new(par::map_range(self.coeffs.len(), |k| &self.coeffs[k] * c))
    }

    pub fn scale_rational(&self, c: &Rational) -> WSeries {
        Self::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Division by `w`: drops the (zero) constant term and lowers the order
    /// by one. A series of order 0 has nothing left to keep.
    pub fn shift_down(&self) -> Result<WSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::NotDivisibleByW);
        }
        if self.order() == 0 {
            return Err(Error::InsufficientOrder {
                what: "cannot divide an order-0 series by w".into(),
            });
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// Multiplication by `w`; the order is kept, so the top coefficient is lost.
    pub fn shift_up(&self) -> WSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(QRational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Self::new(coeffs)
    }

    /// Power-series quotient by recursive deconvolution, truncated to the
    /// smaller order.
    pub fn divide(&self, den: &WSeries) -> Result<WSeries> {
        let d0 = den.constant_term();
        if d0.is_zero() {
            return Err(Error::Inversion { level: None });
        }
        let d0_inv = d0.checked_inv()?;
        let n = self.order().min(den.order());
        let mut out: Vec<QRational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let terms = par::map_range(k, |j| {
                let (d, q) = (&den.coeffs[j + 1], &out[k - 1 - j]);
                if d.is_zero() || q.is_zero() {
                    QRational::zero()
                } else {
                    d * q
                }
            });
            let acc = terms
                .iter()
                .fold(self.coeffs[k].clone(), |acc, t| if t.is_zero() { acc } else { &acc - t });
            out.push(&acc * &d0_inv);
        }
        Ok(Self::new(out))
    }
}

/// Truncated series arithmetic. Unary operations ignore `b`.
pub fn series_arith(a: &WSeries, b: &WSeries, op: SeriesOp) -> Result<WSeries> {
    Ok(match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::ScaleBy(c) => a.scale(&c),
        SeriesOp::ShiftDown => a.shift_down()?,
    })
}

pub fn series_divide(num: &WSeries, den: &WSeries) -> Result<WSeries> {
    num.divide(den)
}

impl fmt::Display for WSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                f.write_str("\n")?;
            }
            write!(f, "w^{n}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
