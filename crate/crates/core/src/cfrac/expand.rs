use crate::arith::QRational;
use crate::error::{Error, Result};
use crate::qseries::WSeries;

/// A depth-`k` expansion `w b_0 / b_{-1} = w / (C_1 - w / (C_2 - ...))`.
///
/// The tail after level `i` is `N_i = b_{i-1} / b_i` (numerators are the
/// previous remainders, so only the `b_i` are stored). Remainder `b_i` is
/// valid through `w^{source_order - i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CFExpansion {
    partials: Vec<QRational>,
    remainders: Vec<WSeries>,
    source_order: usize,
}

impl CFExpansion {
    /// `C_1..C_k`.
    pub fn partials(&self) -> &[QRational] {
        &self.partials
    }

    /// `b_1..b_k`.
    pub fn remainders(&self) -> &[WSeries] {
        &self.remainders
    }

    pub fn source_order(&self) -> usize {
        self.source_order
    }

    pub fn depth(&self) -> usize {
        self.partials.len()
    }

    /// `C_i`, 1-based.
    pub fn partial(&self, i: usize) -> &QRational {
        &self.partials[i - 1]
    }

    /// `b_i`, 1-based.
    pub fn remainder(&self, i: usize) -> &WSeries {
        &self.remainders[i - 1]
    }

    /// Copy with `C_i` replaced; the remainders are left as computed.
    pub fn with_partial(&self, i: usize, value: QRational) -> CFExpansion {
        let mut out = self.clone();
        out.partials[i - 1] = value;
        out
    }
}

/// Runs the constant-term cancellation recurrence
/// `b_{i+1} w = C_{i+1} b_i - b_{i-1}` for `depth` steps.
///
/// `C_{i+1}` is the ratio of constant terms `b_{i-1}(0) / b_i(0)`, the only
/// scalar that makes the right-hand side divisible by `w`.
pub fn expand(b_minus1: &WSeries, b_0: &WSeries, depth: usize) -> Result<CFExpansion> {
    let order = b_minus1.order();
    if b_0.order() != order {
        return Err(Error::InsufficientOrder {
            what: format!(
                "input orders differ ({} vs {})",
                b_minus1.order(),
                b_0.order()
            ),
        });
    }
    if order < depth + 1 {
        return Err(Error::InsufficientOrder {
            what: format!("depth {depth} needs order at least {}, got {order}", depth + 1),
        });
    }
    if b_minus1.constant_term().is_zero() {
        return Err(Error::Domain("b_{-1} must have a nonzero constant term".into()));
    }

    let mut partials = Vec::with_capacity(depth);
    let mut remainders: Vec<WSeries> = Vec::with_capacity(depth);
    let mut prev = b_minus1.clone();
    let mut cur = b_0.clone();
    for step in 1..=depth {
        let c0 = cur.constant_term();
        if c0.is_zero() {
            return Err(Error::Breakdown { depth: step });
        }
        let c = prev.constant_term().checked_div(c0)?;
        let next = cur.scale(&c).sub(&prev).shift_down()?;
        partials.push(c);
        remainders.push(next.clone());
        prev = cur;
        cur = next;
    }
    Ok(CFExpansion {
        partials,
        remainders,
        source_order: order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn ints(c: &[i64]) -> WSeries {
        WSeries::new(c.iter().map(|&x| QRational::from_rational(x.into())).collect())
    }

    #[test]
    fn equal_inputs_give_unit_partial() {
        let a = ints(&[2, 5, -1]);
        let e = expand(&a, &a, 1).unwrap();
        assert_eq!(e.partials(), &[QRational::one()]);
        assert!(e.remainder(1).is_zero());
        assert_eq!(e.remainder(1).order(), 1);
    }

    #[test]
    fn remainder_orders_decrease() {
        let a = ints(&[1, 1, 2, 3, 5, 8, 13]);
        let b = ints(&[1, -1, 1, -1, 1, -1, 1]);
        let e = expand(&a, &b, 4).unwrap();
        for i in 1..=4 {
            assert_eq!(e.remainder(i).order(), 6 - i);
        }
    }

    #[test]
    fn preconditions() {
        let a = ints(&[1, 1, 1]);
        assert!(matches!(expand(&a, &a, 2), Err(Error::InsufficientOrder { .. })));
        assert!(matches!(expand(&a, &ints(&[1, 1]), 1), Err(Error::InsufficientOrder { .. })));
        assert!(matches!(expand(&ints(&[0, 1, 1]), &a, 1), Err(Error::Domain(_))));
        assert_eq!(expand(&a, &ints(&[0, 1, 1]), 1), Err(Error::Breakdown { depth: 1 }));
    }

    #[test]
    fn geometric_pair_terminates() {
        // w / (1 - w) = w / (1 - w / 1): partials [1, 1] and then b_2 = 0.
        let one = WSeries::one(6);
        let geo = ints(&[1; 7]);
        let e = expand(&one, &geo, 2).unwrap();
        assert_eq!(e.partials(), &[QRational::one(), QRational::one()]);
        assert!(e.remainder(2).is_zero());
        assert_eq!(expand(&one, &geo, 3), Err(Error::Breakdown { depth: 3 }));
    }

    #[test]
    fn hand_computed_generic_pair() {
        // b_{-1} = 1 + w, b_0 = 2 + 3w + w^2 + 4w^3
        // C_1 = 1/2; C_1 b_0 - b_{-1} = w/2 + w^2/2 + 2w^3  => b_1 = 1/2 + w/2 + 2w^2
        // C_2 = 2 / (1/2) = 4; 4 b_1 - b_0 = 0 + (2 - 3) w + ... => b_2 = -1 + 7w
        let e = expand(&ints(&[1, 1, 0, 0]), &ints(&[2, 3, 1, 4]), 2).unwrap();
        let half = QRational::from_rational(Rational::new(1, 2).unwrap());
        assert_eq!(e.partial(1), &half);
        assert_eq!(e.remainder(1), &WSeries::new(vec![half.clone(), half, QRational::from_rational(2.into())]));
        assert_eq!(e.partial(2), &QRational::from_rational(4.into()));
        assert_eq!(e.remainder(2), &ints(&[-1, 7]));
    }
}
