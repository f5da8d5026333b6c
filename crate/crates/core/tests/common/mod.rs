#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use qtan_core::arith::{
    euclidean_gcd, poly_divrem, poly_gcd, qrat_arith, PolyOp, QPolynomial, QRatOp, QRational,
    Rational,
};

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

pub fn poly(max_len: usize) -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(QPolynomial::from_coeffs)
}

pub fn nonzero_poly(max_len: usize) -> impl Strategy<Value = QPolynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn qrat() -> impl Strategy<Value = QRational> {
    (poly(4), nonzero_poly(4)).prop_map(|(n, d)| QRational::new(n, d).unwrap())
}

pub fn nonzero_qrat() -> impl Strategy<Value = QRational> {
    qrat().prop_filter("nonzero", |x| !x.is_zero())
}

/// Naive polynomial product, kept independent of the library multiply.
pub fn naive_mul(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() || b.is_zero() {
        return QPolynomial::zero();
    }
    let mut out = vec![Rational::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    QPolynomial::from_coeffs(out)
}

pub fn check_canonical_round_trip(a: &QPolynomial, b: &QPolynomial) -> Result<(), TestCaseError> {
    let x = QRational::new(a.clone(), b.clone()).unwrap();
    let back = qrat_arith(&x, &QRational::from_poly(b.clone()), QRatOp::Mul).unwrap();
    prop_assert_eq!(back, QRational::from_poly(a.clone()));
    prop_assert!(x.denom().is_monic());
    prop_assert!(poly_gcd(x.numer(), x.denom()).map(|g| g.is_one()).unwrap_or(x.is_zero()));
    Ok(())
}

pub fn check_field_laws(a: &QRational, b: &QRational, c: &QRational) -> Result<(), TestCaseError> {
    let add = |x: &QRational, y: &QRational| qrat_arith(x, y, QRatOp::Add).unwrap();
    let mul = |x: &QRational, y: &QRational| qrat_arith(x, y, QRatOp::Mul).unwrap();
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(mul(a, b), mul(b, a));
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    prop_assert!(add(a, &qrat_arith(a, a, QRatOp::Neg).unwrap()).is_zero());
    if !a.is_zero() {
        prop_assert!(mul(a, &qrat_arith(a, a, QRatOp::Inv).unwrap()).is_one());
    }
    Ok(())
}

pub fn check_divrem(a: &QPolynomial, b: &QPolynomial) -> Result<(), TestCaseError> {
    let (q, r) = poly_divrem(a, b).unwrap();
    let rebuilt = &naive_mul(&q, b) + &r;
    prop_assert_eq!(&rebuilt, a);
    prop_assert!(r.is_zero() || r.degree() < b.degree());
    Ok(())
}

pub fn check_gcd(a: &QPolynomial, b: &QPolynomial) -> Result<(), TestCaseError> {
    let g = poly_gcd(a, b).unwrap();
    prop_assert!(g.is_monic());
    prop_assert!(poly_divrem(a, &g).unwrap().1.is_zero());
    prop_assert!(poly_divrem(b, &g).unwrap().1.is_zero());
    prop_assert_eq!(&g, &euclidean_gcd(a, b).unwrap());
    Ok(())
}

/// `a*c` and `b*c` share the factor `c`, so their gcd is a multiple of it.
pub fn check_gcd_with_common_factor(
    a: &QPolynomial,
    b: &QPolynomial,
    c: &QPolynomial,
) -> Result<(), TestCaseError> {
    let ac = qtan_core::arith::poly_arith(a, c, PolyOp::Mul);
    let bc = qtan_core::arith::poly_arith(b, c, PolyOp::Mul);
    check_gcd(&ac, &bc)?;
    let g = poly_gcd(&ac, &bc).unwrap();
    prop_assert!(poly_divrem(&g, c).unwrap().1.is_zero());
    Ok(())
}

pub fn check_eval_homomorphism(a: &QRational, b: &QRational, q0: &Rational) -> Result<(), TestCaseError> {
    let (Ok(ea), Ok(eb)) = (a.eval(q0), b.eval(q0)) else {
        return Ok(());
    };
    let s = qrat_arith(a, b, QRatOp::Add).unwrap();
    let p = qrat_arith(a, b, QRatOp::Mul).unwrap();
    // poles of a sum or product are among the poles of the operands
    prop_assert_eq!(s.eval(q0).unwrap(), &ea + &eb);
    prop_assert_eq!(p.eval(q0).unwrap(), &ea * &eb);
    Ok(())
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Classical Maclaurin coefficients of `sin(z)/z` and `cos(z)` in `w = z^2`.
pub fn maclaurin(n: u32) -> (BigRational, BigRational) {
    let sign = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    (
        BigRational::new(sign.clone(), factorial(2 * n + 1)),
        BigRational::new(sign, factorial(2 * n)),
    )
}

pub fn bracket(n: usize) -> QPolynomial {
    QPolynomial::from_ints(&vec![1; n])
}

/// `[2i-1] q^{(-1)^{i-1} i(i-1)/2 - i + 1}` built from scratch.
pub fn expected_partial(i: usize) -> QRational {
    let i = i as i64;
    let sign = if i % 2 == 1 { 1 } else { -1 };
    let e = sign * i * (i - 1) / 2 - i + 1;
    let b = bracket((2 * i - 1) as usize);
    let m = e.unsigned_abs() as usize;
    if e >= 0 {
        QRational::from_poly(&b * &QPolynomial::q_pow(m))
    } else {
        QRational::new(b, QPolynomial::q_pow(m)).unwrap()
    }
}
