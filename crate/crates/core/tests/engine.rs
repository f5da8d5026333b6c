mod common;

use std::sync::OnceLock;

use common::*;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use qtan_core::arith::{QPolynomial, QRational, Rational};
use qtan_core::cfrac::{
    convergent, convergent_bottom_up, expand, initial_pair, target_series, tangent_expansion,
    verify_identity,
};
use qtan_core::qseries::{
    b_closed_form, bracket_simplification_check, c_closed_form, partial_exponent, trig_series,
    QTrigSpec, TrigKind, WSeries,
};
use qtan_core::Error;

fn closed_b(i: i64, order: usize) -> WSeries {
    b_closed_form(i, order).unwrap()
}

#[test]
fn partials_match_independent_construction() {
    for i in 1..=14 {
        assert_eq!(c_closed_form(i).unwrap(), expected_partial(i), "C_{i}");
    }
    let exps: Vec<i64> = (1..=6).map(partial_exponent).collect();
    assert_eq!(exps, [0, -2, 1, -9, 6, -20]);
}

#[test]
fn closed_form_starts_from_the_trig_series() {
    let (cos, sin) = initial_pair(9).unwrap();
    assert_eq!(closed_b(-1, 9), cos);
    assert_eq!(closed_b(0, 9), sin);
}

#[test]
fn first_remainder_constant_by_hand() {
    // (C_1 b_0 - b_{-1}) / w at w^0: -q/[3]! + 1/[2]! = q^2/[3]
    let b1 = closed_b(1, 4);
    let expected = QRational::new(QPolynomial::q_pow(2), bracket(3)).unwrap();
    assert_eq!(b1.coeff(0), &expected);
}

#[test]
fn recurrence_step_holds_for_closed_forms() {
    let order = 10;
    for i in 0..=8i64 {
        let c = c_closed_form((i + 1) as usize).unwrap();
        let diff = closed_b(i, order).scale(&c).sub(&closed_b(i - 1, order));
        assert!(diff.constant_term().is_zero(), "constant term at i = {i}");
        assert_eq!(diff.shift_down().unwrap(), closed_b(i + 1, order - 1), "i = {i}");
    }
}

#[test]
fn engine_reconstruction() {
    let (cos, sin) = initial_pair(10).unwrap();
    let exp = expand(&cos, &sin, 8).unwrap();
    for i in 1..=8 {
        let (older, newer) = match i {
            1 => (cos.clone(), sin.clone()),
            2 => (sin.clone(), exp.remainder(1).clone()),
            _ => (exp.remainder(i - 2).clone(), exp.remainder(i - 1).clone()),
        };
        let lhs = newer.scale(exp.partial(i)).sub(&older);
        let rhs = exp.remainder(i).shift_up();
        assert!(lhs.truncate(rhs.order()) == rhs, "step {i}");
        assert_eq!(exp.remainder(i).order(), 10 - i);
    }
}

#[test]
fn engine_matches_closed_forms() {
    let exp = tangent_expansion(8, 12).unwrap();
    for i in 1..=8 {
        assert_eq!(exp.partial(i), &expected_partial(i));
        assert_eq!(exp.remainder(i), &closed_b(i as i64, 12 - i));
    }
}

#[test]
fn verify_small_cases() {
    let r = verify_identity(4, 12).unwrap();
    assert!(r.passed, "{r}");
    let shown: Vec<String> = r.partials.iter().map(|p| p.engine.to_string()).collect();
    assert_eq!(
        shown,
        [
            "1",
            "(1 + q + q^2)/(q^2)",
            "q + q^2 + q^3 + q^4 + q^5",
            "(1 + q + q^2 + q^3 + q^4 + q^5 + q^6)/(q^9)",
        ]
    );
    let r = verify_identity(1, 2).unwrap();
    assert!(r.passed);
    assert!(r.agreement_order.unwrap() >= 1);
    assert!(matches!(verify_identity(3, 3), Err(Error::InsufficientOrder { .. })));
}

#[test]
fn bracket_grid() {
    for i in 0..=12 {
        for n in 0..=12 {
            assert!(bracket_simplification_check(i, n).unwrap(), "i = {i}, n = {n}");
        }
    }
}

#[test]
fn convergent_routes_agree_on_tangent_partials() {
    let exp = tangent_expansion(8, 9).unwrap();
    for k in 1..=8 {
        assert_eq!(
            convergent(exp.partials(), k, 9).unwrap(),
            convergent_bottom_up(exp.partials(), k, 9).unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn convergent_order_is_exact() {
    let order = 10;
    let (cos, sin) = initial_pair(order).unwrap();
    let target = target_series(&cos, &sin).unwrap();
    let partials: Vec<QRational> = (1..=9).map(expected_partial).collect();
    for k in 1..=9 {
        let conv = convergent(&partials, k, order).unwrap();
        for n in 0..=k {
            assert_eq!(conv.coeff(n), target.coeff(n), "k = {k}, w^{n}");
        }
        assert_ne!(conv.coeff(k + 1), target.coeff(k + 1), "k = {k} agrees past w^{k}");
    }
}

#[test]
fn classical_specialization() {
    let one = Rational::one();
    let exp = tangent_expansion(12, 13).unwrap();
    for (i, c) in exp.partials().iter().enumerate() {
        assert_eq!(c.eval(&one).unwrap(), Rational::from(2 * i as i64 + 1));
    }
    let spec = |kind| trig_series(QTrigSpec { kind, order: 10 }).unwrap();
    let (sin, cos) = (spec(TrigKind::SinOverZ), spec(TrigKind::Cos));
    for n in 0..=10u32 {
        let (s, c) = maclaurin(n);
        assert_eq!(sin.coeff(n as usize).eval(&one).unwrap(), Rational::from(s));
        assert_eq!(cos.coeff(n as usize).eval(&one).unwrap(), Rational::from(c));
    }
}

/// The classical pair with rational coefficients expands to Lambert's
/// continued fraction `w / (1 - w / (3 - w / (5 - ...)))`.
#[test]
fn engine_reproduces_lambert_fraction() {
    let order = 9;
    let coeffs = |pick: fn(u32) -> (num_rational::BigRational, num_rational::BigRational), sin: bool| {
        WSeries::new(
            (0..=order as u32)
                .map(|n| {
                    let (s, c) = pick(n);
                    QRational::from_rational(Rational::from(if sin { s } else { c }))
                })
                .collect(),
        )
    };
    let sin = coeffs(maclaurin, true);
    let cos = coeffs(maclaurin, false);
    let exp = expand(&cos, &sin, 8).unwrap();
    for (i, c) in exp.partials().iter().enumerate() {
        assert_eq!(c, &QRational::from_rational(Rational::from(2 * i as i64 + 1)));
    }
}

#[test]
fn engine_on_geometric_pair() {
    // b_{-1} = 1, b_0 = 1/(1-w): C_1 = 1, b_1 = (b_0 - 1)/w = 1/(1-w), C_2 = 1, b_2 = 0
    let order = 6;
    let ones = WSeries::new(vec![QRational::one(); order + 1]);
    let exp = expand(&WSeries::one(order), &ones, 2).unwrap();
    assert!(exp.partial(1).is_one());
    assert!(exp.partial(2).is_one());
    assert_eq!(exp.remainder(1), &ones.truncate(order - 1));
    assert!(exp.remainder(2).is_zero());
    assert_eq!(
        expand(&WSeries::one(order), &ones, 3).unwrap_err(),
        Error::Breakdown { depth: 3 }
    );
}

#[test]
fn oversized_exponents_are_rejected() {
    assert!(matches!(
        trig_series(QTrigSpec { kind: TrigKind::Cos, order: 2000 }),
        Err(Error::ExponentOutOfRange { .. })
    ));
    assert!(matches!(b_closed_form(3, 5000), Err(Error::ExponentOutOfRange { .. })));
    assert!(matches!(b_closed_form(-2, 3), Err(Error::Domain(_))));
}

struct Fixture {
    b: Vec<WSeries>,
}

const FIX_ORDER: usize = 3;
const FIX_DEPTH: usize = 8;

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| Fixture {
        b: (-1..=FIX_DEPTH as i64).map(|i| closed_b(i, FIX_ORDER)).collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn perturbed_partial_leaves_a_constant_term(i in 1..=FIX_DEPTH, delta in nonzero_qrat()) {
        let f = fixture();
        let c = &expected_partial(i) + &delta;
        // b[j] holds b_{j-1}
        let residue = f.b[i].scale(&c).sub(&f.b[i - 1]);
        prop_assert!(!residue.constant_term().is_zero());
        let exact = f.b[i].scale(&expected_partial(i)).sub(&f.b[i - 1]);
        prop_assert!(exact.constant_term().is_zero());
    }
}

#[test]
fn convergent_values_approach_tangent_at_one() {
    // at q = 1, z = 1/2 the convergents approach tan(1/2)/2 = 0.2731...
    let target = (0.5f64).tan() * 0.5;
    let exp = tangent_expansion(6, 7).unwrap();
    let vals: Vec<Rational> = exp.partials().iter().map(|c| c.eval(&Rational::one()).unwrap()).collect();
    let w0 = Rational::new(1, 4).unwrap();
    let mut last = f64::INFINITY;
    for k in 1..=6 {
        let v = qtan_core::cfrac::convergent_value(&vals, k, &w0).unwrap();
        let err = (v.as_inner().to_f64().unwrap() - target).abs();
        assert!(err < last);
        last = err;
    }
    assert!(last < 1e-12);
}
