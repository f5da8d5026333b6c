//! Polynomial gcd over the rationals.
//!
//! [`modular_gcd`] is the production routine: inputs are cleared to primitive
//! integer polynomials, the gcd is computed modulo a sequence of 62-bit primes,
//! lifted by Chinese remaindering and accepted once a stable image divides both
//! inputs over the integers. [`euclidean_gcd`] is the textbook remainder
//! sequence over the rationals with monic normalization; it is kept as an
//! independent reference.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QPolynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

const PRIME_POOL: usize = 192;

pub fn modular_gcd(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial> {
    Ok(gcd_cofactors(a, b)?.0)
}

/// Monic `g = gcd(a, b)` together with the exact quotients `a / g`, `b / g`.
pub fn gcd_cofactors(
    a: &QPolynomial,
    b: &QPolynomial,
) -> Result<(QPolynomial, QPolynomial, QPolynomial)> {
    match (a.is_zero(), b.is_zero()) {
        (true, true) => return Err(Error::ZeroGcd),
        (true, false) => {
            let lc = b.leading_coeff().unwrap().clone();
            return Ok((b.monic(), QPolynomial::zero(), QPolynomial::constant(lc)));
        }
        (false, true) => {
            let lc = a.leading_coeff().unwrap().clone();
            return Ok((a.monic(), QPolynomial::constant(lc), QPolynomial::zero()));
        }
        _ => {}
    }
    let (sa, sb) = (a.low_order(), b.low_order());
    let shift = sa.min(sb);
    let (alpha, pa) = primitive_part(&a.shift_down(sa));
    let (beta, pb) = primitive_part(&b.shift_down(sb));
    let one = || vec![BigInt::one()];
    let (h, ca, cb) = if pa.len() == 1 || pb.len() == 1 {
        (one(), pa, pb)
    } else if pa == pb {
        (pa, one(), one())
    } else {
        match integer_gcd(&pa, &pb) {
            Some(found) => found,
            None => {
                let g = euclidean_gcd(a, b)?;
                let ca = a.exact_div(&g)?;
                let cb = b.exact_div(&g)?;
                return Ok((g, ca, cb));
            }
        }
    };
    // a = alpha q^sa A, g = q^shift H / lc(H)  =>  a / g = alpha lc(H) q^(sa - shift) (A / H)
    let lc_h = Rational::from_integer(h.last().unwrap().clone());
    let g = QPolynomial::from_bigints(h).shift_up(shift).monic();
    let ca = QPolynomial::from_bigints(ca).scale(&(&alpha * &lc_h)).shift_up(sa - shift);
    let cb = QPolynomial::from_bigints(cb).scale(&(&beta * &lc_h)).shift_up(sb - shift);
    Ok((g, ca, cb))
}

/// Classical Euclidean algorithm over the rationals, monic at every step.
pub fn euclidean_gcd(a: &QPolynomial, b: &QPolynomial) -> Result<QPolynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroGcd);
    }
    let (mut x, mut y) = (a.monic(), b.monic());
    while !y.is_zero() {
        let (_, r) = x.divrem(&y)?;
        x = y;
        y = r.monic();
    }
    Ok(x.monic())
}

/// Splits `p = alpha * P` with `P` a primitive integer polynomial with
/// positive leading coefficient.
fn primitive_part(p: &QPolynomial) -> (Rational, Vec<BigInt>) {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let (unit, prim) = split_content(ints);
    let alpha = Rational::new(unit, lcm).expect("nonzero lcm");
    (alpha, prim)
}

fn content(ints: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    // smallest magnitudes first so the running gcd collapses early
    let mut order: Vec<&BigInt> = ints.iter().filter(|c| !c.is_zero()).collect();
    order.sort_by_key(|c| c.bits());
    for c in order {
        acc = acc.gcd(c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Returns `(d, ints / d)` where `d` is the signed content making the
/// quotient primitive with positive leading coefficient.
fn split_content(mut ints: Vec<BigInt>) -> (BigInt, Vec<BigInt>) {
    let content = content(&ints);
    let negate = ints.last().is_some_and(|c| c.is_negative());
    let d = if negate { -content } else { content };
    if !d.is_one() {
        for c in &mut ints {
            *c = &*c / &d;
        }
    }
    (d, ints)
}

type IntPoly = Vec<BigInt>;

/// Gcd of two primitive integer polynomials of positive degree with nonzero
/// constant terms, with both cofactors. `None` if the prime pool runs out.
fn integer_gcd(a: &[BigInt], b: &[BigInt]) -> Option<(IntPoly, IntPoly, IntPoly)> {
    let lc_a = a.last().unwrap();
    let lc_b = b.last().unwrap();
    let lc_gcd = lc_a.gcd(lc_b);
    let mut best_deg = usize::MAX;
    let mut image: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<Vec<BigInt>> = None;

    for &p in primes() {
        if mod_p(lc_a, p) == 0 || mod_p(lc_b, p) == 0 {
            continue;
        }
        let ga = reduce(a, p);
        let gb = reduce(b, p);
        let g = gcd_mod_p(ga, gb, p);
        let deg = g.len() - 1;
        if deg == 0 {
            return Some((vec![BigInt::one()], a.to_vec(), b.to_vec()));
        }
        if deg > best_deg {
            continue;
        }
        let scale = mod_p(&lc_gcd, p);
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, scale, p)).collect();
        if deg < best_deg {
            best_deg = deg;
            image = g.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            previous = None;
        } else {
            crt_combine(&mut image, &modulus, &g, p);
            modulus *= p;
        }
        let lifted = symmetric(&image, &modulus);
        if previous.as_ref() == Some(&lifted) {
            let (_, candidate) = split_content(lifted.clone());
            if let Some(ca) = exact_quotient(a, &candidate) {
                if let Some(cb) = exact_quotient(b, &candidate) {
                    return Some((candidate, ca, cb));
                }
            }
        }
        previous = Some(lifted);
    }
    None
}

fn crt_combine(image: &mut [BigInt], modulus: &BigInt, residues: &[u64], p: u64) {
    // x = image + modulus * ((r - image) * modulus^{-1} mod p)
    let m_mod_p = mod_p(modulus, p);
    let m_inv = inv_mod(m_mod_p, p);
    for (x, &r) in image.iter_mut().zip(residues) {
        let x_mod_p = mod_p(x, p);
        let diff = (r + p - x_mod_p) % p;
        let t = mul_mod(diff, m_inv, p);
        *x += modulus * t;
    }
}

fn symmetric(image: &[BigInt], modulus: &BigInt) -> Vec<BigInt> {
    let half = modulus >> 1;
    image
        .iter()
        .map(|c| if *c > half { c - modulus } else { c.clone() })
        .collect()
}

/// `dividend / divisor` in `Z[q]`, or `None` if the division is not exact.
fn exact_quotient(dividend: &[BigInt], divisor: &[BigInt]) -> Option<IntPoly> {
    let dd = divisor.len() - 1;
    let nd = dividend.len() - 1;
    if nd < dd {
        return None;
    }
    let lc = &divisor[dd];
    let mut rem = dividend.to_vec();
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let top = std::mem::take(&mut rem[k + dd]);
        if top.is_zero() {
            continue;
        }
        let (t, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in divisor[..dd].iter().enumerate() {
            if !d.is_zero() {
                rem[k + j] -= &t * d;
            }
        }
        quot[k] = t;
    }
    rem[..dd].iter().all(Zero::is_zero).then_some(quot)
}

/// Non-negative residue of `x` modulo `p`.
fn mod_p(x: &BigInt, p: u64) -> u64 {
    let p128 = p as u128;
    let digits: Vec<u64> = x.magnitude().iter_u64_digits().collect();
    let r = digits
        .iter()
        .rev()
        .fold(0u128, |r, &d| ((r << 64) | d as u128) % p128) as u64;
    if x.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| mod_p(c, p)).collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Monic gcd in `F_p[q]`; both inputs nonzero.
fn gcd_mod_p(mut x: Vec<u64>, mut y: Vec<u64>, p: u64) -> Vec<u64> {
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        rem_mod_p(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    let inv = inv_mod(*x.last().unwrap(), p);
    x.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// In-place `x <- x mod y` over `F_p`.
fn rem_mod_p(x: &mut Vec<u64>, y: &[u64], p: u64) {
    let dy = y.len() - 1;
    let inv = inv_mod(y[dy], p);
    while x.len() > dy {
        let top = x.len() - 1;
        let t = mul_mod(x[top], inv, p);
        let offset = top - dy;
        if t != 0 {
            for (j, &c) in y.iter().enumerate() {
                let s = mul_mod(t, c, p);
                let slot = &mut x[offset + j];
                *slot = if *slot >= s { *slot - s } else { *slot + p - s };
            }
        }
        x.pop();
        trim(x);
    }
}

fn primes() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_POOL);
        let mut n = (1u64 << 62) - 1;
        while out.len() < PRIME_POOL {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
