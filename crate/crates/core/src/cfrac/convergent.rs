use crate::arith::{QRational, Rational};
use crate::error::{Error, Result};
use crate::qseries::WSeries;

/// The depth-`k` convergent `w / (C_1 - w / (C_2 - ... - w / C_k))` as a
/// power series truncated at `order`, evaluated from the innermost level out.
///
/// Every level is a full series division, and the intermediate coefficients
/// grow quickly; [`convergent`] computes the same series much faster.
pub fn convergent_bottom_up(partials: &[QRational], k: usize, order: usize) -> Result<WSeries> {
    if k == 0 || k > partials.len() {
        return Err(Error::Domain(format!(
            "convergent depth {k} outside 1..={}",
            partials.len()
        )));
    }
    let w = WSeries::w(order);
    let mut tail = WSeries::zero(order);
    for level in (1..=k).rev() {
        let den = WSeries::constant(partials[level - 1].clone(), order).sub(&tail);
        tail = w.divide(&den).map_err(|e| match e {
            Error::Inversion { .. } => Error::Inversion { level: Some(level) },
            other => other,
        })?;
    }
    Ok(tail)
}

/// The depth-`k` convergent `w / (C_1 - w / (C_2 - ... - w / C_k))` as a
/// power series truncated at `order`.
///
/// Uses the three-term recurrences `A_j = C_j A_{j-1} - w A_{j-2}`,
/// `B_j = C_j B_{j-1} - w B_{j-2}` (`A_0 = 0`, `B_0 = 1`, `A_1 = w`,
/// `B_1 = C_1`) and one series division `A_k / B_k`. Since `B_k(0)` is
/// `C_1 C_2 ... C_k`, the division fails exactly when some partial vanishes;
/// the error names the deepest such level, as the nested evaluation would.
pub fn convergent(partials: &[QRational], k: usize, order: usize) -> Result<WSeries> {
    if k == 0 || k > partials.len() {
        return Err(Error::Domain(format!(
            "convergent depth {k} outside 1..={}",
            partials.len()
        )));
    }
    let mut a_prev = WSeries::zero(order);
    let mut b_prev = WSeries::one(order);
    let mut a_cur = WSeries::w(order);
    let mut b_cur = WSeries::constant(partials[0].clone(), order);
    for c in &partials[1..k] {
        let a_next = a_cur.scale(c).sub(&a_prev.shift_up());
        let b_next = b_cur.scale(c).sub(&b_prev.shift_up());
        a_prev = std::mem::replace(&mut a_cur, a_next);
        b_prev = std::mem::replace(&mut b_cur, b_next);
    }
    if let Some(level) = partials[..k].iter().rposition(QRational::is_zero) {
        return Err(Error::Inversion {
            level: Some(level + 1),
        });
    }
    a_cur.divide(&b_cur)
}

/// Exact value of the depth-`k` convergent at `w = w0`, with each `C_i`
/// already evaluated to a rational. A vanishing denominator is reported with
/// its level.
pub fn convergent_value(partial_values: &[Rational], k: usize, w0: &Rational) -> Result<Rational> {
    if k == 0 || k > partial_values.len() {
        return Err(Error::Domain(format!(
            "convergent depth {k} outside 1..={}",
            partial_values.len()
        )));
    }
    let mut tail = Rational::zero();
    for level in (1..=k).rev() {
        let den = &partial_values[level - 1] - &tail;
        tail = w0.checked_div(&den).map_err(|_| Error::Evaluation {
            object: format!("convergent level {level}"),
            reason: "denominator vanishes".into(),
        })?;
    }
    Ok(tail)
}
