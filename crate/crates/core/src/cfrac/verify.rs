//! End-to-end check of the expansion of `z tan_q(z)` against the closed forms.

use std::fmt;

use crate::arith::QRational;
use crate::error::{Error, Result};
use crate::par;
use crate::qseries::{b_closed_form, c_closed_form, trig_series, QTrigSpec, TrigKind, WSeries};

use super::convergent::convergent;
use super::expand::{expand, CFExpansion};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCheck {
    pub index: usize,
    pub engine: QRational,
    pub expected: QRational,
    pub matches: bool,
    /// Constant term of `C_i b_{i-1} - b_{i-2}` vanishes.
    pub cancels: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemainderCheck {
    pub index: usize,
    pub order: usize,
    /// One flag per coefficient `w^0..=w^order`.
    pub coefficient_matches: Vec<bool>,
}

impl RemainderCheck {
    pub fn matches(&self) -> bool {
        self.coefficient_matches.iter().all(|&m| m)
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        self.coefficient_matches.iter().position(|&m| !m)
    }
}

/// Outcome of [`verify_identity`]. Failures are recorded, not raised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub depth: usize,
    pub order: usize,
    pub partials: Vec<PartialCheck>,
    pub remainders: Vec<RemainderCheck>,
    /// Largest `m` with the depth-`k` convergent equal to `w b_0 / b_{-1}`
    /// through `w^m`; `None` if the convergent could not be formed.
    pub agreement_order: Option<usize>,
    pub passed: bool,
}

impl VerificationReport {
    /// Location of the first failed check, e.g. `C_3` or `b_2[w^5]`.
    pub fn first_divergence(&self) -> Option<String> {
        if let Some(p) = self.partials.iter().find(|p| !p.matches || !p.cancels) {
            return Some(format!("C_{}", p.index));
        }
        if let Some(r) = self.remainders.iter().find(|r| !r.matches()) {
            return Some(format!("b_{}[w^{}]", r.index, r.first_mismatch().unwrap_or(0)));
        }
        match self.agreement_order {
            Some(m) if m >= self.depth => None,
            Some(m) => Some(format!("convergent agrees only through w^{m}")),
            None => Some("convergent".to_string()),
        }
    }
}

/// Stable `key = value` lines.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "depth = {}", self.depth)?;
        writeln!(f, "order = {}", self.order)?;
        for p in &self.partials {
            writeln!(f, "C_{} = {}", p.index, p.engine)?;
            writeln!(f, "C_{}.expected = {}", p.index, p.expected)?;
            writeln!(f, "C_{}.match = {}", p.index, p.matches)?;
            writeln!(f, "C_{}.cancels = {}", p.index, p.cancels)?;
        }
        for r in &self.remainders {
            let ok = r.coefficient_matches.iter().filter(|&&m| m).count();
            writeln!(f, "b_{}.order = {}", r.index, r.order)?;
            writeln!(f, "b_{}.match = {}/{}", r.index, ok, r.coefficient_matches.len())?;
        }
        match self.agreement_order {
            Some(m) => writeln!(f, "agreement_order = {m}")?,
            None => writeln!(f, "agreement_order = none")?,
        }
        if let Some(loc) = self.first_divergence() {
            writeln!(f, "first_divergence = {loc}")?;
        }
        write!(f, "pass = {}", self.passed)
    }
}

/// `cos_q` and `sin_q(z)/z` at the given order: the inputs `b_{-1}`, `b_0`.
pub fn initial_pair(order: usize) -> Result<(WSeries, WSeries)> {
    let cos = trig_series(QTrigSpec {
        kind: TrigKind::Cos,
        order,
    })?;
    let sin = trig_series(QTrigSpec {
        kind: TrigKind::SinOverZ,
        order,
    })?;
    Ok((cos, sin))
}

/// `z tan_q(z) = w b_0 / b_{-1}` truncated at `order`.
pub fn target_series(b_minus1: &WSeries, b_0: &WSeries) -> Result<WSeries> {
    Ok(b_0.divide(b_minus1)?.shift_up())
}

pub fn tangent_expansion(depth: usize, order: usize) -> Result<CFExpansion> {
    let (cos, sin) = initial_pair(order)?;
    expand(&cos, &sin, depth)
}

/// Expands `z tan_q(z)` to `depth` levels from inputs of order `order` and
/// checks the result against the closed forms.
pub fn verify_identity(depth: usize, order: usize) -> Result<VerificationReport> {
    if depth == 0 || order < depth + 1 {
        return Err(Error::InsufficientOrder {
            what: format!("verification needs depth >= 1 and order >= depth + 1, got depth {depth}, order {order}"),
        });
    }
    let (cos, sin) = initial_pair(order)?;
    let exp = expand(&cos, &sin, depth)?;
    verify_expansion(&exp, &cos, &sin)
}

/// Checks an existing expansion of `(b_minus1, b_0)` against the closed forms.
pub fn verify_expansion(
    exp: &CFExpansion,
    b_minus1: &WSeries,
    b_0: &WSeries,
) -> Result<VerificationReport> {
    let depth = exp.depth();
    let order = exp.source_order();

    let partials = par::try_map_range(depth, |k| -> Result<PartialCheck> {
        let index = k + 1;
        let engine = exp.partial(index).clone();
        let expected = c_closed_form(index)?;
        let (older, newer) = match index {
            1 => (b_minus1, b_0),
            2 => (b_0, exp.remainder(1)),
            _ => (exp.remainder(index - 2), exp.remainder(index - 1)),
        };
        let residue = &(&engine * newer.constant_term()) - older.constant_term();
        Ok(PartialCheck {
            index,
            matches: engine == expected,
            engine,
            expected,
            cancels: residue.is_zero(),
        })
    })?;

    let remainders = par::try_map_range(depth, |k| -> Result<RemainderCheck> {
        let index = k + 1;
        let engine = exp.remainder(index);
        let expected = b_closed_form(index as i64, engine.order())?;
        Ok(RemainderCheck {
            index,
            order: engine.order(),
            coefficient_matches: engine
                .coeffs()
                .iter()
                .zip(expected.coeffs())
                .map(|(a, b)| a == b)
                .collect(),
        })
    })?;

    let target = target_series(b_minus1, b_0)?;
    let agreement_order = convergent(exp.partials(), depth, order)
        .ok()
        .and_then(|c| c.agreement_order(&target));

    let passed = partials.iter().all(|p| p.matches && p.cancels)
        && remainders.iter().all(RemainderCheck::matches)
        && agreement_order.is_some_and(|m| m >= depth);

    Ok(VerificationReport {
        depth,
        order,
        partials,
        remainders,
        agreement_order,
        passed,
    })
}
