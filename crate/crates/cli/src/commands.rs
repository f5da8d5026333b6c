use std::fmt::Write as _;

use qtan_core::arith::{QRational, Rational};
use qtan_core::cfrac::{
    convergent, convergent_value, expand, initial_pair, tangent_expansion, verify_expansion,
    VerificationReport,
};
use qtan_core::qseries::{q_bracket, q_factorial, WSeries};
use qtan_core::{Error, Result};

use crate::config::{Format, RunConfig};
use crate::document::{series_doc, BracketDoc, ChecksDoc, Document, EvalDoc, QRationalDoc, SeriesDoc};

/// Rendered output of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// `Some(false)` when a verification ran and failed.
    pub passed: Option<bool>,
}

impl Outcome {
    fn plain(stdout: String) -> Self {
        Outcome { stdout, passed: None }
    }
}

fn document(cfg: &RunConfig) -> Document {
    Document::new(cfg.command.name(), cfg.depth, cfg.order)
}

pub fn cmd_brackets(cfg: &RunConfig) -> Result<Outcome> {
    let rows: Vec<_> = (1..=cfg.depth).map(|n| (n, q_bracket(n), q_factorial(n))).collect();
    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (n, b, f) in &rows {
                let _ = writeln!(s, "[{n}] = {b}");
                let _ = writeln!(s, "[{n}]! = {f}");
            }
            s
        }
        Format::Structured => {
            let mut doc = document(cfg);
            let list = |p: &qtan_core::arith::QPolynomial| p.coeffs().iter().map(ToString::to_string).collect();
            doc.brackets = rows
                .iter()
                .map(|(n, b, f)| BracketDoc {
                    n: *n,
                    bracket: list(b),
                    factorial: list(f),
                })
                .collect();
            doc.render()
        }
    };
    Ok(Outcome::plain(out))
}

pub fn cmd_series(cfg: &RunConfig) -> Result<Outcome> {
    let (cos, sin) = initial_pair(cfg.order)?;
    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (n, c) in sin.coeffs().iter().enumerate() {
                let _ = writeln!(s, "sin_over_z[w^{n}] = {c}");
            }
            for (n, c) in cos.coeffs().iter().enumerate() {
                let _ = writeln!(s, "cos[w^{n}] = {c}");
            }
            s
        }
        Format::Structured => {
            let mut doc = document(cfg);
            doc.series = Some(SeriesDoc {
                sin_over_z: series_doc(&sin),
                cos: series_doc(&cos),
            });
            doc.render()
        }
    };
    Ok(Outcome::plain(out))
}

pub fn cmd_expand(cfg: &RunConfig) -> Result<Outcome> {
    let exp = tangent_expansion(cfg.depth, cfg.order)?;
    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (i, c) in exp.partials().iter().enumerate() {
                let _ = writeln!(s, "C_{} = {c}", i + 1);
            }
            for (i, b) in exp.remainders().iter().enumerate() {
                for n in 0..=b.order().min(1) {
                    let _ = writeln!(s, "b_{}[w^{n}] = {}", i + 1, b.coeff(n));
                }
            }
            s
        }
        Format::Structured => {
            let mut doc = document(cfg);
            doc.partials = exp.partials().iter().map(QRationalDoc::from).collect();
            doc.remainders = exp.remainders().iter().map(series_doc).collect();
            doc.render()
        }
    };
    Ok(Outcome::plain(out))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome> {
    let (cos, sin) = initial_pair(cfg.order)?;
    let mut exp = expand(&cos, &sin, cfg.depth)?;
    if let Some(i) = cfg.inject_fault {
        let bumped = exp.partial(i) + &QRational::one();
        exp = exp.with_partial(i, bumped);
    }
    let report = verify_expansion(&exp, &cos, &sin)?;
    let out = match cfg.format {
        Format::Text => format!("{report}\n"),
        Format::Structured => verify_document(cfg, &report, &exp).render(),
    };
    Ok(Outcome {
        stdout: out,
        passed: Some(report.passed),
    })
}

fn verify_document(cfg: &RunConfig, report: &VerificationReport, exp: &qtan_core::cfrac::CFExpansion) -> Document {
    let mut doc = document(cfg);
    doc.partials = exp.partials().iter().map(QRationalDoc::from).collect();
    doc.remainders = exp.remainders().iter().map(series_doc).collect();
    doc.checks = Some(ChecksDoc {
        partial_match: report.partials.iter().map(|p| p.matches).collect(),
        partial_cancels: report.partials.iter().map(|p| p.cancels).collect(),
        remainder_match: report.remainders.iter().map(|r| r.coefficient_matches.clone()).collect(),
        agreement_order: report.agreement_order,
        first_divergence: report.first_divergence(),
        pass: report.passed,
    });
    doc
}

pub fn cmd_convergent(cfg: &RunConfig) -> Result<Outcome> {
    let exp = tangent_expansion(cfg.depth, cfg.depth + 1)?;
    let series = convergent(exp.partials(), cfg.depth, cfg.order)?;
    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            for (i, c) in exp.partials().iter().enumerate() {
                let _ = writeln!(s, "C_{} = {c}", i + 1);
            }
            let _ = write!(s, "{series}");
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Format::Structured => {
            let mut doc = document(cfg);
            doc.partials = exp.partials().iter().map(QRationalDoc::from).collect();
            doc.convergent = series_doc(&series);
            doc.render()
        }
    };
    Ok(Outcome::plain(out))
}

/// Exact values at `(q, z)` of the truncated trigonometric series, of
/// `z tan_q(z)` and of every convergent up to the configured depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalValues {
    pub sin: Rational,
    pub cos: Rational,
    pub tangent: Rational,
    pub convergents: Vec<Rational>,
    pub differences: Vec<Rational>,
}

fn eval_series(s: &WSeries, q0: &Rational, w0: &Rational, name: &str) -> Result<Rational> {
    let mut acc = Rational::zero();
    for n in (0..=s.order()).rev() {
        let c = s.coeff(n).eval(q0).map_err(|e| Error::Evaluation {
            object: format!("{name} coefficient of w^{n}"),
            reason: e.to_string(),
        })?;
        acc = &(&acc * w0) + &c;
    }
    Ok(acc)
}

pub fn eval_values(depth: usize, order: usize, q0: &Rational, z0: &Rational) -> Result<EvalValues> {
    let w0 = z0 * z0;
    let (cos_s, sin_s) = initial_pair(order)?;
    let sin_over_z = eval_series(&sin_s, q0, &w0, "sin_q(z)/z")?;
    let cos = eval_series(&cos_s, q0, &w0, "cos_q(z)")?;
    if cos.is_zero() {
        return Err(Error::Evaluation {
            object: "truncated cos_q(z)".into(),
            reason: "vanishes at the chosen point".into(),
        });
    }
    let tangent = (&w0 * &sin_over_z).checked_div(&cos)?;
    let exp = tangent_expansion(depth, depth + 1)?;
    let partial_values = exp
        .partials()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.eval(q0).map_err(|e| Error::Evaluation {
                object: format!("C_{}", i + 1),
                reason: e.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let convergents = (1..=depth)
        .map(|k| convergent_value(&partial_values, k, &w0))
        .collect::<Result<Vec<_>>>()?;
    let differences = convergents.iter().map(|c| &tangent - c).collect();
    Ok(EvalValues {
        sin: z0 * &sin_over_z,
        cos,
        tangent,
        convergents,
        differences,
    })
}

pub fn cmd_eval(cfg: &RunConfig) -> Result<Outcome> {
    let q0 = cfg.q_value.as_ref().expect("validated");
    let z0 = cfg.z_value.as_ref().expect("validated");
    let v = eval_values(cfg.depth, cfg.order, q0, z0)?;
    let out = match cfg.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "q = {q0}");
            let _ = writeln!(s, "z = {z0}");
            let _ = writeln!(s, "order = {}", cfg.order);
            let _ = writeln!(s, "sin_q(z) = {}", v.sin);
            let _ = writeln!(s, "cos_q(z) = {}", v.cos);
            let _ = writeln!(s, "z*tan_q(z) = {}", v.tangent);
            for (k, (c, d)) in v.convergents.iter().zip(&v.differences).enumerate() {
                let _ = writeln!(s, "convergent_{} = {c}", k + 1);
                let _ = writeln!(s, "difference_{} = {d}", k + 1);
            }
            s
        }
        Format::Structured => {
            let strings = |xs: &[Rational]| xs.iter().map(ToString::to_string).collect();
            let mut doc = document(cfg);
            doc.q = Some(q0.to_string());
            doc.z = Some(z0.to_string());
            doc.values = Some(EvalDoc {
                sin: v.sin.to_string(),
                cos: v.cos.to_string(),
                tangent: v.tangent.to_string(),
                convergents: strings(&v.convergents),
                differences: strings(&v.differences),
            });
            doc.render()
        }
    };
    Ok(Outcome::plain(out))
}
