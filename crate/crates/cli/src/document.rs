//! The structured output format: one JSON document per run.

use serde::{Deserialize, Serialize};

use qtan_core::arith::{QPolynomial, QRational, Rational};
use qtan_core::qseries::WSeries;

/// A rational function as ascending coefficient lists of numerator and
/// denominator, each coefficient an exact rational literal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QRationalDoc {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
}

impl QRationalDoc {
    pub fn to_qrational(&self) -> Result<QRational, String> {
        let parse = |cs: &[String]| -> Result<QPolynomial, String> {
            let coeffs = cs
                .iter()
                .map(|c| c.parse::<Rational>().map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(QPolynomial::from_coeffs(coeffs))
        };
        QRational::new(parse(&self.numerator)?, parse(&self.denominator)?).map_err(|e| e.to_string())
    }
}

impl From<&QRational> for QRationalDoc {
    fn from(x: &QRational) -> Self {
        let list = |p: &QPolynomial| p.coeffs().iter().map(ToString::to_string).collect();
        QRationalDoc {
            numerator: list(x.numer()),
            denominator: list(x.denom()),
        }
    }
}

pub fn series_doc(s: &WSeries) -> Vec<QRationalDoc> {
    s.coeffs().iter().map(QRationalDoc::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub n: usize,
    pub bracket: Vec<String>,
    pub factorial: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesDoc {
    pub sin_over_z: Vec<QRationalDoc>,
    pub cos: Vec<QRationalDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChecksDoc {
    pub partial_match: Vec<bool>,
    pub partial_cancels: Vec<bool>,
    pub remainder_match: Vec<Vec<bool>>,
    pub agreement_order: Option<usize>,
    pub first_divergence: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvalDoc {
    pub sin: String,
    pub cos: String,
    pub tangent: String,
    pub convergents: Vec<String>,
    pub differences: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub command: String,
    pub depth: usize,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub series: Option<SeriesDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub partials: Vec<QRationalDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub remainders: Vec<Vec<QRationalDoc>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub convergent: Vec<QRationalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<ChecksDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub values: Option<EvalDoc>,
}

impl Document {
    pub fn new(command: &str, depth: usize, order: usize) -> Self {
        Document {
            command: command.to_string(),
            depth,
            order,
            q: None,
            z: None,
            brackets: Vec::new(),
            series: None,
            partials: Vec::new(),
            remainders: Vec::new(),
            convergent: Vec::new(),
            checks: None,
            values: None,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document is serializable");
        s.push('\n');
        s
    }

    pub fn parse(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
