//! Output records and their text and JSON renderings.
//!
//! Every record serializes with a fixed field order, so parsing emitted JSON
//! back into these types and serializing again reproduces it byte for byte.
//! The text forms can be parsed back into the same records.

use serde::{Deserialize, Serialize};

use codecalc_core::bernstein::SeriesTerm;
use codecalc_core::codes::{render_letters, Straightening};
use codecalc_core::index::{parse_integers, render_parts};
use codecalc_core::qvertex::QSeriesTerm;
use codecalc_core::verify::{Failure, VerifyReport};
use codecalc_core::{Sign, Signed};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A step of a traced straightening.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub exponent: u64,
    pub word: String,
}

/// `{"zero":true}` or `{"sign":1,"index":[…]}`, optionally with the trace.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SignedRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_exp: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<StepRecord>>,
}

impl SignedRecord {
    pub fn from_parts(sign: Option<Sign>, index: Option<&[i64]>) -> SignedRecord {
        match (sign, index) {
            (Some(sign), Some(index)) => SignedRecord {
                sign: Some(sign.as_i32()),
                index: Some(index.to_vec()),
                ..SignedRecord::default()
            },
            _ => SignedRecord {
                zero: Some(true),
                ..SignedRecord::default()
            },
        }
    }

    pub fn new<I: AsRef<[i64]>>(result: &Signed<I>) -> SignedRecord {
        SignedRecord::from_parts(result.sign(), result.index().map(|i| i.as_ref()))
    }

    pub fn traced<I: AsRef<[i64]>>(run: &Straightening<I>) -> SignedRecord {
        SignedRecord {
            sign_exp: Some(run.sign_exponent),
            steps: Some(
                run.step_exponents
                    .iter()
                    .zip(&run.words)
                    .map(|(&exponent, word)| StepRecord {
                        exponent,
                        word: render_letters(word),
                    })
                    .collect(),
            ),
            ..SignedRecord::new(&run.result)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.zero == Some(true)
    }

    /// `0`, or `+1 * B[3,3,3,2,2]` with `symbol = "B"`. A trace comes first,
    /// one line per step, then the total exponent.
    pub fn to_text(&self, symbol: &str) -> String {
        let mut lines = Vec::new();
        if let Some(steps) = &self.steps {
            for (k, step) in steps.iter().enumerate() {
                lines.push(format!("step {}: exponent {} word {}", k + 1, step.exponent, step.word));
            }
        }
        if let Some(e) = self.sign_exp {
            lines.push(format!("sign exponent {e}"));
        }
        lines.push(match (self.sign, &self.index) {
            (Some(sign), Some(index)) if !self.is_zero() => {
                format!("{} * {symbol}[{}]", sign_text(sign), render_parts(index))
            }
            _ => "0".to_string(),
        });
        lines.join("\n")
    }

    /// Inverse of [`SignedRecord::to_text`].
    pub fn from_text(text: &str) -> Option<SignedRecord> {
        let mut record = SignedRecord::default();
        let mut steps = Vec::new();
        let mut last = None;
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix("step ") {
                let (_, rest) = rest.split_once(": exponent ")?;
                let (exponent, word) = rest.split_once(" word ")?;
                steps.push(StepRecord {
                    exponent: exponent.parse().ok()?,
                    word: word.to_string(),
                });
            } else if let Some(e) = line.strip_prefix("sign exponent ") {
                record.sign_exp = Some(e.parse().ok()?);
            } else {
                last = Some(line);
            }
        }
        if record.sign_exp.is_some() {
            record.steps = Some(steps);
        }
        let (sign, index) = parse_signed_text(last?)?;
        Some(SignedRecord {
            sign_exp: record.sign_exp,
            steps: record.steps,
            ..SignedRecord::from_parts(sign.and_then(Sign::from_i32), index.as_deref())
        })
    }
}

fn sign_text(sign: i32) -> &'static str {
    if sign < 0 {
        "-1"
    } else {
        "+1"
    }
}

/// Splits `+1 * X[1,2]` into sign and parts; `0` gives `(None, None)`.
fn parse_signed_text(line: &str) -> Option<(Option<i32>, Option<Vec<i64>>)> {
    let line = line.trim();
    if line == "0" {
        return Some((None, None));
    }
    let (sign, rest) = line.split_once(" * ")?;
    let sign = match sign {
        "+1" => 1,
        "-1" => -1,
        _ => return None,
    };
    Some((Some(sign), Some(parse_bracketed(rest)?)))
}

fn parse_bracketed(text: &str) -> Option<Vec<i64>> {
    let open = text.find('[')?;
    let inner = text[open + 1..].strip_suffix(']')?;
    parse_integers(inner).ok()
}

/// One series term. `j` is present for Q-series only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub family: String,
    pub i: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub t_exp: i64,
    pub sign_exp: i64,
    pub index: Vec<i64>,
}

impl From<&SeriesTerm> for TermRecord {
    fn from(t: &SeriesTerm) -> Self {
        TermRecord {
            family: t.family.name().to_string(),
            i: t.i,
            j: None,
            t_exp: t.t_exp,
            sign_exp: t.sign_exp as i64,
            index: t.index.parts().to_vec(),
        }
    }
}

impl From<&QSeriesTerm> for TermRecord {
    fn from(t: &QSeriesTerm) -> Self {
        TermRecord {
            family: t.family().name().to_string(),
            i: t.i,
            j: Some(t.j),
            t_exp: t.n,
            sign_exp: t.sign_exp,
            index: t.index.parts().to_vec(),
        }
    }
}

impl TermRecord {
    pub fn symbol(&self) -> &'static str {
        if self.family == "schurQ" {
            "Q"
        } else {
            "s"
        }
    }

    /// `[i=2] +1 * t^1 * s[1,1]`, or `[i=1 j=1] -1 * t^1 * Q[2,1]`.
    pub fn to_text(&self) -> String {
        let label = match self.j {
            Some(j) => format!("[i={} j={j}]", self.i),
            None => format!("[i={}]", self.i),
        };
        let sign = if self.sign_exp.rem_euclid(2) == 0 { "+1" } else { "-1" };
        format!(
            "{label} {sign} * t^{} * {}[{}]",
            self.t_exp,
            self.symbol(),
            render_parts(&self.index)
        )
    }

    /// Parses [`TermRecord::to_text`] back into `(i, j, sign, t_exp, symbol,
    /// index)`. The text carries the sign, not its exponent.
    pub fn parse_text(line: &str) -> Option<TextTerm> {
        let rest = line.strip_prefix("[i=")?;
        let (label, rest) = rest.split_once("] ")?;
        let (i, j) = match label.split_once(" j=") {
            Some((i, j)) => (i.parse().ok()?, Some(j.parse().ok()?)),
            None => (label.parse().ok()?, None),
        };
        let mut pieces = rest.split(" * ");
        let sign = match pieces.next()? {
            "+1" => 1,
            "-1" => -1,
            _ => return None,
        };
        let t_exp = pieces.next()?.strip_prefix("t^")?.parse().ok()?;
        let term = pieces.next()?;
        let symbol = term.split('[').next()?.to_string();
        let index = parse_bracketed(term)?;
        Some(TextTerm {
            i,
            j,
            sign,
            t_exp,
            symbol,
            index,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextTerm {
    pub i: u64,
    pub j: Option<usize>,
    pub sign: i32,
    pub t_exp: i64,
    pub symbol: String,
    pub index: Vec<i64>,
}

/// Output of the `code` subcommand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub kind: String,
    pub code: String,
    pub rows: usize,
    pub index: Vec<i64>,
}

/// Summary line of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub suite: String,
    pub cases: usize,
    pub failures: usize,
    pub elapsed_secs: f64,
}

impl From<&VerifyReport> for ReportRecord {
    fn from(r: &VerifyReport) -> Self {
        ReportRecord {
            suite: r.suite.clone(),
            cases: r.cases,
            failures: r.failures.len(),
            elapsed_secs: r.elapsed.as_secs_f64(),
        }
    }
}

impl ReportRecord {
    pub fn to_text(&self) -> String {
        format!("{}: {} cases, {} failures", self.suite, self.cases, self.failures)
    }
}

/// One failure, as written to the report file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub suite: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

impl From<&Failure> for FailureRecord {
    fn from(f: &Failure) -> Self {
        FailureRecord {
            suite: f.suite.clone(),
            input: f.input.clone(),
            expected: f.expected.clone(),
            got: f.got.clone(),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output records always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_json_shapes() {
        assert_eq!(to_json(&SignedRecord::from_parts(None, None)), r#"{"zero":true}"#);
        let r = SignedRecord::from_parts(Some(Sign::Plus), Some(&[3, 3, 3, 2, 2]));
        assert_eq!(to_json(&r), r#"{"sign":1,"index":[3,3,3,2,2]}"#);
        assert_eq!(r.to_text("B"), "+1 * B[3,3,3,2,2]");
        assert_eq!(SignedRecord::from_text("+1 * B[3,3,3,2,2]").unwrap(), r);
        assert_eq!(SignedRecord::from_text("0").unwrap(), SignedRecord::from_parts(None, None));
    }

    #[test]
    fn term_text_round_trip() {
        let t = TermRecord {
            family: "schurQ".into(),
            i: 1,
            j: Some(1),
            t_exp: 1,
            sign_exp: 1,
            index: vec![2, 1],
        };
        assert_eq!(t.to_text(), "[i=1 j=1] -1 * t^1 * Q[2,1]");
        let parsed = TermRecord::parse_text(&t.to_text()).unwrap();
        assert_eq!((parsed.i, parsed.j, parsed.sign, parsed.t_exp), (1, Some(1), -1, 1));
        assert_eq!(parsed.index, vec![2, 1]);
        assert_eq!(
            to_json(&t),
            r#"{"family":"schurQ","i":1,"j":1,"t_exp":1,"sign_exp":1,"index":[2,1]}"#
        );
    }
}
