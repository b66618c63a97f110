//! Golden corpus replay.
//!
//! A corpus file holds one JSON object per line,
//! `{"op":"straighten_b","args":{"index":[1,3]},"expected":{"sign":-1,"index":[2,2]}}`.
//! `op` names a library operation (or `cli`, which runs a whole command
//! line); `expected` is compared with the computed value as JSON. Errors are
//! written `{"error":"domain"}`. Blank lines and lines starting with `#` are
//! skipped.

use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use codecalc_core::bernstein::{bernstein_series, bn_action, lambda_sup, r_index, straighten_b};
use codecalc_core::codes::{
    decode_code, encode_code, parse_letters, reading_straighten_letters, reduce_word, render_letters,
    straighten_code_traced, CodeWord,
};
use codecalc_core::index::{negate, parse_index, Sign, Signed};
use codecalc_core::oracle::{bialternant, exponent_straighten, schur_poly};
use codecalc_core::qvertex::{
    lambda_bracket, q_series_i_form, q_series_j_form, straighten_y_code, straighten_y_perm, yn_action,
};
use codecalc_core::shifted::{
    decode_shifted, encode_shifted, lambda_bracket_shifted, preshift, shifted_straighten, ShiftedCodeWord,
};
use codecalc_core::verify::{Failure, VerifyReport};
use codecalc_core::{Composition, Error, Partition, StrictPartition};

use crate::output::{SignedRecord, TermRecord};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub op: String,
    pub args: Value,
    pub expected: Value,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Entry>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
        .map(|(n, line)| {
            serde_json::from_str(line)
                .map_err(|e| CliError::Usage(format!("corpus line {}: {e}", n + 1)))
        })
        .collect()
}

pub fn replay_file(path: &Path) -> Result<VerifyReport, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(replay(&parse_corpus(&text)?))
}

/// Evaluates every entry, in file order.
pub fn replay(entries: &[Entry]) -> VerifyReport {
    let start = Instant::now();
    let failures = entries
        .iter()
        .filter_map(|entry| {
            let got = evaluate(&entry.op, &entry.args);
            (got != entry.expected).then(|| Failure {
                suite: "corpus".into(),
                input: format!("{} {}", entry.op, entry.args),
                expected: entry.expected.to_string(),
                got: got.to_string(),
            })
        })
        .collect();
    VerifyReport {
        suite: "corpus".into(),
        cases: entries.len(),
        failures,
        elapsed: start.elapsed(),
    }
}

fn error_value(e: &Error) -> Value {
    let kind = match e {
        Error::Parse(_) => "parse",
        Error::Domain(_) => "domain",
        Error::InvalidCode(_) => "invalid_code",
        Error::Invariant(_) => "invariant",
    };
    json!({ "error": kind })
}

struct Args<'a>(&'a Value);

impl Args<'_> {
    fn field(&self, name: &str) -> Result<&Value, Error> {
        self.0
            .get(name)
            .ok_or_else(|| Error::Parse(format!("corpus args lack {name:?}")))
    }

    fn parts(&self, name: &str) -> Result<Vec<i64>, Error> {
        serde_json::from_value(self.field(name)?.clone()).map_err(|e| Error::Parse(format!("{name}: {e}")))
    }

    fn int(&self, name: &str) -> Result<i64, Error> {
        self.field(name)?
            .as_i64()
            .ok_or_else(|| Error::Parse(format!("{name} is not an integer")))
    }

    fn uint(&self, name: &str) -> Result<u64, Error> {
        self.field(name)?
            .as_u64()
            .ok_or_else(|| Error::Parse(format!("{name} is not a nonnegative integer")))
    }

    fn text(&self, name: &str) -> Result<&str, Error> {
        self.field(name)?
            .as_str()
            .ok_or_else(|| Error::Parse(format!("{name} is not a string")))
    }

    fn composition(&self) -> Result<Composition, Error> {
        Ok(Composition::new(self.parts("index")?))
    }

    fn partition(&self) -> Result<Partition, Error> {
        Partition::new(self.parts("index")?)
    }

    fn strict(&self) -> Result<StrictPartition, Error> {
        StrictPartition::new(self.parts("index")?)
    }
}

fn signed<I: AsRef<[i64]>>(r: &Signed<I>) -> Value {
    serde_json::to_value(SignedRecord::new(r)).expect("records serialize")
}

fn terms<'a, T: 'a>(items: impl IntoIterator<Item = &'a T>) -> Value
where
    TermRecord: From<&'a T>,
{
    let records: Vec<TermRecord> = items.into_iter().map(TermRecord::from).collect();
    serde_json::to_value(records).expect("records serialize")
}

/// Computes the value of one corpus operation as JSON.
pub fn evaluate(op: &str, args: &Value) -> Value {
    compute(op, &Args(args)).unwrap_or_else(|e| error_value(&e))
}

fn compute(op: &str, a: &Args) -> Result<Value, Error> {
    Ok(match op {
        "parse_index" => json!(parse_index(a.text("text")?)?.parts()),
        "classify" => json!(a.composition()?.classify().name()),
        "negate" => {
            let sign = Sign::from_i32(a.int("sign")? as i32).ok_or_else(|| Error::Parse("sign must be 1 or -1".into()))?;
            signed(&negate(Signed::Term(sign, a.composition()?)))
        }
        "encode_code" => json!(encode_code(&a.composition()?)?.to_string()),
        "decode_code" => json!(decode_code(&CodeWord::parse(a.text("code")?)?).parts()),
        "reduce_word" => json!(render_letters(&reduce_word(&parse_letters(a.text("word")?)?))),
        "straighten_code" => {
            let run = straighten_code_traced(&encode_code(&a.composition()?)?)?;
            serde_json::to_value(SignedRecord::traced(&run)).expect("records serialize")
        }
        "reading_straighten" => {
            let run = reading_straighten_letters(encode_code(&a.composition()?)?.letters())?;
            serde_json::to_value(SignedRecord::traced(&run)).expect("records serialize")
        }
        "straighten_b" => signed(&straighten_b(&a.composition()?)?),
        "bn_action" => signed(&bn_action(a.int("n")?, &a.partition()?)?),
        "lambda_sup" => json!(lambda_sup(&a.partition()?, a.uint("i")?)?.parts()),
        "r_index" => json!(r_index(&a.partition()?, a.uint("i")?)?),
        "bernstein_series" => terms(&bernstein_series(&a.partition()?, a.uint("i_max")?)?),
        "straighten_y_perm" => signed(&straighten_y_perm(&a.composition()?)?),
        "straighten_y_code" => signed(&straighten_y_code(&a.composition()?)?),
        "yn_action" => signed(&yn_action(a.int("n")?, &a.strict()?)?),
        "lambda_bracket" => json!(lambda_bracket(&a.strict()?, a.uint("i")?)?.parts()),
        "q_series_j_form" => terms(&q_series_j_form(&a.strict()?, a.int("n_max")?)?),
        "q_series_i_form" => terms(&q_series_i_form(&a.strict()?, a.uint("i_max")?)?),
        "encode_shifted" => json!(encode_shifted(&a.composition()?)?.to_string()),
        "decode_shifted" => json!(decode_shifted(&ShiftedCodeWord::parse(a.text("code")?)?).parts()),
        "preshift" => json!(preshift(&encode_code(&a.composition()?)?)?.render()),
        "shifted_straighten" => signed(&shifted_straighten(&encode_shifted(&a.composition()?)?)?),
        "lambda_bracket_shifted" => json!(lambda_bracket_shifted(&a.strict()?, a.uint("i")?)?.parts()),
        "exponent_straighten" => signed(&exponent_straighten(&a.composition()?)),
        "bialternant" => {
            let mu = a.composition()?;
            json!(bialternant(&mu, mu.len())?.to_string())
        }
        "schur_poly" => {
            let mu = a.composition()?;
            json!(schur_poly(&mu, mu.len())?.to_string())
        }
        "cli" => {
            let argv: Vec<String> = serde_json::from_value(a.field("argv")?.clone())
                .map_err(|e| Error::Parse(format!("argv: {e}")))?;
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = crate::run(std::iter::once("codecalc".to_string()).chain(argv), &mut out, &mut err);
            let stdout: Vec<String> = String::from_utf8_lossy(&out).lines().map(str::to_string).collect();
            json!({ "exit": code, "stdout": stdout })
        }
        other => return Err(Error::Parse(format!("unknown corpus op {other:?}"))),
    })
}
