//! Acceptance criteria, one line each.
//!
//! Every criterion runs even if an earlier one fails; the test fails at the
//! end if any did. Sweeps run sequentially so the time limits are
//! single-threaded figures.

use std::process::Command;
use std::time::{Duration, Instant};

use codecalc_core::bernstein::{bernstein_series_window, bn_action};
use codecalc_core::codes::{encode_code, straighten_code_traced};
use codecalc_core::enumerate::{compositions, partitions, strict_partitions};
use codecalc_core::shifted::encode_shifted;
use codecalc_core::verify::{self, Bounds, Suite, VerifyReport};
use codecalc_core::{Composition, Execution, Partition, Sign, Signed};

const WORKED_EXAMPLE_LIMIT: Duration = Duration::from_millis(1);
const B_TRIPLE_LIMIT: Duration = Duration::from_secs(10);
const BIALTERNANT_LIMIT: Duration = Duration::from_secs(60);
const VANISHING_LIMIT: Duration = Duration::from_secs(5);
const SERIES_LIMIT: Duration = Duration::from_secs(5);
const Q_TRIPLE_LIMIT: Duration = Duration::from_secs(30);
const Q_SERIES_LIMIT: Duration = Duration::from_secs(5);

const SEQ: Execution = Execution::Sequential;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: &[VerifyReport], limit: Option<Duration>) -> Outcome {
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failures: Vec<_> = reports.iter().flat_map(|r| &r.failures).collect();
    let elapsed: Duration = reports.iter().map(|r| r.elapsed).sum();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = format!("{cases} cases, {} mismatches, {:.3}s", failures.len(), elapsed.as_secs_f64());
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {}s)", l.as_secs_f64()));
    }
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {} expected {} got {}", first.input, first.expected, first.got));
    }
    Outcome {
        passed: failures.is_empty() && in_time,
        detail,
    }
}

fn c(v: &[i64]) -> Composition {
    Composition::new(v.to_vec())
}

fn worked_example() -> Outcome {
    let mu = c(&[1, 3, 1, 6, 2]);
    let start = Instant::now();
    let run = straighten_code_traced(&encode_code(&mu).unwrap()).unwrap();
    let elapsed = start.elapsed();
    let expected = Signed::Term(Sign::Plus, Partition::new(vec![3, 3, 3, 2, 2]).unwrap());

    let bin = |extra: &[&str]| {
        let out = Command::new(env!("CARGO_BIN_EXE_codecalc"))
            .args(["straighten", "--algebra", "b"])
            .args(extra)
            .arg("1,3,1,6,2")
            .env_remove("CODECALC_FORMAT")
            .output()
            .unwrap();
        (out.status.code(), String::from_utf8_lossy(&out.stdout).trim().to_string())
    };
    let (status, stdout) = bin(&[]);
    let (trace_status, trace) = bin(&["--trace"]);

    let passed = run.result == expected
        && run.sign_exponent == 4
        && run.step_exponents == [1, 1, 2]
        && elapsed < WORKED_EXAMPLE_LIMIT
        && status == Some(0)
        && stdout == "+1 * B[3,3,3,2,2]"
        && trace_status == Some(0)
        && trace.lines().any(|l| l == "sign exponent 4")
        && trace.ends_with("+1 * B[3,3,3,2,2]");
    Outcome {
        passed,
        detail: format!(
            "{} with exponents {:?} (total {}), {}us (limit 1ms); binary printed {stdout:?}",
            run.result,
            run.step_exponents,
            run.sign_exponent,
            elapsed.as_micros()
        ),
    }
}

fn code_examples() -> Outcome {
    let got = [
        encode_code(&c(&[4, 2, 2, 1])).unwrap().to_string(),
        encode_code(&c(&[2, 3, 1, 4])).unwrap().to_string(),
        encode_shifted(&c(&[4, 2, 1])).unwrap().to_string(),
        encode_shifted(&c(&[2, 3, 1])).unwrap().to_string(),
    ];
    let expected = ["RURUURRU", "RRRRULLLURRULU", "UURU", "URULLU"];
    Outcome {
        passed: got == expected,
        detail: format!("{got:?}"),
    }
}

fn b_triple() -> Outcome {
    let bounds = Bounds {
        max_part: 6,
        max_len: 5,
        ..Bounds::for_suite(Suite::Codes)
    };
    let full_length = compositions(0, 6, 5).iter().filter(|c| c.len() == 5).count();
    let mut outcome = from_reports(&[verify::straightening_agreement(&bounds, SEQ)], Some(B_TRIPLE_LIMIT));
    outcome.detail.push_str(&format!("; {full_length} of them have length 5"));
    outcome
}

fn bialternant() -> Outcome {
    let bounds = Bounds::for_suite(Suite::Oracle);
    assert_eq!((bounds.max_part, bounds.max_len), (5, 4));
    from_reports(&[verify::bialternant_law(&bounds, SEQ)], Some(BIALTERNANT_LIMIT))
}

fn vanishing() -> Outcome {
    let bounds = Bounds::for_suite(Suite::Bernstein);
    assert_eq!(bounds.max_size, 10);
    from_reports(&[verify::vanishing(&bounds, SEQ)], Some(VANISHING_LIMIT))
}

fn series_action() -> Outcome {
    let bounds = Bounds::for_suite(Suite::Bernstein);
    let mut outcome = from_reports(&[verify::series_action(&bounds, SEQ)], Some(SERIES_LIMIT));
    // Direct restatement: for i_max terms, i runs 1..=i_max and each term at
    // t^n equals B_n s_λ.
    let mut extra = 0;
    for lambda in partitions(10) {
        let top = lambda.parts().first().copied().unwrap_or(0);
        let terms = bernstein_series_window(&lambda, top + 2).unwrap();
        let gapless = terms.iter().enumerate().all(|(k, t)| t.i == k as u64 + 1);
        let agree = terms.iter().all(|t| bn_action(t.t_exp, &lambda).unwrap() == t.as_signed());
        if !(gapless && agree) {
            extra += 1;
        }
    }
    outcome.passed &= extra == 0;
    outcome.detail.push_str(&format!("; direct restatement mismatches {extra}"));
    outcome
}

fn q_triple() -> Outcome {
    let bounds = Bounds {
        max_part: 8,
        max_len: 5,
        ..Bounds::for_suite(Suite::Qvertex)
    };
    from_reports(&[verify::y_straightening(&bounds, SEQ)], Some(Q_TRIPLE_LIMIT))
}

fn q_series() -> Outcome {
    let bounds = Bounds {
        max_part: 8,
        window: 5,
        ..Bounds::for_suite(Suite::Qvertex)
    };
    assert_eq!(strict_partitions(8).len(), 256);
    from_reports(&[verify::q_series_equivalence(&bounds, SEQ)], Some(Q_SERIES_LIMIT))
}

fn dual_definitions() -> Outcome {
    let b = Bounds {
        max_size: 10,
        i_max: 20,
        ..Bounds::for_suite(Suite::Bernstein)
    };
    let q = Bounds {
        max_part: 8,
        i_max: 20,
        ..Bounds::for_suite(Suite::Qvertex)
    };
    from_reports(
        &[verify::lambda_sup_agreement(&b, SEQ), verify::lambda_bracket_agreement(&q, SEQ)],
        None,
    )
}

fn round_trips() -> Outcome {
    let plain = Bounds {
        max_part: 8,
        max_len: 6,
        ..Bounds::for_suite(Suite::Codes)
    };
    let shifted = Bounds {
        max_part: 8,
        max_len: 5,
        ..Bounds::for_suite(Suite::Shifted)
    };
    let words = Bounds {
        random_words: 10_000,
        ..Bounds::for_suite(Suite::Codes)
    };
    from_reports(
        &[
            verify::code_round_trip(&plain, SEQ),
            verify::shifted_round_trip(&shifted, SEQ),
            verify::reduction(&words),
        ],
        None,
    )
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("worked example (1,3,1,6,2) straightens to +(3,3,3,2,2) with exponent 1+1+2", worked_example),
        ("code and shifted-code examples", code_examples),
        ("B-side triple agreement, parts 0..=6, length <= 5", b_triple),
        ("bialternant law, parts 0..=5, length <= 4", bialternant),
        ("vanishing characterization, |λ| <= 10", vanishing),
        ("series/action consistency, |λ| <= 10", series_action),
        ("Q-side triple agreement, parts <= 8, length <= 5", q_triple),
        ("Q-series form equivalence, strict parts <= 8, n <= λ_1+5", q_series),
        ("λ^(i) and λ^[i] dual definitions", dual_definitions),
        ("round trips and reduce_word on 10,000 random words", round_trips),
    ];
    let mut failed = Vec::new();
    println!();
    for (k, (name, criterion)) in criteria.iter().enumerate() {
        let outcome = criterion();
        let status = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{status}] {:>2}. {name}: {}", k + 1, outcome.detail);
        if !outcome.passed {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
