//! Exhaustive agreement sweeps.
//!
//! Every check enumerates a bounded index set, runs two or more independent
//! computations per case and records each disagreement. Cases run through
//! [`map_cases`], so the failure list comes out in enumeration order whatever
//! the execution mode.

use std::collections::HashMap;
use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bernstein::{self, bn_action_traced, lambda_sup, lambda_sup_closed_form, r_index, straighten_b};
use crate::codes::{
    self, decode_code, encode_code, reading_straighten, reduce_word, straighten_code_traced, u_right_of_first_l,
    Letter,
};
use crate::enumerate::{compositions, partitions, strict_partitions};
use crate::error::{Error, Result};
use crate::exec::{map_cases, Execution};
use crate::index::{Composition, Partition, Sign, Signed, StrictPartition};
use crate::oracle::{self, IntPolynomial};
use crate::qvertex::{
    lambda_bracket, lambda_bracket_insertion, q_series_i_form, q_series_j_form, straighten_y_code,
    straighten_y_perm, yn_action,
};
use crate::shifted::{self, decode_shifted, encode_shifted, lambda_bracket_shifted, preshift, shifted_straighten};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Codes,
    Bernstein,
    Qvertex,
    Shifted,
    Oracle,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Codes, Suite::Bernstein, Suite::Qvertex, Suite::Shifted, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Codes => "codes",
            Suite::Bernstein => "bernstein",
            Suite::Qvertex => "qvertex",
            Suite::Shifted => "shifted",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        [Suite::All]
            .into_iter()
            .chain(Suite::EACH)
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sweep bounds. What each field limits depends on the check; see
/// [`Bounds::for_suite`] for the defaults.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// Largest part of enumerated compositions and strict partitions.
    pub max_part: i64,
    /// Longest enumerated composition.
    pub max_len: usize,
    /// Largest size of enumerated partitions.
    pub max_size: i64,
    /// Largest `i` for `λ^(i)`; `λ^[i]` uses half of it.
    pub i_max: u64,
    /// Series are compared for `n ≤ λ_1 + window`.
    pub window: i64,
    /// Number of random words for the reduction check.
    pub random_words: usize,
    pub seed: u64,
}

impl Bounds {
    pub fn for_suite(suite: Suite) -> Bounds {
        let base = Bounds {
            max_part: 6,
            max_len: 5,
            max_size: 10,
            i_max: 20,
            window: 5,
            random_words: 10_000,
            seed: 0x5eed,
        };
        match suite {
            Suite::Codes | Suite::Bernstein | Suite::All => base,
            Suite::Qvertex | Suite::Shifted => Bounds { max_part: 8, ..base },
            Suite::Oracle => Bounds {
                max_part: 5,
                max_len: 4,
                ..base
            },
        }
    }
}

/// One disagreement. `input` names the check and the case.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Failure {
    pub suite: String,
    pub input: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(suite: &str, parts: Vec<VerifyReport>) -> VerifyReport {
        VerifyReport {
            suite: suite.to_string(),
            cases: parts.iter().map(|r| r.cases).sum(),
            elapsed: parts.iter().map(|r| r.elapsed).sum(),
            failures: parts.into_iter().flat_map(|r| r.failures).collect(),
        }
    }
}

impl Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} cases, {} failures, {:.3}s",
            self.suite,
            self.cases,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

/// Runs a suite; `All` runs each suite in turn with the same bounds.
pub fn run_suite(suite: Suite, bounds: &Bounds, execution: Execution) -> VerifyReport {
    match suite {
        Suite::Codes => VerifyReport::merge(
            "codes",
            vec![
                code_round_trip(bounds, execution),
                straightening_agreement(bounds, execution),
                reduction(bounds),
            ],
        ),
        Suite::Bernstein => VerifyReport::merge(
            "bernstein",
            vec![
                vanishing(bounds, execution),
                series_action(bounds, execution),
                prepend_consistency(bounds, execution),
                lambda_sup_agreement(bounds, execution),
            ],
        ),
        Suite::Qvertex => VerifyReport::merge(
            "qvertex",
            vec![
                y_straightening(bounds, execution),
                yn_action_check(bounds, execution),
                q_series_equivalence(bounds, execution),
                lambda_bracket_agreement(bounds, execution),
            ],
        ),
        Suite::Shifted => VerifyReport::merge(
            "shifted",
            vec![shifted_round_trip(bounds, execution), lambda_bracket_agreement(bounds, execution)],
        ),
        Suite::Oracle => VerifyReport::merge(
            "oracle",
            vec![
                bialternant_law(bounds, execution),
                column_exchange(bounds, execution),
                vandermonde(bounds),
            ],
        ),
        Suite::All => {
            let parts = Suite::EACH.iter().map(|&s| run_suite(s, bounds, execution)).collect();
            VerifyReport::merge("all", parts)
        }
    }
}

/// Collects per-case failures into a report.
struct Check {
    suite: &'static str,
    name: &'static str,
}

impl Check {
    fn run<T, F>(&self, execution: Execution, cases: &[T], f: F) -> VerifyReport
    where
        T: Sync,
        F: Fn(&T, &mut Vec<Failure>) + Sync + Send,
    {
        let start = Instant::now();
        let per_case = map_cases(execution, cases, |case| {
            let mut failures = Vec::new();
            f(case, &mut failures);
            failures
        });
        VerifyReport {
            suite: self.suite.to_string(),
            cases: cases.len(),
            failures: per_case.into_iter().flatten().collect(),
            elapsed: start.elapsed(),
        }
    }

    /// Records a failure unless `got == expected`.
    fn expect<T: PartialEq + Display>(
        &self,
        out: &mut Vec<Failure>,
        what: impl Display,
        expected: &Result<T>,
        got: &Result<T>,
    ) {
        if expected != got {
            out.push(self.failure(what, show(expected), show(got)));
        }
    }

    fn failure(&self, what: impl Display, expected: impl Into<String>, got: impl Into<String>) -> Failure {
        Failure {
            suite: self.suite.to_string(),
            input: format!("{} {what}", self.name),
            expected: expected.into(),
            got: got.into(),
        }
    }
}

fn show<T: Display>(value: &Result<T>) -> String {
    match value {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

/// `decode(encode(μ)) = μ` for parts in `0..=max_part`.
pub fn code_round_trip(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "codes",
        name: "code-round-trip",
    };
    let cases = compositions(0, bounds.max_part, bounds.max_len);
    check.run(execution, &cases, |mu, out| {
        let got = encode_code(mu).map(|w| decode_code(&w));
        check.expect(out, mu, &Ok(mu.clone()), &got);
        if let Ok(word) = encode_code(mu) {
            if word.rows() != mu.len() {
                out.push(check.failure(mu, format!("{} rows", mu.len()), format!("{} rows", word.rows())));
            }
        }
    })
}

/// Exchange-rule straightening, the reading algorithm and the exponent sort
/// agree; the exchange rule takes at most as many steps as there are `U`s
/// right of the leftmost `L`.
pub fn straightening_agreement(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "codes",
        name: "straighten",
    };
    let cases = compositions(0, bounds.max_part, bounds.max_len);
    check.run(execution, &cases, |mu, out| {
        let expected = Ok(oracle::exponent_straighten(mu));
        let word = match encode_code(mu) {
            Ok(w) => w,
            Err(e) => return out.push(check.failure(mu, show(&expected), format!("error: {e}"))),
        };
        let traced = straighten_code_traced(&word);
        check.expect(out, format_args!("code {mu}"), &expected, &traced.clone().map(|t| t.result));
        check.expect(out, format_args!("reading {mu}"), &expected, &reading_straighten(&word));
        if let Ok(t) = traced {
            let bound = u_right_of_first_l(&word);
            if t.steps() > bound {
                out.push(check.failure(
                    format_args!("step-bound {mu}"),
                    format!("<= {bound} steps"),
                    format!("{} steps", t.steps()),
                ));
            }
        }
    })
}

fn reduce_in_random_order(raw: &[Letter], rng: &mut ChaCha8Rng) -> Vec<Letter> {
    let mut word = raw.to_vec();
    loop {
        let spots: Vec<usize> = word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| matches!(w, [Letter::L, Letter::R] | [Letter::R, Letter::L]))
            .map(|(p, _)| p)
            .collect();
        if spots.is_empty() {
            return word;
        }
        let p = spots[rng.gen_range(0..spots.len())];
        word.drain(p..p + 2);
    }
}

/// `reduce_word` is idempotent and matches cancellation in random order, on
/// seeded random words.
pub fn reduction(bounds: &Bounds) -> VerifyReport {
    let check = Check {
        suite: "codes",
        name: "reduce",
    };
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let mut failures = Vec::new();
    for _ in 0..bounds.random_words {
        let len = rng.gen_range(0..=24);
        let raw: Vec<Letter> = (0..len)
            .map(|_| [Letter::R, Letter::L, Letter::U][rng.gen_range(0..3)])
            .collect();
        let once = reduce_word(&raw);
        let twice = reduce_word(&once);
        let shuffled = reduce_in_random_order(&raw, &mut rng);
        let text = codes::render_letters(&raw);
        if twice != once {
            failures.push(check.failure(
                format_args!("idempotent {text}"),
                codes::render_letters(&once),
                codes::render_letters(&twice),
            ));
        }
        if shuffled != once {
            failures.push(check.failure(
                format_args!("order {text}"),
                codes::render_letters(&once),
                codes::render_letters(&shuffled),
            ));
        }
    }
    VerifyReport {
        suite: "codes".into(),
        cases: bounds.random_words,
        failures,
        elapsed: start.elapsed(),
    }
}

fn vanishes_by_formula(n: i64, lambda: &Partition) -> bool {
    let l = lambda.len() as i64;
    n < -l || lambda.parts().iter().enumerate().any(|(j, &p)| n == p - (j as i64 + 1))
}

fn action_range(lambda: &Partition) -> std::ops::RangeInclusive<i64> {
    let l = lambda.len() as i64;
    let top = lambda.parts().first().copied().unwrap_or(0);
    (-l - 2)..=(top + 2)
}

/// `B_n s_λ = 0` exactly when `n < −l` or `n = λ_j − j`.
pub fn vanishing(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "bernstein",
        name: "vanishing",
    };
    let cases = partitions(bounds.max_size);
    check.run(execution, &cases, |lambda, out| {
        for n in action_range(lambda) {
            let expected = vanishes_by_formula(n, lambda);
            match bernstein::bn_action(n, lambda) {
                Ok(r) if r.is_zero() == expected => {}
                got => out.push(check.failure(
                    format_args!("n={n} {lambda}"),
                    if expected { "0" } else { "nonzero" },
                    show(&got),
                )),
            }
        }
    })
}

/// Each term of `B(t) s_λ` at `t^n` equals `B_n s_λ`, every nonvanishing `n`
/// has a term, and the indices run `1, 2, 3, …`.
pub fn series_action(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "bernstein",
        name: "series",
    };
    let cases = partitions(bounds.max_size);
    check.run(execution, &cases, |lambda, out| {
        let range = action_range(lambda);
        let terms = match bernstein::bernstein_series_window(lambda, *range.end()) {
            Ok(t) => t,
            Err(e) => return out.push(check.failure(lambda, "series", format!("error: {e}"))),
        };
        for (k, term) in terms.iter().enumerate() {
            if term.i != k as u64 + 1 {
                out.push(check.failure(
                    format_args!("index {lambda}"),
                    format!("i = {}", k + 1),
                    format!("i = {}", term.i),
                ));
            }
        }
        let by_exp: HashMap<i64, Signed<Partition>> = terms.iter().map(|t| (t.t_exp, t.as_signed())).collect();
        if by_exp.len() != terms.len() {
            out.push(check.failure(lambda, "distinct t-exponents", "repeated t-exponent"));
        }
        for n in range {
            let expected = bernstein::bn_action(n, lambda);
            let got = Ok(by_exp.get(&n).cloned().unwrap_or(Signed::Zero));
            check.expect(out, format_args!("n={n} {lambda}"), &expected, &got);
        }
    })
}

/// For `n ≥ 0`, straightening the word `(n, λ)` equals `B_n s_λ`, and the
/// exchange rule's total exponent equals the single-operator exponent.
pub fn prepend_consistency(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "bernstein",
        name: "prepend",
    };
    let cases = partitions(bounds.max_size);
    check.run(execution, &cases, |lambda, out| {
        for n in 0..=*action_range(lambda).end() {
            let mu = lambda.to_composition().prepend(n);
            let action = bn_action_traced(n, lambda);
            let word = encode_code(&mu);
            let straightened = word.as_ref().map_err(Clone::clone).and_then(straighten_code_traced);
            check.expect(
                out,
                format_args!("n={n} {lambda}"),
                &action.clone().map(|a| a.result),
                &straightened.clone().map(|s| s.result),
            );
            if let (Ok(a), Ok(s)) = (action, straightened) {
                if let Some(exponent) = a.sign_exponent {
                    if exponent != s.sign_exponent {
                        out.push(check.failure(
                            format_args!("exponent n={n} {lambda}"),
                            exponent.to_string(),
                            s.sign_exponent.to_string(),
                        ));
                    }
                }
            }
            check.expect(
                out,
                format_args!("straighten_b n={n} {lambda}"),
                &bernstein::bn_action(n, lambda),
                &straighten_b(&mu),
            );
        }
    })
}

/// `λ^(i)` by code and by closed form, `|λ^(i)| − |λ| = i − 1 − j`, and
/// `r_i(λ) = λ_i`.
pub fn lambda_sup_agreement(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "bernstein",
        name: "lambda-sup",
    };
    let cases = partitions(bounds.max_size);
    check.run(execution, &cases, |lambda, out| {
        for i in 1..=bounds.i_max {
            let closed = lambda_sup_closed_form(lambda, i);
            check.expect(out, format_args!("i={i} {lambda}"), &Ok(closed.clone()), &lambda_sup(lambda, i));
            let j = lambda.parts().iter().filter(|&&p| p >= i as i64).count() as i64;
            let diff = closed.size() - lambda.size();
            if diff != i as i64 - 1 - j {
                out.push(check.failure(
                    format_args!("size i={i} {lambda}"),
                    (i as i64 - 1 - j).to_string(),
                    diff.to_string(),
                ));
            }
        }
        for i in 1..=lambda.len() as u64 + 2 {
            check.expect(out, format_args!("r_{i} {lambda}"), &Ok(lambda.part(i as usize)), &r_index(lambda, i));
        }
    })
}

/// Permutation sign, plain-code rule and shifted-code rule agree on `Y_{−μ}`;
/// swapping adjacent parts negates the result.
pub fn y_straightening(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "qvertex",
        name: "y-straighten",
    };
    let cases = compositions(0, bounds.max_part, bounds.max_len);
    check.run(execution, &cases, |mu, out| {
        let perm = straighten_y_perm(mu);
        check.expect(out, format_args!("code {mu}"), &perm, &straighten_y_code(mu));
        if mu.parts().iter().all(|&p| p > 0) {
            let shifted = encode_shifted(mu).and_then(|w| shifted_straighten(&w));
            check.expect(out, format_args!("shifted {mu}"), &perm, &shifted);
        }
        for k in 1..mu.len() {
            let mut swapped = mu.parts().to_vec();
            swapped.swap(k - 1, k);
            let swapped = Composition::new(swapped);
            if let (Ok(a @ Signed::Term(..)), Ok(b @ Signed::Term(..))) = (&perm, straighten_y_perm(&swapped)) {
                if a.clone().negate() != b {
                    out.push(check.failure(format_args!("anticommute {mu} at {k}"), a.clone().negate().to_string(), b.to_string()));
                }
            }
        }
    })
}

fn insertion_formula(n: i64, lambda: &StrictPartition) -> Signed<StrictPartition> {
    if lambda.parts().contains(&n) {
        return Signed::Zero;
    }
    let j = lambda.parts().iter().filter(|&&p| p > n).count();
    let mut parts = lambda.parts().to_vec();
    parts.insert(j, n);
    Signed::Term(Sign::from_exponent(j as u64), StrictPartition::new(parts).expect("insertion keeps strictness"))
}

/// `Y_{−n} Q_λ` against the insertion formula and against straightening
/// `Y_{−(n, λ)}`; zero exactly when `n` is a part.
pub fn yn_action_check(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "qvertex",
        name: "yn-action",
    };
    let cases = strict_partitions(bounds.max_part);
    check.run(execution, &cases, |lambda, out| {
        let top = lambda.parts().first().copied().unwrap_or(0);
        for n in 0..=top + 2 {
            let got = yn_action(n, lambda);
            let what = format!("n={n} {lambda}");
            check.expect(out, &what, &Ok(insertion_formula(n, lambda)), &got);
            check.expect(out, &what, &straighten_y_perm(&lambda.to_composition().prepend(n)), &got);
            if let Ok(r) = &got {
                if r.is_zero() != lambda.parts().contains(&n) {
                    out.push(check.failure(&what, "zero iff n is a part", r.to_string()));
                }
            }
        }
    })
}

/// Both forms of `Y(t) Q_λ` give the same terms for `n ≤ λ_1 + window`, each
/// term equals `Y_{−n} Q_λ` and has size `|λ| + n`.
pub fn q_series_equivalence(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "qvertex",
        name: "q-series",
    };
    let cases = strict_partitions(bounds.max_part);
    check.run(execution, &cases, |lambda, out| {
        let n_max = lambda.parts().first().copied().unwrap_or(0) + bounds.window;
        let j_form = q_series_j_form(lambda, n_max);
        let i_form = q_series_i_form(lambda, n_max as u64).map(|mut terms| {
            terms.retain(|t| t.n <= n_max);
            terms.sort_by_key(|t| t.n);
            terms
        });
        let (j_form, i_form) = match (j_form, i_form) {
            (Ok(a), Ok(b)) => (a, b),
            (a, b) => {
                return out.push(check.failure(
                    lambda,
                    "both forms",
                    format!("{:?} / {:?}", a.err(), b.err()),
                ))
            }
        };
        if j_form != i_form {
            out.push(check.failure(lambda, format!("{j_form:?}"), format!("{i_form:?}")));
        }
        for term in &j_form {
            check.expect(out, format_args!("n={} {lambda}", term.n), &yn_action(term.n, lambda), &Ok(term.as_signed()));
            if term.index.size() != lambda.size() + term.n {
                out.push(check.failure(
                    format_args!("size n={} {lambda}", term.n),
                    (lambda.size() + term.n).to_string(),
                    term.index.size().to_string(),
                ));
            }
        }
        let emitted: Vec<i64> = j_form.iter().map(|t| t.n).collect();
        let expected: Vec<i64> = (0..=n_max).filter(|n| !lambda.parts().contains(n)).collect();
        if emitted != expected {
            out.push(check.failure(format_args!("exponents {lambda}"), format!("{expected:?}"), format!("{emitted:?}")));
        }
    })
}

/// `λ^[i]` by plain code, by shifted code and by insertion.
pub fn lambda_bracket_agreement(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "qvertex",
        name: "lambda-bracket",
    };
    let cases = strict_partitions(bounds.max_part);
    check.run(execution, &cases, |lambda, out| {
        check.expect(out, format_args!("i=0 {lambda}"), &Ok(lambda_bracket_insertion(lambda, 0)), &lambda_bracket(lambda, 0));
        for i in 1..=(bounds.i_max / 2).max(1) {
            let expected = Ok(lambda_bracket_insertion(lambda, i));
            check.expect(out, format_args!("code i={i} {lambda}"), &expected, &lambda_bracket(lambda, i));
            check.expect(out, format_args!("shifted i={i} {lambda}"), &expected, &lambda_bracket_shifted(lambda, i));
        }
    })
}

/// Shifted codes round-trip, and the preshift of the plain code, with its
/// prefix removed, is the shifted code.
pub fn shifted_round_trip(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "shifted",
        name: "shifted-code",
    };
    let cases = compositions(1, bounds.max_part, bounds.max_len);
    check.run(execution, &cases, |mu, out| {
        let word = encode_shifted(mu);
        check.expect(out, format_args!("round-trip {mu}"), &Ok(mu.clone()), &word.clone().map(|w| decode_shifted(&w)));
        let pre = encode_code(mu).and_then(|w| preshift(&w)).and_then(|p| p.to_shifted());
        check.expect(out, format_args!("preshift {mu}"), &word, &pre);
        let straightened = word.and_then(|w| shifted::shifted_straighten(&w));
        check.expect(out, format_args!("straighten {mu}"), &straighten_y_perm(mu), &straightened);
    })
}

/// `s_μ = sign · s_λ` as polynomials in `l` variables, with `(sign, λ)` from
/// the code straightening, and `s_μ = 0` exactly when that is zero.
pub fn bialternant_law(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "oracle",
        name: "bialternant",
    };
    let cases: Vec<Composition> = compositions(0, bounds.max_part, bounds.max_len)
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect();
    check.run(execution, &cases, |mu, out| {
        let l = mu.len();
        let lhs = oracle::schur_poly(mu, l);
        let rhs = straighten_b(mu).and_then(|r| match r {
            Signed::Zero => Ok(IntPolynomial::zero(l)),
            Signed::Term(sign, lambda) => {
                let p = oracle::schur_poly(&lambda.to_composition(), l)?;
                Ok(if sign == Sign::Minus { -p } else { p })
            }
        });
        check.expect(out, mu, &rhs, &lhs);
    })
}

/// Swapping adjacent columns `μ_i, μ_{i+1}` into `μ_{i+1} − 1, μ_i + 1`
/// negates `a_{μ+δ}`.
pub fn column_exchange(bounds: &Bounds, execution: Execution) -> VerifyReport {
    let check = Check {
        suite: "oracle",
        name: "column-exchange",
    };
    let cases: Vec<Composition> = compositions(0, bounds.max_part, bounds.max_len)
        .into_iter()
        .filter(|c| !c.is_empty())
        .collect();
    check.run(execution, &cases, |mu, out| {
        let l = mu.len();
        let e = oracle::exponent_vector(mu.parts());
        let original = oracle::bialternant(&Composition::new(e.clone()), l);
        for k in 1..l {
            let mut swapped = mu.parts().to_vec();
            let (a, b) = (swapped[k - 1], swapped[k]);
            swapped[k - 1] = b - 1;
            swapped[k] = a + 1;
            if swapped[k - 1] < 0 {
                continue;
            }
            let exchanged = oracle::bialternant(&Composition::new(oracle::exponent_vector(&swapped)), l);
            check.expect(out, format_args!("{mu} at {k}"), &original.clone().map(|p| -p), &exchanged);
        }
    })
}

/// `a_δ` equals `∏_{i<j} (x_i − x_j)` for `l ≤ max_len + 1`.
pub fn vandermonde(bounds: &Bounds) -> VerifyReport {
    let check = Check {
        suite: "oracle",
        name: "vandermonde",
    };
    let cases: Vec<usize> = (1..=bounds.max_len + 1).collect();
    check.run(Execution::Sequential, &cases, |&l, out| {
        let det = oracle::bialternant(&Composition::new(oracle::staircase(l)), l);
        check.expect(out, format_args!("l={l}"), &Ok(oracle::vandermonde_product(l)), &det);
    })
}
