//! Twisted vertex operators `Y_{−n}` and Schur Q-functions.
//!
//! The operators anticommute, so `Y_{−μ}` straightens by sorting `μ` with the
//! permutation sign ([`straighten_y_perm`]). The same answer is reached on
//! plain codes ([`straighten_y_code`]) and on shifted codes
//! ([`shifted::shifted_straighten`](crate::shifted::shifted_straighten)).
//!
//! On plain codes, the stored word's left end acts as a wall for the `Y`
//! rules: the `U^∞` prefix carries no `Y_0` factors, so inserting a `U` at the
//! very front (a trailing zero part) is a genuine insertion. Adjacent `UU`
//! inside the stored word is a repeated part and the word vanishes.

use crate::codes::{
    self, check_conservation, decode_letters, encode_code, render_letters, reduce_word, trim_tail,
    Letter, RelationKind, RelationStep, Straightening,
};
use crate::error::{Error, Result};
use crate::index::{Composition, Family, Sign, Signed, SignedStrict, StrictPartition};

/// `Y_{−μ} = sgn(σ) Y_{−σ(μ)}` with `σ(μ)` strictly decreasing, or zero when
/// `μ` repeats a part.
pub fn straighten_y_perm(mu: &Composition) -> Result<SignedStrict> {
    mu.ensure_nonnegative()?;
    let parts = mu.parts();
    let mut inversions = 0u64;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            match parts[i].cmp(&parts[j]) {
                std::cmp::Ordering::Equal => return Ok(Signed::Zero),
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Signed::Term(
        Sign::from_exponent(inversions),
        StrictPartition::new_unchecked(sorted),
    ))
}

/// Straightens `Y_{−μ}` on the plain code of `μ`.
pub fn straighten_y_code(mu: &Composition) -> Result<SignedStrict> {
    Ok(straighten_y_code_traced(mu)?.result)
}

fn has_adjacent_u(letters: &[Letter]) -> bool {
    letters.windows(2).any(|w| w == [Letter::U, Letter::U])
}

/// Around the leftmost `L`-run, `…β_2 β_1 L^k U γ`: let `k + j` be the
/// shortest stretch `β_{k+j} … β_1` holding `k` `R`s. If `β_{k+j+1}` is `U` the
/// word vanishes; otherwise the `U` after `L^k` moves to just right of
/// `β_{k+j+1}` (the `L^k` stays) and the sign flips `j` times.
pub fn straighten_y_code_traced(mu: &Composition) -> Result<Straightening<StrictPartition>> {
    let word = encode_code(mu)?;
    let rows = word.rows();
    let size = mu.size();
    let mut letters = word.letters().to_vec();
    let mut run = Straightening {
        result: Signed::Zero,
        sign_exponent: 0,
        step_exponents: Vec::new(),
        words: Vec::new(),
        relations: Vec::new(),
    };
    if has_adjacent_u(&letters) {
        return Ok(run);
    }
    // Each step removes at least one U right of the leftmost L.
    for _ in 0..=rows {
        let Some(start) = letters.iter().position(|&l| l == Letter::L) else {
            let parts = check_conservation(decode_letters(&letters), rows, size, &letters)?;
            let lambda = StrictPartition::new(parts.into_parts())
                .map_err(|e| Error::Invariant(format!("L-free word without UU is not strict: {e}")))?;
            run.result = Signed::Term(Sign::from_exponent(run.sign_exponent), lambda);
            return Ok(run);
        };
        let k = letters[start..].iter().take_while(|&&l| l == Letter::L).count();
        if letters.get(start + k) != Some(&Letter::U) {
            return Err(Error::InvalidCode(format!(
                "{}: L-run at {start} is not followed by U",
                render_letters(&letters)
            )));
        }
        let mut r_seen = 0;
        let mut flips = 0u64;
        let mut position = start as isize - 1;
        while r_seen < k {
            if position < 0 {
                return Err(Error::InvalidCode(format!(
                    "{}: fewer than {k} R's left of the L-run",
                    render_letters(&letters)
                )));
            }
            let kind = match letters[position as usize] {
                Letter::R => {
                    r_seen += 1;
                    RelationKind::PermutePastR
                }
                Letter::U => {
                    flips += 1;
                    RelationKind::PermutePastU
                }
                Letter::L => return Err(Error::InvalidCode(format!("{} is not reduced", render_letters(&letters)))),
            };
            run.relations.push(RelationStep {
                kind,
                position,
                sign_flip: kind == RelationKind::PermutePastU,
            });
            position -= 1;
        }
        if position >= 0 && letters[position as usize] == Letter::U {
            run.relations.push(RelationStep {
                kind: RelationKind::Zero,
                position,
                sign_flip: false,
            });
            return Ok(run);
        }
        letters.remove(start + k);
        letters.insert((position + 1) as usize, Letter::U);
        letters = reduce_word(&letters);
        trim_tail(&mut letters);
        check_conservation(decode_letters(&letters), rows, size, &letters)?;
        run.sign_exponent += flips;
        run.step_exponents.push(flips);
        run.words.push(letters.clone());
        if has_adjacent_u(&letters) {
            return Ok(run);
        }
    }
    Err(Error::Invariant(format!(
        "straightening {mu} on its code did not terminate within {} steps",
        rows + 1
    )))
}

/// `Y_{−n} Q_λ` as a signed Q-function.
///
/// For `n > λ_1` the word is already decreasing and `n = λ_1` vanishes. For
/// smaller `n`, with `k = λ_1 − n`, the letter `ζ` just left of the `k`-th `R`
/// left of the rightmost `U` in λ's code decides: `U` gives zero, otherwise a
/// `U` is inserted after `ζ` and the sign is `(−1)^{j+1}` with `j` the number of
/// `U`s strictly between. For `n = 0` the position of `ζ` is the left wall and
/// zero is inserted as a trailing part.
pub fn yn_action(n: i64, lambda: &StrictPartition) -> Result<SignedStrict> {
    if n < 0 {
        return Err(Error::Domain(format!("Y_(-n) needs n >= 0, got n = {n}")));
    }
    lambda.ensure_positive()?;
    let top = lambda.parts().first().copied().unwrap_or(-1);
    if n > top {
        let parts = lambda.to_composition().prepend(n).into_parts();
        return Ok(Signed::Term(Sign::Plus, StrictPartition::new_unchecked(parts)));
    }
    if n == top {
        return Ok(Signed::Zero);
    }
    let word = encode_code(&lambda.to_composition())?;
    let letters = word.letters();
    let rightmost_u = letters.len() - 1;
    let k = (top - n) as usize;
    let kth_r = letters[..rightmost_u]
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &l)| l == Letter::R)
        .nth(k - 1)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::Invariant(format!("code of {lambda} has fewer than {k} R's")))?;
    // ζ sits at kth_r - 1; kth_r == 0 means ζ is the wall.
    if kth_r > 0 && letters[kth_r - 1] == Letter::U {
        return Ok(Signed::Zero);
    }
    let between = codes::count_u(&letters[kth_r..rightmost_u]) as u64;
    let mut out = letters.to_vec();
    out.insert(kth_r, Letter::U);
    let nu = decode_letters(&out)?;
    let nu = StrictPartition::new(nu.into_parts())
        .map_err(|e| Error::Invariant(format!("Y_(-{n}) Q_{lambda}: inserted code is not strict: {e}")))?;
    Ok(Signed::Term(Sign::from_exponent(between + 1), nu))
}

/// `λ^[i]`: the `i`-th smallest positive integer missing from `λ`, inserted.
/// `i = 0` appends the formal zero part.
///
/// The code computation (a `U` between the `i`-th adjacent `RR` pair) and the
/// insertion computation must agree.
pub fn lambda_bracket(lambda: &StrictPartition, i: u64) -> Result<StrictPartition> {
    lambda.ensure_positive()?;
    let by_insertion = lambda_bracket_insertion(lambda, i);
    if i == 0 {
        return Ok(by_insertion);
    }
    let mut letters = encode_code(&lambda.to_composition())?.letters().to_vec();
    letters.extend(std::iter::repeat_n(Letter::R, i as usize + 1));
    let position = letters
        .windows(2)
        .enumerate()
        .filter(|(_, w)| *w == [Letter::R, Letter::R])
        .nth((i - 1) as usize)
        .map(|(p, _)| p + 1)
        .ok_or_else(|| Error::Invariant(format!("no RR pair number {i}")))?;
    letters.insert(position, Letter::U);
    trim_tail(&mut letters);
    let by_code = StrictPartition::new(decode_letters(&letters)?.into_parts())
        .map_err(|e| Error::Invariant(format!("λ^[{i}] of {lambda} by code is not strict: {e}")))?;
    if by_code != by_insertion {
        return Err(Error::Invariant(format!(
            "λ^[{i}] of {lambda}: code gives {by_code}, insertion gives {by_insertion}"
        )));
    }
    Ok(by_code)
}

/// Insertion-level `λ^[i]`, no code involved.
pub fn lambda_bracket_insertion(lambda: &StrictPartition, i: u64) -> StrictPartition {
    let value = if i == 0 {
        0
    } else {
        (1i64..)
            .filter(|v| !lambda.parts().contains(v))
            .nth((i - 1) as usize)
            .expect("infinitely many absent integers")
    };
    insert_part(lambda, value)
}

fn insert_part(lambda: &StrictPartition, value: i64) -> StrictPartition {
    let j = lambda.parts().iter().take_while(|&&p| p > value).count();
    let mut parts = lambda.parts().to_vec();
    parts.insert(j, value);
    StrictPartition::new_unchecked(parts)
}

/// One summand `(−1)^{sign_exp} t^n Q_{index}` of `Y(t) Q_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QSeriesTerm {
    /// Exponent of `t`, equal to the inserted part.
    pub n: i64,
    /// Number of parts of `λ` left of the insertion.
    pub j: usize,
    /// `index = λ^[i]`.
    pub i: u64,
    pub sign_exp: i64,
    pub index: StrictPartition,
}

impl QSeriesTerm {
    pub fn family(&self) -> Family {
        Family::SchurQ
    }

    pub fn sign(&self) -> Sign {
        Sign::from_exponent(self.sign_exp.unsigned_abs())
    }

    pub fn as_signed(&self) -> SignedStrict {
        Signed::Term(self.sign(), self.index.clone())
    }
}

fn sign_exponent_by_size(lambda: &StrictPartition, index: &StrictPartition, i: u64) -> i64 {
    lambda.len() as i64 + lambda.size() - index.size() + i as i64
}

/// `Y(t) Q_λ` grouped by insertion position: for each `j`, the parts
/// `n ∈ (λ_{j+1}, λ_j)` with sign `(−1)^j`, using `λ_0 = ∞` and
/// `λ_{l+1} = −1`. The unbounded `j = 0` block stops at `n_max`. Terms are
/// ordered by `n`.
pub fn q_series_j_form(lambda: &StrictPartition, n_max: i64) -> Result<Vec<QSeriesTerm>> {
    lambda.ensure_positive()?;
    if n_max < 0 {
        return Err(Error::Domain("n_max must be >= 0".into()));
    }
    let parts = lambda.parts();
    let l = parts.len();
    let mut terms = Vec::new();
    for j in 0..=l {
        let lo = if j == l { 0 } else { parts[j] + 1 };
        let hi = if j == 0 { n_max } else { (parts[j - 1] - 1).min(n_max) };
        for n in lo..=hi {
            let index = insert_part(lambda, n);
            let i = n - l as i64 + j as i64;
            let i = u64::try_from(i).map_err(|_| Error::Invariant(format!("negative λ^[i] index for n = {n}")))?;
            let sign_exp = sign_exponent_by_size(lambda, &index, i);
            if sign_exp != j as i64 {
                return Err(Error::Invariant(format!(
                    "Q-series of {lambda} at n = {n}: sign exponent {sign_exp} != j = {j}"
                )));
            }
            terms.push(QSeriesTerm {
                n,
                j,
                i,
                sign_exp,
                index,
            });
        }
    }
    terms.sort_by_key(|t| t.n);
    Ok(terms)
}

/// `Y(t) Q_λ` indexed by `i = 0 … i_max` through `λ^[i]`, with sign
/// `(−1)^{l + |λ| − |λ^[i]| + i}` and `t`-exponent `|λ^[i]| − |λ|`.
pub fn q_series_i_form(lambda: &StrictPartition, i_max: u64) -> Result<Vec<QSeriesTerm>> {
    lambda.ensure_positive()?;
    (0..=i_max)
        .map(|i| {
            let index = lambda_bracket(lambda, i)?;
            let n = index.size() - lambda.size();
            let j = lambda.parts().iter().take_while(|&&p| p > n).count();
            let sign_exp = sign_exponent_by_size(lambda, &index, i);
            if sign_exp != j as i64 {
                return Err(Error::Invariant(format!(
                    "Q-series of {lambda} at i = {i}: sign exponent {sign_exp} != j = {j}"
                )));
            }
            Ok(QSeriesTerm {
                n,
                j,
                i,
                sign_exp,
                index,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn sp(v: &[i64]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn perm_examples() {
        assert_eq!(straighten_y_perm(&c(&[2, 3])).unwrap(), Signed::Term(Sign::Minus, sp(&[3, 2])));
        assert_eq!(straighten_y_perm(&c(&[3, 3])).unwrap(), Signed::Zero);
        assert_eq!(straighten_y_perm(&c(&[1, 3, 2])).unwrap(), Signed::Term(Sign::Plus, sp(&[3, 2, 1])));
    }

    #[test]
    fn code_examples() {
        for mu in [&[2, 3][..], &[3, 3], &[1, 3, 2], &[2, 3, 2], &[0, 1], &[0, 2, 1], &[0, 0]] {
            let mu = c(mu);
            assert_eq!(straighten_y_code(&mu).unwrap(), straighten_y_perm(&mu).unwrap(), "{mu}");
        }
    }

    #[test]
    fn yn_action_examples() {
        assert_eq!(yn_action(2, &sp(&[3])).unwrap(), Signed::Term(Sign::Minus, sp(&[3, 2])));
        assert_eq!(yn_action(3, &sp(&[3])).unwrap(), Signed::Zero);
        assert_eq!(yn_action(5, &sp(&[3, 1])).unwrap(), Signed::Term(Sign::Plus, sp(&[5, 3, 1])));
        assert_eq!(yn_action(0, &sp(&[2, 1])).unwrap(), Signed::Term(Sign::Plus, sp(&[2, 1, 0])));
        assert_eq!(yn_action(1, &sp(&[2, 1])).unwrap(), Signed::Zero);
        assert_eq!(yn_action(0, &sp(&[])).unwrap(), Signed::Term(Sign::Plus, sp(&[0])));
        assert!(matches!(yn_action(-1, &sp(&[2])), Err(Error::Domain(_))));
    }

    #[test]
    fn lambda_bracket_examples() {
        assert_eq!(lambda_bracket(&sp(&[3, 1]), 1).unwrap(), sp(&[3, 2, 1]));
        assert_eq!(lambda_bracket(&sp(&[3, 1]), 2).unwrap(), sp(&[4, 3, 1]));
        assert_eq!(lambda_bracket(&sp(&[]), 1).unwrap(), sp(&[1]));
        assert_eq!(lambda_bracket(&sp(&[2]), 0).unwrap(), sp(&[2, 0]));
    }

    fn summary(terms: &[QSeriesTerm]) -> Vec<(Sign, i64, Vec<i64>)> {
        terms.iter().map(|t| (t.sign(), t.n, t.index.parts().to_vec())).collect()
    }

    #[test]
    fn j_form_examples() {
        assert_eq!(
            summary(&q_series_j_form(&sp(&[]), 3).unwrap()),
            vec![
                (Sign::Plus, 0, vec![0]),
                (Sign::Plus, 1, vec![1]),
                (Sign::Plus, 2, vec![2]),
                (Sign::Plus, 3, vec![3])
            ]
        );
        assert_eq!(
            summary(&q_series_j_form(&sp(&[2]), 3).unwrap()),
            vec![
                (Sign::Minus, 0, vec![2, 0]),
                (Sign::Minus, 1, vec![2, 1]),
                (Sign::Plus, 3, vec![3, 2])
            ]
        );
    }

    #[test]
    fn i_form_examples() {
        let terms = q_series_i_form(&sp(&[2]), 1).unwrap();
        assert_eq!(terms[1].sign_exp, 1);
        assert_eq!(summary(&terms[1..]), vec![(Sign::Minus, 1, vec![2, 1])]);
        assert_eq!(summary(&terms[..1]), vec![(Sign::Minus, 0, vec![2, 0])]);
        assert_eq!(
            summary(&q_series_i_form(&sp(&[]), 2).unwrap()),
            vec![(Sign::Plus, 0, vec![0]), (Sign::Plus, 1, vec![1]), (Sign::Plus, 2, vec![2])]
        );
    }
}
