//! Bernstein operators on Schur functions, computed on code words.
//!
//! `B_μ` for a composition straightens to `±B_λ` or zero, and
//! `B_μ · 1 = ±s_λ` accordingly. A single operator `B_n` acting on `s_λ` is
//! read off the code of `λ` directly, and the generating series
//! `B(t) s_λ = Σ_i ±t^{|λ^(i)|−|λ|} s_{λ^(i)}` enumerates those actions by `i`.

use crate::codes::{self, decode_letters, encode_code, CodeWord, Letter};
use crate::error::{Error, Result};
use crate::index::{Composition, Family, Partition, Sign, Signed, SignedPartition};

/// `B_μ = sign · B_λ`, or zero.
pub fn straighten_b(mu: &Composition) -> Result<SignedPartition> {
    codes::straighten_code(&encode_code(mu)?)
}

/// Result of `B_n s_λ` with the sign exponent the code rule produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub result: SignedPartition,
    /// `(-1)^sign_exponent` is the sign; `None` when the result is zero.
    pub sign_exponent: Option<u64>,
}

/// `B_n s_λ` as a signed Schur function.
///
/// For `n ≥ λ_1` the word is already decreasing. Otherwise, with
/// `k = λ_1 − n`, the letter `ζ` sitting `k − 1` places left of the rightmost
/// `U` of λ's code decides: `U` gives zero, `R` gives `(−1)^{j+1} s_ν` where
/// `ν` replaces `ζ` by `U` and `j` counts the `U`s strictly between. Positions
/// in the infinite `U` prefix give zero, which covers every `n < −l` (the
/// action on `1` is included in this operation).
pub fn bn_action(n: i64, lambda: &Partition) -> Result<SignedPartition> {
    Ok(bn_action_traced(n, lambda)?.result)
}

pub fn bn_action_traced(n: i64, lambda: &Partition) -> Result<Action> {
    let word = encode_code(&lambda.to_composition())?;
    let top = lambda.parts().first().copied().unwrap_or(0);
    if n >= top {
        let parts = lambda.to_composition().prepend(n).into_parts();
        return Ok(Action {
            result: Signed::Term(Sign::Plus, Partition::new_unchecked(parts)),
            sign_exponent: Some(0),
        });
    }
    let k = (top - n) as isize;
    let rightmost_u = word.letters().len() as isize - 1;
    let zeta = rightmost_u - (k - 1);
    match word.letter_at(zeta) {
        Letter::U => Ok(Action {
            result: Signed::Zero,
            sign_exponent: None,
        }),
        Letter::R => {
            let zeta = zeta as usize;
            let between = codes::count_u(&word.letters()[zeta + 1..rightmost_u as usize]) as u64;
            let mut letters = word.letters().to_vec();
            letters[zeta] = Letter::U;
            let nu = decode_letters(&letters)?;
            let nu = Partition::new(nu.into_parts())
                .map_err(|e| Error::Invariant(format!("B_{n} s_{lambda}: replaced code is not a partition: {e}")))?;
            Ok(Action {
                result: Signed::Term(Sign::from_exponent(between + 1), nu),
                sign_exponent: Some(between + 1),
            })
        }
        Letter::L => Err(Error::Invariant(format!("code of partition {lambda} contains L"))),
    }
}

/// `λ^(i)`: the `i`-th `R` from the left in the code of `λ` (counting into
/// the `R^∞` suffix) becomes `U`. Cross-checked against the closed form
/// `(λ_1−1, …, λ_j−1, i−1, λ_{j+1}, …, λ_l)` with `λ_j ≥ i > λ_{j+1}`.
pub fn lambda_sup(lambda: &Partition, i: u64) -> Result<Partition> {
    if i == 0 {
        return Err(Error::Domain("λ^(i) is defined for i >= 1".into()));
    }
    let word = encode_code(&lambda.to_composition())?;
    let by_code = codes::replace_ith_r(word.letters(), i)?;
    let by_code = Partition::new(decode_letters(&by_code)?.into_parts())?;
    let closed = lambda_sup_closed_form(lambda, i);
    if by_code != closed {
        return Err(Error::Invariant(format!(
            "λ^({i}) of {lambda}: code gives {by_code}, closed form gives {closed}"
        )));
    }
    Ok(by_code)
}

pub fn lambda_sup_closed_form(lambda: &Partition, i: u64) -> Partition {
    let i = i as i64;
    let parts = lambda.parts();
    let j = parts.iter().take_while(|&&p| p >= i).count();
    let mut out: Vec<i64> = parts[..j].iter().map(|p| p - 1).collect();
    out.push(i - 1);
    out.extend_from_slice(&parts[j..]);
    Partition::new_unchecked(out)
}

/// `r_i(λ)`: number of `R`s left of the `i`-th `U` from the right. Equals `λ_i`.
pub fn r_index(lambda: &Partition, i: u64) -> Result<i64> {
    if i == 0 {
        return Err(Error::Domain("r_i is defined for i >= 1".into()));
    }
    let word = encode_code(&lambda.to_composition())?;
    let counted = count_r_left_of_u_from_right(&word, i as usize);
    if counted != lambda.part(i as usize) {
        return Err(Error::Invariant(format!(
            "r_{i}({lambda}) = {counted} but λ_{i} = {}",
            lambda.part(i as usize)
        )));
    }
    Ok(counted)
}

fn count_r_left_of_u_from_right(word: &CodeWord, i: usize) -> i64 {
    let letters = word.letters();
    let u_positions: Vec<usize> = letters
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::U)
        .map(|(p, _)| p)
        .collect();
    if i > u_positions.len() {
        // The U lies in the infinite prefix; nothing is left of it.
        return 0;
    }
    let p = u_positions[u_positions.len() - i];
    codes::count_r(&letters[..p]) as i64
}

/// One summand `(−1)^{sign_exp} t^{t_exp} s_{index}` of `B(t) s_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeriesTerm {
    pub family: Family,
    pub i: u64,
    pub t_exp: i64,
    pub sign_exp: u64,
    pub index: Partition,
}

impl SeriesTerm {
    pub fn sign(&self) -> Sign {
        Sign::from_exponent(self.sign_exp)
    }

    pub fn as_signed(&self) -> SignedPartition {
        Signed::Term(self.sign(), self.index.clone())
    }
}

/// Terms of `B(t) s_λ` for `i = 1 … i_max`.
pub fn bernstein_series(lambda: &Partition, i_max: u64) -> Result<Vec<SeriesTerm>> {
    if i_max == 0 {
        return Err(Error::Domain("i_max must be >= 1".into()));
    }
    (1..=i_max).map(|i| series_term(lambda, i)).collect()
}

/// Terms of `B(t) s_λ` with `t_exp ≤ t_max`.
///
/// `t_exp = i − 1 − j ≥ i − 1 − l` and increases strictly with `i`, so
/// `i ≤ t_max + l + 1` covers the window.
pub fn bernstein_series_window(lambda: &Partition, t_max: i64) -> Result<Vec<SeriesTerm>> {
    let bound = t_max + lambda.len() as i64 + 1;
    if bound < 1 {
        return Ok(Vec::new());
    }
    let mut terms = bernstein_series(lambda, bound as u64)?;
    terms.retain(|t| t.t_exp <= t_max);
    Ok(terms)
}

fn series_term(lambda: &Partition, i: u64) -> Result<SeriesTerm> {
    let index = lambda_sup(lambda, i)?;
    let t_exp = index.size() - lambda.size();
    let sign_exp = lambda.size() - index.size() + i as i64 - 1;
    let sign_exp = u64::try_from(sign_exp)
        .map_err(|_| Error::Invariant(format!("negative sign exponent for λ^({i}) of {lambda}")))?;
    Ok(SeriesTerm {
        family: Family::Schur,
        i,
        t_exp,
        sign_exp,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn c(v: &[i64]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn straighten_b_examples() {
        assert_eq!(straighten_b(&c(&[1, 3, 1, 6, 2])).unwrap(), Signed::Term(Sign::Plus, p(&[3, 3, 3, 2, 2])));
        assert_eq!(straighten_b(&c(&[5, 2])).unwrap(), Signed::Term(Sign::Plus, p(&[5, 2])));
        assert_eq!(straighten_b(&c(&[1, 3])).unwrap(), Signed::Term(Sign::Minus, p(&[2, 2])));
        assert!(matches!(straighten_b(&c(&[1, -3])), Err(Error::Domain(_))));
    }

    #[test]
    fn bn_action_examples() {
        assert_eq!(bn_action(1, &p(&[3, 1])).unwrap(), Signed::Term(Sign::Minus, p(&[2, 2, 1])));
        assert_eq!(bn_action(4, &p(&[2])).unwrap(), Signed::Term(Sign::Plus, p(&[4, 2])));
        assert_eq!(bn_action(2, &p(&[3, 1])).unwrap(), Signed::Zero);
        assert_eq!(bn_action(-3, &p(&[2])).unwrap(), Signed::Zero);
        assert_eq!(bn_action(0, &p(&[])).unwrap(), Signed::Term(Sign::Plus, p(&[0])));
        assert_eq!(bn_action(-1, &p(&[])).unwrap(), Signed::Zero);
    }

    #[test]
    fn lambda_sup_examples() {
        assert_eq!(lambda_sup(&p(&[2, 1]), 2).unwrap(), p(&[1, 1, 1]));
        assert_eq!(lambda_sup(&p(&[]), 4).unwrap(), p(&[3]));
        assert_eq!(lambda_sup(&p(&[2, 1]), 3).unwrap(), p(&[2, 2, 1]));
        assert!(matches!(lambda_sup(&p(&[2, 1]), 0), Err(Error::Domain(_))));
    }

    #[test]
    fn r_index_examples() {
        assert_eq!(r_index(&p(&[4, 2, 2, 1]), 1).unwrap(), 4);
        assert_eq!(r_index(&p(&[4, 2, 2, 1]), 3).unwrap(), 2);
        assert_eq!(r_index(&p(&[3]), 2).unwrap(), 0);
    }

    #[test]
    fn series_examples() {
        let terms = bernstein_series(&p(&[]), 4).unwrap();
        let got: Vec<(i64, u64, Vec<i64>)> = terms.iter().map(|t| (t.t_exp, t.sign_exp, t.index.parts().to_vec())).collect();
        assert_eq!(got, vec![(0, 0, vec![0]), (1, 0, vec![1]), (2, 0, vec![2]), (3, 0, vec![3])]);

        let terms = bernstein_series(&p(&[1]), 3).unwrap();
        let got: Vec<(Sign, i64, Vec<i64>)> = terms.iter().map(|t| (t.sign(), t.t_exp, t.index.parts().to_vec())).collect();
        assert_eq!(
            got,
            vec![(Sign::Minus, -1, vec![0, 0]), (Sign::Plus, 1, vec![1, 1]), (Sign::Plus, 2, vec![2, 1])]
        );
    }

    #[test]
    fn prepend_term_is_positive() {
        for lambda in [p(&[3, 1]), p(&[2, 2, 1]), p(&[5])] {
            let top = lambda.parts()[0];
            let terms = bernstein_series_window(&lambda, top).unwrap();
            let last = terms.last().unwrap();
            assert_eq!(last.t_exp, top);
            assert_eq!(last.sign(), Sign::Plus);
            assert_eq!(last.index, Partition::new(lambda.to_composition().prepend(top).into_parts()).unwrap());
        }
    }
}
