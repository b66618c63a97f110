//! Shifted codes: edge traces of shifted Young diagrams.
//!
//! The trace starts at `x = l`, the bottom-right corner of the leftmost box
//! on the bottom row, and nothing lies left of the stored word. The same
//! exchange rule that straightens Bernstein words straightens these, and the
//! result is the `Y`-side normal form.

use std::fmt;

use crate::codes::{
    self, exchange_step, heights_at_u, parse_letters, reduce_word, render_letters, trim_tail, CodeWord, Letter,
    LeftBoundary, StepOutcome, Straightening,
};
use crate::error::{Error, Result};
use crate::index::{Composition, Sign, Signed, SignedStrict, StrictPartition};

/// A reduced shifted code segment; the full code is `letters · R^∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShiftedCodeWord {
    letters: Vec<Letter>,
    rows: usize,
}

impl ShiftedCodeWord {
    pub fn from_letters(raw: &[Letter]) -> Result<ShiftedCodeWord> {
        let mut letters = reduce_word(raw);
        trim_tail(&mut letters);
        decode_shifted_letters(&letters)?;
        let rows = codes::count_u(&letters);
        Ok(ShiftedCodeWord { letters, rows })
    }

    pub fn parse(text: &str) -> Result<ShiftedCodeWord> {
        ShiftedCodeWord::from_letters(&parse_letters(text)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
}

impl fmt::Display for ShiftedCodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters))
    }
}

/// Shifted code of a composition with positive parts. At the `i`-th `U` from
/// the right the trace sits at `x = μ_i + i − 1`.
pub fn encode_shifted(mu: &Composition) -> Result<ShiftedCodeWord> {
    mu.ensure_positive()?;
    let parts = mu.parts();
    let l = parts.len();
    let mut letters = Vec::new();
    if let Some(&bottom) = parts.last() {
        codes::push_moves(&mut letters, bottom - 1);
        letters.push(Letter::U);
        for i in (0..l - 1).rev() {
            codes::push_moves(&mut letters, parts[i] - parts[i + 1] - 1);
            letters.push(Letter::U);
        }
    }
    let letters = reduce_word(&letters);
    Ok(ShiftedCodeWord { letters, rows: l })
}

pub fn decode_shifted(word: &ShiftedCodeWord) -> Composition {
    decode_shifted_letters(&word.letters).expect("ShiftedCodeWord is validated on construction")
}

/// Decodes a shifted segment, reading the anchor from the number of `U`s.
pub fn decode_shifted_letters(letters: &[Letter]) -> Result<Composition> {
    let l = codes::count_u(letters);
    let heights = heights_at_u(letters, l as i64);
    let parts: Vec<i64> = heights
        .iter()
        .rev()
        .enumerate()
        .map(|(i, x)| x - i as i64)
        .collect();
    if let Some(bad) = parts.iter().find(|&&p| p < 1) {
        return Err(Error::InvalidCode(format!(
            "shifted code {} has a part {bad} < 1",
            render_letters(letters)
        )));
    }
    Ok(Composition::new(parts))
}

/// A code with every `U` replaced by `UL`, reduced. The conceptual prefix
/// `…ULULU` is not stored; `body` is what remains after removing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreshiftedWord {
    body: Vec<Letter>,
}

impl PreshiftedWord {
    pub const PREFIX: &'static str = "...ULULU";

    pub fn strip_prefix(&self) -> &[Letter] {
        &self.body
    }

    pub fn to_shifted(&self) -> Result<ShiftedCodeWord> {
        ShiftedCodeWord::from_letters(&self.body)
    }

    pub fn render(&self) -> String {
        format!("{}{}", Self::PREFIX, render_letters(&self.body))
    }
}

impl fmt::Display for PreshiftedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Substitutes `U ↦ UL` in the doubly infinite code and reduces.
///
/// The prefix `…UUU` turns into `…ULULUL`; its final `L` is kept in front of
/// the stored letters so that it cancels against the word's first `R`. What
/// remains after the `…ULULU` prefix is the shifted code, provided every part
/// is positive (otherwise the leading `L` survives).
pub fn preshift(word: &CodeWord) -> Result<PreshiftedWord> {
    let mut raw = vec![Letter::L];
    for &letter in word.letters() {
        raw.push(letter);
        if letter == Letter::U {
            raw.push(Letter::L);
        }
    }
    let mut body = reduce_word(&raw);
    trim_tail(&mut body);
    if body.first() == Some(&Letter::L) {
        return Err(Error::Domain(format!(
            "preshift of {word} needs all parts >= 1"
        )));
    }
    Ok(PreshiftedWord { body })
}

/// Straightens a shifted code with the shared exchange rule.
pub fn shifted_straighten(word: &ShiftedCodeWord) -> Result<SignedStrict> {
    Ok(shifted_straighten_traced(word)?.result)
}

pub fn shifted_straighten_traced(word: &ShiftedCodeWord) -> Result<Straightening<StrictPartition>> {
    let rows = word.rows;
    let size = decode_shifted(word).size();
    let mut letters = word.letters.clone();
    let mut run = Straightening {
        result: Signed::Zero,
        sign_exponent: 0,
        step_exponents: Vec::new(),
        words: Vec::new(),
        relations: Vec::new(),
    };
    loop {
        match exchange_step(&mut letters, LeftBoundary::Finite, &mut run.relations)? {
            StepOutcome::Normal => break,
            StepOutcome::Vanishes => return Ok(run),
            StepOutcome::Rewritten(flips) => {
                codes::check_conservation(decode_shifted_letters(&letters), rows, size, &letters)?;
                run.sign_exponent += flips;
                run.step_exponents.push(flips);
                run.words.push(letters.clone());
            }
        }
    }
    let parts = codes::check_conservation(decode_shifted_letters(&letters), rows, size, &letters)?;
    let lambda = StrictPartition::new(parts.into_parts())
        .map_err(|e| Error::Invariant(format!("L-free shifted code is not strict: {e}")))?;
    run.result = Signed::Term(Sign::from_exponent(run.sign_exponent), lambda);
    Ok(run)
}

/// `λ^[i]` by replacing the `i`-th `R` of λ's shifted code with `U`; must
/// agree with the insertion definition.
pub fn lambda_bracket_shifted(lambda: &StrictPartition, i: u64) -> Result<StrictPartition> {
    if i == 0 {
        return Err(Error::Domain("the shifted-code λ^[i] needs i >= 1".into()));
    }
    lambda.ensure_positive()?;
    let word = encode_shifted(&lambda.to_composition())?;
    let replaced = codes::replace_ith_r(word.letters(), i)?;
    let by_code = StrictPartition::new(decode_shifted_letters(&replaced)?.into_parts())
        .map_err(|e| Error::Invariant(format!("λ^[{i}] of {lambda} by shifted code is not strict: {e}")))?;
    let by_insertion = crate::qvertex::lambda_bracket_insertion(lambda, i);
    if by_code != by_insertion {
        return Err(Error::Invariant(format!(
            "λ^[{i}] of {lambda}: shifted code gives {by_code}, insertion gives {by_insertion}"
        )));
    }
    Ok(by_code)
}
