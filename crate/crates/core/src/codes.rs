//! Code words of compositions and the straightening of Bernstein operator
//! words on them.
//!
//! The full code of a composition is the doubly infinite word
//! `U^∞ · letters · R^∞`. A [`CodeWord`] stores only `letters`: the trace from
//! the first step of the bottom row up to the `U` that reaches the x-axis.
//! Leading `U`s (zero rows at the bottom) are kept, so the stored word
//! determines the length of the composition.
//!
//! Two straightening algorithms are provided. [`straighten_code`] iterates the
//! single-run exchange rule; [`reading_straighten`] is the two-pointer
//! read-and-delete procedure. They must agree on every input.

use std::fmt;

use crate::error::{Error, Result};
use crate::index::{Composition, Partition, Sign, Signed, SignedPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Unit step right.
    R,
    /// Unit step left.
    L,
    /// Unit step up.
    U,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
            Letter::U => 'U',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'R' => Some(Letter::R),
            'L' => Some(Letter::L),
            'U' => Some(Letter::U),
            _ => None,
        }
    }

    fn cancels(self, next: Letter) -> bool {
        matches!((self, next), (Letter::L, Letter::R) | (Letter::R, Letter::L))
    }
}

pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    text.trim()
        .chars()
        .map(|c| {
            Letter::from_char(c)
                .ok_or_else(|| Error::Parse(format!("letter {c:?} is not one of R, L, U")))
        })
        .collect()
}

pub fn render_letters(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// Deletes adjacent `LR` and `RL` pairs until none remain.
///
/// Between consecutive `U`s only the net horizontal displacement survives, so
/// the result does not depend on the order of deletions.
pub fn reduce_word(raw: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for &letter in raw {
        match out.last() {
            Some(&top) if top.cancels(letter) => {
                out.pop();
            }
            _ => out.push(letter),
        }
    }
    out
}

/// Drops letters after the last `U`: trailing `R`s belong to the infinite
/// suffix and trailing `L`s cancel against it.
pub(crate) fn trim_tail(letters: &mut Vec<Letter>) {
    let keep = letters
        .iter()
        .rposition(|&l| l == Letter::U)
        .map_or(0, |p| p + 1);
    letters.truncate(keep);
}

pub(crate) fn count_u(letters: &[Letter]) -> usize {
    letters.iter().filter(|&&l| l == Letter::U).count()
}

pub(crate) fn count_r(letters: &[Letter]) -> usize {
    letters.iter().filter(|&&l| l == Letter::R).count()
}

/// Replaces the `i`-th `R` (1-based, reading into the `R^∞` suffix) with `U`.
pub(crate) fn replace_ith_r(letters: &[Letter], i: u64) -> Result<Vec<Letter>> {
    if i == 0 {
        return Err(Error::Domain("R positions are counted from 1".into()));
    }
    let mut out = letters.to_vec();
    let r_count = count_r(letters) as u64;
    if i > r_count {
        out.extend(std::iter::repeat_n(Letter::R, (i - r_count) as usize));
    }
    let position = out
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == Letter::R)
        .nth((i - 1) as usize)
        .map(|(p, _)| p)
        .ok_or_else(|| Error::Invariant(format!("no R number {i}")))?;
    out[position] = Letter::U;
    trim_tail(&mut out);
    Ok(out)
}

/// Reads x-positions at each `U`, starting from `x_start`. Entry `i` of the
/// result belongs to the `i`-th `U` from the left (the bottom row first).
pub(crate) fn heights_at_u(letters: &[Letter], x_start: i64) -> Vec<i64> {
    let mut x = x_start;
    let mut out = Vec::new();
    for &letter in letters {
        match letter {
            Letter::R => x += 1,
            Letter::L => x -= 1,
            Letter::U => out.push(x),
        }
    }
    out
}

/// Decodes a plain code segment; parts must come out nonnegative.
pub fn decode_letters(letters: &[Letter]) -> Result<Composition> {
    let mut parts = heights_at_u(letters, 0);
    parts.reverse();
    if let Some(p) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::InvalidCode(format!(
            "{} decodes to a negative part {p}",
            render_letters(letters)
        )));
    }
    Ok(Composition::new(parts))
}

/// Canonical finite code of a composition with nonnegative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeWord {
    letters: Vec<Letter>,
    rows: usize,
}

impl CodeWord {
    /// Reduces and trims `raw`, then checks that it decodes to a composition
    /// with nonnegative parts.
    pub fn from_letters(raw: &[Letter]) -> Result<CodeWord> {
        let mut letters = reduce_word(raw);
        trim_tail(&mut letters);
        decode_letters(&letters)?;
        let rows = count_u(&letters);
        Ok(CodeWord { letters, rows })
    }

    pub fn parse(text: &str) -> Result<CodeWord> {
        CodeWord::from_letters(&parse_letters(text)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of rows, i.e. the length of the encoded composition.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Letter at `offset`, reading into the `U` prefix and `R` suffix.
    pub fn letter_at(&self, offset: isize) -> Letter {
        virtual_letter(&self.letters, offset, LeftBoundary::UPrefix).expect("U prefix is unbounded")
    }

    pub fn has_l(&self) -> bool {
        self.letters.contains(&Letter::L)
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_letters(&self.letters))
    }
}

/// Code of `mu`: bottom row first, `R^{μ_l} U`, then the net horizontal move
/// `μ_i − μ_{i+1}` followed by `U` for each row above.
pub fn encode_code(mu: &Composition) -> Result<CodeWord> {
    mu.ensure_nonnegative()?;
    let parts = mu.parts();
    let mut letters = Vec::new();
    let mut x = 0i64;
    for &part in parts.iter().rev() {
        push_moves(&mut letters, part - x);
        letters.push(Letter::U);
        x = part;
    }
    Ok(CodeWord {
        rows: parts.len(),
        letters,
    })
}

pub(crate) fn push_moves(letters: &mut Vec<Letter>, delta: i64) {
    let letter = if delta >= 0 { Letter::R } else { Letter::L };
    letters.extend(std::iter::repeat_n(letter, delta.unsigned_abs() as usize));
}

pub fn decode_code(word: &CodeWord) -> Composition {
    decode_letters(&word.letters).expect("CodeWord is validated on construction")
}

/// What lies beyond the left end of a stored word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeftBoundary {
    /// The infinite `…UUU` prefix of a plain code.
    UPrefix,
    /// Nothing: shifted codes start at the first stored letter.
    Finite,
}

/// Letter at `offset`, with the `R^∞` suffix on the right and the given
/// boundary on the left. `None` means the offset is off a finite left end.
pub(crate) fn virtual_letter(letters: &[Letter], offset: isize, boundary: LeftBoundary) -> Option<Letter> {
    if offset < 0 {
        match boundary {
            LeftBoundary::UPrefix => Some(Letter::U),
            LeftBoundary::Finite => None,
        }
    } else {
        Some(letters.get(offset as usize).copied().unwrap_or(Letter::R))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// The moving block passed an `R`; no sign change.
    PermutePastR,
    /// The moving block passed a `U`; the sign flips.
    PermutePastU,
    /// `RLU → U`, or an `LR`/`RL` cancellation.
    Cancel,
    /// `ULU ∼ 0`: the word vanishes.
    Zero,
}

/// One elementary relation applied during straightening. `position` is the
/// offset in the word current at that step; negative offsets are in the
/// virtual `U` prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RelationStep {
    pub kind: RelationKind,
    pub position: isize,
    pub sign_flip: bool,
}

impl RelationStep {
    fn new(kind: RelationKind, position: isize) -> Self {
        RelationStep {
            kind,
            position,
            sign_flip: kind == RelationKind::PermutePastU,
        }
    }
}

/// Full record of a straightening run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Straightening<I> {
    pub result: Signed<I>,
    /// The sign of a nonzero result is `(-1)^sign_exponent`.
    pub sign_exponent: u64,
    /// Exponent contributed by each rewrite, in order.
    pub step_exponents: Vec<u64>,
    /// Word after each rewrite.
    pub words: Vec<Vec<Letter>>,
    /// Elementary relations, in order (empty for the reading algorithm).
    pub relations: Vec<RelationStep>,
}

impl<I> Straightening<I> {
    fn new() -> Self {
        Straightening {
            result: Signed::Zero,
            sign_exponent: 0,
            step_exponents: Vec::new(),
            words: Vec::new(),
            relations: Vec::new(),
        }
    }

    pub fn steps(&self) -> usize {
        self.step_exponents.len()
    }

    fn record(&mut self, exponent: u64, word: &[Letter]) {
        self.sign_exponent += exponent;
        self.step_exponents.push(exponent);
        self.words.push(word.to_vec());
    }

    fn sign(&self) -> Sign {
        Sign::from_exponent(self.sign_exponent)
    }
}

pub(crate) enum StepOutcome {
    /// No `L` left.
    Normal,
    Vanishes,
    /// Rewritten with this many sign flips.
    Rewritten(u64),
}

/// One application of the exchange rule to a reduced word.
///
/// Writing the word as `…β_2 β_1 L^k U γ` around its leftmost `L`-run, the
/// letter `β_k` decides the outcome: `U` means the word vanishes, `R` is
/// replaced by `U` while `L^k U` becomes `L^{k−1}`, and the sign flips once per
/// `U` among `β_{k−1} … β_1`. Plain codes and shifted codes share this rule;
/// they differ only in what lies beyond the left end.
pub(crate) fn exchange_step(
    letters: &mut Vec<Letter>,
    boundary: LeftBoundary,
    relations: &mut Vec<RelationStep>,
) -> Result<StepOutcome> {
    let Some(start) = letters.iter().position(|&l| l == Letter::L) else {
        return Ok(StepOutcome::Normal);
    };
    let run = letters[start..].iter().take_while(|&&l| l == Letter::L).count();
    if letters.get(start + run) != Some(&Letter::U) {
        return Err(Error::InvalidCode(format!(
            "{}: L-run at {start} is not followed by U",
            render_letters(letters)
        )));
    }
    let start_i = start as isize;
    let k = run as isize;
    let mut flips = 0;
    for offset in 1..k {
        let position = start_i - offset;
        let letter = virtual_letter(letters, position, boundary).ok_or_else(|| off_left_end(letters))?;
        let kind = match letter {
            Letter::U => {
                flips += 1;
                RelationKind::PermutePastU
            }
            Letter::R => RelationKind::PermutePastR,
            Letter::L => return Err(not_reduced(letters)),
        };
        relations.push(RelationStep::new(kind, position));
    }
    let target = start_i - k;
    match virtual_letter(letters, target, boundary) {
        None => Err(off_left_end(letters)),
        Some(Letter::L) => Err(not_reduced(letters)),
        Some(Letter::U) => {
            relations.push(RelationStep::new(RelationKind::Zero, target));
            Ok(StepOutcome::Vanishes)
        }
        Some(Letter::R) => {
            relations.push(RelationStep::new(RelationKind::Cancel, target));
            letters[target as usize] = Letter::U;
            letters.remove(start + run);
            letters.remove(start);
            let before = letters.len();
            *letters = reduce_word(letters);
            for _ in 0..(before - letters.len()) / 2 {
                relations.push(RelationStep::new(RelationKind::Cancel, start_i));
            }
            trim_tail(letters);
            Ok(StepOutcome::Rewritten(flips))
        }
    }
}

fn off_left_end(letters: &[Letter]) -> Error {
    Error::InvalidCode(format!(
        "{}: exchange runs off the left end of a finite word",
        render_letters(letters)
    ))
}

fn not_reduced(letters: &[Letter]) -> Error {
    Error::InvalidCode(format!("{} is not reduced", render_letters(letters)))
}

/// Decodes an intermediate word and checks it against the input's length
/// and size.
pub(crate) fn check_conservation(
    decoded: Result<Composition>,
    rows: usize,
    size: i64,
    letters: &[Letter],
) -> Result<Composition> {
    let c = decoded.map_err(|e| {
        Error::Invariant(format!(
            "intermediate word {} is not a valid code: {e}",
            render_letters(letters)
        ))
    })?;
    if c.len() != rows || c.size() != size {
        return Err(Error::Invariant(format!(
            "intermediate word {} decodes to {c}, expected length {rows} and size {size}",
            render_letters(letters)
        )));
    }
    Ok(c)
}

/// Straightens `B_μ` by iterating the exchange rule on the leftmost `L`-run.
pub fn straighten_code(word: &CodeWord) -> Result<SignedPartition> {
    Ok(straighten_code_traced(word)?.result)
}

pub fn straighten_code_traced(word: &CodeWord) -> Result<Straightening<Partition>> {
    let size = decode_code(word).size();
    let rows = word.rows();
    let mut letters = word.letters.clone();
    let mut run = Straightening::new();
    loop {
        match exchange_step(&mut letters, LeftBoundary::UPrefix, &mut run.relations)? {
            StepOutcome::Normal => break,
            StepOutcome::Vanishes => return Ok(run),
            StepOutcome::Rewritten(flips) => {
                check_conservation(decode_letters(&letters), rows, size, &letters)?;
                run.record(flips, &letters);
            }
        }
    }
    let parts = check_conservation(decode_letters(&letters), rows, size, &letters)?;
    let partition = Partition::new(parts.into_parts())
        .map_err(|e| Error::Invariant(format!("L-free word is not a partition: {e}")))?;
    run.result = Signed::Term(run.sign(), partition);
    Ok(run)
}

/// Read-and-delete straightening.
///
/// A read pointer starts at the leftmost `L` and a current position starts on
/// the same letter. Reading `L` or `R` moves the current position; reading `U`
/// either finds a `U` under the current position (the word vanishes) or turns
/// the `R` there into `U`, adds the number of `U`s between the two positions
/// to the sign exponent, and steps right. A pass ends when the current
/// position reaches the next unread letter; passes repeat while `L`s remain.
pub fn reading_straighten(word: &CodeWord) -> Result<SignedPartition> {
    Ok(reading_straighten_letters(word.letters())?.result)
}

/// Read-and-delete straightening of an arbitrary, possibly unreduced, word.
pub fn reading_straighten_letters(raw: &[Letter]) -> Result<Straightening<Partition>> {
    let ls = raw.iter().filter(|&&l| l == Letter::L).count();
    let pad = ls + 1;
    let mut word = vec![Letter::U; pad];
    word.extend_from_slice(raw);
    let mut run = Straightening::new();

    while let Some(start) = word.iter().position(|&l| l == Letter::L) {
        let mut kept = word[..start].to_vec();
        let mut read = start;
        let mut current = kept.len() as isize;
        loop {
            let letter = word.get(read).copied().unwrap_or(Letter::R);
            read += 1;
            match letter {
                Letter::L => current -= 1,
                Letter::R => current += 1,
                Letter::U => {
                    let at = usize::try_from(current)
                        .map_err(|_| Error::Invariant("reading pointer left the padded prefix".into()))?;
                    match kept[at] {
                        Letter::U => return Ok(run),
                        Letter::L => return Err(Error::Invariant("L left of the leftmost L".into())),
                        Letter::R => {
                            let between = count_u(&kept[at + 1..]) as u64;
                            kept[at] = Letter::U;
                            current += 1;
                            let mut snapshot = kept.clone();
                            snapshot.extend_from_slice(&word[read.min(word.len())..]);
                            run.record(between, strip_pad(&snapshot, pad));
                        }
                    }
                }
            }
            if current == kept.len() as isize {
                break;
            }
        }
        kept.extend_from_slice(&word[read.min(word.len())..]);
        word = kept;
    }

    if word[..pad].iter().any(|&l| l != Letter::U) {
        return Err(Error::Invariant("padding prefix was rewritten".into()));
    }
    let mut letters = word[pad..].to_vec();
    trim_tail(&mut letters);
    let parts = decode_letters(&letters)?;
    let partition = Partition::new(parts.into_parts())
        .map_err(|e| Error::Invariant(format!("L-free word is not a partition: {e}")))?;
    run.result = Signed::Term(run.sign(), partition);
    Ok(run)
}

fn strip_pad(word: &[Letter], pad: usize) -> &[Letter] {
    &word[pad.min(word.len())..]
}

/// Number of `U`s strictly right of the leftmost `L`; bounds the number of
/// exchange steps.
pub fn u_right_of_first_l(word: &CodeWord) -> usize {
    match word.letters.iter().position(|&l| l == Letter::L) {
        Some(p) => count_u(&word.letters[p..]),
        None => 0,
    }
}
