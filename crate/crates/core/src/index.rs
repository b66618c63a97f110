//! Index objects shared by every algebra: compositions, partitions, strict
//! partitions, and the signed normal form that straightening produces.
//!
//! Lengths are explicit everywhere. `(2,0)` and `(2)` are different values
//! because `B_2 B_0` and `B_2` are different operator words.

use std::fmt;

use crate::error::{Error, Result};

/// A finite integer sequence with order and zero parts significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<i64>);

/// A weakly decreasing integer sequence.
///
/// Parts are nonnegative except for results of
/// [`exponent_straighten`](crate::oracle::exponent_straighten) on inputs with
/// negative parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<i64>);

/// A strictly decreasing integer sequence. A single trailing `0` can occur as
/// the formal `Y_0` insertion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<i64>);

macro_rules! index_common {
    ($ty:ident) => {
        impl AsRef<[i64]> for $ty {
            fn as_ref(&self) -> &[i64] {
                &self.0
            }
        }

        impl $ty {
            pub fn parts(&self) -> &[i64] {
                &self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Sum of the parts.
            pub fn size(&self) -> i64 {
                self.0.iter().sum()
            }

            pub fn into_parts(self) -> Vec<i64> {
                self.0
            }

            /// Canonical comma-joined rendering, e.g. `3,3,3,2,2`.
            pub fn render(&self) -> String {
                render_parts(&self.0)
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({})", self.render())
            }
        }
    };
}

index_common!(Composition);
index_common!(Partition);
index_common!(StrictPartition);

impl Composition {
    pub fn new(parts: Vec<i64>) -> Self {
        Composition(parts)
    }

    /// Domain check used by every code-based operation.
    pub fn ensure_nonnegative(&self) -> Result<()> {
        match self.0.iter().find(|&&p| p < 0) {
            Some(p) => Err(Error::Domain(format!(
                "negative part {p} in {self}; codes need parts >= 0"
            ))),
            None => Ok(()),
        }
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.0.iter().find(|&&p| p <= 0) {
            Some(p) => Err(Error::Domain(format!(
                "part {p} in {self}; shifted codes need parts >= 1"
            ))),
            None => Ok(()),
        }
    }

    pub fn classify(&self) -> Shape {
        classify(&self.0)
    }

    /// Composition obtained by prepending `n`.
    pub fn prepend(&self, n: i64) -> Composition {
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(n);
        parts.extend_from_slice(&self.0);
        Composition(parts)
    }
}

impl From<Vec<i64>> for Composition {
    fn from(parts: Vec<i64>) -> Self {
        Composition(parts)
    }
}

impl From<&[i64]> for Composition {
    fn from(parts: &[i64]) -> Self {
        Composition(parts.to_vec())
    }
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Ok(Partition(parts))
        } else {
            Err(Error::Domain(format!(
                "({}) is not weakly decreasing",
                render_parts(&parts)
            )))
        }
    }

    pub(crate) fn new_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        if i == 0 || i > self.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl StrictPartition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).all(|w| w[0] > w[1]) {
            Ok(StrictPartition(parts))
        } else {
            Err(Error::Domain(format!(
                "({}) is not strictly decreasing",
                render_parts(&parts)
            )))
        }
    }

    pub(crate) fn new_unchecked(parts: Vec<i64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        StrictPartition(parts)
    }

    pub fn to_composition(&self) -> Composition {
        Composition(self.0.clone())
    }

    pub fn ensure_positive(&self) -> Result<()> {
        match self.0.last() {
            Some(&p) if p <= 0 => Err(Error::Domain(format!(
                "{self} has a part {p}; positive parts required"
            ))),
            _ => Ok(()),
        }
    }
}

/// Shape of an integer sequence, most specific first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    StrictPartition,
    Partition,
    General,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::StrictPartition => "strict-partition",
            Shape::Partition => "partition",
            Shape::General => "general",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify(parts: &[i64]) -> Shape {
    if parts.windows(2).all(|w| w[0] > w[1]) {
        Shape::StrictPartition
    } else if parts.windows(2).all(|w| w[0] >= w[1]) {
        Shape::Partition
    } else {
        Shape::General
    }
}

pub fn render_parts(parts: &[i64]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&p.to_string());
    }
    out
}

/// Parses comma- and/or whitespace-separated integers, keeping negative
/// parts. Only the exponent oracle accepts those; see [`parse_index`].
pub fn parse_integers(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::Parse(format!("empty entry in {text:?}")));
        }
        for token in piece.split_whitespace() {
            let value = token
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {token:?}")))?;
            parts.push(value);
        }
    }
    Ok(parts)
}

/// Parses an index list for the code machinery: zero parts are kept,
/// negative parts are a domain error.
pub fn parse_index(text: &str) -> Result<Composition> {
    let composition = Composition(parse_integers(text)?);
    composition.ensure_nonnegative()?;
    Ok(composition)
}

/// Which symmetric-function family a series term belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Schur functions `s_λ`, produced by Bernstein operators.
    Schur,
    /// Schur Q-functions `Q_λ`, produced by the twisted vertex operators.
    SchurQ,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Schur => "schur",
            Family::SchurQ => "schurQ",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: u64) -> Sign {
        if exponent.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i32(value: i32) -> Option<Sign> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// Zero, or a sign paired with an index: the normal form of a straightened
/// operator word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Signed<I> {
    Zero,
    Term(Sign, I),
}

pub type SignedPartition = Signed<Partition>;
pub type SignedStrict = Signed<StrictPartition>;

impl<I> Signed<I> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Signed::Zero)
    }

    pub fn sign(&self) -> Option<Sign> {
        match self {
            Signed::Zero => None,
            Signed::Term(s, _) => Some(*s),
        }
    }

    pub fn index(&self) -> Option<&I> {
        match self {
            Signed::Zero => None,
            Signed::Term(_, index) => Some(index),
        }
    }

    pub fn negate(self) -> Self {
        match self {
            Signed::Zero => Signed::Zero,
            Signed::Term(s, index) => Signed::Term(s.flip(), index),
        }
    }

    pub fn map<J>(self, f: impl FnOnce(I) -> J) -> Signed<J> {
        match self {
            Signed::Zero => Signed::Zero,
            Signed::Term(s, index) => Signed::Term(s, f(index)),
        }
    }
}

/// Sign flip of a straightening result; `Zero` stays `Zero`.
pub fn negate<I>(result: Signed<I>) -> Signed<I> {
    result.negate()
}

impl Signed<Partition> {
    /// Parts of the index, for comparisons across index types.
    pub fn parts(&self) -> Option<&[i64]> {
        self.index().map(|p| p.parts())
    }
}

impl Signed<StrictPartition> {
    pub fn parts(&self) -> Option<&[i64]> {
        self.index().map(|p| p.parts())
    }
}

impl<I: fmt::Display> fmt::Display for Signed<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Signed::Zero => f.write_str("0"),
            Signed::Term(s, index) => write!(f, "{s} * {index}"),
        }
    }
}
