//! Sparse multivariate polynomials over arbitrary-precision integers.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed as _, Zero};

/// Exponent vector of a monomial, ordered graded-lexicographically: total
/// degree first, then exponents compared from `x1` on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `nvars` variables with exact integer coefficients. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl IntPolynomial {
    pub fn zero(nvars: usize) -> Self {
        IntPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        IntPolynomial::term(Monomial::one(nvars), c.into())
    }

    pub fn term(monomial: Monomial, coefficient: BigInt) -> Self {
        let mut p = IntPolynomial::zero(monomial.0.len());
        if !coefficient.is_zero() {
            p.terms.insert(monomial, coefficient);
        }
        p
    }

    /// `x_{var+1}^power` (variables are 0-based here, 1-based when rendered).
    pub fn power_of_variable(nvars: usize, var: usize, power: u32) -> Self {
        let mut e = vec![0; nvars];
        e[var] = power;
        IntPolynomial::term(Monomial(e), BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, monomial: Monomial, coefficient: BigInt) {
        use std::collections::btree_map::Entry;
        match terms.entry(monomial) {
            Entry::Vacant(v) => {
                if !coefficient.is_zero() {
                    v.insert(coefficient);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coefficient;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &BigInt) -> IntPolynomial {
        if factor.is_zero() {
            return IntPolynomial::zero(self.nvars);
        }
        IntPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    /// Multivariate division with remainder by the graded-lex leading term.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
        assert_eq!(self.nvars, divisor.nvars, "variable count mismatch");
        let (lead_m, lead_c) = divisor.leading_term().expect("division by the zero polynomial");
        let mut rest = self.terms.clone();
        let mut quotient = BTreeMap::new();
        let mut remainder = BTreeMap::new();
        while let Some((m, c)) = rest.pop_last() {
            let q_m = match m.quotient(lead_m) {
                Some(q_m) if (&c % lead_c).is_zero() => q_m,
                _ => {
                    remainder.insert(m, c);
                    continue;
                }
            };
            let q_c = &c / lead_c;
            for (d_m, d_c) in divisor.terms.iter().rev().skip(1) {
                IntPolynomial::add_term(&mut rest, d_m.times(&q_m), -(&q_c * d_c));
            }
            quotient.insert(q_m, q_c);
        }
        (
            IntPolynomial {
                nvars: self.nvars,
                terms: quotient,
            },
            IntPolynomial {
                nvars: self.nvars,
                terms: remainder,
            },
        )
    }

    /// Quotient of an exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            IntPolynomial::add_term(&mut terms, m.clone(), c.clone());
        }
        IntPolynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut terms = BTreeMap::new();
        for (a_m, a_c) in &self.terms {
            for (b_m, b_c) in &rhs.terms {
                IntPolynomial::add_term(&mut terms, a_m.times(b_m), a_c * b_c);
            }
        }
        IntPolynomial {
            nvars: self.nvars,
            terms,
        }
    }
}

/// Canonical text: terms in decreasing graded-lex order, coefficients always
/// written, exponent 1 omitted, e.g. `1*x1^2*x2 - 3*x1*x2^2 + 2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{}", c.abs())?;
            for (var, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", var + 1)?,
                    _ => write!(f, "*x{}^{}", var + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
