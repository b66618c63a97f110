//! Ground truth that does not touch code words.
//!
//! [`exponent_straighten`] sorts the shifted exponent vector `μ + δ`; the
//! alternant determinant `a_{μ+δ}` changes sign under exactly the exchange
//! that relates operator words, so this is a cheap independent check of every
//! code-based straightening. [`bialternant`] and [`schur_poly`] compute the
//! same objects as exact polynomials in `l` variables.

mod poly;

pub use poly::{IntPolynomial, Monomial};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::index::{Composition, Partition, Sign, Signed, SignedPartition};

/// `δ = (l−1, l−2, …, 1, 0)`.
pub fn staircase(l: usize) -> Vec<i64> {
    (0..l as i64).rev().collect()
}

/// `μ + δ`.
pub fn exponent_vector(mu: &[i64]) -> Vec<i64> {
    mu.iter().zip(staircase(mu.len())).map(|(m, d)| m + d).collect()
}

/// Sorts `μ + δ` into strictly decreasing order, tracking the parity of the
/// sorting permutation. Accepts negative parts.
pub fn exponent_straighten(mu: &Composition) -> SignedPartition {
    let e = exponent_vector(mu.parts());
    let mut inversions = 0u64;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            match e[i].cmp(&e[j]) {
                std::cmp::Ordering::Equal => return Signed::Zero,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = e;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let lambda: Vec<i64> = sorted
        .iter()
        .zip(staircase(sorted.len()))
        .map(|(s, d)| s - d)
        .collect();
    Signed::Term(Sign::from_exponent(inversions), Partition::new_unchecked(lambda))
}

/// Determinant by cofactor expansion, memoised on the set of columns still
/// available, so `2^n` minors are computed instead of `n!`.
pub fn determinant(matrix: &[Vec<IntPolynomial>], nvars: usize) -> IntPolynomial {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < usize::BITS as usize, "matrix too large");
    // minors[mask] = determinant of the bottom |mask| rows restricted to the
    // columns in mask.
    let mut minors: Vec<Option<IntPolynomial>> = vec![None; 1 << n];
    minors[0] = Some(IntPolynomial::constant(nvars, 1));
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = n - mask.count_ones() as usize;
        let mut acc = IntPolynomial::zero(nvars);
        for (rank, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
            let minor = minors[mask & !(1 << col)].as_ref().expect("smaller minors first");
            if minor.is_zero() || matrix[row][col].is_zero() {
                continue;
            }
            let product = &matrix[row][col] * minor;
            acc = if rank % 2 == 0 { &acc + &product } else { &acc - &product };
        }
        minors[mask] = Some(acc);
    }
    minors.pop().flatten().expect("full minor")
}

/// `a_μ = det(x_i^{μ_j})` in `l` variables.
pub fn bialternant(mu: &Composition, l: usize) -> Result<IntPolynomial> {
    if mu.len() != l {
        return Err(Error::Domain(format!("{mu} has length {} but l = {l}", mu.len())));
    }
    mu.ensure_nonnegative()?;
    let matrix: Vec<Vec<IntPolynomial>> = (0..l)
        .map(|i| {
            mu.parts()
                .iter()
                .map(|&m| IntPolynomial::power_of_variable(l, i, m as u32))
                .collect()
        })
        .collect();
    Ok(determinant(&matrix, l))
}

/// `∏_{i<j} (x_i − x_j)`, computed by multiplication.
pub fn vandermonde_product(l: usize) -> IntPolynomial {
    let mut acc = IntPolynomial::constant(l, BigInt::one());
    for i in 0..l {
        for j in i + 1..l {
            let factor = &IntPolynomial::power_of_variable(l, i, 1) - &IntPolynomial::power_of_variable(l, j, 1);
            acc = &acc * &factor;
        }
    }
    acc
}

/// `s_μ(x_1, …, x_l) = a_{μ+δ} / a_δ`, by exact division.
pub fn schur_poly(mu: &Composition, l: usize) -> Result<IntPolynomial> {
    if l == 0 {
        return Err(Error::Domain("schur_poly needs at least one variable".into()));
    }
    if mu.len() != l {
        return Err(Error::Domain(format!("{mu} has length {} but l = {l}", mu.len())));
    }
    mu.ensure_nonnegative()?;
    let numerator = bialternant(&Composition::new(exponent_vector(mu.parts())), l)?;
    if numerator.is_zero() {
        return Ok(numerator);
    }
    let denominator = bialternant(&Composition::new(staircase(l)), l)?;
    numerator.exact_div(&denominator).ok_or_else(|| {
        Error::Invariant(format!("a_(μ+δ) for μ = {mu} is not divisible by the Vandermonde"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: &[i64]) -> Composition {
        Composition::new(v.to_vec())
    }

    #[test]
    fn exponent_straighten_examples() {
        let r = exponent_straighten(&c(&[1, 3, 1, 6, 2]));
        assert_eq!(r, Signed::Term(Sign::Plus, Partition::new(vec![3, 3, 3, 2, 2]).unwrap()));
        assert_eq!(exponent_vector(&[1, 3, 1, 6, 2]), vec![5, 6, 3, 7, 2]);
        assert_eq!(exponent_straighten(&c(&[2, 3])), Signed::Zero);
        assert_eq!(
            exponent_straighten(&c(&[1, 3])),
            Signed::Term(Sign::Minus, Partition::new(vec![2, 2]).unwrap())
        );
        // Negative parts are fine here: e = (-3) stays put.
        assert_eq!(
            exponent_straighten(&c(&[-3])),
            Signed::Term(Sign::Plus, Partition::new(vec![-3]).unwrap())
        );
    }

    #[test]
    fn bialternant_examples() {
        assert_eq!(bialternant(&c(&[1, 0]), 2).unwrap().to_string(), "1*x1 - 1*x2");
        assert_eq!(bialternant(&c(&[2, 0]), 2).unwrap().to_string(), "1*x1^2 - 1*x2^2");
        assert!(bialternant(&c(&[3, 1, 3]), 3).unwrap().is_zero());
        assert!(bialternant(&c(&[1]), 2).is_err());
    }

    #[test]
    fn schur_poly_examples() {
        assert_eq!(schur_poly(&c(&[1, 0]), 2).unwrap().to_string(), "1*x1 + 1*x2");
        assert_eq!(schur_poly(&c(&[2, 1]), 2).unwrap().to_string(), "1*x1^2*x2 + 1*x1*x2^2");
        assert!(schur_poly(&c(&[2, 3]), 2).unwrap().is_zero());
        // s_(1,3) = -s_(2,2) in two variables.
        assert_eq!(
            schur_poly(&c(&[1, 3]), 2).unwrap(),
            -schur_poly(&c(&[2, 2]), 2).unwrap()
        );
    }

    #[test]
    fn staircase_is_vandermonde() {
        for l in 1..=4 {
            assert_eq!(bialternant(&c(&staircase(l)), l).unwrap(), vandermonde_product(l));
        }
    }
}
