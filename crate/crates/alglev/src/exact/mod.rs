//! Exact scalar, polynomial and matrix arithmetic.
//!
//! Everything in this crate computes over the rationals (or polynomial
//! rings over them); there is no floating point anywhere.

mod laurent;
mod matrix;
mod mpoly;

pub use laurent::LaurentPoly;
pub(crate) use laurent::laurent_gcd;
pub use matrix::{rational_eigenvalues, ExactMatrix, SpectrumError};
pub use mpoly::MPoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational scalar, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(v: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for the fraction `p/q`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q` with an optional leading sign.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(BigRational::new(num, den))
            }
        }
        None => {
            let num: BigInt = text.parse().ok()?;
            Some(BigRational::from_integer(num))
        }
    }
}

/// Ring of coefficients usable inside [`ExactMatrix`].
///
/// `exact_div` must return `Some(q)` with `q * rhs == self` whenever such a
/// quotient exists in the ring; fraction-free elimination only ever asks for
/// divisions that are exact.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    /// Number of stored terms; used only as a pivot-selection heuristic.
    fn term_count(&self) -> usize {
        1
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
}

/// Collects the positive divisors of `n` by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let sq = &d * &d;
        if sq > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            if sq != n {
                large.push(&n / &d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar("-3/4"), Some(frac(-3, 4)));
        assert_eq!(parse_scalar("6/4"), Some(frac(3, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("x"), None);
    }

    #[test]
    fn scalar_displays_in_lowest_terms() {
        assert_eq!(frac(6, 4).to_string(), "3/2");
        assert_eq!(frac(-6, 3).to_string(), "-2");
    }

    #[test]
    fn divisor_enumeration() {
        let ds = divisors(&BigInt::from(12));
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(ds, expect);
    }
}
