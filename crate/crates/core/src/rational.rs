//! Exact rationals and the small integer helpers shared across modules.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_biguint(value: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(value.clone()))
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `0!, 1!, ..., max!`.
pub fn factorial_table(max: usize) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(max + 1);
    let mut acc = BigUint::one();
    table.push(acc.clone());
    for k in 1..=max as u64 {
        acc *= k;
        table.push(acc.clone());
    }
    table
}

/// Odd double factorial `(2m-1)!!`, with `(-1)!! = 1`.
pub fn odd_double_factorial(m: usize) -> BigUint {
    (1..=m as u64).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

/// Returns the value as a nonnegative integer, or `None` if it is fractional
/// or negative.
pub fn to_natural(value: &Rational) -> Option<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return None;
    }
    value.to_integer().to_biguint()
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}
