use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use super::{check_params, gessel_row};
use crate::det::DetAlgorithm;
use crate::error::{Error, Result};
use crate::rational::{factorial, from_biguint, Rational};

/// Number of words with each of `n` letters used `r` times: `(rn)! / (r!)^n`.
pub fn total_words(r: usize, n: usize) -> BigUint {
    factorial(r * n) / factorial(r).pow(n as u32)
}

/// `Prob(L <= d)` for a uniformly random word, as an exact rational.
pub fn prob_lis_le(d: usize, r: usize, n: usize) -> Result<Rational> {
    check_params(d, r)?;
    let count = super::count_via_gessel(d, r, n)?;
    Ok(Rational::new(count.value.into(), total_words(r, n).into()))
}

/// `sum_{n=0}^{N} Prob(L_{n,r} <= d) theta^n / n!`, without the `e^{-theta}`
/// prefactor.
pub fn poissonized_partial_sum(
    d: usize,
    r: usize,
    theta: &Rational,
    n_terms: usize,
) -> Result<Rational> {
    check_params(d, r)?;
    if theta.is_negative() {
        return Err(Error::InvalidArgument("theta must be nonnegative".into()));
    }
    let row = gessel_row(d, r, n_terms, DetAlgorithm::Auto)?;
    let mut total = Rational::zero();
    let mut theta_power = Rational::one();
    for (n, count) in row.iter().enumerate() {
        if n > 0 {
            theta_power = theta_power * theta / Rational::from_integer(n.into());
        }
        let prob = from_biguint(&count.value) / from_biguint(&total_words(r, n));
        total += prob * &theta_power;
    }
    Ok(total)
}
