use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ExponentVector, TPoly};
use crate::error::{Error, Result};
use crate::rational::{factorial_table, from_biguint, Rational};

/// `<t^k, t^k> = prod_j k_j!`.
pub fn monomial_norm(exponents: &ExponentVector) -> BigUint {
    let max = exponents.exponents().iter().copied().max().unwrap_or(0) as usize;
    let table = factorial_table(max);
    exponents
        .exponents()
        .iter()
        .fold(BigUint::one(), |acc, &k| acc * &table[k as usize])
}

/// Gaussian moment pairing
/// `<p, q> = sum_k p_k q_k prod_j k_j!`.
///
/// This is the planar Gaussian integral
/// `pi^-r \int p(t) conj(q(t)) prod_j exp(-|t_j|^2) dA(t_j)` with rational
/// coefficients, where conjugation does nothing. Monomials are orthogonal, so
/// only exponent vectors present in both polynomials contribute.
pub fn gaussian_pairing(p: &TPoly, q: &TPoly) -> Result<Rational> {
    if p.nvars() != q.nvars() {
        return Err(Error::VariableCountMismatch {
            left: p.nvars(),
            right: q.nvars(),
        });
    }
    let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
    let max_exp = small
        .terms()
        .flat_map(|(e, _)| e.exponents().iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let factorials = factorial_table(max_exp);
    let mut total = Rational::zero();
    for (e, a) in small.terms() {
        let b = large.coefficient(e);
        if b.is_zero() {
            continue;
        }
        let norm = e
            .exponents()
            .iter()
            .fold(BigUint::one(), |acc, &k| acc * &factorials[k as usize]);
        total += a * b * from_biguint(&norm);
    }
    Ok(total)
}
