use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::{cycle_index, schur, Partition};
use crate::error::{Error, Result};
use crate::polyring::{gaussian_pairing, TPoly};
use crate::rational::{factorial, to_natural};

/// Number of standard Young tableaux of shape `lambda`, by the hook-length
/// formula.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    let hooks = lambda
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    factorial(lambda.weight()) / hooks
}

/// Kostka number `K_{lambda,(r^n)}`: semistandard tableaux of shape `lambda`
/// in which each of `1..=n` occurs exactly `r` times.
///
/// Computed as the Gaussian pairing of `s_lambda(t_1..t_r)` with `Cyc_r^n`.
pub fn kostka_g(lambda: &Partition, r: usize, n: usize) -> Result<BigUint> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity r must be at least 1".into(),
        ));
    }
    if lambda.weight() != r * n {
        return Err(Error::WeightMismatch {
            weight: lambda.weight(),
            expected: r * n,
        });
    }
    kostka_against(lambda, &cycle_index(r).pow(n))
}

/// Pairs `s_lambda` with a precomputed `Cyc_r^n`; `r` is read off the
/// polynomial's variable count.
pub(crate) fn kostka_against(lambda: &Partition, cyc_power: &TPoly) -> Result<BigUint> {
    let s = schur(lambda, cyc_power.nvars());
    let value = gaussian_pairing(&s, cyc_power)?;
    to_natural(&value).ok_or_else(|| {
        Error::Invariant(format!(
            "pairing for Kostka number of {lambda} is {value}, not a natural number"
        ))
    })
}

/// Counts semistandard tableaux of shape `lambda` with the given content by
/// adding one horizontal strip per letter. Independent of the polynomial
/// machinery.
pub fn kostka_ssyt_oracle(lambda: &Partition, content: &[usize]) -> BigUint {
    if content.iter().sum::<usize>() != lambda.weight() {
        return BigUint::ZERO;
    }
    count_fillings(lambda.parts(), content)
}

fn count_fillings(target: &[usize], content: &[usize]) -> BigUint {
    fn next_letter(target: &[usize], shape: &[usize], content: &[usize]) -> BigUint {
        match content.split_first() {
            None => {
                if shape == target {
                    BigUint::one()
                } else {
                    BigUint::ZERO
                }
            }
            Some((&count, rest)) => {
                let mut grown = shape.to_vec();
                add_strip(target, shape, &mut grown, 0, count, rest)
            }
        }
    }

    // Adds `left` cells of one letter as a horizontal strip on top of
    // `before`, choosing row lengths in `grown` from row `row` downwards.
    fn add_strip(
        target: &[usize],
        before: &[usize],
        grown: &mut Vec<usize>,
        row: usize,
        left: usize,
        rest: &[usize],
    ) -> BigUint {
        if left == 0 {
            return next_letter(target, grown, rest);
        }
        if row == target.len() {
            return BigUint::ZERO;
        }
        // column strictness: a new cell in row i sits under an old cell
        let ceiling = if row == 0 {
            target[0]
        } else {
            target[row].min(before[row - 1])
        };
        let base = before[row];
        let mut total = BigUint::ZERO;
        for add in 0..=ceiling.saturating_sub(base).min(left) {
            grown[row] = base + add;
            total += add_strip(target, before, grown, row + 1, left - add, rest);
        }
        grown[row] = base;
        total
    }

    next_letter(target, &alloc::vec![0; target.len()], content)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn standard_tableaux() {
        assert_eq!(f_lambda(&p(&[5])), big(1));
        assert_eq!(f_lambda(&p(&[2, 1])), big(2));
        assert_eq!(f_lambda(&p(&[2, 2])), big(2));
        assert_eq!(f_lambda(&p(&[3, 2])), big(5));
        assert_eq!(f_lambda(&Partition::empty()), big(1));
    }

    #[test]
    fn kostka_by_pairing() {
        assert_eq!(kostka_g(&p(&[3]), 3, 1).unwrap(), big(1));
        assert_eq!(kostka_g(&p(&[2, 2]), 2, 2).unwrap(), big(1));
        assert_eq!(kostka_g(&p(&[3, 1]), 2, 2).unwrap(), big(1));
        assert_eq!(kostka_g(&Partition::empty(), 2, 0).unwrap(), big(1));
    }

    #[test]
    fn kostka_weight_mismatch() {
        assert_eq!(
            kostka_g(&p(&[3]), 2, 2).unwrap_err(),
            Error::WeightMismatch {
                weight: 3,
                expected: 4
            }
        );
    }

    #[test]
    fn ssyt_oracle() {
        assert_eq!(kostka_ssyt_oracle(&p(&[2]), &[1, 1]), big(1));
        assert_eq!(kostka_ssyt_oracle(&p(&[1, 1]), &[2, 0]), big(0));
        assert_eq!(kostka_ssyt_oracle(&p(&[2, 1]), &[1, 1, 1]), big(2));
        assert_eq!(kostka_ssyt_oracle(&p(&[2, 2]), &[2, 2]), big(1));
        assert_eq!(kostka_ssyt_oracle(&p(&[3, 1]), &[2, 2]), big(1));
        assert_eq!(kostka_ssyt_oracle(&Partition::empty(), &[]), big(1));
        assert_eq!(kostka_ssyt_oracle(&p(&[2]), &[1]), big(0));
    }
}
