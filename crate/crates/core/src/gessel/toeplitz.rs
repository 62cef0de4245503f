use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::det::{determinant, DetAlgorithm};
use crate::polyring::{SeriesRing, TPoly, VSeries};
use crate::rational::{factorial, Rational};
use crate::symfunc::complete_homogeneous_table;

/// The `d x d` Toeplitz matrix of truncated symbol coefficients
/// `phi_m^{(N)} = sum_{k <= rN} h_{k+m}(t_1..t_r) v^k / k!` for
/// `m = -(d-1) ..= d-1`.
#[derive(Debug, Clone)]
pub struct ToeplitzTruncation {
    pub d: usize,
    pub r: usize,
    /// Number of `n` values resolved; series carry order `r * n_trunc`.
    pub n_trunc: usize,
    pub entries: BTreeMap<i64, VSeries>,
}

impl ToeplitzTruncation {
    pub fn new(d: usize, r: usize, n_trunc: usize) -> Self {
        let order = r * n_trunc;
        let h = complete_homogeneous_table(order + d.saturating_sub(1), r);
        let span = d as i64 - 1;
        let entries = (-span..=span)
            .map(|m| (m, entry_from_table(&h, m, r, order)))
            .collect();
        ToeplitzTruncation {
            d,
            r,
            n_trunc,
            entries,
        }
    }

    pub fn order(&self) -> usize {
        self.r * self.n_trunc
    }

    /// Entry `(i, j)` is `phi_{i-j}`.
    pub fn matrix(&self) -> Vec<Vec<VSeries>> {
        (0..self.d as i64)
            .map(|i| {
                (0..self.d as i64)
                    .map(|j| self.entries[&(i - j)].clone())
                    .collect()
            })
            .collect()
    }

    /// Determinant in the series ring truncated at `order()`, dropping
    /// `t`-terms of weighted degree above `order()`.
    pub fn determinant(&self, algorithm: DetAlgorithm) -> VSeries {
        let order = self.order();
        let ring = SeriesRing::new(self.r, order).with_max_weight(order);
        determinant(&ring, &self.matrix(), algorithm)
    }
}

pub(crate) fn entry_from_table(h: &[TPoly], m: i64, nvars: usize, order: usize) -> VSeries {
    let coeffs = (0..=order).map(|k| {
        let index = k as i64 + m;
        if index < 0 {
            return TPoly::zero(nvars);
        }
        let inv_k_factorial = Rational::new(BigInt::one(), BigInt::from(factorial(k)));
        h[index as usize].scale(&inv_k_factorial)
    });
    VSeries::from_coeffs(nvars, order, coeffs)
}

/// `phi_m^{(N)}(v, t_1..t_r)`, truncated after `v^{rN}`.
pub fn toeplitz_entry(m: i64, r: usize, n_trunc: usize) -> VSeries {
    let order = r * n_trunc;
    let needed = (order as i64 + m).max(0) as usize;
    let h = complete_homogeneous_table(needed, r);
    entry_from_table(&h, m, r, order)
}

/// `det(phi_{i-j}^{(N)})_{d x d}` truncated after `v^{rN}`.
pub fn toeplitz_det_truncated(d: usize, r: usize, n_trunc: usize) -> VSeries {
    ToeplitzTruncation::new(d, r, n_trunc).determinant(DetAlgorithm::Auto)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::complete_homogeneous;

    #[test]
    fn entry_coefficients() {
        assert_eq!(
            toeplitz_entry(0, 2, 2).coefficient(0).unwrap(),
            TPoly::one(2)
        );
        assert_eq!(
            toeplitz_entry(1, 2, 2).coefficient(1).unwrap(),
            complete_homogeneous(2, 2)
        );
        assert!(toeplitz_entry(-1, 2, 2).coefficient(0).unwrap().is_zero());
        assert_eq!(
            toeplitz_entry(-1, 2, 2).coefficient(1).unwrap(),
            TPoly::one(2)
        );
        assert_eq!(toeplitz_entry(0, 3, 2).order(), 6);
    }

    #[test]
    fn one_by_one_is_the_entry() {
        let det = toeplitz_det_truncated(1, 2, 3);
        assert_eq!(det, toeplitz_entry(0, 2, 3));
    }

    #[test]
    fn constant_term_is_one() {
        for d in 1..=4 {
            assert_eq!(
                toeplitz_det_truncated(d, 2, 2).coefficient(0).unwrap(),
                TPoly::one(2)
            );
        }
    }

    #[test]
    fn algorithms_agree() {
        let tt = ToeplitzTruncation::new(4, 2, 3);
        assert_eq!(
            tt.determinant(DetAlgorithm::Laplace),
            tt.determinant(DetAlgorithm::Berkowitz)
        );
    }
}
