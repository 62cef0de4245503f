use alloc::vec::Vec;

use num_traits::Zero;

use super::toeplitz::entry_from_table;
use crate::det::{determinant, DetAlgorithm};
use crate::error::Result;
use crate::gessel::{CountResult, Method};
use crate::polyring::{SeriesRing, TPoly};
use crate::rational::{factorial, from_biguint, odd_double_factorial, rat, to_natural};
use crate::symfunc::complete_homogeneous_table;

use crate::error::Error;

/// `A_{d+1,2}(n)` from the one-variable reduction: expand the determinant of
/// the symbol `exp(v/z + x z + z^2/2)`, take the `v^{2n}` coefficient (a
/// polynomial in `x`) and integrate it against the standard Gaussian using
/// `E[x^{2m}] = (2m-1)!!`, `E[x^{2m+1}] = 0`. Then
/// `A = (2n)! n! E[F_{2n}(x)]`.
pub fn count_via_gessel_r2(d: usize, n: usize) -> Result<CountResult> {
    super::check_params(d, 2)?;
    let order = 2 * n;
    // h_k(x, 1/2): the symbol's z-part exp(t_1 z + t_2 z^2) at t_1 = x, t_2 = 1/2
    let images = [TPoly::variable(1, 1), TPoly::constant(1, rat(1, 2))];
    let h: Vec<TPoly> = complete_homogeneous_table(order + d - 1, 2)
        .iter()
        .map(|p| p.substitute(&images))
        .collect::<Result<_>>()?;

    let matrix: Vec<Vec<_>> = (0..d as i64)
        .map(|i| {
            (0..d as i64)
                .map(|j| entry_from_table(&h, i - j, 1, order))
                .collect()
        })
        .collect();
    // x-degree never exceeds the weighted degree before substitution
    let ring = SeriesRing::new(1, order).with_max_weight(order);
    let det = determinant(&ring, &matrix, DetAlgorithm::Auto);
    let f = det.coefficient(order)?;

    let mut expectation = crate::rational::Rational::zero();
    for (e, c) in f.terms() {
        let k = e.get(1) as usize;
        if k.is_multiple_of(2) {
            expectation += c * from_biguint(&odd_double_factorial(k / 2));
        }
    }
    let value = expectation * from_biguint(&(factorial(order) * factorial(n)));
    let value = to_natural(&value).ok_or_else(|| {
        Error::Invariant(alloc::format!(
            "quadrature route gave {value} for d={d}, n={n}"
        ))
    })?;
    Ok(CountResult {
        d,
        r: 2,
        n,
        value,
        method: Method::GesselR2,
    })
}
