//! Counting through the Toeplitz determinant generating function.
//!
//! The determinant `det(phi_{i-j})_{d x d}` of the symbol
//! `exp(v/z + t_1 z + ... + t_r z^r)` equals
//! `sum_{l(lambda) <= d} s_lambda(v, 0, ...) s_lambda(t)`. Its `v^{rn}`
//! coefficient `F_{rn}(t)` is weighted homogeneous of degree `rn`, and
//!
//! ```text
//! A_{d+1,r}(n) = (rn)! * <F_{rn}, Cyc_r^n>
//! ```
//!
//! with `<.,.>` the Gaussian moment pairing. Variants here eliminate the
//! `t_r` pairing by direct evaluation, reduce `r = 1` to the Bessel
//! determinant and `r = 2` to a one-dimensional Gaussian integral.

mod bessel;
mod count;
mod prob;
mod quadrature;
mod toeplitz;

pub use bessel::gessel_r1_series;
pub use count::{
    count_via_gessel, count_via_gessel_tr_eliminated, count_via_gessel_with, gessel_row,
    CountResult, Method,
};
pub use prob::{poissonized_partial_sum, prob_lis_le, total_words};
pub use quadrature::count_via_gessel_r2;
pub use toeplitz::{toeplitz_det_truncated, toeplitz_entry, ToeplitzTruncation};

use crate::error::{Error, Result};

pub(crate) fn check_params(d: usize, r: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::InvalidArgument("bound d must be at least 1".into()));
    }
    if r == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity r must be at least 1".into(),
        ));
    }
    Ok(())
}
