use num_bigint::BigUint;

use crate::error::Result;
use crate::gessel::{check_params, CountResult, Method};
use crate::symfunc::{cycle_index, f_lambda, kostka_against, partitions_of};

/// `A_{d+1,r}(n) = sum_{|lambda| = rn, l(lambda) <= d} f_lambda K_{lambda,(r^n)}`.
pub fn count_via_rsk(d: usize, r: usize, n: usize) -> Result<CountResult> {
    check_params(d, r)?;
    let cyc_power = cycle_index(r).pow(n);
    let mut value = BigUint::ZERO;
    for lambda in partitions_of(r * n, d) {
        value += f_lambda(&lambda) * kostka_against(&lambda, &cyc_power)?;
    }
    Ok(CountResult {
        d,
        r,
        n,
        value,
        method: Method::Rsk,
    })
}
