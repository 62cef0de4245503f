use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{check_params, ToeplitzTruncation};
use crate::det::DetAlgorithm;
use crate::error::{Error, Result};
use crate::polyring::{gaussian_pairing, TPoly};
use crate::rational::{factorial, from_biguint, pow, to_natural, Rational};
use crate::symfunc::cycle_index;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Gessel,
    /// Gessel route with the `t_r` pairing replaced by evaluation.
    GesselTrEliminated,
    /// One-variable Gaussian quadrature reduction, `r = 2` only.
    GesselR2,
    Rsk,
    Brute,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Gessel => "gessel",
            Method::GesselTrEliminated => "gessel-tr",
            Method::GesselR2 => "gessel-r2",
            Method::Rsk => "rsk",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `A_{d+1,r}(n)`: words of length `rn` over `n` letters, each used `r`
/// times, with longest strictly increasing subsequence at most `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub d: usize,
    pub r: usize,
    pub n: usize,
    pub value: BigUint,
    pub method: Method,
}

impl CountResult {
    /// The forbidden increasing-subsequence length `d + 1`.
    pub fn d_plus_one(&self) -> usize {
        self.d + 1
    }
}

impl fmt::Display for CountResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A_{{{},{}}}({}) = {} [{}]",
            self.d + 1,
            self.r,
            self.n,
            self.value,
            self.method
        )
    }
}

/// Converts `scale * pairing` to a count, rejecting fractions and negatives.
fn finish(d: usize, r: usize, n: usize, value: Rational, method: Method) -> Result<CountResult> {
    let value = to_natural(&value).ok_or_else(|| {
        Error::Invariant(format!(
            "{method} route gave {value} for d={d}, r={r}, n={n}; expected a natural number"
        ))
    })?;
    Ok(CountResult {
        d,
        r,
        n,
        value,
        method,
    })
}

fn homogeneous_coefficient(det: &crate::polyring::VSeries, degree: usize) -> Result<TPoly> {
    let f = det.coefficient(degree)?;
    match f.homogeneous_degree() {
        Some(k) if k != degree => Err(Error::Invariant(format!(
            "v^{degree} coefficient has weighted degree {k}"
        ))),
        None if !f.is_zero() => Err(Error::Invariant(format!(
            "v^{degree} coefficient is not weighted homogeneous"
        ))),
        _ => Ok(f),
    }
}

/// `A_{d+1,r}(n) = (rn)! <F_{rn}, Cyc_r^n>`.
pub fn count_via_gessel(d: usize, r: usize, n: usize) -> Result<CountResult> {
    count_via_gessel_with(d, r, n, DetAlgorithm::Auto)
}

pub fn count_via_gessel_with(
    d: usize,
    r: usize,
    n: usize,
    algorithm: DetAlgorithm,
) -> Result<CountResult> {
    check_params(d, r)?;
    let det = ToeplitzTruncation::new(d, r, n).determinant(algorithm);
    let f = homogeneous_coefficient(&det, r * n)?;
    let pairing = gaussian_pairing(&f, &cycle_index(r).pow(n))?;
    finish(
        d,
        r,
        n,
        pairing * from_biguint(&factorial(r * n)),
        Method::Gessel,
    )
}

/// `A_{d+1,r}(n)` for `n = 0..=n_max` from a single determinant expansion
/// truncated after `v^{r n_max}`.
pub fn gessel_row(
    d: usize,
    r: usize,
    n_max: usize,
    algorithm: DetAlgorithm,
) -> Result<Vec<CountResult>> {
    check_params(d, r)?;
    let det = ToeplitzTruncation::new(d, r, n_max).determinant(algorithm);
    let cyc = cycle_index(r);
    let mut cyc_power = TPoly::one(r);
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            cyc_power = &cyc_power * &cyc;
        }
        let f = homogeneous_coefficient(&det, r * n)?;
        let pairing = gaussian_pairing(&f, &cyc_power)?;
        out.push(finish(
            d,
            r,
            n,
            pairing * from_biguint(&factorial(r * n)),
            Method::Gessel,
        )?);
    }
    Ok(out)
}

/// Same count with the `t_r` pairing replaced by the evaluation
/// `t_r -> vbar^r / r`.
///
/// Writing `Cyc_r = C + t_r / r` with `C` free of `t_r`, and
/// `F_{rn} = sum_e F_e t_r^e`,
///
/// ```text
/// A / ((rn)! n!) = sum_e r^{-e} <F_e, C^{n-e}> / (n-e)!
/// ```
///
/// where the remaining pairing runs over `t_1..t_{r-1}` only.
pub fn count_via_gessel_tr_eliminated(d: usize, r: usize, n: usize) -> Result<CountResult> {
    check_params(d, r)?;
    let det = ToeplitzTruncation::new(d, r, n).determinant(DetAlgorithm::Auto);
    let f = homogeneous_coefficient(&det, r * n)?;
    let by_tr = f.coefficients_in_last_variable();
    let rest = cycle_index(r)
        .coefficients_in_last_variable()
        .into_iter()
        .next()
        .unwrap_or_else(|| TPoly::zero(r - 1));
    let inv_r = Rational::new(BigInt::one(), BigInt::from(r));

    let mut total = Rational::zero();
    let mut rest_power = TPoly::one(r - 1); // C^{n-e}, built from e = n downwards
    for e in (0..=n).rev() {
        if e < n {
            rest_power = &rest_power * &rest;
        }
        let Some(fe) = by_tr.get(e) else { continue };
        if fe.is_zero() {
            continue;
        }
        let pairing = gaussian_pairing(fe, &rest_power)?;
        let weight = pow(&inv_r, e) / from_biguint(&factorial(n - e));
        total += pairing * weight;
    }
    let scale = from_biguint(&(factorial(r * n) * factorial(n)));
    finish(d, r, n, total * scale, Method::GesselTrEliminated)
}
