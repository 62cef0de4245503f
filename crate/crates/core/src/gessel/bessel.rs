use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::det::{determinant, DetAlgorithm, Ring};
use crate::rational::{factorial, Rational};

/// Power series in `x` with rational coefficients, truncated after
/// `x^order`. Elements are dense coefficient vectors.
struct UnivariateSeries {
    order: usize,
}

impl Ring for UnivariateSeries {
    type Elem = Vec<Rational>;

    fn zero(&self) -> Vec<Rational> {
        vec![Rational::zero(); self.order + 1]
    }
    fn one(&self) -> Vec<Rational> {
        let mut v = self.zero();
        v[0] = Rational::one();
        v
    }
    fn add(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn sub(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
    fn mul(&self, a: &Vec<Rational>, b: &Vec<Rational>) -> Vec<Rational> {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(self.order + 1 - i) {
                out[i + j] += x * y;
            }
        }
        out
    }
    fn is_zero(&self, a: &Vec<Rational>) -> bool {
        a.iter().all(Zero::is_zero)
    }
}

/// `I_m(2x) = sum_k x^{2k+m} / (k! (k+m)!)`, truncated after `x^order`.
fn bessel_i_2x(m: usize, order: usize) -> Vec<Rational> {
    let mut series = vec![Rational::zero(); order + 1];
    let mut k = 0;
    while 2 * k + m <= order {
        let denom = factorial(k) * factorial(k + m);
        series[2 * k + m] = Rational::new(BigInt::one(), BigInt::from(denom));
        k += 1;
    }
    series
}

/// Coefficients of `x^{2n}`, `n = 0..=n_max`, in `det(I_{|i-j|}(2x))_{d x d}`.
/// Entry `n` equals `A_{d+1,1}(n) / (n!)^2`.
pub fn gessel_r1_series(d: usize, n_max: usize) -> Vec<Rational> {
    let order = 2 * n_max;
    let ring = UnivariateSeries { order };
    let bessel: Vec<Vec<Rational>> = (0..d.max(1)).map(|m| bessel_i_2x(m, order)).collect();
    let matrix: Vec<Vec<Vec<Rational>>> = (0..d)
        .map(|i| (0..d).map(|j| bessel[i.abs_diff(j)].clone()).collect())
        .collect();
    let det = determinant(&ring, &matrix, DetAlgorithm::Auto);
    det.into_iter().step_by(2).collect()
}
