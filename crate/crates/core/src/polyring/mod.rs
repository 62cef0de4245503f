//! Exact sparse polynomials in `t_1..t_r`, truncated series in `v` with
//! polynomial coefficients, and the Gaussian moment pairing.

mod exponent;
mod pairing;
mod rings;
mod tpoly;
mod vseries;

pub use exponent::ExponentVector;
pub use pairing::{gaussian_pairing, monomial_norm};
pub use rings::{PolyRing, SeriesRing};
pub use tpoly::TPoly;
pub use vseries::VSeries;
