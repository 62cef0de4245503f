//! Exact enumeration of words with a bounded longest strictly increasing
//! subsequence.
//!
//! For a multiplicity `r`, an alphabet size `n` and a bound `d`, the crate
//! computes `A_{d+1,r}(n)`: the number of words of length `r*n` over the
//! letters `1..=n`, each letter used exactly `r` times, whose longest strictly
//! increasing subsequence has length at most `d`.
//!
//! The main route ([`gessel`]) expands a `d x d` Toeplitz determinant with
//! symbol `exp(v/z + t_1 z + ... + t_r z^r)` over a truncated series ring and
//! pairs the relevant coefficient against a power of the cycle index
//! polynomial of `S_r` using the Gaussian moment pairing
//! `<t^k, t^l> = prod_j delta(k_j, l_j) k_j!`. Two independent routes live in
//! [`oracles`]: exhaustive enumeration and the RSK sum over partitions.
//!
//! The crate is `no_std` (it needs `alloc`). All arithmetic is exact.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod det;
pub mod error;
pub mod gessel;
pub mod oracles;
pub mod polyring;
pub mod rational;
pub mod symfunc;

pub use error::{Error, Result};
pub use gessel::{CountResult, Method};
pub use polyring::{ExponentVector, TPoly, VSeries};
pub use rational::Rational;
pub use symfunc::Partition;
