//! Ground-truth counts independent of the determinant route: exhaustive
//! enumeration of words and the RSK sum over partitions.
//!
//! "Increasing" means strictly increasing throughout. Under that reading the
//! only word with no increase of length 2 is the weakly decreasing one, so
//! `A_{2,r}(n) = 1`, and every word over two letters avoids an increase of
//! length 3.

mod brute;
mod lis;
mod rsk;

pub use brute::{count_via_brute, count_via_brute_capped, MultisetPermutations, DEFAULT_BRUTE_CAP};
pub use lis::{lis_length, Word};
pub use rsk::count_via_rsk;
