use num_bigint::BigUint;
use num_traits::Zero;

use super::lis::{lis_length, Word};
use crate::error::{Error, Result};
use crate::gessel::{total_words, CountResult, Method};

/// Default upper bound on the number of words [`count_via_brute`] enumerates.
pub const DEFAULT_BRUTE_CAP: u64 = 100_000_000;

/// Distinct permutations of a multiset in lexicographic order, starting
/// from the sorted arrangement.
#[derive(Debug, Clone)]
pub struct MultisetPermutations {
    current: Option<Word>,
}

impl MultisetPermutations {
    pub fn new(mut letters: alloc::vec::Vec<u32>) -> Self {
        letters.sort_unstable();
        MultisetPermutations {
            current: Some(Word(letters)),
        }
    }

    /// Every arrangement of `1^r 2^r ... n^r`.
    pub fn of_uniform(r: usize, n: usize) -> Self {
        Self::new(Word::sorted(r, n).0)
    }
}

/// Rearranges `w` into its lexicographic successor; `false` if `w` was the
/// last (weakly decreasing) arrangement.
fn next_arrangement(w: &mut [u32]) -> bool {
    let Some(pivot) = w.windows(2).rposition(|pair| pair[0] < pair[1]) else {
        return false;
    };
    let successor = w
        .iter()
        .rposition(|&x| x > w[pivot])
        .expect("pivot has a larger letter after it");
    w.swap(pivot, successor);
    w[pivot + 1..].reverse();
    true
}

impl Iterator for MultisetPermutations {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_arrangement(&mut next.0) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Counts words directly, refusing when more than [`DEFAULT_BRUTE_CAP`]
/// words would be enumerated.
pub fn count_via_brute(d: usize, r: usize, n: usize) -> Result<CountResult> {
    count_via_brute_capped(d, r, n, DEFAULT_BRUTE_CAP)
}

pub fn count_via_brute_capped(d: usize, r: usize, n: usize, cap: u64) -> Result<CountResult> {
    crate::gessel::check_params(d, r)?;
    let required = total_words(r, n);
    if required > BigUint::from(cap) {
        return Err(Error::CapExceeded { required, cap });
    }
    let mut letters = Word::sorted(r, n).0;
    let mut count: u64 = 0;
    loop {
        if lis_length(&letters) <= d {
            count += 1;
        }
        if !next_arrangement(&mut letters) {
            break;
        }
    }
    let value = if count.is_zero() {
        BigUint::zero()
    } else {
        BigUint::from(count)
    };
    Ok(CountResult {
        d,
        r,
        n,
        value,
        method: Method::Brute,
    })
}
