use alloc::vec::Vec;

/// A word over the letters `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    /// `1^r 2^r ... n^r`, the lexicographically smallest word with each
    /// letter used `r` times.
    pub fn sorted(r: usize, n: usize) -> Self {
        Word(
            (1..=n as u32)
                .flat_map(|letter| core::iter::repeat_n(letter, r))
                .collect(),
        )
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn lis_length(&self) -> usize {
        lis_length(&self.0)
    }
}

/// Length of the longest strictly increasing subsequence.
///
/// Patience sorting: `tails[k]` is the smallest possible last letter of a
/// strictly increasing subsequence of length `k + 1`. Each letter replaces
/// the first tail that is `>=` it.
pub fn lis_length<T: Ord + Copy>(word: &[T]) -> usize {
    let mut tails: Vec<T> = Vec::with_capacity(word.len());
    for &x in word {
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}
