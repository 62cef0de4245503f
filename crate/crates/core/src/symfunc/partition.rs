use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Integer partition: a weakly decreasing sequence of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|lambda|`
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `l(lambda)`, the number of parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (0..width)
                .map(|col| self.0.iter().take_while(|&&row| row > col).count())
                .collect(),
        )
    }

    /// Multiplicity `m_i` of each part size `i`, indexed from 0
    /// (`result[0]` is always 0).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = alloc::vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.weight());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j] - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `weight` with at most `max_length` parts, in decreasing
/// lexicographic order. `partitions_of(0, _)` is the single empty partition.
pub fn partitions_of(weight: usize, max_length: usize) -> Vec<Partition> {
    fn extend(
        remaining: usize,
        max_part: usize,
        slots: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 || remaining > max_part * slots {
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            extend(remaining - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(weight, weight, max_length, &mut Vec::new(), &mut out);
    out
}
