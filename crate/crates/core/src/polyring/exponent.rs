use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Exponents `(k_1, ..., k_r)` of a monomial `t_1^k_1 ... t_r^k_r`.
///
/// Ordered by weighted degree (`deg t_j = j`) first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars])
    }

    pub fn new(exponents: Vec<u32>) -> Self {
        ExponentVector(exponents)
    }

    /// The monomial `t_var` (1-based variable index).
    pub fn variable(nvars: usize, var: usize) -> Self {
        assert!(
            var >= 1 && var <= nvars,
            "variable t_{var} outside t_1..t_{nvars}"
        );
        let mut e = vec![0; nvars];
        e[var - 1] = 1;
        ExponentVector(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `t_var` (1-based).
    pub fn get(&self, var: usize) -> u32 {
        self.0[var - 1]
    }

    pub fn weighted_degree(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &k)| (j + 1) * k as usize)
            .sum()
    }

    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&k| k as usize).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree()
            .cmp(&other.weighted_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "t{}", j + 1)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
