use crate::det::Ring;

use super::{TPoly, VSeries};

/// Polynomials in a fixed number of `t` variables.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing {
    pub nvars: usize,
}

impl Ring for PolyRing {
    type Elem = TPoly;

    fn zero(&self) -> TPoly {
        TPoly::zero(self.nvars)
    }
    fn one(&self) -> TPoly {
        TPoly::one(self.nvars)
    }
    fn add(&self, a: &TPoly, b: &TPoly) -> TPoly {
        a + b
    }
    fn sub(&self, a: &TPoly, b: &TPoly) -> TPoly {
        a - b
    }
    fn mul(&self, a: &TPoly, b: &TPoly) -> TPoly {
        a * b
    }
    fn is_zero(&self, a: &TPoly) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &TPoly) -> TPoly {
        -a
    }
}

/// Series in `v` truncated after `v^order` with polynomial coefficients,
/// optionally discarding `t`-terms of weighted degree above `max_weight`.
///
/// Weight pruning is sound whenever the final quantity only needs terms of
/// weighted degree `<= max_weight`: every factor has nonnegative exponents,
/// so a dropped term could only feed terms of even higher degree.
#[derive(Debug, Clone, Copy)]
pub struct SeriesRing {
    pub nvars: usize,
    pub order: usize,
    pub max_weight: usize,
}

impl SeriesRing {
    pub fn new(nvars: usize, order: usize) -> Self {
        SeriesRing {
            nvars,
            order,
            max_weight: usize::MAX,
        }
    }

    pub fn with_max_weight(mut self, max_weight: usize) -> Self {
        self.max_weight = max_weight;
        self
    }
}

impl Ring for SeriesRing {
    type Elem = VSeries;

    fn zero(&self) -> VSeries {
        VSeries::zero(self.nvars, self.order)
    }
    fn one(&self) -> VSeries {
        VSeries::one(self.nvars, self.order)
    }
    fn add(&self, a: &VSeries, b: &VSeries) -> VSeries {
        a.add(b).expect("series share the ring's variable count")
    }
    fn sub(&self, a: &VSeries, b: &VSeries) -> VSeries {
        a.sub(b).expect("series share the ring's variable count")
    }
    fn mul(&self, a: &VSeries, b: &VSeries) -> VSeries {
        a.mul_pruned(b, self.order, self.max_weight)
            .expect("series share the ring's variable count")
    }
    fn is_zero(&self, a: &VSeries) -> bool {
        a.is_zero()
    }
}
