use alloc::vec::Vec;
use core::fmt;

use super::TPoly;
use crate::error::{Error, Result};

/// Power series in `v` truncated after `v^order`, with [`TPoly`]
/// coefficients in a fixed number of `t` variables.
///
/// Coefficients are stored densely by `v`-degree; degrees above `order` are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct VSeries {
    nvars: usize,
    order: usize,
    coeffs: Vec<TPoly>,
}

impl VSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        VSeries {
            nvars,
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        Self::from_coeffs(nvars, order, [TPoly::one(nvars)])
    }

    /// Builds `sum_k coeffs[k] v^k`, discarding degrees above `order`.
    ///
    /// Panics if a coefficient has the wrong variable count.
    pub fn from_coeffs<I>(nvars: usize, order: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = TPoly>,
    {
        let coeffs: Vec<TPoly> = coeffs.into_iter().take(order + 1).collect();
        assert!(
            coeffs.iter().all(|c| c.nvars() == nvars),
            "coefficient variable count differs from {nvars}"
        );
        let mut s = VSeries {
            nvars,
            order,
            coeffs,
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(TPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Largest retained `v`-degree.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `v^degree`; the zero polynomial when absent.
    pub fn coefficient(&self, degree: usize) -> Result<TPoly> {
        if degree > self.order {
            return Err(Error::OutOfRange {
                degree,
                order: self.order,
            });
        }
        Ok(self
            .coeffs
            .get(degree)
            .cloned()
            .unwrap_or_else(|| TPoly::zero(self.nvars)))
    }

    /// Stored coefficients, lowest degree first. Trailing zeros are omitted.
    pub fn coefficients(&self) -> &[TPoly] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len()).min(order + 1);
        let zero = TPoly::zero(self.nvars);
        let coeffs = (0..len).map(|k| {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            a + b
        });
        Ok(Self::from_coeffs(self.nvars, order, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let len = self.coeffs.len().max(other.coeffs.len()).min(order + 1);
        let zero = TPoly::zero(self.nvars);
        let coeffs = (0..len).map(|k| {
            let a = self.coeffs.get(k).unwrap_or(&zero);
            let b = other.coeffs.get(k).unwrap_or(&zero);
            a - b
        });
        Ok(Self::from_coeffs(self.nvars, order, coeffs))
    }

    /// Product truncated after `v^order`.
    pub fn mul(&self, other: &Self, order: usize) -> Result<Self> {
        self.mul_pruned(other, order, usize::MAX)
    }

    /// Product truncated after `v^order`, also dropping every `t`-term of
    /// weighted degree above `max_weight`.
    ///
    /// The result's order is `order` capped by the operands' orders, since
    /// nothing beyond those is known.
    pub fn mul_pruned(&self, other: &Self, order: usize, max_weight: usize) -> Result<Self> {
        self.check(other)?;
        let order = order.min(self.order).min(other.order);
        let len = (self.coeffs.len() + other.coeffs.len())
            .saturating_sub(1)
            .min(order + 1);
        let mut out: Vec<TPoly> = (0..len).map(|_| TPoly::zero(self.nvars)).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let prod = a.mul_bounded(b, max_weight);
                out[i + j] = &out[i + j] + &prod;
            }
        }
        Ok(Self::from_coeffs(self.nvars, order, out))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<F>(&self, nvars: usize, f: F) -> Self
    where
        F: FnMut(&TPoly) -> TPoly,
    {
        Self::from_coeffs(nvars, self.order, self.coeffs.iter().map(f))
    }
}

impl fmt::Debug for VSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VSeries[order {}](", self.order)?;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*v^{k}")?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_plus_vt(order: usize) -> VSeries {
        VSeries::from_coeffs(1, order, [TPoly::one(1), TPoly::variable(1, 1)])
    }

    #[test]
    fn truncation_drops_v_squared() {
        let a = one_plus_vt(3);
        let p = a.mul(&a, 1).unwrap();
        assert_eq!(p.order(), 1);
        assert_eq!(p.coefficients().len(), 2);
        assert_eq!(
            p.coefficient(1).unwrap(),
            TPoly::variable(1, 1).scale(&crate::rational::int(2))
        );
    }

    #[test]
    fn full_square() {
        let a = one_plus_vt(3);
        let p = a.mul(&a, 2).unwrap();
        let t = TPoly::variable(1, 1);
        assert_eq!(p.coefficient(0).unwrap(), TPoly::one(1));
        assert_eq!(p.coefficient(2).unwrap(), &t * &t);
    }

    #[test]
    fn identity() {
        let a = one_plus_vt(4);
        assert_eq!(a.mul(&VSeries::one(1, 4), 4).unwrap(), a);
    }

    #[test]
    fn coefficient_range() {
        let a = one_plus_vt(3);
        assert_eq!(a.coefficient(1).unwrap(), TPoly::variable(1, 1));
        assert!(a.coefficient(3).unwrap().is_zero());
        assert_eq!(
            a.coefficient(5).unwrap_err(),
            Error::OutOfRange {
                degree: 5,
                order: 3
            }
        );
    }
}
