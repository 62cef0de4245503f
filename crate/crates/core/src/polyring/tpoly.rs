use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ExponentVector;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sparse polynomial in `t_1..t_r` with exact rational coefficients.
///
/// No stored coefficient is zero, so structural equality is polynomial
/// equality. The zero polynomial is the empty term map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl TPoly {
    pub fn zero(nvars: usize) -> Self {
        TPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, value: Rational) -> Self {
        Self::monomial(ExponentVector::zero(nvars), value)
    }

    /// The polynomial `t_var` (1-based).
    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::monomial(ExponentVector::variable(nvars, var), Rational::one())
    }

    pub fn monomial(exponents: ExponentVector, coeff: Rational) -> Self {
        let mut p = Self::zero(exponents.nvars());
        if !coeff.is_zero() {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, collecting
    /// like terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::VariableCountMismatch {
                    left: nvars,
                    right: e.nvars(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lexicographic order of their exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &ExponentVector) -> Rational {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Accumulates `coeff * t^exponents` in place.
    pub fn add_term(&mut self, exponents: ExponentVector, coeff: Rational) {
        debug_assert_eq!(exponents.nvars(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Smallest and largest weighted degree among the terms.
    pub fn weighted_degree_range(&self) -> Option<(usize, usize)> {
        let lo = self.terms.keys().next()?.weighted_degree();
        let hi = self.terms.keys().next_back()?.weighted_degree();
        Some((lo, hi))
    }

    /// `Some(k)` if every term has weighted degree `k`. The zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.weighted_degree_range()? {
            (lo, hi) if lo == hi => Some(lo),
            _ => None,
        }
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        Ok(self.mul_bounded(other, usize::MAX))
    }

    /// Product with every term of weighted degree above `max_weight` dropped.
    pub fn mul_bounded(&self, other: &Self, max_weight: usize) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        // Terms are sorted by weighted degree, so the inner loop can stop at
        // the first term that overshoots.
        for (ea, ca) in &self.terms {
            let wa = ea.weighted_degree();
            if wa > max_weight {
                break;
            }
            for (eb, cb) in &other.terms {
                if wa + eb.weighted_degree() > max_weight {
                    break;
                }
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.nvars);
        }
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> Self {
        self.pow_bounded(exp, usize::MAX)
    }

    pub fn pow_bounded(&self, exp: usize, max_weight: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul_bounded(self, max_weight);
        }
        acc
    }

    /// Drops every term of weighted degree above `max_weight`.
    pub fn truncate_weight(&self, max_weight: usize) -> Self {
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.weighted_degree() <= max_weight)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the terms of weighted degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: usize) -> Self {
        TPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.weighted_degree() == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `t_j <- images[j-1]` for every variable. All images must
    /// share one variable count, which becomes the result's.
    pub fn substitute(&self, images: &[TPoly]) -> Result<Self> {
        if images.len() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => {
                return Ok(TPoly::constant(
                    0,
                    self.coefficient(&ExponentVector::zero(0)),
                ))
            }
        };
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VariableCountMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        // powers[j][k] = images[j]^k, grown on demand
        let mut powers: Vec<Vec<TPoly>> = images.iter().map(|_| vec![TPoly::one(target)]).collect();
        let mut out = TPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = TPoly::constant(target, c.clone());
            for (j, &k) in e.exponents().iter().enumerate() {
                let k = k as usize;
                while powers[j].len() <= k {
                    let next = &powers[j][powers[j].len() - 1] * &images[j];
                    powers[j].push(next);
                }
                if k > 0 {
                    term = &term * &powers[j][k];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::VariableCountMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.exponents()) {
                for _ in 0..k {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Splits off the last variable: entry `e` of the result is the
    /// coefficient of `t_r^e`, a polynomial in `t_1..t_{r-1}`.
    pub fn coefficients_in_last_variable(&self) -> Vec<TPoly> {
        assert!(self.nvars >= 1, "no variable to split off");
        let inner = self.nvars - 1;
        let mut out: Vec<TPoly> = Vec::new();
        for (e, c) in &self.terms {
            let (head, last) = e.exponents().split_at(inner);
            let k = last[0] as usize;
            while out.len() <= k {
                out.push(TPoly::zero(inner));
            }
            out[k].add_term(ExponentVector::new(head.to_vec()), c.clone());
        }
        out
    }
}

impl Add for &TPoly {
    type Output = TPoly;

    /// Panics on a variable-count mismatch; see [`TPoly::try_add`].
    fn add(self, rhs: &TPoly) -> TPoly {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        TPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly[{}]({})", self.nvars, self)
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e.is_constant() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{magnitude}*{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use alloc::string::ToString;

    fn t(nvars: usize, var: usize) -> TPoly {
        TPoly::variable(nvars, var)
    }

    fn cyc2() -> TPoly {
        &(&t(2, 1) * &t(2, 1)).scale(&rat(1, 2)) + &t(2, 2).scale(&rat(1, 2))
    }

    #[test]
    fn additive_inverse_is_empty() {
        let sum = &t(1, 1) + &(-&t(1, 1));
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
        assert_eq!(sum.nvars(), 1);
    }

    #[test]
    fn cyc2_from_sum_of_halves() {
        let p = cyc2();
        assert_eq!(p.to_string(), "1/2*t2 + 1/2*t1^2");
        assert_eq!(p.coefficient(&ExponentVector::new(vec![2, 0])), rat(1, 2));
        assert_eq!(p.coefficient(&ExponentVector::new(vec![0, 1])), rat(1, 2));
    }

    #[test]
    fn like_terms_collect() {
        let p = &(&t(2, 1) + &t(2, 2)) + &t(2, 1);
        assert_eq!(p.coefficient(&ExponentVector::new(vec![1, 0])), int(2));
        assert_eq!(p.coefficient(&ExponentVector::new(vec![0, 1])), int(1));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn square_of_cyc2() {
        let sq = &cyc2() * &cyc2();
        let expected = TPoly::from_terms(
            2,
            [
                (ExponentVector::new(vec![4, 0]), rat(1, 4)),
                (ExponentVector::new(vec![2, 1]), rat(1, 2)),
                (ExponentVector::new(vec![0, 2]), rat(1, 4)),
            ],
        )
        .unwrap();
        assert_eq!(sq, expected);
        assert_eq!(
            &t(1, 1) * &t(1, 1),
            TPoly::monomial(ExponentVector::new(vec![2]), int(1))
        );
        assert_eq!(&TPoly::one(2) * &cyc2(), cyc2());
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = t(1, 1).try_add(&t(2, 1)).unwrap_err();
        assert_eq!(err, Error::VariableCountMismatch { left: 1, right: 2 });
        assert!(t(1, 1).try_mul(&t(3, 2)).is_err());
    }

    #[test]
    fn bounded_product_drops_high_weight() {
        let p = &t(2, 1) + &t(2, 2);
        let sq = p.mul_bounded(&p, 3);
        assert_eq!(sq.len(), 2);
        assert_eq!(sq.weighted_degree_range(), Some((2, 3)));
    }

    #[test]
    fn substitution_and_evaluation() {
        // t1 <- t1, t2 <- 1/2 on Cyc_2 gives t1^2/2 + 1/4
        let images = [t(1, 1), TPoly::constant(1, rat(1, 2))];
        let q = cyc2().substitute(&images).unwrap();
        assert_eq!(q.coefficient(&ExponentVector::new(vec![2])), rat(1, 2));
        assert_eq!(q.coefficient(&ExponentVector::new(vec![0])), rat(1, 4));
        assert_eq!(cyc2().evaluate(&[int(1), int(0)]).unwrap(), rat(1, 2));
    }

    #[test]
    fn split_last_variable() {
        let parts = cyc2().coefficients_in_last_variable();
        assert_eq!(parts.len(), 2);
        assert_eq!(
            parts[0],
            TPoly::monomial(ExponentVector::new(vec![2]), rat(1, 2))
        );
        assert_eq!(parts[1], TPoly::constant(1, rat(1, 2)));
    }
}
