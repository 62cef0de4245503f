//! Division-free determinants over commutative rings.
//!
//! Two algorithms are provided: Laplace expansion with minors memoized by
//! column subset (`O(2^d d)` ring multiplications, best for small `d`) and
//! the Samuelson-Berkowitz characteristic-polynomial recurrence (`O(d^4)`).
//! Neither divides, so both work over truncated series rings.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// A commutative ring given by a context value, so that elements such as
/// truncated series can carry their shape (variable count, order) in the
/// context instead of the type.
pub trait Ring {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

/// The field of rationals, mainly for cross-checking the algorithms.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalRing;

impl Ring for RationalRing {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetAlgorithm {
    /// Laplace below [`LAPLACE_THRESHOLD`], Berkowitz from there on.
    #[default]
    Auto,
    Laplace,
    Berkowitz,
}

/// Smallest dimension for which [`DetAlgorithm::Auto`] picks Berkowitz.
pub const LAPLACE_THRESHOLD: usize = 5;

/// Determinant of a square matrix given as rows. The empty matrix has
/// determinant one.
pub fn determinant<R: Ring>(ring: &R, matrix: &[Vec<R::Elem>], algorithm: DetAlgorithm) -> R::Elem {
    let d = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == d),
        "determinant of a non-square matrix"
    );
    match algorithm {
        DetAlgorithm::Laplace => laplace(ring, matrix),
        DetAlgorithm::Berkowitz => berkowitz(ring, matrix),
        DetAlgorithm::Auto if d < LAPLACE_THRESHOLD => laplace(ring, matrix),
        DetAlgorithm::Auto => berkowitz(ring, matrix),
    }
}

/// Expansion along rows from the bottom up. `minors[S]` holds the
/// determinant of the last `|S|` rows restricted to the columns in bitmask
/// `S`.
fn laplace<R: Ring>(ring: &R, matrix: &[Vec<R::Elem>]) -> R::Elem {
    let d = matrix.len();
    assert!(
        d < usize::BITS as usize,
        "matrix too large for subset expansion"
    );
    if d == 0 {
        return ring.one();
    }
    let full = (1usize << d) - 1;
    let mut minors: Vec<Option<R::Elem>> = vec![None; 1 << d];
    minors[0] = Some(ring.one());
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); d + 1];
    for mask in 1..=full {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for size in 1..=d {
        let row = &matrix[d - size];
        for &mask in &by_size[size] {
            let mut acc = ring.zero();
            let mut position = 0;
            for (col, entry) in row.iter().enumerate() {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let rest = minors[mask & !(1 << col)].as_ref().expect("minor computed");
                if !ring.is_zero(entry) && !ring.is_zero(rest) {
                    let term = ring.mul(entry, rest);
                    acc = if position % 2 == 0 {
                        ring.add(&acc, &term)
                    } else {
                        ring.sub(&acc, &term)
                    };
                }
                position += 1;
            }
            minors[mask] = Some(acc);
        }
        // minors of size - 1 are no longer needed
        if size >= 2 {
            for &mask in &by_size[size - 1] {
                minors[mask] = None;
            }
        }
    }
    minors[full].take().expect("full determinant computed")
}

/// Samuelson-Berkowitz: builds the characteristic polynomial
/// `det(x I - A)` from the bottom-right corner outwards via Toeplitz
/// matrix-vector products, then reads off `det A = (-1)^d c_d`.
fn berkowitz<R: Ring>(ring: &R, matrix: &[Vec<R::Elem>]) -> R::Elem {
    let d = matrix.len();
    if d == 0 {
        return ring.one();
    }
    // characteristic polynomial of the trailing 1x1 block, leading coefficient first
    let mut poly = vec![ring.one(), ring.neg(&matrix[d - 1][d - 1])];
    for k in (0..d - 1).rev() {
        let m = d - 1 - k; // size of the trailing block below/right of (k, k)
        let a = &matrix[k][k];
        let row: Vec<R::Elem> = (k + 1..d).map(|j| matrix[k][j].clone()).collect();
        let mut col: Vec<R::Elem> = (k + 1..d).map(|i| matrix[i][k].clone()).collect();

        // q = [1, -a, -R C, -R A1 C, ..., -R A1^{m-1} C]
        let mut q = Vec::with_capacity(m + 2);
        q.push(ring.one());
        q.push(ring.neg(a));
        for step in 0..m {
            let dot = row
                .iter()
                .zip(&col)
                .fold(ring.zero(), |acc, (x, y)| ring.add(&acc, &ring.mul(x, y)));
            q.push(ring.neg(&dot));
            if step + 1 < m {
                col = (k + 1..d)
                    .map(|i| {
                        (k + 1..d).zip(&col).fold(ring.zero(), |acc, (j, c)| {
                            ring.add(&acc, &ring.mul(&matrix[i][j], c))
                        })
                    })
                    .collect();
            }
        }

        // next = T q, T lower-triangular Toeplitz of shape (m+2) x (m+1)
        let next: Vec<R::Elem> = (0..m + 2)
            .map(|i| {
                (0..=i.min(m)).fold(ring.zero(), |acc, j| {
                    ring.add(&acc, &ring.mul(&q[i - j], &poly[j]))
                })
            })
            .collect();
        poly = next;
    }
    let constant = poly
        .pop()
        .expect("characteristic polynomial has d+1 coefficients");
    if d % 2 == 0 {
        constant
    } else {
        ring.neg(&constant)
    }
}
