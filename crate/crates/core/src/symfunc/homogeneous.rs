use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use super::{partitions_of, Partition};
use crate::polyring::{ExponentVector, TPoly};
use crate::rational::{factorial, int, Rational};

/// `h_0, ..., h_max` in `t_1..t_r` (all higher `t_j` set to zero), where
/// `sum_k h_k z^k = exp(sum_j t_j z^j)`.
///
/// Uses `k h_k = sum_{j=1}^{min(k,r)} j t_j h_{k-j}`, obtained by
/// differentiating the generating function in `z`.
pub fn complete_homogeneous_table(max: usize, r: usize) -> Vec<TPoly> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(TPoly::one(r));
    for k in 1..=max {
        let mut acc = TPoly::zero(r);
        for j in 1..=k.min(r) {
            let shifted = &TPoly::variable(r, j) * &table[k - j];
            acc = &acc + &shifted.scale(&int(j as i64));
        }
        table.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k))));
    }
    table
}

/// `h_k(t_1, ..., t_r, 0, 0, ...)`; zero for negative `k`.
pub fn complete_homogeneous(k: i64, r: usize) -> TPoly {
    match usize::try_from(k) {
        Ok(k) => complete_homogeneous_table(k, r)
            .pop()
            .expect("table is nonempty"),
        Err(_) => TPoly::zero(r),
    }
}

/// Cycle type `mu` of a permutation in `S_r`, with `z_mu` and the size of its
/// conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTypeData {
    pub partition: Partition,
    /// `prod_i i^{m_i} m_i!`
    pub z_mu: BigUint,
    /// `r! / z_mu`
    pub conjugacy_class_size: BigUint,
}

impl CycleTypeData {
    pub fn new(partition: Partition) -> Self {
        let z_mu = partition
            .multiplicities()
            .iter()
            .enumerate()
            .skip(1)
            .fold(BigUint::one(), |acc, (i, &m)| {
                acc * BigUint::from(i).pow(m as u32) * factorial(m)
            });
        let conjugacy_class_size = factorial(partition.weight()) / &z_mu;
        CycleTypeData {
            partition,
            z_mu,
            conjugacy_class_size,
        }
    }

    /// Every cycle type of `S_r`, in decreasing lexicographic order.
    pub fn all(r: usize) -> Vec<CycleTypeData> {
        partitions_of(r, r)
            .into_iter()
            .map(CycleTypeData::new)
            .collect()
    }
}

/// Cycle index of `S_r`: `(1/r!) sum_{|mu|=r} |C_mu| prod_i t_{mu_i}`.
pub fn cycle_index(r: usize) -> TPoly {
    let r_factorial = factorial(r);
    let mut out = TPoly::zero(r);
    for data in CycleTypeData::all(r) {
        let mut exps = alloc::vec![0u32; r];
        for &part in data.partition.parts() {
            exps[part - 1] += 1;
        }
        let coeff = Rational::new(
            BigInt::from(data.conjugacy_class_size),
            BigInt::from(r_factorial.clone()),
        );
        out.add_term(ExponentVector::new(exps), coeff);
    }
    out
}
