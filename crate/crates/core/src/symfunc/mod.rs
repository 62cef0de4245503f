//! Partitions and the symmetric-function toolbox in the normalized power-sum
//! variables `t_j = p_j / j`.

mod homogeneous;
mod partition;
mod schur;
mod tableaux;

pub use homogeneous::{
    complete_homogeneous, complete_homogeneous_table, cycle_index, CycleTypeData,
};
pub use partition::{partitions_of, Partition};
pub use schur::schur;
pub(crate) use tableaux::kostka_against;
pub use tableaux::{f_lambda, kostka_g, kostka_ssyt_oracle};
