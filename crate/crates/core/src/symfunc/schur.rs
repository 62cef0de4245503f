use alloc::vec::Vec;

use super::{complete_homogeneous_table, Partition};
use crate::det::{determinant, DetAlgorithm};
use crate::polyring::{PolyRing, TPoly};

/// Schur polynomial `s_lambda(t_1, ..., t_r, 0, ...)` from the Jacobi-Trudi
/// determinant `det(h_{lambda_i - i + j})`.
pub fn schur(lambda: &Partition, r: usize) -> TPoly {
    let len = lambda.length();
    if len == 0 {
        return TPoly::one(r);
    }
    let max_index = lambda.parts()[0] + len - 1;
    let h = complete_homogeneous_table(max_index, r);
    let entry = |index: i64| -> TPoly {
        usize::try_from(index)
            .ok()
            .and_then(|k| h.get(k).cloned())
            .unwrap_or_else(|| TPoly::zero(r))
    };
    let matrix: Vec<Vec<TPoly>> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| {
            (0..len)
                .map(|j| entry(part as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(&PolyRing { nvars: r }, &matrix, DetAlgorithm::Auto)
}
