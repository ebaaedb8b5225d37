//! Irreducible characters of the symmetric group via the
//! Murnaghan–Nakayama rule.
//!
//! `χ^λ_μ = Σ_T (−1)^{ht(T)}` over border-strip tableaux of shape `λ` and
//! content `μ`, computed recursively: remove a border strip of length `μ_1`
//! from `λ` in every legal way, recurse on the rest, and sum with signs.
//! Strips are manipulated through first-column hook lengths (beta-sets):
//! removing a strip of length `k` subtracts `k` from one beta-number, and the
//! height is the number of beta-numbers jumped over.

use super::{Partition, SymError};
use std::collections::HashMap;

/// The irreducible symmetric-group character `χ^λ_μ`.
///
/// # Errors
///
/// [`SymError::SizeMismatch`] unless `|λ| = |μ|`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, SymError> {
    if lambda.size() != mu.size() {
        return Err(SymError::SizeMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let mut memo: HashMap<(Vec<u32>, usize), i64> = HashMap::new();
    Ok(mn_rec(lambda.parts().to_vec(), mu.parts(), 0, &mut memo))
}

fn mn_rec(
    lambda: Vec<u32>,
    mu: &[u32],
    idx: usize,
    memo: &mut HashMap<(Vec<u32>, usize), i64>,
) -> i64 {
    if idx == mu.len() {
        // Sizes matched at the top level, so lambda is exhausted too.
        debug_assert!(lambda.is_empty());
        return 1;
    }
    if let Some(&v) = memo.get(&(lambda.clone(), idx)) {
        return v;
    }
    let k = mu[idx];
    let m = lambda.len();
    // Beta-set: β_j = λ_j + (m − j), 1-based j; strictly decreasing.
    let beta: Vec<u32> = lambda
        .iter()
        .enumerate()
        .map(|(j0, &part)| part + (m - 1 - j0) as u32)
        .collect();
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        // Height: beta-numbers strictly between target and b.
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[pos] = target;
        new_beta.sort_unstable_by(|a, b| b.cmp(a));
        let mut new_lambda: Vec<u32> = new_beta
            .iter()
            .enumerate()
            .map(|(j0, &bj)| bj - (m - 1 - j0) as u32)
            .collect();
        while new_lambda.last() == Some(&0) {
            new_lambda.pop();
        }
        total += sign * mn_rec(new_lambda, mu, idx + 1, memo);
    }
    memo.insert((lambda, idx), total);
    total
}
