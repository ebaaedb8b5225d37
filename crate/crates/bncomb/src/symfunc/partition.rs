//! Integer partitions and their classical combinatorial invariants.
//!
//! - [`Partition`]: weakly decreasing positive parts; ordered, hashable,
//!   usable as a map key.
//! - [`Partition::conjugate`], [`Partition::z`] (centralizer order `z_μ`),
//!   [`Partition::hook_dim`] (standard Young tableaux count `f^λ`).
//! - [`partitions_of`]: all partitions of `n` in descending lexicographic
//!   order.
//! - [`gaussian_binomial`]: coefficient vector of the `q`-binomial
//!   `[n choose k]_q`.

use super::SymError;
use std::fmt;

/// An integer partition: weakly decreasing positive parts.
///
/// The empty partition is allowed and prints as `()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// # Errors
    ///
    /// [`SymError::NotDecreasing`] if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, SymError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    /// The empty partition.
    #[must_use]
    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// The parts, weakly decreasing, without zeros.
    #[must_use]
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`, the sum of the parts.
    #[must_use]
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    #[must_use]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// Whether this is the empty partition.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition `λ'` (transpose of the Young diagram).
    #[must_use]
    pub fn conjugate(&self) -> Self {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u32)
            .collect();
        Self { parts }
    }

    /// `z_λ = ∏_i i^{m_i} m_i!` where `m_i` is the multiplicity of `i`;
    /// the centralizer order of a permutation of cycle type `λ` in `S_{|λ|}`.
    #[must_use]
    pub fn z(&self) -> u64 {
        let mut z = 1u64;
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let mut mult = 0u64;
            while i < self.parts.len() && self.parts[i] == part {
                mult += 1;
                i += 1;
            }
            for k in 1..=mult {
                z *= u64::from(part) * k;
            }
        }
        z
    }

    /// `f^λ`, the number of standard Young tableaux of shape `λ`, by the
    /// hook-length formula.
    #[must_use]
    pub fn hook_dim(&self) -> u64 {
        let n = self.size();
        let conj = self.conjugate();
        let mut numerator = 1u128;
        for k in 1..=u128::from(n) {
            numerator *= k;
        }
        let mut hooks = 1u128;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj.parts[(j - 1) as usize] - (i as u32) - 1;
                hooks *= u128::from(arm + leg + 1);
            }
        }
        u64::try_from(numerator / hooks).expect("tableaux count fits in u64")
    }

    /// Union of two partitions as multisets of parts.
    #[must_use]
    pub fn union(&self, other: &Self) -> Self {
        let mut parts: Vec<u32> = self
            .parts
            .iter()
            .chain(other.parts.iter())
            .copied()
            .collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }
}

/// All partitions of `n`, in descending lexicographic order:
/// `(n)` first, `(1,…,1)` last. `partitions_of(0)` is `[()]`.
#[must_use]
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    gen_partitions(n, n, &mut current, &mut out);
    out
}

fn gen_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        gen_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Binomial coefficient `C(n, k)`.
#[must_use]
pub fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..u128::from(k) {
        num *= u128::from(n) - i;
        den *= i + 1;
    }
    u64::try_from(num / den).expect("binomial fits in u64")
}

/// Coefficient vector of the Gaussian binomial `[n choose k]_q`:
/// entry `e` is the coefficient of `q^e`; length `k(n−k) + 1`.
///
/// Computed by the recurrence `[n k]_q = [n−1 k−1]_q + q^k [n−1 k]_q`.
#[must_use]
pub fn gaussian_binomial(n: u32, k: u32) -> Vec<u64> {
    if k > n {
        return vec![0];
    }
    // table[j] = coefficient vector of [m choose j]_q, updated for m = 0..n.
    let mut table: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let mut next: Vec<Vec<u64>> = Vec::with_capacity((m + 1) as usize);
        for j in 0..=m.min(k) {
            if j == 0 || j == m {
                next.push(vec![1]);
                continue;
            }
            let left = &table[(j - 1) as usize]; // [m-1, j-1]
            let right = &table[j as usize]; // [m-1, j], shifted by q^j
            let len = (j * (m - j) + 1) as usize;
            let mut coeffs = vec![0u64; len];
            for (e, &c) in left.iter().enumerate() {
                coeffs[e] += c;
            }
            for (e, &c) in right.iter().enumerate() {
                coeffs[e + j as usize] += c;
            }
            next.push(coeffs);
        }
        table = next;
    }
    table[k as usize].clone()
}
