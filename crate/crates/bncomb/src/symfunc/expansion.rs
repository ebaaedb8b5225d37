//! Class functions of the hyperoctahedral group `B_n` expanded in the wreath
//! power-sum basis `p_{(μ,ν)} = p_μ(z) p_ν(z̄)`.
//!
//! A virtual character `V` of `B_n` corresponds to the expansion
//! `F(V) = Σ_{(μ,ν)} χ_V(μ,ν) / (z_μ z_ν) · p_{(μ,ν)}` over pairs of
//! partitions with `|μ| + |ν| = n` (bars mark the classes with negative
//! cycles). Coefficients are truncated `(q,t)`-series so graded characters
//! are first-class citizens. Key operations:
//!
//! - [`SymExpansion::internal_product`]: pointwise product of characters
//!   (the coefficient at `(μ,ν)` picks up a factor `z_μ z_ν`).
//! - [`SymExpansion::mul`]: ordinary (induction) product; levels add.
//! - [`SymExpansion::inner_product`]: the pairing making irreducible
//!   characters orthonormal, `Σ a_{μν} b_{μν} z_μ z_ν / 2^{ℓ(μ)+ℓ(ν)}`.
//! - [`SymExpansion::character_value`]: recover `χ(μ,ν)` from a coefficient.

use super::{coeff_int, partitions_of, Coeff, Partition, QTSeries, SymError};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// All ordered pairs of partitions `(μ, ν)` with `|μ| + |ν| = n`, grouped by
/// `|μ|` descending (so `((n-part), ∅)`-types come first), each block in the
/// order of [`partitions_of`].
#[must_use]
pub fn partition_pairs(n: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for mu in partitions_of(k) {
            for nu in partitions_of(n - k) {
                out.push((mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// An expansion `Σ c_{μν}(q,t) · p_{(μ,ν)}` at a fixed level `n = |μ|+|ν|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpansion {
    level: u32,
    trunc: u32,
    terms: BTreeMap<(Partition, Partition), QTSeries>,
}

impl SymExpansion {
    /// The zero expansion at the given level and coefficient truncation.
    #[must_use]
    pub fn new(level: u32, trunc: u32) -> Self {
        Self {
            level,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The expansion of the trivial character: `Σ p_{(μ,ν)} / (z_μ z_ν)`.
    /// This is the neutral element of [`SymExpansion::internal_product`].
    #[must_use]
    pub fn neutral(level: u32, trunc: u32) -> Self {
        let mut out = Self::new(level, trunc);
        for (mu, nu) in partition_pairs(level) {
            let c = Coeff::new(BigInt::from(1), BigInt::from(mu.z() * nu.z()));
            out.add_term(&mu, &nu, &QTSeries::monomial(trunc, 0, 0, c));
        }
        out
    }

    /// Level `n` (common size of the labeling partition pairs).
    #[must_use]
    pub fn level(&self) -> u32 {
        self.level
    }

    /// Coefficient truncation order.
    #[must_use]
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Adds `series · p_{(μ,ν)}` into the expansion.
    ///
    /// # Panics
    ///
    /// Panics if `|μ| + |ν|` differs from the level.
    pub fn add_term(&mut self, mu: &Partition, nu: &Partition, series: &QTSeries) {
        assert_eq!(
            mu.size() + nu.size(),
            self.level,
            "partition pair ({mu},{nu}) has the wrong level"
        );
        let key = (mu.clone(), nu.clone());
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| QTSeries::zero(self.trunc));
        *entry = entry.add(series);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// The coefficient of `p_{(μ,ν)}` (zero series if absent).
    #[must_use]
    pub fn coeff(&self, mu: &Partition, nu: &Partition) -> QTSeries {
        self.terms
            .get(&(mu.clone(), nu.clone()))
            .cloned()
            .unwrap_or_else(|| QTSeries::zero(self.trunc))
    }

    /// Iterates over nonzero terms in key order.
    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &QTSeries)> {
        self.terms.iter()
    }

    /// Sum of expansions.
    ///
    /// # Errors
    ///
    /// [`SymError::LevelMismatch`] if the levels differ.
    pub fn add(&self, other: &Self) -> Result<Self, SymError> {
        self.check_level(other)?;
        let mut out = self.clone();
        for ((mu, nu), series) in &other.terms {
            out.add_term(mu, nu, series);
        }
        Ok(out)
    }

    /// Multiplies every coefficient by a fixed series.
    #[must_use]
    pub fn scale_series(&self, factor: &QTSeries) -> Self {
        let mut out = Self::new(self.level, self.trunc.min(factor.trunc()));
        for ((mu, nu), series) in &self.terms {
            out.add_term(mu, nu, &series.mul(factor));
        }
        out
    }

    /// The character value `χ(μ,ν) = c_{μν} · z_μ z_ν` as a series.
    #[must_use]
    pub fn character_value(&self, mu: &Partition, nu: &Partition) -> QTSeries {
        self.coeff(mu, nu)
            .scale(&coeff_int((mu.z() * nu.z()) as i64))
    }

    fn check_level(&self, other: &Self) -> Result<(), SymError> {
        if self.level != other.level {
            return Err(SymError::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(())
    }

    /// Internal (pointwise-character) product: characters multiply class by
    /// class. In the `p`-basis this is diagonal with a `z_μ z_ν` scaling:
    /// `(a ∗ b)_{μν} = a_{μν} · b_{μν} · z_μ z_ν`.
    ///
    /// # Errors
    ///
    /// [`SymError::LevelMismatch`] if the levels differ.
    pub fn internal_product(&self, other: &Self) -> Result<Self, SymError> {
        self.check_level(other)?;
        let mut out = Self::new(self.level, self.trunc.min(other.trunc));
        for ((mu, nu), a) in &self.terms {
            let b = other.coeff(mu, nu);
            if b.is_zero() {
                continue;
            }
            let z = coeff_int((mu.z() * nu.z()) as i64);
            out.add_term(mu, nu, &a.mul(&b).scale(&z));
        }
        Ok(out)
    }

    /// Ordinary product of symmetric functions: `p`-monomials concatenate,
    /// `p_{(μ,ν)} · p_{(α,γ)} = p_{(μ∪α, ν∪γ)}`; levels add. Models
    /// induction products of characters.
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::new(self.level + other.level, self.trunc.min(other.trunc));
        for ((mu, nu), a) in &self.terms {
            for ((alpha, gamma), b) in &other.terms {
                out.add_term(&mu.union(alpha), &nu.union(gamma), &a.mul(b));
            }
        }
        out
    }

    /// The Hall pairing for `B_n`: `⟨a, b⟩ = Σ_{(μ,ν)} a_{μν} b_{μν} z_μ z_ν
    /// / 2^{ℓ(μ)+ℓ(ν)}`. Irreducible-character expansions are orthonormal,
    /// so this extracts graded multiplicities.
    ///
    /// # Errors
    ///
    /// [`SymError::LevelMismatch`] if the levels differ.
    pub fn inner_product(&self, other: &Self) -> Result<QTSeries, SymError> {
        self.check_level(other)?;
        let mut out = QTSeries::zero(self.trunc.min(other.trunc));
        for ((mu, nu), a) in &self.terms {
            let b = other.coeff(mu, nu);
            if b.is_zero() {
                continue;
            }
            let weight = Coeff::new(
                BigInt::from(mu.z() * nu.z()),
                BigInt::from(1u64 << (mu.len() + nu.len())),
            );
            out = out.add(&a.mul(&b).scale(&weight));
        }
        Ok(out)
    }
}
