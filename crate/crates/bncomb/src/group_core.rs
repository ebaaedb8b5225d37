//! Signed permutations (hyperoctahedral group `B_n`) and their flag
//! statistics.
//!
//! Elements are kept in *window notation*: `β = β(1) … β(n)` where
//! `{|β(1)|, …, |β(n)|} = {1, …, n}` and each entry carries a sign. Key
//! operations:
//!
//! - [`SignedPerm::parse`] / [`SignedPerm::to_string`]: window notation I/O
//!   (negatives written with a leading `-`).
//! - [`SignedPerm::compose`] / [`SignedPerm::inverse`]: group structure, with
//!   `(a ∘ b)(i) = sign(b(i)) · a(|b(i)|)`.
//! - [`SignedPerm::stats`]: descent set, major index, negative count and flag
//!   major index `fmaj = 2·maj + neg`, all with respect to the order `≺`
//!   implemented by [`entry_key`].
//! - [`SignedPerm::local_vectors`]: the local statistics `f`, `g`, `g̃`, `ĝ`
//!   and `μ` underlying biexponent diagrams.
//! - [`SignedPerm::circ_involution`]: the involution `β° = −w₀ β w₀`.
//! - [`SignedPerm::signed_cycle_type`] / [`SignedPerm::sign`]: conjugacy-class
//!   data.
//! - [`enumerate_bn`]: deterministic enumeration of the whole group.
//!
//! The order `≺` on window entries sorts all negatives before all
//! non-negatives, negatives by *absolute value* and non-negatives naturally:
//!
//! ```text
//! -1 ≺ -2 ≺ -3 ≺ ⋯ ≺ 0 ≺ 1 ≺ 2 ≺ 3 ≺ ⋯
//! ```
//!
//! Every statistic in this crate is taken with respect to this order; the
//! identities tying `fmaj` to the degrees of diagonally invariant monomials
//! fail for the naive integer order.

use crate::symfunc::Partition;
use std::fmt;
use thiserror::Error;

/// Errors for signed-permutation construction and enumeration.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// Two window entries share an absolute value.
    #[error("duplicate absolute value {0} in window")]
    DuplicateAbs(i32),
    /// An entry's absolute value falls outside `1..=n`.
    #[error("entry {value} out of range for window length {n}")]
    OutOfRange {
        /// Offending window entry.
        value: i32,
        /// Window length.
        n: usize,
    },
    /// `0` appeared as a window entry (entries are signed, never zero).
    #[error("window entries must be non-zero")]
    ZeroEntry,
    /// A window failed to parse as whitespace-separated integers.
    #[error("cannot parse window entry {0:?}")]
    Unparsable(String),
    /// The window was empty.
    #[error("empty window")]
    EmptyWindow,
    /// Two permutations of different sizes were combined.
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch {
        /// Size of the left operand.
        left: usize,
        /// Size of the right operand.
        right: usize,
    },
    /// Enumeration would exceed the configured cap.
    #[error("refusing to enumerate B_{n}: {n} exceeds cap {cap}")]
    CapExceeded {
        /// Requested rank.
        n: usize,
        /// Maximum allowed rank.
        cap: usize,
    },
}

/// Default cap on [`enumerate_bn`]: `|B_7| = 645 120` is the largest group
/// materialized without an explicit opt-in.
pub const DEFAULT_ENUMERATE_CAP: usize = 7;

/// Comparison key realizing the order `≺` on window entries:
/// `-1 ≺ -2 ≺ ⋯ ≺ 0 ≺ 1 ≺ 2 ≺ ⋯`.
///
/// Negative entries compare by absolute value and precede all non-negative
/// entries; non-negative entries compare naturally. `x ≺ y` iff
/// `entry_key(x) < entry_key(y)`.
#[must_use]
pub fn entry_key(x: i32) -> (u8, i32) {
    if x < 0 {
        (0, -x)
    } else {
        (1, x)
    }
}

/// Descent-style statistics of a signed permutation.
///
/// Positions are 1-based: `des ⊆ {1, …, n−1}` and `i ∈ des` means
/// `β(i) ≻ β(i+1)` in the order `≺`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatRecord {
    /// Descent positions, increasing.
    pub des: Vec<usize>,
    /// Rise positions: `{1, …, n−1} ∖ des`, increasing.
    pub ris: Vec<usize>,
    /// Major index: sum of descent positions.
    pub maj: u32,
    /// Number of negative window entries.
    pub neg: u32,
    /// Flag major index `2·maj + neg`.
    pub fmaj: u32,
}

/// The local descent vectors attached to a signed permutation.
///
/// All vectors have length `n` and are indexed by window position
/// (`f[i-1]` is the mathematical `f_i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalVectors {
    /// `f_i = 2·#{j ∈ Des(β) : j ≥ i} + [β(i) < 0]`; sums to `fmaj(β)`.
    pub f: Vec<u32>,
    /// `g_i = 2·#{j ∈ Des(β) : j < i} + [β(i) > 0]`; weakly increasing.
    pub g: Vec<u32>,
    /// `g̃_i(β) = g_{σ(i)}(β⁻¹)` where `σ(i) = |β(i)|`.
    pub g_tilde: Vec<u32>,
    /// `ĝ_i = 2·μ_{σ(i)}(β) + [β(i) < 0]`.
    pub g_hat: Vec<u32>,
    /// `μ_j(β) = #{k ∈ Ris(β⁻¹) : k < j}`; weakly increasing.
    pub mu: Vec<u32>,
}

/// A signed permutation in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    window: Vec<i32>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm({self})")
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl SignedPerm {
    /// Builds a signed permutation from its window, validating that absolute
    /// values are a permutation of `1..=n`.
    ///
    /// # Errors
    ///
    /// [`GroupError::EmptyWindow`], [`GroupError::ZeroEntry`],
    /// [`GroupError::OutOfRange`] or [`GroupError::DuplicateAbs`].
    pub fn from_window(window: Vec<i32>) -> Result<Self, GroupError> {
        if window.is_empty() {
            return Err(GroupError::EmptyWindow);
        }
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &e in &window {
            if e == 0 {
                return Err(GroupError::ZeroEntry);
            }
            let a = e.unsigned_abs() as usize;
            if a > n {
                return Err(GroupError::OutOfRange { value: e, n });
            }
            if seen[a] {
                return Err(GroupError::DuplicateAbs(e.abs()));
            }
            seen[a] = true;
        }
        Ok(Self { window })
    }

    /// Parses window notation: whitespace-separated signed integers, e.g.
    /// `"-2 -1 -5 4 3"`.
    ///
    /// # Errors
    ///
    /// [`GroupError::Unparsable`] for malformed tokens, plus the validation
    /// errors of [`SignedPerm::from_window`].
    pub fn parse(input: &str) -> Result<Self, GroupError> {
        let mut window = Vec::new();
        for tok in input.split_whitespace() {
            let e: i32 = tok
                .parse()
                .map_err(|_| GroupError::Unparsable(tok.to_string()))?;
            window.push(e);
        }
        Self::from_window(window)
    }

    /// The identity of `B_n`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    #[must_use]
    pub fn identity(n: usize) -> Self {
        assert!(n > 0, "B_n requires n >= 1");
        Self {
            window: (1..=n as i32).collect(),
        }
    }

    /// The longest element `w₀ = n (n−1) … 2 1` (all entries positive).
    #[must_use]
    pub fn longest_element(n: usize) -> Self {
        assert!(n > 0, "B_n requires n >= 1");
        Self {
            window: (1..=n as i32).rev().collect(),
        }
    }

    /// Window length `n`.
    #[must_use]
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// The raw window.
    #[must_use]
    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `β(i)` for 1-based `i`.
    ///
    /// # Panics
    ///
    /// Panics if `i` is outside `1..=n`.
    #[must_use]
    pub fn entry(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    /// `σ(i) = |β(i)|` for 1-based `i`.
    #[must_use]
    pub fn abs_entry(&self, i: usize) -> usize {
        self.entry(i).unsigned_abs() as usize
    }

    /// Composition `self ∘ other` (apply `other` first):
    /// `(a ∘ b)(i) = sign(b(i)) · a(|b(i)|)`.
    ///
    /// # Errors
    ///
    /// [`GroupError::SizeMismatch`] if the two windows differ in length.
    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.n() != other.n() {
            return Err(GroupError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        let window = (1..=self.n())
            .map(|i| {
                let b = other.entry(i);
                let a = self.entry(b.unsigned_abs() as usize);
                if b < 0 {
                    -a
                } else {
                    a
                }
            })
            .collect();
        Ok(Self { window })
    }

    /// Group inverse: `β⁻¹(|β(i)|) = sign(β(i)) · i`.
    #[must_use]
    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0i32; n];
        for i in 1..=n {
            let e = self.entry(i);
            window[e.unsigned_abs() as usize - 1] = if e < 0 { -(i as i32) } else { i as i32 };
        }
        Self { window }
    }

    /// Global sign flip `β ↦ −β` (negate every window entry).
    #[must_use]
    pub fn negate(&self) -> Self {
        Self {
            window: self.window.iter().map(|&e| -e).collect(),
        }
    }

    /// Descent statistics with respect to the order `≺` (see [`entry_key`]).
    #[must_use]
    pub fn stats(&self) -> StatRecord {
        let n = self.n();
        let mut des = Vec::new();
        let mut ris = Vec::new();
        for i in 1..n {
            if entry_key(self.entry(i)) > entry_key(self.entry(i + 1)) {
                des.push(i);
            } else {
                ris.push(i);
            }
        }
        let maj: u32 = des.iter().map(|&i| i as u32).sum();
        let neg = self.window.iter().filter(|&&e| e < 0).count() as u32;
        StatRecord {
            des,
            ris,
            maj,
            neg,
            fmaj: 2 * maj + neg,
        }
    }

    /// Flag major index `fmaj = 2·maj + neg`.
    #[must_use]
    pub fn fmaj(&self) -> u32 {
        self.stats().fmaj
    }

    /// The local vectors `f`, `g`, `g̃`, `ĝ`, `μ`.
    ///
    /// `f` collects the exponents of the descent-basis monomial (top-degree
    /// form), `g` its weakly increasing companion, `g̃` transports `g` along
    /// the inverse, and `ĝ` is the rise-counting variant entering compact
    /// `o`-diagrams.
    #[must_use]
    pub fn local_vectors(&self) -> LocalVectors {
        let n = self.n();
        let stats = self.stats();
        let inv = self.inverse();
        let inv_stats = inv.stats();

        let f = (1..=n)
            .map(|i| {
                let d = stats.des.iter().filter(|&&j| j >= i).count() as u32;
                2 * d + u32::from(self.entry(i) < 0)
            })
            .collect();
        let g = Self::g_from_parts(&stats.des, |i| self.entry(i) > 0, n);
        let g_inv = Self::g_from_parts(&inv_stats.des, |i| inv.entry(i) > 0, n);
        let g_tilde = (1..=n).map(|i| g_inv[self.abs_entry(i) - 1]).collect();

        // mu_j = #{k in Ris(beta^{-1}) : k < j}
        let mu: Vec<u32> = (1..=n)
            .map(|j| inv_stats.ris.iter().filter(|&&k| k < j).count() as u32)
            .collect();
        let g_hat = (1..=n)
            .map(|i| 2 * mu[self.abs_entry(i) - 1] + u32::from(self.entry(i) < 0))
            .collect();

        LocalVectors {
            f,
            g,
            g_tilde,
            g_hat,
            mu,
        }
    }

    fn g_from_parts(des: &[usize], positive: impl Fn(usize) -> bool, n: usize) -> Vec<u32> {
        (1..=n)
            .map(|i| {
                let delta = des.iter().filter(|&&j| j < i).count() as u32;
                2 * delta + u32::from(positive(i))
            })
            .collect()
    }

    /// The exponent sequence `(f_1, …, f_n)` of the descent-basis monomial
    /// `b_β = ∏ x_i^{f_i}`; its total degree is `fmaj(β)`.
    #[must_use]
    pub fn descent_basis_exponents(&self) -> Vec<u32> {
        self.local_vectors().f
    }

    /// The involution `β° = −w₀ β w₀` (conjugate by the longest element,
    /// then flip all signs).
    #[must_use]
    pub fn circ_involution(&self) -> Self {
        let w0 = Self::longest_element(self.n());
        let conj = w0
            .compose(&self.compose(&w0).expect("same n"))
            .expect("same n");
        conj.negate()
    }

    /// Signed cycle type `(μ⁺, μ⁻)`: cycle lengths of `σ = |β|`, a cycle
    /// contributing to `μ⁻` iff it contains an odd number of negative
    /// window entries.
    #[must_use]
    pub fn signed_cycle_type(&self) -> (Partition, Partition) {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut negatives = 0u32;
            let mut i = start;
            loop {
                seen[i] = true;
                len += 1;
                if self.entry(i) < 0 {
                    negatives += 1;
                }
                i = self.abs_entry(i);
                if i == start {
                    break;
                }
            }
            if negatives.is_multiple_of(2) {
                pos.push(len);
            } else {
                neg.push(len);
            }
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        (
            Partition::new(pos).expect("sorted descending"),
            Partition::new(neg).expect("sorted descending"),
        )
    }

    /// The one-dimensional determinant character:
    /// `sign(β) = (−1)^{inv(σ)} (−1)^{neg(β)}`, the sign by which `β` scales
    /// the product `x_1⋯x_n ∏_{i<j}(x_i² − x_j²)`.
    #[must_use]
    pub fn sign(&self) -> i32 {
        let n = self.n();
        let mut inv_count = 0u32;
        for i in 1..=n {
            for j in (i + 1)..=n {
                if self.abs_entry(i) > self.abs_entry(j) {
                    inv_count += 1;
                }
            }
        }
        let neg = self.window.iter().filter(|&&e| e < 0).count() as u32;
        if (inv_count + neg).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Enumerates all of `B_n` in a deterministic order with the default cap of
/// [`DEFAULT_ENUMERATE_CAP`].
///
/// Order: underlying permutations lexicographically; within a permutation,
/// sign patterns count upward with position 1 as the most significant bit
/// (all-positive first, all-negative last). The first element is the
/// identity.
///
/// # Errors
///
/// [`GroupError::CapExceeded`] if `n` exceeds the cap.
pub fn enumerate_bn(n: usize) -> Result<Vec<SignedPerm>, GroupError> {
    enumerate_bn_with_cap(n, DEFAULT_ENUMERATE_CAP)
}

/// [`enumerate_bn`] with an explicit cap (`|B_n| = 2ⁿ n!` grows quickly; the
/// cap guards against accidental memory blow-ups).
///
/// # Errors
///
/// [`GroupError::CapExceeded`] if `n > cap`.
pub fn enumerate_bn_with_cap(n: usize, cap: usize) -> Result<Vec<SignedPerm>, GroupError> {
    if n > cap {
        return Err(GroupError::CapExceeded { n, cap });
    }
    assert!(n > 0, "B_n requires n >= 1");
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    let mut out = Vec::new();
    loop {
        for mask in 0..(1u32 << n) {
            let window: Vec<i32> = perm
                .iter()
                .enumerate()
                .map(|(idx, &v)| {
                    // Bit (n-1-idx): position 1 is the most significant bit.
                    if mask >> (n - 1 - idx) & 1 == 1 {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            out.push(SignedPerm { window });
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(out)
}

/// Advances `seq` to its lexicographic successor in place; returns `false`
/// (leaving `seq` untouched) when `seq` is already the last permutation.
pub(crate) fn next_permutation<T: Ord>(seq: &mut [T]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SignedPerm {
        SignedPerm::parse(s).unwrap()
    }

    #[test]
    fn order_on_entries() {
        // -1 ≺ -2 ≺ ⋯ ≺ 0 ≺ 1 ≺ 2 ≺ ⋯
        let ordered = [-1, -2, -3, 0, 1, 2, 3];
        for w in ordered.windows(2) {
            assert!(entry_key(w[0]) < entry_key(w[1]), "{} ⊀ {}", w[0], w[1]);
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["1 2", "-2 -1 -5 4 3", "3 -1 2"] {
            assert_eq!(sp(s).to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_bad_windows() {
        assert_eq!(SignedPerm::parse(""), Err(GroupError::EmptyWindow));
        assert_eq!(SignedPerm::parse("1 0"), Err(GroupError::ZeroEntry));
        assert_eq!(
            SignedPerm::parse("1 3"),
            Err(GroupError::OutOfRange { value: 3, n: 2 })
        );
        assert_eq!(SignedPerm::parse("1 -1"), Err(GroupError::DuplicateAbs(1)));
        assert!(matches!(
            SignedPerm::parse("1 x"),
            Err(GroupError::Unparsable(_))
        ));
    }

    #[test]
    fn compose_follows_right_to_left_convention() {
        // (a ∘ b)(i) = sign(b(i)) · a(|b(i)|), b applied first.
        let a = sp("2 1");
        let b = sp("-1 2");
        assert_eq!(a.compose(&b).unwrap(), sp("-2 1"));
    }

    #[test]
    fn b2_is_a_group_under_compose() {
        // Closure, identity, inverses, associativity over all of B_2.
        let elems = enumerate_bn(2).unwrap();
        assert_eq!(elems.len(), 8);
        let id = SignedPerm::identity(2);
        for a in &elems {
            assert_eq!(a.compose(&id).unwrap(), *a);
            assert_eq!(id.compose(a).unwrap(), *a);
            assert_eq!(a.compose(&a.inverse()).unwrap(), id);
            assert_eq!(a.inverse().compose(a).unwrap(), id);
            for b in &elems {
                let ab = a.compose(b).unwrap();
                assert!(elems.contains(&ab));
                for c in &elems {
                    let left = ab.compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn stats_of_worked_window() {
        // β = -2 -1 -5 4 3: descents where β(i) ≻ β(i+1).
        let stats = sp("-2 -1 -5 4 3").stats();
        assert_eq!(stats.des, vec![1, 4]);
        assert_eq!(stats.ris, vec![2, 3]);
        assert_eq!(stats.maj, 5);
        assert_eq!(stats.neg, 3);
        assert_eq!(stats.fmaj, 13);
    }

    #[test]
    fn fmaj_distribution_over_b2() {
        // Σ_{β ∈ B_2} q^{fmaj} = (1+q)(1+q+q²+q³).
        let mut counts = [0u32; 5];
        for beta in enumerate_bn(2).unwrap() {
            counts[beta.fmaj() as usize] += 1;
        }
        assert_eq!(counts, [1, 2, 2, 2, 1]);
    }

    #[test]
    fn descent_basis_exponents_of_worked_window() {
        let f = sp("-2 -1 -5 4 3").descent_basis_exponents();
        assert_eq!(f, vec![5, 3, 3, 2, 0]);
        assert_eq!(f.iter().sum::<u32>(), 13);
    }

    #[test]
    fn local_vectors_small_example() {
        let lv = sp("-1 2").local_vectors();
        assert_eq!(lv.g, vec![0, 1]);
        assert_eq!(lv.mu, vec![0, 1]);
    }

    /// The eight compact diagram rows for `B_2`: `(g(β), g̃(β))` columns.
    fn b2_g_table() -> Vec<(&'static str, Vec<u32>, Vec<u32>)> {
        vec![
            ("1 2", vec![1, 1], vec![1, 1]),
            ("-1 2", vec![0, 1], vec![0, 1]),
            ("1 -2", vec![1, 2], vec![1, 2]),
            ("-1 -2", vec![0, 0], vec![0, 0]),
            ("2 1", vec![1, 3], vec![3, 1]),
            ("-2 1", vec![0, 1], vec![2, 1]),
            ("2 -1", vec![1, 2], vec![1, 0]),
            ("-2 -1", vec![0, 2], vec![2, 0]),
        ]
    }

    #[test]
    fn g_and_g_tilde_match_b2_table() {
        for (w, g, gt) in b2_g_table() {
            let lv = sp(w).local_vectors();
            assert_eq!(lv.g, g, "g({w})");
            assert_eq!(lv.g_tilde, gt, "g̃({w})");
        }
    }

    /// `(g(β), ĝ(β))` columns for `B_2` (compact `o`-diagram cells, unsorted).
    fn b2_g_hat_table() -> Vec<(&'static str, Vec<u32>, Vec<u32>)> {
        vec![
            ("1 2", vec![1, 1], vec![0, 2]),
            ("-1 2", vec![0, 1], vec![1, 2]),
            ("1 -2", vec![1, 2], vec![0, 1]),
            ("-1 -2", vec![0, 0], vec![1, 3]),
            ("2 1", vec![1, 3], vec![0, 0]),
            ("-2 1", vec![0, 1], vec![1, 0]),
            ("2 -1", vec![1, 2], vec![2, 1]),
            ("-2 -1", vec![0, 2], vec![1, 1]),
        ]
    }

    #[test]
    fn g_hat_matches_b2_table() {
        for (w, g, gh) in b2_g_hat_table() {
            let lv = sp(w).local_vectors();
            assert_eq!(lv.g, g, "g({w})");
            assert_eq!(lv.g_hat, gh, "ĝ({w})");
        }
    }

    #[test]
    fn local_vector_invariants_over_b3() {
        for beta in enumerate_bn(3).unwrap() {
            let lv = beta.local_vectors();
            let stats = beta.stats();
            assert_eq!(lv.f.iter().sum::<u32>(), stats.fmaj, "Σf = fmaj ({beta})");
            assert!(lv.g.windows(2).all(|w| w[0] <= w[1]), "g incr ({beta})");
            assert!(lv.mu.windows(2).all(|w| w[0] <= w[1]), "μ incr ({beta})");
            // |g(β)| = fmaj(β°) and |g̃(β)| = fmaj((β⁻¹)°).
            assert_eq!(
                lv.g.iter().sum::<u32>(),
                beta.circ_involution().fmaj(),
                "|g| = fmaj(β°) ({beta})"
            );
            assert_eq!(
                lv.g_tilde.iter().sum::<u32>(),
                beta.inverse().circ_involution().fmaj(),
                "|g̃| = fmaj((β⁻¹)°) ({beta})"
            );
        }
    }

    #[test]
    fn circ_involution_basics() {
        assert_eq!(SignedPerm::identity(2).circ_involution(), sp("-1 -2"));
        for beta in enumerate_bn(3).unwrap() {
            let circ = beta.circ_involution();
            assert_eq!(circ.circ_involution(), beta, "involution ({beta})");
            // δ_i(β) = d_{n+1-i}(β°) and η_i(β) = ε_{n+1-i}(β°): equivalently
            // g_i(β) = f_{n+1-i}(β°) after unpacking both definitions.
            let g = beta.local_vectors().g;
            let f_circ = circ.local_vectors().f;
            let n = beta.n();
            for i in 1..=n {
                assert_eq!(g[i - 1], f_circ[n - i], "g_i(β) = f_(n+1-i)(β°) ({beta})");
            }
        }
    }

    #[test]
    fn signed_cycle_types() {
        let p = |parts: &[u32]| Partition::new(parts.to_vec()).unwrap();
        assert_eq!(
            SignedPerm::identity(3).signed_cycle_type(),
            (p(&[1, 1, 1]), p(&[]))
        );
        assert_eq!(sp("-1 -2").signed_cycle_type(), (p(&[]), p(&[1, 1])));
        assert_eq!(sp("2 -1").signed_cycle_type(), (p(&[]), p(&[2])));
        assert_eq!(sp("2 1").signed_cycle_type(), (p(&[2]), p(&[])));
        assert_eq!(sp("-2 -1").signed_cycle_type(), (p(&[2]), p(&[])));
    }

    #[test]
    fn sign_is_a_character() {
        assert_eq!(SignedPerm::identity(3).sign(), 1);
        assert_eq!(sp("-1 2").sign(), -1);
        assert_eq!(sp("2 1").sign(), -1);
        for a in enumerate_bn(2).unwrap() {
            for b in enumerate_bn(2).unwrap() {
                assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn enumerate_sizes_and_determinism() {
        assert_eq!(enumerate_bn(1).unwrap().len(), 2);
        assert_eq!(enumerate_bn(3).unwrap().len(), 48);
        let elems = enumerate_bn(2).unwrap();
        assert_eq!(elems[0], SignedPerm::identity(2));
        assert_eq!(elems[1], sp("1 -2"));
        assert_eq!(elems[2], sp("-1 2"));
        assert_eq!(elems.last().unwrap(), &sp("-2 -1"));
        let mut dedup = elems.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
    }

    #[test]
    fn enumerate_cap() {
        assert_eq!(
            enumerate_bn(8),
            Err(GroupError::CapExceeded { n: 8, cap: 7 })
        );
        assert!(enumerate_bn_with_cap(4, 4).is_ok());
    }

    #[test]
    fn inverse_transports_signs() {
        // β⁻¹(|β(i)|) = sign(β(i)) · i over all of B_3.
        for beta in enumerate_bn(3).unwrap() {
            let inv = beta.inverse();
            for i in 1..=3 {
                let e = beta.entry(i);
                let expected = if e < 0 { -(i as i32) } else { i as i32 };
                assert_eq!(inv.entry(e.unsigned_abs() as usize), expected);
            }
        }
    }
}
