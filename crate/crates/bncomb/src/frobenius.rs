//! Characters and Frobenius characteristics of the hyperoctahedral group,
//! and the verification suite for the generating-function identities of the
//! diagonal coinvariant modules.
//!
//! Conjugacy classes of `B_n` are pairs of partitions `(μ, ν)` (cycle
//! lengths of positive and negative signed cycles); irreducible characters
//! are labelled by pairs `(λ, ρ)` with `|λ| + |ρ| = n`. Key operations:
//!
//! - [`irreducible_expansion`]: the power-sum expansion of the irreducible
//!   character `(λ, ρ)`, built from `s_λ` on the unbarred-plus-barred
//!   alphabet and `s_ρ` on the unbarred-minus-barred alphabet.
//! - [`frob_regular`]: the regular representation, `(2 p₁)ⁿ`.
//! - [`graded_char_q`]: the graded character of the one-alphabet polynomial
//!   ring at a class, `∏ 1/(1−q^{μ_i}) ∏ 1/(1+q^{ν_j})`.
//! - [`mult_graded`] / [`mult_bigraded`]: closed plethystic formulas for
//!   the (bi)graded multiplicity polynomials of each irreducible inside the
//!   harmonics of the one- and two-alphabet coinvariant spaces.
//! - [`trivial_hilbert`] / [`alt_hilbert`]: the bigraded Hilbert series of
//!   the diagonally invariant and diagonally alternating harmonics.
//! - `verify_*`: deterministic zero-tolerance checks of every identity
//!   (counting series of diagrams, flag-major-index statistics, flip
//!   symmetry, the frozen three-variable table, regular-character
//!   dimensions, and the positivity of normalized multiplicity series),
//!   each returning a [`VerifyReport`].

use crate::ediagrams::count_by_bidegree;
use crate::group_core::enumerate_bn;
use crate::odiagrams::count_odiagrams_by_bidegree;
use crate::symfunc::{
    binomial, coeff_int, e_plethysm, gaussian_binomial, h_plethysm, mn_character, partition_pairs,
    partitions_of, schur_plethysm, Alphabet, Coeff, Partition, QTSeries, SymError, SymExpansion,
};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;
use thiserror::Error;

/// Errors for the character-theory layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FrobError {
    /// An underlying symmetric-function operation failed (inexact division,
    /// degree overflow, negative alphabet, …).
    #[error(transparent)]
    Sym(#[from] SymError),
    /// A verified identity did not hold.
    #[error("identity '{identity}' failed at n = {n}")]
    IdentityFailed {
        /// Name of the identity.
        identity: String,
        /// Group size parameter.
        n: u32,
    },
}

/// `2^n n!`, the order of the hyperoctahedral group.
#[must_use]
pub fn group_order(n: u32) -> u64 {
    (1u64 << n) * (1..=u64::from(n)).product::<u64>()
}

/// A conjugacy-class label of `B_n`: cycle lengths of the positive cycles
/// and of the negative cycles.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BClassType {
    /// Lengths of the positive (even-sign-count) cycles.
    pub positive: Partition,
    /// Lengths of the negative cycles.
    pub negative: Partition,
}

impl fmt::Display for BClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.positive, self.negative)
    }
}

impl BClassType {
    /// Bundles the two cycle-length partitions.
    #[must_use]
    pub fn new(positive: Partition, negative: Partition) -> Self {
        Self { positive, negative }
    }

    /// Group size `n = |μ| + |ν|`.
    #[must_use]
    pub fn level(&self) -> u32 {
        self.positive.size() + self.negative.size()
    }

    /// Order of the centralizer of any element of this class:
    /// `2^{ℓ(μ)+ℓ(ν)} z_μ z_ν`.
    #[must_use]
    pub fn centralizer_size(&self) -> u64 {
        (1u64 << (self.positive.len() + self.negative.len()))
            * self.positive.z()
            * self.negative.z()
    }

    /// Number of elements in the class. For `n ≤ 4` this is counted by
    /// exhaustive enumeration; beyond that the centralizer formula
    /// `2^n n! / (2^{ℓ(μ)+ℓ(ν)} z_μ z_ν)` is used (the two paths are
    /// cross-checked in tests).
    #[must_use]
    pub fn class_size(&self) -> u64 {
        let n = self.level();
        if n <= 4 {
            let target = (self.positive.clone(), self.negative.clone());
            enumerate_bn(n as usize)
                .expect("small group fits the enumeration cap")
                .iter()
                .filter(|beta| beta.signed_cycle_type() == target)
                .count() as u64
        } else {
            group_order(n) / self.centralizer_size()
        }
    }
}

/// All conjugacy-class labels of `B_n`, in a fixed deterministic order.
#[must_use]
pub fn class_types(n: u32) -> Vec<BClassType> {
    partition_pairs(n)
        .into_iter()
        .map(|(mu, nu)| BClassType::new(mu, nu))
        .collect()
}

/// An irreducible-character label of `B_n`: a pair of partitions with
/// `|λ| + |ρ| = n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrrLabel {
    /// The partition paired with the symmetrized alphabet.
    pub lam: Partition,
    /// The partition paired with the sign-twisted alphabet.
    pub rho: Partition,
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lam, self.rho)
    }
}

impl IrrLabel {
    /// Bundles the two partitions.
    #[must_use]
    pub fn new(lam: Partition, rho: Partition) -> Self {
        Self { lam, rho }
    }

    /// Group size `n = |λ| + |ρ|`.
    #[must_use]
    pub fn level(&self) -> u32 {
        self.lam.size() + self.rho.size()
    }

    /// The label `(ρ', λ')` featured in the degree-reversal symmetry of
    /// graded multiplicities.
    #[must_use]
    pub fn flip(&self) -> Self {
        Self {
            lam: self.rho.conjugate(),
            rho: self.lam.conjugate(),
        }
    }
}

/// All irreducible labels of `B_n`, in a fixed deterministic order.
#[must_use]
pub fn irr_labels(n: u32) -> Vec<IrrLabel> {
    partition_pairs(n)
        .into_iter()
        .map(|(lam, rho)| IrrLabel::new(lam, rho))
        .collect()
}

/// Dimension of the irreducible with the given label:
/// `C(n, |λ|) · f^λ · f^ρ` with `f` the hook-length dimension.
#[must_use]
pub fn irr_dim(l: &IrrLabel) -> u64 {
    binomial(l.level(), l.lam.size()) * l.lam.hook_dim() * l.rho.hook_dim()
}

/// Splits `p_μ` over the two-alphabet sum: `Σ_S (±1)^{#barred} p_{(μ_S,
/// μ_{S̄})}` over all ways to route each part to the unbarred or barred
/// alphabet; `negate_barred` selects the minus-alphabet sign.
fn split_power_sum(mu: &Partition, negate_barred: bool, trunc: u32) -> SymExpansion {
    let parts = mu.parts();
    let mut out = SymExpansion::new(mu.size(), trunc);
    for mask in 0..(1u64 << parts.len()) {
        let mut plain = Vec::new();
        let mut barred = Vec::new();
        for (i, &part) in parts.iter().enumerate() {
            if mask & (1 << i) == 0 {
                plain.push(part);
            } else {
                barred.push(part);
            }
        }
        let sign = if negate_barred && barred.len() % 2 == 1 {
            -1
        } else {
            1
        };
        out.add_term(
            &Partition::new(plain).expect("subsequence of a partition"),
            &Partition::new(barred).expect("subsequence of a partition"),
            &QTSeries::monomial(trunc, 0, 0, coeff_int(sign)),
        );
    }
    out
}

/// The Schur function on one of the two split alphabets, expanded in the
/// wreath power-sum basis.
fn schur_split(lambda: &Partition, negate_barred: bool, trunc: u32) -> SymExpansion {
    let mut out = SymExpansion::new(lambda.size(), trunc);
    for mu in partitions_of(lambda.size()) {
        let chi = mn_character(lambda, &mu).expect("equal sizes");
        if chi == 0 {
            continue;
        }
        let weight = QTSeries::monomial(
            trunc,
            0,
            0,
            Coeff::new(BigInt::from(chi), BigInt::from(mu.z())),
        );
        out = out
            .add(&split_power_sum(&mu, negate_barred, trunc).scale_series(&weight))
            .expect("matching levels");
    }
    out
}

/// The power-sum expansion of the irreducible character labelled `(λ, ρ)`.
/// Its character values (coefficients times `z_μ z_ν`) are integers, and
/// distinct labels are orthonormal under the Hall pairing.
#[must_use]
pub fn irreducible_expansion(l: &IrrLabel, trunc: u32) -> SymExpansion {
    schur_split(&l.lam, false, trunc).mul(&schur_split(&l.rho, true, trunc))
}

/// The character of the regular representation, `(2 p₁)ⁿ`: the expansion
/// whose multiplicity on each irreducible equals its dimension.
#[must_use]
pub fn frob_regular(n: u32, trunc: u32) -> SymExpansion {
    let mut generator = SymExpansion::new(1, trunc);
    generator.add_term(
        &Partition::new(vec![1]).expect("single part"),
        &Partition::empty(),
        &QTSeries::monomial(trunc, 0, 0, coeff_int(2)),
    );
    let mut out = SymExpansion::new(0, trunc);
    out.add_term(
        &Partition::empty(),
        &Partition::empty(),
        &QTSeries::one(trunc),
    );
    for _ in 0..n {
        out = out.mul(&generator);
    }
    out
}

/// Graded character of the one-alphabet polynomial ring at a class:
/// `∏_i 1/(1−q^{μ_i}) · ∏_j 1/(1+q^{ν_j})`.
#[must_use]
pub fn graded_char_q(c: &BClassType, trunc: u32) -> QTSeries {
    let mut out = QTSeries::one(trunc);
    for &part in c.positive.parts() {
        out = out.mul(&QTSeries::inv_one_minus(trunc, part, 0));
    }
    for &part in c.negative.parts() {
        out = out.mul(&QTSeries::inv_one_plus(trunc, part, 0));
    }
    out
}

/// `∏_{i=1}^n (1 − q^{2i})`, the invariant-degree product in one grading.
#[must_use]
pub fn invariant_product_q(n: u32, trunc: u32) -> QTSeries {
    let mut out = QTSeries::one(trunc);
    for i in 1..=n {
        out = out.mul(&QTSeries::one_minus(trunc, 2 * i, 0));
    }
    out
}

/// `∏_{i=1}^n (1 − q^{2i})(1 − t^{2i})`, the invariant-degree product in
/// both gradings.
#[must_use]
pub fn invariant_product_qt(n: u32, trunc: u32) -> QTSeries {
    let mut out = invariant_product_q(n, trunc);
    for i in 1..=n {
        out = out.mul(&QTSeries::one_minus(trunc, 0, 2 * i));
    }
    out
}

/// Graded Frobenius characteristic of the one-alphabet harmonics: the
/// class-by-class graded character of the polynomial ring, times the
/// invariant-degree product.
#[must_use]
pub fn graded_frobenius_harmonics(n: u32, trunc: u32) -> SymExpansion {
    let inv = invariant_product_q(n, trunc);
    let mut out = SymExpansion::new(n, trunc);
    for c in class_types(n) {
        let scale = Coeff::new(BigInt::one(), BigInt::from(c.positive.z() * c.negative.z()));
        let coeff = graded_char_q(&c, trunc).mul(&inv).scale(&scale);
        out.add_term(&c.positive, &c.negative, &coeff);
    }
    out
}

/// Bigraded Frobenius characteristic of the diagonal (two-alphabet)
/// harmonics: each class carries
/// `∏_i 1/((1−q^{μ_i})(1−t^{μ_i})) ∏_j 1/((1+q^{ν_j})(1+t^{ν_j}))` times
/// the two-grading invariant product.
#[must_use]
pub fn bigraded_frobenius_harmonics(n: u32, trunc: u32) -> SymExpansion {
    let inv = invariant_product_qt(n, trunc);
    let mut out = SymExpansion::new(n, trunc);
    for c in class_types(n) {
        let mut series = inv.clone();
        for &part in c.positive.parts() {
            series = series
                .mul(&QTSeries::inv_one_minus(trunc, part, 0))
                .mul(&QTSeries::inv_one_minus(trunc, 0, part));
        }
        for &part in c.negative.parts() {
            series = series
                .mul(&QTSeries::inv_one_plus(trunc, part, 0))
                .mul(&QTSeries::inv_one_plus(trunc, 0, part));
        }
        let scale = Coeff::new(BigInt::one(), BigInt::from(c.positive.z() * c.negative.z()));
        out.add_term(&c.positive, &c.negative, &series.scale(&scale));
    }
    out
}

/// Re-windows a polynomial to a different truncation order. Raising the
/// window is exact for certified polynomials; lowering it drops terms the
/// new window cannot see, which is also exact for windowed comparisons
/// because later products with nonnegative-exponent series can never bring
/// a dropped term back inside.
fn rewindow(s: &QTSeries, trunc: u32) -> QTSeries {
    let mut out = QTSeries::zero(trunc);
    for (&(a, b), c) in s.terms() {
        if a <= trunc && b <= trunc {
            out.add_term(a, b, c.clone());
        }
    }
    out
}

/// The alphabet of all even-weight cells, `(1+qt)/((1−q²)(1−t²))`.
fn even_cells_alphabet(trunc: u32) -> Alphabet {
    let d = QTSeries::inv_one_minus(trunc, 2, 0).mul(&QTSeries::inv_one_minus(trunc, 0, 2));
    let numer = QTSeries::one(trunc).add(&QTSeries::monomial(trunc, 1, 1, Coeff::one()));
    Alphabet::new(numer.mul(&d)).expect("nonnegative counting series")
}

/// The alphabet of all odd-weight cells, `(q+t)/((1−q²)(1−t²))`.
fn odd_cells_alphabet(trunc: u32) -> Alphabet {
    let d = QTSeries::inv_one_minus(trunc, 2, 0).mul(&QTSeries::inv_one_minus(trunc, 0, 2));
    let numer = QTSeries::monomial(trunc, 1, 0, Coeff::one()).add(&QTSeries::monomial(
        trunc,
        0,
        1,
        Coeff::one(),
    ));
    Alphabet::new(numer.mul(&d)).expect("nonnegative counting series")
}

/// The one-grading alphabet `1/(1−q²)`.
fn even_line_alphabet(trunc: u32) -> Alphabet {
    Alphabet::new(QTSeries::inv_one_minus(trunc, 2, 0)).expect("nonnegative counting series")
}

/// The one-grading alphabet `q/(1−q²)`.
fn odd_line_alphabet(trunc: u32) -> Alphabet {
    let s =
        QTSeries::monomial(trunc, 1, 0, Coeff::one()).mul(&QTSeries::inv_one_minus(trunc, 2, 0));
    Alphabet::new(s).expect("nonnegative counting series")
}

/// Graded multiplicity of the irreducible `(λ, ρ)` inside the one-alphabet
/// harmonics: `s_λ[1/(1−q²)] · s_ρ[q/(1−q²)] · ∏(1−q^{2i})`, certified to
/// be a polynomial in `q` of degree at most `n²`.
#[must_use]
pub fn mult_graded(l: &IrrLabel) -> QTSeries {
    let n = l.level();
    let trunc = n * n + n + 1;
    let m = schur_plethysm(&l.lam, &even_line_alphabet(trunc))
        .mul(&schur_plethysm(&l.rho, &odd_line_alphabet(trunc)))
        .mul(&invariant_product_q(n, trunc));
    m.check_degree_bound(n * n)
        .expect("graded multiplicity must be a polynomial of degree at most n^2");
    m
}

/// Bigraded multiplicity of the irreducible `(λ, ρ)` inside the diagonal
/// harmonics: `s_λ[(1+qt)/((1−q²)(1−t²))] · s_ρ[(q+t)/((1−q²)(1−t²))]`
/// times `∏(1−q^{2i})(1−t^{2i})`, certified to be a polynomial of degree at
/// most `n²` in each variable.
#[must_use]
pub fn mult_bigraded(l: &IrrLabel) -> QTSeries {
    let n = l.level();
    let trunc = n * n + n + 1;
    let m = schur_plethysm(&l.lam, &even_cells_alphabet(trunc))
        .mul(&schur_plethysm(&l.rho, &odd_cells_alphabet(trunc)))
        .mul(&invariant_product_qt(n, trunc));
    m.check_degree_bound(n * n)
        .expect("bigraded multiplicity must be a polynomial of degree at most n^2");
    m
}

/// Bigraded Hilbert series of the diagonally invariant harmonics: the
/// bigraded multiplicity of the trivial label `((n), ∅)`. Equals
/// `Σ_β q^{fmaj(β)} t^{fmaj(β⁻¹)}`.
#[must_use]
pub fn trivial_hilbert(n: u32) -> QTSeries {
    mult_bigraded(&IrrLabel::new(
        Partition::new(vec![n]).expect("single part"),
        Partition::empty(),
    ))
}

/// Bigraded Hilbert series of the diagonally alternating harmonics: the
/// bigraded multiplicity of the sign label `(∅, (1ⁿ))`. Equals
/// `Σ_β q^{fmaj(β)} t^{n² − fmaj(β⁻¹)}`.
#[must_use]
pub fn alt_hilbert(n: u32) -> QTSeries {
    mult_bigraded(&IrrLabel::new(
        Partition::empty(),
        Partition::new(vec![1; n as usize]).expect("column"),
    ))
}

/// `Σ_β q^{fmaj(β)} t^{fmaj(β⁻¹)}` over `B_n`.
#[must_use]
pub fn hilbert_by_fmaj(n: u32, trunc: u32) -> QTSeries {
    let mut out = QTSeries::zero(trunc);
    for beta in enumerate_bn(n as usize).expect("n within the enumeration cap") {
        out.add_term(beta.fmaj(), beta.inverse().fmaj(), Coeff::one());
    }
    out
}

/// `Σ_β q^{fmaj(β)} t^{n² − fmaj(β⁻¹)}` over `B_n`.
#[must_use]
pub fn hilbert_by_fmaj_flip(n: u32, trunc: u32) -> QTSeries {
    let mut out = QTSeries::zero(trunc);
    for beta in enumerate_bn(n as usize).expect("n within the enumeration cap") {
        out.add_term(beta.fmaj(), n * n - beta.inverse().fmaj(), Coeff::one());
    }
    out
}

/// `Σ_β q^{|g(β)|} t^{|ĝ(β)|}` over `B_n`: total weights of the local
/// descent vectors entering the compact alternant diagrams.
#[must_use]
pub fn hilbert_by_local_vectors(n: u32, trunc: u32) -> QTSeries {
    let mut out = QTSeries::zero(trunc);
    for beta in enumerate_bn(n as usize).expect("n within the enumeration cap") {
        let lv = beta.local_vectors();
        let g: u32 = lv.g.iter().sum();
        let g_hat: u32 = lv.g_hat.iter().sum();
        out.add_term(g, g_hat, Coeff::one());
    }
    out
}

/// Outcome of one identity verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    /// The identity holds coefficient-for-coefficient.
    Pass,
    /// A discrepancy was found.
    Fail,
}

/// First point where the two sides of an identity differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    /// `q`-exponent of the differing coefficient.
    pub q_exp: u32,
    /// `t`-exponent of the differing coefficient.
    pub t_exp: u32,
    /// Left-hand coefficient.
    pub lhs: Coeff,
    /// Right-hand coefficient.
    pub rhs: Coeff,
}

/// Deterministic report of a single identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// Name of the identity.
    pub identity: String,
    /// Group size parameter.
    pub n: u32,
    /// Pass or fail.
    pub status: VerifyStatus,
    /// First differing coefficient when the check failed.
    pub first_discrepancy: Option<Discrepancy>,
}

impl VerifyReport {
    /// A passing report.
    #[must_use]
    pub fn pass(identity: &str, n: u32) -> Self {
        Self {
            identity: identity.to_string(),
            n,
            status: VerifyStatus::Pass,
            first_discrepancy: None,
        }
    }

    /// A failing report, optionally locating the first discrepancy.
    #[must_use]
    pub fn fail(identity: &str, n: u32, first_discrepancy: Option<Discrepancy>) -> Self {
        Self {
            identity: identity.to_string(),
            n,
            status: VerifyStatus::Fail,
            first_discrepancy,
        }
    }

    /// Whether the identity held.
    #[must_use]
    pub fn is_pass(&self) -> bool {
        self.status == VerifyStatus::Pass
    }

    /// Converts a failure into an error.
    ///
    /// # Errors
    ///
    /// [`FrobError::IdentityFailed`] when the report is a failure.
    pub fn ensure(&self) -> Result<(), FrobError> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(FrobError::IdentityFailed {
                identity: self.identity.clone(),
                n: self.n,
            })
        }
    }

    /// JSON form: `{identity, n, status, first_discrepancy}` with the
    /// discrepancy as `{q_exp, t_exp, lhs, rhs}` (exact rationals rendered
    /// as strings) or `null`.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let disc = match &self.first_discrepancy {
            None => serde_json::Value::Null,
            Some(d) => serde_json::json!({
                "q_exp": d.q_exp,
                "t_exp": d.t_exp,
                "lhs": d.lhs.to_string(),
                "rhs": d.rhs.to_string(),
            }),
        };
        serde_json::json!({
            "identity": self.identity,
            "n": self.n,
            "status": match self.status {
                VerifyStatus::Pass => "pass",
                VerifyStatus::Fail => "fail",
            },
            "first_discrepancy": disc,
        })
    }
}

/// Compares two series on their common window and builds a report.
fn compare_series(identity: &str, n: u32, lhs: &QTSeries, rhs: &QTSeries) -> VerifyReport {
    match lhs.first_discrepancy(rhs) {
        None => VerifyReport::pass(identity, n),
        Some(((q_exp, t_exp), l, r)) => VerifyReport::fail(
            identity,
            n,
            Some(Discrepancy {
                q_exp,
                t_exp,
                lhs: l,
                rhs: r,
            }),
        ),
    }
}

/// Verifies the invariant-ring counting identity at window `trunc`: the
/// bidegree census of n-cell even-weight diagrams equals `h_n` of the
/// even-cell alphabet, which equals the flag-major Hilbert polynomial times
/// the inverse invariant products.
#[must_use]
pub fn verify_genfunction(n: u32, trunc: u32) -> VerifyReport {
    let counts = QTSeries::from_counts(trunc, &count_by_bidegree(n as usize, trunc, trunc));
    let closed = h_plethysm(n, &even_cells_alphabet(trunc));
    let first = compare_series("genfunction", n, &counts, &closed);
    if !first.is_pass() {
        return first;
    }
    let mut group_side = rewindow(&hilbert_by_fmaj(n, n * n + 1), trunc);
    for i in 1..=n {
        group_side = group_side
            .mul(&QTSeries::inv_one_minus(trunc, 2 * i, 0))
            .mul(&QTSeries::inv_one_minus(trunc, 0, 2 * i));
    }
    compare_series("genfunction", n, &closed, &group_side)
}

/// Verifies the alternating-ring counting identity at window `trunc`: the
/// bidegree census of n-cell odd-weight diagrams equals `e_n` of the
/// odd-cell alphabet, which equals the reversed flag-major Hilbert
/// polynomial times the inverse invariant products.
#[must_use]
pub fn verify_ogenfunction(n: u32, trunc: u32) -> VerifyReport {
    let counts = QTSeries::from_counts(
        trunc,
        &count_odiagrams_by_bidegree(n as usize, trunc, trunc),
    );
    let closed = e_plethysm(n, &odd_cells_alphabet(trunc));
    let first = compare_series("ogenfunction", n, &counts, &closed);
    if !first.is_pass() {
        return first;
    }
    let mut group_side = rewindow(&hilbert_by_fmaj_flip(n, n * n + 1), trunc);
    for i in 1..=n {
        group_side = group_side
            .mul(&QTSeries::inv_one_minus(trunc, 2 * i, 0))
            .mul(&QTSeries::inv_one_minus(trunc, 0, 2 * i));
    }
    compare_series("ogenfunction", n, &closed, &group_side)
}

/// Verifies the degree-reversal symmetry `m_{ρ',λ'}(q) = qⁿ² m_{λ,ρ}(1/q)`
/// over every irreducible label at level `n`.
#[must_use]
pub fn verify_flip_symmetry(n: u32) -> VerifyReport {
    for l in irr_labels(n) {
        let flipped = mult_graded(&l.flip());
        let reversed = mult_graded(&l)
            .reverse_q(n * n)
            .expect("certified degree bound");
        let report = compare_series("flip", n, &flipped, &reversed);
        if !report.is_pass() {
            return report;
        }
    }
    VerifyReport::pass("flip", n)
}

/// Verifies that the two local-statistic Hilbert polynomials agree:
/// `Σ_β q^{|g(β)|} t^{|ĝ(β)|} = Σ_β q^{fmaj(β)} t^{n²−fmaj(β⁻¹)}`.
#[must_use]
pub fn verify_corollary(n: u32) -> VerifyReport {
    let trunc = n * n + 1;
    compare_series(
        "corollary",
        n,
        &hilbert_by_local_vectors(n, trunc),
        &hilbert_by_fmaj_flip(n, trunc),
    )
}

/// Verifies the flag-major product formula
/// `Σ_β q^{fmaj(β)} = ∏_{i=1}^n (1 + q + ⋯ + q^{2i−1})`.
#[must_use]
pub fn verify_product_formula(n: u32) -> VerifyReport {
    let trunc = n * n + 1;
    let mut group_side = QTSeries::zero(trunc);
    for beta in enumerate_bn(n as usize).expect("n within the enumeration cap") {
        group_side.add_term(beta.fmaj(), 0, Coeff::one());
    }
    let mut product = QTSeries::one(trunc);
    for i in 1..=n {
        let mut bracket = QTSeries::zero(trunc);
        for j in 0..2 * i {
            bracket.add_term(j, 0, Coeff::one());
        }
        product = product.mul(&bracket);
    }
    compare_series("product", n, &group_side, &product)
}

/// Verifies the frozen table of graded multiplicities at `n = 3`.
#[must_use]
pub fn verify_table3() -> VerifyReport {
    let table: [(&[u32], &[u32], &[u32]); 10] = [
        (&[3], &[], &[0]),
        (&[2, 1], &[], &[2, 4]),
        (&[1, 1, 1], &[], &[6]),
        (&[2], &[1], &[1, 3, 5]),
        (&[1, 1], &[1], &[3, 5, 7]),
        (&[], &[1, 1, 1], &[9]),
        (&[], &[2, 1], &[5, 7]),
        (&[], &[3], &[3]),
        (&[1], &[1, 1], &[4, 6, 8]),
        (&[1], &[2], &[2, 4, 6]),
    ];
    for (lam, rho, degrees) in table {
        let l = IrrLabel::new(
            Partition::new(lam.to_vec()).expect("table row"),
            Partition::new(rho.to_vec()).expect("table row"),
        );
        let actual = mult_graded(&l);
        let mut expected = QTSeries::zero(actual.trunc());
        for &d in degrees {
            expected.add_term(d, 0, Coeff::one());
        }
        let report = compare_series("table3", 3, &actual, &expected);
        if !report.is_pass() {
            return report;
        }
    }
    VerifyReport::pass("table3", 3)
}

/// Verifies the decomposition of the regular character: the multiplicity
/// of every irreducible equals its dimension, and the squared dimensions
/// sum to the group order.
#[must_use]
pub fn verify_regular(n: u32) -> VerifyReport {
    let trunc = 1;
    let regular = frob_regular(n, trunc);
    let mut dim_square_sum = 0u64;
    for l in irr_labels(n) {
        let mult = regular
            .inner_product(&irreducible_expansion(&l, trunc))
            .expect("matching levels");
        let dim = irr_dim(&l);
        dim_square_sum += dim * dim;
        let expected = QTSeries::monomial(trunc, 0, 0, coeff_int(dim as i64));
        let report = compare_series("regular", n, &mult, &expected);
        if !report.is_pass() {
            return report;
        }
    }
    if dim_square_sum != group_order(n) {
        return VerifyReport::fail(
            "regular",
            n,
            Some(Discrepancy {
                q_exp: 0,
                t_exp: 0,
                lhs: coeff_int(dim_square_sum as i64),
                rhs: coeff_int(group_order(n) as i64),
            }),
        );
    }
    VerifyReport::pass("regular", n)
}

/// The Gaussian binomial `[n, k]` with its variable squared: a polynomial
/// in `q²` (or `t²` after swapping).
fn gaussian_squared(n: u32, k: u32, trunc: u32) -> QTSeries {
    let mut out = QTSeries::zero(trunc);
    for (i, &c) in gaussian_binomial(n, k).iter().enumerate() {
        out.add_term(2 * i as u32, 0, coeff_int(c as i64));
    }
    out
}

/// The normalized multiplicity series `Ψ_{λ,μ}`: the bigraded product
/// formula times the invariant products, divided exactly by the squared
/// Gaussian binomials `[n,|λ|]_{q²} [n,|μ|]_{t²}`.
///
/// # Errors
///
/// [`FrobError::Sym`] when the numerator is not a polynomial inside the
/// window or a division leaves a remainder.
///
/// # Panics
///
/// Panics unless `|λ| ≤ n` and `|μ| ≤ n`.
pub fn psi_polynomial(lam: &Partition, mu: &Partition, n: u32) -> Result<QTSeries, FrobError> {
    assert!(
        lam.size() <= n && mu.size() <= n,
        "partition sizes must not exceed n"
    );
    let bound = n * n + n * (n + 1);
    let trunc = bound + 2 * n + 2;
    let numerator = schur_plethysm(lam, &even_cells_alphabet(trunc))
        .mul(&schur_plethysm(mu, &odd_cells_alphabet(trunc)))
        .mul(&invariant_product_qt(n, trunc));
    numerator.check_degree_bound(bound)?;
    let by_q = numerator.div_exact_in_q(&gaussian_squared(n, lam.size(), trunc))?;
    let psi = by_q.div_exact_in_t(&gaussian_squared(n, mu.size(), trunc).swap_vars())?;
    Ok(psi)
}

/// Verifies that `Ψ_{λ,μ}` exists (exact divisions) and has nonnegative
/// integer coefficients.
#[must_use]
pub fn verify_psi_positivity(lam: &Partition, mu: &Partition, n: u32) -> VerifyReport {
    let identity = format!("psi[{lam},{mu}]");
    match psi_polynomial(lam, mu, n) {
        Err(FrobError::Sym(SymError::DivisionInexact { q_exp, t_exp })) => VerifyReport::fail(
            &identity,
            n,
            Some(Discrepancy {
                q_exp,
                t_exp,
                lhs: coeff_int(1),
                rhs: coeff_int(0),
            }),
        ),
        Err(_) => VerifyReport::fail(&identity, n, None),
        Ok(psi) => {
            for (&(a, b), c) in psi.terms() {
                if c.is_negative() || !c.denom().is_one() {
                    return VerifyReport::fail(
                        &identity,
                        n,
                        Some(Discrepancy {
                            q_exp: a,
                            t_exp: b,
                            lhs: c.clone(),
                            rhs: coeff_int(0),
                        }),
                    );
                }
            }
            VerifyReport::pass(&identity, n)
        }
    }
}

/// Runs the positivity check over every irreducible label at level `n`.
#[must_use]
pub fn verify_psi_suite(n: u32) -> VerifyReport {
    for l in irr_labels(n) {
        let report = verify_psi_positivity(&l.lam, &l.rho, n);
        if !report.is_pass() {
            return report;
        }
    }
    VerifyReport::pass("psi", n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn label(lam: &[u32], rho: &[u32]) -> IrrLabel {
        IrrLabel::new(part(lam), part(rho))
    }

    fn poly(trunc: u32, terms: &[(u32, u32, i64)]) -> QTSeries {
        let mut out = QTSeries::zero(trunc);
        for &(a, b, c) in terms {
            out.add_term(a, b, coeff_int(c));
        }
        out
    }

    #[test]
    fn class_sizes_of_b2() {
        let sizes: Vec<u64> = class_types(2).iter().map(BClassType::class_size).collect();
        let labels: Vec<String> = class_types(2).iter().map(ToString::to_string).collect();
        assert_eq!(
            labels,
            [
                "((2),())",
                "((1,1),())",
                "((1),(1))",
                "((),(2))",
                "((),(1,1))"
            ]
        );
        assert_eq!(sizes, [2, 1, 2, 2, 1]);
        assert_eq!(sizes.iter().sum::<u64>(), group_order(2));
    }

    #[test]
    fn class_size_formula_matches_enumeration() {
        for n in 1..=4 {
            for c in class_types(n) {
                assert_eq!(
                    c.class_size(),
                    group_order(n) / c.centralizer_size(),
                    "class {c} of B_{n}"
                );
            }
        }
    }

    #[test]
    fn b2_character_table() {
        // Rows: irreducible labels; columns: classes in class_types order
        // ((2),()), ((1,1),()), ((1),(1)), ((),(2)), ((),(1,1)).
        let table: [(&[u32], &[u32], [i64; 5]); 5] = [
            (&[2], &[], [1, 1, 1, 1, 1]),
            (&[1, 1], &[], [-1, 1, 1, -1, 1]),
            (&[1], &[1], [0, 2, 0, 0, -2]),
            (&[], &[2], [1, 1, -1, -1, 1]),
            (&[], &[1, 1], [-1, 1, -1, 1, 1]),
        ];
        for (lam, rho, values) in table {
            let expansion = irreducible_expansion(&label(lam, rho), 1);
            for (c, expected) in class_types(2).iter().zip(values) {
                let value = expansion.character_value(&c.positive, &c.negative);
                assert_eq!(
                    value.coeff(0, 0),
                    coeff_int(expected),
                    "character ({:?},{:?}) at class {c}",
                    lam,
                    rho
                );
            }
        }
    }

    #[test]
    fn irreducible_characters_are_orthonormal() {
        for n in 1..=3 {
            let labels = irr_labels(n);
            let expansions: Vec<SymExpansion> =
                labels.iter().map(|l| irreducible_expansion(l, 1)).collect();
            for (i, a) in expansions.iter().enumerate() {
                for (j, b) in expansions.iter().enumerate() {
                    let pairing = a.inner_product(b).unwrap();
                    let expected = if i == j { coeff_int(1) } else { coeff_int(0) };
                    assert_eq!(
                        pairing.coeff(0, 0),
                        expected,
                        "<{}, {}>",
                        labels[i],
                        labels[j]
                    );
                }
            }
        }
    }

    #[test]
    fn character_values_are_integers() {
        for n in 1..=3 {
            for l in irr_labels(n) {
                let expansion = irreducible_expansion(&l, 1);
                for c in class_types(n) {
                    let v = expansion.character_value(&c.positive, &c.negative);
                    let value = v.coeff(0, 0);
                    assert!(value.denom().is_one(), "chi^{l}({c}) = {value}");
                }
            }
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for n in 1..=3 {
            let trivial = irreducible_expansion(&label(&[n], &[]), 1);
            let sign =
                irreducible_expansion(&IrrLabel::new(part(&[]), part(&vec![1; n as usize])), 1);
            for c in class_types(n) {
                assert_eq!(
                    trivial
                        .character_value(&c.positive, &c.negative)
                        .coeff(0, 0),
                    coeff_int(1)
                );
                let s = sign.character_value(&c.positive, &c.negative).coeff(0, 0);
                assert!(s.clone() * s == coeff_int(1), "sign character is ±1");
            }
        }
    }

    #[test]
    fn regular_character_small() {
        let regular = frob_regular(1, 1);
        // 2 p_1 on the unbarred alphabet.
        assert_eq!(
            regular.coeff(&part(&[1]), &part(&[])).coeff(0, 0),
            coeff_int(2)
        );
        assert!(regular.coeff(&part(&[]), &part(&[1])).is_zero());
        // Level 3: the only class with nonzero character is the identity,
        // with value 48 = coefficient 48/z_{(1,1,1)} = 8.
        let regular = frob_regular(3, 1);
        assert_eq!(
            regular.coeff(&part(&[1, 1, 1]), &part(&[])).coeff(0, 0),
            coeff_int(8)
        );
        assert_eq!(
            regular
                .character_value(&part(&[1, 1, 1]), &part(&[]))
                .coeff(0, 0),
            coeff_int(48)
        );
    }

    #[test]
    fn regular_decomposition_dimensions() {
        for n in 1..=3 {
            assert!(verify_regular(n).is_pass(), "regular at n = {n}");
        }
        // Spot value: C(3,3)·f^{(2,1)}·f^{()} = 2.
        assert_eq!(irr_dim(&label(&[2, 1], &[])), 2);
    }

    #[test]
    fn graded_char_examples() {
        let c = graded_char_q(&BClassType::new(part(&[1]), part(&[])), 6);
        for d in 0..=6 {
            assert_eq!(c.coeff(d, 0), coeff_int(1));
        }
        let c = graded_char_q(&BClassType::new(part(&[]), part(&[1])), 6);
        for d in 0..=6 {
            assert_eq!(c.coeff(d, 0), coeff_int(if d % 2 == 0 { 1 } else { -1 }));
        }
        let c = graded_char_q(&BClassType::new(part(&[1, 1]), part(&[])), 6);
        for d in 0..=6 {
            assert_eq!(c.coeff(d, 0), coeff_int(i64::from(d) + 1));
        }
    }

    #[test]
    fn mult_graded_matches_harmonic_frobenius() {
        for n in 1..=3 {
            let trunc = n * n + n + 1;
            let harmonics = graded_frobenius_harmonics(n, trunc);
            for l in irr_labels(n) {
                let via_pairing = harmonics
                    .inner_product(&irreducible_expansion(&l, trunc))
                    .unwrap();
                assert_eq!(
                    mult_graded(&l).first_discrepancy(&via_pairing),
                    None,
                    "label {l} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn mult_bigraded_matches_harmonic_frobenius() {
        for n in 1..=2 {
            let trunc = n * n + n + 1;
            let harmonics = bigraded_frobenius_harmonics(n, trunc);
            for l in irr_labels(n) {
                let via_pairing = harmonics
                    .inner_product(&irreducible_expansion(&l, trunc))
                    .unwrap();
                assert_eq!(
                    mult_bigraded(&l).first_discrepancy(&via_pairing),
                    None,
                    "label {l} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn frozen_three_variable_table() {
        assert!(verify_table3().is_pass());
    }

    #[test]
    fn mult_bigraded_small_cases() {
        assert_eq!(
            mult_bigraded(&label(&[1], &[])).first_discrepancy(&poly(3, &[(0, 0, 1), (1, 1, 1)])),
            None
        );
        assert_eq!(
            mult_bigraded(&label(&[], &[1])).first_discrepancy(&poly(3, &[(1, 0, 1), (0, 1, 1)])),
            None
        );
    }

    #[test]
    fn t_zero_specialization_bridges_gradings() {
        for n in 1..=3 {
            for l in irr_labels(n) {
                assert_eq!(
                    mult_bigraded(&l)
                        .set_t_zero()
                        .first_discrepancy(&mult_graded(&l)),
                    None,
                    "label {l} at n = {n}"
                );
            }
        }
    }

    #[test]
    fn bigraded_dimensions_at_one_one() {
        // Evaluating each multiplicity polynomial at q = t = 1 yields
        // 2^n n! · C(n,|λ|) f^λ f^ρ: the regular-representation count.
        for n in 1..=2 {
            for l in irr_labels(n) {
                let total = mult_bigraded(&l).sum_coeffs();
                let expected = group_order(n) * irr_dim(&l);
                assert_eq!(total, coeff_int(expected as i64), "label {l}");
            }
        }
    }

    #[test]
    fn trivial_hilbert_small() {
        assert_eq!(
            trivial_hilbert(1).first_discrepancy(&poly(3, &[(0, 0, 1), (1, 1, 1)])),
            None
        );
        for n in 1..=3 {
            let group_side = hilbert_by_fmaj(n, n * n + 1);
            assert_eq!(
                trivial_hilbert(n).first_discrepancy(&group_side),
                None,
                "n = {n}"
            );
        }
    }

    #[test]
    fn alt_hilbert_small() {
        assert_eq!(
            alt_hilbert(1).first_discrepancy(&poly(3, &[(1, 0, 1), (0, 1, 1)])),
            None
        );
        for n in 1..=3 {
            let group_side = hilbert_by_fmaj_flip(n, n * n + 1);
            assert_eq!(
                alt_hilbert(n).first_discrepancy(&group_side),
                None,
                "n = {n}"
            );
        }
    }

    #[test]
    fn flip_symmetry_small() {
        for n in 1..=3 {
            assert!(verify_flip_symmetry(n).is_pass(), "n = {n}");
        }
        // The frozen instance: reversing q^5+q^3+q in degree 9.
        let reversed = mult_graded(&label(&[2], &[1])).reverse_q(9).unwrap();
        assert_eq!(
            mult_graded(&label(&[1], &[1, 1])).first_discrepancy(&reversed),
            None
        );
    }

    #[test]
    fn counting_identities_small() {
        for n in 1..=3 {
            assert!(verify_genfunction(n, 8).is_pass(), "genfunction n = {n}");
            assert!(verify_ogenfunction(n, 8).is_pass(), "ogenfunction n = {n}");
        }
    }

    #[test]
    fn corollary_and_product_small() {
        for n in 1..=4 {
            assert!(verify_corollary(n).is_pass(), "corollary n = {n}");
            assert!(verify_product_formula(n).is_pass(), "product n = {n}");
        }
    }

    #[test]
    fn psi_positive_for_irreducible_labels() {
        for n in 1..=2 {
            assert!(verify_psi_suite(n).is_pass(), "n = {n}");
        }
    }

    #[test]
    fn psi_degenerate_pair_divides_but_is_not_positive() {
        // For two empty partitions the normalized series is the invariant
        // product itself: division is exact, coefficients are signed.
        let psi = psi_polynomial(&part(&[]), &part(&[]), 1).unwrap();
        assert_eq!(
            psi.first_discrepancy(&poly(8, &[(0, 0, 1), (2, 0, -1), (0, 2, -1), (2, 2, 1)])),
            None
        );
        let report = verify_psi_positivity(&part(&[]), &part(&[]), 1);
        assert!(!report.is_pass());
        let disc = report.first_discrepancy.unwrap();
        assert!(disc.lhs.is_negative());
    }

    #[test]
    fn report_json_shape() {
        let report = VerifyReport::pass("corollary", 3);
        assert_eq!(
            report.to_json(),
            serde_json::json!({
                "identity": "corollary",
                "n": 3,
                "status": "pass",
                "first_discrepancy": null,
            })
        );
        let report = VerifyReport::fail(
            "flip",
            2,
            Some(Discrepancy {
                q_exp: 1,
                t_exp: 0,
                lhs: coeff_int(1),
                rhs: Coeff::new(BigInt::from(-1), BigInt::from(2)),
            }),
        );
        assert_eq!(
            report.to_json(),
            serde_json::json!({
                "identity": "flip",
                "n": 2,
                "status": "fail",
                "first_discrepancy": {"q_exp": 1, "t_exp": 0, "lhs": "1", "rhs": "-1/2"},
            })
        );
        assert_eq!(
            report.ensure(),
            Err(FrobError::IdentityFailed {
                identity: "flip".to_string(),
                n: 2
            })
        );
    }
}
