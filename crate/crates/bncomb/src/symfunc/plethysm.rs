//! Plethystic evaluation of symmetric functions on `(q,t)`-alphabets.
//!
//! An [`Alphabet`] is a truncated series with nonnegative coefficients,
//! thought of as a formal multiset of monomials. Evaluation rules:
//!
//! - `p_k[A]` scales every exponent by `k` ([`p_plethysm`]).
//! - `h_n[A] = Σ_{μ⊢n} p_μ[A]/z_μ` ([`h_plethysm`]).
//! - `e_n[A] = Σ_{μ⊢n} (−1)^{n−ℓ(μ)} p_μ[A]/z_μ` ([`e_plethysm`]).
//! - `s_λ[A] = Σ_{μ⊢|λ|} (χ^λ_μ/z_μ) p_μ[A]` ([`schur_plethysm`]).
//! - `Ω[A] = Σ_{n≥0} h_n[A]`, defined when `A` has no constant term
//!   ([`omega`]).
//!
//! Everything is exact on the truncation window.

use super::{mn_character, partitions_of, Coeff, Partition, QTSeries, SymError};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A formal alphabet: a truncated `(q,t)`-series with nonnegative
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    series: QTSeries,
}

impl Alphabet {
    /// Wraps a series after checking nonnegativity.
    ///
    /// # Errors
    ///
    /// [`SymError::NegativeCoefficient`] naming the offending term.
    pub fn new(series: QTSeries) -> Result<Self, SymError> {
        for (&(a, b), c) in series.terms() {
            if c.is_negative() {
                return Err(SymError::NegativeCoefficient {
                    q_exp: a,
                    t_exp: b,
                    coeff: c.to_string(),
                });
            }
        }
        Ok(Self { series })
    }

    /// The underlying series.
    #[must_use]
    pub fn series(&self) -> &QTSeries {
        &self.series
    }

    /// Truncation order.
    #[must_use]
    pub fn trunc(&self) -> u32 {
        self.series.trunc()
    }

    /// Disjoint union of alphabets (series sum).
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        Self {
            series: self.series.add(&other.series),
        }
    }

    /// Product of alphabets (series product; models the alphabet `AB` of
    /// pairwise products of letters).
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            series: self.series.mul(&other.series),
        }
    }
}

/// `p_k[A]`: every letter `q^a t^b` becomes `q^{ka} t^{kb}`.
#[must_use]
pub fn p_plethysm(k: u32, alphabet: &Alphabet) -> QTSeries {
    alphabet.series.scale_exponents(k)
}

/// `p_μ[A] = ∏_i p_{μ_i}[A]`.
#[must_use]
pub fn p_mu_plethysm(mu: &Partition, alphabet: &Alphabet) -> QTSeries {
    let mut out = QTSeries::one(alphabet.trunc());
    for &part in mu.parts() {
        out = out.mul(&p_plethysm(part, alphabet));
    }
    out
}

fn weighted_sum_over_partitions(
    n: u32,
    alphabet: &Alphabet,
    weight: impl Fn(&Partition) -> Coeff,
) -> QTSeries {
    let mut out = QTSeries::zero(alphabet.trunc());
    for mu in partitions_of(n) {
        let w = weight(&mu);
        if w.is_zero() {
            continue;
        }
        out = out.add(&p_mu_plethysm(&mu, alphabet).scale(&w));
    }
    out
}

fn inv_z(mu: &Partition) -> Coeff {
    Coeff::new(BigInt::one(), BigInt::from(mu.z()))
}

/// `h_n[A]`, the complete homogeneous symmetric function evaluated at `A`.
#[must_use]
pub fn h_plethysm(n: u32, alphabet: &Alphabet) -> QTSeries {
    weighted_sum_over_partitions(n, alphabet, inv_z)
}

/// `e_n[A]`, the elementary symmetric function evaluated at `A`.
#[must_use]
pub fn e_plethysm(n: u32, alphabet: &Alphabet) -> QTSeries {
    weighted_sum_over_partitions(n, alphabet, |mu| {
        let v = inv_z(mu);
        if (n - mu.len() as u32).is_multiple_of(2) {
            v
        } else {
            -v
        }
    })
}

/// `s_λ[A]`, the Schur function evaluated at `A`.
#[must_use]
pub fn schur_plethysm(lambda: &Partition, alphabet: &Alphabet) -> QTSeries {
    weighted_sum_over_partitions(lambda.size(), alphabet, |mu| {
        let chi = mn_character(lambda, mu).expect("sizes match");
        Coeff::new(BigInt::from(chi), BigInt::from(mu.z()))
    })
}

/// `Ω[A] = Σ_{n≥0} h_n[A]`, the plethystic exponential.
///
/// # Errors
///
/// [`SymError::ConstantTerm`] if `A` has a nonzero constant term (the sum
/// would diverge coefficient-wise).
pub fn omega(alphabet: &Alphabet) -> Result<QTSeries, SymError> {
    if !alphabet.series.coeff(0, 0).is_zero() {
        return Err(SymError::ConstantTerm);
    }
    let trunc = alphabet.trunc();
    // Letters have total degree ≥ min_deg ≥ 1, so h_n[A] only reaches the
    // window for n·min_deg ≤ 2·trunc.
    let min_deg = alphabet
        .series
        .terms()
        .map(|(&(a, b), _)| a + b)
        .min()
        .unwrap_or(u32::MAX);
    let mut out = QTSeries::one(trunc);
    if alphabet.series.is_zero() {
        return Ok(out);
    }
    let mut n = 1u32;
    while n.saturating_mul(min_deg) <= 2 * trunc {
        out = out.add(&h_plethysm(n, alphabet));
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::coeff_int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// The alphabet `1/(1−q) = 1 + q + q² + ⋯`… minus nothing: all powers.
    fn geom_q(trunc: u32) -> Alphabet {
        Alphabet::new(QTSeries::inv_one_minus(trunc, 1, 0)).unwrap()
    }

    fn prod_inv(trunc: u32, steps: &[u32]) -> QTSeries {
        let mut out = QTSeries::one(trunc);
        for &s in steps {
            out = out.mul(&QTSeries::inv_one_minus(trunc, s, 0));
        }
        out
    }

    #[test]
    fn alphabet_rejects_negative_coefficients() {
        let bad = QTSeries::monomial(4, 1, 0, coeff_int(-1));
        assert!(matches!(
            Alphabet::new(bad),
            Err(SymError::NegativeCoefficient { q_exp: 1, .. })
        ));
    }

    #[test]
    fn h_of_geometric_alphabet() {
        // h_n[1/(1−q)] = ∏_{i=1}^n 1/(1−q^i).
        let a = geom_q(12);
        for n in 1..=4u32 {
            let steps: Vec<u32> = (1..=n).collect();
            assert_eq!(h_plethysm(n, &a), prod_inv(12, &steps), "h_{n}");
        }
    }

    #[test]
    fn e_of_geometric_alphabet() {
        // e_n[1/(1−q)] = q^{n(n−1)/2} ∏_{i=1}^n 1/(1−q^i).
        let a = geom_q(12);
        for n in 1..=4u32 {
            let steps: Vec<u32> = (1..=n).collect();
            let shift = QTSeries::monomial(12, n * (n - 1) / 2, 0, coeff_int(1));
            assert_eq!(e_plethysm(n, &a), prod_inv(12, &steps).mul(&shift), "e_{n}");
        }
    }

    #[test]
    fn schur_of_geometric_alphabet() {
        // s_{(2,1)}[1/(1−q)] = q / ((1−q)²(1−q³)) (hook-content formula).
        let a = geom_q(12);
        let expected = prod_inv(12, &[1, 1, 3]).mul(&QTSeries::monomial(12, 1, 0, coeff_int(1)));
        assert_eq!(schur_plethysm(&p(&[2, 1]), &a), expected);
        // s_{(n)} = h_n and s_{(1^n)} = e_n.
        for n in 1..=4u32 {
            assert_eq!(schur_plethysm(&p(&[n]), &a), h_plethysm(n, &a));
            assert_eq!(
                schur_plethysm(&p(&vec![1; n as usize]), &a),
                e_plethysm(n, &a)
            );
        }
    }

    fn two_letter() -> Alphabet {
        // A = q + t²
        let s = QTSeries::monomial(8, 1, 0, coeff_int(1)).add(&QTSeries::monomial(
            8,
            0,
            2,
            coeff_int(1),
        ));
        Alphabet::new(s).unwrap()
    }

    fn mixed_letter() -> Alphabet {
        // B = 1/(1−qt) = 1 + qt + q²t² + ⋯
        Alphabet::new(QTSeries::inv_one_minus(8, 1, 1)).unwrap()
    }

    #[test]
    fn cauchy_identity() {
        // Σ_{λ⊢n} s_λ[A] s_λ[B] = h_n[AB].
        let a = two_letter();
        let b = mixed_letter();
        for n in 1..=3u32 {
            let mut lhs = QTSeries::zero(8);
            for lam in partitions_of(n) {
                lhs = lhs.add(&schur_plethysm(&lam, &a).mul(&schur_plethysm(&lam, &b)));
            }
            assert_eq!(lhs, h_plethysm(n, &a.mul(&b)), "n = {n}");
        }
    }

    #[test]
    fn h_is_multiplicative_over_alphabet_sums() {
        // h_n[A+B] = Σ_k h_k[A] h_{n−k}[B].
        let a = two_letter();
        let b = mixed_letter();
        for n in 1..=3u32 {
            let mut rhs = QTSeries::zero(8);
            for k in 0..=n {
                rhs = rhs.add(&h_plethysm(k, &a).mul(&h_plethysm(n - k, &b)));
            }
            assert_eq!(h_plethysm(n, &a.add(&b)), rhs, "n = {n}");
        }
    }

    #[test]
    fn schur_expansion_of_power_of_p1() {
        // p₁[A]^n = Σ_{λ⊢n} f^λ s_λ[A].
        let a = two_letter();
        let n = 3u32;
        let mut lhs = QTSeries::one(8);
        for _ in 0..n {
            lhs = lhs.mul(&p_plethysm(1, &a));
        }
        let mut rhs = QTSeries::zero(8);
        for lam in partitions_of(n) {
            rhs = rhs.add(&schur_plethysm(&lam, &a).scale(&coeff_int(lam.hook_dim() as i64)));
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_of_single_letter() {
        // Ω[q] = 1/(1−q).
        let a = Alphabet::new(QTSeries::monomial(10, 1, 0, coeff_int(1))).unwrap();
        assert_eq!(omega(&a).unwrap(), QTSeries::inv_one_minus(10, 1, 0));
    }

    #[test]
    fn omega_is_multiplicative() {
        // Ω[A+B] = Ω[A]·Ω[B].
        let a = Alphabet::new(
            QTSeries::monomial(6, 1, 0, coeff_int(2)).add(&QTSeries::monomial(
                6,
                1,
                1,
                coeff_int(1),
            )),
        )
        .unwrap();
        let b = Alphabet::new(QTSeries::monomial(6, 0, 1, coeff_int(1))).unwrap();
        let lhs = omega(&a.add(&b)).unwrap();
        let rhs = omega(&a).unwrap().mul(&omega(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn omega_requires_zero_constant_term() {
        let a = Alphabet::new(QTSeries::one(6)).unwrap();
        assert_eq!(omega(&a), Err(SymError::ConstantTerm));
    }
}
