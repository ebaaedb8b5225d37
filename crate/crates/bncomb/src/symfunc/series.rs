//! Truncated bivariate power series in `q` and `t` over the exact rationals.
//!
//! A [`QTSeries`] stores finitely many terms `c · q^a t^b` with
//! `0 ≤ a, b ≤ trunc` in a sorted map; coefficients are
//! [`BigRational`](num_rational::BigRational) and zeros are never stored.
//! Truncation is per variable: the series represents an equivalence class
//! modulo `(q^{trunc+1}, t^{trunc+1})`.
//!
//! Because all exponents are non-negative, ring operations are *exact on the
//! retained window*: a product of series that are exact up to `(trunc, trunc)`
//! is again exact there, so zero-tolerance coefficient comparisons within the
//! window are sound. Binary operations between series of different
//! truncations restrict to the smaller window.

use super::SymError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational coefficient type used throughout the crate.
pub type Coeff = BigRational;

/// Shorthand for an integer coefficient.
#[must_use]
pub fn coeff_int(k: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(k))
}

/// A truncated power series `Σ c_{a,b} q^a t^b` with exact rational
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QTSeries {
    trunc: u32,
    terms: BTreeMap<(u32, u32), Coeff>,
}

impl fmt::Debug for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTSeries[trunc={}]({self})", self.trunc)
    }
}

impl fmt::Display for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && (a, b) != (0, 0);
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            if a > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "q")?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
            if b > 0 {
                if a > 0 || !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "t")?;
                if b > 1 {
                    write!(f, "^{b}")?;
                }
            }
        }
        Ok(())
    }
}

impl QTSeries {
    /// The zero series at the given truncation order.
    #[must_use]
    pub fn zero(trunc: u32) -> Self {
        Self {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series `1`.
    #[must_use]
    pub fn one(trunc: u32) -> Self {
        Self::monomial(trunc, 0, 0, Coeff::one())
    }

    /// A single term `coeff · q^{q_exp} t^{t_exp}` (dropped if outside the
    /// window or zero).
    #[must_use]
    pub fn monomial(trunc: u32, q_exp: u32, t_exp: u32, coeff: Coeff) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(q_exp, t_exp, coeff);
        s
    }

    /// `1 − q^a t^b` as a polynomial.
    #[must_use]
    pub fn one_minus(trunc: u32, a: u32, b: u32) -> Self {
        let mut s = Self::one(trunc);
        s.add_term(a, b, -Coeff::one());
        s
    }

    /// `1 + q^a t^b` as a polynomial.
    #[must_use]
    pub fn one_plus(trunc: u32, a: u32, b: u32) -> Self {
        let mut s = Self::one(trunc);
        s.add_term(a, b, Coeff::one());
        s
    }

    /// The geometric series `1/(1 − q^a t^b) = Σ_k q^{ka} t^{kb}`.
    ///
    /// # Panics
    ///
    /// Panics if `(a, b) = (0, 0)` (not invertible as a power series
    /// expansion of this form).
    #[must_use]
    pub fn inv_one_minus(trunc: u32, a: u32, b: u32) -> Self {
        assert!(a > 0 || b > 0, "1/(1-1) is not a power series");
        let mut s = Self::zero(trunc);
        let mut qa = 0u32;
        let mut tb = 0u32;
        loop {
            s.add_term(qa, tb, Coeff::one());
            qa += a;
            tb += b;
            if qa > trunc || tb > trunc {
                break;
            }
        }
        s
    }

    /// The alternating series `1/(1 + q^a t^b) = Σ_k (−1)^k q^{ka} t^{kb}`.
    ///
    /// # Panics
    ///
    /// Panics if `(a, b) = (0, 0)`.
    #[must_use]
    pub fn inv_one_plus(trunc: u32, a: u32, b: u32) -> Self {
        assert!(a > 0 || b > 0, "1/(1+1) is not an integral power series");
        let mut s = Self::zero(trunc);
        let mut qa = 0u32;
        let mut tb = 0u32;
        let mut sign = Coeff::one();
        loop {
            s.add_term(qa, tb, sign.clone());
            qa += a;
            tb += b;
            if qa > trunc || tb > trunc {
                break;
            }
            sign = -sign;
        }
        s
    }

    /// Builds a series from integer counts (e.g. object enumerations by
    /// bidegree).
    #[must_use]
    pub fn from_counts(trunc: u32, counts: &BTreeMap<(u32, u32), u64>) -> Self {
        let mut s = Self::zero(trunc);
        for (&(a, b), &c) in counts {
            s.add_term(a, b, Coeff::from_integer(BigInt::from(c)));
        }
        s
    }

    /// Truncation order (per variable).
    #[must_use]
    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Whether no terms are stored.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `q^a t^b` (zero if absent).
    #[must_use]
    pub fn coeff(&self, a: u32, b: u32) -> Coeff {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Iterates over the stored terms in `(q, t)`-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Coeff)> {
        self.terms.iter()
    }

    /// Number of stored (nonzero) terms.
    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coeff · q^a t^b` in place; terms beyond the window are dropped
    /// and exact zeros are pruned.
    pub fn add_term(&mut self, a: u32, b: u32, coeff: Coeff) {
        if a > self.trunc || b > self.trunc || coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Coeff::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    /// Restricts to a smaller window, dropping terms beyond it.
    #[must_use]
    pub fn restrict(&self, trunc: u32) -> Self {
        let trunc = trunc.min(self.trunc);
        let terms = self
            .terms
            .iter()
            .filter(|(&(a, b), _)| a <= trunc && b <= trunc)
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        Self { trunc, terms }
    }

    fn common_trunc(&self, other: &Self) -> u32 {
        self.trunc.min(other.trunc)
    }

    /// Sum, on the common window.
    #[must_use]
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.restrict(self.common_trunc(other));
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    /// Difference, on the common window.
    #[must_use]
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Self {
        Self {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }

    /// Product, on the common window (exact there; see module docs).
    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.common_trunc(other);
        let mut out = Self::zero(trunc);
        for (&(a1, b1), c1) in &self.terms {
            if a1 > trunc || b1 > trunc {
                continue;
            }
            for (&(a2, b2), c2) in &other.terms {
                let (a, b) = (a1 + a2, b1 + b2);
                if a > trunc || b > trunc {
                    continue;
                }
                out.add_term(a, b, c1 * c2);
            }
        }
        out
    }

    /// Scalar multiple.
    #[must_use]
    pub fn scale(&self, factor: &Coeff) -> Self {
        if factor.is_zero() {
            return Self::zero(self.trunc);
        }
        Self {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(&k, v)| (k, v * factor)).collect(),
        }
    }

    /// Exponent scaling `(a, b) ↦ (ka, kb)` — the effect of the power-sum
    /// plethysm `p_k` on an alphabet. Terms mapped beyond the window drop.
    ///
    /// # Panics
    ///
    /// Panics if `k = 0`.
    #[must_use]
    pub fn scale_exponents(&self, k: u32) -> Self {
        assert!(k >= 1, "p_0 scaling is not defined");
        let mut out = Self::zero(self.trunc);
        for (&(a, b), c) in &self.terms {
            if let (Some(ka), Some(kb)) = (a.checked_mul(k), b.checked_mul(k)) {
                out.add_term(ka, kb, c.clone())
            }
        }
        out
    }

    /// Swaps the roles of `q` and `t`.
    #[must_use]
    pub fn swap_vars(&self) -> Self {
        Self {
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((b, a), v.clone()))
                .collect(),
        }
    }

    /// Specializes `t = 0` (keeps only `t`-free terms).
    #[must_use]
    pub fn set_t_zero(&self) -> Self {
        Self {
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .filter(|(&(_, b), _)| b == 0)
                .map(|(&k, v)| (k, v.clone()))
                .collect(),
        }
    }

    /// Specializes `q = t = 1`, i.e. sums all stored coefficients (only
    /// meaningful for certified polynomials).
    #[must_use]
    pub fn sum_coeffs(&self) -> Coeff {
        let mut total = Coeff::zero();
        for c in self.terms.values() {
            total += c;
        }
        total
    }

    /// Largest `(q, t)` exponents appearing, or `None` for the zero series.
    #[must_use]
    pub fn max_degrees(&self) -> Option<(u32, u32)> {
        if self.terms.is_empty() {
            return None;
        }
        let dq = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let dt = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0);
        Some((dq, dt))
    }

    /// Confirms that no term exceeds `bound` in either exponent — the
    /// certificate that a truncated computation produced a polynomial of
    /// degree at most `bound` per variable, provided `bound < trunc`.
    ///
    /// # Errors
    ///
    /// [`SymError::DegreeExceeded`] naming an offending term.
    pub fn check_degree_bound(&self, bound: u32) -> Result<(), SymError> {
        for &(a, b) in self.terms.keys() {
            if a > bound || b > bound {
                return Err(SymError::DegreeExceeded {
                    q_exp: a,
                    t_exp: b,
                    bound,
                });
            }
        }
        Ok(())
    }

    /// Whether every stored coefficient is `≥ 0`.
    #[must_use]
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First position (in `(q, t)`-lexicographic order, within the common
    /// window) where the two series differ, with both coefficients.
    #[must_use]
    pub fn first_discrepancy(&self, other: &Self) -> Option<((u32, u32), Coeff, Coeff)> {
        let trunc = self.common_trunc(other);
        let mut keys: Vec<(u32, u32)> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .filter(|&(a, b)| a <= trunc && b <= trunc)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for (a, b) in keys {
            let lhs = self.coeff(a, b);
            let rhs = other.coeff(a, b);
            if lhs != rhs {
                return Some(((a, b), lhs, rhs));
            }
        }
        None
    }

    /// `q^{bound} · f(1/q, t)` for a series with all `q`-exponents `≤ bound`:
    /// reverses the `q`-grading. Used for degree-reversal symmetries.
    ///
    /// # Errors
    ///
    /// [`SymError::DegreeExceeded`] if some `q`-exponent exceeds `bound`.
    pub fn reverse_q(&self, bound: u32) -> Result<Self, SymError> {
        let mut out = Self::zero(self.trunc);
        for (&(a, b), c) in &self.terms {
            if a > bound {
                return Err(SymError::DegreeExceeded {
                    q_exp: a,
                    t_exp: b,
                    bound,
                });
            }
            out.add_term(bound - a, b, c.clone());
        }
        Ok(out)
    }

    /// Exact division by a polynomial in `q` alone, treating the stored
    /// support of `self` as an exact polynomial (certify with
    /// [`QTSeries::check_degree_bound`] first).
    ///
    /// # Errors
    ///
    /// [`SymError::DivisionInexact`] if a nonzero remainder survives.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero or involves `t`.
    pub fn div_exact_in_q(&self, divisor: &Self) -> Result<Self, SymError> {
        assert!(!divisor.is_zero(), "division by zero");
        assert!(
            divisor.terms.keys().all(|&(_, b)| b == 0),
            "divisor must be a polynomial in q alone"
        );
        let lead_e = divisor.terms.keys().map(|&(a, _)| a).max().unwrap();
        let lead_c = divisor.coeff(lead_e, 0);
        let mut rem = self.terms.clone();
        let mut out = Self::zero(self.trunc);
        while let Some(max_q) = rem.keys().map(|&(a, _)| a).max() {
            // Collect the top q-row; eliminating it strictly lowers max_q.
            let row: Vec<(u32, Coeff)> = rem
                .range((max_q, 0)..=(max_q, u32::MAX))
                .map(|(&(_, b), c)| (b, c.clone()))
                .collect();
            if max_q < lead_e {
                let (b, _) = row[0].clone();
                return Err(SymError::DivisionInexact {
                    q_exp: max_q,
                    t_exp: b,
                });
            }
            for (t_exp, c) in row {
                let quot_q = max_q - lead_e;
                let quot_c = &c / &lead_c;
                out.add_term(quot_q, t_exp, quot_c.clone());
                for (&(de, _), dc) in &divisor.terms {
                    let key = (quot_q + de, t_exp);
                    let entry = rem.entry(key).or_insert_with(Coeff::zero);
                    *entry -= &quot_c * dc;
                    if entry.is_zero() {
                        rem.remove(&key);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact division by a polynomial in `t` alone; see
    /// [`QTSeries::div_exact_in_q`].
    ///
    /// # Errors
    ///
    /// [`SymError::DivisionInexact`] if a nonzero remainder survives.
    pub fn div_exact_in_t(&self, divisor: &Self) -> Result<Self, SymError> {
        let swapped = self.swap_vars().div_exact_in_q(&divisor.swap_vars());
        match swapped {
            Ok(s) => Ok(s.swap_vars()),
            Err(SymError::DivisionInexact { q_exp, t_exp }) => Err(SymError::DivisionInexact {
                q_exp: t_exp,
                t_exp: q_exp,
            }),
            Err(e) => Err(e),
        }
    }

    /// JSON form: a sorted list of `[q_exp, t_exp, num, den]` quadruples.
    /// Numerator and denominator are JSON integers when they fit in `i64`,
    /// decimal strings otherwise.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let quads: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                serde_json::json!([a, b, bigint_json(c.numer()), bigint_json(c.denom())])
            })
            .collect();
        serde_json::Value::Array(quads)
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x.clone()) {
        Ok(v) => serde_json::json!(v),
        Err(_) => serde_json::json!(x.to_string()),
    }
}
