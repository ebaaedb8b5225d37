//! Exact polynomials in `x_1, …, x_n, y_1, …, y_n` under the diagonal
//! signed-permutation action, and the straightening algorithm onto the
//! compact basis `{M_β}`.
//!
//! Exponent vectors follow the variable order
//! `x₁ < y₁ < x₂ < y₂ < ⋯ < xₙ < yₙ`; the *leading monomial* of a nonzero
//! polynomial is its lexicographically smallest exponent vector under that
//! order. Key operations:
//!
//! - [`act`]: the diagonal action `x_i ↦ ±x_{σ(i)}`, `y_i ↦ ±y_{σ(i)}`.
//! - [`monomial_invariant`]: the orbit sum `M(a,b)` over distinct
//!   permutations of the variables; leading monomial `x^a y^b`.
//! - [`monomial_sym_squares`]: `m_λ(x²)` or `m_λ(y²)`.
//! - [`jacobian_delta`] and [`alternant`]: the sign-twisting determinants
//!   `Δ(x)` and `Δ_D(x, y)`.
//! - [`straighten`] / [`expand_straightened`]: the recursion
//!   `M(a,b) = m_{λ'}(x²) m_{μ'}(y²) M(ā,b̄) − (remainders)`, driven by the
//!   fiber decomposition of diagrams, producing the unique expansion over
//!   `{M_β}` with invariant coefficients. Each remainder sits strictly
//!   below its source in a well-founded order (dominance drop on the
//!   exponent multisets, or a reading-order increase at equal multisets),
//!   which makes the recursion triangular.

use crate::ediagrams::{compact_of_perm, count_with_weight, phi, Cell, EDiagram};
use crate::group_core::{next_permutation, SignedPerm};
use crate::odiagrams::ODiagram;
use crate::symfunc::{bigint_json, Coeff, Partition};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors for polynomial operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    /// Operands built over different numbers of variable pairs.
    #[error("size mismatch: {left} vs {right} variable pairs")]
    SizeMismatch {
        /// Pairs on the left operand.
        left: usize,
        /// Pairs on the right operand.
        right: usize,
    },
    /// A partition with more parts than variables.
    #[error("partition has {parts} parts but only {n} variables are available")]
    TooManyParts {
        /// Number of parts.
        parts: usize,
        /// Number of variables.
        n: usize,
    },
    /// The straightening recursion exceeded the diagram count of its
    /// bidegree — a bug guard that should be unreachable.
    #[error("straightening exceeded {cap} steps for bidegree {bidegree:?}")]
    NonTermination {
        /// Bidegree being straightened.
        bidegree: (u32, u32),
        /// The step cap that was exceeded.
        cap: u64,
    },
}

/// A polynomial in `x_1, y_1, …, x_n, y_n` with exact rational
/// coefficients.
///
/// Terms map a dense exponent vector of length `2n` (interleaved
/// `x₁, y₁, x₂, y₂, …`) to a nonzero coefficient; the map order is the lex
/// order on exponent vectors, so the first key is the leading monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct DiagPoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl fmt::Debug for DiagPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiagPoly({self})")
    }
}

impl fmt::Display for DiagPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            let mut vars = String::new();
            for (pos, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if pos % 2 == 0 { 'x' } else { 'y' };
                let idx = pos / 2 + 1;
                vars.push_str(&format!("{name}{idx}"));
                if e > 1 {
                    vars.push_str(&format!("^{e}"));
                }
            }
            let mag = if coeff.abs() == Coeff::one() && !vars.is_empty() {
                String::new()
            } else {
                format!("{}", coeff.abs())
            };
            let sep = if mag.is_empty() || vars.is_empty() {
                ""
            } else {
                "*"
            };
            if first {
                let sign = if coeff < &Coeff::zero() { "-" } else { "" };
                write!(f, "{sign}{mag}{sep}{vars}")?;
                first = false;
            } else {
                let sign = if coeff < &Coeff::zero() { " - " } else { " + " };
                write!(f, "{sign}{mag}{sep}{vars}")?;
            }
        }
        Ok(())
    }
}

impl DiagPoly {
    /// The zero polynomial over `n` variable pairs.
    #[must_use]
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    #[must_use]
    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(vec![0; 2 * n], Coeff::one());
        p
    }

    /// A single term. The exponent vector must have length `2n`.
    ///
    /// # Panics
    ///
    /// Panics if the exponent vector has the wrong length.
    #[must_use]
    pub fn monomial(n: usize, exps: Vec<u32>, coeff: Coeff) -> Self {
        assert_eq!(exps.len(), 2 * n, "exponent vector must have length 2n");
        let mut p = Self::zero(n);
        p.add_term(exps, coeff);
        p
    }

    /// Number of variable pairs.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether this is the zero polynomial.
    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    #[must_use]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lex order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Coeff)> {
        self.terms.iter()
    }

    /// Coefficient of an exponent vector (zero when absent).
    #[must_use]
    pub fn coeff(&self, exps: &[u32]) -> Coeff {
        self.terms.get(exps).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The lex-smallest exponent vector and its coefficient.
    #[must_use]
    pub fn leading_monomial(&self) -> Option<(&Vec<u32>, &Coeff)> {
        self.terms.iter().next()
    }

    /// Adds `coeff · x^exps`, pruning a resulting zero.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Coeff) {
        debug_assert_eq!(exps.len(), 2 * self.n);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Sum.
    ///
    /// # Errors
    ///
    /// [`PolyError::SizeMismatch`].
    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.add_term(exps.clone(), coeff.clone());
        }
        Ok(out)
    }

    /// Difference.
    ///
    /// # Errors
    ///
    /// [`PolyError::SizeMismatch`].
    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    /// Negation.
    #[must_use]
    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Product.
    ///
    /// # Errors
    ///
    /// [`PolyError::SizeMismatch`].
    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u32> = e1.iter().zip(e2).map(|(&a, &b)| a + b).collect();
                out.add_term(exps, c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    /// Scalar multiple.
    #[must_use]
    pub fn scale(&self, k: &Coeff) -> Self {
        if k.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Bidegree `(Σ x-exponents, Σ y-exponents)` if the polynomial is
    /// bihomogeneous (and nonzero), else `None`.
    #[must_use]
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut result: Option<(u32, u32)> = None;
        for exps in self.terms.keys() {
            let dx: u32 = exps.iter().step_by(2).sum();
            let dy: u32 = exps.iter().skip(1).step_by(2).sum();
            match result {
                None => result = Some((dx, dy)),
                Some(r) if r == (dx, dy) => {}
                Some(_) => return None,
            }
        }
        result
    }

    /// JSON form: a sorted list of `[exponent-array, numerator,
    /// denominator]` entries.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!([e, bigint_json(c.numer()), bigint_json(c.denom())]))
            .collect();
        serde_json::Value::Array(entries)
    }

    fn check_n(&self, other: &Self) -> Result<(), PolyError> {
        if self.n != other.n {
            return Err(PolyError::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// The diagonal action: `x_i ↦ sign(β(i))·x_{σ(i)}` and
/// `y_i ↦ sign(β(i))·y_{σ(i)}` with `σ(i) = |β(i)|`.
///
/// # Errors
///
/// [`PolyError::SizeMismatch`] when the permutation size differs from the
/// polynomial's.
pub fn act(beta: &SignedPerm, p: &DiagPoly) -> Result<DiagPoly, PolyError> {
    if beta.n() != p.n() {
        return Err(PolyError::SizeMismatch {
            left: beta.n(),
            right: p.n(),
        });
    }
    let n = p.n();
    let mut out = DiagPoly::zero(n);
    for (exps, coeff) in &p.terms {
        let mut new_exps = vec![0u32; 2 * n];
        let mut odd_flips = 0u32;
        for i in 1..=n {
            let a = exps[2 * (i - 1)];
            let b = exps[2 * (i - 1) + 1];
            let target = beta.abs_entry(i);
            new_exps[2 * (target - 1)] = a;
            new_exps[2 * (target - 1) + 1] = b;
            if beta.entry(i) < 0 {
                odd_flips += a + b;
            }
        }
        let signed = if odd_flips.is_multiple_of(2) {
            coeff.clone()
        } else {
            -coeff.clone()
        };
        out.add_term(new_exps, signed);
    }
    Ok(out)
}

/// All distinct permutations of a multiset, starting from its sorted
/// ascending arrangement.
fn multiset_perms<T: Ord + Copy>(base: &[T]) -> Vec<Vec<T>> {
    let mut v = base.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

/// `n! / ∏ mult_i!` for a sorted multiset: the number of its distinct
/// permutations.
fn orbit_size<T: Eq>(sorted: &[T]) -> u64 {
    let mut size = 1u64;
    let mut seen = 0u64;
    let mut run = 0u64;
    for (i, item) in sorted.iter().enumerate() {
        seen += 1;
        if i > 0 && *item == sorted[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        size = size * seen / run;
    }
    size
}

/// The monomial diagonal invariant `M(a,b)`: the sum of the distinct
/// monomials obtained by permuting the variable pairs of `x^a y^b`. Its
/// leading monomial is `x^a y^b` itself with coefficient `1`, and it is
/// invariant under the full diagonal action.
#[must_use]
pub fn monomial_invariant(d: &EDiagram) -> DiagPoly {
    let n = d.n();
    let mut out = DiagPoly::zero(n);
    for arrangement in multiset_perms(d.cells()) {
        let mut exps = vec![0u32; 2 * n];
        for (i, cell) in arrangement.iter().enumerate() {
            exps[2 * i] = cell.a;
            exps[2 * i + 1] = cell.b;
        }
        out.add_term(exps, Coeff::one());
    }
    out
}

/// Which variable set an operation targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VarSet {
    /// The `x` variables.
    X,
    /// The `y` variables.
    Y,
}

/// The monomial symmetric polynomial in the squares of one variable set:
/// `m_λ(x₁², …, xₙ²)` or `m_λ(y₁², …, yₙ²)`.
///
/// # Errors
///
/// [`PolyError::TooManyParts`] when `λ` has more than `n` parts.
pub fn monomial_sym_squares(
    lam: &Partition,
    which: VarSet,
    n: usize,
) -> Result<DiagPoly, PolyError> {
    if lam.len() > n {
        return Err(PolyError::TooManyParts {
            parts: lam.len(),
            n,
        });
    }
    let mut padded = vec![0u32; n];
    for (i, &part) in lam.parts().iter().enumerate() {
        padded[i] = 2 * part;
    }
    let offset = match which {
        VarSet::X => 0,
        VarSet::Y => 1,
    };
    let mut out = DiagPoly::zero(n);
    for arrangement in multiset_perms(&padded) {
        let mut exps = vec![0u32; 2 * n];
        for (i, &e) in arrangement.iter().enumerate() {
            exps[2 * i + offset] = e;
        }
        out.add_term(exps, Coeff::one());
    }
    Ok(out)
}

/// Visits every permutation of `0..n` together with its sign.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize], i32)) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut inversions = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        visit(&perm, if inversions.is_multiple_of(2) { 1 } else { -1 });
        if !next_permutation(&mut perm) {
            return;
        }
    }
}

/// The Jacobian `Δ(x) = x₁⋯xₙ ∏_{i<j} (x_i² − x_j²)`, computed as the
/// determinant `det(x_i^{2(n−j)+1})`. It has degree `n²` and alternates in
/// sign under the diagonal action.
#[must_use]
pub fn jacobian_delta(n: usize) -> DiagPoly {
    let mut out = DiagPoly::zero(n);
    for_each_permutation(n, |perm, sign| {
        let mut exps = vec![0u32; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            exps[2 * i] = 2 * (n - 1 - j) as u32 + 1;
        }
        out.add_term(exps, Coeff::from_integer(sign.into()));
    });
    out
}

/// The alternant `Δ_D(x,y) = det(x_i^{a_j} y_i^{b_j})` of an `o`-diagram
/// (columns in reading order). Satisfies `act(β, Δ_D) = sign(β)·Δ_D`.
#[must_use]
pub fn alternant(d: &ODiagram) -> DiagPoly {
    let n = d.n();
    let cells = d.cells();
    let mut out = DiagPoly::zero(n);
    for_each_permutation(n, |perm, sign| {
        let mut exps = vec![0u32; 2 * n];
        for (i, &j) in perm.iter().enumerate() {
            exps[2 * i] = cells[j].a;
            exps[2 * i + 1] = cells[j].b;
        }
        out.add_term(exps, Coeff::from_integer(sign.into()));
    });
    out
}

/// A linear combination `Σ coeff · m_lam(x²) m_mu(y²) M_β` with pairwise
/// distinct `(lam, mu, beta)` triples, sorted canonically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StraightenedForm {
    n: usize,
    terms: Vec<(Partition, Partition, SignedPerm, Coeff)>,
}

impl StraightenedForm {
    /// Number of variable pairs.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms `(lam, mu, beta, coeff)` in canonical order.
    #[must_use]
    pub fn terms(&self) -> &[(Partition, Partition, SignedPerm, Coeff)] {
        &self.terms
    }

    /// JSON form: a list of `{lam, mu, beta, coeff}` objects.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(lam, mu, beta, coeff)| {
                serde_json::json!({
                    "lam": lam.parts(),
                    "mu": mu.parts(),
                    "beta": beta.window(),
                    "coeff": [bigint_json(coeff.numer()), bigint_json(coeff.denom())],
                })
            })
            .collect();
        serde_json::Value::Array(entries)
    }
}

/// Order in which the straightening worklist is consumed. The worklist
/// always processes a diagram that is maximal in the triangularity order
/// (so no diagram is ever revisited); the variants choose differently
/// among incomparable maximal candidates. Any admissible order yields the
/// same form, and exposing the choice lets tests verify that.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionOrder {
    /// Among maximal candidates, process the lex-smallest first.
    LexSmallestFirst,
    /// Among maximal candidates, process the lex-largest first.
    LexLargestFirst,
}

/// The `a`- and `b`-exponent multisets of a diagram, sorted descending.
fn exponent_multisets(d: &EDiagram) -> (Vec<u32>, Vec<u32>) {
    let mut a: Vec<u32> = d.cells().iter().map(|c| c.a).collect();
    let mut b: Vec<u32> = d.cells().iter().map(|c| c.b).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    (a, b)
}

/// Dominance comparison of two descending vectors with equal length and
/// sum: every prefix sum of `p` is at most the matching prefix sum of `q`.
fn dominated(p: &[u32], q: &[u32]) -> bool {
    let mut sp = 0u64;
    let mut sq = 0u64;
    for (&x, &y) in p.iter().zip(q) {
        sp += u64::from(x);
        sq += u64::from(y);
        if sp > sq {
            return false;
        }
    }
    true
}

/// The strict triangularity order of the straightening recursion: `e` is
/// below `d` when both exponent multisets of `e` are dominated by those of
/// `d` and either some domination is strict or — at equal multisets, where
/// the cells merely pair `a`- with `b`-exponents differently — `e` is
/// strictly greater in reading order. Remainders of a straightening step
/// are always strictly below the diagram being straightened: within each
/// coordinate the step's sum multiset pairs sorted bases with sorted gains,
/// which dominates every other pairing, and the equal-multiset pairings
/// are exactly the reading-lex-greater tie rearrangements.
fn rank_below(e: &EDiagram, d: &EDiagram) -> bool {
    if e.weight() != d.weight() {
        return false;
    }
    let (ea, eb) = exponent_multisets(e);
    let (da, db) = exponent_multisets(d);
    if !dominated(&ea, &da) || !dominated(&eb, &db) {
        return false;
    }
    if ea != da || eb != db {
        return true;
    }
    e > d
}

/// Expands `m_{λ'}(x²) m_{μ'}(y²) M(compact)` as `Σ_E n_E M(E)` with
/// positive integer coefficients, by merging exponent orbits instead of
/// multiplying polynomials: every triple of arrangements contributes one
/// cell array, and the count for each diagram divides by its orbit size.
fn expand_basis_product(
    lam_conj: &Partition,
    mu_conj: &Partition,
    compact: &EDiagram,
) -> BTreeMap<EDiagram, u64> {
    let n = compact.n();
    let pad = |p: &Partition| -> Vec<u32> {
        let mut v = vec![0u32; n];
        for (i, &part) in p.parts().iter().enumerate() {
            v[i] = 2 * part;
        }
        v
    };
    let u_orbit = multiset_perms(&pad(lam_conj));
    let v_orbit = multiset_perms(&pad(mu_conj));
    let w_orbit = multiset_perms(compact.cells());
    let mut counter: BTreeMap<EDiagram, u64> = BTreeMap::new();
    let mut cells = vec![Cell::new(0, 0); n];
    for u in &u_orbit {
        for v in &v_orbit {
            for w in &w_orbit {
                for i in 0..n {
                    cells[i] = Cell::new(w[i].a + u[i], w[i].b + v[i]);
                }
                let diagram = EDiagram::new(cells.clone()).expect("even gains keep parity");
                *counter.entry(diagram).or_insert(0) += 1;
            }
        }
    }
    counter
        .into_iter()
        .map(|(diagram, count)| {
            let orbit = orbit_size(diagram.cells());
            assert_eq!(count % orbit, 0, "orbit merge must divide evenly");
            (diagram, count / orbit)
        })
        .collect()
}

/// Straightens a linear combination of monomial invariants, keyed by
/// diagram, into the compact basis.
///
/// # Errors
///
/// [`PolyError::NonTermination`] if the recursion outruns the number of
/// diagrams of some input bidegree (a bug guard).
pub fn straighten_combination(
    n: usize,
    input: &BTreeMap<EDiagram, Coeff>,
    order: ReductionOrder,
) -> Result<StraightenedForm, PolyError> {
    let mut work: BTreeMap<EDiagram, Coeff> = input
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(d, c)| (d.clone(), c.clone()))
        .collect();
    // Remainders stay inside the bidegree of their source and sit strictly
    // below it in the triangularity order; popping a maximal unresolved
    // diagram therefore never revisits one, so the pops are bounded by the
    // diagram count of the input bidegrees.
    let mut cap = 0u64;
    let mut seen_bidegrees = std::collections::BTreeSet::new();
    let mut worst = (0, 0);
    for d in work.keys() {
        let w = d.weight();
        if seen_bidegrees.insert(w) {
            cap = cap.saturating_add(count_with_weight(n, w.0, w.1));
            worst = w;
        }
    }
    let mut out: BTreeMap<(Partition, Partition, SignedPerm), Coeff> = BTreeMap::new();
    let mut steps = 0u64;
    loop {
        let mut chosen: Option<EDiagram> = None;
        for d in work.keys() {
            if work.keys().any(|other| rank_below(d, other)) {
                continue;
            }
            chosen = Some(d.clone());
            if order == ReductionOrder::LexSmallestFirst {
                break;
            }
        }
        let Some(diagram) = chosen else {
            break;
        };
        let coeff = work.remove(&diagram).expect("chosen key is present");
        if coeff.is_zero() {
            continue;
        }
        steps += 1;
        if steps > cap {
            return Err(PolyError::NonTermination {
                bidegree: worst,
                cap,
            });
        }
        let fibers = phi(&diagram).expect("margins pair for valid diagrams");
        let lam = fibers.lambda.conjugate();
        let mu = fibers.mu.conjugate();
        let key = (lam.clone(), mu.clone(), diagram.classifying_perm());
        let slot = out.entry(key).or_insert_with(Coeff::zero);
        *slot = slot.clone() + coeff.clone();
        if slot.is_zero() {
            out.remove(&(lam.clone(), mu.clone(), diagram.classifying_perm()));
        }
        if fibers.lambda.is_empty() && fibers.mu.is_empty() {
            continue;
        }
        let expansion = expand_basis_product(&lam, &mu, &fibers.compact);
        assert_eq!(
            expansion.get(&diagram),
            Some(&1),
            "the straightened diagram must appear exactly once in its product"
        );
        for (remainder, mult) in expansion {
            if remainder == diagram {
                continue;
            }
            assert!(
                rank_below(&remainder, &diagram),
                "remainder {remainder:?} not below {diagram:?} in the triangularity order"
            );
            let delta = coeff.clone() * Coeff::from_integer(mult.into());
            let slot = work.entry(remainder.clone()).or_insert_with(Coeff::zero);
            *slot = slot.clone() - delta;
            if slot.is_zero() {
                work.remove(&remainder);
            }
        }
    }
    let mut terms: Vec<(Partition, Partition, SignedPerm, Coeff)> = out
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((lam, mu, beta), c)| (lam, mu, beta, c))
        .collect();
    terms.sort();
    Ok(StraightenedForm { n, terms })
}

/// Straightens a single monomial invariant: the expansion of `M(D)` over
/// the compact basis with `m_λ(x²) m_μ(y²)` coefficients.
///
/// # Errors
///
/// As [`straighten_combination`].
pub fn straighten(d: &EDiagram) -> Result<StraightenedForm, PolyError> {
    let mut input = BTreeMap::new();
    input.insert(d.clone(), Coeff::one());
    straighten_combination(d.n(), &input, ReductionOrder::LexSmallestFirst)
}

/// Expands a straightened form back into a polynomial:
/// `Σ coeff · m_lam(x²) m_mu(y²) M_β`.
#[must_use]
pub fn expand_straightened(s: &StraightenedForm) -> DiagPoly {
    let n = s.n;
    let mut out = DiagPoly::zero(n);
    for (lam, mu, beta, coeff) in &s.terms {
        let mx = monomial_sym_squares(lam, VarSet::X, n).expect("parts bounded by n");
        let my = monomial_sym_squares(mu, VarSet::Y, n).expect("parts bounded by n");
        let basis = monomial_invariant(&compact_of_perm(beta));
        let product = mx
            .mul(&my)
            .and_then(|p| p.mul(&basis))
            .expect("matching sizes");
        out = out.add(&product.scale(coeff)).expect("matching sizes");
    }
    out
}
