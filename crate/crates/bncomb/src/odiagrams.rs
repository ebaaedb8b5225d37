//! `o`-diagrams: sets of distinct odd-weight cells, the skeletons of
//! diagonally alternating polynomials.
//!
//! An `o`-diagram with `n` cells is a set `{(a_1,b_1), …, (a_n,b_n)}` of
//! *distinct* pairs of nonnegative integers with every `a_i + b_i` odd, kept
//! sorted in reading order. Classification works through the *colabeling
//! order* (`b` ascending, then `a` descending) instead of a descent/schism
//! analysis:
//!
//! - [`ODiagram::colabel_classifying_perm`]: the signed permutation of a
//!   diagram's class.
//! - [`compact_o_of_perm`] / [`compactify_o`]: the unique compact diagram
//!   `(g(β), ĝ(β))` in each class.
//! - [`psi`]: the entrywise bijection sending the compact `e`-diagram of `β`
//!   to the compact `o`-diagram of `β` by flipping the second row inside the
//!   staircase `c(β) = (2σ(1)−1, …, 2σ(n)−1)`.
//! - [`phi_o`] / [`phi_o_inverse`]: the fiber bijection between arbitrary
//!   `o`-diagrams and triples (compact diagram, `λ`, `μ`).
//! - [`enumerate_odiagrams`] / [`count_odiagrams_by_bidegree`]: exhaustive
//!   generation and DP counting by bidegree.

use crate::ediagrams::{
    apply_tail_gains, cell_universe, cells_from_json, cells_to_json, check_enumeration_cap,
    margin_partition, margin_values, parse_rows, Cell, DiagramError, EDiagram,
};
use crate::group_core::SignedPerm;
use crate::symfunc::Partition;
use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

/// An `o`-diagram: a sorted set of `n ≥ 1` distinct odd-weight cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ODiagram {
    cells: Vec<Cell>,
}

impl fmt::Debug for ODiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ODiagram{:?}", self.cells)
    }
}

impl fmt::Display for ODiagram {
    /// Two-line notation: the `a` row over the `b` row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.cells.iter().map(|c| c.a.to_string()).collect();
        let bottom: Vec<String> = self.cells.iter().map(|c| c.b.to_string()).collect();
        write!(f, "{}\n{}", top.join(" "), bottom.join(" "))
    }
}

impl ODiagram {
    /// Builds an `o`-diagram, sorting cells into reading order.
    ///
    /// # Errors
    ///
    /// [`DiagramError::EmptyDiagram`], [`DiagramError::EvenWeightCell`] or
    /// [`DiagramError::RepeatedCell`].
    pub fn new(mut cells: Vec<Cell>) -> Result<Self, DiagramError> {
        if cells.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        for c in &cells {
            if (c.a + c.b) % 2 != 1 {
                return Err(DiagramError::EvenWeightCell { a: c.a, b: c.b });
            }
        }
        cells.sort_unstable();
        for pair in cells.windows(2) {
            if pair[0] == pair[1] {
                return Err(DiagramError::RepeatedCell {
                    a: pair[0].a,
                    b: pair[0].b,
                });
            }
        }
        Ok(Self { cells })
    }

    /// Builds from separate exponent rows.
    ///
    /// # Errors
    ///
    /// [`DiagramError::RowMismatch`] plus the errors of [`ODiagram::new`].
    pub fn from_rows(a_row: &[u32], b_row: &[u32]) -> Result<Self, DiagramError> {
        if a_row.len() != b_row.len() {
            return Err(DiagramError::RowMismatch {
                top: a_row.len(),
                bottom: b_row.len(),
            });
        }
        Self::new(
            a_row
                .iter()
                .zip(b_row)
                .map(|(&a, &b)| Cell::new(a, b))
                .collect(),
        )
    }

    /// Number of cells.
    #[must_use]
    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// Cells in reading order.
    #[must_use]
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Bidegree `(Σ a_i, Σ b_i)`.
    #[must_use]
    pub fn weight(&self) -> (u32, u32) {
        let wa = self.cells.iter().map(|c| c.a).sum();
        let wb = self.cells.iter().map(|c| c.b).sum();
        (wa, wb)
    }

    /// `σ(i)` for 0-based reading index `i`: 1-based position of cell `i` in
    /// the colabeling order (`b` ascending, then `a` descending; distinct
    /// cells leave no ties).
    fn colabel_positions(&self) -> Vec<usize> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.cells[i].b, Reverse(self.cells[i].a)));
        let mut sigma = vec![0usize; n];
        for (label0, &i) in order.iter().enumerate() {
            sigma[i] = label0 + 1;
        }
        sigma
    }

    /// The classifying signed permutation: the window entry at reading
    /// position `i` is the colabel of cell `i`, negated when `a_i` is even.
    #[must_use]
    pub fn colabel_classifying_perm(&self) -> SignedPerm {
        let n = self.n();
        let sigma = self.colabel_positions();
        let window: Vec<i32> = (0..n)
            .map(|i| {
                let s = sigma[i] as i32;
                if self.cells[i].a % 2 == 1 {
                    s
                } else {
                    -s
                }
            })
            .collect();
        SignedPerm::from_window(window).expect("colabels form a permutation")
    }

    /// Whether this diagram is the compact representative of its class.
    #[must_use]
    pub fn is_compact(&self) -> bool {
        *self == compactify_o(self)
    }

    /// Parses two-line notation (two whitespace-separated rows, `a` over
    /// `b`).
    ///
    /// # Errors
    ///
    /// [`DiagramError::Unparsable`], [`DiagramError::RowMismatch`], plus the
    /// errors of [`ODiagram::new`].
    pub fn parse_two_line(input: &str) -> Result<Self, DiagramError> {
        let (a_row, b_row) = parse_rows(input)?;
        Self::from_rows(&a_row, &b_row)
    }

    /// JSON form `{"cells": [[a, b], …]}` in reading order.
    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        cells_to_json(&self.cells)
    }

    /// Parses the JSON form `{"cells": [[a, b], …]}`.
    ///
    /// # Errors
    ///
    /// [`DiagramError::Unparsable`] plus the errors of [`ODiagram::new`].
    pub fn from_json(value: &serde_json::Value) -> Result<Self, DiagramError> {
        Self::new(cells_from_json(value)?)
    }
}

/// The compact `o`-diagram of a class: cells `(g_i(β), ĝ_i(β))` for
/// `i = 1..n`.
#[must_use]
pub fn compact_o_of_perm(beta: &SignedPerm) -> ODiagram {
    let lv = beta.local_vectors();
    let cells: Vec<Cell> =
        lv.g.iter()
            .zip(&lv.g_hat)
            .map(|(&a, &b)| Cell::new(a, b))
            .collect();
    ODiagram::new(cells).expect("g_i + ĝ_i is odd and the cells are distinct")
}

/// The compact representative of the class of `D`.
#[must_use]
pub fn compactify_o(d: &ODiagram) -> ODiagram {
    compact_o_of_perm(&d.colabel_classifying_perm())
}

/// The row-flip bijection from compact `e`-diagrams to compact
/// `o`-diagrams: keeps the top row and replaces each `b_i` by
/// `c_i − b_i` where `c_i = 2σ(i) − 1` and `σ` is the absolute value of the
/// classifying permutation. Sends the compact `e`-diagram of `β` to the
/// compact `o`-diagram of `β`.
///
/// # Errors
///
/// [`DiagramError::NotCompact`] if the input is not compact.
/// [`DiagramError::NegativeEntry`] cannot occur for compact input and would
/// indicate a convention bug.
pub fn psi(e: &EDiagram) -> Result<ODiagram, DiagramError> {
    if !e.is_compact() {
        return Err(DiagramError::NotCompact);
    }
    let beta = e.classifying_perm();
    let cells: Vec<Cell> = e
        .cells()
        .iter()
        .enumerate()
        .map(|(i, cell)| {
            let sigma = beta.abs_entry(i + 1) as u32;
            let c = 2 * sigma - 1;
            if cell.b > c {
                return Err(DiagramError::NegativeEntry { index: i });
            }
            Ok(Cell::new(cell.a, c - cell.b))
        })
        .collect::<Result<_, _>>()?;
    ODiagram::new(cells)
}

/// The image of an `o`-diagram under the fiber bijection: its compact
/// representative plus the partitions pairing up the margin surpluses,
/// `|D| = |D̄| + (2|λ|, 2|μ|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OPhiResult {
    /// The compact representative of the class of the input.
    pub compact: ODiagram,
    /// Partition governing the `a`-row surplus; parts `≤ n`.
    pub lambda: Partition,
    /// Partition governing the `b`-row surplus; parts `≤ n`.
    pub mu: Partition,
}

/// Decomposes an `o`-diagram as (compact representative, `λ`, `μ`) via the
/// margin construction, as for `e`-diagrams.
///
/// # Errors
///
/// [`DiagramError::PairingViolation`] (cannot occur for genuine
/// `o`-diagrams; defensive).
pub fn phi_o(d: &ODiagram) -> Result<OPhiResult, DiagramError> {
    let compact = compactify_o(d);
    let lambda = margin_partition(
        margin_values(&d.cells, |c| c.a),
        margin_values(&compact.cells, |c| c.a),
    )?;
    let mu = margin_partition(
        margin_values(&d.cells, |c| c.b),
        margin_values(&compact.cells, |c| c.b),
    )?;
    Ok(OPhiResult {
        compact,
        lambda,
        mu,
    })
}

/// Rebuilds the unique `o`-diagram mapping to the given triple under
/// [`phi_o`]: the `λ` gains are applied to the `a`-row in reading order,
/// then the `μ` gains to the `b`-row in *colabeling* order (the order that
/// classifies `o`-diagram rows).
///
/// # Errors
///
/// [`DiagramError::NotCompact`] if the compact component is not compact, or
/// [`DiagramError::PartTooLarge`] if a part exceeds the cell count.
pub fn phi_o_inverse(r: &OPhiResult) -> Result<ODiagram, DiagramError> {
    let n = r.compact.n();
    if !r.compact.is_compact() {
        return Err(DiagramError::NotCompact);
    }
    for part in r.lambda.parts().iter().chain(r.mu.parts()) {
        if *part as usize > n {
            return Err(DiagramError::PartTooLarge { part: *part, n });
        }
    }
    let mut cells = r.compact.cells.clone();
    apply_tail_gains(&mut cells, r.lambda.parts());
    cells.sort_unstable();
    // μ phase: tail gains along the colabeling order of the intermediate
    // diagram, applied to the b-row.
    let intermediate = ODiagram::new(cells)?;
    let sigma = intermediate.colabel_positions();
    let mut cells = intermediate.cells;
    for (i, cell) in cells.iter_mut().enumerate() {
        let pos0 = sigma[i] - 1;
        let need = (n - pos0) as u32;
        let gain = r.mu.parts().iter().filter(|&&p| p >= need).count() as u32;
        cell.b += 2 * gain;
    }
    ODiagram::new(cells)
}

/// All `o`-diagrams with `n` cells and every entry `≤ bound`, in ascending
/// lexicographic order of their cell sequences.
///
/// # Errors
///
/// [`DiagramError::CapExceeded`] if the result would exceed five million
/// diagrams.
pub fn enumerate_odiagrams(n: usize, bound: u32) -> Result<Vec<ODiagram>, DiagramError> {
    let universe = cell_universe(bound, 1);
    check_enumeration_cap(universe.len() as u64, n)?;
    let mut out = Vec::new();
    let mut current: Vec<Cell> = Vec::with_capacity(n);
    subsets(&universe, n, 0, &mut current, &mut |cells| {
        out.push(ODiagram {
            cells: cells.to_vec(),
        });
    });
    Ok(out)
}

fn subsets(
    universe: &[Cell],
    remaining: usize,
    start: usize,
    current: &mut Vec<Cell>,
    visit: &mut impl FnMut(&[Cell]),
) {
    if remaining == 0 {
        visit(current);
        return;
    }
    if universe.len() - start < remaining {
        return;
    }
    for idx in start..universe.len() {
        current.push(universe[idx]);
        subsets(universe, remaining - 1, idx + 1, current, visit);
        current.pop();
    }
}

/// Counts `o`-diagrams with `n` cells by bidegree, for all bidegrees with
/// `Σa ≤ wa_max` and `Σb ≤ wb_max`, by a 0/1 knapsack over the odd cell
/// universe.
#[must_use]
pub fn count_odiagrams_by_bidegree(
    n: usize,
    wa_max: u32,
    wb_max: u32,
) -> BTreeMap<(u32, u32), u64> {
    let wa = wa_max as usize;
    let wb = wb_max as usize;
    let mut dp = vec![vec![vec![0u64; wb + 1]; wa + 1]; n + 1];
    dp[0][0][0] = 1;
    for cell in cell_universe(wa_max.max(wb_max), 1) {
        let (ca, cb) = (cell.a as usize, cell.b as usize);
        if ca > wa || cb > wb {
            continue;
        }
        // Each cell used at most once: descending k keeps this pass from
        // reusing it.
        for k in (1..=n).rev() {
            for i in (ca..=wa).rev() {
                for j in (cb..=wb).rev() {
                    let add = dp[k - 1][i - ca][j - cb];
                    if add > 0 {
                        dp[k][i][j] += add;
                    }
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for (i, row) in dp[n].iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            if count > 0 {
                out.insert((i as u32, j as u32), count);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_core::enumerate_bn;

    fn od(spec: &str) -> ODiagram {
        ODiagram::parse_two_line(spec).unwrap()
    }

    fn ed(spec: &str) -> EDiagram {
        EDiagram::parse_two_line(spec).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(
            ODiagram::new(vec![Cell::new(1, 1)]),
            Err(DiagramError::EvenWeightCell { a: 1, b: 1 })
        );
        assert_eq!(
            ODiagram::new(vec![Cell::new(0, 1), Cell::new(0, 1)]),
            Err(DiagramError::RepeatedCell { a: 0, b: 1 })
        );
        let d = ODiagram::new(vec![Cell::new(2, 1), Cell::new(0, 1)]).unwrap();
        assert_eq!(d.cells(), &[Cell::new(0, 1), Cell::new(2, 1)]);
    }

    /// The nine-cell compact `o`-diagram paired with the `e`-diagram
    /// running example.
    fn nine_cell_o() -> ODiagram {
        od("0 0 1 2 2 4 6 7 7\n1 3 6 9 11 5 5 8 12")
    }

    #[test]
    fn colabel_classifying_perm_nine_cell() {
        assert_eq!(
            nine_cell_o().colabel_classifying_perm(),
            SignedPerm::parse("-1 -2 5 -7 -8 -4 -3 6 9").unwrap()
        );
    }

    /// The eight compact `o`-diagrams for `B_2`.
    fn b2_compact_o_table() -> Vec<(&'static str, &'static str)> {
        vec![
            ("1 2", "1 1\n0 2"),
            ("-1 2", "0 1\n1 2"),
            ("1 -2", "1 2\n0 1"),
            ("-1 -2", "0 0\n1 3"),
            ("2 1", "1 3\n0 0"),
            ("-2 1", "0 1\n1 0"),
            ("2 -1", "1 2\n2 1"),
            ("-2 -1", "0 2\n1 1"),
        ]
    }

    #[test]
    fn compact_o_diagrams_of_b2() {
        for (w, expected) in b2_compact_o_table() {
            let beta = SignedPerm::parse(w).unwrap();
            let d = compact_o_of_perm(&beta);
            assert_eq!(d, od(expected), "D^s_{w}");
            assert_eq!(d.colabel_classifying_perm(), beta, "β of D^s_{w}");
            assert!(d.is_compact(), "D^s_{w} compact");
        }
    }

    #[test]
    fn psi_on_b2_and_b3() {
        // Worked n=2 case: D_21 = (1 3/3 1) has σ = (2,1), c = (3,1).
        let image = psi(&ed("1 3\n3 1")).unwrap();
        assert_eq!(image, od("1 3\n0 0"));
        for n in 1..=3 {
            for beta in enumerate_bn(n).unwrap() {
                let e = crate::ediagrams::compact_of_perm(&beta);
                assert_eq!(psi(&e).unwrap(), compact_o_of_perm(&beta), "β = {beta}");
            }
        }
    }

    #[test]
    fn psi_nine_cell() {
        let e = ed("0 0 1 2 2 4 6 7 7\n0 0 3 4 4 2 0 3 5");
        assert_eq!(psi(&e).unwrap(), nine_cell_o());
    }

    #[test]
    fn psi_rejects_non_compact() {
        assert_eq!(psi(&ed("0 4\n0 0")), Err(DiagramError::NotCompact));
    }

    #[test]
    fn compactify_small_example() {
        // (1 3 / 0 4) classifies as 12; its compactification is D^s_12.
        let d = od("1 3\n0 4");
        assert_eq!(
            d.colabel_classifying_perm(),
            SignedPerm::parse("1 2").unwrap()
        );
        assert_eq!(compactify_o(&d), od("1 1\n0 2"));
    }

    #[test]
    fn compactification_is_entrywise_minimal() {
        for d in enumerate_odiagrams(2, 5).unwrap() {
            let c = compactify_o(&d);
            for (orig, comp) in d.cells().iter().zip(c.cells()) {
                assert!(
                    comp.a <= orig.a && comp.b <= orig.b,
                    "compactify_o({d:?}) = {c:?} not entrywise below"
                );
            }
            // Idempotent.
            assert_eq!(compactify_o(&c), c);
        }
    }

    #[test]
    fn phi_o_round_trip_small() {
        for d in enumerate_odiagrams(2, 5).unwrap() {
            let r = phi_o(&d).unwrap();
            assert_eq!(phi_o_inverse(&r).unwrap(), d, "D = {d:?}");
            let (wa, wb) = d.weight();
            let (ca, cb) = r.compact.weight();
            assert_eq!(wa, ca + 2 * r.lambda.size());
            assert_eq!(wb, cb + 2 * r.mu.size());
        }
    }

    #[test]
    fn phi_o_inverse_respects_colabel_order() {
        // μ gains follow the colabel order: for D^s_21 = {(1,0),(3,0)} and
        // μ = (1), the colabel tail is (1,0), giving {(1,2),(3,0)} — which
        // still classifies as 21.
        let r = OPhiResult {
            compact: od("1 3\n0 0"),
            lambda: Partition::empty(),
            mu: Partition::new(vec![1]).unwrap(),
        };
        let d = phi_o_inverse(&r).unwrap();
        assert_eq!(d, od("1 3\n2 0"));
        assert_eq!(
            d.colabel_classifying_perm(),
            SignedPerm::parse("2 1").unwrap()
        );
        // λ gains follow the reading order: for D^s_12 = {(1,0),(1,2)} and
        // λ = (1), the reading tail is (1,2), giving {(1,0),(3,2)}.
        let r = OPhiResult {
            compact: od("1 1\n0 2"),
            lambda: Partition::new(vec![1]).unwrap(),
            mu: Partition::empty(),
        };
        let d = phi_o_inverse(&r).unwrap();
        assert_eq!(d, od("1 3\n0 2"));
        assert_eq!(
            d.colabel_classifying_perm(),
            SignedPerm::parse("1 2").unwrap()
        );
    }

    #[test]
    fn phi_o_of_compact_is_trivial() {
        let d = nine_cell_o();
        let r = phi_o(&d).unwrap();
        assert_eq!(r.compact, d);
        assert!(r.lambda.is_empty());
        assert!(r.mu.is_empty());
    }

    #[test]
    fn compact_o_diagrams_are_distinct() {
        for n in 1..=3 {
            let mut seen = std::collections::BTreeSet::new();
            for beta in enumerate_bn(n).unwrap() {
                assert!(seen.insert(compact_o_of_perm(&beta)));
            }
            assert_eq!(seen.len(), (1usize << n) * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_odiagrams(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate_odiagrams(2, 1).unwrap().len(), 1);
        // 8 odd cells with entries ≤ 3: C(8,2) = 28.
        assert_eq!(enumerate_odiagrams(2, 3).unwrap().len(), 28);
    }

    #[test]
    fn enumeration_and_counting_agree() {
        let mut by_weight: BTreeMap<(u32, u32), u64> = BTreeMap::new();
        for d in enumerate_odiagrams(2, 6).unwrap() {
            let w = d.weight();
            if w.0 <= 6 && w.1 <= 6 {
                *by_weight.entry(w).or_insert(0) += 1;
            }
        }
        assert_eq!(by_weight, count_odiagrams_by_bidegree(2, 6, 6));
    }

    #[test]
    fn two_line_and_json_round_trip() {
        let d = nine_cell_o();
        assert_eq!(ODiagram::parse_two_line(&d.to_string()).unwrap(), d);
        assert_eq!(ODiagram::from_json(&d.to_json()).unwrap(), d);
    }
}
