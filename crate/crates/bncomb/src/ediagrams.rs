//! `e`-diagrams: multisets of biexponent cells with even weight, the
//! combinatorial skeletons of diagonally invariant monomials.
//!
//! An `e`-diagram with `n` cells is a multiset `{(a_1,b_1), …, (a_n,b_n)}` of
//! pairs of nonnegative integers with every `a_i + b_i` even, kept sorted in
//! *reading order* (lexicographic by `(a, b)`). Key operations:
//!
//! - [`EDiagram::des_sch`]: descent set and schism set, the data behind the
//!   weakly increasing vector [`EDiagram::g_vector`].
//! - [`EDiagram::classifying_perm`]: the signed permutation labeling the
//!   diagram's class (columns ordered by `(b, a)`, signs from the parity of
//!   `a`).
//! - [`compact_of_perm`] / [`compactify`]: the unique compact diagram
//!   `(g(β), g̃(β))` in each class, reachable from any diagram by moves.
//! - [`try_move`] / [`available_moves`] / [`compactify_by_moves`]: the
//!   elementary weight-reducing moves (confluent, order-independent).
//! - [`big_move`]: subtracting 2 from all `a` (or `b`) entries of a reading
//!   tail; equal to a composition of elementary moves.
//! - [`phi`] / [`phi_inverse`]: the bijection between arbitrary diagrams and
//!   triples (compact diagram, partition `λ`, partition `μ`) with
//!   `|D| = |D̄| + (2|λ|, 2|μ|)`.
//! - [`enumerate_ediagrams`] / [`count_by_bidegree`]: exhaustive generation
//!   and fast DP counting by bidegree.

use crate::group_core::SignedPerm;
use crate::symfunc::Partition;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors for diagram construction and transformation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    /// An `e`-diagram cell must have even `a + b`.
    #[error("cell ({a},{b}) has odd weight; e-diagram cells need a+b even")]
    OddWeightCell {
        /// Cell column exponent.
        a: u32,
        /// Cell row exponent.
        b: u32,
    },
    /// An `o`-diagram cell must have odd `a + b`.
    #[error("cell ({a},{b}) has even weight; o-diagram cells need a+b odd")]
    EvenWeightCell {
        /// Cell column exponent.
        a: u32,
        /// Cell row exponent.
        b: u32,
    },
    /// `o`-diagrams require distinct cells.
    #[error("cell ({a},{b}) repeats; o-diagram cells must be distinct")]
    RepeatedCell {
        /// Cell column exponent.
        a: u32,
        /// Cell row exponent.
        b: u32,
    },
    /// A diagram with no cells was supplied.
    #[error("diagram must have at least one cell")]
    EmptyDiagram,
    /// A move needs an exponent of at least 2 at the chosen cell.
    #[error("cell #{index} has no room for the move (exponent below 2)")]
    ExponentTooSmall {
        /// 0-based reading-order index of the cell.
        index: usize,
    },
    /// A move is blocked by a cell strictly inside the guard interval.
    #[error("move at cell #{index} is blocked")]
    Blocked {
        /// 0-based reading-order index of the cell.
        index: usize,
    },
    /// A cell index outside the diagram.
    #[error("cell index {index} out of range for {n} cells")]
    IndexOutOfRange {
        /// Offending index.
        index: usize,
        /// Number of cells.
        n: usize,
    },
    /// Margin multisets failed to pair up when extracting a fiber partition.
    #[error("margin difference at value {value} cannot be paired")]
    PairingViolation {
        /// The margin value with a broken pair.
        value: u32,
    },
    /// A fiber partition part exceeded the cell count.
    #[error("part {part} exceeds the number of cells {n}")]
    PartTooLarge {
        /// Offending part.
        part: u32,
        /// Number of cells.
        n: usize,
    },
    /// An operation requiring a compact diagram received a non-compact one.
    #[error("diagram is not compact")]
    NotCompact,
    /// An entry would become negative.
    #[error("entry of cell #{index} would become negative")]
    NegativeEntry {
        /// 0-based reading-order index of the cell.
        index: usize,
    },
    /// Text input failed to parse.
    #[error("cannot parse diagram input: {0}")]
    Unparsable(String),
    /// Two-line input rows of unequal length.
    #[error("row length mismatch: top has {top} entries, bottom has {bottom}")]
    RowMismatch {
        /// Entries in the `a` row.
        top: usize,
        /// Entries in the `b` row.
        bottom: usize,
    },
    /// Enumeration would produce too many diagrams.
    #[error("enumeration of ~{estimate} diagrams exceeds cap {cap}")]
    CapExceeded {
        /// Estimated result count.
        estimate: u64,
        /// Cap.
        cap: u64,
    },
}

/// A biexponent cell `(a, b)`: exponents of `x^a y^b` for one variable pair.
///
/// The derived order is lexicographic by `(a, b)` — the *reading order*.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    /// `x`-exponent (top row in two-line notation).
    pub a: u32,
    /// `y`-exponent (bottom row in two-line notation).
    pub b: u32,
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Cell {
    /// Builds a cell.
    #[must_use]
    pub fn new(a: u32, b: u32) -> Self {
        Self { a, b }
    }

    /// The transposed cell `(b, a)`.
    #[must_use]
    pub fn swap(&self) -> Self {
        Self {
            a: self.b,
            b: self.a,
        }
    }
}

/// An `e`-diagram: a sorted multiset of `n ≥ 1` even-weight cells.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EDiagram {
    cells: Vec<Cell>,
}

impl fmt::Debug for EDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EDiagram{:?}", self.cells)
    }
}

impl fmt::Display for EDiagram {
    /// Two-line notation: the `a` row over the `b` row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top: Vec<String> = self.cells.iter().map(|c| c.a.to_string()).collect();
        let bottom: Vec<String> = self.cells.iter().map(|c| c.b.to_string()).collect();
        write!(f, "{}\n{}", top.join(" "), bottom.join(" "))
    }
}

impl EDiagram {
    /// Builds an `e`-diagram, sorting cells into reading order.
    ///
    /// # Errors
    ///
    /// [`DiagramError::EmptyDiagram`] or [`DiagramError::OddWeightCell`].
    pub fn new(mut cells: Vec<Cell>) -> Result<Self, DiagramError> {
        if cells.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        for c in &cells {
            if (c.a + c.b) % 2 != 0 {
                return Err(DiagramError::OddWeightCell { a: c.a, b: c.b });
            }
        }
        cells.sort_unstable();
        Ok(Self { cells })
    }

    /// Builds from separate exponent rows.
    ///
    /// # Errors
    ///
    /// [`DiagramError::RowMismatch`] plus the errors of [`EDiagram::new`].
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

    /// The dual diagram: rows swapped, cells re-sorted.
    #[must_use]
    pub fn dual(&self) -> Self {
        let mut cells: Vec<Cell> = self.cells.iter().map(Cell::swap).collect();
        cells.sort_unstable();
        Self { cells }
    }

    /// Descent and schism sets.
    ///
    /// `Des ⊆ {1, …, n−1}`: positions `k` with `b_k > b_{k+1}` and
    /// `a_k ≡ a_{k+1} (mod 2)`. `Sch ⊆ {0, …, n−1}`: positions `k ≥ 1` with
    /// `a_k ≢ a_{k+1} (mod 2)`, plus `0` when `a_1` is odd (a phantom even
    /// column precedes the diagram).
    #[must_use]
    pub fn des_sch(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n();
        let mut des = Vec::new();
        let mut sch = Vec::new();
        if self.cells[0].a % 2 == 1 {
            sch.push(0);
        }
        for k in 1..n {
            let prev = self.cells[k - 1];
            let next = self.cells[k];
            if prev.a % 2 == next.a % 2 {
                if prev.b > next.b {
                    des.push(k);
                }
            } else {
                sch.push(k);
            }
        }
        (des, sch)
    }

    /// The weakly increasing vector `g_i(D) = 2·#{k ∈ Des : k < i} +
    /// #{k ∈ Sch : k < i}` for `i = 1..n`.
    #[must_use]
    pub fn g_vector(&self) -> Vec<u32> {
        let n = self.n();
        let (des, sch) = self.des_sch();
        (1..=n)
            .map(|i| {
                let d = des.iter().filter(|&&k| k < i).count() as u32;
                let s = sch.iter().filter(|&&k| k < i).count() as u32;
                2 * d + s
            })
            .collect()
    }

    /// The classifying signed permutation `β(D)`.
    ///
    /// Columns are labeled `1..n` in the order `(b, a)` lexicographic (ties
    /// by reading position); the window entry at reading position `i` is the
    /// label, negated when `a_i` is even.
    #[must_use]
    pub fn classifying_perm(&self) -> SignedPerm {
        let n = self.n();
        let sigma = self.label_positions();
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
        SignedPerm::from_window(window).expect("labels form a permutation")
    }

    /// `σ(i)` for 0-based reading index `i`: 1-based position of cell `i` in
    /// the labeling order (`(b, a)` lexicographic, ties by reading position).
    fn label_positions(&self) -> Vec<usize> {
        let n = self.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (self.cells[i].b, self.cells[i].a, i));
        let mut sigma = vec![0usize; n];
        for (label0, &i) in order.iter().enumerate() {
            sigma[i] = label0 + 1;
        }
        sigma
    }

    /// Whether this diagram is the compact representative of its class.
    #[must_use]
    pub fn is_compact(&self) -> bool {
        *self == compact_of_perm(&self.classifying_perm())
    }

    /// Parses two-line notation: two whitespace-separated rows of equal
    /// length (`a` row above `b` row). Blank lines are ignored.
    ///
    /// # Errors
    ///
    /// [`DiagramError::Unparsable`], [`DiagramError::RowMismatch`], plus the
    /// errors of [`EDiagram::new`].
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
    /// [`DiagramError::Unparsable`] plus the errors of [`EDiagram::new`].
    pub fn from_json(value: &serde_json::Value) -> Result<Self, DiagramError> {
        Self::new(cells_from_json(value)?)
    }
}

/// Parses two whitespace-separated numeric rows.
pub(crate) fn parse_rows(input: &str) -> Result<(Vec<u32>, Vec<u32>), DiagramError> {
    let rows: Vec<&str> = input.lines().filter(|l| !l.trim().is_empty()).collect();
    if rows.len() != 2 {
        return Err(DiagramError::Unparsable(format!(
            "expected 2 rows, found {}",
            rows.len()
        )));
    }
    let parse_row = |row: &str| -> Result<Vec<u32>, DiagramError> {
        row.split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| DiagramError::Unparsable(tok.to_string()))
            })
            .collect()
    };
    Ok((parse_row(rows[0])?, parse_row(rows[1])?))
}

pub(crate) fn cells_to_json(cells: &[Cell]) -> serde_json::Value {
    let arr: Vec<serde_json::Value> = cells
        .iter()
        .map(|c| serde_json::json!([c.a, c.b]))
        .collect();
    serde_json::json!({ "cells": arr })
}

pub(crate) fn cells_from_json(value: &serde_json::Value) -> Result<Vec<Cell>, DiagramError> {
    let arr = value
        .get("cells")
        .and_then(|v| v.as_array())
        .ok_or_else(|| DiagramError::Unparsable("missing \"cells\" array".into()))?;
    arr.iter()
        .map(|pair| {
            let coords = pair
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| DiagramError::Unparsable(format!("bad cell {pair}")))?;
            let get = |i: usize| -> Result<u32, DiagramError> {
                coords[i]
                    .as_u64()
                    .and_then(|v| u32::try_from(v).ok())
                    .ok_or_else(|| {
                        DiagramError::Unparsable(format!("bad coordinate {}", coords[i]))
                    })
            };
            Ok(Cell::new(get(0)?, get(1)?))
        })
        .collect()
}

/// The compact diagram of a class: cells `(g_i(β), g̃_i(β))` for `i = 1..n`.
#[must_use]
pub fn compact_of_perm(beta: &SignedPerm) -> EDiagram {
    let lv = beta.local_vectors();
    let cells: Vec<Cell> =
        lv.g.iter()
            .zip(&lv.g_tilde)
            .map(|(&a, &b)| Cell::new(a, b))
            .collect();
    EDiagram::new(cells).expect("g_i + g̃_i is always even")
}

/// Compactification by the closed formula: the compact representative
/// `(g(D), g̃(D))` of the class of `D`, where `g̃_i(D) = g_{σ(i)}(D*)`.
///
/// Agrees with exhaustively applying elementary moves in any order
/// ([`compactify_by_moves`]) and with [`compact_of_perm`] of
/// [`EDiagram::classifying_perm`].
#[must_use]
pub fn compactify(d: &EDiagram) -> EDiagram {
    let g = d.g_vector();
    let g_dual = d.dual().g_vector();
    let sigma = d.label_positions();
    let cells: Vec<Cell> = (0..d.n())
        .map(|i| Cell::new(g[i], g_dual[sigma[i] - 1]))
        .collect();
    EDiagram::new(cells).expect("compactification preserves parity")
}

/// Direction of an elementary move.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveDir {
    /// Subtract 2 from the `a`-entry of a cell.
    Left,
    /// Subtract 2 from the `b`-entry of a cell.
    Down,
}

/// Whether any cell of `cells` lies in the guard interval of a left move of
/// `c = (a, b)`: strictly after the landing cell `(a−2, b)` and up to the
/// down-moved cell `(a, b−2)` inclusive, in lexicographic reading order.
///
/// A cell there would swap reading or labeling order with the moved cell,
/// changing the classifying permutation. Because diagram cells share the
/// weight parity of `c`, the interval equals the cells strictly between
/// `(a−2, b)` and `(a, b)`, which is the comparison used here (signed
/// coordinates keep out-of-grid bounds correct).
fn vert_blocked(cells: &[Cell], c: Cell) -> bool {
    let lo = (i64::from(c.a) - 2, i64::from(c.b));
    let hi = (i64::from(c.a), i64::from(c.b));
    cells.iter().any(|&p| {
        let pp = (i64::from(p.a), i64::from(p.b));
        lo < pp && pp < hi
    })
}

fn move_allowed(d: &EDiagram, index: usize, dir: MoveDir) -> Result<(), DiagramError> {
    let c = d.cells[index];
    match dir {
        MoveDir::Left => {
            if c.a < 2 {
                return Err(DiagramError::ExponentTooSmall { index });
            }
            if vert_blocked(&d.cells, c) {
                return Err(DiagramError::Blocked { index });
            }
        }
        MoveDir::Down => {
            if c.b < 2 {
                return Err(DiagramError::ExponentTooSmall { index });
            }
            // The horizontal guard is the vertical guard of the dual.
            let dual_cells: Vec<Cell> = d.cells.iter().map(Cell::swap).collect();
            if vert_blocked(&dual_cells, c.swap()) {
                return Err(DiagramError::Blocked { index });
            }
        }
    }
    Ok(())
}

/// Applies the elementary move at the given reading-order cell index.
///
/// A `Left` move replaces `(a, b)` by `(a−2, b)` and needs the guard
/// interval from `(a−2, b)` exclusive to `(a, b−2)` inclusive free of
/// cells; a `Down` move is the dual statement.
///
/// # Errors
///
/// [`DiagramError::IndexOutOfRange`], [`DiagramError::ExponentTooSmall`] or
/// [`DiagramError::Blocked`].
pub fn try_move(d: &EDiagram, index: usize, dir: MoveDir) -> Result<EDiagram, DiagramError> {
    if index >= d.n() {
        return Err(DiagramError::IndexOutOfRange { index, n: d.n() });
    }
    move_allowed(d, index, dir)?;
    let mut cells = d.cells.clone();
    match dir {
        MoveDir::Left => cells[index].a -= 2,
        MoveDir::Down => cells[index].b -= 2,
    }
    cells.sort_unstable();
    Ok(EDiagram { cells })
}

/// All applicable elementary moves, as `(index, direction)` pairs in
/// deterministic order (by index, `Left` before `Down`).
#[must_use]
pub fn available_moves(d: &EDiagram) -> Vec<(usize, MoveDir)> {
    let mut out = Vec::new();
    for index in 0..d.n() {
        for dir in [MoveDir::Left, MoveDir::Down] {
            if move_allowed(d, index, dir).is_ok() {
                out.push((index, dir));
            }
        }
    }
    out
}

/// Reduces `d` by elementary moves until none applies, letting `chooser`
/// pick among the available moves at each step (it receives the list from
/// [`available_moves`] and returns an index into it).
///
/// The result is independent of the choices and equals [`compactify`]`(d)`.
///
/// # Panics
///
/// Panics if `chooser` returns an out-of-range index.
pub fn compactify_by_moves(
    d: &EDiagram,
    mut chooser: impl FnMut(&[(usize, MoveDir)]) -> usize,
) -> EDiagram {
    let mut current = d.clone();
    loop {
        let moves = available_moves(&current);
        if moves.is_empty() {
            return current;
        }
        let pick = chooser(&moves);
        let (index, dir) = moves[pick];
        current = try_move(&current, index, dir).expect("listed move applies");
    }
}

/// The big move: subtract 2 from the `a`-entries (for `Left`) of all cells
/// from reading index `start` to the end, then re-sort; `Down` is the same
/// on the dual. Equals the composition of elementary moves applied to the
/// affected cells smallest-first.
///
/// # Errors
///
/// [`DiagramError::IndexOutOfRange`] or [`DiagramError::NegativeEntry`].
pub fn big_move(d: &EDiagram, start: usize, dir: MoveDir) -> Result<EDiagram, DiagramError> {
    if start >= d.n() {
        return Err(DiagramError::IndexOutOfRange {
            index: start,
            n: d.n(),
        });
    }
    match dir {
        MoveDir::Left => {
            let mut cells = d.cells.clone();
            for (index, c) in cells.iter_mut().enumerate().skip(start) {
                if c.a < 2 {
                    return Err(DiagramError::NegativeEntry { index });
                }
                c.a -= 2;
            }
            cells.sort_unstable();
            Ok(EDiagram { cells })
        }
        MoveDir::Down => {
            let moved = big_move(&d.dual(), start, MoveDir::Left)?;
            Ok(moved.dual())
        }
    }
}

/// The image of a diagram under the fiber bijection: its compact
/// representative plus the two partitions recording how far the diagram
/// sits above it, `|D| = |D̄| + (2|λ|, 2|μ|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    /// The compact representative of the class of the input.
    pub compact: EDiagram,
    /// Partition governing the `a`-row surplus; parts `≤ n`.
    pub lambda: Partition,
    /// Partition governing the `b`-row surplus; parts `≤ n`.
    pub mu: Partition,
}

/// Column margins as a value multiset: for each `i ≥ 0`, the count
/// `#{cells with a > i}` when positive.
pub(crate) fn margin_values(cells: &[Cell], column: impl Fn(&Cell) -> u32) -> Vec<u32> {
    let max = cells.iter().map(&column).max().unwrap_or(0);
    (0..max)
        .map(|i| cells.iter().filter(|c| column(c) > i).count() as u32)
        .filter(|&count| count > 0)
        .collect()
}

/// Multiset-subtracts compact margins from diagram margins and halves the
/// result into a partition: the difference must consist of equal pairs; the
/// partition keeps one value from each pair, sorted descending.
pub(crate) fn margin_partition(
    diagram: Vec<u32>,
    compact: Vec<u32>,
) -> Result<Partition, DiagramError> {
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    for v in diagram {
        *counts.entry(v).or_insert(0) += 1;
    }
    for v in compact {
        *counts.entry(v).or_insert(0) -= 1;
    }
    let mut diff: Vec<u32> = Vec::new();
    for (&value, &mult) in &counts {
        if mult < 0 {
            return Err(DiagramError::PairingViolation { value });
        }
        for _ in 0..mult {
            diff.push(value);
        }
    }
    diff.sort_unstable_by(|x, y| y.cmp(x));
    if !diff.len().is_multiple_of(2) {
        return Err(DiagramError::PairingViolation {
            value: *diff.last().unwrap(),
        });
    }
    let mut parts = Vec::with_capacity(diff.len() / 2);
    for pair in diff.chunks_exact(2) {
        if pair[0] != pair[1] {
            return Err(DiagramError::PairingViolation { value: pair[1] });
        }
        parts.push(pair[0]);
    }
    Ok(Partition::new(parts).expect("descending by construction"))
}

/// Decomposes a diagram as (compact representative, `λ`, `μ`) via the
/// margin construction: `λ` pairs up the difference of column margins
/// (`#{a > i}` counts), `μ` the row margins, between `D` and its
/// compactification.
///
/// # Errors
///
/// [`DiagramError::PairingViolation`] (cannot occur for genuine
/// `e`-diagrams; defensive).
pub fn phi(d: &EDiagram) -> Result<PhiResult, DiagramError> {
    let compact = compactify(d);
    let lambda = margin_partition(
        margin_values(&d.cells, |c| c.a),
        margin_values(&compact.cells, |c| c.a),
    )?;
    let mu = margin_partition(
        margin_values(&d.cells, |c| c.b),
        margin_values(&compact.cells, |c| c.b),
    )?;
    Ok(PhiResult {
        compact,
        lambda,
        mu,
    })
}

/// Adds `2·#{parts ≥ n−i}` to the `a`-entry of the cell at reading index
/// `i`, for every `i` — the batched form of applying one inverse big move
/// per part, largest parts affecting the longest tails.
pub(crate) fn apply_tail_gains(cells: &mut [Cell], parts: &[u32]) {
    let n = cells.len();
    for (i, cell) in cells.iter_mut().enumerate() {
        let need = (n - i) as u32;
        let gain = parts.iter().filter(|&&p| p >= need).count() as u32;
        cell.a += 2 * gain;
    }
}

/// Rebuilds the unique diagram mapping to the given triple under [`phi`]:
/// the `λ` gains are applied to the `a`-row in reading order, then the `μ`
/// gains to the `b`-row in dual reading order.
///
/// # Errors
///
/// [`DiagramError::NotCompact`] if the compact component is not compact, or
/// [`DiagramError::PartTooLarge`] if a part exceeds the cell count.
pub fn phi_inverse(r: &PhiResult) -> Result<EDiagram, DiagramError> {
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
    let mut dual: Vec<Cell> = cells.iter().map(Cell::swap).collect();
    dual.sort_unstable();
    apply_tail_gains(&mut dual, r.mu.parts());
    let mut cells: Vec<Cell> = dual.iter().map(Cell::swap).collect();
    cells.sort_unstable();
    Ok(EDiagram { cells })
}

/// All `e`-diagrams with `n` cells and every entry `≤ bound`, in ascending
/// lexicographic order of their cell sequences.
///
/// # Errors
///
/// [`DiagramError::CapExceeded`] if the result would exceed five million
/// diagrams.
pub fn enumerate_ediagrams(n: usize, bound: u32) -> Result<Vec<EDiagram>, DiagramError> {
    let universe: Vec<Cell> = cell_universe(bound, 0);
    check_enumeration_cap(universe.len() as u64, n)?;
    let mut out = Vec::new();
    let mut current: Vec<Cell> = Vec::with_capacity(n);
    multisets(&universe, n, 0, &mut current, &mut |cells| {
        out.push(EDiagram {
            cells: cells.to_vec(),
        });
    });
    Ok(out)
}

/// Cells with both entries `≤ bound` and `a + b ≡ parity (mod 2)`, sorted.
pub(crate) fn cell_universe(bound: u32, parity: u32) -> Vec<Cell> {
    let mut cells = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            if (a + b) % 2 == parity {
                cells.push(Cell::new(a, b));
            }
        }
    }
    cells
}

pub(crate) fn check_enumeration_cap(universe: u64, n: usize) -> Result<(), DiagramError> {
    const CAP: u64 = 5_000_000;
    // Multisets of size n from a universe of size u: C(u+n−1, n).
    let mut estimate = 1u64;
    for i in 0..n as u64 {
        estimate = estimate.saturating_mul(universe + i) / (i + 1);
        if estimate > CAP {
            return Err(DiagramError::CapExceeded { estimate, cap: CAP });
        }
    }
    Ok(())
}

pub(crate) fn multisets(
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
    for idx in start..universe.len() {
        current.push(universe[idx]);
        multisets(universe, remaining - 1, idx, current, visit);
        current.pop();
    }
}

/// Counts `e`-diagrams with `n` cells by bidegree, for all bidegrees with
/// `Σa ≤ wa_max` and `Σb ≤ wb_max`, by a knapsack-style dynamic program
/// over the cell universe.
#[must_use]
pub fn count_by_bidegree(n: usize, wa_max: u32, wb_max: u32) -> BTreeMap<(u32, u32), u64> {
    let wa = wa_max as usize;
    let wb = wb_max as usize;
    // dp[k][i][j]: multisets of k cells so far with weight (i, j).
    let mut dp = vec![vec![vec![0u64; wb + 1]; wa + 1]; n + 1];
    dp[0][0][0] = 1;
    for cell in cell_universe(wa_max.max(wb_max), 0) {
        let (ca, cb) = (cell.a as usize, cell.b as usize);
        if ca > wa || cb > wb {
            continue;
        }
        // Unbounded copies of this cell, capped by the running cell count:
        // ascending k lets a cell be reused within its own pass.
        for k in 1..=n {
            for i in ca..=wa {
                for j in cb..=wb {
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

/// The number of `e`-diagrams with `n` cells and exact bidegree
/// `(wa, wb)` — the step bound for straightening recursions.
#[must_use]
pub fn count_with_weight(n: usize, wa: u32, wb: u32) -> u64 {
    count_by_bidegree(n, wa, wb)
        .get(&(wa, wb))
        .copied()
        .unwrap_or(0)
}
