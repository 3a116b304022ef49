//! The zigzag map ζ from permutation tableaux of type B to signed
//! permutations, with full walk traces and a bounded inverse search.
//!
//! A walk enters a row from the left heading east, or a column from the top
//! heading south, and changes direction at **every** box holding a 1 (taking
//! the 1 along south, then east, then south, …). It leaves the tableau either
//! east through the right edge of a (necessarily positive) row or south
//! through the bottom edge of a column; the exit label is the value the walk
//! reports.
//!
//! For a valid tableau `T` of length `n`, the image `ζ(T) = σ` is read off
//! one position at a time:
//!
//! * `i ∉ C`: walk from row `i`; `σ(i)` is the exit label.
//! * `i ∈ C`, diagonal of column `i` is 0: walk from column `i`; `σ(i)` is
//!   the exit label.
//! * `i ∈ C`, diagonal of column `i` is 1: walk from row `-i`; `σ(i)` is the
//!   negated exit label.
//!
//! ζ is a bijection onto all of `S_n^B`; [`zeta_inverse`] recovers the unique
//! preimage by a pruned search (the column set, the diagonals, and the empty
//! positive rows of the preimage are forced by `σ`, leaving little freedom).

use std::fmt;

use crate::signed::SignedPermutation;
use crate::tableau::PermutationTableauB;
use crate::{Error, Result};

/// Default bound for [`zeta_inverse`]; searches stay well under a second up
/// to length 8.
pub const DEFAULT_INVERSE_BOUND: usize = 8;

/// Where a zigzag walk enters the tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZigzagStart {
    /// Enter the row with this label from its left edge, heading east.
    FromRow(i32),
    /// Enter the column with this label from the top, heading south.
    FromColumn(usize),
}

/// Which edge a walk leaves through, and the label there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exit {
    /// Through the right edge of the (positive) row with this label.
    East { row: usize },
    /// Through the bottom edge of the column with this label.
    South { col: usize },
}

impl Exit {
    /// The row or column label at the exit; always positive.
    pub fn label(self) -> usize {
        match self {
            Exit::East { row } => row,
            Exit::South { col } => col,
        }
    }
}

/// The line a straight stretch of a walk runs along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Line {
    /// An eastward stretch inside the row with this label.
    Row(i32),
    /// A southward stretch inside the column with this label.
    Column(usize),
}

/// One maximal straight stretch of a zigzag walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceSegment {
    /// The row or column the stretch runs along.
    pub along: Line,
    /// The boxes visited, in order, as `(row label, column label)`.
    pub boxes: Vec<(i32, usize)>,
    /// `true` when the stretch ends by turning (its last box holds a 1);
    /// `false` when the walk runs off the tableau instead.
    pub turns: bool,
}

/// A complete zigzag walk: where it started, every box it visited, and
/// where it left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZigzagTrace {
    start: ZigzagStart,
    segments: Vec<TraceSegment>,
    exit: Exit,
}

impl ZigzagTrace {
    /// Where the walk entered.
    pub fn start(&self) -> ZigzagStart {
        self.start
    }

    /// The maximal straight stretches, in order. Empty when the walk exits
    /// immediately (a row without a single 1).
    pub fn segments(&self) -> &[TraceSegment] {
        &self.segments
    }

    /// Every box visited, in order.
    pub fn boxes(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.segments.iter().flat_map(|s| s.boxes.iter().copied())
    }

    /// Where the walk left.
    pub fn exit(&self) -> Exit {
        self.exit
    }
}

impl fmt::Display for ZigzagTrace {
    /// One line per stretch (`row -5: col8→col6 [turn]`), then the exit
    /// (`exit east row 2`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for seg in &self.segments {
            let first = seg.boxes.first().expect("segments are non-empty");
            let last = seg.boxes.last().expect("segments are non-empty");
            match seg.along {
                Line::Row(label) => {
                    write!(f, "row {label}: col{}→col{}", first.1, last.1)?;
                }
                Line::Column(label) => {
                    write!(f, "col {label}: row{}→row{}", first.0, last.0)?;
                }
            }
            if seg.turns {
                f.write_str(" [turn]")?;
            }
            writeln!(f)?;
        }
        match self.exit {
            Exit::East { row } => writeln!(f, "exit east row {row}"),
            Exit::South { col } => writeln!(f, "exit south col {col}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    East,
    South,
}

impl Dir {
    fn flip(self) -> Dir {
        match self {
            Dir::East => Dir::South,
            Dir::South => Dir::East,
        }
    }
}

/// Runs a raw walk over bit rows. `(r, q)` starts at the first box the walk
/// attempts to enter; rows before `r` are never touched. Returns the
/// direction and position after running off the boxes.
fn raw_exit(rows: &[u64], lens: &[usize], mut r: usize, mut q: usize, mut dir: Dir) -> (Dir, usize, usize) {
    let nrows = lens.len();
    loop {
        if r >= nrows || q >= lens[r] {
            return (dir, r, q);
        }
        if rows[r] >> q & 1 == 1 {
            dir = dir.flip();
        }
        match dir {
            Dir::East => q += 1,
            Dir::South => r += 1,
        }
    }
}

/// Walks the zigzag path from `start` and records the full trace.
///
/// # Panics
///
/// Panics when `start` does not name a row or column of the tableau, and
/// when a walk exits east out of a negative row — on a valid tableau the
/// diagonal condition rules that out, so hitting it means the input violates
/// condition 3.
pub fn zigzag_path(t: &PermutationTableauB, start: ZigzagStart) -> ZigzagTrace {
    let d = t.diagram();
    let nrows = d.row_count();
    let lens = d.row_lengths();

    let (mut r, mut q, mut dir) = match start {
        ZigzagStart::FromRow(label) => {
            let r = d
                .row_index(label)
                .unwrap_or_else(|| panic!("no row labelled {label}"));
            (r, 0, Dir::East)
        }
        ZigzagStart::FromColumn(col) => {
            let q = d
                .column_index(col)
                .unwrap_or_else(|| panic!("no column labelled {col}"));
            // The topmost box of column `col` is its diagonal, on row index q.
            (q, q, Dir::South)
        }
    };

    let mut segments = Vec::new();
    let mut current: Vec<(i32, usize)> = Vec::new();
    // `(r, q)` is the next box the walk attempts to enter.
    let exit = loop {
        if r >= nrows || q >= lens[r] {
            break match dir {
                Dir::East => {
                    let label = d.row_label(r);
                    assert!(
                        label > 0,
                        "zigzag walk exited east from negative row {label}; \
                         the filling violates the diagonal condition"
                    );
                    Exit::East { row: label as usize }
                }
                Dir::South => Exit::South { col: d.column_label(q) },
            };
        }
        current.push((d.row_label(r), d.column_label(q)));
        if t.row_bits(r) >> q & 1 == 1 {
            // A 1: the walk turns here, closing the current stretch.
            let along = match dir {
                Dir::East => Line::Row(d.row_label(r)),
                Dir::South => Line::Column(d.column_label(q)),
            };
            segments.push(TraceSegment { along, boxes: std::mem::take(&mut current), turns: true });
            dir = dir.flip();
        }
        match dir {
            Dir::East => q += 1,
            Dir::South => r += 1,
        }
    };
    if !current.is_empty() {
        let along = match dir {
            Dir::East => Line::Row(d.row_label(r)),
            Dir::South => Line::Column(d.column_label(q)),
        };
        segments.push(TraceSegment { along, boxes: current, turns: false });
    }

    #[cfg(debug_assertions)]
    {
        let mut seen = std::collections::HashSet::new();
        for b in segments.iter().flat_map(|s| s.boxes.iter()) {
            assert!(seen.insert(*b), "zigzag walk visited box {b:?} twice");
        }
    }

    ZigzagTrace { start, segments, exit }
}

/// The zigzag image `ζ(T)`.
///
/// Requires a valid tableau; on an invalid filling the walk can violate its
/// own invariants and panic. Callers handling untrusted input should run
/// [`PermutationTableauB::validate`] first.
pub fn zeta(t: &PermutationTableauB) -> SignedPermutation {
    zeta_with_traces(t).0
}

/// The zigzag image together with the trace used for each window position
/// (the trace at index `i - 1` determines `σ(i)`).
pub fn zeta_with_traces(t: &PermutationTableauB) -> (SignedPermutation, Vec<ZigzagTrace>) {
    let d = t.diagram();
    let n = d.n();
    let mut window = vec![0i32; n];
    let mut traces = Vec::with_capacity(n);
    for i in 1..=n {
        let (start, negate) = match t.diagonal(i) {
            None => (ZigzagStart::FromRow(i as i32), false),
            Some(false) => (ZigzagStart::FromColumn(i), false),
            Some(true) => (ZigzagStart::FromRow(-(i as i32)), true),
        };
        let trace = zigzag_path(t, start);
        let value = trace.exit().label() as i32;
        window[i - 1] = if negate { -value } else { value };
        traces.push(trace);
    }
    let sigma = SignedPermutation::from_window(window)
        .expect("zigzag exit labels of a valid tableau form a signed permutation");
    (sigma, traces)
}

/// The unique tableau `T` with `ζ(T) = σ`, searched with the default bound
/// of [`DEFAULT_INVERSE_BOUND`].
pub fn zeta_inverse(sigma: &SignedPermutation) -> Result<PermutationTableauB> {
    zeta_inverse_bounded(sigma, DEFAULT_INVERSE_BOUND)
}

/// [`zeta_inverse`] with an explicit length bound.
///
/// The search fixes everything `σ` forces — the column set
/// `C = {i : σ(i) < i}`, each diagonal (1 exactly when `σ(i) < 0`), all-zero
/// rows at fixed points — and backtracks over the remaining bits row by row
/// from the bottom, pruning against the tableau conditions and against the
/// exit label each placed row must produce.
pub fn zeta_inverse_bounded(sigma: &SignedPermutation, max_n: usize) -> Result<PermutationTableauB> {
    let n = sigma.n();
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    let columns: Vec<usize> = (1..=n).filter(|&i| sigma.image(i) < i as i32).collect();
    let diagram = crate::tableau::ShiftedDiagramB::new(n, columns)?;

    let nrows = diagram.row_count();
    let c = diagram.column_count();
    let lens = diagram.row_lengths();
    let mut search = InverseSearch {
        sigma,
        diagram: &diagram,
        lens: &lens,
        c,
        rows: vec![0u64; nrows],
    };
    if !search.place(nrows as isize - 1, 0, 0) {
        return Err(Error::Internal(format!(
            "no tableau maps to {sigma} under the zigzag walk"
        )));
    }
    let rows = search.rows;
    let t = PermutationTableauB::from_bits(diagram, rows);
    debug_assert!(t.is_valid());
    if &zeta(&t) != sigma {
        return Err(Error::Internal(format!(
            "inverse search produced a tableau mapping to {}, expected {sigma}",
            zeta(&t)
        )));
    }
    Ok(t)
}

struct InverseSearch<'a> {
    sigma: &'a SignedPermutation,
    diagram: &'a crate::tableau::ShiftedDiagramB,
    lens: &'a [usize],
    c: usize,
    rows: Vec<u64>,
}

impl InverseSearch<'_> {
    /// Fills rows bottom-up starting at index `idx`. `forbidden` marks
    /// column indices where any further 1 would complete a condition-2
    /// violation below; `col_has_one` tracks columns already holding a 1.
    fn place(&mut self, idx: isize, forbidden: u64, col_has_one: u64) -> bool {
        if idx < 0 {
            return true;
        }
        let r = idx as usize;
        let len = self.lens[r];
        let label = self.diagram.row_label(r);

        // Work out the candidate bit patterns for this row.
        if r < self.c {
            // Negative row of column index r; the diagonal sits at bit r and
            // is forced by the sign of σ at the column label.
            let j = (-label) as usize;
            let image = self.sigma.image(j);
            if image >= 0 {
                // Diagonal 0 forces the whole row to 0 (condition 3); the
                // walk for position j then starts at the top of column j.
                self.rows[r] = 0;
                if !self.column_closed_ok(r, col_has_one) {
                    return false;
                }
                if self.exit_from(r, r, Dir::South) != image as usize {
                    return false;
                }
                return self.place(idx - 1, forbidden, col_has_one);
            }
            // Diagonal 1; the sub-diagonal bits are free.
            let target = (-image) as usize;
            let diag = 1u64 << r;
            for low in 0..(1u64 << r) {
                let pattern = diag | low;
                if pattern & forbidden != 0 {
                    continue;
                }
                self.rows[r] = pattern;
                if !self.column_closed_ok(r, col_has_one | pattern) {
                    continue;
                }
                if self.exit_from(r, 0, Dir::East) != target {
                    continue;
                }
                let forbidden = forbidden | zero_after_one(pattern, len);
                if self.place(idx - 1, forbidden, col_has_one | pattern) {
                    return true;
                }
            }
            self.rows[r] = 0;
            false
        } else {
            // Positive row labelled `label`; σ(label) ≥ label here since
            // `label` is not a column.
            let i = label as usize;
            let image = self.sigma.image(i);
            if image == i as i32 {
                // Fixed point: the row must contain no 1.
                self.rows[r] = 0;
                return self.place(idx - 1, forbidden, col_has_one);
            }
            // Not fixed: the row must contain a 1 somewhere.
            for pattern in 1..(1u64 << len) {
                if pattern & forbidden != 0 {
                    continue;
                }
                self.rows[r] = pattern;
                if self.exit_from(r, 0, Dir::East) != image as usize {
                    continue;
                }
                let forbidden = forbidden | zero_after_one(pattern, len);
                if self.place(idx - 1, forbidden, col_has_one | pattern) {
                    return true;
                }
            }
            self.rows[r] = 0;
            false
        }
    }

    /// When row `r` is the diagonal row of column index `r`, the column is
    /// fully placed; condition 1 demands a 1 somewhere in it.
    fn column_closed_ok(&self, r: usize, col_has_one: u64) -> bool {
        col_has_one >> r & 1 == 1 || self.rows[r] >> r & 1 == 1
    }

    /// Exit label of the raw walk starting just before `(r, q)`.
    fn exit_from(&self, r: usize, q: usize, dir: Dir) -> usize {
        let (dir, r, q) = raw_exit(&self.rows, self.lens, r, q, dir);
        match dir {
            Dir::East => {
                let label = self.diagram.row_label(r);
                debug_assert!(label > 0, "partial fillings keep condition 3 by construction");
                label as usize
            }
            Dir::South => self.diagram.column_label(q),
        }
    }
}

/// Column indices of zero boxes lying right of a 1 in the same row: any 1
/// placed above those boxes later would violate condition 2.
fn zero_after_one(pattern: u64, len: usize) -> u64 {
    let mut mask = 0u64;
    let mut one_left = false;
    for q in 0..len {
        let filled = pattern >> q & 1 == 1;
        if !filled && one_left {
            mask |= 1 << q;
        }
        one_left |= filled;
    }
    mask
}
