//! Shifted diagrams of type B and their 0/1 fillings.
//!
//! A diagram is determined by a length `n` and a column set `C ⊆ [n]`.
//! Writing `r = n - |C|`, the diagram has `|C|` *negative* rows labelled
//! `-j` for `j ∈ C` (top to bottom by decreasing `j`) followed by `r`
//! *positive* rows labelled by `[n] \ C` in increasing order. Columns are
//! labelled by `C` and appear left to right by decreasing label. Row `i > 0`
//! has a box in column `j` exactly when `j > i`; row `-j'` has a box in
//! column `j` exactly when `j ≥ j'`. The box `(-j, j)` is called the
//! *diagonal* of column `j`; it is simultaneously the topmost box of column
//! `j` and the rightmost box of row `-j`.
//!
//! A filling assigns 0 or 1 to every box. It is a *permutation tableau of
//! type B* when
//!
//! 1. every column contains at least one 1,
//! 2. no box with a 1 above it (same column) and a 1 to its left (same row)
//!    is 0, and
//! 3. a row whose diagonal is 0 contains no 1 at all.

use std::fmt;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Maximum supported length; fillings are stored as one `u64` per row.
pub const MAX_N: usize = 64;

/// A shifted diagram of type B: a length `n ≥ 1` together with the column
/// set `C ⊆ [n]`.
///
/// # Examples
///
/// ```
/// use tableaux_b::ShiftedDiagramB;
///
/// let d = ShiftedDiagramB::new(9, vec![1, 3, 5, 7, 8]).unwrap();
/// assert_eq!(d.positive_rows(), &[2, 4, 6, 9]);
/// assert_eq!(d.row_length(2), 4); // columns 3, 5, 7, 8 lie right of row 2
/// assert_eq!(d.row_length(9), 0);
/// ```
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ShiftedDiagramB {
    n: usize,
    /// Column labels in increasing order.
    columns: Vec<usize>,
    /// Positive row labels in increasing order (top to bottom).
    positive: Vec<usize>,
}

impl ShiftedDiagramB {
    /// Builds the diagram for column set `columns ⊆ [n]`; the column order
    /// given does not matter, duplicates are rejected.
    pub fn new(n: usize, columns: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram("n must be at least 1".to_string()));
        }
        if n > MAX_N {
            return Err(Error::InvalidDiagram(format!("n = {n} exceeds the supported maximum {MAX_N}")));
        }
        let mut in_c = vec![false; n + 1];
        for &j in &columns {
            if j == 0 || j > n {
                return Err(Error::InvalidDiagram(format!("column {j} out of range for n = {n}")));
            }
            if in_c[j] {
                return Err(Error::InvalidDiagram(format!("column {j} listed twice")));
            }
            in_c[j] = true;
        }
        let mut columns: Vec<usize> = columns;
        columns.sort_unstable();
        let positive = (1..=n).filter(|&i| !in_c[i]).collect();
        Ok(ShiftedDiagramB { n, columns, positive })
    }

    /// Reconstructs the unique diagram whose positive rows have the given
    /// lengths (top to bottom, weakly decreasing) next to `column_count`
    /// columns. Inverse of reading [`Self::positive_shape`] off a diagram.
    ///
    /// Walking the labels `1, …, n` in order, a positive row of length `ℓ`
    /// is emitted once exactly `column_count - ℓ` column labels have been
    /// emitted; all remaining labels are columns.
    pub fn from_positive_row_lengths(lengths: &[usize], column_count: usize) -> Result<Self> {
        let n = lengths.len() + column_count;
        if n == 0 {
            return Err(Error::InvalidDiagram("n must be at least 1".to_string()));
        }
        for pair in lengths.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidDiagram(format!(
                    "row lengths must weakly decrease top to bottom, got {lengths:?}"
                )));
            }
        }
        if let Some(&first) = lengths.first() {
            if first > column_count {
                return Err(Error::InvalidDiagram(format!(
                    "row length {first} exceeds the column count {column_count}"
                )));
            }
        }
        let mut columns = Vec::with_capacity(column_count);
        let mut emitted_columns = 0;
        let mut next_row = 0;
        for label in 1..=n {
            if next_row < lengths.len() && emitted_columns >= column_count - lengths[next_row] {
                next_row += 1; // `label` becomes this positive row
            } else {
                columns.push(label);
                emitted_columns += 1;
            }
        }
        ShiftedDiagramB::new(n, columns)
    }

    /// The length `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Column labels in increasing order.
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// Number of columns `|C|`.
    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// Positive row labels in increasing order (equal to top-to-bottom
    /// order).
    pub fn positive_rows(&self) -> &[usize] {
        &self.positive
    }

    /// Number of positive rows `r = n - |C|`.
    pub fn positive_row_count(&self) -> usize {
        self.positive.len()
    }

    /// Total number of rows (`|C|` negative plus `r` positive).
    pub fn row_count(&self) -> usize {
        self.n
    }

    /// All row labels, top to bottom: `-j` for `j ∈ C` by decreasing `j`,
    /// then `[n] \ C` increasing.
    pub fn row_labels(&self) -> Vec<i32> {
        let mut labels = Vec::with_capacity(self.n);
        labels.extend(self.columns.iter().rev().map(|&j| -(j as i32)));
        labels.extend(self.positive.iter().map(|&i| i as i32));
        labels
    }

    /// Column labels left to right (decreasing).
    pub fn columns_left_to_right(&self) -> impl Iterator<Item = usize> + '_ {
        self.columns.iter().rev().copied()
    }

    /// Top-to-bottom index of a row label, if it names a row.
    pub fn row_index(&self, label: i32) -> Option<usize> {
        if label < 0 {
            let j = label.unsigned_abs() as usize;
            let ascending = self.columns.binary_search(&j).ok()?;
            Some(self.column_count() - 1 - ascending)
        } else {
            let i = label as usize;
            let within = self.positive.binary_search(&i).ok()?;
            Some(self.column_count() + within)
        }
    }

    /// Row label at a top-to-bottom index.
    ///
    /// # Panics
    ///
    /// Panics when `index ≥ n`.
    pub fn row_label(&self, index: usize) -> i32 {
        let c = self.column_count();
        if index < c {
            -(self.columns[c - 1 - index] as i32)
        } else {
            self.positive[index - c] as i32
        }
    }

    /// Left-to-right index of a column label, if present.
    pub fn column_index(&self, col: usize) -> Option<usize> {
        let ascending = self.columns.binary_search(&col).ok()?;
        Some(self.column_count() - 1 - ascending)
    }

    /// Column label at a left-to-right index.
    ///
    /// # Panics
    ///
    /// Panics when `index ≥ |C|`.
    pub fn column_label(&self, index: usize) -> usize {
        self.columns[self.column_count() - 1 - index]
    }

    /// Number of boxes in the row with the given label.
    ///
    /// # Panics
    ///
    /// Panics when `label` does not name a row.
    pub fn row_length(&self, label: i32) -> usize {
        let index = self
            .row_index(label)
            .unwrap_or_else(|| panic!("label {label} does not name a row"));
        self.row_length_at(index)
    }

    /// Number of boxes in the row at a top-to-bottom index. In every row the
    /// boxes occupy a prefix of the column positions: row index `r < |C|`
    /// (negative) holds boxes at column indices `0..=r`, and a positive row
    /// labelled `i` holds one box for each column label `> i`.
    pub fn row_length_at(&self, index: usize) -> usize {
        let c = self.column_count();
        if index < c {
            index + 1
        } else {
            let i = self.positive[index - c];
            // Columns with label > i; columns are sorted increasing.
            c - self.columns.partition_point(|&j| j <= i)
        }
    }

    /// Box lengths of every row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (0..self.row_count()).map(|r| self.row_length_at(r)).collect()
    }

    /// `true` when the diagram has a box in the given row and column.
    pub fn has_box(&self, row: i32, col: usize) -> bool {
        match (self.row_index(row), self.column_index(col)) {
            (Some(r), Some(q)) => q < self.row_length_at(r),
            _ => false,
        }
    }

    /// Lengths of the positive rows, top to bottom (weakly decreasing).
    pub fn positive_shape(&self) -> Vec<usize> {
        let c = self.column_count();
        (0..self.positive.len())
            .map(|p| self.row_length_at(c + p))
            .collect()
    }

    /// Total number of boxes.
    pub fn box_count(&self) -> usize {
        (0..self.row_count()).map(|r| self.row_length_at(r)).sum()
    }
}

impl fmt::Debug for ShiftedDiagramB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ShiftedDiagramB(n={}, C={:?})", self.n, self.columns)
    }
}

/// A single failed tableau condition, with a witness box.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// Condition 1: column `col` contains no 1.
    MissingOne { col: usize },
    /// Condition 2: the box at `(row, col)` is 0 although it has a 1 above
    /// it in its column and a 1 to its left in its row.
    LeViolation { row: i32, col: usize },
    /// Condition 3: the diagonal of row `row` is 0 but the box at
    /// `(row, col)` is 1.
    DiagonalZeroNonempty { row: i32, col: usize },
    /// A filling entry addressed a box outside the diagram.
    BoxOutOfShape { row: i32, col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingOne { col } => write!(f, "column {col} has no 1"),
            Violation::LeViolation { row, col } => write!(
                f,
                "box ({row}, {col}) is 0 but has a 1 above it and a 1 to its left"
            ),
            Violation::DiagonalZeroNonempty { row, col } => write!(
                f,
                "row {row} has diagonal 0 but box ({row}, {col}) is 1"
            ),
            Violation::BoxOutOfShape { row, col } => write!(f, "no box at ({row}, {col})"),
        }
    }
}

/// A 0/1 filling of a [`ShiftedDiagramB`].
///
/// The type stores arbitrary fillings so that broken ones can be loaded,
/// rendered, and diagnosed; [`PermutationTableauB::validate`] reports which
/// tableau conditions fail, and an empty report means the filling is a
/// permutation tableau of type B.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermutationTableauB {
    diagram: ShiftedDiagramB,
    /// One bit set per row, top to bottom; bit `q` is the box at
    /// left-to-right column index `q`.
    rows: Vec<u64>,
}

impl PermutationTableauB {
    /// Builds a filling from explicit 0/1 rows, top to bottom, each listing
    /// its boxes left to right.
    pub fn new(diagram: ShiftedDiagramB, fill: Vec<Vec<u8>>) -> Result<Self> {
        if fill.len() != diagram.row_count() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} rows, got {}",
                diagram.row_count(),
                fill.len()
            )));
        }
        let mut rows = Vec::with_capacity(fill.len());
        for (r, cells) in fill.iter().enumerate() {
            let len = diagram.row_length_at(r);
            let label = diagram.row_label(r);
            if cells.len() != len {
                return Err(Error::ShapeMismatch(format!(
                    "row {label} has {len} boxes, got {} cells",
                    cells.len()
                )));
            }
            let mut bits = 0u64;
            for (q, &cell) in cells.iter().enumerate() {
                match cell {
                    0 => {}
                    1 => bits |= 1 << q,
                    other => {
                        return Err(Error::ShapeMismatch(format!(
                            "row {label} contains the cell value {other}; cells must be 0 or 1"
                        )))
                    }
                }
            }
            rows.push(bits);
        }
        Ok(PermutationTableauB { diagram, rows })
    }

    /// The all-zero filling (valid only when the diagram has no columns).
    pub fn zero_filled(diagram: ShiftedDiagramB) -> Self {
        let rows = vec![0; diagram.row_count()];
        PermutationTableauB { diagram, rows }
    }

    pub(crate) fn from_bits(diagram: ShiftedDiagramB, rows: Vec<u64>) -> Self {
        debug_assert_eq!(rows.len(), diagram.row_count());
        debug_assert!((0..rows.len()).all(|r| {
            let len = diagram.row_length_at(r);
            rows[r] & !(((1u128 << len) - 1) as u64) == 0
        }));
        PermutationTableauB { diagram, rows }
    }

    /// The underlying diagram.
    pub fn diagram(&self) -> &ShiftedDiagramB {
        &self.diagram
    }

    /// The length `n`.
    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    /// The box value at `(row, col)`, or `None` when there is no box there.
    pub fn get(&self, row: i32, col: usize) -> Option<bool> {
        let r = self.diagram.row_index(row)?;
        let q = self.diagram.column_index(col)?;
        if q < self.diagram.row_length_at(r) {
            Some(self.rows[r] >> q & 1 == 1)
        } else {
            None
        }
    }

    /// The diagonal value of column `col`, i.e. the box at `(-col, col)`,
    /// or `None` when `col` is not a column.
    pub fn diagonal(&self, col: usize) -> Option<bool> {
        self.get(-(col as i32), col)
    }

    /// The filling as 0/1 rows, top to bottom.
    pub fn fill(&self) -> Vec<Vec<u8>> {
        (0..self.diagram.row_count())
            .map(|r| {
                (0..self.diagram.row_length_at(r))
                    .map(|q| (self.rows[r] >> q & 1) as u8)
                    .collect()
            })
            .collect()
    }

    pub(crate) fn row_bits(&self, index: usize) -> u64 {
        self.rows[index]
    }

    /// `true` when the row at the given top-to-bottom index contains no 1.
    pub fn row_is_empty_at(&self, index: usize) -> bool {
        self.rows[index] == 0
    }

    /// Checks the three tableau conditions and reports every failure, in a
    /// deterministic order (condition 2 row by row, then condition 3 row by
    /// row, then condition 1 by increasing column label). An empty result
    /// means the filling is a permutation tableau of type B.
    pub fn validate(&self) -> Vec<Violation> {
        let d = &self.diagram;
        let c = d.column_count();
        let mut violations = Vec::new();

        // Condition 2: zero box with a 1 above (same column) and a 1 to its
        // left (same row, smaller column index = larger column label).
        let mut one_above = vec![false; c];
        let mut le = Vec::new();
        let mut c3 = Vec::new();
        for r in 0..d.row_count() {
            let len = d.row_length_at(r);
            let bits = self.rows[r];
            let label = d.row_label(r);
            let mut one_left = false;
            for (q, &above) in one_above.iter().take(len).enumerate() {
                let filled = bits >> q & 1 == 1;
                if !filled && one_left && above {
                    le.push(Violation::LeViolation { row: label, col: d.column_label(q) });
                }
                one_left |= filled;
            }
            // Condition 3: on a negative row the diagonal is the rightmost
            // box, at column index r.
            if r < c && bits >> r & 1 == 0 {
                for q in 0..r {
                    if bits >> q & 1 == 1 {
                        c3.push(Violation::DiagonalZeroNonempty { row: label, col: d.column_label(q) });
                    }
                }
            }
            for (q, above) in one_above.iter_mut().take(len).enumerate() {
                *above |= bits >> q & 1 == 1;
            }
        }
        violations.extend(le);
        violations.extend(c3);

        // Condition 1: every column holds a 1. `one_above` now covers all
        // rows; report by increasing column label.
        for q in (0..c).rev() {
            if !one_above[q] {
                violations.push(Violation::MissingOne { col: d.column_label(q) });
            }
        }
        violations
    }

    /// `true` when all three tableau conditions hold.
    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Lengths of the positive rows, top to bottom.
    pub fn positive_shape(&self) -> Vec<usize> {
        self.diagram.positive_shape()
    }

    /// Labels of the positive rows containing no 1, in increasing order.
    /// A row with no boxes at all counts as empty.
    pub fn empty_positive_rows(&self) -> Vec<usize> {
        let c = self.diagram.column_count();
        self.diagram
            .positive_rows()
            .iter()
            .enumerate()
            .filter(|(p, _)| self.rows[c + p] == 0)
            .map(|(_, &i)| i)
            .collect()
    }

    /// Renders the tableau as ASCII art: column labels across the top, row
    /// labels down the left, one `0`/`1` per box with diagonals bracketed.
    /// When the filling is not a valid tableau, the failed conditions are
    /// appended as `!`-prefixed footnote lines.
    pub fn render_ascii(&self) -> String {
        let d = &self.diagram;
        let c = d.column_count();
        let mut out = String::new();

        let label_width = d
            .row_labels()
            .iter()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        const CELL: usize = 4;

        if c > 0 {
            out.push_str(&" ".repeat(label_width));
            for q in 0..c {
                out.push_str(&format!("{:>CELL$}", d.column_label(q)));
            }
            out.push('\n');
        }
        for r in 0..d.row_count() {
            out.push_str(&format!("{:>label_width$}", d.row_label(r)));
            let len = d.row_length_at(r);
            for q in 0..len {
                let bit = self.rows[r] >> q & 1;
                // On negative row r the diagonal sits at column index r.
                if r < c && q == r {
                    out.push_str(&format!("{:>CELL$}", format!("[{bit}]")));
                } else {
                    out.push_str(&format!("{bit:>CELL$}"));
                }
            }
            out.push('\n');
        }
        for v in self.validate() {
            out.push_str(&format!("! {v}\n"));
        }
        out
    }
}

impl fmt::Debug for PermutationTableauB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PT(n={}, C={:?},", self.n(), self.diagram.columns)?;
        for r in 0..self.diagram.row_count() {
            let len = self.diagram.row_length_at(r);
            let cells: String = (0..len)
                .map(|q| if self.rows[r] >> q & 1 == 1 { '1' } else { '0' })
                .collect();
            write!(f, " {}:[{}]", self.diagram.row_label(r), cells)?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct RowWire {
    label: i32,
    cells: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct TableauWire {
    n: usize,
    columns: Vec<usize>,
    rows: Vec<RowWire>,
}

impl PermutationTableauB {
    fn to_wire(&self) -> TableauWire {
        TableauWire {
            n: self.n(),
            columns: self.diagram.columns.clone(),
            rows: self
                .fill()
                .into_iter()
                .enumerate()
                .map(|(r, cells)| RowWire { label: self.diagram.row_label(r), cells })
                .collect(),
        }
    }

    fn from_wire(wire: TableauWire) -> Result<Self> {
        for pair in wire.columns.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Schema(
                    "columns must be listed in strictly increasing order".to_string(),
                ));
            }
        }
        let diagram = ShiftedDiagramB::new(wire.n, wire.columns)
            .map_err(|e| Error::Schema(e.to_string()))?;
        if wire.rows.len() != diagram.row_count() {
            return Err(Error::Schema(format!(
                "expected {} rows, got {}",
                diagram.row_count(),
                wire.rows.len()
            )));
        }
        let mut fill = Vec::with_capacity(wire.rows.len());
        for (r, row) in wire.rows.iter().enumerate() {
            let expected = diagram.row_label(r);
            if row.label != expected {
                return Err(Error::Schema(format!(
                    "row {r} should be labelled {expected} (rows run top to bottom), got {}",
                    row.label
                )));
            }
            fill.push(row.cells.clone());
        }
        PermutationTableauB::new(diagram, fill).map_err(|e| Error::Schema(e.to_string()))
    }
}

impl Serialize for PermutationTableauB {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PermutationTableauB {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = TableauWire::deserialize(deserializer)?;
        PermutationTableauB::from_wire(wire).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example8;

    #[test]
    fn diagram_geometry() {
        let d = ShiftedDiagramB::new(9, vec![1, 3, 5, 7, 8]).unwrap();
        assert_eq!(d.positive_row_count(), 4);
        assert_eq!(d.positive_rows(), &[2, 4, 6, 9]);
        assert_eq!(d.row_length(2), 4);
        assert_eq!(d.row_length(9), 0);
        assert_eq!(
            d.row_labels(),
            vec![-8, -7, -5, -3, -1, 2, 4, 6, 9]
        );

        let single = ShiftedDiagramB::new(1, vec![]).unwrap();
        assert_eq!(single.positive_rows(), &[1]);
        assert_eq!(single.row_length(1), 0);
        assert_eq!(single.positive_shape(), vec![0]);

        let d8 = ShiftedDiagramB::new(8, vec![3, 5, 6, 8]).unwrap();
        assert_eq!(d8.positive_shape(), vec![4, 4, 3, 1]);
        assert_eq!(d8.row_labels(), vec![-8, -6, -5, -3, 1, 2, 4, 7]);
        // Negative row lengths grow 1, 2, 3, 4 down the staircase.
        assert_eq!(d8.row_lengths(), vec![1, 2, 3, 4, 4, 4, 3, 1]);
        assert_eq!(d8.box_count(), 22);
        // Diagonal of column j is the topmost box of column j and the
        // rightmost box of row -j.
        for &j in d8.columns() {
            assert!(d8.has_box(-(j as i32), j));
            let q = d8.column_index(j).unwrap();
            let r = d8.row_index(-(j as i32)).unwrap();
            assert_eq!(q, r);
            assert_eq!(d8.row_length_at(r), q + 1);
        }
    }

    #[test]
    fn diagram_rejects_bad_columns() {
        assert!(ShiftedDiagramB::new(0, vec![]).is_err());
        assert!(ShiftedDiagramB::new(4, vec![0]).is_err());
        assert!(ShiftedDiagramB::new(4, vec![5]).is_err());
        assert!(ShiftedDiagramB::new(4, vec![2, 2]).is_err());
    }

    #[test]
    fn reconstruction_from_row_lengths() {
        let d8 = ShiftedDiagramB::new(8, vec![3, 5, 6, 8]).unwrap();
        let rebuilt = ShiftedDiagramB::from_positive_row_lengths(&[4, 4, 3, 1], 4).unwrap();
        assert_eq!(rebuilt, d8);

        let single = ShiftedDiagramB::from_positive_row_lengths(&[0], 0).unwrap();
        assert_eq!(single, ShiftedDiagramB::new(1, vec![]).unwrap());

        // All-column diagrams have no positive rows.
        let all = ShiftedDiagramB::from_positive_row_lengths(&[], 3).unwrap();
        assert_eq!(all, ShiftedDiagramB::new(3, vec![1, 2, 3]).unwrap());

        assert!(ShiftedDiagramB::from_positive_row_lengths(&[1, 2], 2).is_err());
        assert!(ShiftedDiagramB::from_positive_row_lengths(&[3], 2).is_err());
        assert!(ShiftedDiagramB::from_positive_row_lengths(&[], 0).is_err());

        // Exhaustive inverse check over every diagram with n ≤ 7.
        for n in 1..=7usize {
            for mask in 0..(1u32 << n) {
                let columns: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let d = ShiftedDiagramB::new(n, columns).unwrap();
                let again =
                    ShiftedDiagramB::from_positive_row_lengths(&d.positive_shape(), d.column_count())
                        .unwrap();
                assert_eq!(again, d);
            }
        }
    }

    #[test]
    fn example_tableau_is_valid() {
        let t = example8();
        assert!(t.is_valid());
        assert_eq!(t.positive_shape(), vec![4, 4, 3, 1]);
        assert_eq!(t.empty_positive_rows(), Vec::<usize>::new());
        assert_eq!(t.get(-8, 8), Some(true));
        assert_eq!(t.get(-6, 6), Some(false));
        assert_eq!(t.get(1, 3), Some(true));
        assert_eq!(t.get(1, 5), Some(false));
        assert_eq!(t.get(1, 1), None);
        assert_eq!(t.get(-8, 6), None);
        assert_eq!(t.diagonal(6), Some(false));
        assert_eq!(t.diagonal(8), Some(true));
        assert_eq!(t.diagonal(4), None);
    }

    #[test]
    fn empty_rows_include_boxless_rows() {
        let single = PermutationTableauB::zero_filled(ShiftedDiagramB::new(1, vec![]).unwrap());
        assert!(single.is_valid());
        assert_eq!(single.empty_positive_rows(), vec![1]);
    }

    #[test]
    fn validation_reports_failures() {
        // Clearing the diagonal of row -3 leaves three 1s on a
        // diagonal-zero row; column 3 still holds a 1 in row 1.
        let mut fill = example8().fill();
        fill[3] = vec![1, 1, 1, 0];
        let t = PermutationTableauB::new(example8().diagram().clone(), fill).unwrap();
        let violations = t.validate();
        assert_eq!(
            violations,
            vec![
                Violation::DiagonalZeroNonempty { row: -3, col: 8 },
                Violation::DiagonalZeroNonempty { row: -3, col: 6 },
                Violation::DiagonalZeroNonempty { row: -3, col: 5 },
            ]
        );

        // A zero box (2, 5) below the 1 at (-5, 5) and right of the 1 at
        // (2, 8) violates condition 2.
        let mut fill = example8().fill();
        fill[5] = vec![1, 1, 0, 1];
        let t = PermutationTableauB::new(example8().diagram().clone(), fill).unwrap();
        assert_eq!(
            t.validate(),
            vec![Violation::LeViolation { row: 2, col: 5 }]
        );

        // Clearing every 1 in column 8 violates condition 1 (and nothing
        // else: row -8 becomes the all-zero row, which is fine).
        let mut fill = example8().fill();
        for r in [0usize, 2, 3, 5, 7] {
            fill[r][0] = 0;
        }
        let t = PermutationTableauB::new(example8().diagram().clone(), fill).unwrap();
        assert_eq!(t.validate(), vec![Violation::MissingOne { col: 8 }]);
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let d = ShiftedDiagramB::new(2, vec![2]).unwrap();
        assert!(PermutationTableauB::new(d.clone(), vec![vec![0]]).is_err());
        assert!(PermutationTableauB::new(d.clone(), vec![vec![0, 1], vec![1]]).is_err());
        assert!(PermutationTableauB::new(d.clone(), vec![vec![2], vec![1]]).is_err());
        assert!(PermutationTableauB::new(d, vec![vec![1], vec![1]]).is_ok());
    }

    #[test]
    fn json_wire_format_is_exact() {
        let d = ShiftedDiagramB::new(2, vec![2]).unwrap();
        let t = PermutationTableauB::new(d, vec![vec![0], vec![1]]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"columns":[2],"rows":[{"label":-2,"cells":[0]},{"label":1,"cells":[1]}]}"#
        );
        let back: PermutationTableauB = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);

        let t8 = example8();
        let json8 = serde_json::to_string(&t8).unwrap();
        let back8: PermutationTableauB = serde_json::from_str(&json8).unwrap();
        assert_eq!(back8, t8);
    }

    #[test]
    fn json_loader_rejects_malformed_input() {
        let reject = |s: &str| {
            assert!(
                serde_json::from_str::<PermutationTableauB>(s).is_err(),
                "accepted {s}"
            )
        };
        // Columns out of order.
        reject(r#"{"n":8,"columns":[8,6,5,3],"rows":[]}"#);
        // Duplicate columns.
        reject(r#"{"n":2,"columns":[2,2],"rows":[]}"#);
        // Missing rows.
        reject(r#"{"n":2,"columns":[2],"rows":[{"label":-2,"cells":[0]}]}"#);
        // Rows out of order.
        reject(
            r#"{"n":2,"columns":[2],"rows":[{"label":1,"cells":[1]},{"label":-2,"cells":[0]}]}"#,
        );
        // Wrong cell count.
        reject(
            r#"{"n":2,"columns":[2],"rows":[{"label":-2,"cells":[0,0]},{"label":1,"cells":[1]}]}"#,
        );
        // Cells must be 0 or 1.
        reject(
            r#"{"n":2,"columns":[2],"rows":[{"label":-2,"cells":[3]},{"label":1,"cells":[1]}]}"#,
        );
    }

    #[test]
    fn ascii_rendering_shows_labels_and_diagonals() {
        let t = example8();
        let art = t.render_ascii();
        let lines: Vec<&str> = art.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0].trim(), "8   6   5   3");
        assert!(lines[1].starts_with(" -8"));
        assert!(lines[1].contains("[1]"));
        assert!(lines[2].contains("[0]"));
        assert!(lines[5].ends_with("1"));
        assert!(!art.contains('!'));

        // Boxless rows render as a bare label.
        let single = PermutationTableauB::zero_filled(ShiftedDiagramB::new(1, vec![]).unwrap());
        assert_eq!(single.render_ascii(), "  1\n");

        // Violations are appended as footnotes.
        let broken = PermutationTableauB::zero_filled(ShiftedDiagramB::new(2, vec![2]).unwrap());
        let art = broken.render_ascii();
        assert!(art.contains("! column 2 has no 1"));
    }
}
