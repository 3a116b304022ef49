//! Insertion and deletion bijections between derangement tableaux and
//! tableaux whose image is alternating with the maximal number of fixed
//! points.
//!
//! For each alternating type `t` there is a paired derangement class
//! (`-DU ↔ minus-D`, `-UD ↔ minus`, `+DU`/`+UD ↔ B`) and a length pairing
//! `n = 2m-2, 2m-1, 2m, 2m+1`. [`theta`] lifts a tableau of length `m` whose
//! image lies in the paired class to a tableau of length `n` whose image is
//! alternating of type `t` with the maximal number of fixed points; it works
//! by inserting all-zero rows into the positive part at scheduled positions,
//! which inserts fixed points into the image without disturbing the other
//! values' relative pattern. [`psi`] is the inverse: it deletes every
//! positive row containing no 1 (one per fixed point of the image).
//!
//! Deleting or inserting positive rows keeps the number of columns; the
//! labels of rows and columns are renumbered so that each positive row of
//! length `ℓ` again sits below exactly `|C| - ℓ` columns, which pins the new
//! column set uniquely.

use crate::signed::AlternatingType;
use crate::tableau::{PermutationTableauB, ShiftedDiagramB};
use crate::zigzag::zeta;
use crate::{Error, Result};

/// All-zero rows scheduled for one gap of the positive part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapInsertion {
    /// Number of existing positive rows above the gap (`0` = above all of
    /// them, `r` = below all of them).
    pub after_row: usize,
    /// Box lengths of the inserted rows, top to bottom.
    pub lengths: Vec<usize>,
}

/// The schedule of empty-row insertions used by [`theta`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionPlan {
    target: AlternatingType,
    source_length: usize,
    gaps: Vec<GapInsertion>,
}

impl InsertionPlan {
    /// The alternating type the lift aims for.
    pub fn target(&self) -> AlternatingType {
        self.target
    }

    /// Length `m` of the tableau the plan applies to.
    pub fn source_length(&self) -> usize {
        self.source_length
    }

    /// Length of the lifted tableau: `m` plus the number of insertions.
    pub fn output_length(&self) -> usize {
        self.source_length + self.total_insertions()
    }

    /// The scheduled gaps, by increasing position; gaps receiving no rows
    /// are omitted.
    pub fn gaps(&self) -> &[GapInsertion] {
        &self.gaps
    }

    /// Total number of inserted rows. Equals the maximal fixed-point count
    /// of the target type at the output length.
    pub fn total_insertions(&self) -> usize {
        self.gaps.iter().map(|g| g.lengths.len()).sum()
    }
}

/// The lengths `hi, hi-1, …, lo`, empty when `hi < lo`.
fn run_down(hi: i64, lo: i64) -> Vec<usize> {
    (lo..=hi).rev().map(|v| v as usize).collect()
}

/// Computes the insertion schedule for lifting a tableau of length `m` with
/// the given positive shape (row lengths top to bottom, weakly decreasing)
/// to the target type.
///
/// Writing `r` for the number of positive rows, `c = m - r` for the number
/// of columns, and `λ` for the shape, the schedule is:
///
/// * above row 1 — lengths `c-2, …, λ₁+1` for `-DU`; `c-1, …, λ₁+1` for
///   `-UD`; `c, …, λ₁+1` for `+DU`; and `c` followed by `c, …, λ₁+1` for
///   `+UD`;
/// * between rows `i` and `i+1` — lengths `λᵢ, λᵢ, λᵢ-1, …, λᵢ₊₁+1`;
/// * below row `r` — lengths `λᵣ, λᵣ, λᵣ-1, …, 1`.
///
/// In total this inserts `m-2`, `m-1`, `m`, or `m+1` rows for the four
/// types, matching the maximal fixed-point count at the output length.
pub fn insertion_plan(shape: &[usize], m: usize, target: AlternatingType) -> Result<InsertionPlan> {
    let r = shape.len();
    if r > m {
        return Err(Error::InvalidDiagram(format!(
            "a tableau of length {m} cannot have {r} positive rows"
        )));
    }
    let c = (m - r) as i64;
    for pair in shape.windows(2) {
        if pair[0] < pair[1] {
            return Err(Error::InvalidDiagram(format!(
                "positive shape must weakly decrease, got {shape:?}"
            )));
        }
    }
    let lambda1 = shape.first().copied().unwrap_or(0) as i64;
    if lambda1 > c {
        return Err(Error::InvalidDiagram(format!(
            "row length {lambda1} exceeds the column count {c}"
        )));
    }

    let mut gaps = Vec::new();
    let mut push = |after_row: usize, lengths: Vec<usize>| {
        if !lengths.is_empty() {
            gaps.push(GapInsertion { after_row, lengths });
        }
    };

    let first = match target {
        AlternatingType::NegDU => run_down(c - 2, lambda1 + 1),
        AlternatingType::NegUD => run_down(c - 1, lambda1 + 1),
        AlternatingType::PosDU => run_down(c, lambda1 + 1),
        AlternatingType::PosUD => {
            let mut v = vec![c as usize];
            v.extend(run_down(c, lambda1 + 1));
            v
        }
    };
    push(0, first);

    // The middle and last gaps repeat a row's length once and then step
    // down; on a derangement tableau every positive row is non-empty, so
    // these only apply when rows exist at all.
    for i in 1..=r {
        let here = shape[i - 1] as i64;
        let below = if i < r { shape[i] as i64 } else { 0 };
        let mut lengths = vec![here as usize];
        lengths.extend(run_down(here, below + 1));
        push(i, lengths);
    }

    Ok(InsertionPlan { target, source_length: m, gaps })
}

/// Lifts a derangement tableau to the target alternating type by inserting
/// the all-zero rows scheduled by [`insertion_plan`].
///
/// The input must be a valid tableau whose image lies in the derangement
/// class paired with `target` (class membership is inclusive). The output is
/// the unique tableau of length `2m-2`, `2m-1`, `2m`, or `2m+1` whose image
/// is alternating of type `target` with maximal fixed points and which
/// restricts back to the input under [`psi`].
pub fn theta(t: &PermutationTableauB, target: AlternatingType) -> Result<PermutationTableauB> {
    let violations = t.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidTableau(violations));
    }
    let sigma = zeta(t);
    let required = target.derangement_class();
    if !sigma.in_derangement_class(required) {
        let found = match sigma.derangement_class() {
            Some(class) => format!("class {class}"),
            None => format!("a non-derangement with fixed points {:?}", sigma.fixed_points()),
        };
        return Err(Error::WrongDerangementClass { required_by: target, required, found });
    }

    let m = t.n();
    let plan = insertion_plan(&t.positive_shape(), m, target)?;
    let expected_n = target.alternating_length(m);
    if plan.output_length() != expected_n {
        return Err(Error::Internal(format!(
            "insertion schedule for {target} at m = {m} yields length {}, expected {expected_n}",
            plan.output_length()
        )));
    }
    let out = apply_plan(t, &plan)?;

    // Post-conditions. Failures here are construction bugs, never bad input.
    let violations = out.validate();
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "insertion produced an invalid tableau: {}",
            Error::InvalidTableau(violations)
        )));
    }
    let image = zeta(&out);
    if !image.is_alternating(target) {
        return Err(Error::Internal(format!(
            "insertion image {image} is not alternating of type {target}"
        )));
    }
    let want = target.max_fixed_points(out.n());
    if image.fixed_point_count() != want {
        return Err(Error::Internal(format!(
            "insertion image {image} has {} fixed points, expected {want}",
            image.fixed_point_count()
        )));
    }
    Ok(out)
}

/// Restricts a maximal-fixed-point alternating tableau back to its
/// derangement tableau by deleting every positive row that contains no 1.
///
/// The input must be a valid tableau of a length paired with `target`
/// (`DU` types pair even lengths, `UD` types odd ones) whose image is
/// alternating of type `target` and attains the maximal fixed-point count.
/// The output image lies in the paired derangement class, and [`theta`]
/// takes the output back to the input.
pub fn psi(t: &PermutationTableauB, target: AlternatingType) -> Result<PermutationTableauB> {
    let violations = t.validate();
    if !violations.is_empty() {
        return Err(Error::InvalidTableau(violations));
    }
    let sigma = zeta(t);
    let n = t.n();
    if !sigma.is_alternating(target) {
        return Err(Error::NotAlternating { expected: target, window: sigma.to_string() });
    }
    if !target.pairs_length(n) {
        return Err(Error::ParityMismatch {
            alternating_type: target,
            n,
            expected_parity: target.expected_parity(),
        });
    }
    let required = target.max_fixed_points(n);
    let found = sigma.fixed_point_count();
    if found != required {
        return Err(Error::FixedPointsNotMaximal { alternating_type: target, n, required, found });
    }
    let m = target
        .derangement_length(n)
        .expect("parity was checked above");
    if m == 0 {
        // Only +UD at n = 1: deleting its single (fixed-point) row would
        // leave a length-zero tableau.
        return Err(Error::EmptyResult(format!(
            "deleting the fixed point of {sigma} leaves a tableau of length zero"
        )));
    }

    let d = t.diagram();
    let c = d.column_count();
    let mut lengths = Vec::new();
    let mut kept = Vec::new();
    for p in 0..d.positive_row_count() {
        let bits = t.row_bits(c + p);
        if bits != 0 {
            lengths.push(d.row_length_at(c + p));
            kept.push(bits);
        }
    }
    let new_d = ShiftedDiagramB::from_positive_row_lengths(&lengths, c)
        .map_err(|e| Error::Internal(format!("deletion produced a malformed diagram: {e}")))?;
    let mut rows: Vec<u64> = (0..c).map(|q| t.row_bits(q)).collect();
    rows.extend(kept);
    let out = PermutationTableauB::from_bits(new_d, rows);

    // Post-conditions, as in `theta`.
    if out.n() != m {
        return Err(Error::Internal(format!(
            "deletion produced length {}, expected {m}",
            out.n()
        )));
    }
    let violations = out.validate();
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "deletion produced an invalid tableau: {}",
            Error::InvalidTableau(violations)
        )));
    }
    let image = zeta(&out);
    if !image.in_derangement_class(target.derangement_class()) {
        return Err(Error::Internal(format!(
            "deletion image {image} is outside derangement class {}",
            target.derangement_class()
        )));
    }
    Ok(out)
}

/// Weaves the scheduled all-zero rows between the existing positive rows and
/// rebuilds the diagram around the new row list.
fn apply_plan(t: &PermutationTableauB, plan: &InsertionPlan) -> Result<PermutationTableauB> {
    let d = t.diagram();
    let c = d.column_count();
    let r = d.positive_row_count();

    let mut items: Vec<(usize, u64)> = Vec::with_capacity(r + plan.total_insertions());
    let mut gaps = plan.gaps().iter().peekable();
    for p in 0..=r {
        if let Some(gap) = gaps.peek() {
            if gap.after_row == p {
                items.extend(gap.lengths.iter().map(|&len| (len, 0u64)));
                gaps.next();
            }
        }
        if p < r {
            items.push((d.row_length_at(c + p), t.row_bits(c + p)));
        }
    }
    debug_assert!(gaps.next().is_none(), "gaps are sorted by position");

    let lengths: Vec<usize> = items.iter().map(|&(len, _)| len).collect();
    let new_d = ShiftedDiagramB::from_positive_row_lengths(&lengths, c)
        .map_err(|e| Error::Internal(format!("insertion produced a malformed diagram: {e}")))?;
    // Negative rows (and hence column fillings) transfer verbatim: the
    // left-to-right column order is preserved, only labels change.
    let mut rows: Vec<u64> = (0..c).map(|q| t.row_bits(q)).collect();
    rows.extend(items.iter().map(|&(_, bits)| bits));
    Ok(PermutationTableauB::from_bits(new_d, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example7, example8, negdu8};
    use crate::signed::SignedPermutation;
    use crate::tableau::{PermutationTableauB, ShiftedDiagramB};
    use crate::Error;

    fn perm(window: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(window.to_vec()).unwrap()
    }

    fn gap(after_row: usize, lengths: &[usize]) -> GapInsertion {
        GapInsertion { after_row, lengths: lengths.to_vec() }
    }

    #[test]
    fn schedules_for_the_worked_shape() {
        // Shape (2, 2, 1) to -DU at m = 8: 6 insertions.
        let plan = insertion_plan(&[2, 2, 1], 8, AlternatingType::NegDU).unwrap();
        assert_eq!(
            plan.gaps(),
            &[gap(0, &[3]), gap(1, &[2]), gap(2, &[2, 2]), gap(3, &[1, 1])]
        );
        assert_eq!(plan.total_insertions(), 6);
        assert_eq!(plan.output_length(), 14);

        // The same shape at m = 7 for the other three types.
        let plan = insertion_plan(&[2, 2, 1], 7, AlternatingType::NegUD).unwrap();
        assert_eq!(
            plan.gaps(),
            &[gap(0, &[3]), gap(1, &[2]), gap(2, &[2, 2]), gap(3, &[1, 1])]
        );
        assert_eq!(plan.total_insertions(), 6);

        let plan = insertion_plan(&[2, 2, 1], 7, AlternatingType::PosDU).unwrap();
        assert_eq!(
            plan.gaps(),
            &[gap(0, &[4, 3]), gap(1, &[2]), gap(2, &[2, 2]), gap(3, &[1, 1])]
        );
        assert_eq!(plan.total_insertions(), 7);

        let plan = insertion_plan(&[2, 2, 1], 7, AlternatingType::PosUD).unwrap();
        assert_eq!(
            plan.gaps(),
            &[gap(0, &[4, 4, 3]), gap(1, &[2]), gap(2, &[2, 2]), gap(3, &[1, 1])]
        );
        assert_eq!(plan.total_insertions(), 8);

        // Insertion counts match the maximal fixed-point count.
        for (t, m) in [
            (AlternatingType::NegDU, 8),
            (AlternatingType::NegUD, 7),
            (AlternatingType::PosDU, 7),
            (AlternatingType::PosUD, 7),
        ] {
            let plan = insertion_plan(&[2, 2, 1], m, t).unwrap();
            assert_eq!(plan.total_insertions(), t.insertion_count(m));
            assert_eq!(plan.output_length(), t.alternating_length(m));
            assert_eq!(plan.total_insertions(), t.max_fixed_points(plan.output_length()));
        }
    }

    #[test]
    fn schedules_at_the_edges() {
        // No positive rows: only the first gap can receive rows.
        let plan = insertion_plan(&[], 1, AlternatingType::NegUD).unwrap();
        assert!(plan.gaps().is_empty());
        assert_eq!(plan.output_length(), 1);

        let plan = insertion_plan(&[], 2, AlternatingType::NegDU).unwrap();
        assert!(plan.gaps().is_empty());

        let plan = insertion_plan(&[], 2, AlternatingType::NegUD).unwrap();
        assert_eq!(plan.gaps(), &[gap(0, &[1])]);

        // A full-width first row: +UD still inserts one row above (length
        // c), +DU none.
        let plan = insertion_plan(&[1], 2, AlternatingType::PosUD).unwrap();
        assert_eq!(plan.gaps(), &[gap(0, &[1]), gap(1, &[1, 1])]);
        assert_eq!(plan.total_insertions(), 3);

        let plan = insertion_plan(&[1], 2, AlternatingType::PosDU).unwrap();
        assert_eq!(plan.gaps(), &[gap(1, &[1, 1])]);
        assert_eq!(plan.total_insertions(), 2);

        assert!(insertion_plan(&[1, 2], 4, AlternatingType::PosDU).is_err());
        assert!(insertion_plan(&[4], 4, AlternatingType::PosDU).is_err());
        assert!(insertion_plan(&[1], 0, AlternatingType::PosDU).is_err());
    }

    #[test]
    fn lift_to_neg_du_matches_the_worked_example() {
        let input = negdu8();
        assert_eq!(zeta(&input), perm(&[-3, -4, 2, 7, 6, -5, 8, 1]));

        let out = theta(&input, AlternatingType::NegDU).unwrap();

        // The full expected output tableau.
        let d = ShiftedDiagramB::new(14, vec![1, 2, 4, 10, 14]).unwrap();
        let expected = PermutationTableauB::new(
            d,
            vec![
                vec![0],                // -14, from old -8
                vec![1, 1],             // -10, from old -6
                vec![0, 0, 0],          // -4, from old -3
                vec![0, 1, 0, 1],       // -2
                vec![0, 0, 1, 1, 1],    // -1
                vec![0, 0, 0],          // 3 (inserted)
                vec![1, 1],             // 5, from old 4
                vec![0, 0],             // 6 (inserted)
                vec![0, 1],             // 7, from old 5
                vec![0, 0],             // 8 (inserted)
                vec![0, 0],             // 9 (inserted)
                vec![1],                // 11, from old 7
                vec![0],                // 12 (inserted)
                vec![0],                // 13 (inserted)
            ],
        )
        .unwrap();
        assert_eq!(out, expected);
        assert_eq!(out.empty_positive_rows(), vec![3, 6, 8, 9, 12, 13]);
        assert_eq!(
            zeta(&out),
            perm(&[-4, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 1])
        );
        assert_eq!(psi(&out, AlternatingType::NegDU).unwrap(), input);
    }

    #[test]
    fn lift_to_neg_ud_matches_the_worked_example() {
        let input = example7();
        let out = theta(&input, AlternatingType::NegUD).unwrap();
        assert_eq!(out.n(), 13);
        assert_eq!(out.diagram().columns(), &[1, 3, 9, 13]);
        assert_eq!(out.empty_positive_rows(), vec![2, 5, 7, 8, 11, 12]);
        assert_eq!(
            zeta(&out),
            perm(&[-4, 2, 1, 10, 5, 9, 7, 8, -6, 13, 11, 12, 3])
        );
        assert_eq!(psi(&out, AlternatingType::NegUD).unwrap(), input);
    }

    #[test]
    fn lift_to_pos_du_matches_the_worked_example() {
        let input = example7();
        let out = theta(&input, AlternatingType::PosDU).unwrap();
        assert_eq!(out.n(), 14);
        assert_eq!(out.diagram().columns(), &[2, 4, 10, 14]);
        assert_eq!(out.empty_positive_rows(), vec![1, 3, 6, 8, 9, 12, 13]);
        assert_eq!(
            zeta(&out),
            perm(&[1, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 4])
        );
        assert_eq!(psi(&out, AlternatingType::PosDU).unwrap(), input);
    }

    #[test]
    fn lift_to_pos_ud_matches_the_worked_example() {
        let input = example7();
        let out = theta(&input, AlternatingType::PosUD).unwrap();
        assert_eq!(out.n(), 15);
        assert_eq!(out.diagram().columns(), &[3, 5, 11, 15]);
        assert_eq!(out.empty_positive_rows(), vec![1, 2, 4, 7, 9, 10, 13, 14]);
        assert_eq!(
            zeta(&out),
            perm(&[1, 2, -6, 4, 3, 12, 7, 11, 9, 10, -8, 15, 13, 14, 5])
        );
        assert_eq!(psi(&out, AlternatingType::PosUD).unwrap(), input);
    }

    #[test]
    fn tiny_lifts() {
        // ζ = [2, 1], class B.
        let d = ShiftedDiagramB::new(2, vec![2]).unwrap();
        let swap = PermutationTableauB::new(d, vec![vec![0], vec![1]]).unwrap();

        let out = theta(&swap, AlternatingType::PosUD).unwrap();
        assert_eq!(zeta(&out), perm(&[1, 5, 3, 4, 2]));
        assert_eq!(psi(&out, AlternatingType::PosUD).unwrap(), swap);

        let out = theta(&swap, AlternatingType::PosDU).unwrap();
        assert_eq!(zeta(&out), perm(&[4, 2, 3, 1]));
        assert_eq!(psi(&out, AlternatingType::PosDU).unwrap(), swap);

        // ζ = [-1], class minus: -UD keeps it fixed (no insertions)…
        let d = ShiftedDiagramB::new(1, vec![1]).unwrap();
        let neg = PermutationTableauB::new(d, vec![vec![1]]).unwrap();
        let out = theta(&neg, AlternatingType::NegUD).unwrap();
        assert_eq!(out, neg);
        assert_eq!(psi(&out, AlternatingType::NegUD).unwrap(), neg);
        // …and +DU and +UD accept it too (B includes minus).
        assert_eq!(zeta(&theta(&neg, AlternatingType::PosDU).unwrap()), perm(&[1, -2]));
        assert_eq!(
            zeta(&theta(&neg, AlternatingType::PosUD).unwrap()),
            perm(&[1, 2, -3])
        );

        // ζ = [-2, -1], class minus.
        let d = ShiftedDiagramB::new(2, vec![1, 2]).unwrap();
        let t = PermutationTableauB::new(d, vec![vec![1], vec![1, 1]]).unwrap();
        assert_eq!(zeta(&t), perm(&[-2, -1]));
        let out = theta(&t, AlternatingType::NegUD).unwrap();
        assert_eq!(zeta(&out), perm(&[-3, 2, -1]));
        assert_eq!(psi(&out, AlternatingType::NegUD).unwrap(), t);

        // ζ = [-1, -2], class minus-D: -DU at m = 2 inserts nothing.
        let d = ShiftedDiagramB::new(2, vec![1, 2]).unwrap();
        let t = PermutationTableauB::new(d, vec![vec![1], vec![0, 1]]).unwrap();
        assert_eq!(zeta(&t), perm(&[-1, -2]));
        let out = theta(&t, AlternatingType::NegDU).unwrap();
        assert_eq!(out, t);
        assert_eq!(psi(&out, AlternatingType::NegDU).unwrap(), t);
    }

    #[test]
    fn theta_rejects_out_of_class_inputs() {
        // example7 maps to class minus, not minus-D.
        let err = theta(&example7(), AlternatingType::NegDU).unwrap_err();
        assert!(matches!(err, Error::WrongDerangementClass { .. }), "{err}");

        // example8 maps to class B: fine for +DU/+UD, rejected for -UD.
        assert!(theta(&example8(), AlternatingType::PosDU).is_ok());
        let err = theta(&example8(), AlternatingType::NegUD).unwrap_err();
        assert!(matches!(err, Error::WrongDerangementClass { .. }), "{err}");

        // A non-derangement image ([1]) is rejected for every type.
        let id = PermutationTableauB::zero_filled(ShiftedDiagramB::new(1, vec![]).unwrap());
        for t in AlternatingType::ALL {
            let err = theta(&id, t).unwrap_err();
            assert!(matches!(err, Error::WrongDerangementClass { .. }), "{err}");
        }

        // Invalid fillings are rejected before anything else.
        let broken = PermutationTableauB::zero_filled(ShiftedDiagramB::new(2, vec![2]).unwrap());
        let err = theta(&broken, AlternatingType::PosDU).unwrap_err();
        assert!(matches!(err, Error::InvalidTableau(_)), "{err}");
    }

    #[test]
    fn psi_rejects_bad_inputs() {
        let lifted = theta(&example7(), AlternatingType::PosDU).unwrap();

        // Wrong target type.
        let err = psi(&lifted, AlternatingType::PosUD).unwrap_err();
        assert!(matches!(err, Error::NotAlternating { .. }), "{err}");

        // Wrong parity: ζ = [-1, -2, 3] is alternating -DU with one fixed
        // point (the -DU maximum at length 3), but -DU pairs even lengths.
        let d = ShiftedDiagramB::new(3, vec![1, 2]).unwrap();
        let t = PermutationTableauB::new(d, vec![vec![1], vec![0, 1], vec![]]).unwrap();
        assert_eq!(zeta(&t), perm(&[-1, -2, 3]));
        let err = psi(&t, AlternatingType::NegDU).unwrap_err();
        assert!(matches!(err, Error::ParityMismatch { .. }), "{err}");

        // Alternating at the right parity but below the fixed-point maximum:
        // ζ = [2, -1] is +DU with no fixed point, maximum is 1.
        let d = ShiftedDiagramB::new(2, vec![2]).unwrap();
        let t = PermutationTableauB::new(d, vec![vec![1], vec![1]]).unwrap();
        assert_eq!(zeta(&t), perm(&[2, -1]));
        let err = psi(&t, AlternatingType::PosDU).unwrap_err();
        assert!(
            matches!(err, Error::FixedPointsNotMaximal { required: 1, found: 0, .. }),
            "{err}"
        );

        // +UD at n = 1 would delete down to length zero.
        let id = PermutationTableauB::zero_filled(ShiftedDiagramB::new(1, vec![]).unwrap());
        let err = psi(&id, AlternatingType::PosUD).unwrap_err();
        assert!(matches!(err, Error::EmptyResult(_)), "{err}");
    }
}
