//! Shared test fixtures: worked-example tableaux used across module tests.

use crate::tableau::{PermutationTableauB, ShiftedDiagramB};

/// The running zigzag example: `n = 8`, `C = {3, 5, 6, 8}`.
/// Its image is `ζ = [2, 7, -5, 6, -4, 1, 8, -3]`.
pub(crate) fn example8() -> PermutationTableauB {
    let d = ShiftedDiagramB::new(8, vec![3, 5, 6, 8]).unwrap();
    // Rows top to bottom: -8, -6, -5, -3, 1, 2, 4, 7; cells left to right
    // along columns 8, 6, 5, 3.
    PermutationTableauB::new(
        d,
        vec![
            vec![1],
            vec![0, 0],
            vec![1, 1, 1],
            vec![1, 1, 1, 1],
            vec![0, 0, 0, 1],
            vec![1, 1, 1, 1],
            vec![0, 1, 1],
            vec![1],
        ],
    )
    .unwrap()
}

/// Derangement-side input shared by the `-UD`, `+DU`, and `+UD` insertion
/// walkthroughs: `m = 7`, `C = {1, 2, 5, 7}`, positive shape `(2, 2, 1)`.
/// Its image is `ζ = [-3, 1, 6, 5, -4, 7, 2]`, a derangement in class
/// `minus` (so outside `minus-D`).
pub(crate) fn example7() -> PermutationTableauB {
    let d = ShiftedDiagramB::new(7, vec![1, 2, 5, 7]).unwrap();
    // Rows: -7, -5, -2, -1, 3, 4, 6; columns left to right: 7, 5, 2, 1.
    PermutationTableauB::new(
        d,
        vec![
            vec![0],
            vec![1, 1],
            vec![0, 0, 0],
            vec![0, 1, 1, 1],
            vec![1, 1],
            vec![0, 1],
            vec![1],
        ],
    )
    .unwrap()
}

/// Derangement-side input for the `-DU` insertion walkthrough: `m = 8`,
/// `C = {1, 2, 3, 6, 8}`, positive shape `(2, 2, 1)`. Its image is
/// `ζ = [-3, -4, 2, 7, 6, -5, 8, 1]`, a derangement in class `minus-D`.
pub(crate) fn negdu8() -> PermutationTableauB {
    let d = ShiftedDiagramB::new(8, vec![1, 2, 3, 6, 8]).unwrap();
    // Rows: -8, -6, -3, -2, -1, 4, 5, 7; columns left to right: 8, 6, 3, 2, 1.
    PermutationTableauB::new(
        d,
        vec![
            vec![0],
            vec![1, 1],
            vec![0, 0, 0],
            vec![0, 1, 0, 1],
            vec![0, 0, 1, 1, 1],
            vec![1, 1],
            vec![0, 1],
            vec![1],
        ],
    )
    .unwrap()
}
