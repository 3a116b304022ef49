//! Permutation tableaux of type B and their zigzag map to signed
//! permutations.
//!
//! A permutation tableau of type B is a 0/1 filling of a shifted diagram
//! ([`ShiftedDiagramB`]) subject to three rules: every column contains a 1,
//! no 0 has a 1 above it in its column and a 1 to its left in its row, and a
//! 0 on the diagonal forces its whole row to 0. The zigzag map [`zeta`]
//! sends each such tableau to a signed permutation by walking from every row
//! and column border alternately south and east, turning at each 1; it is a
//! bijection onto the hyperoctahedral group.
//!
//! On top of ζ, [`theta`] and [`psi`] realize, for each of the four
//! alternating types, a bijection between derangement tableaux of a fixed
//! class and tableaux whose image is alternating with the maximal number of
//! fixed points — insertion and deletion of empty rows in the positive part
//! of the diagram. The [`enumerate`] module provides exhaustive generators,
//! counting, and machine-checkable verification of the identities these maps
//! witness.
//!
//! ```
//! use tableaux_b::{zeta, zeta_inverse, SignedPermutation};
//!
//! let sigma = SignedPermutation::from_window(vec![2, -1, 3]).unwrap();
//! let t = zeta_inverse(&sigma).unwrap();
//! assert_eq!(zeta(&t), sigma);
//! ```

pub mod bijections;
pub mod enumerate;
pub mod error;
pub mod signed;
pub mod tableau;
pub mod zigzag;

#[cfg(test)]
pub(crate) mod fixtures;

pub use bijections::{insertion_plan, psi, theta, GapInsertion, InsertionPlan};
pub use error::{Error, Result};
pub use signed::{AlternatingType, AlternatingTypeSet, DerangementClass, SignedPermutation};
pub use tableau::{PermutationTableauB, ShiftedDiagramB, Violation, MAX_N};
pub use zigzag::{
    zeta, zeta_inverse, zeta_inverse_bounded, zeta_with_traces, ZigzagStart, ZigzagTrace,
    DEFAULT_INVERSE_BOUND,
};
