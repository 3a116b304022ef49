//! Crate-wide error type.

use thiserror::Error;

use crate::signed::{AlternatingType, DerangementClass};
use crate::tableau::Violation;

/// Errors reported by constructors, bijections, and bounded searches.
#[derive(Debug, Error)]
pub enum Error {
    /// A window failed the signed-permutation invariants.
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// A diagram constructor was given an out-of-range or duplicate column.
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    /// A filling does not match the geometry of its diagram.
    #[error("filling does not match diagram: {0}")]
    ShapeMismatch(String),

    /// An operation required a valid tableau, but the filling violates the
    /// tableau conditions.
    #[error("invalid tableau: {}", summarize(.0))]
    InvalidTableau(Vec<Violation>),

    /// The window matches more than one alternating type (only length-one
    /// windows do), so a single type cannot be reported.
    #[error("window {0} matches more than one alternating type")]
    AmbiguousAlternatingType(String),

    /// An insertion input lies outside the derangement class required by the
    /// target alternating type.
    #[error("insertion for type {required_by} needs a tableau whose image lies in derangement class {required}; found {found}")]
    WrongDerangementClass {
        required_by: AlternatingType,
        required: DerangementClass,
        found: String,
    },

    /// A deletion input is not alternating of the requested type.
    #[error("image {window} is not alternating of type {expected}")]
    NotAlternating {
        expected: AlternatingType,
        window: String,
    },

    /// A deletion input does not attain the maximal number of fixed points
    /// for its type and length.
    #[error("type {alternating_type} at length {n} requires {required} fixed points, found {found}")]
    FixedPointsNotMaximal {
        alternating_type: AlternatingType,
        n: usize,
        required: usize,
        found: usize,
    },

    /// A deletion input has the wrong length parity for the requested type.
    #[error("type {alternating_type} pairs with derangements only at {expected_parity} lengths; n = {n} does not qualify")]
    ParityMismatch {
        alternating_type: AlternatingType,
        n: usize,
        expected_parity: &'static str,
    },

    /// The operation would produce a length-zero object, which this crate
    /// does not represent.
    #[error("operation would produce an empty (length-zero) object: {0}")]
    EmptyResult(String),

    /// A search or enumeration was asked to exceed its configured bound.
    #[error("n = {n} exceeds the configured bound {bound}")]
    BoundExceeded { n: usize, bound: usize },

    /// Malformed serialized input.
    #[error("schema error: {0}")]
    Schema(String),

    /// An internal invariant failed. This indicates a bug in the library,
    /// never bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

fn summarize(violations: &[Violation]) -> String {
    let shown: Vec<String> = violations.iter().take(3).map(|v| v.to_string()).collect();
    let mut out = shown.join("; ");
    if violations.len() > 3 {
        out.push_str(&format!("; … ({} total)", violations.len()));
    }
    out
}
