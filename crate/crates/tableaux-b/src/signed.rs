//! Signed permutations in window notation, alternating patterns, fixed
//! points, and derangement classes.
//!
//! A signed permutation of `[n] = {1, …, n}` is a bijection `σ` of
//! `{-n, …, -1, 1, …, n}` with `σ(-i) = -σ(i)`. It is written in window
//! notation as `[σ(1), …, σ(n)]`; the window determines the rest.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// The four alternating patterns for signed permutations.
///
/// The sign compares the first window entry with zero (`Neg`: `0 > σ(1)`,
/// `Pos`: `0 < σ(1)`); the suffix gives the first comparison inside the
/// window (`DU`: `σ(1) > σ(2)` — a descent — `UD`: `σ(1) < σ(2)`), and the
/// comparisons alternate from there. `PosDU` windows are also called snakes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlternatingType {
    /// `0 > σ(1) > σ(2) < σ(3) > σ(4) < …`
    NegDU,
    /// `0 > σ(1) < σ(2) > σ(3) < σ(4) > …`
    NegUD,
    /// `0 < σ(1) > σ(2) < σ(3) > σ(4) < …`
    PosDU,
    /// `0 < σ(1) < σ(2) > σ(3) < σ(4) > …`
    PosUD,
}

impl AlternatingType {
    /// All four types, in the fixed order `-DU, -UD, +DU, +UD`.
    pub const ALL: [AlternatingType; 4] = [
        AlternatingType::NegDU,
        AlternatingType::NegUD,
        AlternatingType::PosDU,
        AlternatingType::PosUD,
    ];

    /// `true` when the pattern requires `σ(1) < 0`.
    pub fn first_negative(self) -> bool {
        matches!(self, AlternatingType::NegDU | AlternatingType::NegUD)
    }

    /// `true` when the first in-window comparison is a descent.
    pub fn starts_with_descent(self) -> bool {
        matches!(self, AlternatingType::NegDU | AlternatingType::PosDU)
    }

    /// Short flag used by the command line and in reports: `-DU`, `-UD`,
    /// `+DU`, or `+UD`.
    pub fn flag(self) -> &'static str {
        match self {
            AlternatingType::NegDU => "-DU",
            AlternatingType::NegUD => "-UD",
            AlternatingType::PosDU => "+DU",
            AlternatingType::PosUD => "+UD",
        }
    }

    /// The maximal number of fixed points an alternating window of this type
    /// and length `n` can have:
    ///
    /// * `-DU`: `⌈(n-2)/2⌉`
    /// * `-UD`: `⌈(n-1)/2⌉`
    /// * `+DU`: `⌈n/2⌉`
    /// * `+UD`: `⌈(n+1)/2⌉`
    pub fn max_fixed_points(self, n: usize) -> usize {
        let shifted = match self {
            AlternatingType::NegDU => n as i64 - 2,
            AlternatingType::NegUD => n as i64 - 1,
            AlternatingType::PosDU => n as i64,
            AlternatingType::PosUD => n as i64 + 1,
        };
        // ⌈a/2⌉ = ⌊(a+1)/2⌋, clamped at zero for n = 1.
        (shifted + 1).div_euclid(2).max(0) as usize
    }

    /// The derangement class paired with this type: `-DU ↔ B^{-D}`,
    /// `-UD ↔ B^-`, `+DU`/`+UD ↔ B`.
    pub fn derangement_class(self) -> DerangementClass {
        match self {
            AlternatingType::NegDU => DerangementClass::MinusD,
            AlternatingType::NegUD => DerangementClass::Minus,
            AlternatingType::PosDU | AlternatingType::PosUD => DerangementClass::B,
        }
    }

    /// `true` when alternating windows of length `n` with maximal fixed
    /// points pair with derangements under this type (`DU` types pair even
    /// lengths, `UD` types pair odd lengths).
    pub fn pairs_length(self, n: usize) -> bool {
        match self {
            AlternatingType::NegDU | AlternatingType::PosDU => n.is_multiple_of(2),
            AlternatingType::NegUD | AlternatingType::PosUD => !n.is_multiple_of(2),
        }
    }

    /// Human-readable parity requirement, for error messages.
    pub fn expected_parity(self) -> &'static str {
        if self.pairs_length(0) {
            "even"
        } else {
            "odd"
        }
    }

    /// Length `m` of the derangement paired with an alternating window of
    /// length `n`, or `None` when the parity does not match:
    /// `m = (n+2)/2, (n+1)/2, n/2, (n-1)/2` for `-DU, -UD, +DU, +UD`.
    pub fn derangement_length(self, n: usize) -> Option<usize> {
        if !self.pairs_length(n) {
            return None;
        }
        Some(match self {
            AlternatingType::NegDU => (n + 2) / 2,
            AlternatingType::NegUD => n.div_ceil(2),
            AlternatingType::PosDU => n / 2,
            AlternatingType::PosUD => (n - 1) / 2,
        })
    }

    /// Length `n` of the alternating window produced from a derangement of
    /// length `m`: `n = 2m-2, 2m-1, 2m, 2m+1` for `-DU, -UD, +DU, +UD`.
    ///
    /// Requires `m ≥ 2` for `-DU` and `m ≥ 1` for `-UD` (below that the
    /// paired derangement class is empty anyway).
    pub fn alternating_length(self, m: usize) -> usize {
        match self {
            AlternatingType::NegDU => 2 * m - 2,
            AlternatingType::NegUD => 2 * m - 1,
            AlternatingType::PosDU => 2 * m,
            AlternatingType::PosUD => 2 * m + 1,
        }
    }

    /// Number of insertions performed when lifting a derangement tableau of
    /// length `m` to this type: `m-2, m-1, m, m+1` for `-DU, -UD, +DU, +UD`.
    ///
    /// This equals [`Self::max_fixed_points`] at the paired length.
    pub fn insertion_count(self, m: usize) -> usize {
        match self {
            AlternatingType::NegDU => m - 2,
            AlternatingType::NegUD => m - 1,
            AlternatingType::PosDU => m,
            AlternatingType::PosUD => m + 1,
        }
    }
}

impl fmt::Display for AlternatingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.flag())
    }
}

impl FromStr for AlternatingType {
    type Err = Error;

    /// Accepts the symbolic flags `-DU`, `-UD`, `+DU`, `+UD` (any case) and
    /// the sign-free aliases `ndu`, `nud`, `pdu`, `pud`.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "-du" | "ndu" => Ok(AlternatingType::NegDU),
            "-ud" | "nud" => Ok(AlternatingType::NegUD),
            "+du" | "pdu" => Ok(AlternatingType::PosDU),
            "+ud" | "pud" => Ok(AlternatingType::PosUD),
            other => Err(Error::InvalidWindow(format!(
                "unknown alternating type {other:?}; expected one of -DU, -UD, +DU, +UD (or ndu, nud, pdu, pud)"
            ))),
        }
    }
}

/// A set of alternating types.
///
/// Classification is set-valued because a window of length one matches two
/// patterns at once: `[1]` matches both `+DU` and `+UD`, and `[-1]` both
/// `-DU` and `-UD`. For length two and beyond at most one type matches.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct AlternatingTypeSet(u8);

impl AlternatingTypeSet {
    /// The empty set.
    pub fn empty() -> Self {
        AlternatingTypeSet(0)
    }

    fn bit(t: AlternatingType) -> u8 {
        match t {
            AlternatingType::NegDU => 1,
            AlternatingType::NegUD => 2,
            AlternatingType::PosDU => 4,
            AlternatingType::PosUD => 8,
        }
    }

    /// Adds a type to the set.
    pub fn insert(&mut self, t: AlternatingType) {
        self.0 |= Self::bit(t);
    }

    /// `true` when `t` is in the set.
    pub fn contains(self, t: AlternatingType) -> bool {
        self.0 & Self::bit(t) != 0
    }

    /// Number of types in the set.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// `true` when no type matches.
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The matching types in the fixed order `-DU, -UD, +DU, +UD`.
    pub fn iter(self) -> impl Iterator<Item = AlternatingType> {
        AlternatingType::ALL.into_iter().filter(move |&t| self.contains(t))
    }
}

impl fmt::Debug for AlternatingTypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, t) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(t.flag())?;
        }
        f.write_str("}")
    }
}

impl FromIterator<AlternatingType> for AlternatingTypeSet {
    fn from_iter<I: IntoIterator<Item = AlternatingType>>(iter: I) -> Self {
        let mut set = AlternatingTypeSet::empty();
        for t in iter {
            set.insert(t);
        }
        set
    }
}

/// Nested derangement classes of signed permutations.
///
/// `B` is the full class (no fixed point, i.e. no `i > 0` with `σ(i) = i`);
/// `Minus` additionally requires `σ(1) < 0`; `MinusD` additionally requires
/// `σ(2) < σ(1)`, and therefore only exists for `n ≥ 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerangementClass {
    /// All derangements.
    B,
    /// Derangements with `σ(1) < 0`.
    Minus,
    /// Derangements with `σ(2) < σ(1) < 0` (requires `n ≥ 2`).
    MinusD,
}

impl DerangementClass {
    /// All three classes, from coarsest to finest.
    pub const ALL: [DerangementClass; 3] = [
        DerangementClass::B,
        DerangementClass::Minus,
        DerangementClass::MinusD,
    ];

    fn rank(self) -> u8 {
        match self {
            DerangementClass::B => 0,
            DerangementClass::Minus => 1,
            DerangementClass::MinusD => 2,
        }
    }

    /// Class inclusion: `B ⊇ Minus ⊇ MinusD`. A permutation whose finest
    /// class is `other` belongs to `self` exactly when this returns `true`.
    pub fn includes(self, other: DerangementClass) -> bool {
        self.rank() <= other.rank()
    }

    /// Name used by the command line: `b`, `minus`, or `minus-d`.
    pub fn label(self) -> &'static str {
        match self {
            DerangementClass::B => "B",
            DerangementClass::Minus => "minus",
            DerangementClass::MinusD => "minus-D",
        }
    }
}

impl fmt::Display for DerangementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for DerangementClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b" => Ok(DerangementClass::B),
            "minus" => Ok(DerangementClass::Minus),
            "minus-d" | "minusd" => Ok(DerangementClass::MinusD),
            other => Err(Error::InvalidWindow(format!(
                "unknown derangement class {other:?}; expected b, minus, or minus-d"
            ))),
        }
    }
}

/// A signed permutation, stored as its window `[σ(1), …, σ(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    /// Builds a signed permutation from a window.
    ///
    /// The window must be non-empty, contain no zero, and use each absolute
    /// value in `1..=n` exactly once, where `n` is the window length.
    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        validate_window(&window).map_err(Error::InvalidWindow)?;
        Ok(SignedPermutation { window })
    }

    /// Builds a window that enumeration has already proven valid.
    pub(crate) fn from_window_unchecked(window: Vec<i32>) -> Self {
        debug_assert!(validate_window(&window).is_ok());
        SignedPermutation { window }
    }

    /// The identity permutation of `[n]` (requires `n ≥ 1`).
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_window((1..=n as i32).collect())
    }

    /// Window length `n`.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// The window `[σ(1), …, σ(n)]`.
    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// The image `σ(i)` for `1 ≤ i ≤ n`.
    ///
    /// # Panics
    ///
    /// Panics when `i` is out of range.
    pub fn image(&self, i: usize) -> i32 {
        assert!(
            (1..=self.n()).contains(&i),
            "position {i} out of range 1..={}",
            self.n()
        );
        self.window[i - 1]
    }

    /// The fixed points: all `i > 0` with `σ(i) = i`, in increasing order.
    /// (`σ(i) = -i` is not a fixed point.)
    pub fn fixed_points(&self) -> Vec<usize> {
        slice_fixed_points(&self.window).collect()
    }

    /// Number of fixed points.
    pub fn fixed_point_count(&self) -> usize {
        slice_fixed_points(&self.window).count()
    }

    /// The set of alternating patterns this window matches. Empty when the
    /// window is not alternating; two patterns match only at length one.
    pub fn alternating_types(&self) -> AlternatingTypeSet {
        slice_alternating_types(&self.window)
    }

    /// The unique matching alternating pattern.
    ///
    /// Returns `Ok(None)` for a non-alternating window and an error for the
    /// length-one windows, which match two patterns at once; use
    /// [`Self::alternating_types`] to observe those.
    pub fn alternating_type(&self) -> Result<Option<AlternatingType>> {
        let set = self.alternating_types();
        match set.len() {
            0 => Ok(None),
            1 => Ok(set.iter().next()),
            _ => Err(Error::AmbiguousAlternatingType(self.to_string())),
        }
    }

    /// `true` when the window matches the pattern `t`.
    pub fn is_alternating(&self, t: AlternatingType) -> bool {
        slice_matches_type(&self.window, t)
    }

    /// The finest derangement class containing this permutation, or `None`
    /// when it has a fixed point. `MinusD` requires `n ≥ 2`, so `[-1]` is
    /// classified as `Minus`.
    pub fn derangement_class(&self) -> Option<DerangementClass> {
        slice_derangement_class(&self.window)
    }

    /// `true` when the permutation is a derangement lying in `class`
    /// (class membership is inclusive: every `MinusD` derangement is also
    /// in `Minus` and in `B`).
    pub fn in_derangement_class(&self, class: DerangementClass) -> bool {
        self.derangement_class()
            .is_some_and(|finest| class.includes(finest))
    }
}

impl fmt::Display for SignedPermutation {
    /// Comma-separated window, e.g. `2,7,-5,6,-4,1,8,-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.window.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPermutation[{self}]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses a comma-separated window such as `2,7,-5,6,-4,1,8,-3`.
    /// ASCII `-` and the typographic minus `−` are both accepted.
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.replace('−', "-");
        let entries = normalized
            .split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<i32>()
                    .map_err(|_| Error::InvalidWindow(format!("cannot parse entry {part:?}")))
            })
            .collect::<Result<Vec<i32>>>()?;
        SignedPermutation::from_window(entries)
    }
}

#[derive(Serialize, Deserialize)]
struct WindowWire {
    n: usize,
    window: Vec<i32>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        WindowWire {
            n: self.n(),
            window: self.window.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = WindowWire::deserialize(deserializer)?;
        if wire.n != wire.window.len() {
            return Err(D::Error::custom(format!(
                "window length {} does not match n = {}",
                wire.window.len(),
                wire.n
            )));
        }
        SignedPermutation::from_window(wire.window).map_err(D::Error::custom)
    }
}

fn validate_window(window: &[i32]) -> std::result::Result<(), String> {
    let n = window.len();
    if n == 0 {
        return Err("window must be non-empty".to_string());
    }
    let mut seen = vec![false; n + 1];
    for &v in window {
        if v == 0 {
            return Err("window entries must be non-zero".to_string());
        }
        let a = v.unsigned_abs() as usize;
        if a > n {
            return Err(format!("entry {v} out of range for n = {n}"));
        }
        if seen[a] {
            return Err(format!("absolute value {a} appears twice"));
        }
        seen[a] = true;
    }
    Ok(())
}

/// Fixed points of a raw window, for allocation-free scans.
pub(crate) fn slice_fixed_points(window: &[i32]) -> impl Iterator<Item = usize> + '_ {
    window
        .iter()
        .enumerate()
        .filter(|(idx, &v)| v == *idx as i32 + 1)
        .map(|(idx, _)| idx + 1)
}

pub(crate) fn slice_fixed_point_count(window: &[i32]) -> usize {
    slice_fixed_points(window).count()
}

/// Pattern test on a raw window.
pub(crate) fn slice_matches_type(window: &[i32], t: AlternatingType) -> bool {
    if window.is_empty() {
        return false;
    }
    if (window[0] < 0) != t.first_negative() {
        return false;
    }
    for k in 1..window.len() {
        let descent = window[k - 1] > window[k];
        let expect_descent = t.starts_with_descent() == (k % 2 == 1);
        if descent != expect_descent {
            return false;
        }
    }
    true
}

pub(crate) fn slice_alternating_types(window: &[i32]) -> AlternatingTypeSet {
    AlternatingType::ALL
        .into_iter()
        .filter(|&t| slice_matches_type(window, t))
        .collect()
}

/// Finest derangement class of a raw window, or `None` on a fixed point.
pub(crate) fn slice_derangement_class(window: &[i32]) -> Option<DerangementClass> {
    if slice_fixed_points(window).next().is_some() {
        return None;
    }
    Some(if window[0] < 0 {
        if window.len() >= 2 && window[1] < window[0] {
            DerangementClass::MinusD
        } else {
            DerangementClass::Minus
        }
    } else {
        DerangementClass::B
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(window: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(window.to_vec()).unwrap()
    }

    #[test]
    fn window_validation_rejects_bad_input() {
        assert!(SignedPermutation::from_window(vec![]).is_err());
        assert!(SignedPermutation::from_window(vec![1, 0]).is_err());
        assert!(SignedPermutation::from_window(vec![1, 3]).is_err());
        assert!(SignedPermutation::from_window(vec![2, -2]).is_err());
        assert!(SignedPermutation::from_window(vec![1, 2, 2]).is_err());
        assert!(SignedPermutation::from_window(vec![-4, -5, 3, 2]).is_err());
    }

    #[test]
    fn fixed_points_of_lifted_window() {
        let sigma = perm(&[-4, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 1]);
        assert_eq!(sigma.fixed_points(), vec![3, 6, 8, 9, 12, 13]);
        assert_eq!(sigma.fixed_point_count(), 6);
    }

    #[test]
    fn classification_is_unique_beyond_length_one() {
        let sigma = perm(&[-4, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 1]);
        assert_eq!(sigma.alternating_type().unwrap(), Some(AlternatingType::NegDU));
        let set = sigma.alternating_types();
        assert_eq!(set.len(), 1);
        assert!(set.contains(AlternatingType::NegDU));

        assert_eq!(
            perm(&[-4, 2, 1, 10, 5, 9, 7, 8, -6, 13, 11, 12, 3])
                .alternating_type()
                .unwrap(),
            Some(AlternatingType::NegUD)
        );
        assert_eq!(
            perm(&[1, -5, 3, 2, 11, 6, 10, 8, 9, -7, 14, 12, 13, 4])
                .alternating_type()
                .unwrap(),
            Some(AlternatingType::PosDU)
        );
        assert_eq!(
            perm(&[1, 2, -6, 4, 3, 12, 7, 11, 9, 10, -8, 15, 13, 14, 5])
                .alternating_type()
                .unwrap(),
            Some(AlternatingType::PosUD)
        );
        assert_eq!(perm(&[1, 2, 3]).alternating_type().unwrap(), None);
    }

    #[test]
    fn length_one_windows_are_ambiguous() {
        let pos = perm(&[1]);
        let set = pos.alternating_types();
        assert_eq!(set.len(), 2);
        assert!(set.contains(AlternatingType::PosDU));
        assert!(set.contains(AlternatingType::PosUD));
        assert!(pos.alternating_type().is_err());

        let neg = perm(&[-1]);
        let set = neg.alternating_types();
        assert!(set.contains(AlternatingType::NegDU));
        assert!(set.contains(AlternatingType::NegUD));
    }

    #[test]
    fn max_fixed_points_closed_forms() {
        use AlternatingType::*;
        assert_eq!(NegDU.max_fixed_points(8), 3);
        assert_eq!(NegUD.max_fixed_points(7), 3);
        assert_eq!(PosDU.max_fixed_points(8), 4);
        assert_eq!(PosUD.max_fixed_points(7), 4);
        // Small lengths, including the clamp at zero.
        assert_eq!(NegDU.max_fixed_points(1), 0);
        assert_eq!(NegDU.max_fixed_points(2), 0);
        assert_eq!(NegUD.max_fixed_points(1), 0);
        assert_eq!(PosDU.max_fixed_points(1), 1);
        assert_eq!(PosUD.max_fixed_points(1), 1);
        assert_eq!(PosUD.max_fixed_points(15), 8);
        assert_eq!(NegDU.max_fixed_points(14), 6);
    }

    #[test]
    fn derangement_classes_are_nested() {
        let minus_d = perm(&[-3, -4, 2, 7, 6, -5, 8, 1]);
        assert_eq!(minus_d.derangement_class(), Some(DerangementClass::MinusD));
        assert!(minus_d.in_derangement_class(DerangementClass::B));
        assert!(minus_d.in_derangement_class(DerangementClass::Minus));
        assert!(minus_d.in_derangement_class(DerangementClass::MinusD));

        let minus = perm(&[-3, 1, 6, 5, -4, 7, 2]);
        assert_eq!(minus.derangement_class(), Some(DerangementClass::Minus));
        assert!(minus.in_derangement_class(DerangementClass::B));
        assert!(!minus.in_derangement_class(DerangementClass::MinusD));

        let b = perm(&[2, 7, -5, 6, -4, 1, 8, -3]);
        assert_eq!(b.derangement_class(), Some(DerangementClass::B));
        assert!(!b.in_derangement_class(DerangementClass::Minus));

        // -i is not a fixed point, but i is.
        assert_eq!(perm(&[-1]).derangement_class(), Some(DerangementClass::Minus));
        assert_eq!(perm(&[1]).derangement_class(), None);
        assert_eq!(perm(&[2, 1]).derangement_class(), Some(DerangementClass::B));
        assert_eq!(perm(&[1, -2]).derangement_class(), None);
    }

    #[test]
    fn paired_lengths_round_trip() {
        use AlternatingType::*;
        for (t, m, n) in [
            (NegDU, 8, 14),
            (NegUD, 7, 13),
            (PosDU, 7, 14),
            (PosUD, 7, 15),
            (NegDU, 2, 2),
            (NegUD, 1, 1),
            (PosDU, 1, 2),
            (PosUD, 1, 3),
        ] {
            assert_eq!(t.alternating_length(m), n);
            assert_eq!(t.derangement_length(n), Some(m));
            assert_eq!(t.insertion_count(m), n - m, "insertions for {t} at m={m}");
            assert_eq!(t.max_fixed_points(n), n - m);
        }
        assert_eq!(NegDU.derangement_length(13), None);
        assert_eq!(PosUD.derangement_length(14), None);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let sigma = perm(&[2, 7, -5, 6, -4, 1, 8, -3]);
        let text = sigma.to_string();
        assert_eq!(text, "2,7,-5,6,-4,1,8,-3");
        assert_eq!(text.parse::<SignedPermutation>().unwrap(), sigma);
        // Typographic minus and spaces are tolerated on input.
        assert_eq!("2, 7, −5, 6, −4, 1, 8, −3".parse::<SignedPermutation>().unwrap(), sigma);
        assert!("1,,2".parse::<SignedPermutation>().is_err());
        assert!("1,zwei".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn json_round_trip_and_shape() {
        let sigma = perm(&[2, -1, 3]);
        let text = serde_json::to_string(&sigma).unwrap();
        assert_eq!(text, r#"{"n":3,"window":[2,-1,3]}"#);
        let back: SignedPermutation = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sigma);
        assert!(serde_json::from_str::<SignedPermutation>(r#"{"n":2,"window":[2,-1,3]}"#).is_err());
        assert!(serde_json::from_str::<SignedPermutation>(r#"{"n":2,"window":[2,2]}"#).is_err());
    }

    #[test]
    fn flag_parsing_accepts_aliases() {
        for (t, flag, alias) in [
            (AlternatingType::NegDU, "-DU", "ndu"),
            (AlternatingType::NegUD, "-UD", "nud"),
            (AlternatingType::PosDU, "+DU", "pdu"),
            (AlternatingType::PosUD, "+UD", "pud"),
        ] {
            assert_eq!(flag.parse::<AlternatingType>().unwrap(), t);
            assert_eq!(alias.parse::<AlternatingType>().unwrap(), t);
            assert_eq!(flag.to_ascii_lowercase().parse::<AlternatingType>().unwrap(), t);
            assert_eq!(t.flag(), flag);
        }
        assert!("du".parse::<AlternatingType>().is_err());
    }
}
