//! Exhaustive generators, brute-force counters, and theorem verifiers.
//!
//! Everything here is deliberately independent of the maps it is used to
//! check: windows are generated by direct backtracking over values, tableaux
//! by backtracking over fillings pruned with the three tableau conditions,
//! and the reference sequences ([`springer_number`], [`derangement_number`])
//! come from their own recursions. [`verify`] runs one named statement over
//! all sizes up to a requested maximum and reports, per size, the two sides
//! of the counted identity (or the conforming/population counts of a
//! structural claim).
//!
//! Full scans of `S_n^B` touch `2^n·n!` windows and full tableau generation
//! is comparable, so both are capped by [`Bounds`]; the defaults keep every
//! check in seconds. The scans parallelize over the first window entry.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bijections::{psi, theta};
use crate::signed::{
    slice_alternating_types, slice_derangement_class, slice_fixed_point_count, slice_matches_type,
    AlternatingType, DerangementClass, SignedPermutation,
};
use crate::tableau::{PermutationTableauB, ShiftedDiagramB, MAX_N};
use crate::zigzag::{zeta, zeta_inverse_bounded};
use crate::{Error, Result};

/// Default cap on sizes that require scanning all of `S_n^B`
/// (`2^8·8! ≈ 10.3` million windows).
pub const DEFAULT_PERMUTATION_BOUND: usize = 8;

/// Default cap on sizes that require generating every tableau
/// (`2^6·6! = 46080` tableaux).
pub const DEFAULT_TABLEAU_BOUND: usize = 6;

/// Caps on the exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` for which `S_n^B` may be scanned.
    pub permutations: usize,
    /// Largest `n` for which all tableaux may be generated.
    pub tableaux: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            permutations: DEFAULT_PERMUTATION_BOUND,
            tableaux: DEFAULT_TABLEAU_BOUND,
        }
    }
}

impl Bounds {
    /// Both caps set to `n`.
    pub fn uniform(n: usize) -> Self {
        Bounds { permutations: n, tableaux: n }
    }

    fn check_permutations(&self, n: usize) -> Result<()> {
        if n > self.permutations {
            Err(Error::BoundExceeded { n, bound: self.permutations })
        } else {
            Ok(())
        }
    }

    fn check_tableaux(&self, n: usize) -> Result<()> {
        if n > self.tableaux {
            Err(Error::BoundExceeded { n, bound: self.tableaux })
        } else {
            Ok(())
        }
    }
}

/// The window values `-n, …, -1, 1, …, n` in increasing order.
fn signed_values(n: usize) -> impl Iterator<Item = i32> {
    let n = n as i32;
    (-n..=n).filter(|&v| v != 0)
}

fn window_dfs<F: FnMut(&[i32])>(n: usize, buf: &mut Vec<i32>, used: u64, f: &mut F) {
    if buf.len() == n {
        f(buf);
        return;
    }
    for v in signed_values(n) {
        let bit = 1 << (v.unsigned_abs() - 1);
        if used & bit == 0 {
            buf.push(v);
            window_dfs(n, buf, used | bit, f);
            buf.pop();
        }
    }
}

/// Calls `f` with the window of every signed permutation of length `n`, in
/// lexicographic order (values ordered `-n < … < -1 < 1 < … < n`). This is
/// the allocation-free counterpart of [`all_signed_permutations`].
///
/// # Panics
///
/// Panics when `n` is zero or exceeds [`MAX_N`].
pub fn for_each_window<F: FnMut(&[i32])>(n: usize, mut f: F) {
    assert!((1..=MAX_N).contains(&n), "n = {n} out of range");
    let mut buf = Vec::with_capacity(n);
    window_dfs(n, &mut buf, 0, &mut f);
}

/// Folds over all windows of length `n` in parallel, partitioned by the
/// first entry. `merge` must be associative and commutative so the result
/// does not depend on the partitioning.
pub(crate) fn par_fold_windows<A, M, V, R>(n: usize, make: M, visit: V, merge: R) -> A
where
    A: Send,
    M: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[i32]) + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    assert!((1..=MAX_N).contains(&n), "n = {n} out of range");
    let firsts: Vec<i32> = signed_values(n).collect();
    firsts
        .into_par_iter()
        .map(|first| {
            let mut acc = make();
            let mut buf = Vec::with_capacity(n);
            buf.push(first);
            let used = 1u64 << (first.unsigned_abs() - 1);
            window_dfs(n, &mut buf, used, &mut |w: &[i32]| visit(&mut acc, w));
            acc
        })
        .reduce(&make, &merge)
}

fn par_count_windows(n: usize, pred: impl Fn(&[i32]) -> bool + Sync + Send) -> u64 {
    par_fold_windows(
        n,
        || 0u64,
        |acc, w| {
            if pred(w) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// Lazy lexicographic stream of all `2^n·n!` signed permutations of
/// length `n`; see [`all_signed_permutations`].
pub struct SignedPermutations {
    next: Option<Vec<i32>>,
}

/// Returns an iterator over every signed permutation of length `n`, in
/// lexicographic window order (values ordered `-n < … < -1 < 1 < … < n`).
///
/// The stream is lazy; nothing is precomputed, so large `n` are legal even
/// though consuming the full stream is only feasible for small `n`.
///
/// # Panics
///
/// Panics when `n` is zero or exceeds [`MAX_N`].
///
/// # Examples
///
/// ```
/// use tableaux_b::enumerate::all_signed_permutations;
///
/// let windows: Vec<_> = all_signed_permutations(1)
///     .map(|s| s.window().to_vec())
///     .collect();
/// assert_eq!(windows, vec![vec![-1], vec![1]]);
/// assert_eq!(all_signed_permutations(4).count(), 384);
/// ```
pub fn all_signed_permutations(n: usize) -> SignedPermutations {
    assert!((1..=MAX_N).contains(&n), "n = {n} out of range");
    let first = (1..=n).rev().map(|a| -(a as i32)).collect();
    SignedPermutations { next: Some(first) }
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        if advance_window(&mut w) {
            self.next = Some(w);
        }
        Some(SignedPermutation::from_window_unchecked(current))
    }
}

/// Advances `w` to its lexicographic successor; `false` at the last window.
fn advance_window(w: &mut [i32]) -> bool {
    let n = w.len();
    let mut free: u64 = 0;
    for i in (0..n).rev() {
        free |= 1 << (w[i].unsigned_abs() - 1);
        if let Some(v) = next_value_above(w[i], free, n) {
            w[i] = v;
            free &= !(1 << (v.unsigned_abs() - 1));
            // Fill the suffix with the smallest remaining values; the
            // smallest free value is the negation of the largest free
            // absolute value.
            for slot in w.iter_mut().skip(i + 1) {
                let a = 64 - free.leading_zeros();
                *slot = -(a as i32);
                free &= !(1 << (a - 1));
            }
            return true;
        }
    }
    false
}

/// The smallest value above `v` whose absolute value is in the `free` set.
fn next_value_above(v: i32, free: u64, n: usize) -> Option<i32> {
    let has = |a: u32| free >> (a - 1) & 1 == 1;
    if v < 0 {
        for a in (1..v.unsigned_abs()).rev() {
            if has(a) {
                return Some(-(a as i32));
            }
        }
        for a in 1..=n as u32 {
            if has(a) {
                return Some(a as i32);
            }
        }
    } else {
        for a in (v.unsigned_abs() + 1)..=n as u32 {
            if has(a) {
                return Some(a as i32);
            }
        }
    }
    None
}

/// Calls `f` with every window over `{1, …, n}` (ordinary permutations), in
/// lexicographic order.
fn for_each_positive_window<F: FnMut(&[i32])>(n: usize, mut f: F) {
    fn dfs<F: FnMut(&[i32])>(n: usize, buf: &mut Vec<i32>, used: u64, f: &mut F) {
        if buf.len() == n {
            f(buf);
            return;
        }
        for a in 1..=n {
            if used >> (a - 1) & 1 == 0 {
                buf.push(a as i32);
                dfs(n, buf, used | 1 << (a - 1), f);
                buf.pop();
            }
        }
    }
    let mut buf = Vec::with_capacity(n);
    dfs(n, &mut buf, 0, &mut f);
}

/// Lazy stream of every permutation tableau of type B of length `n`; see
/// [`all_tableaux`].
pub struct Tableaux {
    n: usize,
    next_mask: u128,
    batch: std::vec::IntoIter<PermutationTableauB>,
}

/// Returns an iterator over every permutation tableau of type B of
/// length `n`, subject to the default bound [`DEFAULT_TABLEAU_BOUND`].
///
/// Column sets are visited in ascending order as subsets of `[n]` (the set
/// `{i}` before `{i+1}`, and so on binarily); within one column set the
/// fillings appear in ascending row-pattern order, top row varying slowest.
/// Every valid tableau appears exactly once.
///
/// # Examples
///
/// ```
/// use tableaux_b::enumerate::all_tableaux;
///
/// // ζ is a bijection onto S_2^B, so there are 2²·2! = 8 tableaux.
/// assert_eq!(all_tableaux(2).unwrap().count(), 8);
/// ```
pub fn all_tableaux(n: usize) -> Result<Tableaux> {
    all_tableaux_bounded(n, DEFAULT_TABLEAU_BOUND)
}

/// [`all_tableaux`] with an explicit bound in place of the default.
pub fn all_tableaux_bounded(n: usize, max_n: usize) -> Result<Tableaux> {
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidDiagram(format!(
            "tableaux exist for 1 ≤ n ≤ {MAX_N}, got {n}"
        )));
    }
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    Ok(Tableaux { n, next_mask: 0, batch: Vec::new().into_iter() })
}

impl Iterator for Tableaux {
    type Item = PermutationTableauB;

    fn next(&mut self) -> Option<PermutationTableauB> {
        loop {
            if let Some(t) = self.batch.next() {
                return Some(t);
            }
            if self.next_mask >= 1u128 << self.n {
                return None;
            }
            let mask = self.next_mask;
            self.next_mask += 1;
            self.batch = fillings_for_columns(self.n, mask).into_iter();
        }
    }
}

/// All valid fillings of the diagram whose column set is encoded by `mask`
/// (bit `i-1` set ⇔ `i ∈ C`).
fn fillings_for_columns(n: usize, mask: u128) -> Vec<PermutationTableauB> {
    let columns: Vec<usize> = (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
    let d = ShiftedDiagramB::new(n, columns).expect("mask encodes a valid column set");
    let c = d.column_count();
    let lens: Vec<usize> = (0..d.row_count()).map(|r| d.row_length_at(r)).collect();

    // Column q's bottommost box sits in the last row longer than q; once the
    // generator passes that row, condition 1 for q is decided.
    let mut closes_at: Vec<u64> = vec![0; d.row_count()];
    for q in 0..c {
        let last = (0..d.row_count())
            .rev()
            .find(|&r| lens[r] > q)
            .expect("every column has at least its diagonal box");
        closes_at[last] |= 1 << q;
    }

    let mut out = Vec::new();
    let mut rows = vec![0u64; d.row_count()];
    fill_rows(&d, &lens, &closes_at, 0, 0, &mut rows, &mut out);
    out
}

fn fill_rows(
    d: &ShiftedDiagramB,
    lens: &[usize],
    closes_at: &[u64],
    r: usize,
    ones_above: u64,
    rows: &mut Vec<u64>,
    out: &mut Vec<PermutationTableauB>,
) {
    if r == d.row_count() {
        out.push(PermutationTableauB::from_bits(d.clone(), rows.clone()));
        return;
    }
    let len = lens[r];
    let negative = r < d.column_count();
    for pattern in 0..(1u64 << len) {
        // Condition 3: a 0 in the diagonal (bit r of a negative row) forces
        // the whole row to 0.
        if negative && pattern >> r & 1 == 0 && pattern != 0 {
            continue;
        }
        if !le_row_ok(pattern, ones_above, len) {
            continue;
        }
        let with = ones_above | pattern;
        // Condition 1 closes for the columns whose last box is in this row.
        if closes_at[r] & !with != 0 {
            continue;
        }
        rows[r] = pattern;
        fill_rows(d, lens, closes_at, r + 1, with, rows, out);
    }
    rows[r] = 0;
}

/// Condition 2 for one row, given the 1s accumulated strictly above it.
fn le_row_ok(pattern: u64, ones_above: u64, len: usize) -> bool {
    let mut one_left = false;
    for q in 0..len {
        let filled = pattern >> q & 1 == 1;
        if !filled && one_left && ones_above >> q & 1 == 1 {
            return false;
        }
        one_left |= filled;
    }
    true
}

/// Which type-A alternating pattern a [`CountObject::TypeA`] query counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeAPattern {
    /// Down-up windows `σ(1) > σ(2) < σ(3) > …` (counted by `d_k(n)`).
    Alternating,
    /// Up-down windows `σ(1) < σ(2) > σ(3) < …` (counted by `d*_k(n)`).
    ReverseAlternating,
}

impl TypeAPattern {
    fn signed_type(self) -> AlternatingType {
        match self {
            TypeAPattern::Alternating => AlternatingType::PosDU,
            TypeAPattern::ReverseAlternating => AlternatingType::PosUD,
        }
    }
}

/// What a [`CountQuery`] counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountObject {
    /// Alternating windows of one type, optionally with a fixed number of
    /// fixed points (`d_k^t(n)` when `fixed_points` is set).
    Alternating {
        alternating_type: AlternatingType,
        fixed_points: Option<usize>,
    },
    /// Derangements in a class, with class membership inclusive
    /// (`D_n^B ⊇ D_n^- ⊇ D_n^{-D}`).
    Derangements { class: DerangementClass },
    /// Valid permutation tableaux of type B.
    Tableaux,
    /// Snakes, i.e. alternating windows of type `+DU` with any number of
    /// fixed points.
    Snakes,
    /// Ordinary (all-positive) alternating permutations, the type-A
    /// restriction (`d_k(n)` / `d*_k(n)` when `fixed_points` is set).
    TypeA {
        pattern: TypeAPattern,
        fixed_points: Option<usize>,
    },
}

/// A brute-force counting request at one length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountQuery {
    pub n: usize,
    pub object: CountObject,
}

/// Counts the requested objects of length `query.n` by exhaustive
/// enumeration, subject to `bounds`.
///
/// # Examples
///
/// ```
/// use tableaux_b::enumerate::{count, Bounds, CountObject, CountQuery};
/// use tableaux_b::DerangementClass;
///
/// let q = CountQuery { n: 2, object: CountObject::Derangements { class: DerangementClass::B } };
/// assert_eq!(count(&q, Bounds::default()).unwrap(), 5);
/// ```
pub fn count(query: &CountQuery, bounds: Bounds) -> Result<u64> {
    let n = query.n;
    if n == 0 || n > MAX_N {
        return Err(Error::InvalidWindow(format!(
            "counts are defined for 1 ≤ n ≤ {MAX_N}, got {n}"
        )));
    }
    match query.object {
        CountObject::Tableaux => {
            bounds.check_tableaux(n)?;
            Ok(all_tableaux_bounded(n, bounds.tableaux)?.count() as u64)
        }
        CountObject::Alternating { alternating_type: t, fixed_points } => {
            bounds.check_permutations(n)?;
            Ok(par_count_windows(n, move |w| {
                slice_matches_type(w, t)
                    && fixed_points.is_none_or(|k| slice_fixed_point_count(w) == k)
            }))
        }
        CountObject::Snakes => {
            bounds.check_permutations(n)?;
            Ok(par_count_windows(n, |w| {
                slice_matches_type(w, AlternatingType::PosDU)
            }))
        }
        CountObject::Derangements { class } => {
            bounds.check_permutations(n)?;
            Ok(par_count_windows(n, move |w| {
                slice_derangement_class(w).is_some_and(|c| class.includes(c))
            }))
        }
        CountObject::TypeA { pattern, fixed_points } => {
            bounds.check_permutations(n)?;
            let t = pattern.signed_type();
            let mut total = 0u64;
            for_each_positive_window(n, |w| {
                if slice_matches_type(w, t)
                    && fixed_points.is_none_or(|k| slice_fixed_point_count(w) == k)
                {
                    total += 1;
                }
            });
            Ok(total)
        }
    }
}

/// `n!` as a `u64`.
///
/// # Panics
///
/// Panics when the result overflows (`n > 20`).
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product::<u64>()
}

/// `|S_n^B| = 2^n · n!`.
pub fn hyperoctahedral_order(n: usize) -> u64 {
    (1u64 << n)
        .checked_mul(factorial(n))
        .expect("2^n·n! overflows u64")
}

/// Ordinary derangement numbers `D_0 = 1, D_1 = 0,
/// D_m = (m-1)(D_{m-1} + D_{m-2})`.
pub fn derangement_number(m: usize) -> u64 {
    let mut prev = 1u64; // D_0
    let mut cur = 0u64; // D_1
    if m == 0 {
        return prev;
    }
    for i in 2..=m {
        let next = (i as u64 - 1) * (cur + prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The Springer number `S_n`, the number of snakes in `S_n^B`, by a rank
/// recursion independent of the window enumerator.
///
/// Build a snake left to right and track only `u`, the number of unused
/// absolute values, and `t`, how many of the `2u` still-placeable values lie
/// below the current entry. Placing a value of rank `g` among those
/// candidates removes its negation too, so the rank carried into the next
/// step is `g` less one if the value was positive (`g ≥ u`). Summing over
/// the admissible ranks of a first positive entry gives `S_n`.
pub fn springer_number(n: usize) -> u64 {
    assert!((1..=20).contains(&n), "springer_number supports 1 ≤ n ≤ 20, got {n}");
    // down[u][t] / up[u][t]: completions with u unused absolute values when
    // the next entry must be smaller / larger than the current one.
    let mut down: Vec<Vec<u64>> = vec![vec![1]];
    let mut up: Vec<Vec<u64>> = vec![vec![1]];
    for u in 1..n {
        let adj = |g: usize| if g >= u { g - 1 } else { g };
        let mut d_row = vec![0u64; 2 * u + 1];
        let mut u_row = vec![0u64; 2 * u + 1];
        for t in 0..=2 * u {
            d_row[t] = (0..t).map(|g| up[u - 1][adj(g)]).sum();
            u_row[t] = (t..2 * u).map(|g| down[u - 1][adj(g)]).sum();
        }
        down.push(d_row);
        up.push(u_row);
    }
    (n..2 * n).map(|g| down[n - 1][g - 1]).sum()
}

/// The machine-checkable statements shipped with this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Closed forms for the maximal fixed-point count of each alternating
    /// type: `⌈(n-2)/2⌉, ⌈(n-1)/2⌉, ⌈n/2⌉, ⌈(n+1)/2⌉`.
    MaxFix,
    /// Maximal-fixed-point alternating windows are equinumerous with the
    /// paired derangement classes; at the opposite parity, `n` is forced to
    /// be a fixed point.
    AltDer,
    /// ζ maps the tableaux of length `n` onto `2^n·n!` distinct windows.
    ZetaBijective,
    /// The four equivalences tying `σ = ζ(T)` to labels, empty rows, and
    /// diagonals of `T`.
    LemBijec,
    /// `ψ∘θ` and `θ∘ψ` are identities on their respective domains.
    RoundTrips,
    /// Comparisons of adjacent window values forced by adjacent rows.
    ConsecRows,
    /// Ordering of negative images forced by the leftmost 1s of adjacent
    /// negative rows.
    LeftmostOnes,
    /// The all-diagonals-zero restriction reproduces the type-A facts:
    /// `n!` tableaux, the `⌈n/2⌉`/`⌈(n+1)/2⌉` maxima, and
    /// `d_{⌈n/2⌉}(n) = D_{⌊n/2⌋}`.
    TypeARestriction,
    /// A maximal-fixed-point alternating window never exceeds its index at
    /// two consecutive positions, and an excedance at `i > 1` is a peak.
    MaxCor,
    /// In any alternating window, runs of consecutive fixed points have
    /// length at most 2, and a run of length 2 starts at an even position.
    FixedPointRuns,
    /// In the positive part of a θ output: at most two consecutive rows are
    /// empty, adjacent empty rows start at the flavor's parity, and no two
    /// adjacent rows are both nonempty.
    CorRclw,
    /// The number of snakes in `S_n^B` equals the Springer number `S_n`.
    Snakes,
}

impl Theorem {
    /// Every verifiable statement, in reporting order.
    pub const ALL: [Theorem; 12] = [
        Theorem::MaxFix,
        Theorem::AltDer,
        Theorem::ZetaBijective,
        Theorem::LemBijec,
        Theorem::RoundTrips,
        Theorem::ConsecRows,
        Theorem::LeftmostOnes,
        Theorem::TypeARestriction,
        Theorem::MaxCor,
        Theorem::FixedPointRuns,
        Theorem::CorRclw,
        Theorem::Snakes,
    ];

    /// Stable kebab-case name, used by the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Theorem::MaxFix => "max-fix",
            Theorem::AltDer => "alt-der",
            Theorem::ZetaBijective => "zeta-bijective",
            Theorem::LemBijec => "lem-bijec",
            Theorem::RoundTrips => "round-trips",
            Theorem::ConsecRows => "consec-rows",
            Theorem::LeftmostOnes => "leftmost-ones",
            Theorem::TypeARestriction => "type-a-restriction",
            Theorem::MaxCor => "max-cor",
            Theorem::FixedPointRuns => "fixed-point-runs",
            Theorem::CorRclw => "cor-rclw",
            Theorem::Snakes => "snakes",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    /// Case-insensitive, with hyphens and underscores optional: `alt-der`,
    /// `altder`, and `ALT_DER` all name [`Theorem::AltDer`].
    fn from_str(s: &str) -> Result<Theorem> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .collect::<String>()
            .to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().replace('-', "") == key)
            .ok_or_else(|| {
                Error::InvalidWindow(format!(
                    "unknown theorem {s:?}; expected one of: {}",
                    Theorem::ALL.map(Theorem::name).join(", ")
                ))
            })
    }
}

impl Serialize for Theorem {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Options for [`verify`].
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest size checked. For most theorems this is the window or tableau
    /// length; for [`Theorem::CorRclw`] it is the derangement length `m`,
    /// and for [`Theorem::RoundTrips`] the alternating length `n` (the
    /// derangement side then reaches `m ≤ n/2 + 1`).
    pub n_max: usize,
    /// Enumeration caps; sizes beyond them are an error, except that
    /// [`Theorem::TypeARestriction`] clamps its tableau rows to the tableau
    /// cap and [`Theorem::RoundTrips`] switches from exhaustive to sampled
    /// checking beyond it.
    pub bounds: Bounds,
    /// Worker threads for the `S_n^B` scans; `None` uses the global pool.
    pub threads: Option<usize>,
    /// Sample size per type and length for the sampled round-trip sizes.
    pub samples: usize,
    /// Seed for the sampled round-trip selection.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 6,
            bounds: Bounds::default(),
            threads: None,
            samples: 1000,
            seed: 0x5EED_1E7A,
        }
    }
}

/// One checked identity or structural claim at one size: for counting
/// claims `lhs` and `rhs` are the two sides; for structural claims `lhs`
/// counts the conforming objects and `rhs` the whole population. In both
/// cases the row passes exactly when `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub n: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub pass: bool,
}

impl ReportRow {
    fn new(case: impl Into<String>, n: usize, lhs: u64, rhs: u64) -> ReportRow {
        ReportRow { case: case.into(), n, lhs, rhs, pass: lhs == rhs }
    }
}

/// The outcome of verifying one theorem over a range of sizes.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub rows: Vec<ReportRow>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    /// `true` when every row passed.
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    /// Renders the report as an aligned text table.
    pub fn render_table(&self) -> String {
        let case_width = self
            .rows
            .iter()
            .map(|r| r.case.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = format!("theorem: {}\n", self.theorem);
        out.push_str(&format!(
            "  {:<case_width$}   {:>3}  {:>12}  {:>12}  result\n",
            "case", "n", "lhs", "rhs"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "  {:<case_width$}   {:>3}  {:>12}  {:>12}  {}\n",
                r.case,
                r.n,
                r.lhs,
                r.rhs,
                if r.pass { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "result: {} ({} rows, {} ms)\n",
            if self.all_pass() { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.elapsed_ms
        ));
        out
    }
}

fn with_pool<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::Internal(format!("failed to build the thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Checks one theorem on every size up to `options.n_max` and reports both
/// sides of each identity. The report is deterministic for fixed options,
/// regardless of thread count.
///
/// # Examples
///
/// ```
/// use tableaux_b::enumerate::{verify, Theorem, VerifyOptions};
///
/// let opts = VerifyOptions { n_max: 3, ..VerifyOptions::default() };
/// let report = verify(Theorem::MaxFix, &opts).unwrap();
/// assert!(report.all_pass());
/// ```
pub fn verify(theorem: Theorem, options: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let rows = with_pool(options.threads, || match theorem {
        Theorem::MaxFix => verify_max_fix(options),
        Theorem::AltDer => verify_alt_der(options),
        Theorem::ZetaBijective => verify_zeta_bijective(options),
        Theorem::LemBijec => verify_tableau_predicate(options, "images", lem_bijec_holds),
        Theorem::RoundTrips => verify_round_trips(options),
        Theorem::ConsecRows => verify_tableau_predicate(options, "adjacent rows", consec_rows_holds),
        Theorem::LeftmostOnes => {
            verify_tableau_predicate(options, "leftmost 1s", leftmost_ones_holds)
        }
        Theorem::TypeARestriction => verify_type_a(options),
        Theorem::MaxCor => verify_max_cor(options),
        Theorem::FixedPointRuns => verify_fixed_point_runs(options),
        Theorem::CorRclw => verify_cor_rclw(options),
        Theorem::Snakes => verify_snakes(options),
    })??;
    Ok(VerificationReport { theorem, rows, elapsed_ms: start.elapsed().as_millis() })
}

/// Fixed-point census of the alternating windows in `S_n^B`: counts per
/// type and fixed-point number, plus — for the parity claims — how many
/// type-`t` windows attain the type's maximum while also fixing `n`.
struct AltCensus {
    by_fixed: [Vec<u64>; 4],
    at_max_fixing_n: [u64; 4],
}

fn alternating_census(n: usize) -> AltCensus {
    let maxes: [usize; 4] =
        core::array::from_fn(|i| AlternatingType::ALL[i].max_fixed_points(n));
    par_fold_windows(
        n,
        || AltCensus {
            by_fixed: core::array::from_fn(|_| vec![0; n + 1]),
            at_max_fixing_n: [0; 4],
        },
        |acc, w| {
            let types = slice_alternating_types(w);
            if types.is_empty() {
                return;
            }
            let k = slice_fixed_point_count(w);
            let fixes_n = w[n - 1] == n as i32;
            for t in types.iter() {
                let ti = t as usize;
                acc.by_fixed[ti][k] += 1;
                if k == maxes[ti] && fixes_n {
                    acc.at_max_fixing_n[ti] += 1;
                }
            }
        },
        |mut a, b| {
            for i in 0..4 {
                for k in 0..=n {
                    a.by_fixed[i][k] += b.by_fixed[i][k];
                }
                a.at_max_fixing_n[i] += b.at_max_fixing_n[i];
            }
            a
        },
    )
}

fn verify_max_fix(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let census = alternating_census(n);
        for t in AlternatingType::ALL {
            let brute = (0..=n)
                .filter(|&k| census.by_fixed[t as usize][k] > 0)
                .max()
                .expect("every type has an alternating window for n ≥ 1");
            rows.push(ReportRow::new(
                format!("{}: max k with d_k(n) ≠ 0", t.flag()),
                n,
                brute as u64,
                t.max_fixed_points(n) as u64,
            ));
        }
    }
    Ok(rows)
}

fn derangement_class_count(m: usize, class: DerangementClass) -> u64 {
    par_count_windows(m, move |w| {
        slice_derangement_class(w).is_some_and(|c| class.includes(c))
    })
}

fn verify_alt_der(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let census = alternating_census(n);
        for t in AlternatingType::ALL {
            let k = t.max_fixed_points(n);
            let at_max = census.by_fixed[t as usize][k];
            if let Some(m) = t.derangement_length(n) {
                let class = t.derangement_class();
                // m = 0 happens only for +UD at n = 1; the empty signed
                // permutation is its own (vacuous) derangement, so the
                // unrestricted class counts one and the σ(1) < 0 classes
                // count zero.
                let rhs = if m == 0 {
                    u64::from(class == DerangementClass::B)
                } else {
                    derangement_class_count(m, class)
                };
                rows.push(ReportRow::new(
                    format!("{}: d_{k}({n}) = D_{m}^{{{}}}", t.flag(), class.label()),
                    n,
                    at_max,
                    rhs,
                ));
            } else {
                // Opposite parity: among the windows attaining the maximum,
                // n itself must be a fixed point — vacuous when the maximum
                // is zero fixed points (only -DU at n = 1).
                let lhs = if k == 0 { at_max } else { census.at_max_fixing_n[t as usize] };
                rows.push(ReportRow::new(
                    format!("{}: off parity forces σ({n}) = {n}", t.flag()),
                    n,
                    lhs,
                    at_max,
                ));
            }
        }
    }
    Ok(rows)
}

fn verify_zeta_bijective(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_tableaux(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let mut total = 0u64;
        let mut images: HashSet<Vec<i32>> = HashSet::new();
        for t in all_tableaux_bounded(n, options.bounds.tableaux)? {
            total += 1;
            images.insert(zeta(&t).window().to_vec());
        }
        let order = hyperoctahedral_order(n);
        rows.push(ReportRow::new("tableaux", n, total, order));
        rows.push(ReportRow::new("distinct ζ images", n, images.len() as u64, order));
    }
    Ok(rows)
}

/// Shared driver for the per-tableau structural lemmas: counts the tableaux
/// of each length on which `holds` is true against the whole population.
fn verify_tableau_predicate(
    options: &VerifyOptions,
    case: &str,
    holds: fn(&PermutationTableauB) -> bool,
) -> Result<Vec<ReportRow>> {
    options.bounds.check_tableaux(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let mut population = 0u64;
        let mut conforming = 0u64;
        for t in all_tableaux_bounded(n, options.bounds.tableaux)? {
            population += 1;
            if holds(&t) {
                conforming += 1;
            }
        }
        rows.push(ReportRow::new(case, n, conforming, population));
    }
    Ok(rows)
}

/// The four equivalences between `σ = ζ(T)` and the shape of `T`: for every
/// `i ∈ [n]`, `σ(i) ≥ i` ⇔ `i` labels a row; `σ(i) = i` ⇔ that row is
/// empty; `σ(i) < i` ⇔ `-i` labels a row; `σ(i) < 0` ⇔ that row's diagonal
/// is 1.
fn lem_bijec_holds(t: &PermutationTableauB) -> bool {
    let sigma = zeta(t);
    let d = t.diagram();
    for i in 1..=t.n() {
        let v = sigma.image(i);
        let iv = i as i32;
        let pos = d.row_index(iv);
        let neg = d.row_index(-iv);
        if (v >= iv) != pos.is_some() {
            return false;
        }
        let empty_positive = pos.is_some_and(|r| t.row_is_empty_at(r));
        if (v == iv) != empty_positive {
            return false;
        }
        if (v < iv) != neg.is_some() {
            return false;
        }
        if (v < 0) != (t.diagonal(i) == Some(true)) {
            return false;
        }
    }
    true
}

/// Adjacent-row comparisons: when rows `i` and `i+1` are both positive,
/// emptiness of the upper (lower) one forces `σ(i) < σ(i+1)`
/// (`σ(i) > σ(i+1)`); when `i+1` is a column between positive rows `i` and
/// `i+2` and row `i` is empty, `σ(i) > σ(i+1) < σ(i+2)`.
fn consec_rows_holds(t: &PermutationTableauB) -> bool {
    let sigma = zeta(t);
    let d = t.diagram();
    let n = t.n();
    for i in 1..n {
        let iv = i as i32;
        if let (Some(a), Some(b)) = (d.row_index(iv), d.row_index(iv + 1)) {
            let si = sigma.image(i);
            let sj = sigma.image(i + 1);
            if t.row_is_empty_at(a) {
                if si >= sj {
                    return false;
                }
            } else if t.row_is_empty_at(b) && si <= sj {
                return false;
            }
        }
        if i + 2 <= n {
            if let (Some(a), Some(_)) = (d.row_index(iv), d.row_index(iv + 2)) {
                if d.column_index(i + 1).is_some() && t.row_is_empty_at(a) {
                    let si = sigma.image(i);
                    let sm = sigma.image(i + 1);
                    let sk = sigma.image(i + 2);
                    if !(si > sm && sm < sk) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// For adjacent negative rows `-i` (above) and `-j` with both diagonals 1:
/// if the leftmost 1 of `-i` is strictly left of the leftmost 1 of `-j`,
/// then `σ(i) < σ(j) < 0`.
fn leftmost_ones_holds(t: &PermutationTableauB) -> bool {
    let sigma = zeta(t);
    let d = t.diagram();
    let c = d.column_count();
    for r in 1..c {
        let upper = t.row_bits(r - 1);
        let lower = t.row_bits(r);
        if upper >> (r - 1) & 1 == 0 || lower >> r & 1 == 0 {
            continue;
        }
        if upper.trailing_zeros() >= lower.trailing_zeros() {
            continue;
        }
        let i = d.column_label(r - 1);
        let j = d.column_label(r);
        let si = sigma.image(i);
        let sj = sigma.image(j);
        if !(si < sj && sj < 0) {
            return false;
        }
    }
    true
}

fn verify_round_trips(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    let bounds = options.bounds;
    let mut rows = Vec::new();
    for t in AlternatingType::ALL {
        for n in (1..=options.n_max).filter(|&n| t.pairs_length(n)) {
            let m = t.derangement_length(n).expect("parity filtered above");
            if m == 0 {
                // +UD at n = 1: the paired derangement is the empty one,
                // which has no tableau here; both sides are vacuous.
                continue;
            }
            bounds.check_tableaux(m)?;

            // ψ∘θ on every derangement tableau of length m in the class.
            let class = t.derangement_class();
            let mut population = 0u64;
            let mut conforming = 0u64;
            for input in all_tableaux_bounded(m, bounds.tableaux)? {
                if !zeta(&input).in_derangement_class(class) {
                    continue;
                }
                population += 1;
                let ok = theta(&input, t)
                    .and_then(|lifted| psi(&lifted, t))
                    .is_ok_and(|back| back == input);
                if ok {
                    conforming += 1;
                }
            }
            rows.push(ReportRow::new(
                format!("{}: ψ∘θ = id at m = {m}", t.flag()),
                n,
                conforming,
                population,
            ));

            // θ∘ψ on the maximal-fixed-point alternating tableaux of
            // length n: exhaustively within the tableau cap, otherwise on a
            // seeded sample recovered through the inverse zigzag search.
            if n <= bounds.tableaux {
                let k = t.max_fixed_points(n);
                let mut population = 0u64;
                let mut conforming = 0u64;
                for input in all_tableaux_bounded(n, bounds.tableaux)? {
                    let sigma = zeta(&input);
                    if !sigma.is_alternating(t) || sigma.fixed_point_count() != k {
                        continue;
                    }
                    population += 1;
                    let ok = psi(&input, t)
                        .and_then(|reduced| theta(&reduced, t))
                        .is_ok_and(|back| back == input);
                    if ok {
                        conforming += 1;
                    }
                }
                rows.push(ReportRow::new(
                    format!("{}: θ∘ψ = id, exhaustive", t.flag()),
                    n,
                    conforming,
                    population,
                ));
            } else {
                bounds.check_permutations(n)?;
                let sample = sample_max_fixed_windows(t, n, options);
                let mut conforming = 0u64;
                let total = sample.len() as u64;
                for sigma in sample {
                    let ok = zeta_inverse_bounded(&sigma, n)
                        .and_then(|input| {
                            psi(&input, t)
                                .and_then(|reduced| theta(&reduced, t))
                                .map(|back| back == input)
                        })
                        .unwrap_or(false);
                    if ok {
                        conforming += 1;
                    }
                }
                rows.push(ReportRow::new(
                    format!("{}: θ∘ψ = id, {total} sampled", t.flag()),
                    n,
                    conforming,
                    total,
                ));
            }
        }
    }
    Ok(rows)
}

/// Draws a deterministic sample of maximal-fixed-point alternating windows
/// of one type by choosing lexicographic indices with a seeded generator
/// and collecting them in a single ordered pass.
fn sample_max_fixed_windows(
    t: AlternatingType,
    n: usize,
    options: &VerifyOptions,
) -> Vec<SignedPermutation> {
    let k = t.max_fixed_points(n);
    let matches =
        move |w: &[i32]| slice_matches_type(w, t) && slice_fixed_point_count(w) == k;
    let total = par_count_windows(n, matches);
    if total == 0 {
        return Vec::new();
    }
    let want = (options.samples as u64).min(total);
    let mut rng = ChaCha8Rng::seed_from_u64(
        options.seed ^ ((t as u64) << 56) ^ (n as u64) << 48,
    );
    let mut picked: BTreeSet<u64> = BTreeSet::new();
    if want == total {
        picked.extend(0..total);
    } else {
        while (picked.len() as u64) < want {
            picked.insert(rng.gen_range(0..total));
        }
    }
    let targets: Vec<u64> = picked.into_iter().collect();

    let mut out = Vec::with_capacity(targets.len());
    let mut hits = 0u64;
    let mut next = 0usize;
    for_each_window(n, |w| {
        if next < targets.len() && matches(w) {
            if hits == targets[next] {
                out.push(SignedPermutation::from_window_unchecked(w.to_vec()));
                next += 1;
            }
            hits += 1;
        }
    });
    out
}

fn verify_type_a(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();

    // Tableau side, clamped to the tableau cap: the all-diagonals-zero
    // tableaux are counted by n!, and having every diagonal zero is
    // equivalent to an all-positive ζ image.
    for n in 1..=options.n_max.min(options.bounds.tableaux) {
        let mut diag_zero = 0u64;
        let mut equivalent = 0u64;
        let mut population = 0u64;
        for t in all_tableaux_bounded(n, options.bounds.tableaux)? {
            population += 1;
            let all_zero = t
                .diagram()
                .columns()
                .iter()
                .all(|&j| t.diagonal(j) == Some(false));
            if all_zero {
                diag_zero += 1;
            }
            let positive_window = zeta(&t).window().iter().all(|&v| v > 0);
            if all_zero == positive_window {
                equivalent += 1;
            }
        }
        rows.push(ReportRow::new("type-A tableaux = n!", n, diag_zero, factorial(n)));
        rows.push(ReportRow::new(
            "diagonals all 0 ⇔ positive window",
            n,
            equivalent,
            population,
        ));
    }

    // Permutation side: fixed-point distributions of the ordinary
    // alternating and reverse alternating permutations.
    for n in 1..=options.n_max {
        let mut du = vec![0u64; n + 1];
        let mut ud = vec![0u64; n + 1];
        for_each_positive_window(n, |w| {
            let k = slice_fixed_point_count(w);
            if slice_matches_type(w, AlternatingType::PosDU) {
                du[k] += 1;
            }
            if slice_matches_type(w, AlternatingType::PosUD) {
                ud[k] += 1;
            }
        });
        let max_of = |v: &[u64]| (0..v.len()).filter(|&k| v[k] > 0).max().unwrap_or(0) as u64;
        if n >= 4 {
            rows.push(ReportRow::new(
                "max k with d_k(n) ≠ 0 = ⌈n/2⌉",
                n,
                max_of(&du),
                (n as u64).div_ceil(2),
            ));
            rows.push(ReportRow::new(
                "d_{⌈n/2⌉}(n) = D_{⌊n/2⌋}",
                n,
                du[n.div_ceil(2)],
                derangement_number(n / 2),
            ));
        }
        if n >= 5 {
            rows.push(ReportRow::new(
                "max k with d*_k(n) ≠ 0 = ⌈(n+1)/2⌉",
                n,
                max_of(&ud),
                (n as u64 + 2) / 2,
            ));
        }
    }
    Ok(rows)
}

/// No `i` with `σ(i) > i` and `σ(i+1) > i+1`; moreover an excedance at
/// `i > 1` sits on a peak (`σ(i-1) < σ(i) > σ(i+1)`).
fn max_cor_window_ok(w: &[i32]) -> bool {
    let n = w.len();
    for i in 1..n {
        if w[i - 1] > i as i32 && w[i] > i as i32 + 1 {
            return false;
        }
    }
    for i in 2..=n {
        if w[i - 1] > i as i32 {
            if w[i - 2] >= w[i - 1] {
                return false;
            }
            if i < n && w[i - 1] <= w[i] {
                return false;
            }
        }
    }
    true
}

fn verify_max_cor(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let maxes: [usize; 4] =
            core::array::from_fn(|i| AlternatingType::ALL[i].max_fixed_points(n));
        let (conforming, population) = par_fold_windows(
            n,
            || ([0u64; 4], [0u64; 4]),
            |acc, w| {
                let types = slice_alternating_types(w);
                if types.is_empty() {
                    return;
                }
                let k = slice_fixed_point_count(w);
                let ok = max_cor_window_ok(w);
                for t in types.iter() {
                    let ti = t as usize;
                    if k == maxes[ti] {
                        acc.1[ti] += 1;
                        if ok {
                            acc.0[ti] += 1;
                        }
                    }
                }
            },
            |mut a, b| {
                for i in 0..4 {
                    a.0[i] += b.0[i];
                    a.1[i] += b.1[i];
                }
                a
            },
        );
        for t in AlternatingType::ALL {
            rows.push(ReportRow::new(
                format!("{}: no double excedance at max k", t.flag()),
                n,
                conforming[t as usize],
                population[t as usize],
            ));
        }
    }
    Ok(rows)
}

/// Runs of consecutive fixed points have length at most 2. A run of two
/// fixed points `{i, i+1}` forces the ascent `σ(i) = i < i+1 = σ(i+1)`, so
/// its start `i` is even in the down-up flavors and odd in the up-down
/// flavors (where ascents sit at odd positions — witness `[1, 2]`).
fn fixed_point_runs_ok(w: &[i32], starts_with_descent: bool) -> bool {
    let mut run = 0usize;
    for i in 1..=w.len() {
        if w[i - 1] == i as i32 {
            run += 1;
            if run > 2 {
                return false;
            }
            if run == 2 {
                let start_even = (i - 1) % 2 == 0;
                if start_even != starts_with_descent {
                    return false;
                }
            }
        } else {
            run = 0;
        }
    }
    true
}

fn verify_fixed_point_runs(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let (conforming, population) = par_fold_windows(
            n,
            || ([0u64; 4], [0u64; 4]),
            |acc, w| {
                for t in slice_alternating_types(w).iter() {
                    let ti = t as usize;
                    acc.1[ti] += 1;
                    if fixed_point_runs_ok(w, t.starts_with_descent()) {
                        acc.0[ti] += 1;
                    }
                }
            },
            |mut a, b| {
                for i in 0..4 {
                    a.0[i] += b.0[i];
                    a.1[i] += b.1[i];
                }
                a
            },
        );
        for t in AlternatingType::ALL {
            rows.push(ReportRow::new(
                format!("{}: runs ≤ 2 at flavor parity", t.flag()),
                n,
                conforming[t as usize],
                population[t as usize],
            ));
        }
    }
    Ok(rows)
}

/// The three positive-part claims on a θ output: runs of consecutive empty
/// rows have length at most 2 (such rows share a length automatically, as
/// no column label separates them), adjacent empty rows `i, i+1` occur only
/// at the flavor's run parity (`i` even in down-up outputs, odd in up-down
/// outputs, mirroring [`fixed_point_runs_ok`]), and no two adjacent rows
/// are both nonempty.
fn cor_rclw_holds(t: &PermutationTableauB, starts_with_descent: bool) -> bool {
    let d = t.diagram();
    let c = d.column_count();
    let labels = d.positive_rows();

    let mut empty_run = 0usize;
    for p in 0..labels.len() {
        let adjacent = p > 0 && labels[p] == labels[p - 1] + 1;
        if t.row_is_empty_at(c + p) {
            empty_run = if adjacent { empty_run + 1 } else { 1 };
            if empty_run > 2 {
                return false;
            }
        } else {
            empty_run = 0;
        }
    }

    for p in 1..labels.len() {
        if labels[p] != labels[p - 1] + 1 {
            continue;
        }
        let upper_empty = t.row_is_empty_at(c + p - 1);
        let lower_empty = t.row_is_empty_at(c + p);
        if upper_empty && lower_empty && labels[p - 1].is_multiple_of(2) != starts_with_descent {
            return false;
        }
        if !upper_empty && !lower_empty {
            return false;
        }
    }
    true
}

fn verify_cor_rclw(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_tableaux(options.n_max)?;
    let mut rows = Vec::new();
    for t in AlternatingType::ALL {
        let class = t.derangement_class();
        for m in 1..=options.n_max {
            let mut population = 0u64;
            let mut conforming = 0u64;
            for input in all_tableaux_bounded(m, options.bounds.tableaux)? {
                if !zeta(&input).in_derangement_class(class) {
                    continue;
                }
                population += 1;
                let ok = theta(&input, t)
                    .is_ok_and(|out| cor_rclw_holds(&out, t.starts_with_descent()));
                if ok {
                    conforming += 1;
                }
            }
            rows.push(ReportRow::new(
                format!("{}: θ outputs from m = {m}", t.flag()),
                m,
                conforming,
                population,
            ));
        }
    }
    Ok(rows)
}

fn verify_snakes(options: &VerifyOptions) -> Result<Vec<ReportRow>> {
    options.bounds.check_permutations(options.n_max)?;
    let mut rows = Vec::new();
    for n in 1..=options.n_max {
        let counted = par_count_windows(n, |w| slice_matches_type(w, AlternatingType::PosDU));
        rows.push(ReportRow::new("snakes = Springer number", n, counted, springer_number(n)));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_permutations_are_lexicographic_and_complete() {
        let windows: Vec<Vec<i32>> = all_signed_permutations(2)
            .map(|s| s.window().to_vec())
            .collect();
        assert_eq!(
            windows,
            vec![
                vec![-2, -1],
                vec![-2, 1],
                vec![-1, -2],
                vec![-1, 2],
                vec![1, -2],
                vec![1, 2],
                vec![2, -1],
                vec![2, 1],
            ]
        );

        // The lazy stream and the visitor agree, with no duplicates.
        for n in 1..=4 {
            let mut visited = Vec::new();
            for_each_window(n, |w| visited.push(w.to_vec()));
            let streamed: Vec<Vec<i32>> = all_signed_permutations(n)
                .map(|s| s.window().to_vec())
                .collect();
            assert_eq!(streamed, visited);
            assert_eq!(streamed.len() as u64, hyperoctahedral_order(n));
            let distinct: HashSet<_> = streamed.iter().cloned().collect();
            assert_eq!(distinct.len(), streamed.len());
            assert!(streamed.windows(2).all(|p| p[0] < p[1]), "not sorted at n = {n}");
        }
    }

    #[test]
    fn parallel_fold_matches_sequential_scan() {
        for n in 1..=4 {
            let par = par_count_windows(n, |w| w[0] > 0);
            let mut seq = 0u64;
            for_each_window(n, |w| {
                if w[0] > 0 {
                    seq += 1;
                }
            });
            assert_eq!(par, seq);
            assert_eq!(par, hyperoctahedral_order(n) / 2);
        }
    }

    #[test]
    fn tableau_stream_matches_brute_force_filter() {
        // Independent generator: try every 0/1 assignment of every diagram
        // and keep the ones that validate.
        for n in 1..=4usize {
            let mut brute = Vec::new();
            for mask in 0..(1u128 << n) {
                let columns: Vec<usize> =
                    (1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
                let d = ShiftedDiagramB::new(n, columns).unwrap();
                let lens: Vec<usize> =
                    (0..d.row_count()).map(|r| d.row_length_at(r)).collect();
                let boxes: usize = lens.iter().sum();
                for bits in 0..(1u64 << boxes) {
                    let mut fill = Vec::new();
                    let mut at = 0;
                    for &len in &lens {
                        fill.push((0..len).map(|q| (bits >> (at + q) & 1) as u8).collect());
                        at += len;
                    }
                    let t = PermutationTableauB::new(d.clone(), fill).unwrap();
                    if t.is_valid() {
                        brute.push(t);
                    }
                }
            }
            let streamed: Vec<_> = all_tableaux(n).unwrap().collect();
            assert_eq!(streamed.len(), brute.len(), "count differs at n = {n}");
            let brute_set: HashSet<_> = brute.into_iter().collect();
            let stream_set: HashSet<_> = streamed.iter().cloned().collect();
            assert_eq!(stream_set, brute_set, "sets differ at n = {n}");
            assert_eq!(stream_set.len(), streamed.len(), "duplicates at n = {n}");
        }
    }

    #[test]
    fn tableau_counts_match_the_group_order() {
        // n = 1: the empty column set (identity tableau) and C = {1} with
        // its diagonal forced to 1.
        let tiny: Vec<_> = all_tableaux(1).unwrap().collect();
        assert_eq!(tiny.len(), 2);
        assert_eq!(tiny[0].diagram().column_count(), 0);
        assert_eq!(tiny[1].diagram().columns(), &[1]);
        assert_eq!(tiny[1].diagonal(1), Some(true));

        for n in 1..=5 {
            let total = all_tableaux(n).unwrap().count() as u64;
            assert_eq!(total, hyperoctahedral_order(n), "n = {n}");
            assert!(all_tableaux(n).unwrap().all(|t| t.is_valid()));
        }
    }

    #[test]
    fn counts_match_small_goldens() {
        let bounds = Bounds::default();
        let q = |n, object| count(&CountQuery { n, object }, bounds).unwrap();

        assert_eq!(q(2, CountObject::Derangements { class: DerangementClass::B }), 5);
        assert_eq!(q(2, CountObject::Derangements { class: DerangementClass::Minus }), 3);
        assert_eq!(q(2, CountObject::Derangements { class: DerangementClass::MinusD }), 1);
        assert_eq!(
            q(
                2,
                CountObject::Alternating {
                    alternating_type: AlternatingType::NegDU,
                    fixed_points: Some(0),
                }
            ),
            1
        );
        assert_eq!(q(2, CountObject::Snakes), 3);
        assert_eq!(q(3, CountObject::Tableaux), 48);
        assert_eq!(
            q(
                4,
                CountObject::TypeA {
                    pattern: TypeAPattern::Alternating,
                    fixed_points: Some(2),
                }
            ),
            1
        );
        // Euler numbers: 5 alternating and 5 reverse alternating windows in S_4.
        assert_eq!(
            q(4, CountObject::TypeA { pattern: TypeAPattern::Alternating, fixed_points: None }),
            5
        );
        assert_eq!(
            q(
                4,
                CountObject::TypeA {
                    pattern: TypeAPattern::ReverseAlternating,
                    fixed_points: None,
                }
            ),
            5
        );

        // Derangement counts D_m^B for m = 1..4: 1, 5, 29, 233.
        for (m, expected) in [(1, 1), (2, 5), (3, 29), (4, 233)] {
            assert_eq!(
                q(m, CountObject::Derangements { class: DerangementClass::B }),
                expected
            );
        }
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(
            all_tableaux(DEFAULT_TABLEAU_BOUND + 1),
            Err(Error::BoundExceeded { bound: DEFAULT_TABLEAU_BOUND, .. })
        ));
        assert!(all_tableaux_bounded(7, 7).is_ok());

        let q = CountQuery { n: 9, object: CountObject::Snakes };
        assert!(matches!(
            count(&q, Bounds::default()),
            Err(Error::BoundExceeded { n: 9, bound: 8 })
        ));

        let opts = VerifyOptions { n_max: 9, ..VerifyOptions::default() };
        assert!(verify(Theorem::MaxFix, &opts).is_err());
        let opts = VerifyOptions { n_max: 7, ..VerifyOptions::default() };
        assert!(verify(Theorem::LemBijec, &opts).is_err());
    }

    #[test]
    fn sequence_oracles() {
        assert_eq!(
            (1..=7).map(springer_number).collect::<Vec<_>>(),
            vec![1, 3, 11, 57, 361, 2763, 24611]
        );
        assert_eq!(
            (0..=7).map(derangement_number).collect::<Vec<_>>(),
            vec![1, 0, 1, 2, 9, 44, 265, 1854]
        );
        assert_eq!(factorial(6), 720);
        assert_eq!(hyperoctahedral_order(3), 48);
    }

    #[test]
    fn verifier_smoke_tests_pass() {
        let opts = VerifyOptions { n_max: 4, ..VerifyOptions::default() };
        for theorem in [
            Theorem::MaxFix,
            Theorem::AltDer,
            Theorem::ZetaBijective,
            Theorem::LemBijec,
            Theorem::RoundTrips,
            Theorem::ConsecRows,
            Theorem::LeftmostOnes,
            Theorem::MaxCor,
            Theorem::FixedPointRuns,
        ] {
            let report = verify(theorem, &opts).unwrap();
            assert!(report.all_pass(), "{theorem}:\n{}", report.render_table());
            assert!(!report.rows.is_empty());
        }

        let small = VerifyOptions { n_max: 3, ..VerifyOptions::default() };
        for theorem in [Theorem::CorRclw, Theorem::Snakes] {
            let report = verify(theorem, &small).unwrap();
            assert!(report.all_pass(), "{theorem}:\n{}", report.render_table());
        }

        let five = VerifyOptions { n_max: 5, ..VerifyOptions::default() };
        let report = verify(Theorem::TypeARestriction, &five).unwrap();
        assert!(report.all_pass(), "{}", report.render_table());
    }

    #[test]
    fn alt_der_rows_cover_both_parities() {
        let opts = VerifyOptions { n_max: 3, ..VerifyOptions::default() };
        let report = verify(Theorem::AltDer, &opts).unwrap();
        assert!(report.all_pass(), "{}", report.render_table());
        // Four types at three sizes, each size contributing one row per type;
        // each type pairs every other length, so half the rows are identity
        // rows and half degenerate off-parity rows.
        assert_eq!(report.rows.len(), 12);
        let degenerate = report.rows.iter().filter(|r| r.case.contains("off parity")).count();
        assert_eq!(degenerate, 6);

        // d_0^{-DU}(2) = D_2^{-D} = 1 is the first even -DU row.
        let row = report
            .rows
            .iter()
            .find(|r| r.n == 2 && r.case.starts_with("-DU"))
            .unwrap();
        assert_eq!((row.lhs, row.rhs), (1, 1));
    }

    #[test]
    fn sampling_is_deterministic_and_in_class() {
        let opts = VerifyOptions { n_max: 7, samples: 25, ..VerifyOptions::default() };
        let t = AlternatingType::NegUD;
        let a = sample_max_fixed_windows(t, 7, &opts);
        let b = sample_max_fixed_windows(t, 7, &opts);
        assert_eq!(a, b);
        assert_eq!(a.len(), 25);
        let k = t.max_fixed_points(7);
        for sigma in &a {
            assert!(sigma.is_alternating(t));
            assert_eq!(sigma.fixed_point_count(), k);
        }
        assert!(a.windows(2).all(|p| p[0].window() < p[1].window()));

        // A different seed draws a different sample.
        let reseeded = VerifyOptions { seed: opts.seed + 1, ..opts };
        assert_ne!(a, sample_max_fixed_windows(t, 7, &reseeded));
    }

    #[test]
    fn report_serialization_shape() {
        let opts = VerifyOptions { n_max: 2, ..VerifyOptions::default() };
        let report = verify(Theorem::ZetaBijective, &opts).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"theorem":"zeta-bijective","rows":[{"case":"#), "{json}");
        assert!(json.contains(r#""n":1,"lhs":2,"rhs":2,"pass":true"#), "{json}");
        assert!(json.contains(r#""elapsed_ms":"#));

        let table = report.render_table();
        assert!(table.contains("theorem: zeta-bijective"));
        assert!(table.contains("result: PASS"));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("ALT-DER".parse::<Theorem>().unwrap(), Theorem::AltDer);
        assert_eq!("altder".parse::<Theorem>().unwrap(), Theorem::AltDer);
        assert_eq!("max_fix".parse::<Theorem>().unwrap(), Theorem::MaxFix);
        assert!("no-such-theorem".parse::<Theorem>().is_err());
    }

    #[test]
    fn verify_respects_thread_override() {
        let opts = VerifyOptions { n_max: 3, threads: Some(2), ..VerifyOptions::default() };
        let single = VerifyOptions { n_max: 3, threads: Some(1), ..VerifyOptions::default() };
        let a = verify(Theorem::MaxFix, &opts).unwrap();
        let b = verify(Theorem::MaxFix, &single).unwrap();
        assert_eq!(a.rows, b.rows);
    }
}
