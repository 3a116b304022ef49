//! The zigzag map ζ from permutation tableaux to signed permutations, with
//! a printed trace for every window entry.
//!
//! For each `i` the zigzag path enters the diagram at row `i` (if `i` is a
//! row label) or at the top of column `i`, travels east/south, and turns at
//! every 1; `σ(i)` is the label of the boundary edge where it exits, with
//! the sign fixed by where the path started. Because each path is
//! deterministic, ζ is computable row by row — and it turns out to be a
//! bijection onto `S_n^B`, so `zeta_inverse` can recover the unique
//! preimage by a pruned backtracking search over the bits `σ` leaves free.
//!
//! Run with `cargo run --example zigzag_traces`.

use tableaux_b::{zeta_inverse, zeta_with_traces, PermutationTableauB, ShiftedDiagramB, ZigzagStart};

fn main() -> tableaux_b::Result<()> {
    let diagram = ShiftedDiagramB::new(8, vec![3, 5, 6, 8])?;
    let tableau = PermutationTableauB::new(
        diagram,
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
    )?;
    println!("{}", tableau.render_ascii());

    let (sigma, traces) = zeta_with_traces(&tableau);
    for (i, trace) in traces.iter().enumerate() {
        let i = i + 1;
        let start = match trace.start() {
            ZigzagStart::FromRow(r) if r < 0 => format!("row {r} (negative copy, flips the sign)"),
            ZigzagStart::FromRow(r) => format!("row {r}"),
            ZigzagStart::FromColumn(c) => format!("top of column {c}"),
        };
        println!("σ({i}) = {:>2}, entering at {start}", sigma.image(i));
        for line in trace.to_string().lines() {
            println!("    {line}");
        }
    }
    println!("ζ = [{sigma}]");

    // ζ is a bijection, so the tableau can be recovered from its image.
    let recovered = zeta_inverse(&sigma)?;
    assert_eq!(recovered, tableau);
    println!("ζ⁻¹ recovers the tableau: equal");
    Ok(())
}
