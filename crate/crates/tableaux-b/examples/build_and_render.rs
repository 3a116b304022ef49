//! Building, validating, rendering, and serializing permutation tableaux.
//!
//! A permutation tableau of type B is a 0/1 filling of a shifted diagram
//! determined by `n` and a column set `C ⊆ {1, …, n}`, subject to three
//! conditions: every column contains a 1, no 0 has a 1 both above it and to
//! its left, and a row whose diagonal box is 0 is entirely 0. This example
//! builds the running `n = 8` tableau, diagnoses a broken filling, and
//! round-trips the JSON wire format.
//!
//! Run with `cargo run --example build_and_render`.

use tableaux_b::{PermutationTableauB, ShiftedDiagramB};

fn main() -> tableaux_b::Result<()> {
    // C = {3, 5, 6, 8}: one column per element of C (widest first when
    // rendered), one negative row per column, and one positive row per
    // element of the complement {1, 2, 4, 7}.
    let diagram = ShiftedDiagramB::new(8, vec![3, 5, 6, 8])?;
    println!(
        "diagram: n = {}, columns {:?}, rows {:?}",
        diagram.n(),
        diagram.columns(),
        diagram.row_labels()
    );
    println!(
        "row lengths top to bottom: {:?} ({} boxes in all)",
        diagram.row_lengths(),
        diagram.box_count()
    );

    // Fillings list rows top to bottom (labels increasing) and boxes left
    // to right; the constructor rejects fillings that do not fit the shape.
    let tableau = PermutationTableauB::new(
        diagram.clone(),
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
    println!("\n{}", tableau.render_ascii());
    println!("valid: {}", tableau.is_valid());
    println!("positive shape: {:?}", tableau.positive_shape());
    println!("empty positive rows: {:?}", tableau.empty_positive_rows());

    // Zeroing the diagonal of row -5 while leaving 1s in the rest of the
    // row breaks the diagonal condition; validate() names a witness box
    // for every offending 1.
    let mut broken_fill = tableau.fill();
    broken_fill[2] = vec![1, 1, 0];
    let broken = PermutationTableauB::new(diagram, broken_fill)?;
    println!("\nafter zeroing the diagonal of row -5:");
    for violation in broken.validate() {
        println!("  violation: {violation}");
    }

    // The wire format spells out n, the column set, and each row's cells.
    let json = serde_json::to_string(&tableau).expect("tableau serializes");
    println!("\nwire format:\n{json}");
    let back: PermutationTableauB = serde_json::from_str(&json).expect("wire format parses");
    assert_eq!(back, tableau);
    println!("round trip: equal");
    Ok(())
}
