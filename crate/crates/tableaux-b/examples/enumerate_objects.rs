//! Streaming enumeration of tableaux and signed permutations.
//!
//! Both families are generated lazily in a deterministic order: signed
//! permutations lexicographically by window, tableaux by column set and
//! then by filling. The iterators make exhaustive checks over all objects
//! of a small length a one-liner, which is how the theorem verifiers and
//! the acceptance suite work underneath.
//!
//! Run with `cargo run --example enumerate_objects`.

use tableaux_b::enumerate::{all_signed_permutations, all_tableaux, Bounds, DEFAULT_TABLEAU_BOUND};
use tableaux_b::zeta;

fn main() -> tableaux_b::Result<()> {
    // All eight signed permutations of length 2, in lexicographic order.
    println!("S_2^B in window order:");
    for sigma in all_signed_permutations(2) {
        println!("  [{sigma}]");
    }

    // All eight tableaux of length 2 with their fillings and images; every
    // window above shows up exactly once.
    println!("\ntableaux at n = 2 with images:");
    for tableau in all_tableaux(2)? {
        let rows: Vec<String> = tableau
            .diagram()
            .row_labels()
            .iter()
            .zip(tableau.fill())
            .map(|(label, cells)| format!("{label}:{cells:?}"))
            .collect();
        println!(
            "  C = {:?}, fill {{{}}}, ζ = [{}]",
            tableau.diagram().columns(),
            rows.join(", "),
            zeta(&tableau)
        );
    }

    // Enumeration cost grows like 2^n · n!, so lengths are capped; the
    // default tableau cap keeps exhaustive scans comfortably fast.
    let sizes: Vec<usize> = (1..=4).map(|n| all_tableaux(n).map(Iterator::count).unwrap_or(0)).collect();
    println!("\ntableau counts for n = 1..4: {sizes:?}");
    println!(
        "default caps: tableaux up to n = {DEFAULT_TABLEAU_BOUND}, windows up to n = {}",
        Bounds::default().permutations
    );
    match all_tableaux(DEFAULT_TABLEAU_BOUND + 1) {
        Err(e) => println!("n = {}: {e}", DEFAULT_TABLEAU_BOUND + 1),
        Ok(_) => unreachable!("beyond the default cap"),
    }
    Ok(())
}
