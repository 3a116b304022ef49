//! The insertion map θ and its inverse ψ, walked through on one tableau.
//!
//! Fix an alternating type `t`. Tableaux of length `m` whose image is a
//! derangement in the class paired with `t` correspond bijectively to
//! tableaux of length `n ∈ {2m-2, 2m-1, 2m, 2m+1}` (by type) whose image is
//! alternating of type `t` with the maximal number of fixed points. θ gets
//! there by inserting all-zero positive rows at scheduled positions — each
//! new empty row becomes a fixed point of the image — and ψ undoes it by
//! deleting every empty positive row.
//!
//! Run with `cargo run --example theta_psi_round_trip`.

use tableaux_b::{
    insertion_plan, psi, theta, zeta, AlternatingType, PermutationTableauB, ShiftedDiagramB,
};

fn main() -> tableaux_b::Result<()> {
    // m = 7, C = {1, 2, 5, 7}, positive shape (2, 2, 1). Its image is the
    // derangement [-3, 1, 6, 5, -4, 7, 2]: first entry negative but
    // followed by an ascent, so class minus and not minus-D.
    let diagram = ShiftedDiagramB::new(7, vec![1, 2, 5, 7])?;
    let tableau = PermutationTableauB::new(
        diagram,
        vec![
            vec![0],
            vec![1, 1],
            vec![0, 0, 0],
            vec![0, 1, 1, 1],
            vec![1, 1],
            vec![0, 1],
            vec![1],
        ],
    )?;
    let image = zeta(&tableau);
    println!("source: m = {}, ζ = [{}]", tableau.n(), image);
    println!(
        "        positive shape {:?}, class {}",
        tableau.positive_shape(),
        image.derangement_class().expect("image is a derangement").label()
    );

    // -UD pairs class minus with odd target length n = 2m - 1 = 13. The
    // plan lists, gap by gap, the box lengths of the empty rows θ inserts.
    let target = AlternatingType::NegUD;
    let plan = insertion_plan(&tableau.positive_shape(), tableau.n(), target)?;
    println!("\nθ^{} plan: {} insertions, m = {} → n = {}", target, plan.total_insertions(), plan.source_length(), plan.output_length());
    for gap in plan.gaps() {
        println!("  after positive row {}: insert rows of lengths {:?}", gap.after_row, gap.lengths);
    }

    let lifted = theta(&tableau, target)?;
    let lifted_image = zeta(&lifted);
    println!("\nlifted: n = {}, ζ = [{}]", lifted.n(), lifted_image);
    println!(
        "        type {}, fixed points {:?} ({} = maximum)",
        lifted_image.alternating_type()?.expect("θ image is alternating").flag(),
        lifted_image.fixed_points(),
        target.max_fixed_points(lifted.n()),
    );

    // ψ deletes the empty positive rows again.
    let back = psi(&lifted, target)?;
    assert_eq!(back, tableau);
    println!("\nψ(θ(T)) = T: equal");

    // Each type checks its paired class: -DU needs minus-D, which this
    // image misses, so the lift is refused rather than silently wrong.
    match theta(&tableau, AlternatingType::NegDU) {
        Err(e) => println!("θ^-DU on a minus-class tableau: {e}"),
        Ok(_) => unreachable!("the class check rejects this input"),
    }
    Ok(())
}
