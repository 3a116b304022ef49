//! Brute-force counts against closed-form oracles.
//!
//! Every count here is obtained by exhaustive enumeration of `S_n^B` or of
//! all tableaux, then compared with an independent formula: `2^n · n!` for
//! the group order, Springer numbers for snakes, and type-A derangement
//! numbers for the alternating-with-maximal-fixed-points counts restricted
//! to positive windows.
//!
//! Run with `cargo run --example counting_and_oracles`.

use tableaux_b::enumerate::{
    count, derangement_number, hyperoctahedral_order, springer_number, Bounds, CountObject,
    CountQuery, TypeAPattern,
};
use tableaux_b::{AlternatingType, DerangementClass};

fn tally(n: usize, object: CountObject) -> u64 {
    count(&CountQuery { n, object }, Bounds::default()).expect("within default bounds")
}

fn main() {
    // ζ is a bijection onto S_n^B, so tableaux are equinumerous with
    // signed permutations.
    println!("tableaux vs |S_n^B| = 2^n n!:");
    for n in 1..=5 {
        let tableaux = tally(n, CountObject::Tableaux);
        println!("  n = {n}: {tableaux:>5} tableaux, oracle {:>5}", hyperoctahedral_order(n));
        assert_eq!(tableaux, hyperoctahedral_order(n));
    }

    // Snakes (alternating windows of type +DU, any fixed-point count) are
    // counted by the Springer numbers 1, 3, 11, 57, 361, …
    println!("\nsnakes vs Springer numbers:");
    for n in 1..=6 {
        let snakes = tally(n, CountObject::Snakes);
        println!("  n = {n}: {snakes:>4} snakes, oracle {:>4}", springer_number(n));
        assert_eq!(snakes, springer_number(n));
    }

    // The fixed-point census of one type at one length: d_k^{+DU}(4) for
    // k = 0, …, 2, where 2 = ⌈4/2⌉ is the maximum.
    println!("\n+DU census at n = 4 by fixed points:");
    let t = AlternatingType::PosDU;
    for k in 0..=t.max_fixed_points(4) {
        let d_k = tally(4, CountObject::Alternating { alternating_type: t, fixed_points: Some(k) });
        println!("  d_{k}^{{+DU}}(4) = {d_k}");
    }

    // The three nested derangement classes at n = 3:
    // all derangements ⊇ first entry negative ⊇ … additionally a descent.
    println!("\nderangement classes at n = 3:");
    for class in [DerangementClass::B, DerangementClass::Minus, DerangementClass::MinusD] {
        let d = tally(3, CountObject::Derangements { class });
        println!("  |D_3^{{{}}}| = {d}", class.label());
    }

    // Restricting to all-positive windows recovers type A: at even n the
    // maximal-fixed-point alternating count equals a derangement number,
    // d_{n/2}(n) = D_{n/2}.
    println!("\ntype-A restriction at even n:");
    for n in [4, 6] {
        let k = n / 2;
        let lhs = tally(
            n,
            CountObject::TypeA { pattern: TypeAPattern::Alternating, fixed_points: Some(k) },
        );
        println!("  d_{k}({n}) = {lhs}, derangement oracle D_{k} = {}", derangement_number(k));
        assert_eq!(lhs, derangement_number(k));
    }
}
