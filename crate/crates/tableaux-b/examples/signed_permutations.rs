//! Windows, fixed points, alternating types, and derangement classes.
//!
//! A signed permutation `σ ∈ S_n^B` satisfies `σ(-i) = -σ(i)`, so it is
//! pinned down by its window `[σ(1), …, σ(n)]`. This example classifies a
//! few windows by hand, shows the one genuinely ambiguous case, and then
//! tallies all of `S_3^B` by alternating type.
//!
//! Run with `cargo run --example signed_permutations`.

use std::collections::BTreeMap;
use std::str::FromStr;

use tableaux_b::enumerate::{for_each_window, hyperoctahedral_order};
use tableaux_b::{AlternatingType, SignedPermutation};

fn describe(text: &str) -> tableaux_b::Result<()> {
    let sigma = SignedPermutation::from_str(text)?;
    println!("σ = [{sigma}]");
    println!("  fixed points      : {:?}", sigma.fixed_points());
    match sigma.alternating_type()? {
        Some(t) => println!(
            "  alternating type  : {t} (maximum at n = {} would be {} fixed points)",
            sigma.n(),
            t.max_fixed_points(sigma.n())
        ),
        None => println!("  alternating type  : none"),
    }
    match sigma.derangement_class() {
        Some(c) => println!("  derangement class : {} (strictest)", c.label()),
        None => println!("  derangement class : not a derangement"),
    }
    Ok(())
}

fn main() -> tableaux_b::Result<()> {
    // The running zigzag example: a derangement, but with two consecutive
    // ascents at positions 5 and 6, so not alternating.
    describe("2,7,-5,6,-4,1,8,-3")?;
    println!();

    // Negative first entry and a descent right away: class minus-D, the
    // smallest of the three nested derangement classes.
    describe("-3,-4,2,7,6,-5,8,1")?;
    println!();

    // Alternating of type +UD with fixed points 1, 2, and 4; three fixed
    // points is the maximum for that type at n = 4.
    describe("1,2,-3,4")?;
    println!();

    // Length 1 is the one ambiguous length: [-1] is a single descent from
    // σ(0) = 0 viewed one way and a single "window of length one" the
    // other, so it matches both negative types at once.
    let minus_one = SignedPermutation::from_window(vec![-1])?;
    let types: Vec<&str> = minus_one.alternating_types().iter().map(|t| t.flag()).collect();
    println!("[-1] matches {} types: {}", types.len(), types.join(" and "));
    println!("  alternating_type() refuses to pick: {}", minus_one.alternating_type().unwrap_err());
    println!();

    // Tally S_3^B. Each window matches at most one type at n ≥ 2, so the
    // per-type counts and the rest sum to |S_3^B| = 2^3 · 3! = 48.
    let mut census: BTreeMap<&str, u64> = BTreeMap::new();
    let mut total = 0u64;
    for_each_window(3, |w| {
        total += 1;
        let sigma = SignedPermutation::from_window(w.to_vec()).expect("enumerated window");
        match sigma.alternating_types().iter().next() {
            Some(t) => *census.entry(t.flag()).or_default() += 1,
            None => *census.entry("not alternating").or_default() += 1,
        }
    });
    println!("census of S_3^B ({total} windows, oracle {}):", hyperoctahedral_order(3));
    for t in [
        AlternatingType::NegDU,
        AlternatingType::NegUD,
        AlternatingType::PosDU,
        AlternatingType::PosUD,
    ] {
        println!("  {:<15} {:>3}", t.flag(), census.get(t.flag()).copied().unwrap_or(0));
    }
    println!("  {:<15} {:>3}", "not alternating", census["not alternating"]);
    assert_eq!(total, hyperoctahedral_order(3));
    Ok(())
}
