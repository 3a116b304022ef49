//! Running the built-in theorem verifiers and reading their reports.
//!
//! Every structural claim the crate relies on ships with an exhaustive
//! small-size verifier: each one enumerates the relevant objects up to a
//! size cap and reports, per case and size, the two quantities that the
//! claim says must agree. This example prints two full reports, then a
//! one-line summary for the whole catalogue.
//!
//! Run with `cargo run --example verify_theorems`.

use std::str::FromStr;

use tableaux_b::enumerate::{verify, Theorem, VerifyOptions};

fn main() -> tableaux_b::Result<()> {
    // The length pairing: counting alternating windows with maximally many
    // fixed points against the paired derangement class, all four types.
    let options = VerifyOptions { n_max: 5, ..VerifyOptions::default() };
    let report = verify(Theorem::AltDer, &options)?;
    print!("{}", report.render_table());
    assert!(report.all_pass());

    // Round trips: ψ∘θ exhaustively, θ∘ψ sampled once the alternating side
    // outgrows the tableau-enumeration cap. The sampling is seeded, so the
    // report is reproducible.
    let options = VerifyOptions { n_max: 6, samples: 200, seed: 7, ..VerifyOptions::default() };
    let report = verify(Theorem::RoundTrips, &options)?;
    print!("\n{}", report.render_table());
    assert!(report.all_pass());

    // Theorem names round-trip through FromStr, which the CLI relies on.
    assert_eq!(Theorem::from_str("alt-der")?, Theorem::AltDer);
    assert_eq!(Theorem::from_str("ALT_DER")?, Theorem::AltDer);

    // The whole catalogue at a small size; `verify --theorem all` in the
    // CLI does exactly this.
    println!("\nfull catalogue at n ≤ 4:");
    let options = VerifyOptions { n_max: 4, ..VerifyOptions::default() };
    for theorem in Theorem::ALL {
        let report = verify(theorem, &options)?;
        println!(
            "  {:<20} {} ({} rows, {} ms)",
            theorem.name(),
            if report.all_pass() { "PASS" } else { "FAIL" },
            report.rows.len(),
            report.elapsed_ms
        );
    }
    Ok(())
}
