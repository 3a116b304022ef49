//! Command-line front end: enumerate, count, map, transform, render, verify.
//!
//! Every subcommand is a thin wrapper over the library. Exit codes: 0 on
//! success (for `verify`, only when every checked row passes), 1 on domain
//! precondition violations and failed verifications, 2 on usage errors, and
//! 70 on internal invariant failures.

use std::io::{Read, Write};
use std::process::ExitCode;
use std::str::FromStr;
use std::{env, fs, io};

use clap::{Args, Parser, Subcommand, ValueEnum};

use tableaux_b::enumerate::{
    all_signed_permutations, all_tableaux_bounded, count, verify, Bounds, CountObject,
    CountQuery, Theorem, TypeAPattern, VerifyOptions, DEFAULT_PERMUTATION_BOUND,
    DEFAULT_TABLEAU_BOUND,
};
use tableaux_b::zigzag::ZigzagStart;
use tableaux_b::{
    psi, theta, zeta_inverse_bounded, zeta_with_traces, AlternatingType, DerangementClass,
    Error, PermutationTableauB, SignedPermutation, DEFAULT_INVERSE_BOUND, MAX_N,
};

/// Permutation tableaux of type B: the zigzag map ζ, the Θ/Ψ bijections
/// between alternating classes and derangement classes, exhaustive
/// enumeration, and theorem verification.
#[derive(Parser)]
#[command(name = "tableaux-b", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream all objects of one length as JSON lines.
    Enumerate(EnumerateArgs),
    /// Count objects of one length by exhaustive enumeration.
    Count(CountArgs),
    /// Apply the zigzag map ζ to a tableau.
    Zeta(ZetaArgs),
    /// Recover the tableau with a given ζ image (bounded search).
    ZetaInverse(ZetaInverseArgs),
    /// Lift a derangement tableau to the maximal-fixed-point alternating
    /// class of one type (the insertion map Θ).
    Theta(MapArgs),
    /// Reduce a maximal-fixed-point alternating tableau to its derangement
    /// class (the deletion map Ψ).
    Psi(MapArgs),
    /// Render a tableau as ASCII.
    Render(RenderArgs),
    /// Check the shipped theorems over a range of sizes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateObject {
    Permutations,
    Tableaux,
}

#[derive(Args)]
struct EnumerateArgs {
    /// What to enumerate.
    #[arg(long, value_enum)]
    object: EnumerateObject,
    /// Object length.
    #[arg(long)]
    n: usize,
    /// Stop after this many lines.
    #[arg(long)]
    limit: Option<u64>,
    /// Raise the enumeration bounds (default: permutations 8, tableaux 6).
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountedObject {
    /// Alternating windows of one type (`--type`, optional `--fixed-points`).
    Alternating,
    /// Type-B derangements in a class (`--class`), inclusively.
    Derangements,
    /// Valid permutation tableaux of type B.
    Tableaux,
    /// Snakes (type +DU alternating windows).
    Snakes,
    /// Ordinary alternating permutations (`--pattern`, optional
    /// `--fixed-points`).
    TypeA,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    /// Down-up windows σ(1) > σ(2) < σ(3) > …
    #[value(alias = "du")]
    Alternating,
    /// Up-down windows σ(1) < σ(2) > σ(3) < …
    #[value(alias = "ud")]
    ReverseAlternating,
}

#[derive(Args)]
struct CountArgs {
    /// What to count.
    #[arg(long, value_enum)]
    object: CountedObject,
    /// Object length.
    #[arg(long)]
    n: usize,
    /// Alternating type: -DU, -UD, +DU, +UD (or ndu, nud, pdu, pud).
    #[arg(long = "type", allow_hyphen_values = true)]
    alternating_type: Option<String>,
    /// Restrict to windows with exactly this many fixed points.
    #[arg(long)]
    fixed_points: Option<usize>,
    /// Derangement class: b, minus, or minus-d.
    #[arg(long)]
    class: Option<String>,
    /// Type-A pattern.
    #[arg(long, value_enum)]
    pattern: Option<PatternArg>,
    /// Raise the enumeration bounds (default: permutations 8, tableaux 6).
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Args)]
struct ZetaArgs {
    /// Tableau JSON file, or - for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Print the zigzag walk behind each window entry.
    #[arg(long)]
    trace: bool,
    /// Emit the window as JSON instead of comma-separated text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ZetaInverseArgs {
    /// Window input (text `2,7,-5`, JSON object, or JSON array), or - for
    /// stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// Largest window length the search accepts.
    #[arg(long, default_value_t = DEFAULT_INVERSE_BOUND)]
    bound: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Tableau,
    Permutation,
    Both,
}

#[derive(Args)]
struct MapArgs {
    /// Alternating type: -DU, -UD, +DU, +UD (or ndu, nud, pdu, pud).
    #[arg(long = "type", allow_hyphen_values = true)]
    alternating_type: String,
    /// Tableau JSON file, or - for stdin.
    #[arg(long, default_value = "-")]
    input: String,
    /// What to print: the output tableau (JSON), its ζ window (text), or
    /// both (JSON).
    #[arg(long, value_enum, default_value_t = Emit::Tableau)]
    emit: Emit,
}

#[derive(Args)]
struct RenderArgs {
    /// Tableau JSON file, or - for stdin.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Theorem name, or `all`; an unknown name lists the catalogue.
    #[arg(long, default_value = "all")]
    theorem: String,
    /// Largest size to check.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Emit the report as JSON instead of a table.
    #[arg(long)]
    json: bool,
    /// Worker threads for the exhaustive scans.
    #[arg(long)]
    threads: Option<usize>,
    /// Sample size for round-trip checks beyond the tableau bound.
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Seed for sampled checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Raise the enumeration bounds (default: permutations 8, tableaux 6).
    #[arg(long)]
    bound: Option<usize>,
}

enum CliError {
    Usage(String),
    Precondition(Error),
    Internal(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        match self {
            CliError::Usage(msg) => {
                eprintln!("tableaux-b: usage error: {msg}");
                ExitCode::from(2)
            }
            CliError::Precondition(err) => {
                eprintln!("tableaux-b: {err}");
                ExitCode::from(1)
            }
            CliError::Internal(msg) => {
                eprintln!("tableaux-b: internal error: {msg}");
                ExitCode::from(70)
            }
        }
    }
}

/// Library errors are preconditions, except internal invariant failures.
fn lib_err(err: Error) -> CliError {
    match err {
        Error::Internal(msg) => CliError::Internal(msg),
        other => CliError::Precondition(other),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(code)) => code,
        Ok(Err(err)) => err.report(),
        Err(_) => {
            eprintln!("tableaux-b: internal error: unexpected panic");
            ExitCode::from(70)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Enumerate(args) => run_enumerate(args),
        Command::Count(args) => run_count(args),
        Command::Zeta(args) => run_zeta(args),
        Command::ZetaInverse(args) => run_zeta_inverse(args),
        Command::Theta(args) => run_map(args, theta),
        Command::Psi(args) => run_map(args, psi),
        Command::Render(args) => run_render(args),
        Command::Verify(args) => run_verify(args),
    }
}

/// Default bounds, overridden by `TABLEAUXB_MAX_N`, overridden by `--bound`.
fn effective_bounds(flag: Option<usize>) -> Result<Bounds, CliError> {
    let mut bounds = Bounds::default();
    if let Ok(value) = env::var("TABLEAUXB_MAX_N") {
        let k: usize = value.trim().parse().map_err(|_| {
            usage(format!("TABLEAUXB_MAX_N must be a positive integer, got {value:?}"))
        })?;
        bounds = Bounds::uniform(k);
    }
    if let Some(k) = flag {
        bounds = Bounds::uniform(k);
    }
    if bounds.permutations > DEFAULT_PERMUTATION_BOUND || bounds.tableaux > DEFAULT_TABLEAU_BOUND
    {
        eprintln!(
            "tableaux-b: warning: enumeration bound raised to {}; full sweeps grow as 2^n·n! \
             in time and the inverse search in memory",
            bounds.permutations.max(bounds.tableaux)
        );
    }
    Ok(bounds)
}

fn check_n(n: usize) -> Result<(), CliError> {
    if n == 0 || n > MAX_N {
        return Err(usage(format!("--n must be between 1 and {MAX_N}, got {n}")));
    }
    Ok(())
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

fn parse_tableau(text: &str) -> Result<PermutationTableauB, CliError> {
    serde_json::from_str(text.trim()).map_err(|e| usage(format!("invalid tableau JSON: {e}")))
}

/// Accepts `2,7,-5` text (ASCII or typographic minus), the JSON object
/// `{"n": …, "window": […]}`, or a bare JSON array.
fn parse_window(text: &str) -> Result<SignedPermutation, CliError> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        serde_json::from_str(trimmed).map_err(|e| usage(format!("invalid window JSON: {e}")))
    } else if trimmed.starts_with('[') {
        let entries: Vec<i32> = serde_json::from_str(trimmed)
            .map_err(|e| usage(format!("invalid window array: {e}")))?;
        SignedPermutation::from_window(entries).map_err(|e| usage(e.to_string()))
    } else {
        trimmed
            .parse()
            .map_err(|e: Error| usage(e.to_string()))
    }
}

fn require_valid(t: &PermutationTableauB) -> Result<(), CliError> {
    let violations = t.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Precondition(Error::InvalidTableau(violations)))
    }
}

fn parse_type(s: &str) -> Result<AlternatingType, CliError> {
    AlternatingType::from_str(s).map_err(|_| {
        usage(format!(
            "unknown alternating type {s:?}; expected -DU, -UD, +DU, +UD (or ndu, nud, pdu, pud)"
        ))
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value).map_err(|e| CliError::Internal(format!("serialization: {e}")))
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, CliError> {
    check_n(args.n)?;
    let bounds = effective_bounds(args.bound)?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut emitted = 0u64;
    let limit = args.limit.unwrap_or(u64::MAX);
    match args.object {
        EnumerateObject::Permutations => {
            if args.n > bounds.permutations {
                return Err(CliError::Precondition(Error::BoundExceeded {
                    n: args.n,
                    bound: bounds.permutations,
                }));
            }
            for sigma in all_signed_permutations(args.n) {
                if emitted >= limit {
                    break;
                }
                writeln!(out, "{}", to_json(&sigma)?)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                emitted += 1;
            }
        }
        EnumerateObject::Tableaux => {
            for t in all_tableaux_bounded(args.n, bounds.tableaux).map_err(lib_err)? {
                if emitted >= limit {
                    break;
                }
                writeln!(out, "{}", to_json(&t)?)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                emitted += 1;
            }
        }
    }
    out.flush().map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(ExitCode::SUCCESS)
}

fn run_count(args: CountArgs) -> Result<ExitCode, CliError> {
    check_n(args.n)?;
    let bounds = effective_bounds(args.bound)?;
    let reject = |flag: &str, held: bool| -> Result<(), CliError> {
        if held {
            Err(usage(format!("{flag} does not apply to this --object")))
        } else {
            Ok(())
        }
    };
    let object = match args.object {
        CountedObject::Alternating => {
            reject("--class", args.class.is_some())?;
            reject("--pattern", args.pattern.is_some())?;
            let t = args
                .alternating_type
                .as_deref()
                .ok_or_else(|| usage("--type is required for --object alternating"))?;
            CountObject::Alternating {
                alternating_type: parse_type(t)?,
                fixed_points: args.fixed_points,
            }
        }
        CountedObject::Derangements => {
            reject("--type", args.alternating_type.is_some())?;
            reject("--pattern", args.pattern.is_some())?;
            reject("--fixed-points", args.fixed_points.is_some())?;
            let class = args
                .class
                .as_deref()
                .ok_or_else(|| usage("--class is required for --object derangements"))?;
            CountObject::Derangements {
                class: DerangementClass::from_str(class).map_err(|e| usage(e.to_string()))?,
            }
        }
        CountedObject::Tableaux => {
            reject("--type", args.alternating_type.is_some())?;
            reject("--class", args.class.is_some())?;
            reject("--pattern", args.pattern.is_some())?;
            reject("--fixed-points", args.fixed_points.is_some())?;
            CountObject::Tableaux
        }
        CountedObject::Snakes => {
            reject("--type", args.alternating_type.is_some())?;
            reject("--class", args.class.is_some())?;
            reject("--pattern", args.pattern.is_some())?;
            reject("--fixed-points", args.fixed_points.is_some())?;
            CountObject::Snakes
        }
        CountedObject::TypeA => {
            reject("--type", args.alternating_type.is_some())?;
            reject("--class", args.class.is_some())?;
            let pattern = match args
                .pattern
                .ok_or_else(|| usage("--pattern is required for --object type-a"))?
            {
                PatternArg::Alternating => TypeAPattern::Alternating,
                PatternArg::ReverseAlternating => TypeAPattern::ReverseAlternating,
            };
            CountObject::TypeA { pattern, fixed_points: args.fixed_points }
        }
    };
    let total = count(&CountQuery { n: args.n, object }, bounds).map_err(lib_err)?;
    println!("{total}");
    Ok(ExitCode::SUCCESS)
}

fn run_zeta(args: ZetaArgs) -> Result<ExitCode, CliError> {
    let t = parse_tableau(&read_input(&args.input)?)?;
    require_valid(&t)?;
    let (sigma, traces) = zeta_with_traces(&t);
    if args.trace {
        for (idx, trace) in traces.iter().enumerate() {
            let start = match trace.start() {
                ZigzagStart::FromRow(label) => format!("row {label}"),
                ZigzagStart::FromColumn(label) => format!("col {label}"),
            };
            println!("# σ({}) via {start}:", idx + 1);
            print!("{trace}");
        }
    }
    if args.json {
        println!("{}", to_json(&sigma)?);
    } else {
        println!("{sigma}");
    }
    Ok(ExitCode::SUCCESS)
}

fn run_zeta_inverse(args: ZetaInverseArgs) -> Result<ExitCode, CliError> {
    let sigma = parse_window(&read_input(&args.input)?)?;
    let t = zeta_inverse_bounded(&sigma, args.bound).map_err(lib_err)?;
    println!("{}", to_json(&t)?);
    Ok(ExitCode::SUCCESS)
}

fn run_map(
    args: MapArgs,
    map: fn(&PermutationTableauB, AlternatingType) -> tableaux_b::Result<PermutationTableauB>,
) -> Result<ExitCode, CliError> {
    let t = parse_type(&args.alternating_type)?;
    let input = parse_tableau(&read_input(&args.input)?)?;
    let output = map(&input, t).map_err(lib_err)?;
    match args.emit {
        Emit::Tableau => println!("{}", to_json(&output)?),
        Emit::Permutation => println!("{}", tableaux_b::zeta(&output)),
        Emit::Both => {
            let both = serde_json::json!({
                "tableau": output,
                "permutation": tableaux_b::zeta(&output),
            });
            println!("{both}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_render(args: RenderArgs) -> Result<ExitCode, CliError> {
    let t = parse_tableau(&read_input(&args.input)?)?;
    require_valid(&t)?;
    print!("{}", t.render_ascii());
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let bounds = effective_bounds(args.bound)?;
    let theorems: Vec<Theorem> = if args.theorem.eq_ignore_ascii_case("all") {
        Theorem::ALL.to_vec()
    } else {
        vec![Theorem::from_str(&args.theorem).map_err(|_| {
            let known = Theorem::ALL.map(|t| t.name()).join(", ");
            usage(format!(
                "unknown theorem {:?}; expected \"all\" or one of: {known}",
                args.theorem
            ))
        })?]
    };
    let options = VerifyOptions {
        n_max: args.n_max,
        bounds,
        threads: args.threads,
        samples: args.samples,
        seed: args.seed.unwrap_or(VerifyOptions::default().seed),
    };
    let mut reports = Vec::with_capacity(theorems.len());
    for theorem in theorems {
        reports.push(verify(theorem, &options).map_err(lib_err)?);
    }
    let all_pass = reports.iter().all(|r| r.all_pass());
    if args.json {
        if reports.len() == 1 {
            println!("{}", to_json(&reports[0])?);
        } else {
            println!("{}", to_json(&reports)?);
        }
    } else {
        for (idx, report) in reports.iter().enumerate() {
            if idx > 0 {
                println!();
            }
            print!("{}", report.render_table());
        }
    }
    Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
