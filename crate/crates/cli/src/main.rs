//! Command-line surface: compute invariants for a named group, regenerate
//! the per-family tables with oracle cross-stamps, and run the verification
//! suites.
//!
//! Exit codes: 0 success, 2 parse/validation error, 3 applicability
//! violation, 4 table mismatch, 5 verification failure.

mod datum_file;
mod envelope;
mod quantities;
mod tables;

use clap::{Args, Parser, Subcommand};
use piclat_core::error::Error;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "piclat", version, about = "Exact Picard-lattice invariants of moduli of bundles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute one invariant for a group, genus, and component class.
    Compute(ComputeArgs),
    /// Regenerate a family table, cross-stamping every row with the oracle.
    Table(TableArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
pub struct ComputeArgs {
    /// Group spec, e.g. GL:3, SL:4/mu:2, Spin:10, C[mu:2](Sp:4), torus:2 x G2
    #[arg(long, conflicts_with = "datum_file")]
    group: Option<String>,
    /// Custom root datum file (key/value plus matrix block)
    #[arg(long)]
    datum_file: Option<std::path::PathBuf>,
    /// Genus of the curves
    #[arg(long, default_value_t = 1)]
    g: usize,
    /// Number of marked points
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Component class as an integer shorthand (resolved per builder)
    #[arg(long, conflicts_with = "delta_vec")]
    delta: Option<i64>,
    /// Component class as an explicit lift vector, e.g. "1/2,0,1"
    #[arg(long)]
    delta_vec: Option<String>,
    /// One of: pi1, center-chars, dcenter-chars, form-lattice, coker-rg,
    /// coker-ev, coker-ev-tilde, coker-omega, coker-gamma-bar,
    /// im-omega-gamma, rpic-report, ns-ranks, coker-res-bar, curve-ns,
    /// genus0-report, cl-report
    #[arg(long)]
    quantity: String,
    /// Form-lattice kind for --quantity form-lattice
    #[arg(long, default_value = "d-even")]
    kind: String,
    /// Compute on the rigidification where the quantity distinguishes
    #[arg(long, default_value_t = false)]
    rigidified: bool,
    /// Ground-field characteristic (for cl-report)
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Output format: json or md
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
pub struct TableArgs {
    /// Family: A, BC, D, E, FG, or tori
    #[arg(long)]
    family: String,
    /// Largest n for the type-A family
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    /// Largest rank for the B/C and D families
    #[arg(long, default_value_t = 6)]
    lmax: usize,
    /// Torus dimension
    #[arg(long, default_value_t = 1)]
    dim: usize,
    /// Genus for the torus family
    #[arg(long, default_value_t = 2)]
    g: usize,
    /// Largest class divisibility for the torus family
    #[arg(long, default_value_t = 4)]
    dmax: i64,
    /// Output format: json or md
    #[arg(long, default_value = "md")]
    format: String,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// One of: type-sweeps, torus-closed-forms, im-factors,
    /// order-identities, rank-bookkeeping, weyl-bruteforce, functoriality,
    /// gl-sanity (default: all)
    #[arg(long)]
    suite: Option<String>,
}

fn main() -> ExitCode {
    init_thread_pool();
    let cli = Cli::parse();
    let out = match cli.cmd {
        Cmd::Compute(args) => quantities::run_compute(&args),
        Cmd::Table(args) => tables::run_table(&args),
        Cmd::Verify(args) => tables::run_verify(&args),
    };
    match out {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// PICLAT_THREADS caps worker parallelism for the table/verify fan-out.
fn init_thread_pool() {
    if let Ok(v) = std::env::var("PICLAT_THREADS") {
        if let Ok(n) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
        }
    }
}

/// 3 for applicability violations, 2 for parse/validation problems.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Genus0NotHere | Error::GenusOutOfRange(_) | Error::NeedsMarkedPoint => 3,
        _ => 2,
    }
}

/// Writes a line to stdout, tolerating a closed pipe.
pub fn emit(line: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", line);
}
