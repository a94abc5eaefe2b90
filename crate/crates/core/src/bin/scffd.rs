use std::process::ExitCode;

use clap::Parser;
use scffd_core::{run_query, Query};

/// Query divisors, units, irreducibility and primality in a described ring.
/// Prints one JSON document on stdout.
#[derive(Parser, Debug)]
#[command(name = "scffd", version)]
struct Cli {
    /// divisors, units, irreducible, prime, associates, factor, reduce,
    /// member, stage-trace or parse
    command: String,
    /// Ring descriptor, e.g. `Quad(5)` or `Staged(primes=[0,2], vars=[x0,x1])`
    #[arg(long)]
    ring: String,
    /// Element expression; repeat for commands taking two elements
    #[arg(long = "elem", allow_hyphen_values = true)]
    elems: Vec<String>,
    /// `limit` or `stage:K`, for staged descriptors only
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    max_tuples: Option<u64>,
    #[arg(long)]
    max_degree: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run_query(&Query {
        command: cli.command,
        ring: cli.ring,
        elems: cli.elems,
        mode: cli.mode,
        max_tuples: cli.max_tuples,
        max_degree: cli.max_degree,
    });
    print!("{}", out.render());
    ExitCode::from(out.exit_code as u8)
}
