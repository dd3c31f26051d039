use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

/// HOMFLY polynomials of torus knots, modular trivializing knots and the
/// mod-2 classification of small-span knot polynomials.
#[derive(Debug, Parser)]
#[command(name = "knotdb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Knot whose polynomial at z = N is 1 modulo P.
    TrivialKnot {
        #[arg(long)]
        prime: u64,
        #[arg(long, allow_hyphen_values = true)]
        eval: i64,
    },
    /// Period of the torus coefficient recurrence modulo P at z = N.
    Period {
        #[arg(long)]
        prime: u64,
        #[arg(long, allow_hyphen_values = true)]
        eval: i64,
    },
    /// HOMFLY polynomial of T(2,n), optionally evaluated and reduced.
    Torus {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<i64>,
        #[arg(long = "mod", requires = "eval")]
        modulus: Option<u64>,
    },
    /// HOMFLY polynomial of a braid closure via skein resolution.
    Homfly {
        #[arg(long)]
        strands: u16,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Classify P(a,1) mod 2 in a degree window.
    Classify {
        /// Window as LO..HI, e.g. -4..6.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Knot table CSV; the bundled table when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Maximal number of connected summands in the search.
        #[arg(long, default_value_t = 3)]
        max_factors: usize,
    },
    /// Braid-index bound for every P(a,1) mod 2 of span at most 10.
    Corollary {
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// Check every invariant of a knot table.
    VerifyTable {
        #[arg(long)]
        data: Option<PathBuf>,
    },
    /// F_{p-(p/5)} mod p for all primes up to the bound.
    FibCheck {
        #[arg(long)]
        max_prime: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::TrivialKnot { prime, eval } => commands::trivial_knot_cmd(prime, eval),
        Command::Period { prime, eval } => commands::period(prime, eval),
        Command::Torus { n, eval, modulus } => commands::torus(n, eval, modulus),
        Command::Homfly { strands, word } => commands::homfly(strands, &word),
        Command::Classify {
            window,
            data,
            json,
            max_factors,
        } => commands::classify(&window, data.as_deref(), json, max_factors),
        Command::Corollary { data } => commands::corollary(data.as_deref()),
        Command::VerifyTable { data } => commands::verify_table(data.as_deref()),
        Command::FibCheck { max_prime } => commands::fib_check(max_prime),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if !e.stdout.is_empty() {
                print!("{}", e.stdout);
            }
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
