//! Command-line front end: Lascoux polynomials, product expansions,
//! K-theoretic insertion, the bijection Ψ and the property suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lascoux::expansion::{expand_grothendieck, expand_product_with, ProductOptions};
use lascoux::insertion::{psi, psi_inverse, reverse_insert};
use lascoux::polynomials::lascoux;
use lascoux::verify::{run_suite, Suite};
use lascoux::Error;

use lascoux_cli::format::{self, ParseError};

#[derive(Parser)]
#[command(name = "lascoux", version, about = "Lascoux polynomials and their product expansions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Lascoux polynomial of a weak composition.
    Lascoux {
        /// Weak composition, e.g. 0,2,1.
        #[arg(long)]
        alpha: String,
        /// Number of variables (defaults to the length of alpha).
        #[arg(long)]
        n: Option<usize>,
        /// Print the key polynomial (β = 0) instead.
        #[arg(long)]
        beta0: bool,
    },
    /// Expand L_α · G_w(x_1, …, x_n) in the Lascoux basis.
    Expand {
        /// Weak composition, e.g. 0,2,1.
        #[arg(long)]
        alpha: String,
        /// Permutation in one-line notation, e.g. 321 or 3,2,1.
        #[arg(long)]
        w: String,
        /// Number of variables (defaults to the length of alpha).
        #[arg(long)]
        n: Option<usize>,
        /// Skip the polynomial identity check.
        #[arg(long)]
        no_verify: bool,
        /// Print a JSON object {"γ": [c_0, c_1, …]} instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Expand the Grothendieck polynomial G_w in the Lascoux basis.
    Grothendieck {
        /// Permutation in one-line notation.
        #[arg(long)]
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Reverse-insert from an outer cell of an increasing tableau.
    Insert {
        /// File with one tableau row per line.
        #[arg(long)]
        tableau: PathBuf,
        /// Outer cell as row,column (1-based).
        #[arg(long)]
        cell: String,
        /// The parameter α ∈ {0, 1}.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=1))]
        alpha: u8,
    },
    /// Apply Ψ to a tableau pair, or Ψ⁻¹ to a compatible pair.
    Psi {
        /// File holding P and Q separated by a blank line.
        #[arg(long, conflicts_with = "inverse", required_unless_present = "inverse")]
        pair: Option<PathBuf>,
        /// A compatible pair "(a, i)".
        #[arg(long)]
        inverse: Option<String>,
    },
    /// Run randomized and exhaustive property suites.
    Verify {
        /// setops, leftkey, insertion, expansion or all.
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random instances per randomized property.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
}

/// Why a command failed, mapped to the process exit code.
enum Failure {
    Usage(String),
    Verification(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityMismatch(_) | Error::NegativeCoefficient(_) => Failure::Verification(e.to_string()),
            Error::Internal(_) | Error::IterationCap { .. } | Error::NotInSpan => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn parse_cell(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("'{s}' is not a cell row,column (1-based)"));
    let (r, c) = s.split_once(',').ok_or_else(bad)?;
    let r: usize = r.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if r == 0 || c == 0 {
        return Err(bad());
    }
    Ok((r - 1, c - 1))
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Lascoux { alpha, n, beta0 } => {
            let alpha = format::parse_composition(&alpha)?;
            let n = n.unwrap_or(alpha.len());
            if alpha.len() > n {
                return Err(Failure::Usage(format!("alpha has {} parts but n = {n}", alpha.len())));
            }
            let p = lascoux(&alpha, n);
            println!("{}", if beta0 { p.beta_zero() } else { p });
        }
        Command::Expand { alpha, w, n, no_verify, json } => {
            let alpha = format::parse_composition(&alpha)?;
            let w = format::parse_permutation(&w)?;
            let n = n.unwrap_or(alpha.len());
            let options = ProductOptions {
                verify: !no_verify,
                ..ProductOptions::default()
            };
            let e = expand_product_with(&alpha, &w, n, &options)?;
            if json {
                println!("{}", format::expansion_to_json(&e));
            } else {
                println!("{e}");
            }
        }
        Command::Grothendieck { w, json } => {
            let w = format::parse_permutation(&w)?;
            let e = expand_grothendieck(&w)?;
            if json {
                println!("{}", format::expansion_to_json(&e));
            } else {
                println!("{e}");
            }
        }
        Command::Insert { tableau, cell, alpha } => {
            let p = format::parse_tableau(&read(&tableau)?)?;
            let (r, c) = parse_cell(&cell)?;
            let out = reverse_insert(&p, r, c, alpha == 1)?;
            let trace: Vec<String> = out.trace.iter().map(|t| t.to_string()).collect();
            print!("{}", format::format_insertion(&trace, out.m, &out.p_prime));
        }
        Command::Psi { pair, inverse } => match (pair, inverse) {
            (Some(path), None) => {
                let pair = format::parse_pair(&read(&path)?)?;
                println!("{}", psi(&pair)?);
            }
            (None, Some(x)) => {
                let x = format::parse_compatible_pair(&x)?;
                println!("{}", format::format_pair(&psi_inverse(&x)?));
            }
            _ => return Err(Failure::Usage("give exactly one of --pair or --inverse".into())),
        },
        Command::Verify { suite, seed, trials } => {
            let outcomes = run_suite(suite, seed, trials);
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            for o in &outcomes {
                println!("{o}");
            }
            println!("{} properties, {failed} failed", outcomes.len());
            if failed > 0 {
                return Err(Failure::Verification(format!("{failed} properties failed")));
            }
        }
    }
    Ok(())
}

fn configure_workers() -> Result<(), Failure> {
    let Ok(value) = std::env::var("LASCOUX_WORKERS") else {
        return Ok(());
    };
    let workers: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| Failure::Usage(format!("LASCOUX_WORKERS must be a positive integer, got '{value}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_workers().and_then(|()| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
