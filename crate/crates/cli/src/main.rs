mod commands;
mod input;
mod jobfile;
mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::input::Failure;

#[derive(Parser)]
#[command(name = "flagquant", version, about = "Flag-manifold cohomology and CP1 quantization, in exact arithmetic")]
struct Cli {
    /// Emit machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct SystemArgs {
    /// Root system family (A-G).
    #[arg(short = 'f', long)]
    pub family: String,
    #[arg(short = 'r', long)]
    pub rank: usize,
    /// Comma-separated 1-based indices of the simple roots in Θ.
    #[arg(long, default_value = "")]
    pub theta: String,
}

#[derive(Args, Clone)]
pub struct WeightArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Comma-separated rationals in the fundamental basis.
    #[arg(short = 'w', long, allow_hyphen_values = true)]
    pub weight: String,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology of a homogeneous line bundle.
    Bbw {
        #[command(flatten)]
        args: WeightArgs,
        /// Also check duality with the dual bundle.
        #[arg(long)]
        dual: bool,
    },
    /// Number of negative complement pairings of an s-module parameter.
    Inertia {
        #[command(flatten)]
        args: WeightArgs,
    },
    /// The dual parameter λ′ = −λ − 2δ′_Θ.
    Dual {
        #[command(flatten)]
        args: WeightArgs,
    },
    /// The canonical weight −2δ′_Θ.
    Canonical {
        #[command(flatten)]
        args: SystemArgs,
    },
    /// Covariant symbol of a word in sl2 or of a matrix on O(n).
    Symbol {
        #[arg(long)]
        n: u32,
        /// Word over E, F, H (and h, x, y for the compact basis).
        #[arg(long, conflicts_with = "matrix_file", required_unless_present = "matrix_file")]
        word: Option<String>,
        /// JSON array of rows of Gaussian-rational strings.
        #[arg(long)]
        matrix_file: Option<PathBuf>,
        /// Evaluate at a point, e.g. `z=1/2` or `z=1+i,zbar=1-i`.
        #[arg(long)]
        eval: Option<String>,
    },
    /// Star-product coefficients C_0..C_R.
    Star {
        /// Scale of the Fubini-Study potential; 1 if omitted.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, env = "FLAGQUANT_ORDER", default_value_t = flagquant::starprod::DEFAULT_ORDER)]
        order: u32,
        #[arg(long)]
        eval: Option<String>,
    },
    /// Error of C_0 + C_1/n against the exact Berezin product on O(n).
    Asymptotics {
        #[arg(long, default_value = "(1 - z*zbar)/(1 + z*zbar)")]
        f: String,
        #[arg(long, default_value = "(1 - z*zbar)/(1 + z*zbar)")]
        g: String,
        #[arg(long, default_value = "8,16,32,64")]
        ns: String,
        /// Semicolon-separated chart points.
        #[arg(long, default_value = "1/2;1;2")]
        points: String,
        /// Required error ratio per step of the n-sequence.
        #[arg(long, default_value = "7/2")]
        factor: String,
        /// Dump samples as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Run verification suites or a job file.
    Verify {
        /// Suite to run; `all` unless only a job file is given.
        #[arg(long, value_enum)]
        suite: Option<verify::Suite>,
        #[arg(long)]
        jobfile: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write per-case records to this file as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let json = cli.json;
    let report = match cli.command {
        Command::Bbw { args, dual } => commands::bbw(&args, dual)?,
        Command::Inertia { args } => commands::inertia(&args)?,
        Command::Dual { args } => commands::dual(&args)?,
        Command::Canonical { args } => commands::canonical(&args)?,
        Command::Symbol {
            n,
            word,
            matrix_file,
            eval,
        } => commands::symbol(n, word.as_deref(), matrix_file.as_deref(), eval.as_deref())?,
        Command::Star { n, f, g, order, eval } => commands::star(n.as_deref(), &f, &g, order, eval.as_deref())?,
        Command::Asymptotics {
            f,
            g,
            ns,
            points,
            factor,
            csv,
        } => {
            let rep = commands::asymptotics(&f, &g, &ns, &points, &factor)?;
            if csv && !json {
                print!("{}", commands::asymptotics_csv(&rep));
                return Ok(rep.passed);
            }
            rep.output
        }
        Command::Verify {
            suite,
            jobfile,
            jobs,
            report,
        } => {
            let summary = verify::run(suite, jobfile.as_deref(), jobs)?;
            if let Some(path) = report {
                std::fs::write(&path, output::to_json_string(&summary.records_json()))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let passed = summary.passed();
            if json {
                println!("{}", output::to_json_string(&summary.summary_json()));
            } else {
                print!("{}", summary.human());
            }
            return Ok(passed);
        }
    };
    if json {
        println!("{}", output::to_json_string(&report.json));
    } else {
        print!("{}", output::table(&report.json));
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
