use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use unram::commands::{self, Report, Settings};
use unram::scan::ScanParams;
use unram::{CliResult, ProblemFile};
use unram_core::fflinalg::Caps;

#[derive(Parser)]
#[command(
    name = "unram",
    version,
    about = "Fans, delta-pairs and unramified classes of class-two l-groups"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest rank n accepted for exhaustive computations.
    #[arg(long = "cap-n", global = true, default_value_t = 6)]
    cap_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the noncyclic liftable subgroups, or all of them with --complete.
    Fan {
        input: PathBuf,
        #[arg(long)]
        complete: bool,
    },
    /// List the maximal delta-pairs (I, d_max(I)).
    DeltaPairs {
        input: PathBuf,
        /// Also list the pair with I = 0.
        #[arg(long)]
        include_trivial: bool,
    },
    /// Report r2_sigma, r2_min and the degree-2 unramified quotient.
    Unramified { input: PathBuf },
    /// Compare two forms up to isoclinism.
    Isoclinic {
        a: PathBuf,
        b: PathBuf,
        /// Allow a change of basis of G^a (n <= 4).
        #[arg(long)]
        orbit: bool,
    },
    /// Split off the radical.
    Reduce { input: PathBuf },
    /// Compare the criteria with group computations on random forms.
    OracleVerify {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
    /// Check the action on the product of projectivized induced representations.
    Projcheck {
        input: PathBuf,
        /// Prime q = 1 mod l; defaults to the smallest such prime.
        #[arg(long)]
        q: Option<u32>,
    },
    /// Census of kernels of codimension r, one record per orbit.
    Scan {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
        /// Keep existing records in --out and compute only the missing ones.
        #[arg(long)]
        resume: bool,
    },
}

fn run(cli: &Cli) -> CliResult<Report> {
    let settings = Settings {
        caps: Caps {
            max_n: cli.cap_n,
            ..Caps::default()
        },
        seed: cli.seed,
    };
    let s = &settings;
    match &cli.command {
        Command::Fan { input, complete } => commands::cmd_fan(&ProblemFile::load(input)?, *complete, s),
        Command::DeltaPairs { input, include_trivial } => {
            commands::cmd_delta_pairs(&ProblemFile::load(input)?, *include_trivial, s)
        }
        Command::Unramified { input } => commands::cmd_unramified(&ProblemFile::load(input)?, s),
        Command::Isoclinic { a, b, orbit } => {
            commands::cmd_isoclinic(&ProblemFile::load(a)?, &ProblemFile::load(b)?, *orbit, s)
        }
        Command::Reduce { input } => commands::cmd_reduce(&ProblemFile::load(input)?, s),
        Command::OracleVerify { l, n, samples } => commands::cmd_oracle_verify(*l, *n, *samples, s),
        Command::Projcheck { input, q } => commands::cmd_projcheck(&ProblemFile::load(input)?, *q, s),
        Command::Scan { l, n, r, out, resume } => {
            let params = ScanParams {
                l: *l,
                n: *n,
                r: *r,
                caps: settings.caps,
            };
            commands::cmd_scan(&params, out, *resume)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("{w}");
            }
            let body = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.json).expect("json value"))
            } else {
                report.text
            };
            // a closed pipe on stdout is not a failure of the computation
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(report.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
