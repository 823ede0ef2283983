//! Command-line driver: evaluate the closed form, verify it against the
//! quadrature oracle over parameter grids, run expansion-convergence
//! studies, generate recursion tables and scan the operator matrix.
//!
//! Exit codes: 0 success, 1 tolerance failure, 2 oracle non-convergence,
//! 64 usage error (bad flags, bad config, out-of-domain parameters).

// validation is written `!(x > 0.0)` so NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod output;
mod report;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_TOLERANCE: i32 = 1;
pub const EXIT_NON_CONVERGED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "bessel-laguerre",
    version,
    about = "Evaluate and cross-verify projections of Bessel functions onto Laguerre bases"
)]
struct Cli {
    /// Output format for tables and reports
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this path instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Relative tolerance used by pass/fail gates (default 1e-7)
    #[arg(long, global = true, value_name = "REAL")]
    tol: Option<f64>,

    /// Worker threads for grid commands (default 1)
    #[arg(long, global = true, value_name = "INT")]
    threads: Option<usize>,

    /// key=value file supplying grid defaults; flags override it
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the closed-form integral at one (n, ν, μ) point
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        mu: f64,
        /// Also print the spectral factors (cos θ, sin θ, A_ν, f_ν, C_n)
        #[arg(long)]
        explain: bool,
    },
    /// Compare closed form against the quadrature oracle over a grid
    Verify {
        /// Comma-separated ν values
        #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
        nu_list: Option<String>,
        /// Comma-separated μ values
        #[arg(long, value_name = "LIST")]
        mu_list: Option<String>,
        /// Comma-separated n values
        #[arg(long, value_name = "LIST")]
        n_list: Option<String>,
        /// Use n = 0..=N instead of --n-list
        #[arg(long, value_name = "N")]
        n_max: Option<u32>,
    },
    /// Sup-norm error of the truncated expansion vs number of terms
    Expand {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        mu: f64,
        /// Comma-separated truncation orders
        #[arg(long, value_name = "LIST", default_value = "5,10,20,40,80")]
        n_terms: String,
        #[arg(long, default_value_t = 0.1)]
        x_min: f64,
        #[arg(long, default_value_t = 20.0)]
        x_max: f64,
        #[arg(long, default_value_t = 200)]
        x_points: usize,
    },
    /// Generate P_0..P_n_max by the three-term recursion
    Recursion {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        n_max: u32,
        /// closed-form: seed from the spectral P_0, P_1; explicit: use --p0/--p1
        #[arg(long, value_enum, default_value_t = commands::SeedMode::ClosedForm)]
        seed_mode: commands::SeedMode,
        #[arg(long, allow_hyphen_values = true)]
        p0: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        p1: Option<f64>,
    },
    /// Operator matrix elements: quadrature vs closed form
    Tridiag {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long)]
        n_max: u32,
    },
}

/// Marker for bad argument values discovered after clap parsing (lists,
/// seed combinations, grid bounds); mapped to exit code 64.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::error::Error for UsageError {}

/// Settings after merging built-in defaults, the config file and flags
/// (flags win).
pub struct Settings {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub tol: f64,
    pub threads: usize,
    pub nu_list: Vec<f64>,
    pub mu_list: Vec<f64>,
    pub n_list: Vec<u32>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };

    let file_cfg = match cli.config.as_deref().map(config::FileConfig::load) {
        Some(Ok(cfg)) => cfg,
        Some(Err(e)) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
        None => config::FileConfig::default(),
    };

    let settings = match merge_settings(&cli, file_cfg) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };

    let outcome = match &cli.command {
        Command::Eval { n, nu, mu, explain } => commands::eval(&settings, *n, *nu, *mu, *explain),
        Command::Verify {
            nu_list,
            mu_list,
            n_list,
            n_max,
        } => report::verify(
            &settings,
            nu_list.as_deref(),
            mu_list.as_deref(),
            n_list.as_deref(),
            *n_max,
        ),
        Command::Expand {
            nu,
            mu,
            n_terms,
            x_min,
            x_max,
            x_points,
        } => commands::expand(&settings, *nu, *mu, n_terms, *x_min, *x_max, *x_points),
        Command::Recursion {
            nu,
            alpha,
            mu,
            n_max,
            seed_mode,
            p0,
            p1,
        } => commands::recursion(&settings, *nu, *alpha, *mu, *n_max, *seed_mode, *p0, *p1),
        Command::Tridiag {
            nu,
            alpha,
            mu,
            n_max,
        } => commands::tridiag(&settings, *nu, *alpha, *mu, *n_max),
    };

    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            // domain violations and bad argument values are usage mistakes
            if e.downcast_ref::<bessel_laguerre::Error>().is_some()
                || e.downcast_ref::<UsageError>().is_some()
            {
                EXIT_USAGE
            } else {
                EXIT_TOLERANCE
            }
        }
    }
}

fn merge_settings(cli: &Cli, file_cfg: config::FileConfig) -> anyhow::Result<Settings> {
    let format = cli.format.or(file_cfg.format).unwrap_or(Format::Csv);
    let out = cli.out.clone().or(file_cfg.out);
    let tol = cli.tol.or(file_cfg.tol).unwrap_or(1e-7);
    if !(tol > 0.0) {
        anyhow::bail!("--tol must be positive, got {tol}");
    }
    let threads = cli.threads.or(file_cfg.threads).unwrap_or(1);
    if threads == 0 {
        anyhow::bail!("--threads must be at least 1");
    }
    Ok(Settings {
        format,
        out,
        tol,
        threads,
        nu_list: file_cfg
            .nu_list
            .unwrap_or_else(|| vec![0.0, 0.25, 0.5, 1.0, 2.5]),
        mu_list: file_cfg
            .mu_list
            .unwrap_or_else(|| vec![0.1, 0.5, 1.0, 3.0, 10.0]),
        n_list: file_cfg
            .n_list
            .unwrap_or_else(|| vec![0, 1, 2, 5, 10, 20, 30]),
    })
}
