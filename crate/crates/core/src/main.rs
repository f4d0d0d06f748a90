//! Command-line front end. The library's examples/ directory shows the same
//! capabilities programmatically; this binary exists for scripted runs and
//! CI gates (exit codes identify the failing pipeline stage).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use wright_psa::cli::{cmd_coeffs, cmd_eigs, cmd_validate, RunConfig, ValidateKind};

#[derive(Parser)]
#[command(
    name = "wright-psa",
    about = "Validated unstable manifolds for Wright's equation and its pseudospectral approximation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Wright parameter alpha (decimal; the parsed f64 is what gets validated)
    #[arg(long, default_value = "2")]
    alpha: String,
    /// Pseudospectral discretization index
    #[arg(long)]
    n: Option<usize>,
    /// Taylor truncation degree of the computed coefficients
    #[arg(long = "trunc", default_value_t = wright_psa::cli::DEFAULT_TRUNC_N)]
    trunc: u32,
    /// Tail threshold for the resolvent sweep
    #[arg(long = "tail-m", default_value_t = wright_psa::cli::DEFAULT_TAIL_M)]
    tail_m: u32,
    /// First-order coefficient scale
    #[arg(long = "xi-scale", default_value_t = wright_psa::cli::DEFAULT_XI_SCALE)]
    xi_scale: f64,
    /// Override the sweep epsilon (default: just below Re(lambda_n) M - ||D||)
    #[arg(long)]
    epsilon: Option<f64>,
}

impl CommonOpts {
    fn into_config(&self, out: Option<PathBuf>) -> wright_psa::Result<RunConfig> {
        let mut cfg = RunConfig::new(&self.alpha, self.n.unwrap_or(10), self.trunc, self.tail_m)?;
        if !(self.xi_scale > 0.0 && self.xi_scale < 1.0) {
            return Err(wright_psa::Error::Config(
                "xi-scale must lie strictly between 0 and 1".into(),
            ));
        }
        cfg.xi_scale = self.xi_scale;
        cfg.epsilon = self.epsilon;
        cfg.out = out;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validated eigenvalue enclosures: the delay problem's unstable pair,
    /// plus the full census of the discretized system when --n is given
    Eigs {
        #[command(flatten)]
        common: CommonOpts,
        /// Write the enclosures as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a validation pipeline and emit the certificate
    Validate {
        /// Which problem to validate: dde, psa, or distance (both, shared guess)
        #[arg(value_parser = parse_kind)]
        kind: ValidateKind,
        #[command(flatten)]
        common: CommonOpts,
        /// Certificate output path (JSON)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the coefficient guess and write it as CSV
    Coeffs {
        #[command(flatten)]
        common: CommonOpts,
        /// Coefficient output path (CSV)
        #[arg(long)]
        out: PathBuf,
        /// Also write the multiplier table (CSV)
        #[arg(long = "mult-out")]
        mult_out: Option<PathBuf>,
    },
}

fn parse_kind(s: &str) -> Result<ValidateKind, String> {
    match s {
        "dde" => Ok(ValidateKind::Dde),
        "psa" => Ok(ValidateKind::Psa),
        "distance" => Ok(ValidateKind::Distance),
        other => Err(format!(
            "unknown validation kind {other:?} (dde | psa | distance)"
        )),
    }
}

fn run() -> wright_psa::Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Eigs { common, out } => {
            let with_psa = common.n.is_some();
            let cfg = common.into_config(out)?;
            let report = cmd_eigs(&cfg, with_psa)?;
            if let Some(path) = &cfg.out {
                let json = serde_json::json!({
                    "alpha": cfg.alpha_str,
                    "lambda_dde": wright_psa::bounds::LambdaOut::from_pair(&report.dde_pair),
                    "lambda_psa": report.psa_pair.as_ref().map(wright_psa::bounds::LambdaOut::from_pair),
                    "psa_unstable_count": report.psa_unstable_count,
                });
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&json).expect("serializes"),
                )?;
                println!("enclosures written to {}", path.display());
            }
            Ok(())
        }
        Command::Validate { kind, common, out } => {
            let cfg = common.into_config(out)?;
            cmd_validate(&cfg, kind)?;
            Ok(())
        }
        Command::Coeffs {
            common,
            out,
            mult_out,
        } => {
            let cfg = common.into_config(Some(out))?;
            cmd_coeffs(&cfg, mult_out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(u8::try_from(e.exit_code()).unwrap_or(1))
        }
    }
}
