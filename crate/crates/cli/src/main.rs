use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxkernel::codes::CodesError;
use maxkernel::gf::Field;
use maxkernel::parallel::with_workers;
use maxkernel::trinomial::{TrinomialError, DEFAULT_BUDGET};
use maxkernel::verify::VerifyError;
use serde::Serialize;

mod commands;

pub const SCHEMA: &str = "maxkernel/1";

/// Maximum-kernel σ-linearized trinomials: verification campaigns,
/// enumeration, codeword censuses and cyclic subspace codes.
#[derive(Parser, Debug)]
#[command(name = "maxkernel", version)]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct RunConfig {
    /// Characteristic.
    #[arg(long, global = true, default_value_t = 2)]
    pub p: u64,
    /// q = p^h.
    #[arg(long, global = true, default_value_t = 1)]
    pub h: usize,
    /// Extension degree of F_{q^n} over F_q.
    #[arg(long, global = true, default_value_t = 7)]
    pub n: usize,
    /// σ = x ↦ x^{q^s}, gcd(s, n) = 1.
    #[arg(long, global = true, default_value_t = 1)]
    pub s: usize,
    /// σ-degree of the trinomial.
    #[arg(long, global = true, default_value_t = 3)]
    pub d: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum number of kernel computations (or equivalent checks).
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
    pub budget: u128,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide. Never changes the output.
    #[arg(long, global = true, default_value_t = 0)]
    #[serde(skip)]
    pub workers: usize,
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleArg {
    /// σ-companion vector sweep.
    Vector,
    /// Kernel dimension of every pair.
    Kernel,
}

fn parse_budget(s: &str) -> Result<u128, String> {
    let v: u128 = s.parse().map_err(|e| format!("{e}"))?;
    if v == 0 {
        return Err("budget must be at least 1".into());
    }
    Ok(v)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification campaign.
    Verify {
        /// One of: gow, companion, main-system, mcg-abc, even-family, d3, d4,
        /// neccond, pascal, prop33, cor34.
        target: String,
        /// Check this many seeded samples instead of the exhaustive grid.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// List every (a, b) with a d-dimensional kernel.
    Enumerate {
        #[arg(long, value_enum, default_value_t = OracleArg::Vector)]
        oracle: OracleArg,
    },
    /// Rank-weight distribution of ⟨x, x^σ, x^{σ^d}⟩.
    Census,
    /// Orbit code of the kernel of a maximum-kernel trinomial.
    BuildCode {
        /// Certify the minimum distance against all shifts.
        #[arg(long)]
        certify: bool,
        /// Trinomial coefficient a (hex); defaults to the first known instance.
        #[arg(long)]
        a: Option<String>,
        /// Trinomial coefficient b (hex); derived from a when omitted.
        #[arg(long)]
        b: Option<String>,
    },
    /// Quasi-subfield test of x^{q^d} − bx^q − ax.
    Quasi {
        #[arg(long)]
        a: String,
        /// Derived from a by the even-characteristic family when omitted.
        #[arg(long)]
        b: Option<String>,
    },
    /// Describe the field.
    FieldInfo,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Enumerate { .. } => "enumerate",
            Command::Census => "census",
            Command::BuildCode { .. } => "build-code",
            Command::Quasi { .. } => "quasi",
            Command::FieldInfo => "field-info",
        }
    }
}

/// Whether the mathematical checks of a run passed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Counterexample,
}

/// Result of a command in all three formats.
pub struct Output {
    pub status: Status,
    pub json: serde_json::Value,
    pub csv: Vec<u8>,
    pub text: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    command: &'static str,
    config: &'a RunConfig,
    result: &'a serde_json::Value,
    /// Wall-clock data; excluded from reproducibility comparisons.
    runtime: Runtime,
}

#[derive(Serialize)]
struct Runtime {
    workers: usize,
    elapsed_ms: u128,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let budget = err.chain().any(|e| {
        matches!(e.downcast_ref::<VerifyError>(), Some(VerifyError::BudgetExceeded { .. }))
            || matches!(e.downcast_ref::<TrinomialError>(), Some(TrinomialError::BudgetExceeded { .. }))
            || matches!(
                e.downcast_ref::<CodesError>(),
                Some(CodesError::BudgetExceeded { .. } | CodesError::Trinomial(TrinomialError::BudgetExceeded { .. }))
            )
    });
    if budget {
        3
    } else {
        2
    }
}

fn run(cli: &Cli) -> anyhow::Result<Status> {
    let cfg = &cli.cfg;
    let field = Field::new(cfg.p, cfg.h, cfg.n, cfg.s).context("invalid field parameters")?;
    let start = Instant::now();
    let out = with_workers(cfg.workers, || match &cli.command {
        Command::Verify { target, samples } => commands::verify(&field, cfg, target, *samples),
        Command::Enumerate { oracle } => commands::enumerate(&field, cfg, *oracle),
        Command::Census => commands::census(&field, cfg),
        Command::BuildCode { certify, a, b } => commands::build_code(&field, cfg, *certify, a.as_deref(), b.as_deref()),
        Command::Quasi { a, b } => commands::quasi(&field, cfg, a, b.as_deref()),
        Command::FieldInfo => commands::field_info(&field),
    })?;
    let elapsed_ms = start.elapsed().as_millis();
    let bytes = match cfg.format {
        Format::Json => {
            let env = Envelope {
                schema: SCHEMA,
                command: cli.command.name(),
                config: cfg,
                result: &out.json,
                runtime: Runtime { workers: cfg.workers, elapsed_ms },
            };
            let mut v = serde_json::to_vec_pretty(&env)?;
            v.push(b'\n');
            v
        }
        Format::Csv => out.csv,
        Format::Text => out.text.into_bytes(),
    };
    match &cfg.out {
        Some(path) => std::fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(out.status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
