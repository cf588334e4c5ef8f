//! utlab: experiment harness for tensor norms of unitary families, exact
//! free-group walk counts, and quaternionic representation towers.
//!
//! Exit codes: 0 = all in-run contracts held; 1 = a contract was violated
//! (the violating record is identified on stderr); 2 = usage error;
//! 3 = I/O error.

mod report;
mod runner;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use report::{ConfigEcho, ExperimentReport, OutputFormat};
use runner::RunResult;

/// Environment variable naming the default output directory for bare
/// --out file names.
const OUT_DIR_ENV: &str = "UTLAB_OUT_DIR";

#[derive(Parser)]
#[command(
    name = "utlab",
    version,
    about = "Numerical laboratory for quadratic forms in unitary operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Base RNG seed; trial i draws from stream i of this seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Contract tolerance for gap checks.
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Output path (stdout when omitted). Bare file names resolve under
    /// $UTLAB_OUT_DIR when that is set.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads over independent trials; merge order is by trial
    /// index either way.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Record per-trial wall time. Off by default so that identical
    /// (config, seed) runs emit byte-identical reports.
    #[arg(long, default_value_t = false)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal tensor norm of Σ uᵢ ⊗ ūᵢ over Haar families, with the
    /// 2√(n−1) gap and the triangle ceiling n.
    Norm {
        /// Family size (1..=16).
        #[arg(long)]
        n: usize,
        /// Matrix dimension (1..=64).
        #[arg(long)]
        dim: usize,
        /// Independent Haar trials.
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Haar sampler diagnostics: unitarity defects and the |tr U|² moment.
    Randcheck {
        /// Matrix dimension (1..=64).
        #[arg(long)]
        dim: usize,
        /// Sample count; the moment window check engages at ≥ 2000.
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Moment domination ⟨(T*T)^m t, t⟩ ≥ card(I′) on random PSD t.
    Szarek {
        /// Family size (1..=8).
        #[arg(long)]
        n: usize,
        /// Matrix dimension (1..=32).
        #[arg(long)]
        dim: usize,
        /// Moment order (1..=6).
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Independent trials.
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact walk counts: identity patterns for --gens, or closed tree
    /// walks with --tree-degree. One row per half-length up to --steps.
    Walks {
        /// Number of free generators (≥ 1).
        #[arg(long)]
        gens: u64,
        /// Largest half-length m (≤ 2000).
        #[arg(long)]
        steps: usize,
        /// Count closed walks on the regular tree of this degree instead.
        #[arg(long)]
        tree_degree: Option<u64>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Mixed trace moments against exact counts (absorption at finite size).
    Absorb {
        /// Family size (≥ 1, with n^(2m) ≤ 1e6).
        #[arg(long)]
        n: usize,
        /// Matrix dimension (1..=64).
        #[arg(long)]
        dim: usize,
        /// Moment order.
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Independent Haar trials.
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Norm-p quaternion tower: per-block norms against the 2√p ceiling.
    Lps {
        /// Prime p ≡ 1 (mod 4).
        #[arg(long)]
        prime: u64,
        /// Largest irreducible degree (1..=60).
        #[arg(long, default_value_t = 40)]
        degree_cutoff: usize,
        /// Also export the tower (quaternions, generators, blocks) as JSON.
        #[arg(long)]
        export_tower: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Cross-term tensor norms over all degree pairs of the tower.
    Cn {
        /// Prime p ≡ 1 (mod 4).
        #[arg(long)]
        prime: u64,
        /// Largest degree in the pair sweep (1..=12).
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_range(name: &str, value: usize, lo: usize, hi: usize) -> Result<(), CliError> {
    if value < lo || value > hi {
        return Err(usage(format!(
            "--{name} must lie in {lo}..={hi}, got {value}"
        )));
    }
    Ok(())
}

fn resolve_out(path: &std::path::Path) -> PathBuf {
    if path.is_absolute() || path.parent().map(|p| !p.as_os_str().is_empty()) == Some(true) {
        return path.to_path_buf();
    }
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) => PathBuf::from(dir).join(path),
        None => path.to_path_buf(),
    }
}

fn emit_report(
    config: ConfigEcho,
    result: &RunResult,
    format: OutputFormat,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let report = ExperimentReport {
        config,
        records: result.records.clone(),
        summary: result.summary.clone(),
    };
    match out {
        None => {
            print!("{}", report.emit(format));
            Ok(())
        }
        Some(path) => {
            let resolved = resolve_out(path);
            report.write_to(&resolved, format).map_err(CliError::Io)
        }
    }
}

fn run(cli: Cli) -> Result<Vec<String>, CliError> {
    match cli.command {
        Command::Norm {
            n,
            dim,
            trials,
            common,
        } => {
            check_range("n", n, 1, 16)?;
            check_range("dim", dim, 1, 64)?;
            check_range("trials", trials, 1, 100_000)?;
            let result = runner::run_norm(
                n,
                dim,
                trials,
                common.seed,
                common.tol,
                common.jobs,
                common.timings,
            );
            let mut config = ConfigEcho::new(
                "norm",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.n = Some(n as u64);
            config.dim = Some(dim as u64);
            config.trials = Some(trials as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Randcheck {
            dim,
            samples,
            common,
        } => {
            check_range("dim", dim, 1, 64)?;
            check_range("samples", samples, 1, 1_000_000)?;
            let result =
                runner::run_randcheck(dim, samples, common.seed, common.jobs, common.timings);
            let mut config = ConfigEcho::new(
                "randcheck",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.dim = Some(dim as u64);
            config.samples = Some(samples as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Szarek {
            n,
            dim,
            m,
            trials,
            common,
        } => {
            check_range("n", n, 1, 8)?;
            check_range("dim", dim, 1, 32)?;
            check_range("m", m, 1, 6)?;
            check_range("trials", trials, 1, 10_000)?;
            let result =
                runner::run_szarek(n, dim, m, trials, common.seed, common.jobs, common.timings);
            let mut config = ConfigEcho::new(
                "szarek",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.n = Some(n as u64);
            config.dim = Some(dim as u64);
            config.m = Some(m as u64);
            config.trials = Some(trials as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Walks {
            gens,
            steps,
            tree_degree,
            common,
        } => {
            if gens < 1 {
                return Err(usage("--gens must be >= 1"));
            }
            check_range("steps", steps, 0, 2000)?;
            if let Some(d) = tree_degree {
                if d < 2 {
                    return Err(usage("--tree-degree must be >= 2"));
                }
            }
            let result = runner::run_walks(gens, steps, tree_degree, common.timings)
                .map_err(|e| usage(e.to_string()))?;
            let mut config = ConfigEcho::new(
                "walks",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.gens = Some(gens);
            config.steps = Some(steps as u64);
            config.tree_degree = tree_degree;
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Absorb {
            n,
            dim,
            m,
            trials,
            common,
        } => {
            check_range("n", n, 1, 16)?;
            check_range("dim", dim, 1, 64)?;
            check_range("m", m, 0, 10)?;
            check_range("trials", trials, 1, 10_000)?;
            if (n as f64).powi(2 * m as i32) > 1e6 {
                return Err(usage(format!(
                    "n^(2m) = {n}^{} exceeds the 1e6 enumeration cap",
                    2 * m
                )));
            }
            let result =
                runner::run_absorb(n, dim, m, trials, common.seed, common.jobs, common.timings);
            let mut config = ConfigEcho::new(
                "absorb",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.n = Some(n as u64);
            config.dim = Some(dim as u64);
            config.m = Some(m as u64);
            config.trials = Some(trials as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Lps {
            prime,
            degree_cutoff,
            export_tower,
            common,
        } => {
            check_range("degree-cutoff", degree_cutoff, 1, 60)?;
            if prime % 4 != 1 {
                return Err(usage(format!(
                    "--prime {prime} is unsupported: the construction requires a prime p ≡ 1 (mod 4)"
                )));
            }
            let (result, tower) =
                runner::run_lps(prime, degree_cutoff, common.jobs, common.timings)
                    .map_err(|e| usage(e.to_string()))?;
            if let Some(path) = &export_tower {
                let resolved = resolve_out(path);
                std::fs::write(&resolved, tower.to_json())?;
            }
            let mut config = ConfigEcho::new(
                "lps",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.prime = Some(prime);
            config.degree_cutoff = Some(degree_cutoff as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
        Command::Cn {
            prime,
            max_m,
            common,
        } => {
            check_range("max-m", max_m, 1, 12)?;
            if prime % 4 != 1 {
                return Err(usage(format!(
                    "--prime {prime} is unsupported: the construction requires a prime p ≡ 1 (mod 4)"
                )));
            }
            let result = runner::run_cn(
                prime,
                max_m,
                common.seed,
                common.tol,
                common.jobs,
                common.timings,
            )
            .map_err(|e| usage(e.to_string()))?;
            let mut config = ConfigEcho::new(
                "cn",
                common.seed,
                common.tol,
                common.format,
                common.jobs as u64,
                common.timings,
            );
            config.prime = Some(prime);
            config.max_m = Some(max_m as u64);
            emit_report(config, &result, common.format, &common.out)?;
            Ok(result.violations)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(violations) if violations.is_empty() => 0,
        Ok(violations) => {
            for v in &violations {
                eprintln!("contract violation: {v}");
            }
            1
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Io(e)) => {
            eprintln!("I/O error: {e}");
            3
        }
    };
    std::process::exit(code);
}
