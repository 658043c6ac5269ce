mod commands;
mod config;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::RunConfig;

/// Exact real-rootedness certificates, Turán and Laguerre operators, and
/// onset tables for integer sequences.
#[derive(Parser, Debug)]
#[command(name = "turan", version)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// partition | planepartition | file:PATH | builtin:NAME(ARGS)
    #[arg(long, global = true)]
    seq: Option<String>,
    /// Sequence ceiling: terms are generated for indices 0..=nmax.
    #[arg(long, global = true)]
    nmax: Option<usize>,
    #[arg(long, global = true)]
    jmax: Option<usize>,
    #[arg(long, global = true)]
    kmax: Option<usize>,
    /// backward | centered | start | all
    #[arg(long, global = true)]
    anchor: Option<String>,
    /// gt | ge
    #[arg(long, global = true)]
    strict: Option<String>,
    /// Directory for cached generated sequences.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// csv | markdown | json
    #[arg(long, global = true)]
    format: Option<String>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// key=value file; flags on the command line win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate or ingest a sequence and print it.
    Seq {
        /// Also save it in the sequence text format.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hyperbolicity of J^{d,n} for a range of shifts.
    Jensen {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Certify that a polynomial has only real roots.
    Certify {
        /// Coefficients from the constant term up, space separated.
        #[arg(long)]
        poly: String,
        /// sturm | hankel | both
        #[arg(long, default_value = "both")]
        method: String,
    },
    /// Values of T_j^{(k)} over a range of indices.
    Turan {
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Values of L_k at the origin over a range of shifts.
    Laguerre {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Apply L_k this many times through the series route.
        #[arg(long, default_value_t = 1)]
        iterations: usize,
    },
    /// Coefficient multipliers and witness tests.
    Multseq {
        #[command(subcommand)]
        action: MultAction,
    },
    /// Minimal onset of a predicate on the scanned window.
    Threshold {
        /// turan | laguerre | jensen
        #[arg(long)]
        family: String,
        #[arg(long)]
        j: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Onsets of T_j^{(k)}(p(n)) > 0 for j <= jmax, k <= kmax.
    Table1 {
        /// Append onset / ((6/pi^2)(jk)^2 (log jk)^2) as floating values.
        #[arg(long)]
        ratios: bool,
    },
    /// Onsets of L_j(phi_p^{(n)})(0) >= 0 for j <= jmax.
    Table2,
    /// Run every property suite.
    Check,
}

#[derive(Subcommand, Debug)]
pub enum MultAction {
    /// Apply Gamma at a shift to one polynomial.
    Gamma {
        #[arg(long)]
        shift: usize,
        #[arg(long)]
        poly: String,
    },
    /// Seeded search for inputs that lose real-rootedness.
    Witness {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        shift: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Draw inputs whose roots share one sign.
        #[arg(long)]
        type_ii: bool,
    },
    /// Schur-Szego composition of two polynomials of equal degree.
    Schur {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    /// Termwise product with another sequence.
    Hadamard {
        #[arg(long)]
        with: String,
    },
    /// Zero placement and sign pattern of a window.
    Structure {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

fn build_config(g: GlobalArgs) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig {
        seq: g.seq,
        nmax: g.nmax,
        jmax: g.jmax,
        kmax: g.kmax,
        anchor: g.anchor,
        strict: g.strict,
        cache: g.cache,
        threads: g.threads,
        format: g.format,
        seed: g.seed,
    };
    if let Some(path) = &g.config {
        cfg.merge_file(path)?;
    }
    Ok(cfg)
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
    let cfg = match build_config(cli.global) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    eprintln!("config: {cfg}");
    if let Some(t) = cfg.threads.filter(|&t| t > 0) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli.command, &cfg) {
        Ok(commands::Outcome::Ok) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
