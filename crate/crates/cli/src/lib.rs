//! Command-line front end for `dqe-core`: parameter sweeps, lab-frame
//! solves, EDSR rates, oracle runs and figure presets, written as CSV or
//! JSON.

pub mod config;
pub mod output;
pub mod run;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use config::{Mode, RunConfig};
pub use run::{run, Table};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("computation failed: {0}")]
    Compute(dqe_core::Error),
    #[error("i/o: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

const COLUMNS_HELP: &str = "\
CSV output starts with `# units=<units> config_hash=<git blob sha1 of the config>`,
then the column header; sweeps prepend the swept axis as the first column.

  rates   inv_t1p, inv_tphip, inv_t2p            rotating-frame rates
  solve   inv_t1, inv_t2, inv_tphi, inv_t1p, inv_t2p   root-solved lab rates
  edsr    inv_t1p, inv_tphip, inv_t2p, inv_t1, prefactor
  oracle  t, sx, sy, sz, sx_stderr, sy_stderr, sz_stderr   ensemble curves;
          fitted rates follow the header as `# t1_rate=… t1_stderr=…`
  figure  per preset (fig1 … fig7), long format with curve parameters first

Sweep axes: rates/solve take omega_z, rabi, nu, phi, detuning, wx, wy, wz,
band_limit; edsr takes r, phi, rabi, delta, beta, omega_z, omega_d, e_field.

With --out, the resolved config is also written to <out>.meta.json and can be
passed back with --config. DQE_THREADS sets the worker count.
Exit codes: 0 success, 1 computational failure, 2 usage or config error.";

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Rates,
    Solve,
    Edsr,
    Oracle,
    Figure,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Rates => Mode::Rates,
            ModeArg::Solve => Mode::Solve,
            ModeArg::Edsr => Mode::Edsr,
            ModeArg::Oracle => Mode::Oracle,
            ModeArg::Figure => Mode::Figure,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dqe", version, about = "Decoherence rates of a driven qubit", after_help = COLUMNS_HELP)]
struct Args {
    #[arg(value_enum)]
    mode: ModeArg,
    /// Figure preset, same as --preset.
    #[arg(value_name = "PRESET")]
    preset_pos: Option<String>,
    /// JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the oracle.
    #[arg(long)]
    seed: Option<u64>,
    /// Figure preset fig1 … fig7.
    #[arg(long)]
    preset: Option<String>,
}

fn resolve(args: Args) -> Result<RunConfig, CliError> {
    let mut cfg = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::bare(args.mode.into()),
    };
    cfg.mode = args.mode.into();
    if let (Some(a), Some(b)) = (&args.preset, &args.preset_pos) {
        if a != b {
            return Err(CliError::Usage(format!("conflicting presets {a:?} and {b:?}")));
        }
    }
    if let Some(p) = args.preset.or(args.preset_pos) {
        cfg.preset = Some(p);
    }
    if let Some(out) = args.out {
        cfg.output.path = Some(out);
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("DQE_THREADS") {
        let n: usize =
            v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| CliError::Usage(format!("DQE_THREADS={v:?} is not a positive integer")))?;
        b = b.num_threads(n);
    }
    b.build().map_err(|e| CliError::Io(e.to_string()))
}

/// Run the resolved config and write its outputs.
pub fn execute(cfg: &RunConfig) -> Result<(), CliError> {
    let table = thread_pool()?.install(|| run(cfg))?;
    output::emit(cfg, &table)
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match resolve(args).and_then(|cfg| execute(&cfg)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("dqe: {e}");
            e.exit_code()
        }
    }
}
