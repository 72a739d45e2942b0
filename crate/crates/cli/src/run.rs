//! Mode dispatch and parameter sweeps.

use dqe_core::edsr::{edsr_rotating_rates, map_edsr, EdsrParams};
use dqe_core::figures;
use dqe_core::frames::rotating_frame_rates_with;
use dqe_core::labframe::{lab_rates, solve_t1};
use dqe_core::oracle::{estimate_rates, DecayEstimate, OracleConfig};
use dqe_core::{AxisStrengths, DriveGeometry, EnvelopeConfig, NoiseSpectrum, RotatingRates};
use rayon::prelude::*;

use crate::config::{EnvelopeOptions, Mode, RunConfig};
use crate::CliError;

pub const DRIVE_AXES: [&str; 9] = ["omega_z", "rabi", "nu", "phi", "detuning", "wx", "wy", "wz", "band_limit"];
pub const EDSR_AXES: [&str; 8] = ["r", "phi", "rabi", "delta", "beta", "omega_z", "omega_d", "e_field"];

/// Result table of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub units: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    /// `key=value` lines emitted as CSV comments after the header.
    pub notes: Vec<String>,
}

fn owned(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|c| c.to_string()).collect()
}

fn set_drive(
    geom: &DriveGeometry,
    noise: &NoiseSpectrum,
    axis: &str,
    x: f64,
) -> dqe_core::Result<(DriveGeometry, NoiseSpectrum)> {
    let (wz, rabi, nu, phi) = (geom.omega_z(), geom.rabi(), geom.nu(), geom.phi());
    let mut n = noise.clone();
    let w = n.strengths;
    let g = match axis {
        "omega_z" => DriveGeometry::new(x, rabi, nu, phi)?,
        "rabi" => DriveGeometry::new(wz, x, nu, phi)?,
        "nu" => DriveGeometry::new(wz, rabi, x, phi)?,
        "phi" => DriveGeometry::new(wz, rabi, nu, x)?,
        "detuning" => DriveGeometry::new(wz, rabi, wz + x, phi)?,
        "wx" | "wy" | "wz" => {
            n.strengths = match axis {
                "wx" => AxisStrengths::new(x, w.y, w.z),
                "wy" => AxisStrengths::new(w.x, x, w.z),
                _ => AxisStrengths::new(w.x, w.y, x),
            };
            n.validate()?;
            *geom
        }
        "band_limit" => {
            n = n.with_band_limit(x)?;
            *geom
        }
        _ => unreachable!("axis checked before the sweep"),
    };
    Ok((g, n))
}

fn set_edsr(p: &EdsrParams, axis: &str, x: f64) -> EdsrParams {
    let mut p = p.clone();
    match axis {
        "r" => p.r = x,
        "phi" => p.phi = x,
        "rabi" => p.rabi = x,
        "delta" => p.delta = x,
        "beta" => p.beta = x,
        "omega_z" => p.omega_z = x,
        "omega_d" => p.omega_d = x,
        "e_field" => p.e_field = Some(x),
        _ => unreachable!("axis checked before the sweep"),
    }
    p
}

/// Evaluate `f` on the sweep grid (or once without a sweep) in parallel,
/// keeping rows in grid order; the first failing point in grid order is
/// reported.
fn sweep<F>(cfg: &RunConfig, allowed: &[&str], columns: &[&str], units: &'static str, f: F) -> Result<Table, CliError>
where
    F: Fn(Option<(&str, f64)>) -> dqe_core::Result<Vec<f64>> + Sync,
{
    let Some(s) = &cfg.sweep else {
        let row = f(None).map_err(CliError::Compute)?;
        return Ok(Table { units, columns: owned(columns), rows: vec![row], notes: vec![] });
    };
    if !allowed.contains(&s.axis.as_str()) {
        return Err(CliError::Usage(format!(
            "{} mode cannot sweep {:?}; axes: {}",
            cfg.mode.name(),
            s.axis,
            allowed.join(", ")
        )));
    }
    let axis = s.axis.as_str();
    let rows: Vec<dqe_core::Result<Vec<f64>>> = s
        .grid()
        .into_par_iter()
        .map(|x| {
            let mut row = vec![x];
            row.extend(f(Some((axis, x))).map_err(|e| e.at(format!("{axis}={x}")))?);
            Ok(row)
        })
        .collect();
    let rows = rows.into_iter().collect::<dqe_core::Result<Vec<_>>>().map_err(CliError::Compute)?;
    let mut cols = vec![s.axis.clone()];
    cols.extend(owned(columns));
    Ok(Table { units, columns: cols, rows, notes: vec![] })
}

fn run_rates(cfg: &RunConfig) -> Result<Table, CliError> {
    let (geom, noise) = (cfg.drive()?, cfg.noise()?);
    let opts = cfg.envelope.unwrap_or_default();
    sweep(cfg, &DRIVE_AXES, &["inv_t1p", "inv_tphip", "inv_t2p"], "rad/time", |pt| {
        let (g, n) = match pt {
            Some((a, x)) => set_drive(geom, noise, a, x)?,
            None => (*geom, noise.clone()),
        };
        let r = rotating_frame_rates_with(&g, &n, opts.sideband)?;
        Ok(vec![r.inv_t1p, r.inv_tphip, r.inv_t2p])
    })
}

fn run_solve(cfg: &RunConfig) -> Result<Table, CliError> {
    let (geom, noise) = (cfg.drive()?, cfg.noise()?);
    let opts = cfg.envelope.unwrap_or_default();
    let cols = ["inv_t1", "inv_t2", "inv_tphi", "inv_t1p", "inv_t2p"];
    sweep(cfg, &DRIVE_AXES, &cols, "rad/time", |pt| {
        let (g, n) = match pt {
            Some((a, x)) => set_drive(geom, noise, a, x)?,
            None => (*geom, noise.clone()),
        };
        let env = EnvelopeConfig::from_noise(g, &n, opts.sideband)?.with_sigma_inf(opts.sigma_inf)?;
        let lab = lab_rates(&env, opts.mode)?;
        Ok(vec![lab.inv_t1, lab.inv_t2, lab.inv_tphi, env.rates.inv_t1p, env.rates.inv_t2p])
    })
}

fn edsr_row(p: &EdsrParams, opts: &EnvelopeOptions) -> dqe_core::Result<Vec<f64>> {
    let r = edsr_rotating_rates(p)?;
    let rot = RotatingRates::new(r.inv_t1p, r.inv_tphip);
    let env = EnvelopeConfig::new(map_edsr(p)?.geom, rot, opts.sigma_inf)?;
    let lab_t1 = solve_t1(&env, opts.mode)?;
    Ok(vec![rot.inv_t1p, rot.inv_tphip, rot.inv_t2p, lab_t1, r.prefactor])
}

fn run_edsr(cfg: &RunConfig) -> Result<Table, CliError> {
    let p = cfg.edsr()?;
    let opts = cfg.envelope.unwrap_or_default();
    let units = if p.is_physical() { "rad/s" } else { "dimensionless" };
    sweep(cfg, &EDSR_AXES, &["inv_t1p", "inv_tphip", "inv_t2p", "inv_t1", "prefactor"], units, |pt| match pt {
        Some((a, x)) => edsr_row(&set_edsr(p, a, x), &opts),
        None => edsr_row(p, &opts),
    })
}

pub fn oracle_config(cfg: &RunConfig) -> Result<OracleConfig, CliError> {
    let s = cfg.oracle()?;
    let mut o = OracleConfig::new(*cfg.drive()?, cfg.noise()?.clone(), s.dt, s.t_max, s.n_traj, cfg.seed);
    o.initial_state = s.initial_state;
    o.frame = s.frame;
    o.fit = s.fit;
    o.record_every = s.record_every;
    o.bootstrap = s.bootstrap;
    Ok(o)
}

fn estimate_notes(name: &str, est: &dqe_core::Result<DecayEstimate>) -> String {
    match est {
        Ok(d) => format!("{name}_rate={} {name}_stderr={}", d.rate, d.stderr),
        Err(e) => format!("{name}_rate=NaN ({e})"),
    }
}

fn run_oracle(cfg: &RunConfig) -> Result<Table, CliError> {
    let o = oracle_config(cfg)?;
    o.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    let est = estimate_rates(&o).map_err(CliError::Compute)?;
    let c = &est.curves;
    let rows = (0..c.t.len()).map(|k| vec![c.t[k], c.sx[k], c.sy[k], c.sz[k], c.sx_err[k], c.sy_err[k], c.sz_err[k]]);
    Ok(Table {
        units: "rad/time",
        columns: owned(&["t", "sx", "sy", "sz", "sx_stderr", "sy_stderr", "sz_stderr"]),
        rows: rows.collect(),
        notes: vec![
            estimate_notes("t1", &est.t1),
            estimate_notes("t2", &est.t2),
            format!("norm_drift={:e}", c.norm_drift),
        ],
    })
}

fn run_figure(cfg: &RunConfig) -> Result<Table, CliError> {
    let name = cfg.preset.as_deref().unwrap_or_default();
    let fig = figures::figure(name).map_err(|e| match e {
        dqe_core::Error::Input(m) => CliError::Usage(m),
        e => CliError::Compute(e),
    })?;
    Ok(Table {
        units: fig.units,
        columns: owned(&fig.columns),
        rows: fig.rows,
        notes: vec![format!("figure={} ({})", fig.name, fig.description)],
    })
}

/// Validate the config and compute its table.
pub fn run(cfg: &RunConfig) -> Result<Table, CliError> {
    cfg.validate()?;
    match cfg.mode {
        Mode::Rates => run_rates(cfg),
        Mode::Solve => run_solve(cfg),
        Mode::Edsr => run_edsr(cfg),
        Mode::Oracle => run_oracle(cfg),
        Mode::Figure => run_figure(cfg),
    }
}
