//! Monte-Carlo reference for the analytic rates.
//!
//! Each trajectory integrates the qubit Hamiltonian under one realization of
//! Gaussian noise; ensemble averages of the Bloch vector are then reduced to
//! decay rates. Nothing here uses the Bloch-Redfield formulas except the
//! run-length sanity check in [`OracleConfig::validate`].

pub mod estimate;
pub mod noise;
pub mod propagate;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::DriveGeometry;
use crate::spectra::NoiseSpectrum;

pub use estimate::{estimate_rates, DecayEstimate, FitKind, OracleEstimates};
pub use noise::{generate_noise_trajectory, validate_statistics, NoiseGenerator, StatisticsReport};
pub use propagate::{propagate, simulate_ensemble, EnsembleCurves, NoiseSamples, Trajectory};

/// Largest allowed `dt · max(ω_Z, ν, ω_max)`.
pub const RESOLUTION_LIMIT: f64 = 0.1;

/// Smallest ensemble accepted.
pub const MIN_TRAJECTORIES: usize = 100;

/// Required run length in units of the expected decay time.
pub const RUN_LENGTH_FACTOR: f64 = 5.0;

/// Recorded samples per curve when `record_every` is not given.
pub const DEFAULT_RECORD_POINTS: usize = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitialState {
    /// `⟨σz⟩ = 1`.
    #[default]
    ZPlus,
    /// `⟨σx⟩ = 1`.
    XPlus,
}

/// Frame in which the Schrödinger equation is stepped. Both describe the
/// same dynamics; the rotating frame removes the fast `ν` carrier from the
/// drive, so the noise-free evolution is a single exact exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Frame {
    Lab,
    #[default]
    Rotating,
}

fn default_scale() -> f64 {
    1.0
}

fn default_bootstrap() -> usize {
    200
}

fn is_one(x: &f64) -> bool {
    *x == 1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub geom: DriveGeometry,
    pub noise: NoiseSpectrum,
    pub dt: f64,
    pub t_max: f64,
    pub n_traj: usize,
    pub seed: u64,
    #[serde(default)]
    pub initial_state: InitialState,
    #[serde(default)]
    pub frame: Frame,
    #[serde(default)]
    pub fit: FitKind,
    /// Record every k-th step; defaults to about 400 points per curve.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record_every: Option<usize>,
    #[serde(default = "default_bootstrap")]
    pub bootstrap: usize,
    /// Multiplies every noise amplitude; only for testing the statistics check.
    #[serde(default = "default_scale", skip_serializing_if = "is_one")]
    pub amplitude_scale: f64,
}

impl OracleConfig {
    pub fn new(geom: DriveGeometry, noise: NoiseSpectrum, dt: f64, t_max: f64, n_traj: usize, seed: u64) -> Self {
        Self {
            geom,
            noise,
            dt,
            t_max,
            n_traj,
            seed,
            initial_state: InitialState::ZPlus,
            frame: Frame::Rotating,
            fit: FitKind::EnvelopeExp,
            record_every: None,
            bootstrap: default_bootstrap(),
            amplitude_scale: 1.0,
        }
    }

    pub fn with_initial_state(mut self, s: InitialState) -> Self {
        self.initial_state = s;
        self
    }

    pub fn with_frame(mut self, f: Frame) -> Self {
        self.frame = f;
        self
    }

    pub fn n_steps(&self) -> usize {
        (self.t_max / self.dt).round() as usize
    }

    pub fn record_stride(&self) -> usize {
        self.record_every.unwrap_or_else(|| (self.n_steps() / DEFAULT_RECORD_POINTS).max(1))
    }

    /// Step-size, ensemble-size and noise checks, without the run-length check.
    pub fn validate_resolution(&self) -> Result<()> {
        self.noise.validate()?;
        if !(self.dt > 0.0 && self.t_max > self.dt) {
            return Err(Error::Config("need 0 < dt < t_max".into()));
        }
        if self.n_traj < MIN_TRAJECTORIES {
            return Err(Error::Config(format!("n_traj = {} is below {MIN_TRAJECTORIES}", self.n_traj)));
        }
        let cutoff = self
            .noise
            .effective_cutoff()
            .ok_or_else(|| Error::Config("noise spectrum needs a band limit for trajectory synthesis".into()))?;
        let fastest = self.geom.omega_z().max(self.geom.nu()).max(cutoff);
        if self.dt * fastest > RESOLUTION_LIMIT {
            return Err(Error::Config(format!(
                "dt · max(ω_Z, ν, ω_max) = {:.3} exceeds {RESOLUTION_LIMIT}",
                self.dt * fastest
            )));
        }
        Ok(())
    }

    /// Full validation including `t_max ≥ 5 · expected decay time`, where the
    /// expectation comes from the analytic rates when they can be computed.
    pub fn validate(&self) -> Result<()> {
        self.validate_resolution()?;
        if let Some(t) = self.expected_decay_time() {
            if self.t_max < RUN_LENGTH_FACTOR * t {
                return Err(Error::Config(format!(
                    "t_max = {} is shorter than {RUN_LENGTH_FACTOR} × expected decay time {t:.4}",
                    self.t_max
                )));
            }
        }
        Ok(())
    }

    /// Analytic decay time of the observable the initial state probes, if
    /// available (T1 for `ZPlus`, T2 for `XPlus`).
    pub fn expected_decay_time(&self) -> Option<f64> {
        use crate::labframe::{lab_rates, nondriven_rates, EnvelopeConfig, EnvelopeMode};
        let rate = if self.geom.rabi() == 0.0 {
            let (t1, tphi) = nondriven_rates(self.geom.omega_z(), &self.noise).ok()?;
            match self.initial_state {
                InitialState::ZPlus => t1,
                InitialState::XPlus => 0.5 * t1 + tphi,
            }
        } else {
            let cfg = EnvelopeConfig::from_noise(self.geom, &self.noise, Default::default()).ok()?;
            let lab = lab_rates(&cfg.with_sigma_inf(0.0).ok()?, EnvelopeMode::General).ok()?;
            match self.initial_state {
                InitialState::ZPlus => lab.inv_t1,
                InitialState::XPlus => lab.inv_t2,
            }
        };
        (rate > 0.0 && rate.is_finite()).then(|| 1.0 / rate)
    }
}
