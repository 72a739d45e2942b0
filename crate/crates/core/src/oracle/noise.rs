//! Gaussian noise trajectories with a prescribed spectrum.
//!
//! `n(t) = Re Σ_k c_k e^{iω_k t}` on the midpoint grid `ω_k = (k + ½)Δω` up
//! to the spectrum cutoff, with independent complex Gaussian `c_k` whose
//! real and imaginary parts have variance `W S(ω_k) Δω / π`. Then
//! `⟨n(t) n(t+τ)⟩ = Σ_k (W S(ω_k) Δω / π) cos ω_k τ`, the midpoint-rule
//! value of `W S(τ) = (W/π) ∫₀^∞ S(ω) cos ωτ dω`. The sum is evaluated for
//! all sample times at once with one inverse FFT.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};

use crate::error::{param, Result};
use crate::spectra::{Axis, NoiseSpectrum};

/// The FFT period is at least this many trajectory lengths, so samples
/// never see the periodicity of the mode grid.
pub const PERIOD_FACTOR: usize = 10;

/// Reusable sampler for one axis, time step and trajectory length.
pub struct NoiseGenerator {
    sigma: Vec<f64>,
    dt: f64,
    t0: f64,
    n_steps: usize,
    domega: f64,
    fft: Arc<dyn Fft<f64>>,
}

impl std::fmt::Debug for NoiseGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("NoiseGenerator")
            .field("modes", &self.sigma.len())
            .field("dt", &self.dt)
            .field("n_steps", &self.n_steps)
            .finish()
    }
}

impl NoiseGenerator {
    /// Samples at `t_j = t0 + j dt` for `j < n_steps`. `amplitude_scale`
    /// multiplies every mode amplitude and is 1 for a correctly normalized
    /// process.
    pub fn new(
        noise: &NoiseSpectrum,
        axis: Axis,
        dt: f64,
        n_steps: usize,
        t0: f64,
        amplitude_scale: f64,
    ) -> Result<Self> {
        if !(dt > 0.0) || n_steps == 0 {
            return Err(param("noise sampling needs dt > 0 and at least one step"));
        }
        let cutoff = noise
            .effective_cutoff()
            .ok_or_else(|| param("noise synthesis needs a band limit for this spectrum"))?;
        let m = (PERIOD_FACTOR * n_steps).next_power_of_two();
        let domega = 2.0 * PI / (m as f64 * dt);
        let w = noise.strengths.get(axis);
        let modes = if w == 0.0 { 0 } else { ((cutoff / domega - 0.5).floor() as usize + 1).min(m) };
        let sigma = (0..modes)
            .map(|k| {
                let omega = (k as f64 + 0.5) * domega;
                Ok(amplitude_scale * (w * noise.eval(omega)? * domega / PI).sqrt())
            })
            .collect::<Result<Vec<_>>>()?;
        let fft = FftPlanner::new().plan_fft_inverse(m);
        Ok(Self { sigma, dt, t0, n_steps, domega, fft })
    }

    pub fn is_silent(&self) -> bool {
        self.sigma.iter().all(|s| *s == 0.0)
    }

    /// One trajectory. Draws `2 × modes` normals from `rng`.
    pub fn sample(&self, rng: &mut impl Rng) -> Vec<f64> {
        if self.is_silent() {
            return vec![0.0; self.n_steps];
        }
        let m = self.fft.len();
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (k, s) in self.sigma.iter().enumerate() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            // fold the start-time phase of each mode into its coefficient
            let phase = Complex64::from_polar(1.0, (k as f64 + 0.5) * self.domega * self.t0);
            buf[k] = Complex64::new(s * re, s * im) * phase;
        }
        self.fft.process(&mut buf);
        // shift the integer grid kΔω to the midpoint grid (k + ½)Δω
        (0..self.n_steps)
            .map(|j| {
                let shift = Complex64::from_polar(1.0, 0.5 * self.domega * j as f64 * self.dt);
                (buf[j] * shift).re
            })
            .collect()
    }

    /// Exact autocorrelation of the synthesized process at lag `tau`.
    pub fn model_autocorrelation(&self, tau: f64) -> f64 {
        self.sigma
            .iter()
            .enumerate()
            .map(|(k, s)| s * s * ((k as f64 + 0.5) * self.domega * tau).cos())
            .sum()
    }
}

/// Per-trajectory RNG: the master seed selects the key, the trajectory
/// index the stream, so results do not depend on scheduling.
pub fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Single noise record on axis `axis` sampled at `t_j = j dt`.
pub fn generate_noise_trajectory(
    noise: &NoiseSpectrum,
    axis: Axis,
    dt: f64,
    t_max: f64,
    seed: u64,
) -> Result<Vec<f64>> {
    let n_steps = (t_max / dt).round().max(1.0) as usize;
    let gen = NoiseGenerator::new(noise, axis, dt, n_steps, 0.0, 1.0)?;
    Ok(gen.sample(&mut trajectory_rng(seed, 0)))
}

/// Sample autocorrelation at one lag against the model value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagCheck {
    pub lag: f64,
    pub sample: f64,
    pub stderr: f64,
    pub expected: f64,
}

impl LagCheck {
    pub fn sigmas(&self) -> f64 {
        if self.stderr > 0.0 {
            (self.sample - self.expected).abs() / self.stderr
        } else if self.sample == self.expected {
            0.0
        } else {
            f64::INFINITY
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatisticsReport {
    pub lags: Vec<LagCheck>,
    pub passed: bool,
}

/// Knobs for [`validate_statistics_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StatisticsOptions {
    pub n_lags: usize,
    /// Pass threshold in bootstrap standard errors.
    pub tolerance_sigmas: f64,
    pub bootstrap: usize,
    pub amplitude_scale: f64,
}

impl Default for StatisticsOptions {
    fn default() -> Self {
        Self { n_lags: 20, tolerance_sigmas: 3.0, bootstrap: 200, amplitude_scale: 1.0 }
    }
}

/// Lags checked: spread over a few correlation times of the model.
fn lag_horizon(noise: &NoiseSpectrum, cutoff: f64) -> f64 {
    match &noise.model {
        crate::spectra::SpectralModel::Lorentzian(p) => 2.0 / p.linewidth,
        _ => 4.0 * PI / cutoff,
    }
}

/// Compare `n_samples` independent trajectories against
/// [`NoiseSpectrum::autocorrelation`] at 20 lags.
pub fn validate_statistics(noise: &NoiseSpectrum, axis: Axis, n_samples: usize, seed: u64) -> Result<StatisticsReport> {
    validate_statistics_with(noise, axis, n_samples, seed, StatisticsOptions::default())
}

pub fn validate_statistics_with(
    noise: &NoiseSpectrum,
    axis: Axis,
    n_samples: usize,
    seed: u64,
    opts: StatisticsOptions,
) -> Result<StatisticsReport> {
    if n_samples < 2 || opts.n_lags == 0 {
        return Err(param("statistics check needs at least two samples and one lag"));
    }
    let cutoff = noise
        .effective_cutoff()
        .ok_or_else(|| param("noise synthesis needs a band limit for this spectrum"))?;
    let dt = 0.1 / cutoff;
    let horizon = lag_horizon(noise, cutoff);
    let lag_steps: Vec<usize> = (0..opts.n_lags)
        .map(|i| ((horizon / dt) * i as f64 / (opts.n_lags - 1).max(1) as f64).round() as usize)
        .collect();
    let n_steps = lag_steps.last().copied().unwrap_or(0) + 1;
    let gen = NoiseGenerator::new(noise, axis, dt, n_steps, 0.0, opts.amplitude_scale)?;

    // one product per trajectory and lag keeps samples independent
    let products: Vec<Vec<f64>> = (0..n_samples)
        .into_par_iter()
        .map(|i| {
            let x = gen.sample(&mut trajectory_rng(seed, i as u64));
            lag_steps.iter().map(|&l| x[0] * x[l]).collect()
        })
        .collect();

    let w = noise.strengths.get(axis);
    let n = n_samples as f64;
    let mut boot_rng = trajectory_rng(seed ^ 0x5eed_b007, u64::MAX);
    let draws: Vec<Vec<usize>> = (0..opts.bootstrap)
        .map(|_| (0..n_samples).map(|_| boot_rng.gen_range(0..n_samples)).collect())
        .collect();

    let mut lags = Vec::with_capacity(lag_steps.len());
    for (j, &l) in lag_steps.iter().enumerate() {
        let mean = products.iter().map(|p| p[j]).sum::<f64>() / n;
        let boots: Vec<f64> = draws.iter().map(|d| d.iter().map(|&i| products[i][j]).sum::<f64>() / n).collect();
        let bm = boots.iter().sum::<f64>() / boots.len() as f64;
        let var = boots.iter().map(|b| (b - bm).powi(2)).sum::<f64>() / (boots.len() - 1).max(1) as f64;
        let tau = l as f64 * dt;
        let expected = w * noise.autocorrelation(tau)?.finite().unwrap_or(f64::NAN);
        lags.push(LagCheck { lag: tau, sample: mean, stderr: var.sqrt(), expected });
    }
    let passed = lags.iter().all(|c| c.sigmas() <= opts.tolerance_sigmas);
    Ok(StatisticsReport { lags, passed })
}
