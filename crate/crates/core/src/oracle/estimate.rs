//! Decay-rate extraction from ensemble curves.
//!
//! Envelopes are read off the drive-frame Bloch vector `r = (x′, y′, z)`,
//! which carries no carrier at `ν`:
//!
//! - T1-like: `sinθ · P + cosθ · L` with `L = r · n̂`, `P = |r − L n̂|` and
//!   `n̂ = (sinθ, 0, cosθ)` the dressed quantization axis; this is the slow
//!   envelope of the lab `⟨σz⟩`. Without a dressed frame it is `z` itself.
//! - T2-like: the transverse magnitude `√(x′² + y′²)`, the envelope of the
//!   lab `⟨σx⟩` after removing the carrier.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::propagate::{simulate_ensemble, EnsembleCurves};
use super::OracleConfig;
use crate::error::{Error, Result};
use crate::frames::DriveGeometry;

/// Fit window on the envelope, as `ln E` bounds.
const FIT_UPPER: f64 = -0.25;
const FIT_LOWER: f64 = -2.0;
const MIN_FIT_POINTS: usize = 5;

/// Mixed into the master seed for the bootstrap stream.
const BOOTSTRAP_SALT: u64 = 0xb007_5742_u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FitKind {
    /// Least squares on `ln E` over `e^{−2} ≤ E ≤ e^{−1/4}`.
    #[default]
    EnvelopeExp,
    /// Inverse of the first time `E` drops to `1/e`.
    CrossingOneOverE,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayEstimate {
    pub rate: f64,
    /// Standard deviation of the rate over trajectory bootstrap resamples.
    pub stderr: f64,
    pub fit_kind: FitKind,
}

impl DecayEstimate {
    /// Distance from `expected` in units of the combined standard error.
    pub fn sigmas_from(&self, expected: f64, expected_err: f64) -> f64 {
        (self.rate - expected).abs() / self.stderr.hypot(expected_err)
    }
}

#[derive(Debug, Clone)]
pub struct OracleEstimates {
    pub curves: EnsembleCurves,
    pub envelope_t1: Vec<f64>,
    pub envelope_t2: Vec<f64>,
    pub t1: Result<DecayEstimate>,
    pub t2: Result<DecayEstimate>,
}

impl OracleEstimates {
    /// Estimate for the observable the initial state probes.
    pub fn primary(&self, state: super::InitialState) -> &Result<DecayEstimate> {
        match state {
            super::InitialState::ZPlus => &self.t1,
            super::InitialState::XPlus => &self.t2,
        }
    }
}

fn t1_envelope(geom: &DriveGeometry, r: [f64; 3]) -> f64 {
    if !geom.has_rotating_frame() {
        return r[2];
    }
    let (s, c) = (geom.sin_theta(), geom.cos_theta());
    let l = r[0] * s + r[2] * c;
    let p = (r[0] - l * s).hypot(r[1]).hypot(r[2] - l * c);
    s * p + c * l
}

fn t2_envelope(r: [f64; 3]) -> f64 {
    r[0].hypot(r[1])
}

fn envelopes(geom: &DriveGeometry, sums: &[[f64; 3]], n: f64) -> (Vec<f64>, Vec<f64>) {
    sums.iter()
        .map(|s| {
            let r = [s[0] / n, s[1] / n, s[2] / n];
            (t1_envelope(geom, r), t2_envelope(r))
        })
        .unzip()
}

/// Contiguous index range where the envelope first sits inside the fit band.
fn fit_window(env: &[f64]) -> Result<(usize, usize)> {
    let min = env.iter().copied().fold(f64::INFINITY, f64::min);
    if !(min <= (-1.0f64).exp()) {
        return Err(Error::Inconclusive(format!("envelope only falls to {min:.3}, not below 1/e")));
    }
    if !(env[0] >= FIT_UPPER.exp()) {
        return Err(Error::Inconclusive(format!("initial envelope {:.3} is not populated", env[0])));
    }
    let start = env.iter().position(|&e| e <= FIT_UPPER.exp()).unwrap();
    let len = env[start..].iter().take_while(|&&e| e >= FIT_LOWER.exp()).count();
    if len < MIN_FIT_POINTS {
        return Err(Error::Inconclusive(format!("only {len} points inside the fit window")));
    }
    Ok((start, start + len))
}

fn exp_fit(t: &[f64], env: &[f64], (lo, hi): (usize, usize)) -> Option<f64> {
    let n = (hi - lo) as f64;
    let (mut st, mut sy, mut stt, mut sty) = (0.0, 0.0, 0.0, 0.0);
    for k in lo..hi {
        if !(env[k] > 0.0) {
            return None;
        }
        let y = env[k].ln();
        st += t[k];
        sy += y;
        stt += t[k] * t[k];
        sty += t[k] * y;
    }
    let slope = (n * sty - st * sy) / (n * stt - st * st);
    Some(-slope)
}

fn crossing_rate(t: &[f64], env: &[f64]) -> Option<f64> {
    let k = env.iter().position(|&e| e <= (-1.0f64).exp())?;
    if k == 0 || !(env[k] > 0.0) {
        return None;
    }
    let (y0, y1) = (env[k - 1].ln(), env[k].ln());
    let tc = t[k - 1] + (-1.0 - y0) / (y1 - y0) * (t[k] - t[k - 1]);
    Some(1.0 / tc)
}

struct Fitter<'a> {
    t: &'a [f64],
    kind: FitKind,
    window: (usize, usize),
}

impl Fitter<'_> {
    fn new<'a>(t: &'a [f64], env: &[f64], kind: FitKind) -> Result<Fitter<'a>> {
        let window = fit_window(env)?;
        Ok(Fitter { t, kind, window })
    }

    fn rate(&self, env: &[f64]) -> Option<f64> {
        match self.kind {
            FitKind::EnvelopeExp => exp_fit(self.t, env, self.window),
            FitKind::CrossingOneOverE => crossing_rate(self.t, env),
        }
    }
}

fn std_dev(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    (xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
}

fn finish(fitter: Result<Fitter>, env: &[f64], boot: &[f64], n_boot: usize, kind: FitKind) -> Result<DecayEstimate> {
    let fitter = fitter?;
    let rate = fitter
        .rate(env)
        .ok_or_else(|| Error::Inconclusive("fit failed on the full ensemble".into()))?;
    if boot.len() < n_boot.div_ceil(2).max(2) {
        return Err(Error::Inconclusive(format!("only {} of {n_boot} bootstrap fits succeeded", boot.len())));
    }
    Ok(DecayEstimate { rate, stderr: std_dev(boot), fit_kind: kind })
}

/// Fit T1- and T2-like rates to precomputed ensemble curves.
pub fn estimate_from_curves(cfg: &OracleConfig, curves: EnsembleCurves) -> OracleEstimates {
    let geom = &cfg.geom;
    let n_traj = curves.n_traj();
    let n_rec = curves.t.len();
    let mut sums = vec![[0.0; 3]; n_rec];
    for i in 0..n_traj {
        for (s, v) in sums.iter_mut().zip(curves.dressed_of(i)) {
            for c in 0..3 {
                s[c] += v[c];
            }
        }
    }
    let (env1, env2) = envelopes(geom, &sums, n_traj as f64);
    let fit1 = Fitter::new(&curves.t, &env1, cfg.fit);
    let fit2 = Fitter::new(&curves.t, &env2, cfg.fit);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ BOOTSTRAP_SALT);
    let (mut boot1, mut boot2) = (Vec::new(), Vec::new());
    if fit1.is_ok() || fit2.is_ok() {
        for _ in 0..cfg.bootstrap {
            sums.iter_mut().for_each(|s| *s = [0.0; 3]);
            for _ in 0..n_traj {
                let i = rng.gen_range(0..n_traj);
                for (s, v) in sums.iter_mut().zip(curves.dressed_of(i)) {
                    for c in 0..3 {
                        s[c] += v[c];
                    }
                }
            }
            let (e1, e2) = envelopes(geom, &sums, n_traj as f64);
            if let Some(r) = fit1.as_ref().ok().and_then(|f| f.rate(&e1)) {
                boot1.push(r);
            }
            if let Some(r) = fit2.as_ref().ok().and_then(|f| f.rate(&e2)) {
                boot2.push(r);
            }
        }
    }
    let t1 = finish(fit1, &env1, &boot1, cfg.bootstrap, cfg.fit);
    let t2 = finish(fit2, &env2, &boot2, cfg.bootstrap, cfg.fit);
    OracleEstimates { curves, envelope_t1: env1, envelope_t2: env2, t1, t2 }
}

/// Simulate the ensemble and estimate both rates. Fails with
/// [`Error::Inconclusive`] when neither envelope decays within `t_max`.
pub fn estimate_rates(cfg: &OracleConfig) -> Result<OracleEstimates> {
    let est = estimate_from_curves(cfg, simulate_ensemble(cfg)?);
    match (&est.t1, &est.t2) {
        (Err(a), Err(b)) => Err(Error::Inconclusive(format!("T1: {a}; T2: {b}"))),
        _ => Ok(est),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t1_envelope_is_one_for_aligned_start() {
        let g = DriveGeometry::new(10.0, 1.0, 9.5, 0.2).unwrap();
        assert!((t1_envelope(&g, [0.0, 0.0, 1.0]) - 1.0).abs() < 1e-14);
        // on resonance the envelope is the magnitude perpendicular to x′
        let g = DriveGeometry::resonant(10.0, 1.0, 0.0).unwrap();
        assert!((t1_envelope(&g, [0.3, 0.4, 0.0]) - 0.4).abs() < 1e-14);
        let free = DriveGeometry::undriven(10.0).unwrap();
        assert_eq!(t1_envelope(&free, [0.3, 0.4, 0.25]), 0.25);
    }

    #[test]
    fn fit_recovers_exponential() {
        let t: Vec<f64> = (0..400).map(|k| k as f64 * 0.05).collect();
        let env: Vec<f64> = t.iter().map(|t| 0.97 * (-0.3 * t).exp()).collect();
        let w = fit_window(&env).unwrap();
        assert!((exp_fit(&t, &env, w).unwrap() - 0.3).abs() < 1e-12);
        let cross = crossing_rate(&t, &env).unwrap();
        let exact = 0.3 / (1.0 + 0.97f64.ln());
        assert!((cross - exact).abs() < 1e-9);
    }

    #[test]
    fn no_decay_is_inconclusive() {
        let env = vec![1.0; 50];
        assert!(matches!(fit_window(&env), Err(Error::Inconclusive(_))));
        let short = [1.0, 0.7, 0.1, 0.05];
        assert!(matches!(fit_window(&short), Err(Error::Inconclusive(_))));
    }
}
