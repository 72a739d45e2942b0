//! Exact-exponential stepping of the two-level state.
//!
//! Over each step the Hamiltonian `H = h · σ` is frozen at the step midpoint
//! and the state is multiplied by
//! `exp(−i h·σ dt) = cos(|h|dt) − i sin(|h|dt) (h·σ)/|h|`, which is unitary
//! to rounding.
//!
//! Lab frame: `h = (Ω/2 cos(νt+φ) + n_x, Ω/2 sin(νt+φ) + n_y, ω_Z/2 + n_z)`.
//! Rotating frame (`ψ_rot = e^{iνtσz/2} ψ_lab`):
//! `h = (Ω/2 cos φ + n_x cos νt + n_y sin νt, Ω/2 sin φ − n_x sin νt + n_y cos νt, −Δ/2 + n_z)`.

use num_complex::Complex64;
use rayon::prelude::*;

use super::noise::{trajectory_rng, NoiseGenerator};
use super::{Frame, InitialState, OracleConfig};
use crate::error::{Error, Result};
use crate::spectra::Axis;

/// Noise on the three axes, sampled at step midpoints `(j + ½) dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseSamples {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub z: Vec<f64>,
}

impl NoiseSamples {
    pub fn zeros(n: usize) -> Self {
        Self { x: vec![0.0; n], y: vec![0.0; n], z: vec![0.0; n] }
    }

    fn len(&self) -> usize {
        self.x.len()
    }
}

/// Lab-frame Bloch components of one trajectory at the recorded times.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub sx: Vec<f64>,
    pub sy: Vec<f64>,
    pub sz: Vec<f64>,
    /// Largest `| ‖ψ‖² − 1 |` seen over the run.
    pub norm_drift: f64,
}

#[derive(Clone, Copy)]
struct Spinor {
    a: Complex64,
    b: Complex64,
}

impl Spinor {
    fn initial(s: InitialState) -> Self {
        match s {
            InitialState::ZPlus => Spinor { a: Complex64::new(1.0, 0.0), b: Complex64::new(0.0, 0.0) },
            InitialState::XPlus => {
                let r = std::f64::consts::FRAC_1_SQRT_2;
                Spinor { a: Complex64::new(r, 0.0), b: Complex64::new(r, 0.0) }
            }
        }
    }

    fn step(&mut self, hx: f64, hy: f64, hz: f64, dt: f64) {
        let norm = (hx * hx + hy * hy + hz * hz).sqrt();
        if norm == 0.0 {
            return;
        }
        let (s, c) = (norm * dt).sin_cos();
        let k = s / norm;
        // exp(−i h·σ dt) with h·σ = [[hz, hx − i hy], [hx + i hy, −hz]]
        let m00 = Complex64::new(c, -k * hz);
        let m11 = Complex64::new(c, k * hz);
        let m01 = Complex64::new(-k * hy, -k * hx);
        let m10 = Complex64::new(k * hy, -k * hx);
        let a = m00 * self.a + m01 * self.b;
        let b = m10 * self.a + m11 * self.b;
        self.a = a;
        self.b = b;
    }

    /// `(⟨σx⟩ + i⟨σy⟩, ⟨σz⟩)` in the frame the spinor lives in.
    fn bloch(&self) -> (Complex64, f64) {
        (2.0 * self.a.conj() * self.b, self.a.norm_sqr() - self.b.norm_sqr())
    }

    fn norm_drift(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() - 1.0).abs()
    }
}

/// Transverse component in the lab frame and in the drive frame, which is
/// the rotating frame turned by `φ` so that the drive lies along x′.
#[derive(Clone, Copy)]
pub(crate) struct Sample {
    pub lab: Complex64,
    pub dressed: Complex64,
    pub z: f64,
}

/// Steps one trajectory, calling `record` at `t = 0` and every `stride` steps.
fn run(cfg: &OracleConfig, noise: &NoiseSamples, mut record: impl FnMut(f64, Sample)) -> f64 {
    let g = &cfg.geom;
    let (dt, n) = (cfg.dt, noise.len());
    let stride = cfg.record_stride();
    let half_rabi = 0.5 * g.rabi();
    let (sin_phi, cos_phi) = g.phi().sin_cos();
    let drive_phase = Complex64::from_polar(1.0, -g.phi());

    let mut psi = Spinor::initial(cfg.initial_state);
    let mut drift: f64 = 0.0;
    let emit = |psi: &Spinor, t: f64, record: &mut dyn FnMut(f64, Sample)| {
        let (tr, z) = psi.bloch();
        let carrier = Complex64::from_polar(1.0, g.nu() * t);
        let (lab, rot) = match cfg.frame {
            Frame::Lab => (tr, tr * carrier.conj()),
            Frame::Rotating => (tr * carrier, tr),
        };
        record(t, Sample { lab, dressed: rot * drive_phase, z });
    };
    emit(&psi, 0.0, &mut record);

    for j in 0..n {
        let tm = (j as f64 + 0.5) * dt;
        let (nx, ny, nz) = (noise.x[j], noise.y[j], noise.z[j]);
        let (s, c) = (g.nu() * tm).sin_cos();
        let (hx, hy, hz) = match cfg.frame {
            Frame::Lab => {
                let (sd, cd) = (g.nu() * tm + g.phi()).sin_cos();
                (half_rabi * cd + nx, half_rabi * sd + ny, 0.5 * g.omega_z() + nz)
            }
            Frame::Rotating => (
                half_rabi * cos_phi + nx * c + ny * s,
                half_rabi * sin_phi - nx * s + ny * c,
                -0.5 * g.detuning() + nz,
            ),
        };
        psi.step(hx, hy, hz, dt);
        drift = drift.max(psi.norm_drift());
        if (j + 1) % stride == 0 {
            emit(&psi, (j + 1) as f64 * dt, &mut record);
        }
    }
    drift
}

/// Deterministic evolution of one trajectory under the given noise samples.
pub fn propagate(cfg: &OracleConfig, noise: &NoiseSamples) -> Result<Trajectory> {
    cfg.validate_resolution()?;
    let n = noise.len();
    if noise.y.len() != n || noise.z.len() != n || n != cfg.n_steps() {
        return Err(Error::Input(format!("expected {} noise samples per axis", cfg.n_steps())));
    }
    let mut out = Trajectory { t: vec![], sx: vec![], sy: vec![], sz: vec![], norm_drift: 0.0 };
    out.norm_drift = run(cfg, noise, |t, s| {
        out.t.push(t);
        out.sx.push(s.lab.re);
        out.sy.push(s.lab.im);
        out.sz.push(s.z);
    });
    Ok(out)
}

/// Per-trajectory records plus ensemble means.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleCurves {
    pub t: Vec<f64>,
    /// Lab-frame ensemble means.
    pub sx: Vec<f64>,
    pub sy: Vec<f64>,
    pub sz: Vec<f64>,
    /// Standard errors of the lab-frame means.
    pub sx_err: Vec<f64>,
    pub sy_err: Vec<f64>,
    pub sz_err: Vec<f64>,
    pub norm_drift: f64,
    /// Drive-frame components `[x′, y′, z]` for every trajectory, flattened
    /// as `traj × time`.
    pub(crate) dressed: Vec<[f64; 3]>,
}

impl EnsembleCurves {
    pub fn n_traj(&self) -> usize {
        self.dressed.len() / self.t.len()
    }

    pub(crate) fn dressed_of(&self, traj: usize) -> &[[f64; 3]] {
        let n = self.t.len();
        &self.dressed[traj * n..(traj + 1) * n]
    }
}

/// Draw noise for trajectory `index` from its own RNG stream.
fn noise_for(gens: &[NoiseGenerator; 3], seed: u64, index: u64) -> NoiseSamples {
    let mut rng = trajectory_rng(seed, index);
    NoiseSamples { x: gens[0].sample(&mut rng), y: gens[1].sample(&mut rng), z: gens[2].sample(&mut rng) }
}

/// Run the full ensemble. Trajectories are computed in parallel and reduced
/// in index order, so the result is bit-identical for any thread count.
pub fn simulate_ensemble(cfg: &OracleConfig) -> Result<EnsembleCurves> {
    cfg.validate()?;
    let n_steps = cfg.n_steps();
    let gen = |axis| NoiseGenerator::new(&cfg.noise, axis, cfg.dt, n_steps, 0.5 * cfg.dt, cfg.amplitude_scale);
    let gens = [gen(Axis::X)?, gen(Axis::Y)?, gen(Axis::Z)?];

    struct Record {
        lab: Vec<[f64; 3]>,
        dressed: Vec<[f64; 3]>,
        t: Vec<f64>,
        drift: f64,
    }
    let records: Vec<Record> = (0..cfg.n_traj)
        .into_par_iter()
        .map(|i| {
            let noise = noise_for(&gens, cfg.seed, i as u64);
            let mut rec = Record { lab: vec![], dressed: vec![], t: vec![], drift: 0.0 };
            rec.drift = run(cfg, &noise, |t, s| {
                rec.t.push(t);
                rec.lab.push([s.lab.re, s.lab.im, s.z]);
                rec.dressed.push([s.dressed.re, s.dressed.im, s.z]);
            });
            rec
        })
        .collect();

    let t = records[0].t.clone();
    let n_rec = t.len();
    let n = cfg.n_traj as f64;
    let mut sum = vec![[0.0; 3]; n_rec];
    let mut sum2 = vec![[0.0; 3]; n_rec];
    let mut drift: f64 = 0.0;
    for r in &records {
        drift = drift.max(r.drift);
        for (k, v) in r.lab.iter().enumerate() {
            for c in 0..3 {
                sum[k][c] += v[c];
                sum2[k][c] += v[c] * v[c];
            }
        }
    }
    let mean = |c: usize| sum.iter().map(|s| s[c] / n).collect::<Vec<_>>();
    let err = |c: usize| {
        sum.iter()
            .zip(&sum2)
            .map(|(s, s2)| {
                let m = s[c] / n;
                ((s2[c] / n - m * m).max(0.0) / (n - 1.0)).sqrt()
            })
            .collect::<Vec<_>>()
    };
    let dressed = records.into_iter().flat_map(|r| r.dressed).collect();
    Ok(EnsembleCurves {
        sx: mean(0),
        sy: mean(1),
        sz: mean(2),
        sx_err: err(0),
        sy_err: err(1),
        sz_err: err(2),
        t,
        norm_drift: drift,
        dressed,
    })
}
