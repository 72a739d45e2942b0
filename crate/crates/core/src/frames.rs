//! Drive geometry and Bloch-Redfield rates in the frame rotating with the drive.
//!
//! The qubit Hamiltonian is
//! `H = ω_Z/2 σz + Ω/2 (e^{-iνt-iφ} σ₊ + h.c.) + Σ_j n_j(t) σ_j`.
//! In the rotating frame the dressed qubit is quantized along
//! `n̂ = (sin θ, 0, cos θ)` with splitting `ω′ = √(Ω² + Δ²)`.

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::spectra::NoiseSpectrum;

/// Noise rms over drive strength above which the weak-noise expansion is
/// flagged as doubtful.
pub const WEAK_NOISE_THRESHOLD: f64 = 0.1;

/// Drive parameters of a single qubit. Construct with [`DriveGeometry::new`];
/// deserialization runs the same validation. `θ` and `ω′` are only defined
/// when [`DriveGeometry::has_rotating_frame`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "GeometryRaw", into = "GeometryRaw")]
pub struct DriveGeometry {
    omega_z: f64,
    rabi: f64,
    nu: f64,
    phi: f64,
}

#[derive(Serialize, Deserialize)]
struct GeometryRaw {
    omega_z: f64,
    rabi: f64,
    nu: f64,
    #[serde(default)]
    phi: f64,
}

impl TryFrom<GeometryRaw> for DriveGeometry {
    type Error = crate::Error;

    fn try_from(g: GeometryRaw) -> Result<Self> {
        DriveGeometry::new(g.omega_z, g.rabi, g.nu, g.phi)
    }
}

impl From<DriveGeometry> for GeometryRaw {
    fn from(g: DriveGeometry) -> Self {
        GeometryRaw { omega_z: g.omega_z, rabi: g.rabi, nu: g.nu, phi: g.phi }
    }
}

impl DriveGeometry {
    /// `omega_z` qubit splitting, `rabi` drive strength Ω, `nu` drive
    /// frequency, `phi` drive phase.
    pub fn new(omega_z: f64, rabi: f64, nu: f64, phi: f64) -> Result<Self> {
        if !(omega_z > 0.0 && omega_z.is_finite()) {
            return Err(param("qubit splitting must be positive and finite"));
        }
        if !(rabi >= 0.0 && rabi.is_finite()) {
            return Err(param("drive strength must be non-negative and finite"));
        }
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(param("drive frequency must be positive and finite"));
        }
        if !phi.is_finite() {
            return Err(param("drive phase must be finite"));
        }
        Ok(Self { omega_z, rabi, nu, phi })
    }

    /// Free qubit with no drive. Usable by the trajectory oracle; the
    /// rotating-frame functions reject it.
    pub fn undriven(omega_z: f64) -> Result<Self> {
        Self::new(omega_z, 0.0, omega_z, 0.0)
    }

    /// The dressed frame needs `ω′ > 0`, i.e. not both Ω and Δ zero.
    pub fn has_rotating_frame(&self) -> bool {
        self.dressed_splitting() > 0.0
    }

    pub fn require_rotating_frame(&self) -> Result<()> {
        if self.has_rotating_frame() {
            Ok(())
        } else {
            Err(param("undriven qubit on resonance has no rotating frame (Ω = Δ = 0)"))
        }
    }

    /// Drive at `ν = ω_Z`.
    pub fn resonant(omega_z: f64, rabi: f64, phi: f64) -> Result<Self> {
        Self::new(omega_z, rabi, omega_z, phi)
    }

    pub fn omega_z(&self) -> f64 {
        self.omega_z
    }

    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn with_phi(self, phi: f64) -> Result<Self> {
        Self::new(self.omega_z, self.rabi, self.nu, phi)
    }

    /// `Δ = ν − ω_Z`.
    pub fn detuning(&self) -> f64 {
        self.nu - self.omega_z
    }

    pub fn is_resonant(&self) -> bool {
        self.nu == self.omega_z
    }

    /// `ω′ = √(Ω² + Δ²)`.
    pub fn dressed_splitting(&self) -> f64 {
        self.rabi.hypot(self.detuning())
    }

    /// `θ = atan2(Ω, −Δ)`, in `(0, π)` whenever Ω > 0.
    pub fn theta(&self) -> f64 {
        self.rabi.atan2(-self.detuning())
    }

    /// `sin θ = Ω/ω′`; exactly 1 on resonance.
    pub fn sin_theta(&self) -> f64 {
        self.rabi / self.dressed_splitting()
    }

    /// `cos θ = −Δ/ω′`; exactly 0 on resonance.
    pub fn cos_theta(&self) -> f64 {
        -self.detuning() / self.dressed_splitting()
    }
}

/// Frequency at which the sideband spectrum enters the rotating-frame
/// relaxation rate.
///
/// The golden-rule rate samples the noise at the dressed splitting ω′. The
/// closed-form EDSR expressions instead carry the drive strength Ω in that
/// slot; the two agree on resonance and differ by `O(Δ²/ν²)` off it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SidebandArgument {
    #[default]
    DressedSplitting,
    DriveStrength,
}

impl SidebandArgument {
    fn frequency(self, geom: &DriveGeometry) -> f64 {
        match self {
            SidebandArgument::DressedSplitting => geom.dressed_splitting(),
            SidebandArgument::DriveStrength => geom.rabi(),
        }
    }
}

/// Rotating-frame rates `1/T1′`, `1/Tφ′` and `1/T2′ = 1/(2T1′) + 1/Tφ′`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotatingRates {
    pub inv_t1p: f64,
    pub inv_tphip: f64,
    pub inv_t2p: f64,
}

impl RotatingRates {
    pub fn new(inv_t1p: f64, inv_tphip: f64) -> Self {
        Self { inv_t1p, inv_tphip, inv_t2p: 0.5 * inv_t1p + inv_tphip }
    }
}

/// Noise spectra seen along the dressed axes `x′, y′, z′`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveSpectra {
    pub xx: f64,
    pub yy: f64,
    pub zz: f64,
}

/// `coef · f()`, skipping the evaluation when the coefficient is exactly
/// zero so that a spectrum divergent at an unused frequency does no harm.
fn weighted(coef: f64, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if coef == 0.0 {
        Ok(0.0)
    } else {
        Ok(coef * f()?)
    }
}

/// Drive-phase weights `(W_x cos²φ + W_y sin²φ, W_x sin²φ + W_y cos²φ)`.
pub(crate) fn phase_weights(geom: &DriveGeometry, noise: &NoiseSpectrum) -> (f64, f64) {
    let (s, c) = geom.phi().sin_cos();
    let (s2, c2) = (s * s, c * c);
    let w = noise.strengths;
    (w.x * c2 + w.y * s2, w.x * s2 + w.y * c2)
}

/// `S_x′x′(ω), S_y′y′(ω), S_z′z′(ω)` for the dressed qubit.
pub fn effective_noise_spectra(geom: &DriveGeometry, noise: &NoiseSpectrum, omega: f64) -> Result<EffectiveSpectra> {
    geom.require_rotating_frame()?;
    noise.validate()?;
    let (a, b) = phase_weights(geom, noise);
    let c2 = geom.cos_theta().powi(2);
    let s2 = geom.sin_theta().powi(2);
    let wz = noise.strengths.z;

    let sideband = |coef: f64| weighted(coef, || noise.sideband(geom.nu(), omega));
    let bare = |coef: f64| weighted(coef, || noise.eval(omega));

    // S_w = a S̃ / 2, S_u = b S̃ / 2
    Ok(EffectiveSpectra {
        xx: sideband(a * c2)? + bare(2.0 * wz * s2)?,
        yy: sideband(b)?,
        zz: sideband(a * s2)? + bare(2.0 * wz * c2)?,
    })
}

/// Rotating-frame rates with the sideband spectrum sampled at ω′.
pub fn rotating_frame_rates(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<RotatingRates> {
    rotating_frame_rates_with(geom, noise, SidebandArgument::DressedSplitting)
}

/// `1/T1′ = S_x′x′(ω′) + S_y′y′(ω′)` and `1/Tφ′ = S_z′z′(0)`, with the
/// sideband term of `1/T1′` sampled according to `arg`.
pub fn rotating_frame_rates_with(
    geom: &DriveGeometry,
    noise: &NoiseSpectrum,
    arg: SidebandArgument,
) -> Result<RotatingRates> {
    geom.require_rotating_frame()?;
    noise.validate()?;
    let (a, b) = phase_weights(geom, noise);
    let c2 = geom.cos_theta().powi(2);
    let s2 = geom.sin_theta().powi(2);
    let wz = noise.strengths.z;
    let wp = geom.dressed_splitting();

    let inv_t1p = weighted(2.0 * wz * s2, || noise.eval(wp))?
        + weighted(a * c2 + b, || noise.sideband(geom.nu(), arg.frequency(geom)))?;
    let inv_tphip = weighted(2.0 * s2 * a, || noise.eval(geom.nu()))? + weighted(2.0 * wz * c2, || noise.eval(0.0))?;
    Ok(RotatingRates::new(inv_t1p, inv_tphip))
}

/// Largest per-axis noise rms divided by Ω. Infinite for an undriven qubit
/// or unbounded white noise.
pub fn weak_noise_ratio(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for axis in crate::spectra::Axis::ALL {
        worst = worst.max(noise.rms(axis)?);
    }
    if worst == 0.0 {
        return Ok(0.0);
    }
    Ok(worst / geom.rabi())
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::spectra::{AxisStrengths, LorentzianParams, PhononParams, SpectralModel};
    use proptest::prelude::*;

    fn models() -> impl Strategy<Value = SpectralModel> {
        prop_oneof![
            (0.1..3.0f64).prop_map(|level| SpectralModel::White { level }),
            (0.1..5.0f64, 0.05..2.0f64, 0.0..3.0f64).prop_map(|(s, g, c)| {
                SpectralModel::Lorentzian(LorentzianParams { strength: s, linewidth: g, center: c })
            }),
            Just(SpectralModel::PhononPiezo(PhononParams::dimensionless())),
        ]
    }

    fn strengths() -> impl Strategy<Value = AxisStrengths> {
        (0.0..2.0f64, 0.0..2.0f64, 0.0..2.0f64).prop_map(|(x, y, z)| AxisStrengths::new(x, y, z))
    }

    proptest! {
        #[test]
        fn resonance_reduction(m in models(), w in 0.0..2.0f64, wz in 0.0..2.0f64,
                               rabi in 0.01..0.5f64, phi in -3.2..3.2f64) {
            let noise = NoiseSpectrum::new(m, AxisStrengths::new(w, w, wz)).unwrap();
            let g = DriveGeometry::resonant(1.0, rabi, phi).unwrap();
            let r = rotating_frame_rates(&g, &noise).unwrap();
            let t1 = 2.0 * wz * noise.eval(rabi).unwrap() + w * noise.sideband(1.0, rabi).unwrap();
            let tphi = 2.0 * w * noise.eval(1.0).unwrap();
            prop_assert!((r.inv_t1p - t1).abs() <= 1e-12 * t1.abs().max(1e-300));
            prop_assert!((r.inv_tphip - tphi).abs() <= 1e-12 * tphi.abs().max(1e-300));
        }

        #[test]
        fn isotropic_rates_ignore_phase(m in models(), w in 0.0..2.0f64, wz in 0.0..2.0f64,
                                        rabi in 0.01..0.5f64, nu in 0.5..1.5f64) {
            let noise = NoiseSpectrum::new(m, AxisStrengths::new(w, w, wz)).unwrap();
            let base = rotating_frame_rates(&DriveGeometry::new(1.0, rabi, nu, 0.0).unwrap(), &noise).unwrap();
            for k in 1..12 {
                let phi = k as f64 * 0.57;
                let r = rotating_frame_rates(&DriveGeometry::new(1.0, rabi, nu, phi).unwrap(), &noise).unwrap();
                prop_assert!((r.inv_t1p - base.inv_t1p).abs() <= 1e-12 * base.inv_t1p.max(1e-300));
                prop_assert!((r.inv_tphip - base.inv_tphip).abs() <= 1e-12 * base.inv_tphip.max(1e-300));
            }
        }

        #[test]
        fn dressed_splitting_branch(rabi in 0.0..3.0f64, nu in 0.01..3.0f64) {
            prop_assume!(rabi > 0.0 || nu != 1.0);
            let g = DriveGeometry::new(1.0, rabi, nu, 0.0).unwrap();
            let (s, c) = g.theta().sin_cos();
            let alt = rabi * s - g.detuning() * c;
            prop_assert!((g.dressed_splitting() - alt).abs() <= 1e-12 * g.dressed_splitting().max(1.0));
        }

        #[test]
        fn rates_non_negative(m in models(), w in strengths(), rabi in 0.01..0.5f64,
                              nu in 0.5..1.5f64, phi in -3.2..3.2f64) {
            let noise = NoiseSpectrum::new(m, w).unwrap();
            let g = DriveGeometry::new(1.0, rabi, nu, phi).unwrap();
            for arg in [SidebandArgument::DressedSplitting, SidebandArgument::DriveStrength] {
                let r = rotating_frame_rates_with(&g, &noise, arg).unwrap();
                prop_assert!(r.inv_t1p >= 0.0 && r.inv_tphip >= 0.0);
                prop_assert_eq!(r.inv_t2p, 0.5 * r.inv_t1p + r.inv_tphip);
            }
        }
    }
}
