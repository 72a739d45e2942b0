//! Spin qubit driven electrically through spin-orbit coupling, relaxing via
//! piezoelectric phonons.
//!
//! The drive and the phonon field enter as transverse effective magnetic
//! fields weighted by `β₋ = β(1 − r)` along x and `β₊ = β(1 + r)` along y,
//! with `r = α/β` the Rashba-to-Dresselhaus ratio. In dimensionless mode the
//! Zeeman frequency is 1, `S(ω) = |ω|⁵`, and the common prefactor K is 1.

use serde::{Deserialize, Serialize};

use crate::constants::{ELEMENTARY_CHARGE, HBAR};
use crate::error::{param, precondition, Error, Result};
use crate::frames::{DriveGeometry, SidebandArgument};
use crate::spectra::{AxisStrengths, NoiseSpectrum, PhononParams};

/// EDSR operating point. `rabi` and `delta` are the dimensionless drive
/// strength `R = Ω/ω_Z` and detuning `δ = Δ/ω_Z`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdsrParams {
    /// Dresselhaus strength β, m/s. Only enters physical mode.
    #[serde(default = "one")]
    pub beta: f64,
    /// Rashba-to-Dresselhaus ratio `r = α/β`.
    pub r: f64,
    #[serde(default)]
    pub phi: f64,
    pub rabi: f64,
    #[serde(default)]
    pub delta: f64,
    /// Zeeman angular frequency, rad/s in physical mode.
    #[serde(default = "one")]
    pub omega_z: f64,
    /// Dot confinement angular frequency, rad/s in physical mode.
    #[serde(default = "one")]
    pub omega_d: f64,
    #[serde(default = "PhononParams::dimensionless")]
    pub material: PhononParams,
    /// Drive field magnitude |E_x|, V/m.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_field: Option<f64>,
}

fn one() -> f64 {
    1.0
}

impl EdsrParams {
    pub fn dimensionless(r: f64, phi: f64, rabi: f64, delta: f64) -> Self {
        Self {
            beta: 1.0,
            r,
            phi,
            rabi,
            delta,
            omega_z: 1.0,
            omega_d: 1.0,
            material: PhononParams::dimensionless(),
            e_field: None,
        }
    }

    pub fn is_physical(&self) -> bool {
        !self.material.dimensionless
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r >= 0.0 && self.r.is_finite()) {
            return Err(param("Rashba ratio r must be non-negative"));
        }
        if !(self.rabi >= 0.0 && self.rabi.is_finite()) {
            return Err(param("drive strength R must be non-negative"));
        }
        if !(self.delta > -1.0 && self.delta.is_finite()) {
            return Err(param("detuning must satisfy 1 + δ > 0"));
        }
        if self.rabi == 0.0 && self.delta == 0.0 {
            return Err(param("R = δ = 0 leaves the rotating frame undefined"));
        }
        if !self.phi.is_finite() {
            return Err(param("drive phase must be finite"));
        }
        if self.is_physical() {
            if !(self.beta > 0.0 && self.omega_z > 0.0 && self.omega_d > 0.0) {
                return Err(param("physical mode needs positive β, ω_Z and ω_d"));
            }
            self.material.prefactor()?;
        }
        Ok(())
    }

    /// `β₊ = β(1 + r)`.
    pub fn beta_plus(&self) -> f64 {
        self.beta * (1.0 + self.r)
    }

    /// `β₋ = β(1 − r)`; may be zero or negative, only its square enters rates.
    pub fn beta_minus(&self) -> f64 {
        self.beta * (1.0 - self.r)
    }

    /// `1 + r² − 2r cos 2φ`, the weight of the Zeeman-frequency noise.
    pub fn zeeman_weight(&self) -> f64 {
        1.0 + self.r * self.r - 2.0 * self.r * (2.0 * self.phi).cos()
    }

    /// `1 + r² + 2r cos 2φ`, the weight of the sideband noise.
    pub fn sideband_weight(&self) -> f64 {
        1.0 + self.r * self.r + 2.0 * self.r * (2.0 * self.phi).cos()
    }

    /// Field-to-noise coupling `e²β²/(ħ²ω_d⁴)`, or 1 in dimensionless mode.
    fn coupling(&self) -> f64 {
        if self.is_physical() {
            (ELEMENTARY_CHARGE * self.beta / (HBAR * self.omega_d * self.omega_d)).powi(2)
        } else {
            1.0
        }
    }

    /// Common rate prefactor `K = e²β² S(ω_Z)/(ħ²ω_d⁴)`; 1 in dimensionless mode.
    pub fn prefactor(&self) -> Result<f64> {
        if self.is_physical() {
            Ok(self.coupling() * self.material.prefactor()? * self.omega_z.powi(5))
        } else {
            Ok(1.0)
        }
    }
}

/// `F(x) = (1 − x)⁵ + (1 + x)⁵ = 2 + 20x² + 10x⁴`.
pub fn taylor_f(x: f64) -> f64 {
    let x2 = x * x;
    2.0 + x2 * (20.0 + 10.0 * x2)
}

/// Rotating-frame EDSR rates together with the prefactor K they include.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdsrRates {
    pub inv_t1p: f64,
    pub inv_tphip: f64,
    pub prefactor: f64,
}

/// Geometry and noise model equivalent to an EDSR operating point.
#[derive(Debug, Clone, PartialEq)]
pub struct EdsrMapping {
    pub geom: DriveGeometry,
    pub noise: NoiseSpectrum,
}

/// Sideband sampling that reproduces the closed-form EDSR rates.
pub const EDSR_SIDEBAND: SidebandArgument = SidebandArgument::DriveStrength;

/// Drive geometry `(ω_Z, Rω_Z, (1+δ)ω_Z, φ)` and phonon noise with
/// `W_x ∝ β₋²`, `W_y ∝ β₊²`, `W_z = 0`.
pub fn map_edsr(p: &EdsrParams) -> Result<EdsrMapping> {
    p.validate()?;
    let wz = p.omega_z;
    let geom = DriveGeometry::new(wz, p.rabi * wz, (1.0 + p.delta) * wz, p.phi)?;
    let k = p.coupling() / (p.beta * p.beta);
    let strengths = AxisStrengths::new(k * p.beta_minus().powi(2), k * p.beta_plus().powi(2), 0.0);
    let noise = NoiseSpectrum::phonon(p.material, strengths)?;
    Ok(EdsrMapping { geom, noise })
}

/// Closed-form rotating-frame rates:
/// `1/T1′ = K (1+δ)⁵ F(R/(1+δ)) [w_Z δ²/(R²+δ²) + w_S]`,
/// `1/Tφ′ = 2K R² (1+δ)⁵ w_Z / (R² + δ²)`,
/// with `w_Z`, `w_S` the Zeeman and sideband weights.
pub fn edsr_rotating_rates(p: &EdsrParams) -> Result<EdsrRates> {
    p.validate()?;
    let k = p.prefactor()?;
    let (rr, d) = (p.rabi, p.delta);
    let tilt = (1.0 + d).powi(5);
    let lorentz = rr * rr + d * d;
    let inv_t1p = k * tilt * taylor_f(rr / (1.0 + d)) * (p.zeeman_weight() * d * d / lorentz + p.sideband_weight());
    let inv_tphip = k * 2.0 * rr * rr * tilt / lorentz * p.zeeman_weight();
    Ok(EdsrRates { inv_t1p, inv_tphip, prefactor: k })
}

/// Large-detuning forms `1/T1′ ≈ 4K(1+δ)⁵(1+r²)` and
/// `1/Tφ′ ≈ 2K (R/δ)² (1+δ)⁵ w_Z`.
pub fn edsr_large_detuning_rates(p: &EdsrParams) -> Result<(f64, f64)> {
    p.validate()?;
    if p.delta == 0.0 {
        return Err(param("large-detuning dephasing limit divides by δ = 0"));
    }
    let k = p.prefactor()?;
    let tilt = (1.0 + p.delta).powi(5);
    let ratio = p.rabi / p.delta;
    Ok((4.0 * k * tilt * (1.0 + p.r * p.r), 2.0 * k * ratio * ratio * tilt * p.zeeman_weight()))
}

/// Resonant lab-frame relaxation split into its Zeeman and sideband parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonantSplit {
    pub zeeman: f64,
    pub sideband: f64,
    pub total: f64,
    /// Free-qubit rate `4K(1 + r²)`.
    pub nondriven: f64,
    /// `total / nondriven`.
    pub ratio: f64,
}

/// `1/T1 = 2K w_Z + (K/2) F(R) w_S` at `δ = 0`.
pub fn edsr_resonant_t1_split(p: &EdsrParams) -> Result<ResonantSplit> {
    p.validate()?;
    if p.delta != 0.0 {
        return Err(precondition(format!("resonant split needs δ = 0, got {}", p.delta)));
    }
    let k = p.prefactor()?;
    let zeeman = 2.0 * k * p.zeeman_weight();
    let sideband = 0.5 * k * taylor_f(p.rabi) * p.sideband_weight();
    let total = zeeman + sideband;
    let nondriven = 4.0 * k * (1.0 + p.r * p.r);
    // closed form avoids K cancelling through rounding
    let c = 2.0 * p.r * (2.0 * p.phi).cos() / (1.0 + p.r * p.r);
    let ratio = 0.5 * (1.0 - c) + taylor_f(p.rabi) / 8.0 * (1.0 + c);
    Ok(ResonantSplit { zeeman, sideband, total, nondriven, ratio })
}

/// Ratio of the noise felt by a resonantly driven spin to that of a free
/// spin at frequency ω:
/// `w_Z/(2(1+r²)) + w_S F(Ω/ω)/(8(1+r²))`. Tends to
/// `3/4 − r cos2φ/(2(1+r²))` for `ω ≫ Ω`.
pub fn environment_rescaling(omega: f64, rabi: f64, r: f64, phi: f64) -> Result<f64> {
    if !(omega > 0.0) {
        return Err(param("environment rescaling needs ω > 0"));
    }
    let n = 1.0 + r * r;
    let c = 2.0 * r * (2.0 * phi).cos();
    Ok((n - c) / (2.0 * n) + (n + c) / (8.0 * n) * taylor_f(rabi / omega))
}

/// Resonant `φ = 0` lab dephasing `K [(7/4) F(R)(1+r)² − (1−r)²]`.
pub fn edsr_resonant_tphi(p: &EdsrParams) -> Result<f64> {
    p.validate()?;
    if p.delta != 0.0 {
        return Err(precondition(format!("resonant dephasing needs δ = 0, got {}", p.delta)));
    }
    if (p.phi.cos() - 1.0).abs() > 1e-12 {
        return Err(precondition(format!("resonant dephasing needs φ = 0, got {}", p.phi)));
    }
    let k = p.prefactor()?;
    Ok(k * (1.75 * taylor_f(p.rabi) * (1.0 + p.r).powi(2) - (1.0 - p.r).powi(2)))
}

/// Drive strength estimate `Ω/ω_Z ≈ 2(β + α) e |E_x| / (ħ ω_d²)`.
pub fn drive_strength_estimate(p: &EdsrParams) -> Result<f64> {
    let e = p.e_field.ok_or_else(|| Error::Input("drive strength estimate needs the field |E_x|".into()))?;
    if !(p.omega_d > 0.0 && p.beta > 0.0) {
        return Err(param("drive strength estimate needs positive β and ω_d"));
    }
    Ok(2.0 * p.beta_plus() * ELEMENTARY_CHARGE * e.abs() / (HBAR * p.omega_d * p.omega_d))
}

/// Control-field amplitudes that produce the requested drive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DriveFieldAmplitudes {
    /// `|E_x^c| = ħω_d²Ω/(eβ₊ν)`, V/m.
    pub e_x: f64,
    /// `|E_y^c| = ħω_d²Ω/(eβ₋ν)`, V/m; absent when `β₋ = 0`.
    pub e_y: Option<f64>,
    pub notice: Option<String>,
}

/// Elliptically polarized control field for the physical operating point.
pub fn drive_field_amplitudes(p: &EdsrParams) -> Result<DriveFieldAmplitudes> {
    p.validate()?;
    if !p.is_physical() {
        return Err(Error::Input("drive field amplitudes need physical mode".into()));
    }
    let omega = p.rabi * p.omega_z;
    let nu = (1.0 + p.delta) * p.omega_z;
    let scale = HBAR * p.omega_d * p.omega_d * omega / (ELEMENTARY_CHARGE * nu);
    let e_x = scale / p.beta_plus();
    if p.beta_minus() == 0.0 {
        return Ok(DriveFieldAmplitudes {
            e_x,
            e_y: None,
            notice: Some(
                "β₋ = 0: the y field does not couple; fix φ = π/2 and drive with a field linearly polarized along x"
                    .into(),
            ),
        });
    }
    Ok(DriveFieldAmplitudes { e_x, e_y: Some(scale / p.beta_minus().abs()), notice: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::{rotating_frame_rates, rotating_frame_rates_with};
    use crate::labframe::{resonant_t1, resonant_tphi_phi0};
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn f_values() {
        assert_eq!(taylor_f(0.0), 2.0);
        assert_eq!(taylor_f(1.0), 32.0);
        let direct = 0.9f64.powi(5) + 1.1f64.powi(5);
        assert_relative_eq!(taylor_f(0.1), direct, max_relative = 1e-14);
        assert_relative_eq!(taylor_f(0.1), 2.201, max_relative = 1e-12);
        // leading expansion 2 + 20R²
        assert!((taylor_f(0.1) - 2.2).abs() < 2e-3);
    }

    #[test]
    fn mapping_strengths() {
        let m0 = map_edsr(&EdsrParams::dimensionless(0.0, 0.3, 0.01, 0.0)).unwrap();
        assert_eq!(m0.noise.strengths.x, m0.noise.strengths.y);
        assert_eq!(m0.noise.strengths.z, 0.0);
        let m1 = map_edsr(&EdsrParams::dimensionless(1.0, 0.3, 0.01, 0.2)).unwrap();
        assert_eq!(m1.noise.strengths.x, 0.0);
        assert_eq!(m1.noise.strengths.y, 4.0);
        assert_eq!(m1.geom.nu(), 1.2);
    }

    #[test]
    fn rotating_rates_match_frames_pipeline() {
        for &r in &[0.0, 0.5, 0.9, 1.0] {
            for &phi in &[0.0, FRAC_PI_4, FRAC_PI_2] {
                for &rabi in &[1e-3, 1e-2, 1e-1] {
                    for k in 0..=20 {
                        let delta = -0.5 + 0.05 * k as f64;
                        let p = EdsrParams::dimensionless(r, phi, rabi, delta);
                        let m = map_edsr(&p).unwrap();
                        let a = edsr_rotating_rates(&p).unwrap();
                        let b = rotating_frame_rates_with(&m.geom, &m.noise, EDSR_SIDEBAND).unwrap();
                        assert_relative_eq!(a.inv_t1p, b.inv_t1p, max_relative = 1e-10);
                        assert_relative_eq!(a.inv_tphip, b.inv_tphip, max_relative = 1e-10, epsilon = 1e-300);
                    }
                }
            }
        }
    }

    #[test]
    fn dressed_sideband_differs_only_off_resonance() {
        let on = EdsrParams::dimensionless(0.5, 0.3, 0.05, 0.0);
        let m = map_edsr(&on).unwrap();
        let exact = rotating_frame_rates(&m.geom, &m.noise).unwrap();
        assert_relative_eq!(exact.inv_t1p, edsr_rotating_rates(&on).unwrap().inv_t1p, max_relative = 1e-12);

        let off = EdsrParams::dimensionless(0.5, 0.3, 0.05, 0.2);
        let m = map_edsr(&off).unwrap();
        let exact = rotating_frame_rates(&m.geom, &m.noise).unwrap();
        let closed = edsr_rotating_rates(&off).unwrap();
        let rel = (exact.inv_t1p - closed.inv_t1p).abs() / closed.inv_t1p;
        assert!(rel > 1e-3, "rel {rel}");
    }

    #[test]
    fn resonant_dephasing_peak_value() {
        let p = EdsrParams::dimensionless(0.7, 0.4, 0.02, 0.0);
        let r = edsr_rotating_rates(&p).unwrap();
        assert_relative_eq!(r.inv_tphip, 2.0 * p.zeeman_weight(), max_relative = 1e-14);
    }

    #[test]
    fn large_detuning_accuracy() {
        for &r in &[0.0, 0.5, 1.0] {
            for &phi in &[0.0, 1.0] {
                let p = EdsrParams::dimensionless(r, phi, 0.01, 0.5);
                let exact = edsr_rotating_rates(&p).unwrap();
                let (t1, tphi) = edsr_large_detuning_rates(&p).unwrap();
                assert_relative_eq!(t1, exact.inv_t1p, max_relative = 1e-3);
                assert_relative_eq!(tphi, exact.inv_tphip, max_relative = 1e-3);
            }
        }
        assert!(edsr_large_detuning_rates(&EdsrParams::dimensionless(0.0, 0.0, 0.01, 0.0)).is_err());
    }

    #[test]
    fn large_detuning_t1_r_and_phi_scaling() {
        let t = |r: f64, phi: f64| edsr_large_detuning_rates(&EdsrParams::dimensionless(r, phi, 0.01, 0.3)).unwrap().0;
        assert_relative_eq!(t(1.0, 0.0) / t(0.0, 0.0), 2.0, max_relative = 1e-14);
        for k in 0..10 {
            assert_relative_eq!(t(0.6, 0.3 * k as f64), t(0.6, 0.0), max_relative = 1e-14);
        }
    }

    #[test]
    fn resonant_split_cases() {
        let s = edsr_resonant_t1_split(&EdsrParams::dimensionless(0.0, 0.0, 1e-6, 0.0)).unwrap();
        assert_relative_eq!(s.ratio, 0.75, max_relative = 1e-9);
        assert_relative_eq!(s.ratio, s.total / s.nondriven, max_relative = 1e-14);

        let p = EdsrParams::dimensionless(1.0, 0.0, 0.05, 0.0);
        let s = edsr_resonant_t1_split(&p).unwrap();
        assert_eq!(s.zeeman, 0.0);
        assert_relative_eq!(s.ratio, taylor_f(0.05) / 4.0, max_relative = 1e-14);

        let totals: Vec<f64> = (0..=40)
            .map(|k| edsr_resonant_t1_split(&EdsrParams::dimensionless(0.6, PI * k as f64 / 40.0, 0.05, 0.0)).unwrap().total)
            .collect();
        let imax = totals.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).unwrap().0;
        assert_eq!(imax, 20);

        assert!(edsr_resonant_t1_split(&EdsrParams::dimensionless(0.0, 0.0, 0.05, 0.1)).is_err());
    }

    #[test]
    fn resonant_split_matches_lab_formula() {
        for &r in &[0.0, 0.3, 1.0, 2.0] {
            for &phi in &[0.0, 0.4, FRAC_PI_2] {
                let p = EdsrParams::dimensionless(r, phi, 0.03, 0.0);
                let m = map_edsr(&p).unwrap();
                let s = edsr_resonant_t1_split(&p).unwrap();
                assert_relative_eq!(s.total, resonant_t1(&m.geom, &m.noise).unwrap(), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn rescaling_limits() {
        assert_relative_eq!(environment_rescaling(1e3, 1.0, 1.0, 0.0).unwrap(), 0.5, epsilon = 1e-4);
        assert_relative_eq!(environment_rescaling(1e3, 1.0, 1.0, FRAC_PI_2).unwrap(), 1.0, epsilon = 1e-4);
        for k in 0..8 {
            assert_relative_eq!(environment_rescaling(1e3, 1.0, 0.0, 0.4 * k as f64).unwrap(), 0.75, epsilon = 1e-4);
        }
        assert!(environment_rescaling(0.0, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn resonant_tphi_small_drive_polynomial() {
        for &r in &[0.0, 0.25, 0.5, 1.0] {
            let v = edsr_resonant_tphi(&EdsrParams::dimensionless(r, 0.0, 1e-7, 0.0)).unwrap();
            assert_relative_eq!(v, 2.5 + 9.0 * r + 2.5 * r * r, max_relative = 1e-10);
        }
        let mut last = f64::NEG_INFINITY;
        for k in 0..=20 {
            let v = edsr_resonant_tphi(&EdsrParams::dimensionless(0.1 * k as f64, 0.0, 0.01, 0.0)).unwrap();
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn resonant_tphi_matches_lab_formula() {
        for &r in &[0.0, 0.5, 0.9, 1.0] {
            for &rabi in &[1e-3, 1e-2, 1e-1] {
                let p = EdsrParams::dimensionless(r, 0.0, rabi, 0.0);
                let m = map_edsr(&p).unwrap();
                assert_relative_eq!(
                    edsr_resonant_tphi(&p).unwrap(),
                    resonant_tphi_phi0(&m.geom, &m.noise).unwrap(),
                    max_relative = 1e-10
                );
            }
        }
    }

    fn gaas(rabi: f64) -> EdsrParams {
        let mev = 1e-3 * ELEMENTARY_CHARGE / HBAR;
        EdsrParams {
            beta: 1000.0,
            r: 0.0,
            phi: 0.0,
            rabi,
            delta: 0.0,
            omega_z: 0.44 * crate::constants::BOHR_MAGNETON * 1.0 / HBAR,
            omega_d: mev,
            material: PhononParams::physical(0.16, 5300.0, 4000.0),
            e_field: Some(4000.0),
        }
    }

    #[test]
    fn drive_strength_estimate_order_of_magnitude() {
        let p = gaas(0.01);
        let est = drive_strength_estimate(&p).unwrap();
        // 2 β e E ħ / (ħω_d)² with ħω_d = 1 meV
        let oracle = 2.0 * 1000.0 * 1.602_176_634e-19 * 4000.0 * 1.054_571_817e-34 / (1.602_176_634e-22f64).powi(2);
        assert_relative_eq!(est, oracle, max_relative = 1e-12);
        assert!((1e-3..=1e-1).contains(&est));

        let doubled = EdsrParams { e_field: Some(8000.0), ..p.clone() };
        assert_relative_eq!(drive_strength_estimate(&doubled).unwrap(), 2.0 * est, max_relative = 1e-14);
        let tighter = EdsrParams { omega_d: 0.5 * p.omega_d, ..p.clone() };
        assert_relative_eq!(drive_strength_estimate(&tighter).unwrap(), 4.0 * est, max_relative = 1e-14);
        let missing = EdsrParams { e_field: None, ..p };
        assert!(matches!(drive_strength_estimate(&missing), Err(Error::Input(_))));
    }

    #[test]
    fn physical_mode_matches_frames_pipeline() {
        let p = EdsrParams { r: 0.4, phi: 0.3, delta: 0.1, ..gaas(0.01) };
        let m = map_edsr(&p).unwrap();
        let a = edsr_rotating_rates(&p).unwrap();
        let b = rotating_frame_rates_with(&m.geom, &m.noise, EDSR_SIDEBAND).unwrap();
        assert_relative_eq!(a.inv_t1p, b.inv_t1p, max_relative = 1e-10);
        assert_relative_eq!(a.inv_tphip, b.inv_tphip, max_relative = 1e-10);
        assert!(a.prefactor > 0.0 && a.prefactor != 1.0);
    }

    #[test]
    fn field_amplitudes_and_degenerate_polarization() {
        let p = EdsrParams { r: 0.5, ..gaas(0.01) };
        let amp = drive_field_amplitudes(&p).unwrap();
        assert_relative_eq!(amp.e_y.unwrap() / amp.e_x, 3.0, max_relative = 1e-14);
        let deg = drive_field_amplitudes(&EdsrParams { r: 1.0, ..gaas(0.01) }).unwrap();
        assert!(deg.e_y.is_none() && deg.notice.is_some());
        assert!(drive_field_amplitudes(&EdsrParams::dimensionless(0.5, 0.0, 0.01, 0.0)).is_err());
    }

    #[test]
    fn degenerate_operating_point() {
        assert!(edsr_rotating_rates(&EdsrParams::dimensionless(0.5, 0.0, 0.0, 0.0)).is_err());
        assert!(edsr_rotating_rates(&EdsrParams::dimensionless(0.5, 0.0, 0.01, -1.0)).is_err());
    }
}
