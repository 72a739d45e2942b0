//! Lab-frame decay: envelopes of `⟨σz⟩` and `⟨σx⟩`, their 1/e crossings, and
//! the closed-form resonant rates.

use std::f64::consts::E;

use serde::{Deserialize, Serialize};

use crate::error::{param, precondition, Error, Result};
use crate::frames::{phase_weights, rotating_frame_rates_with, DriveGeometry, RotatingRates, SidebandArgument};
use crate::roots::{first_crossing, Crossing};
use crate::spectra::NoiseSpectrum;

/// Scan window relative to the rotating-frame decay times.
const SCAN_BELOW: f64 = 1e-3;
const SCAN_ABOVE: f64 = 1e3;

/// Which envelope the root solvers use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnvelopeMode {
    /// T1 from the `σ′∞ = 0` form of the `⟨σz⟩` envelope; T2 from the
    /// literal `φ = 0, σ′∞ = −1` form of the `⟨σx⟩` envelope. `sigma_inf`
    /// in the config is ignored.
    #[default]
    FixedAsymptote,
    /// Both envelopes with the configured `σ′∞` and arbitrary φ.
    General,
}

/// Inputs to the envelope functions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvelopeConfig {
    pub geom: DriveGeometry,
    pub rates: RotatingRates,
    /// Long-time rotating-frame polarization `σ′∞ ∈ [−1, 1]`.
    pub sigma_inf: f64,
}

impl EnvelopeConfig {
    pub fn new(geom: DriveGeometry, rates: RotatingRates, sigma_inf: f64) -> Result<Self> {
        let cfg = Self { geom, rates, sigma_inf };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Rotating-frame rates from `noise`, with `σ′∞ = 0`.
    pub fn from_noise(geom: DriveGeometry, noise: &NoiseSpectrum, arg: SidebandArgument) -> Result<Self> {
        Self::new(geom, rotating_frame_rates_with(&geom, noise, arg)?, 0.0)
    }

    pub fn with_sigma_inf(self, sigma_inf: f64) -> Result<Self> {
        Self::new(self.geom, self.rates, sigma_inf)
    }

    pub fn validate(&self) -> Result<()> {
        self.geom.require_rotating_frame()?;
        if !(self.sigma_inf.abs() <= 1.0) {
            return Err(param("σ′∞ must lie in [-1, 1]"));
        }
        let r = self.rates;
        if !(r.inv_t1p >= 0.0 && r.inv_t2p >= 0.0) || !r.inv_t1p.is_finite() || !r.inv_t2p.is_finite() {
            return Err(param("rotating-frame rates must be finite and non-negative"));
        }
        Ok(())
    }

    fn decays(&self, t: f64) -> (f64, f64) {
        ((-t * self.rates.inv_t1p).exp(), (-t * self.rates.inv_t2p).exp())
    }

    /// Scan window `[10⁻³ min T, 10³ max T]` over the finite rotating-frame times.
    fn window(&self) -> Result<(f64, f64)> {
        let rates = [self.rates.inv_t1p, self.rates.inv_t2p];
        let fast = rates.iter().cloned().fold(0.0, f64::max);
        let slow = rates.iter().cloned().filter(|r| *r > 0.0).fold(f64::INFINITY, f64::min);
        if fast == 0.0 {
            return Err(Error::DivergentTime);
        }
        Ok((SCAN_BELOW / fast, SCAN_ABOVE / slow))
    }
}

/// How a [`LabRates`] value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RateMethod {
    Analytic,
    RootSolved,
}

/// Lab-frame `1/T1`, `1/T2` and `1/Tφ = 1/T2 − 1/(2T1)`. `inv_tphi` keeps its
/// sign; see [`LabRates::tphi_is_negative`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabRates {
    pub inv_t1: f64,
    pub inv_t2: f64,
    pub inv_tphi: f64,
    pub method: RateMethod,
}

impl LabRates {
    pub fn new(inv_t1: f64, inv_t2: f64, method: RateMethod) -> Self {
        Self { inv_t1, inv_t2, inv_tphi: inv_t2 - 0.5 * inv_t1, method }
    }

    /// A negative pure-dephasing rate signals that the envelope picture has
    /// left its range of validity; callers should warn rather than clamp.
    pub fn tphi_is_negative(&self) -> bool {
        self.inv_tphi < 0.0
    }
}

/// Envelope of `⟨σz(t)⟩` starting from `⟨σz(0)⟩ = 1`:
/// `sin²θ e^{−t/T2′} + cosθ [σ′∞ + (cosθ − σ′∞) e^{−t/T1′}]`.
pub fn sigma_z_envelope(cfg: &EnvelopeConfig, t: f64) -> f64 {
    let (e1, e2) = cfg.decays(t);
    let s = cfg.geom.sin_theta();
    let c = cfg.geom.cos_theta();
    s * s * e2 + c * (cfg.sigma_inf + (c - cfg.sigma_inf) * e1)
}

/// Upper envelope of `⟨σx(t)⟩` starting from `⟨σx(0)⟩ = 1`.
///
/// `⟨σx⟩ = [L + S⊥ e^{−t/T2′} cosθ cos u] cos(νt+φ) − S⊥ e^{−t/T2′} sin u sin(νt+φ)`
/// with `u = ω′t + ψ`. Maximizing the carrier amplitude over the slow phase
/// `u` gives the envelope; it equals 1 at `t = 0` for every geometry and
/// reduces to `|L| + S⊥|cosθ| e^{−t/T2′}` at `φ = 0`.
pub fn sigma_x_envelope(cfg: &EnvelopeConfig, t: f64) -> f64 {
    let (e1, e2) = cfg.decays(t);
    let s = cfg.geom.sin_theta();
    let c = cfg.geom.cos_theta();
    let (sp, cp) = cfg.geom.phi().sin_cos();
    let perp = (c * c * cp * cp + sp * sp).sqrt();

    let l = cfg.sigma_inf * s + (cp * s - cfg.sigma_inf) * s * e1;
    let a = perp * c * e2;
    let b = perp * e2;
    // |L + a x + i b √(1−x²)|² over x = cos u ∈ [−1, 1]
    let q = |x: f64| (a * a - b * b) * x * x + 2.0 * l * a * x + l * l + b * b;
    let mut best = q(1.0).max(q(-1.0));
    let curv = b * b - a * a;
    if curv > 0.0 {
        let x = l * a / curv;
        if x.abs() <= 1.0 {
            best = best.max(q(x));
        }
    }
    best.max(0.0).sqrt()
}

/// `σ′∞ = 0` envelope used for T1 in fixed-asymptote mode:
/// `sin²θ e^{−t/T2′} + cos²θ e^{−t/T1′}`.
pub fn fixed_t1_envelope(cfg: &EnvelopeConfig, t: f64) -> f64 {
    let (e1, e2) = cfg.decays(t);
    let s = cfg.geom.sin_theta();
    let c = cfg.geom.cos_theta();
    s * s * e2 + c * c * e1
}

/// `φ = 0, σ′∞ = −1` transverse envelope used for T2 in fixed-asymptote mode:
/// `sinθ (e^{−t/T1′} − 1) + sin²θ e^{−t/T1′} + cos²θ e^{−t/T2′}`.
/// Unlike [`sigma_x_envelope`] it keeps the sign of the first bracket.
pub fn fixed_t2_envelope(cfg: &EnvelopeConfig, t: f64) -> f64 {
    let (e1, e2) = cfg.decays(t);
    let s = cfg.geom.sin_theta();
    let c = cfg.geom.cos_theta();
    s * (e1 - 1.0) + s * s * e1 + c * c * e2
}

fn crossing(cfg: &EnvelopeConfig, f: impl Fn(f64) -> f64) -> Result<Crossing> {
    cfg.validate()?;
    let (lo, hi) = cfg.window()?;
    first_crossing(f, 1.0 / E, lo, hi)
}

/// Lab `1/T1` from the 1/e crossing of the `⟨σz⟩` envelope, with the
/// bracket returned alongside.
pub fn solve_t1_crossing(cfg: &EnvelopeConfig, mode: EnvelopeMode) -> Result<Crossing> {
    match mode {
        EnvelopeMode::FixedAsymptote => crossing(cfg, |t| fixed_t1_envelope(cfg, t)),
        EnvelopeMode::General => crossing(cfg, |t| sigma_z_envelope(cfg, t)),
    }
}

/// Lab `1/T2` crossing; fixed-asymptote mode requires `φ = 0`.
pub fn solve_t2_crossing(cfg: &EnvelopeConfig, mode: EnvelopeMode) -> Result<Crossing> {
    match mode {
        EnvelopeMode::FixedAsymptote => {
            if (cfg.geom.phi().cos() - 1.0).abs() > 1e-12 {
                return Err(precondition("fixed-asymptote T2 envelope is defined for φ = 0 only"));
            }
            crossing(cfg, |t| fixed_t2_envelope(cfg, t))
        }
        EnvelopeMode::General => crossing(cfg, |t| sigma_x_envelope(cfg, t)),
    }
}

pub fn solve_t1(cfg: &EnvelopeConfig, mode: EnvelopeMode) -> Result<f64> {
    Ok(1.0 / solve_t1_crossing(cfg, mode)?.time)
}

pub fn solve_t2(cfg: &EnvelopeConfig, mode: EnvelopeMode) -> Result<f64> {
    Ok(1.0 / solve_t2_crossing(cfg, mode)?.time)
}

/// Root-solved `1/T1`, `1/T2` and their `1/Tφ`.
pub fn lab_rates(cfg: &EnvelopeConfig, mode: EnvelopeMode) -> Result<LabRates> {
    Ok(LabRates::new(solve_t1(cfg, mode)?, solve_t2(cfg, mode)?, RateMethod::RootSolved))
}

fn require_resonant(geom: &DriveGeometry) -> Result<()> {
    geom.require_rotating_frame()?;
    if !geom.is_resonant() {
        return Err(precondition(format!(
            "resonant formula needs ν = ω_Z, got ν = {}, ω_Z = {}",
            geom.nu(),
            geom.omega_z()
        )));
    }
    Ok(())
}

fn require_zero_phase(geom: &DriveGeometry) -> Result<()> {
    if (geom.phi().cos() - 1.0).abs() > 1e-12 {
        return Err(precondition(format!("formula needs φ = 0, got φ = {}", geom.phi())));
    }
    Ok(())
}

fn weighted(coef: f64, f: impl FnOnce() -> Result<f64>) -> Result<f64> {
    if coef == 0.0 {
        Ok(0.0)
    } else {
        Ok(coef * f()?)
    }
}

/// Closed-form resonant lab `1/T1`:
/// `½(W_x sin²φ + W_y cos²φ) S̃(ω_Z, Ω) + 2(W_x cos²φ + W_y sin²φ) S(ω_Z) + W_z S(Ω)`.
pub fn resonant_t1(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<f64> {
    require_resonant(geom)?;
    noise.validate()?;
    let (a, b) = phase_weights(geom, noise);
    let wz = geom.omega_z();
    let rabi = geom.rabi();
    Ok(weighted(0.5 * b, || noise.sideband(wz, rabi))?
        + weighted(2.0 * a, || noise.eval(wz))?
        + weighted(noise.strengths.z, || noise.eval(rabi))?)
}

/// Free-qubit rates `(1/T1, 1/Tφ) = (2(W_x + W_y) S(ω_Z), 2 W_z S(0))`.
pub fn nondriven_rates(omega_z: f64, noise: &NoiseSpectrum) -> Result<(f64, f64)> {
    if !(omega_z > 0.0) {
        return Err(param("qubit splitting must be positive"));
    }
    noise.validate()?;
    let w = noise.strengths;
    Ok((weighted(2.0 * (w.x + w.y), || noise.eval(omega_z))?, weighted(2.0 * w.z, || noise.eval(0.0))?))
}

/// Change of the resonant lab `1/T1` caused by the drive:
/// `W_z S(Ω) − (W_x sin²φ + W_y cos²φ)[2S(ω_Z) − ½S̃(ω_Z, Ω)]`.
pub fn driving_modification(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<f64> {
    require_resonant(geom)?;
    noise.validate()?;
    let (_, b) = phase_weights(geom, noise);
    let wz = geom.omega_z();
    let rabi = geom.rabi();
    let gain = weighted(noise.strengths.z, || noise.eval(rabi))?;
    let loss = if b == 0.0 { 0.0 } else { b * (2.0 * noise.eval(wz)? - 0.5 * noise.sideband(wz, rabi)?) };
    Ok(gain - loss)
}

/// Resonant `φ = 0` lab `1/Tφ = 7/(4T1′) − 1/(2Tφ′)`, which follows from
/// taking `1/T2 = 2/T1′`:
/// `(7/2) W_z S(Ω) + (7/4) W_y S̃(ω_Z, Ω) − W_x S(ω_Z)`. May be negative.
pub fn resonant_tphi_phi0(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<f64> {
    require_resonant(geom)?;
    require_zero_phase(geom)?;
    noise.validate()?;
    let w = noise.strengths;
    let wz = geom.omega_z();
    let rabi = geom.rabi();
    Ok(weighted(3.5 * w.z, || noise.eval(rabi))?
        + weighted(1.75 * w.y, || noise.sideband(wz, rabi))?
        - weighted(w.x, || noise.eval(wz))?)
}

/// Analytic resonant `φ = 0` lab rates: `1/T1` from [`resonant_t1`],
/// `1/T2 = 2/T1′`, and `1/Tφ` from [`resonant_tphi_phi0`].
pub fn resonant_lab_rates(geom: &DriveGeometry, noise: &NoiseSpectrum) -> Result<LabRates> {
    let inv_t1 = resonant_t1(geom, noise)?;
    let inv_tphi = resonant_tphi_phi0(geom, noise)?;
    Ok(LabRates { inv_t1, inv_t2: inv_tphi + 0.5 * inv_t1, inv_tphi, method: RateMethod::Analytic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frames::rotating_frame_rates;
    use crate::spectra::AxisStrengths;
    use approx::assert_relative_eq;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};

    fn cfg_theta(theta: f64, phi: f64, inv_t1p: f64, inv_t2p: f64, sigma_inf: f64) -> EnvelopeConfig {
        // R = sinθ, Δ = −cosθ with ω_Z large enough that ν > 0
        let geom = DriveGeometry::new(10.0, theta.sin(), 10.0 - theta.cos(), phi).unwrap();
        let rates = RotatingRates { inv_t1p, inv_tphip: inv_t2p - 0.5 * inv_t1p, inv_t2p };
        EnvelopeConfig::new(geom, rates, sigma_inf).unwrap()
    }

    /// Independent bisection on a scalar function, used as an oracle.
    fn bisect_oracle(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 1.0 / E {
                lo = mid
            } else {
                hi = mid
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn sigma_z_hand_value() {
        let cfg = cfg_theta(FRAC_PI_3, 0.0, 1.0, 2.0, 0.0);
        let expected = 0.75 * (-2.0f64).exp() + 0.25 * (-1.0f64).exp();
        assert_relative_eq!(sigma_z_envelope(&cfg, 1.0), expected, max_relative = 1e-12);
        assert!((expected - 0.19345).abs() < 5e-5);
    }

    #[test]
    fn sigma_z_on_resonance_is_pure_t2p() {
        let cfg = cfg_theta(FRAC_PI_2, 0.3, 1.0, 2.5, 0.7);
        for t in [0.0, 0.3, 2.0] {
            assert_relative_eq!(sigma_z_envelope(&cfg, t), (-2.5 * t).exp(), max_relative = 1e-14);
        }
    }

    #[test]
    fn resonant_t1_crossing_equals_t2p() {
        let cfg = cfg_theta(FRAC_PI_2, 0.0, 1.0, 3.0, 0.0);
        let c = solve_t1_crossing(&cfg, EnvelopeMode::FixedAsymptote).unwrap();
        assert_relative_eq!(1.0 / c.time, 3.0, max_relative = 1e-9);
        assert!(c.width() <= 1e-9 * c.time);
    }

    #[test]
    fn equal_weight_two_exponentials() {
        // R = δ: ½ e^{−3T} + ½ e^{−T} = 1/e
        let g = DriveGeometry::new(1.0, 0.05, 1.05, 0.0).unwrap();
        let cfg = EnvelopeConfig::new(g, RotatingRates { inv_t1p: 1.0, inv_tphip: 2.5, inv_t2p: 3.0 }, 0.0).unwrap();
        let t = bisect_oracle(|t| 0.5 * (-3.0 * t).exp() + 0.5 * (-t).exp(), 0.0, 10.0);
        let solved = solve_t1(&cfg, EnvelopeMode::FixedAsymptote).unwrap();
        assert_relative_eq!(solved, 1.0 / t, max_relative = 1e-8);
        assert_relative_eq!(solved, 1.72507, max_relative = 1e-5);
    }

    #[test]
    fn fixed_t2_on_resonance() {
        let cfg = cfg_theta(FRAC_PI_2, 0.0, 1.0, 1.7, -1.0);
        let inv_t2 = solve_t2(&cfg, EnvelopeMode::FixedAsymptote).unwrap();
        let ratio = -((1.0 + (-1.0f64).exp()) / 2.0).ln();
        assert_relative_eq!(inv_t2, 1.0 / ratio, max_relative = 1e-8);
        assert_relative_eq!(inv_t2, 2.632, max_relative = 1e-3);
    }

    #[test]
    fn fixed_t2_needs_zero_phase() {
        let cfg = cfg_theta(FRAC_PI_2, 0.4, 1.0, 1.7, -1.0);
        assert!(matches!(solve_t2(&cfg, EnvelopeMode::FixedAsymptote), Err(Error::Precondition(_))));
        assert!(solve_t2(&cfg, EnvelopeMode::General).is_ok());
    }

    #[test]
    fn sigma_x_resonant_zero_phase() {
        let cfg = cfg_theta(FRAC_PI_2, 0.0, 0.8, 2.0, -1.0);
        for t in [0.0f64, 0.4, 3.0] {
            let expected = (-1.0 + 2.0 * (-0.8 * t).exp()).abs();
            assert_relative_eq!(sigma_x_envelope(&cfg, t), expected, epsilon = 1e-14);
        }
    }

    #[test]
    fn sigma_x_resonant_quarter_phase_is_transverse() {
        // S⊥ = 1, L = σ′∞ (1 − e^{−t/T1′}) vanishes for σ′∞ = 0
        let cfg = cfg_theta(FRAC_PI_2, FRAC_PI_2, 0.8, 2.0, 0.0);
        for t in [0.0, 0.4, 3.0] {
            assert_relative_eq!(sigma_x_envelope(&cfg, t), (-2.0 * t).exp(), max_relative = 1e-12);
        }
    }

    #[test]
    fn sigma_x_matches_fixed_form_before_sign_change() {
        let cfg = cfg_theta(1.1, 0.0, 0.6, 1.4, -1.0);
        for t in [0.0, 0.05, 0.2] {
            assert_relative_eq!(sigma_x_envelope(&cfg, t), fixed_t2_envelope(&cfg, t), max_relative = 1e-12);
        }
    }

    #[test]
    fn sigma_x_envelope_bounds_brute_force_phase_scan() {
        let cfg = cfg_theta(1.0, 0.7, 0.6, 1.4, -0.3);
        let s = cfg.geom.sin_theta();
        let c = cfg.geom.cos_theta();
        let (sp, cp) = cfg.geom.phi().sin_cos();
        let perp = (c * c * cp * cp + sp * sp).sqrt();
        for &t in &[0.0, 0.3, 1.2] {
            let (e1, e2) = cfg.decays(t);
            let l = cfg.sigma_inf * s + (cp * s - cfg.sigma_inf) * s * e1;
            let mut best: f64 = 0.0;
            for k in 0..20_000 {
                let u = 2.0 * PI * k as f64 / 20_000.0;
                let x = l + perp * e2 * c * u.cos();
                let y = perp * e2 * u.sin();
                best = best.max(x.hypot(y));
            }
            assert_relative_eq!(sigma_x_envelope(&cfg, t), best, max_relative = 1e-6);
        }
    }

    #[test]
    fn t2_scales_inversely_with_common_rate() {
        let a = cfg_theta(1.2, 0.0, 1.0, 1.0, -1.0);
        let b = cfg_theta(1.2, 0.0, 3.0, 3.0, -1.0);
        let ra = solve_t2(&a, EnvelopeMode::FixedAsymptote).unwrap();
        let rb = solve_t2(&b, EnvelopeMode::FixedAsymptote).unwrap();
        assert_relative_eq!(rb / ra, 3.0, max_relative = 1e-8);
    }

    #[test]
    fn zero_rates_diverge_and_plateau_has_no_crossing() {
        let cfg = cfg_theta(1.0, 0.0, 0.0, 0.0, 0.0);
        assert_eq!(solve_t1(&cfg, EnvelopeMode::FixedAsymptote), Err(Error::DivergentTime));
        // cos θ · σ′∞ stays above 1/e
        let stuck = cfg_theta(0.2, 0.0, 1.0, 1.0, 0.99);
        assert!(matches!(solve_t1(&stuck, EnvelopeMode::General), Err(Error::NoCrossing { .. })));
    }

    #[test]
    fn sigma_inf_out_of_range() {
        let g = DriveGeometry::resonant(1.0, 0.1, 0.0).unwrap();
        assert!(EnvelopeConfig::new(g, RotatingRates::new(1.0, 1.0), 1.5).is_err());
    }

    fn white_unit(w: AxisStrengths) -> NoiseSpectrum {
        NoiseSpectrum::white(1.0, w).unwrap()
    }

    #[test]
    fn resonant_t1_flat_transverse() {
        let g = DriveGeometry::resonant(1.0, 0.1, 0.0).unwrap();
        let noise = white_unit(AxisStrengths::transverse(1.0));
        assert_eq!(resonant_t1(&g, &noise).unwrap(), 3.0);
        assert_eq!(nondriven_rates(1.0, &noise).unwrap(), (4.0, 0.0));
        assert_eq!(driving_modification(&g, &noise).unwrap(), -1.0);
    }

    #[test]
    fn resonant_formulas_need_resonance() {
        let g = DriveGeometry::new(1.0, 0.1, 1.1, 0.0).unwrap();
        let noise = white_unit(AxisStrengths::transverse(1.0));
        assert!(matches!(resonant_t1(&g, &noise), Err(Error::Precondition(_))));
        assert!(matches!(driving_modification(&g, &noise), Err(Error::Precondition(_))));
        let phased = DriveGeometry::resonant(1.0, 0.1, 0.3).unwrap();
        assert!(matches!(resonant_tphi_phi0(&phased, &noise), Err(Error::Precondition(_))));
    }

    #[test]
    fn isotropic_white_has_no_driving_modification() {
        let g = DriveGeometry::resonant(1.0, 0.1, 0.9).unwrap();
        let noise = white_unit(AxisStrengths::isotropic(0.4));
        assert_eq!(driving_modification(&g, &noise).unwrap(), 0.0);
    }

    #[test]
    fn longitudinal_noise_peaked_at_sideband_enhances_relaxation() {
        let g = DriveGeometry::resonant(1.0, 0.2, 0.0).unwrap();
        let noise = NoiseSpectrum::lorentzian(1.0, 0.02, 1.2, AxisStrengths::new(0.01, 0.01, 1.0)).unwrap();
        assert!(noise.eval(1.0).unwrap() < 0.25 * noise.sideband(1.0, 0.2).unwrap());
        let d = driving_modification(&g, &noise).unwrap();
        let diff = resonant_t1(&g, &noise).unwrap() - nondriven_rates(1.0, &noise).unwrap().0;
        assert!(d > 0.0);
        assert_relative_eq!(d, diff, max_relative = 1e-12);
    }

    #[test]
    fn lorentzian_at_splitting_free_t1() {
        let noise = NoiseSpectrum::lorentzian(3.0, 0.1, 2.0, AxisStrengths::new(0.2, 0.5, 0.0)).unwrap();
        let (t1, tphi) = nondriven_rates(2.0, &noise).unwrap();
        assert_relative_eq!(t1, 2.0 * 0.7 * 3.0 / (2.0 * PI), max_relative = 1e-14);
        assert_eq!(tphi, 0.0);
    }

    #[test]
    fn resonant_dephasing_flat() {
        let g = DriveGeometry::resonant(1.0, 0.1, 0.0).unwrap();
        let noise = white_unit(AxisStrengths::transverse(1.0));
        assert_eq!(resonant_tphi_phi0(&g, &noise).unwrap(), 2.5);
        let r = rotating_frame_rates(&g, &noise).unwrap();
        assert_relative_eq!(2.5, 1.75 * r.inv_t1p - 0.5 * r.inv_tphip, epsilon = 1e-14);
    }

    #[test]
    fn resonant_dephasing_goes_negative_for_x_dominated_peak() {
        let g = DriveGeometry::resonant(1.0, 0.3, 0.0).unwrap();
        let noise = NoiseSpectrum::lorentzian(1.0, 0.01, 1.0, AxisStrengths::new(1.0, 0.05, 0.0)).unwrap();
        let lab = resonant_lab_rates(&g, &noise).unwrap();
        assert!(lab.inv_tphi < 0.0 && lab.tphi_is_negative());
        assert_eq!(lab.method, RateMethod::Analytic);
    }

    #[test]
    fn resonant_lab_t2_is_twice_rotating_t1() {
        let g = DriveGeometry::resonant(1.0, 0.1, 0.0).unwrap();
        let noise = NoiseSpectrum::lorentzian(1.0, 0.5, 0.8, AxisStrengths::new(0.3, 0.6, 0.2)).unwrap();
        let lab = resonant_lab_rates(&g, &noise).unwrap();
        let rot = rotating_frame_rates(&g, &noise).unwrap();
        assert_relative_eq!(lab.inv_t2, 2.0 * rot.inv_t1p, max_relative = 1e-13);
    }
}
