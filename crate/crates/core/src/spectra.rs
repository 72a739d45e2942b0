//! Classical noise spectral densities.
//!
//! A [`NoiseSpectrum`] couples one symmetric spectral shape `S(ω)` to three
//! per-axis strengths `W_x, W_y, W_z`, so that axis `j` sees
//! `⟨n_j(t₁) n_j(t₂)⟩ = W_j S(t₂ - t₁)` with
//! `S(t) = (1/2π) ∫ dω S(ω) e^{-iωt}`.
//!
//! All shapes are even in ω: they are evaluated at `|ω|`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, VACUUM_PERMITTIVITY};
use crate::error::{param, Error, Result};

/// Default integration cutoff, in units of the largest characteristic
/// frequency of the model.
pub const CUTOFF_MULTIPLE: f64 = 50.0;

/// Trapezoid nodes used by [`NoiseSpectrum::autocorrelation`].
pub const AUTOCORRELATION_NODES: usize = 10_000;

/// Lorentzian line `S(ω) = (1/2π) Γγ² / (γ² + (|ω| - ω_c)²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LorentzianParams {
    /// Overall strength Γ; the peak value is Γ/2π.
    pub strength: f64,
    /// Half width γ, the inverse memory time.
    pub linewidth: f64,
    /// Peak frequency ω_c.
    pub center: f64,
}

/// Piezoelectric phonon noise, `S(ω) = ħ e₁₄² |ω|⁵ / (15π² ρ c⁵)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhononParams {
    /// Replace the material prefactor by 1.
    #[serde(default = "default_true")]
    pub dimensionless: bool,
    /// Piezoelectric tensor component e₁₄, C/m².
    #[serde(default)]
    pub e14: f64,
    /// Mass density ρ, kg/m³.
    #[serde(default)]
    pub density: f64,
    /// Sound speed c, m/s.
    #[serde(default)]
    pub sound_speed: f64,
    /// Relative permittivity κ. When set, `e₁₄` is replaced by the field
    /// constant `e₁₄/(κε₀)` so that the prefactor is in SI rate units;
    /// when absent the prefactor is evaluated as written.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relative_permittivity: Option<f64>,
}

fn default_true() -> bool {
    true
}

impl PhononParams {
    pub fn dimensionless() -> Self {
        Self { dimensionless: true, e14: 0.0, density: 0.0, sound_speed: 0.0, relative_permittivity: None }
    }

    pub fn physical(e14: f64, density: f64, sound_speed: f64) -> Self {
        Self { dimensionless: false, e14, density, sound_speed, relative_permittivity: None }
    }

    /// Coefficient multiplying `|ω|⁵`.
    pub fn prefactor(&self) -> Result<f64> {
        if self.dimensionless {
            return Ok(1.0);
        }
        if !(self.density > 0.0 && self.sound_speed > 0.0) {
            return Err(param("phonon density and sound speed must be positive"));
        }
        let e = match self.relative_permittivity {
            None => self.e14,
            Some(k) if k > 0.0 => self.e14 / (k * VACUUM_PERMITTIVITY),
            Some(_) => return Err(param("relative permittivity must be positive")),
        };
        Ok(HBAR * e * e / (15.0 * PI * PI * self.density * self.sound_speed.powi(5)))
    }

    pub fn with_relative_permittivity(self, kappa: f64) -> Self {
        Self { relative_permittivity: Some(kappa), ..self }
    }
}

/// Piecewise-linear spectrum on a non-negative, strictly increasing grid.
/// Values outside the grid are clamped to the end points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TabulatedRaw", into = "TabulatedRaw")]
pub struct TabulatedSpectrum {
    frequencies: Vec<f64>,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct TabulatedRaw {
    frequencies: Vec<f64>,
    values: Vec<f64>,
}

impl TryFrom<TabulatedRaw> for TabulatedSpectrum {
    type Error = Error;

    fn try_from(raw: TabulatedRaw) -> Result<Self> {
        TabulatedSpectrum::new(raw.frequencies, raw.values)
    }
}

impl From<TabulatedSpectrum> for TabulatedRaw {
    fn from(t: TabulatedSpectrum) -> Self {
        TabulatedRaw { frequencies: t.frequencies, values: t.values }
    }
}

impl TabulatedSpectrum {
    pub fn new(frequencies: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if frequencies.is_empty() {
            return Err(Error::Input("tabulated spectrum has an empty grid".into()));
        }
        if frequencies.len() != values.len() {
            return Err(Error::Input(format!(
                "tabulated spectrum has {} frequencies but {} values",
                frequencies.len(),
                values.len()
            )));
        }
        if frequencies[0] < 0.0 || frequencies.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Input(
                "tabulated frequencies must be non-negative and strictly increasing".into(),
            ));
        }
        if values.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(Error::Input("tabulated values must be finite and non-negative".into()));
        }
        Ok(Self { frequencies, values })
    }

    /// Sample `f` on `frequencies`.
    pub fn sample(frequencies: Vec<f64>, f: impl Fn(f64) -> Result<f64>) -> Result<Self> {
        let values = frequencies.iter().map(|&w| f(w)).collect::<Result<Vec<_>>>()?;
        Self::new(frequencies, values)
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn eval(&self, w: f64) -> f64 {
        let f = &self.frequencies;
        let v = &self.values;
        let last = f.len() - 1;
        if w <= f[0] {
            return v[0];
        }
        if w >= f[last] {
            return v[last];
        }
        // first index with f[i] > w; i >= 1 here
        let i = f.partition_point(|&x| x <= w);
        let s = (w - f[i - 1]) / (f[i] - f[i - 1]);
        v[i - 1] + s * (v[i] - v[i - 1])
    }
}

/// Shape of the spectral density, without the per-axis strengths.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpectralModel {
    White {
        level: f64,
    },
    Lorentzian(LorentzianParams),
    PhononPiezo(PhononParams),
    /// `A |ω|^p`. For `p < 0` an optional infrared cutoff flattens the
    /// spectrum below `ω_ir`; without one, `S(0)` is reported as divergent.
    PowerLaw {
        amplitude: f64,
        exponent: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        infrared_cutoff: Option<f64>,
    },
    Tabulated(TabulatedSpectrum),
}

impl SpectralModel {
    pub fn validate(&self) -> Result<()> {
        match self {
            SpectralModel::White { level } => {
                if !(*level >= 0.0) {
                    return Err(param("white-noise level must be non-negative"));
                }
            }
            SpectralModel::Lorentzian(p) => {
                if !(p.linewidth > 0.0) {
                    return Err(param("Lorentzian linewidth must be positive"));
                }
                if !(p.strength >= 0.0) {
                    return Err(param("Lorentzian strength must be non-negative"));
                }
            }
            SpectralModel::PhononPiezo(p) => {
                p.prefactor()?;
            }
            SpectralModel::PowerLaw { amplitude, exponent, infrared_cutoff } => {
                if !(*amplitude >= 0.0) || !exponent.is_finite() {
                    return Err(param("power-law amplitude must be non-negative, exponent finite"));
                }
                if let Some(ir) = infrared_cutoff {
                    if !(*ir > 0.0) {
                        return Err(param("infrared cutoff must be positive"));
                    }
                }
            }
            SpectralModel::Tabulated(_) => {}
        }
        Ok(())
    }

    /// `S(|ω|)`.
    pub fn eval(&self, omega: f64) -> Result<f64> {
        let w = omega.abs();
        match self {
            SpectralModel::White { level } => Ok(*level),
            SpectralModel::Lorentzian(p) => {
                if !(p.linewidth > 0.0) {
                    return Err(param("Lorentzian linewidth must be positive"));
                }
                let g2 = p.linewidth * p.linewidth;
                let d = w - p.center;
                Ok(p.strength * g2 / (g2 + d * d) / (2.0 * PI))
            }
            SpectralModel::PhononPiezo(p) => Ok(p.prefactor()? * w.powi(5)),
            SpectralModel::PowerLaw { amplitude, exponent, infrared_cutoff } => {
                let w = match infrared_cutoff {
                    Some(ir) => w.max(*ir),
                    None => w,
                };
                if w == 0.0 && *exponent < 0.0 {
                    return Err(Error::Divergent { frequency: omega });
                }
                if w == 0.0 && *exponent == 0.0 {
                    return Ok(*amplitude);
                }
                Ok(amplitude * w.powf(*exponent))
            }
            SpectralModel::Tabulated(t) => Ok(t.eval(w)),
        }
    }

    /// Largest intrinsic frequency scale, if the shape has one.
    pub fn characteristic_frequency(&self) -> Option<f64> {
        match self {
            SpectralModel::Lorentzian(p) => Some(p.linewidth.max(p.center.abs())),
            SpectralModel::Tabulated(t) => t.frequencies.last().copied(),
            _ => None,
        }
    }
}

/// Noise strengths `W_x, W_y, W_z` (non-negative).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct AxisStrengths {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl AxisStrengths {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn isotropic(w: f64) -> Self {
        Self { x: w, y: w, z: w }
    }

    pub fn transverse(w: f64) -> Self {
        Self { x: w, y: w, z: 0.0 }
    }

    pub fn get(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }
}

/// Lab-frame noise axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// Autocorrelation `S(τ)` of a spectral shape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Correlation {
    Finite(f64),
    /// Unbounded white noise: `S(τ) = weight · δ(τ)`.
    DeltaCorrelated { weight: f64 },
}

impl Correlation {
    pub fn finite(self) -> Option<f64> {
        match self {
            Correlation::Finite(v) => Some(v),
            Correlation::DeltaCorrelated { .. } => None,
        }
    }
}

/// A spectral shape with per-axis strengths and an optional hard band limit
/// (`S(ω) = 0` for `|ω|` above it).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NoiseSpectrum {
    pub model: SpectralModel,
    pub strengths: AxisStrengths,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub band_limit: Option<f64>,
}

impl NoiseSpectrum {
    pub fn new(model: SpectralModel, strengths: AxisStrengths) -> Result<Self> {
        let s = Self { model, strengths, band_limit: None };
        s.validate()?;
        Ok(s)
    }

    pub fn white(level: f64, strengths: AxisStrengths) -> Result<Self> {
        Self::new(SpectralModel::White { level }, strengths)
    }

    pub fn lorentzian(strength: f64, linewidth: f64, center: f64, strengths: AxisStrengths) -> Result<Self> {
        Self::new(SpectralModel::Lorentzian(LorentzianParams { strength, linewidth, center }), strengths)
    }

    pub fn phonon(params: PhononParams, strengths: AxisStrengths) -> Result<Self> {
        Self::new(SpectralModel::PhononPiezo(params), strengths)
    }

    pub fn with_band_limit(mut self, cutoff: f64) -> Result<Self> {
        self.band_limit = Some(cutoff);
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        self.model.validate()?;
        let w = self.strengths;
        if !(w.x >= 0.0 && w.y >= 0.0 && w.z >= 0.0) {
            return Err(param("noise strengths must be non-negative"));
        }
        if let Some(c) = self.band_limit {
            if !(c > 0.0) {
                return Err(param("band limit must be positive"));
            }
        }
        Ok(())
    }

    /// `S(ω)`, even in ω and zero beyond the band limit.
    pub fn eval(&self, omega: f64) -> Result<f64> {
        if let Some(c) = self.band_limit {
            if omega.abs() > c {
                return Ok(0.0);
            }
        }
        self.model.eval(omega)
    }

    /// Sideband combination `S(ν + ω) + S(ν - ω)`.
    pub fn sideband(&self, nu: f64, omega: f64) -> Result<f64> {
        Ok(self.eval(nu + omega)? + self.eval(nu - omega)?)
    }

    /// Upper integration frequency for correlation functions and noise
    /// synthesis: the band limit if set, else a multiple of the model's
    /// characteristic frequency (the grid end for tabulated shapes).
    pub fn effective_cutoff(&self) -> Option<f64> {
        if let Some(c) = self.band_limit {
            return Some(c);
        }
        match &self.model {
            SpectralModel::Tabulated(t) => t.frequencies.last().copied(),
            m => m.characteristic_frequency().map(|f| CUTOFF_MULTIPLE * f),
        }
    }

    /// `S(τ) = (1/π) ∫₀^{ω_max} S(ω) cos(ωτ) dω` by the trapezoid rule.
    pub fn autocorrelation(&self, tau: f64) -> Result<Correlation> {
        self.autocorrelation_with(tau, AUTOCORRELATION_NODES)
    }

    pub fn autocorrelation_with(&self, tau: f64, nodes: usize) -> Result<Correlation> {
        let cutoff = match self.effective_cutoff() {
            Some(c) => c,
            None => {
                return match self.model {
                    SpectralModel::White { level } => Ok(Correlation::DeltaCorrelated { weight: level }),
                    _ => Err(param("spectrum is not integrable without a band limit")),
                }
            }
        };
        let n = nodes.max(2);
        let h = cutoff / (n - 1) as f64;
        let mut acc = 0.0;
        for i in 0..n {
            let w = i as f64 * h;
            let weight = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
            acc += weight * self.model.eval(w)? * (w * tau).cos();
        }
        Ok(Correlation::Finite(acc * h / PI))
    }

    /// Root-mean-square amplitude of the noise on `axis`, `sqrt(W_j S(τ=0))`.
    pub fn rms(&self, axis: Axis) -> Result<f64> {
        let w = self.strengths.get(axis);
        if w == 0.0 {
            return Ok(0.0);
        }
        match self.autocorrelation(0.0)? {
            Correlation::Finite(c0) => Ok((w * c0).sqrt()),
            Correlation::DeltaCorrelated { .. } => Ok(f64::INFINITY),
        }
    }
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn models() -> impl Strategy<Value = SpectralModel> {
        prop_oneof![
            (0.0..5.0f64).prop_map(|level| SpectralModel::White { level }),
            (0.1..10.0f64, 0.05..3.0f64, -5.0..5.0f64).prop_map(|(s, g, c)| {
                SpectralModel::Lorentzian(LorentzianParams { strength: s, linewidth: g, center: c })
            }),
            Just(SpectralModel::PhononPiezo(PhononParams::dimensionless())),
            (0.1..3.0f64, -2.0..3.0f64).prop_map(|(a, p)| SpectralModel::PowerLaw {
                amplitude: a,
                exponent: p,
                infrared_cutoff: Some(0.01),
            }),
        ]
    }

    proptest! {
        #[test]
        fn even_and_non_negative(m in models(), w in -20.0..20.0f64) {
            let a = m.eval(w).unwrap();
            let b = m.eval(-w).unwrap();
            prop_assert_eq!(a, b);
            prop_assert!(a >= 0.0);
        }

        #[test]
        fn sideband_is_even_in_offset(m in models(), nu in 0.0..10.0f64, w in 0.0..10.0f64) {
            let s = NoiseSpectrum { model: m, strengths: AxisStrengths::isotropic(1.0), band_limit: None };
            prop_assert_eq!(s.sideband(nu, w).unwrap(), s.sideband(nu, -w).unwrap());
        }

        #[test]
        fn white_sideband_is_twice_level(level in 0.0..5.0f64, nu in -10.0..10.0f64, w in -10.0..10.0f64) {
            let s = NoiseSpectrum::white(level, AxisStrengths::isotropic(1.0)).unwrap();
            prop_assert_eq!(s.sideband(nu, w).unwrap(), 2.0 * level);
        }
    }
}
