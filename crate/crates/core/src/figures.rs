//! Figure presets for the EDSR spin qubit, in dimensionless units
//! (ω_Z = 1, prefactor K = 1).
//!
//! Each preset returns a long-format table: one row per (curve, abscissa)
//! pair, with the curve parameters in the leading columns. Axis ranges not
//! fixed by the physics (δ ∈ [−0.5, 0.5], φ ∈ [0, π], R = 0.01 for the
//! rotating-frame rates) are preset choices. The lab-frame presets take the
//! drive strength produced by a fixed GaAs-like control field, see
//! [`field_drive_strength`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use serde::Serialize;

use crate::constants::{ELEMENTARY_CHARGE, HBAR};
use crate::edsr::{
    drive_strength_estimate, edsr_resonant_t1_split, edsr_resonant_tphi, edsr_rotating_rates, environment_rescaling, map_edsr, EdsrParams,
};
use crate::error::{Error, Result};
use crate::frames::RotatingRates;
use crate::labframe::{lab_rates, solve_t1, EnvelopeConfig, EnvelopeMode, LabRates};

pub const PRESETS: [&str; 7] = ["fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"];

/// Drive strength for the rotating-frame preset.
pub const PRESET_RABI: f64 = 0.01;
/// Dresselhaus strength of the control-field presets, m/s.
pub const PRESET_BETA: f64 = 1000.0;
/// Confinement energy of the control-field presets, eV.
pub const PRESET_CONFINEMENT_EV: f64 = 1e-3;
/// Control field |E_x| of the control-field presets, V/m.
pub const PRESET_FIELD: f64 = 4000.0;
pub const DETUNING_SPAN: f64 = 0.5;
pub const DETUNING_POINTS: usize = 401;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Figure {
    pub name: &'static str,
    pub description: &'static str,
    pub units: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Figure {
    fn new(name: &'static str, description: &'static str, columns: &[&'static str]) -> Self {
        Self { name, description, units: "dimensionless", columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let k = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[k]).collect())
    }

    /// Rows whose leading parameter columns equal `key`.
    pub fn series(&self, key: &[f64]) -> Vec<&[f64]> {
        self.rows.iter().filter(|r| r[..key.len()] == *key).map(|r| r.as_slice()).collect()
    }
}

pub fn linspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![start];
    }
    let step = (stop - start) / (n - 1) as f64;
    (0..n).map(|k| if k == n - 1 { stop } else { start + step * k as f64 }).collect()
}

pub fn logspace(start: f64, stop: f64, n: usize) -> Vec<f64> {
    let (a, b) = (start.log10(), stop.log10());
    linspace(a, b, n).into_iter().map(|e| 10f64.powf(e)).collect()
}

fn detuning_grid() -> Vec<f64> {
    linspace(-DETUNING_SPAN, DETUNING_SPAN, DETUNING_POINTS)
}

/// `R = Ω/ω_Z` produced by the preset control field at Rashba ratio `r`;
/// about 5.3e-3 at `r = 0`, growing as `1 + r`.
pub fn field_drive_strength(r: f64) -> Result<f64> {
    let omega_d = PRESET_CONFINEMENT_EV * ELEMENTARY_CHARGE / HBAR;
    let p = EdsrParams {
        beta: PRESET_BETA,
        omega_d,
        e_field: Some(PRESET_FIELD),
        ..EdsrParams::dimensionless(r, 0.0, PRESET_RABI, 0.0)
    };
    drive_strength_estimate(&p)
}

fn point(fig: &str, pairs: &[(&str, f64)]) -> String {
    let body: Vec<String> = pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{fig} {}", body.join(", "))
}

/// Rotating-frame rates vs detuning.
pub fn fig1() -> Result<Figure> {
    let mut fig =
        Figure::new("fig1", "rotating-frame rates vs detuning", &["r", "phi", "delta", "inv_t1p", "inv_tphip", "inv_t2p"]);
    let curves = [(0.0, 0.0), (0.9, 0.0), (0.9, FRAC_PI_4), (0.9, FRAC_PI_2)];
    for (r, phi) in curves {
        for d in detuning_grid() {
            let rates = edsr_rotating_rates(&EdsrParams::dimensionless(r, phi, PRESET_RABI, d))
                .map_err(|e| e.at(point("fig1", &[("r", r), ("phi", phi), ("delta", d)])))?;
            let rr = RotatingRates::new(rates.inv_t1p, rates.inv_tphip);
            fig.rows.push(vec![r, phi, d, rr.inv_t1p, rr.inv_tphip, rr.inv_t2p]);
        }
    }
    Ok(fig)
}

/// Resonant relaxation normalized to the free qubit vs drive strength.
pub fn fig2() -> Result<Figure> {
    let mut fig = Figure::new("fig2", "resonant 1/T1 over free-qubit 1/T1 vs R", &["r", "phi", "R", "ratio"]);
    for r in [0.05, 0.8] {
        for phi in [0.0, FRAC_PI_4, FRAC_PI_2] {
            for rr in logspace(1e-3, 1e-1, 101) {
                let s = edsr_resonant_t1_split(&EdsrParams::dimensionless(r, phi, rr, 0.0))
                    .map_err(|e| e.at(point("fig2", &[("r", r), ("phi", phi), ("R", rr)])))?;
                fig.rows.push(vec![r, phi, rr, s.ratio]);
            }
        }
    }
    Ok(fig)
}

/// Resonant relaxation and its sideband part vs drive phase.
pub fn fig3() -> Result<Figure> {
    let mut fig = Figure::new("fig3", "resonant 1/T1 and sideband part vs phi", &["r", "phi", "inv_t1", "sideband"]);
    for r in [0.0, 0.5, 1.0, 2.0] {
        let rr = field_drive_strength(r)?;
        for phi in linspace(0.0, PI, 181) {
            let s = edsr_resonant_t1_split(&EdsrParams::dimensionless(r, phi, rr, 0.0))
                .map_err(|e| e.at(point("fig3", &[("r", r), ("phi", phi)])))?;
            fig.rows.push(vec![r, phi, s.total, s.sideband]);
        }
    }
    Ok(fig)
}

/// Rescaling of the environment spectrum vs ω/Ω.
pub fn fig4() -> Result<Figure> {
    let mut fig = Figure::new("fig4", "S'_E/S_E vs omega/Omega", &["phi", "r", "omega_over_rabi", "ratio"]);
    for phi in [0.0, FRAC_PI_2] {
        for r in [0.0, 0.5, 1.0, 2.0] {
            for w in logspace(1.0, 1e3, 301) {
                let v = environment_rescaling(w, 1.0, r, phi)
                    .map_err(|e| e.at(point("fig4", &[("phi", phi), ("r", r), ("omega_over_rabi", w)])))?;
                fig.rows.push(vec![phi, r, w, v]);
            }
        }
    }
    Ok(fig)
}

/// Resonant pure dephasing at φ = 0 vs drive strength.
pub fn fig5() -> Result<Figure> {
    let mut fig = Figure::new("fig5", "resonant 1/Tphi at phi = 0 vs R", &["r", "R", "inv_tphi"]);
    for r in [0.0, 0.25, 0.5, 0.75, 1.0] {
        for rr in logspace(1e-3, 1e-1, 101) {
            let v = edsr_resonant_tphi(&EdsrParams::dimensionless(r, 0.0, rr, 0.0))
                .map_err(|e| e.at(point("fig5", &[("r", r), ("R", rr)])))?;
            fig.rows.push(vec![r, rr, v]);
        }
    }
    Ok(fig)
}

fn edsr_envelope(p: &EdsrParams) -> Result<EnvelopeConfig> {
    let rates = edsr_rotating_rates(p)?;
    let geom = map_edsr(p)?.geom;
    EnvelopeConfig::new(geom, RotatingRates::new(rates.inv_t1p, rates.inv_tphip), 0.0)
}

/// Root-solved lab rates for one EDSR operating point, using the
/// closed-form rotating rates and the fixed-asymptote envelopes.
pub fn edsr_lab_rates(p: &EdsrParams) -> Result<LabRates> {
    lab_rates(&edsr_envelope(p)?, EnvelopeMode::FixedAsymptote)
}

/// Off-resonance lab relaxation vs detuning, with the ratio to the free
/// qubit `4(1 + r²)`.
pub fn fig6() -> Result<Figure> {
    let mut fig = Figure::new("fig6", "lab 1/T1 vs detuning and ratio to free qubit", &["r", "phi", "delta", "inv_t1", "ratio"]);
    let curves = [(0.0, 0.0), (0.5, 0.0), (0.9, 0.0), (0.9, FRAC_PI_4), (0.9, FRAC_PI_2)];
    for (r, phi) in curves {
        let rr = field_drive_strength(r)?;
        for d in detuning_grid() {
            let v = edsr_envelope(&EdsrParams::dimensionless(r, phi, rr, d))
                .and_then(|cfg| solve_t1(&cfg, EnvelopeMode::FixedAsymptote))
                .map_err(|e| e.at(point("fig6", &[("r", r), ("phi", phi), ("delta", d)])))?;
            fig.rows.push(vec![r, phi, d, v, v / (4.0 * (1.0 + r * r))]);
        }
    }
    Ok(fig)
}

/// Off-resonance lab pure dephasing at φ = 0 vs detuning.
pub fn fig7() -> Result<Figure> {
    let mut fig = Figure::new("fig7", "lab 1/Tphi at phi = 0 vs detuning", &["r", "delta", "inv_tphi"]);
    for r in [0.0, 0.5, 0.9] {
        let rr = field_drive_strength(r)?;
        for d in detuning_grid() {
            let lab = edsr_lab_rates(&EdsrParams::dimensionless(r, 0.0, rr, d))
                .map_err(|e| e.at(point("fig7", &[("r", r), ("delta", d)])))?;
            fig.rows.push(vec![r, d, lab.inv_tphi]);
        }
    }
    Ok(fig)
}

/// Run a preset by name.
pub fn figure(name: &str) -> Result<Figure> {
    match name {
        "fig1" => fig1(),
        "fig2" => fig2(),
        "fig3" => fig3(),
        "fig4" => fig4(),
        "fig5" => fig5(),
        "fig6" => fig6(),
        "fig7" => fig7(),
        other => Err(Error::Input(format!("unknown preset {other:?}; expected one of {}", PRESETS.join(", ")))),
    }
}
