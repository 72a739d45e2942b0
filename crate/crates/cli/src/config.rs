//! JSON run configuration.

use std::path::PathBuf;

use dqe_core::edsr::EdsrParams;
use dqe_core::oracle::{FitKind, Frame, InitialState};
use dqe_core::{DriveGeometry, EnvelopeMode, NoiseSpectrum, SidebandArgument};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Rates,
    Solve,
    Edsr,
    Oracle,
    Figure,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Rates => "rates",
            Mode::Solve => "solve",
            Mode::Edsr => "edsr",
            Mode::Oracle => "oracle",
            Mode::Figure => "figure",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub axis: String,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
    #[serde(default)]
    pub scale: Scale,
}

impl Sweep {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.count < 1 {
            return Err(CliError::Usage("sweep count must be at least 1".into()));
        }
        if !(self.start.is_finite() && self.stop.is_finite()) {
            return Err(CliError::Usage("sweep endpoints must be finite".into()));
        }
        if self.scale == Scale::Log && !(self.start > 0.0 && self.stop > 0.0) {
            return Err(CliError::Usage("log sweeps need positive endpoints".into()));
        }
        Ok(())
    }

    pub fn grid(&self) -> Vec<f64> {
        match self.scale {
            Scale::Linear => dqe_core::figures::linspace(self.start, self.stop, self.count),
            Scale::Log => dqe_core::figures::logspace(self.start, self.stop, self.count),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Output {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<PathBuf>,
    #[serde(default)]
    pub format: Format,
}

/// Lab-frame envelope options for `solve` and `edsr` modes.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvelopeOptions {
    #[serde(default)]
    pub mode: EnvelopeMode,
    #[serde(default)]
    pub sigma_inf: f64,
    #[serde(default)]
    pub sideband: SidebandArgument,
}

/// Oracle run parameters; geometry and noise come from `drive` and `noise`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSettings {
    pub dt: f64,
    pub t_max: f64,
    pub n_traj: usize,
    #[serde(default)]
    pub initial_state: InitialState,
    #[serde(default)]
    pub frame: Frame,
    #[serde(default)]
    pub fit: FitKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record_every: Option<usize>,
    #[serde(default = "default_bootstrap")]
    pub bootstrap: usize,
}

fn default_bootstrap() -> usize {
    200
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Mode,
    /// Free-form remark, e.g. the provenance of material constants.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub drive: Option<DriveGeometry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise: Option<NoiseSpectrum>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edsr: Option<EdsrParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSettings>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub envelope: Option<EnvelopeOptions>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Sweep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default)]
    pub output: Output,
    #[serde(default)]
    pub seed: u64,
}

impl RunConfig {
    /// Config with only a mode set.
    pub fn bare(mode: Mode) -> Self {
        Self {
            mode,
            note: None,
            drive: None,
            noise: None,
            edsr: None,
            oracle: None,
            envelope: None,
            sweep: None,
            preset: None,
            output: Output::default(),
            seed: 0,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Git blob hash of the pretty-printed config with the output path
    /// cleared, so the same computation hashes the same wherever it is
    /// written.
    pub fn content_hash(&self) -> String {
        use sha1::{Digest, Sha1};
        let mut c = self.clone();
        c.output.path = None;
        let body = c.to_json();
        let mut h = Sha1::new();
        h.update(format!("blob {}\0", body.len()).as_bytes());
        h.update(body.as_bytes());
        format!("{:x}", h.finalize())
    }

    fn need<'a, T>(&self, field: &'a Option<T>, key: &str) -> Result<&'a T, CliError> {
        field
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{} mode needs a \"{key}\" section", self.mode.name())))
    }

    pub fn drive(&self) -> Result<&DriveGeometry, CliError> {
        self.need(&self.drive, "drive")
    }

    pub fn noise(&self) -> Result<&NoiseSpectrum, CliError> {
        self.need(&self.noise, "noise")
    }

    pub fn edsr(&self) -> Result<&EdsrParams, CliError> {
        self.need(&self.edsr, "edsr")
    }

    pub fn oracle(&self) -> Result<&OracleSettings, CliError> {
        self.need(&self.oracle, "oracle")
    }

    /// Structural checks that do not evaluate any physics.
    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(s) = &self.sweep {
            s.validate()?;
            if matches!(self.mode, Mode::Oracle | Mode::Figure) {
                return Err(CliError::Usage(format!("{} mode does not take a sweep", self.mode.name())));
            }
        }
        match self.mode {
            Mode::Rates | Mode::Solve => {
                self.drive()?;
                self.noise()?;
            }
            Mode::Edsr => {
                self.edsr()?;
            }
            Mode::Oracle => {
                self.drive()?;
                self.noise()?;
                self.oracle()?;
            }
            Mode::Figure => {
                let name = self
                    .preset
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("figure mode needs a preset (fig1 … fig7)".into()))?;
                if !dqe_core::figures::PRESETS.contains(&name) {
                    return Err(CliError::Usage(format!(
                        "unknown preset {name:?}; expected one of {}",
                        dqe_core::figures::PRESETS.join(", ")
                    )));
                }
            }
        }
        Ok(())
    }
}
