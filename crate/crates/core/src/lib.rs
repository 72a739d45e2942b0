//! Decoherence of a driven qubit under classical noise.
//!
//! * [`spectra`]: spectral-density models and the sideband combinator.
//! * [`frames`]: drive geometry and rotating-frame Bloch-Redfield rates.
//! * [`labframe`]: lab-frame envelopes, root-solved T1/T2 and resonant formulas.
//! * [`edsr`]: electrically driven spin qubits with piezoelectric phonon noise.
//! * [`oracle`]: Monte-Carlo trajectory simulation used to check the above.
//! * [`figures`]: data behind the standard parameter sweeps.

pub mod constants;
pub mod edsr;
pub mod error;
pub mod figures;
pub mod frames;
pub mod labframe;
pub mod oracle;
pub mod roots;
pub mod spectra;

pub use edsr::{EdsrParams, EdsrRates};
pub use error::{Error, Result};
pub use frames::{DriveGeometry, RotatingRates, SidebandArgument};
pub use labframe::{EnvelopeConfig, EnvelopeMode, LabRates, RateMethod};
pub use oracle::{DecayEstimate, FitKind, Frame, InitialState, OracleConfig};
pub use spectra::{AxisStrengths, Axis, NoiseSpectrum, SpectralModel};
