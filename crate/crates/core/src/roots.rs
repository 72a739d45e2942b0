//! First-crossing root finder for decaying envelopes.

use crate::error::{Error, Result};

/// Geometric scan density.
pub const POINTS_PER_DECADE: usize = 100;

/// Bisection stops once the bracket is narrower than this times its midpoint.
pub const RELATIVE_TOLERANCE: f64 = 1e-9;

/// Located crossing time and the final bisection bracket.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Crossing {
    pub time: f64,
    pub lower: f64,
    pub upper: f64,
}

impl Crossing {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Smallest `t > 0` at which `f(t)` falls to `level`, given `f(0) > level`.
///
/// `t = 0` and a geometric grid over `[t_min, t_max]` are scanned for the
/// first sample at or below `level`; the bracketing interval is then
/// bisected. Crossings narrower than one grid cell can be missed.
pub fn first_crossing(f: impl Fn(f64) -> f64, level: f64, t_min: f64, t_max: f64) -> Result<Crossing> {
    if !(t_min > 0.0 && t_max > t_min && t_max.is_finite()) {
        return Err(Error::Parameter(format!("invalid scan window [{t_min}, {t_max}]")));
    }
    let above = |t: f64| f(t) > level;
    if !above(0.0) {
        return Err(Error::Parameter("envelope starts at or below the target level".into()));
    }

    let decades = (t_max / t_min).log10();
    let n = ((decades * POINTS_PER_DECADE as f64).ceil() as usize).max(2);
    let ratio = (t_max / t_min).powf(1.0 / n as f64);

    let mut lo = 0.0;
    let mut t = t_min;
    for i in 0..=n {
        if i == n {
            t = t_max;
        }
        if !above(t) {
            return Ok(bisect(&above, lo, t));
        }
        lo = t;
        t *= ratio;
    }
    Err(Error::NoCrossing { horizon: t_max })
}

fn bisect(above: &impl Fn(f64) -> bool, mut lo: f64, mut hi: f64) -> Crossing {
    while hi - lo > RELATIVE_TOLERANCE * 0.5 * (lo + hi) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if above(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Crossing { time: 0.5 * (lo + hi), lower: lo, upper: hi }
}
