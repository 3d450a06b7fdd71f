use std::f64::consts::PI;
use std::io::Write;

use serde::Serialize;

use super::lattice::{trap_frequency, LatticeConfig};
use super::trajectory::TrajectoryProfile;
use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// dt must stay below this fraction of the trap oscillation period.
pub const MAX_STEP_FRACTION: f64 = 0.05;

/// Position of the σ⁻ potential minimum being tracked over time.
pub trait LatticeMotion {
    fn well_position(&self, t: f64) -> f64;
    fn duration(&self) -> f64;
}

impl LatticeMotion for TrajectoryProfile {
    fn well_position(&self, t: f64) -> f64 {
        self.separation_at(t)
    }

    fn duration(&self) -> f64 {
        self.tau()
    }
}

/// A lattice held at rest for `duration` seconds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticLattice {
    pub duration: f64,
}

impl LatticeMotion for StaticLattice {
    fn well_position(&self, _t: f64) -> f64 {
        0.0
    }

    fn duration(&self) -> f64 {
        self.duration
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EomResult {
    pub times: Vec<f64>,
    pub atom_positions: Vec<f64>,
    pub atom_velocities: Vec<f64>,
    /// Tracked potential minimum, i.e. d(t) for a moving lattice.
    pub lattice_positions: Vec<f64>,
    /// Largest |x_atom − x_lattice| seen.
    pub max_lag: f64,
    /// The atom stayed within λ/4 (half a well spacing) of the minimum throughout.
    pub follows: bool,
}

#[derive(Serialize)]
struct EomRow {
    t: f64,
    x_atom: f64,
    x_lattice: f64,
    separation: f64,
}

impl EomResult {
    /// CSV with header `t,x_atom,x_lattice,separation`, where x_lattice is the
    /// lattice offset x_latt = −d(t) and separation is d(t).
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        for i in 0..self.times.len() {
            writer.serialize(EomRow {
                t: self.times[i],
                x_atom: self.atom_positions[i],
                x_lattice: 0.0 - self.lattice_positions[i],
                separation: self.lattice_positions[i],
            })?;
        }
        writer.flush().map_err(|e| Error::Csv(e.to_string()))
    }
}

/// RK4 integration of ẍ = −(V⁰_− k/m) sin(2k x + 2k x_latt(t)) with
/// x_latt = −d(t), so that the well minimum sits at +d(t).
///
/// Only the σ⁻ term of V_s is kept; the π lattice is shallow in the transport
/// regime V⁰_π ≪ V⁰_−.
pub fn simulate_eom<M: LatticeMotion>(
    config: &LatticeConfig,
    motion: &M,
    x0: f64,
    v0: f64,
    dt: f64,
) -> Result<EomResult> {
    ensure_positive("dt", dt)?;
    ensure_non_negative("duration", motion.duration())?;
    let omega = trap_frequency(config);
    if omega > 0.0 {
        let max_dt = MAX_STEP_FRACTION * 2.0 * PI / omega;
        if dt >= max_dt {
            return Err(Error::TimestepTooLarge { dt, max_dt });
        }
    }
    let species = config.species();
    let k = species.k();
    let strength = config.v0_minus() * k / species.mass();
    let accel = |t: f64, x: f64| -strength * (2.0 * k * (x - motion.well_position(t))).sin();

    let duration = motion.duration();
    let steps = (duration / dt).ceil().max(1.0) as usize;
    let h = duration / steps as f64;
    let mut times = Vec::with_capacity(steps + 1);
    let mut xs = Vec::with_capacity(steps + 1);
    let mut vs = Vec::with_capacity(steps + 1);
    let mut wells = Vec::with_capacity(steps + 1);
    let (mut x, mut v) = (x0, v0);
    for step in 0..=steps {
        let t = step as f64 * h;
        times.push(t);
        xs.push(x);
        vs.push(v);
        wells.push(motion.well_position(t));
        if step == steps {
            break;
        }
        let (k1x, k1v) = (v, accel(t, x));
        let (k2x, k2v) = (v + 0.5 * h * k1v, accel(t + 0.5 * h, x + 0.5 * h * k1x));
        let (k3x, k3v) = (v + 0.5 * h * k2v, accel(t + 0.5 * h, x + 0.5 * h * k2x));
        let (k4x, k4v) = (v + h * k3v, accel(t + h, x + h * k3x));
        x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    let max_lag = xs.iter().zip(&wells).map(|(x, w)| (x - w).abs()).fold(0.0, f64::max);
    let follows = max_lag < species.wavelength() / 4.0;
    Ok(EomResult { times, atom_positions: xs, atom_velocities: vs, lattice_positions: wells, max_lag, follows })
}
