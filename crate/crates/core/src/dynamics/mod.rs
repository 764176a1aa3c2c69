//! Piecewise-linear motions of labeled points in the rational plane.
//!
//! Text format:
//!
//! ```text
//! n=3
//! 0:0,0 1:0,0
//! 0:2,0 1:2,0
//! 0:1,1 1/2:1,0 1:1,-1
//! ```
//!
//! One line per particle, each a list of `t:x,y` breakpoints with rational
//! components (`p` or `p/q`). The compact form `t:a/b` is also accepted and
//! read as the point `(a, b)`.

mod detector;
mod perturb;
mod scan;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Poly, Q};

pub use detector::Detector;
pub use perturb::perturb;
pub use scan::{
    analyze, format_event_report, isolate_event_times, pleasantness_check, type_of, Analysis,
    CriticalEvent, Pleasantness, Violation,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Q,
    pub y: Q,
}

impl RationalPoint {
    pub fn new(x: Q, y: Q) -> Self {
        Self { x, y }
    }

    pub fn lerp(&self, other: &RationalPoint, s: &Q) -> RationalPoint {
        RationalPoint {
            x: &self.x + (&other.x - &self.x) * s,
            y: &self.y + (&other.y - &self.y) * s,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (q_to_f64(&self.x), q_to_f64(&self.y))
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn q_to_f64(v: &Q) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

/// Breakpoints `(time, position)` with strictly increasing times from 0 to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParticleTrajectory {
    breakpoints: Vec<(Q, RationalPoint)>,
}

impl ParticleTrajectory {
    pub fn new(breakpoints: Vec<(Q, RationalPoint)>) -> Result<Self> {
        let (first, last) = match (breakpoints.first(), breakpoints.last()) {
            (Some(f), Some(l)) if breakpoints.len() >= 2 => (f, l),
            _ => return Err(Error::Parse("trajectory needs at least two breakpoints".into())),
        };
        if !first.0.is_zero() || last.0 != Q::from_integer(1.into()) {
            return Err(Error::Parse("trajectory must start at t=0 and end at t=1".into()));
        }
        if breakpoints.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::Parse("breakpoint times must increase strictly".into()));
        }
        Ok(Self { breakpoints })
    }

    /// A particle sitting still at `p`.
    pub fn stationary(p: RationalPoint) -> Self {
        Self {
            breakpoints: vec![(Q::zero(), p.clone()), (Q::from_integer(1.into()), p)],
        }
    }

    pub fn breakpoints(&self) -> &[(Q, RationalPoint)] {
        &self.breakpoints
    }

    pub(crate) fn breakpoints_mut(&mut self) -> &mut [(Q, RationalPoint)] {
        &mut self.breakpoints
    }

    pub fn position(&self, t: &Q) -> RationalPoint {
        let bp = &self.breakpoints;
        let idx = bp.partition_point(|(s, _)| s <= t);
        if idx == 0 {
            return bp[0].1.clone();
        }
        if idx >= bp.len() {
            return bp[bp.len() - 1].1.clone();
        }
        let (t0, p0) = &bp[idx - 1];
        let (t1, p1) = &bp[idx];
        p0.lerp(p1, &((t - t0) / (t1 - t0)))
    }

    /// Position on `[t0, t1]` (which must lie inside one linear piece) as
    /// polynomials in the global time `t`.
    pub(crate) fn motion(&self, t0: &Q, t1: &Q) -> (Poly, Poly) {
        let p0 = self.position(t0);
        let p1 = self.position(t1);
        let dt = t1 - t0;
        let vx = (&p1.x - &p0.x) / &dt;
        let vy = (&p1.y - &p0.y) / &dt;
        (
            Poly::linear(&p0.x - &vx * t0, vx),
            Poly::linear(&p0.y - &vy * t0, vy),
        )
    }
}

/// `n` particle trajectories over `[0, 1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynamicalSystem {
    trajectories: Vec<ParticleTrajectory>,
}

impl DynamicalSystem {
    /// Validates that positions are pairwise distinct at every breakpoint of
    /// the common grid.
    pub fn new(trajectories: Vec<ParticleTrajectory>) -> Result<Self> {
        let system = Self { trajectories };
        for t in system.grid() {
            let positions: Vec<_> = system.state(&t);
            for i in 0..positions.len() {
                for j in i + 1..positions.len() {
                    if positions[i] == positions[j] {
                        return Err(Error::Degenerate(format!(
                            "particles {} and {} coincide at t={t}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(system)
    }

    pub fn particle_count(&self) -> usize {
        self.trajectories.len()
    }

    pub fn trajectories(&self) -> &[ParticleTrajectory] {
        &self.trajectories
    }

    pub(crate) fn trajectories_mut(&mut self) -> &mut [ParticleTrajectory] {
        &mut self.trajectories
    }

    /// Union of all breakpoint times, sorted.
    pub fn grid(&self) -> Vec<Q> {
        let mut times: Vec<Q> = self
            .trajectories
            .iter()
            .flat_map(|tr| tr.breakpoints.iter().map(|(t, _)| t.clone()))
            .collect();
        times.sort();
        times.dedup();
        times
    }

    pub fn state(&self, t: &Q) -> Vec<RationalPoint> {
        self.trajectories.iter().map(|tr| tr.position(t)).collect()
    }

    pub fn initial_state(&self) -> Vec<RationalPoint> {
        self.state(&Q::zero())
    }

    pub fn terminal_state(&self) -> Vec<RationalPoint> {
        self.state(&Q::from_integer(1.into()))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty system file".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected n=<count>, got {header:?}")))?;
        let trajectories = lines
            .map(parse_trajectory)
            .collect::<Result<Vec<_>>>()?;
        if trajectories.len() != n {
            return Err(Error::Parse(format!(
                "header says {n} particles, found {}",
                trajectories.len()
            )));
        }
        Self::new(trajectories)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("n={}\n", self.trajectories.len());
        for tr in &self.trajectories {
            let parts: Vec<String> = tr
                .breakpoints
                .iter()
                .map(|(t, p)| format!("{t}:{},{}", p.x, p.y))
                .collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

pub fn parse_rational(s: &str) -> Result<Q> {
    s.trim()
        .parse::<Q>()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

fn parse_trajectory(line: &str) -> Result<ParticleTrajectory> {
    let breakpoints = line
        .split_whitespace()
        .map(|tok| {
            let (t, xy) = tok
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected t:x,y, got {tok:?}")))?;
            let t = parse_rational(t)?;
            let (x, y) = match xy.split_once(',') {
                Some((x, y)) => (parse_rational(x)?, parse_rational(y)?),
                None => {
                    let (x, y) = xy
                        .split_once('/')
                        .ok_or_else(|| Error::Parse(format!("bad point {xy:?}")))?;
                    (parse_rational(x)?, parse_rational(y)?)
                }
            };
            Ok((t, RationalPoint::new(x, y)))
        })
        .collect::<Result<Vec<_>>>()?;
    ParticleTrajectory::new(breakpoints)
}
