//! Braids as motions of points in the plane.
//!
//! Strands start at rational points in convex position near the unit
//! circle, numbered counterclockwise. The letter `σ_i` swaps the points at
//! positions `i` and `i+1`: the strand at position `i` leaves the convex
//! hull and walks around the outside while the other one slides along the
//! hull edge. For `σ_i^-1` the roles are exchanged, which makes the motion
//! of `σ_i^-1` the exact time reversal of that of `σ_i`.

use serde::Serialize;

use super::{permutation_of, BraidWord};
use crate::dynamics::{analyze, perturb, Analysis, Detector, DynamicalSystem, ParticleTrajectory, RationalPoint};
use crate::error::{Error, Result};
use crate::group::{complexity, parity_vector, CyclicWord, Word, DEFAULT_BUDGET};
use crate::poly::{q, qi, Q};

/// How many seeded perturbations are tried after an unpleasant realization.
pub const PERTURBATION_RETRIES: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DetourShape {
    /// Step out radially, translate, step back in.
    #[default]
    Box,
    /// Straight out to an apex beyond the hull edge, then straight in.
    Wedge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantOptions {
    pub shape: DetourShape,
    /// Outward displacement of the detouring strand, relative to the radius.
    pub radius: Q,
    /// Seed of the first perturbation retry.
    pub seed: u64,
    /// Perturbation applied up front, if any. Used for stability checks.
    pub perturbation: Option<(u64, Q)>,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        Self {
            shape: DetourShape::Box,
            radius: q(1, 8),
            seed: 0,
            perturbation: None,
        }
    }
}

fn retry_magnitude() -> Q {
    q(1, 1024)
}

/// Position `j` (1-based) of `n`: a Pythagorean point close to angle
/// `2π(j-1)/n`, slightly jittered and scaled so that no four positions are
/// concyclic.
pub(crate) fn home_position(j: usize, n: usize) -> RationalPoint {
    use std::f64::consts::PI;
    let theta = 2.0 * PI * (j - 1) as f64 / n as f64 + 0.1 * (j as f64).sin() / n as f64;
    let flip = theta > PI / 2.0 && theta < 1.5 * PI;
    let phi = if flip { theta - PI } else { theta };
    let u = q(((phi / 2.0).tan() * 1000.0).round() as i64, 1000);
    let d = qi(1) + &u * &u;
    let mut x = (qi(1) - &u * &u) / &d;
    let mut y = (qi(2) * &u) / &d;
    if flip {
        x = -x;
        y = -y;
    }
    let nn = (n * n) as i64;
    let r = qi(1) + q(((j * j) % 7 + 1) as i64, 128 * nn);
    RationalPoint::new(x * &r, y * &r)
}

fn scaled(p: &RationalPoint, s: &Q) -> RationalPoint {
    RationalPoint::new(&p.x * s, &p.y * s)
}

type Path = Vec<(Q, RationalPoint)>;

/// Breakpoints (slot-relative times and positions) of a strand walking
/// from `from` to `to` around the outside, and of one sliding along the
/// chord from `to` to `from`.
fn swap_paths(
    from: &RationalPoint,
    to: &RationalPoint,
    shape: DetourShape,
    rho: &Q,
) -> (Path, Path) {
    match shape {
        DetourShape::Box => {
            let s = qi(1) + rho;
            let outer = vec![
                (q(1, 3), scaled(from, &s)),
                (q(2, 3), scaled(to, &s)),
                (qi(1), to.clone()),
            ];
            let chord = vec![
                (q(1, 3), to.lerp(from, &q(1, 3))),
                (q(2, 3), to.lerp(from, &q(2, 3))),
                (qi(1), from.clone()),
            ];
            (outer, chord)
        }
        DetourShape::Wedge => {
            let m = from.lerp(to, &q(1, 2));
            let norm2 = &m.x * &m.x + &m.y * &m.y;
            let apex = scaled(&m, &((qi(1) + rho) / norm2));
            let outer = vec![(q(1, 2), apex), (qi(1), to.clone())];
            let chord = vec![(q(1, 2), m), (qi(1), from.clone())];
            (outer, chord)
        }
    }
}

pub fn realize(braid: &BraidWord) -> Result<DynamicalSystem> {
    realize_with(braid, &InvariantOptions::default())
}

/// Deterministic realization; particle `s` is the strand starting at
/// position `s`.
pub fn realize_with(braid: &BraidWord, options: &InvariantOptions) -> Result<DynamicalSystem> {
    let n = braid.strands();
    let homes: Vec<RationalPoint> = (1..=n).map(|j| home_position(j, n)).collect();
    let slots = braid.len().max(1);
    let slot_len = q(1, slots as i64);
    // strand_at[p] is the strand at position p (both 0-based here).
    let mut strand_at: Vec<usize> = (0..n).collect();
    let mut tracks: Vec<Vec<(Q, RationalPoint)>> =
        homes.iter().map(|h| vec![(qi(0), h.clone())]).collect();
    let phases: Vec<Q> = match options.shape {
        DetourShape::Box => vec![q(1, 3), q(2, 3), qi(1)],
        DetourShape::Wedge => vec![q(1, 2), qi(1)],
    };
    for (slot, letter) in braid.letters().iter().enumerate() {
        let start = &slot_len * qi(slot as i64);
        let (i, j) = (letter.index - 1, letter.index);
        let (walker, slider, from, to) = if letter.inverse {
            (strand_at[j], strand_at[i], &homes[j], &homes[i])
        } else {
            (strand_at[i], strand_at[j], &homes[i], &homes[j])
        };
        let (outer, chord) = swap_paths(from, to, options.shape, &options.radius);
        for (s, track) in tracks.iter_mut().enumerate() {
            let path: Vec<(Q, RationalPoint)> = if s == walker {
                outer.clone()
            } else if s == slider {
                chord.clone()
            } else {
                let here = track.last().expect("nonempty").1.clone();
                phases.iter().map(|t| (t.clone(), here.clone())).collect()
            };
            track.extend(path.into_iter().map(|(t, p)| (&start + &slot_len * t, p)));
        }
        strand_at.swap(i, j);
    }
    if braid.is_empty() {
        for track in &mut tracks {
            let here = track[0].1.clone();
            track.push((qi(1), here));
        }
    }
    let trajectories = tracks
        .into_iter()
        .map(ParticleTrajectory::new)
        .collect::<Result<Vec<_>>>()?;
    let system = DynamicalSystem::new(trajectories)?;
    Ok(match &options.perturbation {
        Some((seed, magnitude)) => perturb(&system, *seed, magnitude),
        None => system,
    })
}

/// Realizes and scans the braid, retrying with seeded perturbations while
/// the result is degenerate or not pleasant. Returns the analysis and the
/// attempt that succeeded (0 = unperturbed).
pub fn scan_braid(
    braid: &BraidWord,
    detector: Detector,
    options: &InvariantOptions,
) -> Result<(Analysis, usize)> {
    let min = detector.arity();
    if braid.strands() < min {
        return Err(Error::TooFewStrands {
            n: braid.strands(),
            min,
        });
    }
    let base = realize_with(braid, options)?;
    for attempt in 0..=PERTURBATION_RETRIES {
        let system = if attempt == 0 {
            base.clone()
        } else {
            perturb(&base, options.seed + attempt as u64 - 1, &retry_magnitude())
        };
        match analyze(&system, detector) {
            Ok(a) if a.violations.is_empty() => return Ok((a, attempt)),
            Ok(_) | Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::PleasantnessUnobtainable {
        attempts: PERTURBATION_RETRIES + 1,
    })
}

pub fn invariant_with(braid: &BraidWord, detector: Detector, options: &InvariantOptions) -> Result<Word> {
    scan_braid(braid, detector, options)?.0.word()
}

/// The trisecant invariant in `G_n^3`.
pub fn invariant_c(braid: &BraidWord) -> Result<Word> {
    invariant_with(braid, Detector::Collinearity, &InvariantOptions::default())
}

/// The concyclicity invariant in `G_n^4`.
pub fn invariant_c4(braid: &BraidWord) -> Result<Word> {
    invariant_with(braid, Detector::Concyclicity, &InvariantOptions::default())
}

/// The invariant of a pure braid's closure, as a cyclic word.
pub fn closed_invariant(braid: &BraidWord) -> Result<CyclicWord> {
    if !permutation_of(braid).is_identity() {
        return Err(Error::NotPure);
    }
    Ok(CyclicWord::new(invariant_c(braid)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    /// Number of trisecant events of the realization.
    pub events: usize,
    /// Length of the shortest representative of the invariant found.
    pub lower_bound: usize,
    /// Whether the search behind `lower_bound` ran to completion.
    pub exact: bool,
    /// Number of generators occurring an odd number of times; a lower bound
    /// that needs no search.
    pub parity_bound: usize,
    pub ok: bool,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }
}

pub fn trisecant_certificate(braid: &BraidWord) -> Result<Certificate> {
    trisecant_certificate_with(braid, &InvariantOptions::default(), DEFAULT_BUDGET)
}

pub fn trisecant_certificate_with(
    braid: &BraidWord,
    options: &InvariantOptions,
    budget: usize,
) -> Result<Certificate> {
    let (analysis, _) = scan_braid(braid, Detector::Collinearity, options)?;
    let word = analysis.word()?;
    let c = complexity(&word, budget);
    let events = analysis.events.len();
    Ok(Certificate {
        events,
        lower_bound: c.value(),
        exact: c.is_exact(),
        parity_bound: parity_vector(&word).odd_generators().count(),
        ok: events >= c.value(),
    })
}
