use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use super::{Detector, DynamicalSystem};
use crate::error::{Error, Result};
use crate::group::{GroupSignature, Multiindex, Word};
use crate::poly::{common_root_in, isolate_roots, multiplicity, refine, Poly, RootInterval, SturmChain, Q};

/// A moment at which the detector's property holds for one k-tuple.
#[derive(Clone, Debug)]
pub struct CriticalEvent {
    pub multiindex: Multiindex,
    /// Index of the grid segment holding the event.
    pub segment: usize,
    /// Isolating interval in global time.
    pub interval: RootInterval,
    pub multiplicity: usize,
    /// Sign of the event polynomial (ascending particle order) just after
    /// the event if it changes sign there, else 0.
    pub direction: i8,
    poly: Poly,
}

impl CriticalEvent {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two events whose times cannot be separated.
    Simultaneous {
        first: Multiindex,
        second: Multiindex,
        interval: RootInterval,
    },
    /// A (k+1)-tuple all of whose points satisfy the property at once.
    ExtraParticle {
        tuple: Vec<usize>,
        interval: RootInterval,
    },
    /// A root of even or higher multiplicity: the property holds without
    /// being crossed transversally.
    Tangential {
        multiindex: Multiindex,
        interval: RootInterval,
        multiplicity: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Simultaneous {
                first,
                second,
                interval,
            } => write!(
                f,
                "simultaneous {first} {second} in ({}, {})",
                interval.lo, interval.hi
            ),
            Violation::ExtraParticle { tuple, interval } => {
                let t: Vec<String> = tuple.iter().map(|i| i.to_string()).collect();
                write!(
                    f,
                    "degenerate tuple ({}) in ({}, {})",
                    t.join(" "),
                    interval.lo,
                    interval.hi
                )
            }
            Violation::Tangential {
                multiindex,
                interval,
                multiplicity,
            } => write!(
                f,
                "root of multiplicity {multiplicity} for {multiindex} in ({}, {})",
                interval.lo, interval.hi
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pleasantness {
    Pleasant,
    NotPleasant(Vec<Violation>),
}

impl Pleasantness {
    pub fn is_pleasant(&self) -> bool {
        matches!(self, Pleasantness::Pleasant)
    }
}

/// Events in time order together with every pleasantness violation.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub signature: GroupSignature,
    pub events: Vec<CriticalEvent>,
    pub violations: Vec<Violation>,
}

impl Analysis {
    pub fn pleasantness(&self) -> Pleasantness {
        if self.violations.is_empty() {
            Pleasantness::Pleasant
        } else {
            Pleasantness::NotPleasant(self.violations.clone())
        }
    }

    /// The word read off the events, or `NotPleasant`.
    pub fn word(&self) -> Result<Word> {
        if let Some(v) = self.violations.first() {
            return Err(Error::NotPleasant(format!(
                "{v} ({} violation(s))",
                self.violations.len()
            )));
        }
        Ok(Word::from_parts(
            self.signature,
            self.events.iter().map(|e| e.multiindex).collect(),
        ))
    }
}

pub fn isolate_event_times(system: &DynamicalSystem, detector: Detector) -> Result<Vec<CriticalEvent>> {
    Ok(analyze(system, detector)?.events)
}

pub fn pleasantness_check(system: &DynamicalSystem, detector: Detector) -> Result<Pleasantness> {
    Ok(analyze(system, detector)?.pleasantness())
}

pub fn type_of(system: &DynamicalSystem, detector: Detector) -> Result<Word> {
    analyze(system, detector)?.word()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Scans every k-tuple on every linear piece, orders the events globally
/// and collects violations of pleasantness.
///
/// Fails with `Degenerate` if some tuple satisfies the property on a whole
/// piece or exactly at a grid time.
pub fn analyze(system: &DynamicalSystem, detector: Detector) -> Result<Analysis> {
    let n = system.particle_count();
    let k = detector.arity();
    let sig = GroupSignature::new(n, k)?;
    let grid = system.grid();
    let tuples = subsets(n, k);
    let mut polys: HashMap<(usize, u64), Poly> = HashMap::new();
    let mut events = Vec::new();

    for (seg, w) in grid.windows(2).enumerate() {
        let (t0, t1) = (&w[0], &w[1]);
        let motions: Vec<_> = system
            .trajectories()
            .iter()
            .map(|tr| tr.motion(t0, t1))
            .collect();
        for tuple in &tuples {
            let m = Multiindex::new(tuple, sig)?;
            let local: Vec<_> = tuple.iter().map(|&i| motions[i - 1].clone()).collect();
            let p = detector.event_polynomial(&local);
            if p.is_zero() {
                return Err(Error::Degenerate(format!(
                    "{} holds for {m} throughout ({t0}, {t1})",
                    detector.name()
                )));
            }
            if p.degree().unwrap_or(0) > 0 {
                for t in [t0, t1] {
                    if p.eval(t) == Q::from_integer(0.into()) {
                        return Err(Error::Degenerate(format!(
                            "{} holds for {m} at grid time {t}",
                            detector.name()
                        )));
                    }
                }
                for iv in isolate_roots(&p, t0, t1) {
                    let mult = multiplicity(&p, &iv);
                    let (sl, sh) = (p.sign_at(&iv.lo), p.sign_at(&iv.hi));
                    events.push(CriticalEvent {
                        multiindex: m,
                        segment: seg,
                        interval: iv,
                        multiplicity: mult,
                        direction: if sl != sh { sh } else { 0 },
                        poly: p.clone(),
                    });
                }
            }
            polys.insert((seg, m.mask()), p);
        }
    }

    let simultaneous = separate(&mut events);
    let mut violations = Vec::new();

    // Tuples of k+1 points satisfying the property together: such a tuple
    // contains the event's tuple and one more point x, and then the first
    // k-1 points of the event's tuple plus x satisfy it too.
    let mut extra: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for e in &events {
        let base: Vec<usize> = e.multiindex.indices().take(k - 1).collect();
        for x in 1..=n {
            if e.multiindex.contains(x) {
                continue;
            }
            let mut other = base.clone();
            other.push(x);
            let om = Multiindex::new(&other, sig)?;
            let q = &polys[&(e.segment, om.mask())];
            if common_root_in(&e.poly, q, &e.interval.lo, &e.interval.hi) {
                let mut tuple: Vec<usize> = e.multiindex.indices().collect();
                tuple.push(x);
                tuple.sort_unstable();
                if extra.insert((e.segment, tuple.clone())) {
                    violations.push(Violation::ExtraParticle {
                        tuple,
                        interval: e.interval.clone(),
                    });
                }
            }
        }
    }

    for (i, j) in simultaneous {
        let (a, b) = (&events[i], &events[j]);
        let union = a.multiindex.mask() | b.multiindex.mask();
        let covered = extra.iter().any(|(seg, t)| {
            *seg == a.segment && t.iter().fold(0u64, |acc, &x| acc | 1 << (x - 1)) == union
        });
        if !covered {
            violations.push(Violation::Simultaneous {
                first: a.multiindex,
                second: b.multiindex,
                interval: RootInterval {
                    lo: a.interval.lo.clone().max(b.interval.lo.clone()),
                    hi: a.interval.hi.clone().min(b.interval.hi.clone()),
                },
            });
        }
    }

    for e in &events {
        if e.multiplicity > 1 {
            violations.push(Violation::Tangential {
                multiindex: e.multiindex,
                interval: e.interval.clone(),
                multiplicity: e.multiplicity,
            });
        }
    }

    Ok(Analysis {
        signature: sig,
        events,
        violations,
    })
}

/// Refines overlapping isolating intervals until they are disjoint, sorts
/// events by time and returns the index pairs (into the sorted list) that
/// share a root and so cannot be separated.
fn separate(events: &mut Vec<CriticalEvent>) -> Vec<(usize, usize)> {
    events.sort_by(|a, b| {
        a.interval
            .lo
            .cmp(&b.interval.lo)
            .then(a.multiindex.cmp(&b.multiindex))
    });
    let chains: Vec<SturmChain> = events.iter().map(|e| SturmChain::new(&e.poly)).collect();
    let mut shared: Vec<(usize, usize)> = Vec::new();
    for i in 0..events.len() {
        let mut j = i + 1;
        while j < events.len() && events[j].interval.lo < events[i].interval.hi {
            if events[i].segment == events[j].segment {
                let lo = events[i].interval.lo.clone().max(events[j].interval.lo.clone());
                let hi = events[i].interval.hi.clone().min(events[j].interval.hi.clone());
                if common_root_in(&events[i].poly, &events[j].poly, &lo, &hi) {
                    shared.push((i, j));
                } else {
                    while events[i].interval.overlaps(&events[j].interval) {
                        events[i].interval = refine(&chains[i], &events[i].interval);
                        events[j].interval = refine(&chains[j], &events[j].interval);
                    }
                }
            }
            j += 1;
        }
    }
    // Shrinking never creates overlaps, so sorting by left endpoint now
    // gives the time order. Unresolvable pairs are remapped after sorting.
    let mut order: Vec<usize> = (0..events.len()).collect();
    order.sort_by(|&a, &b| {
        events[a]
            .interval
            .lo
            .cmp(&events[b].interval.lo)
            .then(events[a].multiindex.cmp(&events[b].multiindex))
    });
    let mut position = vec![0; events.len()];
    for (new, &old) in order.iter().enumerate() {
        position[old] = new;
    }
    let sorted: Vec<CriticalEvent> = order.iter().map(|&i| events[i].clone()).collect();
    *events = sorted;
    shared
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (position[a], position[b]);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// One line per event: `t_lo t_hi (i j k) sign`.
pub fn format_event_report(events: &[CriticalEvent]) -> String {
    let mut out = String::new();
    for e in events {
        let sign = match e.direction {
            1 => "+",
            -1 => "-",
            _ => "0",
        };
        let _ = writeln!(
            out,
            "{} {} {} {sign}",
            e.interval.lo, e.interval.hi, e.multiindex
        );
    }
    out
}
