use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DynamicalSystem;
use crate::poly::Q;

const STEPS: i64 = 1 << 16;

/// Moves every interior breakpoint by a seeded offset of at most
/// `magnitude` per coordinate. Times and the endpoints at t = 0 and t = 1
/// are left alone, so the initial and terminal states do not change.
pub fn perturb(system: &DynamicalSystem, seed: u64, magnitude: &Q) -> DynamicalSystem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = system.clone();
    for tr in out.trajectories_mut() {
        let bps = tr.breakpoints_mut();
        let last = bps.len() - 1;
        for (_, p) in bps[1..last].iter_mut() {
            let dx = Q::new(BigInt::from(rng.gen_range(-STEPS..=STEPS)), BigInt::from(STEPS));
            let dy = Q::new(BigInt::from(rng.gen_range(-STEPS..=STEPS)), BigInt::from(STEPS));
            p.x += dx * magnitude;
            p.y += dy * magnitude;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{q, qi};
    use num_traits::Signed;

    const TEXT: &str = "n=2\n0:0,0 1/3:1,1 2/3:2,0 1:3,0\n0:5,5 1:5,6\n";

    #[test]
    fn zero_magnitude_is_identity() {
        let s = DynamicalSystem::parse(TEXT).unwrap();
        assert_eq!(perturb(&s, 7, &qi(0)), s);
    }

    #[test]
    fn deterministic_and_bounded() {
        let s = DynamicalSystem::parse(TEXT).unwrap();
        let m = q(1, 100);
        let a = perturb(&s, 3, &m);
        assert_eq!(a, perturb(&s, 3, &m));
        assert_ne!(a, perturb(&s, 4, &m));
        assert_eq!(a.initial_state(), s.initial_state());
        assert_eq!(a.terminal_state(), s.terminal_state());
        for (ta, ts) in a.trajectories().iter().zip(s.trajectories()) {
            for ((t1, p1), (t2, p2)) in ta.breakpoints().iter().zip(ts.breakpoints()) {
                assert_eq!(t1, t2);
                assert!((&p1.x - &p2.x).abs() <= m && (&p1.y - &p2.y).abs() <= m);
            }
        }
    }
}
