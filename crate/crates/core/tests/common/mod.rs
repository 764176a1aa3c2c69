//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use freebraid::braid::{ArtinLetter, BraidWord};
use freebraid::dynamics::{DynamicalSystem, ParticleTrajectory, RationalPoint};
use freebraid::group::{GroupSignature, Multiindex, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn sig(n: usize, k: usize) -> GroupSignature {
    GroupSignature::new(n, k).unwrap()
}

/// `G_3^2` acting on the plane: `a12`, `a13`, `a23` are the point
/// reflections about `(0,0)`, `(1,0)`, `(0,1)`. An element is the affine map
/// `x -> s x + v`, stored as `(s, v)`. The action is faithful, so words are
/// equal exactly when their maps are.
pub fn p2_image(word: &Word) -> (i64, (i64, i64)) {
    let centers = [((1, 2), (0, 0)), ((1, 3), (1, 0)), ((2, 3), (0, 1))];
    let mut map = (1i64, (0i64, 0i64));
    for m in word.letters() {
        let pair: Vec<usize> = m.indices().collect();
        let c = centers
            .iter()
            .find(|(p, _)| p.0 == pair[0] && p.1 == pair[1])
            .expect("G_3^2 letter")
            .1;
        // map <- map ∘ R_c, with R_c(x) = 2c - x.
        let (s, v) = map;
        map = (-s, (s * 2 * c.0 + v.0, s * 2 * c.1 + v.1));
    }
    map
}

/// Every word over the three generators of `G_3^2` up to `max_len`.
pub fn all_g32_words(max_len: usize) -> Vec<Word> {
    let s = sig(3, 2);
    let gens: Vec<Multiindex> = [[1, 2], [1, 3], [2, 3]]
        .iter()
        .map(|p| Multiindex::new(p, s).unwrap())
        .collect();
    let mut out = vec![Word::identity(s)];
    let mut layer = vec![Vec::<Multiindex>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in &gens {
                let mut v = w.clone();
                v.push(*g);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|l| Word::new(s, l.clone()).unwrap()));
        layer = next;
    }
    out
}

pub fn random_multiindex(rng: &mut ChaCha8Rng, s: GroupSignature) -> Multiindex {
    let mut pool: Vec<usize> = (1..=s.n()).collect();
    let mut pick = Vec::new();
    for _ in 0..s.k() {
        let i = rng.gen_range(0..pool.len());
        pick.push(pool.swap_remove(i));
    }
    Multiindex::new(&pick, s).unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, s: GroupSignature, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::new(s, (0..len).map(|_| random_multiindex(rng, s)).collect()).unwrap()
}

pub fn random_braid(rng: &mut ChaCha8Rng, n: usize, min_len: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(min_len..=max_len);
    let letters = (0..len)
        .map(|_| ArtinLetter::new(rng.gen_range(1..n), rng.gen_bool(0.5)))
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// A random pure braid: `u v u^-1 ...` products of pure pieces.
pub fn random_pure_braid(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    loop {
        let b = random_braid(rng, n, 0, max_len);
        let (p, _) = freebraid::braid::pure_power(&b);
        if p.len() <= 2 * max_len {
            return p;
        }
    }
}

/// A random piecewise-linear system with `n` particles. Coordinates have
/// odd prime denominators so that exact coincidences are unlikely.
pub fn random_system(rng: &mut ChaCha8Rng, n: usize) -> Option<DynamicalSystem> {
    let trajectories = (0..n)
        .map(|_| {
            let interior = rng.gen_range(0..=2);
            let mut times: Vec<i64> = (0..interior).map(|_| rng.gen_range(1..64)).collect();
            times.sort_unstable();
            times.dedup();
            let mut ts = vec![q(0, 1)];
            ts.extend(times.into_iter().map(|t| q(t, 64)));
            ts.push(q(1, 1));
            let bps = ts
                .into_iter()
                .map(|t| {
                    let p = RationalPoint::new(
                        q(rng.gen_range(-300..=300), 97),
                        q(rng.gen_range(-300..=300), 89),
                    );
                    (t, p)
                })
                .collect();
            ParticleTrajectory::new(bps).unwrap()
        })
        .collect();
    DynamicalSystem::new(trajectories).ok()
}

/// Floating-point positions of every particle at time `t`.
pub struct FloatSystem {
    tracks: Vec<Vec<(f64, (f64, f64))>>,
}

impl FloatSystem {
    pub fn new(system: &DynamicalSystem) -> Self {
        use num_traits::ToPrimitive;
        let tracks = system
            .trajectories()
            .iter()
            .map(|tr| {
                tr.breakpoints()
                    .iter()
                    .map(|(t, p)| (t.to_f64().unwrap(), p.to_f64()))
                    .collect()
            })
            .collect();
        Self { tracks }
    }

    pub fn position(&self, particle: usize, t: f64) -> (f64, f64) {
        let tr = &self.tracks[particle];
        let i = tr.partition_point(|(s, _)| *s <= t).clamp(1, tr.len() - 1);
        let ((t0, p0), (t1, p1)) = (tr[i - 1], tr[i]);
        let s = (t - t0) / (t1 - t0);
        (p0.0 + s * (p1.0 - p0.0), p0.1 + s * (p1.1 - p0.1))
    }
}

/// Sampled sign changes of the property determinant for one tuple: each
/// entry is the bracket `(t_j, t_{j+1})` of a sign change.
pub fn sign_scan(
    fs: &FloatSystem,
    tuple: &[usize],
    samples: usize,
    eval: impl Fn(&[(f64, f64)]) -> f64,
) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for j in 0..samples {
        let t = (j as f64 + 0.5) / samples as f64;
        let pts: Vec<(f64, f64)> = tuple.iter().map(|&i| fs.position(i - 1, t)).collect();
        let v = eval(&pts);
        if let Some((pt, pv)) = prev {
            if (pv < 0.0) != (v < 0.0) {
                out.push((pt, t));
            }
        }
        prev = Some((t, v));
    }
    out
}

/// All k-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for last in k..=n {
        for mut s in subsets(last - 1, k - 1) {
            s.push(last);
            out.push(s);
        }
    }
    out.sort();
    out
}
