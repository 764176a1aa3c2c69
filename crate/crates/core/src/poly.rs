//! Univariate polynomials with rational coefficients, and real root
//! isolation by Sturm sequences. Everything here is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Coefficients from low to high degree; no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// `a + b t`
    pub fn linear(a: Q, b: Q) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&Q> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn sign_at(&self, t: &Q) -> i8 {
        let v = self.eval(t);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * qi(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&(Q::one() / lc)),
            None => Poly::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Q::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lc;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Product of the distinct irreducible factors: same roots, all simple.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn sturm_sequence(&self) -> Vec<Poly> {
        let mut seq = vec![self.clone(), self.derivative()];
        while !seq.last().unwrap().is_zero() {
            let n = seq.len();
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            seq.push(-r);
        }
        seq.pop();
        seq
    }
}

fn sign_variations(seq: &[Poly], t: &Q) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let s = p.sign_at(t);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// A square-free polynomial with its Sturm sequence, ready for root counting.
pub struct SturmChain {
    poly: Poly,
    seq: Vec<Poly>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let poly = p.square_free();
        let seq = poly.sturm_sequence();
        Self { poly, seq }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    /// Distinct roots in the open interval `(lo, hi)`; neither endpoint may
    /// be a root.
    pub fn count(&self, lo: &Q, hi: &Q) -> usize {
        if self.poly.degree().unwrap_or(0) == 0 {
            return 0;
        }
        sign_variations(&self.seq, lo).saturating_sub(sign_variations(&self.seq, hi))
    }

    /// Distinct roots in the open interval, allowing endpoints to be roots.
    ///
    /// For a square-free polynomial `V(a) - V(b)` counts the roots in
    /// `(a, b]` even when `a` itself is a root, since the chain's sign
    /// pattern at a simple root matches the one just to its right.
    pub fn count_open(&self, lo: &Q, hi: &Q) -> usize {
        if self.poly.degree().unwrap_or(0) == 0 || lo >= hi {
            return 0;
        }
        let at_hi = usize::from(self.poly.eval(hi).is_zero());
        (sign_variations(&self.seq, lo) - sign_variations(&self.seq, hi)) - at_hi
    }
}

/// An open interval certified to contain exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Q,
    pub hi: Q,
}

impl RootInterval {
    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Q {
        (&self.lo + &self.hi) / qi(2)
    }

    pub fn overlaps(&self, other: &RootInterval) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }
}

/// Isolates the distinct real roots of `p` in the open interval `(lo, hi)`
/// into disjoint open intervals of width at most `(hi - lo) / 4`, sorted
/// increasingly. Endpoints must not be roots. An exact rational root found
/// at a bisection point `c` of an interval of width `w` is reported as
/// `(c - w/8, c + w/8)` (shrunk if needed).
pub fn isolate_roots(p: &Poly, lo: &Q, hi: &Q) -> Vec<RootInterval> {
    let chain = SturmChain::new(p);
    let max_width = (hi - lo) / qi(4);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let c = chain.count(&a, &b);
        if c == 0 {
            continue;
        }
        let width = &b - &a;
        if c == 1 && width <= max_width {
            out.push(RootInterval { lo: a, hi: b });
            continue;
        }
        let mid = (&a + &b) / qi(2);
        if chain.poly.eval(&mid).is_zero() {
            let mut r = &width / qi(8);
            loop {
                let (l, h) = (&mid - &r, &mid + &r);
                if !chain.poly.eval(&l).is_zero()
                    && !chain.poly.eval(&h).is_zero()
                    && chain.count(&l, &h) == 1
                {
                    stack.push((h.clone(), b.clone()));
                    stack.push((a.clone(), l.clone()));
                    out.push(RootInterval { lo: l, hi: h });
                    break;
                }
                r /= qi(2);
            }
        } else {
            stack.push((mid.clone(), b));
            stack.push((a, mid));
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Halves an isolating interval of `chain`'s polynomial, keeping the half
/// that holds the root. An exact root at the midpoint collapses the interval
/// to a quarter-width window around it.
pub fn refine(chain: &SturmChain, iv: &RootInterval) -> RootInterval {
    let mid = iv.midpoint();
    if chain.poly.eval(&mid).is_zero() {
        let mut r = iv.width() / qi(8);
        loop {
            let (l, h) = (&mid - &r, &mid + &r);
            if !chain.poly.eval(&l).is_zero() && !chain.poly.eval(&h).is_zero() {
                return RootInterval { lo: l, hi: h };
            }
            r /= qi(2);
        }
    }
    if chain.count(&iv.lo, &mid) == 1 {
        RootInterval {
            lo: iv.lo.clone(),
            hi: mid,
        }
    } else {
        RootInterval {
            lo: mid,
            hi: iv.hi.clone(),
        }
    }
}

/// Multiplicity of the unique root of `p` inside the isolating interval.
pub fn multiplicity(p: &Poly, iv: &RootInterval) -> usize {
    let mut m = 1;
    let mut g = p.clone();
    let mut d = p.derivative();
    while !d.is_zero() {
        g = g.gcd(&d);
        if g.degree().unwrap_or(0) == 0 || SturmChain::new(&g).count(&iv.lo, &iv.hi) == 0 {
            break;
        }
        m += 1;
        d = d.derivative();
    }
    m
}

/// Whether `a` and `b` have a common root strictly inside `(lo, hi)`.
pub fn common_root_in(a: &Poly, b: &Poly, lo: &Q, hi: &Q) -> bool {
    let g = a.gcd(b);
    if g.degree().unwrap_or(0) == 0 {
        return false;
    }
    SturmChain::new(&g).count_open(lo, hi) > 0
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..len)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Q::zero);
                    match rhs.coeffs.get(i) {
                        Some(b) => a + b,
                        None => a,
                    }
                })
                .collect(),
        )
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs.clone())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}
