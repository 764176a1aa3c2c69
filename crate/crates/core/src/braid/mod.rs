//! Classical Artin braids and their trisecant invariants.

mod realize;

use std::fmt;

use crate::error::{Error, Result};

pub use realize::{
    closed_invariant, invariant_c, invariant_c4, invariant_with, realize, realize_with,
    scan_braid, trisecant_certificate, trisecant_certificate_with, Certificate, DetourShape,
    InvariantOptions, PERTURBATION_RETRIES,
};

/// `σ_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinLetter {
    pub index: usize,
    pub inverse: bool,
}

impl ArtinLetter {
    pub fn new(index: usize, inverse: bool) -> Self {
        Self { index, inverse }
    }

    pub fn inverted(self) -> Self {
        Self {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "s{}^-1", self.index)
        } else {
            write!(f, "s{}", self.index)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<ArtinLetter>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<ArtinLetter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { n, min: 2 });
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(Error::IndexOutOfRange {
                index: l.index,
                n: n - 1,
            });
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::SignatureMismatch(
                format!("{} strands", self.n),
                format!("{} strands", other.n),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn power(&self, m: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(m),
        }
    }

    pub fn is_pure(&self) -> bool {
        permutation_of(self).is_identity()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses `s1 s2^-1 ...`. Exponents `^1`, `^+1` and `^-1` are accepted.
pub fn parse_artin(text: &str, n: usize) -> Result<BraidWord> {
    let letters = text
        .split_whitespace()
        .map(|tok| {
            let body = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('S'))
                .ok_or_else(|| Error::Parse(format!("expected s<i>, got {tok:?}")))?;
            let (idx, inverse) = match body.split_once('^') {
                None => (body, false),
                Some((i, "-1")) => (i, true),
                Some((i, "1" | "+1")) => (i, false),
                Some(_) => return Err(Error::Parse(format!("bad exponent in {tok:?}"))),
            };
            let index = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index in {tok:?}")))?;
            Ok(ArtinLetter::new(index, inverse))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(n, letters).map_err(|e| match e {
        Error::IndexOutOfRange { index, .. } => {
            Error::Parse(format!("no generator s{index} on {n} strands"))
        }
        e => e,
    })
}

/// `images[p - 1]` is the starting position of the strand that ends at
/// position `p`. With this convention `perm(uv) = perm(u) ∘ perm(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.apply(x)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut m = 1;
        while !p.is_identity() {
            p = p.compose(self);
            m += 1;
        }
        m
    }
}

pub fn permutation_of(braid: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(braid.n);
    for l in &braid.letters {
        p.images.swap(l.index - 1, l.index);
    }
    p
}

/// Smallest power of the braid that is pure, with its exponent.
pub fn pure_power(braid: &BraidWord) -> (BraidWord, usize) {
    let m = permutation_of(braid).order();
    (braid.power(m), m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArtinRelation {
    /// `σ_i^e σ_i^-e` → empty.
    Cancel,
    /// `σ_i^e σ_j^f` → `σ_j^f σ_i^e` for `|i - j| >= 2`.
    FarSwap,
    /// `σ_i^e σ_j^e σ_i^e` → `σ_j^e σ_i^e σ_j^e` for `|i - j| = 1`.
    YangBaxter,
}

impl ArtinRelation {
    pub const ALL: [ArtinRelation; 3] = [
        ArtinRelation::Cancel,
        ArtinRelation::FarSwap,
        ArtinRelation::YangBaxter,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ArtinRelation::Cancel => "cancel",
            ArtinRelation::FarSwap => "far-swap",
            ArtinRelation::YangBaxter => "yang-baxter",
        }
    }
}

pub fn apply_artin_relation(
    braid: &BraidWord,
    relation: ArtinRelation,
    position: usize,
) -> Result<BraidWord> {
    let l = &braid.letters;
    let not_applicable = Error::MoveNotApplicable {
        relation: relation.name(),
        position,
    };
    let mut out = l.clone();
    match relation {
        ArtinRelation::Cancel => {
            match (l.get(position), l.get(position + 1)) {
                (Some(a), Some(b)) if a.index == b.index && a.inverse != b.inverse => {}
                _ => return Err(not_applicable),
            }
            out.drain(position..position + 2);
        }
        ArtinRelation::FarSwap => {
            match (l.get(position), l.get(position + 1)) {
                (Some(a), Some(b)) if a.index.abs_diff(b.index) >= 2 => {}
                _ => return Err(not_applicable),
            }
            out.swap(position, position + 1);
        }
        ArtinRelation::YangBaxter => {
            let (a, b, c) = match (l.get(position), l.get(position + 1), l.get(position + 2)) {
                (Some(a), Some(b), Some(c)) => (*a, *b, *c),
                _ => return Err(not_applicable),
            };
            if a != c || a.inverse != b.inverse || a.index.abs_diff(b.index) != 1 {
                return Err(not_applicable);
            }
            out[position] = b;
            out[position + 1] = a;
            out[position + 2] = b;
        }
    }
    Ok(BraidWord {
        n: braid.n,
        letters: out,
    })
}

/// Every single applicable relation instance with its result.
pub fn artin_rewrites(braid: &BraidWord) -> Vec<(ArtinRelation, usize, BraidWord)> {
    let mut out = Vec::new();
    for pos in 0..braid.len() {
        for rel in ArtinRelation::ALL {
            if let Ok(b) = apply_artin_relation(braid, rel, pos) {
                out.push((rel, pos, b));
            }
        }
    }
    out
}
