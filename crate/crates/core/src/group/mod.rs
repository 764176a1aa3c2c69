//! The free k-braid group `G_n^k`.
//!
//! Generators `a_m` are indexed by k-element subsets `m` of `{1..n}`. The
//! defining relations are
//!
//! * `a_m^2 = 1` (involution),
//! * `a_m a_m' = a_m' a_m` whenever `|m ∩ m'| < k - 1` (far commutativity),
//! * for every (k+1)-set `U` and ordering `u_1..u_{k+1}` of it, the product of
//!   `a_{U \ u_j}` over `j` equals the same product reversed (tetrahedron).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

mod compare;
mod moves;
mod parity;
mod reduce;
mod relations;
mod text;
mod trace;

pub use compare::{
    are_conjugate, are_conjugate_with, are_equal, are_equal_with, canonical_form,
    canonical_form_with, cyclic_canonical_form, cyclic_canonical_form_with, Verdict,
};
pub use moves::{apply_far_commutativity, apply_involution, apply_tetrahedron, neighbors};
pub use parity::{parity_vector, ParityVector};
pub use reduce::{
    complexity, cyclic_reduce, insertion_probe, reduce, reduce_with, Complexity, Reduction,
    DEFAULT_BUDGET,
};
pub use relations::{enumerate_generators, enumerate_tetrahedron_relations, Relation};
pub use text::{format_letters, parse_word};

/// Strand count `n` and multiplicity `k` of a free k-braid group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSignature {
    n: usize,
    k: usize,
}

impl GroupSignature {
    pub const MAX_STRANDS: usize = 64;

    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 || k > n || n > Self::MAX_STRANDS {
            return Err(Error::InvalidSignature { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of generators, `C(n, k)`.
    pub fn generator_count(&self) -> u128 {
        binomial(self.n, self.k)
    }

    /// Whether two letters may be swapped by far commutativity.
    #[inline]
    pub fn commute(&self, a: Multiindex, b: Multiindex) -> bool {
        ((a.0 & b.0).count_ones() as usize) + 1 < self.k
    }
}

impl fmt::Display for GroupSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} k={}", self.n, self.k)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// A k-subset of `{1..n}`, stored as a bitmask (bit `i-1` set for index `i`).
///
/// Ordering is lexicographic on the increasing index tuple, so `(1 2 4)`
/// sorts before `(1 3 4)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiindex(u64);

impl Multiindex {
    /// Builds a multiindex from arbitrary-order values, validating it
    /// against the signature.
    pub fn new(values: &[usize], sig: GroupSignature) -> Result<Self> {
        if values.len() != sig.k {
            return Err(Error::WrongCardinality {
                expected: sig.k,
                got: values.len(),
            });
        }
        let mut mask = 0u64;
        for &v in values {
            if v == 0 || v > sig.n {
                return Err(Error::IndexOutOfRange { index: v, n: sig.n });
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateIndex(v));
            }
            mask |= bit;
        }
        Ok(Self(mask))
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        (1..=64).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    /// Indices in increasing order (1-based).
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i + 1)
            }
        })
    }

    pub fn overlap(&self, other: Multiindex) -> usize {
        (self.0 & other.0).count_ones() as usize
    }

    /// Applies a strand relabeling; `perm[i-1]` is the new label of strand `i`.
    pub fn relabel(&self, perm: &[usize]) -> Multiindex {
        Multiindex(self.indices().fold(0u64, |acc, i| acc | 1u64 << (perm[i - 1] - 1)))
    }
}

impl Ord for Multiindex {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
            if la != lb {
                return la.cmp(&lb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for Multiindex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Multiindex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Multiindex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, i) in self.indices().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

/// Convenience constructor used throughout the tests: `mi(&[1, 2, 3], sig)`.
pub fn mi(values: &[usize], sig: GroupSignature) -> Multiindex {
    Multiindex::new(values, sig).expect("valid multiindex")
}

/// A word in the generators of `G_n^k`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    sig: GroupSignature,
    letters: Vec<Multiindex>,
}

impl Word {
    pub fn new(sig: GroupSignature, letters: Vec<Multiindex>) -> Result<Self> {
        for m in &letters {
            if m.len() != sig.k {
                return Err(Error::WrongCardinality {
                    expected: sig.k,
                    got: m.len(),
                });
            }
            if sig.n < 64 && m.0 >> sig.n != 0 {
                return Err(Error::IndexOutOfRange {
                    index: 64 - m.0.leading_zeros() as usize,
                    n: sig.n,
                });
            }
        }
        Ok(Self { sig, letters })
    }

    pub(crate) fn from_parts(sig: GroupSignature, letters: Vec<Multiindex>) -> Self {
        Self { sig, letters }
    }

    pub fn identity(sig: GroupSignature) -> Self {
        Self {
            sig,
            letters: Vec::new(),
        }
    }

    /// Builds a word from index tuples, e.g. `&[&[1, 2], &[1, 3]]`.
    pub fn from_tuples(sig: GroupSignature, tuples: &[&[usize]]) -> Result<Self> {
        let letters = tuples
            .iter()
            .map(|t| Multiindex::new(t, sig))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { sig, letters })
    }

    pub fn signature(&self) -> GroupSignature {
        self.sig
    }

    pub fn letters(&self) -> &[Multiindex] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: every generator is an involution, so this is reversal.
    pub fn inverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word::from_parts(self.sig, letters)
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(
                self.sig.to_string(),
                other.sig.to_string(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word::from_parts(self.sig, letters))
    }

    /// Renames strands; `perm[i-1]` is the new label of strand `i`.
    pub fn relabel(&self, perm: &[usize]) -> Word {
        Word::from_parts(
            self.sig,
            self.letters.iter().map(|m| m.relabel(perm)).collect(),
        )
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{}]({self})", self.sig)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.letters))
    }
}

/// A word considered up to rotation; represents a conjugacy class.
#[derive(Clone, Debug)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn new(word: Word) -> Self {
        Self(word)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn signature(&self) -> GroupSignature {
        self.0.sig
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lexicographically least rotation of the letters.
    pub fn least_rotation(&self) -> Vec<Multiindex> {
        least_rotation(&self.0.letters)
    }
}

impl PartialEq for CyclicWord {
    fn eq(&self, other: &Self) -> bool {
        self.0.sig == other.0.sig && self.least_rotation() == other.least_rotation()
    }
}

impl Eq for CyclicWord {}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn least_rotation(letters: &[Multiindex]) -> Vec<Multiindex> {
    let len = letters.len();
    (0..len.max(1))
        .map(|r| rotate(letters, r))
        .min()
        .unwrap_or_default()
}

pub(crate) fn rotate(letters: &[Multiindex], r: usize) -> Vec<Multiindex> {
    if letters.is_empty() {
        return Vec::new();
    }
    let r = r % letters.len();
    letters[r..].iter().chain(&letters[..r]).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiindex_sorts_input() {
        let sig = GroupSignature::new(4, 3).unwrap();
        let m = Multiindex::new(&[3, 1, 2], sig).unwrap();
        assert_eq!(m.indices().collect::<Vec<_>>(), vec![1, 2, 3]);
        let sig = GroupSignature::new(3, 2).unwrap();
        assert_eq!(mi(&[2, 1], sig).to_string(), "(1 2)");
    }

    #[test]
    fn multiindex_errors() {
        let sig = GroupSignature::new(4, 3).unwrap();
        assert_eq!(
            Multiindex::new(&[1, 2, 2], sig),
            Err(Error::DuplicateIndex(2))
        );
        assert_eq!(
            Multiindex::new(&[1, 2], sig),
            Err(Error::WrongCardinality {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            Multiindex::new(&[1, 2, 5], sig),
            Err(Error::IndexOutOfRange { index: 5, n: 4 })
        );
        assert!(Multiindex::new(&[0, 1, 2], sig).is_err());
    }

    #[test]
    fn signature_bounds() {
        assert!(GroupSignature::new(3, 1).is_err());
        assert!(GroupSignature::new(3, 4).is_err());
        assert!(GroupSignature::new(65, 3).is_err());
        assert!(GroupSignature::new(2, 2).is_ok());
    }

    #[test]
    fn lexicographic_letter_order() {
        let sig = GroupSignature::new(5, 3).unwrap();
        let mut v = [
            mi(&[2, 3, 4], sig),
            mi(&[1, 3, 4], sig),
            mi(&[1, 2, 5], sig),
            mi(&[1, 2, 3], sig),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(|m| m.to_string()).collect();
        assert_eq!(s, ["(1 2 3)", "(1 2 5)", "(1 3 4)", "(2 3 4)"]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(7, 4), 35);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(64, 32), 1832624140942590534);
    }

    #[test]
    fn cyclic_equality_ignores_rotation() {
        let sig = GroupSignature::new(4, 2).unwrap();
        let a = Word::from_tuples(sig, &[&[1, 2], &[3, 4], &[1, 3]]).unwrap();
        let b = Word::from_tuples(sig, &[&[1, 3], &[1, 2], &[3, 4]]).unwrap();
        assert_eq!(CyclicWord::new(a), CyclicWord::new(b));
    }
}
