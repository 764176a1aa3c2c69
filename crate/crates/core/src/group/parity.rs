use std::collections::BTreeSet;

use super::{GroupSignature, Multiindex, Word};

/// Per-generator occurrence count mod 2. Every defining relation preserves
/// it, so it is a homomorphism `G_n^k -> (Z/2)^C(n,k)` and hence both a
/// word-problem and a conjugacy invariant.
///
/// Stored sparsely as the set of generators with odd count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityVector {
    sig: GroupSignature,
    odd: BTreeSet<Multiindex>,
}

impl ParityVector {
    pub fn signature(&self) -> GroupSignature {
        self.sig
    }

    pub fn dimension(&self) -> u128 {
        self.sig.generator_count()
    }

    pub fn bit(&self, m: Multiindex) -> bool {
        self.odd.contains(&m)
    }

    pub fn odd_generators(&self) -> impl Iterator<Item = Multiindex> + '_ {
        self.odd.iter().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.odd.is_empty()
    }
}

pub fn parity_vector(word: &Word) -> ParityVector {
    let mut odd = BTreeSet::new();
    for &m in word.letters() {
        if !odd.remove(&m) {
            odd.insert(m);
        }
    }
    ParityVector {
        sig: word.signature(),
        odd,
    }
}
