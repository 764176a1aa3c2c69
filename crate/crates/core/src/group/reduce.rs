//! Reduction to minimal representatives.
//!
//! The search never lengthens a word. Far commutativity is quotiented out
//! (see [`super::trace`]); the remaining length-preserving moves are
//! tetrahedron reversals, explored breadth first. As soon as any reachable
//! class admits a cancellation `a_m a_m -> 1` the search restarts from the
//! shorter word.

use std::collections::{HashSet, VecDeque};

use super::trace::{cancel_all, cancel_once, normal_form, tetrahedron_moves};
use super::{enumerate_generators, rotate, GroupSignature, Multiindex, Word};
use crate::error::{Error, Result};

/// Default cap on the number of visited states per search.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// Outcome of a completed reduction.
///
/// `words` holds one representative per far-commutativity class of minimal
/// words: the lexicographically least linearization (for cyclic reductions,
/// additionally minimized over rotations). Sorted, so equal inputs give equal
/// outputs regardless of search order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    sig: GroupSignature,
    length: usize,
    words: Vec<Word>,
    cyclic: bool,
}

impl Reduction {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The lexicographically least minimal word.
    pub fn least(&self) -> &Word {
        &self.words[0]
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Whether `word` (any linearization, any rotation when cyclic) lies in
    /// the reduced class.
    pub fn contains(&self, word: &Word) -> bool {
        if word.signature() != self.sig || word.len() != self.length {
            return false;
        }
        let key = if self.cyclic {
            cyclic_key(self.sig, word.letters())
        } else {
            normal_form(self.sig, word.letters())
        };
        self.words
            .binary_search_by(|w| w.letters().cmp(&key[..]))
            .is_ok()
    }

    pub fn intersects(&self, other: &Reduction) -> bool {
        self.sig == other.sig
            && self.length == other.length
            && self
                .words
                .iter()
                .any(|w| other.words.binary_search(w).is_ok())
    }
}

/// Length of a minimal representative, or only an upper bound when the
/// search budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Complexity {
    Exact(usize),
    UpperBound(usize),
}

impl Complexity {
    pub fn value(&self) -> usize {
        match *self {
            Complexity::Exact(v) | Complexity::UpperBound(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Complexity::Exact(_))
    }
}

struct Exhausted {
    best: usize,
}

/// Search strategy shared by linear and cyclic reduction.
trait Space {
    fn key(&self, letters: &[Multiindex]) -> Vec<Multiindex>;
    fn shorten(&self, letters: &[Multiindex]) -> Option<Vec<Multiindex>>;
    fn moves(&self, letters: &[Multiindex]) -> Vec<Vec<Multiindex>>;
}

struct Linear(GroupSignature);

impl Space for Linear {
    fn key(&self, letters: &[Multiindex]) -> Vec<Multiindex> {
        normal_form(self.0, letters)
    }

    fn shorten(&self, letters: &[Multiindex]) -> Option<Vec<Multiindex>> {
        cancel_once(self.0, letters).map(|x| cancel_all(self.0, &x))
    }

    fn moves(&self, letters: &[Multiindex]) -> Vec<Vec<Multiindex>> {
        tetrahedron_moves(self.0, letters)
    }
}

struct Cyclic(GroupSignature);

fn cyclic_key(sig: GroupSignature, letters: &[Multiindex]) -> Vec<Multiindex> {
    (0..letters.len().max(1))
        .map(|r| normal_form(sig, &rotate(letters, r)))
        .min()
        .unwrap_or_default()
}

impl Space for Cyclic {
    fn key(&self, letters: &[Multiindex]) -> Vec<Multiindex> {
        cyclic_key(self.0, letters)
    }

    fn shorten(&self, letters: &[Multiindex]) -> Option<Vec<Multiindex>> {
        (0..letters.len()).find_map(|r| {
            cancel_once(self.0, &rotate(letters, r)).map(|x| cancel_all(self.0, &x))
        })
    }

    fn moves(&self, letters: &[Multiindex]) -> Vec<Vec<Multiindex>> {
        (0..letters.len())
            .flat_map(|r| tetrahedron_moves(self.0, &normal_form(self.0, &rotate(letters, r))))
            .collect()
    }
}

fn search(
    space: &impl Space,
    start: &[Multiindex],
    budget: usize,
) -> std::result::Result<(usize, Vec<Vec<Multiindex>>), Exhausted> {
    let mut current = space.key(start);
    let mut visited = 0usize;
    'restart: loop {
        if let Some(shorter) = space.shorten(&current) {
            current = space.key(&shorter);
            continue;
        }
        let mut seen: HashSet<Vec<Multiindex>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(current.clone());
        queue.push_back(current.clone());
        while let Some(state) = queue.pop_front() {
            if let Some(shorter) = space.shorten(&state) {
                current = space.key(&shorter);
                continue 'restart;
            }
            for next in space.moves(&state) {
                let next = space.key(&next);
                if seen.contains(&next) {
                    continue;
                }
                visited += 1;
                if visited > budget {
                    return Err(Exhausted {
                        best: current.len(),
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
        let mut words: Vec<_> = seen.into_iter().collect();
        words.sort();
        return Ok((current.len(), words));
    }
}

fn finish(sig: GroupSignature, length: usize, words: Vec<Vec<Multiindex>>, cyclic: bool) -> Reduction {
    Reduction {
        sig,
        length,
        words: words
            .into_iter()
            .map(|l| Word::from_parts(sig, l))
            .collect(),
        cyclic,
    }
}

pub fn reduce(word: &Word) -> Result<Reduction> {
    reduce_with(word, DEFAULT_BUDGET)
}

/// Reduces `word` visiting at most `budget` states.
pub fn reduce_with(word: &Word, budget: usize) -> Result<Reduction> {
    let sig = word.signature();
    match search(&Linear(sig), word.letters(), budget) {
        Ok((length, words)) => Ok(finish(sig, length, words, false)),
        Err(_) => Err(Error::BudgetExhausted { budget }),
    }
}

/// Reduction of a cyclic word: rotations are free moves, so cancellations
/// may wrap around. Representatives are least over rotations as well.
pub fn cyclic_reduce(word: &Word, budget: usize) -> Result<Reduction> {
    let sig = word.signature();
    match search(&Cyclic(sig), word.letters(), budget) {
        Ok((length, words)) => Ok(finish(sig, length, words, true)),
        Err(_) => Err(Error::BudgetExhausted { budget }),
    }
}

/// Length of a minimal representative reachable without lengthening.
pub fn complexity(word: &Word, budget: usize) -> Complexity {
    match search(&Linear(word.signature()), word.letters(), budget) {
        Ok((length, _)) => Complexity::Exact(length),
        Err(Exhausted { best }) => Complexity::UpperBound(best),
    }
}

/// Cross-check for the no-lengthening strategy: the shortest length reached
/// by reducing `word` after inserting one `a_m a_m` anywhere (or none).
/// Intended for short words only; cost grows with `len * C(n, k)`.
pub fn insertion_probe(word: &Word, budget: usize) -> Result<usize> {
    let sig = word.signature();
    let mut best = reduce_with(word, budget)?.length();
    for m in enumerate_generators(sig) {
        for pos in 0..=word.len() {
            let mut letters = word.letters().to_vec();
            letters.splice(pos..pos, [m, m]);
            let len = reduce_with(&Word::from_parts(sig, letters), budget)?.length();
            best = best.min(len);
        }
    }
    Ok(best)
}
