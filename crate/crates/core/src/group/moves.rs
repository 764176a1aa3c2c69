//! Single relation moves on words.

use std::collections::HashSet;

use super::{GroupSignature, Multiindex, Word};
use crate::error::{Error, Result};

/// Deletes an adjacent pair `a_m a_m` starting at `position`.
pub fn apply_involution(word: &Word, position: usize) -> Result<Word> {
    let l = word.letters();
    if position + 1 >= l.len() || l[position] != l[position + 1] {
        return Err(Error::MoveNotApplicable {
            relation: "involution",
            position,
        });
    }
    let mut letters = l.to_vec();
    letters.drain(position..position + 2);
    Ok(Word::from_parts(word.signature(), letters))
}

/// Swaps two adjacent letters whose multiindices overlap in fewer than
/// `k - 1` indices.
pub fn apply_far_commutativity(word: &Word, position: usize) -> Result<Word> {
    let l = word.letters();
    if position + 1 >= l.len() || !word.signature().commute(l[position], l[position + 1]) {
        return Err(Error::MoveNotApplicable {
            relation: "far commutativity",
            position,
        });
    }
    let mut letters = l.to_vec();
    letters.swap(position, position + 1);
    Ok(Word::from_parts(word.signature(), letters))
}

/// True when `block` consists of the `k+1` distinct k-subsets of a single
/// (k+1)-set, in any order.
pub(crate) fn is_tetrahedron_block(sig: GroupSignature, block: &[Multiindex]) -> bool {
    if block.len() != sig.k() + 1 {
        return false;
    }
    let union = block.iter().fold(0u64, |acc, m| acc | m.mask());
    if union.count_ones() as usize != sig.k() + 1 {
        return false;
    }
    // k+1 distinct k-subsets of a (k+1)-set are all of them.
    let mut masks: Vec<u64> = block.iter().map(|m| m.mask()).collect();
    masks.sort_unstable();
    masks.dedup();
    masks.len() == block.len()
}

/// Reverses the block of `k+1` letters starting at `position` when they are
/// exactly the k-subsets of some (k+1)-set.
pub fn apply_tetrahedron(word: &Word, position: usize) -> Result<Word> {
    let sig = word.signature();
    let l = word.letters();
    let end = position + sig.k() + 1;
    if end > l.len() || !is_tetrahedron_block(sig, &l[position..end]) {
        return Err(Error::MoveNotApplicable {
            relation: "tetrahedron",
            position,
        });
    }
    let mut letters = l.to_vec();
    letters[position..end].reverse();
    Ok(Word::from_parts(sig, letters))
}

/// All words one length-preserving move away, in order of position with
/// far-commutativity moves listed before tetrahedron moves at each
/// position. Duplicates are dropped, keeping the first occurrence.
pub fn neighbors(word: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for pos in 0..word.len() {
        for next in [
            apply_far_commutativity(word, pos),
            apply_tetrahedron(word, pos),
        ]
        .into_iter()
        .flatten()
        {
            if next != *word && seen.insert(next.clone()) {
                out.push(next);
            }
        }
    }
    out
}
