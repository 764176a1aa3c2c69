use std::fmt;

use super::{GroupSignature, Multiindex, Word};

/// One defining relation `left = right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: Word,
    pub right: Word,
}

impl fmt::Display for Relation {
    /// Two-column export: left word, TAB, right word.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}", self.left, self.right)
    }
}

/// Calls `visit` on every `size`-subset of `{1..n}` (as an increasing
/// vector) in lexicographic order.
fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize])) {
    if size > n {
        return;
    }
    let mut current: Vec<usize> = (1..=size).collect();
    loop {
        visit(&current);
        // Advance to the next combination.
        let mut i = size;
        while i > 0 && current[i - 1] == n - size + i {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        current[i - 1] += 1;
        for j in i..size {
            current[j] = current[j - 1] + 1;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All `C(n, k)` generators in lexicographic order.
pub fn enumerate_generators(sig: GroupSignature) -> Vec<Multiindex> {
    let mut out = Vec::new();
    for_each_subset(sig.n(), sig.k(), |s| {
        out.push(Multiindex::new(s, sig).expect("subset is valid"));
    });
    out
}

/// The tetrahedron relations: for every (k+1)-subset `U` (lexicographic) and
/// every ordering of `U` taken up to reversal (lexicographic, keeping the
/// ordering that is smaller than its reverse), the pair of words
/// `a_{U\u1} ... a_{U\u_{k+1}}` and its reversal.
///
/// There are `(k+1)! C(n, k+1) / 2` of them; none when `n = k`.
pub fn enumerate_tetrahedron_relations(sig: GroupSignature) -> Vec<Relation> {
    let mut out = Vec::new();
    for_each_subset(sig.n(), sig.k() + 1, |u| {
        let full: u64 = u.iter().fold(0, |acc, &i| acc | 1u64 << (i - 1));
        let mut order = u.to_vec();
        loop {
            let reversed: Vec<usize> = order.iter().rev().copied().collect();
            if order < reversed {
                let left: Vec<Multiindex> = order
                    .iter()
                    .map(|&drop| Multiindex::from_mask(full & !(1u64 << (drop - 1))))
                    .collect();
                let right: Vec<Multiindex> = left.iter().rev().copied().collect();
                out.push(Relation {
                    left: Word::from_parts(sig, left),
                    right: Word::from_parts(sig, right),
                });
            }
            if !next_permutation(&mut order) {
                break;
            }
        }
    });
    out
}
