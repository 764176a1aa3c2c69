//! Words modulo far commutativity.
//!
//! Far commutativity makes letters into a partially commutative (trace)
//! monoid. Searching over commutation classes instead of individual words
//! keeps the length-preserving closure small: each class is represented by
//! its lexicographically least linearization.

use super::{GroupSignature, Multiindex};

/// Lexicographically least word in the commutation class of `letters`.
///
/// Greedy: repeatedly emit the least letter among those with no earlier,
/// non-commuting letter still pending.
pub(crate) fn normal_form(sig: GroupSignature, letters: &[Multiindex]) -> Vec<Multiindex> {
    let len = letters.len();
    if len < 2 {
        return letters.to_vec();
    }
    // blockers[p] = number of pending earlier positions that do not commute with p.
    let mut blockers = vec![0usize; len];
    for p in 0..len {
        for q in 0..p {
            if !sig.commute(letters[q], letters[p]) {
                blockers[p] += 1;
            }
        }
    }
    let mut done = vec![false; len];
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let mut best: Option<usize> = None;
        for p in 0..len {
            if !done[p] && blockers[p] == 0 && best.is_none_or(|b| letters[p] < letters[b]) {
                best = Some(p);
            }
        }
        let p = best.expect("a trace always has a minimal element");
        done[p] = true;
        out.push(letters[p]);
        for q in p + 1..len {
            if !done[q] && !sig.commute(letters[p], letters[q]) {
                blockers[q] -= 1;
            }
        }
    }
    out
}

/// Finds an equal pair that can be made adjacent by far commutativity and
/// returns the word with both removed.
pub(crate) fn cancel_once(sig: GroupSignature, letters: &[Multiindex]) -> Option<Vec<Multiindex>> {
    for i in 0..letters.len() {
        let m = letters[i];
        for j in i + 1..letters.len() {
            if letters[j] == m {
                let mut out = letters.to_vec();
                out.remove(j);
                out.remove(i);
                return Some(out);
            }
            if !sig.commute(m, letters[j]) {
                break;
            }
        }
    }
    None
}

/// Cancels pairs until none remain. In the right-angled Coxeter group given
/// by the involution and far-commutativity relations alone this yields the
/// unique reduced trace, so the order of cancellation does not matter.
pub(crate) fn cancel_all(sig: GroupSignature, letters: &[Multiindex]) -> Vec<Multiindex> {
    let mut current = letters.to_vec();
    while let Some(next) = cancel_once(sig, &current) {
        current = next;
    }
    current
}

/// Every commutation class reachable from `letters` by one tetrahedron move
/// applied to some linearization. Results are not normalized.
///
/// A tetrahedron block must be a convex chain in the dependency order: its
/// letters pairwise fail to commute, and nothing outside the block may sit
/// between two of its letters. Starting from each first letter and each
/// possible extra index the scan below takes the first occurrence of every
/// remaining subset; skipping an occurrence would put a dependent letter
/// inside the block.
pub(crate) fn tetrahedron_moves(sig: GroupSignature, letters: &[Multiindex]) -> Vec<Vec<Multiindex>> {
    let k = sig.k();
    let n = sig.n();
    let mut out = Vec::new();
    let mut chain: Vec<usize> = Vec::with_capacity(k + 1);
    let mut above: Vec<usize> = Vec::new();
    for start in 0..letters.len() {
        let first = letters[start].mask();
        for extra in 0..n {
            let bit = 1u64 << extra;
            if first & bit != 0 {
                continue;
            }
            let full = first | bit;
            // Remaining subsets are `full` minus one element of `first`.
            let mut needed: u64 = first;
            chain.clear();
            chain.push(start);
            above.clear();
            let mut ok = false;
            for p in start + 1..letters.len() {
                let l = letters[p];
                let lm = l.mask();
                let is_needed = lm & !full == 0 && {
                    let dropped = full & !lm;
                    dropped.count_ones() == 1 && needed & dropped != 0
                };
                let blocked = above.iter().any(|&q| !sig.commute(letters[q], l));
                if is_needed {
                    if blocked {
                        break;
                    }
                    needed &= !(full & !lm);
                    chain.push(p);
                    if needed == 0 {
                        ok = true;
                        break;
                    }
                } else if blocked || chain.iter().any(|&q| !sig.commute(letters[q], l)) {
                    above.push(p);
                }
            }
            if !ok {
                continue;
            }
            let last = *chain.last().unwrap();
            let mut next = Vec::with_capacity(letters.len());
            next.extend_from_slice(&letters[..start]);
            next.extend(
                (start + 1..last)
                    .filter(|p| !chain.contains(p) && !above.contains(p))
                    .map(|p| letters[p]),
            );
            next.extend(chain.iter().rev().map(|&p| letters[p]));
            next.extend(above.iter().map(|&p| letters[p]));
            next.extend_from_slice(&letters[last + 1..]);
            out.push(next);
        }
    }
    out
}
