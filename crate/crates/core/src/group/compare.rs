//! Word and conjugacy problems.
//!
//! For k = 2 the least minimal word is a complete invariant, so both
//! problems are decided. For k >= 3 a positive answer comes from a
//! reduction reaching the identity (or meeting closures) and a negative one
//! from the parity homomorphism; anything else is reported as unknown.

use super::reduce::{cyclic_reduce, reduce_with, DEFAULT_BUDGET};
use super::{parity_vector, CyclicWord, GroupSignature, Word};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equal,
    Distinct,
    Unknown,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Equal => "equal",
            Verdict::Distinct => "distinct",
            Verdict::Unknown => "unknown",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

fn require_k2(sig: GroupSignature) -> Result<()> {
    if sig.k() != 2 {
        return Err(Error::UnsupportedSignature(format!(
            "{sig}: canonical forms need k = 2"
        )));
    }
    Ok(())
}

fn same_signature(a: GroupSignature, b: GroupSignature) -> Result<()> {
    if a != b {
        return Err(Error::SignatureMismatch(a.to_string(), b.to_string()));
    }
    Ok(())
}

/// Least minimal word for k = 2.
pub fn canonical_form(word: &Word) -> Result<Word> {
    canonical_form_with(word, DEFAULT_BUDGET)
}

pub fn canonical_form_with(word: &Word, budget: usize) -> Result<Word> {
    require_k2(word.signature())?;
    Ok(reduce_with(word, budget)?.least().clone())
}

/// Least rotation of the least minimal cyclic word, for k = 2.
pub fn cyclic_canonical_form(word: &CyclicWord) -> Result<CyclicWord> {
    cyclic_canonical_form_with(word, DEFAULT_BUDGET)
}

pub fn cyclic_canonical_form_with(word: &CyclicWord, budget: usize) -> Result<CyclicWord> {
    require_k2(word.signature())?;
    let r = cyclic_reduce(word.word(), budget)?;
    Ok(CyclicWord::new(r.least().clone()))
}

pub fn are_equal(a: &Word, b: &Word) -> Result<Verdict> {
    are_equal_with(a, b, DEFAULT_BUDGET)
}

/// Decides `a = b` in `G_n^k`.
///
/// A common prefix and suffix are cancelled first (valid in any group). For
/// k = 2 budget exhaustion is an error; for k >= 3 it yields `Unknown`.
pub fn are_equal_with(a: &Word, b: &Word, budget: usize) -> Result<Verdict> {
    let sig = a.signature();
    same_signature(sig, b.signature())?;
    if parity_vector(a) != parity_vector(b) {
        return Ok(Verdict::Distinct);
    }
    let (x, y) = strip_common(a, b);
    if x == y {
        return Ok(Verdict::Equal);
    }
    if sig.k() == 2 {
        let cx = canonical_form_with(&x, budget)?;
        let cy = canonical_form_with(&y, budget)?;
        return Ok(if cx == cy {
            Verdict::Equal
        } else {
            Verdict::Distinct
        });
    }
    let quotient = x.concat(&y.inverse())?;
    match reduce_with(&quotient, budget) {
        Ok(r) if r.is_identity() => return Ok(Verdict::Equal),
        Ok(_) => {}
        Err(Error::BudgetExhausted { .. }) => return Ok(Verdict::Unknown),
        Err(e) => return Err(e),
    }
    match (reduce_with(&x, budget), reduce_with(&y, budget)) {
        (Ok(rx), Ok(ry)) if rx.intersects(&ry) => Ok(Verdict::Equal),
        (Ok(_), Ok(_)) | (Err(Error::BudgetExhausted { .. }), _) | (_, Err(Error::BudgetExhausted { .. })) => {
            Ok(Verdict::Unknown)
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

fn strip_common(a: &Word, b: &Word) -> (Word, Word) {
    let (la, lb) = (a.letters(), b.letters());
    let prefix = la.iter().zip(lb).take_while(|(x, y)| x == y).count();
    let (ra, rb) = (&la[prefix..], &lb[prefix..]);
    let suffix = ra
        .iter()
        .rev()
        .zip(rb.iter().rev())
        .take_while(|(x, y)| x == y)
        .count();
    (
        Word::from_parts(a.signature(), ra[..ra.len() - suffix].to_vec()),
        Word::from_parts(b.signature(), rb[..rb.len() - suffix].to_vec()),
    )
}

pub fn are_conjugate(a: &CyclicWord, b: &CyclicWord) -> Result<Verdict> {
    are_conjugate_with(a, b, DEFAULT_BUDGET)
}

/// Decides whether two cyclic words represent conjugate elements.
pub fn are_conjugate_with(a: &CyclicWord, b: &CyclicWord, budget: usize) -> Result<Verdict> {
    let sig = a.signature();
    same_signature(sig, b.signature())?;
    if parity_vector(a.word()) != parity_vector(b.word()) {
        return Ok(Verdict::Distinct);
    }
    if a == b {
        return Ok(Verdict::Equal);
    }
    let ra = cyclic_reduce(a.word(), budget);
    let rb = cyclic_reduce(b.word(), budget);
    match (ra, rb) {
        (Ok(ra), Ok(rb)) => {
            if ra.intersects(&rb) {
                Ok(Verdict::Equal)
            } else if sig.k() == 2 {
                Ok(Verdict::Distinct)
            } else {
                Ok(Verdict::Unknown)
            }
        }
        (Err(Error::BudgetExhausted { budget }), _) | (_, Err(Error::BudgetExhausted { budget })) => {
            if sig.k() == 2 {
                Err(Error::BudgetExhausted { budget })
            } else {
                Ok(Verdict::Unknown)
            }
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(n: usize, k: usize) -> GroupSignature {
        GroupSignature::new(n, k).unwrap()
    }

    fn w(s: GroupSignature, t: &[&[usize]]) -> Word {
        Word::from_tuples(s, t).unwrap()
    }

    fn cw(s: GroupSignature, t: &[&[usize]]) -> CyclicWord {
        CyclicWord::new(w(s, t))
    }

    #[test]
    fn canonical_form_examples() {
        let s = sig(4, 2);
        assert_eq!(
            canonical_form(&w(s, &[&[2, 4], &[1, 3]])).unwrap(),
            w(s, &[&[1, 3], &[2, 4]])
        );
        let s = sig(3, 2);
        assert!(canonical_form(&w(
            s,
            &[&[1, 2], &[1, 3], &[2, 3], &[1, 2], &[1, 3], &[2, 3]]
        ))
        .unwrap()
        .is_empty());
        assert_eq!(
            canonical_form(&w(s, &[&[1, 2], &[1, 3]])).unwrap(),
            w(s, &[&[1, 2], &[1, 3]])
        );
        assert!(matches!(
            canonical_form(&Word::identity(sig(4, 3))),
            Err(Error::UnsupportedSignature(_))
        ));
    }

    #[test]
    fn equality_examples() {
        let s = sig(4, 2);
        assert_eq!(
            are_equal(&w(s, &[&[1, 2], &[3, 4]]), &w(s, &[&[3, 4], &[1, 2]])).unwrap(),
            Verdict::Equal
        );
        let s = sig(3, 2);
        assert_eq!(
            are_equal(&w(s, &[&[1, 2]]), &w(s, &[&[1, 3]])).unwrap(),
            Verdict::Distinct
        );
        let s = sig(4, 3);
        let l = w(s, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(are_equal(&l, &l.inverse()).unwrap(), Verdict::Equal);
        assert!(are_equal(&l, &Word::identity(sig(4, 2))).is_err());
    }

    #[test]
    fn higher_k_same_parity_different_length_is_not_distinct() {
        let s = sig(4, 3);
        let a = w(s, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 3], &[1, 2, 4]]);
        let v = are_equal(&a, &Word::identity(s)).unwrap();
        assert_ne!(v, Verdict::Equal);
        assert_ne!(v, Verdict::Distinct);
    }

    #[test]
    fn cyclic_canonical_examples() {
        let s = sig(3, 2);
        assert_eq!(
            cyclic_canonical_form(&cw(s, &[&[1, 2], &[1, 3], &[1, 2]])).unwrap(),
            cw(s, &[&[1, 3]])
        );
        assert!(cyclic_canonical_form(&CyclicWord::new(Word::identity(s)))
            .unwrap()
            .is_empty());
        let s = sig(4, 2);
        assert_eq!(
            cyclic_canonical_form(&cw(s, &[&[1, 2], &[3, 4]]))
                .unwrap()
                .word()
                .letters(),
            cyclic_canonical_form(&cw(s, &[&[3, 4], &[1, 2]]))
                .unwrap()
                .word()
                .letters()
        );
    }

    #[test]
    fn conjugacy_examples() {
        let s = sig(3, 2);
        assert_eq!(
            are_conjugate(&cw(s, &[&[1, 2], &[1, 3]]), &cw(s, &[&[1, 3], &[1, 2]])).unwrap(),
            Verdict::Equal
        );
        assert_eq!(
            are_conjugate(&cw(s, &[&[1, 2]]), &cw(s, &[&[1, 3]])).unwrap(),
            Verdict::Distinct
        );
        // Conjugating by a12 in G_3^2: a12 (a13 a23) a12.
        assert_eq!(
            are_conjugate(
                &cw(s, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2]]),
                &cw(s, &[&[1, 3], &[2, 3]])
            )
            .unwrap(),
            Verdict::Equal
        );
    }

    #[test]
    fn conjugacy_k3_tetrahedron_orderings() {
        // Both are orderings of the four triples of {1,2,3,4}; the verdict is
        // whatever the two cyclic closures say, but it can never be
        // "distinct" since the parity vectors agree.
        let s = sig(4, 3);
        let a = cw(s, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let b = cw(s, &[&[1, 2, 3], &[2, 3, 4], &[1, 3, 4], &[1, 2, 4]]);
        let ra = cyclic_reduce(a.word(), DEFAULT_BUDGET).unwrap();
        let rb = cyclic_reduce(b.word(), DEFAULT_BUDGET).unwrap();
        let expected = if ra.intersects(&rb) {
            Verdict::Equal
        } else {
            Verdict::Unknown
        };
        assert_eq!(are_conjugate(&a, &b).unwrap(), expected);
    }
}
