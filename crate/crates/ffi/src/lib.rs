//! C interface to `freebraid`.
//!
//! Objects cross the boundary as opaque pointers (`FbWord`, `FbBraid`) that
//! the caller releases with the matching `*_free` function. Every fallible
//! call returns an `FbStatus`; on failure `fb_last_error` describes the
//! problem until the next call on the same thread. Strings returned by the
//! library are NUL-terminated and released with `fb_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use freebraid::braid::{self, BraidWord, InvariantOptions};
use freebraid::dynamics::Detector;
use freebraid::group::{
    self, are_conjugate_with, are_equal_with, enumerate_tetrahedron_relations, CyclicWord,
    GroupSignature, Verdict, Word,
};
use freebraid::{picture, Error};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    BudgetExhausted = 4,
    InvalidInput = 5,
    NotPleasant = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FbVerdict {
    Equal = 0,
    Distinct = 1,
    Unknown = 2,
}

/// A word in a free k-braid group.
pub struct FbWord(Word);

/// A classical braid word.
pub struct FbBraid(BraidWord);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> FbStatus {
    match e {
        Error::Parse(_) => FbStatus::Parse,
        Error::BudgetExhausted { .. } => FbStatus::BudgetExhausted,
        Error::Degenerate(_) | Error::NotPleasant(_) | Error::PleasantnessUnobtainable { .. } => {
            FbStatus::NotPleasant
        }
        _ => FbStatus::InvalidInput,
    }
}

struct Fail(FbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> FbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            FbStatus::Ok
        }
        Ok(Err(Fail(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal error");
            FbStatus::Internal
        }
    }
}

fn null() -> Fail {
    Fail(FbStatus::NullPointer, "null pointer argument".into())
}

unsafe fn c_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(FbStatus::InvalidUtf8, "input is not UTF-8".into()))
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap_or_default().into_raw()
}

fn verdict(v: Verdict) -> FbVerdict {
    match v {
        Verdict::Equal => FbVerdict::Equal,
        Verdict::Distinct => FbVerdict::Distinct,
        Verdict::Unknown => FbVerdict::Unknown,
    }
}

/// Message for the last failed call on this thread; empty after success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn fb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word such as `"(1 2 3) (1 2 4)"` or `"n=4 k=3: (1 2 3)"`. Pass
/// `n = k = 0` to take the signature from the header.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_parse(
    text: *const c_char,
    n: usize,
    k: usize,
    out: *mut *mut FbWord,
) -> FbStatus {
    guard(|| {
        let sig = if n == 0 && k == 0 {
            None
        } else {
            Some(GroupSignature::new(n, k)?)
        };
        let w = group::parse_word(c_str(text)?, sig)?;
        store(out, Box::into_raw(Box::new(FbWord(w))))
    })
}

/// # Safety
/// `word` must come from this library and not have been freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn fb_word_free(word: *mut FbWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Text form with signature header, e.g. `"n=4 k=3: (1 2 3)"`.
///
/// # Safety
/// `word` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_to_string(word: *const FbWord, out: *mut *mut c_char) -> FbStatus {
    guard(|| {
        let w = deref(word)?;
        store(out, into_c_string(w.0.to_text_with_header()))
    })
}

/// # Safety
/// `word` must be a live handle or null (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn fb_word_length(word: *const FbWord) -> usize {
    word.as_ref().map_or(0, |w| w.0.len())
}

/// Least minimal representative reachable without lengthening the word.
///
/// # Safety
/// `word` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_reduce(
    word: *const FbWord,
    budget: usize,
    out: *mut *mut FbWord,
) -> FbStatus {
    guard(|| {
        let w = deref(word)?;
        let r = group::reduce_with(&w.0, budget)?;
        store(out, Box::into_raw(Box::new(FbWord(r.least().clone()))))
    })
}

/// Length of the shortest representative found; `exact` is false when the
/// budget ran out first.
///
/// # Safety
/// `word` must be a live handle; `length` and `exact` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_complexity(
    word: *const FbWord,
    budget: usize,
    length: *mut usize,
    exact: *mut bool,
) -> FbStatus {
    guard(|| {
        let c = group::complexity(&deref(word)?.0, budget);
        store(length, c.value())?;
        store(exact, c.is_exact())
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_are_equal(
    a: *const FbWord,
    b: *const FbWord,
    budget: usize,
    out: *mut FbVerdict,
) -> FbStatus {
    guard(|| {
        let v = are_equal_with(&deref(a)?.0, &deref(b)?.0, budget)?;
        store(out, verdict(v))
    })
}

/// # Safety
/// `a`, `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_are_conjugate(
    a: *const FbWord,
    b: *const FbWord,
    budget: usize,
    out: *mut FbVerdict,
) -> FbStatus {
    guard(|| {
        let x = CyclicWord::new(deref(a)?.0.clone());
        let y = CyclicWord::new(deref(b)?.0.clone());
        store(out, verdict(are_conjugate_with(&x, &y, budget)?))
    })
}

/// Number of tetrahedron relations of `G_n^k`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fb_relation_count(n: usize, k: usize, out: *mut usize) -> FbStatus {
    guard(|| {
        let sig = GroupSignature::new(n, k)?;
        store(out, enumerate_tetrahedron_relations(sig).len())
    })
}

/// SVG drawing of the word.
///
/// # Safety
/// `word` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_word_svg(word: *const FbWord, out: *mut *mut c_char) -> FbStatus {
    guard(|| {
        let d = picture::layout(&deref(word)?.0);
        store(out, into_c_string(picture::render_svg(&d)))
    })
}

/// Parses an Artin braid word such as `"s1 s2^-1"` on `n` strands.
///
/// # Safety
/// `text` must be a valid C string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_braid_parse(
    text: *const c_char,
    n: usize,
    out: *mut *mut FbBraid,
) -> FbStatus {
    guard(|| {
        let b = braid::parse_artin(c_str(text)?, n)?;
        store(out, Box::into_raw(Box::new(FbBraid(b))))
    })
}

/// # Safety
/// `b` must come from this library and not have been freed. Null is
/// ignored.
#[no_mangle]
pub unsafe extern "C" fn fb_braid_free(b: *mut FbBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Invariant of the braid in `G_n^3` (`k = 3`, collinearity) or `G_n^4`
/// (`k = 4`, concyclicity).
///
/// # Safety
/// `b` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_braid_invariant(
    b: *const FbBraid,
    k: usize,
    seed: u64,
    out: *mut *mut FbWord,
) -> FbStatus {
    guard(|| {
        let detector = match k {
            3 => Detector::Collinearity,
            4 => Detector::Concyclicity,
            _ => return Err(Fail(FbStatus::InvalidInput, format!("k={k}: use 3 or 4"))),
        };
        let options = InvariantOptions {
            seed,
            ..InvariantOptions::default()
        };
        let w = braid::invariant_with(&deref(b)?.0, detector, &options)?;
        store(out, Box::into_raw(Box::new(FbWord(w))))
    })
}

/// Trisecant lower-bound certificate as JSON.
///
/// # Safety
/// `b` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fb_braid_certificate(
    b: *const FbBraid,
    budget: usize,
    out: *mut *mut c_char,
) -> FbStatus {
    guard(|| {
        let cert = braid::trisecant_certificate_with(&deref(b)?.0, &InvariantOptions::default(), budget)?;
        store(out, into_c_string(cert.to_json()))
    })
}
