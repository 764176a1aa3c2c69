use std::ffi::{CStr, CString};
use std::ptr;

use freebraid_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    fb_string_free(p);
    s
}

unsafe fn word(text: &str, n: usize, k: usize) -> *mut FbWord {
    let mut out = ptr::null_mut();
    assert_eq!(fb_word_parse(c(text).as_ptr(), n, k, &mut out), FbStatus::Ok);
    out
}

#[test]
fn reduce_through_the_abi() {
    unsafe {
        let w = word("(1 2) (1 3) (2 3) (1 2) (1 3) (2 3)", 3, 2);
        assert_eq!(fb_word_length(w), 6);
        let mut r = ptr::null_mut();
        assert_eq!(fb_word_reduce(w, 1000, &mut r), FbStatus::Ok);
        assert_eq!(fb_word_length(r), 0);
        let mut s = ptr::null_mut();
        assert_eq!(fb_word_to_string(r, &mut s), FbStatus::Ok);
        assert_eq!(take_string(s), "n=3 k=2: e");
        let (mut len, mut exact) = (99usize, false);
        assert_eq!(fb_word_complexity(w, 1000, &mut len, &mut exact), FbStatus::Ok);
        assert_eq!((len, exact), (0, true));
        fb_word_free(r);
        fb_word_free(w);
    }
}

#[test]
fn header_supplies_the_signature() {
    unsafe {
        let w = word("n=4 k=3: (1 2 3)", 0, 0);
        let mut s = ptr::null_mut();
        fb_word_to_string(w, &mut s);
        assert_eq!(take_string(s), "n=4 k=3: (1 2 3)");
        fb_word_free(w);
    }
}

#[test]
fn verdicts() {
    unsafe {
        let a = word("(1 2) (3 4)", 4, 2);
        let b = word("(3 4) (1 2)", 4, 2);
        let mut v = FbVerdict::Unknown;
        assert_eq!(fb_are_equal(a, b, 1000, &mut v), FbStatus::Ok);
        assert_eq!(v, FbVerdict::Equal);
        let x = word("(1 2)", 3, 2);
        let y = word("(1 3)", 3, 2);
        assert_eq!(fb_are_equal(x, y, 1000, &mut v), FbStatus::Ok);
        assert_eq!(v, FbVerdict::Distinct);
        assert_eq!(fb_are_conjugate(x, y, 1000, &mut v), FbStatus::Ok);
        assert_eq!(v, FbVerdict::Distinct);
        assert_eq!(fb_are_equal(a, x, 1000, &mut v), FbStatus::InvalidInput);
        for p in [a, b, x, y] {
            fb_word_free(p);
        }
    }
}

#[test]
fn errors_carry_messages() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(fb_word_parse(c("(1 2").as_ptr(), 3, 2, &mut out), FbStatus::Parse);
        assert!(out.is_null());
        let msg = CStr::from_ptr(fb_last_error()).to_str().unwrap();
        assert!(msg.contains("parse"), "{msg}");
        assert_eq!(fb_word_parse(ptr::null(), 3, 2, &mut out), FbStatus::NullPointer);
        assert_eq!(fb_word_parse(c("e").as_ptr(), 3, 9, &mut out), FbStatus::InvalidInput);
        let bad = [0xffu8, 0];
        assert_eq!(
            fb_word_parse(bad.as_ptr().cast(), 3, 2, &mut out),
            FbStatus::InvalidUtf8
        );
        let mut n = 0usize;
        assert_eq!(fb_relation_count(4, 3, &mut n), FbStatus::Ok);
        assert_eq!(n, 12);
        assert_eq!(CStr::from_ptr(fb_last_error()).to_bytes().len(), 0);
        fb_word_free(ptr::null_mut());
        fb_braid_free(ptr::null_mut());
        fb_string_free(ptr::null_mut());
    }
}

#[test]
fn braids() {
    unsafe {
        let mut b = ptr::null_mut();
        assert_eq!(fb_braid_parse(c("s1 s1^-1").as_ptr(), 3, &mut b), FbStatus::Ok);
        let mut w = ptr::null_mut();
        assert_eq!(fb_braid_invariant(b, 3, 0, &mut w), FbStatus::Ok);
        let e = word("e", 3, 3);
        let mut v = FbVerdict::Unknown;
        assert_eq!(fb_are_equal(w, e, 1000, &mut v), FbStatus::Ok);
        assert_eq!(v, FbVerdict::Equal);
        let mut json = ptr::null_mut();
        assert_eq!(fb_braid_certificate(b, 1000, &mut json), FbStatus::Ok);
        let json = take_string(json);
        assert!(json.contains("\"lower_bound\":0") && json.contains("\"ok\":true"), "{json}");
        assert_eq!(fb_braid_invariant(b, 5, 0, &mut w), FbStatus::InvalidInput);
        let mut bad = ptr::null_mut();
        assert_eq!(fb_braid_parse(c("s7").as_ptr(), 3, &mut bad), FbStatus::Parse);
        fb_word_free(w);
        fb_word_free(e);
        fb_braid_free(b);
    }
}

#[test]
fn svg() {
    unsafe {
        let w = word("(2 3 4) (1 2 3)", 4, 3);
        let mut s = ptr::null_mut();
        assert_eq!(fb_word_svg(w, &mut s), FbStatus::Ok);
        let svg = take_string(s);
        assert_eq!(svg.matches("class=\"generator\"").count(), 2);
        fb_word_free(w);
    }
}
