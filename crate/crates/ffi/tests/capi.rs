use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use dyck_query_ffi::*;

fn parse(text: &str) -> *mut DqWord {
    let c = CString::new(text).unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { dq_word_parse(c.as_ptr(), &mut w) }, DqStatus::Ok);
    w
}

fn last_error() -> String {
    let p = dq_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn parse_len_and_free() {
    let w = parse("(())");
    assert_eq!(unsafe { dq_word_len(w) }, 4);
    unsafe { dq_word_free(w) };
    unsafe { dq_word_free(ptr::null_mut()) };
    assert_eq!(unsafe { dq_word_len(ptr::null()) }, 0);
}

#[test]
fn invalid_word_sets_error() {
    let c = CString::new("(x)").unwrap();
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { dq_word_parse(c.as_ptr(), &mut w) }, DqStatus::InvalidWord);
    assert!(w.is_null());
    assert!(!last_error().is_empty());
}

#[test]
fn null_pointers_are_reported() {
    let mut w = ptr::null_mut();
    assert_eq!(unsafe { dq_word_parse(ptr::null(), &mut w) }, DqStatus::NullPointer);
    let mut out = false;
    assert_eq!(
        unsafe { dq_classical_dyck(ptr::null(), 1, &mut out) },
        DqStatus::NullPointer
    );
    assert!(last_error().contains("null"));
}

#[test]
fn classical_and_decide_agree() {
    let policy = dq_policy_default(3);
    for (text, k, expected) in [
        ("01", 1, true),
        ("0011", 1, false),
        ("0011", 2, true),
        ("())(", 2, false),
    ] {
        let w = parse(text);
        let mut exact = false;
        assert_eq!(unsafe { dq_classical_dyck(w, k, &mut exact) }, DqStatus::Ok);
        assert_eq!(exact, expected);
        let mut d = DqDecision::default();
        assert_eq!(
            unsafe { dq_decide_amplified(w, k, 0.01, &policy, &mut d) },
            DqStatus::Ok
        );
        assert_eq!(d.member, expected, "{text} k={k}");
        assert!(d.charged_queries > 0);
        unsafe { dq_word_free(w) };
    }
}

#[test]
fn decide_is_seeded() {
    let w = parse("(()())()");
    let policy = dq_policy_default(9);
    let (mut a, mut b) = (DqDecision::default(), DqDecision::default());
    unsafe {
        assert_eq!(dq_decide(w, 2, &policy, &mut a), DqStatus::Ok);
        assert_eq!(dq_decide(w, 2, &policy, &mut b), DqStatus::Ok);
        dq_word_free(w);
    }
    assert_eq!(a, b);
    assert_eq!(a.k, 2);
}

#[test]
fn bad_policy_is_rejected() {
    let w = parse("01");
    let mut policy = dq_policy_default(0);
    policy.eps = 0.7;
    let mut d = DqDecision::default();
    assert_eq!(unsafe { dq_decide(w, 1, &policy, &mut d) }, DqStatus::InvalidParameter);
    unsafe { dq_word_free(w) };
}

#[test]
fn find_first_both_directions() {
    let w = parse("110110");
    let policy = dq_policy_default(1);
    let mut found = false;
    let mut m = DqMatch::default();
    let mut q = 0u64;
    unsafe {
        assert_eq!(
            dq_find_first(w, 2, 3, DqDirection::Right, &policy, &mut found, &mut m, &mut q),
            DqStatus::Ok
        );
        assert!(found);
        assert_eq!((m.start, m.end, m.sign), (0, 1, -1));
        assert!(q > 0);
        assert_eq!(
            dq_find_first(w, 2, 3, DqDirection::Left, &policy, &mut found, &mut m, ptr::null_mut()),
            DqStatus::Ok
        );
        assert!(found);
        assert_eq!((m.start, m.end, m.sign), (3, 4, -1));
        assert_eq!(
            dq_find_first(w, 2, 1, DqDirection::Left, &policy, &mut found, &mut m, ptr::null_mut()),
            DqStatus::Ok
        );
        assert!(!found);
        assert_eq!(
            dq_find_first(w, 2, 0, DqDirection::Left, &policy, &mut found, &mut m, ptr::null_mut()),
            DqStatus::InvalidParameter
        );
        dq_word_free(w);
    }
}

#[test]
fn family_length_values() {
    let mut len = 0u64;
    assert_eq!(unsafe { dq_family_length(2, 1, &mut len) }, DqStatus::Ok);
    assert_eq!(len, 7);
    assert_eq!(unsafe { dq_family_length(0, 1, &mut len) }, DqStatus::InvalidParameter);
    assert_eq!(unsafe { dq_family_length(2, 60, &mut len) }, DqStatus::Overflow);
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(dq_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/dyck_query.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "dq_word_parse",
        "dq_decide_amplified",
        "dq_find_first",
        "DQ_STATUS_OK",
        "typedef struct DqWord DqWord",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .status()
    else {
        return;
    };
    assert!(status.success());
}
