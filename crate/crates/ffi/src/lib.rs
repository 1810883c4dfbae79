//! C ABI over `dyck-query`.
//!
//! Words are opaque handles created by [`dq_word_parse`] and released with
//! [`dq_word_free`]. Every fallible call returns a [`DqStatus`]; on failure
//! [`dq_last_error`] describes the most recent error on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dyck_query::instances::family_length;
use dyck_query::{
    classical_dyck, decide_dyck, decide_dyck_amplified, BackendPolicy, CountingOracle, Direction, Error, Mode,
    Searcher, Sign, SignSet, Word,
};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidWord = 3,
    InvalidParameter = 4,
    Domain = 5,
    Overflow = 6,
    Infeasible = 7,
    Panic = 8,
}

/// Simulation backend.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DqBackend {
    Ideal = 0,
    Statevector = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DqDirection {
    /// Largest end.
    Left = 0,
    /// Smallest start.
    Right = 1,
}

/// Backend configuration; start from [`dq_policy_default`].
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct DqPolicy {
    pub backend: DqBackend,
    pub c0: f64,
    pub eps: f64,
    pub seed: u64,
    pub boost: u32,
    pub verify_factor: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DqDecision {
    pub member: bool,
    /// Height bound used after lowering for short words.
    pub k: u32,
    pub charged_queries: u64,
}

/// A substring `[start, end]` with balance `sign · k`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DqMatch {
    pub start: u64,
    pub end: u64,
    /// `+1` or `-1`.
    pub sign: i32,
}

/// Opaque word handle.
pub struct DqWord {
    word: Word,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> DqStatus {
    match e {
        Error::InvalidSymbol { .. } | Error::MixedAlphabet | Error::EmptyWord => DqStatus::InvalidWord,
        Error::Domain(_) => DqStatus::Domain,
        Error::Overflow(_) => DqStatus::Overflow,
        Error::Infeasible(_) => DqStatus::Infeasible,
        _ => DqStatus::InvalidParameter,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (DqStatus, String)>) -> DqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DqStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DqStatus::Panic
        }
    }
}

fn lift(e: Error) -> (DqStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (DqStatus, String) {
    (DqStatus::NullPointer, format!("{what} is null"))
}

unsafe fn word_ref<'a>(w: *const DqWord) -> Result<&'a Word, (DqStatus, String)> {
    w.as_ref().map(|h| &h.word).ok_or_else(|| null("word"))
}

fn to_policy(p: &DqPolicy) -> Result<BackendPolicy, (DqStatus, String)> {
    let policy = BackendPolicy {
        mode: match p.backend {
            DqBackend::Ideal => Mode::Ideal,
            DqBackend::Statevector => Mode::Statevector,
        },
        c0: p.c0,
        eps: p.eps,
        seed: p.seed,
        boost: p.boost,
        verify_factor: p.verify_factor,
        accounting: true,
    };
    policy.validate().map_err(lift)?;
    Ok(policy)
}

/// Default configuration with the given seed.
#[no_mangle]
pub extern "C" fn dq_policy_default(seed: u64) -> DqPolicy {
    let p = BackendPolicy::ideal(seed);
    DqPolicy {
        backend: DqBackend::Ideal,
        c0: p.c0,
        eps: p.eps,
        seed,
        boost: p.boost,
        verify_factor: p.verify_factor,
    }
}

/// Parses a NUL-terminated word in `()` or `01` encoding.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dq_word_parse(text: *const c_char, out: *mut *mut DqWord) -> DqStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (DqStatus::InvalidUtf8, e.to_string()))?;
        let word = Word::parse(s).map_err(lift)?;
        *out = Box::into_raw(Box::new(DqWord { word }));
        Ok(())
    })
}

/// Releases a handle from [`dq_word_parse`]. Null is ignored.
///
/// # Safety
/// `word` must come from [`dq_word_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dq_word_free(word: *mut DqWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Length of the word, or 0 for a null handle.
///
/// # Safety
/// `word` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dq_word_len(word: *const DqWord) -> u64 {
    word.as_ref().map_or(0, |h| h.word.len() as u64)
}

/// Exact membership in the height-`k` Dyck language.
///
/// # Safety
/// `word` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dq_classical_dyck(word: *const DqWord, k: u32, out: *mut bool) -> DqStatus {
    guard(|| {
        let w = word_ref(word)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        *out = classical_dyck(w, k);
        Ok(())
    })
}

/// One run of the bounded-error decider.
///
/// # Safety
/// `word` must be a live handle; `policy` and `out` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn dq_decide(
    word: *const DqWord,
    k: u32,
    policy: *const DqPolicy,
    out: *mut DqDecision,
) -> DqStatus {
    guard(|| {
        let w = word_ref(word)?;
        let policy = to_policy(policy.as_ref().ok_or_else(|| null("policy"))?)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let d = decide_dyck(w, k, &policy).map_err(lift)?;
        *out = DqDecision {
            member: d.member,
            k: d.k,
            charged_queries: d.charged_queries,
        };
        Ok(())
    })
}

/// Majority vote over enough runs to reach error `eps_target`.
///
/// # Safety
/// As [`dq_decide`].
#[no_mangle]
pub unsafe extern "C" fn dq_decide_amplified(
    word: *const DqWord,
    k: u32,
    eps_target: f64,
    policy: *const DqPolicy,
    out: *mut DqDecision,
) -> DqStatus {
    guard(|| {
        let w = word_ref(word)?;
        let policy = to_policy(policy.as_ref().ok_or_else(|| null("policy"))?)?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let d = decide_dyck_amplified(w, k, eps_target, &policy).map_err(lift)?;
        *out = DqDecision {
            member: d.member,
            k: d.k,
            charged_queries: d.charged_queries,
        };
        Ok(())
    })
}

/// First minimal `±k`-substring of the whole word in direction `dir`.
/// `signs` is a bit set: 1 for `+1`, 2 for `-1`. `*found` is false when
/// there is none.
///
/// # Safety
/// `word` must be a live handle; the remaining pointers valid.
#[no_mangle]
pub unsafe extern "C" fn dq_find_first(
    word: *const DqWord,
    k: u32,
    signs: u32,
    dir: DqDirection,
    policy: *const DqPolicy,
    found: *mut bool,
    out: *mut DqMatch,
    charged_queries: *mut u64,
) -> DqStatus {
    guard(|| {
        let w = word_ref(word)?;
        let policy = to_policy(policy.as_ref().ok_or_else(|| null("policy"))?)?;
        let found = found.as_mut().ok_or_else(|| null("found"))?;
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        let s = SignSet::new(signs & 1 != 0, signs & 2 != 0).map_err(lift)?;
        if w.is_empty() {
            return Err(lift(Error::EmptyWord));
        }
        let oracle = CountingOracle::new(w.clone());
        let searcher = Searcher::new(&oracle, k.max(2), policy).map_err(lift)?;
        let dir = match dir {
            DqDirection::Left => Direction::Left,
            DqDirection::Right => Direction::Right,
        };
        let m = searcher
            .find_first(k, 0, w.len() - 1, s, dir, &mut policy.rng())
            .map_err(lift)?;
        *found = m.is_some();
        if let Some(m) = m {
            *out = DqMatch {
                start: m.start as u64,
                end: m.end as u64,
                sign: match m.sign {
                    Sign::Plus => 1,
                    Sign::Minus => -1,
                },
            };
        }
        if let Some(q) = charged_queries.as_mut() {
            *q = oracle.charged();
        }
        Ok(())
    })
}

/// Length of the words of the hard family `M^i_k`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dq_family_length(k: u32, i: u32, out: *mut u64) -> DqStatus {
    guard(|| {
        let out = out.as_mut().ok_or_else(|| null("out"))?;
        if k == 0 {
            return Err((DqStatus::InvalidParameter, "k must be positive".into()));
        }
        *out = family_length(k, i).map_err(lift)?;
        Ok(())
    })
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn dq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn dq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
