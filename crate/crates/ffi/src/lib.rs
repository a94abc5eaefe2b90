//! C interface. Rings and elements are opaque heap handles; every entry
//! point returns an [`ScffdStatus`] and writes results through out
//! pointers. Strings handed out must be released with [`scffd_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use scffd_core::{parse_descriptor, parse_element, run_query, Decision, Error, Query, Ring, Value};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScffdStatus {
    Ok = 0,
    /// Not in the ring, invalid descriptor, or an operation outside its domain.
    Invalid = 1,
    Syntax = 2,
    SearchCap = 3,
    NullArgument = 4,
    InvalidUtf8 = 5,
    Panic = 6,
}

impl From<&Error> for ScffdStatus {
    fn from(e: &Error) -> Self {
        match e.exit_code() {
            2 => ScffdStatus::Syntax,
            3 => ScffdStatus::SearchCap,
            _ => ScffdStatus::Invalid,
        }
    }
}

/// Three-valued answer of a predicate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScffdDecision {
    False = 0,
    True = 1,
    Unsupported = 2,
}

impl From<Decision> for ScffdDecision {
    fn from(d: Decision) -> Self {
        match d {
            Decision::False => ScffdDecision::False,
            Decision::True => ScffdDecision::True,
            Decision::Unsupported => ScffdDecision::Unsupported,
        }
    }
}

/// Opaque ring handle.
pub struct ScffdRing(Ring);

/// Opaque element handle. Remembers its ring.
pub struct ScffdElement {
    ring: Ring,
    value: Value,
}

fn guard(f: impl FnOnce() -> ScffdStatus) -> ScffdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(ScffdStatus::Panic)
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, ScffdStatus> {
    if s.is_null() {
        return Err(ScffdStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| ScffdStatus::InvalidUtf8)
}

fn owned(s: String) -> *mut c_char {
    // interior NULs cannot occur in printed elements or JSON
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! tryc {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

fn core<T>(r: scffd_core::Result<T>) -> Result<T, ScffdStatus> {
    r.map_err(|e| ScffdStatus::from(&e))
}

/// Parses a ring descriptor such as `Quad(5)`.
///
/// # Safety
/// `descriptor` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn scffd_ring_parse(
    descriptor: *const c_char,
    out: *mut *mut ScffdRing,
) -> ScffdStatus {
    guard(|| {
        if out.is_null() {
            return ScffdStatus::NullArgument;
        }
        let d = tryc!(text(descriptor));
        let r = tryc!(core(parse_descriptor(d)));
        *out = Box::into_raw(Box::new(ScffdRing(r)));
        ScffdStatus::Ok
    })
}

/// # Safety
/// `ring` must come from [`scffd_ring_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn scffd_ring_free(ring: *mut ScffdRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Canonical descriptor text of a ring.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn scffd_ring_to_string(
    ring: *const ScffdRing,
    out: *mut *mut c_char,
) -> ScffdStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            return ScffdStatus::NullArgument;
        }
        *out = owned((*ring).0.to_string());
        ScffdStatus::Ok
    })
}

/// Parses an element expression and checks membership in `ring`.
///
/// # Safety
/// Pointers must be valid; `expr` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn scffd_element_parse(
    ring: *const ScffdRing,
    expr: *const c_char,
    out: *mut *mut ScffdElement,
) -> ScffdStatus {
    guard(|| {
        if ring.is_null() || out.is_null() {
            return ScffdStatus::NullArgument;
        }
        let e = tryc!(text(expr));
        let r = &(*ring).0;
        let value = tryc!(core(parse_element(r, e)));
        *out = Box::into_raw(Box::new(ScffdElement {
            ring: r.clone(),
            value,
        }));
        ScffdStatus::Ok
    })
}

/// # Safety
/// `elem` must come from [`scffd_element_parse`] or be null.
#[no_mangle]
pub unsafe extern "C" fn scffd_element_free(elem: *mut ScffdElement) {
    if !elem.is_null() {
        drop(Box::from_raw(elem));
    }
}

/// Canonical text of an element.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn scffd_element_to_string(
    elem: *const ScffdElement,
    out: *mut *mut c_char,
) -> ScffdStatus {
    guard(|| {
        if elem.is_null() || out.is_null() {
            return ScffdStatus::NullArgument;
        }
        let e = &*elem;
        *out = owned(tryc!(core(e.ring.format(&e.value))));
        ScffdStatus::Ok
    })
}

unsafe fn predicate(
    elem: *const ScffdElement,
    out: *mut ScffdDecision,
    f: fn(&Ring, &Value) -> scffd_core::Result<Decision>,
) -> ScffdStatus {
    guard(|| {
        if elem.is_null() || out.is_null() {
            return ScffdStatus::NullArgument;
        }
        let e = &*elem;
        *out = tryc!(core(f(&e.ring, &e.value))).into();
        ScffdStatus::Ok
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn scffd_is_prime(
    elem: *const ScffdElement,
    out: *mut ScffdDecision,
) -> ScffdStatus {
    predicate(elem, out, Ring::is_prime)
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn scffd_is_irreducible(
    elem: *const ScffdElement,
    out: *mut ScffdDecision,
) -> ScffdStatus {
    predicate(elem, out, Ring::is_irreducible)
}

/// Divisors of an element as a JSON array of canonical strings.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn scffd_divisors_json(
    elem: *const ScffdElement,
    out: *mut *mut c_char,
) -> ScffdStatus {
    guard(|| {
        if elem.is_null() || out.is_null() {
            return ScffdStatus::NullArgument;
        }
        let e = &*elem;
        let ds = tryc!(core(e.ring.divisors(&e.value)));
        let texts: Vec<String> = tryc!(core(ds.iter().map(|d| e.ring.format(d)).collect()));
        *out = owned(serde_json::to_string(&texts).expect("json"));
        ScffdStatus::Ok
    })
}

/// Runs a command-line style query. `elems` holds `n_elems` expressions and
/// `mode` may be null. The JSON document is always written to `out`, also
/// on failure, where it carries an `error` object; the status mirrors the
/// command line exit code.
///
/// # Safety
/// Pointers must be valid; `elems` must point to `n_elems` strings.
#[no_mangle]
pub unsafe extern "C" fn scffd_query(
    command: *const c_char,
    ring: *const c_char,
    elems: *const *const c_char,
    n_elems: usize,
    mode: *const c_char,
    out: *mut *mut c_char,
) -> ScffdStatus {
    guard(|| {
        if out.is_null() || (elems.is_null() && n_elems > 0) {
            return ScffdStatus::NullArgument;
        }
        let mut q = Query {
            command: tryc!(text(command)).to_string(),
            ring: tryc!(text(ring)).to_string(),
            ..Default::default()
        };
        for i in 0..n_elems {
            q.elems.push(tryc!(text(*elems.add(i))).to_string());
        }
        if !mode.is_null() {
            q.mode = Some(tryc!(text(mode)).to_string());
        }
        let o = run_query(&q);
        *out = owned(o.render());
        match o.exit_code {
            0 => ScffdStatus::Ok,
            2 => ScffdStatus::Syntax,
            3 => ScffdStatus::SearchCap,
            _ => ScffdStatus::Invalid,
        }
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn scffd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
