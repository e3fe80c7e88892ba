//! C ABI for the cyclens library.
//!
//! Conventions:
//!
//! - Class-group data lives in an opaque [`CyclensContext`], created from
//!   the bundled table or a data file and freed with
//!   [`cyclens_context_free`].
//! - Every fallible call returns a [`CyclensStatus`]; on failure a
//!   thread-local message is readable via [`cyclens_last_error`] until the
//!   next failing call on the same thread.
//! - Structured results are returned as heap-allocated JSON strings
//!   (mirroring the library's serde output) that the caller must release
//!   with [`cyclens_string_free`].  Scalar results use out-pointers.
//! - Panics never cross the boundary; they surface as
//!   `CYCLENS_STATUS_INTERNAL`.

// Safety contracts (pointer validity, ownership of returned strings) are
// stated in each function's doc comment in C-caller terms, which cbindgen
// copies into the generated header.
#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use cyclens::classdata::{self, ClassDataSet};
use cyclens::classify::{classify_actions, hmod_report, stratum_count, H0Descriptor};
use cyclens::lens::{
    homeomorphic, homeomorphism_witnesses, homotopy_equivalent, postnikov_invariant,
    rho_difference, rho_invariant, LensSpace,
};
use cyclens::modular::{indeterminacy_bound, qdk_partition};

/// Result of every fallible call; mirrors the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CyclensStatus {
    /// Success.
    Ok = 0,
    /// A precondition on the mathematical inputs was violated.
    Precondition = 1,
    /// A data file could not be read, parsed, or validated.
    Data = 2,
    /// Internal consistency failure (a library bug or corrupted state).
    Internal = 3,
    /// Invalid use of the ABI itself: null pointer or malformed string.
    Usage = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).expect("NULs removed");
    });
}

fn status_of(e: &cyclens::Error) -> CyclensStatus {
    match e.exit_code() {
        1 => CyclensStatus::Precondition,
        2 => CyclensStatus::Data,
        _ => CyclensStatus::Internal,
    }
}

fn fail(status: CyclensStatus, message: &str) -> CyclensStatus {
    set_last_error(message);
    status
}

fn fail_with(e: &cyclens::Error) -> CyclensStatus {
    fail(status_of(e), &e.to_string())
}

/// Run a body with panics converted to `Internal`.
fn guarded(body: impl FnOnce() -> CyclensStatus) -> CyclensStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic in library call".to_string());
            fail(CyclensStatus::Internal, &message)
        }
    }
}

fn write_json<T: serde::Serialize>(value: &T, out: *mut *mut c_char) -> CyclensStatus {
    let text = match serde_json::to_string_pretty(value) {
        Ok(t) => t,
        Err(e) => {
            return fail(
                CyclensStatus::Internal,
                &format!("serialization failed: {e}"),
            )
        }
    };
    match CString::new(text) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CyclensStatus::Ok
        }
        Err(_) => fail(CyclensStatus::Internal, "serialized JSON contained NUL"),
    }
}

unsafe fn slice_arg<'a>(ptr: *const u64, len: usize) -> Option<&'a [u64]> {
    if ptr.is_null() && len > 0 {
        None
    } else if len == 0 {
        Some(&[])
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

/// Opaque holder of loaded class-group records.
pub struct CyclensContext {
    records: ClassDataSet,
}

/// Library version as a static NUL-terminated string; never freed.
#[no_mangle]
pub extern "C" fn cyclens_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the most recent failure on this thread, or an empty string.
/// The pointer stays valid until the next failing call on the same thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn cyclens_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by any `*_json` or `*_decimal` call.
/// Passing NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cyclens_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Create a context backed by the bundled class-group table.
#[no_mangle]
pub unsafe extern "C" fn cyclens_context_new_bundled(
    out: *mut *mut CyclensContext,
) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match classdata::load_bundled() {
            Ok(records) => {
                *out = Box::into_raw(Box::new(CyclensContext { records }));
                CyclensStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Create a context from a class-group data file (same line format as the
/// bundled table).
#[no_mangle]
pub unsafe extern "C" fn cyclens_context_new_from_file(
    path: *const c_char,
    out: *mut *mut CyclensContext,
) -> CyclensStatus {
    guarded(|| {
        if path.is_null() || out.is_null() {
            return fail(CyclensStatus::Usage, "path or out pointer is NULL");
        }
        let path = match CStr::from_ptr(path).to_str() {
            Ok(p) => p,
            Err(_) => return fail(CyclensStatus::Usage, "path is not valid UTF-8"),
        };
        match classdata::load_records(Path::new(path)) {
            Ok(records) => {
                *out = Box::into_raw(Box::new(CyclensContext { records }));
                CyclensStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Free a context created by either constructor.  Passing NULL is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cyclens_context_free(ctx: *mut CyclensContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

unsafe fn context_arg<'a>(ctx: *const CyclensContext) -> Option<&'a CyclensContext> {
    ctx.as_ref()
}

/// Classification of free C_ell-actions on S^1 x S^n, as JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_classify_json(
    ctx: *const CyclensContext,
    ell: u64,
    n: u64,
    out: *mut *mut c_char,
) -> CyclensStatus {
    guarded(|| {
        let (Some(ctx), false) = (context_arg(ctx), out.is_null()) else {
            return fail(CyclensStatus::Usage, "ctx or out pointer is NULL");
        };
        match classify_actions(ell, n, &ctx.records) {
            Ok(result) => write_json(&result, out),
            Err(e) => fail_with(&e),
        }
    })
}

/// Number of classification strata for group order `ell` and
/// half-dimension `k`.
#[no_mangle]
pub unsafe extern "C" fn cyclens_stratum_count(ell: u64, k: u64, out: *mut u64) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match stratum_count(ell, k) {
            Ok(v) => {
                *out = v;
                CyclensStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// The unit-class partition `Q_d^k`, as JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_qdk_json(d: u64, k: u64, out: *mut *mut c_char) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match qdk_partition(d, k) {
            Ok(partition) => write_json(&partition, out),
            Err(e) => fail_with(&e),
        }
    })
}

/// The fiber bound `8 gcd(k, phi(d)/2)` of the classification map.
#[no_mangle]
pub unsafe extern "C" fn cyclens_indeterminacy_bound(
    d: u64,
    k: u64,
    out: *mut u64,
) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match indeterminacy_bound(d, k) {
            Ok(v) => {
                *out = v;
                CyclensStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Order bookkeeping for `hMod(d, k)`, as JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_hmod_json(d: u64, k: u64, out: *mut *mut c_char) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match hmod_report(d, k) {
            Ok(report) => write_json(&report, out),
            Err(e) => fail_with(&e),
        }
    })
}

/// Coinvariants `H_0(C_2; Cl_p)` deduced from the context's records, as
/// JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_h0_json(
    ctx: *const CyclensContext,
    p: u64,
    out: *mut *mut c_char,
) -> CyclensStatus {
    guarded(|| {
        let (Some(ctx), false) = (context_arg(ctx), out.is_null()) else {
            return fail(CyclensStatus::Usage, "ctx or out pointer is NULL");
        };
        // Prime divisors outside the data come back as an explicit no-data
        // descriptor rather than an error, matching the classification.
        match H0Descriptor::for_divisor(p, &ctx.records) {
            Ok(descriptor) => write_json(&descriptor, out),
            Err(e) => fail_with(&e),
        }
    })
}

/// Full comparison of two lens spaces `L(d; q)` and `L(d; q2)`: homotopy
/// equivalence, homeomorphism (with a witness when one exists), and
/// whether the rho vectors differ — as JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_lens_compare_json(
    d: u64,
    q: *const u64,
    q_len: usize,
    q2: *const u64,
    q2_len: usize,
    out: *mut *mut c_char,
) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        let (Some(q), Some(q2)) = (slice_arg(q, q_len), slice_arg(q2, q2_len)) else {
            return fail(CyclensStatus::Usage, "rotation array pointer is NULL");
        };
        let build = |rot: &[u64]| LensSpace::new(d, rot);
        let result = (|| -> cyclens::Result<serde_json::Value> {
            let a = build(q)?;
            let b = build(q2)?;
            Ok(serde_json::json!({
                "d": d,
                "q": a.rotations(),
                "q2": b.rotations(),
                "postnikov_invariants": [postnikov_invariant(&a), postnikov_invariant(&b)],
                "homotopy_equivalent": homotopy_equivalent(&a, &b)?,
                "homeomorphic": homeomorphic(&a, &b)?,
                "witness": homeomorphism_witnesses(&a, &b)?.into_iter().next(),
                "rho_difference_is_zero": rho_difference(&a, &b)?.is_zero(),
            }))
        })();
        match result {
            Ok(value) => write_json(&value, out),
            Err(e) => fail_with(&e),
        }
    })
}

/// The rho vector of `L(d; q)`, as JSON.
#[no_mangle]
pub unsafe extern "C" fn cyclens_rho_json(
    d: u64,
    q: *const u64,
    q_len: usize,
    out: *mut *mut c_char,
) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        let Some(q) = slice_arg(q, q_len) else {
            return fail(CyclensStatus::Usage, "rotation array pointer is NULL");
        };
        match LensSpace::new(d, q) {
            Ok(l) => write_json(&rho_invariant(&l), out),
            Err(e) => fail_with(&e),
        }
    })
}

/// Minus class number `h_p^-` of `Q(zeta_p)` as a decimal string
/// (`p` an odd prime, `p <= 300`).
#[no_mangle]
pub unsafe extern "C" fn cyclens_minus_class_number_decimal(
    p: u64,
    out: *mut *mut c_char,
) -> CyclensStatus {
    guarded(|| {
        if out.is_null() {
            return fail(CyclensStatus::Usage, "out pointer is NULL");
        }
        match classdata::minus_class_number(p) {
            Ok(h) => match CString::new(h.to_string()) {
                Ok(c) => {
                    *out = c.into_raw();
                    CyclensStatus::Ok
                }
                Err(_) => fail(CyclensStatus::Internal, "decimal contained NUL"),
            },
            Err(e) => fail_with(&e),
        }
    })
}
