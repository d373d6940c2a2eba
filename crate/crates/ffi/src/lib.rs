//! C ABI over `hocalg`.
//!
//! Bundles are opaque heap handles released with `hoc_bundle_free`. Strings
//! handed out by the library are released with `hoc_string_free`. Every call
//! returns a `HocStatus`; on failure the message is available from
//! `hoc_last_error` on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hocalg::cli::bundle::Bundle;
use hocalg::cli::catalog::{fixture, FixtureParams};
use hocalg::cli::run::{apply_functor, validate_structure, FunctorName};
use hocalg::exactalg::Field;
use hocalg::Error;

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HocStatus {
    Ok = 0,
    /// The call ran but a verdict failed (invalid structure, functor input
    /// rejected, homotopy not preserved).
    VerdictFailed = 1,
    Parse = 2,
    InvalidArgument = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Opaque structure bundle.
pub struct HocBundle {
    inner: Bundle,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(s).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> HocStatus {
    match e {
        Error::Parse { .. } | Error::Dimension { .. } | Error::Field(_) => HocStatus::Parse,
        Error::Usage(_) | Error::Truncation { .. } => HocStatus::InvalidArgument,
        Error::InvalidInput(_) | Error::Construction(_) | Error::NotAnIdeal(_) | Error::Descent(_) => HocStatus::VerdictFailed,
        Error::Io(_) => HocStatus::Internal,
    }
}

fn fail(status: HocStatus, msg: impl Into<String>) -> HocStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> HocStatus {
    fail(status_of(&e), e.to_string())
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> HocStatus) -> HocStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            fail(HocStatus::Internal, format!("internal error: {msg}"))
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, HocStatus> {
    if p.is_null() {
        return Err(fail(HocStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(HocStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn into_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> HocStatus {
    if out.is_null() {
        return fail(HocStatus::NullPointer, "output pointer is null");
    }
    *out = into_c(s);
    HocStatus::Ok
}

unsafe fn bundle_ref<'a>(b: *const HocBundle) -> Result<&'a Bundle, HocStatus> {
    if b.is_null() {
        return Err(fail(HocStatus::NullPointer, "bundle is null"));
    }
    Ok(&(*b).inner)
}

fn boxed(b: Bundle) -> *mut HocBundle {
    Box::into_raw(Box::new(HocBundle { inner: b }))
}

/// Parses a JSON structure document. On success `*out` owns a new bundle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_parse(text: *const c_char, allow_char2: bool, out: *mut *mut HocBundle) -> HocStatus {
    guard(|| {
        if out.is_null() {
            return fail(HocStatus::NullPointer, "output pointer is null");
        }
        *out = ptr::null_mut();
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Bundle::parse(text, allow_char2) {
            Ok(b) => {
                *out = boxed(b);
                HocStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Builds a catalog fixture. `field` may be null for the rationals, or a
/// field spec such as `"Q"` or `"Fp:7"`.
///
/// # Safety
/// `name` must be a NUL-terminated string, `field` null or NUL-terminated,
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_fixture(name: *const c_char, field: *const c_char, out: *mut *mut HocBundle) -> HocStatus {
    guard(|| {
        if out.is_null() {
            return fail(HocStatus::NullPointer, "output pointer is null");
        }
        *out = ptr::null_mut();
        let name = match read_str(name, "name") {
            Ok(t) => t,
            Err(s) => return s,
        };
        let field = if field.is_null() {
            Field::Rational
        } else {
            match read_str(field, "field").map(|s| Field::parse_spec(s, false)) {
                Ok(Ok(f)) => f,
                Ok(Err(e)) => return from_error(e),
                Err(s) => return s,
            }
        };
        match fixture(name, FixtureParams::over(field)) {
            Ok(b) => {
                *out = boxed(b);
                HocStatus::Ok
            }
            Err(Error::Usage(m)) => fail(HocStatus::InvalidArgument, m),
            Err(e) => from_error(e),
        }
    })
}

/// Releases a bundle. Null is ignored.
///
/// # Safety
/// `b` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_free(b: *mut HocBundle) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Kind name of the bundle, e.g. `"two_crossed"`.
///
/// # Safety
/// `b` must be a live bundle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_kind(b: *const HocBundle, out: *mut *mut c_char) -> HocStatus {
    guard(|| match bundle_ref(b) {
        Ok(b) => write_string(out, b.kind().to_string()),
        Err(s) => s,
    })
}

/// Canonical JSON text of the bundle.
///
/// # Safety
/// `b` must be a live bundle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_to_json(b: *const HocBundle, out: *mut *mut c_char) -> HocStatus {
    guard(|| match bundle_ref(b) {
        Ok(b) => write_string(out, b.canonical()),
        Err(s) => s,
    })
}

/// SHA-256 hex digest of kind, field and payload.
///
/// # Safety
/// `b` must be a live bundle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_digest(b: *const HocBundle, out: *mut *mut c_char) -> HocStatus {
    guard(|| match bundle_ref(b) {
        Ok(b) => write_string(out, b.digest()),
        Err(s) => s,
    })
}

/// Runs the validator of the bundle's kind and writes the report as JSON to
/// `*report` (which may be null if the report is not wanted). Returns
/// `VerdictFailed` when some axiom fails.
///
/// # Safety
/// `b` must be a live bundle; `report` null or a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_validate(b: *const HocBundle, report: *mut *mut c_char) -> HocStatus {
    guard(|| {
        let b = match bundle_ref(b) {
            Ok(b) => b,
            Err(s) => return s,
        };
        let r = validate_structure(&b.structure);
        if !report.is_null() {
            *report = into_c(serde_json::to_string(&r).expect("reports serialize"));
        }
        if r.is_valid() {
            HocStatus::Ok
        } else {
            fail(HocStatus::VerdictFailed, format!("failed checks: {}", r.failed_names().join(", ")))
        }
    })
}

/// Applies a functor (`lambda`, `delta`, `psi`, `m2`, `cone`, `simp2`).
/// On `Ok` or `VerdictFailed` with a constructed output, `*out` owns the
/// output bundle and `*certificate` (if non-null) the certificate JSON.
///
/// # Safety
/// `b` must be a live bundle, `functor` NUL-terminated, `out` valid,
/// `certificate` null or valid.
#[no_mangle]
pub unsafe extern "C" fn hoc_bundle_apply_functor(
    b: *const HocBundle,
    functor: *const c_char,
    out: *mut *mut HocBundle,
    certificate: *mut *mut c_char,
) -> HocStatus {
    guard(|| {
        if out.is_null() {
            return fail(HocStatus::NullPointer, "output pointer is null");
        }
        *out = ptr::null_mut();
        if !certificate.is_null() {
            *certificate = ptr::null_mut();
        }
        let b = match bundle_ref(b) {
            Ok(b) => b,
            Err(s) => return s,
        };
        let name: FunctorName = match read_str(functor, "functor").map(str::parse) {
            Ok(Ok(n)) => n,
            Ok(Err(e)) => return fail(HocStatus::InvalidArgument, e.to_string()),
            Err(s) => return s,
        };
        match apply_functor(name, b) {
            Ok((output, cert)) => {
                *out = boxed(output);
                if !certificate.is_null() {
                    *certificate = into_c(cert.to_json().to_string());
                }
                if cert.is_ok() {
                    HocStatus::Ok
                } else {
                    fail(HocStatus::VerdictFailed, cert.render())
                }
            }
            Err(Error::Usage(m)) => fail(HocStatus::InvalidArgument, m),
            Err(e) => from_error(e),
        }
    })
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn hoc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn hoc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
