//! C ABI over the `nilhecke` engine.
//!
//! Groups are opaque handles. Every call returns an [`NhStatus`]; on anything
//! other than `NH_STATUS_OK` a message is available from
//! [`nh_last_error_message`] on the same thread. Structured results travel as
//! JSON strings in the same format as the command-line reports (1-based
//! generator indices) and must be released with [`nh_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nilhecke::certificate::{cert_main, cert_verify};
use nilhecke::cli::key_identity_report;
use nilhecke::coxeter::{preset, CoxeterGroup};
use nilhecke::descent::DescentAlgebra;
use nilhecke::json::{certificate_from_json, certificate_to_json, descent_to_json, to_pretty, CertificateRepr, GroupConfig};

/// Result code of every exported function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NhStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Unknown preset, malformed JSON, or an index out of range.
    InvalidInput = 3,
    /// The computation ran and the mathematical check failed; any report
    /// output is still written.
    CheckFailed = 4,
    /// Internal panic caught at the boundary.
    Internal = 5,
}

/// Opaque handle to a finite Coxeter group with its reflection
/// representation and element table.
pub struct NhGroup {
    group: CoxeterGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(NhStatus, String);

impl Failure {
    fn input(msg: impl ToString) -> Self {
        Failure(NhStatus::InvalidInput, msg.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<NhStatus, Failure>) -> NhStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            NhStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(NhStatus::NullArgument, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(NhStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn group_ref<'a>(g: *const NhGroup) -> Result<&'a CoxeterGroup, Failure> {
    g.as_ref()
        .map(|h| &h.group)
        .ok_or_else(|| Failure(NhStatus::NullArgument, "group handle is null".into()))
}

fn check_out<T>(out: *mut T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        Err(Failure(NhStatus::NullArgument, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn to_c_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(NhStatus::Internal, "report contains a NUL byte".into()))
}

fn pair(g: &CoxeterGroup, k: usize, l: usize) -> Result<(usize, usize), Failure> {
    if k == 0 || l == 0 || k > g.rank() || l > g.rank() || k == l {
        return Err(Failure::input(format!(
            "({k}, {l}) is not a pair of distinct generators in 1..={}",
            g.rank()
        )));
    }
    Ok((k - 1, l - 1))
}

fn new_handle(group: CoxeterGroup, out: *mut *mut NhGroup) -> NhStatus {
    unsafe { *out = Box::into_raw(Box::new(NhGroup { group })) };
    NhStatus::Ok
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn nh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message describing the last failed call on this thread, or null.
///
/// The pointer stays valid until the next call into this library on the
/// same thread.
#[no_mangle]
pub extern "C" fn nh_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a shipped group by name (`"A2"`, `"H3"`, ...).
///
/// # Safety
/// `name` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn nh_group_from_preset(name: *const c_char, out: *mut *mut NhGroup) -> NhStatus {
    guard(|| {
        check_out(out, "out")?;
        let name = read_str(name, "name")?;
        let group = preset(name).map_err(Failure::input)?;
        Ok(new_handle(group, out))
    })
}

/// Builds a group from a JSON config:
/// `{"preset": ..}` or `{"coxeter_matrix": .., "cartan": .., "field": ..}`.
///
/// # Safety
/// `json` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn nh_group_from_json(json: *const c_char, out: *mut *mut NhGroup) -> NhStatus {
    guard(|| {
        check_out(out, "out")?;
        let text = read_str(json, "json")?;
        let group = GroupConfig::from_json_str(text)
            .and_then(|c| c.build())
            .map_err(Failure::input)?;
        Ok(new_handle(group, out))
    })
}

/// Releases a group handle. Null is ignored.
///
/// # Safety
/// `group` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nh_group_free(group: *mut NhGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// # Safety
/// `group` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nh_group_rank(group: *const NhGroup, out: *mut usize) -> NhStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = group_ref(group)?.rank();
        Ok(NhStatus::Ok)
    })
}

/// # Safety
/// `group` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nh_group_order(group: *const NhGroup, out: *mut usize) -> NhStatus {
    guard(|| {
        check_out(out, "out")?;
        *out = group_ref(group)?.order();
        Ok(NhStatus::Ok)
    })
}

/// Coxeter matrix entry `m_kl` for 1-based `k`, `l`.
///
/// # Safety
/// `group` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn nh_group_coxeter_entry(
    group: *const NhGroup,
    k: usize,
    l: usize,
    out: *mut u32,
) -> NhStatus {
    guard(|| {
        check_out(out, "out")?;
        let g = group_ref(group)?;
        if k == 0 || l == 0 || k > g.rank() || l > g.rank() {
            return Err(Failure::input(format!("index out of range 1..={}", g.rank())));
        }
        *out = g.m(k - 1, l - 1);
        Ok(NhStatus::Ok)
    })
}

/// Key identity report over every pair of generators. Returns
/// `NH_STATUS_CHECK_FAILED` (with the report written) if any pair fails.
///
/// # Safety
/// `group` must be a live handle or null; `out_json` must be null or
/// writable. Free the result with [`nh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nh_key_identity_json(group: *const NhGroup, out_json: *mut *mut c_char) -> NhStatus {
    guard(|| {
        check_out(out_json, "out_json")?;
        let g = group_ref(group)?;
        let pairs: Vec<(usize, usize)> = (0..g.rank())
            .flat_map(|k| (k + 1..g.rank()).map(move |l| (k, l)))
            .collect();
        let report = key_identity_report(g, &pairs).map_err(|e| Failure(NhStatus::CheckFailed, e.to_string()))?;
        *out_json = to_c_string(to_pretty(&report))?;
        if report.holds() {
            Ok(NhStatus::Ok)
        } else {
            set_error("key identity does not hold for some pair");
            Ok(NhStatus::CheckFailed)
        }
    })
}

/// Builds and verifies a membership certificate for the Demazure braid
/// relation of the 1-based pair `(k, l)`, as certificate JSON.
///
/// # Safety
/// `group` must be a live handle or null; `out_json` must be null or
/// writable. Free the result with [`nh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nh_certify_json(
    group: *const NhGroup,
    k: usize,
    l: usize,
    out_json: *mut *mut c_char,
) -> NhStatus {
    guard(|| {
        check_out(out_json, "out_json")?;
        let g = group_ref(group)?;
        let (k, l) = pair(g, k, l)?;
        let cert = cert_main(g, k, l).map_err(|e| Failure(NhStatus::CheckFailed, e.to_string()))?;
        *out_json = to_c_string(to_pretty(&certificate_to_json(g, &cert)))?;
        Ok(NhStatus::Ok)
    })
}

/// Verifies certificate JSON by full expansion. Writes whether it holds to
/// `out_ok` and, if `out_residual_json` is non-null, the residual
/// (expansion minus target) as JSON. A certificate that does not verify
/// returns `NH_STATUS_CHECK_FAILED`.
///
/// # Safety
/// `cert_json` must be null or a NUL-terminated string; `out_ok` must be
/// null or writable; `out_residual_json` may be null. Free the residual
/// with [`nh_string_free`].
#[no_mangle]
pub unsafe extern "C" fn nh_check_cert_json(
    cert_json: *const c_char,
    out_ok: *mut bool,
    out_residual_json: *mut *mut c_char,
) -> NhStatus {
    guard(|| {
        check_out(out_ok, "out_ok")?;
        *out_ok = false;
        let text = read_str(cert_json, "cert_json")?;
        let repr: CertificateRepr = serde_json::from_str(text).map_err(Failure::input)?;
        let (g, cert) = certificate_from_json(&repr).map_err(Failure::input)?;
        let report = cert_verify(&DescentAlgebra::new(&g), &cert).map_err(Failure::input)?;
        *out_ok = report.ok;
        if !out_residual_json.is_null() {
            *out_residual_json = to_c_string(to_pretty(&descent_to_json(&report.residual)))?;
        }
        if report.ok {
            Ok(NhStatus::Ok)
        } else {
            set_error("certificate does not expand to its target");
            Ok(NhStatus::CheckFailed)
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nh_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn panics_become_internal_status() {
        let status = guard(|| panic!("boom"));
        assert_eq!(status, NhStatus::Internal);
        let msg = unsafe { CStr::from_ptr(nh_last_error_message()) };
        assert!(msg.to_str().unwrap().contains("boom"));
    }

    #[test]
    fn success_clears_the_error() {
        set_error("stale");
        assert_eq!(guard(|| Ok(NhStatus::Ok)), NhStatus::Ok);
        assert!(nh_last_error_message().is_null());
    }
}
