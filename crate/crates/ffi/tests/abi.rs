use std::ffi::{CStr, CString};
use std::ptr;

use nilhecke_ffi::*;

fn preset(name: &str) -> *mut NhGroup {
    let name = CString::new(name).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { nh_group_from_preset(name.as_ptr(), &mut g) }, NhStatus::Ok);
    assert!(!g.is_null());
    g
}

fn take(s: *mut std::ffi::c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { nh_string_free(s) };
    out
}

fn last_error() -> String {
    let p = nh_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn group_queries() {
    let g = preset("H3");
    let (mut rank, mut order, mut m) = (0usize, 0usize, 0u32);
    unsafe {
        assert_eq!(nh_group_rank(g, &mut rank), NhStatus::Ok);
        assert_eq!(nh_group_order(g, &mut order), NhStatus::Ok);
        assert_eq!(nh_group_coxeter_entry(g, 1, 2, &mut m), NhStatus::Ok);
        assert_eq!(nh_group_coxeter_entry(g, 0, 2, &mut m), NhStatus::InvalidInput);
        nh_group_free(g);
    }
    assert_eq!((rank, order, m), (3, 120, 5));
}

#[test]
fn group_from_json_config() {
    let json = CString::new(r#"{"coxeter_matrix": [[1, 4], [4, 1]], "field": "sqrt2"}"#).unwrap();
    let mut g = ptr::null_mut();
    let mut order = 0;
    unsafe {
        assert_eq!(nh_group_from_json(json.as_ptr(), &mut g), NhStatus::Ok);
        assert_eq!(nh_group_order(g, &mut order), NhStatus::Ok);
        nh_group_free(g);
    }
    assert_eq!(order, 8);
}

#[test]
fn key_identity_report() {
    let g = preset("A2");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { nh_key_identity_json(g, &mut out) }, NhStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(report["holds"], true);
    assert_eq!(report["pairs"][0]["delta"], "a1^2*a2 + a1*a2^2");
    unsafe { nh_group_free(g) };
}

#[test]
fn certify_and_check_round_trip() {
    let g = preset("B2");
    let mut cert = ptr::null_mut();
    assert_eq!(unsafe { nh_certify_json(g, 1, 2, &mut cert) }, NhStatus::Ok);
    let text = take(cert);
    unsafe { nh_group_free(g) };

    let c = CString::new(text.clone()).unwrap();
    let (mut ok, mut residual) = (false, ptr::null_mut());
    assert_eq!(unsafe { nh_check_cert_json(c.as_ptr(), &mut ok, &mut residual) }, NhStatus::Ok);
    assert!(ok);
    assert_eq!(take(residual).trim(), "[]");

    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["terms"][0]["q"] = "5".into();
    let bad = CString::new(v.to_string()).unwrap();
    let mut residual = ptr::null_mut();
    assert_eq!(unsafe { nh_check_cert_json(bad.as_ptr(), &mut ok, &mut residual) }, NhStatus::CheckFailed);
    assert!(!ok);
    assert_ne!(take(residual).trim(), "[]");
    assert!(last_error().contains("target"));
}

#[test]
fn errors_are_reported() {
    let mut g = ptr::null_mut();
    let bad = CString::new("Z7").unwrap();
    assert_eq!(unsafe { nh_group_from_preset(bad.as_ptr(), &mut g) }, NhStatus::InvalidInput);
    assert!(g.is_null());
    assert!(last_error().contains("Z7"));

    assert_eq!(unsafe { nh_group_from_preset(ptr::null(), &mut g) }, NhStatus::NullArgument);
    let name = CString::new("A2").unwrap();
    assert_eq!(unsafe { nh_group_from_preset(name.as_ptr(), ptr::null_mut()) }, NhStatus::NullArgument);

    let mut rank = 0;
    assert_eq!(unsafe { nh_group_rank(ptr::null(), &mut rank) }, NhStatus::NullArgument);

    let g = preset("A2");
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { nh_certify_json(g, 1, 1, &mut out) }, NhStatus::InvalidInput);
    assert!(out.is_null());
    assert_eq!(unsafe { nh_certify_json(g, 1, 2, &mut out) }, NhStatus::Ok);
    assert!(nh_last_error_message().is_null());
    unsafe {
        nh_string_free(out);
        nh_group_free(g);
        nh_group_free(ptr::null_mut());
        nh_string_free(ptr::null_mut());
    }

    let garbage = CString::new("{not json").unwrap();
    let mut ok = true;
    assert_eq!(unsafe { nh_check_cert_json(garbage.as_ptr(), &mut ok, ptr::null_mut()) }, NhStatus::InvalidInput);
    assert!(!ok);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(nh_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
