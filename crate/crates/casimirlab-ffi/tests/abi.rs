//! The exported functions called through their C signatures.

use casimirlab_ffi::*;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a library string.
unsafe fn take(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    cl_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(cl_last_error()).to_str().unwrap().to_string()
}

unsafe fn algebra(family: &str, n: u32) -> *mut ClAlgebra {
    let mut g = ptr::null_mut();
    assert_eq!(cl_algebra_new(c(family).as_ptr(), n, &mut g), ClStatus::Ok, "{}", last_error());
    g
}

#[test]
fn dimensions_casimirs_and_ladders() {
    unsafe {
        let g = algebra("sl", 5);
        let mut out = ptr::null_mut();
        assert_eq!(cl_algebra_name(g, &mut out), ClStatus::Ok);
        assert_eq!(take(out), "sl(5)");
        assert_eq!(cl_dim(g, c("([1],[1])").as_ptr(), &mut out), ClStatus::Ok);
        assert_eq!(take(out), "24");
        let (mut raw, mut norm) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(cl_casimir(g, c("([1],[1])").as_ptr(), &mut raw, &mut norm), ClStatus::Ok);
        assert_eq!((take(raw), take(norm)), ("10".to_string(), "1".to_string()));
        assert_eq!(cl_casimir(g, c("([1],[])").as_ptr(), ptr::null_mut(), &mut norm), ClStatus::Ok);
        assert_eq!(take(norm), "12/25");
        assert_eq!(cl_dim_yn(g, 2, &mut out), ClStatus::Ok);
        assert_eq!(take(out), "200");
        cl_algebra_free(g);

        let g = algebra("sl", 3);
        assert_eq!(cl_ladder(g, 2, &mut out), ClStatus::Ok);
        assert_eq!(take(out), "1/6");
        cl_algebra_free(g);

        let e7 = algebra("e7", 0);
        assert_eq!(cl_dim(e7, c("1*w1").as_ptr(), &mut out), ClStatus::Ok);
        assert_eq!(take(out), "56");
        assert_eq!(cl_dim(e7, c("1*w7").as_ptr(), &mut out), ClStatus::Ok);
        assert_eq!(take(out), "133");
        assert_eq!(cl_ladder(e7, 2, &mut out), ClStatus::Ok);
        assert_eq!(take(out), "1/3");
        cl_algebra_free(e7);
    }
}

#[test]
fn decomposition_handles() {
    unsafe {
        let mut d = ptr::null_mut();
        assert_eq!(cl_ad_power(2, &mut d), ClStatus::Ok);
        assert_eq!(cl_decomposition_len(d), 6);
        let mut total = 0;
        let mut labels = Vec::new();
        for i in 0..cl_decomposition_len(d) {
            let (mut l, mut m) = (ptr::null(), 0u64);
            assert_eq!(cl_decomposition_term(d, i, &mut l, &mut m), ClStatus::Ok);
            labels.push(CStr::from_ptr(l).to_str().unwrap().to_string());
            total += m;
        }
        assert_eq!(total, 7);
        assert!(labels.contains(&"([1],[1])".to_string()));
        let (mut l, mut m) = (ptr::null(), 0u64);
        assert_eq!(cl_decomposition_term(d, 6, &mut l, &mut m), ClStatus::OutOfRange);
        cl_decomposition_free(d);

        let g = algebra("g2", 0);
        assert_eq!(cl_branch_box_yn(g, 1, false, &mut d), ClStatus::Ok);
        assert_eq!(cl_decomposition_len(d), 3);
        cl_decomposition_free(d);
        cl_algebra_free(g);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(cl_algebra_new(c("sl").as_ptr(), 1, &mut g), ClStatus::InvalidAlgebra);
        assert!(g.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(cl_algebra_new(c("h5").as_ptr(), 3, &mut g), ClStatus::InvalidAlgebra);
        assert_eq!(cl_algebra_new(ptr::null(), 3, &mut g), ClStatus::NullPointer);
        assert_eq!(cl_algebra_new(c("sl").as_ptr(), 3, ptr::null_mut()), ClStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(cl_algebra_new(bad.as_ptr().cast(), 3, &mut g), ClStatus::InvalidArgument);

        let e8 = algebra("e8", 0);
        let mut out = ptr::null_mut();
        assert_eq!(cl_ladder(e8, 2, &mut out), ClStatus::Unsupported);
        assert!(last_error().contains("e8"));
        let mut d = ptr::null_mut();
        assert_eq!(cl_branch_box_yn(e8, 1, true, &mut d), ClStatus::Unsupported);
        assert!(d.is_null());
        cl_algebra_free(e8);

        let sl = algebra("sl", 4);
        assert_eq!(cl_dim(sl, c("([1],[1]").as_ptr(), &mut out), ClStatus::InvalidArgument);
        assert_eq!(cl_dim(ptr::null(), c("([1],[1])").as_ptr(), &mut out), ClStatus::NullPointer);
        let mut d = ptr::null_mut();
        assert_eq!(cl_branch_box_yn(sl, 0, false, &mut d), ClStatus::OutOfRange);
        assert!(d.is_null());
        assert_eq!(cl_dim(sl, c("([1],[1])").as_ptr(), &mut out), ClStatus::Ok);
        assert_eq!(last_error(), "");
        cl_string_free(out);
        cl_algebra_free(sl);

        assert_eq!(cl_decomposition_len(ptr::null()), 0);
        cl_algebra_free(ptr::null_mut());
        cl_decomposition_free(ptr::null_mut());
        cl_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_returns_a_json_report() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(cl_verify(c("decomp").as_ptr(), true, &mut out), ClStatus::Ok, "{}", last_error());
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["suite"], "decomp");
        assert_eq!(v["summary"]["fail"], 0);
        assert_eq!(cl_verify(c("everything").as_ptr(), true, &mut out), ClStatus::InvalidArgument);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(cl_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
