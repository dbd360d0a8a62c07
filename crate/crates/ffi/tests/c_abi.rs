use std::ffi::{CStr, CString};
use std::ptr;

use towerlab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    towerlab_string_free(p);
    s
}

#[test]
fn dimension_through_the_c_abi() {
    let mut d = 0usize;
    let status = unsafe { towerlab_dimension(c("brauer").as_ptr(), 3, &mut d) };
    assert_eq!(status, TowerlabStatus::Ok);
    assert_eq!(d, 15);
    let status = unsafe { towerlab_dimension(c("tl").as_ptr(), 4, &mut d) };
    assert_eq!((status, d), (TowerlabStatus::Ok, 14));
}

#[test]
fn specialized_run_produces_a_passing_report() {
    let mut r = ptr::null_mut();
    let params = c("rho=5/3, q=7/2");
    let status = unsafe { towerlab_run(c("bmw").as_ptr(), c("jm").as_ptr(), 3, params.as_ptr(), &mut r) };
    assert_eq!(status, TowerlabStatus::Ok);
    unsafe {
        assert!(towerlab_report_passed(r) > 0);
        assert_eq!(towerlab_report_failed(r), 0);
        let json: serde_json::Value = serde_json::from_str(&take_string(towerlab_report_json(r))).unwrap();
        assert_eq!(json["meta"]["mode"], "specialized");
        assert_eq!(json["summary"]["failed"], 0);
        towerlab_report_free(r);
    }
}

#[test]
fn errors_map_to_codes_and_messages() {
    let mut r = ptr::null_mut();
    let status = unsafe { towerlab_run(c("bmw").as_ptr(), c("jm").as_ptr(), 0, ptr::null(), &mut r) };
    assert_eq!(status, TowerlabStatus::Usage);
    assert!(r.is_null());
    assert!(unsafe { take_string(towerlab_last_error()) }.contains("at least 1"));

    let status = unsafe { towerlab_run(c("bmw").as_ptr(), c("dims").as_ptr(), 2, c("rho=5/3,q=1").as_ptr(), &mut r) };
    assert_eq!(status, TowerlabStatus::Genericity);
    assert!(unsafe { take_string(towerlab_last_error()) }.contains("q=1"));

    let status = unsafe { towerlab_dimension(ptr::null(), 2, ptr::null_mut()) };
    assert_eq!(status, TowerlabStatus::NullPointer);
    let status = unsafe { towerlab_dimension(c("klein").as_ptr(), 2, ptr::null_mut()) };
    assert_eq!(status, TowerlabStatus::Usage);
}

#[test]
fn null_handles_are_tolerated() {
    unsafe {
        assert_eq!(towerlab_report_passed(ptr::null()), 0);
        assert!(towerlab_report_json(ptr::null()).is_null());
        towerlab_report_free(ptr::null_mut());
        towerlab_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_declares_the_api() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/towerlab.h")).unwrap();
    for name in ["towerlab_run", "towerlab_report_free", "towerlab_string_free", "TOWERLAB_STATUS_GENERICITY", "typedef struct TowerlabReport"] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
