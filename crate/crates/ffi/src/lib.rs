//! C interface to the towerlab verification engine.
//!
//! Reports are opaque handles. Every fallible call returns a [`TowerlabStatus`]
//! and leaves a message retrievable with [`towerlab_last_error`]. Strings
//! handed out by this library must be released with [`towerlab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use towerlab::report::Report;
use towerlab::run::{run, RunConfig, Suite};
use towerlab::tower::{dimension, TowerKind};
use towerlab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Usage = 3,
    Genericity = 4,
    Computation = 5,
    Panic = 6,
}

/// Result of one verification run.
pub struct TowerlabReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(err: &Error) -> TowerlabStatus {
    match err {
        Error::Usage(_) | Error::InvalidContext(_) => TowerlabStatus::Usage,
        Error::GenericityViolation(_) => TowerlabStatus::Genericity,
        _ => TowerlabStatus::Computation,
    }
}

fn guarded(f: impl FnOnce() -> Result<(), (TowerlabStatus, String)>) -> TowerlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TowerlabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            TowerlabStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (TowerlabStatus, String)> {
    if p.is_null() {
        return Err((TowerlabStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (TowerlabStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn parse_tower(name: &str) -> Result<TowerKind, (TowerlabStatus, String)> {
    TowerKind::parse(name).ok_or_else(|| (TowerlabStatus::Usage, format!("unknown tower {name}")))
}

fn lift(err: Error) -> (TowerlabStatus, String) {
    (status_of(&err), err.to_string())
}

/// Writes the dimension of A_n for `tower` ("tl", "brauer", "sym", "hecke",
/// "bmw") into `out`.
///
/// # Safety
/// `tower` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn towerlab_dimension(tower: *const c_char, n: usize, out: *mut usize) -> TowerlabStatus {
    guarded(|| {
        let kind = parse_tower(read_str(tower, "tower")?)?;
        if out.is_null() {
            return Err((TowerlabStatus::NullPointer, "out is null".into()));
        }
        *out = dimension(kind, n);
        Ok(())
    })
}

/// Runs `suite` ("dims", "axioms", "jm", "spectrum", "gz", "branching",
/// "bridge", "all") on A_n. `params` is null for a symbolic run or a
/// comma-separated list such as "rho=5/3,q=7/2" for a specialized one.
/// On success `*out` receives a report handle owned by the caller.
///
/// # Safety
/// String arguments must be NUL-terminated (or null where allowed) and `out`
/// must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn towerlab_run(
    tower: *const c_char,
    suite: *const c_char,
    n: usize,
    params: *const c_char,
    out: *mut *mut TowerlabReport,
) -> TowerlabStatus {
    guarded(|| {
        if out.is_null() {
            return Err((TowerlabStatus::NullPointer, "out is null".into()));
        }
        *out = ptr::null_mut();
        let kind = parse_tower(read_str(tower, "tower")?)?;
        let suite: Suite = read_str(suite, "suite")?.parse().map_err(lift)?;
        let cfg = if params.is_null() {
            RunConfig::symbolic(kind, n)
        } else {
            let sets = read_str(params, "params")?
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.split_once('=')
                        .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                        .ok_or_else(|| (TowerlabStatus::Usage, format!("expected name=value, got {s}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            RunConfig::with_assignments(kind, n, &sets).map_err(lift)?
        };
        let report = run(&cfg, suite).map_err(lift)?;
        *out = Box::into_raw(Box::new(TowerlabReport { inner: report }));
        Ok(())
    })
}

/// Number of passing checks; 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from [`towerlab_run`].
#[no_mangle]
pub unsafe extern "C" fn towerlab_report_passed(report: *const TowerlabReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.passed())
}

/// Number of failing checks; 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle from [`towerlab_run`].
#[no_mangle]
pub unsafe extern "C" fn towerlab_report_failed(report: *const TowerlabReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.failed())
}

/// The report as a JSON document, or null for a null handle. Release the
/// string with [`towerlab_string_free`].
///
/// # Safety
/// `report` must be null or a live handle from [`towerlab_run`].
#[no_mangle]
pub unsafe extern "C" fn towerlab_report_json(report: *const TowerlabReport) -> *mut c_char {
    match report.as_ref() {
        None => ptr::null_mut(),
        Some(r) => CString::new(r.inner.to_json().to_string()).map_or(ptr::null_mut(), CString::into_raw),
    }
}

/// Releases a report handle. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from [`towerlab_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn towerlab_report_free(report: *mut TowerlabReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Message for the last failed call on this thread, or null. Release it with
/// [`towerlab_string_free`].
#[no_mangle]
pub extern "C" fn towerlab_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn towerlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
