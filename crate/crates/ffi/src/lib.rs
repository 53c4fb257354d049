//! C ABI over `cyclic-stats`.
//!
//! Every function returns a [`CstStatus`]; results come back through out
//! pointers. Objects are opaque handles released with their `*_free`
//! function, and strings handed out by the library are released with
//! [`cst_string_free`]. After a non-`Ok` status, [`cst_last_error`] describes
//! the failure on the calling thread.
//!
//! No function unwinds across the boundary: panics become
//! [`CstStatus::Panic`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cyclic_stats::cli;
use cyclic_stats::identities::{run_suite, Suite, VerifyConfig};
use cyclic_stats::perm::{CycleForm, Permutation};
use cyclic_stats::poly::MPoly;
use cyclic_stats::recurrence::{Family, Triangle, TriangleFamily};
use cyclic_stats::report::Aggregate;
use cyclic_stats::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CstStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    CapExceeded = 5,
    OutOfRange = 6,
    Panic = 7,
}

/// All statistics of one permutation. Cyclic fields are read from the
/// cycle form as written.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CstStats {
    pub cpk: u32,
    pub cval: u32,
    pub cyc: u32,
    pub fix: u32,
    pub pk: u32,
    pub val: u32,
    pub lpk: u32,
    pub runs: u32,
}

/// A polynomial in `q`, `x`, `y` with integer coefficients.
pub struct CstPoly(MPoly);

/// Coefficient rows of a specialized family.
pub struct CstTriangle(Triangle);

/// A permutation together with the cycle form it was written in.
pub struct CstPermutation {
    word: Permutation,
    written: CycleForm,
}

/// Outcome of a verification suite.
pub struct CstReport {
    suite: Suite,
    config: VerifyConfig,
    aggregate: Aggregate,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CstStatus {
    match e {
        Error::Parse { .. } | Error::InvalidPermutation(_) | Error::InvalidCycleForm(_) | Error::InvalidPattern(_) => {
            CstStatus::Parse
        }
        Error::CapExceeded { .. } => CstStatus::CapExceeded,
        _ => CstStatus::InvalidArgument,
    }
}

struct Failure(CstStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

/// Runs `f`, storing its value in `out` on success and recording the error
/// otherwise.
fn guard<T>(out: *mut T, f: impl FnOnce() -> FfiResult<T>) -> CstStatus {
    if out.is_null() {
        set_error("null output pointer");
        return CstStatus::NullPointer;
    }
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(v)) => {
            unsafe { out.write(v) };
            CstStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            CstStatus::Panic
        }
    }
}

unsafe fn text<'a>(s: *const c_char) -> FfiResult<&'a str> {
    if s.is_null() {
        return Err(Failure(CstStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(CstStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(CstStatus::NullPointer, "null handle".into()))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the last failure on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn cst_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn cst_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

#[no_mangle]
pub unsafe extern "C" fn cst_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Member `n` of a named family (`P`, `V`, `Pder`, `Vder`, `W`, `Wbar`,
/// `S`, `T`, `runs`, `combinedR`, `combinedI`).
#[no_mangle]
pub unsafe extern "C" fn cst_poly_family(family: *const c_char, n: usize, out: *mut *mut CstPoly) -> CstStatus {
    guard(out, || {
        let fam: Family = text(family)?.parse()?;
        Ok(boxed(CstPoly(fam.nth(n)?)))
    })
}

/// Parses canonical or free-form polynomial text such as `(1+5q)x + x^2y`.
#[no_mangle]
pub unsafe extern "C" fn cst_poly_parse(src: *const c_char, out: *mut *mut CstPoly) -> CstStatus {
    guard(out, || Ok(boxed(CstPoly(text(src)?.parse()?))))
}

/// Canonical text; free with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_poly_to_string(p: *const CstPoly, out: *mut *mut c_char) -> CstStatus {
    guard(out, || Ok(c_string(handle(p)?.0.to_string())))
}

/// Value at integer `(q, x, y)` as decimal text; free with
/// `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_poly_evaluate(
    p: *const CstPoly,
    q: i64,
    x: i64,
    y: i64,
    out: *mut *mut c_char,
) -> CstStatus {
    guard(out, || Ok(c_string(handle(p)?.0.evaluate(q, x, y).to_string())))
}

/// Non-zero when the two polynomials are equal.
#[no_mangle]
pub unsafe extern "C" fn cst_poly_equal(a: *const CstPoly, b: *const CstPoly, out: *mut bool) -> CstStatus {
    guard(out, || Ok(handle(a)?.0 == handle(b)?.0))
}

#[no_mangle]
pub unsafe extern "C" fn cst_poly_free(p: *mut CstPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Rows `1..=rows` of a named triangle (`M`, `Mbar`, `D`, `Dbar`, `runs`,
/// `combinedR`, `combinedI`, `stirlingS`, `stirlingT`).
#[no_mangle]
pub unsafe extern "C" fn cst_triangle_compute(
    family: *const c_char,
    rows: usize,
    out: *mut *mut CstTriangle,
) -> CstStatus {
    guard(out, || {
        let fam: TriangleFamily = text(family)?.parse()?;
        Ok(boxed(CstTriangle(Triangle::compute(fam, rows)?)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cst_triangle_rows(t: *const CstTriangle, out: *mut usize) -> CstStatus {
    guard(out, || Ok(handle(t)?.0.rows.len()))
}

/// Column of the first stored entry in every row.
#[no_mangle]
pub unsafe extern "C" fn cst_triangle_offset(t: *const CstTriangle, out: *mut usize) -> CstStatus {
    guard(out, || Ok(handle(t)?.0.offset))
}

/// Number of stored entries in row `n` (1-based).
#[no_mangle]
pub unsafe extern "C" fn cst_triangle_row_len(t: *const CstTriangle, n: usize, out: *mut usize) -> CstStatus {
    guard(out, || {
        let t = handle(t)?;
        Ok(t.0.row(checked_row(t, n)?).len())
    })
}

/// Entry `k` (0-based, from the offset) of row `n` as decimal text; free
/// with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_triangle_entry(
    t: *const CstTriangle,
    n: usize,
    k: usize,
    out: *mut *mut c_char,
) -> CstStatus {
    guard(out, || {
        let t = handle(t)?;
        let r = t.0.row(checked_row(t, n)?);
        let v = r
            .get(k)
            .ok_or_else(|| Failure(CstStatus::OutOfRange, format!("row {n} has {} entries", r.len())))?;
        Ok(c_string(v.to_string()))
    })
}

/// Validates a 1-based row index.
fn checked_row(t: &CstTriangle, n: usize) -> FfiResult<usize> {
    let rows = t.0.rows.len();
    if n == 0 || n > rows {
        return Err(Failure(CstStatus::OutOfRange, format!("row {n} outside 1..={rows}")));
    }
    Ok(n)
}

/// The triangle document the CLI prints with `--format json`.
#[no_mangle]
pub unsafe extern "C" fn cst_triangle_to_json(t: *const CstTriangle, out: *mut *mut c_char) -> CstStatus {
    guard(out, || Ok(c_string(cli::triangle_document(&handle(t)?.0))))
}

#[no_mangle]
pub unsafe extern "C" fn cst_triangle_free(t: *mut CstTriangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// From one-line notation such as `64713258` or `10,2,1,...`.
#[no_mangle]
pub unsafe extern "C" fn cst_permutation_from_word(src: *const c_char, out: *mut *mut CstPermutation) -> CstStatus {
    guard(out, || {
        let word: Permutation = text(src)?.parse()?;
        let written = word.cycle_form();
        Ok(boxed(CstPermutation { word, written }))
    })
}

/// From a written cycle form such as `(6,1,4,2)(7,3,5)(8)`. Cyclic
/// statistics are read from the form as written.
#[no_mangle]
pub unsafe extern "C" fn cst_permutation_from_cycles(src: *const c_char, out: *mut *mut CstPermutation) -> CstStatus {
    guard(out, || {
        let written: CycleForm = text(src)?.parse()?;
        Ok(boxed(CstPermutation {
            word: written.to_permutation(),
            written,
        }))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cst_permutation_stats(p: *const CstPermutation, out: *mut CstStats) -> CstStatus {
    guard(out, || {
        let p = handle(p)?;
        let c = p.written.cycle_stats();
        let l = p.word.linear_stats();
        let n = |v: usize| v as u32;
        Ok(CstStats {
            cpk: n(c.cpk),
            cval: n(c.cval),
            cyc: n(c.cyc),
            fix: n(c.fix),
            pk: n(l.pk),
            val: n(l.val),
            lpk: n(l.lpk),
            runs: n(l.runs),
        })
    })
}

/// The cycle form as written; free with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_permutation_cycles(p: *const CstPermutation, out: *mut *mut c_char) -> CstStatus {
    guard(out, || Ok(c_string(handle(p)?.written.to_string())))
}

/// One-line notation; free with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_permutation_word(p: *const CstPermutation, out: *mut *mut c_char) -> CstStatus {
    guard(out, || Ok(c_string(handle(p)?.word.to_string())))
}

/// The switched cycle form, as a new handle.
#[no_mangle]
pub unsafe extern "C" fn cst_permutation_switch(p: *const CstPermutation, out: *mut *mut CstPermutation) -> CstStatus {
    guard(out, || {
        let written = handle(p)?.written.switching();
        Ok(boxed(CstPermutation {
            word: written.to_permutation(),
            written,
        }))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cst_permutation_free(p: *mut CstPermutation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Runs a verification suite (`all`, `bell`, `pell`, `euler`, `stirling`,
/// `degrees`, `xcoeff`, `logconcave`, `egf`, `oracle`, `rowsums`,
/// `switching`, `linear`). A failing check is not an error: inspect the
/// report with `cst_report_passed`.
#[no_mangle]
pub unsafe extern "C" fn cst_verify(
    suite: *const c_char,
    max_n: usize,
    oracle_cap: usize,
    egf_order: usize,
    jobs: usize,
    out: *mut *mut CstReport,
) -> CstStatus {
    guard(out, || {
        let suite: Suite = text(suite)?.parse()?;
        if jobs == 0 {
            return Err(Failure(CstStatus::InvalidArgument, "jobs must be at least 1".into()));
        }
        let config = VerifyConfig {
            max_n,
            oracle_cap,
            egf_order,
            jobs,
        };
        let aggregate = run_suite(suite, &config)?;
        Ok(boxed(CstReport {
            suite,
            config,
            aggregate,
        }))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cst_report_passed(r: *const CstReport, out: *mut bool) -> CstStatus {
    guard(out, || Ok(handle(r)?.aggregate.passed()))
}

/// Number of non-blocking conjecture findings.
#[no_mangle]
pub unsafe extern "C" fn cst_report_findings(r: *const CstReport, out: *mut usize) -> CstStatus {
    guard(out, || Ok(handle(r)?.aggregate.findings))
}

/// Plain-text report as printed by the CLI; free with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_report_to_string(r: *const CstReport, out: *mut *mut c_char) -> CstStatus {
    guard(out, || Ok(c_string(handle(r)?.aggregate.to_string())))
}

/// JSON report as printed by the CLI; free with `cst_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cst_report_to_json(r: *const CstReport, out: *mut *mut c_char) -> CstStatus {
    guard(out, || {
        let r = handle(r)?;
        Ok(c_string(cli::report_json(r.suite, &r.config, &r.aggregate)))
    })
}

#[no_mangle]
pub unsafe extern "C" fn cst_report_free(r: *mut CstReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}
