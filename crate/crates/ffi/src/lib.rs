//! C ABI over `tclink`.
//!
//! Objects are opaque handles created by `tcl_*_new`/`tcl_*_parse` and
//! released with the matching `tcl_*_free`. Every fallible call returns a
//! [`TclStatus`]; on failure a message is kept per thread and can be
//! fetched with [`tcl_last_error_message`]. Strings handed out by the
//! library are released with [`tcl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tclink::alexander::{unknot_check, UnknotVerdict};
use tclink::braid::{parse_braid, BraidWord};
use tclink::cocycle::cocycle_invariant;
use tclink::garside::braids_equal;
use tclink::presentation::{abelianization, quotient_by_center, tietze_eliminate, torus_covering_group, CommutationPolicy};
use tclink::quandle::{torus_colorings, Quandle};
use tclink::quotients::{finite_quotient_count, TargetGroup};
use tclink::ribbon::{ribbon_verdict, RibbonVerdict};
use tclink::transforms::{h_membership, rho_with, tau, ChartData, IntMatrix3, RotationConvention};
use tclink::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TclStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DegreeMismatch = 4,
    NotCommuting = 5,
    InvalidArgument = 6,
    CapExceeded = 7,
    NotAKnot = 8,
    Movie = 9,
    Panic = 10,
}

/// Outcome of a three-valued decision.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TclVerdict {
    Yes = 0,
    No = 1,
    Unknown = 2,
}

/// Homomorphism counts into a finite group.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TclQuotientCounts {
    pub homomorphisms: u64,
    pub epimorphisms: u64,
    pub abelian_image: u64,
    pub central_violations: u64,
}

/// Opaque braid word.
pub struct TclBraid(BraidWord);

/// Opaque commuting pair of boundary braids.
pub struct TclChart(ChartData);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> TclStatus {
    match e {
        Error::Malformed(_) | Error::IndexOutOfRange { .. } => TclStatus::Parse,
        Error::DegreeMismatch { .. } | Error::InvalidDegree(_) => TclStatus::DegreeMismatch,
        Error::NotCommuting => TclStatus::NotCommuting,
        Error::CapExceeded { .. } => TclStatus::CapExceeded,
        Error::NotAKnot(_) => TclStatus::NotAKnot,
        Error::IllegalMove { .. } | Error::MovieGeneration(_) | Error::ColoringNotFixed => TclStatus::Movie,
        Error::InvalidArgument(_) | Error::UnsupportedTarget(_) | Error::QuandleAxiom(_) => {
            TclStatus::InvalidArgument
        }
    }
}

enum Fail {
    Status(TclStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        Fail::Lib(e)
    }
}

fn guard<F: FnOnce() -> Result<(), Fail>>(f: F) -> TclStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TclStatus::Ok,
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(msg);
            s
        }
        Err(_) => {
            set_error("internal panic".into());
            TclStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(TclStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(TclStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn owned_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail::Status(TclStatus::InvalidArgument, "string contains NUL".into()))
}

/// Library version, a static string that must not be freed.
#[no_mangle]
pub extern "C" fn tcl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Free with
/// [`tcl_string_free`].
#[no_mangle]
pub extern "C" fn tcl_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_deref() {
        Some(m) => CString::new(m.replace('\0', " ")).map(CString::into_raw).unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    })
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tcl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a braid word such as `"1 -2 3"`, `"D^2"` or `"(1 2 3)^4"`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_braid_parse(text_: *const c_char, degree: usize, out: *mut *mut TclBraid) -> TclStatus {
    guard(|| {
        let w = parse_braid(text(text_, "text")?, degree)?;
        put(out, Box::into_raw(Box::new(TclBraid(w))), "out")
    })
}

/// # Safety
/// `b` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tcl_braid_free(b: *mut TclBraid) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Degree of a braid, or 0 for NULL.
///
/// # Safety
/// `b` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tcl_braid_degree(b: *const TclBraid) -> usize {
    b.as_ref().map_or(0, |b| b.0.degree())
}

/// Signed letters as text. Free with [`tcl_string_free`].
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_braid_to_string(b: *const TclBraid, out: *mut *mut c_char) -> TclStatus {
    guard(|| {
        let b = handle(b, "braid")?;
        put(out, owned_string(b.0.to_string())?, "out")
    })
}

/// Equality in the braid group.
///
/// # Safety
/// `x`, `y` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_braids_equal(x: *const TclBraid, y: *const TclBraid, out: *mut bool) -> TclStatus {
    guard(|| {
        let eq = braids_equal(&handle(x, "x")?.0, &handle(y, "y")?.0)?;
        put(out, eq, "out")
    })
}

/// Three-valued unknot test of the closure of `b`.
///
/// # Safety
/// `b` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_braid_unknot(b: *const TclBraid, out: *mut TclVerdict) -> TclStatus {
    guard(|| {
        let v = match unknot_check(&handle(b, "braid")?.0)? {
            UnknotVerdict::Unknot { .. } => TclVerdict::Yes,
            UnknotVerdict::NotUnknot { .. } => TclVerdict::No,
            UnknotVerdict::Unknown { .. } => TclVerdict::Unknown,
        };
        put(out, v, "out")
    })
}

/// Chart from two braid words of the given degree; fails with
/// `NotCommuting` when they do not commute.
///
/// # Safety
/// `a`, `b` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_new(
    degree: usize,
    a: *const c_char,
    b: *const c_char,
    out: *mut *mut TclChart,
) -> TclStatus {
    guard(|| {
        let a = parse_braid(text(a, "a")?, degree)?;
        let b = parse_braid(text(b, "b")?, degree)?;
        let c = ChartData::new(a, b)?;
        put(out, Box::into_raw(Box::new(TclChart(c))), "out")
    })
}

/// # Safety
/// `c` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_free(c: *mut TclChart) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Chart as text: `degree m`, `a: …`, `b: …` lines. Free with
/// [`tcl_string_free`].
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_to_string(c: *const TclChart, out: *mut *mut c_char) -> TclStatus {
    guard(|| put(out, owned_string(handle(c, "chart")?.0.to_text())?, "out"))
}

/// Cocycle invariant c0 + c1 t + c2 t^2 written to `out[0..3]`, using a
/// generated movie.
///
/// # Safety
/// `c` must be a live handle; `out` must point to three writable int64s.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_cocycle(c: *const TclChart, out: *mut i64) -> TclStatus {
    guard(|| {
        let c = &handle(c, "chart")?.0;
        let phi = cocycle_invariant(&c.a, &c.b, None)?;
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(phi.coefficients().as_ptr(), out, 3);
        Ok(())
    })
}

/// Number of colourings by the dihedral quandle of order `p`.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_coloring_count(c: *const TclChart, p: usize, out: *mut u64) -> TclStatus {
    guard(|| {
        let c = &handle(c, "chart")?.0;
        let q = Quandle::dihedral(p)?;
        put(out, torus_colorings(&c.a, &c.b, &q)?.len() as u64, "out")
    })
}

/// Abelianization of the link group, as text like `"Z + Z/4"`. Free with
/// [`tcl_string_free`].
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_abelianization(
    c: *const TclChart,
    quotient_center: bool,
    out: *mut *mut c_char,
) -> TclStatus {
    guard(|| {
        let c = &handle(c, "chart")?.0;
        let mut p = torus_covering_group(&c.a, &c.b, CommutationPolicy::Require)?;
        if quotient_center {
            p = quotient_by_center(&p)?;
        }
        put(out, owned_string(abelianization(&p).to_string())?, "out")
    })
}

/// Homomorphism counts into `target` (`"S3"`, `"D5"`, `"Z6"`, `"1"`).
///
/// # Safety
/// `c` must be a live handle; `target` a NUL-terminated string; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_quotients(
    c: *const TclChart,
    target: *const c_char,
    out: *mut TclQuotientCounts,
) -> TclStatus {
    guard(|| {
        let c = &handle(c, "chart")?.0;
        let t: TargetGroup = text(target, "target")?.parse()?;
        let p = tietze_eliminate(&torus_covering_group(&c.a, &c.b, CommutationPolicy::Require)?);
        let k = finite_quotient_count(&p, t)?;
        put(
            out,
            TclQuotientCounts {
                homomorphisms: k.homomorphisms,
                epimorphisms: k.epimorphisms,
                abelian_image: k.abelian_image,
                central_violations: k.central_violations,
            },
            "out",
        )
    })
}

/// Ribbon certificate search with `block_size` strands per block.
/// `verdict` is `Yes` (certificate written to `certificate`, if non-NULL)
/// or `Unknown` (reason written to `certificate`, if non-NULL).
///
/// # Safety
/// `c` must be a live handle; `verdict` writable; `certificate` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_ribbon(
    c: *const TclChart,
    block_size: usize,
    verdict: *mut TclVerdict,
    certificate: *mut *mut c_char,
) -> TclStatus {
    guard(|| {
        let c = &handle(c, "chart")?.0;
        if block_size == 0 || c.degree % block_size != 0 {
            return Err(Error::InvalidArgument(format!("block size {block_size} does not divide {}", c.degree)).into());
        }
        let (v, text) = match ribbon_verdict(&c.a, &c.b, block_size, c.degree / block_size, None)? {
            RibbonVerdict::Ribbon(d) => (TclVerdict::Yes, d.to_text()),
            RibbonVerdict::Unknown(reason) => (TclVerdict::Unknown, reason),
        };
        put(verdict, v, "verdict")?;
        if !certificate.is_null() {
            certificate.write(owned_string(text)?);
        }
        Ok(())
    })
}

/// Quarter rotation (a, b) -> (b^-1, a), or (reverse(b), a) when
/// `reverse` is set.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_rho(c: *const TclChart, reverse: bool, out: *mut *mut TclChart) -> TclStatus {
    guard(|| {
        let conv = if reverse { RotationConvention::Reverse } else { RotationConvention::Inverse };
        let r = rho_with(&handle(c, "chart")?.0, conv)?;
        put(out, Box::into_raw(Box::new(TclChart(r))), "out")
    })
}

/// Turning (a, b) -> (a, b a).
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_chart_tau(c: *const TclChart, out: *mut *mut TclChart) -> TclStatus {
    guard(|| {
        let t = tau(&handle(c, "chart")?.0)?;
        put(out, Box::into_raw(Box::new(TclChart(t))), "out")
    })
}

/// Membership of a row-major 3x3 integer matrix in H.
///
/// # Safety
/// `entries` must point to nine readable int64s; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tcl_h_membership(entries: *const i64, out: *mut bool) -> TclStatus {
    guard(|| {
        if entries.is_null() {
            return Err(null("entries"));
        }
        let e = std::slice::from_raw_parts(entries, 9);
        let m = IntMatrix3([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]]);
        put(out, h_membership(&m), "out")
    })
}
