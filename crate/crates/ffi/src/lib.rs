//! C interface to the unisolve root finder.
//!
//! Every function returns a [`UnisolveStatus`]. On failure the message of
//! the most recent error on the calling thread is available from
//! [`unisolve_last_error`]. Reports are opaque and must be released with
//! [`unisolve_report_free`]; strings returned by this library are released
//! with [`unisolve_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use unisolve::render::report_json;
use unisolve::{parse_polynomial, solve_aberth, solve_classical, Complex64, Error, IterationSettings, Polynomial};
use unisolve::{SolveReport, SolverOptions, UnifiedSolver};

/// Result codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnisolveStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    ZeroPolynomial = 4,
    UnsupportedDegree = 5,
    Singular = 6,
    NoConvergence = 7,
    NumericError = 8,
    IndexOutOfRange = 9,
    InvalidArgument = 10,
}

/// Solver selection.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnisolveMethod {
    /// Unified decomposition with the Aberth fallback.
    Auto = 0,
    /// Unified decomposition; singular cases are errors.
    UnifiedStrict = 1,
    Classical = 2,
    Aberth = 3,
}

/// Opaque solve result.
pub struct UnisolveReport {
    report: SolveReport,
    sorted: Vec<Complex64>,
    special_case: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: UnisolveStatus, message: impl Into<String>) -> UnisolveStatus {
    set_last_error(message);
    status
}

fn status_of(err: &Error) -> UnisolveStatus {
    match err {
        Error::ZeroPolynomial => UnisolveStatus::ZeroPolynomial,
        Error::UnsupportedDegree { .. } => UnisolveStatus::UnsupportedDegree,
        Error::SingularDecomposition { .. } => UnisolveStatus::Singular,
        Error::NoConvergence { .. } => UnisolveStatus::NoConvergence,
        Error::Parse(_) => UnisolveStatus::ParseError,
        Error::InvalidConfig(_) | Error::LengthMismatch { .. } => UnisolveStatus::InvalidArgument,
        Error::NumericOverflow { .. } | Error::NotARoot { .. } => UnisolveStatus::NumericError,
    }
}

fn solve(poly: &Polynomial, method: UnisolveMethod) -> unisolve::Result<SolveReport> {
    match method {
        UnisolveMethod::Auto | UnisolveMethod::UnifiedStrict => {
            let options = SolverOptions {
                strict: method == UnisolveMethod::UnifiedStrict,
                ..SolverOptions::default()
            };
            UnifiedSolver::new(options)?.solve(poly)
        }
        UnisolveMethod::Classical => solve_classical(poly),
        UnisolveMethod::Aberth => solve_aberth(poly, &IterationSettings::default()),
    }
}

fn finish(result: unisolve::Result<SolveReport>, out: *mut *mut UnisolveReport) -> UnisolveStatus {
    match result {
        Ok(report) => {
            let sorted = report.sorted_roots();
            let special_case = CString::new(report.special_case().as_str()).expect("tag has no NUL");
            let boxed = Box::new(UnisolveReport {
                report,
                sorted,
                special_case,
            });
            // SAFETY: callers checked `out` for null.
            unsafe { *out = Box::into_raw(boxed) };
            UnisolveStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Solves the polynomial with `len` coefficients at `coeffs`, highest degree
/// first. On success `*out` receives a report owned by the caller.
///
/// # Safety
/// `coeffs` must point to `len` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unisolve_solve_coeffs(
    coeffs: *const f64,
    len: usize,
    method: UnisolveMethod,
    out: *mut *mut UnisolveReport,
) -> UnisolveStatus {
    if coeffs.is_null() || out.is_null() {
        return fail(UnisolveStatus::NullPointer, "null pointer argument");
    }
    *out = ptr::null_mut();
    let values = std::slice::from_raw_parts(coeffs, len).to_vec();
    finish(Polynomial::new(values).and_then(|p| solve(&p, method)), out)
}

/// Parses `text` (for example `"x^3 - 2x + 1"`) and solves it.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unisolve_solve_text(
    text: *const c_char,
    method: UnisolveMethod,
    out: *mut *mut UnisolveReport,
) -> UnisolveStatus {
    if text.is_null() || out.is_null() {
        return fail(UnisolveStatus::NullPointer, "null pointer argument");
    }
    *out = ptr::null_mut();
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return fail(UnisolveStatus::InvalidUtf8, "polynomial text is not valid UTF-8");
    };
    finish(parse_polynomial(text).and_then(|p| solve(&p, method)), out)
}

unsafe fn report_ref<'a>(report: *const UnisolveReport) -> Option<&'a UnisolveReport> {
    report.as_ref()
}

/// Number of roots in the report, or 0 for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_root_count(report: *const UnisolveReport) -> usize {
    report_ref(report).map_or(0, |r| r.sorted.len())
}

/// Root `index` in order of real part, then imaginary part.
///
/// # Safety
/// `report` must be null or a live report; `re` and `im` must be writable.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_root(
    report: *const UnisolveReport,
    index: usize,
    re: *mut f64,
    im: *mut f64,
) -> UnisolveStatus {
    let Some(r) = report_ref(report) else {
        return fail(UnisolveStatus::NullPointer, "null report");
    };
    if re.is_null() || im.is_null() {
        return fail(UnisolveStatus::NullPointer, "null output pointer");
    }
    let Some(z) = r.sorted.get(index) else {
        return fail(
            UnisolveStatus::IndexOutOfRange,
            format!("root index {index} out of range (report has {})", r.sorted.len()),
        );
    };
    *re = z.re;
    *im = z.im;
    UnisolveStatus::Ok
}

/// Largest scaled residual over the roots, or NaN for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_max_residual(report: *const UnisolveReport) -> f64 {
    report_ref(report).map_or(f64::NAN, |r| r.report.max_residual)
}

/// Special-case tag such as `"none"` or `"biquadratic"`. The string lives as
/// long as the report; do not free it.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_special_case(report: *const UnisolveReport) -> *const c_char {
    report_ref(report).map_or(ptr::null(), |r| r.special_case.as_ptr())
}

/// JSON rendering of the report, the same document the CLI prints. Release
/// the result with [`unisolve_string_free`]. Returns null for a null report.
///
/// # Safety
/// `report` must be null or a live report.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_json(report: *const UnisolveReport, with_trace: bool) -> *mut c_char {
    let Some(r) = report_ref(report) else {
        set_last_error("null report");
        return ptr::null_mut();
    };
    CString::new(report_json(&r.report, with_trace)).map_or(ptr::null_mut(), CString::into_raw)
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a report not yet freed.
#[no_mangle]
pub unsafe extern "C" fn unisolve_report_free(report: *mut UnisolveReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn unisolve_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null if none. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn unisolve_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn unisolve_status_message(status: UnisolveStatus) -> *const c_char {
    let s: &'static CStr = match status {
        UnisolveStatus::Ok => c"ok",
        UnisolveStatus::NullPointer => c"null pointer argument",
        UnisolveStatus::InvalidUtf8 => c"invalid UTF-8 input",
        UnisolveStatus::ParseError => c"polynomial could not be parsed",
        UnisolveStatus::ZeroPolynomial => c"zero polynomial",
        UnisolveStatus::UnsupportedDegree => c"unsupported degree",
        UnisolveStatus::Singular => c"singular decomposition",
        UnisolveStatus::NoConvergence => c"iteration did not converge",
        UnisolveStatus::NumericError => c"numeric error",
        UnisolveStatus::IndexOutOfRange => c"index out of range",
        UnisolveStatus::InvalidArgument => c"invalid argument",
    };
    s.as_ptr()
}
