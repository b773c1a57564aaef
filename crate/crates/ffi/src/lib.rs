//! C ABI over `jordan-strata`.
//!
//! Every function returns a status code (`JS_OK` on success) and writes its
//! result through an out-pointer. On failure a message is kept per thread
//! and can be read with [`js_last_error`]. Solved and certified results are
//! returned as opaque handles that must be released with the matching
//! `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use jordan_strata::certify::{certify_plan, rat, Lemma};
use jordan_strata::family::{self, FamilySpec};
use jordan_strata::minimax::{solve_minimax, MinimaxFamily, MinimaxResult};
use jordan_strata::solve::sup_abs_deviation;
use jordan_strata::{FamilyKind, Interval01};

pub const JS_OK: i32 = 0;
pub const JS_ERR_NULL_POINTER: i32 = 1;
pub const JS_ERR_INVALID_ARGUMENT: i32 = 2;
pub const JS_ERR_SOLVE: i32 = 3;
pub const JS_ERR_CERTIFICATE: i32 = 4;
pub const JS_ERR_PANIC: i32 = 5;

pub const JS_KIND_TWO_PARAM: u32 = 0;
pub const JS_KIND_A_TYPE: u32 = 1;
pub const JS_KIND_B_TYPE: u32 = 2;
pub const JS_KIND_FIXED_Q: u32 = 3;

pub const JS_LEMMA_GA: u32 = 0;
pub const JS_LEMMA_GB: u32 = 1;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

/// Runs `f`, turning `Err((code, message))` and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (i32, String)>) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            JS_OK
        }
        Ok(Err((code, msg))) => {
            set_error(msg);
            code
        }
        Err(_) => {
            set_error("internal panic");
            JS_ERR_PANIC
        }
    }
}

fn invalid(e: impl ToString) -> (i32, String) {
    (JS_ERR_INVALID_ARGUMENT, e.to_string())
}

fn spec(kind: u32, p: f64, q: f64) -> Result<FamilySpec, (i32, String)> {
    let kind = match kind {
        JS_KIND_TWO_PARAM => FamilyKind::TwoParam,
        JS_KIND_A_TYPE => FamilyKind::AType,
        JS_KIND_B_TYPE => FamilyKind::BType,
        JS_KIND_FIXED_Q => FamilyKind::FixedQ,
        other => return Err(invalid(format!("unknown family kind {other}"))),
    };
    FamilySpec::from_parts(kind, p, q).map_err(invalid)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (i32, String)> {
    if out.is_null() {
        return Err((JS_ERR_NULL_POINTER, "null out-pointer".into()));
    }
    out.write(v);
    Ok(())
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn js_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// `sin(x)/x`, with 1 at 0.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn js_sinc(x: f64, out: *mut f64) -> i32 {
    guard(|| {
        if !(x >= 0.0) {
            return Err(invalid(format!("x must be >= 0, got {x}")));
        }
        write(out, family::sinc(x))
    })
}

/// `sinc x - 2/pi - p (pi^q - (2x)^q)` on `(0, pi/2)`. For A- and B-type
/// families `p` is ignored; for fixed-q families `q` must be 1, 2, 3 or 4.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn js_phi(kind: u32, p: f64, q: f64, x: f64, out: *mut f64) -> i32 {
    guard(|| {
        let s = spec(kind, p, q)?;
        write(out, family::phi(&s, x).map_err(invalid)?)
    })
}

/// Supremum of `|phi|` over `(0, pi/2)`.
///
/// # Safety
/// `out` must be null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn js_sup_deviation(kind: u32, p: f64, q: f64, grid_n: usize, tol: f64, out: *mut f64) -> i32 {
    guard(|| {
        let s = spec(kind, p, q)?;
        let d = sup_abs_deviation(&s, &Interval01::for_spec(&s), grid_n, tol).map_err(|e| (JS_ERR_SOLVE, e.to_string()))?;
        write(out, d)
    })
}

/// A solved minimax member.
pub struct JsMinimax {
    result: MinimaxResult,
}

/// Solves for the minimax member of an A-type (`JS_KIND_A_TYPE`), B-type
/// (`JS_KIND_B_TYPE`) or fixed-q (`JS_KIND_FIXED_Q`, with `fixed_q` in 1..=4)
/// family. `fixed_q` is ignored for the other kinds.
///
/// # Safety
/// `out` must be null or valid for a write. The handle written there must
/// be released with `js_minimax_free`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_solve(kind: u32, fixed_q: u32, tol: f64, out: *mut *mut JsMinimax) -> i32 {
    if !out.is_null() {
        out.write(ptr::null_mut());
    }
    guard(|| {
        let family = match kind {
            JS_KIND_A_TYPE => MinimaxFamily::AType,
            JS_KIND_B_TYPE => MinimaxFamily::BType,
            JS_KIND_FIXED_Q if (1..=4).contains(&fixed_q) => MinimaxFamily::FixedQ(fixed_q),
            JS_KIND_FIXED_Q => return Err(invalid(format!("fixed q must be 1..=4, got {fixed_q}"))),
            other => return Err(invalid(format!("no minimax member for family kind {other}"))),
        };
        if out.is_null() {
            return Err((JS_ERR_NULL_POINTER, "null out-pointer".into()));
        }
        let result = solve_minimax(family, tol).map_err(|e| (JS_ERR_SOLVE, e.to_string()))?;
        write(out, Box::into_raw(Box::new(JsMinimax { result })))
    })
}

unsafe fn minimax_field(h: *const JsMinimax, f: impl Fn(&MinimaxResult) -> f64) -> f64 {
    h.as_ref().map_or(f64::NAN, |h| f(&h.result))
}

/// The optimal parameter: `q` for A/B-type families, `p` for fixed-q. NaN
/// for a null handle.
///
/// # Safety
/// `h` must be null or a live handle from `js_minimax_solve`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_param(h: *const JsMinimax) -> f64 {
    minimax_field(h, |r| r.param0)
}

/// The minimax error.
///
/// # Safety
/// `h` must be null or a live handle from `js_minimax_solve`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_deviation(h: *const JsMinimax) -> f64 {
    minimax_field(h, |r| r.d0)
}

/// Coefficient `p` of the solved member.
///
/// # Safety
/// `h` must be null or a live handle from `js_minimax_solve`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_coefficient(h: *const JsMinimax) -> f64 {
    minimax_field(h, |r| r.coefficient())
}

/// Exponent `q` of the solved member.
///
/// # Safety
/// `h` must be null or a live handle from `js_minimax_solve`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_exponent(h: *const JsMinimax) -> f64 {
    minimax_field(h, |r| r.exponent())
}

/// Gap between the two equalised magnitudes.
///
/// # Safety
/// `h` must be null or a live handle from `js_minimax_solve`.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_residual(h: *const JsMinimax) -> f64 {
    minimax_field(h, |r| r.residual)
}

/// # Safety
/// `h` must be null or a handle from `js_minimax_solve` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn js_minimax_free(h: *mut JsMinimax) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// A valid sign certificate.
pub struct JsCertificate {
    text: CString,
    combined: CString,
    root_count: usize,
}

/// Certifies one of the two polynomial lemmas (`JS_LEMMA_GA`, `JS_LEMMA_GB`)
/// on the interval `(lo_num/lo_den, hi_num/hi_den)`; the default used
/// elsewhere is `(0, 8/5)`. A failed certificate
/// returns `JS_ERR_CERTIFICATE` and writes a null handle.
///
/// # Safety
/// `out` must be null or valid for a write. The handle written there must
/// be released with `js_certificate_free`.
#[no_mangle]
pub unsafe extern "C" fn js_certify(
    lemma: u32,
    lo_num: i64,
    lo_den: i64,
    hi_num: i64,
    hi_den: i64,
    out: *mut *mut JsCertificate,
) -> i32 {
    if !out.is_null() {
        out.write(ptr::null_mut());
    }
    guard(|| {
        let lemma = match lemma {
            JS_LEMMA_GA => Lemma::GaMonotonicity,
            JS_LEMMA_GB => Lemma::GbMonotonicity,
            other => return Err(invalid(format!("unknown lemma {other}"))),
        };
        if lo_den == 0 || hi_den == 0 {
            return Err(invalid("zero denominator"));
        }
        if out.is_null() {
            return Err((JS_ERR_NULL_POINTER, "null out-pointer".into()));
        }
        let lo = rat(lo_num, lo_den);
        let hi = rat(hi_num, hi_den);
        let b = certify_plan(&lemma.plan(), &lo, &hi).map_err(|e| (JS_ERR_CERTIFICATE, e.to_string()))?;
        let h = JsCertificate {
            text: CString::new(b.to_string()).expect("no nul in certificate text"),
            combined: CString::new(b.combined.to_string()).expect("no nul in polynomial"),
            root_count: b.certificate.root_count,
        };
        write(out, Box::into_raw(Box::new(h)))
    })
}

/// Canonical text of the certificate, owned by the handle. Null for a null
/// handle.
///
/// # Safety
/// `h` must be null or a live handle from `js_certify`.
#[no_mangle]
pub unsafe extern "C" fn js_certificate_text(h: *const JsCertificate) -> *const c_char {
    h.as_ref().map_or(ptr::null(), |h| h.text.as_ptr())
}

/// The certified polynomial as text, owned by the handle.
///
/// # Safety
/// `h` must be null or a live handle from `js_certify`.
#[no_mangle]
pub unsafe extern "C" fn js_certificate_polynomial(h: *const JsCertificate) -> *const c_char {
    h.as_ref().map_or(ptr::null(), |h| h.combined.as_ptr())
}

/// Sturm root count on the interval (0 for every valid certificate).
///
/// # Safety
/// `h` must be null or a live handle from `js_certify`.
#[no_mangle]
pub unsafe extern "C" fn js_certificate_root_count(h: *const JsCertificate) -> usize {
    h.as_ref().map_or(usize::MAX, |h| h.root_count)
}

/// # Safety
/// `h` must be null or a handle from `js_certify` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn js_certificate_free(h: *mut JsCertificate) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn js_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version contains a nul"),
    };
    VERSION.as_ptr()
}
