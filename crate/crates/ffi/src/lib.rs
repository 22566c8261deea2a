//! C interface to `motivic`.
//!
//! Classes cross the boundary as opaque `MotivicClass` handles owned by the
//! caller and released with [`motivic_class_free`]. Fallible calls return a
//! [`MotivicStatus`] and write their result through an out-pointer; the
//! message of the most recent failure on the calling thread is available from
//! [`motivic_last_error_message`]. Strings returned by this library are
//! released with [`motivic_string_free`].
//!
//! No call unwinds into C: panics are caught and reported as
//! `MOTIVIC_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use motivic::oracle::{self, Curve};
use motivic::strata::{assemble, verify_all, Registry, Target, VerificationSuite};
use motivic::{Error, MotiveClass};
use num_traits::ToPrimitive;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotivicStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Arity = 4,
    DivisionNotExact = 5,
    DivisionByZero = 6,
    NotEffective = 7,
    OutOfRange = 8,
    Unsupported = 9,
    BudgetExceeded = 10,
    /// A value does not fit the C integer type requested.
    Overflow = 11,
    Registry = 12,
    Panic = 13,
}

/// Plane curve germ for ideal counts.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MotivicCurve {
    /// `x^2 = 0`.
    Ribbon = 0,
    /// `xy = 0`.
    Node = 1,
}

/// An integer polynomial in `L`.
pub struct MotivicClass {
    inner: MotiveClass,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

type Failure = (MotivicStatus, String);

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> MotivicStatus {
    match err {
        Error::DivisionNotExact(_) => MotivicStatus::DivisionNotExact,
        Error::DivisionByZero => MotivicStatus::DivisionByZero,
        Error::NotEffective { .. } => MotivicStatus::NotEffective,
        Error::OutOfRange { .. } => MotivicStatus::OutOfRange,
        Error::Unsupported(_) => MotivicStatus::Unsupported,
        Error::Syntax(_) => MotivicStatus::Syntax,
        Error::Arity { .. } => MotivicStatus::Arity,
        Error::BudgetExceeded { .. } => MotivicStatus::BudgetExceeded,
        Error::Registry(_) => MotivicStatus::Registry,
    }
}

fn fail(err: Error) -> Failure {
    (status_of(&err), err.to_string())
}

fn null(what: &str) -> Failure {
    (MotivicStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure as the thread's last error, and converts
/// panics into [`MotivicStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> MotivicStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            MotivicStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            MotivicStatus::Panic
        }
    }
}

unsafe fn class_ref<'a>(c: *const MotivicClass, what: &str) -> Result<&'a MotiveClass, Failure> {
    c.as_ref().map(|c| &c.inner).ok_or_else(|| null(what))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| (MotivicStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_class(out: *mut *mut MotivicClass, inner: MotiveClass) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(Box::into_raw(Box::new(MotivicClass { inner })));
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn motivic_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL after a success.
/// The pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn motivic_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses and evaluates a DSL expression such as `"(Hilb6 - Omega(2,6))*P14"`.
///
/// # Safety
/// `source` must be NULL or a NUL-terminated string; `out` must be NULL or
/// valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_parse(
    source: *const c_char,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    guard(|| {
        let src = str_arg(source, "source")?;
        let class = motivic::dsl::eval_source(src).map_err(fail)?;
        write_class(out, class)
    })
}

/// Builds `sum_i coeffs[i] L^i`.
///
/// # Safety
/// `coeffs` must point to `len` readable values (it may be NULL when `len`
/// is 0); `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_from_coeffs(
    coeffs: *const i64,
    len: usize,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    guard(|| {
        let values: &[i64] = if len == 0 {
            &[]
        } else if coeffs.is_null() {
            return Err(null("coeffs"));
        } else {
            std::slice::from_raw_parts(coeffs, len)
        };
        write_class(out, MotiveClass::from_coeffs(values.iter().copied()))
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `class` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_free(class: *mut MotivicClass) {
    if !class.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(class))));
    }
}

/// # Safety
/// `class` must be NULL or a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_clone(
    class: *const MotivicClass,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    guard(|| write_class(out, class_ref(class, "class")?.clone()))
}

/// Degree of the polynomial; -1 for the zero class or a NULL handle.
///
/// # Safety
/// `class` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_degree(class: *const MotivicClass) -> i64 {
    class
        .as_ref()
        .and_then(|c| c.inner.degree())
        .map_or(-1, |d| d as i64)
}

/// Coefficient of `L^index` (0 beyond the degree).
///
/// # Safety
/// `class` must be NULL or a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_coeff(
    class: *const MotivicClass,
    index: usize,
    out: *mut i64,
) -> MotivicStatus {
    guard(|| {
        let c = class_ref(class, "class")?.coeff(index);
        write_out(out, big_to_i64(&c, "coefficient")?)
    })
}

fn big_to_i64(v: &impl ToPrimitive, what: &str) -> Result<i64, Failure> {
    v.to_i64().ok_or_else(|| {
        (
            MotivicStatus::Overflow,
            format!("{what} does not fit in int64_t"),
        )
    })
}

unsafe fn binary(
    a: *const MotivicClass,
    b: *const MotivicClass,
    out: *mut *mut MotivicClass,
    op: impl FnOnce(&MotiveClass, &MotiveClass) -> Result<MotiveClass, Error>,
) -> MotivicStatus {
    guard(|| {
        let (a, b) = (class_ref(a, "a")?, class_ref(b, "b")?);
        write_class(out, op(a, b).map_err(fail)?)
    })
}

/// `*out = a + b`.
///
/// # Safety
/// `a`, `b` must be NULL or live handles; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_add(
    a: *const MotivicClass,
    b: *const MotivicClass,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    binary(a, b, out, |a, b| Ok(a + b))
}

/// `*out = a - b`.
///
/// # Safety
/// As [`motivic_class_add`].
#[no_mangle]
pub unsafe extern "C" fn motivic_class_sub(
    a: *const MotivicClass,
    b: *const MotivicClass,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    binary(a, b, out, |a, b| Ok(a - b))
}

/// `*out = a * b`.
///
/// # Safety
/// As [`motivic_class_add`].
#[no_mangle]
pub unsafe extern "C" fn motivic_class_mul(
    a: *const MotivicClass,
    b: *const MotivicClass,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    binary(a, b, out, |a, b| Ok(a * b))
}

/// `*out = a / b` when the division is exact over the integers.
///
/// # Safety
/// As [`motivic_class_add`].
#[no_mangle]
pub unsafe extern "C" fn motivic_class_exact_div(
    a: *const MotivicClass,
    b: *const MotivicClass,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    binary(a, b, out, |a, b| a.exact_div(b))
}

/// `*out = Sym^n(class)`; the class must have non-negative coefficients.
///
/// # Safety
/// `class` must be NULL or a live handle; `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_sym_power(
    class: *const MotivicClass,
    n: u32,
    out: *mut *mut MotivicClass,
) -> MotivicStatus {
    guard(|| {
        let s = class_ref(class, "class")?.sym_power(n).map_err(fail)?;
        write_class(out, s)
    })
}

/// The class evaluated at `L = q`.
///
/// # Safety
/// `class` must be NULL or a live handle; `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_evaluate(
    class: *const MotivicClass,
    q: u32,
    out: *mut i64,
) -> MotivicStatus {
    guard(|| {
        let v = class_ref(class, "class")?.evaluate(q);
        write_out(out, big_to_i64(&v, "value")?)
    })
}

/// Euler number: the class at `L = 1`.
///
/// # Safety
/// As [`motivic_class_evaluate`].
#[no_mangle]
pub unsafe extern "C" fn motivic_class_euler(
    class: *const MotivicClass,
    out: *mut i64,
) -> MotivicStatus {
    guard(|| {
        let v = class_ref(class, "class")?.euler();
        write_out(out, big_to_i64(&v, "euler number")?)
    })
}

/// Whether the coefficient sequence reads the same reversed. False for NULL.
///
/// # Safety
/// `class` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_is_palindromic(class: *const MotivicClass) -> bool {
    class.as_ref().is_some_and(|c| c.inner.is_palindromic())
}

/// Whether two classes are equal. False if either is NULL.
///
/// # Safety
/// `a`, `b` must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_equal(
    a: *const MotivicClass,
    b: *const MotivicClass,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.inner == b.inner,
        _ => false,
    }
}

/// Text form such as `1 + 2L + L^2`; release with [`motivic_string_free`].
/// NULL for a NULL handle.
///
/// # Safety
/// `class` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn motivic_class_to_string(class: *const MotivicClass) -> *mut c_char {
    match class.as_ref() {
        Some(c) => into_c_string(c.inner.to_string()),
        None => ptr::null_mut(),
    }
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn motivic_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Assembles `target` (`"all"`, `"m41"`, ..., `"omega26"`) from the bundled
/// registry and writes the JSON report to `*out_json`. `*out_pass` is set to
/// whether every hard check passed; a mismatch is not an error status.
///
/// # Safety
/// `target` must be NULL or a NUL-terminated string; `out_json` and
/// `out_pass` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn motivic_verify_json(
    target: *const c_char,
    out_json: *mut *mut c_char,
    out_pass: *mut bool,
) -> MotivicStatus {
    guard(|| {
        let target = str_arg(target, "target")?;
        if out_json.is_null() || out_pass.is_null() {
            return Err(null("out"));
        }
        let registry = Registry::builtin();
        let suite = if target == "all" {
            verify_all(&registry)
        } else {
            let t: Target = target.parse().map_err(fail)?;
            VerificationSuite::new(vec![assemble(&registry, t)], None)
        };
        write_out(out_pass, suite.hard_pass())?;
        write_out(out_json, into_c_string(suite.to_json()))
    })
}

/// Number of `k`-dimensional subspaces of `F_q^n`, by enumeration.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn motivic_count_grassmannian(
    k: u32,
    n: u32,
    q: u32,
    out: *mut u64,
) -> MotivicStatus {
    guard(|| {
        let count = oracle::count_grassmannian(k as usize, n as usize, q).map_err(fail)?;
        write_out(out, count)
    })
}

/// Length-two subschemes of the plane rational over `F_q`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn motivic_count_hilb2_p2(q: u32, out: *mut u64) -> MotivicStatus {
    guard(|| write_out(out, oracle::count_hilb2_p2(q).map_err(fail)?))
}

/// Ideals of colength `c` in the completed local ring of the curve germ over
/// `F_q`, with the default enumeration budget.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn motivic_count_punctual_ideals(
    curve: MotivicCurve,
    c: u32,
    q: u32,
    out: *mut u64,
) -> MotivicStatus {
    guard(|| {
        let curve = match curve {
            MotivicCurve::Ribbon => Curve::Ribbon,
            MotivicCurve::Node => Curve::Node,
        };
        write_out(
            out,
            oracle::count_punctual_ideals(curve, c, q).map_err(fail)?,
        )
    })
}
