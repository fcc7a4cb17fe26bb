//! C ABI over `horadam`.
//!
//! Every function returns a [`HoradamStatus`] and writes results through out
//! pointers. On failure a message is kept per thread and can be read with
//! [`horadam_last_error`]. Parameter sets are opaque handles created by
//! [`horadam_params_new`] or [`horadam_params_named`] and released with
//! [`horadam_params_free`]. Strings returned to the caller are released with
//! [`horadam_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use horadam::bounds::{self, Branch, ClassPoint, Variant};
use horadam::poly::{self, Family};
use horadam::rational::from_f64;
use horadam::verify::{search_max, GridSpec, Objective};
use horadam::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A denominator vanished or the roots coincide.
    Degenerate = 3,
    /// Internal error; the message says where.
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamFamily {
    Fibonacci = 0,
    Lucas = 1,
    Pell = 2,
    PellLucas = 3,
    ChebyshevU = 4,
    ChebyshevT = 5,
    HoradamNumbers = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamVariant {
    Published = 0,
    Derived = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamBranch {
    First = 1,
    Second = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HoradamObjective {
    A2 = 0,
    A3 = 1,
    /// `|a3 - eta a2^2|`; uses the `eta` argument.
    FeketeSzego = 2,
}

/// Outcome of a grid search. Non-finite bounds mean the closed form is vacuous.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HoradamSearchSummary {
    pub max_value: f64,
    pub p1: f64,
    pub p2: f64,
    pub q2: f64,
    pub bound_published: f64,
    pub bound_derived: f64,
    pub margin_derived: f64,
    pub violation: bool,
}

/// Opaque parameter set `(a, b, p, q)`.
pub struct HoradamParams {
    inner: poly::HoradamParams,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(HoradamStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_degeneracy() {
            HoradamStatus::Degenerate
        } else {
            HoradamStatus::InvalidArgument
        };
        Failure(status, e.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(HoradamStatus::NullPointer, format!("{name} is null"))
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure(HoradamStatus::InvalidArgument, msg.into())
}

/// Runs `body`, clearing the error slot on success and recording it otherwise.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HoradamStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HoradamStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(msg);
            HoradamStatus::Panic
        }
    }
}

unsafe fn params<'a>(handle: *const HoradamParams) -> Result<&'a poly::HoradamParams, Failure> {
    handle.as_ref().map(|h| &h.inner).ok_or_else(|| null("params"))
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn finite(v: f64, name: &str) -> Result<f64, Failure> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(invalid(format!("{name} must be finite")))
    }
}

fn variant(v: HoradamVariant) -> Variant {
    match v {
        HoradamVariant::Published => Variant::Published,
        HoradamVariant::Derived => Variant::Derived,
    }
}

fn point(handle: *const HoradamParams, x: f64) -> Result<ClassPoint, Failure> {
    let p = unsafe { params(handle)? };
    Ok(ClassPoint::new(p.clone(), finite(x, "x")?))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn horadam_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Custom parameter set. The doubles are taken at their exact binary value.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_new(
    a: f64,
    b: f64,
    p: f64,
    q: f64,
    out: *mut *mut HoradamParams,
) -> HoradamStatus {
    guard(|| {
        let exact = |v: f64, name: &str| from_f64(v).ok_or_else(|| invalid(format!("{name} must be finite")));
        let inner = poly::HoradamParams::custom(exact(a, "a")?, exact(b, "b")?, exact(p, "p")?, exact(q, "q")?);
        write(out, Box::into_raw(Box::new(HoradamParams { inner })), "out")
    })
}

/// Parameter set of a named family.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_named(family: HoradamFamily, out: *mut *mut HoradamParams) -> HoradamStatus {
    guard(|| {
        let tag = match family {
            HoradamFamily::Fibonacci => Family::Fibonacci,
            HoradamFamily::Lucas => Family::Lucas,
            HoradamFamily::Pell => Family::Pell,
            HoradamFamily::PellLucas => Family::PellLucas,
            HoradamFamily::ChebyshevU => Family::ChebyshevU,
            HoradamFamily::ChebyshevT => Family::ChebyshevT,
            HoradamFamily::HoradamNumbers => Family::HoradamNumbers,
        };
        let inner = poly::family_params(tag);
        write(out, Box::into_raw(Box::new(HoradamParams { inner })), "out")
    })
}

/// # Safety
/// `handle` must be null or come from `horadam_params_new`/`horadam_params_named`,
/// and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn horadam_params_free(handle: *mut HoradamParams) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// `h_n(x)` by the recurrence; `n >= 1`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_eval(handle: *const HoradamParams, n: usize, x: f64, out: *mut f64) -> HoradamStatus {
    guard(|| {
        let v = poly::horadam_eval(params(handle)?, n, finite(x, "x")?)?;
        write(out, v, "out")
    })
}

/// `h_n(x)` from the characteristic roots.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_binet(handle: *const HoradamParams, n: usize, x: f64, out: *mut f64) -> HoradamStatus {
    guard(|| {
        let v = poly::binet_eval(params(handle)?, n, finite(x, "x")?)?;
        write(out, v, "out")
    })
}

/// `h_n` as text, e.g. `"x^2 + 1"`. Free the result with `horadam_string_free`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_polynomial_string(
    handle: *const HoradamParams,
    n: usize,
    out: *mut *mut c_char,
) -> HoradamStatus {
    guard(|| {
        let text = poly::horadam(params(handle)?, n)?.to_string();
        let c = CString::new(text).map_err(|e| invalid(e.to_string()))?;
        write(out, c.into_raw(), "out")
    })
}

/// # Safety
/// `s` must be null or come from this library, and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn horadam_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Bound on `|a2|`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_bound_a2(
    handle: *const HoradamParams,
    x: f64,
    which: HoradamVariant,
    out: *mut f64,
) -> HoradamStatus {
    guard(|| write(out, bounds::bound_a2(&point(handle, x)?, variant(which))?.value, "out"))
}

/// Bound on `|a3|`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_bound_a3(handle: *const HoradamParams, x: f64, out: *mut f64) -> HoradamStatus {
    guard(|| write(out, bounds::bound_a3(&point(handle, x)?)?.value, "out"))
}

/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_theta(handle: *const HoradamParams, x: f64, eta: f64, out: *mut f64) -> HoradamStatus {
    guard(|| {
        let pt = point(handle, x)?.with_eta(finite(eta, "eta")?);
        write(out, bounds::theta(&pt)?, "out")
    })
}

/// Bound on `|a3 - eta a2^2|` and the branch it came from. `branch` may be null.
///
/// # Safety
/// `handle` must be a live handle, `out` valid for writes, `branch` null or valid.
#[no_mangle]
pub unsafe extern "C" fn horadam_fekete_szego(
    handle: *const HoradamParams,
    x: f64,
    eta: f64,
    which: HoradamVariant,
    out: *mut f64,
    branch: *mut HoradamBranch,
) -> HoradamStatus {
    guard(|| {
        let pt = point(handle, x)?.with_eta(finite(eta, "eta")?);
        let r = bounds::fekete_szego_bound(&pt, variant(which))?;
        write(out, r.value, "out")?;
        if !branch.is_null() {
            let b = match r.branch {
                Some(Branch::Second) => HoradamBranch::Second,
                _ => HoradamBranch::First,
            };
            branch.write(b);
        }
        Ok(())
    })
}

/// Grid search for the largest value of `objective` over feasible Schwarz
/// coefficients, with the default three refinement rounds. `resolution >= 11`.
///
/// # Safety
/// `handle` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn horadam_search_max(
    handle: *const HoradamParams,
    x: f64,
    objective: HoradamObjective,
    eta: f64,
    resolution: usize,
    out: *mut HoradamSearchSummary,
) -> HoradamStatus {
    guard(|| {
        let pt = point(handle, x)?;
        let objective = match objective {
            HoradamObjective::A2 => Objective::A2,
            HoradamObjective::A3 => Objective::A3,
            HoradamObjective::FeketeSzego => Objective::FeketeSzego(finite(eta, "eta")?),
        };
        let r = search_max(&pt, objective, &GridSpec::new(resolution)?)?;
        let summary = HoradamSearchSummary {
            max_value: r.max_value,
            p1: r.argmax.p1,
            p2: r.argmax.p2,
            q2: r.argmax.q2,
            bound_published: r.bound_published,
            bound_derived: r.bound_derived,
            margin_derived: r.margin_derived,
            violation: r.is_violation(),
        };
        write(out, summary, "out")
    })
}
