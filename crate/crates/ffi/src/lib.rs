//! C interface: opaque handles for arrangements and Betti data, status
//! codes for every call, and a thread-local message for the last error.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ziegler_core::arrangement::{lattice_isomorphic, parse_arrangement, IntersectionLattice, LoadedArrangement};
use ziegler_core::error::{ArrangementError, ComputeError};
use ziegler_core::resolution::multiprime::{invariants, numerator, Backend, Policy};
use ziegler_core::resolution::BettiData;

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZieglerStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Compute = 4,
    Unsupported = 5,
    BufferTooSmall = 6,
    OutOfRange = 7,
    Panic = 8,
}

/// Arithmetic used for the heavy computations.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZieglerBackend {
    /// Two primes, a third one on disagreement.
    TwoPrime = 0,
    /// Three primes, majority vote.
    Certify = 1,
    /// Exact arithmetic over the input field.
    Exact = 2,
}

/// A parsed arrangement.
pub struct ZieglerArrangement {
    inner: LoadedArrangement,
}

/// Generator degrees of the steps of a minimal resolution.
pub struct ZieglerBetti {
    inner: BettiData,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let c = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), (ZieglerStatus, String)>) -> ZieglerStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZieglerStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            ZieglerStatus::Panic
        }
    }
}

fn compute_status(e: ComputeError) -> (ZieglerStatus, String) {
    let status = match e {
        ComputeError::UnsupportedDimension(_) | ComputeError::NotReduced => ZieglerStatus::Unsupported,
        _ => ZieglerStatus::Compute,
    };
    (status, e.to_string())
}

fn arrangement_status(e: ArrangementError) -> (ZieglerStatus, String) {
    match e {
        ArrangementError::Compute(c) => compute_status(c),
        ArrangementError::UnsupportedDimension(_) => (ZieglerStatus::Unsupported, e.to_string()),
        other => (ZieglerStatus::Parse, other.to_string()),
    }
}

fn null() -> (ZieglerStatus, String) {
    (ZieglerStatus::NullPointer, "null pointer argument".into())
}

unsafe fn as_ref<'a, T>(p: *const T) -> Result<&'a T, (ZieglerStatus, String)> {
    p.as_ref().ok_or_else(null)
}

fn backend(b: ZieglerBackend) -> Backend {
    match b {
        ZieglerBackend::TwoPrime => Backend::Modular {
            primes: Vec::new(),
            policy: Policy::TwoPrime,
        },
        ZieglerBackend::Certify => Backend::Modular {
            primes: Vec::new(),
            policy: Policy::Certify,
        },
        ZieglerBackend::Exact => Backend::Exact,
    }
}

fn lattice(a: &LoadedArrangement) -> IntersectionLattice {
    match a {
        LoadedArrangement::Rational(a) => a.intersection_lattice(),
        LoadedArrangement::Quadratic(a) => a.intersection_lattice(),
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call on the same thread.
#[no_mangle]
pub extern "C" fn ziegler_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses an arrangement in the text format. On success `*out` owns a
/// handle to release with `ziegler_arrangement_free`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ziegler_arrangement_parse(
    text: *const c_char,
    out: *mut *mut ZieglerArrangement,
) -> ZieglerStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (ZieglerStatus::InvalidUtf8, e.to_string()))?;
        let inner = parse_arrangement("<ffi>", s).map_err(arrangement_status)?;
        *out = Box::into_raw(Box::new(ZieglerArrangement { inner }));
        Ok(())
    })
}

/// # Safety
/// `a` must come from `ziegler_arrangement_parse` and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ziegler_arrangement_free(a: *mut ZieglerArrangement) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of hyperplanes and number of variables.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ziegler_arrangement_size(
    a: *const ZieglerArrangement,
    hyperplanes: *mut usize,
    nvars: *mut usize,
) -> ZieglerStatus {
    guard(|| {
        let a = as_ref(a)?;
        if hyperplanes.is_null() || nvars.is_null() {
            return Err(null());
        }
        let (h, n) = match &a.inner {
            LoadedArrangement::Rational(a) => (a.len(), a.nvars()),
            LoadedArrangement::Quadratic(a) => (a.len(), a.nvars()),
        };
        *hyperplanes = h;
        *nvars = n;
        Ok(())
    })
}

/// Total Tjurina number of a line arrangement.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ziegler_tjurina(a: *const ZieglerArrangement, out: *mut i64) -> ZieglerStatus {
    guard(|| {
        let a = as_ref(a)?;
        if out.is_null() {
            return Err(null());
        }
        let t = match &a.inner {
            LoadedArrangement::Rational(a) => a.tjurina_number(),
            LoadedArrangement::Quadratic(a) => a.tjurina_number(),
        };
        *out = t.map_err(arrangement_status)?;
        Ok(())
    })
}

/// Whether the intersection lattices are isomorphic.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ziegler_lattice_isomorphic(
    a: *const ZieglerArrangement,
    b: *const ZieglerArrangement,
    out: *mut bool,
) -> ZieglerStatus {
    guard(|| {
        let (a, b) = (as_ref(a)?, as_ref(b)?);
        if out.is_null() {
            return Err(null());
        }
        *out = lattice_isomorphic(&lattice(&a.inner), &lattice(&b.inner)).is_some();
        Ok(())
    })
}

/// Minimal resolution of the Jacobian syzygy module. On success `*out`
/// owns a handle to release with `ziegler_betti_free`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ziegler_betti(
    a: *const ZieglerArrangement,
    mode: ZieglerBackend,
    out: *mut *mut ZieglerBetti,
) -> ZieglerStatus {
    guard(|| {
        let a = as_ref(a)?;
        if out.is_null() {
            return Err(null());
        }
        let b = backend(mode);
        let inv = match &a.inner {
            LoadedArrangement::Rational(a) => invariants(&a.defining_polynomial(), &b),
            LoadedArrangement::Quadratic(a) => invariants(&a.defining_polynomial(), &b),
        }
        .map_err(compute_status)?;
        *out = Box::into_raw(Box::new(ZieglerBetti { inner: inv.value.betti }));
        Ok(())
    })
}

/// # Safety
/// `b` must come from `ziegler_betti` and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ziegler_betti_free(b: *mut ZieglerBetti) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Number of nonempty steps.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn ziegler_betti_steps(b: *const ZieglerBetti, out: *mut usize) -> ZieglerStatus {
    guard(|| {
        let b = as_ref(b)?;
        if out.is_null() {
            return Err(null());
        }
        *out = b.inner.steps().iter().filter(|s| !s.is_empty()).count();
        Ok(())
    })
}

/// Copies the sorted degrees of step `step` (0 for the generators) into
/// `buf`. `*len` receives the number of degrees; with a short buffer the
/// call returns `BUFFER_TOO_SMALL` and copies nothing.
///
/// # Safety
/// `buf` must hold `cap` elements (it may be NULL when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn ziegler_betti_degrees(
    b: *const ZieglerBetti,
    step: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> ZieglerStatus {
    guard(|| {
        let b = as_ref(b)?;
        if len.is_null() {
            return Err(null());
        }
        let steps = b.inner.steps();
        let s = steps
            .get(step)
            .ok_or((ZieglerStatus::OutOfRange, format!("no step {step}")))?;
        *len = s.len();
        if s.len() > cap {
            return Err((ZieglerStatus::BufferTooSmall, format!("need {} entries", s.len())));
        }
        if !s.is_empty() {
            if buf.is_null() {
                return Err(null());
            }
            ptr::copy_nonoverlapping(s.as_ptr(), buf, s.len());
        }
        Ok(())
    })
}

/// Exponent notation such as `d=(5,6_3), c=(7,8)`; free the result with
/// `ziegler_string_free`.
///
/// # Safety
/// `b` must be a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ziegler_betti_to_string(b: *const ZieglerBetti) -> *mut c_char {
    match b.as_ref() {
        Some(b) => CString::new(b.inner.to_string()).map_or(ptr::null_mut(), CString::into_raw),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must come from this library and not be used again.
#[no_mangle]
pub unsafe extern "C" fn ziegler_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Hilbert function of the Jacobian algebra in degrees `0 .. count`.
///
/// # Safety
/// `buf` must hold `count` elements.
#[no_mangle]
pub unsafe extern "C" fn ziegler_hilbert_function(
    a: *const ZieglerArrangement,
    mode: ZieglerBackend,
    buf: *mut i64,
    count: usize,
) -> ZieglerStatus {
    guard(|| {
        let a = as_ref(a)?;
        if buf.is_null() && count > 0 {
            return Err(null());
        }
        let b = backend(mode);
        let (num, n) = match &a.inner {
            LoadedArrangement::Rational(a) => (numerator(&a.defining_polynomial(), &b), a.nvars()),
            LoadedArrangement::Quadratic(a) => (numerator(&a.defining_polynomial(), &b), a.nvars()),
        };
        let values = num.map_err(compute_status)?.value.series_over_one_minus_t(n, count);
        ptr::copy_nonoverlapping(values.as_ptr(), buf, count);
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> *mut ZieglerArrangement {
        let c = CString::new(text).unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { ziegler_arrangement_parse(c.as_ptr(), &mut out) }, ZieglerStatus::Ok);
        out
    }

    #[test]
    fn errors_set_a_message() {
        let c = CString::new("P 2 over Q\nx\n2x\n").unwrap();
        let mut out = ptr::null_mut();
        let status = unsafe { ziegler_arrangement_parse(c.as_ptr(), &mut out) };
        assert_eq!(status, ZieglerStatus::Parse);
        assert!(out.is_null());
        let msg = unsafe { CStr::from_ptr(ziegler_last_error()) }.to_str().unwrap();
        assert!(msg.contains("proportional"), "{msg}");
        assert_eq!(
            unsafe { ziegler_arrangement_parse(ptr::null(), &mut out) },
            ZieglerStatus::NullPointer
        );
    }

    #[test]
    fn triangle_round_trip() {
        let a = parse("P 2 over Q\nx\ny\nz\n");
        let (mut h, mut n, mut tau) = (0, 0, 0);
        unsafe {
            assert_eq!(ziegler_arrangement_size(a, &mut h, &mut n), ZieglerStatus::Ok);
            assert_eq!(ziegler_tjurina(a, &mut tau), ZieglerStatus::Ok);
        }
        assert_eq!((h, n, tau), (3, 3, 3));
        let mut b = ptr::null_mut();
        unsafe {
            assert_eq!(ziegler_betti(a, ZieglerBackend::Exact, &mut b), ZieglerStatus::Ok);
            let mut len = 0;
            let mut buf = [0u32; 1];
            assert_eq!(
                ziegler_betti_degrees(b, 0, buf.as_mut_ptr(), 1, &mut len),
                ZieglerStatus::BufferTooSmall
            );
            assert_eq!(len, 2);
            let mut buf = [0u32; 4];
            assert_eq!(ziegler_betti_degrees(b, 0, buf.as_mut_ptr(), 4, &mut len), ZieglerStatus::Ok);
            assert_eq!(&buf[..len], &[1, 1]);
            assert_eq!(ziegler_betti_degrees(b, 9, buf.as_mut_ptr(), 4, &mut len), ZieglerStatus::OutOfRange);
            let s = ziegler_betti_to_string(b);
            assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "d=(1_2)");
            ziegler_string_free(s);
            ziegler_betti_free(b);
            ziegler_arrangement_free(a);
        }
    }
}
