//! C ABI over the `qec` crate.
//!
//! Conventions, mirrored in `include/qec.h`:
//! - handles are opaque pointers created by `*_new`-style constructors and
//!   released by the matching `*_free`; a NULL handle is never returned on
//!   success
//! - every fallible call returns a `qec_status` int (QEC_OK = 0) and writes
//!   results through out-pointers, which are left untouched on failure
//! - string and list outputs use the two-call pattern: pass a NULL buffer to
//!   query the required size
//! - panics never unwind across the boundary; they surface as
//!   QEC_ERR_INTERNAL

use qec::bch;
use qec::bounds::{quantum_rate_threshold, BoundKind, CodeFamily};
use qec::enlarge::enlarge;
use qec::interchange::CodeDocument;
use qec::linear::LinearCode;
use qec::search::{DistanceOutcome, SearchCaps};
use qec::stab::StabilizerCode;
use std::ffi::{c_char, c_double, c_int};
use std::panic::{catch_unwind, AssertUnwindSafe};

pub const QEC_OK: c_int = 0;
pub const QEC_ERR_NULL_POINTER: c_int = 1;
pub const QEC_ERR_INVALID_ARGUMENT: c_int = 2;
pub const QEC_ERR_EVEN_LENGTH: c_int = 3;
pub const QEC_ERR_UNSUPPORTED_DEGREE: c_int = 4;
pub const QEC_ERR_DUAL_CONDITION: c_int = 5;
pub const QEC_ERR_NOT_A_SUBCODE: c_int = 6;
pub const QEC_ERR_INSUFFICIENT_ENLARGEMENT: c_int = 7;
pub const QEC_ERR_SINGULAR: c_int = 8;
pub const QEC_ERR_BAD_DATA: c_int = 9;
pub const QEC_ERR_BUFFER_TOO_SMALL: c_int = 10;
pub const QEC_ERR_UNVERIFIED: c_int = 11;
pub const QEC_ERR_INTERNAL: c_int = 12;

pub const QEC_BOUND_SPHERE_PACKING: c_int = 0;
pub const QEC_BOUND_MRRW: c_int = 1;
pub const QEC_FAMILY_ENLARGED: c_int = 0;
pub const QEC_FAMILY_CSS: c_int = 1;

/// Opaque classical linear code handle.
pub struct QecCode(LinearCode);

/// Opaque stabilizer code handle.
pub struct QecQuantumCode(StabilizerCode);

fn status_of(err: &qec::Error) -> c_int {
    use qec::Error::*;
    match err {
        EvenLength(_) => QEC_ERR_EVEN_LENGTH,
        UnsupportedDegree(_) => QEC_ERR_UNSUPPORTED_DEGREE,
        DualConditionViolated => QEC_ERR_DUAL_CONDITION,
        NotASubcode { .. } | DimensionOrder { .. } => QEC_ERR_NOT_A_SUBCODE,
        InsufficientEnlargement { .. } | SizeTooSmall(_) => QEC_ERR_INSUFFICIENT_ENLARGEMENT,
        SingularMatrix { .. } => QEC_ERR_SINGULAR,
        BadCodeData(_) | CoefficientNotBinary(_) => QEC_ERR_BAD_DATA,
        DimensionMismatch(_) | LengthMismatch { .. } | ContextMismatch | NotApplicable(_)
        | DomainError { .. } => QEC_ERR_INVALID_ARGUMENT,
    }
}

fn guarded(body: impl FnOnce() -> c_int) -> c_int {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => QEC_ERR_INTERNAL,
    }
}

/// Short human-readable description of a status code. Never NULL.
#[no_mangle]
pub extern "C" fn qec_status_message(status: c_int) -> *const c_char {
    let msg: &'static [u8] = match status {
        QEC_OK => b"ok\0",
        QEC_ERR_NULL_POINTER => b"null pointer argument\0",
        QEC_ERR_INVALID_ARGUMENT => b"invalid argument\0",
        QEC_ERR_EVEN_LENGTH => b"length must be odd\0",
        QEC_ERR_UNSUPPORTED_DEGREE => b"field degree outside 1..=16\0",
        QEC_ERR_DUAL_CONDITION => b"code does not contain its dual\0",
        QEC_ERR_NOT_A_SUBCODE => b"not a subcode of the larger code\0",
        QEC_ERR_INSUFFICIENT_ENLARGEMENT => b"enlargement needs k' > k + 1\0",
        QEC_ERR_SINGULAR => b"matrix is singular\0",
        QEC_ERR_BAD_DATA => b"malformed code data\0",
        QEC_ERR_BUFFER_TOO_SMALL => b"buffer too small\0",
        QEC_ERR_UNVERIFIED => b"result exceeds the enumeration cap\0",
        QEC_ERR_INTERNAL => b"internal error\0",
        _ => b"unknown status\0",
    };
    msg.as_ptr().cast()
}

/// Build a (possibly parity-extended) BCH code of odd length n, starting
/// exponent b, designed distance delta.
///
/// # Safety
/// `out` must be a valid pointer. The returned handle must be released with
/// `qec_code_free`.
#[no_mangle]
pub unsafe extern "C" fn qec_bch_new(
    n: u32,
    b: u32,
    delta: u32,
    extend: bool,
    out: *mut *mut QecCode,
) -> c_int {
    if out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        if delta < 2 {
            return QEC_ERR_INVALID_ARGUMENT;
        }
        let spec = match bch::defining_set(n as usize, b as usize, delta as usize) {
            Ok(s) => s,
            Err(e) => return status_of(&e),
        };
        let code = match bch::bch_code(&spec) {
            Ok(c) => c,
            Err(e) => return status_of(&e),
        };
        let code = if extend { code.extend_parity() } else { code };
        unsafe { *out = Box::into_raw(Box::new(QecCode(code))) };
        QEC_OK
    })
}

/// The [n, n-1, 2] even-weight code.
///
/// # Safety
/// `out` must be a valid pointer; release the handle with `qec_code_free`.
#[no_mangle]
pub unsafe extern "C" fn qec_even_weight_new(n: u32, out: *mut *mut QecCode) -> c_int {
    if out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| match LinearCode::even_weight(n as usize) {
        Ok(code) => {
            unsafe { *out = Box::into_raw(Box::new(QecCode(code))) };
            QEC_OK
        }
        Err(e) => status_of(&e),
    })
}

/// # Safety
/// `code` must be a handle from this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn qec_code_free(code: *mut QecCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qec_code_length(code: *const QecCode) -> u32 {
    unsafe { &*code }.0.length() as u32
}

/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qec_code_dimension(code: *const QecCode) -> u32 {
    unsafe { &*code }.0.dimension() as u32
}

/// Whether the code contains its own dual (matrix-level check).
///
/// # Safety
/// `code` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_code_is_dual_containing(
    code: *const QecCode,
    out: *mut bool,
) -> c_int {
    if code.is_null() || out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| match unsafe { &*code }.0.contains_own_dual() {
        Ok(v) => {
            unsafe { *out = v };
            QEC_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Minimum distance within the given budgets. On QEC_OK, `out_distance` is
/// exact; on QEC_ERR_UNVERIFIED it holds the best known lower bound.
///
/// # Safety
/// `code` must be a live handle and `out_distance` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_code_min_distance(
    code: *const QecCode,
    max_codewords: u64,
    max_column_subsets: u64,
    out_distance: *mut u32,
) -> c_int {
    if code.is_null() || out_distance.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let caps = SearchCaps {
            max_codewords,
            max_column_subsets,
            max_symplectic: 0,
        };
        match unsafe { &*code }.0.min_distance(&caps) {
            DistanceOutcome::Exact(d) => {
                unsafe { *out_distance = d as u32 };
                QEC_OK
            }
            outcome @ DistanceOutcome::Unverified { .. } => {
                unsafe { *out_distance = outcome.lower_bound() as u32 };
                QEC_ERR_UNVERIFIED
            }
        }
    })
}

/// Enlarged construction from a dual-containing subcode and a strictly
/// larger supercode.
///
/// # Safety
/// Both handles must be live; `out` must be valid. Release the result with
/// `qec_quantum_code_free`.
#[no_mangle]
pub unsafe extern "C" fn qec_enlarge(
    subcode: *const QecCode,
    supercode: *const QecCode,
    out: *mut *mut QecQuantumCode,
) -> c_int {
    if subcode.is_null() || supercode.is_null() || out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(
        || match enlarge(&unsafe { &*subcode }.0, &unsafe { &*supercode }.0) {
            Ok(record) => {
                unsafe { *out = Box::into_raw(Box::new(QecQuantumCode(record.code))) };
                QEC_OK
            }
            Err(e) => status_of(&e),
        },
    )
}

/// Plain CSS construction from codes with dual(c1) contained in c2.
///
/// # Safety
/// Both handles must be live; `out` must be valid. Release the result with
/// `qec_quantum_code_free`.
#[no_mangle]
pub unsafe extern "C" fn qec_css(
    c1: *const QecCode,
    c2: *const QecCode,
    out: *mut *mut QecQuantumCode,
) -> c_int {
    if c1.is_null() || c2.is_null() || out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(
        || match StabilizerCode::css(&unsafe { &*c1 }.0, &unsafe { &*c2 }.0) {
            Ok(code) => {
                unsafe { *out = Box::into_raw(Box::new(QecQuantumCode(code))) };
                QEC_OK
            }
            Err(e) => status_of(&e),
        },
    )
}

/// # Safety
/// `code` must be a handle from this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_free(code: *mut QecQuantumCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_qubits(code: *const QecQuantumCode) -> u32 {
    unsafe { &*code }.0.qubits() as u32
}

/// # Safety
/// `code` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_logical_dimension(code: *const QecQuantumCode) -> u32 {
    unsafe { &*code }.0.logical_dimension() as u32
}

/// Claimed (construction-formula) distance. `out_present` reports whether a
/// claim exists; without one, `out_distance` is left untouched.
///
/// # Safety
/// `code` must be a live handle; both out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_claimed_distance(
    code: *const QecQuantumCode,
    out_distance: *mut u32,
    out_present: *mut bool,
) -> c_int {
    if code.is_null() || out_distance.is_null() || out_present.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        match unsafe { &*code }.0.claimed_distance() {
            Some(d) => unsafe {
                *out_distance = d as u32;
                *out_present = true;
            },
            None => unsafe { *out_present = false },
        }
        QEC_OK
    })
}

/// Exhaustive distance over at most `max_vectors` generator-space vectors.
/// On QEC_OK both outputs are set; QEC_ERR_UNVERIFIED means the space
/// exceeds the budget.
///
/// # Safety
/// `code` must be a live handle; both out-pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_distance(
    code: *const QecQuantumCode,
    max_vectors: u64,
    out_distance: *mut u32,
    out_pure: *mut bool,
) -> c_int {
    if code.is_null() || out_distance.is_null() || out_pure.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let caps = SearchCaps {
            max_codewords: 0,
            max_column_subsets: 0,
            max_symplectic: max_vectors,
        };
        match unsafe { &*code }.0.distance(&caps) {
            (DistanceOutcome::Exact(d), Some(pure)) => {
                unsafe {
                    *out_distance = d as u32;
                    *out_pure = pure;
                }
                QEC_OK
            }
            _ => QEC_ERR_UNVERIFIED,
        }
    })
}

/// Render the code in the text interchange format (`n=<n> K=<K>` header,
/// one Pauli string per line, trailing newline, NUL-terminated).
///
/// Two-call pattern: with a NULL `buf`, only `out_len` is written (length
/// including the NUL). With a buffer shorter than that,
/// QEC_ERR_BUFFER_TOO_SMALL is returned and `out_len` holds the needed size.
///
/// # Safety
/// `code` must be a live handle; `buf`, when non-NULL, must point to
/// `buf_len` writable bytes; `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_to_text(
    code: *const QecQuantumCode,
    buf: *mut c_char,
    buf_len: usize,
    out_len: *mut usize,
) -> c_int {
    if code.is_null() || out_len.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let text = CodeDocument::from_code(&unsafe { &*code }.0).to_text();
        let needed = text.len() + 1;
        unsafe { *out_len = needed };
        if buf.is_null() {
            return QEC_OK;
        }
        if buf_len < needed {
            return QEC_ERR_BUFFER_TOO_SMALL;
        }
        unsafe {
            std::ptr::copy_nonoverlapping(text.as_ptr(), buf.cast(), text.len());
            *buf.add(text.len()) = 0;
        }
        QEC_OK
    })
}

/// Parse a code from the text interchange format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be valid. Release the
/// handle with `qec_quantum_code_free`.
#[no_mangle]
pub unsafe extern "C" fn qec_quantum_code_from_text(
    text: *const c_char,
    out: *mut *mut QecQuantumCode,
) -> c_int {
    if text.is_null() || out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let text = match unsafe { std::ffi::CStr::from_ptr(text) }.to_str() {
            Ok(t) => t,
            Err(_) => return QEC_ERR_BAD_DATA,
        };
        let doc = match CodeDocument::from_str_any(text) {
            Ok(d) => d,
            Err(e) => return status_of(&e),
        };
        match doc.to_code() {
            Ok(code) => {
                unsafe { *out = Box::into_raw(Box::new(QecQuantumCode(code))) };
                QEC_OK
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Odd lengths 1 < n <= limit whose coset C_1 avoids n - 1. Two-call
/// pattern via `out_count`.
///
/// # Safety
/// `buf`, when non-NULL, must point to `buf_len` writable u32 slots;
/// `out_count` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qec_scan_nonprimitive(
    limit: u32,
    buf: *mut u32,
    buf_len: usize,
    out_count: *mut usize,
) -> c_int {
    if out_count.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let list = bch::scan_nonprimitive(limit as usize);
        unsafe { *out_count = list.len() };
        if buf.is_null() {
            return QEC_OK;
        }
        if buf_len < list.len() {
            return QEC_ERR_BUFFER_TOO_SMALL;
        }
        for (i, n) in list.iter().enumerate() {
            unsafe { *buf.add(i) = *n as u32 };
        }
        QEC_OK
    })
}

/// Largest dual-containing designed distance for the narrow-sense BCH code
/// of odd length n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_max_dual_containing_delta(n: u32, out: *mut u32) -> c_int {
    if out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| match bch::max_dual_containing_delta(n as usize) {
        Ok(delta) => {
            unsafe { *out = delta as u32 };
            QEC_OK
        }
        Err(e) => status_of(&e),
    })
}

/// Asymptotic relative-distance threshold for positive quantum rate, for
/// QEC_BOUND_* / QEC_FAMILY_* selectors.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qec_rate_threshold(
    kind: c_int,
    family: c_int,
    out: *mut c_double,
) -> c_int {
    if out.is_null() {
        return QEC_ERR_NULL_POINTER;
    }
    guarded(|| {
        let kind = match kind {
            QEC_BOUND_SPHERE_PACKING => BoundKind::SpherePacking,
            QEC_BOUND_MRRW => BoundKind::Mrrw,
            _ => return QEC_ERR_INVALID_ARGUMENT,
        };
        let family = match family {
            QEC_FAMILY_ENLARGED => CodeFamily::Enlarged,
            QEC_FAMILY_CSS => CodeFamily::Css,
            _ => return QEC_ERR_INVALID_ARGUMENT,
        };
        unsafe { *out = quantum_rate_threshold(kind, family) };
        QEC_OK
    })
}
