//! Exercises the C ABI through the exported extern "C" functions, the same
//! entry points a foreign binding would hit.

use qec_capi::*;
use std::ffi::CStr;
use std::ptr;

fn msg(status: i32) -> &'static str {
    unsafe { CStr::from_ptr(qec_status_message(status)) }
        .to_str()
        .unwrap()
}

#[test]
fn full_enlargement_flow() {
    unsafe {
        // [22,12,6] and [22,15,4] extended BCH codes
        let mut sub: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(21, 1, 5, true, &mut sub), QEC_OK);
        assert_eq!(qec_code_length(sub), 22);
        assert_eq!(qec_code_dimension(sub), 12);

        let mut dual_containing = false;
        assert_eq!(qec_code_is_dual_containing(sub, &mut dual_containing), QEC_OK);
        assert!(dual_containing);

        let mut sup: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(21, 1, 3, true, &mut sup), QEC_OK);
        assert_eq!(qec_code_dimension(sup), 15);

        let mut d = 0u32;
        assert_eq!(qec_code_min_distance(sub, 1 << 20, 1 << 20, &mut d), QEC_OK);
        assert_eq!(d, 6);

        let mut quantum: *mut QecQuantumCode = ptr::null_mut();
        assert_eq!(qec_enlarge(sub, sup, &mut quantum), QEC_OK);
        assert_eq!(qec_quantum_code_qubits(quantum), 22);
        assert_eq!(qec_quantum_code_logical_dimension(quantum), 5);

        let mut claimed = 0u32;
        let mut present = false;
        assert_eq!(
            qec_quantum_code_claimed_distance(quantum, &mut claimed, &mut present),
            QEC_OK
        );
        assert!(present);
        assert_eq!(claimed, 6);

        let mut measured = 0u32;
        let mut pure = false;
        assert_eq!(
            qec_quantum_code_distance(quantum, 1 << 28, &mut measured, &mut pure),
            QEC_OK
        );
        assert_eq!(measured, 6);
        assert!(pure);

        // text round trip through the two-call pattern
        let mut needed = 0usize;
        assert_eq!(
            qec_quantum_code_to_text(quantum, ptr::null_mut(), 0, &mut needed),
            QEC_OK
        );
        assert!(needed > 0);
        let mut small = vec![0i8; 4];
        assert_eq!(
            qec_quantum_code_to_text(quantum, small.as_mut_ptr().cast(), small.len(), &mut needed),
            QEC_ERR_BUFFER_TOO_SMALL
        );
        let mut buf = vec![0u8; needed];
        assert_eq!(
            qec_quantum_code_to_text(quantum, buf.as_mut_ptr().cast(), buf.len(), &mut needed),
            QEC_OK
        );
        let text = CStr::from_bytes_until_nul(&buf).unwrap().to_str().unwrap();
        assert!(text.starts_with("n=22 K=5\n"));

        let mut reparsed: *mut QecQuantumCode = ptr::null_mut();
        let c_text = std::ffi::CString::new(text).unwrap();
        assert_eq!(qec_quantum_code_from_text(c_text.as_ptr(), &mut reparsed), QEC_OK);
        assert_eq!(qec_quantum_code_qubits(reparsed), 22);
        assert_eq!(qec_quantum_code_logical_dimension(reparsed), 5);

        qec_quantum_code_free(reparsed);
        qec_quantum_code_free(quantum);
        qec_code_free(sup);
        qec_code_free(sub);
    }
}

#[test]
fn css_flow_and_error_paths() {
    unsafe {
        let mut hamming: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(7, 1, 3, false, &mut hamming), QEC_OK);

        let mut css: *mut QecQuantumCode = ptr::null_mut();
        assert_eq!(qec_css(hamming, hamming, &mut css), QEC_OK);
        assert_eq!(qec_quantum_code_qubits(css), 7);
        assert_eq!(qec_quantum_code_logical_dimension(css), 1);

        // even length is rejected
        let mut bad: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(8, 1, 3, false, &mut bad), QEC_ERR_EVEN_LENGTH);
        assert_eq!(msg(QEC_ERR_EVEN_LENGTH), "length must be odd");

        // the [89,45] delta = 11 code does not contain its dual
        let mut sub89: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(89, 1, 11, true, &mut sub89), QEC_OK);
        let mut sup89: *mut QecCode = ptr::null_mut();
        assert_eq!(qec_bch_new(89, 1, 9, true, &mut sup89), QEC_OK);
        let mut nope: *mut QecQuantumCode = ptr::null_mut();
        assert_eq!(qec_enlarge(sub89, sup89, &mut nope), QEC_ERR_DUAL_CONDITION);
        assert!(nope.is_null());

        // enlargement needs a dimension gap of at least two
        let mut same: *mut QecQuantumCode = ptr::null_mut();
        assert_eq!(
            qec_enlarge(hamming, hamming, &mut same),
            QEC_ERR_INSUFFICIENT_ENLARGEMENT
        );

        // null pointers are reported, not dereferenced
        assert_eq!(qec_css(ptr::null(), hamming, &mut css), QEC_ERR_NULL_POINTER);
        assert_eq!(qec_bch_new(7, 1, 3, false, ptr::null_mut()), QEC_ERR_NULL_POINTER);

        // distance beyond the cap reports unverified
        let mut d = 0u32;
        let mut pure = false;
        assert_eq!(qec_quantum_code_distance(css, 4, &mut d, &mut pure), QEC_ERR_UNVERIFIED);

        qec_quantum_code_free(css);
        qec_code_free(sub89);
        qec_code_free(sup89);
        qec_code_free(hamming);
        qec_code_free(ptr::null_mut()); // freeing NULL is a no-op
    }
}

#[test]
fn scans_and_bounds() {
    unsafe {
        let mut count = 0usize;
        assert_eq!(qec_scan_nonprimitive(127, ptr::null_mut(), 0, &mut count), QEC_OK);
        assert_eq!(count, 33);
        let mut buf = vec![0u32; count];
        assert_eq!(
            qec_scan_nonprimitive(127, buf.as_mut_ptr(), buf.len(), &mut count),
            QEC_OK
        );
        assert_eq!(buf[0], 7);
        assert_eq!(buf[count - 1], 127);
        assert!(!buf.contains(&121));

        let mut short = vec![0u32; 4];
        assert_eq!(
            qec_scan_nonprimitive(127, short.as_mut_ptr(), short.len(), &mut count),
            QEC_ERR_BUFFER_TOO_SMALL
        );

        let mut delta = 0u32;
        assert_eq!(qec_max_dual_containing_delta(127, &mut delta), QEC_OK);
        assert_eq!(delta, 15);

        let mut value = 0f64;
        assert_eq!(qec_rate_threshold(QEC_BOUND_MRRW, QEC_FAMILY_ENLARGED, &mut value), QEC_OK);
        assert!((value - 0.2197).abs() < 5e-4);
        assert_eq!(qec_rate_threshold(QEC_BOUND_MRRW, QEC_FAMILY_CSS, &mut value), QEC_OK);
        assert!((value - 0.1825).abs() < 5e-4);
        assert_eq!(qec_rate_threshold(9, 0, &mut value), QEC_ERR_INVALID_ARGUMENT);
    }
}
