use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use ziegler_ffi::*;

const B: &str = include_str!("../../core/fixtures/B.arr");
const B_PRIME: &str = include_str!("../../core/fixtures/Bprime.arr");

fn parse(text: &str) -> *mut ZieglerArrangement {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ziegler_arrangement_parse(c.as_ptr(), &mut out) }, ZieglerStatus::Ok);
    out
}

fn betti_string(a: *const ZieglerArrangement, mode: ZieglerBackend) -> String {
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(ziegler_betti(a, mode, &mut b), ZieglerStatus::Ok);
        let s = ziegler_betti_to_string(b);
        let out = CStr::from_ptr(s).to_str().unwrap().to_string();
        ziegler_string_free(s);
        ziegler_betti_free(b);
        out
    }
}

#[test]
fn ziegler_pair_through_the_c_api() {
    let (a, b) = (parse(B), parse(B_PRIME));
    let mut iso = false;
    unsafe {
        assert_eq!(ziegler_lattice_isomorphic(a, b, &mut iso), ZieglerStatus::Ok);
    }
    assert!(iso);
    assert_eq!(betti_string(a, ZieglerBackend::TwoPrime), "d=(6_6), c=(7_4)");
    assert_eq!(betti_string(b, ZieglerBackend::Certify), "d=(5,6_3), c=(7,8)");
    assert_eq!(betti_string(b, ZieglerBackend::Exact), "d=(5,6_3), c=(7,8)");
    let mut h = [0i64; 16];
    unsafe {
        assert_eq!(ziegler_hilbert_function(a, ZieglerBackend::TwoPrime, h.as_mut_ptr(), 16), ZieglerStatus::Ok);
    }
    assert_eq!(&h[9..16], &[46, 48, 48, 46, 42, 42, 42]);
    unsafe {
        ziegler_arrangement_free(a);
        ziegler_arrangement_free(b);
    }
}

#[test]
fn unsupported_inputs_report_status() {
    let a = parse("P 3 over Q\nx\ny\nz\nw\n");
    let mut tau = 0;
    unsafe {
        assert_eq!(ziegler_tjurina(a, &mut tau), ZieglerStatus::Unsupported);
        assert!(!ziegler_last_error().is_null());
        ziegler_arrangement_free(a);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/ziegler.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["ziegler_arrangement_parse", "ziegler_betti_degrees", "ziegler_last_error"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c", "-std=c99"]).arg(&header).output() else {
        eprintln!("no C compiler available; skipped the syntax check");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
