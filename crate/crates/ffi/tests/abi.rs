use std::ffi::{CStr, CString};
use std::ptr;

use bci_ffi::*;

fn bundled(name: &str) -> *mut BciAlgebra {
    let name = CString::new(name).unwrap();
    let mut a = ptr::null_mut();
    assert_eq!(
        unsafe { bci_algebra_bundled(name.as_ptr(), &mut a) },
        BciStatus::Ok
    );
    a
}

fn has(a: *const BciAlgebra, p: BciProperty) -> bool {
    let mut out = false;
    assert_eq!(unsafe { bci_algebra_has(a, p, &mut out) }, BciStatus::Ok);
    out
}

fn last_error() -> String {
    let p = bci_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn powerset_properties() {
    let a = bundled("powerset2");
    unsafe {
        assert_eq!(bci_algebra_order(a), 4);
        assert!(has(a, BciProperty::Bci));
        assert!(has(a, BciProperty::Bck));
        assert!(!has(a, BciProperty::PSemisimple));
        let mut f = false;
        assert_eq!(bci_algebra_satisfies(a, 42, &mut f), BciStatus::Ok);
        assert!(f);
        let mut mask = 0u64;
        assert_eq!(bci_algebra_fenyves_profile(a, &mut mask), BciStatus::Ok);
        assert_ne!(mask & (1 << 53), 0);
        let mut out = 0usize;
        assert_eq!(bci_algebra_op(a, 3, 1, &mut out), BciStatus::Ok);
        assert_eq!(out, 2);
        assert_eq!(
            bci_algebra_op(a, 4, 0, &mut out),
            BciStatus::IndexOutOfRange
        );
        bci_algebra_free(a);
    }
}

#[test]
fn table_round_trip() {
    let table = [0usize, 0, 1, 0];
    let mut a = ptr::null_mut();
    unsafe {
        assert_eq!(
            bci_algebra_from_table(2, table.as_ptr(), 0, &mut a),
            BciStatus::Ok
        );
        let mut buf = [9usize; 4];
        assert_eq!(bci_algebra_table(a, buf.as_mut_ptr(), 4), BciStatus::Ok);
        assert_eq!(buf, table);
        assert_eq!(
            bci_algebra_table(a, buf.as_mut_ptr(), 3),
            BciStatus::BufferTooSmall
        );

        let mut s = ptr::null_mut();
        assert_eq!(bci_algebra_to_text(a, &mut s), BciStatus::Ok);
        let mut b = ptr::null_mut();
        assert_eq!(bci_algebra_parse(s, &mut b), BciStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "2\n0\n0 0\n1 0\n");
        bci_string_free(s);
        assert!(has(b, BciProperty::Bck));
        bci_algebra_free(a);
        bci_algebra_free(b);
    }
}

#[test]
fn errors_are_reported() {
    let mut a = ptr::null_mut();
    unsafe {
        let bad = CString::new("2\n0\n0 0\n1\n").unwrap();
        assert_eq!(bci_algebra_parse(bad.as_ptr(), &mut a), BciStatus::Parse);
        assert!(last_error().contains("line 4"));
        assert!(a.is_null());

        assert_eq!(
            bci_algebra_parse(ptr::null(), &mut a),
            BciStatus::NullPointer
        );
        let name = CString::new("nope").unwrap();
        assert_eq!(
            bci_algebra_bundled(name.as_ptr(), &mut a),
            BciStatus::UnknownName
        );

        let zero = [0usize; 4];
        assert_eq!(
            bci_algebra_from_table(2, zero.as_ptr(), 0, &mut a),
            BciStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(bci_algebra_classify_json(a, &mut s), BciStatus::NotBci);
        assert!(s.is_null());
        let mut q = false;
        assert_eq!(
            bci_algebra_has(a, BciProperty::QuasiAssociative, &mut q),
            BciStatus::NotBci
        );
        bci_algebra_free(a);

        let msg = CStr::from_ptr(bci_status_message(BciStatus::NotBci));
        assert_eq!(msg.to_str().unwrap(), "not a BCI-algebra");
        bci_algebra_free(ptr::null_mut());
        bci_string_free(ptr::null_mut());
    }
}

#[test]
fn holomorphs() {
    let z3 = bundled("z3");
    unsafe {
        let mut count = 0;
        assert_eq!(
            bci_algebra_automorphism_count(z3, &mut count),
            BciStatus::Ok
        );
        assert_eq!(count, 2);

        let mut h = ptr::null_mut();
        assert_eq!(
            bci_holomorph_build(z3, ptr::null(), 0, &mut h),
            BciStatus::Ok
        );
        assert_eq!(bci_algebra_order(h), 3);
        assert!(has(h, BciProperty::Bci));
        bci_algebra_free(h);

        let neg = [0usize, 2, 1];
        assert_eq!(
            bci_holomorph_build(z3, neg.as_ptr(), 1, &mut h),
            BciStatus::Ok
        );
        assert_eq!(bci_algebra_order(h), 6);
        assert!(!has(h, BciProperty::Bci));
        bci_algebra_free(h);
        bci_algebra_free(z3);

        let chain = bundled("chain2");
        let swap = [1usize, 0];
        assert_eq!(
            bci_holomorph_build(chain, swap.as_ptr(), 1, &mut h),
            BciStatus::NotAutomorphism
        );
        bci_algebra_free(chain);
    }
}

#[test]
fn classification_json() {
    let a = bundled("z2");
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(bci_algebra_classify_json(a, &mut s), BciStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        bci_string_free(s);
        assert!(text.contains("\"kind\": \"classification\""));
        assert!(text.contains("\"boolean_group\": true"));
        bci_algebra_free(a);
    }
}

#[test]
fn enumeration_counts() {
    let mut n = 0;
    unsafe {
        assert_eq!(bci_enumerate_count(3, true, &mut n), BciStatus::Ok);
        assert_eq!(n, 5);
        assert_eq!(bci_enumerate_count(3, false, &mut n), BciStatus::Ok);
        assert_eq!(n, 8);
        assert_eq!(
            bci_enumerate_count(9, true, &mut n),
            BciStatus::OrderTooLarge
        );
        assert_eq!(
            bci_enumerate_count(0, true, &mut n),
            BciStatus::EmptyAlgebra
        );
    }
}
