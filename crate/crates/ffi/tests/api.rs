use std::ffi::{CStr, CString};
use std::ptr;

use motivic_ffi::*;

fn parse(src: &str) -> *mut MotivicClass {
    let src = CString::new(src).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { motivic_class_parse(src.as_ptr(), &mut out) },
        MotivicStatus::Ok
    );
    out
}

fn last_error() -> String {
    let p = motivic_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn coeffs(c: *const MotivicClass) -> Vec<i64> {
    let deg = unsafe { motivic_class_degree(c) };
    (0..=deg)
        .map(|i| {
            let mut v = 0;
            assert_eq!(
                unsafe { motivic_class_coeff(c, i as usize, &mut v) },
                MotivicStatus::Ok
            );
            v
        })
        .collect()
}

#[test]
fn arithmetic_through_handles() {
    let p2 = parse("P2");
    let vals = [1i64, 1];
    let mut p1 = ptr::null_mut();
    unsafe {
        assert_eq!(
            motivic_class_from_coeffs(vals.as_ptr(), 2, &mut p1),
            MotivicStatus::Ok
        );
        let mut prod = ptr::null_mut();
        assert_eq!(motivic_class_mul(p2, p1, &mut prod), MotivicStatus::Ok);
        assert_eq!(coeffs(prod), [1, 2, 2, 1]);

        let mut back = ptr::null_mut();
        assert_eq!(
            motivic_class_exact_div(prod, p1, &mut back),
            MotivicStatus::Ok
        );
        assert!(motivic_class_equal(back, p2));

        let mut sum = ptr::null_mut();
        assert_eq!(motivic_class_add(p2, p1, &mut sum), MotivicStatus::Ok);
        assert_eq!(coeffs(sum), [2, 2, 1]);
        let mut diff = ptr::null_mut();
        assert_eq!(motivic_class_sub(p2, p1, &mut diff), MotivicStatus::Ok);
        assert_eq!(coeffs(diff), [0, 0, 1]);

        let mut sym = ptr::null_mut();
        assert_eq!(motivic_class_sym_power(p2, 2, &mut sym), MotivicStatus::Ok);
        let mut at2 = 0;
        assert_eq!(motivic_class_evaluate(sym, 2, &mut at2), MotivicStatus::Ok);
        assert_eq!(at2, 35);

        for c in [p2, p1, prod, back, sum, diff, sym] {
            motivic_class_free(c);
        }
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let src = CString::new("Gr(2,").unwrap();
        assert_eq!(
            motivic_class_parse(src.as_ptr(), &mut out),
            MotivicStatus::Syntax
        );
        assert!(out.is_null());
        assert!(last_error().starts_with("SyntaxError at offset 5"));

        let src = CString::new("Gr(3,2)").unwrap();
        assert_eq!(
            motivic_class_parse(src.as_ptr(), &mut out),
            MotivicStatus::Arity
        );

        let p1 = parse("P1");
        let two = parse("L + 2");
        assert_eq!(
            motivic_class_exact_div(p1, two, &mut out),
            MotivicStatus::DivisionNotExact
        );
        let zero = parse("0");
        assert_eq!(
            motivic_class_exact_div(p1, zero, &mut out),
            MotivicStatus::DivisionByZero
        );
        let virt = parse("P1 - 2");
        assert_eq!(
            motivic_class_sym_power(virt, 2, &mut out),
            MotivicStatus::NotEffective
        );
        assert_eq!(motivic_class_degree(zero), -1);

        assert_eq!(
            motivic_class_add(ptr::null(), p1, &mut out),
            MotivicStatus::NullPointer
        );
        assert_eq!(
            motivic_class_add(p1, p1, ptr::null_mut()),
            MotivicStatus::NullPointer
        );
        assert_eq!(
            motivic_class_parse(ptr::null(), &mut out),
            MotivicStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            motivic_class_parse(bad.as_ptr().cast(), &mut out),
            MotivicStatus::InvalidUtf8
        );

        // success clears the message
        assert_eq!(motivic_class_clone(p1, &mut out), MotivicStatus::Ok);
        assert!(motivic_last_error_message().is_null());
        motivic_class_free(out);

        let big = parse("L^80");
        let mut v = 0;
        assert_eq!(
            motivic_class_evaluate(big, 2, &mut v),
            MotivicStatus::Overflow
        );

        for c in [p1, two, zero, virt, big] {
            motivic_class_free(c);
        }
        motivic_class_free(ptr::null_mut());
        motivic_string_free(ptr::null_mut());
    }
}

#[test]
fn strings_and_version() {
    let v = unsafe { CStr::from_ptr(motivic_version()) }
        .to_str()
        .unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    let c = parse("Sym2(P2)");
    unsafe {
        let s = motivic_class_to_string(c);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        motivic_string_free(s);
        assert_eq!(text, "1 + L + 2L^2 + L^3 + L^4");
        assert!(motivic_class_is_palindromic(c));
        assert!(motivic_class_to_string(ptr::null()).is_null());
        motivic_class_free(c);
    }
}

#[test]
fn verification_report() {
    let target = CString::new("m51").unwrap();
    let mut json = ptr::null_mut();
    let mut pass = false;
    unsafe {
        assert_eq!(
            motivic_verify_json(target.as_ptr(), &mut json, &mut pass),
            MotivicStatus::Ok
        );
        let text = CStr::from_ptr(json).to_str().unwrap().to_owned();
        motivic_string_free(json);
        assert!(pass);
        assert!(text.contains("\"schema\": 1"));
        assert!(text.contains("\"euler_assembled\": 1695"));

        let target = CString::new("m99").unwrap();
        assert_eq!(
            motivic_verify_json(target.as_ptr(), &mut json, &mut pass),
            MotivicStatus::Unsupported
        );
    }
}

#[test]
fn oracle_counts() {
    let mut n = 0u64;
    unsafe {
        assert_eq!(
            motivic_count_grassmannian(2, 4, 3, &mut n),
            MotivicStatus::Ok
        );
        assert_eq!(n, 130);
        assert_eq!(motivic_count_hilb2_p2(3, &mut n), MotivicStatus::Ok);
        assert_eq!(n, 169);
        assert_eq!(
            motivic_count_punctual_ideals(MotivicCurve::Ribbon, 4, 2, &mut n),
            MotivicStatus::Ok
        );
        assert_eq!(n, 7);
        assert_eq!(
            motivic_count_grassmannian(1, 2, 6, &mut n),
            MotivicStatus::Unsupported
        );
        assert_eq!(
            motivic_count_punctual_ideals(MotivicCurve::Node, 6, 3, &mut n),
            MotivicStatus::BudgetExceeded
        );
    }
}
