use std::ffi::{CStr, CString};
use std::ptr;

use numsg_ffi::*;

fn parse(lit: &str) -> *mut NumsgSemigroup {
    let c = CString::new(lit).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { numsg_semigroup_parse(c.as_ptr(), &mut out) },
        NumsgStatus::Ok
    );
    out
}

fn generators(s: *const NumsgSemigroup) -> Vec<i64> {
    let mut len = 0usize;
    unsafe {
        assert_eq!(
            numsg_semigroup_generators(s, ptr::null_mut(), 0, &mut len),
            NumsgStatus::Ok
        );
        let mut buf = vec![0i64; len];
        assert_eq!(
            numsg_semigroup_generators(s, buf.as_mut_ptr(), len, &mut len),
            NumsgStatus::Ok
        );
        buf
    }
}

fn last_error() -> String {
    let p = numsg_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn invariants_round_trip() {
    let s = parse("9,24,39,43,77");
    let (mut f, mut m, mut g, mut t) = (0i64, 0i64, 0usize, 0usize);
    unsafe {
        numsg_semigroup_frobenius(s, &mut f);
        numsg_semigroup_multiplicity(s, &mut m);
        numsg_semigroup_genus(s, &mut g);
        numsg_semigroup_type(s, &mut t);
    }
    assert_eq!((f, m, t), (107, 9, 4));
    assert!(2 * g as i64 >= f + t as i64);
    assert_eq!(generators(s), vec![9, 24, 39, 43, 77]);
    let mut member = false;
    unsafe { numsg_semigroup_contains(s, 58, &mut member) };
    assert!(!member);
    unsafe { numsg_semigroup_contains(s, 48, &mut member) };
    assert!(member);
    let mut gas = false;
    unsafe { numsg_is_gas(s, &mut gas) };
    assert!(gas);
    unsafe { numsg_semigroup_free(s) };
}

#[test]
fn new_from_array_matches_parse() {
    let gens = [7i64, 9, 15];
    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { numsg_semigroup_new(gens.as_ptr(), gens.len(), &mut s) },
        NumsgStatus::Ok
    );
    let mut level = 0usize;
    assert_eq!(unsafe { numsg_agl_level(s, &mut level) }, NumsgStatus::Ok);
    assert_eq!(level, 3);
    let mut gas = true;
    unsafe { numsg_is_gas(s, &mut gas) };
    assert!(!gas);
    unsafe { numsg_semigroup_free(s) };
}

#[test]
fn classify_json_is_parseable_text() {
    let s = parse("5,6,7");
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { numsg_classify_json(s, &mut json) },
        NumsgStatus::Ok
    );
    let text = unsafe { CStr::from_ptr(json) }.to_str().unwrap().to_owned();
    assert!(text.starts_with('{') && text.ends_with('}'));
    assert!(text.contains("\"frobenius\":9"));
    unsafe {
        numsg_string_free(json);
        numsg_semigroup_free(s);
    }
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let gens = [4i64, 6];
    assert_eq!(
        unsafe { numsg_semigroup_new(gens.as_ptr(), 2, &mut out) },
        NumsgStatus::Parse
    );
    assert!(!last_error().is_empty());
    let bad = CString::new("3,x").unwrap();
    assert_eq!(
        unsafe { numsg_semigroup_parse(bad.as_ptr(), &mut out) },
        NumsgStatus::Parse
    );
    assert_eq!(
        unsafe { numsg_semigroup_parse(ptr::null(), &mut out) },
        NumsgStatus::NullPointer
    );

    let n = parse("1");
    let mut json = ptr::null_mut();
    assert_eq!(
        unsafe { numsg_classify_json(n, &mut json) },
        NumsgStatus::FullSemigroup
    );
    assert!(json.is_null());

    let s = parse("3,4,5");
    assert_eq!(
        unsafe { numsg_duplication(s, NumsgIdeal::S, 4, &mut out) },
        NumsgStatus::ConstructionSpec
    );
    assert_eq!(
        unsafe { numsg_gluing(s, n, 3, 6, &mut out) },
        NumsgStatus::ConstructionSpec
    );
    unsafe {
        numsg_semigroup_free(s);
        numsg_semigroup_free(n);
        numsg_semigroup_free(ptr::null_mut());
    }
}

#[test]
fn constructions() {
    let s = parse("3,4,5");
    let n = parse("1");
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { numsg_gluing(s, n, 2, 7, &mut t) }, NumsgStatus::Ok);
    assert_eq!(generators(t), vec![6, 7, 8, 10]);
    unsafe { numsg_semigroup_free(t) };

    assert_eq!(
        unsafe { numsg_duplication(s, NumsgIdeal::S, 5, &mut t) },
        NumsgStatus::Ok
    );
    assert_eq!(generators(t), vec![5, 6, 8]);
    unsafe { numsg_semigroup_free(t) };

    let d = parse("6,28,47,97");
    assert_eq!(
        unsafe { numsg_duplication(d, NumsgIdeal::SMinusGenK, 47, &mut t) },
        NumsgStatus::Ok
    );
    let mut level = 0usize;
    unsafe { numsg_agl_level(t, &mut level) };
    assert_eq!(level, 4);
    unsafe { numsg_semigroup_free(t) };

    let w = parse("7,9,11");
    assert_eq!(unsafe { numsg_dilatation(w, 7, &mut t) }, NumsgStatus::Ok);
    let mut f = 0i64;
    unsafe { numsg_semigroup_frobenius(t, &mut f) };
    let mut fw = 0i64;
    unsafe { numsg_semigroup_frobenius(w, &mut fw) };
    assert_eq!(f, fw + 7);
    unsafe {
        numsg_semigroup_free(t);
        numsg_semigroup_free(w);
        numsg_semigroup_free(d);
        numsg_semigroup_free(n);
        numsg_semigroup_free(s);
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/numsg.h")).unwrap();
    for name in [
        "numsg_semigroup_new",
        "numsg_semigroup_parse",
        "numsg_semigroup_free",
        "numsg_classify_json",
        "numsg_string_free",
        "numsg_gluing",
        "numsg_duplication",
        "numsg_dilatation",
        "numsg_last_error",
        "numsg_semigroup_frobenius",
        "numsg_semigroup_genus",
        "numsg_semigroup_type",
        "numsg_semigroup_embedding_dimension",
        "numsg_semigroup_generators",
        "numsg_is_gas",
        "numsg_agl_level",
        "NUMSG_STATUS_CONSTRUCTION_SPEC",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
