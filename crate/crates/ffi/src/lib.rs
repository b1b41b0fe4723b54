//! C ABI over `numsg`. Semigroups cross the boundary as opaque
//! [`NumsgSemigroup`] handles; every call returns a [`NumsgStatus`] and, on
//! failure, leaves a message readable through [`numsg_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use numsg::constructions::{
    dilatation, duplication, gluing, DilatationSpec, DuplicationSpec, GluingSpec, IdealChoice,
};
use numsg::{classify, parse_generators, Error, NumericalSemigroup};

/// Opaque semigroup handle. Free with [`numsg_semigroup_free`].
pub struct NumsgSemigroup(NumericalSemigroup);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumsgStatus {
    Ok = 0,
    NullPointer = 1,
    /// Bad generators: empty, non-positive, gcd ≠ 1, too large, malformed.
    Parse = 2,
    /// The operation is undefined for ℕ.
    FullSemigroup = 3,
    /// Construction parameters violate the construction's requirements.
    ConstructionSpec = 4,
    /// Two characterizations disagreed.
    Inconsistency = 5,
    Other = 6,
}

/// Ideal used by [`numsg_duplication`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumsgIdeal {
    /// `S - ⟨K⟩`.
    SMinusGenK = 0,
    M = 1,
    S = 2,
    K = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> NumsgStatus {
    let status = match e {
        Error::EmptyGenerators
        | Error::NonPositiveGenerator(_)
        | Error::GcdNotOne(_)
        | Error::TooLarge(_)
        | Error::Parse(_) => NumsgStatus::Parse,
        Error::FullSemigroup => NumsgStatus::FullSemigroup,
        ref e if e.is_construction_spec() => NumsgStatus::ConstructionSpec,
        Error::InternalInconsistency(_) => NumsgStatus::Inconsistency,
        _ => NumsgStatus::Other,
    };
    set_error(e.to_string());
    status
}

fn null() -> NumsgStatus {
    set_error("null pointer argument".into());
    NumsgStatus::NullPointer
}

fn finish(result: Result<NumericalSemigroup, Error>, out: *mut *mut NumsgSemigroup) -> NumsgStatus {
    match result {
        Ok(s) => {
            unsafe { *out = Box::into_raw(Box::new(NumsgSemigroup(s))) };
            NumsgStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn numsg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds the semigroup generated by `gens[0..len]`.
///
/// # Safety
/// `gens` must point to `len` readable values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_new(
    gens: *const i64,
    len: usize,
    out: *mut *mut NumsgSemigroup,
) -> NumsgStatus {
    if gens.is_null() || out.is_null() {
        return null();
    }
    let gens = std::slice::from_raw_parts(gens, len);
    finish(NumericalSemigroup::from_generators(gens), out)
}

/// Builds a semigroup from a literal such as `"9,24,39,43,77"`.
///
/// # Safety
/// `literal` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_parse(
    literal: *const c_char,
    out: *mut *mut NumsgSemigroup,
) -> NumsgStatus {
    if literal.is_null() || out.is_null() {
        return null();
    }
    let Ok(text) = CStr::from_ptr(literal).to_str() else {
        return fail(Error::Parse("literal is not UTF-8".into()));
    };
    finish(
        parse_generators(text).and_then(|g| NumericalSemigroup::from_generators(&g)),
        out,
    )
}

/// # Safety
/// `s` must be NULL or a handle returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_free(s: *mut NumsgSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// `F(S)`, or -1 for ℕ.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_frobenius(
    s: *const NumsgSemigroup,
    out: *mut i64,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.frobenius();
    NumsgStatus::Ok
}

/// Smallest positive member.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_multiplicity(
    s: *const NumsgSemigroup,
    out: *mut i64,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.multiplicity();
    NumsgStatus::Ok
}

/// Number of gaps.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_genus(
    s: *const NumsgSemigroup,
    out: *mut usize,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.genus();
    NumsgStatus::Ok
}

/// `|PF(S)|`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_type(
    s: *const NumsgSemigroup,
    out: *mut usize,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.semigroup_type();
    NumsgStatus::Ok
}

/// Number of minimal generators.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_embedding_dimension(
    s: *const NumsgSemigroup,
    out: *mut usize,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.embedding_dimension();
    NumsgStatus::Ok
}

/// Writes whether `x ∈ S`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_contains(
    s: *const NumsgSemigroup,
    x: i64,
    out: *mut bool,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    *out = (*s).0.contains(x);
    NumsgStatus::Ok
}

/// Copies up to `cap` minimal generators into `buf` and writes their total
/// count to `len`. Call with `cap = 0` to query the count.
///
/// # Safety
/// `s` must be a live handle, `buf` must hold `cap` values (or be NULL when
/// `cap` is 0) and `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_semigroup_generators(
    s: *const NumsgSemigroup,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> NumsgStatus {
    if s.is_null() || len.is_null() || (buf.is_null() && cap > 0) {
        return null();
    }
    let gens = (*s).0.generators();
    let n = gens.len().min(cap);
    if n > 0 {
        ptr::copy_nonoverlapping(gens.as_ptr(), buf, n);
    }
    *len = gens.len();
    NumsgStatus::Ok
}

/// Writes the classification report as a JSON string owned by the caller;
/// release it with [`numsg_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_classify_json(
    s: *const NumsgSemigroup,
    out: *mut *mut c_char,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    match classify(&(*s).0) {
        Ok(r) => {
            *out = CString::new(r.to_json())
                .expect("JSON has no NUL")
                .into_raw();
            NumsgStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Writes whether `S` is GAS.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_is_gas(s: *const NumsgSemigroup, out: *mut bool) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    match numsg::classify::is_gas(&(*s).0) {
        Ok((gas, _)) => {
            *out = gas;
            NumsgStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Writes `|⟨K⟩ ∖ K|`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_agl_level(s: *const NumsgSemigroup, out: *mut usize) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    match numsg::classify::agl_level(&(*s).0) {
        Ok(level) => {
            *out = level;
            NumsgStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// `⟨a·S1, b·S2⟩`.
///
/// # Safety
/// `s1`, `s2` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_gluing(
    s1: *const NumsgSemigroup,
    s2: *const NumsgSemigroup,
    a: i64,
    b: i64,
    out: *mut *mut NumsgSemigroup,
) -> NumsgStatus {
    if s1.is_null() || s2.is_null() || out.is_null() {
        return null();
    }
    finish(
        gluing(&GluingSpec {
            s1: (*s1).0.clone(),
            s2: (*s2).0.clone(),
            a,
            b,
        }),
        out,
    )
}

/// `S ⋈ᵇ I` for the chosen ideal `I`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_duplication(
    s: *const NumsgSemigroup,
    ideal: NumsgIdeal,
    b: i64,
    out: *mut *mut NumsgSemigroup,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    let s = &(*s).0;
    let choice = match ideal {
        NumsgIdeal::SMinusGenK => IdealChoice::SMinusGenK,
        NumsgIdeal::M => IdealChoice::M,
        NumsgIdeal::S => IdealChoice::S,
        NumsgIdeal::K => IdealChoice::K,
    };
    let result = choice.resolve(s).and_then(|i| {
        duplication(&DuplicationSpec {
            s: s.clone(),
            ideal: i,
            b,
        })
    });
    finish(result, out)
}

/// `S + a`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn numsg_dilatation(
    s: *const NumsgSemigroup,
    a: i64,
    out: *mut *mut NumsgSemigroup,
) -> NumsgStatus {
    if s.is_null() || out.is_null() {
        return null();
    }
    finish(
        dilatation(&DilatationSpec {
            s: (*s).0.clone(),
            a,
        }),
        out,
    )
}

/// # Safety
/// `p` must be NULL or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn numsg_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}
