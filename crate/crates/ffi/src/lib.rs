//! C ABI for `bci-workbench`.
//!
//! Algebras cross the boundary as opaque [`BciAlgebra`] handles owned by the
//! caller and released with [`bci_algebra_free`]. Every fallible call returns
//! a [`BciStatus`]; on failure [`bci_last_error`] describes what went wrong.
//! Strings handed out by the library must be released with
//! [`bci_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bci_workbench::fenyves::{fenyves_profile, satisfies_fenyves};
use bci_workbench::holomorph::build_holomorph;
use bci_workbench::morphisms::{automorphism_group, AutomorphismGroup, Bijection};
use bci_workbench::props::{
    is_associative, is_bci, is_bck, is_boolean_group, is_commutative, is_loop, is_p_semisimple,
    is_quasi_associative, is_quasigroup,
};
use bci_workbench::report::{classify, ReportBody, ReportDocument};
use bci_workbench::search::{enumerate_bci, EnumerationOptions};
use bci_workbench::tablefile::{parse_table, print_table};
use bci_workbench::{bundled, Error, FiniteAlgebra};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BciStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    EmptyAlgebra = 3,
    OrderTooLarge = 4,
    IndexOutOfRange = 5,
    InvalidTable = 6,
    NotBijection = 7,
    NotBci = 8,
    NotAutomorphism = 9,
    NotAutomorphismGroup = 10,
    NotBooleanGroup = 11,
    FenyvesIndex = 12,
    UnsupportedIndex = 13,
    Parse = 14,
    BudgetExceeded = 15,
    Io = 16,
    UnknownName = 17,
    BufferTooSmall = 18,
    Panic = 99,
}

/// Properties answerable by [`bci_algebra_has`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BciProperty {
    Bci = 0,
    Bck = 1,
    PSemisimple = 2,
    Associative = 3,
    Commutative = 4,
    Quasigroup = 5,
    Loop = 6,
    BooleanGroup = 7,
    /// Requires a BCI-algebra.
    QuasiAssociative = 8,
}

/// Opaque finite algebra handle.
pub struct BciAlgebra(FiniteAlgebra);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Fail(BciStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::EmptyAlgebra => BciStatus::EmptyAlgebra,
            Error::OrderTooLarge { .. } => BciStatus::OrderTooLarge,
            Error::IndexOutOfRange { .. } => BciStatus::IndexOutOfRange,
            Error::InvalidTable(_) => BciStatus::InvalidTable,
            Error::NotBijection(_) => BciStatus::NotBijection,
            Error::NotBci => BciStatus::NotBci,
            Error::NotAutomorphism => BciStatus::NotAutomorphism,
            Error::NotAutomorphismGroup => BciStatus::NotAutomorphismGroup,
            Error::NotBooleanGroup => BciStatus::NotBooleanGroup,
            Error::FenyvesIndex(_) => BciStatus::FenyvesIndex,
            Error::UnsupportedIndex(_) => BciStatus::UnsupportedIndex,
            Error::Parse { .. } => BciStatus::Parse,
            Error::BudgetExceeded => BciStatus::BudgetExceeded,
            Error::Io(_) => BciStatus::Io,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BciStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BciStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BciStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            BciStatus::Panic
        }
    }
}

unsafe fn algebra<'a>(a: *const BciAlgebra) -> Result<&'a FiniteAlgebra, Fail> {
    a.as_ref().map(|h| &h.0).ok_or_else(|| null("algebra"))
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_algebra(out: *mut *mut BciAlgebra, a: FiniteAlgebra) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(BciAlgebra(a))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Fail(BciStatus::InvalidUtf8, "interior NUL".into()))?;
    out.write(c.into_raw());
    Ok(())
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(BciStatus::InvalidUtf8, "string is not UTF-8".into()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn bci_status_message(status: BciStatus) -> *const c_char {
    let s: &'static CStr = match status {
        BciStatus::Ok => c"ok",
        BciStatus::NullPointer => c"null pointer",
        BciStatus::InvalidUtf8 => c"invalid UTF-8",
        BciStatus::EmptyAlgebra => c"empty algebra",
        BciStatus::OrderTooLarge => c"order too large",
        BciStatus::IndexOutOfRange => c"index out of range",
        BciStatus::InvalidTable => c"invalid table",
        BciStatus::NotBijection => c"not a bijection",
        BciStatus::NotBci => c"not a BCI-algebra",
        BciStatus::NotAutomorphism => c"not an automorphism",
        BciStatus::NotAutomorphismGroup => c"not an automorphism group",
        BciStatus::NotBooleanGroup => c"automorphism group is not Boolean",
        BciStatus::FenyvesIndex => c"identity index outside 1..60",
        BciStatus::UnsupportedIndex => c"identity has no transfer theorem",
        BciStatus::Parse => c"parse error",
        BciStatus::BudgetExceeded => c"time budget exceeded",
        BciStatus::Io => c"io error",
        BciStatus::UnknownName => c"unknown bundled algebra",
        BciStatus::BufferTooSmall => c"buffer too small",
        BciStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bci_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds an algebra from a row-major `order * order` table.
///
/// # Safety
/// `table` must point to `order * order` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_from_table(
    order: usize,
    table: *const usize,
    zero: usize,
    out: *mut *mut BciAlgebra,
) -> BciStatus {
    guard(|| {
        if table.is_null() {
            return Err(null("table"));
        }
        let len = order
            .checked_mul(order)
            .ok_or(Fail(BciStatus::OrderTooLarge, "order overflows".into()))?;
        if order > bci_workbench::algebra::MAX_TABLE_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: bci_workbench::algebra::MAX_TABLE_ORDER,
            }
            .into());
        }
        let cells = std::slice::from_raw_parts(table, len).to_vec();
        put_algebra(out, FiniteAlgebra::from_table(order, cells, zero)?)
    })
}

/// Parses the plain-text table format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_parse(
    src: *const c_char,
    out: *mut *mut BciAlgebra,
) -> BciStatus {
    guard(|| put_algebra(out, parse_table(text(src)?)?))
}

/// One of the bundled algebras: `powerset1..3`, `z2..z4`, `chain2`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_bundled(
    name: *const c_char,
    out: *mut *mut BciAlgebra,
) -> BciStatus {
    guard(|| {
        let name = text(name)?;
        let a = bundled::load(name).ok_or_else(|| {
            Fail(
                BciStatus::UnknownName,
                format!("no bundled algebra `{name}`"),
            )
        })?;
        put_algebra(out, a)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `a` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_free(a: *mut BciAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `a` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_order(a: *const BciAlgebra) -> usize {
    a.as_ref().map_or(0, |h| h.0.order())
}

/// Copies the row-major table into `buf`, which holds `len` entries.
///
/// # Safety
/// `a` must be a live handle; `buf` must hold `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_table(
    a: *const BciAlgebra,
    buf: *mut usize,
    len: usize,
) -> BciStatus {
    guard(|| {
        let a = algebra(a)?;
        if buf.is_null() {
            return Err(null("buffer"));
        }
        let t = a.table();
        if len < t.len() {
            return Err(Fail(
                BciStatus::BufferTooSmall,
                format!("need {} entries", t.len()),
            ));
        }
        ptr::copy_nonoverlapping(t.as_ptr(), buf, t.len());
        Ok(())
    })
}

/// `x * y`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_op(
    a: *const BciAlgebra,
    x: usize,
    y: usize,
    out: *mut usize,
) -> BciStatus {
    guard(|| put(out, algebra(a)?.multiply(x, y)?))
}

/// Whether the algebra has `property`.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_has(
    a: *const BciAlgebra,
    property: BciProperty,
    out: *mut bool,
) -> BciStatus {
    guard(|| {
        let a = algebra(a)?;
        let holds = match property {
            BciProperty::Bci => is_bci(a),
            BciProperty::Bck => is_bck(a).holds,
            BciProperty::PSemisimple => is_p_semisimple(a).holds,
            BciProperty::Associative => is_associative(a).holds,
            BciProperty::Commutative => is_commutative(a).holds,
            BciProperty::Quasigroup => is_quasigroup(a).holds,
            BciProperty::Loop => is_loop(a).holds,
            BciProperty::BooleanGroup => is_boolean_group(a).holds,
            BciProperty::QuasiAssociative => is_quasi_associative(a)?.holds,
        };
        put(out, holds)
    })
}

/// Whether identity `index` (1..=60) holds.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_satisfies(
    a: *const BciAlgebra,
    index: usize,
    out: *mut bool,
) -> BciStatus {
    guard(|| put(out, satisfies_fenyves(algebra(a)?, index)?.holds))
}

/// 60-bit mask; bit `i - 1` set when identity `i` holds.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_fenyves_profile(
    a: *const BciAlgebra,
    out: *mut u64,
) -> BciStatus {
    guard(|| put(out, fenyves_profile(algebra(a)?).0))
}

/// Size of the group of zero-fixing automorphisms.
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_automorphism_count(
    a: *const BciAlgebra,
    out: *mut usize,
) -> BciStatus {
    guard(|| put(out, automorphism_group(algebra(a)?).len()))
}

/// Classification report as JSON. Release with [`bci_string_free`].
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_classify_json(
    a: *const BciAlgebra,
    out: *mut *mut c_char,
) -> BciStatus {
    guard(|| {
        let report = classify(algebra(a)?)?;
        put_string(
            out,
            ReportDocument::new(ReportBody::Classification(report)).to_json(),
        )
    })
}

/// The algebra in the plain-text table format. Release with [`bci_string_free`].
///
/// # Safety
/// `a` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_algebra_to_text(
    a: *const BciAlgebra,
    out: *mut *mut c_char,
) -> BciStatus {
    guard(|| put_string(out, print_table(algebra(a)?)))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bci_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Holomorph of `base` by the group generated by `count` involutive
/// automorphisms. `images` holds `count * order` entries, one image list per
/// generator. `count == 0` selects the trivial group.
///
/// # Safety
/// `base` must be a live handle; `images` must hold `count * order` values
/// (it may be null when `count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_holomorph_build(
    base: *const BciAlgebra,
    images: *const usize,
    count: usize,
    out: *mut *mut BciAlgebra,
) -> BciStatus {
    guard(|| {
        let a = algebra(base)?;
        let n = a.order();
        let group = if count == 0 {
            AutomorphismGroup::trivial(n)
        } else {
            if images.is_null() {
                return Err(null("images"));
            }
            let len = count.checked_mul(n).ok_or_else(|| null("images"))?;
            let flat = std::slice::from_raw_parts(images, len);
            let gens = flat
                .chunks(n)
                .map(|c| Bijection::new(c.to_vec()))
                .collect::<Result<Vec<_>, _>>()?;
            let g = AutomorphismGroup::generated_by(a, &gens)?;
            if !g.is_boolean() {
                return Err(Error::NotBooleanGroup.into());
            }
            g
        };
        let h = build_holomorph(a, &group)?;
        put_algebra(out, h.algebra().clone())
    })
}

/// Number of BCI-algebras of `order`, up to isomorphism or labelled.
/// Orders above 5 are refused.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bci_enumerate_count(
    order: usize,
    up_to_isomorphism: bool,
    out: *mut usize,
) -> BciStatus {
    guard(|| {
        let mut opts = EnumerationOptions::new(order);
        opts.up_to_isomorphism = up_to_isomorphism;
        put(out, enumerate_bci(&opts)?.len())
    })
}
