//! C interface to `hfroot`.
//!
//! Objects are opaque handles (`HfSeifert`, `HfModule`, `HfTau`) released
//! with the matching `hf_*_free`. Every fallible call
//! returns an [`HfStatus`]; on failure [`hf_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hfroot::exactmath::dedekind_naive;
use hfroot::gradedroot::{compute_hf, HFPlusModule};
use hfroot::report::module_to_json;
use hfroot::seifert::brieskorn_general;
use hfroot::tau::{tau_sequence, TauFunction};
use hfroot::{Error, SeifertInvariants};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgs = 2,
    NotCoprime = 3,
    NotPrimePower = 4,
    DomainEdge = 5,
    Overflow = 6,
    Unsupported = 7,
    Parse = 8,
    OutOfRange = 9,
    Internal = 10,
}

pub struct HfSeifert(SeifertInvariants);
pub struct HfModule(HFPlusModule);
pub struct HfTau(TauFunction);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> HfStatus {
    match e {
        Error::InvalidArgs(_) | Error::EmptyList | Error::MalformedInput(_) => {
            HfStatus::InvalidArgs
        }
        Error::NotInvertible { .. } | Error::NotCoprime(_) => HfStatus::NotCoprime,
        Error::NotPrimePower(_) => HfStatus::NotPrimePower,
        Error::DomainEdge(_) => HfStatus::DomainEdge,
        Error::Overflow(_) => HfStatus::Overflow,
        Error::UnsupportedTriple(_) => HfStatus::Unsupported,
        Error::Parse(_) | Error::MalformedSequence(_) => HfStatus::Parse,
        Error::InternalInconsistency(_) | Error::NonIntegralShift(_) => HfStatus::Internal,
    }
}

/// Runs `f`, turning errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (HfStatus, String)>) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HfStatus::Internal
        }
    }
}

fn lift(e: Error) -> (HfStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (HfStatus, String) {
    (HfStatus::NullPointer, format!("{what} is null"))
}

/// Static description of a status code. Never null; do not free.
#[no_mangle]
pub extern "C" fn hf_status_message(status: HfStatus) -> *const c_char {
    let s: &'static CStr = match status {
        HfStatus::Ok => c"ok",
        HfStatus::NullPointer => c"null pointer argument",
        HfStatus::InvalidArgs => c"invalid arguments",
        HfStatus::NotCoprime => c"arguments are not coprime",
        HfStatus::NotPrimePower => c"not a prime power",
        HfStatus::DomainEdge => c"outside the domain of the formula",
        HfStatus::Overflow => c"integer overflow",
        HfStatus::Unsupported => c"input too large",
        HfStatus::Parse => c"parse error",
        HfStatus::OutOfRange => c"index out of range",
        HfStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Message of the last failure on this thread. Valid until the next failing
/// call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Seifert invariants of the Brieskorn sphere `Sigma(a1, a2, a3)`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn hf_seifert_brieskorn(
    a1: i64,
    a2: i64,
    a3: i64,
    out: *mut *mut HfSeifert,
) -> HfStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let s = brieskorn_general(&[a1, a2, a3]).map_err(lift)?;
        *out = Box::into_raw(Box::new(HfSeifert(s)));
        Ok(())
    })
}

/// Parses `e0=E arms=A/B,...` and checks it describes a homology sphere.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` as in [`hf_seifert_brieskorn`].
#[no_mangle]
pub unsafe extern "C" fn hf_seifert_parse(
    text: *const c_char,
    out: *mut *mut HfSeifert,
) -> HfStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| (HfStatus::Parse, "text is not UTF-8".to_string()))?;
        let s: SeifertInvariants = text.parse().map_err(lift)?;
        if !s.validate().map_err(lift)? {
            return Err((
                HfStatus::InvalidArgs,
                format!("{s} is not an integer homology sphere"),
            ));
        }
        *out = Box::into_raw(Box::new(HfSeifert(s)));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_seifert_free(s: *mut HfSeifert) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// `HF+(-Sigma)` for the given invariants.
///
/// # Safety
/// `s` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_module_compute(
    s: *const HfSeifert,
    out: *mut *mut HfModule,
) -> HfStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("seifert"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let m = compute_hf(&s.0).map_err(lift)?;
        *out = Box::into_raw(Box::new(HfModule(m)));
        Ok(())
    })
}

/// The d-invariant, or 0 for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_module_d(m: *const HfModule) -> i64 {
    m.as_ref().map_or(0, |m| m.0.d)
}

/// Number of distinct `(bottom, length)` towers.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_module_tower_count(m: *const HfModule) -> usize {
    m.as_ref().map_or(0, |m| m.0.towers().count())
}

/// Tower `index` in increasing `(bottom, length)` order.
///
/// # Safety
/// `m` must be a live handle; the output pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn hf_module_tower(
    m: *const HfModule,
    index: usize,
    bottom: *mut i64,
    length: *mut i64,
    mult: *mut u64,
) -> HfStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("module"))?;
        if bottom.is_null() || length.is_null() || mult.is_null() {
            return Err(null("output pointer"));
        }
        let (t, k) = m.0.towers().nth(index).ok_or_else(|| {
            (
                HfStatus::OutOfRange,
                format!("tower {index} of {}", m.0.towers().count()),
            )
        })?;
        *bottom = t.bottom;
        *length = t.length;
        *mult = k;
        Ok(())
    })
}

/// JSON form of the module; free the result with [`hf_string_free`].
///
/// # Safety
/// `m` must be a live handle, `name` null or NUL-terminated, `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hf_module_to_json(
    m: *const HfModule,
    name: *const c_char,
    out: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        let m = m.as_ref().ok_or_else(|| null("module"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let name = if name.is_null() {
            String::new()
        } else {
            CStr::from_ptr(name).to_string_lossy().into_owned()
        };
        let json = module_to_json(&name, &m.0);
        let c = CString::new(json).map_err(|_| (HfStatus::Internal, "NUL in JSON".to_string()))?;
        *out = c.into_raw();
        Ok(())
    })
}

/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_module_free(m: *mut HfModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Tau function up to its truncation bound.
///
/// # Safety
/// `s` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hf_tau_compute(s: *const HfSeifert, out: *mut *mut HfTau) -> HfStatus {
    guard(|| {
        let s = s.as_ref().ok_or_else(|| null("seifert"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let t = tau_sequence(&s.0).map_err(lift)?;
        *out = Box::into_raw(Box::new(HfTau(t)));
        Ok(())
    })
}

/// Number of stored values `tau(0..=B)`.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_tau_len(t: *const HfTau) -> usize {
    t.as_ref().map_or(0, |t| t.0.values.len())
}

/// Borrowed pointer to the values; valid while `t` lives.
///
/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_tau_values(t: *const HfTau) -> *const i64 {
    t.as_ref().map_or(ptr::null(), |t| t.0.values.as_ptr())
}

/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_tau_min(t: *const HfTau) -> i64 {
    t.as_ref().map_or(0, |t| t.0.min())
}

/// # Safety
/// `t` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_tau_free(t: *mut HfTau) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Dedekind sum `s(h, k)` as a reduced fraction `num / den`, `den > 0`.
///
/// # Safety
/// `num` and `den` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hf_dedekind(h: i64, k: i64, num: *mut i64, den: *mut i64) -> HfStatus {
    guard(|| {
        if num.is_null() || den.is_null() {
            return Err(null("output pointer"));
        }
        if k >= 1 && hfroot::exactmath::gcd(h, k) != 1 {
            return Err((HfStatus::NotCoprime, format!("gcd({h}, {k}) != 1")));
        }
        let s = dedekind_naive(h, k).map_err(lift)?;
        let overflow = || {
            (
                HfStatus::Overflow,
                "Dedekind sum does not fit in i64".to_string(),
            )
        };
        *num = s.numer().to_i64().ok_or_else(overflow)?;
        *den = s.denom().to_i64().ok_or_else(overflow)?;
        Ok(())
    })
}
