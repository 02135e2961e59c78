//! C ABI over the `nakayama` library.
//!
//! Presentations are opaque handles. Every call returns an [`NkStatus`]; on failure
//! [`nk_last_error_message`] describes the error. Strings returned through out
//! parameters are owned by the caller and released with [`nk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use nakayama::nakayama::{nakayama_index, NakayamaIndex, WalkReading};
use nakayama::repmod::{DEFAULT_END_CAP, DEFAULT_SUB_CAP};
use nakayama::{Error, Presentation};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Syntax = 3,
    Validation = 4,
    NotSpecialBiserial = 5,
    BandExists = 6,
    Precondition = 7,
    Internal = 8,
    Panic = 9,
}

/// Opaque presentation handle.
pub struct NkPresentation(Presentation);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> NkStatus {
    match e {
        Error::Syntax { .. } => NkStatus::Syntax,
        Error::NotSpecialBiserial(_) => NkStatus::NotSpecialBiserial,
        Error::BandExists(_) => NkStatus::BandExists,
        Error::NotRight4(_)
        | Error::PreconditionNotRight4(_)
        | Error::ProjectiveModule(_)
        | Error::NotApplicable(_)
        | Error::ZeroModule
        | Error::NotAString(_)
        | Error::CapExceeded { .. }
        | Error::NotClosed => NkStatus::Precondition,
        Error::ConstructionMismatch(_) | Error::Ambiguous(_) | Error::GenerationFailed(_) => NkStatus::Internal,
        _ => NkStatus::Validation,
    }
}

fn guard(f: impl FnOnce() -> Result<(), NkStatus>) -> NkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NkStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside the library");
            NkStatus::Panic
        }
    }
}

fn lib<T>(r: nakayama::Result<T>) -> Result<T, NkStatus> {
    r.map_err(|e| {
        set_error(&e.to_string());
        status_of(&e)
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, NkStatus> {
    if s.is_null() {
        set_error("null pointer argument");
        return Err(NkStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        NkStatus::InvalidUtf8
    })
}

unsafe fn handle<'a>(p: *const NkPresentation) -> Result<&'a Presentation, NkStatus> {
    if p.is_null() {
        set_error("null presentation handle");
        return Err(NkStatus::NullPointer);
    }
    Ok(&(*p).0)
}

unsafe fn check_out<T>(out: *mut T) -> Result<(), NkStatus> {
    if out.is_null() {
        set_error("null output pointer");
        return Err(NkStatus::NullPointer);
    }
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), NkStatus> {
    let c = CString::new(s).map_err(|_| {
        set_error("output contains a nul byte");
        NkStatus::Internal
    })?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_handle(out: *mut *mut NkPresentation, p: Presentation) {
    *out = Box::into_raw(Box::new(NkPresentation(p)));
}

/// Parses a presentation from its text form into `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_presentation_parse(text: *const c_char, out: *mut *mut NkPresentation) -> NkStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let t = read_str(text)?;
        let p = lib(nakayama::presentation::parse_presentation(t))?;
        put_handle(out, p);
        Ok(())
    })
}

/// Loads a built-in presentation by name into `*out`.
///
/// # Safety
/// `name` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_presentation_preset(name: *const c_char, out: *mut *mut NkPresentation) -> NkStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let n = read_str(name)?;
        let p = lib(nakayama::corpus::preset(n))?;
        put_handle(out, p);
        Ok(())
    })
}

/// Replaces the field characteristic of `p`.
///
/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn nk_presentation_set_characteristic(p: *mut NkPresentation, characteristic: u32) -> NkStatus {
    guard(|| {
        if p.is_null() {
            set_error("null presentation handle");
            return Err(NkStatus::NullPointer);
        }
        let np = lib((*p).0.with_characteristic(characteristic))?;
        (*p).0 = np;
        Ok(())
    })
}

/// The canonical text form of `p`.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_presentation_serialize(p: *const NkPresentation, out: *mut *mut c_char) -> NkStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let pr = handle(p)?;
        put_string(out, pr.serialize())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nk_presentation_free(p: *mut NkPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn json_call(
    p: *const NkPresentation,
    out: *mut *mut c_char,
    f: impl FnOnce(&Presentation) -> nakayama::Result<String>,
) -> NkStatus {
    guard(|| {
        check_out(out)?;
        *out = ptr::null_mut();
        let pr = handle(p)?;
        let s = lib(f(pr))?;
        put_string(out, s)
    })
}

/// Admissibility, special biserialness and band report as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_validate_json(p: *const NkPresentation, out: *mut *mut c_char) -> NkStatus {
    json_call(p, out, nakayama::cli::validate_json)
}

/// Index, walk conditions and structure suite as JSON. `reduced_walks` selects the
/// reading of the walk conditions over all reduced walks instead of strings.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_classify_json(p: *const NkPresentation, reduced_walks: bool, out: *mut *mut c_char) -> NkStatus {
    let reading = if reduced_walks { WalkReading::AllReduced } else { WalkReading::StringsOnly };
    json_call(p, out, |pr| nakayama::cli::classify_json(pr, reading))
}

/// Indecomposable modules with degree reports as JSON.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_modules_json(p: *const NkPresentation, out: *mut *mut c_char) -> NkStatus {
    json_call(p, out, |pr| nakayama::cli::modules_json(pr, DEFAULT_SUB_CAP, DEFAULT_END_CAP))
}

/// The Auslander-Reiten quiver in Graphviz format.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_arquiver_dot(p: *const NkPresentation, out: *mut *mut c_char) -> NkStatus {
    json_call(p, out, |pr| {
        nakayama::arquiver::ar_quiver(pr).map(|g| nakayama::arquiver::export_dot(&g))
    })
}

/// The right n-Nakayama index, or -1 for representation-infinite algebras.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn nk_nakayama_index(p: *const NkPresentation, out: *mut i32) -> NkStatus {
    guard(|| {
        check_out(out)?;
        let pr = handle(p)?;
        let v = lib(nakayama_index(pr))?;
        *out = match v.index {
            NakayamaIndex::Finite(n) => i32::try_from(n).unwrap_or(i32::MAX),
            NakayamaIndex::Infinite => -1,
        };
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn nk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn nk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
