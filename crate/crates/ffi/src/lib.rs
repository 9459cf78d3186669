//! C ABI over the geochroma library.
//!
//! Configurations and decompositions are opaque handles owned by the caller
//! and released with the matching `*_free` function. Every fallible call
//! returns a [`GcStatus`]; on failure [`gc_last_error_message`] describes the
//! cause for the calling thread. Strings returned by the library must be
//! released with [`gc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use geochroma::chroma::verify_coloring;
use geochroma::constructions::{
    thm32_construction, thm3_construction, thm4_construction, thm5_construction, trivial_edge_decomposition,
    validate_decomposition, Decomposition,
};
use geochroma::exactgeom::{generate_general_position, Configuration};
use geochroma::GeoError;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidConfiguration = 3,
    ConstructionFailed = 4,
    Json = 5,
    Panic = 6,
}

/// Point configuration handle.
pub struct GcConfig(Configuration);

/// Decomposition handle, optionally carrying a coloring.
pub struct GcDecomposition(Decomposition);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &GeoError) -> GcStatus {
    match e {
        GeoError::CoordinateBound { .. }
        | GeoError::DuplicatePoint(..)
        | GeoError::Collinear(..)
        | GeoError::InvalidConfiguration(_) => GcStatus::InvalidConfiguration,
        GeoError::InvalidArgument(_) | GeoError::UnsupportedOrder(_) => GcStatus::InvalidArgument,
        GeoError::Json(_) | GeoError::Schema(_) => GcStatus::Json,
        _ => GcStatus::ConstructionFailed,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (GcStatus, String)>) -> GcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GcStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            GcStatus::Panic
        }
    }
}

fn lift<T>(r: geochroma::Result<T>) -> Result<T, (GcStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (GcStatus, String) {
    (GcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), (GcStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn config_ref<'a>(c: *const GcConfig) -> Result<&'a Configuration, (GcStatus, String)> {
    c.as_ref().map(|c| &c.0).ok_or_else(|| null("config"))
}

unsafe fn decomposition_ref<'a>(d: *const GcDecomposition) -> Result<&'a Decomposition, (GcStatus, String)> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| null("decomposition"))
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn gc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `n` points in convex position.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn gc_config_convex(n: usize, out: *mut *mut GcConfig) -> GcStatus {
    guard(|| write_out(out, GcConfig(lift(Configuration::convex(n))?)))
}

/// `n` seeded random points in general position with coordinates in `[-bound, bound]`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn gc_config_generate(n: usize, bound: i64, seed: u64, out: *mut *mut GcConfig) -> GcStatus {
    guard(|| write_out(out, GcConfig(lift(generate_general_position(n, bound, seed))?)))
}

/// Parses a configuration from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_config_from_json(json: *const c_char, out: *mut *mut GcConfig) -> GcStatus {
    guard(|| {
        let text = cstr(json)?;
        let cfg: Configuration = serde_json::from_str(text).map_err(|e| (GcStatus::Json, e.to_string()))?;
        write_out(out, GcConfig(cfg))
    })
}

/// Number of points.
///
/// # Safety
/// `config` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_config_len(config: *const GcConfig) -> usize {
    config.as_ref().map_or(0, |c| c.0.n())
}

/// # Safety
/// `config` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_config_free(config: *mut GcConfig) {
    if !config.is_null() {
        drop(Box::from_raw(config));
    }
}

unsafe fn cstr<'a>(s: *const c_char) -> Result<&'a str, (GcStatus, String)> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (GcStatus::InvalidArgument, format!("invalid UTF-8: {e}")))
}

/// Every edge as its own part.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_build_edges(config: *const GcConfig, out: *mut *mut GcDecomposition) -> GcStatus {
    guard(|| {
        let d = lift(trivial_edge_decomposition(config_ref(config)?))?;
        write_out(out, GcDecomposition(d))
    })
}

/// Convex matching-triangle construction on `n` points (`n` divisible by 3).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_build_thm4(n: usize, out: *mut *mut GcDecomposition) -> GcStatus {
    guard(|| write_out(out, GcDecomposition(lift(thm4_construction(n))?)))
}

/// Cyclic triple system on `18k + 1` points with its box coloring (`k` even, `k >= 4`).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_build_thm32(k: usize, out: *mut *mut GcDecomposition) -> GcStatus {
    guard(|| write_out(out, GcDecomposition(lift(thm32_construction(k))?.decomposition)))
}

/// K4 fan construction. `q == 0` picks the largest feasible `q`.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_build_thm3(config: *const GcConfig, q: usize, out: *mut *mut GcDecomposition) -> GcStatus {
    guard(|| {
        let q = (q > 0).then_some(q);
        let d = lift(thm3_construction(config_ref(config)?, q))?.decomposition;
        write_out(out, GcDecomposition(d))
    })
}

/// Recursive nine-region triangle construction, colored.
///
/// # Safety
/// `config` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_build_thm5(
    config: *const GcConfig,
    threshold: usize,
    out: *mut *mut GcDecomposition,
) -> GcStatus {
    guard(|| {
        let (d, _) = lift(thm5_construction(config_ref(config)?, threshold))?;
        write_out(out, GcDecomposition(d))
    })
}

/// Parses a decomposition from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_from_json(json: *const c_char, out: *mut *mut GcDecomposition) -> GcStatus {
    guard(|| {
        let d = lift(Decomposition::from_json(cstr(json)?))?;
        write_out(out, GcDecomposition(d))
    })
}

/// Number of parts, 0 for NULL.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_part_count(d: *const GcDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.0.parts.len())
}

/// Number of distinct colors, or 0 if uncolored.
///
/// # Safety
/// `d` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_palette_size(d: *const GcDecomposition) -> usize {
    d.as_ref().and_then(|d| d.0.palette_size()).unwrap_or(0)
}

/// Checks the exact edge cover. `*valid` is set to 1 or 0.
///
/// # Safety
/// `d` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_validate(d: *const GcDecomposition, valid: *mut i32) -> GcStatus {
    guard(|| {
        let r = validate_decomposition(decomposition_ref(d)?);
        let valid = valid.as_mut().ok_or_else(|| null("valid"))?;
        *valid = r.is_valid() as i32;
        Ok(())
    })
}

/// Counts same-colored intersecting part pairs into `*violations`.
///
/// # Safety
/// `d` must be a live handle; `violations` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_verify_coloring(
    d: *const GcDecomposition,
    violations: *mut usize,
) -> GcStatus {
    guard(|| {
        let d = decomposition_ref(d)?;
        let colors =
            d.coloring.as_ref().ok_or_else(|| (GcStatus::InvalidArgument, "decomposition is uncolored".into()))?;
        let out = violations.as_mut().ok_or_else(|| null("violations"))?;
        *out = verify_coloring(d, colors).len();
        Ok(())
    })
}

/// Serializes to JSON; release the string with [`gc_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_to_json(d: *const GcDecomposition, out: *mut *mut c_char) -> GcStatus {
    guard(|| {
        let text = lift(decomposition_ref(d)?.to_json())?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = CString::new(text).map_err(|e| (GcStatus::Json, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `d` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_decomposition_free(d: *mut GcDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
