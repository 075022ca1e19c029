//! C ABI for `mzv-core`.
//!
//! Word polynomials cross the boundary as opaque `MzvPoly` handles owned by
//! the caller and released with [`mzv_poly_free`]. Every fallible function
//! returns an [`MzvStatus`]; on failure a message is available from
//! [`mzv_last_error_message`] on the same thread. Strings handed out by the
//! library are NUL-terminated UTF-8 and must be released with
//! [`mzv_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mzv_core::combinatorics;
use mzv_core::numeric::{self, EvalConfig, TKind, ZetaKind};
use mzv_core::word_algebra::{
    expand_power_closed_form, lemma1_step, poly_product, power, ProductKind, Word, WordPoly,
};
use mzv_core::Error;

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MzvStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Inadmissible = 3,
    NotMultiple = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MzvProductKind {
    Harmonic = 0,
    Star = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MzvZetaKind {
    Mzv = 0,
    Mzsv = 1,
    HurwitzMzv = 2,
    HurwitzMzsv = 3,
    /// Multiple t-value; the shift argument is ignored.
    T = 4,
    /// Multiple t-star value; the shift argument is ignored.
    TStar = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MzvEvalResult {
    pub value: f64,
    pub tail_bound: f64,
}

/// Opaque word polynomial.
pub struct MzvPoly(WordPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn status_of(err: &Error) -> MzvStatus {
    match err {
        Error::Inadmissible { .. } => MzvStatus::Inadmissible,
        Error::NotMultiple { .. } => MzvStatus::NotMultiple,
        _ => MzvStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard<F>(body: F) -> MzvStatus
where
    F: FnOnce() -> Result<(), MzvError>,
{
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MzvStatus::Ok,
        Ok(Err(MzvError::Null(what))) => {
            set_last_error(format!("null pointer passed for `{what}`"));
            MzvStatus::NullPointer
        }
        Ok(Err(MzvError::Invalid(message))) => {
            set_last_error(message);
            MzvStatus::InvalidArgument
        }
        Ok(Err(MzvError::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".into());
            MzvStatus::Panic
        }
    }
}

enum MzvError {
    Null(&'static str),
    Invalid(String),
    Core(Error),
}

impl From<Error> for MzvError {
    fn from(e: Error) -> Self {
        MzvError::Core(e)
    }
}

fn kind_of(k: MzvProductKind) -> ProductKind {
    match k {
        MzvProductKind::Harmonic => ProductKind::Harmonic,
        MzvProductKind::Star => ProductKind::Star,
    }
}

unsafe fn parts_from<'a>(parts: *const u32, len: usize) -> Result<&'a [u32], MzvError> {
    if len == 0 {
        return Ok(&[]);
    }
    if parts.is_null() {
        return Err(MzvError::Null("parts"));
    }
    Ok(std::slice::from_raw_parts(parts, len))
}

unsafe fn poly_ref<'a>(p: *const MzvPoly, what: &'static str) -> Result<&'a WordPoly, MzvError> {
    p.as_ref().map(|p| &p.0).ok_or(MzvError::Null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &'static str) -> Result<(), MzvError> {
    if out.is_null() {
        return Err(MzvError::Null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(p: WordPoly) -> *mut MzvPoly {
    Box::into_raw(Box::new(MzvPoly(p)))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the last failed call on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mzv_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn mzv_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Releases a polynomial handle. NULL is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_free(p: *mut MzvPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Creates `1 * z_{parts[0]} ... z_{parts[len-1]}`; `len == 0` gives the unit.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_from_word(
    parts: *const u32,
    len: usize,
    out: *mut *mut MzvPoly,
) -> MzvStatus {
    guard(|| {
        let word = Word::new(parts_from(parts, len)?.to_vec())?;
        write_out(out, boxed(WordPoly::from_word(word)), "out")
    })
}

/// `z_n` multiplied with itself `k` times by the product recursion.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_power(
    n: u32,
    k: u32,
    kind: MzvProductKind,
    out: *mut *mut MzvPoly,
) -> MzvStatus {
    guard(|| write_out(out, boxed(power(n, k, kind_of(kind))?), "out"))
}

/// The multinomial closed form of the same power.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_expand_closed_form(
    n: u32,
    k: u32,
    kind: MzvProductKind,
    out: *mut *mut MzvPoly,
) -> MzvStatus {
    guard(|| {
        write_out(
            out,
            boxed(expand_power_closed_form(n, k, kind_of(kind))?),
            "out",
        )
    })
}

/// Bilinear product of two polynomials.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_product(
    a: *const MzvPoly,
    b: *const MzvPoly,
    kind: MzvProductKind,
    out: *mut *mut MzvPoly,
) -> MzvStatus {
    guard(|| {
        let a = poly_ref(a, "a")?;
        let b = poly_ref(b, "b")?;
        write_out(out, boxed(poly_product(a, b, kind_of(kind))), "out")
    })
}

/// Positional product of a word with `z_n`; every subscript must be a
/// multiple of `n`.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_lemma1_step(
    parts: *const u32,
    len: usize,
    n: u32,
    kind: MzvProductKind,
    out: *mut *mut MzvPoly,
) -> MzvStatus {
    guard(|| {
        let word = Word::new(parts_from(parts, len)?.to_vec())?;
        write_out(out, boxed(lemma1_step(&word, n, kind_of(kind))?), "out")
    })
}

/// Number of nonzero terms.
///
/// # Safety
/// `p` must be a live handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_term_count(p: *const MzvPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Term-by-term equality.
///
/// # Safety
/// `a`, `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_equal(
    a: *const MzvPoly,
    b: *const MzvPoly,
    out: *mut bool,
) -> MzvStatus {
    guard(|| {
        let eq = poly_ref(a, "a")? == poly_ref(b, "b")?;
        write_out(out, eq, "out")
    })
}

/// Text rendering such as `2*z2 z2 + 1*z4`. Free with [`mzv_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_to_text(p: *const MzvPoly, out: *mut *mut c_char) -> MzvStatus {
    guard(|| {
        let text = poly_ref(p, "p")?.to_string();
        write_out(out, c_string(text), "out")
    })
}

/// JSON list of `{"word": [...], "coeff": {"num": "...", "den": "..."}}`
/// records in canonical order. Free with [`mzv_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_poly_to_json(p: *const MzvPoly, out: *mut *mut c_char) -> MzvStatus {
    guard(|| {
        let json = serde_json::to_string(poly_ref(p, "p")?).expect("word polynomials serialize");
        write_out(out, c_string(json), "out")
    })
}

fn eval_one(
    parts: &[u32],
    kind: MzvZetaKind,
    cfg: &EvalConfig,
) -> Result<numeric::EvalResult, Error> {
    let alpha = mzv_core::word_algebra::Composition::new(parts.to_vec())?;
    match kind {
        MzvZetaKind::Mzv => numeric::mzv(&alpha, cfg),
        MzvZetaKind::Mzsv => numeric::mzsv(&alpha, cfg),
        MzvZetaKind::HurwitzMzv => numeric::hurwitz_mzv(&alpha, cfg),
        MzvZetaKind::HurwitzMzsv => numeric::hurwitz_mzsv(&alpha, cfg),
        MzvZetaKind::T => numeric::t_value(&alpha, TKind::Plain, cfg),
        MzvZetaKind::TStar => numeric::t_value(&alpha, TKind::Star, cfg),
    }
}

/// Evaluates one composition by truncated nested summation.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_eval(
    parts: *const u32,
    len: usize,
    kind: MzvZetaKind,
    truncation: u64,
    shift: f64,
    out: *mut MzvEvalResult,
) -> MzvStatus {
    guard(|| {
        let cfg = EvalConfig::new(truncation).with_shift(shift);
        let r = eval_one(parts_from(parts, len)?, kind, &cfg)?;
        write_out(
            out,
            MzvEvalResult {
                value: r.value,
                tail_bound: r.tail_bound,
            },
            "out",
        )
    })
}

/// Linear evaluation of a polynomial. Only the four zeta kinds are accepted.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_eval_poly(
    p: *const MzvPoly,
    kind: MzvZetaKind,
    truncation: u64,
    shift: f64,
    out: *mut MzvEvalResult,
) -> MzvStatus {
    guard(|| {
        let poly = poly_ref(p, "p")?;
        let zeta = match kind {
            MzvZetaKind::Mzv => ZetaKind::Mzv,
            MzvZetaKind::Mzsv => ZetaKind::Mzsv,
            MzvZetaKind::HurwitzMzv => ZetaKind::HurwitzMzv,
            MzvZetaKind::HurwitzMzsv => ZetaKind::HurwitzMzsv,
            MzvZetaKind::T | MzvZetaKind::TStar => {
                return Err(MzvError::Invalid(format!(
                    "{kind:?}: polynomial evaluation supports the zeta kinds only"
                )))
            }
        };
        let cfg = EvalConfig::new(truncation).with_shift(shift);
        let r = numeric::evaluate_poly(poly, zeta, &cfg)?;
        write_out(
            out,
            MzvEvalResult {
                value: r.value,
                tail_bound: r.tail_bound,
            },
            "out",
        )
    })
}

/// Fubini number `F(k)` as a decimal string. Free with [`mzv_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mzv_fubini(k: u32, out: *mut *mut c_char) -> MzvStatus {
    guard(|| write_out(out, c_string(combinatorics::fubini(k).to_string()), "out"))
}

/// Checks `F(k)` against the Delannoy-weighted split at `ell`. Writes
/// whether both sides agree; `lhs_out` / `rhs_out` may be NULL, otherwise
/// they receive decimal strings to free with [`mzv_string_free`].
///
/// # Safety
/// `equal_out` must be writable; the string outputs must be writable or NULL.
#[no_mangle]
pub unsafe extern "C" fn mzv_verify_theorem3(
    k: u32,
    ell: u32,
    equal_out: *mut bool,
    lhs_out: *mut *mut c_char,
    rhs_out: *mut *mut c_char,
) -> MzvStatus {
    guard(|| {
        if equal_out.is_null() {
            return Err(MzvError::Null("equal_out"));
        }
        let check = combinatorics::verify_theorem3(k, ell)?;
        equal_out.write(check.equal);
        if !lhs_out.is_null() {
            lhs_out.write(c_string(check.lhs.to_string()));
        }
        if !rhs_out.is_null() {
            rhs_out.write(c_string(check.rhs.to_string()));
        }
        Ok(())
    })
}
