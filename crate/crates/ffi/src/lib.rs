//! C ABI for the schubert-codes library.
//!
//! Every object crossing the boundary is an opaque handle allocated by this
//! crate and released with the matching `sc_*_free` function. Functions
//! return an [`ScStatus`]; results travel through out-pointers. Handles are
//! immutable once created, so sharing them across threads is safe as long as
//! creation/destruction is ordered by the caller. Panics are caught at the
//! boundary and reported as `SC_STATUS_INTERNAL_ERROR`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use schubert_codes::{
    ball_contains_pluecker, code_min_distance, gaussian_binomial, injection_distance,
    intersection_number, list_decode, min_distance_decode, pluecker_embed, subspace_distance,
    transmit, ChannelConfig, CodeError, DecodeMethod, DecodeResult, Field, FieldError, MatrixGF,
    Metric, Subspace, SubspaceCode,
};

/// Result of every FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Arguments fail a precondition (bad codes, shapes, duplicate
    /// codewords, rank-deficient generators, ...).
    InvalidArgument = 2,
    /// Arithmetic domain error such as division by zero.
    DomainError = 3,
    /// The instance is infeasible (operator-channel dimensions).
    Infeasible = 4,
    /// An enumeration would exceed the configured budget.
    BudgetExceeded = 5,
    /// The caller's buffer is too small; the required size was reported.
    BufferTooSmall = 6,
    /// Unexpected internal failure.
    InternalError = 7,
}

/// Metric selector for distances and decoding.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScMetric {
    Injection = 0,
    Subspace = 1,
}

impl From<ScMetric> for Metric {
    fn from(m: ScMetric) -> Metric {
        match m {
            ScMetric::Injection => Metric::Injection,
            ScMetric::Subspace => Metric::Subspace,
        }
    }
}

/// List-decoder route selector.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScDecodeMethod {
    /// Per-codeword distance computation.
    Oracle = 0,
    /// Pluecker ball equations around the received word.
    Pluecker = 1,
}

/// Opaque finite field handle.
pub struct ScField(Field);

/// Opaque subspace handle (canonical RREF generator inside).
pub struct ScSubspace(Subspace);

/// Opaque subspace-code handle.
pub struct ScCode(SubspaceCode);

/// Opaque decoder-result handle.
pub struct ScDecodeResult(DecodeResult);

fn field_error_status(e: &FieldError) -> ScStatus {
    match e {
        FieldError::DivisionByZero => ScStatus::DomainError,
        _ => ScStatus::InvalidArgument,
    }
}

fn code_error_status(e: &CodeError) -> ScStatus {
    match e {
        CodeError::Grassmann(schubert_codes::GrassmannError::BudgetExceeded { .. }) => {
            ScStatus::BudgetExceeded
        }
        _ => ScStatus::InvalidArgument,
    }
}

/// Runs a closure, translating panics into `InternalError`.
fn guarded(body: impl FnOnce() -> ScStatus) -> ScStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(_) => ScStatus::InternalError,
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> ScStatus {
    if out.is_null() {
        return ScStatus::NullArgument;
    }
    unsafe { out.write(value) };
    ScStatus::Ok
}

/// Copies a decimal string (with NUL) into the caller's buffer; `required`
/// always receives the size the buffer needs, including the terminator.
unsafe fn write_decimal(
    value: &str,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> ScStatus {
    let needed = value.len() + 1;
    if !required.is_null() {
        unsafe { required.write(needed) };
    }
    if buf.is_null() {
        return if buf_len == 0 { ScStatus::Ok } else { ScStatus::NullArgument };
    }
    if buf_len < needed {
        return ScStatus::BufferTooSmall;
    }
    unsafe {
        std::ptr::copy_nonoverlapping(value.as_ptr() as *const c_char, buf, value.len());
        buf.add(value.len()).write(0);
    }
    ScStatus::Ok
}

/// Version string of the underlying library; static storage, do not free.
#[no_mangle]
pub extern "C" fn sc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Human-readable name of a status code; static storage, do not free.
#[no_mangle]
pub extern "C" fn sc_status_name(status: ScStatus) -> *const c_char {
    let s: &'static str = match status {
        ScStatus::Ok => "ok\0",
        ScStatus::NullArgument => "null argument\0",
        ScStatus::InvalidArgument => "invalid argument\0",
        ScStatus::DomainError => "domain error\0",
        ScStatus::Infeasible => "infeasible\0",
        ScStatus::BudgetExceeded => "budget exceeded\0",
        ScStatus::BufferTooSmall => "buffer too small\0",
        ScStatus::InternalError => "internal error\0",
    };
    s.as_ptr() as *const c_char
}

/// Creates GF(p^m). `modulus` lists `modulus_len` coefficients of a monic
/// irreducible polynomial in ascending degree (length m+1); pass NULL with
/// length 0 for prime fields or the built-in default moduli.
///
/// # Safety
/// `modulus` must point to `modulus_len` readable elements or be NULL, and
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_field_create(
    p: u64,
    m: u32,
    modulus: *const u16,
    modulus_len: usize,
    out: *mut *mut ScField,
) -> ScStatus {
    guarded(|| {
        if out.is_null() || (modulus.is_null() && modulus_len != 0) {
            return ScStatus::NullArgument;
        }
        let coeffs: Option<&[u16]> = if modulus.is_null() {
            None
        } else {
            Some(unsafe { std::slice::from_raw_parts(modulus, modulus_len) })
        };
        match Field::new(p, m, coeffs) {
            Ok(field) => unsafe { write_out(out, Box::into_raw(Box::new(ScField(field)))) },
            Err(e) => field_error_status(&e),
        }
    })
}

/// Creates a field from its spec string (`p` or `p^m:c0,c1,...,cm`).
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_field_from_spec(
    spec: *const c_char,
    out: *mut *mut ScField,
) -> ScStatus {
    guarded(|| {
        if spec.is_null() || out.is_null() {
            return ScStatus::NullArgument;
        }
        let Ok(spec) = unsafe { CStr::from_ptr(spec) }.to_str() else {
            return ScStatus::InvalidArgument;
        };
        match Field::parse_spec(spec) {
            Ok(field) => unsafe { write_out(out, Box::into_raw(Box::new(ScField(field)))) },
            Err(e) => field_error_status(&e),
        }
    })
}

/// # Safety
/// `field` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_field_free(field: *mut ScField) {
    if !field.is_null() {
        drop(unsafe { Box::from_raw(field) });
    }
}

/// # Safety
/// `field` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_field_order(field: *const ScField, out: *mut u64) -> ScStatus {
    guarded(|| {
        let Some(f) = (unsafe { field.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, f.0.order()) }
    })
}

/// # Safety
/// `field` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_field_characteristic(
    field: *const ScField,
    out: *mut u64,
) -> ScStatus {
    guarded(|| {
        let Some(f) = (unsafe { field.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, f.0.characteristic()) }
    })
}

macro_rules! binary_field_op {
    ($(#[$doc:meta])* $name:ident, |$f:ident, $a:ident, $b:ident| $body:expr) => {
        $(#[$doc])*
        /// # Safety
        /// `field` must be a live handle; `out` a valid pointer.
        #[no_mangle]
        pub unsafe extern "C" fn $name(
            field: *const ScField,
            a: u16,
            b: u16,
            out: *mut u16,
        ) -> ScStatus {
            guarded(|| {
                let Some(handle) = (unsafe { field.as_ref() }) else {
                    return ScStatus::NullArgument;
                };
                let $f = &handle.0;
                let (ea, eb) = match ($f.element(a as u64), $f.element(b as u64)) {
                    (Ok(x), Ok(y)) => (x, y),
                    _ => return ScStatus::InvalidArgument,
                };
                let $a = ea;
                let $b = eb;
                match $body {
                    Ok(v) => unsafe { write_out(out, schubert_codes::FieldElement::code(v)) },
                    Err(e) => field_error_status(&e),
                }
            })
        }
    };
}

binary_field_op!(
    /// `a + b` in the field.
    sc_field_add,
    |f, a, b| Ok::<_, FieldError>(f.add(a, b))
);
binary_field_op!(
    /// `a - b` in the field.
    sc_field_sub,
    |f, a, b| Ok::<_, FieldError>(f.sub(a, b))
);
binary_field_op!(
    /// `a * b` in the field.
    sc_field_mul,
    |f, a, b| Ok::<_, FieldError>(f.mul(a, b))
);
binary_field_op!(
    /// `a / b`; fails with a domain error when `b = 0`.
    sc_field_div,
    |f, a, b| f.div(a, b)
);

/// Multiplicative inverse; fails with a domain error when `a = 0`.
///
/// # Safety
/// `field` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_field_inv(field: *const ScField, a: u16, out: *mut u16) -> ScStatus {
    guarded(|| {
        let Some(handle) = (unsafe { field.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let Ok(a) = handle.0.element(a as u64) else {
            return ScStatus::InvalidArgument;
        };
        match handle.0.inv(a) {
            Ok(v) => unsafe { write_out(out, v.code()) },
            Err(e) => field_error_status(&e),
        }
    })
}

/// Builds the subspace spanned by a full-rank `rows x cols` generator given
/// as `rows * cols` element codes in row-major order; the handle stores the
/// canonical RREF representative.
///
/// # Safety
/// `field` must be a live handle; `codes` must point to `codes_len` readable
/// elements; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_create(
    field: *const ScField,
    rows: usize,
    cols: usize,
    codes: *const u16,
    codes_len: usize,
    out: *mut *mut ScSubspace,
) -> ScStatus {
    guarded(|| {
        let Some(handle) = (unsafe { field.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        if out.is_null() || (codes.is_null() && codes_len != 0) {
            return ScStatus::NullArgument;
        }
        if codes_len != rows * cols {
            return ScStatus::InvalidArgument;
        }
        let codes: Vec<u64> = unsafe { std::slice::from_raw_parts(codes, codes_len) }
            .iter()
            .map(|&c| u64::from(c))
            .collect();
        let Ok(m) = MatrixGF::from_codes(handle.0.clone(), rows, cols, &codes) else {
            return ScStatus::InvalidArgument;
        };
        match Subspace::canonicalize(&m) {
            Ok(s) => unsafe { write_out(out, Box::into_raw(Box::new(ScSubspace(s)))) },
            Err(_) => ScStatus::InvalidArgument,
        }
    })
}

/// # Safety
/// `subspace` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_free(subspace: *mut ScSubspace) {
    if !subspace.is_null() {
        drop(unsafe { Box::from_raw(subspace) });
    }
}

/// # Safety
/// `subspace` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_dim(subspace: *const ScSubspace, out: *mut usize) -> ScStatus {
    guarded(|| {
        let Some(s) = (unsafe { subspace.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, s.0.dim()) }
    })
}

/// # Safety
/// `subspace` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_ambient(
    subspace: *const ScSubspace,
    out: *mut usize,
) -> ScStatus {
    guarded(|| {
        let Some(s) = (unsafe { subspace.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, s.0.ambient()) }
    })
}

/// Copies the canonical generator (dim * ambient codes, row-major) into the
/// caller's buffer; `required` receives the element count needed.
///
/// # Safety
/// `subspace` must be a live handle; `buf` must point to `buf_len` writable
/// elements or be NULL (size query); `required` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_generator(
    subspace: *const ScSubspace,
    buf: *mut u16,
    buf_len: usize,
    required: *mut usize,
) -> ScStatus {
    guarded(|| {
        let Some(s) = (unsafe { subspace.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let needed = s.0.dim() * s.0.ambient();
        if !required.is_null() {
            unsafe { required.write(needed) };
        }
        if buf.is_null() {
            return if buf_len == 0 { ScStatus::Ok } else { ScStatus::NullArgument };
        }
        if buf_len < needed {
            return ScStatus::BufferTooSmall;
        }
        for (i, e) in s.0.generator().entries().iter().enumerate() {
            unsafe { buf.add(i).write(e.code()) };
        }
        ScStatus::Ok
    })
}

/// # Safety
/// Both handles must be live; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_subspace_equal(
    a: *const ScSubspace,
    b: *const ScSubspace,
    out: *mut bool,
) -> ScStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (unsafe { a.as_ref() }, unsafe { b.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, a.0 == b.0) }
    })
}

/// Distance between two subspaces in the chosen metric.
///
/// # Safety
/// Both handles must be live; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_distance(
    a: *const ScSubspace,
    b: *const ScSubspace,
    metric: ScMetric,
    out: *mut u64,
) -> ScStatus {
    guarded(|| {
        let (Some(a), Some(b)) = (unsafe { a.as_ref() }, unsafe { b.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let result = match metric {
            ScMetric::Injection => injection_distance(&a.0, &b.0),
            ScMetric::Subspace => subspace_distance(&a.0, &b.0),
        };
        match result {
            Ok(d) => unsafe { write_out(out, d as u64) },
            Err(_) => ScStatus::InvalidArgument,
        }
    })
}

/// Normalized Pluecker coordinates (C(n,k) element codes in lexicographic
/// index-tuple order); `required` receives the coordinate count.
///
/// # Safety
/// `subspace` must be a live handle; `buf` must point to `buf_len` writable
/// elements or be NULL (size query); `required` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_pluecker_embed(
    subspace: *const ScSubspace,
    buf: *mut u16,
    buf_len: usize,
    required: *mut usize,
) -> ScStatus {
    guarded(|| {
        let Some(s) = (unsafe { subspace.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let v = match pluecker_embed(&s.0) {
            Ok(v) => v,
            Err(_) => return ScStatus::InvalidArgument,
        };
        let needed = v.coords().len();
        if !required.is_null() {
            unsafe { required.write(needed) };
        }
        if buf.is_null() {
            return if buf_len == 0 { ScStatus::Ok } else { ScStatus::NullArgument };
        }
        if buf_len < needed {
            return ScStatus::BufferTooSmall;
        }
        for (i, c) in v.coords().iter().enumerate() {
            unsafe { buf.add(i).write(c.code()) };
        }
        ScStatus::Ok
    })
}

/// Membership of `candidate` in the radius-`t` injection ball around
/// `center`, decided via the Pluecker linear system.
///
/// # Safety
/// Both handles must be live; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_ball_contains(
    center: *const ScSubspace,
    t: usize,
    candidate: *const ScSubspace,
    out: *mut bool,
) -> ScStatus {
    guarded(|| {
        let (Some(c), Some(v)) = (unsafe { center.as_ref() }, unsafe { candidate.as_ref() })
        else {
            return ScStatus::NullArgument;
        };
        match ball_contains_pluecker(&c.0, t, &v.0) {
            Ok(member) => unsafe { write_out(out, member) },
            Err(_) => ScStatus::InvalidArgument,
        }
    })
}

/// Number of k-dimensional subspaces of GF(q)^n as a decimal string.
///
/// # Safety
/// `buf` must point to `buf_len` writable bytes or be NULL (size query);
/// `required` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_gaussian_binomial(
    n: usize,
    k: usize,
    q: u64,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> ScStatus {
    guarded(|| {
        if q < 2 {
            return ScStatus::InvalidArgument;
        }
        let value = gaussian_binomial(n, k, q).to_string();
        unsafe { write_decimal(&value, buf, buf_len, required) }
    })
}

/// The Schubert intersection count d(k,m) as a decimal string.
///
/// # Safety
/// `buf` must point to `buf_len` writable bytes or be NULL (size query);
/// `required` may be NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_intersection_number(
    k: usize,
    m: usize,
    buf: *mut c_char,
    buf_len: usize,
    required: *mut usize,
) -> ScStatus {
    guarded(|| {
        if k < 1 || m < 1 {
            return ScStatus::InvalidArgument;
        }
        let value = intersection_number(k, m).to_string();
        unsafe { write_decimal(&value, buf, buf_len, required) }
    })
}

/// Builds a subspace code from an array of subspace handles (cloned; the
/// caller keeps ownership of the inputs).
///
/// # Safety
/// `words` must point to `count` live subspace handles; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_code_create(
    words: *const *const ScSubspace,
    count: usize,
    out: *mut *mut ScCode,
) -> ScStatus {
    guarded(|| {
        if out.is_null() || (words.is_null() && count != 0) {
            return ScStatus::NullArgument;
        }
        let ptrs = unsafe { std::slice::from_raw_parts(words, count) };
        let mut list = Vec::with_capacity(count);
        for &p in ptrs {
            let Some(s) = (unsafe { p.as_ref() }) else {
                return ScStatus::NullArgument;
            };
            list.push(s.0.clone());
        }
        match SubspaceCode::new(list) {
            Ok(code) => unsafe { write_out(out, Box::into_raw(Box::new(ScCode(code)))) },
            Err(e) => code_error_status(&e),
        }
    })
}

/// # Safety
/// `code` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_code_free(code: *mut ScCode) {
    if !code.is_null() {
        drop(unsafe { Box::from_raw(code) });
    }
}

/// # Safety
/// `code` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_code_len(code: *const ScCode, out: *mut usize) -> ScStatus {
    guarded(|| {
        let Some(c) = (unsafe { code.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, c.0.len()) }
    })
}

/// Minimum pairwise distance of the code (needs at least two codewords).
///
/// # Safety
/// `code` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_code_min_distance(
    code: *const ScCode,
    metric: ScMetric,
    out: *mut u64,
) -> ScStatus {
    guarded(|| {
        let Some(c) = (unsafe { code.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        match code_min_distance(&c.0, metric.into()) {
            Ok(d) => unsafe { write_out(out, d as u64) },
            Err(e) => code_error_status(&e),
        }
    })
}

/// All closest codewords to the received word.
///
/// # Safety
/// Handles must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_min_distance_decode(
    code: *const ScCode,
    received: *const ScSubspace,
    metric: ScMetric,
    out: *mut *mut ScDecodeResult,
) -> ScStatus {
    guarded(|| {
        let (Some(c), Some(r)) = (unsafe { code.as_ref() }, unsafe { received.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        match min_distance_decode(&c.0, &r.0, metric.into()) {
            Ok(result) => unsafe { write_out(out, Box::into_raw(Box::new(ScDecodeResult(result)))) },
            Err(e) => code_error_status(&e),
        }
    })
}

/// All codewords within distance `radius` of the received word.
///
/// # Safety
/// Handles must be live; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_list_decode(
    code: *const ScCode,
    received: *const ScSubspace,
    radius: usize,
    metric: ScMetric,
    method: ScDecodeMethod,
    out: *mut *mut ScDecodeResult,
) -> ScStatus {
    guarded(|| {
        let (Some(c), Some(r)) = (unsafe { code.as_ref() }, unsafe { received.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let method = match method {
            ScDecodeMethod::Oracle => DecodeMethod::Oracle,
            ScDecodeMethod::Pluecker => DecodeMethod::Pluecker,
        };
        match list_decode(&c.0, &r.0, radius, metric.into(), method) {
            Ok(result) => unsafe { write_out(out, Box::into_raw(Box::new(ScDecodeResult(result)))) },
            Err(e) => code_error_status(&e),
        }
    })
}

/// # Safety
/// `result` must be a live handle from this library or NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_decode_result_free(result: *mut ScDecodeResult) {
    if !result.is_null() {
        drop(unsafe { Box::from_raw(result) });
    }
}

/// # Safety
/// `result` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_decode_result_len(
    result: *const ScDecodeResult,
    out: *mut usize,
) -> ScStatus {
    guarded(|| {
        let Some(r) = (unsafe { result.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, r.0.len()) }
    })
}

/// Whether a strictly closest codeword exists.
///
/// # Safety
/// `result` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sc_decode_result_unique(
    result: *const ScDecodeResult,
    out: *mut bool,
) -> ScStatus {
    guarded(|| {
        let Some(r) = (unsafe { result.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        unsafe { write_out(out, r.0.is_unique()) }
    })
}

/// Codeword at `index` of the sorted result list, returned as a fresh handle
/// the caller must free; `distance` may be NULL when only the word matters.
///
/// # Safety
/// `result` must be a live handle; `out` must be valid; `distance` may be
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn sc_decode_result_entry(
    result: *const ScDecodeResult,
    index: usize,
    out: *mut *mut ScSubspace,
    distance: *mut u64,
) -> ScStatus {
    guarded(|| {
        let Some(r) = (unsafe { result.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let Some((word, d)) = r.0.entries().get(index) else {
            return ScStatus::InvalidArgument;
        };
        if !distance.is_null() {
            unsafe { distance.write(*d as u64) };
        }
        unsafe { write_out(out, Box::into_raw(Box::new(ScSubspace(word.clone())))) }
    })
}

/// Sends a subspace through the operator channel (`erasures` dimension
/// decrease, `insertions` dimension increase, deterministic per `seed`) and
/// returns the received word as a fresh handle.
///
/// # Safety
/// `sent` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sc_channel_transmit(
    sent: *const ScSubspace,
    erasures: usize,
    insertions: usize,
    seed: u64,
    out: *mut *mut ScSubspace,
) -> ScStatus {
    guarded(|| {
        let Some(s) = (unsafe { sent.as_ref() }) else {
            return ScStatus::NullArgument;
        };
        let cfg = ChannelConfig { erasures, insertions, seed };
        match transmit(&s.0, &cfg) {
            Ok(received) => unsafe {
                write_out(out, Box::into_raw(Box::new(ScSubspace(received))))
            },
            Err(_) => ScStatus::Infeasible,
        }
    })
}
