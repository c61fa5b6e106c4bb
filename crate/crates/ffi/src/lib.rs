//! C ABI over `gyrokit`.
//!
//! Tables live behind an opaque [`GyroTableHandle`] owned by the caller and
//! released with [`gyro_table_free`]. Every fallible function returns a
//! [`GyroStatus`]; on failure [`gyro_last_error_message`] describes the
//! cause. Results are written through out-pointers. Elements are `size_t`
//! indices in `0..order`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gyrokit::commutator::commutator_subgyrogroup;
use gyrokit::normality::is_normal;
use gyrokit::nuclei::{left_nucleus, radical};
use gyrokit::{format, verify_axioms, Caps, GyroError, GyroTable, SubSet};

/// Result codes. `GYRO_STATUS_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GyroStatus {
    Ok = 0,
    NullPointer = 1,
    Malformed = 2,
    AxiomViolation = 3,
    OutOfRange = 4,
    CapExceeded = 5,
    NotSubgyrogroup = 6,
    BufferTooSmall = 7,
    Internal = 8,
}

/// Opaque gyrogroup.
pub struct GyroTableHandle {
    table: GyroTable,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &GyroError) -> GyroStatus {
    match e {
        GyroError::Malformed(_) => GyroStatus::Malformed,
        GyroError::Axioms(_) => GyroStatus::AxiomViolation,
        GyroError::OutOfRange { .. } => GyroStatus::OutOfRange,
        GyroError::CapExceeded { .. } | GyroError::Timeout => GyroStatus::CapExceeded,
        GyroError::NotSubgyrogroup { .. } => GyroStatus::NotSubgyrogroup,
        _ => GyroStatus::Internal,
    }
}

/// Run `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), GyroStatus>) -> GyroStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GyroStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            GyroStatus::Internal
        }
    }
}

fn fail(e: GyroError) -> GyroStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> GyroStatus {
    set_error(&format!("{what} is null"));
    GyroStatus::NullPointer
}

/// # Safety
/// `h` is null or a live handle.
unsafe fn table<'a>(h: *const GyroTableHandle) -> Result<&'a GyroTable, GyroStatus> {
    h.as_ref().map(|h| &h.table).ok_or_else(|| null("handle"))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn write<T>(out: *mut T, v: T) -> Result<(), GyroStatus> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(v);
    Ok(())
}

fn check_elem(g: &GyroTable, a: usize) -> Result<usize, GyroStatus> {
    if a < g.order() {
        Ok(a)
    } else {
        Err(fail(GyroError::OutOfRange {
            elem: a,
            order: g.order(),
        }))
    }
}

fn boxed(table: GyroTable) -> *mut GyroTableHandle {
    Box::into_raw(Box::new(GyroTableHandle { table }))
}

/// Parse `.gyro` text and validate the axioms.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_table_parse(
    text: *const c_char,
    out: *mut *mut GyroTableHandle,
) -> GyroStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| fail(GyroError::Malformed("text is not UTF-8".into())))?;
        let t = format::parse(s).map_err(fail)?;
        write(out, boxed(t))
    })
}

/// Build a table from `order * order` row-major cells.
///
/// # Safety
/// `cells` points to `order * order` readable values; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_table_from_array(
    order: usize,
    cells: *const usize,
    out: *mut *mut GyroTableHandle,
) -> GyroStatus {
    guard(|| {
        if cells.is_null() {
            return Err(null("cells"));
        }
        let len = order
            .checked_mul(order)
            .ok_or_else(|| fail(GyroError::Malformed("order too large".into())))?;
        let flat = std::slice::from_raw_parts(cells, len);
        let rows: Vec<Vec<usize>> = flat.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
        let t = GyroTable::from_rows(&rows).map_err(fail)?;
        write(out, boxed(t))
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `h` is null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gyro_table_free(h: *mut GyroTableHandle) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Order of the table; 0 for a null handle.
///
/// # Safety
/// `h` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gyro_table_order(h: *const GyroTableHandle) -> usize {
    h.as_ref().map_or(0, |h| h.table.order())
}

/// Check the axioms of `order * order` cells without building a handle.
/// Axiom failures are reported through `passed`, not the status.
///
/// # Safety
/// As for [`gyro_table_from_array`]; `passed` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_verify(
    order: usize,
    cells: *const usize,
    passed: *mut bool,
) -> GyroStatus {
    guard(|| {
        if cells.is_null() {
            return Err(null("cells"));
        }
        let len = order
            .checked_mul(order)
            .ok_or_else(|| fail(GyroError::Malformed("order too large".into())))?;
        let flat = std::slice::from_raw_parts(cells, len);
        let rows: Vec<Vec<usize>> = flat.chunks(order.max(1)).map(<[usize]>::to_vec).collect();
        let rep = verify_axioms(&rows).map_err(fail)?;
        if let Some(v) = rep.violations.first() {
            set_error(&format!("{} at {:?}: {}", v.axiom, v.witness, v.detail));
        }
        write(passed, rep.passed)
    })
}

/// `a ⊕ b`.
///
/// # Safety
/// `h` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_add(
    h: *const GyroTableHandle,
    a: usize,
    b: usize,
    out: *mut usize,
) -> GyroStatus {
    guard(|| {
        let g = table(h)?;
        let v = g.add(check_elem(g, a)?, check_elem(g, b)?);
        write(out, v)
    })
}

/// `⊖a`.
///
/// # Safety
/// `h` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_neg(
    h: *const GyroTableHandle,
    a: usize,
    out: *mut usize,
) -> GyroStatus {
    guard(|| {
        let g = table(h)?;
        let v = g.neg(check_elem(g, a)?);
        write(out, v)
    })
}

/// `gyr[a,b]c`.
///
/// # Safety
/// `h` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_gyr(
    h: *const GyroTableHandle,
    a: usize,
    b: usize,
    c: usize,
    out: *mut usize,
) -> GyroStatus {
    guard(|| {
        let g = table(h)?;
        let v = g.gyr_apply(check_elem(g, a)?, check_elem(g, b)?, check_elem(g, c)?);
        write(out, v)
    })
}

/// # Safety
/// `h` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_is_group(h: *const GyroTableHandle, out: *mut bool) -> GyroStatus {
    guard(|| write(out, table(h)?.is_group()))
}

/// # Safety
/// `h` is a live handle; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_is_gyrocommutative(
    h: *const GyroTableHandle,
    out: *mut bool,
) -> GyroStatus {
    guard(|| write(out, table(h)?.is_gyrocommutative()))
}

/// Whether the subgyrogroup given by `len` elements is normal.
///
/// # Safety
/// `h` is a live handle; `members` points to `len` readable values;
/// `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_is_normal(
    h: *const GyroTableHandle,
    members: *const usize,
    len: usize,
    out: *mut bool,
) -> GyroStatus {
    guard(|| {
        let g = table(h)?;
        if members.is_null() {
            return Err(null("members"));
        }
        let s = SubSet::new(
            g.order(),
            std::slice::from_raw_parts(members, len).iter().copied(),
        )
        .map_err(fail)?;
        write(out, is_normal(g, &s).map_err(fail)?)
    })
}

/// Copy an ascending set into a caller buffer of `capacity` slots.
unsafe fn emit_set(
    s: &SubSet,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> Result<(), GyroStatus> {
    write(len, s.len())?;
    if s.len() > capacity {
        set_error(&format!("buffer holds {capacity}, need {}", s.len()));
        return Err(GyroStatus::BufferTooSmall);
    }
    if buf.is_null() {
        return Err(null("buffer"));
    }
    ptr::copy_nonoverlapping(s.members().as_ptr(), buf, s.len());
    Ok(())
}

/// The commutator subgyrogroup. `len` receives the size even when the
/// buffer is too small.
///
/// # Safety
/// `h` is a live handle; `buf` has `capacity` writable slots; `len` is
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn gyro_commutator_subgyrogroup(
    h: *const GyroTableHandle,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> GyroStatus {
    guard(|| emit_set(&commutator_subgyrogroup(table(h)?), buf, capacity, len))
}

/// The left nucleus. Buffer contract as in [`gyro_commutator_subgyrogroup`].
///
/// # Safety
/// As for [`gyro_commutator_subgyrogroup`].
#[no_mangle]
pub unsafe extern "C" fn gyro_left_nucleus(
    h: *const GyroTableHandle,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> GyroStatus {
    guard(|| {
        let s = left_nucleus(table(h)?).map_err(fail)?;
        emit_set(&s, buf, capacity, len)
    })
}

/// The radical, with default resource caps. Buffer contract as in
/// [`gyro_commutator_subgyrogroup`].
///
/// # Safety
/// As for [`gyro_commutator_subgyrogroup`].
#[no_mangle]
pub unsafe extern "C" fn gyro_radical(
    h: *const GyroTableHandle,
    buf: *mut usize,
    capacity: usize,
    len: *mut usize,
) -> GyroStatus {
    guard(|| {
        let s = radical(table(h)?, &Caps::default()).map_err(fail)?;
        emit_set(&s, buf, capacity, len)
    })
}

/// Message for the last failure on this thread; empty if none. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn gyro_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
