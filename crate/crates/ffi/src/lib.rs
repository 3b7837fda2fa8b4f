//! C ABI for `abelreps`.
//!
//! Groups and degree tables are opaque handles owned by the caller and
//! released with the matching `_free` function. Every fallible call returns
//! an [`AbelrepsStatus`]; on failure a message is available from
//! [`abelreps_last_error_message`] on the same thread. Big integers cross the
//! boundary as decimal strings allocated here and released with
//! [`abelreps_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use abelreps::oracle::OracleOptions;
use abelreps::{
    card_i_d, degree_table, frobenius_orbits, mul_order, parse_group_spec, primary_decomposition,
    CyclicFactorList, DegreeTable, Error, FieldSpec, PrimaryDecomposition,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelrepsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    /// The field characteristic divides the group order.
    NotCoprime = 5,
    OracleBoundExceeded = 6,
    FactorizationLimit = 7,
    IndexOutOfRange = 8,
    /// The value does not fit the requested integer type; use the string getter.
    Overflow = 9,
    Internal = 10,
    Panic = 11,
}

/// A finite abelian group.
pub struct AbelrepsGroup {
    factors: CyclicFactorList,
    group: PrimaryDecomposition,
}

/// A table of irreducible degrees and multiplicities.
pub struct AbelrepsTable {
    table: DegreeTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure {
    status: AbelrepsStatus,
    message: String,
}

impl Failure {
    fn new(status: AbelrepsStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } | Error::ZeroFactor { .. } => AbelrepsStatus::Parse,
            Error::NotCoprime { .. } => AbelrepsStatus::NotCoprime,
            Error::OracleBoundExceeded { .. } => AbelrepsStatus::OracleBoundExceeded,
            Error::FactorizationLimitExceeded { .. } => AbelrepsStatus::FactorizationLimit,
            Error::Invariant(_) => AbelrepsStatus::Internal,
            _ => AbelrepsStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard<F>(f: F) -> AbelrepsStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            AbelrepsStatus::Ok
        }
        Ok(Err(failure)) => {
            set_last_error(&failure.message);
            failure.status
        }
        Err(_) => {
            set_last_error("panic inside abelreps");
            AbelrepsStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Failure> {
    ptr.as_ref()
        .ok_or_else(|| Failure::new(AbelrepsStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_slot<'a, T>(ptr: *mut T, what: &str) -> Result<&'a mut T, Failure> {
    ptr.as_mut()
        .ok_or_else(|| Failure::new(AbelrepsStatus::NullPointer, format!("{what} is null")))
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(Failure::new(
            AbelrepsStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure::new(AbelrepsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn read_decimal(text: &str, what: &str) -> Result<BigUint, Failure> {
    text.trim().parse().map_err(|_| {
        Failure::new(
            AbelrepsStatus::InvalidArgument,
            format!("{what} must be a decimal integer, got {text:?}"),
        )
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

fn new_group(factors: CyclicFactorList) -> Result<*mut AbelrepsGroup, Failure> {
    let group = primary_decomposition(&factors)?;
    Ok(Box::into_raw(Box::new(AbelrepsGroup { factors, group })))
}

fn new_table(table: DegreeTable) -> *mut AbelrepsTable {
    Box::into_raw(Box::new(AbelrepsTable { table }))
}

/// Parses a group such as `"C9xC5"` or `"9,5"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_parse(
    spec: *const c_char,
    out: *mut *mut AbelrepsGroup,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let text = read_str(spec, "spec")?;
        *out = new_group(parse_group_spec(text)?)?;
        Ok(())
    })
}

/// Builds a group from cyclic factor orders `Z/factors[0] x ... x Z/factors[len-1]`.
///
/// # Safety
/// `factors` must point to `len` readable values (it may be null when `len`
/// is 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_from_factors(
    factors: *const u64,
    len: usize,
    out: *mut *mut AbelrepsGroup,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let values: &[u64] = if len == 0 {
            &[]
        } else if factors.is_null() {
            return Err(Failure::new(AbelrepsStatus::NullPointer, "factors is null"));
        } else {
            std::slice::from_raw_parts(factors, len)
        };
        let list = CyclicFactorList::new(values.iter().map(|&m| BigUint::from(m)).collect())?;
        *out = new_group(list)?;
        Ok(())
    })
}

/// # Safety
/// `group` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_free(group: *mut AbelrepsGroup) {
    if !group.is_null() {
        drop(Box::from_raw(group));
    }
}

/// Group order `|G|` as a decimal string.
///
/// # Safety
/// `group` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_order(
    group: *const AbelrepsGroup,
    out: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        *out = into_c_string(g.group.order().to_string());
        Ok(())
    })
}

/// Group exponent as a decimal string.
///
/// # Safety
/// `group` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_exponent(
    group: *const AbelrepsGroup,
    out: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        *out = into_c_string(g.group.exponent().to_string());
        Ok(())
    })
}

/// Primary decomposition in C-notation, e.g. `"C2 x C4 x C3"`, followed by
/// the factors as written, e.g. `"C2 x C4 x C3 (C4xC6)"`.
///
/// # Safety
/// `group` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_group_describe(
    group: *const AbelrepsGroup,
    out: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        *out = into_c_string(format!("{} ({})", g.group, g.factors));
        Ok(())
    })
}

/// Closed-form degree table over the field with `p^m` elements.
///
/// # Safety
/// `group` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_degree_table(
    group: *const AbelrepsGroup,
    p: u64,
    m: u32,
    out: *mut *mut AbelrepsTable,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        let field = FieldSpec::new(u128::from(p), m)?;
        *out = new_table(degree_table(&g.group, &field)?);
        Ok(())
    })
}

/// Closed-form degree table over the field of order `q`, given in decimal.
///
/// # Safety
/// `group` must be a live handle; `q` a NUL-terminated string; `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_degree_table_q(
    group: *const AbelrepsGroup,
    q: *const c_char,
    out: *mut *mut AbelrepsTable,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        let q = read_decimal(read_str(q, "q")?, "q")?;
        let field = FieldSpec::from_order(&q)?;
        *out = new_table(degree_table(&g.group, &field)?);
        Ok(())
    })
}

/// Degree table by brute-force orbit enumeration; fails with
/// `ORACLE_BOUND_EXCEEDED` when `|G| > bound`.
///
/// # Safety
/// `group` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_frobenius_orbits(
    group: *const AbelrepsGroup,
    p: u64,
    m: u32,
    bound: u64,
    out: *mut *mut AbelrepsTable,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        let field = FieldSpec::new(u128::from(p), m)?;
        let options = OracleOptions {
            bound,
            check_orbits: true,
        };
        *out = new_table(frobenius_orbits(&g.group, &field, &options)?);
        Ok(())
    })
}

/// Number of characters whose field is `Q(zeta_d)`, for a relevant divisor `d`
/// of the exponent, as a decimal string.
///
/// # Safety
/// `group` must be a live handle; `d` a NUL-terminated string; `out` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_card_i_d(
    group: *const AbelrepsGroup,
    d: *const c_char,
    out: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let g = borrow(group, "group")?;
        let d = read_decimal(read_str(d, "d")?, "d")?;
        *out = into_c_string(card_i_d(&g.group, &d)?.to_string());
        Ok(())
    })
}

/// Multiplicative order of `q` modulo `d`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_mul_order(q: u64, d: u64, out: *mut u64) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let n = mul_order(&BigUint::from(q), &BigUint::from(d))?;
        // The order is below d.
        *out = n.to_u64().expect("order bounded by the modulus");
        Ok(())
    })
}

/// Number of distinct degrees; 0 for a null handle.
///
/// # Safety
/// `table` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_len(table: *const AbelrepsTable) -> usize {
    table.as_ref().map_or(0, |t| t.table.entries().len())
}

/// Entry `index` (ascending degree) as machine integers.
///
/// # Safety
/// `table` must be a live handle; `degree` and `multiplicity` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_entry(
    table: *const AbelrepsTable,
    index: usize,
    degree: *mut u64,
    multiplicity: *mut u64,
) -> AbelrepsStatus {
    guard(|| {
        let degree = out_slot(degree, "degree")?;
        let multiplicity = out_slot(multiplicity, "multiplicity")?;
        let t = borrow(table, "table")?;
        let entry = t.table.entries().get(index).ok_or_else(|| {
            Failure::new(AbelrepsStatus::IndexOutOfRange, format!("no entry {index}"))
        })?;
        let overflow = || Failure::new(AbelrepsStatus::Overflow, "value exceeds 64 bits");
        let n = entry.degree.to_u64().ok_or_else(overflow)?;
        let k = entry.multiplicity.to_u64().ok_or_else(overflow)?;
        *degree = n;
        *multiplicity = k;
        Ok(())
    })
}

/// Entry `index` as decimal strings; both must be released with
/// [`abelreps_string_free`].
///
/// # Safety
/// `table` must be a live handle; `degree` and `multiplicity` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_entry_str(
    table: *const AbelrepsTable,
    index: usize,
    degree: *mut *mut c_char,
    multiplicity: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let degree = out_slot(degree, "degree")?;
        let multiplicity = out_slot(multiplicity, "multiplicity")?;
        let t = borrow(table, "table")?;
        let entry = t.table.entries().get(index).ok_or_else(|| {
            Failure::new(AbelrepsStatus::IndexOutOfRange, format!("no entry {index}"))
        })?;
        *degree = into_c_string(entry.degree.to_string());
        *multiplicity = into_c_string(entry.multiplicity.to_string());
        Ok(())
    })
}

/// Compact notation such as `"1, 2, 4^3, 6, 12^2"`.
///
/// # Safety
/// `table` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_compact(
    table: *const AbelrepsTable,
    out: *mut *mut c_char,
) -> AbelrepsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let t = borrow(table, "table")?;
        *out = into_c_string(t.table.compact());
        Ok(())
    })
}

/// Whether two tables agree entry for entry. Null handles compare unequal.
///
/// # Safety
/// Both arguments must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_equal(
    a: *const AbelrepsTable,
    b: *const AbelrepsTable,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.table == b.table,
        _ => false,
    }
}

/// # Safety
/// `table` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abelreps_table_free(table: *mut AbelrepsTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn abelreps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn abelreps_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code, e.g. `"NOT_COPRIME"`.
#[no_mangle]
pub extern "C" fn abelreps_status_name(status: AbelrepsStatus) -> *const c_char {
    let name: &'static CStr = match status {
        AbelrepsStatus::Ok => c"OK",
        AbelrepsStatus::NullPointer => c"NULL_POINTER",
        AbelrepsStatus::InvalidUtf8 => c"INVALID_UTF8",
        AbelrepsStatus::Parse => c"PARSE",
        AbelrepsStatus::InvalidArgument => c"INVALID_ARGUMENT",
        AbelrepsStatus::NotCoprime => c"NOT_COPRIME",
        AbelrepsStatus::OracleBoundExceeded => c"ORACLE_BOUND_EXCEEDED",
        AbelrepsStatus::FactorizationLimit => c"FACTORIZATION_LIMIT",
        AbelrepsStatus::IndexOutOfRange => c"INDEX_OUT_OF_RANGE",
        AbelrepsStatus::Overflow => c"OVERFLOW",
        AbelrepsStatus::Internal => c"INTERNAL",
        AbelrepsStatus::Panic => c"PANIC",
    };
    name.as_ptr()
}
