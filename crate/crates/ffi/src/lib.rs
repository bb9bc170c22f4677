//! C ABI for the countable toolkit.
//!
//! Every function returns a [`CountableStatus`]. Numbers cross the boundary
//! as decimal strings so arbitrary precision survives. Strings handed out
//! through `char **out` parameters are owned by the caller and must be
//! released with [`countable_string_free`]. Enumerations and hotels are
//! opaque handles with their own `_free` functions.
//!
//! After a non-OK status, [`countable_last_error`] describes the failure for
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use countable::bijections::{self, GridPosition};
use countable::diagonal::{self, DigitStream, StreamList};
use countable::enumerations::{self, TextEnumeration};
use countable::finite_compare::{self, FiniteSet, PairingWitness, Verdict};
use countable::hotel::{GuestId, HotelState};
use countable::{Error, Integer, Natural, Whole};

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountableStatus {
    Ok = 0,
    NotInDomain = 1,
    InvalidRational = 2,
    NoSuchGuest = 3,
    OutOfPrefix = 4,
    InvalidArgument = 5,
    ParseError = 6,
    NullPointer = 7,
    InvalidUtf8 = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountableVerdict {
    Equal = 0,
    LeftLarger = 1,
    RightLarger = 2,
}

/// Opaque enumeration handle.
pub struct CountableEnum {
    inner: Box<dyn TextEnumeration>,
}

/// Opaque hotel handle; arrivals update it in place.
pub struct CountableHotel {
    state: HotelState,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(CountableStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotInDomain { .. } => CountableStatus::NotInDomain,
            Error::InvalidRational { .. } => CountableStatus::InvalidRational,
            Error::NoSuchGuest(_) => CountableStatus::NoSuchGuest,
            Error::OutOfPrefix { .. } => CountableStatus::OutOfPrefix,
            Error::InvalidArgument(_) => CountableStatus::InvalidArgument,
            Error::Parse { .. } => CountableStatus::ParseError,
        };
        Failure(status, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> CountableStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            CountableStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CountableStatus::Panic
        }
    }
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(
            CountableStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(CountableStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for a pointer write.
unsafe fn emit(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(
            CountableStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    let c = CString::new(s).map_err(|_| Failure(CountableStatus::Panic, "interior NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

fn require<T>(p: *mut T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(Failure(
            CountableStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn countable_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn countable_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Evaluates a pairing rule: `rule` is one of `even`, `whole`, `int`, `odd`,
/// `pair`. For `pair` the forward input is `(row,col)` and the inverse
/// output has the same form.
///
/// # Safety
/// `rule` and `value` must be NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn countable_bij(
    rule: *const c_char,
    inverse: bool,
    value: *const c_char,
    out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let rule = text(rule, "rule")?;
        let v = text(value, "value")?;
        let answer = match (rule, inverse) {
            ("even", false) => bijections::to_even(&v.parse()?).to_string(),
            ("even", true) => bijections::from_even(&v.parse()?)?.to_string(),
            ("whole", false) => bijections::to_whole(&v.parse()?).to_string(),
            ("whole", true) => bijections::from_whole(&v.parse::<Whole>()?).to_string(),
            ("int", false) => bijections::to_integer(&v.parse()?).to_string(),
            ("int", true) => bijections::from_integer(&v.parse::<Integer>()?).to_string(),
            ("odd", false) => bijections::to_odd(&v.parse()?).to_string(),
            ("odd", true) => bijections::from_odd(&v.parse()?)?.to_string(),
            ("pair", false) => bijections::pair_index(&v.parse::<GridPosition>()?).to_string(),
            ("pair", true) => bijections::unpair(&v.parse()?).to_string(),
            _ => {
                return Err(Failure(
                    CountableStatus::InvalidArgument,
                    format!("unknown rule {rule:?}"),
                ))
            }
        };
        emit(out, answer)
    })
}

/// Opens a canonical enumeration: `n`, `evens`, `odds`, `n0`, `z`, `grid`,
/// `q+` or `q`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn countable_enum_new(
    name: *const c_char,
    out: *mut *mut CountableEnum,
) -> CountableStatus {
    guard(|| {
        let name = text(name, "name")?;
        require(out, "output pointer")?;
        let inner = enumerations::by_name(name).ok_or_else(|| {
            Failure(
                CountableStatus::InvalidArgument,
                format!("unknown enumeration {name:?}"),
            )
        })?;
        *out = Box::into_raw(Box::new(CountableEnum { inner }));
        Ok(())
    })
}

/// Renders the element at the 1-based decimal `index`.
///
/// # Safety
/// `e` must come from [`countable_enum_new`]; `index` must be a
/// NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn countable_enum_at(
    e: *const CountableEnum,
    index: *const c_char,
    out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let e = e
            .as_ref()
            .ok_or_else(|| Failure(CountableStatus::NullPointer, "handle is null".into()))?;
        let n: Natural = text(index, "index")?.parse()?;
        emit(out, e.inner.render_at(&n))
    })
}

/// Looks up the index of a rendered `value`.
///
/// # Safety
/// As for [`countable_enum_at`].
#[no_mangle]
pub unsafe extern "C" fn countable_enum_index_of(
    e: *const CountableEnum,
    value: *const c_char,
    out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let e = e
            .as_ref()
            .ok_or_else(|| Failure(CountableStatus::NullPointer, "handle is null".into()))?;
        let idx = e.inner.index_of_text(text(value, "value")?)?;
        emit(out, idx.to_string())
    })
}

/// # Safety
/// `e` must be null or a handle from [`countable_enum_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn countable_enum_free(e: *mut CountableEnum) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// A fresh, full hotel. Never null.
#[no_mangle]
pub extern "C" fn countable_hotel_new() -> *mut CountableHotel {
    Box::into_raw(Box::new(CountableHotel {
        state: HotelState::new(),
    }))
}

/// # Safety
/// `h` must be null or a handle from [`countable_hotel_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_free(h: *mut CountableHotel) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

unsafe fn hotel_mut<'a>(h: *mut CountableHotel) -> Result<&'a mut CountableHotel, Failure> {
    h.as_mut()
        .ok_or_else(|| Failure(CountableStatus::NullPointer, "handle is null".into()))
}

/// # Safety
/// `h` must be a live hotel handle.
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_arrive_one(h: *mut CountableHotel) -> CountableStatus {
    guard(|| {
        let h = hotel_mut(h)?;
        h.state = h.state.arrive_one();
        Ok(())
    })
}

/// `k` is a decimal string, at least 1.
///
/// # Safety
/// `h` must be a live hotel handle; `k` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_arrive_finite(
    h: *mut CountableHotel,
    k: *const c_char,
) -> CountableStatus {
    guard(|| {
        let h = hotel_mut(h)?;
        let k: Natural = text(k, "k")?.parse().map_err(|_| {
            Failure(
                CountableStatus::InvalidArgument,
                "k must be a natural number >= 1".into(),
            )
        })?;
        h.state = h.state.arrive_finite(&k);
        Ok(())
    })
}

/// # Safety
/// `h` must be a live hotel handle.
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_arrive_bus(h: *mut CountableHotel) -> CountableStatus {
    guard(|| {
        let h = hotel_mut(h)?;
        h.state = h.state.arrive_bus();
        Ok(())
    })
}

/// Room of `guest`, written `original N` or `arrival BATCH SEAT`.
///
/// # Safety
/// `h` must be a live hotel handle; `guest` a NUL-terminated string; `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_room_of(
    h: *const CountableHotel,
    guest: *const c_char,
    out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let h = h
            .as_ref()
            .ok_or_else(|| Failure(CountableStatus::NullPointer, "handle is null".into()))?;
        let g: GuestId = text(guest, "guest")?.parse()?;
        emit(out, h.state.room_of(&g)?.to_string())
    })
}

/// Guest in `room`, written as for [`countable_hotel_room_of`].
///
/// # Safety
/// As for [`countable_hotel_room_of`].
#[no_mangle]
pub unsafe extern "C" fn countable_hotel_occupant_of(
    h: *const CountableHotel,
    room: *const c_char,
    out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let h = h
            .as_ref()
            .ok_or_else(|| Failure(CountableStatus::NullPointer, "handle is null".into()))?;
        let room: Natural = text(room, "room")?.parse()?;
        emit(out, h.state.occupant_of(&room).to_string())
    })
}

/// Compares two comma-separated label sets exhaustively (at most 8 labels
/// per side). `witness_out` may be null; otherwise it receives the witness
/// in the line format `left<TAB>right` / `left-remainder:` /
/// `right-remainder:`.
///
/// # Safety
/// `left` and `right` must be NUL-terminated strings; `verdict_out` must be
/// writable; `witness_out` null or writable.
#[no_mangle]
pub unsafe extern "C" fn countable_compare(
    left: *const c_char,
    right: *const c_char,
    verdict_out: *mut CountableVerdict,
    witness_out: *mut *mut c_char,
) -> CountableStatus {
    guard(|| {
        let a = FiniteSet::from_csv(text(left, "left")?)?;
        let b = FiniteSet::from_csv(text(right, "right")?)?;
        require(verdict_out, "verdict pointer")?;
        let c = finite_compare::compare(&a, &b)?;
        *verdict_out = match c.verdict {
            Verdict::EqualCardinality => CountableVerdict::Equal,
            Verdict::LeftLarger => CountableVerdict::LeftLarger,
            Verdict::RightLarger => CountableVerdict::RightLarger,
        };
        if !witness_out.is_null() {
            emit(witness_out, c.witness.to_string())?;
        }
        Ok(())
    })
}

/// Number of maximal pairings between two comma-separated label sets.
///
/// # Safety
/// `left` and `right` must be NUL-terminated strings; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn countable_count_pairings(
    left: *const c_char,
    right: *const c_char,
    out: *mut u64,
) -> CountableStatus {
    guard(|| {
        let a = FiniteSet::from_csv(text(left, "left")?)?;
        let b = FiniteSet::from_csv(text(right, "right")?)?;
        require(out, "output pointer")?;
        *out = finite_compare::all_maximal_pairings(&a, &b)?.len() as u64;
        Ok(())
    })
}

/// Validates a witness in the line format. An invalid witness yields
/// `COUNTABLE_STATUS_NOT_IN_DOMAIN` with the defect in
/// [`countable_last_error`].
///
/// # Safety
/// All three arguments must be NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn countable_check_witness(
    left: *const c_char,
    right: *const c_char,
    witness: *const c_char,
) -> CountableStatus {
    guard(|| {
        let a = FiniteSet::from_csv(text(left, "left")?)?;
        let b = FiniteSet::from_csv(text(right, "right")?)?;
        let w = PairingWitness::parse(text(witness, "witness")?)?;
        finite_compare::check_witness(&a, &b, &w).map_err(|d| {
            Failure(
                CountableStatus::NotInDomain,
                format!("invalid witness: {d}"),
            )
        })
    })
}

/// Builds the anti-diagonal of a list given as text (one digit string per
/// line) to `depth` places (`0` means the list length) and checks that it
/// escapes the list. `safe` selects the 5/4 rule.
///
/// # Safety
/// `list` must be a NUL-terminated string; `prefix_out` and `escapes_out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn countable_diagonal(
    list: *const c_char,
    depth: usize,
    safe: bool,
    prefix_out: *mut *mut c_char,
    escapes_out: *mut bool,
) -> CountableStatus {
    guard(|| {
        let list = StreamList::parse(text(list, "list")?)?;
        require(escapes_out, "escape pointer")?;
        let depth = if depth == 0 { list.len() } else { depth };
        let candidate: Box<dyn DigitStream + '_> = if safe {
            Box::new(diagonal::safe_anti_diagonal(&list))
        } else {
            Box::new(diagonal::anti_diagonal(&list))
        };
        let escapes = diagonal::verify_escape(&list, candidate.as_ref(), depth)?;
        let prefix = candidate.prefix(depth)?;
        emit(prefix_out, diagonal::render_prefix(&prefix))?;
        *escapes_out = escapes;
        Ok(())
    })
}
