//! Status codes and the per-thread last-error message.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{self, AssertUnwindSafe};

use qdetect::Error;

/// Result of every fallible call. `QD_STATUS_OK` is zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QdStatus {
    Ok = 0,
    InvalidProbability = 1,
    InvalidArgument = 2,
    DegenerateStates = 3,
    PriorBoundary = 4,
    DimensionMismatch = 5,
    EmptyStratum = 6,
    DegenerateProbability = 7,
    Parse = 8,
    DuplicateDocId = 9,
    DuplicateJudgment = 10,
    UnknownTopic = 11,
    Io = 12,
    NullPointer = 13,
    InvalidUtf8 = 14,
    Panic = 15,
}

impl From<&Error> for QdStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidProbability { .. } => QdStatus::InvalidProbability,
            Error::InvalidArgument(_) => QdStatus::InvalidArgument,
            Error::DegenerateStates => QdStatus::DegenerateStates,
            Error::PriorBoundary { .. } => QdStatus::PriorBoundary,
            Error::DimensionMismatch { .. } => QdStatus::DimensionMismatch,
            Error::EmptyStratum(_) => QdStatus::EmptyStratum,
            Error::DegenerateProbability(_) => QdStatus::DegenerateProbability,
            Error::Parse { .. } => QdStatus::Parse,
            Error::DuplicateDocId(_) => QdStatus::DuplicateDocId,
            Error::DuplicateJudgment { .. } => QdStatus::DuplicateJudgment,
            Error::UnknownTopic(_) => QdStatus::UnknownTopic,
            Error::Io { .. } => QdStatus::Io,
        }
    }
}

pub(crate) struct FfiError {
    status: QdStatus,
    message: String,
}

impl FfiError {
    pub(crate) fn new(status: QdStatus, message: impl Into<String>) -> Self {
        FfiError {
            status,
            message: message.into(),
        }
    }

    pub(crate) fn null(name: &str) -> Self {
        FfiError::new(QdStatus::NullPointer, format!("{name} is null"))
    }
}

impl From<Error> for FfiError {
    fn from(e: Error) -> Self {
        FfiError::new(QdStatus::from(&e), e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    // interior NULs cannot cross the boundary
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, converting errors and panics into a status and recording the
/// message for [`qd_last_error_message`].
pub(crate) fn guard(f: impl FnOnce() -> Result<(), FfiError>) -> QdStatus {
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QdStatus::Ok,
        Ok(Err(e)) => {
            set_last_error(e.message);
            e.status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            QdStatus::Panic
        }
    }
}

/// Writes through `ptr` after a null check.
///
/// # Safety
/// `ptr` must be null or valid and aligned for a write of `T`.
pub(crate) unsafe fn write<T>(ptr: *mut T, name: &str, value: T) -> Result<(), FfiError> {
    if ptr.is_null() {
        return Err(FfiError::null(name));
    }
    ptr.write(value);
    Ok(())
}

/// Borrows a NUL-terminated UTF-8 string.
///
/// # Safety
/// `ptr` must be null or point to a NUL-terminated string that outlives `'a`.
pub(crate) unsafe fn string<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, FfiError> {
    if ptr.is_null() {
        return Err(FfiError::null(name));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| FfiError::new(QdStatus::InvalidUtf8, format!("{name} is not valid UTF-8")))
}

/// Message of the most recent failed call on this thread, or null if none
/// has failed.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(std::ptr::null(), |c| c.as_ptr())
    })
}

/// Static, human-readable name of a status code.
#[no_mangle]
pub extern "C" fn qd_status_name(status: QdStatus) -> *const c_char {
    let name: &'static CStr = match status {
        QdStatus::Ok => c"ok",
        QdStatus::InvalidProbability => c"invalid probability",
        QdStatus::InvalidArgument => c"invalid argument",
        QdStatus::DegenerateStates => c"degenerate states",
        QdStatus::PriorBoundary => c"prior on boundary",
        QdStatus::DimensionMismatch => c"dimension mismatch",
        QdStatus::EmptyStratum => c"empty stratum",
        QdStatus::DegenerateProbability => c"degenerate probability",
        QdStatus::Parse => c"parse error",
        QdStatus::DuplicateDocId => c"duplicate document id",
        QdStatus::DuplicateJudgment => c"duplicate judgment",
        QdStatus::UnknownTopic => c"unknown topic",
        QdStatus::Io => c"I/O error",
        QdStatus::NullPointer => c"null pointer",
        QdStatus::InvalidUtf8 => c"invalid UTF-8",
        QdStatus::Panic => c"internal panic",
    };
    name.as_ptr()
}
