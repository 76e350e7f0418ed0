//! Commands behind the `basesize` binary. Each returns a [`ResultDocument`].

pub mod commands;
pub mod document;

pub use document::ResultDocument;

use basesize::Error;

/// Process exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Input(_) => 2,
        Error::Capacity(_) | Error::SearchCap { .. } | Error::Overflow(_) => 3,
        Error::Consistency(_) => 4,
    }
}
