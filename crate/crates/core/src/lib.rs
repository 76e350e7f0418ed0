//! Base sizes and regular-orbit counts of permutation groups from exact character inner
//! products, together with a brute-force oracle that checks them at small scale.
//!
//! The formula side ([`partitions`], [`characters`], [`basecount`]) is generic over the
//! exact integer type through [`ExactInt`]; the aliases below fix it to arbitrary-precision
//! integers, and the `Wide*` aliases to `i128` for fast runs that report overflow instead
//! of wrapping.

pub mod basecount;
pub mod characters;
mod error;
pub mod oracle;
pub mod partitions;
mod scalar;
mod sign;

pub use error::{Error, Result};
pub use scalar::{binomial, factorial, pow, ExactInt};
pub use sign::Sign;

pub use num_bigint::BigInt;

/// The default exact integer.
pub type Int = BigInt;

pub type ClassDatum = partitions::ClassDatum<Int>;
pub type ClassTable = partitions::ClassTable<Int>;
pub type CharVector = characters::CharVector<Int>;
pub type OrbitCounts = characters::OrbitCounts<Int>;
pub type BaseSizeReport = basecount::BaseSizeReport<Int>;
pub type WreathReport = basecount::WreathReport<Int>;
pub type LargeBaseBounds = basecount::LargeBaseBounds<Int>;

pub type WideClassTable = partitions::ClassTable<i128>;
pub type WideCharVector = characters::CharVector<i128>;
pub type WideBaseSizeReport = basecount::BaseSizeReport<i128>;
