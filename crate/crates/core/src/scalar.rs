//! Exact integer scalars.
//!
//! Every formula in this crate is written against [`ExactInt`] so that the same code
//! runs on arbitrary-precision integers (the default) or on a fixed-width fast path.
//! Fixed-width arithmetic goes through the checked operations, so an overflow surfaces
//! as [`Error::Overflow`] instead of a wrong answer.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// A signed exact integer type usable by the character and base-size formulas.
pub trait ExactInt:
    Clone
    + Debug
    + Display
    + Send
    + Sync
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
{
    fn from_usize_exact(v: usize) -> Result<Self> {
        Self::from_usize(v).ok_or(Error::Overflow("integer conversion"))
    }

    fn from_u64_exact(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow("integer conversion"))
    }

    fn add_exact(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow(what))
    }

    fn sub_exact(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow(what))
    }

    fn mul_exact(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow(what))
    }

    /// `self / rhs`, failing loudly when the remainder is nonzero.
    fn div_exact(&self, rhs: &Self, what: &'static str) -> Result<Self> {
        let (q, r) = self.div_rem(rhs);
        if !r.is_zero() {
            return Err(Error::consistency(format!(
                "{what}: {self} is not divisible by {rhs} (remainder {r})"
            )));
        }
        Ok(q)
    }
}

impl<T> ExactInt for T where
    T: Clone
        + Debug
        + Display
        + Send
        + Sync
        + Integer
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
{
}

/// `n!`, exactly.
pub fn factorial<T: ExactInt>(n: usize) -> Result<T> {
    let mut acc = T::one();
    for i in 2..=n {
        acc = acc.mul_exact(&T::from_usize_exact(i)?, "factorial")?;
    }
    Ok(acc)
}

/// Binomial coefficient with `C(a, b) = 0` for `b > a` and `C(0, 0) = 1`.
pub fn binomial<T: ExactInt>(a: usize, b: usize) -> Result<T> {
    if b > a {
        return Ok(T::zero());
    }
    let b = b.min(a - b);
    let mut acc = T::one();
    for i in 0..b {
        // acc * (a - i) is divisible by i + 1 at every step
        acc = acc.mul_exact(&T::from_usize_exact(a - i)?, "binomial")?;
        acc = acc.div_exact(&T::from_usize_exact(i + 1)?, "binomial")?;
    }
    Ok(acc)
}

/// `base^exp` by repeated squaring.
pub fn pow<T: ExactInt>(base: &T, mut exp: usize) -> Result<T> {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.mul_exact(&sq, "power")?;
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.mul_exact(&sq, "power")?;
        }
    }
    Ok(acc)
}
