//! Integer partitions as cycle types, and the conjugacy-class data of `S_n` they index.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{factorial, pow, ExactInt};
use crate::sign::Sign;

/// Default ceiling on `n` for [`enumerate_cycle_types`].
pub const DEFAULT_MAX_N: usize = 64;

/// Multiplicity vector `c_1..c_n` of a partition of `n`: `counts[i - 1]` is the number of
/// `i`-cycles.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    n: usize,
    counts: Vec<u32>,
}

impl CycleType {
    /// Builds a cycle type from its multiplicities. Trailing zeros may be omitted;
    /// the vector is padded to length `n`.
    pub fn new(n: usize, counts: &[u32]) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("cycle type of a partition of 0"));
        }
        if counts.len() > n && counts[n..].iter().any(|&c| c != 0) {
            return Err(Error::input(format!("cycle length above n = {n}")));
        }
        let mut dense = counts[..counts.len().min(n)].to_vec();
        dense.resize(n, 0);
        let ct = CycleType { n, counts: dense };
        ct.validate()?;
        Ok(ct)
    }

    /// Builds a cycle type from a list of cycle lengths (any order).
    pub fn from_parts(parts: &[usize]) -> Result<Self> {
        let n: usize = parts.iter().sum();
        if n == 0 || parts.contains(&0) {
            return Err(Error::input("parts must be positive and sum to n >= 1"));
        }
        let mut counts = vec![0u32; n];
        for &p in parts {
            counts[p - 1] += 1;
        }
        Ok(CycleType { n, counts })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, &[n as u32])
    }

    pub fn validate(&self) -> Result<()> {
        if self.counts.len() != self.n {
            return Err(Error::input(format!(
                "cycle type for n = {} has {} multiplicities",
                self.n,
                self.counts.len()
            )));
        }
        let total: usize = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i + 1) * c as usize)
            .sum();
        if total != self.n {
            return Err(Error::input(format!(
                "sum of i*c_i is {total}, expected n = {}",
                self.n
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// `c_len`, zero for lengths outside `1..=n`.
    pub fn count(&self, len: usize) -> u32 {
        if len == 0 {
            return 0;
        }
        self.counts.get(len - 1).copied().unwrap_or(0)
    }

    /// Total number of cycles, fixed points included.
    pub fn num_cycles(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// Cycle lengths in non-increasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.num_cycles());
        for len in (1..=self.n).rev() {
            for _ in 0..self.count(len) {
                out.push(len);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.count(1) as usize == self.n
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        for len in 1..=self.n {
            let c = self.count(len);
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{len}")?;
            } else {
                write!(f, "{len}^{c}")?;
            }
        }
        f.write_str(")")
    }
}

/// Every partition of `n`, as cycle types, in descending lexicographic order of the
/// non-increasing part lists: `(n)`, `(n-1, 1)`, ..., `(1, ..., 1)`.
pub fn enumerate_cycle_types(n: usize) -> Result<Vec<CycleType>> {
    enumerate_cycle_types_limited(n, DEFAULT_MAX_N)
}

pub fn enumerate_cycle_types_limited(n: usize, max_n: usize) -> Result<Vec<CycleType>> {
    if n == 0 || n > max_n {
        return Err(Error::input(format!("n = {n} outside 1..={max_n}")));
    }
    let mut out = Vec::new();
    let mut counts = vec![0u32; n];
    descend(n, n, &mut counts, &mut out);
    Ok(out)
}

// Fill the remaining `rest` with parts no larger than `max_part`, largest first.
fn descend(rest: usize, max_part: usize, counts: &mut Vec<u32>, out: &mut Vec<CycleType>) {
    if rest == 0 {
        out.push(CycleType {
            n: counts.len(),
            counts: counts.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        counts[part - 1] += 1;
        descend(rest - part, part, counts, out);
        counts[part - 1] -= 1;
    }
}

/// `n! / prod_i (i^{c_i} c_i!)`: the number of permutations with cycle type `ct`.
pub fn class_size<T: ExactInt>(ct: &CycleType) -> Result<T> {
    ct.validate()?;
    let order = factorial::<T>(ct.n)?;
    centralizer_order::<T>(ct).and_then(|z| order.div_exact(&z, "class size"))
}

/// Order of the centralizer of an element of cycle type `ct`.
pub fn centralizer_order<T: ExactInt>(ct: &CycleType) -> Result<T> {
    let mut z = T::one();
    for (i, &c) in ct.counts.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let len = T::from_usize_exact(i + 1)?;
        z = z.mul_exact(&pow(&len, c as usize)?, "centralizer order")?;
        z = z.mul_exact(&factorial::<T>(c as usize)?, "centralizer order")?;
    }
    Ok(z)
}

/// `(-1)^(n - number of cycles)`.
pub fn sign_of(ct: &CycleType) -> Result<Sign> {
    ct.validate()?;
    Ok(Sign::from_parity((ct.n - ct.num_cycles()) % 2 == 1))
}

/// A conjugacy class of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDatum<T> {
    pub cycle_type: CycleType,
    pub size: T,
    pub sign: Sign,
}

impl<T: ExactInt> ClassDatum<T> {
    pub fn new(cycle_type: CycleType) -> Result<Self> {
        let size = class_size(&cycle_type)?;
        let sign = sign_of(&cycle_type)?;
        Ok(ClassDatum {
            cycle_type,
            size,
            sign,
        })
    }
}

/// All conjugacy classes of `S_n` in [`enumerate_cycle_types`] order, together with `n!`.
#[derive(Debug, Clone)]
pub struct ClassTable<T> {
    n: usize,
    order: T,
    classes: Vec<ClassDatum<T>>,
}

impl<T: ExactInt> ClassTable<T> {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_limit(n, DEFAULT_MAX_N)
    }

    pub fn with_limit(n: usize, max_n: usize) -> Result<Self> {
        let classes = enumerate_cycle_types_limited(n, max_n)?
            .into_iter()
            .map(ClassDatum::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(ClassTable {
            n,
            order: factorial(n)?,
            classes,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|S_n| = n!`.
    pub fn order(&self) -> &T {
        &self.order
    }

    pub fn classes(&self) -> &[ClassDatum<T>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn position(&self, ct: &CycleType) -> Option<usize> {
        self.classes.iter().position(|c| &c.cycle_type == ct)
    }
}
