//! Permutation characters of `S_n` on k-subsets and on uniform set partitions, and
//! exact inner products of linear characters against their powers.

use std::fmt;
use std::io::{self, Read, Write};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_cycle_types, ClassTable, CycleType};
use crate::scalar::{binomial, factorial, pow, ExactInt};
use crate::sign::Sign;

/// Default ceiling on `n = r * s` for the set-partition sweep.
pub const DEFAULT_UNIFORM_CEILING: usize = 16;

/// Which action of `S_n` a character vector describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionTag {
    /// `S_n` on the k-element subsets of `[n]`.
    Subsets { k: usize },
    /// `S_n` on the partitions of `[n]` into `r` unordered blocks of size `s`.
    UniformPartitions { r: usize, s: usize },
}

impl ActionTag {
    /// Number of points acted on.
    pub fn domain_size<T: ExactInt>(&self, n: usize) -> Result<T> {
        match *self {
            ActionTag::Subsets { k } => binomial(n, k),
            ActionTag::UniformPartitions { r, s } => {
                if r * s != n {
                    return Err(Error::input(format!("n = {n} is not r*s = {r}*{s}")));
                }
                let denom = pow(&factorial::<T>(s)?, r)?.mul_exact(&factorial(r)?, "domain size")?;
                factorial::<T>(n)?.div_exact(&denom, "uniform partition count")
            }
        }
    }
}

impl fmt::Display for ActionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionTag::Subsets { k } => write!(f, "subsets:{k}"),
            ActionTag::UniformPartitions { r, s } => write!(f, "partitions:{r}x{s}"),
        }
    }
}

/// Values of a permutation character, one per class of the attached [`ClassTable`].
#[derive(Debug, Clone)]
pub struct CharVector<T> {
    table: Arc<ClassTable<T>>,
    action: ActionTag,
    values: Vec<T>,
}

impl<T: ExactInt> CharVector<T> {
    pub fn new(table: Arc<ClassTable<T>>, action: ActionTag, values: Vec<T>) -> Result<Self> {
        if values.len() != table.len() {
            return Err(Error::input(format!(
                "{} character values for {} classes",
                values.len(),
                table.len()
            )));
        }
        let cv = CharVector {
            table,
            action,
            values,
        };
        cv.check_identity_column()?;
        Ok(cv)
    }

    fn check_identity_column(&self) -> Result<()> {
        let degree = self.degree()?;
        let id = self.table.len() - 1;
        if self.values[id] != degree {
            return Err(Error::consistency(format!(
                "character value {} at the identity differs from the domain size {degree}",
                self.values[id]
            )));
        }
        if let Some(v) = self.values.iter().find(|v| v.is_negative() || **v > degree) {
            return Err(Error::consistency(format!(
                "permutation character value {v} outside 0..={degree}"
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn action(&self) -> ActionTag {
        self.action
    }

    pub fn table(&self) -> &Arc<ClassTable<T>> {
        &self.table
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// The domain size `chi(1)`.
    pub fn degree(&self) -> Result<T> {
        self.action.domain_size(self.n())
    }
}

/// The sign character of `S_n`, aligned with [`enumerate_cycle_types`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    n: usize,
    values: Vec<Sign>,
}

impl SignVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Sign] {
        &self.values
    }
}

pub fn sign_vector(n: usize) -> Result<SignVector> {
    let values = enumerate_cycle_types(n)?
        .iter()
        .map(crate::partitions::sign_of)
        .collect::<Result<Vec<_>>>()?;
    Ok(SignVector { n, values })
}

/// A linear character of `S_n` to pair against powers of a permutation character.
#[derive(Debug, Clone, Copy)]
pub enum Phi<'a> {
    /// The trivial character.
    Ones,
    /// A sign vector (normally [`sign_vector`]).
    Signs(&'a SignVector),
}

/// Number of k-subsets fixed by a permutation of cycle type `ct`: the sum over partitions
/// `eta` of `k` (multiplicities `b_j`) of `prod_j C(c_j, b_j)`.
pub fn chi_subsets<T: ExactInt>(ct: &CycleType, k: usize) -> Result<T> {
    ct.validate()?;
    if k == 0 || k > ct.n() {
        return Err(Error::input(format!("k = {k} outside 1..={}", ct.n())));
    }
    let etas = enumerate_cycle_types(k)?;
    chi_subsets_with(ct, &etas)
}

fn chi_subsets_with<T: ExactInt>(ct: &CycleType, etas: &[CycleType]) -> Result<T> {
    let mut total = T::zero();
    'eta: for eta in etas {
        let mut term = T::one();
        for (j, &b) in eta.counts().iter().enumerate() {
            if b == 0 {
                continue;
            }
            let c = ct.count(j + 1);
            if b > c {
                continue 'eta;
            }
            term = term.mul_exact(&binomial(c as usize, b as usize)?, "subset character")?;
        }
        total = total.add_exact(&term, "subset character")?;
    }
    Ok(total)
}

/// The k-subset permutation character over every class of `table`.
pub fn chi_subsets_vector<T: ExactInt>(table: Arc<ClassTable<T>>, k: usize) -> Result<CharVector<T>> {
    let n = table.n();
    if k == 0 || k > n {
        return Err(Error::input(format!("k = {k} outside 1..={n}")));
    }
    let etas = enumerate_cycle_types(k)?;
    let values = table
        .classes()
        .iter()
        .map(|c| chi_subsets_with(&c.cycle_type, &etas))
        .collect::<Result<Vec<_>>>()?;
    CharVector::new(table, ActionTag::Subsets { k }, values)
}

/// The canonical representative of a cycle type: cycles laid out over consecutive points,
/// longest first. `rep[i]` is the image of point `i`.
pub fn class_representative(ct: &CycleType) -> Vec<usize> {
    let mut images = Vec::with_capacity(ct.n());
    let mut start = 0;
    for len in ct.parts() {
        for i in 0..len {
            images.push(start + (i + 1) % len);
        }
        start += len;
    }
    images
}

/// All partitions of `[n]` into `r` blocks of size `s`.
///
/// Blocks are bitmasks; each partition is stored as `r` consecutive blocks ordered by
/// their least element, which makes the encoding canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartitions {
    n: usize,
    r: usize,
    s: usize,
    blocks: Vec<u64>,
}

const CACHE_MAGIC: &[u8; 4] = b"SPL1";

impl SetPartitions {
    pub fn enumerate(n: usize, r: usize, s: usize, ceiling: usize) -> Result<Self> {
        if r == 0 || s == 0 || r * s != n {
            return Err(Error::input(format!("n = {n} is not r*s with r = {r}, s = {s}")));
        }
        if n > ceiling.min(64) {
            return Err(Error::capacity(format!(
                "set partitions of n = {n} exceed the ceiling {}",
                ceiling.min(64)
            )));
        }
        let mut blocks = Vec::new();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut current = Vec::with_capacity(r);
        fill_blocks(full, s, &mut current, &mut blocks);
        Ok(SetPartitions { n, r, s, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.blocks.len() / self.r
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u64]> + '_ {
        self.blocks.chunks_exact(self.r)
    }

    /// Number of partitions mapped to themselves (blocks permuted among themselves) by
    /// the permutation `images`.
    pub fn count_fixed(&self, images: &[usize]) -> u64 {
        let map = MaskMap::new(images);
        self.iter()
            .filter(|part| part.iter().all(|&b| part.contains(&map.apply(b))))
            .count() as u64
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        w.write_all(CACHE_MAGIC)?;
        for v in [self.n, self.r, self.s] {
            w.write_all(&(v as u32).to_le_bytes())?;
        }
        w.write_all(&(self.blocks.len() as u64).to_le_bytes())?;
        for b in &self.blocks {
            w.write_all(&b.to_le_bytes())?;
        }
        Ok(())
    }

    /// Reads a list written by [`SetPartitions::write_to`], checking it against the
    /// requested shape.
    pub fn read_from<R: Read>(mut rd: R, n: usize, r: usize, s: usize) -> Result<Self> {
        let bad = |e: io::Error| Error::input(format!("set-partition cache: {e}"));
        let mut magic = [0u8; 4];
        rd.read_exact(&mut magic).map_err(bad)?;
        if &magic != CACHE_MAGIC {
            return Err(Error::input("set-partition cache: bad magic"));
        }
        let mut word = [0u8; 4];
        let mut shape = [0usize; 3];
        for v in shape.iter_mut() {
            rd.read_exact(&mut word).map_err(bad)?;
            *v = u32::from_le_bytes(word) as usize;
        }
        if shape != [n, r, s] {
            return Err(Error::input(format!(
                "set-partition cache holds shape {shape:?}, wanted {:?}",
                [n, r, s]
            )));
        }
        let mut long = [0u8; 8];
        rd.read_exact(&mut long).map_err(bad)?;
        let len = u64::from_le_bytes(long) as usize;
        if r == 0 || !len.is_multiple_of(r) {
            return Err(Error::input("set-partition cache: ragged block list"));
        }
        let mut blocks = Vec::with_capacity(len);
        for _ in 0..len {
            rd.read_exact(&mut long).map_err(bad)?;
            blocks.push(u64::from_le_bytes(long));
        }
        Ok(SetPartitions { n, r, s, blocks })
    }
}

fn fill_blocks(unused: u64, s: usize, current: &mut Vec<u64>, out: &mut Vec<u64>) {
    if unused == 0 {
        out.extend_from_slice(current);
        return;
    }
    let lowest = unused.trailing_zeros() as usize;
    let rest: Vec<usize> = (lowest + 1..64).filter(|&i| unused >> i & 1 == 1).collect();
    for others in rest.into_iter().combinations(s - 1) {
        let block = others.iter().fold(1u64 << lowest, |m, &i| m | 1 << i);
        current.push(block);
        fill_blocks(unused & !block, s, current, out);
        current.pop();
    }
}

// Byte-wise lookup tables mapping a point mask to its image mask.
struct MaskMap {
    tables: Vec<[u64; 256]>,
}

impl MaskMap {
    fn new(images: &[usize]) -> Self {
        let mut tables = vec![[0u64; 256]; images.len().div_ceil(8)];
        for (t, table) in tables.iter_mut().enumerate() {
            for (byte, slot) in table.iter_mut().enumerate() {
                let mut m = 0u64;
                for bit in 0..8 {
                    let p = t * 8 + bit;
                    if byte >> bit & 1 == 1 && p < images.len() {
                        m |= 1 << images[p];
                    }
                }
                *slot = m;
            }
        }
        MaskMap { tables }
    }

    fn apply(&self, mask: u64) -> u64 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (t, table)| acc | table[(mask >> (8 * t)) as usize & 0xff])
    }
}

/// Number of partitions of `[n]` into `r` blocks of size `s` left invariant by the
/// canonical representative of `ct`.
pub fn chi_uniform_partitions<T: ExactInt>(ct: &CycleType, r: usize, s: usize) -> Result<T> {
    ct.validate()?;
    let parts = SetPartitions::enumerate(ct.n(), r, s, DEFAULT_UNIFORM_CEILING)?;
    T::from_u64_exact(parts.count_fixed(&class_representative(ct)))
}

/// The uniform-partition permutation character over every class of `table`, sweeping a
/// shared partition list in parallel across classes.
pub fn chi_uniform_partitions_vector<T: ExactInt>(
    table: Arc<ClassTable<T>>,
    parts: &SetPartitions,
) -> Result<CharVector<T>> {
    if parts.n != table.n() {
        return Err(Error::input(format!(
            "partition list is for n = {}, class table for n = {}",
            parts.n,
            table.n()
        )));
    }
    let counts: Vec<u64> = table
        .classes()
        .par_iter()
        .map(|c| parts.count_fixed(&class_representative(&c.cycle_type)))
        .collect();
    let values = counts
        .into_iter()
        .map(T::from_u64_exact)
        .collect::<Result<Vec<_>>>()?;
    CharVector::new(
        table,
        ActionTag::UniformPartitions {
            r: parts.r,
            s: parts.s,
        },
        values,
    )
}

fn check_aligned<T: ExactInt>(phi: Phi<'_>, chi: &CharVector<T>) -> Result<()> {
    if let Phi::Signs(sv) = phi {
        if sv.n != chi.table.n() || sv.values.len() != chi.values.len() {
            return Err(Error::input(format!(
                "sign vector for n = {} paired with a character of S_{}",
                sv.n,
                chi.table.n()
            )));
        }
    }
    Ok(())
}

/// `<phi, chi^l> = (1/n!) sum over classes of phi(c) |c| chi(c)^l`, exactly.
///
/// The division by `n!` must be exact and a sign inner product must be nonnegative;
/// either failure is reported as [`Error::Consistency`].
pub fn inner_product<T: ExactInt>(phi: Phi<'_>, chi: &CharVector<T>, l: usize) -> Result<T> {
    check_aligned(phi, chi)?;
    let classes = chi.table.classes();
    let total = (0..classes.len())
        .into_par_iter()
        .map(|i| {
            let term = classes[i]
                .size
                .mul_exact(&pow(&chi.values[i], l)?, "inner product")?;
            Ok(match phi {
                Phi::Signs(sv) if sv.values[i] == Sign::Minus => -term,
                _ => term,
            })
        })
        .try_reduce(T::zero, |a, b| a.add_exact(&b, "inner product"))?;
    let value = total.div_exact(chi.table.order(), "inner product")?;
    if matches!(phi, Phi::Signs(_)) && value.is_negative() {
        return Err(Error::consistency(format!(
            "negative sign inner product {value} at l = {l}"
        )));
    }
    Ok(value)
}

/// Orbit counts of `S_n` and of `A_n` on `Omega^l`, via the orbit-counting lemma.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCounts<T> {
    pub l: usize,
    /// `o(l)`: orbits of the full group.
    pub o: T,
    /// `o_K(l)`: orbits of the even-permutation subgroup.
    pub o_k: T,
}

impl<T: ExactInt> OrbitCounts<T> {
    /// `o_K(l) - o(l)`.
    pub fn difference(&self) -> Result<T> {
        self.o_k.sub_exact(&self.o, "orbit difference")
    }
}

pub fn orbit_counts<T: ExactInt>(chi: &CharVector<T>, l: usize) -> Result<OrbitCounts<T>> {
    let mut walk = PowerWalk::new(chi);
    let sums = walk.level_sums_at(l)?;
    sums.orbit_counts(chi.table())
}

/// Class sums of `|c| chi(c)^l`, split by the sign of the class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSums<T> {
    pub l: usize,
    pub even: T,
    pub odd: T,
}

impl<T: ExactInt> LevelSums<T> {
    /// `<sgn, chi^l>`.
    pub fn sign_inner(&self, table: &ClassTable<T>) -> Result<T> {
        let v = self
            .even
            .sub_exact(&self.odd, "inner product")?
            .div_exact(table.order(), "inner product")?;
        if v.is_negative() {
            return Err(Error::consistency(format!(
                "negative sign inner product {v} at l = {}",
                self.l
            )));
        }
        Ok(v)
    }

    /// `<1, chi^l>`.
    pub fn trivial_inner(&self, table: &ClassTable<T>) -> Result<T> {
        self.even
            .add_exact(&self.odd, "orbit count")?
            .div_exact(table.order(), "orbit count")
    }

    pub fn orbit_counts(&self, table: &ClassTable<T>) -> Result<OrbitCounts<T>> {
        let kernel_order = table
            .classes()
            .iter()
            .filter(|c| c.sign.is_plus())
            .try_fold(T::zero(), |acc, c| acc.add_exact(&c.size, "kernel order"))?;
        Ok(OrbitCounts {
            l: self.l,
            o: self.trivial_inner(table)?,
            o_k: self.even.div_exact(&kernel_order, "kernel orbit count")?,
        })
    }
}

/// Walks `l = 0, 1, 2, ...`, keeping `|c| chi(c)^l` per class and multiplying by
/// `chi(c)` at each step.
#[derive(Debug, Clone)]
pub struct PowerWalk<'a, T> {
    chi: &'a CharVector<T>,
    l: usize,
    terms: Vec<T>,
}

impl<'a, T: ExactInt> PowerWalk<'a, T> {
    /// Starts at `l = 0`.
    pub fn new(chi: &'a CharVector<T>) -> Self {
        let terms = chi.table.classes().iter().map(|c| c.size.clone()).collect();
        PowerWalk { chi, l: 0, terms }
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn sums(&self) -> Result<LevelSums<T>> {
        let classes = self.chi.table.classes();
        let (even, odd) = self
            .terms
            .par_iter()
            .zip(classes.par_iter())
            .map(|(t, c)| {
                if c.sign.is_plus() {
                    Some((t.clone(), T::zero()))
                } else {
                    Some((T::zero(), t.clone()))
                }
            })
            .try_reduce(
                || (T::zero(), T::zero()),
                |a, b| {
                    Some((a.0.checked_add(&b.0)?, a.1.checked_add(&b.1)?))
                },
            )
            .ok_or(Error::Overflow("class sum"))?;
        Ok(LevelSums {
            l: self.l,
            even,
            odd,
        })
    }

    /// Moves to `l + 1` and returns the new sums.
    pub fn advance(&mut self) -> Result<LevelSums<T>> {
        let values = &self.chi.values;
        self.terms
            .par_iter_mut()
            .zip(values.par_iter())
            .try_for_each(|(t, v)| {
                *t = t.mul_exact(v, "character power")?;
                Ok::<_, Error>(())
            })?;
        self.l += 1;
        self.sums()
    }

    /// Sums at a given `l`, advancing as needed. Cannot go backwards.
    pub fn level_sums_at(&mut self, l: usize) -> Result<LevelSums<T>> {
        if l < self.l {
            return Err(Error::input(format!("power walk is past l = {l}")));
        }
        while self.l < l {
            self.advance()?;
        }
        self.sums()
    }
}
