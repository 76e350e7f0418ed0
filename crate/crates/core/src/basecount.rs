//! Base sizes, regular-orbit counts and wreath-product base sizes from sign inner products.
//!
//! When the sign character is base-controlling for an action of `S_n`, the number of
//! regular orbits on `Omega^l` is `<sgn, chi^l>`, so the base size is the least `l` at which
//! that inner product becomes nonzero, and the base size of the product-action wreath
//! product with top group `P` is the least `l` at which it reaches the distinguishing
//! number `D(P)`.

use std::sync::Arc;

use crate::characters::{
    chi_subsets_vector, chi_uniform_partitions_vector, ActionTag, CharVector, PowerWalk, SetPartitions,
    DEFAULT_UNIFORM_CEILING,
};
use crate::error::{Error, Result};
use crate::partitions::ClassTable;
use crate::scalar::ExactInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Formula => "formula",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Caveat {
    /// The sign character is not known to be base-controlling for this action, so the
    /// min-l value is only a candidate and can undershoot the true base size.
    NotBaseControlling,
    /// Some non-identity permutation acts trivially; no base exists.
    NonFaithful,
}

impl Caveat {
    pub fn message(self) -> &'static str {
        match self {
            Caveat::NotBaseControlling => {
                "sgn is not known to be base-controlling for this action; the min-l value is a candidate, not the base size"
            }
            Caveat::NonFaithful => "the action is not faithful, so the base size is undefined",
        }
    }
}

/// Outcome of a min-l search over `<sgn, chi^l>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSizeReport<T> {
    pub n: usize,
    pub action: ActionTag,
    pub base_size: Option<usize>,
    /// `(l, <sgn, chi^l>)` for `l = 1..=base_size`.
    pub witness: Vec<(usize, T)>,
    pub method: Method,
    pub caveats: Vec<Caveat>,
}

impl<T: ExactInt> BaseSizeReport<T> {
    /// Zero counts strictly below the base size, a positive count at it.
    pub fn check(&self) -> Result<()> {
        let Some(b) = self.base_size else {
            return Ok(());
        };
        let ok = self.witness.len() == b
            && self.witness.iter().enumerate().all(|(i, (l, c))| {
                *l == i + 1 && if *l < b { c.is_zero() } else { c.is_positive() }
            });
        if ok {
            Ok(())
        } else {
            Err(Error::consistency("base size witness is not 0,...,0,positive"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathReport<T> {
    pub n: usize,
    pub k: usize,
    /// Distinguishing number of the top group.
    pub distinguishing: usize,
    pub base_size: usize,
    /// `(l, <sgn, chi^l>)` for `l = 1..=base_size`.
    pub trace: Vec<(usize, T)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LargeBaseBounds<T> {
    pub m: usize,
    pub k: usize,
    pub r: usize,
    /// `min{l : <sgn, chi_{m-1}^l> > 0}`.
    pub lower: usize,
    /// `min{l : <sgn, chi_m^l> >= r}`.
    pub upper: usize,
    pub lower_trace: Vec<(usize, T)>,
    pub upper_trace: Vec<(usize, T)>,
}

/// `(n, k)` admitted for the k-subset action: `n > 2k >= 2`, or `k = 1` with `n >= 2`.
pub fn check_subsets_args(n: usize, k: usize) -> Result<()> {
    let ok = match k {
        0 => false,
        1 => n >= 2,
        _ => n > 2 * k,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::input(format!(
            "S_{n} on {k}-subsets needs n > 2k >= 2, or k = 1 and n >= 2"
        )))
    }
}

pub fn subsets_character<T: ExactInt>(n: usize, k: usize) -> Result<CharVector<T>> {
    check_subsets_args(n, k)?;
    chi_subsets_vector(Arc::new(ClassTable::new(n)?), k)
}

fn default_cap<T: ExactInt>(chi: &CharVector<T>) -> Result<usize> {
    Ok(chi.degree()?.to_usize().unwrap_or(usize::MAX))
}

/// Least `l >= 1` with `<sgn, chi^l> >= threshold`, and the trace up to it.
pub fn min_l_reaching<T: ExactInt>(
    chi: &CharVector<T>,
    threshold: &T,
    max_l: Option<usize>,
) -> Result<(usize, Vec<(usize, T)>)> {
    let cap = match max_l {
        Some(c) => c,
        None => default_cap(chi)?,
    };
    let mut walk = PowerWalk::new(chi);
    let mut trace = Vec::new();
    while walk.l() < cap {
        let sums = walk.advance()?;
        let count = sums.sign_inner(chi.table())?;
        let done = count >= *threshold;
        trace.push((sums.l, count));
        if done {
            return Ok((sums.l, trace));
        }
    }
    Err(Error::SearchCap {
        cap,
        what: format!("<sgn, chi^l> >= {threshold} for {}", chi.action()),
    })
}

/// True when some non-identity class fixes every point.
pub fn is_unfaithful<T: ExactInt>(chi: &CharVector<T>) -> Result<bool> {
    let degree = chi.degree()?;
    let id = chi.values().len() - 1;
    Ok(chi.values()[..id].contains(&degree))
}

fn formula_report<T: ExactInt>(chi: &CharVector<T>, max_l: Option<usize>) -> Result<BaseSizeReport<T>> {
    let (b, witness) = min_l_reaching(chi, &T::one(), max_l)?;
    let report = BaseSizeReport {
        n: chi.n(),
        action: chi.action(),
        base_size: Some(b),
        witness,
        method: Method::Formula,
        caveats: Vec::new(),
    };
    report.check()?;
    Ok(report)
}

/// Base size of `S_n` on k-subsets.
pub fn base_size_subsets<T: ExactInt>(n: usize, k: usize, max_l: Option<usize>) -> Result<BaseSizeReport<T>> {
    formula_report(&subsets_character(n, k)?, max_l)
}

/// Regular orbits of `S_n` on `Omega^l`, Omega the k-subsets.
pub fn regular_orbit_count<T: ExactInt>(n: usize, k: usize, l: usize) -> Result<T> {
    let chi = subsets_character::<T>(n, k)?;
    let mut walk = PowerWalk::new(&chi);
    walk.level_sums_at(l)?.sign_inner(chi.table())
}

/// Base size of `S_{n,k} wr P` in product action, given `D(P)`.
pub fn base_size_wreath_subsets<T: ExactInt>(
    n: usize,
    k: usize,
    distinguishing: usize,
    max_l: Option<usize>,
) -> Result<WreathReport<T>> {
    if distinguishing == 0 {
        return Err(Error::input("distinguishing number must be at least 1"));
    }
    let chi = subsets_character::<T>(n, k)?;
    let threshold = T::from_usize_exact(distinguishing)?;
    let (base_size, trace) = min_l_reaching(&chi, &threshold, max_l)?;
    Ok(WreathReport {
        n,
        k,
        distinguishing,
        base_size,
        trace,
    })
}

/// Lower and upper bounds on the base size of a large-base group
/// `A_{m,k}^r <| G <= S_{m,k} wr S_r`. No order between them is asserted.
pub fn large_base_bounds<T: ExactInt>(
    m: usize,
    k: usize,
    r: usize,
    max_l: Option<usize>,
) -> Result<LargeBaseBounds<T>> {
    if r == 0 {
        return Err(Error::input("r must be at least 1"));
    }
    if m == 0 {
        return Err(Error::input("m must be at least 1"));
    }
    check_subsets_args(m, k)?;
    check_subsets_args(m - 1, k)?;
    let lower_chi = subsets_character::<T>(m - 1, k)?;
    let (lower, lower_trace) = min_l_reaching(&lower_chi, &T::one(), max_l)?;
    let upper_chi = subsets_character::<T>(m, k)?;
    let (upper, upper_trace) = min_l_reaching(&upper_chi, &T::from_usize_exact(r)?, max_l)?;
    Ok(LargeBaseBounds {
        m,
        k,
        r,
        lower,
        upper,
        lower_trace,
        upper_trace,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct PartitionsOptions<'a> {
    pub ceiling: usize,
    pub max_l: Option<usize>,
    /// A precomputed partition list to reuse.
    pub partitions: Option<&'a SetPartitions>,
}

impl Default for PartitionsOptions<'_> {
    fn default() -> Self {
        PartitionsOptions {
            ceiling: DEFAULT_UNIFORM_CEILING,
            max_l: None,
            partitions: None,
        }
    }
}

pub fn partitions_character<T: ExactInt>(
    n: usize,
    r: usize,
    s: usize,
    opts: &PartitionsOptions<'_>,
) -> Result<CharVector<T>> {
    if r == 0 || s == 0 || r * s != n {
        return Err(Error::input(format!("n = {n} is not r*s with r = {r}, s = {s}")));
    }
    if n > opts.ceiling {
        return Err(Error::capacity(format!(
            "n = {n} exceeds the set-partition ceiling {}",
            opts.ceiling
        )));
    }
    let table = Arc::new(ClassTable::new(n)?);
    match opts.partitions {
        Some(p) => chi_uniform_partitions_vector(table, p),
        None => chi_uniform_partitions_vector(table, &SetPartitions::enumerate(n, r, s, opts.ceiling)?),
    }
}

/// Min-l of `<sgn, chi^l> != 0` for `S_n` on uniform set partitions. Always flagged: sgn
/// need not be base-controlling here, so the value may undershoot the base size.
pub fn base_size_partitions_action<T: ExactInt>(
    n: usize,
    r: usize,
    s: usize,
    opts: &PartitionsOptions<'_>,
) -> Result<(CharVector<T>, BaseSizeReport<T>)> {
    let chi = partitions_character::<T>(n, r, s, opts)?;
    let report = if is_unfaithful(&chi)? {
        BaseSizeReport {
            n,
            action: chi.action(),
            base_size: None,
            witness: Vec::new(),
            method: Method::Formula,
            caveats: vec![Caveat::NonFaithful, Caveat::NotBaseControlling],
        }
    } else {
        let mut report = formula_report(&chi, opts.max_l)?;
        report.caveats.push(Caveat::NotBaseControlling);
        report
    };
    Ok((chi, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn natural_action_base_size_is_n_minus_one() {
        for n in 2..=12 {
            let r = base_size_subsets::<BigInt>(n, 1, None).unwrap();
            assert_eq!(r.base_size, Some(n - 1));
            r.check().unwrap();
        }
    }

    #[test]
    fn regular_orbit_examples() {
        for n in 2..=10 {
            assert_eq!(regular_orbit_count::<BigInt>(n, 1, n - 1).unwrap(), big(1));
        }
        assert_eq!(regular_orbit_count::<BigInt>(4, 1, 2).unwrap(), big(0));
    }

    #[test]
    fn argument_validation() {
        assert!(matches!(base_size_subsets::<BigInt>(4, 2, None), Err(Error::Input(_))));
        assert!(matches!(base_size_subsets::<BigInt>(1, 1, None), Err(Error::Input(_))));
        assert!(matches!(base_size_subsets::<BigInt>(5, 0, None), Err(Error::Input(_))));
        assert!(matches!(
            base_size_wreath_subsets::<BigInt>(5, 1, 0, None),
            Err(Error::Input(_))
        ));
        assert!(matches!(large_base_bounds::<BigInt>(4, 2, 2, None), Err(Error::Input(_))));
        assert!(matches!(large_base_bounds::<BigInt>(5, 2, 2, None), Err(Error::Input(_))));
    }

    #[test]
    fn search_cap_is_an_error() {
        let err = base_size_subsets::<BigInt>(8, 1, Some(3)).unwrap_err();
        assert!(matches!(err, Error::SearchCap { cap: 3, .. }));
    }

    #[test]
    fn wreath_examples() {
        let w = base_size_wreath_subsets::<BigInt>(3, 1, 2, None).unwrap();
        assert_eq!(w.base_size, 3);
        assert_eq!(w.trace, vec![(1, big(0)), (2, big(1)), (3, big(4))]);
        for (n, k) in [(5, 1), (5, 2), (7, 2), (9, 3)] {
            let w = base_size_wreath_subsets::<BigInt>(n, k, 1, None).unwrap();
            let b = base_size_subsets::<BigInt>(n, k, None).unwrap();
            assert_eq!(Some(w.base_size), b.base_size);
        }
    }

    #[test]
    fn large_base_examples() {
        let b = large_base_bounds::<BigInt>(5, 1, 2, None).unwrap();
        assert_eq!((b.lower, b.upper), (3, 5));
        assert_eq!(b.upper_trace[3], (4, big(1)));
        assert_eq!(b.upper_trace[4], (5, big(11)));
        assert_eq!(large_base_bounds::<BigInt>(6, 1, 2, None).unwrap().lower, 4);
        for (m, k) in [(5, 1), (7, 2), (10, 3)] {
            let b = large_base_bounds::<BigInt>(m, k, 1, None).unwrap();
            assert_eq!(Some(b.lower), base_size_subsets::<BigInt>(m - 1, k, None).unwrap().base_size);
            assert_eq!(Some(b.upper), base_size_subsets::<BigInt>(m, k, None).unwrap().base_size);
        }
    }

    #[test]
    fn single_block_partition_action_is_unfaithful() {
        let (_, r) = base_size_partitions_action::<BigInt>(5, 1, 5, &PartitionsOptions::default()).unwrap();
        assert_eq!(r.base_size, None);
        assert!(r.caveats.contains(&Caveat::NonFaithful));
        assert!(r.caveats.contains(&Caveat::NotBaseControlling));
    }

    #[test]
    fn partition_action_report_is_flagged() {
        let (chi, r) = base_size_partitions_action::<BigInt>(6, 3, 2, &PartitionsOptions::default()).unwrap();
        assert_eq!(chi.degree().unwrap(), big(15));
        assert!(r.base_size.is_some());
        assert_eq!(r.caveats, vec![Caveat::NotBaseControlling]);
        r.check().unwrap();
    }

    #[test]
    fn partition_action_errors() {
        let opts = PartitionsOptions::default();
        assert!(matches!(
            base_size_partitions_action::<BigInt>(6, 2, 2, &opts),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            base_size_partitions_action::<BigInt>(18, 3, 6, &opts),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn wide_scalar_gives_same_base_sizes() {
        for (n, k) in [(6, 1), (7, 2), (11, 3), (15, 5)] {
            let wide = base_size_subsets::<i128>(n, k, None).unwrap();
            let big = base_size_subsets::<BigInt>(n, k, None).unwrap();
            assert_eq!(wide.base_size, big.base_size);
        }
    }
}
