//! Orbit-representative searches over tuple spaces, base-controlling checks and
//! distinguishing numbers, all by direct manipulation of element lists.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::action::InducedAction;
use super::group::LabeledGroup;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Default bound on search-tree nodes visited by the tuple and subset searches.
pub const DEFAULT_MAX_NODES: usize = 20_000_000;
/// Default bound on the degree accepted by [`is_base_controlling`].
pub const DEFAULT_MAX_CONTROLLING_DEGREE: usize = 24;
/// Default bound on `m` for [`distinguishing_number`].
pub const DEFAULT_MAX_DISTINGUISHING_DEGREE: usize = 12;

/// Orbit representatives of the subgroup `sub` (element indices) on the points, with
/// orbit sizes.
pub fn orbits(action: &InducedAction, sub: &[usize]) -> Vec<(usize, usize)> {
    let d = action.degree();
    let images = action.images();
    let mut seen = vec![false; d];
    let mut out = Vec::new();
    for p in 0..d {
        if seen[p] {
            continue;
        }
        let mut size = 0;
        for &h in sub {
            let q = images[h].apply(p);
            if !seen[q] {
                seen[q] = true;
                size += 1;
            }
        }
        out.push((p, size));
    }
    out
}

fn stabilizer(action: &InducedAction, sub: &[usize], p: usize) -> Vec<usize> {
    let images = action.images();
    sub.iter().copied().filter(|&h| images[h].apply(p) == p).collect()
}

/// Orbit counts of a subgroup on `Omega^l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleOrbits {
    /// All orbits.
    pub all: BigInt,
    /// Orbits whose tuples have trivial stabilizer in the subgroup.
    pub regular: BigInt,
}

struct Budget {
    left: usize,
}

impl Budget {
    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::capacity("tuple search exceeded its node budget"));
        }
        self.left -= 1;
        Ok(())
    }
}

/// Counts orbits of `sub` on `Omega^l` by extending partial tuples with orbit
/// representatives of the current stabilizer. Once the stabilizer is trivial every
/// remaining extension is its own orbit, so the subtree is counted as `|Omega|^rest`.
pub fn count_tuple_orbits(action: &InducedAction, sub: &[usize], l: usize) -> Result<TupleOrbits> {
    count_tuple_orbits_bounded(action, sub, l, DEFAULT_MAX_NODES)
}

pub fn count_tuple_orbits_bounded(
    action: &InducedAction,
    sub: &[usize],
    l: usize,
    max_nodes: usize,
) -> Result<TupleOrbits> {
    let mut acc = TupleOrbits {
        all: BigInt::zero(),
        regular: BigInt::zero(),
    };
    let mut budget = Budget { left: max_nodes };
    walk_tuples(action, sub, l, &mut acc, &mut budget)?;
    Ok(acc)
}

fn walk_tuples(
    action: &InducedAction,
    stab: &[usize],
    rest: usize,
    acc: &mut TupleOrbits,
    budget: &mut Budget,
) -> Result<()> {
    budget.spend()?;
    if stab.len() == 1 {
        let leaves = num_traits::pow(BigInt::from(action.degree()), rest);
        acc.all += &leaves;
        acc.regular += leaves;
        return Ok(());
    }
    if rest == 0 {
        acc.all += BigInt::one();
        return Ok(());
    }
    for (p, _) in orbits(action, stab) {
        let next = stabilizer(action, stab, p);
        walk_tuples(action, &next, rest - 1, acc, budget)?;
    }
    Ok(())
}

/// Number of regular orbits of the whole group on `Omega^l`.
pub fn regular_orbits_on_tuples(action: &InducedAction, l: usize) -> Result<BigInt> {
    Ok(count_tuple_orbits(action, &action.all_elements(), l)?.regular)
}

/// `(o(l), o_K(l))`: orbits of the group and of the kernel of its labels on `Omega^l`.
pub fn orbit_counts_bruteforce(action: &InducedAction, l: usize) -> Result<(BigInt, BigInt)> {
    let kernel = action.kernel()?;
    let o = count_tuple_orbits(action, &action.all_elements(), l)?.all;
    let o_k = count_tuple_orbits(action, &kernel, l)?.all;
    Ok((o, o_k))
}

/// Least `l` such that some `l`-tuple has trivial pointwise stabilizer.
pub fn base_size_bruteforce(action: &InducedAction) -> Result<usize> {
    if !action.is_faithful() {
        return Err(Error::input(format!(
            "{} is not faithful; no base exists",
            action.description()
        )));
    }
    let all = action.all_elements();
    let mut budget = Budget {
        left: DEFAULT_MAX_NODES,
    };
    for l in 0..=action.degree() {
        if base_within(action, &all, l, &mut budget)? {
            return Ok(l);
        }
    }
    Err(Error::consistency("faithful action without a base"))
}

fn base_within(action: &InducedAction, stab: &[usize], depth: usize, budget: &mut Budget) -> Result<bool> {
    budget.spend()?;
    if stab.len() == 1 {
        return Ok(true);
    }
    if depth == 0 {
        return Ok(false);
    }
    for (p, size) in orbits(action, stab) {
        // a point fixed by the whole stabilizer cannot shrink it
        if size == 1 {
            continue;
        }
        if base_within(action, &stabilizer(action, stab, p), depth - 1, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outcome of [`is_base_controlling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Controlling {
    Yes,
    /// A point set whose pointwise stabilizer is nontrivial yet lies in the label kernel.
    Counterexample {
        subset: Vec<usize>,
        stabilizer_order: usize,
        label_image: Vec<Sign>,
    },
}

impl Controlling {
    pub fn holds(&self) -> bool {
        matches!(self, Controlling::Yes)
    }
}

/// Checks that a point set has trivial pointwise stabilizer exactly when the labels are
/// identically +1 on that stabilizer.
///
/// Tuples reduce to their entry sets, and sets are searched in increasing index order.
/// Points fixed by the current stabilizer are skipped, and a branch stops once its
/// stabilizer meets the label kernel trivially, since every smaller subgroup then
/// satisfies the condition as well.
pub fn is_base_controlling(action: &InducedAction) -> Result<Controlling> {
    is_base_controlling_bounded(action, DEFAULT_MAX_CONTROLLING_DEGREE, DEFAULT_MAX_NODES)
}

pub fn is_base_controlling_bounded(
    action: &InducedAction,
    max_degree: usize,
    max_nodes: usize,
) -> Result<Controlling> {
    let labels = action
        .labels()
        .ok_or_else(|| Error::input("base-controlling check needs labels"))?;
    if labels.iter().all(|l| l.is_plus()) {
        return Err(Error::input(
            "labels are all +1; the trivial homomorphism is degenerate input",
        ));
    }
    if action.degree() > max_degree {
        return Err(Error::capacity(format!(
            "degree {} exceeds the subset-search bound {max_degree}",
            action.degree()
        )));
    }
    let mut budget = Budget { left: max_nodes };
    let mut subset = Vec::new();
    let found = controlling_walk(action, labels, &action.all_elements(), 0, &mut subset, &mut budget)?;
    Ok(found.unwrap_or(Controlling::Yes))
}

fn controlling_walk(
    action: &InducedAction,
    labels: &[Sign],
    stab: &[usize],
    start: usize,
    subset: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<Option<Controlling>> {
    budget.spend()?;
    let kernel_part = stab.iter().filter(|&&h| labels[h].is_plus()).count();
    if stab.len() > 1 && kernel_part == stab.len() {
        let mut image: Vec<Sign> = stab.iter().map(|&h| labels[h]).collect();
        image.dedup();
        return Ok(Some(Controlling::Counterexample {
            subset: subset.clone(),
            stabilizer_order: stab.len(),
            label_image: image,
        }));
    }
    if kernel_part <= 1 {
        return Ok(None);
    }
    let images = action.images();
    for p in start..action.degree() {
        if stab.iter().all(|&h| images[h].apply(p) == p) {
            continue;
        }
        let next = stabilizer(action, stab, p);
        subset.push(p);
        let found = controlling_walk(action, labels, &next, p + 1, subset, budget)?;
        subset.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Least number of colors in a coloring of `[m]` whose color-preserving subgroup of `P`
/// is trivial.
pub fn distinguishing_number(group: &LabeledGroup) -> Result<usize> {
    distinguishing_number_bounded(group, DEFAULT_MAX_DISTINGUISHING_DEGREE)
}

pub fn distinguishing_number_bounded(group: &LabeledGroup, max_degree: usize) -> Result<usize> {
    let m = group.degree();
    if m > max_degree {
        return Err(Error::capacity(format!(
            "distinguishing search on {m} points exceeds the bound {max_degree}"
        )));
    }
    if group.order() == 1 {
        return Ok(1);
    }
    let survivors: Vec<usize> = (0..group.order()).collect();
    let mut colors = vec![usize::MAX; m];
    for c in 2..=m {
        if coloring_exists(group, 0, 0, c, &mut colors, &survivors) {
            return Ok(c);
        }
    }
    Err(Error::input("group is not faithful on its points"))
}

// Colors are assigned in restricted-growth order, so color renamings are not revisited.
// `survivors` holds the elements still compatible with the partial coloring.
fn coloring_exists(
    group: &LabeledGroup,
    next: usize,
    used: usize,
    max_colors: usize,
    colors: &mut Vec<usize>,
    survivors: &[usize],
) -> bool {
    if survivors.len() == 1 {
        return true;
    }
    let m = colors.len();
    if next == m {
        return false;
    }
    let els = group.elements();
    for c in 0..(used + 1).min(max_colors) {
        colors[next] = c;
        let kept: Vec<usize> = survivors
            .iter()
            .copied()
            .filter(|&g| {
                // every assigned point whose image (or preimage) is now assigned must match
                let e = &els[g];
                (0..=next).all(|i| {
                    let j = e.apply(i);
                    j > next || colors[j] == colors[i]
                })
            })
            .collect();
        if coloring_exists(group, next + 1, used.max(c + 1), max_colors, colors, &kept) {
            colors[next] = usize::MAX;
            return true;
        }
    }
    colors[next] = usize::MAX;
    false
}
