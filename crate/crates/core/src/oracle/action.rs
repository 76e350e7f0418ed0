use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use super::group::{LabeledGroup, DEFAULT_MAX_ORDER};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Default bound on the number of points of an induced action.
pub const DEFAULT_MAX_INDUCED_DEGREE: usize = 10_000;

/// A group acting on an indexed set of points. `images[i]` is the permutation of the
/// points induced by group element `i`; labels travel with the elements.
#[derive(Debug, Clone)]
pub struct InducedAction {
    description: String,
    points: Vec<String>,
    images: Vec<Perm>,
    labels: Option<Vec<Sign>>,
}

impl InducedAction {
    pub fn new(
        description: impl Into<String>,
        points: Vec<String>,
        images: Vec<Perm>,
        labels: Option<Vec<Sign>>,
    ) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::input("an action needs at least the identity"));
        }
        if let Some(p) = images.iter().find(|p| p.degree() != points.len()) {
            return Err(Error::input(format!(
                "image {p} has degree {}, expected {}",
                p.degree(),
                points.len()
            )));
        }
        if labels.as_ref().is_some_and(|l| l.len() != images.len()) {
            return Err(Error::input("one label per element is required"));
        }
        Ok(InducedAction {
            description: description.into(),
            points,
            images,
            labels,
        })
    }

    /// The group on its own domain `1..=d`.
    pub fn natural(group: &LabeledGroup) -> Self {
        InducedAction {
            description: format!("natural action of degree {}", group.degree()),
            points: (1..=group.degree()).map(|p| p.to_string()).collect(),
            images: group.elements().to_vec(),
            labels: group.labels().map(<[Sign]>::to_vec),
        }
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn degree(&self) -> usize {
        self.points.len()
    }

    /// Number of group elements (not of distinct images).
    pub fn group_order(&self) -> usize {
        self.images.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn labels(&self) -> Option<&[Sign]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Option<Vec<Sign>>) -> Result<Self> {
        if labels.as_ref().is_some_and(|l| l.len() != self.images.len()) {
            return Err(Error::input("one label per element is required"));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn all_elements(&self) -> Vec<usize> {
        (0..self.images.len()).collect()
    }

    /// Elements labeled +1.
    pub fn kernel(&self) -> Result<Vec<usize>> {
        let labels = self
            .labels
            .as_ref()
            .ok_or_else(|| Error::input("the action carries no labels"))?;
        Ok((0..labels.len()).filter(|&i| labels[i].is_plus()).collect())
    }

    /// Number of group elements acting as the identity.
    pub fn kernel_of_action(&self) -> usize {
        self.images.iter().filter(|p| p.is_identity()).count()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_of_action() == 1
    }

    /// The same action with the points listed in a different order: point `i` of the
    /// result is point `order[i]` of `self`.
    pub fn relabeled(&self, order: &[usize]) -> Result<Self> {
        let sigma = Perm::from_images(order.to_vec())?;
        if sigma.degree() != self.degree() {
            return Err(Error::input("relabeling has the wrong degree"));
        }
        let inv = sigma.inverse();
        let images = self
            .images
            .iter()
            .map(|g| {
                let im: Vec<u32> = (0..self.degree())
                    .map(|i| inv.apply(g.apply(sigma.apply(i))) as u32)
                    .collect();
                Perm::from_images_unchecked(im)
            })
            .collect();
        Ok(InducedAction {
            description: self.description.clone(),
            points: order.iter().map(|&i| self.points[i].clone()).collect(),
            images,
            labels: self.labels.clone(),
        })
    }
}

fn induce<K, F>(group: &LabeledGroup, points: &[K], map_point: F) -> Result<Vec<Perm>>
where
    K: std::hash::Hash + Eq,
    F: Fn(&Perm, &K) -> K,
{
    let index: HashMap<&K, u32> = points.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
    group
        .elements()
        .iter()
        .map(|g| {
            let images = points
                .iter()
                .map(|p| {
                    index
                        .get(&map_point(g, p))
                        .copied()
                        .ok_or_else(|| Error::consistency("induced image left the point set"))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Perm::from_images_unchecked(images))
        })
        .collect()
}

fn check_induced_degree(degree: usize, max_degree: usize) -> Result<()> {
    if degree > max_degree {
        return Err(Error::capacity(format!(
            "induced degree {degree} exceeds the bound {max_degree}"
        )));
    }
    Ok(())
}

fn show_set(set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|p| p + 1).join(","))
}

/// The induced action on k-element subsets of the natural domain.
pub fn act_on_subsets(group: &LabeledGroup, k: usize) -> Result<InducedAction> {
    act_on_subsets_bounded(group, k, DEFAULT_MAX_INDUCED_DEGREE)
}

pub fn act_on_subsets_bounded(group: &LabeledGroup, k: usize, max_degree: usize) -> Result<InducedAction> {
    let d = group.degree();
    if k == 0 || k > d {
        return Err(Error::input(format!("k = {k} outside 1..={d}")));
    }
    let subsets: Vec<Vec<usize>> = (0..d).combinations(k).collect();
    check_induced_degree(subsets.len(), max_degree)?;
    let images = induce(group, &subsets, |g, s| {
        let mut im: Vec<usize> = s.iter().map(|&p| g.apply(p)).collect();
        im.sort_unstable();
        im
    })?;
    InducedAction::new(
        format!("degree-{d} group on {k}-subsets"),
        subsets.iter().map(|s| show_set(s)).collect(),
        images,
        group.labels().map(<[Sign]>::to_vec),
    )
}

/// All partitions of `0..n` into `r` blocks of size `s`, each as sorted blocks sorted by
/// least element, found by restricted growth strings.
fn uniform_set_partitions(n: usize, r: usize, s: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, blocks: &mut Vec<Vec<usize>>, n: usize, r: usize, s: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            if blocks.len() == r {
                out.push(blocks.clone());
            }
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].len() < s {
                blocks[b].push(i);
                rec(i + 1, blocks, n, r, s, out);
                blocks[b].pop();
            }
        }
        if blocks.len() < r {
            blocks.push(vec![i]);
            rec(i + 1, blocks, n, r, s, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, &mut Vec::new(), n, r, s, &mut out);
    out
}

/// The induced action on partitions of the natural domain into `r` blocks of size `s`.
pub fn act_on_uniform_partitions(group: &LabeledGroup, r: usize, s: usize) -> Result<InducedAction> {
    act_on_uniform_partitions_bounded(group, r, s, DEFAULT_MAX_INDUCED_DEGREE)
}

pub fn act_on_uniform_partitions_bounded(
    group: &LabeledGroup,
    r: usize,
    s: usize,
    max_degree: usize,
) -> Result<InducedAction> {
    let d = group.degree();
    if r == 0 || s == 0 || r * s != d {
        return Err(Error::input(format!("degree {d} is not r*s = {r}*{s}")));
    }
    // n!/(s!^r r!) grows fast; refuse before enumerating
    let mut count = 1f64;
    for i in 1..=d {
        count *= i as f64;
    }
    for i in 1..=s {
        count /= (i as f64).powi(r as i32);
    }
    for i in 1..=r {
        count /= i as f64;
    }
    check_induced_degree(count.round() as usize, max_degree)?;
    let parts = uniform_set_partitions(d, r, s);
    let images = induce(group, &parts, |g, part| {
        let mut im: Vec<Vec<usize>> = part
            .iter()
            .map(|b| {
                let mut nb: Vec<usize> = b.iter().map(|&p| g.apply(p)).collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        im.sort_unstable();
        im
    })?;
    InducedAction::new(
        format!("degree-{d} group on partitions into {r} blocks of size {s}"),
        parts.iter().map(|p| p.iter().map(|b| show_set(b)).join("|")).collect(),
        images,
        group.labels().map(<[Sign]>::to_vec),
    )
}

/// `G wr S_r` in product action on `Omega^r`, where `G` is the permutation group induced
/// by `inner`. The result is unlabeled.
pub fn product_action_wreath(inner: &InducedAction, r: usize) -> Result<InducedAction> {
    if r == 0 {
        return Err(Error::input("wreath product needs r >= 1"));
    }
    let top = super::group::symmetric_group(r)?.without_labels();
    product_action_wreath_with_top(inner, &top)
}

/// `G wr P` in product action for an explicit top group `P <= S_r`.
pub fn product_action_wreath_with_top(inner: &InducedAction, top: &LabeledGroup) -> Result<InducedAction> {
    product_action_wreath_bounded(inner, top, DEFAULT_MAX_ORDER, DEFAULT_MAX_INDUCED_DEGREE)
}

pub fn product_action_wreath_bounded(
    inner: &InducedAction,
    top: &LabeledGroup,
    max_order: usize,
    max_degree: usize,
) -> Result<InducedAction> {
    let r = top.degree();
    if r == 0 {
        return Err(Error::input("wreath product needs r >= 1"));
    }
    let d = inner.degree();
    // the base group is the image group of the inner action
    let mut seen = HashSet::new();
    let base: Vec<&Perm> = inner.images().iter().filter(|p| seen.insert(*p)).collect();
    let degree = d
        .checked_pow(r as u32)
        .filter(|&x| x <= max_degree)
        .ok_or_else(|| Error::capacity(format!("product domain {d}^{r} exceeds the bound {max_degree}")))?;
    let order = base
        .len()
        .checked_pow(r as u32)
        .and_then(|x| x.checked_mul(top.order()))
        .filter(|&x| x <= max_order)
        .ok_or_else(|| Error::capacity(format!("wreath product order exceeds the bound {max_order}")))?;

    let encode = |coords: &[usize]| coords.iter().rev().fold(0usize, |acc, &c| acc * d + c);
    let tuples: Vec<Vec<usize>> = (0..degree)
        .map(|mut x| {
            (0..r)
                .map(|_| {
                    let c = x % d;
                    x /= d;
                    c
                })
                .collect()
        })
        .collect();

    let mut images = Vec::with_capacity(order);
    for sigma in top.elements() {
        for choice in (0..r).map(|_| 0..base.len()).multi_cartesian_product() {
            let im: Vec<u32> = tuples
                .iter()
                .map(|t| {
                    // coordinate j carries its value, moved by g_j, to position sigma(j)
                    let mut out = vec![0usize; r];
                    for j in 0..r {
                        out[sigma.apply(j)] = base[choice[j]].apply(t[j]);
                    }
                    encode(&out) as u32
                })
                .collect();
            images.push(Perm::from_images_unchecked(im));
        }
    }
    let points = tuples
        .iter()
        .map(|t| format!("({})", t.iter().map(|&c| inner.points()[c].as_str()).join(",")))
        .collect();
    InducedAction::new(
        format!("({}) wr degree-{r} top group, product action", inner.description()),
        points,
        images,
        None,
    )
}
