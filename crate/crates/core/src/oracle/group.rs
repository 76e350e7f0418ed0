use std::collections::{HashMap, VecDeque};

use rand::Rng;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::sign::Sign;

/// Default bound on the order of groups built by closure.
pub const DEFAULT_MAX_ORDER: usize = 1_000_000;

/// A finite permutation group stored as its full element list, with an optional
/// homomorphism to {+1, -1}.
#[derive(Debug, Clone)]
pub struct LabeledGroup {
    degree: usize,
    elements: Vec<Perm>,
    labels: Option<Vec<Sign>>,
    index: HashMap<Perm, usize>,
}

impl LabeledGroup {
    pub fn trivial(degree: usize) -> Self {
        Self::closure(degree, &[], None).expect("trivial group")
    }

    /// Closes `generators` under composition. Labels, when given, are propagated
    /// multiplicatively; reaching an element with two different labels is an input error.
    pub fn closure(degree: usize, generators: &[Perm], labels: Option<&[Sign]>) -> Result<Self> {
        Self::closure_bounded(degree, generators, labels, DEFAULT_MAX_ORDER)
    }

    pub fn closure_bounded(
        degree: usize,
        generators: &[Perm],
        labels: Option<&[Sign]>,
        max_order: usize,
    ) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        if let Some(l) = labels {
            if l.len() != generators.len() {
                return Err(Error::input("one label per generator is required"));
            }
        }
        let gen_label = |i: usize| labels.map_or(Sign::Plus, |l| l[i]);
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut signs = vec![Sign::Plus];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (gi, g) in generators.iter().enumerate() {
                let prod = elements[e].then(g);
                let sign = signs[e] * gen_label(gi);
                match index.get(&prod) {
                    Some(&j) => {
                        if signs[j] != sign {
                            return Err(Error::input(format!(
                                "labels are not a homomorphism: {prod} reached with both signs"
                            )));
                        }
                    }
                    None => {
                        if elements.len() >= max_order {
                            return Err(Error::capacity(format!(
                                "group order exceeds the bound {max_order}"
                            )));
                        }
                        index.insert(prod.clone(), elements.len());
                        queue.push_back(elements.len());
                        elements.push(prod);
                        signs.push(sign);
                    }
                }
            }
        }
        Ok(LabeledGroup {
            degree,
            elements,
            labels: labels.map(|_| signs),
            index,
        })
    }

    /// Wraps an explicit element list. Elements must be distinct, of the given degree,
    /// and include the identity; closure is the caller's responsibility.
    pub fn from_elements(degree: usize, elements: Vec<Perm>, labels: Option<Vec<Sign>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != elements.len() {
                return Err(Error::input("one label per element is required"));
            }
        }
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if e.degree() != degree {
                return Err(Error::input(format!("element {e} has the wrong degree")));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::input(format!("element {e} listed twice")));
            }
        }
        let id = Perm::identity(degree);
        match index.get(&id) {
            None => return Err(Error::input("element list lacks the identity")),
            Some(&i) => {
                if labels.as_ref().is_some_and(|l| l[i] != Sign::Plus) {
                    return Err(Error::input("identity labeled -1"));
                }
            }
        }
        Ok(LabeledGroup {
            degree,
            elements,
            labels,
            index,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn labels(&self) -> Option<&[Sign]> {
        self.labels.as_deref()
    }

    pub fn position(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Replaces the labels by the parity of each element on the natural domain.
    pub fn with_parity_labels(mut self) -> Self {
        self.labels = Some(self.elements.iter().map(Perm::parity).collect());
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    /// Indices of the elements labeled +1 (all elements when unlabeled).
    pub fn kernel(&self) -> Vec<usize> {
        match &self.labels {
            Some(l) => (0..self.order()).filter(|&i| l[i].is_plus()).collect(),
            None => (0..self.order()).collect(),
        }
    }

    /// Samples random pairs and checks `label(gh) = label(g) label(h)` and closure.
    pub fn spot_check_labels<R: Rng>(&self, samples: usize, rng: &mut R) -> Result<()> {
        let Some(labels) = &self.labels else {
            return Ok(());
        };
        for _ in 0..samples {
            let a = rng.gen_range(0..self.order());
            let b = rng.gen_range(0..self.order());
            let prod = self.elements[a].then(&self.elements[b]);
            let Some(c) = self.position(&prod) else {
                return Err(Error::consistency(format!("{prod} escaped the element list")));
            };
            if labels[c] != labels[a] * labels[b] {
                return Err(Error::input(format!(
                    "labels are not a homomorphism at ({}, {})",
                    self.elements[a], self.elements[b]
                )));
            }
        }
        Ok(())
    }

    /// Checks that the kernel of the labels has index exactly 2.
    pub fn check_index_two(&self) -> Result<()> {
        let k = self.kernel().len();
        if self.labels.is_none() || 2 * k != self.order() {
            return Err(Error::input(format!(
                "label kernel has order {k} in a group of order {}",
                self.order()
            )));
        }
        Ok(())
    }
}

/// Generators of `S_n` on `{0..n-1}`: a transposition and an n-cycle.
pub fn symmetric_generators(n: usize) -> Vec<Perm> {
    if n < 2 {
        return Vec::new();
    }
    let mut t: Vec<usize> = (0..n).collect();
    t.swap(0, 1);
    let c: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    vec![Perm::from_images(t).unwrap(), Perm::from_images(c).unwrap()]
}

/// Generators of `A_n`: a 3-cycle and an (n or n-1)-cycle of even parity.
pub fn alternating_generators(n: usize) -> Vec<Perm> {
    if n < 3 {
        return Vec::new();
    }
    let three: Vec<usize> = (0..n).map(|i| if i < 3 { (i + 1) % 3 } else { i }).collect();
    let long: Vec<usize> = if n % 2 == 1 {
        (0..n).map(|i| (i + 1) % n).collect()
    } else {
        (0..n).map(|i| if i == 0 { 0 } else { i % (n - 1) + 1 }).collect()
    };
    vec![Perm::from_images(three).unwrap(), Perm::from_images(long).unwrap()]
}

pub fn symmetric_group(n: usize) -> Result<LabeledGroup> {
    let gens = symmetric_generators(n);
    let labels: Vec<Sign> = gens.iter().map(Perm::parity).collect();
    LabeledGroup::closure(n, &gens, Some(&labels))
}

pub fn alternating_group(n: usize) -> Result<LabeledGroup> {
    LabeledGroup::closure(n, &alternating_generators(n), None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn s4_with_odd_generators() {
        let t = Perm::parse_cycles("(1,2)", 4).unwrap();
        let c = Perm::parse_cycles("(1,2,3,4)", 4).unwrap();
        let g = LabeledGroup::closure(4, &[t, c], Some(&[Sign::Minus, Sign::Minus])).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.kernel().len(), 12);
        g.check_index_two().unwrap();
        for (e, l) in g.elements().iter().zip(g.labels().unwrap()) {
            assert_eq!(e.parity(), *l);
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        g.spot_check_labels(200, &mut rng).unwrap();
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = LabeledGroup::closure(5, &[], None).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.elements()[0].is_identity());
    }

    #[test]
    fn inconsistent_labels_rejected() {
        // (1,2,3) labeled -1 would force the identity to -1
        let c = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        let err = LabeledGroup::closure(3, &[c], Some(&[Sign::Minus])).unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn order_bound() {
        let err = LabeledGroup::closure_bounded(6, &symmetric_generators(6), None, 100).unwrap_err();
        assert!(matches!(err, Error::Capacity(_)));
    }

    #[test]
    fn alternating_orders() {
        for n in 1..=7 {
            let a = alternating_group(n).unwrap();
            let s = symmetric_group(n).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(s.order(), fact);
            assert_eq!(a.order(), if n < 2 { 1 } else { fact / 2 });
            assert!(a.elements().iter().all(|e| e.parity() == Sign::Plus));
        }
    }

    #[test]
    fn from_elements_validation() {
        let id = Perm::identity(2);
        let sw = Perm::parse_cycles("(1,2)", 2).unwrap();
        assert!(LabeledGroup::from_elements(2, vec![id.clone(), sw.clone()], None).is_ok());
        assert!(LabeledGroup::from_elements(2, vec![sw.clone()], None).is_err());
        assert!(LabeledGroup::from_elements(2, vec![id.clone(), id], None).is_err());
    }
}
