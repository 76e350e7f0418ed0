//! Group specification strings such as `sn:6/subsets:2`, `pgl2:7`, `sn:3/wreath:2` or
//! `gens:(1,2)(3,4);!(1,2,3,4,5)`.

use std::fmt;
use std::str::FromStr;

use super::action::{act_on_subsets, act_on_uniform_partitions, product_action_wreath, InducedAction};
use super::group::{alternating_group, symmetric_group, LabeledGroup};
use super::perm::Perm;
use super::pgl::pgl2;
use crate::error::{Error, Result};
use crate::sign::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseGroup {
    Symmetric(usize),
    Alternating(usize),
    Pgl2(u64),
    /// Explicit generators; a `!` prefix labels a generator -1.
    Generators { degree: usize, gens: Vec<(Perm, Sign)> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionSuffix {
    Subsets(usize),
    Partitions { r: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub base: BaseGroup,
    pub action: Option<ActionSuffix>,
    pub wreath: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelChoice {
    /// Parity of each element on the base group's natural domain.
    Sgn,
    /// The family's own labeling: parity for `sn`, determinant squareness for `pgl2`,
    /// `!` marks for `gens`, none for `an`.
    #[default]
    Auto,
}

impl FromStr for LabelChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sgn" => Ok(LabelChoice::Sgn),
            "auto" => Ok(LabelChoice::Auto),
            _ => Err(Error::input(format!("unknown label choice {s:?}"))),
        }
    }
}

fn number<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::input(format!("bad {what} {s:?}")))
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pieces = s.split('/');
        let head = pieces.next().unwrap_or_default();
        let (kind, arg) = head
            .split_once(':')
            .ok_or_else(|| Error::input(format!("group spec {s:?} lacks a ':'")))?;
        let base = match kind {
            "sn" => BaseGroup::Symmetric(number(arg, "degree")?),
            "an" => BaseGroup::Alternating(number(arg, "degree")?),
            "pgl2" => BaseGroup::Pgl2(number(arg, "field size")?),
            "gens" => {
                let degree = Perm::max_point_in(arg);
                let gens = arg
                    .split(';')
                    .map(str::trim)
                    .filter(|g| !g.is_empty())
                    .map(|g| match g.strip_prefix('!') {
                        Some(body) => Ok((Perm::parse_cycles(body, degree)?, Sign::Minus)),
                        None => Ok((Perm::parse_cycles(g, degree)?, Sign::Plus)),
                    })
                    .collect::<Result<Vec<_>>>()?;
                BaseGroup::Generators { degree, gens }
            }
            _ => return Err(Error::input(format!("unknown group family {kind:?}"))),
        };
        if matches!(base, BaseGroup::Symmetric(0) | BaseGroup::Alternating(0)) {
            return Err(Error::input("degree must be at least 1"));
        }
        let mut spec = GroupSpec {
            base,
            action: None,
            wreath: None,
        };
        for piece in pieces {
            let (kind, arg) = piece
                .split_once(':')
                .ok_or_else(|| Error::input(format!("action suffix {piece:?} lacks a ':'")))?;
            match kind {
                "subsets" | "partitions" if spec.action.is_some() || spec.wreath.is_some() => {
                    return Err(Error::input("at most one subsets/partitions suffix, before any wreath"));
                }
                "subsets" => spec.action = Some(ActionSuffix::Subsets(number(arg, "k")?)),
                "partitions" => {
                    let (r, s) = arg
                        .split_once('x')
                        .ok_or_else(|| Error::input(format!("partitions suffix {arg:?} is not <r>x<s>")))?;
                    spec.action = Some(ActionSuffix::Partitions {
                        r: number(r, "r")?,
                        s: number(s, "s")?,
                    });
                }
                "wreath" if spec.wreath.is_some() => return Err(Error::input("at most one wreath suffix")),
                "wreath" => spec.wreath = Some(number(arg, "r")?),
                _ => return Err(Error::input(format!("unknown action suffix {kind:?}"))),
            }
        }
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            BaseGroup::Symmetric(n) => write!(f, "sn:{n}")?,
            BaseGroup::Alternating(n) => write!(f, "an:{n}")?,
            BaseGroup::Pgl2(q) => write!(f, "pgl2:{q}")?,
            BaseGroup::Generators { gens, .. } => {
                f.write_str("gens:")?;
                for (i, (g, s)) in gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(";")?;
                    }
                    if *s == Sign::Minus {
                        f.write_str("!")?;
                    }
                    write!(f, "{g}")?;
                }
            }
        }
        match self.action {
            Some(ActionSuffix::Subsets(k)) => write!(f, "/subsets:{k}")?,
            Some(ActionSuffix::Partitions { r, s }) => write!(f, "/partitions:{r}x{s}")?,
            None => {}
        }
        if let Some(r) = self.wreath {
            write!(f, "/wreath:{r}")?;
        }
        Ok(())
    }
}

impl GroupSpec {
    pub fn base_group(&self, labels: LabelChoice) -> Result<LabeledGroup> {
        let group = match &self.base {
            BaseGroup::Symmetric(n) => symmetric_group(*n)?,
            BaseGroup::Alternating(n) => alternating_group(*n)?,
            BaseGroup::Pgl2(q) => pgl2(*q)?,
            BaseGroup::Generators { degree, gens } => {
                let perms: Vec<Perm> = gens.iter().map(|g| g.0.clone()).collect();
                let signs: Vec<Sign> = gens.iter().map(|g| g.1).collect();
                LabeledGroup::closure(*degree, &perms, Some(&signs))?
            }
        };
        Ok(match labels {
            LabelChoice::Sgn => group.with_parity_labels(),
            LabelChoice::Auto => group,
        })
    }

    /// Builds the acting group and its action on points.
    pub fn build(&self, labels: LabelChoice) -> Result<InducedAction> {
        let group = self.base_group(labels)?;
        let action = match self.action {
            None => InducedAction::natural(&group),
            Some(ActionSuffix::Subsets(k)) => act_on_subsets(&group, k)?,
            Some(ActionSuffix::Partitions { r, s }) => act_on_uniform_partitions(&group, r, s)?,
        };
        match self.wreath {
            None => Ok(action),
            Some(r) => product_action_wreath(&action, r),
        }
    }

    /// `(n, k)` when this is `S_n` on k-subsets (k = 1 for the natural action).
    pub fn symmetric_subsets(&self) -> Option<(usize, usize)> {
        match (&self.base, self.action) {
            (BaseGroup::Symmetric(n), Some(ActionSuffix::Subsets(k))) => Some((*n, k)),
            (BaseGroup::Symmetric(n), None) => Some((*n, 1)),
            _ => None,
        }
    }

    /// `(n, r, s)` when this is `S_n` on uniform set partitions.
    pub fn symmetric_partitions(&self) -> Option<(usize, usize, usize)> {
        match (&self.base, self.action) {
            (BaseGroup::Symmetric(n), Some(ActionSuffix::Partitions { r, s })) => Some((*n, r, s)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in [
            "sn:6",
            "an:5",
            "pgl2:7",
            "sn:6/subsets:2",
            "sn:6/partitions:3x2",
            "sn:3/wreath:2",
            "sn:5/subsets:2/wreath:2",
            "gens:(1,2)(3,4);!(1,2,3,4,5)",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn parse_errors() {
        for s in [
            "sn",
            "sn:x",
            "sn:0",
            "foo:3",
            "sn:4/subsets",
            "sn:4/partitions:2",
            "sn:4/wreath:2/subsets:1",
            "sn:4/subsets:1/partitions:2x2",
            "gens:(1,2",
        ] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn build_examples() {
        let a = "sn:4/subsets:2".parse::<GroupSpec>().unwrap().build(LabelChoice::Auto).unwrap();
        assert_eq!((a.degree(), a.group_order()), (6, 24));
        let w = "sn:3/wreath:2".parse::<GroupSpec>().unwrap().build(LabelChoice::Auto).unwrap();
        assert_eq!((w.degree(), w.group_order()), (9, 72));
        let g = "gens:(1,2)(3,4);!(1,2,3,4,5)".parse::<GroupSpec>();
        // (1,2,3,4,5) is even, so labeling it -1 is not a homomorphism
        assert!(matches!(g.unwrap().build(LabelChoice::Auto), Err(Error::Input(_))));
        let g = "gens:!(1,2);(1,2,3)".parse::<GroupSpec>().unwrap().build(LabelChoice::Auto).unwrap();
        assert_eq!(g.group_order(), 6);
        assert_eq!(g.kernel().unwrap().len(), 3);
        let an = "an:5".parse::<GroupSpec>().unwrap().build(LabelChoice::Auto).unwrap();
        assert!(an.labels().is_none());
        assert_eq!(an.group_order(), 60);
    }

    #[test]
    fn spec_classification() {
        let s: GroupSpec = "sn:6/subsets:2".parse().unwrap();
        assert_eq!(s.symmetric_subsets(), Some((6, 2)));
        let s: GroupSpec = "sn:6/partitions:3x2".parse().unwrap();
        assert_eq!(s.symmetric_partitions(), Some((6, 3, 2)));
        let s: GroupSpec = "pgl2:7".parse().unwrap();
        assert_eq!(s.symmetric_subsets(), None);
    }
}
