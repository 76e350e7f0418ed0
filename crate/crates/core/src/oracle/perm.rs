use std::fmt;

use crate::error::{Error, Result};
use crate::sign::Sign;

/// A permutation of `{0, .., d-1}`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Perm {
            images: images.into_iter().map(|i| i as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Perm::from_images(images.iter().map(|&i| i as usize).collect()).is_ok());
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses 1-based cycle notation such as `(1,2)(3,4,5)`. The empty string and `()`
    /// are the identity.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut rest = s.trim();
        let mut moved = vec![false; degree];
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])));
            let Some((cycle, tail)) = body else {
                return Err(Error::input(format!("malformed cycle notation {s:?}")));
            };
            rest = tail.trim_start();
            if cycle.trim().is_empty() {
                continue;
            }
            let points = cycle
                .split(',')
                .map(|t| match t.trim().parse::<usize>() {
                    Ok(p) if p >= 1 && p <= degree => Ok(p - 1),
                    _ => Err(Error::input(format!("bad point {t:?} in {s:?} (degree {degree})"))),
                })
                .collect::<Result<Vec<_>>>()?;
            for &p in &points {
                if std::mem::replace(&mut moved[p], true) {
                    return Err(Error::input(format!("point {} repeated in {s:?}", p + 1)));
                }
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()];
            }
        }
        Perm::from_images(images)
    }

    /// Largest point mentioned in 1-based cycle notation.
    pub fn max_point_in(s: &str) -> usize {
        s.split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }

    pub fn parity(&self) -> Sign {
        let cycles = self.cycle_lengths().len();
        Sign::from_parity((self.degree() - cycles) % 2 == 1)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            any = true;
            f.write_str("(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    f.write_str(",")?;
                }
                first = false;
                write!(f, "{}", p + 1)?;
                p = self.apply(p);
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse_cycles("(1,2)(3,4,5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 0, 3, 4, 2]);
        assert_eq!(p.to_string(), "(1,2)(3,4,5)");
        assert_eq!(p.parity(), Sign::Minus);
        assert!(Perm::parse_cycles("", 3).unwrap().is_identity());
        assert!(Perm::parse_cycles("()", 3).unwrap().is_identity());
        assert!(Perm::parse_cycles("(1,2", 3).is_err());
        assert!(Perm::parse_cycles("(1,4)", 3).is_err());
        assert!(Perm::parse_cycles("(1,2)(2,3)", 3).is_err());
        assert_eq!(Perm::max_point_in("(1,2)(3,14)"), 14);
    }

    #[test]
    fn composition_order() {
        let a = Perm::parse_cycles("(1,2)", 3).unwrap();
        let b = Perm::parse_cycles("(2,3)", 3).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
    }
}
