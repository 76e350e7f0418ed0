//! `PGL_2(q)` acting on the projective line by Moebius maps.
//!
//! Points `0..q` are field elements and point `q` is infinity.

use super::group::LabeledGroup;
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::sign::Sign;

pub const MAX_Q: u64 = 31;

fn is_odd_prime(q: u64) -> bool {
    q >= 3 && !q.is_multiple_of(2) && (3..).step_by(2).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

fn check_q(q: u64) -> Result<()> {
    if !is_odd_prime(q) || q > MAX_Q {
        return Err(Error::input(format!("q = {q} must be an odd prime <= {MAX_Q}")));
    }
    Ok(())
}

fn inv_mod(x: u64, q: u64) -> u64 {
    // Fermat; q is prime
    let mut acc = 1;
    let mut base = x % q;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    acc
}

fn is_square(x: u64, q: u64) -> bool {
    (1..q).any(|y| y * y % q == x % q)
}

fn primitive_root(q: u64) -> u64 {
    (2..q)
        .find(|&g| {
            let mut x = 1;
            (1..q - 1).all(|_| {
                x = x * g % q;
                x != 1
            })
        })
        .unwrap_or(1)
}

/// The Moebius map `x -> (ax + b)/(cx + d)` as a permutation of the `q + 1` points.
pub fn mobius(q: u64, [a, b, c, d]: [u64; 4]) -> Result<Perm> {
    check_q(q)?;
    let det = (a * d % q + q * q - b * c % q) % q;
    if det == 0 {
        return Err(Error::input("singular matrix"));
    }
    let inf = q;
    let images = (0..=q)
        .map(|x| {
            if x == inf {
                if c % q == 0 {
                    inf
                } else {
                    a * inv_mod(c, q) % q
                }
            } else {
                let den = (c * x + d) % q;
                if den == 0 {
                    inf
                } else {
                    (a * x + b) % q * inv_mod(den, q) % q
                }
            }
        })
        .map(|v| v as usize)
        .collect();
    Perm::from_images(images)
}

/// Every element of `PGL_2(q)`, labeled +1 exactly when its determinant is a nonzero
/// square (the kernel is `PSL_2(q)`).
pub fn pgl2(q: u64) -> Result<LabeledGroup> {
    check_q(q)?;
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    // normalized representatives: c = 0, d = 1, or c = 1
    for a in 1..q {
        for b in 0..q {
            elements.push(mobius(q, [a, b, 0, 1])?);
            labels.push(Sign::from_parity(!is_square(a, q)));
        }
    }
    for a in 0..q {
        for d in 0..q {
            for b in 0..q {
                let det = (a * d % q + q - b) % q;
                if det == 0 {
                    continue;
                }
                elements.push(mobius(q, [a, b, 1, d])?);
                labels.push(Sign::from_parity(!is_square(det, q)));
            }
        }
    }
    LabeledGroup::from_elements(q as usize + 1, elements, Some(labels))
}

/// Generators `x + 1`, `g x` (g a primitive root) and `-1/x`, with determinant labels.
pub fn pgl2_generators(q: u64) -> Result<Vec<(Perm, Sign)>> {
    check_q(q)?;
    let g = primitive_root(q);
    Ok(vec![
        (mobius(q, [1, 1, 0, 1])?, Sign::Plus),
        (mobius(q, [g, 0, 0, 1])?, Sign::Minus),
        (mobius(q, [0, q - 1, 1, 0])?, Sign::Plus),
    ])
}
