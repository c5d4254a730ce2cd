//! Pairwise compatibility relations on `V_{k,n}`.
//!
//! The checked functions validate that both vectors share `(k, n)`. The
//! `raw` variants skip that check and are meant for inner loops.

use crate::error::Result;
use crate::vector::Vector;

fn arcs_cross(x: u32, y: u32, xp: u32, yp: u32) -> bool {
    (x < xp && xp < y && y < yp) || (xp < x && x < yp && yp < y)
}

fn arcs_nest(x: u32, y: u32, xp: u32, yp: u32) -> bool {
    (x < xp && yp < y) || (xp < x && y < yp)
}

pub fn is_noncrossing(i: &Vector, j: &Vector) -> Result<bool> {
    i.same_params(j)?;
    Ok(noncrossing_raw(i.entries(), j.entries()))
}

pub fn is_nonnesting(i: &Vector, j: &Vector) -> Result<bool> {
    i.same_params(j)?;
    Ok(nonnesting_raw(i.entries(), j.entries()))
}

pub fn is_weakly_separated(i: &Vector, j: &Vector) -> Result<bool> {
    i.same_params(j)?;
    Ok(weakly_separated_raw(i.entries(), j.entries()))
}

/// Only pairs `a < b` that agree strictly between `a` and `b` are tested.
pub fn noncrossing_raw(i: &[u32], j: &[u32]) -> bool {
    let k = i.len();
    for a in 0..k {
        for b in a + 1..k {
            if arcs_cross(i[a], i[b], j[a], j[b]) {
                return false;
            }
            if i[b] != j[b] {
                break;
            }
        }
    }
    true
}

pub fn nonnesting_raw(i: &[u32], j: &[u32]) -> bool {
    let k = i.len();
    for a in 0..k {
        for b in a + 1..k {
            if arcs_nest(i[a], i[b], j[a], j[b]) {
                return false;
            }
        }
    }
    true
}

/// `I \ J` and `J \ I` occupy two arcs of the circle `1..n`.
pub fn weakly_separated_raw(i: &[u32], j: &[u32]) -> bool {
    let (mut p, mut q) = (0, 0);
    let mut labels = Vec::with_capacity(i.len() + j.len());
    while p < i.len() || q < j.len() {
        match (i.get(p), j.get(q)) {
            (Some(x), Some(y)) if x == y => {
                p += 1;
                q += 1;
            }
            (Some(x), Some(y)) if x < y => {
                labels.push(true);
                p += 1;
            }
            (Some(_), None) => {
                labels.push(true);
                p += 1;
            }
            _ => {
                labels.push(false);
                q += 1;
            }
        }
    }
    if labels.is_empty() {
        return true;
    }
    let changes = (0..labels.len())
        .filter(|&t| labels[t] != labels[(t + 1) % labels.len()])
        .count();
    changes <= 2
}

/// `I <= J` entrywise.
pub fn componentwise_le(i: &[u32], j: &[u32]) -> bool {
    i.iter().zip(j).all(|(x, y)| x <= y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32], n: usize) -> Vector {
        Vector::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn noncrossing_examples() {
        assert!(is_noncrossing(&v(&[1, 4], 5), &v(&[2, 4], 5)).unwrap());
        assert!(is_noncrossing(&v(&[1, 3], 5), &v(&[1, 3], 5)).unwrap());
        assert!(!is_noncrossing(&v(&[1, 3], 5), &v(&[2, 4], 5)).unwrap());
        assert!(is_noncrossing(&v(&[1, 4, 5], 6), &v(&[2, 3, 6], 6)).unwrap());
    }

    #[test]
    fn nonnesting_examples() {
        assert!(!is_nonnesting(&v(&[1, 4], 5), &v(&[2, 3], 5)).unwrap());
        assert!(is_nonnesting(&v(&[1, 2], 5), &v(&[3, 5], 5)).unwrap());
        assert!(!is_nonnesting(&v(&[2, 3, 5], 6), &v(&[1, 4, 5], 6)).unwrap());
    }

    #[test]
    fn weak_separation_examples() {
        assert!(is_weakly_separated(&v(&[1, 4], 4), &v(&[2, 3], 4)).unwrap());
        assert!(!is_weakly_separated(&v(&[1, 3], 4), &v(&[2, 4], 4)).unwrap());
        assert!(!is_weakly_separated(&v(&[1, 4, 5], 6), &v(&[2, 3, 6], 6)).unwrap());
        assert!(is_weakly_separated(&v(&[1, 2], 5), &v(&[1, 2], 5)).unwrap());
    }

    #[test]
    fn mismatched_parameters() {
        assert!(is_noncrossing(&v(&[1, 2], 5), &v(&[1, 2], 6)).is_err());
        assert!(is_nonnesting(&v(&[1, 2], 5), &v(&[1, 2, 3], 5)).is_err());
        assert!(is_weakly_separated(&v(&[1, 2], 5), &v(&[1, 2], 4)).is_err());
    }
}
