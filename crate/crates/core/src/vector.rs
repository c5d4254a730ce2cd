//! Strictly increasing k-tuples in `[n]`, the vertices of every complex in
//! this crate.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{check_params, Error, Result};
use crate::grid::IncidenceMatrix;

/// An element of `V_{k,n}`: a strictly increasing tuple `(i_1, ..., i_k)`
/// with entries in `1..=n`.
///
/// Vectors of equal `(k, n)` order lexicographically by their entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    entries: Vec<u32>,
    n: usize,
}

impl Vector {
    pub fn new(entries: Vec<u32>, n: usize) -> Result<Self> {
        let k = entries.len();
        if k == 0 || k >= n {
            return Err(Error::InvalidVector {
                entries,
                n,
                reason: format!("length {k} is outside 1..={}", n.saturating_sub(1)),
            });
        }
        if entries.iter().any(|&e| e == 0 || e as usize > n) {
            return Err(Error::InvalidVector {
                entries,
                n,
                reason: format!("entries must lie in 1..={n}"),
            });
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidVector {
                entries,
                n,
                reason: "entries must be strictly increasing".into(),
            });
        }
        Ok(Self { entries, n })
    }

    /// Builds a vector from an unsorted set of distinct entries.
    pub(crate) fn from_unsorted(mut entries: Vec<u32>, n: usize) -> Self {
        entries.sort_unstable();
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        Self { entries, n }
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<u32>, n: usize) -> Self {
        debug_assert!(Self::new(entries.clone(), n).is_ok());
        Self { entries, n }
    }

    /// `(1, 2, ..., k)`, the bottom element of the componentwise order.
    pub fn min_vector(k: usize, n: usize) -> Result<Self> {
        check_params(k, n)?;
        Ok(Self {
            entries: (1..=k as u32).collect(),
            n,
        })
    }

    /// `(n-k+1, ..., n)`, whose characteristic vector is zero.
    pub fn max_vector(k: usize, n: usize) -> Result<Self> {
        check_params(k, n)?;
        Ok(Self {
            entries: ((n - k + 1) as u32..=n as u32).collect(),
            n,
        })
    }

    /// The cyclic interval `{c, c+1, ..., c+k-1}` taken modulo `n`, sorted.
    /// `start` is 1-based.
    pub fn cyclic_interval(start: usize, k: usize, n: usize) -> Result<Self> {
        check_params(k, n)?;
        let entries = (0..k).map(|i| ((start - 1 + i) % n + 1) as u32).collect();
        Ok(Self::from_unsorted(entries, n))
    }

    /// The `n` cyclic intervals, lex-sorted.
    pub fn cyclic_intervals(k: usize, n: usize) -> Result<Vec<Self>> {
        let mut out = (1..=n)
            .map(|s| Self::cyclic_interval(s, k, n))
            .collect::<Result<Vec<_>>>()?;
        out.sort();
        Ok(out)
    }

    /// All of `V_{k,n}` in lexicographic order.
    pub fn all(k: usize, n: usize) -> Result<Vec<Self>> {
        check_params(k, n)?;
        let mut out = Vec::new();
        let mut cur: Vec<u32> = (1..=k as u32).collect();
        loop {
            out.push(Self {
                entries: cur.clone(),
                n,
            });
            // advance to the lex successor
            let mut a = k;
            loop {
                if a == 0 {
                    return Ok(out);
                }
                a -= 1;
                if (cur[a] as usize) < n - (k - 1 - a) {
                    cur[a] += 1;
                    for b in a + 1..k {
                        cur[b] = cur[b - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn k(&self) -> usize {
        self.entries.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry `i_a` for a 1-based row index `a`.
    pub fn entry(&self, a: usize) -> u32 {
        self.entries[a - 1]
    }

    pub fn contains(&self, x: u32) -> bool {
        self.entries.binary_search(&x).is_ok()
    }

    pub fn is_cyclic_interval(&self) -> bool {
        let n = self.n as u32;
        // the complement of a cyclic interval is a cyclic interval, so count
        // the runs of consecutive members around the circle
        let mut runs = 0;
        for x in 1..=n {
            let prev = if x == 1 { n } else { x - 1 };
            if self.contains(x) && !self.contains(prev) {
                runs += 1;
            }
        }
        runs == 1
    }

    /// Column offsets `c_a = i_a - a` of the monotone lattice path; row `a`
    /// of the characteristic matrix has `c_a` zeros followed by ones.
    pub fn path_offsets(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(a, &e)| e as usize - (a + 1))
    }

    /// Value of the characteristic vector at 1-based cell `(a, b)`.
    pub fn char_value(&self, a: usize, b: usize) -> u8 {
        u8::from(b + a > self.entries[a - 1] as usize)
    }

    pub fn char_vector(&self) -> IncidenceMatrix {
        IncidenceMatrix::of_vector(self)
    }

    /// `[n] \ I`, a vector of `V_{n-k,n}`.
    pub fn complement(&self) -> Vector {
        let entries = (1..=self.n as u32).filter(|&x| !self.contains(x)).collect();
        Vector { entries, n: self.n }
    }

    /// Image under `x -> n+1-x`.
    pub fn reflect(&self) -> Vector {
        let n = self.n as u32;
        let entries = self.entries.iter().rev().map(|&x| n + 1 - x).collect();
        Vector { entries, n: self.n }
    }

    /// Image under `x -> ((x - 1 + s) mod n) + 1`.
    pub fn cyclic_shift(&self, s: i64) -> Vector {
        let n = self.n as i64;
        let entries = self
            .entries
            .iter()
            .map(|&x| ((x as i64 - 1 + s).rem_euclid(n) + 1) as u32)
            .collect();
        Vector::from_unsorted(entries, self.n)
    }

    pub(crate) fn same_params(&self, other: &Vector) -> Result<()> {
        if self.k() != other.k() || self.n != other.n {
            return Err(Error::ParameterMismatch {
                k1: self.k(),
                n1: self.n,
                k2: other.k(),
                n2: other.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Serialized as a bare integer array, e.g. `[2,4,5]`.
impl Serialize for Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32], n: usize) -> Vector {
        Vector::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(Vector::new(vec![2, 2], 5).is_err());
        assert!(Vector::new(vec![0, 2], 5).is_err());
        assert!(Vector::new(vec![1, 6], 5).is_err());
        assert!(Vector::new(vec![], 5).is_err());
        assert!(Vector::new(vec![1, 2, 3, 4, 5], 5).is_err());
    }

    #[test]
    fn enumerates_all() {
        let all = Vector::all(3, 6).unwrap();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[0], v(&[1, 2, 3], 6));
        assert_eq!(all[19], v(&[4, 5, 6], 6));
        assert_eq!(Vector::all(1, 4).unwrap().len(), 4);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(v(&[1, 3], 5).complement(), v(&[2, 4, 5], 5));
        assert_eq!(v(&[1, 2, 3], 7).complement(), v(&[4, 5, 6, 7], 7));
        let i = v(&[2, 5, 6], 8);
        assert_eq!(i.complement().complement(), i);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(v(&[1, 2], 5).reflect(), v(&[4, 5], 5));
        assert_eq!(v(&[2, 4], 5).reflect(), v(&[2, 4], 5));
        let i = v(&[1, 3, 4], 7);
        assert_eq!(i.reflect().reflect(), i);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(v(&[1, 4, 5], 6).cyclic_shift(2), v(&[1, 3, 6], 6));
        assert_eq!(v(&[1, 4, 5], 6).cyclic_shift(6), v(&[1, 4, 5], 6));
        assert_eq!(v(&[1, 2, 3], 6).cyclic_shift(1), v(&[2, 3, 4], 6));
        assert_eq!(v(&[1, 2, 3], 6).cyclic_shift(-1), v(&[1, 2, 6], 6));
    }

    #[test]
    fn cyclic_intervals() {
        let iv = Vector::cyclic_intervals(2, 5).unwrap();
        let expect: Vec<Vector> = [[1, 2], [1, 5], [2, 3], [3, 4], [4, 5]]
            .iter()
            .map(|e| v(e, 5))
            .collect();
        assert_eq!(iv, expect);
        assert!(iv.iter().all(Vector::is_cyclic_interval));
        assert!(!v(&[1, 3], 5).is_cyclic_interval());
        assert!(v(&[1, 5, 6], 6).is_cyclic_interval());
        assert!(!v(&[1, 4, 6], 6).is_cyclic_interval());
    }

    #[test]
    fn json_is_a_bare_array() {
        assert_eq!(serde_json::to_string(&v(&[2, 4, 5], 7)).unwrap(), "[2,4,5]");
    }
}
