//! The grid poset `P_{k,n} = [k] x [n-k]` and 0/1 matrices on it.

use serde::Serialize;

use crate::error::{check_params, Result};
use crate::vector::Vector;

/// Product of a `k`-chain and an `(n-k)`-chain. Cells are 1-based `(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridPoset {
    k: usize,
    n: usize,
}

impl GridPoset {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        check_params(k, n)?;
        Ok(Self { k, n })
    }

    pub fn rows(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        self.n - self.k
    }

    pub fn len(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.rows()).flat_map(move |a| (1..=self.cols()).map(move |b| (a, b)))
    }

    pub fn le(&self, (a1, b1): (usize, usize), (a2, b2): (usize, usize)) -> bool {
        a1 <= a2 && b1 <= b2
    }

    /// Upper covers of `(a, b)`.
    pub fn covers(&self, (a, b): (usize, usize)) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(2);
        if b < self.cols() {
            out.push((a, b + 1));
        }
        if a < self.rows() {
            out.push((a + 1, b));
        }
        out
    }

    /// Cells sharing an edge with `(a, b)`.
    pub fn neighbors(&self, (a, b): (usize, usize)) -> Vec<(usize, usize)> {
        let mut out = self.covers((a, b));
        if b > 1 {
            out.push((a, b - 1));
        }
        if a > 1 {
            out.push((a - 1, b));
        }
        out
    }
}

/// A `k x (n-k)` matrix over `{0, 1}`, typically the characteristic vector
/// of an order filter of the grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IncidenceMatrix {
    k: usize,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn of_vector(v: &Vector) -> Self {
        let (k, n) = (v.k(), v.n());
        let rows = (1..=k)
            .map(|a| (1..=n - k).map(|b| v.char_value(a, b)).collect())
            .collect();
        Self { k, n, rows }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Value at 1-based `(a, b)`.
    pub fn get(&self, a: usize, b: usize) -> u8 {
        self.rows[a - 1][b - 1]
    }

    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == 1).count()
    }

    /// Rows weakly increase and columns weakly decrease downwards.
    pub fn is_filter(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|p| p[0].iter().zip(&p[1]).all(|(x, y)| x >= y));
        rows_ok && cols_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_vector_of_245() {
        let v = Vector::new(vec![2, 4, 5], 7).unwrap();
        let m = v.char_vector();
        assert_eq!(
            m.rows(),
            &[vec![0, 1, 1, 1], vec![0, 0, 1, 1], vec![0, 0, 1, 1]]
        );
        assert_eq!(m.ones(), 7);
        assert!(m.is_filter());
        assert_eq!(
            serde_json::to_string(&m).unwrap(),
            r#"{"k":3,"n":7,"rows":[[0,1,1,1],[0,0,1,1],[0,0,1,1]]}"#
        );
    }

    #[test]
    fn extreme_vectors() {
        let zero = Vector::max_vector(3, 7).unwrap().char_vector();
        assert_eq!(zero.ones(), 0);
        let full = Vector::min_vector(3, 7).unwrap().char_vector();
        assert_eq!(full.ones(), 12);
    }

    #[test]
    fn every_vector_gives_a_distinct_filter() {
        let all = Vector::all(3, 7).unwrap();
        let mut seen = std::collections::HashSet::new();
        for v in &all {
            let m = v.char_vector();
            assert!(m.is_filter());
            assert!(seen.insert(m));
        }
    }

    #[test]
    fn grid_covers() {
        let g = GridPoset::new(2, 5).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.covers((1, 1)), vec![(1, 2), (2, 1)]);
        assert_eq!(g.covers((2, 3)), vec![]);
        assert_eq!(g.neighbors((2, 2)).len(), 3);
        let n_covers: usize = g.cells().map(|c| g.covers(c).len()).sum();
        assert_eq!(n_covers, 7);
        assert!(g.le((1, 2), (2, 3)));
        assert!(!g.le((2, 1), (1, 3)));
    }
}
