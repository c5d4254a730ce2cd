//! The weak-separation complex: its description through cyclic shifts of
//! the noncrossing relation, symmetry checks and an Euler-characteristic
//! probe of its topology.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build_complex, ComplexKind, Method};
use crate::error::{Error, Result};
use crate::predicates::{noncrossing_raw, weakly_separated_raw};
use crate::vector::Vector;

/// A pair on which two relations disagree, lex-least among all such pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PairCounterexample {
    pub i: Vector,
    pub j: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairScanReport {
    pub pairs_checked: usize,
    pub counterexample: Option<PairCounterexample>,
}

impl PairScanReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Runs `bad` over all unordered pairs `I < J` of `V_{k,n}` and reports
/// the lex-least pair where it returns true.
fn scan_pairs(
    k: usize,
    n: usize,
    bad: impl Fn(&Vector, &Vector) -> bool + Sync,
) -> Result<PairScanReport> {
    let all = Vector::all(k, n)?;
    let hit = (0..all.len()).into_par_iter().find_map_first(|p| {
        (p + 1..all.len())
            .find(|&q| bad(&all[p], &all[q]))
            .map(|q| PairCounterexample {
                i: all[p].clone(),
                j: all[q].clone(),
            })
    });
    Ok(PairScanReport {
        pairs_checked: all.len() * all.len().saturating_sub(1) / 2,
        counterexample: hit,
    })
}

/// Smallest shift `s` in `0..n` at which `I + s` and `J + s` cross.
pub fn first_crossing_shift(i: &Vector, j: &Vector) -> Result<Option<usize>> {
    i.same_params(j)?;
    Ok((0..i.n()).find(|&s| {
        let (x, y) = (i.cyclic_shift(s as i64), j.cyclic_shift(s as i64));
        !noncrossing_raw(x.entries(), y.entries())
    }))
}

/// Weak separation agrees with being noncrossing after every cyclic shift.
pub fn sep_equals_cyclic_intersection(k: usize, n: usize) -> Result<PairScanReport> {
    scan_pairs(k, n, |i, j| {
        let sep = weakly_separated_raw(i.entries(), j.entries());
        let all_shifts = (0..n as i64)
            .all(|s| noncrossing_raw(i.cyclic_shift(s).entries(), j.cyclic_shift(s).entries()));
        sep != all_shifts
    })
}

/// Weakly separated pairs are noncrossing.
pub fn sep_within_nc(k: usize, n: usize) -> Result<PairScanReport> {
    scan_pairs(k, n, |i, j| {
        weakly_separated_raw(i.entries(), j.entries()) && !noncrossing_raw(i.entries(), j.entries())
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralReport {
    pub kind: ComplexKind,
    /// Lex-least pair whose compatibility changes under `x -> x+1`.
    pub shift_counterexample: Option<PairCounterexample>,
    /// Lex-least pair whose compatibility changes under `x -> n+1-x`.
    pub reflection_counterexample: Option<PairCounterexample>,
}

impl DihedralReport {
    pub fn shift_invariant(&self) -> bool {
        self.shift_counterexample.is_none()
    }

    pub fn reflection_invariant(&self) -> bool {
        self.reflection_counterexample.is_none()
    }

    pub fn holds(&self) -> bool {
        self.shift_invariant() && self.reflection_invariant()
    }
}

pub fn dihedral_invariance(k: usize, n: usize, kind: ComplexKind) -> Result<DihedralReport> {
    let shift = scan_pairs(k, n, |i, j| {
        kind.compatible(i, j) != kind.compatible(&i.cyclic_shift(1), &j.cyclic_shift(1))
    })?;
    let reflection = scan_pairs(k, n, |i, j| {
        kind.compatible(i, j) != kind.compatible(&i.reflect(), &j.reflect())
    })?;
    Ok(DihedralReport {
        kind,
        shift_counterexample: shift.counterexample,
        reflection_counterexample: reflection.counterexample,
    })
}

pub fn sep_dihedral_invariance(k: usize, n: usize) -> Result<bool> {
    Ok(dihedral_invariance(k, n, ComplexKind::Sep)?.holds())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    pub pure: bool,
    pub facet_size: usize,
    pub euler_reduced: i64,
    pub euler_expected_sphere: i64,
}

impl TopologyReport {
    pub fn agrees(&self) -> bool {
        self.pure && self.euler_reduced == self.euler_expected_sphere
    }
}

/// Purity of the weak-separation complex and the Euler characteristic of
/// its reduced version, next to that of the `(n-4)`-sphere.
pub fn sep_topology_probe(k: usize, n: usize) -> Result<TopologyReport> {
    let complex = build_complex(k, n, ComplexKind::Sep)?;
    let facets = complex.enumerate_facets(Method::Clique)?;
    let expected = complex.expected_facet_size();
    let pure = facets.iter().all(|f| f.len() == expected);
    let facet_size = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    let chi = complex.reduced()?.euler_characteristic();
    let euler_reduced = chi
        .to_i64()
        .ok_or_else(|| Error::ResourceLimit(format!("Euler characteristic {chi} overflows")))?;
    let euler_expected_sphere = if n.is_multiple_of(2) { 2 } else { 0 };
    Ok(TopologyReport {
        pure,
        facet_size,
        euler_reduced,
        euler_expected_sphere,
    })
}

/// Every facet of the weak-separation complex is a face of the noncrossing
/// complex.
pub fn sep_facets_in_nc(k: usize, n: usize) -> Result<bool> {
    let sep = build_complex(k, n, ComplexKind::Sep)?;
    let nc = build_complex(k, n, ComplexKind::Nc)?;
    let facets = sep.enumerate_facets(Method::Clique)?;
    Ok(facets
        .iter()
        .all(|f| nc.set_of(f.members()).is_ok_and(|s| nc.is_clique(s))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32], n: usize) -> Vector {
        Vector::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn cyclic_intersection_small() {
        for (k, n) in [(2, 5), (3, 6)] {
            assert!(sep_equals_cyclic_intersection(k, n).unwrap().holds());
            assert!(sep_within_nc(k, n).unwrap().holds());
        }
    }

    #[test]
    fn witness_pair() {
        let (i, j) = (v(&[1, 4, 5], 6), v(&[2, 3, 6], 6));
        assert!(noncrossing_raw(i.entries(), j.entries()));
        let (x, y) = (i.cyclic_shift(2), j.cyclic_shift(2));
        assert!(!noncrossing_raw(x.entries(), y.entries()));
        assert_eq!(first_crossing_shift(&i, &j).unwrap(), Some(1));
        assert!(!weakly_separated_raw(i.entries(), j.entries()));
    }

    #[test]
    fn symmetry() {
        assert!(sep_dihedral_invariance(2, 5).unwrap());
        assert!(sep_dihedral_invariance(3, 6).unwrap());
        let nc = dihedral_invariance(3, 6, ComplexKind::Nc).unwrap();
        assert!(!nc.shift_invariant());
    }

    #[test]
    fn topology() {
        let r = sep_topology_probe(2, 5).unwrap();
        assert!(r.pure);
        assert_eq!((r.euler_reduced, r.euler_expected_sphere), (0, 0));
        let r = sep_topology_probe(3, 6).unwrap();
        assert!(r.pure);
        assert_eq!(r.facet_size, 10);
        assert_eq!((r.euler_reduced, r.euler_expected_sphere), (2, 2));
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"pure":true,"facet_size":10,"euler_reduced":2,"euler_expected_sphere":2}"#
        );
    }

    #[test]
    fn sep_facets_are_nc_faces() {
        assert!(sep_facets_in_nc(3, 6).unwrap());
    }
}
