//! Linear certificates on the grid `[k] x [n-k]`: bending vectors normal to
//! ridges, the graded weight, cubical faces of the order polytope, cube
//! triangulations and row profiles of facet tableaux.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bitset::{self, Set};
use crate::complex::{build_complex, maximal_cliques, ComplexKind, Facet, Method};
use crate::error::{Error, Result};
use crate::grid::GridPoset;
use crate::predicates::{noncrossing_raw, nonnesting_raw};
use crate::tableaux::{phi_nc, summing_tableau, Mode};
use crate::tamari::{ridge_completions, TamariDigraph};
use crate::vector::Vector;

/// A `{-1, 0, 1}` matrix on the grid attached to a segment `a1..a2` of a
/// vector's path. Serializes as its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BendingVector {
    values: Vec<Vec<i32>>,
    source: Vector,
    rows: (usize, usize),
}

impl Serialize for BendingVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

impl BendingVector {
    pub fn values(&self) -> &[Vec<i32>] {
        &self.values
    }

    /// Value at 1-based `(a, b)`.
    pub fn get(&self, a: usize, b: usize) -> i32 {
        self.values[a - 1][b - 1]
    }

    pub fn source(&self) -> &Vector {
        &self.source
    }

    pub fn segment(&self) -> (usize, usize) {
        self.rows
    }

    pub fn sum(&self) -> i64 {
        self.values.iter().flatten().map(|&x| i64::from(x)).sum()
    }

    /// `<b, chi_J>`.
    pub fn dot_vector(&self, j: &Vector) -> i64 {
        let mut total = 0i64;
        for (a, row) in self.values.iter().enumerate() {
            for (b, &x) in row.iter().enumerate() {
                if x != 0 && j.char_value(a + 1, b + 1) == 1 {
                    total += i64::from(x);
                }
            }
        }
        total
    }

    pub fn dot_objective(&self) -> i64 {
        ObjectivePoint::new(self.values.len(), self.source.n()).dot(&self.values)
    }
}

/// Builds `b_(I, X)` for the segment `X = (i_{a1}, ..., i_{a2})`.
pub fn bending_vector(i: &Vector, a1: usize, a2: usize) -> Result<BendingVector> {
    let (k, n) = (i.k(), i.n());
    if !(1 <= a1 && a1 < a2 && a2 <= k) {
        return Err(Error::Precondition(format!(
            "segment rows {a1}..{a2} invalid for k={k}"
        )));
    }
    let m = n - k;
    if i.entry(a2) as usize >= a2 + m {
        return Err(Error::Precondition(format!(
            "segment {a1}..{a2} of {i} meets the east boundary"
        )));
    }
    let c: Vec<usize> = i.path_offsets().collect();
    let off = |a: usize| c[a - 1];
    let mut values = vec![vec![0i32; m]; k];
    let mut put = |a: usize, b: usize, x: i32| {
        if b >= 1 {
            values[a - 1][b - 1] += x;
        }
    };
    put(a1, off(a1), 1);
    put(a1, off(a1) + 1, -1);
    put(a2, off(a2), -1);
    put(a2, off(a2) + 1, 1);
    for a in a1..a2 {
        let (lo, hi) = (off(a), off(a + 1));
        if hi > lo {
            put(a, lo + 1, 1);
            put(a + 1, lo, -1);
            put(a, hi + 1, -1);
            put(a + 1, hi, 1);
        }
    }
    if values.iter().flatten().any(|x| x.abs() > 1) {
        return Err(Error::Internal(format!(
            "bending vector of {i} on rows {a1}..{a2} has an entry outside [-1, 1]"
        )));
    }
    Ok(BendingVector {
        values,
        source: i.clone(),
        rows: (a1, a2),
    })
}

/// The point `o` with `o_{a,b} = a b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectivePoint {
    values: Vec<Vec<i64>>,
}

impl ObjectivePoint {
    pub fn new(k: usize, n: usize) -> Self {
        let values = (1..=k)
            .map(|a| (1..=n - k).map(|b| (a * b) as i64).collect())
            .collect();
        Self { values }
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn dot(&self, m: &[Vec<i32>]) -> i64 {
        self.values
            .iter()
            .zip(m)
            .flat_map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| x * i64::from(y)))
            .sum()
    }

    /// `o_{a1,b1} + o_{a2,b2} > o_{a1,b2} + o_{a2,b1}` for `a1 < a2`, `b1 < b2`.
    pub fn is_strictly_supermodular(&self) -> bool {
        let k = self.values.len();
        let m = self.values.first().map_or(0, Vec::len);
        for a1 in 0..k {
            for a2 in a1 + 1..k {
                for b1 in 0..m {
                    for b2 in b1 + 1..m {
                        let v = &self.values;
                        if v[a1][b1] + v[a2][b2] <= v[a1][b2] + v[a2][b1] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Evaluation of the bending vector of an interior ridge of the noncrossing
/// complex against the ridge, its two completions and `o`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RidgeCertificate {
    /// The doubly marked column.
    pub column: Vector,
    pub rows: (usize, usize),
    pub bending: BendingVector,
    /// Members `J` of the ridge with `<b, chi_J> != 0`.
    pub non_orthogonal: Vec<Vector>,
    /// Completion obtained by pushing the lower mark.
    pub lower: Vector,
    pub lower_product: i64,
    pub upper: Vector,
    pub upper_product: i64,
    pub objective_product: i64,
}

impl RidgeCertificate {
    pub fn holds(&self) -> bool {
        self.non_orthogonal.is_empty()
            && self.lower_product > 0
            && self.upper_product < 0
            && self.objective_product > 0
    }
}

pub fn ridge_certificate(ridge: &[Vector]) -> Result<RidgeCertificate> {
    let first = ridge
        .first()
        .ok_or_else(|| Error::Precondition("empty ridge".into()))?;
    let (k, n) = (first.k(), first.n());
    let max = Vector::max_vector(k, n)?;
    let mut cols: Vec<Vector> = ridge.iter().filter(|v| **v != max).cloned().collect();
    cols.sort();
    let table = phi_nc(&summing_tableau(k, n, &cols)?);
    if table.columns() != cols.as_slice() {
        return Err(Error::Precondition(
            "ridge is not a noncrossing face without repeated members".into(),
        ));
    }
    let doubled = table.multiply_marked();
    let c = match doubled.as_slice() {
        [] => return Err(Error::NoDoublyMarkedColumn),
        [c] => *c,
        _ => {
            return Err(Error::Precondition(format!(
                "{} columns carry several marks",
                doubled.len()
            )))
        }
    };
    let rows = table.marked_rows(c);
    let [a1, a2] = rows.as_slice() else {
        return Err(Error::Precondition(format!(
            "column {c} carries {} marks",
            rows.len()
        )));
    };
    let column = table.columns()[c - 1].clone();
    let bending = bending_vector(&column, *a1, *a2)?;
    let (lower, upper) = ridge_completions(ridge)?;
    let non_orthogonal = ridge
        .iter()
        .filter(|j| bending.dot_vector(j) != 0)
        .cloned()
        .collect();
    Ok(RidgeCertificate {
        column,
        rows: (*a1, *a2),
        lower_product: bending.dot_vector(&lower),
        upper_product: bending.dot_vector(&upper),
        objective_product: bending.dot_objective(),
        bending,
        non_orthogonal,
        lower,
        upper,
    })
}

/// Result of comparing every arc of a Tamari digraph with the sign of the
/// bending vector of its ridge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrientationReport {
    pub arcs_checked: usize,
    /// Indices into the arc list, ascending.
    pub failures: Vec<usize>,
}

impl OrientationReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The source of every arc is the side of `b` holding `o`: the removed
/// vector pairs positively with `b`, the added one negatively.
pub fn check_geom_orientation(d: &TamariDigraph) -> OrientationReport {
    let failures: Vec<usize> = d
        .arcs()
        .par_iter()
        .enumerate()
        .filter_map(|(idx, arc)| {
            let ridge = d.nodes()[arc.source].without(&arc.removed);
            let ok = ridge_certificate(&ridge).is_ok_and(|c| {
                c.holds()
                    && c.lower == arc.removed
                    && c.upper == arc.added
                    && c.bending.dot_vector(&arc.removed) > 0
                    && c.bending.dot_vector(&arc.added) < 0
            });
            (!ok).then_some(idx)
        })
        .collect();
    OrientationReport {
        arcs_checked: d.arcs().len(),
        failures,
    }
}

/// Certificates of every interior ridge of the noncrossing complex.
pub fn ridge_certificates(
    k: usize,
    n: usize,
) -> Result<Vec<(Vec<Vector>, Result<RidgeCertificate>)>> {
    let complex = build_complex(k, n, ComplexKind::Nc)?;
    let facets = complex.enumerate_facets(Method::Clique)?;
    let ridges: Vec<Vec<Vector>> = crate::complex::interior_ridges(&facets)
        .into_iter()
        .collect();
    Ok(ridges
        .into_par_iter()
        .map(|r| {
            let c = ridge_certificate(&r);
            (r, c)
        })
        .collect())
}

/// `(w_1, ..., w_{k-1})` with `w_d = sum_{b - a = d} i_a i_b`, compared
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GradedWeight(pub Vec<i64>);

impl GradedWeight {
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn plus(&self, other: &GradedWeight) -> GradedWeight {
        GradedWeight(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }
}

pub fn graded_weight(i: &Vector) -> GradedWeight {
    graded_weight_raw(i.entries())
}

fn graded_weight_raw(e: &[u32]) -> GradedWeight {
    let k = e.len();
    GradedWeight(
        (1..k)
            .map(|d| {
                (0..k - d)
                    .map(|a| i64::from(e[a]) * i64::from(e[a + d]))
                    .sum()
            })
            .collect(),
    )
}

/// A violation of regularity: the compatible pair `(i, j)` and a different
/// pair `(x, y)` with the same coordinate multisets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RegularityCounterexample {
    pub i: Vector,
    pub j: Vector,
    pub x: Vector,
    pub y: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub pairs_checked: usize,
    pub swaps_checked: usize,
    /// Lex-least in `(i, j, x, y)`.
    pub counterexample: Option<RegularityCounterexample>,
}

impl RegularityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// For `Mode::Nc`: every noncrossing pair has strictly smaller weight sum
/// than any other pair obtained by swapping coordinates, and that other pair
/// crosses. For `Mode::Nn` the same with the inequality reversed and nesting
/// in place of crossing.
pub fn weight_regularity_check(k: usize, n: usize, mode: Mode) -> Result<RegularityReport> {
    let all = Vector::all(k, n)?;
    let weights: Vec<GradedWeight> = all.iter().map(graded_weight).collect();
    let per_i: Vec<(usize, usize, Option<RegularityCounterexample>)> = (0..all.len())
        .into_par_iter()
        .map(|p| {
            let mut pairs = 0;
            let mut swaps = 0;
            let mut bad: Option<RegularityCounterexample> = None;
            let i = all[p].entries();
            for q in p + 1..all.len() {
                let j = all[q].entries();
                let compatible = match mode {
                    Mode::Nc => noncrossing_raw(i, j),
                    Mode::Nn => nonnesting_raw(i, j),
                };
                if !compatible {
                    continue;
                }
                pairs += 1;
                let here = weights[p].plus(&weights[q]);
                let diff: Vec<usize> = (0..k).filter(|&a| i[a] != j[a]).collect();
                if diff.len() < 2 {
                    continue;
                }
                // subsets of the differing coordinates not containing the
                // first one, excluding the empty set
                let rest = diff.len() - 1;
                let mut found: Option<RegularityCounterexample> = None;
                for mask in 1u32..(1u32 << rest) {
                    let mut x = i.to_vec();
                    let mut y = j.to_vec();
                    for (t, &a) in diff[1..].iter().enumerate() {
                        if mask & (1 << t) != 0 {
                            x[a] = j[a];
                            y[a] = i[a];
                        }
                    }
                    let valid = |v: &[u32]| v.windows(2).all(|w| w[0] < w[1]);
                    if !valid(&x) || !valid(&y) {
                        continue;
                    }
                    swaps += 1;
                    let there = graded_weight_raw(&x).plus(&graded_weight_raw(&y));
                    let ok = match mode {
                        Mode::Nc => here < there && !noncrossing_raw(&x, &y),
                        Mode::Nn => here > there && !nonnesting_raw(&x, &y),
                    };
                    if !ok {
                        let (x, y) = if x <= y { (x, y) } else { (y, x) };
                        let cand = RegularityCounterexample {
                            i: all[p].clone(),
                            j: all[q].clone(),
                            x: Vector::from_sorted_unchecked(x, n),
                            y: Vector::from_sorted_unchecked(y, n),
                        };
                        if found.as_ref().is_none_or(|f| cand < *f) {
                            found = Some(cand);
                        }
                    }
                }
                if bad.is_none() {
                    bad = found;
                }
            }
            (pairs, swaps, bad)
        })
        .collect();
    Ok(RegularityReport {
        pairs_checked: per_i.iter().map(|t| t.0).sum(),
        swaps_checked: per_i.iter().map(|t| t.1).sum(),
        counterexample: per_i.into_iter().find_map(|t| t.2),
    })
}

/// How two vertices of a cubical face sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalClass {
    Nonnesting,
    Noncrossing,
    /// The two vertices differ in at most one component.
    Both,
    Other,
}

/// The face of the order polytope spanned by `chi_I` and `chi_J`: a cube
/// whose coordinates are the connected regions where the two filters differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeFace {
    i: Vector,
    j: Vector,
    components: Vec<Vec<(usize, usize)>>,
    alpha_i: Vec<u8>,
    alpha_j: Vec<u8>,
}

pub fn cube_face(i: &Vector, j: &Vector) -> Result<CubeFace> {
    i.same_params(j)?;
    let grid = GridPoset::new(i.k(), i.n())?;
    let differs = |c: (usize, usize)| i.char_value(c.0, c.1) != j.char_value(c.0, c.1);
    let mut seen = BTreeSet::new();
    let mut components = Vec::new();
    for cell in grid.cells() {
        if !differs(cell) || seen.contains(&cell) {
            continue;
        }
        let mut comp = vec![cell];
        seen.insert(cell);
        let mut queue = VecDeque::from([cell]);
        while let Some(c) = queue.pop_front() {
            for nb in grid.neighbors(c) {
                if differs(nb) && seen.insert(nb) {
                    comp.push(nb);
                    queue.push_back(nb);
                }
            }
        }
        comp.sort();
        components.push(comp);
    }
    components.sort_by_key(|comp| {
        let col = comp.iter().map(|c| c.1).min().unwrap_or(0);
        let row = comp
            .iter()
            .filter(|c| c.1 == col)
            .map(|c| c.0)
            .min()
            .unwrap_or(0);
        (col, row)
    });
    let alpha = |v: &Vector| -> Vec<u8> {
        components
            .iter()
            .map(|comp| v.char_value(comp[0].0, comp[0].1))
            .collect()
    };
    let alpha_i = alpha(i);
    let alpha_j = alpha(j);
    Ok(CubeFace {
        i: i.clone(),
        j: j.clone(),
        components,
        alpha_i,
        alpha_j,
    })
}

impl CubeFace {
    pub fn i(&self) -> &Vector {
        &self.i
    }

    pub fn j(&self) -> &Vector {
        &self.j
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    /// Components ordered by their leftmost column.
    pub fn components(&self) -> &[Vec<(usize, usize)>] {
        &self.components
    }

    pub fn alpha_i(&self) -> &[u8] {
        &self.alpha_i
    }

    pub fn alpha_j(&self) -> &[u8] {
        &self.alpha_j
    }

    fn in_component(&self, a: usize, b: usize) -> bool {
        self.components
            .iter()
            .any(|c| c.binary_search(&(a, b)).is_ok())
    }

    pub fn alpha_of(&self, x: &Vector) -> Result<Vec<u8>> {
        self.i.same_params(x)?;
        let off = || Error::NotOnCubeFace(x.clone());
        let (k, m) = (self.i.k(), self.i.n() - self.i.k());
        for a in 1..=k {
            for b in 1..=m {
                if !self.in_component(a, b) && x.char_value(a, b) != self.i.char_value(a, b) {
                    return Err(off());
                }
            }
        }
        let mut alpha = Vec::with_capacity(self.components.len());
        for comp in &self.components {
            let v = x.char_value(comp[0].0, comp[0].1);
            if comp.iter().any(|&(a, b)| x.char_value(a, b) != v) {
                return Err(off());
            }
            alpha.push(v);
        }
        Ok(alpha)
    }

    /// The vector whose filter is `chi_base + sum_c alpha_c chi_{P_c}`,
    /// where `chi_base` is the common part of the two filters.
    pub fn vertex(&self, alpha: &[u8]) -> Result<Vector> {
        if alpha.len() != self.components.len() {
            return Err(Error::Precondition(format!(
                "expected {} coordinates, got {}",
                self.components.len(),
                alpha.len()
            )));
        }
        let (k, n) = (self.i.k(), self.i.n());
        let m = n - k;
        let mut rows: Vec<Vec<u8>> = (1..=k)
            .map(|a| (1..=m).map(|b| self.i.char_value(a, b)).collect())
            .collect();
        for (comp, &x) in self.components.iter().zip(alpha) {
            for &(a, b) in comp {
                rows[a - 1][b - 1] = x;
            }
        }
        let mut entries = Vec::with_capacity(k);
        for (a, row) in rows.iter().enumerate() {
            let zeros = row.iter().take_while(|&&x| x == 0).count();
            if row[zeros..].contains(&0) {
                return Err(Error::Internal(format!(
                    "row {} is not a filter row",
                    a + 1
                )));
            }
            entries.push((zeros + a + 1) as u32);
        }
        Vector::new(entries, n)
    }

    /// All `2^d` vertices in the order of their coordinate vectors.
    pub fn vertices(&self) -> Result<Vec<Vector>> {
        let d = self.components.len();
        if d >= 32 {
            return Err(Error::ResourceLimit(format!("cube of dimension {d}")));
        }
        (0u64..1 << d)
            .map(|mask| {
                let alpha: Vec<u8> = (0..d).map(|c| ((mask >> c) & 1) as u8).collect();
                self.vertex(&alpha)
            })
            .collect()
    }

    /// The componentwise minimum and maximum of the two filters, as
    /// vectors `(bottom, top)` with `chi_bottom <= chi_top`.
    pub fn extremes(&self) -> (Vector, Vector) {
        let e = self.i.entries().iter().zip(self.j.entries());
        let n = self.i.n();
        let bottom = e.clone().map(|(x, y)| *x.max(y)).collect();
        let top = e.map(|(x, y)| *x.min(y)).collect();
        (
            Vector::from_sorted_unchecked(bottom, n),
            Vector::from_sorted_unchecked(top, n),
        )
    }
}

pub fn classify_cube_diagonal(face: &CubeFace, x: &Vector, y: &Vector) -> Result<DiagonalClass> {
    let ax = face.alpha_of(x)?;
    let ay = face.alpha_of(y)?;
    Ok(classify_alphas(&ax, &ay))
}

fn classify_alphas(ax: &[u8], ay: &[u8]) -> DiagonalClass {
    let diff: Vec<u8> = ax
        .iter()
        .zip(ay)
        .filter(|(p, q)| p != q)
        .map(|(p, _)| *p)
        .collect();
    if diff.len() <= 1 {
        return DiagonalClass::Both;
    }
    if diff.iter().all(|&v| v == diff[0]) {
        DiagonalClass::Nonnesting
    } else if diff.windows(2).all(|w| w[0] != w[1]) {
        DiagonalClass::Noncrossing
    } else {
        DiagonalClass::Other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CubeTriangulation {
    Standard,
    Noncrossing,
}

/// Facets of a triangulation of `{0,1}^d`, `d <= 6`, as sets of vertices;
/// vertex `u` has coordinate `c` equal to bit `c` of `u`. Sorted.
pub fn cube_triangulation_facets(d: usize, kind: CubeTriangulation) -> Result<Vec<Set>> {
    if d > 6 {
        return Err(Error::ResourceLimit(format!(
            "cube dimension {d} exceeds 6"
        )));
    }
    let nv = 1usize << d;
    let alpha = |w: usize| -> Vec<u8> { (0..d).map(|c| ((w >> c) & 1) as u8).collect() };
    let compatible = |u: usize, v: usize| -> bool {
        match kind {
            CubeTriangulation::Standard => u & v == u || u & v == v,
            CubeTriangulation::Noncrossing => matches!(
                classify_alphas(&alpha(u), &alpha(v)),
                DiagonalClass::Noncrossing | DiagonalClass::Both
            ),
        }
    };
    let adj: Vec<Set> = (0..nv)
        .map(|u| {
            (0..nv)
                .filter(|&v| v != u && compatible(u, v))
                .fold(0, |s, v| s | bitset::bit(v))
        })
        .collect();
    let mut facets = maximal_cliques(&adj);
    facets.sort_unstable();
    Ok(facets)
}

/// Diameter of the dual graph of a triangulation of `{0,1}^d`, `d <= 6`.
pub fn cube_triangulation_diameter(d: usize, kind: CubeTriangulation) -> Result<usize> {
    let facets = cube_triangulation_facets(d, kind)?;
    let nf = facets.len();
    let neighbors: Vec<Vec<usize>> = (0..nf)
        .into_par_iter()
        .map(|p| {
            (0..nf)
                .filter(|&q| q != p && (facets[p] & facets[q]).count_ones() as usize == d)
                .collect()
        })
        .collect();
    let ecc: Vec<Option<usize>> = (0..nf)
        .into_par_iter()
        .map(|s| {
            let mut dist = vec![usize::MAX; nf];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(p) = queue.pop_front() {
                for &q in &neighbors[p] {
                    if dist[q] == usize::MAX {
                        dist[q] = dist[p] + 1;
                        queue.push_back(q);
                    }
                }
            }
            let far = *dist.iter().max().expect("at least one facet");
            (far != usize::MAX).then_some(far)
        })
        .collect();
    ecc.into_iter()
        .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
        .ok_or_else(|| Error::Internal("dual graph is disconnected".into()))
}

/// Sorted multisets of one row of the facet summing tableaux, for the
/// nonnesting and the noncrossing complex. Row `a` is counted from the
/// bottom of the tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowProfile {
    pub row: usize,
    pub nn: Vec<Vec<u64>>,
    pub nc: Vec<Vec<u64>>,
}

impl RowProfile {
    pub fn coincide(&self) -> bool {
        self.nn == self.nc
    }
}

pub fn row_profile(k: usize, n: usize, a: usize) -> Result<RowProfile> {
    if a == 0 || a > k {
        return Err(Error::Precondition(format!("row {a} out of range 1..{k}")));
    }
    let mut all = row_profiles(k, n)?;
    Ok(all.swap_remove(a - 1))
}

/// Profiles of all rows `1..=k`.
pub fn row_profiles(k: usize, n: usize) -> Result<Vec<RowProfile>> {
    let tableau_rows = |kind: ComplexKind| -> Result<Vec<Vec<Vec<u64>>>> {
        let facets = build_complex(k, n, kind)?.enumerate_facets(Method::Clique)?;
        facets
            .iter()
            .map(|f: &Facet| Ok(summing_tableau(k, n, f.members())?.rows().to_vec()))
            .collect()
    };
    let nn = tableau_rows(ComplexKind::Nn)?;
    let nc = tableau_rows(ComplexKind::Nc)?;
    let pick = |ts: &[Vec<Vec<u64>>], a: usize| -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = ts.iter().map(|t| t[k - a].clone()).collect();
        out.sort();
        out
    };
    Ok((1..=k)
        .map(|a| RowProfile {
            row: a,
            nn: pick(&nn, a),
            nc: pick(&nc, a),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32], n: usize) -> Vector {
        Vector::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn bending_vector_of_246() {
        let b = bending_vector(&v(&[2, 4, 6], 7), 1, 3).unwrap();
        assert_eq!(
            b.values(),
            &[vec![1, 0, -1, 0], vec![-1, 1, 1, -1], vec![0, -1, 0, 1]]
        );
        assert_eq!(b.sum(), 0);
        assert_eq!(b.dot_objective(), 4);
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            "[[1,0,-1,0],[-1,1,1,-1],[0,-1,0,1]]"
        );
    }

    #[test]
    fn two_entry_segment() {
        let i = v(&[2, 5, 6], 8);
        let b = bending_vector(&i, 1, 2).unwrap();
        let mut expect = vec![vec![0i32; 5]; 3];
        // +1 at (a, i_a - a), (a+1, i_{a+1} - a); -1 at (a+1, i_a - a), (a, i_{a+1} - a)
        expect[0][0] += 1;
        expect[1][3] += 1;
        expect[1][0] -= 1;
        expect[0][3] -= 1;
        assert_eq!(b.values(), expect.as_slice());
    }

    #[test]
    fn east_boundary_is_rejected() {
        assert!(bending_vector(&v(&[2, 4, 7], 7), 1, 3).is_err());
        assert!(bending_vector(&v(&[2, 4, 6], 7), 2, 2).is_err());
        assert!(bending_vector(&v(&[2, 6, 7], 7), 1, 2).is_err());
        assert!(bending_vector(&v(&[2, 5, 7], 7), 1, 2).is_ok());
    }

    #[test]
    fn objective_is_supermodular() {
        assert!(ObjectivePoint::new(3, 7).is_strictly_supermodular());
    }

    #[test]
    fn example_ridge_certificate() {
        let cols: Vec<Vector> = [
            [1, 2, 3],
            [1, 2, 4],
            [1, 2, 7],
            [1, 4, 7],
            [1, 6, 7],
            [2, 3, 4],
            [2, 4, 5],
            [2, 4, 6],
            [3, 4, 5],
            [4, 5, 6],
            [4, 6, 7],
        ]
        .iter()
        .map(|e| v(e, 7))
        .collect();
        let mut ridge = cols.clone();
        ridge.push(v(&[5, 6, 7], 7));
        let c = ridge_certificate(&ridge).unwrap();
        assert_eq!(c.column, v(&[2, 4, 6], 7));
        assert_eq!(c.rows, (1, 3));
        assert!(c.non_orthogonal.is_empty());
        assert_eq!(c.upper, v(&[2, 4, 7], 7));
        assert_eq!(c.lower, v(&[1, 4, 6], 7));
        assert_eq!(c.upper_product, -1);
        assert_eq!(c.lower_product, 1);
        assert!(c.holds());
    }

    #[test]
    fn ridges_of_2_5() {
        let certs = ridge_certificates(2, 5).unwrap();
        assert_eq!(certs.len(), 5);
        assert!(certs.iter().all(|(_, c)| c.as_ref().unwrap().holds()));
    }

    #[test]
    fn graded_weight_examples() {
        let w = |e: &[u32], n| graded_weight(&v(e, n));
        assert_eq!(w(&[1, 5], 6).plus(&w(&[2, 4], 6)), GradedWeight(vec![13]));
        assert_eq!(w(&[1, 4], 6).plus(&w(&[2, 5], 6)), GradedWeight(vec![14]));
        let lhs = w(&[1, 3, 6], 6).plus(&w(&[2, 3, 5], 6));
        let rhs = w(&[1, 3, 5], 6).plus(&w(&[2, 3, 6], 6));
        assert_eq!(lhs, GradedWeight(vec![42, 16]));
        assert_eq!(rhs, GradedWeight(vec![42, 17]));
        assert!(lhs < rhs);
    }

    #[test]
    fn regularity_small() {
        for (k, n) in [(2, 5), (2, 6), (3, 6)] {
            assert!(weight_regularity_check(k, n, Mode::Nc).unwrap().holds());
            assert!(weight_regularity_check(k, n, Mode::Nn).unwrap().holds());
        }
    }

    #[test]
    fn comparable_pair_is_nonnesting() {
        let i = v(&[1, 3, 4], 7);
        let j = v(&[2, 5, 7], 7);
        let f = cube_face(&i, &j).unwrap();
        assert!(f.alpha_i().iter().all(|&x| x == 1));
        assert!(f.alpha_j().iter().all(|&x| x == 0));
        let class = classify_cube_diagonal(&f, &i, &j).unwrap();
        assert!(matches!(
            class,
            DiagonalClass::Nonnesting | DiagonalClass::Both
        ));
    }

    #[test]
    fn four_component_pair() {
        let i = v(&[1, 2, 3, 5, 11, 12, 13, 14, 15, 21, 24], 24);
        let j = v(&[3, 4, 5, 6, 7, 9, 12, 16, 18, 19, 20], 24);
        let f = cube_face(&i, &j).unwrap();
        assert_eq!(f.dimension(), 4);
        assert_eq!(f.vertices().unwrap().len(), 16);
    }

    #[test]
    fn off_face_vertex_is_rejected() {
        let f = cube_face(&v(&[1, 3], 5), &v(&[2, 4], 5)).unwrap();
        assert_eq!(
            f.alpha_of(&v(&[4, 5], 5)),
            Err(Error::NotOnCubeFace(v(&[4, 5], 5)))
        );
    }

    #[test]
    fn cube_diameters() {
        use CubeTriangulation::*;
        assert_eq!(cube_triangulation_diameter(3, Standard).unwrap(), 3);
        assert_eq!(cube_triangulation_diameter(3, Noncrossing).unwrap(), 4);
        assert_eq!(cube_triangulation_diameter(4, Noncrossing).unwrap(), 10);
        assert_eq!(cube_triangulation_diameter(2, Noncrossing).unwrap(), 1);
        assert_eq!(cube_triangulation_diameter(0, Standard).unwrap(), 0);
    }

    #[test]
    fn row_profiles_of_2_5() {
        let p1 = row_profile(2, 5, 1).unwrap();
        let rows = |r: &[[u64; 3]]| -> Vec<Vec<u64>> {
            let mut v: Vec<Vec<u64>> = r.iter().map(|x| x.to_vec()).collect();
            v.sort();
            v
        };
        assert_eq!(
            p1.nc,
            rows(&[[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]])
        );
        assert!(p1.coincide());
        let p2 = row_profile(2, 5, 2).unwrap();
        assert_eq!(
            p2.nn,
            rows(&[[2, 4, 6], [2, 5, 6], [3, 5, 6], [3, 4, 6], [4, 5, 6]])
        );
        assert!(p2.coincide());
    }
}
