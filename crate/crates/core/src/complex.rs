//! Flag complexes on `V_{k,n}`: facets, face numbers and the counting
//! formulas that go with them.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bitset::{self, Set};
use crate::error::{check_params, Error, Result};
use crate::predicates::{noncrossing_raw, nonnesting_raw, weakly_separated_raw};
use crate::vector::Vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Nc,
    Nn,
    Sep,
}

impl ComplexKind {
    pub fn compatible(self, i: &Vector, j: &Vector) -> bool {
        let (a, b) = (i.entries(), j.entries());
        match self {
            ComplexKind::Nc => noncrossing_raw(a, b),
            ComplexKind::Nn => nonnesting_raw(a, b),
            ComplexKind::Sep => weakly_separated_raw(a, b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ComplexKind::Nc => "nc",
            ComplexKind::Nn => "nn",
            ComplexKind::Sep => "sep",
        }
    }
}

impl fmt::Display for ComplexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Flip,
    Clique,
}

/// A maximal face, members in lex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    members: Vec<Vector>,
}

impl Facet {
    pub fn new(mut members: Vec<Vector>) -> Self {
        members.sort();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[Vector] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.members.binary_search(v).is_ok()
    }

    /// Members that are not cyclic intervals.
    pub fn interior_members(&self) -> impl Iterator<Item = &Vector> {
        self.members.iter().filter(|v| !v.is_cyclic_interval())
    }

    pub(crate) fn without(&self, v: &Vector) -> Vec<Vector> {
        self.members.iter().filter(|w| *w != v).cloned().collect()
    }
}

impl Serialize for Facet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

/// Nonnegative integer sequence. Entries that fit in `u64` serialize as
/// JSON numbers, larger ones as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CountVector(pub Vec<BigUint>);

impl CountVector {
    pub fn from_u64s(v: &[u64]) -> Self {
        Self(v.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> BigUint {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> CountVector {
        let mut v = self.0.clone();
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        CountVector(v)
    }

    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.0.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for CountVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            match x.to_u64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

/// The flag complex of a compatibility graph on (a subset of) `V_{k,n}`.
///
/// Vertices are stored in lex order and addressed by their index, which is
/// also their bit position in vertex sets.
#[derive(Clone, Debug)]
pub struct FlagComplex {
    k: usize,
    n: usize,
    kind: ComplexKind,
    reduced: bool,
    vertices: Vec<Vector>,
    adj: Vec<Set>,
}

pub const MAX_VERTICES: usize = bitset::CAPACITY;

pub fn build_complex(k: usize, n: usize, kind: ComplexKind) -> Result<FlagComplex> {
    check_params(k, n)?;
    let vertices = Vector::all(k, n)?;
    FlagComplex::from_vertices(k, n, kind, false, vertices)
}

impl FlagComplex {
    fn from_vertices(
        k: usize,
        n: usize,
        kind: ComplexKind,
        reduced: bool,
        vertices: Vec<Vector>,
    ) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::ResourceLimit(format!(
                "{} vertices exceed the supported {MAX_VERTICES}",
                vertices.len()
            )));
        }
        let adj = vertices
            .par_iter()
            .enumerate()
            .map(|(i, v)| {
                let mut s: Set = 0;
                for (j, w) in vertices.iter().enumerate() {
                    if i != j && kind.compatible(v, w) {
                        s |= bitset::bit(j);
                    }
                }
                s
            })
            .collect();
        Ok(Self {
            k,
            n,
            kind,
            reduced,
            vertices,
            adj,
        })
    }

    /// The complex with the `n` cyclic intervals deleted.
    pub fn reduced(&self) -> Result<FlagComplex> {
        let keep: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| !self.vertices[i].is_cyclic_interval())
            .collect();
        let vertices = keep.iter().map(|&i| self.vertices[i].clone()).collect();
        let adj = keep
            .iter()
            .map(|&i| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &j)| self.adj[i] & bitset::bit(j) != 0)
                    .fold(0, |s, (p, _)| s | bitset::bit(p))
            })
            .collect();
        Ok(FlagComplex {
            k: self.k,
            n: self.n,
            kind: self.kind,
            reduced: true,
            vertices,
            adj,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn index_of(&self, v: &Vector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i] & bitset::bit(j) != 0
    }

    pub fn neighbors(&self, i: usize) -> Set {
        self.adj[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|s| s.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn non_edge_count(&self) -> usize {
        let v = self.vertices.len();
        v * (v - 1) / 2 - self.edge_count()
    }

    /// Sorted list of index pairs `i < j` that are adjacent.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.vertices.len() {
            for j in bitset::iter(self.adj[i]) {
                if i < j {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The size every facet has when the complex is pure of the expected
    /// dimension: `k(n-k)+1`, or `k(n-k)+1-n` after reduction.
    pub fn expected_facet_size(&self) -> usize {
        let d = self.k * (self.n - self.k) + 1;
        if self.reduced {
            d - self.n
        } else {
            d
        }
    }

    pub fn is_clique(&self, s: Set) -> bool {
        bitset::iter(s).all(|i| s & !bitset::bit(i) & !self.adj[i] == 0)
    }

    pub fn set_of(&self, members: &[Vector]) -> Result<Set> {
        let mut s = 0;
        for v in members {
            let i = self
                .index_of(v)
                .ok_or_else(|| Error::Precondition(format!("{v} is not a vertex")))?;
            s |= bitset::bit(i);
        }
        Ok(s)
    }

    pub fn facet_of(&self, s: Set) -> Facet {
        Facet {
            members: bitset::iter(s).map(|i| self.vertices[i].clone()).collect(),
        }
    }

    /// All maximal cliques as vertex sets.
    pub fn maximal_cliques(&self) -> Vec<Set> {
        maximal_cliques(&self.adj)
    }

    pub fn enumerate_facets(&self, method: Method) -> Result<Vec<Facet>> {
        let sets = match method {
            Method::Clique => self.maximal_cliques(),
            Method::Flip => self.flip_facet_sets()?,
        };
        let mut facets: Vec<Facet> = sets.into_iter().map(|s| self.facet_of(s)).collect();
        facets.sort();
        facets.dedup();
        Ok(facets)
    }

    /// The cyclic intervals extended greedily in lex order to a maximal face.
    pub fn seed_facet(&self) -> Result<Set> {
        let mut s: Set = 0;
        for (i, v) in self.vertices.iter().enumerate() {
            if v.is_cyclic_interval() {
                s |= bitset::bit(i);
            }
        }
        if !self.is_clique(s) {
            return Err(Error::Internal(
                "cyclic intervals are not pairwise compatible".into(),
            ));
        }
        for i in 0..self.vertices.len() {
            if s & bitset::bit(i) == 0 && s & !self.adj[i] == 0 {
                s |= bitset::bit(i);
            }
        }
        Ok(s)
    }

    fn flip_facet_sets(&self) -> Result<Vec<Set>> {
        if self.kind != ComplexKind::Nc || self.reduced {
            return Err(Error::Unsupported(format!(
                "flip enumeration needs the full noncrossing complex, not {}{}",
                self.kind,
                if self.reduced { " (reduced)" } else { "" }
            )));
        }
        let seed = self.seed_facet()?;
        if seed.count_ones() as usize != self.expected_facet_size() {
            return Err(Error::Internal(format!(
                "seed facet has {} members, expected {}",
                seed.count_ones(),
                self.expected_facet_size()
            )));
        }
        let mut seen: HashSet<Set> = HashSet::from([seed]);
        let mut frontier = vec![seed];
        while !frontier.is_empty() {
            let next: Vec<Set> = frontier
                .par_iter()
                .map(|&f| -> Result<Vec<Set>> {
                    let facet = self.facet_of(f);
                    let mut out = Vec::new();
                    for v in facet.interior_members() {
                        let flipped = crate::tamari::flip(&facet, v)?;
                        out.push(self.set_of(flipped.facet.members())?);
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            let mut fresh: Vec<Set> = next.into_iter().filter(|s| !seen.contains(s)).collect();
            fresh.sort_unstable();
            fresh.dedup();
            seen.extend(fresh.iter().copied());
            frontier = fresh;
        }
        Ok(seen.into_iter().collect())
    }

    /// `f_{-1}, f_0, ..., f_{d-1}` where `d` is the largest face size.
    pub fn f_vector(&self) -> CountVector {
        let nv = self.vertices.len();
        let all: Set = bitset::full(nv);
        let cones: Vec<usize> = (0..nv)
            .filter(|&i| self.adj[i] | bitset::bit(i) == all)
            .collect();
        let cone_set = cones.iter().fold(0, |s, &i| s | bitset::bit(i));
        let rest = all & !cone_set;
        let per_root: Vec<Vec<u128>> = bitset::iter(rest)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&v| {
                let mut counts = vec![0u128; 2];
                counts[1] = 1;
                count_cliques(
                    &self.adj,
                    self.adj[v] & rest & bitset::above(v),
                    2,
                    &mut counts,
                );
                counts
            })
            .collect();
        let mut base = vec![1u128];
        for c in per_root {
            if c.len() > base.len() {
                base.resize(c.len(), 0);
            }
            for (i, x) in c.iter().enumerate().skip(1) {
                base[i] += x;
            }
        }
        // join with the simplex on the cone vertices
        let c = cones.len();
        let mut f = vec![BigUint::zero(); base.len() + c];
        for (j, b) in base.iter().enumerate() {
            for i in 0..=c {
                f[i + j] += binomial(c as u64, i as u64) * BigUint::from(*b);
            }
        }
        while f.len() > 1 && f.last().is_some_and(Zero::is_zero) {
            f.pop();
        }
        CountVector(f)
    }

    /// The h-vector with `d = k(n-k)+1` (less `n` when reduced). For the full
    /// complexes, which are cones, `h_d` vanishes and is dropped.
    pub fn h_vector(&self) -> Result<CountVector> {
        let d = self.expected_facet_size();
        let h = h_from_f(&self.f_vector(), d)?;
        if self.reduced {
            return Ok(h);
        }
        let mut v = h.0;
        if v.last().is_some_and(|x| !x.is_zero()) {
            return Err(Error::Internal("top h-entry of a cone is nonzero".into()));
        }
        v.pop();
        Ok(CountVector(v))
    }

    pub fn euler_characteristic(&self) -> BigInt {
        let f = self.f_vector();
        let mut chi = BigInt::zero();
        for (i, x) in f.0.iter().enumerate().skip(1) {
            let x = BigInt::from(x.clone());
            if i % 2 == 1 {
                chi += x;
            } else {
                chi -= x;
            }
        }
        chi
    }
}

fn count_cliques(adj: &[Set], p: Set, size: usize, counts: &mut Vec<u128>) {
    if p == 0 {
        return;
    }
    if counts.len() <= size {
        counts.resize(size + 1, 0);
    }
    counts[size] += u128::from(p.count_ones());
    for v in bitset::iter(p) {
        let q = p & adj[v] & bitset::above(v);
        if q != 0 {
            count_cliques(adj, q, size + 1, counts);
        }
    }
}

fn degeneracy_order(adj: &[Set]) -> Vec<usize> {
    let nv = adj.len();
    let mut deg: Vec<u32> = adj.iter().map(|s| s.count_ones()).collect();
    let mut removed: Set = 0;
    let mut order = Vec::with_capacity(nv);
    for _ in 0..nv {
        let v = (0..nv)
            .filter(|&i| removed & bitset::bit(i) == 0)
            .min_by_key(|&i| (deg[i], i))
            .expect("vertices remain");
        removed |= bitset::bit(v);
        order.push(v);
        for u in bitset::iter(adj[v] & !removed) {
            deg[u] -= 1;
        }
    }
    order
}

fn bron_kerbosch(adj: &[Set], r: Set, mut p: Set, mut x: Set, out: &mut Vec<Set>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bitset::iter(p | x)
        .max_by_key(|&u| ((p & adj[u]).count_ones(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    for v in bitset::iter(p & !adj[pivot]) {
        let b = bitset::bit(v);
        bron_kerbosch(adj, r | b, p & adj[v], x & adj[v], out);
        p &= !b;
        x |= b;
    }
}

/// Maximal cliques of the graph with adjacency rows `adj` (at most 128
/// vertices, no loops), by Bron-Kerbosch with pivoting over a degeneracy
/// ordering. The order of the output is unspecified.
pub fn maximal_cliques(adj: &[Set]) -> Vec<Set> {
    let order = degeneracy_order(adj);
    let mut pos = vec![0usize; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut all: Vec<Set> = order
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &v)| {
            let mut later: Set = 0;
            let mut earlier: Set = 0;
            for u in bitset::iter(adj[v]) {
                if pos[u] > i {
                    later |= bitset::bit(u);
                } else {
                    earlier |= bitset::bit(u);
                }
            }
            let mut out = Vec::new();
            bron_kerbosch(adj, bitset::bit(v), later, earlier, &mut out);
            out
        })
        .collect();
    if adj.is_empty() {
        all.push(0);
    }
    all
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `h_i = sum_j (-1)^(i-j) C(d-j, i-j) f_{j-1}` for `i = 0..=d`; `f` starts
/// at `f_{-1}`.
pub fn h_from_f(f: &CountVector, d: usize) -> Result<CountVector> {
    if f.len() > d + 1 {
        return Err(Error::Precondition(format!(
            "faces of size {} exceed d = {d}",
            f.len() - 1
        )));
    }
    let mut h = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let mut s = BigInt::zero();
        for j in 0..=i {
            let term = BigInt::from(binomial((d - j) as u64, (i - j) as u64) * f.get(j));
            if (i - j) % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        let v = s
            .to_biguint()
            .ok_or_else(|| Error::Internal(format!("negative h-entry h_{i} = {s}")))?;
        h.push(v);
    }
    Ok(CountVector(h))
}

/// `0! 1! ... (k-1)! (k(n-k))! / ((n-1)! (n-2)! ... (n-k)!)`.
pub fn multidim_catalan(k: usize, n: usize) -> Result<BigUint> {
    check_params(k, n)?;
    let mut num = factorial((k * (n - k)) as u64);
    let mut den = BigUint::one();
    for i in 0..k {
        num *= factorial(i as u64);
        den *= factorial((n - 1 - i) as u64);
    }
    Ok(num / den)
}

/// Standard tableaux of shape `k x (n-k)` in the convention used throughout:
/// entries increase along rows to the right and along columns upwards, row 1
/// on top. Calls `visit` with `pos[v-1] = (row, col)` for each.
pub fn for_each_standard_tableau(k: usize, n: usize, mut visit: impl FnMut(&[(usize, usize)])) {
    let m = n - k;
    // fill[a] = number of filled cells in row a (0-based from the top)
    let mut fill = vec![0usize; k];
    let mut pos = Vec::with_capacity(k * m);
    type Visit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;
    fn rec(
        k: usize,
        m: usize,
        fill: &mut [usize],
        pos: &mut Vec<(usize, usize)>,
        visit: &mut Visit<'_>,
    ) {
        if pos.len() == k * m {
            visit(pos);
            return;
        }
        for a in 0..k {
            let b = fill[a];
            // the cell below must already be filled
            if b < m && (a + 1 == k || fill[a + 1] > b) {
                fill[a] += 1;
                pos.push((a + 1, b + 1));
                rec(k, m, fill, pos, visit);
                pos.pop();
                fill[a] -= 1;
            }
        }
    }
    rec(k, m, &mut fill, &mut pos, &mut visit);
}

/// Entry `i` counts the standard tableaux with exactly `i` peaks, where `v`
/// is a peak when `v+1` sits in a lower row than `v`.
pub fn narayana_by_peaks(k: usize, n: usize) -> Result<CountVector> {
    check_params(k, n)?;
    if k * (n - k) > 20 {
        return Err(Error::ResourceLimit(format!(
            "standard tableaux of shape {k}x{} are too many to enumerate",
            n - k
        )));
    }
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for_each_standard_tableau(k, n, |pos| {
        let peaks = pos.windows(2).filter(|w| w[1].0 > w[0].0).count();
        *counts.entry(peaks).or_default() += 1;
    });
    let len = counts.keys().max().map_or(0, |m| m + 1);
    Ok(CountVector(
        (0..len)
            .map(|i| BigUint::from(counts.get(&i).copied().unwrap_or(0)))
            .collect(),
    ))
}

pub fn check_pure(complex: &FlagComplex, facets: &[Facet]) -> bool {
    let d = complex.expected_facet_size();
    facets.iter().all(|f| f.len() == d)
}

/// Result of the pseudomanifold check on the noncrossing complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldReport {
    pub ridges: usize,
    pub interior_ridges: usize,
    pub boundary_ridges: usize,
    /// Ridges of the reduced complex lying in a number of facets other than 2.
    pub reduced_violations: Vec<Vec<Vector>>,
    /// Ridges of the full complex whose facet count disagrees with whether
    /// they miss a cyclic interval.
    pub boundary_violations: Vec<Vec<Vector>>,
    pub ok: bool,
}

fn ridge_counts(facets: &[Vec<Vector>]) -> BTreeMap<Vec<Vector>, usize> {
    let mut counts: BTreeMap<Vec<Vector>, usize> = BTreeMap::new();
    for f in facets {
        for i in 0..f.len() {
            let mut r = f.clone();
            r.remove(i);
            *counts.entry(r).or_default() += 1;
        }
    }
    counts
}

pub fn check_pseudomanifold(facets: &[Facet]) -> PseudomanifoldReport {
    let full: Vec<Vec<Vector>> = facets.iter().map(|f| f.members.clone()).collect();
    let reduced: Vec<Vec<Vector>> = facets
        .iter()
        .map(|f| f.interior_members().cloned().collect())
        .collect();
    let mut reduced_violations = Vec::new();
    for (r, c) in ridge_counts(&reduced) {
        if c != 2 {
            reduced_violations.push(r);
        }
    }
    let mut boundary_violations = Vec::new();
    let (mut interior, mut boundary) = (0, 0);
    let full_counts = ridge_counts(&full);
    for (r, c) in &full_counts {
        let intervals = r.iter().filter(|v| v.is_cyclic_interval()).count();
        let n = r.first().map_or(0, Vector::n);
        let misses_interval = intervals < n;
        if misses_interval {
            boundary += 1;
        } else {
            interior += 1;
        }
        let want = if misses_interval { 1 } else { 2 };
        if *c != want {
            boundary_violations.push(r.clone());
        }
    }
    let ok = reduced_violations.is_empty() && boundary_violations.is_empty();
    PseudomanifoldReport {
        ridges: full_counts.len(),
        interior_ridges: interior,
        boundary_ridges: boundary,
        reduced_violations,
        boundary_violations,
        ok,
    }
}

/// Facets re-checked to be pairwise compatible, one per member set.
pub fn facets_are_cliques(complex: &FlagComplex, facets: &[Facet]) -> bool {
    facets.iter().all(|f| {
        f.members.iter().enumerate().all(|(i, v)| {
            f.members[i + 1..]
                .iter()
                .all(|w| complex.kind.compatible(v, w))
        })
    })
}

/// Distinct interior ridges (facet minus a non-interval member).
pub fn interior_ridges(facets: &[Facet]) -> BTreeSet<Vec<Vector>> {
    let mut out = BTreeSet::new();
    for f in facets {
        for v in f.interior_members() {
            out.insert(f.without(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: &[u32], n: usize) -> Vector {
        Vector::new(e.to_vec(), n).unwrap()
    }

    #[test]
    fn catalan_values() {
        let c = |k, n| multidim_catalan(k, n).unwrap().to_u64().unwrap();
        assert_eq!(c(2, 5), 5);
        assert_eq!(c(2, 6), 14);
        assert_eq!(c(3, 6), 42);
        assert_eq!(c(3, 7), 462);
        assert_eq!(c(1, 9), 1);
        assert_eq!(c(4, 8), 24024);
    }

    #[test]
    fn edge_count_3_6() {
        let c = build_complex(3, 6, ComplexKind::Nc).unwrap();
        assert_eq!(c.vertices().len(), 20);
        assert_eq!(c.edge_count(), 155);
        assert_eq!(c.non_edge_count(), 35);
    }

    #[test]
    fn nn_with_k_1_is_complete() {
        let c = build_complex(1, 6, ComplexKind::Nn).unwrap();
        assert_eq!(c.edge_count(), 15);
    }

    #[test]
    fn sep_equals_nc_for_k_2() {
        let a = build_complex(2, 5, ComplexKind::Sep).unwrap();
        let b = build_complex(2, 5, ComplexKind::Nc).unwrap();
        assert_eq!(a.edges(), b.edges());
    }

    #[test]
    fn facets_2_5() {
        let c = build_complex(2, 5, ComplexKind::Nc).unwrap();
        let facets = c.enumerate_facets(Method::Clique).unwrap();
        assert_eq!(facets, c.enumerate_facets(Method::Flip).unwrap());
        let extra: Vec<Vec<Vector>> = facets
            .iter()
            .map(|f| f.interior_members().cloned().collect())
            .collect();
        let pairs = [
            [1, 3, 1, 4],
            [1, 3, 3, 5],
            [1, 4, 2, 4],
            [2, 4, 2, 5],
            [2, 5, 3, 5],
        ];
        let want: Vec<Vec<Vector>> = pairs
            .iter()
            .map(|p| vec![v(&p[..2], 5), v(&p[2..], 5)])
            .collect();
        assert_eq!(extra, want);
    }

    #[test]
    fn nn_2_5_contains_the_join_base() {
        let c = build_complex(2, 5, ComplexKind::Nn).unwrap();
        let facets = c.enumerate_facets(Method::Clique).unwrap();
        assert_eq!(facets.len(), 5);
        let base = [v(&[1, 2], 5), v(&[1, 3], 5), v(&[3, 5], 5), v(&[4, 5], 5)];
        assert!(facets.iter().all(|f| base.iter().all(|b| f.contains(b))));
        assert!(check_pure(&c, &facets));
    }

    #[test]
    fn h_vector_2_5() {
        let c = build_complex(2, 5, ComplexKind::Nc).unwrap();
        let h = c.h_vector().unwrap();
        assert_eq!(h, CountVector::from_u64s(&[1, 3, 1, 0, 0, 0, 0]));
        assert_eq!(
            narayana_by_peaks(2, 5).unwrap(),
            CountVector::from_u64s(&[1, 3, 1])
        );
        assert_eq!(
            narayana_by_peaks(1, 6).unwrap(),
            CountVector::from_u64s(&[1])
        );
    }

    #[test]
    fn euler_characteristics() {
        let chi = |k, n| {
            build_complex(k, n, ComplexKind::Nc)
                .unwrap()
                .reduced()
                .unwrap()
                .euler_characteristic()
        };
        assert_eq!(chi(2, 5), BigInt::from(0));
        assert_eq!(chi(2, 6), BigInt::from(2));
        assert_eq!(chi(3, 6), BigInt::from(0));
    }

    #[test]
    fn reduced_2_5_is_a_five_cycle() {
        let c = build_complex(2, 5, ComplexKind::Nc)
            .unwrap()
            .reduced()
            .unwrap();
        assert_eq!(c.vertices().len(), 5);
        assert!((0..5).all(|i| c.neighbors(i).count_ones() == 2));
        let facets = c.enumerate_facets(Method::Clique).unwrap();
        assert_eq!(facets.len(), 5);
        assert!(check_pure(&c, &facets));
    }

    #[test]
    fn f_vector_counts_a_simplex_correctly() {
        let c = build_complex(1, 4, ComplexKind::Nc).unwrap();
        assert_eq!(c.f_vector(), CountVector::from_u64s(&[1, 4, 6, 4, 1]));
        assert_eq!(c.h_vector().unwrap(), CountVector::from_u64s(&[1, 0, 0, 0]));
    }

    #[test]
    fn count_vector_json() {
        let big = CountVector(vec![BigUint::from(3u8), BigUint::from(u64::MAX) * 4u8]);
        assert_eq!(
            serde_json::to_string(&big).unwrap(),
            r#"[3,"73786976294838206460"]"#
        );
    }

    #[test]
    fn flip_method_rejected_for_other_kinds() {
        let c = build_complex(3, 6, ComplexKind::Sep).unwrap();
        assert!(matches!(
            c.enumerate_facets(Method::Flip),
            Err(Error::Unsupported(_))
        ));
    }
}
