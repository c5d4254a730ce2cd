//! Flips between facets of the noncrossing complex, the Grassmann-Tamari
//! digraph and order, and checks on them.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{build_complex, ComplexKind, CountVector, Facet, Method};
use crate::error::{Error, Result};
use crate::tableaux::{phi_nc, push_first_with_vector, push_last_with_vector, summing_tableau};
use crate::vector::Vector;

/// Outcome of flipping a facet across the ridge that omits one member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flip {
    pub facet: Facet,
    /// The member of the new facet that replaced the removed one.
    pub added: Vector,
    /// Whether the original facet is the source of the arc between the two,
    /// i.e. is obtained from the ridge by pushing its lower mark.
    pub from_source: bool,
}

/// The two vectors completing an interior ridge: `(lower, upper)` where
/// `lower` comes from pushing the lower of the two marks.
pub fn ridge_completions(ridge: &[Vector]) -> Result<(Vector, Vector)> {
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
    let (_, lower) = push_last_with_vector(&table)?;
    let (_, upper) = push_first_with_vector(&table)?;
    Ok((lower, upper))
}

pub fn flip(f: &Facet, v: &Vector) -> Result<Flip> {
    if !f.contains(v) {
        return Err(Error::NotInFacet(v.clone()));
    }
    if v.is_cyclic_interval() {
        return Err(Error::BoundaryRidge(v.clone()));
    }
    let ridge = f.without(v);
    let (lower, upper) = ridge_completions(&ridge)?;
    let (added, from_source) = if lower == *v {
        (upper, true)
    } else if upper == *v {
        (lower, false)
    } else {
        return Err(Error::Internal(format!(
            "neither push of the ridge restores {v}: got {lower} and {upper}"
        )));
    };
    let mut members = ridge;
    members.push(added.clone());
    Ok(Flip {
        facet: Facet::new(members),
        added,
        from_source,
    })
}

/// A cover `source -> target`; `removed` leaves the source, `added` enters
/// the target.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub source: usize,
    pub target: usize,
    pub removed: Vector,
    pub added: Vector,
}

/// The push-oriented dual graph of the noncrossing complex.
#[derive(Clone, Debug)]
pub struct TamariDigraph {
    k: usize,
    n: usize,
    nodes: Vec<Facet>,
    arcs: Vec<Arc>,
}

pub fn build_tamari(k: usize, n: usize) -> Result<TamariDigraph> {
    let complex = build_complex(k, n, ComplexKind::Nc)?;
    let nodes = complex.enumerate_facets(Method::Clique)?;
    TamariDigraph::from_facets(k, n, nodes)
}

impl TamariDigraph {
    pub fn from_facets(k: usize, n: usize, mut nodes: Vec<Facet>) -> Result<Self> {
        nodes.sort();
        let index: BTreeMap<&Facet, usize> =
            nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let per_node: Vec<Vec<Arc>> = nodes
            .par_iter()
            .enumerate()
            .map(|(i, f)| -> Result<Vec<Arc>> {
                let mut out = Vec::new();
                for v in f.interior_members() {
                    let fl = flip(f, v)?;
                    let j = *index.get(&fl.facet).ok_or_else(|| {
                        Error::Internal(format!("flip of {v} leaves the facet list"))
                    })?;
                    if fl.from_source {
                        out.push(Arc {
                            source: i,
                            target: j,
                            removed: v.clone(),
                            added: fl.added,
                        });
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut arcs: Vec<Arc> = per_node.into_iter().flatten().collect();
        arcs.sort();
        Ok(Self { k, n, nodes, arcs })
    }

    /// A digraph with prescribed arcs, for tests and negative controls.
    pub fn from_parts(k: usize, n: usize, nodes: Vec<Facet>, arcs: Vec<Arc>) -> Self {
        Self { k, n, nodes, arcs }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[Facet] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for a in &self.arcs {
            d[a.source] += 1;
        }
        d
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut indeg = vec![0; self.nodes.len()];
        for a in &self.arcs {
            indeg[a.target] += 1;
        }
        (0..self.nodes.len()).filter(|&i| indeg[i] == 0).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let out = self.out_degrees();
        (0..self.nodes.len()).filter(|&i| out[i] == 0).collect()
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut s = vec![Vec::new(); self.nodes.len()];
        for a in &self.arcs {
            s[a.source].push(a.target);
        }
        s
    }

    fn undirected(&self) -> Vec<Vec<usize>> {
        let mut s = vec![Vec::new(); self.nodes.len()];
        for a in &self.arcs {
            s[a.source].push(a.target);
            s[a.target].push(a.source);
        }
        s
    }

    /// Kahn's algorithm, always taking the smallest available index. On a
    /// cycle, returns the cycle's node sequence.
    pub fn topological_order(&self) -> std::result::Result<Vec<usize>, Vec<usize>> {
        let succ = self.successors();
        let mut indeg = vec![0usize; self.nodes.len()];
        for a in &self.arcs {
            indeg[a.target] += 1;
        }
        let mut ready: std::collections::BTreeSet<usize> =
            (0..self.nodes.len()).filter(|&i| indeg[i] == 0).collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(&i) = ready.iter().next() {
            ready.remove(&i);
            order.push(i);
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    ready.insert(j);
                }
            }
        }
        if order.len() == self.nodes.len() {
            return Ok(order);
        }
        // every remaining node has a remaining predecessor; walk back to a cycle
        let mut pred = vec![None; self.nodes.len()];
        for a in &self.arcs {
            if indeg[a.target] > 0 && indeg[a.source] > 0 {
                pred[a.target] = Some(a.source);
            }
        }
        let mut cur = (0..self.nodes.len())
            .find(|&i| indeg[i] > 0)
            .expect("cycle");
        let mut seen = vec![false; self.nodes.len()];
        while !seen[cur] {
            seen[cur] = true;
            cur = pred[cur].expect("remaining nodes have predecessors");
        }
        let start = cur;
        let mut cycle = vec![start];
        let mut c = pred[start].expect("cycle");
        while c != start {
            cycle.push(c);
            c = pred[c].expect("cycle");
        }
        cycle.reverse();
        Err(cycle)
    }

    pub fn check_acyclic(&self) -> bool {
        self.topological_order().is_ok()
    }

    /// Entry `i` counts facets of out-degree `i`.
    pub fn outdegree_histogram(&self) -> CountVector {
        let d = self.out_degrees();
        let len = d.iter().max().map_or(0, |m| m + 1);
        let mut h = vec![0u64; len];
        for x in d {
            h[x] += 1;
        }
        CountVector::from_u64s(&h)
    }

    pub fn poset(&self) -> Result<Poset> {
        let covers: Vec<(usize, usize)> = self.arcs.iter().map(|a| (a.source, a.target)).collect();
        Poset::from_covers(self.nodes.len(), &covers)
    }

    /// Undirected flip distances from `from`.
    pub fn distances(&self, from: usize) -> Vec<Option<usize>> {
        bfs(&self.undirected(), from)
    }

    pub fn eccentricity_profile(&self) -> Result<EccentricityReport> {
        let sources = self.sources();
        let [min] = sources.as_slice() else {
            return Err(Error::Precondition(format!(
                "expected a unique minimum, found {}",
                sources.len()
            )));
        };
        let adj = self.undirected();
        let dist = bfs(&adj, *min);
        let max_from_minimum = dist
            .iter()
            .map(|d| d.unwrap_or(usize::MAX))
            .max()
            .unwrap_or(0);
        let ecc: Vec<usize> = (0..self.nodes.len())
            .into_par_iter()
            .map(|i| {
                bfs(&adj, i)
                    .iter()
                    .map(|d| d.unwrap_or(usize::MAX))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok(EccentricityReport {
            minimum: *min,
            max_from_minimum,
            radius,
            diameter,
            any_within_4: radius <= 4,
        })
    }

    /// Graphviz rendering. Node ids are lex ranks; labels list the members
    /// that are not cyclic intervals.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph tamari_{}_{} {{", self.k, self.n);
        let _ = writeln!(s, "  rankdir=BT;");
        for (i, f) in self.nodes.iter().enumerate() {
            let label: Vec<String> = f.interior_members().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "  f{i} [label=\"{}\"];", label.join(" "));
        }
        for a in &self.arcs {
            let _ = writeln!(s, "  f{} -> f{};", a.source, a.target);
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "n": self.n,
            "nodes": self.nodes,
            "covers": self.arcs.iter().map(|a| [a.source, a.target]).collect::<Vec<_>>(),
        })
    }

    /// Whether `x -> n+1-x` maps the facet set to itself and reverses
    /// every arc.
    pub fn check_selfdual(&self) -> bool {
        let map = |f: &Facet| Facet::new(f.members().iter().map(Vector::reflect).collect());
        anti_isomorphic(self, self, map)
    }
}

fn bfs(adj: &[Vec<usize>], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[from] = Some(0);
    let mut q = VecDeque::from([from]);
    while let Some(u) = q.pop_front() {
        let d = dist[u].expect("visited");
        for &w in &adj[u] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                q.push_back(w);
            }
        }
    }
    dist
}

/// `map` is a bijection `a.nodes -> b.nodes` sending each arc of `a` to a
/// reversed arc of `b`, and arc counts agree.
fn anti_isomorphic(a: &TamariDigraph, b: &TamariDigraph, map: impl Fn(&Facet) -> Facet) -> bool {
    if a.nodes.len() != b.nodes.len() || a.arcs.len() != b.arcs.len() {
        return false;
    }
    let index: BTreeMap<&Facet, usize> = b.nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let Some(sigma) = a
        .nodes
        .iter()
        .map(|f| index.get(&map(f)).copied())
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let arcs: std::collections::HashSet<(usize, usize)> =
        b.arcs.iter().map(|x| (x.source, x.target)).collect();
    a.arcs
        .iter()
        .all(|x| arcs.contains(&(sigma[x.target], sigma[x.source])))
}

/// Whether complementation maps the order on `(k, n)` onto the reverse of
/// the order on `(n-k, n)`.
pub fn check_complement_antiiso(k: usize, n: usize) -> Result<bool> {
    let a = build_tamari(k, n)?;
    let b = build_tamari(n - k, n)?;
    Ok(complement_antiiso(&a, &b))
}

pub fn complement_antiiso(a: &TamariDigraph, b: &TamariDigraph) -> bool {
    let map = |f: &Facet| Facet::new(f.members().iter().map(Vector::complement).collect());
    anti_isomorphic(a, b, map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EccentricityReport {
    pub minimum: usize,
    pub max_from_minimum: usize,
    pub radius: usize,
    pub diameter: usize,
    pub any_within_4: bool,
}

/// Whether `order` is a shelling order of the pure complex with these
/// facets: each facet meets the union of the earlier ones in a nonempty
/// union of its ridges.
pub fn check_shelling(facets: &[Facet]) -> bool {
    shelling_failure(facets).is_none()
}

/// Position of the first facet violating the shelling condition.
pub fn shelling_failure(facets: &[Facet]) -> Option<usize> {
    let mut universe: Vec<&Vector> = facets.iter().flat_map(|f| f.members()).collect();
    universe.sort();
    universe.dedup();
    let words = universe.len().div_ceil(64);
    let sets: Vec<Vec<u64>> = facets
        .iter()
        .map(|f| {
            let mut s = vec![0u64; words];
            for v in f.members() {
                let i = universe.binary_search(&v).expect("member");
                s[i / 64] |= 1 << (i % 64);
            }
            s
        })
        .collect();
    let diff =
        |a: &[u64], b: &[u64]| -> Vec<u64> { a.iter().zip(b).map(|(x, y)| x & !y).collect() };
    let count = |a: &[u64]| -> u32 { a.iter().map(|x| x.count_ones()).sum() };
    for j in 1..sets.len() {
        // members v of F_j with F_j \ {v} inside an earlier facet
        let mut missing = vec![0u64; words];
        let diffs: Vec<Vec<u64>> = (0..j).map(|i| diff(&sets[j], &sets[i])).collect();
        for d in &diffs {
            if count(d) == 1 {
                for (m, x) in missing.iter_mut().zip(d) {
                    *m |= x;
                }
            }
        }
        if count(&missing) == 0 {
            return Some(j);
        }
        if diffs
            .iter()
            .any(|d| d.iter().zip(&missing).all(|(x, m)| x & m == 0))
        {
            return Some(j);
        }
    }
    None
}

/// A finite poset given by its cover relations, with reachability stored as
/// bitset rows. Bit positions follow a fixed linear extension, so the least
/// element of an up-set is its lowest bit.
#[derive(Clone, Debug)]
pub struct Poset {
    size: usize,
    words: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    up: Vec<Vec<u64>>,
    down: Vec<Vec<u64>>,
}

impl Poset {
    pub fn from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let words = size.div_ceil(64).max(1);
        let mut succ = vec![Vec::new(); size];
        let mut indeg = vec![0usize; size];
        for &(a, b) in covers {
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(size);
        let mut q: VecDeque<usize> = (0..size).filter(|&i| indeg[i] == 0).collect();
        while let Some(i) = q.pop_front() {
            order.push(i);
            for &j in &succ[i] {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    q.push_back(j);
                }
            }
        }
        if order.len() != size {
            return Err(Error::Precondition("cover relation has a cycle".into()));
        }
        let mut pos = vec![0usize; size];
        for (p, &i) in order.iter().enumerate() {
            pos[i] = p;
        }
        let mut up = vec![vec![0u64; words]; size];
        for &i in order.iter().rev() {
            up[i][pos[i] / 64] |= 1 << (pos[i] % 64);
            for &j in &succ[i] {
                let row_j = up[j].clone();
                for (x, y) in up[i].iter_mut().zip(row_j) {
                    *x |= y;
                }
            }
        }
        let mut down = vec![vec![0u64; words]; size];
        for (i, row) in up.iter().enumerate() {
            for p in iter_bits(row) {
                down[order[p]][pos[i] / 64] |= 1 << (pos[i] % 64);
            }
        }
        Ok(Self {
            size,
            words,
            order,
            pos,
            up,
            down,
        })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        let p = self.pos[y];
        self.up[x][p / 64] >> (p % 64) & 1 == 1
    }

    /// Number of comparable pairs `x < y`.
    pub fn relation_count(&self) -> usize {
        self.up
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>() - 1)
            .sum()
    }

    /// The bound is the first (joins) or last (meets) common element in the
    /// linear extension, provided it lies below (above) all the others.
    fn bound(&self, rows: &[Vec<u64>], x: usize, y: usize, least: bool) -> Option<usize> {
        let (rx, ry) = (&rows[x], &rows[y]);
        let word = |w: usize| rx[w] & ry[w];
        let p = if least {
            let w = (0..self.words).find(|&w| word(w) != 0)?;
            w * 64 + word(w).trailing_zeros() as usize
        } else {
            let w = (0..self.words).rev().find(|&w| word(w) != 0)?;
            w * 64 + 63 - word(w).leading_zeros() as usize
        };
        let cand = self.order[p];
        let rc = &rows[cand];
        (0..self.words)
            .all(|w| word(w) & !rc[w] == 0)
            .then_some(cand)
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.bound(&self.up, x, y, true)
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.bound(&self.down, x, y, false)
    }

    /// Every pair has a least upper and a greatest lower bound. Returns the
    /// first pair without one, if any.
    pub fn lattice_failure(&self) -> Option<(usize, usize)> {
        (0..self.size)
            .into_par_iter()
            .flat_map_iter(|x| (x + 1..self.size).map(move |y| (x, y)))
            .find_first(|&(x, y)| self.join(x, y).is_none() || self.meet(x, y).is_none())
    }

    pub fn is_lattice(&self) -> bool {
        self.size == 0 || self.lattice_failure().is_none()
    }
}

fn iter_bits(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &x)| {
        let mut x = x;
        std::iter::from_fn(move || {
            if x == 0 {
                None
            } else {
                let b = x.trailing_zeros() as usize;
                x &= x - 1;
                Some(w * 64 + b)
            }
        })
    })
}
