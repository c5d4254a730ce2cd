//! Invariant suites over a fixed `(k, n)`, reported as JSON.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::complex::{
    binomial, build_complex, check_pseudomanifold, check_pure, facets_are_cliques, interior_ridges,
    multidim_catalan, narayana_by_peaks, ComplexKind, Facet, Method,
};
use crate::error::{Error, Result};
use crate::geometry::{
    bending_vector, check_geom_orientation, classify_cube_diagonal, cube_face,
    cube_triangulation_diameter, ridge_certificates, row_profiles, weight_regularity_check,
    CubeTriangulation, DiagonalClass,
};
use crate::separation::{
    dihedral_invariance, sep_equals_cyclic_intersection, sep_facets_in_nc, sep_topology_probe,
    sep_within_nc,
};
use crate::tableaux::{phi, summing_tableau, Mode};
use crate::tamari::{check_complement_antiiso, check_shelling, ridge_completions, TamariDigraph};
use crate::vector::Vector;

const MAX_LISTED: usize = 5;
const LATTICE_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Tableaux,
    Complex,
    Tamari,
    Geometry,
    Separation,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Core,
        Suite::Tableaux,
        Suite::Complex,
        Suite::Tamari,
        Suite::Geometry,
        Suite::Separation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Tableaux => "tableaux",
            Suite::Complex => "complex",
            Suite::Tamari => "tamari",
            Suite::Geometry => "geometry",
            Suite::Separation => "separation",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub k: usize,
    pub n: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = (Suite, &CheckOutcome)> {
        self.suites.iter().flat_map(|s| {
            s.checks
                .iter()
                .filter(|c| c.status == Status::Fail)
                .map(move |c| (s.suite, c))
        })
    }
}

struct Checks(Vec<CheckOutcome>);

impl Checks {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, Value)>) {
        let (status, detail) = match f() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        };
        self.0.push(CheckOutcome {
            name: name.into(),
            status,
            detail,
        });
    }

    fn skip(&mut self, name: &str, reason: &str) {
        self.0.push(CheckOutcome {
            name: name.into(),
            status: Status::Skipped,
            detail: json!({ "reason": reason }),
        });
    }
}

fn listed<T: Serialize>(items: &[T]) -> Value {
    json!({
        "count": items.len(),
        "first": items.iter().take(MAX_LISTED).collect::<Vec<_>>(),
    })
}

pub fn verify(k: usize, n: usize, suites: &[Suite]) -> Result<VerifyReport> {
    crate::error::check_params(k, n)?;
    let mut wanted: Vec<Suite> = suites.to_vec();
    wanted.sort();
    wanted.dedup();
    let mut reports = Vec::with_capacity(wanted.len());
    for s in wanted {
        let checks = match s {
            Suite::Core => core_suite(k, n),
            Suite::Tableaux => tableaux_suite(k, n),
            Suite::Complex => complex_suite(k, n),
            Suite::Tamari => tamari_suite(k, n),
            Suite::Geometry => geometry_suite(k, n),
            Suite::Separation => separation_suite(k, n),
        };
        reports.push(SuiteReport {
            suite: s,
            checks: checks.0,
        });
    }
    let passed = reports
        .iter()
        .all(|r| r.checks.iter().all(|c| c.status != Status::Fail));
    Ok(VerifyReport {
        k,
        n,
        passed,
        suites: reports,
    })
}

fn facets(k: usize, n: usize, kind: ComplexKind) -> Result<Vec<Facet>> {
    build_complex(k, n, kind)?.enumerate_facets(Method::Clique)
}

fn core_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    c.run("vector_count", || {
        let all = Vector::all(k, n)?;
        let expect = binomial(n as u64, k as u64);
        Ok((
            num_bigint::BigUint::from(all.len()) == expect,
            json!({ "count": all.len() }),
        ))
    });
    c.run("relations_reflexive_symmetric", || {
        let all = Vector::all(k, n)?;
        let mut bad = Vec::new();
        for kind in [ComplexKind::Nc, ComplexKind::Nn, ComplexKind::Sep] {
            for (p, i) in all.iter().enumerate() {
                if !kind.compatible(i, i) {
                    bad.push(json!([kind, i, i]));
                }
                for j in &all[p + 1..] {
                    if kind.compatible(i, j) != kind.compatible(j, i) {
                        bad.push(json!([kind, i, j]));
                    }
                }
            }
        }
        Ok((bad.is_empty(), listed(&bad)))
    });
    c.run("weakly_separated_implies_noncrossing", || {
        let r = sep_within_nc(k, n)?;
        Ok((r.holds(), json!(r)))
    });
    c.run("characteristic_vectors_are_filters", || {
        let all = Vector::all(k, n)?;
        let mut seen = BTreeSet::new();
        let mut bad = Vec::new();
        for v in &all {
            let m = v.char_vector();
            let ones: usize = v.path_offsets().map(|c| n - k - c).sum();
            if !m.is_filter() || m.ones() != ones || !seen.insert(m.rows().to_vec()) {
                bad.push(v.clone());
            }
        }
        Ok((bad.is_empty(), listed(&bad)))
    });
    c.run("dihedral_involutions", || {
        let all = Vector::all(k, n)?;
        let bad: Vec<&Vector> = all
            .iter()
            .filter(|v| {
                v.reflect().reflect() != **v
                    || v.complement().complement() != **v
                    || v.cyclic_shift(n as i64) != **v
                    || v.cyclic_shift(1).cyclic_shift(-1) != **v
            })
            .collect();
        Ok((bad.is_empty(), listed(&bad)))
    });
    c
}

fn tableaux_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    let max = Vector::max_vector(k, n);
    for (kind, mode, name) in [
        (ComplexKind::Nc, Mode::Nc, "decomposition_roundtrip_nc"),
        (ComplexKind::Nn, Mode::Nn, "decomposition_roundtrip_nn"),
    ] {
        c.run(name, || {
            let max = max.clone()?;
            let fs = facets(k, n, kind)?;
            let mut tableaux = BTreeSet::new();
            let mut bad = Vec::new();
            for f in &fs {
                let cols: Vec<Vector> =
                    f.members().iter().filter(|v| **v != max).cloned().collect();
                let t = summing_tableau(k, n, &cols)?;
                let table = phi(&t, mode);
                if table.columns() != cols.as_slice()
                    || table.marks().len() != k * (n - k)
                    || !tableaux.insert(t.rows().to_vec())
                {
                    bad.push(f.clone());
                }
            }
            Ok((
                bad.is_empty(),
                json!({ "facets": fs.len(), "failures": listed(&bad) }),
            ))
        });
    }
    c.run("push_completes_ridges", || {
        let fs = facets(k, n, ComplexKind::Nc)?;
        let set: BTreeSet<&Facet> = fs.iter().collect();
        let ridges = interior_ridges(&fs);
        let mut bad = Vec::new();
        for r in &ridges {
            let ok = ridge_completions(r).is_ok_and(|(lo, up)| {
                let with = |v: Vector| {
                    let mut m = r.clone();
                    m.push(v);
                    Facet::new(m)
                };
                lo != up && set.contains(&with(lo)) && set.contains(&with(up))
            });
            if !ok {
                bad.push(r.clone());
            }
        }
        Ok((
            bad.is_empty(),
            json!({ "ridges": ridges.len(), "failures": listed(&bad) }),
        ))
    });
    c.run("rotation_and_complement", || {
        let fs = facets(k, n, ComplexKind::Nc)?;
        let mut bad = Vec::new();
        for f in &fs {
            let total = f.len() as u64;
            let t = summing_tableau(k, n, f.members())?;
            let refl: Vec<Vector> = f.members().iter().map(Vector::reflect).collect();
            let comp: Vec<Vector> = f.members().iter().map(Vector::complement).collect();
            if t.rotated(total)? != summing_tableau(k, n, &refl)?
                || t.complemented(total)? != summing_tableau(n - k, n, &comp)?
            {
                bad.push(f.clone());
            }
        }
        Ok((bad.is_empty(), listed(&bad)))
    });
    c
}

fn complex_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    c.run("edge_counts", || {
        let mut detail = serde_json::Map::new();
        for kind in [ComplexKind::Nc, ComplexKind::Nn, ComplexKind::Sep] {
            let cx = build_complex(k, n, kind)?;
            detail.insert(
                kind.name().into(),
                json!({ "edges": cx.edge_count(), "non_edges": cx.non_edge_count() }),
            );
        }
        let ok = if (k, n) == (3, 6) {
            detail["nc"] == json!({ "edges": 155, "non_edges": 35 })
        } else {
            true
        };
        Ok((ok, Value::Object(detail)))
    });
    c.run("facet_counts", || {
        let cat = multidim_catalan(k, n)?;
        let nc = facets(k, n, ComplexKind::Nc)?.len();
        let nn = facets(k, n, ComplexKind::Nn)?.len();
        let ok = num_bigint::BigUint::from(nc) == cat && nc == nn;
        Ok((
            ok,
            json!({ "nc": nc, "nn": nn, "catalan": cat.to_string() }),
        ))
    });
    c.run("flip_equals_clique", || {
        let cx = build_complex(k, n, ComplexKind::Nc)?;
        let a = cx.enumerate_facets(Method::Flip)?;
        let b = cx.enumerate_facets(Method::Clique)?;
        Ok((a == b, json!({ "flip": a.len(), "clique": b.len() })))
    });
    c.run("pure_nn", || {
        let cx = build_complex(k, n, ComplexKind::Nn)?;
        let fs = cx.enumerate_facets(Method::Clique)?;
        Ok((
            check_pure(&cx, &fs) && facets_are_cliques(&cx, &fs),
            json!({ "facets": fs.len() }),
        ))
    });
    c.run("pure_pseudomanifold_nc", || {
        let cx = build_complex(k, n, ComplexKind::Nc)?;
        let fs = cx.enumerate_facets(Method::Clique)?;
        let pm = check_pseudomanifold(&fs);
        let ok = check_pure(&cx, &fs) && facets_are_cliques(&cx, &fs) && pm.ok;
        Ok((
            ok,
            json!({
                "ridges": pm.ridges,
                "interior_ridges": pm.interior_ridges,
                "boundary_ridges": pm.boundary_ridges,
                "reduced_violations": listed(&pm.reduced_violations),
                "boundary_violations": listed(&pm.boundary_violations),
            }),
        ))
    });
    c.run("f_vectors_agree", || {
        let nc = build_complex(k, n, ComplexKind::Nc)?.f_vector();
        let nn = build_complex(k, n, ComplexKind::Nn)?.f_vector();
        Ok((nc == nn, json!({ "nc": nc, "nn": nn })))
    });
    c.run("h_vectors_agree", || {
        let nc = build_complex(k, n, ComplexKind::Nc)?.h_vector()?;
        let nn = build_complex(k, n, ComplexKind::Nn)?.h_vector()?;
        Ok((nc == nn, json!({ "nc": nc, "nn": nn })))
    });
    c.run("h_vector_shape", || {
        let h = build_complex(k, n, ComplexKind::Nc)?.h_vector()?;
        let top = (k * (n - k) + 1).saturating_sub(n);
        let vals = h
            .to_u64s()
            .ok_or_else(|| Error::ResourceLimit("h-vector entry exceeds u64".into()))?;
        let at = |i: usize| vals.get(i).copied().unwrap_or(0);
        let ok = at(top) == 1
            && (top + 1..vals.len()).all(|i| at(i) == 0)
            && (0..=top).all(|i| at(i) == at(top - i));
        Ok((ok, json!({ "h": h, "top_index": top })))
    });
    if k * (n - k) <= 20 {
        c.run("h_vector_equals_peak_distribution", || {
            let h = build_complex(k, n, ComplexKind::Nc)?.h_vector()?;
            let peaks = narayana_by_peaks(k, n)?;
            Ok((
                h.trimmed() == peaks.trimmed(),
                json!({ "h": h, "peaks": peaks }),
            ))
        });
    } else {
        c.skip("h_vector_equals_peak_distribution", "k(n-k) > 20");
    }
    c
}

fn tamari_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    let built = facets(k, n, ComplexKind::Nc).and_then(|fs| TamariDigraph::from_facets(k, n, fs));
    let d = match built {
        Ok(d) => d,
        Err(e) => {
            c.run("build", || Err(e));
            return c;
        }
    };
    c.run("acyclic", || match d.topological_order() {
        Ok(_) => Ok((true, Value::Null)),
        Err(cycle) => Ok((false, json!({ "cycle": cycle }))),
    });
    c.run("unique_source_and_sink", || {
        let (so, si) = (d.sources(), d.sinks());
        Ok((
            so.len() == 1 && si.len() == 1,
            json!({ "sources": so, "sinks": si }),
        ))
    });
    c.run("outdegree_sum_equals_interior_ridges", || {
        let total: usize = d.out_degrees().iter().sum();
        let ridges = interior_ridges(d.nodes()).len();
        Ok((
            total == ridges,
            json!({ "arcs": total, "interior_ridges": ridges }),
        ))
    });
    c.run("outdegree_histogram_equals_h_vector", || {
        let hist = d.outdegree_histogram();
        let h = build_complex(k, n, ComplexKind::Nc)?.h_vector()?;
        Ok((
            hist.trimmed() == h.trimmed(),
            json!({ "histogram": hist, "h": h }),
        ))
    });
    if d.nodes().len() > LATTICE_LIMIT {
        c.skip(
            "lattice",
            "more facets than the pairwise lattice test handles",
        );
    } else {
        c.run("lattice", || {
            let p = d.poset()?;
            match p.lattice_failure() {
                None => Ok((true, json!({ "relations": p.relation_count() }))),
                Some((x, y)) => Ok((false, json!({ "pair": [&d.nodes()[x], &d.nodes()[y]] }))),
            }
        });
    }
    c.run("selfdual", || Ok((d.check_selfdual(), Value::Null)));
    c.run("complement_anti_isomorphism", || {
        Ok((check_complement_antiiso(k, n)?, Value::Null))
    });
    c.run("shelling", || {
        let order = d
            .topological_order()
            .map_err(|_| Error::Precondition("digraph has a cycle".into()))?;
        let fs: Vec<Facet> = order.iter().map(|&i| d.nodes()[i].clone()).collect();
        Ok((check_shelling(&fs), Value::Null))
    });
    c.run("geom_orientation", || {
        let r = check_geom_orientation(&d);
        let arcs: Vec<_> = r.failures.iter().map(|&i| &d.arcs()[i]).collect();
        Ok((
            r.holds(),
            json!({ "arcs": r.arcs_checked, "failures": listed(&arcs) }),
        ))
    });
    c.run("eccentricity", || {
        Ok((true, json!(d.eccentricity_profile()?)))
    });
    c
}

fn geometry_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    c.run("bending_vectors_positive", || {
        let mut checked = 0;
        let mut bad = Vec::new();
        for v in Vector::all(k, n)? {
            for a1 in 1..=k {
                for a2 in a1 + 1..=k {
                    let Ok(b) = bending_vector(&v, a1, a2) else {
                        continue;
                    };
                    checked += 1;
                    if b.sum() != 0 || b.dot_objective() <= 0 {
                        bad.push(json!({ "vector": v, "rows": [a1, a2] }));
                    }
                }
            }
        }
        Ok((
            bad.is_empty(),
            json!({ "segments": checked, "failures": listed(&bad) }),
        ))
    });
    c.run("ridge_certificates", || {
        let certs = ridge_certificates(k, n)?;
        let bad: Vec<&Vec<Vector>> = certs
            .iter()
            .filter(|(_, r)| !r.as_ref().is_ok_and(|c| c.holds()))
            .map(|(r, _)| r)
            .collect();
        Ok((
            bad.is_empty(),
            json!({ "ridges": certs.len(), "failures": listed(&bad) }),
        ))
    });
    for (mode, name) in [
        (Mode::Nc, "weight_regularity_nc"),
        (Mode::Nn, "weight_regularity_nn"),
    ] {
        c.run(name, || {
            let r = weight_regularity_check(k, n, mode)?;
            Ok((r.holds(), json!(r)))
        });
    }
    c.run("row_profiles_coincide", || {
        let ps = row_profiles(k, n)?;
        let bad: Vec<usize> = ps.iter().filter(|p| !p.coincide()).map(|p| p.row).collect();
        Ok((bad.is_empty(), json!({ "rows": ps.len(), "failures": bad })))
    });
    c.run("cube_diagonals_match_predicates", || {
        let all = Vector::all(k, n)?;
        let mut bad = Vec::new();
        for i in &all {
            for j in &all {
                let face = cube_face(i, j)?;
                let class = classify_cube_diagonal(&face, i, j)?;
                let expect = match (crate::is_nonnesting(i, j)?, crate::is_noncrossing(i, j)?) {
                    (true, true) => DiagonalClass::Both,
                    (true, false) => DiagonalClass::Nonnesting,
                    (false, true) => DiagonalClass::Noncrossing,
                    (false, false) => DiagonalClass::Other,
                };
                let verts = face.vertices()?;
                let (lo, hi) = face.extremes();
                let same = cube_face(&lo, &hi)?.vertices()?;
                let a: BTreeSet<&Vector> = verts.iter().collect();
                let b: BTreeSet<&Vector> = same.iter().collect();
                if class != expect || a.len() != 1 << face.dimension() || a != b {
                    bad.push([i.clone(), j.clone()]);
                }
            }
        }
        Ok((
            bad.is_empty(),
            json!({ "pairs": all.len() * all.len(), "failures": listed(&bad) }),
        ))
    });
    c.run("cube_triangulation_diameters", || {
        let mut rows = Vec::new();
        let mut ok = true;
        for d in 0..=5u64 {
            let s = cube_triangulation_diameter(d as usize, CubeTriangulation::Standard)?;
            let t = cube_triangulation_diameter(d as usize, CubeTriangulation::Noncrossing)?;
            ok &= binomial(d, 2) == s.into() && binomial(d + 1, 3) == t.into();
            rows.push(json!({ "d": d, "standard": s, "noncrossing": t }));
        }
        Ok((ok, json!(rows)))
    });
    c
}

fn separation_suite(k: usize, n: usize) -> Checks {
    let mut c = Checks(Vec::new());
    c.run("equals_cyclic_intersection", || {
        let r = sep_equals_cyclic_intersection(k, n)?;
        Ok((r.holds(), json!(r)))
    });
    c.run("dihedral_invariance", || {
        let r = dihedral_invariance(k, n, ComplexKind::Sep)?;
        Ok((r.holds(), json!(r)))
    });
    c.run("facets_are_nc_faces", || {
        Ok((sep_facets_in_nc(k, n)?, Value::Null))
    });
    if (2..=n - 2).contains(&k) {
        c.run("topology_probe", || {
            let r = sep_topology_probe(k, n)?;
            Ok((r.agrees(), json!(r)))
        });
    } else {
        c.skip(
            "topology_probe",
            "the sphere comparison needs 2 <= k <= n-2",
        );
    }
    c
}
