//! Tableaux of rectangular shape and their nonnesting and noncrossing
//! decompositions into vectors.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{check_params, Error, Result};
use crate::vector::Vector;

/// A `k x (n-k)` matrix of nonnegative integers. Row 1 is the top row.
///
/// Rows weakly increase to the right and columns weakly increase from bottom
/// to top, i.e. `t[a][b] >= t[a+1][b]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct Tableau {
    k: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Deserialize)]
struct RawTableau {
    k: usize,
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl TryFrom<RawTableau> for Tableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        Tableau::new(raw.k, raw.n, raw.rows)
    }
}

impl Tableau {
    pub fn new(k: usize, n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        check_params(k, n)?;
        if rows.len() != k {
            return Err(Error::InvalidTableau(format!(
                "expected {k} rows, found {}",
                rows.len()
            )));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, expected {}",
                    a + 1,
                    row.len(),
                    n - k
                )));
            }
            if let Some(b) = row.windows(2).position(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} decreases between columns {} and {}",
                    a + 1,
                    b + 1,
                    b + 2
                )));
            }
        }
        for a in 1..k {
            if let Some(b) = (0..n - k).find(|&b| rows[a - 1][b] < rows[a][b]) {
                return Err(Error::InvalidTableau(format!(
                    "column {} increases from row {} to row {}",
                    b + 1,
                    a,
                    a + 1
                )));
            }
        }
        Ok(Self { k, n, rows })
    }

    pub fn zero(k: usize, n: usize) -> Result<Self> {
        check_params(k, n)?;
        Ok(Self {
            k,
            n,
            rows: vec![vec![0; n - k]; k],
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Entry `t_{a,b}` for 1-based indices, with `t_{a,0} = 0` and
    /// `t_{a,n-k+1} = max(T)`.
    pub fn get(&self, a: usize, b: usize) -> u64 {
        if b == 0 {
            0
        } else if b > self.n - self.k {
            self.max()
        } else {
            self.rows[a - 1][b - 1]
        }
    }

    /// `t_{1,n-k}`.
    pub fn max(&self) -> u64 {
        self.rows[0][self.n - self.k - 1]
    }

    pub fn is_strictly_increasing(&self) -> bool {
        let rows = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols = self
            .rows
            .windows(2)
            .all(|p| p[0].iter().zip(&p[1]).all(|(x, y)| x > y));
        rows && cols
    }

    pub fn add_vector(&mut self, v: &Vector) {
        for a in 1..=self.k {
            for b in 1..=self.n - self.k {
                self.rows[a - 1][b - 1] += u64::from(v.char_value(a, b));
            }
        }
    }

    /// The tableau of the reflected multiset `{n+1-I}` when the multiset has
    /// `total` members: `total - t_{k+1-a, n-k+1-b}`.
    pub fn rotated(&self, total: u64) -> Result<Self> {
        let m = self.n - self.k;
        if total < self.max() {
            return Err(Error::Precondition(format!(
                "multiset size {total} is below max(T) = {}",
                self.max()
            )));
        }
        let rows = (1..=self.k)
            .map(|a| {
                (1..=m)
                    .map(|b| total - self.rows[self.k - a][m - b])
                    .collect()
            })
            .collect();
        Ok(Self {
            k: self.k,
            n: self.n,
            rows,
        })
    }

    /// The tableau of the complemented multiset `{[n] \ I}` when the multiset
    /// has `total` members: `total - t_{b,a}` at cell `(a, b)`.
    pub fn complemented(&self, total: u64) -> Result<Self> {
        let (k, m) = (self.k, self.n - self.k);
        if total < self.max() {
            return Err(Error::Precondition(format!(
                "multiset size {total} is below max(T) = {}",
                self.max()
            )));
        }
        let rows = (1..=m)
            .map(|a| (1..=k).map(|b| total - self.rows[b - 1][a - 1]).collect())
            .collect();
        Ok(Self {
            k: m,
            n: self.n,
            rows,
        })
    }
}

/// The sum of the characteristic vectors of `l`.
pub fn summing_tableau(k: usize, n: usize, l: &[Vector]) -> Result<Tableau> {
    let mut t = Tableau::zero(k, n)?;
    for v in l {
        if v.k() != k || v.n() != n {
            return Err(Error::ParameterMismatch {
                k1: k,
                n1: n,
                k2: v.k(),
                n2: v.n(),
            });
        }
        t.add_vector(v);
    }
    Ok(t)
}

/// Which compatibility relation a decomposition respects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Nn,
    Nc,
}

/// Lex-sorted columns together with 1-based `(row, column)` marks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VectorTable {
    columns: Vec<Vector>,
    marks: BTreeSet<(usize, usize)>,
}

impl VectorTable {
    pub fn new(columns: Vec<Vector>, marks: BTreeSet<(usize, usize)>) -> Self {
        Self { columns, marks }
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn marks(&self) -> &BTreeSet<(usize, usize)> {
        &self.marks
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn into_columns(self) -> Vec<Vector> {
        self.columns
    }

    /// Marked rows of the 1-based column `c`, ascending.
    pub fn marked_rows(&self, c: usize) -> Vec<usize> {
        self.marks
            .iter()
            .filter(|&&(_, col)| col == c)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Column indices (1-based) carrying at least two marks.
    pub fn multiply_marked(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.columns.len() + 1];
        for &(_, c) in &self.marks {
            count[c] += 1;
        }
        (1..=self.columns.len())
            .filter(|&c| count[c] >= 2)
            .collect()
    }
}

/// A placed mark: row, column and the value sitting there (all 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Mark {
    pub row: usize,
    pub col: usize,
    pub value: u32,
}

pub(crate) struct Decomposition {
    pub columns: Vec<Vector>,
    /// Last insertion of every value in every row, maximal values included.
    pub marks: Vec<Mark>,
}

fn revlex_greater(p: &[u32], q: &[u32]) -> bool {
    for (x, y) in p.iter().rev().zip(q.iter().rev()) {
        if x != y {
            return x > y;
        }
    }
    false
}

pub(crate) fn decompose(t: &Tableau, mode: Mode) -> Decomposition {
    let (k, n) = (t.k, t.n);
    let m = n - k;
    let ell = t.max() as usize;
    let mut cols: Vec<Vec<u32>> = vec![Vec::with_capacity(k); ell];
    let mut marks = Vec::new();
    for a in 1..=k {
        for b in 0..=m {
            let value = (a + b) as u32;
            let count = t.get(a, b + 1) - t.get(a, b);
            for _ in 0..count {
                let mut best: Option<usize> = None;
                for (c, col) in cols.iter().enumerate() {
                    if col.len() != a - 1 || col.last().is_some_and(|&x| x >= value) {
                        continue;
                    }
                    match (mode, best) {
                        (_, None) => best = Some(c),
                        (Mode::Nc, Some(bc)) if revlex_greater(col, &cols[bc]) => best = Some(c),
                        _ => {}
                    }
                    if mode == Mode::Nn {
                        break;
                    }
                }
                let c = best.expect("a valid tableau always has a free box");
                cols[c].push(value);
                if let Some(last) = marks
                    .iter_mut()
                    .rev()
                    .find(|mk: &&mut Mark| mk.row == a && mk.value == value)
                {
                    last.col = c + 1;
                } else {
                    marks.push(Mark {
                        row: a,
                        col: c + 1,
                        value,
                    });
                }
            }
        }
    }
    let columns: Vec<Vector> = cols
        .into_iter()
        .map(|c| Vector::from_sorted_unchecked(c, n))
        .collect();
    debug_assert!(columns.windows(2).all(|w| w[0] <= w[1]));
    Decomposition { columns, marks }
}

fn api_table(t: &Tableau, d: Decomposition) -> VectorTable {
    let m = t.n - t.k;
    let marks = d
        .marks
        .iter()
        .filter(|mk| (mk.value as usize) < mk.row + m)
        .map(|mk| (mk.row, mk.col))
        .collect();
    VectorTable {
        columns: d.columns,
        marks,
    }
}

/// The unique pairwise nonnesting multiset with summing tableau `t`.
pub fn phi_nn(t: &Tableau) -> VectorTable {
    api_table(t, decompose(t, Mode::Nn))
}

/// The unique pairwise noncrossing multiset with summing tableau `t`.
pub fn phi_nc(t: &Tableau) -> VectorTable {
    api_table(t, decompose(t, Mode::Nc))
}

pub fn phi(t: &Tableau, mode: Mode) -> VectorTable {
    api_table(t, decompose(t, mode))
}

/// Marks read off the columns of `l` without running the insertion.
///
/// Returns one mark for every row `a` and every value `a+b-1`,
/// `b in 1..=n-k+1`, that occurs in row `a`. Among equal columns the
/// right-most copy carries the marks.
pub fn marked_positions(l: &[Vector], mode: Mode) -> Result<BTreeSet<(usize, usize)>> {
    let Some(first) = l.first() else {
        return Ok(BTreeSet::new());
    };
    let (k, n) = (first.k(), first.n());
    for v in l {
        first.same_params(v)?;
    }
    let mut out = BTreeSet::new();
    for a in 1..=k {
        for b in 1..=n - k + 1 {
            let value = (a + b - 1) as u32;
            let mut best: Option<usize> = None;
            for (c, v) in l.iter().enumerate() {
                if v.entry(a) != value {
                    continue;
                }
                let Some(bc) = best else {
                    best = Some(c);
                    continue;
                };
                let w = &l[bc];
                let better = match mode {
                    // nonnesting columns are comparable, so "largest" is unambiguous
                    Mode::Nn => v.entries() >= w.entries(),
                    Mode::Nc => {
                        let (vp, wp) = (&v.entries()[..a], &w.entries()[..a]);
                        if revlex_greater(wp, vp) {
                            true
                        } else if revlex_greater(vp, wp) {
                            false
                        } else {
                            v.entries()[a..] >= w.entries()[a..]
                        }
                    }
                };
                if better {
                    best = Some(c);
                }
            }
            if let Some(c) = best {
                out.insert((a, c + 1));
            }
        }
    }
    Ok(out)
}

fn check_push_input(l: &VectorTable) -> Result<(Tableau, Decomposition)> {
    let first = l
        .columns
        .first()
        .ok_or_else(|| Error::Precondition("empty table".into()))?;
    let (k, n) = (first.k(), first.n());
    let t = summing_tableau(k, n, &l.columns)?;
    if !t.is_strictly_increasing() || t.get(k, 1) == 0 {
        return Err(Error::Precondition(
            "summing tableau must be strictly increasing with t_{k,1} > 0".into(),
        ));
    }
    let d = decompose(&t, Mode::Nc);
    if d.columns != l.columns {
        return Err(Error::Precondition(
            "table is not the noncrossing decomposition of its summing tableau".into(),
        ));
    }
    Ok((t, d))
}

/// Pushes the lower mark of the doubly marked column of a noncrossing
/// table. Returns the enlarged table and the inserted vector.
pub fn push_last_with_vector(l: &VectorTable) -> Result<(VectorTable, Vector)> {
    let (t, d) = check_push_input(l)?;
    let (k, n) = (t.k, t.n);
    let api = api_table(&t, d);
    let doubled = api.multiply_marked();
    let b = match doubled.as_slice() {
        [] => return Err(Error::NoDoublyMarkedColumn),
        [b] => *b,
        _ => {
            return Err(Error::Precondition(format!(
                "{} columns carry several marks",
                doubled.len()
            )))
        }
    };
    let rows = api.marked_rows(b);
    let a = *rows.last().expect("doubly marked");
    let col_b = &api.columns[b - 1];
    let x = col_b.entry(a);
    // the column that one further copy of x in row a would land in
    let mut target: Option<usize> = None;
    for (c, v) in api.columns.iter().enumerate() {
        if v.entry(a) <= x || (a > 1 && v.entry(a - 1) >= x) {
            continue;
        }
        let better = match target {
            None => true,
            Some(tc) => revlex_greater(&v.entries()[..a - 1], &api.columns[tc].entries()[..a - 1]),
        };
        if better {
            target = Some(c);
        }
    }
    let Some(tc) = target else {
        return Err(Error::Internal(format!(
            "no free box for a further {x} in row {a}"
        )));
    };
    let mut entries = api.columns[tc].entries()[..a - 1].to_vec();
    entries.push(x);
    entries.extend_from_slice(&col_b.entries()[a..]);
    let j = Vector::new(entries, n)?;
    let mut t2 = t.clone();
    t2.add_vector(&j);
    let out = phi_nc(&t2);
    let mut expect = api.columns.clone();
    expect.push(j.clone());
    expect.sort();
    if out.columns != expect {
        return Err(Error::Internal(format!(
            "pushing produced {j}, which does not decompose"
        )));
    }
    debug_assert_eq!(k, j.k());
    Ok((out, j))
}

pub fn push_last(l: &VectorTable) -> Result<VectorTable> {
    push_last_with_vector(l).map(|(t, _)| t)
}

/// Reflects the columns of a table of `V*_{k,n}`, trading the image of
/// `(1..k)`, the maximal vector, for `(1..k)` itself.
fn reflect_columns(cols: &[Vector]) -> Result<Vec<Vector>> {
    let first = &cols[0];
    let (k, n) = (first.k(), first.n());
    let max = Vector::max_vector(k, n)?;
    let mut out: Vec<Vector> = cols
        .iter()
        .map(Vector::reflect)
        .filter(|v| *v != max)
        .collect();
    out.push(Vector::min_vector(k, n)?);
    out.sort();
    Ok(out)
}

/// Pushes the upper mark of the doubly marked column: the mirror image of
/// [`push_last`] under `x -> n+1-x`.
pub fn push_first_with_vector(l: &VectorTable) -> Result<(VectorTable, Vector)> {
    check_push_input(l)?;
    let first = &l.columns[0];
    let (k, n) = (first.k(), first.n());
    if !l.columns.contains(&Vector::min_vector(k, n)?) {
        return Err(Error::Precondition("(1,...,k) is not a column".into()));
    }
    let mirrored = reflect_columns(&l.columns)?;
    let t = summing_tableau(k, n, &mirrored)?;
    let (_, j) = push_last_with_vector(&phi_nc(&t))?;
    let j = j.reflect();
    let mut t2 = summing_tableau(k, n, &l.columns)?;
    t2.add_vector(&j);
    let out = phi_nc(&t2);
    let mut expect = l.columns.clone();
    expect.push(j.clone());
    expect.sort();
    if out.columns != expect {
        return Err(Error::Internal(format!(
            "pushing produced {j}, which does not decompose"
        )));
    }
    Ok((out, j))
}

pub fn push_first(l: &VectorTable) -> Result<VectorTable> {
    push_first_with_vector(l).map(|(t, _)| t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(cols: &[&[u32]], n: usize) -> Vec<Vector> {
        cols.iter()
            .map(|c| Vector::new(c.to_vec(), n).unwrap())
            .collect()
    }

    fn example_tableau() -> Tableau {
        Tableau::new(
            3,
            7,
            vec![vec![3, 7, 8, 8], vec![2, 4, 6, 8], vec![1, 2, 6, 6]],
        )
        .unwrap()
    }

    #[test]
    fn summing_tableau_of_nine_columns() {
        let l = vs(
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 5],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 4, 5],
                &[2, 5, 7],
                &[3, 5, 7],
                &[5, 6, 7],
            ],
            7,
        );
        assert_eq!(summing_tableau(3, 7, &l).unwrap(), example_tableau());
        let z = summing_tableau(3, 7, &[]).unwrap();
        assert_eq!(z, Tableau::zero(3, 7).unwrap());
    }

    #[test]
    fn phi_nn_example() {
        let l = phi_nn(&example_tableau());
        let expect = vs(
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 5],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 4, 5],
                &[2, 5, 7],
                &[3, 5, 7],
            ],
            7,
        );
        assert_eq!(l.columns(), expect.as_slice());
        let marks: BTreeSet<_> = [
            (1, 3),
            (1, 7),
            (1, 8),
            (2, 2),
            (2, 4),
            (2, 6),
            (2, 8),
            (3, 1),
            (3, 2),
            (3, 6),
        ]
        .into_iter()
        .collect();
        assert_eq!(l.marks(), &marks);
    }

    #[test]
    fn phi_nc_example() {
        let l = phi_nc(&example_tableau());
        let expect = vs(
            &[
                &[1, 2, 3],
                &[1, 2, 5],
                &[1, 5, 7],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 5, 7],
                &[3, 4, 5],
            ],
            7,
        );
        assert_eq!(l.columns(), expect.as_slice());
        let marks: BTreeSet<_> = [
            (1, 3),
            (1, 7),
            (1, 8),
            (2, 2),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 1),
            (3, 2),
            (3, 4),
        ]
        .into_iter()
        .collect();
        assert_eq!(l.marks(), &marks);
    }

    #[test]
    fn json_shapes() {
        let t = example_tableau();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"k":3,"n":7,"rows":[[3,7,8,8],[2,4,6,8],[1,2,6,6]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        let bad = r#"{"k":2,"n":4,"rows":[[2,1],[0,0]]}"#;
        assert!(serde_json::from_str::<Tableau>(bad).is_err());
        let z = phi_nc(&Tableau::zero(2, 5).unwrap());
        assert_eq!(
            serde_json::to_string(&z).unwrap(),
            r#"{"columns":[],"marks":[]}"#
        );
    }

    #[test]
    fn invalid_tableaux_name_the_violation() {
        let e = Tableau::new(2, 4, vec![vec![2, 1], vec![0, 0]]).unwrap_err();
        assert!(e.to_string().contains("row 1 decreases"));
        let e = Tableau::new(2, 4, vec![vec![0, 1], vec![1, 1]]).unwrap_err();
        assert!(e.to_string().contains("column 1 increases"));
        assert!(Tableau::new(2, 4, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn single_vector_decomposes_to_itself() {
        for v in Vector::all(3, 7).unwrap() {
            let t = summing_tableau(3, 7, std::slice::from_ref(&v)).unwrap();
            let want: Vec<Vector> = if t.max() == 0 {
                vec![]
            } else {
                vec![v.clone()]
            };
            assert_eq!(phi_nn(&t).columns(), want.as_slice());
            assert_eq!(phi_nc(&t).columns(), want.as_slice());
        }
    }

    fn eleven_columns() -> VectorTable {
        let cols = vs(
            &[
                &[1, 2, 3],
                &[1, 2, 5],
                &[1, 2, 7],
                &[1, 5, 7],
                &[1, 6, 7],
                &[2, 3, 4],
                &[2, 3, 5],
                &[2, 4, 5],
                &[2, 5, 7],
                &[3, 4, 5],
                &[4, 5, 6],
            ],
            7,
        );
        phi_nc(&summing_tableau(3, 7, &cols).unwrap())
    }

    #[test]
    fn eleven_column_table_has_its_last_column_doubly_marked() {
        let l = eleven_columns();
        assert_eq!(l.len(), 11);
        assert_eq!(l.multiply_marked(), vec![11]);
        assert_eq!(l.marked_rows(11), vec![1, 3]);
    }

    #[test]
    fn push_last_inserts_256() {
        let (out, j) = push_last_with_vector(&eleven_columns()).unwrap();
        assert_eq!(j.entries(), &[2, 5, 6]);
        assert_eq!(out.len(), 12);
        assert_eq!(out.columns()[8], j);
        assert!(out.multiply_marked().is_empty());
    }

    #[test]
    fn push_on_a_facet_errors() {
        let (out, _) = push_last_with_vector(&eleven_columns()).unwrap();
        assert_eq!(push_last(&out), Err(Error::NoDoublyMarkedColumn));
    }

    fn bending_ridge() -> VectorTable {
        let cols = vs(
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 2, 7],
                &[1, 4, 7],
                &[1, 6, 7],
                &[2, 3, 4],
                &[2, 4, 5],
                &[2, 4, 6],
                &[3, 4, 5],
                &[4, 5, 6],
                &[4, 6, 7],
            ],
            7,
        );
        phi_nc(&summing_tableau(3, 7, &cols).unwrap())
    }

    #[test]
    fn both_pushes_of_the_bending_ridge() {
        let l = bending_ridge();
        let b = l.multiply_marked();
        assert_eq!(b.len(), 1);
        assert_eq!(l.columns()[b[0] - 1].entries(), &[2, 4, 6]);
        let (_, last) = push_last_with_vector(&l).unwrap();
        let (_, first) = push_first_with_vector(&l).unwrap();
        assert_eq!(last.entries(), &[1, 4, 6]);
        assert_eq!(first.entries(), &[2, 4, 7]);
    }

    #[test]
    fn rule_marks_match_the_examples() {
        let t = example_tableau();
        for mode in [Mode::Nn, Mode::Nc] {
            let l = phi(&t, mode);
            let full: BTreeSet<_> = decompose(&t, mode)
                .marks
                .iter()
                .map(|m| (m.row, m.col))
                .collect();
            assert_eq!(marked_positions(l.columns(), mode).unwrap(), full);
        }
    }

    #[test]
    fn rotation_and_complement_of_tableaux() {
        let t = example_tableau();
        let l = phi_nc(&t);
        let refl: Vec<Vector> = l.columns().iter().map(Vector::reflect).collect();
        let total = l.len() as u64;
        assert_eq!(
            summing_tableau(3, 7, &refl).unwrap(),
            t.rotated(total).unwrap()
        );
        let comp: Vec<Vector> = l.columns().iter().map(Vector::complement).collect();
        assert_eq!(
            summing_tableau(4, 7, &comp).unwrap(),
            t.complemented(total).unwrap()
        );
    }
}
