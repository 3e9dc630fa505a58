//! Rectangular tableaux of shape `(N^l)` with entries in `1..=m`, `m = N*l`.
//!
//! Tableaux are ordered by comparing columns left to right; a column is
//! greater when, at the first position where two columns differ, its entry
//! is smaller. So [`highest_tableau`] (every column `1, 2, ..., l`) is the
//! maximum and `Ord` on [`Tableau`] follows this order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Subset of `{1, ..., 64}` as a bitmask; bit `j - 1` marks element `j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut bits = 0u64;
        for e in elems {
            assert!((1..=64).contains(&e), "subset element {e} out of range");
            bits |= 1 << (e - 1);
        }
        Subset(bits)
    }

    /// `{1, ..., n}`
    pub fn full(n: usize) -> Self {
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        Self::from_elements([e])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=64).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn insert(self, e: usize) -> Self {
        Subset(self.0 | (1 << (e - 1)))
    }

    pub fn remove(self, e: usize) -> Self {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Self {
        Subset(Self::full(n).0 & !self.0)
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let e = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(e)
        })
    }

    pub fn elements_desc(self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().collect();
        v.reverse();
        v
    }

    /// Number of elements of `self` strictly smaller than `e`.
    pub fn count_below(self, e: usize) -> usize {
        if e <= 1 {
            return 0;
        }
        let mask = if e > 64 { u64::MAX } else { (1u64 << (e - 1)) - 1 };
        (self.0 & mask).count_ones() as usize
    }

    /// Number of elements of `self` strictly greater than `e`.
    pub fn count_above(self, e: usize) -> usize {
        if e >= 64 {
            return 0;
        }
        (self.0 >> e).count_ones() as usize
    }

    /// All `k`-element subsets of `{1, ..., n}`, in increasing bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> Vec<Subset> {
        if k > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Subset>) {
            if cur.len() == k {
                out.push(Subset::from_elements(cur.iter().copied()));
                return;
            }
            for e in start..=n {
                if n - e + 1 < k - cur.len() {
                    break;
                }
                cur.push(e);
                rec(e + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All `k`-element subsets of `self`.
    pub fn subsets_of_size(self, k: usize) -> Vec<Subset> {
        let elems: Vec<usize> = self.elements().collect();
        Subset::all_of_size(elems.len(), k)
            .into_iter()
            .map(|idx| Subset::from_elements(idx.elements().map(|i| elems[i - 1])))
            .collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    /// Elements in decreasing order, e.g. `{3,1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements_desc().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements_desc().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&e| !(1..=64).contains(&e)) {
            return Err(serde::de::Error::custom("subset element out of range 1..=64"));
        }
        let s = Subset::from_elements(v.iter().copied());
        if s.len() != v.len() {
            return Err(serde::de::Error::custom("repeated subset element"));
        }
        Ok(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Shape {
    n: usize,
    l: usize,
}

impl Shape {
    pub fn new(n: usize, l: usize) -> Result<Self> {
        if n < 2 || l < 1 {
            return Err(Error::InvalidInput(format!("shape needs N >= 2 and l >= 1, got N={n}, l={l}")));
        }
        if n * l > 64 {
            return Err(Error::InvalidInput(format!("N*l = {} exceeds 64", n * l)));
        }
        Ok(Shape { n, l })
    }

    /// Number of columns; also the strand color bound.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn l(&self) -> usize {
        self.l
    }

    /// Entry bound `N * l`.
    pub fn m(&self) -> usize {
        self.n * self.l
    }
}

/// A `gl_m` weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<usize>);

impl GlWeight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(N, ..., N, 0, ..., 0)` with `l` leading `N`s.
    pub fn highest(shape: Shape) -> Self {
        let mut v = vec![0; shape.m()];
        v[..shape.l()].fill(shape.n());
        GlWeight(v)
    }

    /// Membership in `Λ(m, m)_N`.
    pub fn is_level(&self, shape: Shape) -> bool {
        self.len() == shape.m() && self.total() == shape.m() && self.0.iter().all(|&k| k <= shape.n())
    }

    /// All weights in `Λ(m, m)_N`, lexicographically descending.
    pub fn all_level(shape: Shape) -> Vec<GlWeight> {
        let (n, m) = (shape.n(), shape.m());
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m);
        fn rec(n: usize, m: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<GlWeight>) {
            if cur.len() == m {
                if left == 0 {
                    out.push(GlWeight(cur.clone()));
                }
                return;
            }
            let slots = m - cur.len();
            for k in (0..=n.min(left)).rev() {
                if left - k > (slots - 1) * n {
                    continue;
                }
                cur.push(k);
                rec(n, m, left - k, cur, out);
                cur.pop();
            }
        }
        rec(n, m, m, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Column-strict filling of the `l x N` rectangle, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Shape,
    entries: Vec<u8>,
}

impl Tableau {
    /// Builds a tableau from its rows (top row first); checks column-strictness.
    pub fn from_rows(shape: Shape, rows: &[Vec<usize>]) -> Result<Self> {
        if rows.len() != shape.l() || rows.iter().any(|r| r.len() != shape.n()) {
            return Err(Error::ShapeMismatch(format!(
                "expected {} rows of length {}",
                shape.l(),
                shape.n()
            )));
        }
        let m = shape.m();
        let mut entries = Vec::with_capacity(m);
        for row in rows {
            for &e in row {
                if e < 1 || e > m {
                    return Err(Error::InvalidInput(format!("entry {e} outside 1..={m}")));
                }
                entries.push(e as u8);
            }
        }
        let t = Tableau { shape, entries };
        if !t.is_column_strict() {
            return Err(Error::InvalidInput("tableau is not column-strict".into()));
        }
        Ok(t)
    }

    fn from_columns_unchecked(shape: Shape, cols: &[Vec<usize>]) -> Self {
        let (n, l) = (shape.n(), shape.l());
        let mut entries = vec![0u8; n * l];
        for (c, col) in cols.iter().enumerate() {
            for (r, &e) in col.iter().enumerate() {
                entries[r * n + c] = e as u8;
            }
        }
        Tableau { shape, entries }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Entry at `row`, `col` (both 0-based).
    pub fn get(&self, row: usize, col: usize) -> usize {
        self.entries[row * self.shape.n() + col] as usize
    }

    fn set(&mut self, row: usize, col: usize, e: usize) {
        let n = self.shape.n();
        self.entries[row * n + col] = e as u8;
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.shape.n())
            .map(|r| r.iter().map(|&e| e as usize).collect())
            .collect()
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        (0..self.shape.l()).map(|r| self.get(r, col)).collect()
    }

    /// Entries of column `col` as a subset of `{1..m}`.
    pub fn column_set(&self, col: usize) -> Subset {
        Subset::from_elements(self.column(col))
    }

    fn column_major(&self) -> impl Iterator<Item = u8> + '_ {
        let (n, l) = (self.shape.n(), self.shape.l());
        (0..n).flat_map(move |c| (0..l).map(move |r| self.entries[r * n + c]))
    }

    pub fn is_column_strict(&self) -> bool {
        let (n, l) = (self.shape.n(), self.shape.l());
        (0..n).all(|c| (1..l).all(|r| self.get(r - 1, c) < self.get(r, c)))
    }

    /// Rows weakly increase left to right (on top of column-strictness).
    pub fn is_semistandard(&self) -> bool {
        let (n, l) = (self.shape.n(), self.shape.l());
        self.is_column_strict() && (0..l).all(|r| (1..n).all(|c| self.get(r, c - 1) <= self.get(r, c)))
    }

    /// Replaces the entry at (`row`, `col`); `None` if the result is not
    /// column-strict.
    pub fn with_entry(&self, row: usize, col: usize, e: usize) -> Option<Tableau> {
        let mut t = self.clone();
        t.set(row, col, e);
        let l = self.shape.l();
        let ok_above = row == 0 || t.get(row - 1, col) < e;
        let ok_below = row + 1 == l || e < t.get(row + 1, col);
        (ok_above && ok_below).then_some(t)
    }

    /// Position of entry `e` in column `col`, if present.
    pub fn find_in_column(&self, col: usize, e: usize) -> Option<usize> {
        (0..self.shape.l()).find(|&r| self.get(r, col) == e)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{self}")
    }
}

impl fmt::Display for Tableau {
    /// Rows separated by `/`, e.g. `[1 1 2/2 3 4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape
            .cmp(&other.shape)
            .then_with(|| other.column_major().cmp(self.column_major()))
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    #[serde(rename = "N")]
    n: usize,
    l: usize,
    rows: Vec<Vec<usize>>,
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRepr { n: self.shape.n(), l: self.shape.l(), rows: self.rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableauRepr::deserialize(d)?;
        let shape = Shape::new(r.n, r.l).map_err(serde::de::Error::custom)?;
        Tableau::from_rows(shape, &r.rows).map_err(serde::de::Error::custom)
    }
}

/// Three-way comparison in the tableau order.
pub fn compare(a: &Tableau, b: &Tableau) -> Ordering {
    a.cmp(b)
}

/// The tableau whose `r`-th row is constantly `r`.
pub fn highest_tableau(shape: Shape) -> Tableau {
    let rows: Vec<Vec<usize>> = (1..=shape.l()).map(|r| vec![r; shape.n()]).collect();
    Tableau::from_rows(shape, &rows).expect("highest tableau is column-strict")
}

/// Occurrence counts of each entry `1..=m`.
pub fn tableau_type(t: &Tableau) -> GlWeight {
    let mut k = vec![0; t.shape.m()];
    for &e in &t.entries {
        k[e as usize - 1] += 1;
    }
    GlWeight(k)
}

/// `ν^i` = set of columns (numbered `1..=N`) containing entry `i`, for `i = 1..=m`.
pub fn tableau_to_nu(t: &Tableau) -> Vec<Subset> {
    let (n, l, m) = (t.shape.n(), t.shape.l(), t.shape.m());
    let mut nu = vec![Subset::EMPTY; m];
    for c in 0..n {
        for r in 0..l {
            let e = t.get(r, c);
            nu[e - 1] = nu[e - 1].insert(c + 1);
        }
    }
    nu
}

/// `μ^i` = entry set of column `i`, for `i = 1..=N`.
pub fn tableau_to_mu(t: &Tableau) -> Vec<Subset> {
    (0..t.shape.n()).map(|c| t.column_set(c)).collect()
}

/// Inverse of [`tableau_to_nu`].
pub fn tableau_from_nu(shape: Shape, nu: &[Subset]) -> Result<Tableau> {
    if nu.len() != shape.m() {
        return Err(Error::ShapeMismatch(format!("expected {} subsets, got {}", shape.m(), nu.len())));
    }
    let cols: Vec<Vec<usize>> = (1..=shape.n())
        .map(|c| (1..=shape.m()).filter(|&i| nu[i - 1].contains(c)).collect())
        .collect();
    check_columns(shape, &cols)?;
    Ok(Tableau::from_columns_unchecked(shape, &cols))
}

/// Inverse of [`tableau_to_mu`].
pub fn tableau_from_mu(shape: Shape, mu: &[Subset]) -> Result<Tableau> {
    if mu.len() != shape.n() {
        return Err(Error::ShapeMismatch(format!("expected {} subsets, got {}", shape.n(), mu.len())));
    }
    let cols: Vec<Vec<usize>> = mu.iter().map(|s| s.elements().collect()).collect();
    check_columns(shape, &cols)?;
    Ok(Tableau::from_columns_unchecked(shape, &cols))
}

fn check_columns(shape: Shape, cols: &[Vec<usize>]) -> Result<()> {
    for col in cols {
        if col.len() != shape.l() {
            return Err(Error::ShapeMismatch(format!("column of height {} in shape with l={}", col.len(), shape.l())));
        }
        if col.iter().any(|&e| e < 1 || e > shape.m()) {
            return Err(Error::InvalidInput("column entry out of range".into()));
        }
    }
    Ok(())
}

/// Tableaux of `shape`, optionally of a fixed type, sorted strictly
/// descending in the tableau order.
pub fn enumerate_tableaux(shape: Shape, ty: Option<&GlWeight>, semistandard_only: bool) -> Vec<Tableau> {
    let (n, l, m) = (shape.n(), shape.l(), shape.m());
    if let Some(k) = ty {
        if k.len() != m || k.total() != m {
            return Vec::new();
        }
    }
    // Columns in ascending lexicographic order, i.e. descending tableau order.
    let mut columns: Vec<Vec<usize>> = Subset::all_of_size(m, l)
        .into_iter()
        .map(|s| s.elements().collect())
        .collect();
    columns.sort();

    let mut remaining: Vec<i64> = match ty {
        Some(k) => k.0.iter().map(|&x| x as i64).collect(),
        None => vec![i64::MAX / 4; m],
    };
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut out = Vec::new();

    fn rec(
        shape: Shape,
        columns: &[Vec<usize>],
        semistandard_only: bool,
        remaining: &mut [i64],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if chosen.len() == shape.n() {
            if remaining.iter().all(|&r| r == 0 || r >= i64::MAX / 8) {
                let cols: Vec<Vec<usize>> = chosen.iter().map(|&i| columns[i].clone()).collect();
                out.push(Tableau::from_columns_unchecked(shape, &cols));
            }
            return;
        }
        for (idx, col) in columns.iter().enumerate() {
            if semistandard_only {
                if let Some(&prev) = chosen.last() {
                    if columns[prev].iter().zip(col).any(|(a, b)| a > b) {
                        continue;
                    }
                }
            }
            if col.iter().any(|&e| remaining[e - 1] == 0) {
                continue;
            }
            for &e in col {
                remaining[e - 1] -= 1;
            }
            chosen.push(idx);
            rec(shape, columns, semistandard_only, remaining, chosen, out);
            chosen.pop();
            for &e in col {
                remaining[e - 1] += 1;
            }
        }
    }

    rec(shape, &columns, semistandard_only, &mut remaining, &mut chosen, &mut out);
    out
}

/// One step of the peeling procedure: `(i, r, tableau after the step)`.
pub type PeelStep = (usize, usize, Tableau);

/// The peeling steps for a semistandard tableau, ending at the highest
/// tableau. Each step picks the smallest `i` in `1..m` such that rows
/// `1..=i` contain an entry `i + 1`, and lowers all of those entries to `i`.
pub fn peel_steps(t: &Tableau) -> Result<Vec<PeelStep>> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    let shape = t.shape();
    let (n, l, m) = (shape.n(), shape.l(), shape.m());
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let found = (1..m).find_map(|i| {
            let cells: Vec<(usize, usize)> = (0..l.min(i))
                .flat_map(|r| (0..n).map(move |c| (r, c)))
                .filter(|&(r, c)| cur.get(r, c) == i + 1)
                .collect();
            (!cells.is_empty()).then_some((i, cells))
        });
        let Some((i, cells)) = found else { break };
        for &(r, c) in &cells {
            cur.set(r, c, i);
        }
        steps.push((i, cells.len(), cur.clone()));
    }
    debug_assert_eq!(cur, highest_tableau(shape));
    Ok(steps)
}

/// The peel word `[(i_1, r_1), ..., (i_s, r_s)]`; the first pair is the
/// outermost (last applied) divided power.
pub fn peel_lt(t: &Tableau) -> Result<Vec<(usize, usize)>> {
    Ok(peel_steps(t)?.into_iter().map(|(i, r, _)| (i, r)).collect())
}
