//! The `U_v(sl_m)` action on tableau coordinates.
//!
//! `E_{-i}` turns one entry `i` into `i + 1` in a column that contains `i`
//! but not `i + 1`, with weight `v^{-a}` where `a` counts entries `i` minus
//! entries `i + 1` in columns strictly to the right. `E_{+i}` turns an
//! `i + 1` into `i` with weight `v^{b}`, `b` counting entries `i` minus
//! entries `i + 1` strictly to the left.
//!
//! Under `ν` (upright `i` carries the set of columns containing `i`) these
//! are exactly the ladder rungs of [`crate::webs::ladder_from_word`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{tableau_from_nu, tableau_to_nu, tableau_type, GlWeight, Shape, Tableau};
use crate::error::{Error, Result};
use crate::ring::{exact_divide, qfactorial, LaurentPoly};
use crate::tensor::{BasisIndex, BoundaryObject, TensorVector};
use crate::webs::Sign;

/// Sparse combination of tableau basis vectors `x^T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableauVector {
    shape: Shape,
    coords: BTreeMap<Tableau, LaurentPoly>,
}

impl TableauVector {
    pub fn zero(shape: Shape) -> Self {
        TableauVector { shape, coords: BTreeMap::new() }
    }

    pub fn delta(t: &Tableau) -> Self {
        let mut x = Self::zero(t.shape());
        x.add_term(t.clone(), &LaurentPoly::one());
        x
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, t: &Tableau) -> LaurentPoly {
        self.coords.get(t).cloned().unwrap_or_default()
    }

    /// Terms in ascending tableau order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Tableau, &LaurentPoly)> {
        self.coords.iter()
    }

    /// The largest tableau with a nonzero coefficient.
    pub fn leading(&self) -> Option<&Tableau> {
        self.coords.keys().next_back()
    }

    pub fn add_term(&mut self, t: Tableau, c: &LaurentPoly) {
        assert_eq!(t.shape(), self.shape, "tableau shape differs from the vector's");
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(t).or_default();
        *slot += c;
        if slot.is_zero() {
            self.coords.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &TableauVector, c: &LaurentPoly) {
        for (t, x) in &other.coords {
            self.add_term(t.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> TableauVector {
        let mut out = TableauVector::zero(self.shape);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &TableauVector) -> TableauVector {
        let mut out = self.clone();
        out.add_scaled(other, &-LaurentPoly::one());
        out
    }

    /// Every term has this type.
    pub fn is_homogeneous(&self, k: &GlWeight) -> bool {
        self.coords.keys().all(|t| tableau_type(t) == *k)
    }
}

impl fmt::Display for TableauVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coords.iter().rev().map(|(t, c)| format!("({c})·x^{t}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    rows: Vec<Vec<usize>>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct TableauVectorRepr {
    #[serde(rename = "N")]
    n: usize,
    l: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for TableauVector {
    /// Terms are listed in descending tableau order.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauVectorRepr {
            n: self.shape.n(),
            l: self.shape.l(),
            terms: self
                .coords
                .iter()
                .rev()
                .map(|(t, c)| TermRepr { rows: t.rows(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TableauVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TableauVectorRepr::deserialize(d)?;
        let shape = Shape::new(r.n, r.l).map_err(serde::de::Error::custom)?;
        let mut x = TableauVector::zero(shape);
        for t in r.terms {
            let tab = Tableau::from_rows(shape, &t.rows).map_err(serde::de::Error::custom)?;
            x.add_term(tab, &t.coeff);
        }
        Ok(x)
    }
}

/// `λ = (k_1 - k_2, ..., k_{m-1} - k_m)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SlWeight(pub Vec<i64>);

impl SlWeight {
    pub fn from_gl(k: &GlWeight) -> Self {
        SlWeight(k.0.windows(2).map(|w| w[0] as i64 - w[1] as i64).collect())
    }
}

/// The unique `k` with entries in `0..=N`, `k_i - k_{i+1} = λ_i` and
/// `Σ k_i = d`, if it exists.
pub fn phi(n: usize, lambda: &SlWeight, d: i64) -> Option<GlWeight> {
    let m = lambda.0.len() as i64 + 1;
    // k_j = k_1 - (λ_1 + ... + λ_{j-1})
    let mut prefix = vec![0i64];
    for &l in &lambda.0 {
        prefix.push(prefix.last().unwrap() + l);
    }
    let num = d + prefix.iter().sum::<i64>();
    if num % m != 0 {
        return None;
    }
    let k1 = num / m;
    let k: Vec<i64> = prefix.iter().map(|p| k1 - p).collect();
    k.iter()
        .all(|&x| (0..=n as i64).contains(&x))
        .then(|| GlWeight(k.into_iter().map(|x| x as usize).collect()))
}

pub fn weight_of(t: &Tableau) -> SlWeight {
    SlWeight::from_gl(&tableau_type(t))
}

fn check_index(shape: Shape, i: usize) -> Result<()> {
    if i == 0 || i >= shape.m() {
        return Err(Error::InvalidInput(format!("generator index {i} out of range 1..{}", shape.m())));
    }
    Ok(())
}

/// Image of one basis vector under `E_{±i}`.
fn act_on_tableau(sign: Sign, i: usize, t: &Tableau, out: &mut TableauVector, c: &LaurentPoly) {
    let (n, l) = (t.shape().n(), t.shape().l());
    let (from, to) = match sign {
        Sign::Minus => (i, i + 1),
        Sign::Plus => (i + 1, i),
    };
    let has = |col: usize, e: usize| (0..l).any(|r| t.get(r, col) == e);
    for col in 0..n {
        let Some(row) = t.find_in_column(col, from) else { continue };
        if has(col, to) {
            continue;
        }
        let Some(next) = t.with_entry(row, col, to) else { continue };
        let range: Box<dyn Iterator<Item = usize>> = match sign {
            Sign::Minus => Box::new(col + 1..n),
            Sign::Plus => Box::new(0..col),
        };
        let mut e = 0i32;
        for c2 in range {
            if has(c2, i) {
                e += 1;
            }
            if has(c2, i + 1) {
                e -= 1;
            }
        }
        if sign == Sign::Minus {
            e = -e;
        }
        out.add_term(next, &c.shift(e));
    }
}

/// `E_{±i} x`.
pub fn act_e(sign: Sign, i: usize, x: &TableauVector) -> Result<TableauVector> {
    check_index(x.shape, i)?;
    let mut out = TableauVector::zero(x.shape);
    for (t, c) in x.terms() {
        act_on_tableau(sign, i, t, &mut out, c);
    }
    Ok(out)
}

/// `E_{±i}^{(r)} x = E_{±i}^r x / [r]!`.
pub fn act_divided(sign: Sign, i: usize, r: usize, x: &TableauVector) -> Result<TableauVector> {
    check_index(x.shape, i)?;
    let mut y = x.clone();
    for _ in 0..r {
        y = act_e(sign, i, &y)?;
    }
    if r <= 1 {
        return Ok(y);
    }
    let f = qfactorial(r as u32);
    let mut out = TableauVector::zero(x.shape);
    for (t, c) in y.terms() {
        out.add_term(t.clone(), &exact_divide(c, &f)?);
    }
    Ok(out)
}

/// Applies an operator word `word[0] ⋯ word[s-1]` (last entry first).
pub fn act_word(word: &[(Sign, usize, usize)], x: &TableauVector) -> Result<TableauVector> {
    let mut y = x.clone();
    for &(sign, i, r) in word.iter().rev() {
        y = act_divided(sign, i, r, &y)?;
    }
    Ok(y)
}

/// `E_i^2 E_j x - c E_i E_j E_i x + E_j E_i^2 x` for generators of one sign.
pub fn serre_combination(sign: Sign, i: usize, j: usize, c: &LaurentPoly, x: &TableauVector) -> Result<TableauVector> {
    let e = |k: usize, y: &TableauVector| act_e(sign, k, y);
    let a = e(i, &e(i, &e(j, x)?)?)?;
    let b = e(i, &e(j, &e(i, x)?)?)?;
    let d = e(j, &e(i, &e(i, x)?)?)?;
    let mut out = a;
    out.add_scaled(&b, &-c.clone());
    out.add_scaled(&d, &LaurentPoly::one());
    Ok(out)
}

/// The standard tensor `x_{ν}` of a tableau; upright `i` is slot `i`.
pub fn tableau_to_tensor(t: &Tableau) -> TensorVector {
    let k = tableau_type(t);
    TensorVector::basis_vector(BoundaryObject::plain(&k.0), BasisIndex::new(tableau_to_nu(t)))
}

/// Transports a vector supported on tableaux of type `k` to `⊗ Λ^{k_i}`.
pub fn to_tensor(x: &TableauVector, k: &GlWeight) -> Result<TensorVector> {
    let space = BoundaryObject::plain(&k.0);
    let mut out = TensorVector::zero(space);
    for (t, c) in x.terms() {
        if tableau_type(t) != *k {
            return Err(Error::ShapeMismatch(format!("tableau {t} is not of type {k}")));
        }
        out.add_term(BasisIndex::new(tableau_to_nu(t)), c);
    }
    Ok(out)
}

/// Inverse of [`to_tensor`]; every factor must be plain.
pub fn from_tensor(shape: Shape, x: &TensorVector) -> Result<TableauVector> {
    if !x.space().is_all_plain() || x.space().len() != shape.m() {
        return Err(Error::ShapeMismatch(format!("{} is not a weight space of shape {}x{}", x.space(), shape.l(), shape.n())));
    }
    let mut out = TableauVector::zero(shape);
    for (idx, c) in x.terms() {
        out.add_term(tableau_from_nu(shape, &idx.subsets)?, c);
    }
    Ok(out)
}
