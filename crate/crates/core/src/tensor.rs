//! Tensor products of fundamental `SL_N` representations and their duals,
//! and the generating intertwiners acting on them.
//!
//! Slots are numbered from the right: slot 1 is the rightmost tensor factor.
//! A two-factor map "at position `p`" acts on slots `p + 1` (left) and `p`
//! (right).
//!
//! Conventions (all coefficients are exact Laurent monomials in `v`):
//!
//! * merge `Λ^a ⊗ Λ^b → Λ^{a+b}`: `x_S ⊗ x_T ↦ v^{ℓ(T,S)} x_{S∪T}`, zero
//!   unless `S ∩ T = ∅`. Here `S` is the left factor.
//! * split `Λ^{a+b} → Λ^a ⊗ Λ^b`: `x_S ↦ Σ_{A⊂S, |A|=a} v^{-ℓ(A, S∖A)} x_A ⊗ x_{S∖A}`.
//! * tag on a plain factor `Λ^a → (Λ^{N-a})^*`: `x_S ↦ ε v^{ℓ(S^c,S)} x̂_{S^c}`;
//!   on a dual factor `(Λ^a)^* → Λ^{N-a}` it is the inverse of the plain tag
//!   of color `N-a`: `x̂_U ↦ ε v^{-ℓ(U,U^c)} x_{U^c}`. `ε = 1` for
//!   [`TagSide::Left`] and `(-1)^{a(N-a)}` for [`TagSide::Right`].
//! * cup `1 → Λ^a ⊗ (Λ^a)^*`: `Σ_S x_S ⊗ x̂_S`; cap `(Λ^a)^* ⊗ Λ^a → 1`:
//!   `x̂_S ⊗ x_T ↦ δ_{S,T}`.
//! * rotated cup `1 → (Λ^a)^* ⊗ Λ^a`: `Σ_S v^{ℓ(S,S^c) - ℓ(S^c,S)} x̂_S ⊗ x_S`;
//!   rotated cap `Λ^a ⊗ (Λ^a)^* → 1`: `x_S ⊗ x̂_T ↦ δ_{S,T} v^{ℓ(S^c,S) - ℓ(S,S^c)}`.
//!   These equal the cup/cap of color `N-a` conjugated by left tags, and they
//!   satisfy the zig-zag identities with cap/cup.
//!
//! `x̂_S` is the dual basis of `x_S`, so a dual factor of color `a` is
//! indexed by `a`-element subsets, like a plain one.
//!
//! Invariant tensors with dual factors are built with left tags. Their
//! leading terms and the negative exponent property are read in the tag
//! basis of [`tag_basis_coords`], where a dual factor of color `a` is indexed
//! by `(N-a)`-element subsets. Each right tag in their place would contribute
//! a factor `(-1)^{a(N-a)}` to the leading coefficient.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Subset;
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// `ℓ(S, T) = #{(i, j) : i ∈ S, j ∈ T, i < j}`.
pub fn ell(s: Subset, t: Subset) -> i32 {
    s.elements().map(|i| t.count_above(i) as i32).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Factor {
    pub color: usize,
    pub dual: bool,
}

impl Factor {
    pub fn plain(color: usize) -> Self {
        Factor { color, dual: false }
    }

    pub fn dual(color: usize) -> Self {
        Factor { color, dual: true }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.color, if self.dual { "-" } else { "+" })
    }
}

/// Ordered tensor factors; index 0 is slot 1 (the rightmost factor).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryObject {
    pub factors: Vec<Factor>,
}

impl BoundaryObject {
    pub fn new(factors: Vec<Factor>) -> Self {
        BoundaryObject { factors }
    }

    /// Plain factors with the given colors, slot 1 first.
    pub fn plain(colors: &[usize]) -> Self {
        BoundaryObject { factors: colors.iter().map(|&c| Factor::plain(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor at a 1-based slot.
    pub fn slot(&self, slot: usize) -> Option<Factor> {
        slot.checked_sub(1).and_then(|i| self.factors.get(i).copied())
    }

    pub fn colors(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.color).collect()
    }

    pub fn is_all_plain(&self) -> bool {
        self.factors.iter().all(|f| !f.dual)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        match self.factors.iter().find(|f| f.color > n) {
            Some(f) => Err(Error::ShapeMismatch(format!("factor color {} exceeds N={n}", f.color))),
            None => Ok(()),
        }
    }

    /// Every standard basis index of the space, in ascending order.
    pub fn basis(&self, n: usize) -> Vec<BasisIndex> {
        let per_slot: Vec<Vec<Subset>> = self.factors.iter().map(|f| Subset::all_of_size(n, f.color)).collect();
        let mut out = vec![Vec::new()];
        for choices in &per_slot {
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for prefix in &out {
                for &s in choices {
                    let mut p = prefix.clone();
                    p.push(s);
                    next.push(p);
                }
            }
            out = next;
        }
        let mut idx: Vec<BasisIndex> = out.into_iter().map(|subsets| BasisIndex { subsets }).collect();
        idx.sort();
        idx
    }
}

impl fmt::Display for BoundaryObject {
    /// Written left to right, i.e. highest slot first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().rev().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// One subset per factor, slot 1 first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisIndex {
    pub subsets: Vec<Subset>,
}

impl BasisIndex {
    pub fn new(subsets: Vec<Subset>) -> Self {
        BasisIndex { subsets }
    }

    pub fn conforms(&self, space: &BoundaryObject, n: usize) -> bool {
        self.subsets.len() == space.len()
            && self
                .subsets
                .iter()
                .zip(&space.factors)
                .all(|(s, f)| s.len() == f.color && s.is_subset_of(Subset::full(n)))
    }
}

impl fmt::Display for BasisIndex {
    /// Tensor notation, leftmost (highest slot) first, e.g. `x{2}⊗x{1}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.subsets.iter().rev().map(|s| format!("x{s}")).collect();
        write!(f, "{}", parts.join("⊗"))
    }
}

/// Sparse vector over the standard basis of a tensor space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorVector {
    space: BoundaryObject,
    coords: BTreeMap<BasisIndex, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(space: BoundaryObject) -> Self {
        TensorVector { space, coords: BTreeMap::new() }
    }

    pub fn basis_vector(space: BoundaryObject, idx: BasisIndex) -> Self {
        let mut v = Self::zero(space);
        v.add_term(idx, &LaurentPoly::one());
        v
    }

    pub fn from_terms<I>(space: BoundaryObject, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisIndex, LaurentPoly)>,
    {
        let mut v = Self::zero(space);
        for (idx, c) in terms {
            if !idx.conforms(&v.space, n) {
                return Err(Error::ShapeMismatch(format!("basis index {idx} does not fit {}", v.space)));
            }
            v.add_term(idx, &c);
        }
        Ok(v)
    }

    pub fn space(&self) -> &BoundaryObject {
        &self.space
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

    pub fn coeff(&self, idx: &BasisIndex) -> LaurentPoly {
        self.coords.get(idx).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &LaurentPoly)> {
        self.coords.iter()
    }

    pub fn add_term(&mut self, idx: BasisIndex, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.coords.entry(idx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVector, c: &LaurentPoly) -> Result<()> {
        if other.space != self.space {
            return Err(Error::ShapeMismatch(format!("cannot add {} to {}", other.space, self.space)));
        }
        for (idx, x) in &other.coords {
            self.add_term(idx.clone(), &(x * c));
        }
        Ok(())
    }

    pub fn scale(&self, c: &LaurentPoly) -> TensorVector {
        let mut out = TensorVector::zero(self.space.clone());
        for (idx, x) in &self.coords {
            out.add_term(idx.clone(), &(x * c));
        }
        out
    }

    pub fn check(&self, n: usize) -> Result<()> {
        self.space.check(n)?;
        for idx in self.coords.keys() {
            if !idx.conforms(&self.space, n) {
                return Err(Error::ShapeMismatch(format!("basis index {idx} does not fit {}", self.space)));
            }
        }
        Ok(())
    }

    /// Applies a map that acts on `width` consecutive slots starting at
    /// `pos`, replacing them with `out_factors` (slot-1-first order).
    fn map_local<F>(&self, pos: usize, width: usize, out_factors: &[Factor], mut f: F) -> TensorVector
    where
        F: FnMut(&[Subset]) -> Vec<(Vec<Subset>, LaurentPoly)>,
    {
        let lo = pos - 1;
        let mut factors = self.space.factors[..lo].to_vec();
        factors.extend_from_slice(out_factors);
        factors.extend_from_slice(&self.space.factors[lo + width..]);
        let mut out = TensorVector::zero(BoundaryObject::new(factors));
        for (idx, c) in &self.coords {
            for (local, w) in f(&idx.subsets[lo..lo + width]) {
                let mut subsets = idx.subsets[..lo].to_vec();
                subsets.extend(local);
                subsets.extend_from_slice(&idx.subsets[lo + width..]);
                out.add_term(BasisIndex { subsets }, &(c * &w));
            }
        }
        out
    }

    fn expect_factor(&self, slot: usize, want: Factor, what: &str) -> Result<()> {
        match self.space.slot(slot) {
            Some(f) if f == want => Ok(()),
            Some(f) => Err(Error::ShapeMismatch(format!("{what}: slot {slot} holds {f}, expected {want}"))),
            None => Err(Error::ShapeMismatch(format!("{what}: no slot {slot} in {}", self.space))),
        }
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.is_empty() {
            return write!(f, "0");
        }
        // dual factors print as x̂
        let term = |idx: &BasisIndex| {
            let parts: Vec<String> = idx
                .subsets
                .iter()
                .zip(&self.space.factors)
                .rev()
                .map(|(s, fac)| format!("{}{s}", if fac.dual { "x̂" } else { "x" }))
                .collect();
            parts.join("⊗")
        };
        let parts: Vec<String> = self.coords.iter().rev().map(|(idx, c)| format!("({c})·{}", term(idx))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TagSide {
    Left,
    Right,
}

impl TagSide {
    pub fn mirrored(self) -> Self {
        match self {
            TagSide::Left => TagSide::Right,
            TagSide::Right => TagSide::Left,
        }
    }

    /// Sign attached to a tag on a strand of color `a`.
    pub fn sign(self, n: usize, a: usize) -> i64 {
        match self {
            TagSide::Left => 1,
            TagSide::Right => {
                if (a * (n - a)).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

fn mono(sign: i64, e: i32) -> LaurentPoly {
    LaurentPoly::monomial(sign, e)
}

fn check_colors(n: usize, a: usize, b: usize, what: &str) -> Result<()> {
    if a + b > n {
        return Err(Error::ShapeMismatch(format!("{what}: a+b = {} exceeds N={n}", a + b)));
    }
    Ok(())
}

fn check_pos(x: &TensorVector, pos: usize, width: usize, what: &str) -> Result<()> {
    if pos == 0 || pos + width - 1 > x.space.len() {
        return Err(Error::ShapeMismatch(format!("{what}: position {pos} out of range for {}", x.space)));
    }
    Ok(())
}

/// Merge of the plain factors at slots `pos + 1` (color `a`) and `pos` (color `b`).
pub fn apply_merge(n: usize, a: usize, b: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, b, "merge")?;
    check_pos(x, pos, 2, "merge")?;
    x.expect_factor(pos + 1, Factor::plain(a), "merge")?;
    x.expect_factor(pos, Factor::plain(b), "merge")?;
    Ok(x.map_local(pos, 2, &[Factor::plain(a + b)], |local| {
        let (right, left) = (local[0], local[1]);
        if left.is_disjoint(right) {
            vec![(vec![left.union(right)], mono(1, ell(right, left)))]
        } else {
            Vec::new()
        }
    }))
}

/// Split of the plain `(a+b)` factor at slot `pos` into `a` (slot `pos + 1`)
/// and `b` (slot `pos`).
pub fn apply_split(n: usize, a: usize, b: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, b, "split")?;
    check_pos(x, pos, 1, "split")?;
    x.expect_factor(pos, Factor::plain(a + b), "split")?;
    Ok(x.map_local(pos, 1, &[Factor::plain(b), Factor::plain(a)], |local| {
        let s = local[0];
        s.subsets_of_size(a)
            .into_iter()
            .map(|left| {
                let right = s.difference(left);
                (vec![right, left], mono(1, -ell(left, right)))
            })
            .collect()
    }))
}

/// Tag on the factor at `pos`, which must have color `a`. A plain factor
/// becomes a dual factor of color `N - a` and vice versa.
pub fn apply_tag(n: usize, a: usize, side: TagSide, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_pos(x, pos, 1, "tag")?;
    let f = x.space.slot(pos).unwrap();
    if f.color != a || a > n {
        return Err(Error::ShapeMismatch(format!("tag: slot {pos} holds {f}, expected color {a}")));
    }
    let sign = side.sign(n, a);
    let out = Factor { color: n - a, dual: !f.dual };
    Ok(x.map_local(pos, 1, &[out], |local| {
        let s = local[0];
        let c = s.complement(n);
        let e = if f.dual { -ell(s, c) } else { ell(c, s) };
        vec![(vec![c], mono(sign, e))]
    }))
}

fn check_insert_pos(x: &TensorVector, pos: usize, what: &str) -> Result<()> {
    if pos == 0 || pos > x.space.len() + 1 {
        return Err(Error::ShapeMismatch(format!("{what}: position {pos} out of range for {}", x.space)));
    }
    Ok(())
}

fn insert_pair<F>(n: usize, a: usize, pos: usize, x: &TensorVector, left: Factor, right: Factor, weight: F) -> TensorVector
where
    F: Fn(Subset) -> i32,
{
    let subsets = Subset::all_of_size(n, a);
    x.map_local(pos, 0, &[right, left], |_| {
        subsets.iter().map(|&s| (vec![s, s], mono(1, weight(s)))).collect()
    })
}

/// Cup inserting `Λ^a` at slot `pos + 1` and `(Λ^a)^*` at slot `pos`.
pub fn apply_cup(n: usize, a: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, 0, "cup")?;
    check_insert_pos(x, pos, "cup")?;
    Ok(insert_pair(n, a, pos, x, Factor::plain(a), Factor::dual(a), |_| 0))
}

/// Cap pairing `(Λ^a)^*` at slot `pos + 1` with `Λ^a` at slot `pos`.
pub fn apply_cap(n: usize, a: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, 0, "cap")?;
    check_pos(x, pos, 2, "cap")?;
    x.expect_factor(pos + 1, Factor::dual(a), "cap")?;
    x.expect_factor(pos, Factor::plain(a), "cap")?;
    Ok(x.map_local(pos, 2, &[], |local| {
        if local[0] == local[1] {
            vec![(Vec::new(), LaurentPoly::one())]
        } else {
            Vec::new()
        }
    }))
}

/// Rotated cup inserting `(Λ^a)^*` at slot `pos + 1` and `Λ^a` at slot `pos`.
pub fn apply_rotated_cup(n: usize, a: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, 0, "rotated cup")?;
    check_insert_pos(x, pos, "rotated cup")?;
    Ok(insert_pair(n, a, pos, x, Factor::dual(a), Factor::plain(a), |s| {
        let c = s.complement(n);
        ell(s, c) - ell(c, s)
    }))
}

/// Rotated cap pairing `Λ^a` at slot `pos + 1` with `(Λ^a)^*` at slot `pos`.
pub fn apply_rotated_cap(n: usize, a: usize, pos: usize, x: &TensorVector) -> Result<TensorVector> {
    check_colors(n, a, 0, "rotated cap")?;
    check_pos(x, pos, 2, "rotated cap")?;
    x.expect_factor(pos + 1, Factor::plain(a), "rotated cap")?;
    x.expect_factor(pos, Factor::dual(a), "rotated cap")?;
    Ok(x.map_local(pos, 2, &[], |local| {
        let (s, t) = (local[1], local[0]);
        if s == t {
            let c = s.complement(n);
            vec![(Vec::new(), mono(1, ell(c, s) - ell(s, c)))]
        } else {
            Vec::new()
        }
    }))
}

/// Coordinates with every dual factor re-expressed in the tag basis
/// `y_U = D_{N-a}(x_U)` of `(Λ^a)^*` (`|U| = N - a`), using
/// `x̂_S = v^{-ℓ(S, S^c)} y_{S^c}`. Dual factors are then indexed by the
/// complement subset, which is how leading terms of tensors with dual
/// factors are compared.
pub fn tag_basis_coords(n: usize, x: &TensorVector) -> BTreeMap<BasisIndex, LaurentPoly> {
    let mut out = BTreeMap::new();
    for (idx, c) in x.terms() {
        let mut shift = 0;
        let subsets = idx
            .subsets
            .iter()
            .zip(&x.space.factors)
            .map(|(&s, f)| {
                if f.dual {
                    let comp = s.complement(n);
                    shift -= ell(s, comp);
                    comp
                } else {
                    s
                }
            })
            .collect();
        out.insert(BasisIndex { subsets }, c.shift(shift));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    subsets: Vec<Subset>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct TensorVectorRepr {
    space: Vec<Factor>,
    terms: Vec<TermRepr>,
}

impl Serialize for TensorVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorVectorRepr {
            space: self.space.factors.clone(),
            terms: self
                .coords
                .iter()
                .map(|(idx, c)| TermRepr { subsets: idx.subsets.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TensorVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = TensorVectorRepr::deserialize(d)?;
        let space = BoundaryObject::new(r.space);
        let mut v = TensorVector::zero(space);
        for t in r.terms {
            if t.subsets.len() != v.space.len()
                || t.subsets.iter().zip(&v.space.factors).any(|(s, f)| s.len() != f.color)
            {
                return Err(serde::de::Error::custom("term subsets do not match the space"));
            }
            v.add_term(BasisIndex { subsets: t.subsets }, &t.coeff);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qbinom;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    /// Basis vector from subsets written left to right (highest slot first).
    fn xv(factors: &[Factor], left_to_right: &[&[usize]]) -> TensorVector {
        let space = BoundaryObject::new(factors.iter().rev().copied().collect());
        let subsets = left_to_right.iter().rev().map(|e| s(e)).collect();
        TensorVector::basis_vector(space, BasisIndex::new(subsets))
    }

    fn term(v: &TensorVector, left_to_right: &[&[usize]]) -> LaurentPoly {
        v.coeff(&BasisIndex::new(left_to_right.iter().rev().map(|e| s(e)).collect()))
    }

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    /// Brute-force count straight from the definition.
    fn ell_oracle(a: Subset, b: Subset) -> i32 {
        let mut c = 0;
        for i in a.elements() {
            for j in b.elements() {
                if i < j {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn ell_examples() {
        assert_eq!(ell(Subset::EMPTY, s(&[1, 2])), 0);
        assert_eq!(ell(s(&[2]), s(&[3, 1])), 1);
        assert_eq!(ell(s(&[1]), s(&[3, 2])), 2);
        for a in Subset::all_of_size(5, 2) {
            for b in Subset::all_of_size(5, 3) {
                assert_eq!(ell(a, b), ell_oracle(a, b));
                if a.is_disjoint(b) {
                    assert_eq!(ell(a, b) + ell(b, a), 6);
                }
            }
        }
    }

    #[test]
    fn merge_examples() {
        let p1 = Factor::plain(1);
        let m = apply_merge(2, 1, 1, 1, &xv(&[p1, p1], &[&[2], &[1]])).unwrap();
        assert_eq!(m, xv(&[Factor::plain(2)], &[&[2, 1]]).scale(&LaurentPoly::v()));
        assert!(apply_merge(2, 1, 1, 1, &xv(&[p1, p1], &[&[1], &[1]])).unwrap().is_zero());
        let m = apply_merge(2, 1, 1, 1, &xv(&[p1, p1], &[&[1], &[2]])).unwrap();
        assert_eq!(m, xv(&[Factor::plain(2)], &[&[2, 1]]));
        assert!(matches!(
            apply_merge(2, 1, 1, 1, &xv(&[p1], &[&[1]])),
            Err(Error::ShapeMismatch(_))
        ));
        assert!(matches!(
            apply_merge(3, 2, 1, 1, &xv(&[p1, p1], &[&[1], &[2]])),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn split_examples() {
        let x = xv(&[Factor::plain(3)], &[&[3, 2, 1]]);
        let y = apply_split(3, 1, 2, 1, &x).unwrap();
        assert_eq!(y.len(), 3);
        assert_eq!(term(&y, &[&[3], &[2, 1]]), LaurentPoly::one());
        assert_eq!(term(&y, &[&[2], &[3, 1]]), p(&[(-1, 1)]));
        assert_eq!(term(&y, &[&[1], &[3, 2]]), p(&[(-2, 1)]));

        let y = apply_split(2, 1, 1, 1, &xv(&[Factor::plain(2)], &[&[2, 1]])).unwrap();
        assert_eq!(y.len(), 2);
        assert_eq!(term(&y, &[&[2], &[1]]), LaurentPoly::one());
        assert_eq!(term(&y, &[&[1], &[2]]), p(&[(-1, 1)]));

        let y = apply_split(3, 2, 0, 1, &xv(&[Factor::plain(2)], &[&[3, 1]])).unwrap();
        assert_eq!(y, xv(&[Factor::plain(2), Factor::plain(0)], &[&[3, 1], &[]]));
    }

    #[test]
    fn tag_examples() {
        let t = apply_tag(2, 1, TagSide::Left, 1, &xv(&[Factor::plain(1)], &[&[1]])).unwrap();
        assert_eq!(t, xv(&[Factor::dual(1)], &[&[2]]));
        let t = apply_tag(2, 1, TagSide::Left, 1, &xv(&[Factor::plain(1)], &[&[2]])).unwrap();
        assert_eq!(t, xv(&[Factor::dual(1)], &[&[1]]).scale(&LaurentPoly::v()));
        let t = apply_tag(2, 1, TagSide::Right, 1, &xv(&[Factor::plain(1)], &[&[2]])).unwrap();
        assert_eq!(t, xv(&[Factor::dual(1)], &[&[1]]).scale(&p(&[(1, -1)])));
        for side in [TagSide::Left, TagSide::Right] {
            let t = apply_tag(3, 3, side, 1, &xv(&[Factor::plain(3)], &[&[3, 2, 1]])).unwrap();
            assert_eq!(t, xv(&[Factor::dual(0)], &[&[]]));
        }
    }

    #[test]
    fn tag_is_inverted_by_tag_on_the_dual() {
        for n in 2..=4 {
            for a in 0..=n {
                for x in BoundaryObject::plain(&[a]).basis(n) {
                    let x = TensorVector::basis_vector(BoundaryObject::plain(&[a]), x);
                    for s1 in [TagSide::Left, TagSide::Right] {
                        for s2 in [TagSide::Left, TagSide::Right] {
                            let y = apply_tag(n, a, s1, 1, &x).unwrap();
                            let z = apply_tag(n, n - a, s2, 1, &y).unwrap();
                            let sign = s1.sign(n, a) * s2.sign(n, n - a);
                            assert_eq!(z, x.scale(&LaurentPoly::constant(sign)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn cup_cap_examples() {
        for n in 2..=4 {
            for a in 0..=n {
                let unit = TensorVector::basis_vector(BoundaryObject::default(), BasisIndex::new(vec![]));
                let circle = apply_cap(n, a, 1, &apply_rotated_cup(n, a, 1, &unit).unwrap()).unwrap();
                let plain_circle = {
                    let c = apply_cup(n, a, 1, &unit).unwrap();
                    apply_rotated_cap(n, a, 1, &c).unwrap()
                };
                // both closed loops are the balanced binomial
                assert_eq!(circle.coeff(&BasisIndex::new(vec![])), qbinom(n as i64, a as i64));
                assert_eq!(plain_circle.coeff(&BasisIndex::new(vec![])), qbinom(n as i64, a as i64));
            }
        }
        let x = xv(&[Factor::dual(1), Factor::plain(1)], &[&[1], &[2]]);
        assert!(apply_cap(2, 1, 1, &x).unwrap().is_zero());
    }

    #[test]
    fn zig_zags() {
        for n in 2..=4 {
            for a in 0..=n {
                for (f, fix) in [(Factor::plain(a), 0), (Factor::dual(a), 1)] {
                    let space = BoundaryObject::new(vec![f]);
                    for idx in space.basis(n) {
                        let x = TensorVector::basis_vector(space.clone(), idx);
                        let y = if fix == 0 {
                            // x ⊗ (cup on the left) then cap on the right pair
                            let c = apply_cup(n, a, 2, &x).unwrap();
                            apply_cap(n, a, 1, &c).unwrap()
                        } else {
                            let c = apply_cup(n, a, 1, &x).unwrap();
                            apply_cap(n, a, 2, &c).unwrap()
                        };
                        assert_eq!(y, x);
                        let y = if fix == 0 {
                            let c = apply_rotated_cup(n, a, 1, &x).unwrap();
                            apply_rotated_cap(n, a, 2, &c).unwrap()
                        } else {
                            let c = apply_rotated_cup(n, a, 2, &x).unwrap();
                            apply_rotated_cap(n, a, 1, &c).unwrap()
                        };
                        assert_eq!(y, x);
                    }
                }
            }
        }
    }

    #[test]
    fn rotated_cup_is_cup_conjugated_by_tags() {
        for n in 2..=4 {
            for a in 0..=n {
                let unit = TensorVector::basis_vector(BoundaryObject::default(), BasisIndex::new(vec![]));
                let direct = apply_rotated_cup(n, a, 1, &unit).unwrap();
                let c = apply_cup(n, n - a, 1, &unit).unwrap();
                let c = apply_tag(n, n - a, TagSide::Left, 2, &c).unwrap();
                let c = apply_tag(n, n - a, TagSide::Left, 1, &c).unwrap();
                assert_eq!(direct, c);
            }
        }
    }

    #[test]
    fn merge_after_split_is_binomial() {
        for n in 2..=4 {
            for a in 0..=n {
                for b in 0..=(n - a) {
                    let space = BoundaryObject::plain(&[a + b]);
                    for idx in space.basis(n) {
                        let x = TensorVector::basis_vector(space.clone(), idx);
                        let y = apply_merge(n, a, b, 1, &apply_split(n, a, b, 1, &x).unwrap()).unwrap();
                        assert_eq!(y, x.scale(&qbinom((a + b) as i64, a as i64)));
                    }
                }
            }
        }
    }

    #[test]
    fn linearity() {
        let space = BoundaryObject::plain(&[1, 1]);
        let basis = space.basis(3);
        let mut x = TensorVector::zero(space.clone());
        x.add_term(basis[0].clone(), &p(&[(2, 3)]));
        x.add_term(basis[3].clone(), &p(&[(-1, -2), (0, 1)]));
        let mut expect = TensorVector::zero(BoundaryObject::plain(&[2]));
        for (idx, c) in x.terms() {
            let y = apply_merge(3, 1, 1, 1, &TensorVector::basis_vector(space.clone(), idx.clone())).unwrap();
            expect.add_scaled(&y, c).unwrap();
        }
        assert_eq!(apply_merge(3, 1, 1, 1, &x).unwrap(), expect);
    }

    #[test]
    fn json_layout() {
        let x = xv(&[Factor::plain(1), Factor::dual(2)], &[&[2], &[3, 1]]).scale(&p(&[(-1, 1)]));
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            j,
            r#"{"space":[{"color":2,"dual":true},{"color":1,"dual":false}],"terms":[{"subsets":[[3,1],[2]],"coeff":[[-1,1]]}]}"#
        );
        let back: TensorVector = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
    }
}
