//! Webs as bottom-to-top sequences of generating slices, ladders built from
//! divided-power words, and their evaluation.

mod relations;
mod statesum;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{GlWeight, Subset};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;
use crate::tensor::{self, BasisIndex, BoundaryObject, Factor, TagSide, TensorVector};

pub use relations::{check_relations, RelationCheck};
pub use statesum::{enumerate_states, evaluate_statesum, state_weight, SignedMonomial, State, WebGraph};

/// A generating web. Positions follow [`crate::tensor`]: a two-strand
/// generator at `pos` touches slots `pos + 1` (left) and `pos` (right).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SliceKind {
    Merge { a: usize, b: usize },
    Split { a: usize, b: usize },
    Cup { a: usize },
    Cap { a: usize },
    /// Cup with the dual strand on the left.
    #[serde(rename = "rcup")]
    RotatedCup { a: usize },
    /// Cap with the plain strand on the left.
    #[serde(rename = "rcap")]
    RotatedCap { a: usize },
    /// Tag on a strand of color `a`, plain or dual.
    Tag { a: usize, side: TagSide },
    Identity,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Slice {
    #[serde(flatten)]
    pub kind: SliceKind,
    pub pos: usize,
}

impl Slice {
    pub fn new(kind: SliceKind, pos: usize) -> Self {
        Slice { kind, pos }
    }

    pub fn merge(a: usize, b: usize, pos: usize) -> Self {
        Slice::new(SliceKind::Merge { a, b }, pos)
    }

    pub fn split(a: usize, b: usize, pos: usize) -> Self {
        Slice::new(SliceKind::Split { a, b }, pos)
    }

    pub fn cup(a: usize, pos: usize) -> Self {
        Slice::new(SliceKind::Cup { a }, pos)
    }

    pub fn cap(a: usize, pos: usize) -> Self {
        Slice::new(SliceKind::Cap { a }, pos)
    }

    pub fn rotated_cup(a: usize, pos: usize) -> Self {
        Slice::new(SliceKind::RotatedCup { a }, pos)
    }

    pub fn rotated_cap(a: usize, pos: usize) -> Self {
        Slice::new(SliceKind::RotatedCap { a }, pos)
    }

    pub fn tag(a: usize, side: TagSide, pos: usize) -> Self {
        Slice::new(SliceKind::Tag { a, side }, pos)
    }

    /// The generator read upside down: merges and splits swap, cups become
    /// the caps that undo them, tags flip side and act on the other color.
    pub fn mirror(&self, n: usize) -> Slice {
        let kind = match self.kind {
            SliceKind::Merge { a, b } => SliceKind::Split { a, b },
            SliceKind::Split { a, b } => SliceKind::Merge { a, b },
            SliceKind::Cup { a } => SliceKind::RotatedCap { a },
            SliceKind::RotatedCap { a } => SliceKind::Cup { a },
            SliceKind::Cap { a } => SliceKind::RotatedCup { a },
            SliceKind::RotatedCup { a } => SliceKind::Cap { a },
            SliceKind::Tag { a, side } => SliceKind::Tag { a: n - a, side: side.mirrored() },
            SliceKind::Identity => SliceKind::Identity,
        };
        Slice { kind, pos: self.pos }
    }

    /// Boundary object above this slice, or a reason why it does not fit.
    pub fn codomain(&self, n: usize, below: &BoundaryObject) -> std::result::Result<BoundaryObject, String> {
        let pos = self.pos;
        if pos == 0 && !matches!(self.kind, SliceKind::Identity) {
            return Err("positions start at 1".into());
        }
        let len = below.len();
        let f = |slot: usize| below.slot(slot);
        let need = |slot: usize, want: Factor| -> std::result::Result<(), String> {
            match f(slot) {
                Some(got) if got == want => Ok(()),
                Some(got) => Err(format!("slot {slot} holds {got}, expected {want}")),
                None => Err(format!("no slot {slot} in {below}")),
            }
        };
        let color_ok = |c: usize| if c > n { Err(format!("color {c} exceeds N={n}")) } else { Ok(()) };
        let mut factors = below.factors.clone();
        match self.kind {
            SliceKind::Identity => {}
            SliceKind::Merge { a, b } => {
                color_ok(a + b)?;
                need(pos + 1, Factor::plain(a))?;
                need(pos, Factor::plain(b))?;
                factors.splice(pos - 1..pos + 1, [Factor::plain(a + b)]);
            }
            SliceKind::Split { a, b } => {
                color_ok(a + b)?;
                need(pos, Factor::plain(a + b))?;
                factors.splice(pos - 1..pos, [Factor::plain(b), Factor::plain(a)]);
            }
            SliceKind::Cap { a } => {
                need(pos + 1, Factor::dual(a))?;
                need(pos, Factor::plain(a))?;
                factors.drain(pos - 1..pos + 1);
            }
            SliceKind::RotatedCap { a } => {
                need(pos + 1, Factor::plain(a))?;
                need(pos, Factor::dual(a))?;
                factors.drain(pos - 1..pos + 1);
            }
            SliceKind::Cup { a } | SliceKind::RotatedCup { a } => {
                color_ok(a)?;
                if pos == 0 || pos > len + 1 {
                    return Err(format!("insertion position {pos} out of range for {below}"));
                }
                let pair = if matches!(self.kind, SliceKind::Cup { .. }) {
                    [Factor::dual(a), Factor::plain(a)]
                } else {
                    [Factor::plain(a), Factor::dual(a)]
                };
                factors.splice(pos - 1..pos - 1, pair);
            }
            SliceKind::Tag { a, .. } => {
                color_ok(a)?;
                let got = f(pos).ok_or_else(|| format!("no slot {pos} in {below}"))?;
                if got.color != a {
                    return Err(format!("slot {pos} holds {got}, expected color {a}"));
                }
                factors[pos - 1] = Factor { color: n - a, dual: !got.dual };
            }
        }
        Ok(BoundaryObject::new(factors))
    }

    /// Applies the generator to a vector.
    pub fn apply(&self, n: usize, x: &TensorVector) -> Result<TensorVector> {
        let p = self.pos;
        match self.kind {
            SliceKind::Identity => Ok(x.clone()),
            SliceKind::Merge { a, b } => tensor::apply_merge(n, a, b, p, x),
            SliceKind::Split { a, b } => tensor::apply_split(n, a, b, p, x),
            SliceKind::Cup { a } => tensor::apply_cup(n, a, p, x),
            SliceKind::Cap { a } => tensor::apply_cap(n, a, p, x),
            SliceKind::RotatedCup { a } => tensor::apply_rotated_cup(n, a, p, x),
            SliceKind::RotatedCap { a } => tensor::apply_rotated_cap(n, a, p, x),
            SliceKind::Tag { a, side } => tensor::apply_tag(n, a, side, p, x),
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.pos;
        match self.kind {
            SliceKind::Merge { a, b } => write!(f, "merge({a},{b})@{p}"),
            SliceKind::Split { a, b } => write!(f, "split({a},{b})@{p}"),
            SliceKind::Cup { a } => write!(f, "cup({a})@{p}"),
            SliceKind::Cap { a } => write!(f, "cap({a})@{p}"),
            SliceKind::RotatedCup { a } => write!(f, "rcup({a})@{p}"),
            SliceKind::RotatedCap { a } => write!(f, "rcap({a})@{p}"),
            SliceKind::Tag { a, side } => write!(f, "tag({a},{side:?})@{p}"),
            SliceKind::Identity => write!(f, "id"),
        }
    }
}

/// A web diagram: a domain object and slices applied bottom to top.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Web {
    #[serde(rename = "N")]
    pub n: usize,
    pub domain: BoundaryObject,
    pub slices: Vec<Slice>,
}

impl Web {
    pub fn identity(n: usize, domain: BoundaryObject) -> Self {
        Web { n, domain, slices: Vec::new() }
    }

    pub fn new(n: usize, domain: BoundaryObject, slices: Vec<Slice>) -> Self {
        Web { n, domain, slices }
    }

    pub fn then(mut self, s: Slice) -> Self {
        self.slices.push(s);
        self
    }

    /// Checks composability of every slice and returns the codomain.
    pub fn validate(&self) -> Result<BoundaryObject> {
        self.domain.check(self.n).map_err(|e| Error::IllFormed { index: 0, reason: e.to_string() })?;
        let mut obj = self.domain.clone();
        for (index, s) in self.slices.iter().enumerate() {
            obj = s.codomain(self.n, &obj).map_err(|reason| Error::IllFormed { index, reason })?;
        }
        Ok(obj)
    }

    pub fn codomain(&self) -> Result<BoundaryObject> {
        self.validate()
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn compose(&self, other: &Web) -> Result<Web> {
        let mid = self.validate()?;
        if other.n != self.n || other.domain != mid {
            return Err(Error::ShapeMismatch(format!("cannot stack a web on {} over codomain {mid}", other.domain)));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(Web::new(self.n, self.domain.clone(), slices))
    }

    /// Reflection in the horizontal axis, `u ↦ u*`.
    pub fn reflect(&self) -> Result<Web> {
        let top = self.validate()?;
        let slices = self.slices.iter().rev().map(|s| s.mirror(self.n)).collect();
        Ok(Web::new(self.n, top, slices))
    }

    /// The image of `x` under the web, composing generator matrices.
    pub fn evaluate_dense(&self, x: &TensorVector) -> Result<TensorVector> {
        if x.space() != &self.domain {
            return Err(Error::ShapeMismatch(format!("vector lives in {}, web starts at {}", x.space(), self.domain)));
        }
        self.validate()?;
        let mut y = x.clone();
        for s in &self.slices {
            y = s.apply(self.n, &y)?;
            if y.is_zero() {
                break;
            }
        }
        if y.is_zero() {
            return Ok(TensorVector::zero(self.validate()?));
        }
        Ok(y)
    }
}

pub fn evaluate_dense(web: &Web, x: &TensorVector) -> Result<TensorVector> {
    web.evaluate_dense(x)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// One divided power `E_{±i}^{(a)}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct LadderStep {
    pub sign: Sign,
    pub i: usize,
    pub a: usize,
}

impl LadderStep {
    pub fn new(sign: Sign, i: usize, a: usize) -> Self {
        LadderStep { sign, i, a }
    }

    pub fn lower(i: usize, a: usize) -> Self {
        LadderStep::new(Sign::Minus, i, a)
    }

    pub fn raise(i: usize, a: usize) -> Self {
        LadderStep::new(Sign::Plus, i, a)
    }
}

impl fmt::Display for LadderStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}^{}", self.sign, self.i, self.a)
    }
}

/// Weight after applying one step, or the upright where a color leaves `0..=N`.
pub fn step_weight(n: usize, k: &[usize], step: LadderStep) -> Result<Vec<usize>> {
    let m = k.len();
    if step.i == 0 || step.i >= m {
        return Err(Error::InvalidInput(format!("rung index {} out of range 1..{}", step.i, m)));
    }
    let (src, dst) = match step.sign {
        Sign::Minus => (step.i, step.i + 1),
        Sign::Plus => (step.i + 1, step.i),
    };
    let mut out = k.to_vec();
    let from = k[src - 1] as i64 - step.a as i64;
    if from < 0 {
        return Err(Error::Annihilated { upright: src, color: from, n });
    }
    let to = k[dst - 1] as i64 + step.a as i64;
    if to > n as i64 {
        return Err(Error::Annihilated { upright: dst, color: to, n });
    }
    out[src - 1] = from as usize;
    out[dst - 1] = to as usize;
    Ok(out)
}

/// The ladder of the operator product `word[0] word[1] ⋯ word[s-1]` acting
/// on weight `k_start`: the last step is the bottom rung.
///
/// `E_{-i}^{(a)}` moves `a` strands from upright `i` to upright `i + 1`,
/// `E_{+i}^{(a)}` moves them back. Zero-width rungs are omitted.
pub fn ladder_from_word(n: usize, k_start: &GlWeight, word: &[LadderStep]) -> Result<Web> {
    let domain = BoundaryObject::plain(&k_start.0);
    domain.check(n)?;
    let mut k = k_start.0.clone();
    let mut slices = Vec::new();
    for &step in word.iter().rev() {
        let next = step_weight(n, &k, step)?;
        if step.a > 0 {
            let i = step.i;
            match step.sign {
                Sign::Minus => {
                    slices.push(Slice::split(step.a, k[i - 1] - step.a, i));
                    slices.push(Slice::merge(k[i], step.a, i + 1));
                }
                Sign::Plus => {
                    slices.push(Slice::split(k[i] - step.a, step.a, i + 1));
                    slices.push(Slice::merge(step.a, k[i - 1], i));
                }
            }
        }
        k = next;
    }
    Ok(Web::new(n, domain, slices))
}

/// Weight reached by a word, or the annihilation error.
pub fn word_weight(n: usize, k_start: &GlWeight, word: &[LadderStep]) -> Result<GlWeight> {
    let mut k = k_start.0.clone();
    for &step in word.iter().rev() {
        k = step_weight(n, &k, step)?;
    }
    Ok(GlWeight(k))
}

fn top_basis_index(n: usize, obj: &BoundaryObject, what: &str) -> Result<BasisIndex> {
    let ok = obj.factors.iter().all(|f| !f.dual && (f.color == n || f.color == 0));
    if !ok {
        return Err(Error::ShapeMismatch(format!("{what} {obj} is not a product of color-{n} strands")));
    }
    Ok(BasisIndex::new(
        obj.factors.iter().map(|f| if f.color == n { Subset::full(n) } else { Subset::EMPTY }).collect(),
    ))
}

/// The scalar by which an endomorphism of `(Λ^N)^{⊗ℓ}` acts.
pub fn ev_closed(web: &Web) -> Result<LaurentPoly> {
    let top = web.validate()?;
    let n = web.n;
    let src = top_basis_index(n, &web.domain, "domain")?;
    let dst = top_basis_index(n, &top, "codomain")?;
    let count = |o: &BoundaryObject| o.factors.iter().filter(|f| f.color == n).count();
    if count(&web.domain) != count(&top) {
        return Err(Error::ShapeMismatch(format!("{} and {top} have different numbers of color-{n} strands", web.domain)));
    }
    let y = web.evaluate_dense(&TensorVector::basis_vector(web.domain.clone(), src))?;
    Ok(y.coeff(&dst))
}

/// `d(k) = (N(N-1)ℓ - Σ k_i(k_i - 1)) / 2` with `ℓ = Σ k_i / N`.
pub fn d_norm(n: usize, k: &[usize]) -> Result<i64> {
    let total: usize = k.iter().sum();
    if n == 0 || !total.is_multiple_of(n) {
        return Err(Error::InvalidInput(format!("weight {k:?} does not sum to a multiple of N={n}")));
    }
    let l = (total / n) as i64;
    let n = n as i64;
    let twice = n * (n - 1) * l - k.iter().map(|&x| (x as i64) * (x as i64 - 1)).sum::<i64>();
    if twice % 2 != 0 {
        return Err(Error::NonIntegral);
    }
    Ok(twice / 2)
}

/// `⟨u, w⟩ = v^{d(k)} ev(u* w)` for webs from `(N^ℓ)` to the same plain object `k`.
pub fn web_form(u: &Web, w: &Web) -> Result<LaurentPoly> {
    if u.n != w.n || u.domain != w.domain {
        return Err(Error::ShapeMismatch("webs in the form must share their domain".into()));
    }
    let ku = u.validate()?;
    let kw = w.validate()?;
    if ku != kw {
        return Err(Error::ShapeMismatch(format!("codomains differ: {ku} vs {kw}")));
    }
    if !kw.is_all_plain() {
        return Err(Error::ShapeMismatch(format!("codomain {kw} has dual factors")));
    }
    let d = d_norm(w.n, &kw.colors())?;
    let closed = w.compose(&u.reflect()?)?;
    Ok(ev_closed(&closed)?.shift(d as i32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::qbinom;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn validate_examples() {
        let dom = BoundaryObject::plain(&[2]);
        assert_eq!(Web::identity(2, dom.clone()).validate().unwrap(), dom);
        let w = Web::identity(2, dom).then(Slice::split(1, 1, 1));
        assert_eq!(w.validate().unwrap(), BoundaryObject::plain(&[1, 1]));
        let bad = Web::identity(2, BoundaryObject::plain(&[1])).then(Slice::merge(1, 1, 1));
        assert!(matches!(bad.validate(), Err(Error::IllFormed { index: 0, .. })));
        let bad = Web::identity(2, BoundaryObject::plain(&[2])).then(Slice::split(1, 1, 1)).then(Slice::cap(1, 1));
        assert!(matches!(bad.validate(), Err(Error::IllFormed { index: 1, .. })));
    }

    #[test]
    fn ladder_examples() {
        let k = GlWeight(vec![2, 0]);
        let id = ladder_from_word(2, &k, &[]).unwrap();
        assert!(id.slices.is_empty());
        let w = ladder_from_word(2, &k, &[LadderStep::lower(1, 1)]).unwrap();
        assert_eq!(w.validate().unwrap(), BoundaryObject::plain(&[1, 1]));
        assert_eq!(
            ladder_from_word(2, &k, &[LadderStep::lower(1, 3)]),
            Err(Error::Annihilated { upright: 1, color: -1, n: 2 })
        );
        assert!(matches!(
            ladder_from_word(2, &GlWeight(vec![2, 2]), &[LadderStep::lower(1, 1)]),
            Err(Error::Annihilated { upright: 2, color: 3, n: 2 })
        ));
        // the last step is applied first
        let w = ladder_from_word(3, &GlWeight(vec![3, 0, 0]), &[LadderStep::lower(2, 1), LadderStep::lower(1, 2)]).unwrap();
        assert_eq!(w.validate().unwrap(), BoundaryObject::plain(&[1, 1, 1]));
    }

    #[test]
    fn dense_examples() {
        let dom = BoundaryObject::plain(&[2, 0]);
        let x = TensorVector::basis_vector(dom.clone(), BasisIndex::new(vec![s(&[1, 2]), Subset::EMPTY]));
        let w = ladder_from_word(2, &GlWeight(vec![2, 0]), &[LadderStep::lower(1, 1)]).unwrap();
        let y = w.evaluate_dense(&x).unwrap();
        // x_{2} ⊗ x_{1} + v^{-1} x_{1} ⊗ x_{2}, left factor = slot 2
        assert_eq!(y.len(), 2);
        assert_eq!(y.coeff(&BasisIndex::new(vec![s(&[1]), s(&[2])])), LaurentPoly::one());
        assert_eq!(y.coeff(&BasisIndex::new(vec![s(&[2]), s(&[1])])), p(&[(-1, 1)]));

        let digon = Web::identity(2, BoundaryObject::plain(&[2])).then(Slice::split(1, 1, 1)).then(Slice::merge(1, 1, 1));
        let x = TensorVector::basis_vector(BoundaryObject::plain(&[2]), BasisIndex::new(vec![s(&[1, 2])]));
        assert_eq!(digon.evaluate_dense(&x).unwrap(), x.scale(&qbinom(2, 1)));
    }

    #[test]
    fn reflect_is_an_involution() {
        let w = ladder_from_word(3, &GlWeight(vec![3, 0, 0]), &[LadderStep::lower(2, 1), LadderStep::lower(1, 2)]).unwrap();
        let r = w.reflect().unwrap();
        assert_eq!(r.domain, w.validate().unwrap());
        assert_eq!(r.reflect().unwrap(), w);
        let sp = Web::identity(2, BoundaryObject::plain(&[2])).then(Slice::split(1, 1, 1));
        assert_eq!(sp.reflect().unwrap().slices, vec![Slice::merge(1, 1, 1)]);
        let id = Web::identity(3, BoundaryObject::plain(&[3]));
        assert_eq!(id.reflect().unwrap(), id);
    }

    #[test]
    fn d_norm_examples() {
        assert_eq!(d_norm(3, &[3, 3, 0, 0, 0, 0]).unwrap(), 0);
        assert_eq!(d_norm(2, &[1, 1]).unwrap(), 1);
        assert_eq!(d_norm(3, &[1, 1, 1]).unwrap(), 3);
        assert!(matches!(d_norm(3, &[1, 1]), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn ev_and_form_examples() {
        let dom = BoundaryObject::plain(&[2, 0]);
        assert_eq!(ev_closed(&Web::identity(2, dom.clone())).unwrap(), LaurentPoly::one());
        let u = ladder_from_word(2, &GlWeight(vec![2, 0]), &[LadderStep::lower(1, 1)]).unwrap();
        let closed = u.compose(&u.reflect().unwrap()).unwrap();
        assert_eq!(ev_closed(&closed).unwrap(), qbinom(2, 1));
        assert_eq!(web_form(&u, &u).unwrap(), p(&[(2, 1), (0, 1)]));
        let id = Web::identity(2, dom);
        assert_eq!(web_form(&id, &id).unwrap(), LaurentPoly::one());
        assert!(matches!(ev_closed(&u), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn json_layout() {
        let w = Web::identity(3, BoundaryObject::plain(&[3])).then(Slice::split(1, 2, 1)).then(Slice::tag(2, TagSide::Right, 1));
        let j = serde_json::to_string(&w).unwrap();
        assert_eq!(
            j,
            r#"{"N":3,"domain":[{"color":3,"dual":false}],"slices":[{"kind":"split","a":1,"b":2,"pos":1},{"kind":"tag","a":2,"side":"right","pos":1}]}"#
        );
        assert_eq!(serde_json::from_str::<Web>(&j).unwrap(), w);
    }
}
