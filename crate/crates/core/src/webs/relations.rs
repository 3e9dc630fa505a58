//! The defining relations of the spider, checked as equalities of linear
//! maps on full standard bases.

use serde::Serialize;

use super::{ladder_from_word, word_weight, LadderStep, Slice, Web};
use crate::combinatorics::GlWeight;
use crate::error::Result;
use crate::ring::{qbinom, LaurentPoly};
use crate::tensor::{BoundaryObject, Factor, TagSide, TensorVector};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub labels: String,
    pub passed: bool,
}

type Combination = Vec<(LaurentPoly, Web)>;

fn apply_combination(combo: &Combination, x: &TensorVector, target: &BoundaryObject) -> Result<TensorVector> {
    let mut out = TensorVector::zero(target.clone());
    for (c, w) in combo {
        out.add_scaled(&w.evaluate_dense(x)?, c)?;
    }
    Ok(out)
}

/// Whether two combinations of webs with common domain and codomain agree
/// on every standard basis vector.
pub fn same_map(n: usize, domain: &BoundaryObject, target: &BoundaryObject, lhs: &Combination, rhs: &Combination) -> Result<bool> {
    for idx in domain.basis(n) {
        let x = TensorVector::basis_vector(domain.clone(), idx);
        if apply_combination(lhs, &x, target)? != apply_combination(rhs, &x, target)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `[n choose k]` for any integer `n`, using `[n choose k] = (-1)^k [k-n-1 choose k]`
/// when `n < 0`.
pub fn qbinom_general(n: i64, k: i64) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero();
    }
    if n >= 0 {
        return qbinom(n, k);
    }
    let b = qbinom(k - n - 1, k);
    if k % 2 == 0 {
        b
    } else {
        -b
    }
}

struct Sweep {
    n: usize,
    out: Vec<RelationCheck>,
}

impl Sweep {
    fn record(&mut self, relation: &str, labels: String, domain: &BoundaryObject, lhs: Combination, rhs: Combination) -> Result<()> {
        let target = lhs
            .first()
            .or(rhs.first())
            .map(|(_, w)| w.validate())
            .transpose()?
            .unwrap_or_else(|| domain.clone());
        let passed = same_map(self.n, domain, &target, &lhs, &rhs)?;
        self.out.push(RelationCheck { relation: relation.to_string(), labels, passed });
        Ok(())
    }

    fn ladder(&self, k: &GlWeight, word: &[LadderStep]) -> Option<Web> {
        ladder_from_word(self.n, k, word).ok()
    }
}

/// Sweeps every relation over all admissible labels for the given `N`.
/// Squares use `s + t ≤ 3` (parallel) and `s, t ≤ 2` (opposite).
pub fn check_relations(n: usize) -> Result<Vec<RelationCheck>> {
    let mut sw = Sweep { n, out: Vec::new() };
    let one = LaurentPoly::one;

    for a in 0..=n {
        for b in 0..=(n - a) {
            let dom = BoundaryObject::plain(&[a + b]);
            let digon = Web::new(n, dom.clone(), vec![Slice::split(a, b, 1), Slice::merge(a, b, 1)]);
            let id = Web::identity(n, dom.clone());
            sw.record("paralleldigon", format!("a={a} b={b}"), &dom, vec![(one(), digon)], vec![(qbinom((a + b) as i64, a as i64), id)])?;

            let dom = BoundaryObject::plain(&[a]);
            let coeff = qbinom((n - a) as i64, b as i64);
            let left = Web::new(n, dom.clone(), vec![Slice::rotated_cup(b, 2), Slice::merge(b, a, 1), Slice::split(b, a, 1), Slice::cap(b, 2)]);
            let right = Web::new(n, dom.clone(), vec![Slice::cup(b, 1), Slice::merge(a, b, 2), Slice::split(a, b, 2), Slice::rotated_cap(b, 1)]);
            let id = Web::identity(n, dom.clone());
            sw.record("oppositedigon", format!("a={a} b={b} left"), &dom, vec![(one(), left)], vec![(coeff.clone(), id.clone())])?;
            sw.record("oppositedigon", format!("a={a} b={b} right"), &dom, vec![(one(), right)], vec![(coeff, id)])?;
        }
    }

    for a in 0..=n {
        for b in 0..=(n - a) {
            for c in 0..=(n - a - b) {
                // left to right a, b, c: slot 3 = a, slot 1 = c
                let dom = BoundaryObject::plain(&[c, b, a]);
                let l = Web::new(n, dom.clone(), vec![Slice::merge(a, b, 2), Slice::merge(a + b, c, 1)]);
                let r = Web::new(n, dom.clone(), vec![Slice::merge(b, c, 1), Slice::merge(a, b + c, 1)]);
                sw.record("associativity", format!("merge a={a} b={b} c={c}"), &dom, vec![(one(), l)], vec![(one(), r)])?;
                let dom = BoundaryObject::plain(&[a + b + c]);
                let l = Web::new(n, dom.clone(), vec![Slice::split(a + b, c, 1), Slice::split(a, b, 2)]);
                let r = Web::new(n, dom.clone(), vec![Slice::split(a, b + c, 1), Slice::split(b, c, 1)]);
                sw.record("associativity", format!("split a={a} b={b} c={c}"), &dom, vec![(one(), l)], vec![(one(), r)])?;
            }
        }
    }

    for k1 in 0..=n {
        for k2 in 0..=n {
            let k = GlWeight(vec![k1, k2]);
            let dom = BoundaryObject::plain(&k.0);
            let lambda = k1 as i64 - k2 as i64;
            for s in 1..=3usize {
                for t in 1..=(3 - s) {
                    for (name, step) in [("lower", LadderStep::lower as fn(usize, usize) -> LadderStep), ("raise", LadderStep::raise)] {
                        let word = [step(1, t), step(1, s)];
                        let (Some(l), Some(r)) = (sw.ladder(&k, &word), sw.ladder(&k, &[step(1, s + t)])) else {
                            continue;
                        };
                        let c = qbinom((s + t) as i64, t as i64);
                        sw.record("parallelsquare", format!("k=({k1},{k2}) {name} s={s} t={t}"), &dom, vec![(one(), l)], vec![(c, r)])?;
                    }
                }
            }
            for s in 1..=2usize {
                for t in 1..=2usize {
                    // E_{-}^{(t)} E_{+}^{(s)} 1_k = Σ_r [t - s - λ choose r] E_{+}^{(s-r)} E_{-}^{(t-r)} 1_k and the mirror
                    let cases = [
                        ("lower-raise", LadderStep::lower(1, t), LadderStep::raise(1, s), t as i64 - s as i64 - lambda),
                        ("raise-lower", LadderStep::raise(1, s), LadderStep::lower(1, t), s as i64 - t as i64 + lambda),
                    ];
                    for (name, outer, inner, top) in cases {
                        let Some(l) = sw.ladder(&k, &[outer, inner]) else { continue };
                        let mut rhs = Vec::new();
                        for r in 0..=s.min(t) {
                            let swapped = [
                                LadderStep::new(inner.sign, 1, inner.a - r),
                                LadderStep::new(outer.sign, 1, outer.a - r),
                            ];
                            if word_weight(n, &k, &swapped).is_ok() {
                                let c = qbinom_general(top, r as i64);
                                if !c.is_zero() {
                                    rhs.push((c, sw.ladder(&k, &swapped).expect("admissible word")));
                                }
                            }
                        }
                        let kind = if top >= 0 { "" } else { " (negative top index)" };
                        sw.record("oppositesquare", format!("k=({k1},{k2}) {name} s={s} t={t}{kind}"), &dom, vec![(one(), l)], rhs)?;
                    }
                }
            }
        }
    }

    for a in 0..=n {
        let sign = TagSide::Right.sign(n, a);
        for f in [Factor::plain(a), Factor::dual(a)] {
            let dom = BoundaryObject::new(vec![f]);
            let l = Web::new(n, dom.clone(), vec![Slice::tag(a, TagSide::Left, 1)]);
            let r = Web::new(n, dom.clone(), vec![Slice::tag(a, TagSide::Right, 1)]);
            let what = if f.dual { "dual" } else { "plain" };
            sw.record("tagswitch", format!("a={a} {what}"), &dom, vec![(one(), l)], vec![(LaurentPoly::constant(sign), r)])?;
        }
    }
    Ok(sw.out)
}
