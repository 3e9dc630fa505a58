//! State-sum evaluation: every edge carries a subset of `{1..N}`, each
//! vertex contributes a signed power of `v`, and a matrix entry is the sum
//! over all states with the given boundary labels.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{SliceKind, Web};
use crate::combinatorics::Subset;
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;
use crate::tensor::{ell, BasisIndex, BoundaryObject, Factor, TensorVector};

/// `sign · v^exp`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exp: i32,
}

impl SignedMonomial {
    pub const ONE: SignedMonomial = SignedMonomial { sign: 1, exp: 0 };

    pub fn times(self, sign: i8, exp: i32) -> Self {
        SignedMonomial { sign: self.sign * sign, exp: self.exp + exp }
    }

    pub fn to_poly(self) -> LaurentPoly {
        LaurentPoly::monomial(self.sign as i64, self.exp)
    }
}

#[derive(Clone, Debug)]
struct Vertex {
    kind: SliceKind,
    /// Slot-1-first, so for two-strand inputs `[right, left]`.
    inputs: Vec<usize>,
    outputs: Vec<usize>,
}

/// A web unfolded into edges and vertices.
#[derive(Clone, Debug)]
pub struct WebGraph {
    n: usize,
    edges: Vec<Factor>,
    vertices: Vec<Vertex>,
    bottom: Vec<usize>,
    top: Vec<usize>,
}

/// Edge labels, indexed by the edge ids of [`WebGraph`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct State {
    pub labels: Vec<Subset>,
}

impl WebGraph {
    pub fn build(web: &Web) -> Result<Self> {
        web.validate()?;
        let n = web.n;
        let mut edges: Vec<Factor> = web.domain.factors.clone();
        let mut current: Vec<usize> = (0..edges.len()).collect();
        let bottom = current.clone();
        let mut vertices = Vec::new();
        let new_edge = |edges: &mut Vec<Factor>, f: Factor| {
            edges.push(f);
            edges.len() - 1
        };
        for s in &web.slices {
            let lo = s.pos.saturating_sub(1);
            let (inputs, outs): (Vec<usize>, Vec<Factor>) = match s.kind {
                SliceKind::Identity => continue,
                SliceKind::Merge { a, b } => (current[lo..lo + 2].to_vec(), vec![Factor::plain(a + b)]),
                SliceKind::Split { a, b } => (current[lo..lo + 1].to_vec(), vec![Factor::plain(b), Factor::plain(a)]),
                SliceKind::Cap { .. } | SliceKind::RotatedCap { .. } => (current[lo..lo + 2].to_vec(), vec![]),
                SliceKind::Cup { a } => (vec![], vec![Factor::dual(a), Factor::plain(a)]),
                SliceKind::RotatedCup { a } => (vec![], vec![Factor::plain(a), Factor::dual(a)]),
                SliceKind::Tag { a, .. } => {
                    let f = edges[current[lo]];
                    (current[lo..lo + 1].to_vec(), vec![Factor { color: n - a, dual: !f.dual }])
                }
            };
            let outputs: Vec<usize> = outs.into_iter().map(|f| new_edge(&mut edges, f)).collect();
            current.splice(lo..lo + inputs.len(), outputs.iter().copied());
            vertices.push(Vertex { kind: s.kind, inputs, outputs });
        }
        Ok(WebGraph { n, edges, vertices, bottom, top: current })
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn top_object(&self) -> BoundaryObject {
        BoundaryObject::new(self.top.iter().map(|&e| self.edges[e]).collect())
    }

    /// Weight of a vertex under fully assigned labels, or `None` if the
    /// labels violate the local flow condition.
    fn local(&self, v: &Vertex, label: impl Fn(usize) -> Subset) -> Option<(i8, i32)> {
        let n = self.n;
        match v.kind {
            SliceKind::Identity => Some((1, 0)),
            SliceKind::Merge { .. } => {
                let (right, left) = (label(v.inputs[0]), label(v.inputs[1]));
                (left.is_disjoint(right) && label(v.outputs[0]) == left.union(right)).then(|| (1, ell(right, left)))
            }
            SliceKind::Split { .. } => {
                let (right, left) = (label(v.outputs[0]), label(v.outputs[1]));
                (left.is_disjoint(right) && label(v.inputs[0]) == left.union(right)).then(|| (1, -ell(left, right)))
            }
            SliceKind::Tag { a, side } => {
                let s = label(v.inputs[0]);
                let c = s.complement(n);
                if label(v.outputs[0]) != c {
                    return None;
                }
                let e = if self.edges[v.inputs[0]].dual { -ell(s, c) } else { ell(c, s) };
                Some((side.sign(n, a) as i8, e))
            }
            SliceKind::Cup { .. } => (label(v.outputs[0]) == label(v.outputs[1])).then_some((1, 0)),
            SliceKind::Cap { .. } => (label(v.inputs[0]) == label(v.inputs[1])).then_some((1, 0)),
            SliceKind::RotatedCup { .. } => {
                let s = label(v.outputs[0]);
                let c = s.complement(n);
                (s == label(v.outputs[1])).then(|| (1, ell(s, c) - ell(c, s)))
            }
            SliceKind::RotatedCap { .. } => {
                let s = label(v.inputs[0]);
                let c = s.complement(n);
                (s == label(v.inputs[1])).then(|| (1, ell(c, s) - ell(s, c)))
            }
        }
    }

    /// Depth-first search over vertices in slice order. `target` optionally
    /// fixes the top labels, which prunes as soon as a top edge is set.
    fn search<F>(&self, bottom: &BasisIndex, target: Option<&BasisIndex>, mut visit: F)
    where
        F: FnMut(&[Option<Subset>], SignedMonomial),
    {
        let mut labels = vec![None; self.edges.len()];
        let mut top_pos = vec![None; self.edges.len()];
        for (i, &e) in self.top.iter().enumerate() {
            top_pos[e] = Some(i);
        }
        for (&e, &s) in self.bottom.iter().zip(&bottom.subsets) {
            labels[e] = Some(s);
        }
        let fits = |labels: &[Option<Subset>], e: usize| match (target, top_pos[e]) {
            (Some(t), Some(i)) => labels[e] == Some(t.subsets[i]),
            _ => true,
        };
        if self.bottom.iter().any(|&e| !fits(&labels, e)) {
            return;
        }
        self.step(0, &mut labels, SignedMonomial::ONE, &fits, &mut visit);
    }

    fn step<F, G>(&self, vi: usize, labels: &mut Vec<Option<Subset>>, acc: SignedMonomial, fits: &G, visit: &mut F)
    where
        F: FnMut(&[Option<Subset>], SignedMonomial),
        G: Fn(&[Option<Subset>], usize) -> bool,
    {
        let Some(v) = self.vertices.get(vi) else {
            visit(labels, acc);
            return;
        };
        let n = self.n;
        let inl = |i: usize| labels[v.inputs[i]].expect("inputs are assigned before use");
        let choices: Vec<Vec<Subset>> = match v.kind {
            SliceKind::Identity => vec![vec![]],
            SliceKind::Merge { .. } => {
                let (r, l) = (inl(0), inl(1));
                if l.is_disjoint(r) {
                    vec![vec![l.union(r)]]
                } else {
                    vec![]
                }
            }
            SliceKind::Split { a, .. } => {
                let s = inl(0);
                s.subsets_of_size(a).into_iter().map(|left| vec![s.difference(left), left]).collect()
            }
            SliceKind::Tag { .. } => vec![vec![inl(0).complement(n)]],
            SliceKind::Cup { a } | SliceKind::RotatedCup { a } => {
                Subset::all_of_size(n, a).into_iter().map(|s| vec![s, s]).collect()
            }
            SliceKind::Cap { .. } | SliceKind::RotatedCap { .. } => vec![vec![]],
        };
        for outs in choices {
            for (&e, &s) in v.outputs.iter().zip(&outs) {
                labels[e] = Some(s);
            }
            if v.outputs.iter().all(|&e| fits(labels, e)) {
                if let Some((sg, ex)) = self.local(v, |e| labels[e].unwrap()) {
                    self.step(vi + 1, labels, acc.times(sg, ex), fits, visit);
                }
            }
        }
        for &e in &v.outputs {
            labels[e] = None;
        }
    }

    fn check_bottom(&self, idx: &BasisIndex, obj: &BoundaryObject) -> Result<()> {
        if !idx.conforms(obj, self.n) {
            return Err(Error::ShapeMismatch(format!("basis index {idx} does not fit {obj}")));
        }
        Ok(())
    }
}

/// All states with the given boundary labels at the bottom and the top.
pub fn enumerate_states(web: &Web, bottom: &BasisIndex, top: &BasisIndex) -> Result<Vec<State>> {
    let g = WebGraph::build(web)?;
    g.check_bottom(bottom, &web.domain)?;
    g.check_bottom(top, &g.top_object())?;
    let mut out = Vec::new();
    g.search(bottom, Some(top), |labels, _| {
        out.push(State { labels: labels.iter().map(|s| s.unwrap()).collect() });
    });
    Ok(out)
}

/// Product of the local vertex weights of a state.
pub fn state_weight(web: &Web, state: &State) -> Result<SignedMonomial> {
    let g = WebGraph::build(web)?;
    if state.labels.len() != g.edges.len() {
        return Err(Error::InvalidInput(format!("state has {} labels, web has {} edges", state.labels.len(), g.edges.len())));
    }
    if let Some(e) = (0..g.edges.len()).find(|&e| state.labels[e].len() != g.edges[e].color) {
        return Err(Error::InvalidInput(format!("label of edge {e} has the wrong size")));
    }
    let mut acc = SignedMonomial::ONE;
    for v in &g.vertices {
        let (s, e) = g
            .local(v, |e| state.labels[e])
            .ok_or_else(|| Error::InvalidInput("state violates a vertex condition".into()))?;
        acc = acc.times(s, e);
    }
    Ok(acc)
}

/// The image of `x`, summing state weights entry by entry.
pub fn evaluate_statesum(web: &Web, x: &TensorVector) -> Result<TensorVector> {
    if x.space() != &web.domain {
        return Err(Error::ShapeMismatch(format!("vector lives in {}, web starts at {}", x.space(), web.domain)));
    }
    let g = WebGraph::build(web)?;
    let top_obj = g.top_object();
    let terms: Vec<(&BasisIndex, &LaurentPoly)> = x.terms().collect();
    for (idx, _) in &terms {
        g.check_bottom(idx, &web.domain)?;
    }
    let partials: Vec<BTreeMap<BasisIndex, LaurentPoly>> = terms
        .par_iter()
        .map(|(idx, c)| {
            let mut acc: BTreeMap<BasisIndex, BTreeMap<i32, i64>> = BTreeMap::new();
            g.search(idx, None, |labels, w| {
                let top = BasisIndex::new(g.top.iter().map(|&e| labels[e].unwrap()).collect());
                *acc.entry(top).or_default().entry(w.exp).or_default() += w.sign as i64;
            });
            acc.into_iter()
                .map(|(top, m)| (top, &LaurentPoly::from_terms(m) * *c))
                .collect()
        })
        .collect();
    let mut out = TensorVector::zero(top_obj);
    for part in partials {
        for (idx, c) in part {
            out.add_term(idx, &c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::GlWeight;
    use crate::tensor::TagSide;
    use crate::webs::{ladder_from_word, LadderStep, Slice};

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn state_examples() {
        let strand = Web::identity(3, BoundaryObject::plain(&[2]));
        let b = BasisIndex::new(vec![s(&[3, 1])]);
        let states = enumerate_states(&strand, &b, &b).unwrap();
        assert_eq!(states.len(), 1);
        assert_eq!(state_weight(&strand, &states[0]).unwrap(), SignedMonomial::ONE);
        assert!(enumerate_states(&strand, &b, &BasisIndex::new(vec![s(&[2, 1])])).unwrap().is_empty());

        let split = Web::identity(2, BoundaryObject::plain(&[2])).then(Slice::split(1, 1, 1));
        let bottom = BasisIndex::new(vec![s(&[2, 1])]);
        let total: usize = BoundaryObject::plain(&[1, 1])
            .basis(2)
            .iter()
            .map(|t| enumerate_states(&split, &bottom, t).unwrap().len())
            .sum();
        assert_eq!(total, 2);

        let split = Web::identity(3, BoundaryObject::plain(&[3])).then(Slice::split(1, 2, 1));
        let bottom = BasisIndex::new(vec![s(&[3, 2, 1])]);
        let top = BasisIndex::new(vec![s(&[3, 2]), s(&[1])]);
        let st = enumerate_states(&split, &bottom, &top).unwrap();
        assert_eq!(st.len(), 1);
        assert_eq!(state_weight(&split, &st[0]).unwrap(), SignedMonomial { sign: 1, exp: -2 });
    }

    #[test]
    fn agrees_with_dense_on_small_webs() {
        let n = 3;
        let webs = vec![
            ladder_from_word(n, &GlWeight(vec![3, 0, 0]), &[LadderStep::lower(1, 1), LadderStep::lower(2, 1), LadderStep::lower(1, 1)]).unwrap(),
            Web::identity(n, BoundaryObject::plain(&[1, 2]))
                .then(Slice::merge(2, 1, 1))
                .then(Slice::tag(3, TagSide::Right, 1))
                .then(Slice::tag(0, TagSide::Left, 1)),
            Web::identity(n, BoundaryObject::plain(&[1]))
                .then(Slice::rotated_cup(2, 2))
                .then(Slice::tag(2, TagSide::Right, 2))
                .then(Slice::cap(1, 1))
                .then(Slice::cup(1, 1))
                .then(Slice::tag(2, TagSide::Left, 3))
                .then(Slice::merge(1, 1, 2)),
        ];
        for w in webs {
            for idx in w.domain.basis(n) {
                let x = TensorVector::basis_vector(w.domain.clone(), idx);
                assert_eq!(evaluate_statesum(&w, &x).unwrap(), w.evaluate_dense(&x).unwrap(), "{w:?}");
            }
        }
    }
}
