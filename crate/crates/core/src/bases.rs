//! Leclerc–Toffin vectors `A^T`, the dual canonical basis `b^T`, and Gram
//! matrices of the web form.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_tableaux, highest_tableau, peel_lt, tableau_type, GlWeight, Shape, Tableau};
use crate::error::{Error, Result};
use crate::howe::{act_divided, TableauVector};
use crate::ring::{symmetrize_correction, LaurentPoly};
use crate::webalg::GradedMatrix;
use crate::webs::{ladder_from_word, web_form, LadderStep, Sign, Web};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LtBasisElement {
    pub tableau: Tableau,
    /// Peel word, outermost factor first.
    pub word: Vec<(usize, usize)>,
    pub expansion: TableauVector,
}

impl LtBasisElement {
    /// The ladder web of the peel word, starting at the highest weight.
    pub fn ladder(&self) -> Result<Web> {
        let shape = self.tableau.shape();
        let word: Vec<LadderStep> = self.word.iter().map(|&(i, r)| LadderStep::lower(i, r)).collect();
        ladder_from_word(shape.n(), &GlWeight::highest(shape), &word)
    }
}

/// `A^T = E_{-i_1}^{(r_1)} ⋯ E_{-i_s}^{(r_s)} x^{T_Λ}`, checked to be
/// unitriangular with coefficients in `N[v, v^{-1}]`.
pub fn lt_vector(t: &Tableau) -> Result<LtBasisElement> {
    let word = peel_lt(t)?;
    let mut x = TableauVector::delta(&highest_tableau(t.shape()));
    for &(i, r) in word.iter().rev() {
        x = act_divided(Sign::Minus, i, r, &x)?;
    }
    if !x.coeff(t).is_one() {
        return Err(Error::InvariantViolation(format!("A^{t} has coefficient {} at x^{t}", x.coeff(t))));
    }
    if let Some(top) = x.leading().filter(|top| *top > t) {
        return Err(Error::InvariantViolation(format!("A^{t} has a term at {top}, above {t}")));
    }
    if let Some((tau, c)) = x.terms().find(|(_, c)| !c.is_nonnegative()) {
        return Err(Error::InvariantViolation(format!("A^{t} has coefficient {c} at {tau}")));
    }
    Ok(LtBasisElement { tableau: t.clone(), word, expansion: x })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DualCanonicalElement {
    pub tableau: Tableau,
    pub expansion: TableauVector,
    /// `b^T = A^T + Σ_S β_{ST} A^S`; only nonzero entries.
    #[serde(serialize_with = "beta_entries")]
    pub beta: BTreeMap<Tableau, LaurentPoly>,
}

/// JSON object keys must be strings, so β is written as `[{"tableau", "coeff"}, ...]`.
fn beta_entries<S: serde::Serializer>(beta: &BTreeMap<Tableau, LaurentPoly>, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        tableau: &'a Tableau,
        coeff: &'a LaurentPoly,
    }
    s.collect_seq(beta.iter().rev().map(|(tableau, coeff)| Entry { tableau, coeff }))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NegativeExponentReport {
    pub passed: bool,
    pub violations: Vec<(Tableau, LaurentPoly)>,
}

/// Coefficient 1 at `leading`, every other coefficient in `v^{-1}Z[v^{-1}]`.
pub fn check_negative_exponent(x: &TableauVector, leading: &Tableau) -> NegativeExponentReport {
    let mut violations = Vec::new();
    if !x.coeff(leading).is_one() {
        violations.push((leading.clone(), x.coeff(leading)));
    }
    for (t, c) in x.terms().rev() {
        if t != leading && !c.in_negative_part() {
            violations.push((t.clone(), c.clone()));
        }
    }
    NegativeExponentReport { passed: violations.is_empty(), violations }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    Lt,
    DualCanonical,
}

/// One weight space: the semistandard tableaux of a type with their LT
/// vectors, computed once.
#[derive(Clone, Debug)]
pub struct Block {
    shape: Shape,
    k: GlWeight,
    /// Descending.
    tableaux: Vec<Tableau>,
    lt: Vec<LtBasisElement>,
}

impl Block {
    pub fn new(shape: Shape, k: &GlWeight) -> Result<Self> {
        if !k.is_level(shape) {
            return Err(Error::InvalidInput(format!("type {k} does not fit a {}x{} rectangle", shape.l(), shape.n())));
        }
        let tableaux = enumerate_tableaux(shape, Some(k), true);
        let lt = tableaux.par_iter().map(lt_vector).collect::<Result<Vec<_>>>()?;
        Ok(Block { shape, k: k.clone(), tableaux, lt })
    }

    /// Every level block of the shape, in the order of [`GlWeight::all_level`],
    /// skipping empty ones.
    pub fn all(shape: Shape) -> Result<Vec<Block>> {
        let blocks = GlWeight::all_level(shape)
            .par_iter()
            .map(|k| Block::new(shape, k))
            .collect::<Result<Vec<_>>>()?;
        Ok(blocks.into_iter().filter(|b| !b.is_empty()).collect())
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn weight(&self) -> &GlWeight {
        &self.k
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn lt_elements(&self) -> &[LtBasisElement] {
        &self.lt
    }

    fn index_of(&self, t: &Tableau) -> Result<usize> {
        self.tableaux
            .iter()
            .position(|s| s == t)
            .ok_or_else(|| Error::InvalidInput(format!("{t} is not a semistandard tableau of type {}", self.k)))
    }

    pub fn lt(&self, t: &Tableau) -> Result<&LtBasisElement> {
        Ok(&self.lt[self.index_of(t)?])
    }

    /// Triangular elimination from `A^T` down the semistandard tableaux.
    pub fn dual_canonical(&self, t: &Tableau) -> Result<DualCanonicalElement> {
        let start = self.index_of(t)?;
        let mut b = self.lt[start].expansion.clone();
        let mut beta = BTreeMap::new();
        for (s, a_s) in self.tableaux[start + 1..].iter().zip(&self.lt[start + 1..]) {
            let c = b.coeff(s);
            if c.in_negative_part() {
                continue;
            }
            let gamma = symmetrize_correction(&c);
            b.add_scaled(&a_s.expansion, &-gamma.clone());
            beta.insert(s.clone(), -gamma);
        }
        let report = check_negative_exponent(&b, t);
        if let Some((tau, c)) = report.violations.first() {
            return Err(Error::InvariantViolation(format!("b^{t} has coefficient {c} at {tau}")));
        }
        if let Some((s, c)) = beta.iter().find(|(_, c)| !c.is_bar_invariant()) {
            return Err(Error::InvariantViolation(format!("β at {s} for {t} is not bar-invariant: {c}")));
        }
        Ok(DualCanonicalElement { tableau: t.clone(), expansion: b, beta })
    }

    pub fn dual_canonical_all(&self) -> Result<Vec<DualCanonicalElement>> {
        self.tableaux.par_iter().map(|t| self.dual_canonical(t)).collect()
    }

    /// `bar(Σ_τ c^x_τ c^y_τ)` on expansions.
    pub fn tensor_form(x: &TableauVector, y: &TableauVector) -> LaurentPoly {
        let mut acc = LaurentPoly::zero();
        for (t, c) in x.terms() {
            let d = y.coeff(t);
            if !d.is_zero() {
                acc += &(c * &d);
            }
        }
        acc.bar()
    }

    fn expansion_gram(&self, vectors: &[&TableauVector]) -> GradedMatrix {
        let entries = vectors
            .iter()
            .map(|x| vectors.iter().map(|y| Self::tensor_form(x, y)).collect())
            .collect();
        GradedMatrix::new(self.tableaux.clone(), entries)
    }

    /// `⟨A^S, A^T⟩ = v^{d(k)} ev((A^S)* A^T)` on ladder webs.
    pub fn lt_gram_from_webs(&self) -> Result<GradedMatrix> {
        let webs = self.lt.iter().map(|e| e.ladder()).collect::<Result<Vec<_>>>()?;
        let rows = webs
            .par_iter()
            .map(|u| webs.iter().map(|w| web_form(u, w)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedMatrix::new(self.tableaux.clone(), rows))
    }

    /// Gram matrix of either basis. The LT matrix is computed from tensor
    /// expansions and from web evaluation; the dual canonical one from
    /// expansions and from the LT matrix through `β`. Disagreement is an
    /// invariant violation.
    pub fn gram(&self, kind: BasisKind) -> Result<GradedMatrix> {
        let lt_exp = self.expansion_gram(&self.lt.iter().map(|e| &e.expansion).collect::<Vec<_>>());
        let lt_web = self.lt_gram_from_webs()?;
        if lt_exp != lt_web {
            return Err(Error::InvariantViolation(format!("web and tensor Gram matrices differ on block {}", self.k)));
        }
        match kind {
            BasisKind::Lt => Ok(lt_exp),
            BasisKind::DualCanonical => {
                let duals = self.dual_canonical_all()?;
                let dc_exp = self.expansion_gram(&duals.iter().map(|d| &d.expansion).collect::<Vec<_>>());
                let size = self.len();
                let coeffs: Vec<Vec<LaurentPoly>> = duals
                    .iter()
                    .map(|d| {
                        (0..size)
                            .map(|j| {
                                let s = &self.tableaux[j];
                                if *s == d.tableau {
                                    LaurentPoly::one()
                                } else {
                                    d.beta.get(s).cloned().unwrap_or_default()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let mut via_beta = vec![vec![LaurentPoly::zero(); size]; size];
                for (i, row) in via_beta.iter_mut().enumerate() {
                    for (j, entry) in row.iter_mut().enumerate() {
                        for a in 0..size {
                            if coeffs[i][a].is_zero() {
                                continue;
                            }
                            for b in 0..size {
                                if coeffs[j][b].is_zero() {
                                    continue;
                                }
                                *entry += &(&(&coeffs[i][a] * &coeffs[j][b]).bar() * lt_exp.get(a, b));
                            }
                        }
                    }
                }
                let via_beta = GradedMatrix::new(self.tableaux.clone(), via_beta);
                if via_beta != dc_exp {
                    return Err(Error::InvariantViolation(format!("dual canonical Gram routes differ on block {}", self.k)));
                }
                Ok(dc_exp)
            }
        }
    }
}

/// Block of a single tableau's type.
pub fn block_of(t: &Tableau) -> Result<Block> {
    Block::new(t.shape(), &tableau_type(t))
}

pub fn dual_canonical(t: &Tableau) -> Result<DualCanonicalElement> {
    if !t.is_semistandard() {
        return Err(Error::NotSemistandard);
    }
    block_of(t)?.dual_canonical(t)
}

pub fn gram_matrix(shape: Shape, k: &GlWeight, kind: BasisKind) -> Result<GradedMatrix> {
    Block::new(shape, k)?.gram(kind)
}

/// `⟨w, w⟩` from web evaluation against `bar(Σ c_τ^2)` from the expansion.
pub fn form_consistency(e: &LtBasisElement) -> Result<(LaurentPoly, LaurentPoly)> {
    let w = e.ladder()?;
    let by_web = web_form(&w, &w)?;
    let by_tensor = Block::tensor_form(&e.expansion, &e.expansion);
    Ok((by_web, by_tensor))
}
