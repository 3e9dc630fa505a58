//! Seeded property sweeps behind `slnweb verify`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bases::{BasisKind, Block};
use crate::combinatorics::{enumerate_tableaux, highest_tableau, tableau_type, GlWeight, Shape, Tableau};
use crate::error::Result;
use crate::howe::{act_divided, act_e, serre_combination, tableau_to_tensor, to_tensor, SlWeight, TableauVector};
use crate::ring::{qint, qint_signed, LaurentPoly};
use crate::tensor::TensorVector;
use crate::webalg::{frobenius_from_cartan, gorenstein_parameter};
use crate::webs::{d_norm, evaluate_statesum, ladder_from_word, step_weight, web_form, LadderStep, Sign, Web};

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub property: String,
    pub cases: usize,
    pub passed: bool,
    /// First few failing cases.
    pub failures: Vec<String>,
}

impl PropertyReport {
    fn new(property: &str) -> Self {
        PropertyReport { property: property.to_string(), cases: 0, passed: true, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.passed = false;
            if self.failures.len() < 10 {
                self.failures.push(what());
            }
        }
    }
}

/// The shapes used by sweeps for a given `N`: every `ℓ` with `Nℓ ≤ 6`.
pub fn sweep_shapes(n: usize) -> Vec<Shape> {
    (1..).map_while(|l| (n * l <= 6).then(|| Shape::new(n, l).ok()).flatten()).collect()
}

/// Random ladder on `m` uprights with at most `max_len` rungs of width ≤ 2.
pub fn random_ladder(rng: &mut impl Rng, n: usize, m: usize, max_len: usize) -> (GlWeight, Vec<LadderStep>, Web) {
    loop {
        let k: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
        let len = rng.gen_range(1..=max_len);
        let mut word = Vec::new();
        let mut cur = k.clone();
        for _ in 0..len {
            let step = LadderStep::new(
                if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus },
                rng.gen_range(1..m),
                rng.gen_range(1..=2),
            );
            if let Ok(next) = step_weight(n, &cur, step) {
                cur = next;
                word.insert(0, step);
            }
        }
        if word.is_empty() {
            continue;
        }
        let k = GlWeight(k);
        let web = ladder_from_word(n, &k, &word).expect("word was built admissible");
        return (k, word, web);
    }
}

/// State-sum and dense evaluation agree on full bases of random ladders.
pub fn evaluator_equivalence(seed: u64, count: usize, n_max: usize, m_max: usize) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = PropertyReport::new("evaluator-equivalence");
    for _ in 0..count {
        let n = rng.gen_range(2..=n_max);
        let m = rng.gen_range(2..=m_max);
        let (k, word, web) = random_ladder(&mut rng, n, m, 4);
        let mut ok = true;
        for idx in web.domain.basis(n) {
            let x = TensorVector::basis_vector(web.domain.clone(), idx);
            if evaluate_statesum(&web, &x)? != web.evaluate_dense(&x)? {
                ok = false;
                break;
            }
        }
        rep.check(ok, || format!("N={n} k={k} word={word:?}"));
    }
    Ok(rep)
}

/// Single-rung ladders on `x_ν` match the tableau action, `a ≤ 2`.
pub fn skew_howe_consistency(shape: Shape) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("skew-howe-consistency");
    let n = shape.n();
    for t in enumerate_tableaux(shape, None, false) {
        let k = tableau_type(&t);
        let x = TableauVector::delta(&t);
        for i in 1..shape.m() {
            for sign in [Sign::Plus, Sign::Minus] {
                for a in 1..=2 {
                    let step = LadderStep::new(sign, i, a);
                    let by_tableaux = act_divided(sign, i, a, &x)?;
                    let ok = match step_weight(n, &k.0, step) {
                        Ok(k2) => {
                            let web = ladder_from_word(n, &k, &[step])?;
                            web.evaluate_dense(&tableau_to_tensor(&t))? == to_tensor(&by_tableaux, &GlWeight(k2))?
                        }
                        Err(_) => by_tableaux.is_zero(),
                    };
                    rep.check(ok, || format!("T={t} step={step}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Unitriangularity, bar-invariant β, negative exponents and almost
/// orthogonality on every block of the shape.
pub fn dual_canonical_properties(shape: Shape) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("dual-canonical");
    for block in Block::all(shape)? {
        let duals = block.dual_canonical_all()?;
        for (d, t) in duals.iter().zip(block.tableaux()) {
            let lt = block.lt(t)?;
            let tri = lt.expansion.coeff(t).is_one() && lt.expansion.leading() == Some(t);
            rep.check(tri, || format!("A^{t} is not unitriangular"));
            rep.check(d.beta.values().all(|b| b.is_bar_invariant()), || format!("β of {t} not bar-invariant"));
            let neg = d.expansion.terms().all(|(s, c)| if s == t { c.is_one() } else { c.in_negative_part() });
            rep.check(neg, || format!("b^{t} fails the negative exponent property"));
        }
        let g = block.gram(BasisKind::DualCanonical)?;
        for i in 0..g.size() {
            for j in 0..g.size() {
                let e = g.get(i, j);
                let off = if i == j { e - &LaurentPoly::one() } else { e.clone() };
                rep.check(off.in_positive_part(), || format!("⟨b,b⟩ entry ({i},{j}) = {e} on block {}", block.weight()));
            }
        }
    }
    Ok(rep)
}

/// `⟨w, w⟩ = bar(Σ c_τ^2)` for every LT ladder, and both Gram routes agree.
pub fn form_consistency(shape: Shape) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("form-consistency");
    for block in Block::all(shape)? {
        for e in block.lt_elements() {
            let (web, tensor) = crate::bases::form_consistency(e)?;
            rep.check(web == tensor, || format!("T={}: web {web} vs tensor {tensor}", e.tableau));
        }
        let a = block.lt_gram_from_webs()?;
        rep.check(block.gram(BasisKind::Lt)? == a, || format!("Gram routes differ on block {}", block.weight()));
    }
    Ok(rep)
}

/// `⟨E_{-i}u, w⟩ = v^{1+λ_i} ⟨u, E_{+i}w⟩` with `λ` the weight of `w`'s block.
pub fn shapovalov(seed: u64, count: usize, shapes: &[Shape]) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = PropertyReport::new("shapovalov-adjointness");
    let mut blocks = Vec::new();
    for &s in shapes {
        blocks.extend(Block::all(s)?);
    }
    let mut attempts = 0;
    while rep.cases < count && attempts < 100 * count {
        attempts += 1;
        let b = blocks.choose(&mut rng).expect("at least one block");
        let (shape, k) = (b.shape(), b.weight().clone());
        let n = shape.n();
        let i = rng.gen_range(1..shape.m());
        let Ok(k2) = step_weight(n, &k.0, LadderStep::lower(i, 1)) else { continue };
        let k2 = GlWeight(k2);
        let b2 = blocks.iter().find(|c| c.shape() == shape && *c.weight() == k2).expect("level block");
        let u = b.lt_elements().choose(&mut rng).unwrap().ladder()?;
        let w = b2.lt_elements().choose(&mut rng).unwrap().ladder()?;
        let lower = u.compose(&ladder_from_word(n, &k, &[LadderStep::lower(i, 1)])?)?;
        let raise = w.compose(&ladder_from_word(n, &k2, &[LadderStep::raise(i, 1)])?)?;
        let lam = SlWeight::from_gl(&k2).0[i - 1];
        let lhs = web_form(&lower, &w)?;
        let rhs = web_form(&u, &raise)?.shift((1 + lam) as i32);
        rep.check(lhs == rhs, || format!("k={k} i={i}: {lhs} vs {rhs}"));
    }
    Ok(rep)
}

fn random_poly(rng: &mut impl Rng) -> LaurentPoly {
    let terms: Vec<(i32, i64)> = (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(-3..=3), rng.gen_range(-4..=4))).collect();
    LaurentPoly::from_terms(terms)
}

/// `E_{+i} x^{T_Λ} = 0`, and `[E_{+i}, E_{-i}]` acts as `[λ_i]` on random
/// weight vectors.
pub fn highest_weight_and_commutator(seed: u64, count: usize, shapes: &[Shape]) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = PropertyReport::new("highest-weight-and-commutator");
    for &s in shapes {
        let top = TableauVector::delta(&highest_tableau(s));
        for i in 1..s.m() {
            rep.check(act_e(Sign::Plus, i, &top)?.is_zero(), || format!("E_+{i} x^T_Λ ≠ 0 for {}x{}", s.l(), s.n()));
        }
    }
    for _ in 0..count {
        let shape = *shapes.choose(&mut rng).expect("at least one shape");
        let weights = GlWeight::all_level(shape);
        let k = weights.choose(&mut rng).unwrap();
        let pool = enumerate_tableaux(shape, Some(k), false);
        if pool.is_empty() {
            continue;
        }
        let mut x = TableauVector::zero(shape);
        for _ in 0..rng.gen_range(1..=4) {
            x.add_term(pool.choose(&mut rng).unwrap().clone(), &random_poly(&mut rng));
        }
        let lam = SlWeight::from_gl(k);
        for i in 1..shape.m() {
            let a = act_e(Sign::Plus, i, &act_e(Sign::Minus, i, &x)?)?;
            let b = act_e(Sign::Minus, i, &act_e(Sign::Plus, i, &x)?)?;
            rep.check(a.sub(&b) == x.scale(&qint_signed(lam.0[i - 1])), || format!("k={k} i={i}"));
        }
    }
    Ok(rep)
}

/// Degree-two Serre relation with scalar `v + v^{-1}` on every basis vector.
pub fn serre(shape: Shape) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("serre");
    let c = qint(2);
    for t in enumerate_tableaux(shape, None, false) {
        let x = TableauVector::delta(&t);
        for i in 1..shape.m() {
            for j in 1..shape.m() {
                if i.abs_diff(j) != 1 {
                    continue;
                }
                for sign in [Sign::Plus, Sign::Minus] {
                    rep.check(serre_combination(sign, i, j, &c, &x)?.is_zero(), || format!("T={t} i={i} j={j} {sign}"));
                }
            }
        }
    }
    Ok(rep)
}

/// Cartan symmetry `C_ST = C_TS`, `bar(C_ST) = v^{-2d} C_ST`, positivity,
/// the Frobenius check and the Gorenstein parameter on every block.
pub fn algebra_diagnostics(shape: Shape) -> Result<PropertyReport> {
    let mut rep = PropertyReport::new("algebra-diagnostics");
    let n = shape.n();
    for block in Block::all(shape)? {
        let k = block.weight();
        let c = block.gram(BasisKind::Lt)?;
        let d = d_norm(n, &k.0)?;
        rep.check(c.is_symmetric(), || format!("C not symmetric on {k}"));
        rep.check(c.is_bar_invariant_up_to(2 * d as i32), || format!("bar(C) ≠ v^(-2d) C on {k}"));
        rep.check(c.is_nonnegative(), || format!("negative Cartan entry on {k}"));
        rep.check(frobenius_from_cartan(n, k, &c)?.passed, || format!("Frobenius check fails on {k}"));
        rep.check(gorenstein_parameter(n, k)? == 2 * d, || format!("Gorenstein parameter on {k}"));
    }
    Ok(rep)
}

/// Every sweep for one `N`.
pub fn run_properties(n: usize, seed: u64) -> Result<Vec<PropertyReport>> {
    let shapes = sweep_shapes(n);
    let mut out = vec![evaluator_equivalence(seed, 100, n, 6)?];
    let merge = |name: &str, parts: Vec<PropertyReport>| {
        let mut r = PropertyReport::new(name);
        for p in parts {
            r.cases += p.cases;
            r.passed &= p.passed;
            r.failures.extend(p.failures);
        }
        r
    };
    let per_shape = |f: fn(Shape) -> Result<PropertyReport>| -> Result<Vec<PropertyReport>> { shapes.iter().map(|&s| f(s)).collect() };
    out.push(merge("skew-howe-consistency", per_shape(skew_howe_consistency)?));
    out.push(merge("dual-canonical", per_shape(dual_canonical_properties)?));
    out.push(merge("form-consistency", per_shape(form_consistency)?));
    out.push(shapovalov(seed, 50, &shapes)?);
    out.push(highest_weight_and_commutator(seed, 50, &shapes)?);
    out.push(merge("serre", per_shape(serre)?));
    out.push(merge("algebra-diagnostics", per_shape(algebra_diagnostics)?));
    Ok(out)
}

/// Tableaux of a type, as a convenience for callers that only hold a weight.
pub fn tableaux_of_type(shape: Shape, k: &GlWeight) -> Vec<Tableau> {
    enumerate_tableaux(shape, Some(k), true)
}
