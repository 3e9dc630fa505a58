//! The web form against the tensor form, and Shapovalov adjointness.

use slnweb::bases::{BasisKind, Block};
use slnweb::combinatorics::{GlWeight, Shape};
use slnweb::howe::SlWeight;
use slnweb::webs::{ladder_from_word, web_form, LadderStep};

fn main() {
    let shape = Shape::new(2, 2).unwrap();
    let block = Block::new(shape, &GlWeight(vec![1, 1, 1, 1])).unwrap();
    println!("Gram matrix of the LT webs:\n{}", block.lt_gram_from_webs().unwrap());
    println!("dual canonical Gram matrix:\n{}", block.gram(BasisKind::DualCanonical).unwrap());

    // <E_-2 u, w> = v^{1+λ_2} <u, E_+2 w> with λ the weight of w
    let k = GlWeight(vec![1, 1, 1, 1]);
    let k2 = GlWeight(vec![1, 0, 2, 1]);
    let other = Block::new(shape, &k2).unwrap();
    let u = block.lt_elements()[0].ladder().unwrap();
    let w = other.lt_elements()[0].ladder().unwrap();
    let lowered = u.compose(&ladder_from_word(2, &k, &[LadderStep::lower(2, 1)]).unwrap()).unwrap();
    let raised = w.compose(&ladder_from_word(2, &k2, &[LadderStep::raise(2, 1)]).unwrap()).unwrap();
    let lam = SlWeight::from_gl(&k2).0[1];
    let lhs = web_form(&lowered, &w).unwrap();
    let rhs = web_form(&u, &raised).unwrap().shift(1 + lam as i32);
    println!("<E_-2 u, w> = {lhs}, v^(1+λ_2) <u, E_+2 w> = {rhs}");
}
