//! Ladder webs from words, evaluated slice by slice and by state sums.

use slnweb::combinatorics::GlWeight;
use slnweb::tensor::TensorVector;
use slnweb::webs::{ev_closed, evaluate_statesum, ladder_from_word, LadderStep};

fn main() {
    let n = 3;
    let k = GlWeight(vec![3, 0, 0]);
    // last entry is the bottom rung
    let word = [LadderStep::lower(2, 1), LadderStep::lower(1, 2)];
    let web = ladder_from_word(n, &k, &word).unwrap();
    println!("{} slices, {} -> {}", web.slices.len(), web.domain, web.codomain().unwrap());
    for idx in web.domain.basis(n) {
        let x = TensorVector::basis_vector(web.domain.clone(), idx);
        let dense = web.evaluate_dense(&x).unwrap();
        assert_eq!(dense, evaluate_statesum(&web, &x).unwrap());
        println!("image: {dense}");
    }

    // closing the ladder with its reflection gives a scalar
    let closed = web.compose(&web.reflect().unwrap()).unwrap();
    println!("ev(w* w) = {}", ev_closed(&closed).unwrap());
    println!("{}", serde_json::to_string(&web).unwrap());
}
