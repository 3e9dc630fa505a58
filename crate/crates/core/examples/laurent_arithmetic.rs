//! Quantum integers, Gaussian binomials, the bar involution and exact division.

use slnweb::ring::{exact_divide, qbinom, qfactorial, qint, symmetrize_correction, LaurentPoly};

fn main() {
    for n in 1..=4 {
        println!("[{n}] = {}", qint(n));
    }
    println!("[4 choose 2] = {}", qbinom(4, 2));
    println!("[3]! = {}", qfactorial(3));

    let p = LaurentPoly::from_terms([(2, 3), (0, -1), (-1, 5)]);
    println!("p = {p}, bar(p) = {}", p.bar());

    // the bar-invariant part removed during dual canonical elimination
    let gamma = symmetrize_correction(&p);
    println!("gamma = {gamma}, p - gamma = {}", &p - &gamma);

    let q = &qint(3) * &qint(2);
    println!("[3][2] / [2] = {}", exact_divide(&q, &qint(2)).unwrap());
    println!("[3] / [2] = {:?}", exact_divide(&qint(3), &qint(2)).err());

    println!("json: {}", serde_json::to_string(&p).unwrap());
}
