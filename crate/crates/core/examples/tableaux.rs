//! Enumeration in the total order, the ν encoding and the peeling word.

use slnweb::combinatorics::{enumerate_tableaux, peel_lt, tableau_to_nu, GlWeight, Shape};

fn main() {
    let shape = Shape::new(2, 2).unwrap();
    let k = GlWeight(vec![1, 1, 1, 1]);
    println!("column-strict tableaux of type {k}, descending:");
    for t in enumerate_tableaux(shape, Some(&k), false) {
        let nu: Vec<String> = tableau_to_nu(&t).iter().map(|s| s.to_string()).collect();
        let mark = if t.is_semistandard() { "*" } else { " " };
        println!("  {mark} {t:<10} nu = {}", nu.join(" "));
    }

    let shape = Shape::new(3, 2).unwrap();
    let all = enumerate_tableaux(shape, None, true);
    println!("{} semistandard 2x3 tableaux with entries in 1..=6", all.len());
    let t = &all[all.len() / 2];
    let word: Vec<String> = peel_lt(t).unwrap().iter().map(|(i, r)| format!("E_-{i}^({r})")).collect();
    println!("{t} = {} applied to the highest tableau", word.join(" "));
}
