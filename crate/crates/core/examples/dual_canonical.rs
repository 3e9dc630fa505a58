//! Dual canonical elements by triangular elimination, with their β tables.

use slnweb::bases::{check_negative_exponent, Block};
use slnweb::combinatorics::{GlWeight, Shape};

fn main() {
    for (n, l, k) in [(2, 1, vec![1, 1]), (3, 1, vec![2, 1, 0]), (2, 2, vec![1, 1, 1, 1])] {
        let shape = Shape::new(n, l).unwrap();
        let block = Block::new(shape, &GlWeight(k)).unwrap();
        println!("N={n} l={l} type {}", block.weight());
        for b in block.dual_canonical_all().unwrap() {
            println!("  b^{} = {}", b.tableau, b.expansion);
            for (s, c) in &b.beta {
                println!("    beta[{s}] = {c}");
            }
            assert!(check_negative_exponent(&b.expansion, &b.tableau).passed);
        }
    }
}
