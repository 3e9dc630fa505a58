//! Leclerc–Toffin vectors of one weight space and their ladder webs.

use slnweb::bases::Block;
use slnweb::combinatorics::{GlWeight, Shape};

fn main() {
    let shape = Shape::new(2, 3).unwrap();
    let block = Block::new(shape, &GlWeight(vec![1, 1, 2, 1, 1, 0])).unwrap();
    for e in block.lt_elements() {
        let word: Vec<String> = e.word.iter().map(|(i, r)| format!("-{i}^{r}")).collect();
        let web = e.ladder().unwrap();
        println!("{}  word [{}]  ({} slices)", e.tableau, word.join(","), web.slices.len());
        println!("  A = {}", e.expansion);
    }
}
