//! The tableau action of divided powers against single ladder rungs.

use slnweb::combinatorics::{tableau_type, GlWeight, Shape, Tableau};
use slnweb::howe::{act_divided, tableau_to_tensor, to_tensor, SlWeight, TableauVector};
use slnweb::webs::{ladder_from_word, LadderStep, Sign};

fn main() {
    let shape = Shape::new(3, 2).unwrap();
    let t = Tableau::from_rows(shape, &[vec![1, 1, 2], vec![2, 3, 4]]).unwrap();
    let k = tableau_type(&t);
    println!("T = {t}, type {k}, sl weight {:?}", SlWeight::from_gl(&k).0);

    let x = TableauVector::delta(&t);
    for (sign, i, a) in [(Sign::Minus, 1, 1), (Sign::Plus, 2, 1), (Sign::Minus, 3, 2)] {
        let y = act_divided(sign, i, a, &x).unwrap();
        let step = LadderStep::new(sign, i, a);
        let agree = match ladder_from_word(shape.n(), &k, &[step]) {
            Ok(web) => {
                let target = GlWeight(web.codomain().unwrap().colors());
                web.evaluate_dense(&tableau_to_tensor(&t)).unwrap() == to_tensor(&y, &target).unwrap()
            }
            Err(e) => {
                println!("  ladder {step}: {e}");
                y.is_zero()
            }
        };
        println!("E_{sign}{i}^({a}) x^T = {y}   ladder agrees: {agree}");
    }
}
