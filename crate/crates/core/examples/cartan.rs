//! Graded Cartan matrices, the Gorenstein parameter and the Frobenius check.

use slnweb::combinatorics::{GlWeight, Shape};
use slnweb::webalg::{cartan_matrix, frobenius_check, gorenstein_parameter};

fn main() {
    let shape = Shape::new(3, 2).unwrap();
    for k in [vec![1, 1, 1, 1, 1, 1], vec![2, 1, 1, 1, 1, 0], vec![3, 3, 0, 0, 0, 0]] {
        let k = GlWeight(k);
        let c = cartan_matrix(shape, &k).unwrap();
        let f = frobenius_check(shape, &k).unwrap();
        println!("k = {k}: {} projectives, Gorenstein parameter {}", c.size(), gorenstein_parameter(3, &k).unwrap());
        println!("  symmetric {}, nonnegative {}, Frobenius {}", c.is_symmetric(), c.is_nonnegative(), f.passed);
        println!("  total graded dimension {}", f.total);
        if c.size() <= 5 {
            println!("{c}");
        }
    }
}
