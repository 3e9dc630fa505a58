//! Invariant tensors with dual factors, read in the tag basis.

use slnweb::combinatorics::Subset;
use slnweb::tensor::{apply_split, apply_tag, tag_basis_coords, BasisIndex, BoundaryObject, TagSide, TensorVector};

fn main() {
    let n = 3;
    let top = TensorVector::basis_vector(BoundaryObject::plain(&[n]), BasisIndex::new(vec![Subset::full(n)]));
    for a in 1..n {
        // tag the left factor of M'(x_{N..1}): a dual a-strand next to a plain one
        let b = apply_tag(n, n - a, TagSide::Left, 2, &apply_split(n, n - a, a, 1, &top).unwrap()).unwrap();
        println!("a = {a}: {b}");
        for (idx, c) in tag_basis_coords(n, &b) {
            println!("  tag basis {idx}: {c}");
        }
    }
}
