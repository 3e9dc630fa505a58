//! Merge, split, tag, cup and cap acting on tensor vectors.

use slnweb::combinatorics::Subset;
use slnweb::tensor::{apply_cap, apply_cup, apply_merge, apply_split, apply_tag, BasisIndex, BoundaryObject, TagSide, TensorVector};

fn main() {
    let n = 3;
    let top = TensorVector::basis_vector(BoundaryObject::plain(&[3]), BasisIndex::new(vec![Subset::full(n)]));
    let split = apply_split(n, 1, 2, 1, &top).unwrap();
    println!("split(1,2) x_321 = {split}");
    println!("merge back   = {}", apply_merge(n, 1, 2, 1, &split).unwrap());

    let x = TensorVector::basis_vector(BoundaryObject::plain(&[1]), BasisIndex::new(vec![Subset::singleton(2)]));
    let tagged = apply_tag(n, 1, TagSide::Left, 1, &x).unwrap();
    println!("tag x_2 = {tagged}");
    println!("tag twice = {}", apply_tag(n, 2, TagSide::Left, 1, &tagged).unwrap());

    // zig-zag: a cup to the left of the strand, then a cap closing it off
    let cup = apply_cup(n, 1, 2, &x).unwrap();
    println!("cup ⊗ x_2 = {cup}");
    println!("cap       = {}", apply_cap(n, 1, 1, &cup).unwrap());
}
