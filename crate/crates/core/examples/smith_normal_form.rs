//! Smith and Hermite normal forms, integer kernels and finite quotients.
//!
//! Run with `cargo run --example smith_normal_form`.

use toric_orbifold::exact_lattice::{
    hermite_normal_form, integer_kernel, quotient_group, saturate, smith_normal_form, IntMatrix,
};

fn main() {
    let a = IntMatrix::from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    let snf = smith_normal_form(&a);
    println!("A = {a}");
    println!("D = {}  (diagonal {:?})", snf.d, snf.diagonal().iter().map(|d| d.to_string()).collect::<Vec<_>>());
    println!("U·A·V == D: {}", &(&snf.u * &a) * &snf.v == snf.d);
    println!("det U = {}, det V = {}", snf.u.determinant(), snf.v.determinant());

    let (h, u) = hermite_normal_form(&a);
    println!("\nHermite form H = {h}, U·A == H: {}", &u * &a == h);

    // The kernel of the projection onto the facet normals of the triangle.
    let projection = IntMatrix::from_rows([[1, 0, -1], [0, 1, -1]]);
    println!("\nkernel of {projection} is {}", integer_kernel(&projection));

    // ℤ² over the sublattice spanned by (2, 0) and (1, 3).
    let lattice = IntMatrix::identity(2);
    let sub = IntMatrix::from_rows([[2, 0], [1, 3]]);
    println!("Z^2 / <(2,0), (1,3)> = {}", quotient_group(&lattice, &sub).unwrap());

    // Saturation recovers the primitive sublattice containing (2, 4).
    let b = IntMatrix::from_rows([[2, 4]]);
    println!("saturation of {b} is {}", saturate(&b).unwrap());
}
