//! Labels distinguish symplectic toric orbifolds but not their fans.
//!
//! Run with `cargo run --example fan_biholomorphism`.

use toric_orbifold::corpus;
use toric_orbifold::exact_lattice::{format_int_vector, rational};
use toric_orbifold::fan::{build_fan, fans_equal};
use toric_orbifold::polytope::{compare, is_isomorphic};

fn main() {
    let t1 = corpus::unit_simplex(2);
    let relabeled = t1.with_labels(&[1, 1, 2]).unwrap();

    let fan = build_fan(&t1);
    println!("fan of T1: {} cones", fan.len());
    for cone in fan.cones() {
        let rays: Vec<String> = cone.generators().iter().map(|g| format_int_vector(g)).collect();
        println!("  [{}]", rays.join(", "));
    }

    println!("same fan as relabeled T1: {}", fans_equal(&fan, &build_fan(&relabeled)).unwrap());
    println!("labeled polytopes compare as: {:?}", compare(&t1, &relabeled).unwrap());

    // Translation preserves the symplectic type; scaling preserves only the fan.
    let moved = t1.translate(&[rational(3, 2), rational(-1, 1)]);
    let shift = is_isomorphic(&t1, &moved).unwrap().unwrap();
    println!("translate by {:?}: isomorphic", shift.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let big = t1.scale(&rational(2, 1));
    println!(
        "scaled by 2: isomorphic {}, same fan {}",
        is_isomorphic(&t1, &big).unwrap().is_some(),
        fans_equal(&fan, &build_fan(&big)).unwrap()
    );
}
