//! The football family: one-dimensional toric orbifolds with cone points.
//!
//! Run with `cargo run --example classification`.

use toric_orbifold::corpus;
use toric_orbifold::delzant::{build_construction, face_stabilizer, kernel_group};
use toric_orbifold::local_model::structure_group;
use toric_orbifold::polytope::is_isomorphic;

fn main() {
    for n in 1..=4 {
        for m in 1..=4 {
            let p = corpus::football(n, m);
            let d = build_construction(&p);
            let poles: Vec<String> = (0..2)
                .map(|i| {
                    let face = p.facet_face(i);
                    let g = structure_group(&p, face).unwrap();
                    assert_eq!(g, face_stabilizer(&d, face).unwrap());
                    g.to_string()
                })
                .collect();
            println!(
                "I({n},{m}): poles {:<16} K component group {}",
                poles.join(", "),
                kernel_group(&d).component_group
            );
        }
    }

    // Swapping labels gives a different labeled polytope, although the
    // orbifolds are isomorphic after the reflection x ↦ 1 − x, which is
    // not a translation.
    let a = corpus::football(2, 3);
    let b = corpus::football(3, 2);
    println!("I(2,3) and I(3,2) related by a translation: {}", is_isomorphic(&a, &b).unwrap().is_some());
}
