//! The reduction construction: a toric orbifold as a quotient of ℂᵈ.
//!
//! Run with `cargo run --example delzant_reduction`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_orbifold::corpus;
use toric_orbifold::delzant::{
    build_construction, face_stabilizer, kernel_group, verify_reduction_invariants, verify_regular_level,
};
use toric_orbifold::exact_lattice::format_rational_vector;

fn main() {
    let p = corpus::weighted_tetrahedron();
    let d = build_construction(&p);
    println!("projection ℤ^{} → ℤ^{}: {}", d.facet_count(), d.dim(), d.projection);
    println!("kernel basis: {}", d.kernel_basis);
    println!("level: {}", format_rational_vector(&d.level));

    let k = kernel_group(&d);
    println!("K = T^{} x {}", k.torus_dim, k.component_group);

    for face in p.proper_faces() {
        println!("  stabilizer over {:<8} {}", face.to_string(), face_stabilizer(&d, face).unwrap());
    }

    let regular = verify_regular_level(&d, &p);
    println!("regular level: {}, largest stabilizer order {}", regular.regular, regular.max_stabilizer_order);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut points = p.enumerate_vertices();
    points.extend((0..200).map(|_| p.random_interior_point(&mut rng)));
    let report = verify_reduction_invariants(&d, &p, &points).unwrap();
    println!(
        "{} points checked, invariants hold: {}, vertices attained: {}",
        report.samples_checked, report.passed, report.vertices_attained
    );
}
