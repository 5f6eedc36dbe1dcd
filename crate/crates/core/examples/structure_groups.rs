//! Orbifold structure groups of every face, with the local data behind them.
//!
//! Run with `cargo run --example structure_groups`.

use toric_orbifold::corpus;
use toric_orbifold::exact_lattice::format_rational_vector;
use toric_orbifold::local_model::{isotropy_data, local_cone, slice_weights, structure_group};
use toric_orbifold::polytope::LabeledPolytope;

fn table(name: &str, p: &LabeledPolytope) {
    println!("{name}");
    for face in p.proper_faces() {
        let group = structure_group(p, face).unwrap();
        let iso = isotropy_data(p, face).unwrap();
        println!("  {:<8} scaled normals {}  group {group}", face.to_string(), iso.scaled_matrix());
    }
}

fn main() {
    table("W2, the triangle (0,0), (2,0), (0,1)", &corpus::w2());
    let labeled = corpus::weighted_tetrahedron().with_labels(&[1, 2, 1, 3]).unwrap();
    table("weighted tetrahedron, labels 1", &corpus::weighted_tetrahedron());
    table("weighted tetrahedron, labels 1, 2, 1, 3", &labeled);

    // At a vertex the orbifold chart is ℂⁿ/Γ; the weights of the torus
    // action on ℂⁿ are the dual basis to the scaled normals.
    let w2 = corpus::w2();
    for v in 0..w2.vertices().len() {
        let slice = slice_weights(&w2, v);
        let weights: Vec<String> = slice.weights.iter().map(|w| format_rational_vector(w)).collect();
        println!("W2 vertex {}: weights {}", format_rational_vector(&w2.vertices()[v].point), weights.join(" "));
    }

    let edge = w2.face(&[2]).unwrap();
    let cone = local_cone(&w2, edge).unwrap();
    println!(
        "local cone at facet 2: apex {}, {} span directions, {} generators",
        format_rational_vector(&cone.apex),
        cone.span_directions.len(),
        cone.generators.len()
    );
}
