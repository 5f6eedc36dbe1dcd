//! Reads a labeled polytope from JSON, validates it and prints its faces.
//!
//! Run with `cargo run --example validate_polytope -- [FILE]`. Without an
//! argument the football with poles of order 3 and 5 is used.

use toric_orbifold::exact_lattice::{format_rational_vector, rational};
use toric_orbifold::polytope::{LabeledPolytope, RawHalfSpace};

const FOOTBALL: &str = r#"{
  "dim": 1,
  "halfspaces": [
    { "normal": [1], "offset": "0", "label": 3 },
    { "normal": [-1], "offset": "-1", "label": 5 }
  ]
}"#;

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable file"),
        None => FOOTBALL.to_string(),
    };
    let p = match LabeledPolytope::from_json(&text) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("rejected: {e}");
            std::process::exit(1);
        }
    };
    println!("dimension {}, labels {:?}, f-vector {:?}", p.dim(), p.labels(), p.f_vector());
    for v in p.vertices() {
        println!("vertex {} on facets {:?}", format_rational_vector(&v.point), v.active);
    }
    for f in p.face_lattice() {
        println!("face {f} has vertices {:?}", f.vertices);
    }

    // Things that are not labeled simple polytopes get rejected with a reason.
    let attempts = [
        (
            "quadrant",
            2,
            vec![RawHalfSpace::new(&[1, 0], rational(0, 1), 1), RawHalfSpace::new(&[0, 1], rational(0, 1), 1)],
        ),
        (
            "zero label",
            1,
            vec![RawHalfSpace::new(&[1], rational(0, 1), 0), RawHalfSpace::new(&[-1], rational(-1, 1), 1)],
        ),
        (
            "square pyramid",
            3,
            vec![
                RawHalfSpace::new(&[0, 0, 1], rational(0, 1), 1),
                RawHalfSpace::new(&[1, 0, -1], rational(-1, 1), 1),
                RawHalfSpace::new(&[-1, 0, -1], rational(-1, 1), 1),
                RawHalfSpace::new(&[0, 1, -1], rational(-1, 1), 1),
                RawHalfSpace::new(&[0, -1, -1], rational(-1, 1), 1),
            ],
        ),
    ];
    for (name, dim, raw) in attempts {
        match LabeledPolytope::new(dim, raw) {
            Ok(_) => println!("{name}: accepted"),
            Err(e) => println!("{name}: {e}"),
        }
    }
}
