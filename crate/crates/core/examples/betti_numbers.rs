//! Betti numbers from the indices of a generic moment-map component.
//!
//! Run with `cargo run --example betti_numbers`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_orbifold::corpus;
use toric_orbifold::exact_lattice::format_int_vector;
use toric_orbifold::morse::{h_vector, morse_inequality_check, morse_report, random_generic_xi};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, p) in corpus::named() {
        let xi = random_generic_xi(&p, &mut rng);
        let report = morse_report(&p, &xi).unwrap();
        println!(
            "{name:<22} xi {:<14} betti {:?}  h-vector {:?}  check {:?}",
            format_int_vector(&xi),
            report.morse_poly,
            h_vector(&p),
            morse_inequality_check(&report.morse_poly, &report.poincare)
        );
    }
}
