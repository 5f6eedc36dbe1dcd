//! Exact computations for compact symplectic toric orbifolds.
//!
//! A compact symplectic toric orbifold is determined up to equivariant
//! symplectomorphism by its labeled moment polytope: a rational simple
//! polytope with a positive integer attached to every facet. This crate
//! works with those polytopes in exact arithmetic:
//!
//! - [`polytope`]: validation, vertices, faces, edges and the
//!   translation-isomorphism test that decides symplectomorphism;
//! - [`local_model`]: isotropy lattices, orbifold structure groups, local
//!   cones and slice weights of every face;
//! - [`fan`]: dual cones and fans, whose equality decides equivariant
//!   biholomorphism;
//! - [`delzant`]: the reduction of `ℂᴺ` by a subgroup `K` of `𝕋ᴺ` that
//!   realizes the polytope, with stabilizers computed independently of
//!   [`local_model`];
//! - [`morse`]: Morse indices and Betti numbers;
//! - [`exact_lattice`]: the integer linear algebra underneath;
//! - [`corpus`]: named and random test polytopes;
//! - [`cli`]: the `toric` command and its JSON reports.
//!
//! ```
//! use toric_orbifold::{local_model, polytope::LabeledPolytope};
//!
//! let football = LabeledPolytope::from_json(
//!     r#"{"dim": 1, "halfspaces": [
//!         {"normal": [1], "offset": "0", "label": 3},
//!         {"normal": [-1], "offset": "-1", "label": 5}]}"#,
//! ).unwrap();
//! let pole = local_model::structure_group(&football, football.facet_face(0)).unwrap();
//! assert_eq!(pole.to_string(), "Z/3");
//! ```

pub mod cli;
pub mod corpus;
pub mod delzant;
pub mod error;
pub mod exact_lattice;
pub mod fan;
pub mod local_model;
pub mod morse;
pub mod polytope;

pub use error::{Error, Result};
