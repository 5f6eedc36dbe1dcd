//! Fans of labeled polytopes.
//!
//! The dual cone of a face `F` is `{α : ⟨α, β − β'⟩ ≤ 0 ∀β ∈ F, β' ∈ Δ}`.
//! With inward normals this is the nonnegative span of the normals of the
//! facets containing `F`; the cones are simplicial because the polytope is
//! simple, so a sorted list of primitive generators is a canonical form.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exact_lattice::{dot_int_rational, IntMatrix};
use crate::polytope::{Face, LabeledPolytope};

/// A simplicial rational cone given by its sorted primitive ray generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    generators: Vec<Vec<BigInt>>,
}

impl Cone {
    /// Canonicalizes the generators; they must be primitive and independent.
    pub fn new(mut generators: Vec<Vec<BigInt>>) -> Self {
        generators.sort();
        generators.dedup();
        Cone { generators }
    }

    pub fn zero() -> Self {
        Cone { generators: Vec::new() }
    }

    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Inclusion of simplicial cones from the same fan: every ray of `self`
    /// is a ray of `other`.
    pub fn is_face_of(&self, other: &Cone) -> bool {
        self.generators.iter().all(|g| other.generators.contains(g))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    cones: BTreeSet<Cone>,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter()
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn contains(&self, cone: &Cone) -> bool {
        self.cones.contains(cone)
    }

    /// Generators of the one-dimensional cones, sorted.
    pub fn rays(&self) -> Vec<Vec<BigInt>> {
        self.cones.iter().filter(|c| c.dim() == 1).map(|c| c.generators[0].clone()).collect()
    }

    /// Cones as integer ray lists, canonical order.
    pub fn to_ray_lists(&self) -> Vec<Vec<Vec<BigInt>>> {
        self.cones.iter().map(|c| c.generators.clone()).collect()
    }
}

pub fn dual_cone(p: &LabeledPolytope, face: &Face) -> Cone {
    let cone = Cone::new(face.active.iter().map(|&i| p.halfspace(i).normal.clone()).collect());
    debug_assert!(satisfies_dual_cone_definition(p, face, &cone));
    cone
}

/// Checks `⟨α, β − β'⟩ ≤ 0` for every generator `α`, every vertex `β` of the
/// face and every vertex `β'` of the polytope, and that the generators are
/// independent. Vertices suffice by convexity.
pub fn satisfies_dual_cone_definition(p: &LabeledPolytope, face: &Face, cone: &Cone) -> bool {
    let independent = cone.generators.is_empty()
        || IntMatrix::from_big_rows(cone.dim(), p.dim(), cone.generators.clone()).rank() == cone.dim();
    independent
        && cone.generators.iter().all(|alpha| {
            face.vertices.iter().all(|&b| {
                let inner = dot_int_rational(alpha, &p.vertices()[b].point);
                p.vertices().iter().all(|other| !(&inner - dot_int_rational(alpha, &other.point)).is_positive())
            })
        })
}

/// One dual cone per face; labels play no role.
pub fn build_fan(p: &LabeledPolytope) -> Fan {
    Fan { dim: p.dim(), cones: p.face_lattice().iter().map(|f| dual_cone(p, f)).collect() }
}

pub fn fans_equal(a: &Fan, b: &Fan) -> Result<bool> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch { expected: a.dim, found: b.dim });
    }
    Ok(a.cones == b.cones)
}
