//! Local invariants attached to the faces of a labeled polytope.
//!
//! Near a point over the relative interior of a face `F`, the orbifold looks
//! like a product of a free part and a slice representation of the isotropy
//! torus. For the facets `Fᵢ` containing `F`, with primitive normals `gᵢ` and
//! labels `mᵢ`, the vectors `eᵢ = mᵢ gᵢ` span a sublattice `ℓ̂` of the
//! saturated isotropy lattice `ℓ ∩ 𝔥`, and the orbifold structure group is
//! the finite quotient `(ℓ ∩ 𝔥) / ℓ̂`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_lattice::{
    coordinates_in_basis, invert_rational, quotient_group, saturate, FiniteAbelianGroup, IntMatrix, Rational,
};
use crate::polytope::{Face, LabeledPolytope};

/// Isotropy lattice data of a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropyData {
    pub face: Face,
    /// Primitive normals `g` of the facets containing the face, in facet order.
    pub normals: Vec<Vec<BigInt>>,
    /// Label-scaled normals `e = m·g`.
    pub scaled: Vec<Vec<BigInt>>,
    /// Row basis of `ℤⁿ ∩ span{g}`.
    pub isotropy_lattice: IntMatrix,
}

impl IsotropyData {
    pub fn scaled_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(self.scaled.len(), self.isotropy_lattice.cols(), self.scaled.clone())
    }
}

/// Weights of the slice representation at a vertex: the basis of `𝔱*` dual
/// to the scaled normals there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceWeights {
    /// Facets through the vertex; `weights[k]` is dual to facet `facets[k]`.
    pub facets: Vec<usize>,
    pub weights: Vec<Vec<Rational>>,
}

/// The local moment image `apex + (span directions) + cone(generators)`
/// around the relative interior of a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCone {
    pub apex: Vec<Rational>,
    /// Edge directions along the face (a basis of its tangent space).
    pub span_directions: Vec<Vec<BigInt>>,
    /// Primitive edge directions leaving the face; they generate the
    /// transverse simplicial cone. For a vertex these are all edges.
    pub generators: Vec<Vec<BigInt>>,
}

fn check_face(p: &LabeledPolytope, face: &Face) -> Result<()> {
    match p.face(&face.active) {
        Some(f) if f == face => Ok(()),
        _ => Err(Error::InvalidFace(format!("{face} is not a face of this polytope"))),
    }
}

pub fn isotropy_data(p: &LabeledPolytope, face: &Face) -> Result<IsotropyData> {
    check_face(p, face)?;
    let n = p.dim();
    let normals: Vec<Vec<BigInt>> = face.active.iter().map(|&i| p.halfspace(i).normal.clone()).collect();
    let scaled: Vec<Vec<BigInt>> = face
        .active
        .iter()
        .map(|&i| {
            let h = p.halfspace(i);
            h.normal.iter().map(|x| x * h.label).collect()
        })
        .collect();
    let span = IntMatrix::from_big_rows(normals.len(), n, normals.clone());
    let isotropy_lattice = saturate(&span)?;
    Ok(IsotropyData { face: face.clone(), normals, scaled, isotropy_lattice })
}

/// Orbifold structure group `(ℓ ∩ 𝔥) / ℓ̂` over the relative interior of a face.
pub fn structure_group(p: &LabeledPolytope, face: &Face) -> Result<FiniteAbelianGroup> {
    let data = isotropy_data(p, face)?;
    if face.is_whole() {
        return Ok(FiniteAbelianGroup::trivial());
    }
    quotient_group(&data.isotropy_lattice, &data.scaled_matrix())
}

/// The scaled normals written in the isotropy-lattice basis; its |det| is
/// the order of the structure group.
pub fn structure_matrix(p: &LabeledPolytope, face: &Face) -> Result<IntMatrix> {
    let data = isotropy_data(p, face)?;
    coordinates_in_basis(&data.isotropy_lattice, &data.scaled_matrix())
}

pub fn local_cone(p: &LabeledPolytope, face: &Face) -> Result<LocalCone> {
    check_face(p, face)?;
    let apex = p.barycenter(face);
    let v = face.vertices[0];
    let (mut span_directions, mut generators) = (Vec::new(), Vec::new());
    for edge in p.edge_directions(v) {
        if face.active.contains(&edge.dropped) {
            generators.push(edge.direction);
        } else {
            span_directions.push(edge.direction);
        }
    }
    Ok(LocalCone { apex, span_directions, generators })
}

/// Slice-representation weights at vertex `v`: `⟨f_F, e_F'⟩ = δ_FF'`.
pub fn slice_weights(p: &LabeledPolytope, v: usize) -> SliceWeights {
    let face = p.vertex_face(v);
    let data = isotropy_data(p, face).expect("vertex faces are valid");
    let rows: Vec<Vec<Rational>> =
        data.scaled.iter().map(|e| e.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let inv = invert_rational(&rows).expect("scaled normals at a simple vertex are independent");
    // E · E⁻¹ = I, so the columns of E⁻¹ form the dual basis
    let weights = (0..rows.len()).map(|k| inv.iter().map(|r| r[k].clone()).collect()).collect();
    SliceWeights { facets: face.active.clone(), weights }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exact_lattice::{int_vec, rational};

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rational(x, 1)).collect()
    }

    #[test]
    fn isotropy_examples() {
        let t1 = corpus::unit_simplex(2);
        let d = isotropy_data(&t1, t1.facet_face(0)).unwrap();
        assert_eq!(d.normals, vec![int_vec(&[1, 0])]);
        assert_eq!(d.scaled, vec![int_vec(&[1, 0])]);
        assert_eq!(d.isotropy_lattice, IntMatrix::from_rows([[1, 0]]));

        let w2 = corpus::w2();
        let v = w2.vertex_index(&pt(&[0, 1])).unwrap();
        let d = isotropy_data(&w2, w2.vertex_face(v)).unwrap();
        assert_eq!(d.normals, vec![int_vec(&[1, 0]), int_vec(&[-1, -2])]);

        let football = corpus::football(3, 5);
        let d = isotropy_data(&football, football.facet_face(0)).unwrap();
        assert_eq!(d.scaled, vec![int_vec(&[3])]);
    }

    #[test]
    fn whole_polytope_has_trivial_isotropy() {
        let t1 = corpus::unit_simplex(2);
        let d = isotropy_data(&t1, &t1.face_lattice()[0]).unwrap();
        assert!(d.normals.is_empty());
        assert_eq!(d.isotropy_lattice.rows(), 0);
        assert!(structure_group(&t1, &t1.face_lattice()[0]).unwrap().is_trivial());
    }

    #[test]
    fn structure_group_examples() {
        let football = corpus::football(3, 5);
        assert_eq!(structure_group(&football, football.facet_face(0)).unwrap(), FiniteAbelianGroup::cyclic(3));
        assert_eq!(structure_group(&football, football.facet_face(1)).unwrap(), FiniteAbelianGroup::cyclic(5));

        let w2 = corpus::w2();
        let v = w2.vertex_index(&pt(&[0, 1])).unwrap();
        assert_eq!(structure_group(&w2, w2.vertex_face(v)).unwrap(), FiniteAbelianGroup::cyclic(2));

        let t1 = corpus::unit_simplex(2);
        for face in t1.face_lattice() {
            assert!(structure_group(&t1, face).unwrap().is_trivial());
        }
    }

    #[test]
    fn foreign_face_is_rejected() {
        let t1 = corpus::unit_simplex(2);
        let bogus = Face { active: vec![0, 1], vertices: vec![2] };
        assert!(matches!(structure_group(&t1, &bogus), Err(Error::InvalidFace(_))));
    }

    #[test]
    fn local_cone_examples() {
        let t1 = corpus::unit_simplex(2);
        let at = |v: &[i64]| {
            let i = t1.vertex_index(&pt(v)).unwrap();
            local_cone(&t1, t1.vertex_face(i)).unwrap()
        };
        let c = at(&[0, 0]);
        assert_eq!(c.generators, vec![int_vec(&[1, 0]), int_vec(&[0, 1])]);
        assert!(c.span_directions.is_empty());
        let c = at(&[0, 1]);
        let mut g = c.generators.clone();
        g.sort();
        assert_eq!(g, vec![int_vec(&[0, -1]), int_vec(&[1, -1])]);
        assert_eq!(c.apex, pt(&[0, 1]));

        let interval = corpus::football(1, 1);
        let c = local_cone(&interval, interval.facet_face(0)).unwrap();
        assert_eq!(c.generators, vec![int_vec(&[1])]);

        let facet = local_cone(&t1, t1.facet_face(2)).unwrap();
        assert_eq!(facet.apex, vec![rational(1, 2), rational(1, 2)]);
        assert_eq!(facet.span_directions.len(), 1);
        assert_eq!(facet.generators.len(), 1);
    }

    #[test]
    fn slice_weight_examples() {
        let t1 = corpus::unit_simplex(2);
        let v = t1.vertex_index(&pt(&[0, 0])).unwrap();
        assert_eq!(slice_weights(&t1, v).weights, vec![pt(&[1, 0]), pt(&[0, 1])]);

        let football = corpus::football(3, 5);
        let v = football.vertex_index(&pt(&[0])).unwrap();
        assert_eq!(slice_weights(&football, v).weights, vec![vec![rational(1, 3)]]);

        let w2 = corpus::w2();
        let v = w2.vertex_index(&pt(&[0, 1])).unwrap();
        let w = slice_weights(&w2, v);
        assert_eq!(w.facets, vec![0, 2]);
        assert_eq!(w.weights, vec![vec![rational(1, 1), rational(-1, 2)], vec![rational(0, 1), rational(-1, 2)]]);
    }
}
