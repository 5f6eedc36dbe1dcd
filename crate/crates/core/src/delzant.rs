//! Realizing a labeled polytope as a symplectic reduction of `ℂᴺ`.
//!
//! With `N` facets, the projection `ϖ : ℝᴺ → 𝔱` sends `eᵢ ↦ mᵢ yᵢ`. Its
//! kernel `𝔨` is the Lie algebra of the subgroup `K ⊂ 𝕋ᴺ` that is reduced
//! away, and the polytope embeds into `(ℝᴺ)*` by the slack map
//!
//! ```text
//! s(β)ᵢ = ⟨β, mᵢ yᵢ⟩ − mᵢ ηᵢ ≥ 0,
//! ```
//!
//! whose image is the moment image `(|z₁|², …, |z_N|²)` of the level set.
//! Points of the level set are represented by these squared moduli only.
//! The `K`-moment map `j*` reads coordinates against the kernel basis, and
//! `j*(s(β))` is the constant level `κ`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_lattice::{
    format_rational_vector, integer_kernel, smith_normal_form, FiniteAbelianGroup, IntMatrix, Rational,
};
use crate::polytope::{Face, LabeledPolytope};

/// The exact sequence data of the reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelzantData {
    /// `n × N`, column `i` is `mᵢ yᵢ`.
    pub projection: IntMatrix,
    /// `cᵢ = mᵢ ηᵢ`.
    pub scaled_offsets: Vec<Rational>,
    /// `(N − n) × N` HNF basis of `ker ϖ ∩ ℤᴺ`.
    pub kernel_basis: IntMatrix,
    /// `κ = j*(s(β))`, independent of `β`.
    pub level: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelGroupInfo {
    pub torus_dim: usize,
    /// `π₀(K) ≅ ℤⁿ / ϖ(ℤᴺ)`.
    pub component_group: FiniteAbelianGroup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub regular: bool,
    pub max_stabilizer_order: BigInt,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub passed: bool,
    pub samples_checked: usize,
    /// Distinct vertices of the polytope that appeared among the samples.
    pub vertices_attained: usize,
    pub counterexample: Option<String>,
}

impl DelzantData {
    pub fn facet_count(&self) -> usize {
        self.projection.cols()
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The `K`-moment map on squared moduli: coordinates against the kernel basis.
    pub fn k_moment(&self, s: &[Rational]) -> Vec<Rational> {
        self.kernel_basis.mul_rational_vec(s)
    }

    /// Slack vector of a point, without the membership check.
    pub fn slack_vector(&self, beta: &[Rational]) -> Vec<Rational> {
        // ϖ*(β) − c
        self.projection
            .transpose()
            .mul_rational_vec(beta)
            .into_iter()
            .zip(&self.scaled_offsets)
            .map(|(a, c)| a - c)
            .collect()
    }

    /// `K ϖᵀ = 0` and `−K c = κ`: the level identity as an exact statement
    /// about the data rather than about samples.
    pub fn level_identity_holds(&self) -> bool {
        let kernel_ok = (&self.kernel_basis * &self.projection.transpose()).is_zero();
        let minus_kc: Vec<Rational> =
            self.kernel_basis.mul_rational_vec(&self.scaled_offsets).into_iter().map(|x| -x).collect();
        kernel_ok && minus_kc == self.level
    }
}

pub fn build_construction(p: &LabeledPolytope) -> DelzantData {
    let n = p.dim();
    let columns: Vec<Vec<BigInt>> =
        p.halfspaces().iter().map(|h| h.normal.iter().map(|x| x * h.label).collect()).collect();
    let projection = IntMatrix::from_columns(n, &columns);
    let scaled_offsets: Vec<Rational> =
        p.halfspaces().iter().map(|h| &h.offset * Rational::from_integer(h.label.into())).collect();
    let kernel_basis = integer_kernel(&projection);
    let mut data = DelzantData { projection, scaled_offsets, kernel_basis, level: Vec::new() };
    let interior = p.barycenter(&p.face_lattice()[0]);
    data.level = data.k_moment(&data.slack_vector(&interior));
    debug_assert!(data.level_identity_holds());
    data
}

pub fn kernel_group(d: &DelzantData) -> KernelGroupInfo {
    let snf = smith_normal_form(&d.projection);
    assert_eq!(snf.rank(), d.dim(), "projection has full row rank");
    KernelGroupInfo {
        torus_dim: d.facet_count() - d.dim(),
        component_group: FiniteAbelianGroup::from_diagonal(snf.diagonal()),
    }
}

/// Stabilizer `K_z` of a level-set point over the relative interior of the
/// face cut out by the facets in `active`.
///
/// `K_z = {[α] : αᵢ ∈ ℤ for i ∉ S, ϖ(α) ∈ ℤⁿ} ≅ ϖ_S⁻¹(ℤⁿ) / ℤ^S`. With
/// `U ϖ_S V = diag(d₁, …, d_k)`, the preimage lattice is `V · diag(1/dᵢ) ℤᵏ`,
/// so the quotient is `⊕ ℤ/dᵢ`.
pub fn stabilizer_of_active_set(d: &DelzantData, active: &[usize]) -> Result<FiniteAbelianGroup> {
    if let Some(&bad) = active.iter().find(|&&i| i >= d.facet_count()) {
        return Err(Error::InvalidFace(format!("facet index {bad} out of range")));
    }
    if active.is_empty() {
        return Ok(FiniteAbelianGroup::trivial());
    }
    let columns = d.projection.select_columns(active);
    let snf = smith_normal_form(&columns);
    if snf.rank() != active.len() {
        return Err(Error::InvalidFace(format!(
            "facets {active:?} have dependent normals; they do not meet in a face"
        )));
    }
    Ok(FiniteAbelianGroup::from_diagonal(snf.diagonal()))
}

pub fn face_stabilizer(d: &DelzantData, face: &Face) -> Result<FiniteAbelianGroup> {
    if face.vertices.is_empty() {
        return Err(Error::InvalidFace(format!("{face} is empty")));
    }
    stabilizer_of_active_set(d, &face.active)
}

pub fn verify_regular_level(d: &DelzantData, p: &LabeledPolytope) -> RegularityReport {
    let mut max = BigInt::from(1);
    for (v, vertex) in p.vertices().iter().enumerate() {
        if d.projection.select_columns(&vertex.active).rank() != vertex.active.len() {
            return RegularityReport {
                regular: false,
                max_stabilizer_order: max,
                failure: Some(format!("normals at vertex {v} are dependent")),
            };
        }
    }
    for face in p.proper_faces() {
        match face_stabilizer(d, face) {
            Ok(g) => max = max.max(g.order()),
            Err(e) => {
                return RegularityReport {
                    regular: false,
                    max_stabilizer_order: max,
                    failure: Some(format!("face {face}: {e}")),
                }
            }
        }
    }
    RegularityReport { regular: true, max_stabilizer_order: max, failure: None }
}

/// Squared moduli `(|z₁|², …, |z_N|²)` of a level-set point over `β`.
pub fn sample_point(d: &DelzantData, p: &LabeledPolytope, beta: &[Rational]) -> Result<Vec<Rational>> {
    p.contains(beta)?;
    Ok(d.slack_vector(beta))
}

pub fn verify_reduction_invariants(
    d: &DelzantData,
    p: &LabeledPolytope,
    samples: &[Vec<Rational>],
) -> Result<ReductionReport> {
    let mut attained = vec![false; p.vertices().len()];
    let fail = |msg: String, checked: usize, attained: &[bool]| ReductionReport {
        passed: false,
        samples_checked: checked,
        vertices_attained: attained.iter().filter(|&&a| a).count(),
        counterexample: Some(msg),
    };
    for (k, beta) in samples.iter().enumerate() {
        let s = sample_point(d, p, beta)?;
        let at = format_rational_vector(beta);
        if d.k_moment(&s) != d.level {
            return Ok(fail(
                format!(
                    "sample {k} at {at}: K-moment {} differs from the level",
                    format_rational_vector(&d.k_moment(&s))
                ),
                k,
                &attained,
            ));
        }
        if let Some(i) = s.iter().position(|x| x.is_negative()) {
            return Ok(fail(format!("sample {k} at {at}: negative squared modulus in slot {i}"), k, &attained));
        }
        if let Some(v) = p.vertex_index(beta) {
            let active = &p.vertices()[v].active;
            let support_ok = s.iter().enumerate().all(|(i, x)| x.is_zero() == active.contains(&i));
            if !support_ok {
                return Ok(fail(
                    format!("sample {k} at vertex {v}: zero pattern differs from active facets"),
                    k,
                    &attained,
                ));
            }
            attained[v] = true;
        }
    }
    Ok(ReductionReport {
        passed: true,
        samples_checked: samples.len(),
        vertices_attained: attained.iter().filter(|&&a| a).count(),
        counterexample: None,
    })
}
