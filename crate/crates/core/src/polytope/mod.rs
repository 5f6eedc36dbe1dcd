//! Labeled rational simple polytopes.
//!
//! A polytope is stored as an ordered list of half-spaces `⟨β, yᵢ⟩ ≥ ηᵢ`
//! with inward primitive normals `yᵢ`, rational offsets `ηᵢ` and a positive
//! integer label `mᵢ` per facet. Validation caches the vertex set and the
//! face lattice; the facet order of the input is kept as the canonical facet
//! indexing everywhere else in the crate.

mod json;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub use json::{HalfSpaceRecord, OffsetField, PolytopeFile};

use crate::error::{Error, Result};
use crate::exact_lattice::{
    clear_denominators, dot_int_rational, format_int_vector, format_rational_vector, gcd_of, integer_kernel,
    invert_rational, rational_rank, solve_rational, IntMatrix, Rational,
};

/// One validated facet inequality `⟨β, normal⟩ ≥ offset` with its label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfSpace {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    pub label: u64,
}

/// An unvalidated half-space as it arrives from a file or a caller. The
/// normal need not be primitive and the label is not yet checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawHalfSpace {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
    pub label: i64,
}

impl RawHalfSpace {
    pub fn new(normal: &[i64], offset: Rational, label: i64) -> Self {
        RawHalfSpace { normal: normal.iter().map(|&x| x.into()).collect(), offset, label }
    }
}

impl From<&HalfSpace> for RawHalfSpace {
    fn from(h: &HalfSpace) -> Self {
        RawHalfSpace {
            normal: h.normal.clone(),
            offset: h.offset.clone(),
            label: i64::try_from(h.label).expect("label fits in i64"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub point: Vec<Rational>,
    /// Indices of the facets through this vertex, ascending.
    pub active: Vec<usize>,
}

/// A nonempty face, identified by the facets containing it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    /// Facets containing the face, ascending. Empty for the whole polytope.
    pub active: Vec<usize>,
    /// Indices into [`LabeledPolytope::vertices`] of the vertices on the face.
    pub vertices: Vec<usize>,
}

impl Face {
    /// Codimension of the face (the polytope is simple).
    pub fn codim(&self) -> usize {
        self.active.len()
    }

    pub fn is_whole(&self) -> bool {
        self.active.is_empty()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.active.iter().join(","))
    }
}

/// Inward edge direction at a vertex: the edge obtained by leaving facet
/// `dropped` while staying on the other facets through the vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDirection {
    pub dropped: usize,
    pub direction: Vec<BigInt>,
}

/// Outcome of comparing two labeled polytopes up to translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isomorphism {
    /// `Q = P + translation`, facets matched by normal with equal labels.
    Translation(Vec<Rational>),
    NormalsDiffer,
    OffsetsDiffer,
    /// Same polytope up to translation but some matched facets carry different labels.
    LabelsDiffer {
        facet: usize,
    },
}

/// A validated labeled polytope: bounded, full-dimensional, simple, with
/// primitive normals and no redundant half-spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolytope {
    dim: usize,
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Vertex>,
    faces: Vec<Face>,
    warnings: Vec<String>,
}

/// Validates a raw half-space description.
pub fn validate(dim: usize, raw: Vec<RawHalfSpace>) -> Result<LabeledPolytope> {
    LabeledPolytope::new(dim, raw)
}

impl LabeledPolytope {
    pub fn new(dim: usize, raw: Vec<RawHalfSpace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Parse("dimension must be at least 1".into()));
        }
        let mut warnings = Vec::new();
        let mut halfspaces = Vec::with_capacity(raw.len());
        for (index, h) in raw.into_iter().enumerate() {
            if h.normal.len() != dim {
                return Err(Error::BadHalfSpace {
                    index,
                    reason: format!("normal has {} entries, expected {dim}", h.normal.len()),
                });
            }
            if h.label < 1 {
                return Err(Error::BadLabel(index));
            }
            let g = gcd_of(&h.normal);
            if g.is_zero() {
                return Err(Error::BadHalfSpace { index, reason: "zero normal".into() });
            }
            let (normal, offset) = if g.is_one() {
                (h.normal, h.offset)
            } else {
                warnings.push(format!(
                    "halfspace {index}: normal {} is not primitive, divided by {g}",
                    format_int_vector(&h.normal)
                ));
                let normal = h.normal.iter().map(|x| x / &g).collect();
                (normal, h.offset / Rational::from_integer(g))
            };
            halfspaces.push(HalfSpace { normal, offset, label: h.label as u64 });
        }

        check_bounded(dim, &halfspaces)?;
        check_duplicate_normals(&halfspaces)?;

        let vertices = enumerate_vertex_points(dim, &halfspaces);
        if vertices.is_empty() || affine_rank(&vertices.iter().map(|v| v.point.clone()).collect_vec()) < dim {
            return Err(Error::NotFullDimensional);
        }
        for i in 0..halfspaces.len() {
            let on_facet: Vec<Vec<Rational>> =
                vertices.iter().filter(|v| v.active.contains(&i)).map(|v| v.point.clone()).collect();
            if on_facet.is_empty() || affine_rank(&on_facet) < dim - 1 {
                return Err(Error::Redundant(i));
            }
        }
        if let Some(v) = vertices.iter().find(|v| v.active.len() != dim) {
            return Err(Error::NotSimple { vertex: format_rational_vector(&v.point), active: v.active.len() });
        }

        let faces = build_faces(&vertices);
        Ok(LabeledPolytope { dim, halfspaces, vertices, faces, warnings })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn halfspace(&self, i: usize) -> &HalfSpace {
        &self.halfspaces[i]
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn labels(&self) -> Vec<u64> {
        self.halfspaces.iter().map(|h| h.label).collect()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Warnings emitted while ingesting the description (re-primitivized normals).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The vertex coordinates, sorted lexicographically.
    pub fn enumerate_vertices(&self) -> Vec<Vec<Rational>> {
        self.vertices.iter().map(|v| v.point.clone()).collect()
    }

    /// Every nonempty face, ordered by codimension and then by active set.
    /// The first entry is the whole polytope.
    pub fn face_lattice(&self) -> &[Face] {
        &self.faces
    }

    pub fn proper_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| !f.is_whole())
    }

    pub fn face(&self, active: &[usize]) -> Option<&Face> {
        self.faces.iter().find(|f| f.active == active)
    }

    pub fn vertex_face(&self, v: usize) -> &Face {
        self.face(&self.vertices[v].active).expect("every vertex is a face")
    }

    pub fn facet_face(&self, i: usize) -> &Face {
        self.face(&[i]).expect("every halfspace defines a facet")
    }

    pub fn vertex_index(&self, point: &[Rational]) -> Option<usize> {
        self.vertices.iter().position(|v| v.point == point)
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for face in &self.faces {
            f[self.dim - face.codim()] += 1;
        }
        f
    }

    /// Inward primitive edge directions at vertex `v`, one per facet through it.
    pub fn edge_directions(&self, v: usize) -> Vec<EdgeDirection> {
        let active = &self.vertices[v].active;
        let rows: Vec<Vec<Rational>> = active
            .iter()
            .map(|&i| self.halfspaces[i].normal.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let inv = invert_rational(&rows).expect("active normals at a simple vertex are independent");
        active
            .iter()
            .enumerate()
            .map(|(j, &dropped)| {
                let column: Vec<Rational> = inv.iter().map(|r| r[j].clone()).collect();
                EdgeDirection { dropped, direction: clear_denominators(&column) }
            })
            .collect()
    }

    /// Slack `⟨β, yᵢ⟩ − ηᵢ` of a point against facet `i`.
    pub fn slack(&self, i: usize, point: &[Rational]) -> Rational {
        let h = &self.halfspaces[i];
        dot_int_rational(&h.normal, point) - &h.offset
    }

    /// Ok if `point ∈ Δ`, otherwise the first violated facet.
    pub fn contains(&self, point: &[Rational]) -> Result<()> {
        if point.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: point.len() });
        }
        match (0..self.facet_count()).find(|&i| self.slack(i, point).is_negative()) {
            Some(facet) => Err(Error::NotInPolytope { point: format_rational_vector(point), facet }),
            None => Ok(()),
        }
    }

    /// Barycenter of the vertices of a face; lies in its relative interior.
    pub fn barycenter(&self, face: &Face) -> Vec<Rational> {
        let k = Rational::from_integer(BigInt::from(face.vertices.len()));
        (0..self.dim)
            .map(|c| face.vertices.iter().map(|&v| &self.vertices[v].point[c]).sum::<Rational>() / &k)
            .collect()
    }

    /// A random interior point: a convex combination of all vertices with
    /// positive integer weights.
    pub fn random_interior_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Rational> {
        let weights: Vec<BigInt> = self.vertices.iter().map(|_| BigInt::from(rng.gen_range(1..=32))).collect();
        let total = Rational::from_integer(weights.iter().sum());
        (0..self.dim)
            .map(|c| {
                self.vertices
                    .iter()
                    .zip(&weights)
                    .map(|(v, w)| &v.point[c] * Rational::from_integer(w.clone()))
                    .sum::<Rational>()
                    / &total
            })
            .collect()
    }

    pub fn translate(&self, c: &[Rational]) -> LabeledPolytope {
        assert_eq!(c.len(), self.dim);
        let raw = self
            .halfspaces
            .iter()
            .map(|h| RawHalfSpace {
                normal: h.normal.clone(),
                offset: &h.offset + dot_int_rational(&h.normal, c),
                label: h.label as i64,
            })
            .collect();
        LabeledPolytope::new(self.dim, raw).expect("translation preserves validity")
    }

    /// Dilation by a positive factor.
    pub fn scale(&self, factor: &Rational) -> LabeledPolytope {
        assert!(factor.is_positive(), "scale factor must be positive");
        let raw = self
            .halfspaces
            .iter()
            .map(|h| RawHalfSpace { normal: h.normal.clone(), offset: &h.offset * factor, label: h.label as i64 })
            .collect();
        LabeledPolytope::new(self.dim, raw).expect("dilation preserves validity")
    }

    pub fn with_labels(&self, labels: &[i64]) -> Result<LabeledPolytope> {
        if labels.len() != self.facet_count() {
            return Err(Error::DimensionMismatch { expected: self.facet_count(), found: labels.len() });
        }
        let raw = self
            .halfspaces
            .iter()
            .zip(labels)
            .map(|(h, &label)| RawHalfSpace { normal: h.normal.clone(), offset: h.offset.clone(), label })
            .collect();
        LabeledPolytope::new(self.dim, raw)
    }

    /// Same polytope with facets listed in the order `order[0], order[1], …`.
    pub fn reorder_facets(&self, order: &[usize]) -> LabeledPolytope {
        assert_eq!(order.iter().copied().sorted().collect_vec(), (0..self.facet_count()).collect_vec());
        let raw = order.iter().map(|&i| RawHalfSpace::from(&self.halfspaces[i])).collect();
        LabeledPolytope::new(self.dim, raw).expect("reordering preserves validity")
    }

    /// Cartesian product `P × Q`; facets of `P` come first.
    pub fn product(&self, other: &LabeledPolytope) -> LabeledPolytope {
        let dim = self.dim + other.dim;
        let pad = |h: &HalfSpace, before: usize| {
            let mut normal = vec![BigInt::zero(); dim];
            normal[before..before + h.normal.len()].clone_from_slice(&h.normal);
            RawHalfSpace { normal, offset: h.offset.clone(), label: h.label as i64 }
        };
        let raw = self
            .halfspaces
            .iter()
            .map(|h| pad(h, 0))
            .chain(other.halfspaces.iter().map(|h| pad(h, self.dim)))
            .collect();
        LabeledPolytope::new(dim, raw).expect("products of simple polytopes are simple")
    }
}

/// Compares two labeled polytopes up to translation, reporting why they
/// differ when they are not isomorphic.
pub fn compare(p: &LabeledPolytope, q: &LabeledPolytope) -> Result<Isomorphism> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch { expected: p.dim, found: q.dim });
    }
    if p.facet_count() != q.facet_count() {
        return Ok(Isomorphism::NormalsDiffer);
    }
    let by_normal: HashMap<&[BigInt], usize> =
        q.halfspaces.iter().enumerate().map(|(i, h)| (h.normal.as_slice(), i)).collect();
    let Some(matching) =
        p.halfspaces.iter().map(|h| by_normal.get(h.normal.as_slice()).copied()).collect::<Option<Vec<usize>>>()
    else {
        return Ok(Isomorphism::NormalsDiffer);
    };

    // facets through a vertex give n independent offset equations
    let basis = &p.vertices[0].active;
    let rows: Vec<Vec<Rational>> = basis
        .iter()
        .map(|&i| p.halfspaces[i].normal.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let rhs: Vec<Rational> =
        basis.iter().map(|&i| &q.halfspaces[matching[i]].offset - &p.halfspaces[i].offset).collect();
    let c = solve_rational(&rows, &rhs).expect("square nonsingular system");

    for (i, h) in p.halfspaces.iter().enumerate() {
        if q.halfspaces[matching[i]].offset != &h.offset + dot_int_rational(&h.normal, &c) {
            return Ok(Isomorphism::OffsetsDiffer);
        }
    }
    if let Some(facet) = (0..p.facet_count()).find(|&i| p.halfspaces[i].label != q.halfspaces[matching[i]].label) {
        return Ok(Isomorphism::LabelsDiffer { facet });
    }
    Ok(Isomorphism::Translation(c))
}

/// The translation `c` with `Q = P + c` and matching labels, if any.
pub fn is_isomorphic(p: &LabeledPolytope, q: &LabeledPolytope) -> Result<Option<Vec<Rational>>> {
    Ok(match compare(p, q)? {
        Isomorphism::Translation(c) => Some(c),
        _ => None,
    })
}

fn normal_rows(halfspaces: &[HalfSpace], idx: &[usize]) -> IntMatrix {
    let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| halfspaces[i].normal.clone()).collect();
    IntMatrix::from_big_rows(idx.len(), halfspaces[0].normal.len(), rows)
}

/// The recession cone `{d : ⟨d, yᵢ⟩ ≥ 0 ∀i}` must be `{0}`. It is nonzero
/// exactly when it contains a line (normals do not span) or has an extreme
/// ray, and every extreme ray is cut out by `dim − 1` independent normals.
fn check_bounded(dim: usize, halfspaces: &[HalfSpace]) -> Result<()> {
    let all: Vec<usize> = (0..halfspaces.len()).collect();
    let unbounded = |d: &[BigInt]| Error::Unbounded { direction: format_int_vector(d) };
    if halfspaces.len() < dim || normal_rows(halfspaces, &all).rank() < dim {
        let k = if halfspaces.is_empty() {
            IntMatrix::identity(dim)
        } else {
            integer_kernel(&normal_rows(halfspaces, &all))
        };
        return Err(unbounded(k.row(0)));
    }
    for subset in (0..halfspaces.len()).combinations(dim - 1) {
        let sub = normal_rows(halfspaces, &subset);
        let kernel = integer_kernel(&IntMatrix::from_big_rows(subset.len(), dim, sub.row_vecs()));
        if kernel.rows() != 1 {
            continue;
        }
        let d = kernel.row(0).to_vec();
        for sign in [1, -1] {
            let d: Vec<BigInt> = d.iter().map(|x| x * sign).collect();
            let feasible = halfspaces.iter().all(|h| !crate::exact_lattice::dot(&h.normal, &d).is_negative());
            if feasible {
                return Err(unbounded(&d));
            }
        }
    }
    Ok(())
}

fn check_duplicate_normals(halfspaces: &[HalfSpace]) -> Result<()> {
    let mut seen: HashMap<&[BigInt], usize> = HashMap::new();
    for (i, h) in halfspaces.iter().enumerate() {
        if let Some(&j) = seen.get(h.normal.as_slice()) {
            // the looser of the two parallel constraints is redundant
            let redundant = if halfspaces[j].offset < h.offset { j } else { i };
            return Err(Error::Redundant(redundant));
        }
        seen.insert(&h.normal, i);
    }
    Ok(())
}

/// Solves every `dim`-subset of constraints with independent normals and
/// keeps the feasible solutions, each with its full active set.
fn enumerate_vertex_points(dim: usize, halfspaces: &[HalfSpace]) -> Vec<Vertex> {
    let mut points: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for subset in (0..halfspaces.len()).combinations(dim) {
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| halfspaces[i].normal.iter().map(|x| Rational::from_integer(x.clone())).collect())
            .collect();
        let Some(inv) = invert_rational(&rows) else { continue };
        let point: Vec<Rational> = (0..dim)
            .map(|r| subset.iter().enumerate().map(|(c, &i)| &inv[r][c] * &halfspaces[i].offset).sum())
            .collect();
        if halfspaces.iter().all(|h| dot_int_rational(&h.normal, &point) >= h.offset) {
            points.insert(point);
        }
    }
    points
        .into_iter()
        .map(|point| {
            let active = (0..halfspaces.len())
                .filter(|&i| dot_int_rational(&halfspaces[i].normal, &point) == halfspaces[i].offset)
                .collect();
            Vertex { point, active }
        })
        .collect()
}

fn affine_rank(points: &[Vec<Rational>]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let diffs: Vec<Vec<Rational>> =
        points[1..].iter().map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    rational_rank(&diffs)
}

fn build_faces(vertices: &[Vertex]) -> Vec<Face> {
    let mut faces: BTreeMap<(usize, Vec<usize>), BTreeSet<usize>> = BTreeMap::new();
    for (v, vertex) in vertices.iter().enumerate() {
        for subset in vertex.active.iter().copied().powerset() {
            faces.entry((subset.len(), subset)).or_default().insert(v);
        }
    }
    faces.into_iter().map(|((_, active), vs)| Face { active, vertices: vs.into_iter().collect() }).collect()
}
