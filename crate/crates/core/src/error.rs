use thiserror::Error;

/// Errors raised by the lattice algebra, polytope validation and the
/// constructions built on top of them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("rows are linearly dependent")]
    DependentRows,
    #[error("not a sublattice: row {row} of the sublattice basis lies outside the lattice")]
    NotSublattice { row: usize },
    #[error("rank mismatch: lattice has rank {lattice}, sublattice has rank {sublattice}")]
    RankMismatch { lattice: usize, sublattice: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid rational {0:?}")]
    ParseRational(String),
    #[error("malformed polytope description: {0}")]
    Parse(String),

    #[error("unbounded: recession direction {direction}")]
    Unbounded { direction: String },
    #[error("not full-dimensional")]
    NotFullDimensional,
    #[error("not simple at vertex {vertex}: {active} facets meet there")]
    NotSimple { vertex: String, active: usize },
    #[error("redundant halfspace {0}")]
    Redundant(usize),
    #[error("label < 1 on halfspace {0}")]
    BadLabel(usize),
    #[error("halfspace {index}: {reason}")]
    BadHalfSpace { index: usize, reason: String },

    #[error("point {point} is not in the polytope: violates facet {facet}")]
    NotInPolytope { point: String, facet: usize },
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("direction {xi} is not generic: orthogonal to the edge at vertex {vertex} leaving facet {facet}")]
    NotGeneric { xi: String, vertex: usize, facet: usize },
}

impl Error {
    /// True for errors that reject a polytope description (as opposed to
    /// misuse of an operation on an already valid polytope).
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Unbounded { .. }
                | Error::NotFullDimensional
                | Error::NotSimple { .. }
                | Error::Redundant(_)
                | Error::BadLabel(_)
                | Error::BadHalfSpace { .. }
                | Error::DimensionMismatch { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
