use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{solve_rational, IntMatrix};
use super::normal_form::smith_normal_form;
use crate::error::{Error, Result};

/// A finite abelian group `ℤ/f₁ ⊕ ℤ/f₂ ⊕ …` given by its invariant factors
/// `f₁ | f₂ | …`, all at least 2. The empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { invariant_factors: Vec::new() }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_diagonal([order.into()])
    }

    /// Builds the group `⊕ ℤ/dᵢ` from the nonzero diagonal of a Smith form.
    /// Units are dropped; the entries must already form a divisibility chain.
    ///
    /// Panics on a zero entry (the quotient would be infinite) or on a
    /// broken chain.
    pub fn from_diagonal(diag: impl IntoIterator<Item = BigInt>) -> Self {
        let invariant_factors: Vec<BigInt> = diag
            .into_iter()
            .map(|d| {
                assert!(!d.is_zero(), "infinite quotient");
                d.abs()
            })
            .filter(|d| !d.is_one())
            .collect();
        assert!(
            invariant_factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()),
            "invariant factors must form a divisibility chain"
        );
        FiniteAbelianGroup { invariant_factors }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Integer matrix `c` with `c · lattice = sub`, i.e. the coordinates of each
/// row of `sub` in the row basis `lattice`.
pub fn coordinates_in_basis(lattice: &IntMatrix, sub: &IntMatrix) -> Result<IntMatrix> {
    if lattice.cols() != sub.cols() {
        return Err(Error::DimensionMismatch { expected: lattice.cols(), found: sub.cols() });
    }
    let k = lattice.rows();
    if lattice.rank() != k {
        return Err(Error::DependentRows);
    }
    // lattice^T · x = row of sub
    let lt = lattice.transpose().to_rational_rows();
    let mut coords = Vec::with_capacity(sub.rows());
    for (r, row) in sub.to_rational_rows().into_iter().enumerate() {
        let x = solve_rational(&lt, &row).ok_or(Error::NotSublattice { row: r })?;
        if x.iter().any(|q| !q.is_integer()) {
            return Err(Error::NotSublattice { row: r });
        }
        coords.push(x.into_iter().map(|q| q.to_integer()).collect());
    }
    Ok(IntMatrix::from_big_rows(sub.rows(), k, coords))
}

/// The finite quotient `L / S` of a lattice by a full-rank sublattice, both
/// given by row bases.
pub fn quotient_group(lattice: &IntMatrix, sub: &IntMatrix) -> Result<FiniteAbelianGroup> {
    if lattice.rows() != sub.rows() || sub.rank() != sub.rows() {
        return Err(Error::RankMismatch { lattice: lattice.rank(), sublattice: sub.rank() });
    }
    let c = coordinates_in_basis(lattice, sub)?;
    let snf = smith_normal_form(&c);
    let group = FiniteAbelianGroup::from_diagonal(snf.diagonal());
    debug_assert_eq!(group.order(), c.determinant().abs());
    Ok(group)
}
