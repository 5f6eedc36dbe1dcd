//! Smith and Hermite normal forms, integer kernels and saturation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// The diagonal of `d`, including trailing zeros.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Number of nonzero diagonal entries, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }
}

/// Smallest nonzero |entry| in the lower-right block starting at `(t, t)`,
/// ties broken by lowest `(row, col)`.
fn smallest_pivot(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(BigInt, usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                best = Some((a, i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Smith normal form by elementary unimodular row and column operations.
///
/// The returned decomposition is checked by exact multiplication before it
/// is handed back.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pr, pc)) = smallest_pivot(&d, t) else {
                // remaining block is zero
                let out = SmithDecomposition { u, d, v };
                debug_assert!(&(&out.u * a) * &out.v == out.d);
                return out;
            };
            d.swap_rows(t, pr);
            u.swap_rows(t, pr);
            d.swap_cols(t, pc);
            v.swap_cols(t, pc);

            let mut clean = true;
            for i in t + 1..m {
                let q = &d[(i, t)] / &d[(t, t)];
                if !q.is_zero() {
                    let neg = -q;
                    d.add_row_multiple(i, t, &neg);
                    u.add_row_multiple(i, t, &neg);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = &d[(t, j)] / &d[(t, t)];
                if !q.is_zero() {
                    let neg = -q;
                    d.add_col_multiple(j, t, &neg);
                    v.add_col_multiple(j, t, &neg);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // the pivot must divide the whole remaining block
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let out = SmithDecomposition { u, d, v };
    debug_assert!(&(&out.u * a) * &out.v == out.d);
    out
}

/// Row-style Hermite normal form: returns `(h, u)` with `u · a = h`.
///
/// `h` is in echelon form with positive pivots, entries above each pivot
/// reduced into `[0, pivot)`, and zero rows last.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let pivot = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()).then(i.cmp(&j)));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                let q = &h[(i, c)] / &h[(r, c)];
                if !q.is_zero() {
                    let neg = -q;
                    h.add_row_multiple(i, r, &neg);
                    u.add_row_multiple(i, r, &neg);
                }
                done &= h[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                let neg = -q;
                h.add_row_multiple(i, r, &neg);
                u.add_row_multiple(i, r, &neg);
            }
        }
        r += 1;
    }
    debug_assert!(&u * a == h);
    (h, u)
}

/// Canonical basis of the row lattice: the nonzero rows of the HNF.
pub fn lattice_basis(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_normal_form(a);
    let nonzero: Vec<usize> = (0..h.rows()).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).collect();
    h.select_rows(&nonzero)
}

/// Decides whether two row lattices coincide, by comparing HNFs.
pub fn lattices_equal(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && lattice_basis(a) == lattice_basis(b)
}

/// HNF-reduced basis (as rows) of `{x ∈ ℤ^cols : a · x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    let (h, u) = hermite_normal_form(&a.transpose());
    let zero_rows: Vec<usize> = (0..n).filter(|&i| h.row(i).iter().all(Zero::is_zero)).collect();
    lattice_basis(&u.select_rows(&zero_rows))
}

/// Basis of `(ℚ-span of rows) ∩ ℤⁿ`, computed as the kernel of the kernel.
pub fn saturate(b: &IntMatrix) -> Result<IntMatrix> {
    if b.rank() != b.rows() {
        return Err(Error::DependentRows);
    }
    Ok(integer_kernel(&integer_kernel(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().copied()))
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&m(&[&[1, 0], &[0, 1]])).d, m(&[&[1, 0], &[0, 1]]));
        assert_eq!(smith_normal_form(&m(&[&[2, 4], &[6, 8]])).d, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(smith_normal_form(&m(&[&[2, 0], &[0, 0]])).d, m(&[&[2, 0], &[0, 0]]));
    }

    #[test]
    fn snf_moves_zeros_last_and_fixes_chain() {
        let a = m(&[&[0, 0, 0], &[0, 6, 0], &[0, 0, 4]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.diagonal(), vec![2.into(), 12.into(), 0.into()]);
        assert_eq!(&(&s.u * &a) * &s.v, s.d);
    }

    #[test]
    fn snf_of_empty_shapes() {
        let s = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!(s.v, IntMatrix::identity(3));
        let s = smith_normal_form(&IntMatrix::zeros(2, 0));
        assert_eq!(s.u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hermite_normal_form(&m(&[&[2, 4], &[6, 8]]));
        assert_eq!(h, m(&[&[2, 0], &[0, 4]]));
        assert_eq!(&u * &m(&[&[2, 4], &[6, 8]]), h);
        assert_eq!(hermite_normal_form(&IntMatrix::identity(3)).0, IntMatrix::identity(3));
        assert_eq!(hermite_normal_form(&m(&[&[0, 3]])).0, m(&[&[0, 3]]));
        assert_eq!(hermite_normal_form(&m(&[&[0, -3]])).0, m(&[&[0, 3]]));
    }

    #[test]
    fn kernel_of_projection() {
        let k = integer_kernel(&m(&[&[1, 0, -1], &[0, 1, -1]]));
        assert_eq!(k, m(&[&[1, 1, 1]]));
        assert_eq!(integer_kernel(&m(&[&[2, -1]])), m(&[&[1, 2]]));
        assert_eq!(integer_kernel(&IntMatrix::identity(2)).rows(), 0);
        assert_eq!(integer_kernel(&IntMatrix::zeros(0, 2)), IntMatrix::identity(2));
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturate(&m(&[&[2, 0]])).unwrap(), m(&[&[1, 0]]));
        assert_eq!(saturate(&m(&[&[1, 1], &[1, -1]])).unwrap(), IntMatrix::identity(2));
        assert_eq!(saturate(&m(&[&[3, 6]])).unwrap(), m(&[&[1, 2]]));
        assert_eq!(saturate(&m(&[&[1, 2], &[2, 4]])), Err(Error::DependentRows));
    }

    #[test]
    fn lattice_equality_ignores_basis_choice() {
        assert!(lattices_equal(&m(&[&[1, 1], &[0, 2]]), &m(&[&[1, -1], &[2, 0]])));
        assert!(!lattices_equal(&m(&[&[1, 1], &[0, 2]]), &IntMatrix::identity(2)));
    }
}
