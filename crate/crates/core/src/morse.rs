//! Betti numbers of toric orbifolds from a generic component of the moment map.
//!
//! For an integer direction `ξ` that is not orthogonal to any edge, `⟨φ, ξ⟩`
//! has one critical point over each vertex, of index twice the number of
//! edges there along which `ξ` decreases. These functions are perfect, so
//! the index counts are the real Betti numbers. The h-vector of the polytope
//! gives the same numbers without choosing `ξ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact_lattice::{dot, format_int_vector};
use crate::polytope::LabeledPolytope;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseReport {
    pub xi: Vec<BigInt>,
    /// Vertex index ↦ Morse index (always even).
    pub indices: BTreeMap<usize, usize>,
    /// Betti numbers `b₀, b₁, …, b_{2n}` from the h-vector.
    pub poincare: Vec<u64>,
    /// `Σ_v x^{index(v)}` for this `ξ`.
    pub morse_poly: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorseInequality {
    /// `M − P = (1 + x) Q` with `Q ≥ 0`; trailing zeros trimmed, so the zero
    /// polynomial is the empty list.
    Quotient(Vec<i64>),
    Infeasible,
}

fn check_xi(p: &LabeledPolytope, xi: &[BigInt]) -> Result<()> {
    if xi.len() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: xi.len() });
    }
    if xi.iter().all(Zero::is_zero) {
        return Err(Error::ZeroDirection);
    }
    Ok(())
}

fn first_orthogonal_edge(p: &LabeledPolytope, xi: &[BigInt]) -> Option<(usize, usize)> {
    (0..p.vertices().len()).find_map(|v| {
        p.edge_directions(v).into_iter().find(|e| dot(xi, &e.direction).is_zero()).map(|e| (v, e.dropped))
    })
}

pub fn is_generic(p: &LabeledPolytope, xi: &[BigInt]) -> Result<bool> {
    check_xi(p, xi)?;
    Ok(first_orthogonal_edge(p, xi).is_none())
}

fn require_generic(p: &LabeledPolytope, xi: &[BigInt]) -> Result<()> {
    check_xi(p, xi)?;
    match first_orthogonal_edge(p, xi) {
        Some((vertex, facet)) => Err(Error::NotGeneric { xi: format_int_vector(xi), vertex, facet }),
        None => Ok(()),
    }
}

fn index_at(p: &LabeledPolytope, v: usize, xi: &[BigInt]) -> usize {
    2 * p.edge_directions(v).iter().filter(|e| dot(xi, &e.direction).is_negative()).count()
}

pub fn vertex_index(p: &LabeledPolytope, v: usize, xi: &[BigInt]) -> Result<usize> {
    require_generic(p, xi)?;
    Ok(index_at(p, v, xi))
}

pub fn poincare_polynomial(p: &LabeledPolytope, xi: &[BigInt]) -> Result<Vec<u64>> {
    require_generic(p, xi)?;
    let mut coeffs = vec![0u64; 2 * p.dim() + 1];
    for v in 0..p.vertices().len() {
        coeffs[index_at(p, v, xi)] += 1;
    }
    Ok(coeffs)
}

/// h-vector `(h₀, …, h_n)` from `Σ hᵢ t^{n−i} = Σ f_k (t − 1)^k`, where
/// `f_k` counts the `k`-dimensional faces.
pub fn h_vector(p: &LabeledPolytope) -> Vec<i64> {
    let n = p.dim();
    let f = p.f_vector();
    // coefficients of t^j, j = 0..=n
    let mut by_power = vec![BigInt::zero(); n + 1];
    for (k, &fk) in f.iter().enumerate() {
        // (t − 1)^k = Σ_j C(k, j) t^j (−1)^{k−j}
        let mut binom = BigInt::from(1);
        for (j, coeff) in by_power.iter_mut().enumerate().take(k + 1) {
            let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
            *coeff += &binom * BigInt::from(fk) * sign;
            binom = binom * (k - j) / (j + 1);
        }
    }
    (0..=n).map(|i| i64::try_from(&by_power[n - i]).expect("h-vector entries fit in i64")).collect()
}

/// Betti numbers `b₀, …, b_{2n}` from the h-vector: `b_{2i} = hᵢ`, odd ones zero.
pub fn betti_numbers(p: &LabeledPolytope) -> Vec<u64> {
    let mut b = vec![0u64; 2 * p.dim() + 1];
    for (i, h) in h_vector(p).into_iter().enumerate() {
        b[2 * i] = u64::try_from(h).expect("h-vector of a simple polytope is nonnegative");
    }
    b
}

pub fn morse_report(p: &LabeledPolytope, xi: &[BigInt]) -> Result<MorseReport> {
    require_generic(p, xi)?;
    let indices: BTreeMap<usize, usize> = (0..p.vertices().len()).map(|v| (v, index_at(p, v, xi))).collect();
    Ok(MorseReport { xi: xi.to_vec(), indices, poincare: betti_numbers(p), morse_poly: poincare_polynomial(p, xi)? })
}

/// Divides `M − P` by `1 + x`.
pub fn morse_inequality_check(morse: &[u64], poincare: &[u64]) -> MorseInequality {
    let len = morse.len().max(poincare.len());
    let at = |v: &[u64], i: usize| v.get(i).map_or(0, |&x| x as i64);
    let mut r: Vec<i64> = (0..len).map(|i| at(morse, i) - at(poincare, i)).collect();
    while r.last() == Some(&0) {
        r.pop();
    }
    if r.is_empty() {
        return MorseInequality::Quotient(Vec::new());
    }
    // r_0 = q_0, r_k = q_k + q_{k−1}, r_d = q_{d−1}
    let d = r.len() - 1;
    let mut q = Vec::with_capacity(d);
    for k in 0..d {
        let prev = if k == 0 { 0 } else { q[k - 1] };
        q.push(r[k] - prev);
    }
    let last = q.last().copied().unwrap_or(0);
    if r[d] != last || q.iter().any(|&c| c < 0) {
        return MorseInequality::Infeasible;
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    MorseInequality::Quotient(q)
}

/// Draws a generic direction with entries in `[−bound, bound]`, widening the
/// range if needed.
pub fn random_generic_xi<R: Rng + ?Sized>(p: &LabeledPolytope, rng: &mut R) -> Vec<BigInt> {
    let mut bound = 10i64;
    loop {
        for _ in 0..64 {
            let xi: Vec<BigInt> = (0..p.dim()).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
            if is_generic(p, &xi).unwrap_or(false) {
                return xi;
            }
        }
        bound *= 4;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::exact_lattice::{int_vec, rational};

    #[test]
    fn genericity_examples() {
        let t1 = corpus::unit_simplex(2);
        assert!(is_generic(&t1, &int_vec(&[1, 2])).unwrap());
        assert!(!is_generic(&t1, &int_vec(&[1, 1])).unwrap());
        assert!(is_generic(&corpus::football(1, 1), &int_vec(&[1])).unwrap());
        assert_eq!(is_generic(&t1, &int_vec(&[0, 0])), Err(Error::ZeroDirection));
    }

    #[test]
    fn index_examples() {
        let t1 = corpus::unit_simplex(2);
        let xi = int_vec(&[1, 2]);
        let at = |x: i64, y: i64| t1.vertex_index(&[rational(x, 1), rational(y, 1)]).unwrap();
        assert_eq!(vertex_index(&t1, at(0, 0), &xi).unwrap(), 0);
        assert_eq!(vertex_index(&t1, at(1, 0), &xi).unwrap(), 2);
        assert_eq!(vertex_index(&t1, at(0, 1), &xi).unwrap(), 4);
        assert!(matches!(vertex_index(&t1, 0, &int_vec(&[1, 1])), Err(Error::NotGeneric { .. })));
    }

    #[test]
    fn poincare_examples() {
        let xi = int_vec(&[1, 2]);
        assert_eq!(poincare_polynomial(&corpus::unit_simplex(2), &xi).unwrap(), vec![1, 0, 1, 0, 1]);
        assert_eq!(poincare_polynomial(&corpus::football(3, 5), &int_vec(&[1])).unwrap(), vec![1, 0, 1]);
        assert_eq!(poincare_polynomial(&corpus::unit_square(), &xi).unwrap(), vec![1, 0, 2, 0, 1]);
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(&corpus::unit_simplex(2)), vec![1, 1, 1]);
        assert_eq!(h_vector(&corpus::unit_square()), vec![1, 2, 1]);
        assert_eq!(h_vector(&corpus::unit_cube(3)), vec![1, 3, 3, 1]);
        assert_eq!(betti_numbers(&corpus::football(2, 7)), vec![1, 0, 1]);
    }

    #[test]
    fn inequality_examples() {
        assert_eq!(morse_inequality_check(&[1, 0, 1], &[1, 0, 1]), MorseInequality::Quotient(vec![]));
        assert_eq!(morse_inequality_check(&[1, 1, 1], &[1]), MorseInequality::Quotient(vec![0, 1]));
        assert_eq!(morse_inequality_check(&[1, 2], &[1]), MorseInequality::Infeasible);
        // M < P coefficientwise cannot come from a Morse function
        assert_eq!(morse_inequality_check(&[1], &[1, 1, 1]), MorseInequality::Infeasible);
        // torus: M = 1 + 2x + x² = P
        assert_eq!(morse_inequality_check(&[1, 2, 1], &[1, 2, 1]), MorseInequality::Quotient(vec![]));
        assert_eq!(morse_inequality_check(&[1, 3, 3, 1], &[1, 2, 2, 1]), MorseInequality::Quotient(vec![0, 1]));
    }

    #[test]
    fn report_matches_both_routes() {
        let w2 = corpus::w2();
        let r = morse_report(&w2, &int_vec(&[3, -1])).unwrap();
        assert_eq!(r.poincare, r.morse_poly);
        assert_eq!(r.indices.values().filter(|&&i| i == 0).count(), 1);
    }
}
