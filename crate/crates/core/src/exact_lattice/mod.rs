//! Exact integer and rational linear algebra.
//!
//! Everything here works over `ℤ` and `ℚ` with arbitrary-precision
//! integers: Smith and Hermite normal forms, integer kernels, saturation of
//! sublattices, and finite quotients `L / S` presented by invariant factors.
//! The ambient lattice is always `ℤⁿ` in standard coordinates.

mod group;
mod matrix;
mod normal_form;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use group::{coordinates_in_basis, quotient_group, FiniteAbelianGroup};
pub use matrix::{
    clear_denominators, dot, dot_int_rational, gcd_of, invert_rational, rational_rank, solve_rational, IntMatrix,
};
pub use normal_form::{
    hermite_normal_form, integer_kernel, lattice_basis, lattices_equal, saturate, smith_normal_form, SmithDecomposition,
};

use crate::error::{Error, Result};

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Divides an integer vector by the gcd of its entries.
pub fn primitive_vector(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Parses `"p/q"` or `"p"`; surrounding whitespace is ignored.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::ParseRational(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (t, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// `"p/q"` with `q > 0`, or `"p"` when `q = 1`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn format_rational_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn format_int_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive_vector(&int_vec(&[4, -6])).unwrap(), int_vec(&[2, -3]));
        assert_eq!(primitive_vector(&int_vec(&[1, 0, 0])).unwrap(), int_vec(&[1, 0, 0]));
        assert_eq!(primitive_vector(&int_vec(&[0, -8])).unwrap(), int_vec(&[0, -1]));
        let err = primitive_vector(&int_vec(&[0, 0])).unwrap_err();
        assert_eq!(err.to_string(), "zero vector has no primitive representative");
    }

    #[test]
    fn rational_text_encoding() {
        assert_eq!(parse_rational("-4/6").unwrap(), rational(-2, 3));
        assert_eq!(parse_rational("3/-1").unwrap(), rational(-3, 1));
        assert_eq!(format_rational(&rational(4, 2)), "2");
        assert_eq!(format_rational(&rational(1, -2)), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }
}
