use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use toric_orbifold::exact_lattice::{
    format_rational, gcd_of, hermite_normal_form, integer_kernel, lattices_equal, parse_rational, primitive_vector,
    quotient_group, saturate, smith_normal_form, IntMatrix, Rational,
};

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r).prop_map(IntMatrix::from_rows)
    })
}

/// Naive gcd by trial division from the top.
fn brute_gcd(v: &[i64]) -> i64 {
    let m = v.iter().map(|x| x.abs()).max().unwrap_or(0);
    if m == 0 {
        return 0;
    }
    (1..=m).rev().find(|d| v.iter().all(|x| x % d == 0)).unwrap()
}

/// Whether `x` lies in the row lattice of the nonsingular 2×2 matrix `s`,
/// via the adjugate: `x · adj(s) ≡ 0 (mod det s)`.
fn in_row_lattice(s: [[i64; 2]; 2], x: [i64; 2]) -> bool {
    let det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
    let adj = [[s[1][1], -s[0][1]], [-s[1][0], s[0][0]]];
    (0..2).all(|j| (x[0] * adj[0][j] + x[1] * adj[1][j]) % det == 0)
}

/// Invariant factors of ℤ²/S from element orders: the exponent is the lcm
/// of the orders of e₁ and e₂, and the order is |det S|.
fn brute_quotient(s: [[i64; 2]; 2]) -> Vec<i64> {
    let det = (s[0][0] * s[1][1] - s[0][1] * s[1][0]).abs();
    let order_of = |x: [i64; 2]| (1..=det).find(|&k| in_row_lattice(s, [k * x[0], k * x[1]])).unwrap();
    let exponent = order_of([1, 0]).lcm(&order_of([0, 1]));
    // every element has order dividing the exponent
    for a in 0..det {
        for b in 0..det {
            assert!(in_row_lattice(s, [exponent * a, exponent * b]));
        }
    }
    [det / exponent, exponent].into_iter().filter(|&d| d != 1).collect()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn smith_decomposition_holds(a in matrix_strategy(5, 12)) {
        let s = smith_normal_form(&a);
        prop_assert_eq!(&(&s.u * &a) * &s.v, s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (w[1].is_zero() || w[1].is_multiple_of(&w[0])));
        }
        prop_assert_eq!(s.rank(), a.rank());
    }

    #[test]
    fn first_invariant_factor_is_entry_gcd(a in matrix_strategy(4, 15)) {
        let s = smith_normal_form(&a);
        let entries: Vec<BigInt> = (0..a.rows()).flat_map(|i| a.row(i).to_vec()).collect();
        let g = gcd_of(&entries);
        let first = s.diagonal().first().cloned().unwrap_or_else(BigInt::zero);
        prop_assert_eq!(first, g);
    }

    #[test]
    fn hermite_form_is_canonical(a in matrix_strategy(4, 10)) {
        let (h, u) = hermite_normal_form(&a);
        prop_assert_eq!(&u * &a, h.clone());
        prop_assert!(u.determinant().abs().is_one());
        prop_assert!(lattices_equal(&a, &h));
        // a unimodular change of generators has the same form
        let swapped = IntMatrix::from_big_rows(a.rows(), a.cols(), a.row_vecs().into_iter().rev().collect());
        prop_assert_eq!(hermite_normal_form(&swapped).0, h);
    }

    #[test]
    fn kernel_is_annihilated_and_saturated(a in matrix_strategy(4, 8)) {
        let k = integer_kernel(&a);
        prop_assert_eq!(k.rows(), a.cols() - a.rank());
        for row in k.row_vecs() {
            prop_assert!(a.mul_vec(&row).iter().all(Zero::is_zero));
        }
        if k.rows() > 0 {
            prop_assert!(lattices_equal(&saturate(&k).unwrap(), &k));
        }
    }

    #[test]
    fn saturation_is_idempotent_and_contains_input(a in matrix_strategy(3, 9)) {
        prop_assume!(a.rank() == a.rows());
        let s = saturate(&a).unwrap();
        prop_assert_eq!(s.rows(), a.rows());
        prop_assert!(lattices_equal(&saturate(&s).unwrap(), &s));
        // the input lattice has finite index in its saturation
        let g = quotient_group(&s, &a).unwrap();
        prop_assert!(!g.order().is_zero());
    }

    #[test]
    fn quotient_order_is_determinant(a in matrix_strategy(4, 9)) {
        prop_assume!(a.rows() == a.cols() && !a.determinant().is_zero());
        let g = quotient_group(&IntMatrix::identity(a.rows()), &a).unwrap();
        prop_assert_eq!(g.order(), a.determinant().abs());
    }

    #[test]
    fn quotient_matches_coset_count(m in proptest::array::uniform4(-5i64..=5)) {
        let s = [[m[0], m[1]], [m[2], m[3]]];
        prop_assume!(m[0] * m[3] - m[1] * m[2] != 0);
        let g = quotient_group(&IntMatrix::identity(2), &IntMatrix::from_rows(s)).unwrap();
        let expected: Vec<BigInt> = brute_quotient(s).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(g.invariant_factors().to_vec(), expected);
    }

    #[test]
    fn primitive_vector_divides_by_gcd(v in proptest::collection::vec(-30i64..=30, 1..6)) {
        let g = brute_gcd(&v);
        match primitive_vector(&big(&v)) {
            Err(_) => prop_assert_eq!(g, 0),
            Ok(p) => {
                prop_assert!(g > 0);
                prop_assert_eq!(p, big(&v.iter().map(|x| x / g).collect::<Vec<_>>()));
            }
        }
        prop_assert_eq!(gcd_of(&big(&v)), BigInt::from(g));
    }

    #[test]
    fn rational_text_round_trips(p in -1000i64..1000, q in 1i64..1000) {
        let r = Rational::new(p.into(), q.into());
        let text = format_rational(&r);
        prop_assert_eq!(parse_rational(&text).unwrap(), r.clone());
        prop_assert_eq!(text.contains('/'), !r.is_integer());
    }
}

#[test]
fn brute_quotient_oracle_sanity() {
    assert_eq!(brute_quotient([[2, 0], [0, 2]]), vec![2, 2]);
    assert_eq!(brute_quotient([[2, 0], [1, 3]]), vec![6]);
    assert_eq!(brute_quotient([[1, 0], [0, 1]]), Vec::<i64>::new());
    assert_eq!(brute_gcd(&[12, -18, 30]), 6);
}
