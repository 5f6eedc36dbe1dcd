//! Named labeled polytopes and seeded random simple polytopes.
//!
//! Random polytopes are produced by cutting a base polytope with random
//! rational half-spaces that avoid every current vertex; such cuts keep the
//! polytope simple. Half-spaces that a cut makes redundant are dropped.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::exact_lattice::{dot_int_rational, gcd_of, rational, Rational};
use crate::polytope::{LabeledPolytope, RawHalfSpace};

fn build(dim: usize, rows: &[(&[i64], Rational, i64)]) -> LabeledPolytope {
    let raw = rows.iter().map(|(n, o, l)| RawHalfSpace::new(n, o.clone(), *l)).collect();
    LabeledPolytope::new(dim, raw).expect("corpus polytope is valid")
}

fn int(x: i64) -> Rational {
    rational(x, 1)
}

/// `{x ≥ 0, −x ≥ −1}` with labels `n` at 0 and `m` at 1: a sphere with
/// cone points of orders `n` and `m` at the poles.
pub fn football(n: i64, m: i64) -> LabeledPolytope {
    build(1, &[(&[1], int(0), n), (&[-1], int(-1), m)])
}

/// `{xᵢ ≥ 0, −Σxᵢ ≥ −1}`, all labels 1.
pub fn unit_simplex(n: usize) -> LabeledPolytope {
    let mut raw: Vec<RawHalfSpace> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            RawHalfSpace::new(&e, int(0), 1)
        })
        .collect();
    raw.push(RawHalfSpace::new(&vec![-1; n], int(-1), 1));
    LabeledPolytope::new(n, raw).expect("simplex is valid")
}

/// `[0, 1]ⁿ` as an iterated product, facets ordered `x₀ ≥ 0, −x₀ ≥ −1, x₁ ≥ 0, …`.
pub fn unit_cube(n: usize) -> LabeledPolytope {
    let interval = football(1, 1);
    (1..n).fold(interval.clone(), |acc, _| acc.product(&interval))
}

/// `{x ≥ 0, y ≥ 0, −x ≥ −1, −y ≥ −1}`.
pub fn unit_square() -> LabeledPolytope {
    build(2, &[(&[1, 0], int(0), 1), (&[0, 1], int(0), 1), (&[-1, 0], int(-1), 1), (&[0, -1], int(-1), 1)])
}

/// Triangle with vertices (0,0), (2,0), (0,1): the weighted projective plane `ℂP(1,1,2)`.
pub fn w2() -> LabeledPolytope {
    build(2, &[(&[1, 0], int(0), 1), (&[0, 1], int(0), 1), (&[-1, -2], int(-2), 1)])
}

/// Triangle with vertices (0,0), (3,0), (0,2), all labels 1.
pub fn triangle_123() -> LabeledPolytope {
    build(2, &[(&[1, 0], int(0), 1), (&[0, 1], int(0), 1), (&[-2, -3], int(-6), 1)])
}

/// Hirzebruch trapezoid `{x ≥ 0, 0 ≤ y ≤ 1, −x − a·y ≥ −b}` (needs `b > a ≥ 0`).
pub fn hirzebruch(a: i64, b: i64) -> LabeledPolytope {
    build(2, &[(&[1, 0], int(0), 1), (&[0, 1], int(0), 1), (&[0, -1], int(-1), 1), (&[-1, -a], int(-b), 1)])
}

/// `{x, y, z ≥ 0, −x − y − 2z ≥ −2}`.
pub fn weighted_tetrahedron() -> LabeledPolytope {
    build(3, &[(&[1, 0, 0], int(0), 1), (&[0, 1, 0], int(0), 1), (&[0, 0, 1], int(0), 1), (&[-1, -1, -2], int(-2), 1)])
}

/// Named polytopes used throughout the tests and examples.
pub fn named() -> Vec<(String, LabeledPolytope)> {
    let mut out: Vec<(String, LabeledPolytope)> = vec![
        ("t1".into(), unit_simplex(2)),
        ("t1_label2".into(), unit_simplex(2).with_labels(&[2, 1, 1]).unwrap()),
        ("w2".into(), w2()),
        ("triangle_123".into(), triangle_123()),
        ("square".into(), unit_square()),
        ("square_labeled".into(), unit_square().with_labels(&[2, 3, 1, 4]).unwrap()),
        ("hirzebruch_1".into(), hirzebruch(1, 2)),
        ("hirzebruch_2".into(), hirzebruch(2, 3)),
        ("tetrahedron".into(), unit_simplex(3)),
        ("cube".into(), unit_cube(3)),
        ("prism".into(), unit_simplex(2).product(&football(1, 1))),
        ("weighted_tetrahedron".into(), weighted_tetrahedron()),
        ("weighted_prism".into(), w2().product(&football(2, 3))),
        ("simplex_x_simplex".into(), unit_simplex(2).product(&unit_simplex(2))),
    ];
    for (n, m) in [(1, 1), (2, 1), (2, 2), (3, 5), (6, 4)] {
        out.push((format!("football_{n}_{m}"), football(n, m)));
    }
    out
}

fn random_primitive<R: Rng + ?Sized>(rng: &mut R, dim: usize, bound: i64) -> Vec<BigInt> {
    loop {
        let v: Vec<BigInt> = (0..dim).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
        let g = gcd_of(&v);
        if !g.is_zero() {
            return v.into_iter().map(|x| x / &g).collect();
        }
    }
}

/// Cuts `base` with `cuts` random half-spaces in general position.
pub fn random_truncation<R: Rng + ?Sized>(base: &LabeledPolytope, cuts: usize, rng: &mut R) -> LabeledPolytope {
    let dim = base.dim();
    let mut current = base.clone();
    let mut made = 0;
    while made < cuts {
        let normal = random_primitive(rng, dim, 3);
        let values: Vec<Rational> = current.vertices().iter().map(|v| dot_int_rational(&normal, &v.point)).collect();
        let lo = values.iter().min().unwrap().clone();
        let hi = values.iter().max().unwrap().clone();
        if lo == hi {
            continue;
        }
        // keep ⟨β, y⟩ ≥ offset, chopping a piece off the low end
        let t = rational(rng.gen_range(1..8), 16);
        let offset = &lo + (&hi - &lo) * t;
        if values.contains(&offset) {
            continue;
        }
        let mut raw: Vec<RawHalfSpace> = current.halfspaces().iter().map(RawHalfSpace::from).collect();
        raw.push(RawHalfSpace { normal, offset, label: 1 });
        loop {
            match LabeledPolytope::new(dim, raw.clone()) {
                Ok(p) => {
                    if p != current {
                        current = p;
                        made += 1;
                    }
                    break;
                }
                Err(Error::Redundant(i)) => {
                    raw.remove(i);
                }
                Err(e) => panic!("generic cut produced an invalid polytope: {e}"),
            }
        }
    }
    current
}

/// Replaces every label by a random value in `1..=max_label`.
pub fn random_labels<R: Rng + ?Sized>(p: &LabeledPolytope, max_label: i64, rng: &mut R) -> LabeledPolytope {
    let labels: Vec<i64> = (0..p.facet_count()).map(|_| rng.gen_range(1..=max_label)).collect();
    p.with_labels(&labels).expect("positive labels")
}

/// Random labeled simple polytope of dimension 2 or 3.
pub fn random_simple<R: Rng + ?Sized>(dim: usize, rng: &mut R, max_label: i64) -> LabeledPolytope {
    let bases = match dim {
        2 => vec![unit_simplex(2).scale(&int(4)), unit_square().scale(&int(3)), w2().scale(&int(2))],
        3 => vec![unit_simplex(3).scale(&int(4)), unit_cube(3).scale(&int(3)), weighted_tetrahedron().scale(&int(2))],
        _ => vec![unit_cube(dim).scale(&int(3))],
    };
    let base = bases.choose(rng).unwrap();
    let cuts = rng.gen_range(1..=3);
    let p = random_truncation(base, cuts, rng);
    random_labels(&p, max_label, rng)
}

/// The named polytopes, random relabelings of them, and `random_2d + random_3d`
/// random truncations, all labels in `1..=4`.
pub fn corpus(seed: u64, random_2d: usize, random_3d: usize) -> Vec<(String, LabeledPolytope)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = named();
    for (name, p) in named() {
        if p.dim() <= 3 {
            out.push((format!("{name}_relabeled"), random_labels(&p, 4, &mut rng)));
        }
    }
    for i in 0..random_2d {
        out.push((format!("random2d_{i}"), random_simple(2, &mut rng, 4)));
    }
    for i in 0..random_3d {
        out.push((format!("random3d_{i}"), random_simple(3, &mut rng, 4)));
    }
    out
}
