//! The root system E6 in the coordinates `(X₀, X₁, X₂, X₃, X₆, X₇)` with
//! the form `b(x, y) = x₀y₀/3 + x₁y₁ + x₂y₂ + x₃y₃ + x₆y₆ + x₇y₇`, and the
//! Weyl group generated by the actions of `M_B, M_d, M_e, M_f`.

mod eigen;
mod group;
mod invariants;

use alloc::vec::Vec;

use crate::exact::{ExactMatrix, RatMatrix, Rational};
use crate::poly::Vars;
use crate::WeylError;

pub use eigen::{characteristic_polynomial, conjugacy_class_c, eigenplane, g3, w3_basis, EigenplaneBasis};
pub use group::{generate_group, orbit_under, GroupTable, WeylElement};
pub use invariants::{
    b_linear_form, invariant_polynomial, invariant_polynomials, orbit_vectors_27, plane_vars, restricted_invariant,
};

/// A vector of `Q⁶` in the coordinates `X₀, X₁, X₂, X₃, X₆, X₇`.
pub type Vec6 = [Rational; 6];

/// The coordinate names of `P⁵`, in ring order.
pub const P5_NAMES: [&str; 6] = ["X0", "X1", "X2", "X3", "X6", "X7"];

pub fn p5_vars() -> Vars {
    Vars::new(&P5_NAMES)
}

pub fn vec6(v: [i64; 6]) -> Vec6 {
    v.map(Rational::from_int)
}

/// Weights of `b`: `(1/3, 1, 1, 1, 1, 1)`.
pub fn b_weights() -> Vec6 {
    let mut w = vec6([1; 6]);
    w[0] = Rational::new(1, 3);
    w
}

pub fn b_form(x: &Vec6, y: &Vec6) -> Rational {
    let w = b_weights();
    let mut acc = Rational::ZERO;
    for i in 0..6 {
        acc += &(w[i].clone() * &x[i] * &y[i]);
    }
    acc
}

/// Matrix of `b`: `diag(1/3, 1, 1, 1, 1, 1)`.
pub fn b_matrix() -> RatMatrix {
    let w = b_weights();
    ExactMatrix::from_fn(6, 6, |i, j| if i == j { w[i].clone() } else { Rational::ZERO })
}

/// The simple roots `α₁, …, α₆`.
pub fn simple_roots() -> [Vec6; 6] {
    let h = |n: i64| Rational::new(n, 2);
    [
        vec6([0, -1, -1, 0, 0, 0]),
        [h(3), h(-1), h(1), h(1), h(1), h(1)],
        vec6([0, 1, -1, 0, 0, 0]),
        vec6([0, 0, 1, -1, 0, 0]),
        vec6([0, 0, 0, 1, -1, 0]),
        vec6([0, 0, 0, 0, 1, -1]),
    ]
}

/// Matrix whose columns are the simple roots.
pub fn root_basis() -> RatMatrix {
    let roots = simple_roots();
    ExactMatrix::from_fn(6, 6, |i, j| roots[j][i].clone())
}

/// Gram matrix of the simple roots and its `-1` edges, as 1-based pairs `(i, j)` with `i < j`.
pub fn gram_matrix() -> (RatMatrix, Vec<(usize, usize)>) {
    let roots = simple_roots();
    let g = ExactMatrix::from_fn(6, 6, |i, j| b_form(&roots[i], &roots[j]));
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            if g[(i, j)] == Rational::from_int(-1) {
                edges.push((i + 1, j + 1));
            }
        }
    }
    (g, edges)
}

/// `s_α(x) = x - b(x, α) α`.
pub fn reflection(alpha: &Vec6, x: &Vec6) -> Result<Vec6, WeylError> {
    let n = b_form(alpha, alpha);
    if n != Rational::from_int(2) {
        return Err(WeylError::NotARoot(alloc::format!("{n}")));
    }
    let c = b_form(x, alpha);
    Ok(core::array::from_fn(|i| x[i].clone() - &(c.clone() * &alpha[i])))
}

/// Coordinate matrix of the reflection `s_α`.
pub fn reflection_matrix(alpha: &Vec6) -> Result<RatMatrix, WeylError> {
    let mut cols = Vec::with_capacity(6);
    for j in 0..6 {
        let mut e = vec6([0; 6]);
        e[j] = Rational::ONE;
        cols.push(reflection(alpha, &e)?.to_vec());
    }
    Ok(ExactMatrix::from_columns(&cols).expect("six columns"))
}

/// The fundamental weight `λ_i` (1-based), defined by `b(λ_i, α_j) = δ_ij`.
pub fn fundamental_weight(i: usize) -> Result<Vec6, WeylError> {
    if !(1..=6).contains(&i) {
        return Err(WeylError::BadIndex(i));
    }
    let roots = simple_roots();
    let w = b_weights();
    // Row j of the system is (b-weighted α_j)ᵀ.
    let a = ExactMatrix::from_fn(6, 6, |j, k| roots[j][k].clone() * &w[k]);
    let rhs = ExactMatrix::from_fn(6, 1, |j, _| if j + 1 == i { Rational::ONE } else { Rational::ZERO });
    let sol = crate::exact::exact_linear_solve(&a, &rhs).expect("simple roots are independent");
    Ok(core::array::from_fn(|k| sol[(k, 0)].clone()))
}

/// Coordinate matrices of the actions of `M_B, M_d, M_e, M_f` on `C⁶`.
pub fn generator_matrices() -> [RatMatrix; 4] {
    let swap = ExactMatrix::from_i64_rows(&[
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1, 0],
    ]);
    let diag = |d: [i64; 6]| ExactMatrix::from_fn(6, 6, |i, j| if i == j { Rational::from_int(d[i]) } else { Rational::ZERO });
    let mf = ExactMatrix::<Rational>::from_i64_rows(&[
        [1, 3, 3, 3, 3, 3],
        [1, -1, 3, -1, -1, -1],
        [1, 3, -1, -1, -1, -1],
        [1, -1, -1, 3, -1, -1],
        [1, -1, -1, -1, -1, 3],
        [1, -1, -1, -1, 3, -1],
    ])
    .scale(&Rational::new(1, 4));
    [swap, diag([1, 1, -1, -1, -1, -1]), diag([1, 1, 1, -1, -1, 1]), mf]
}

/// Projective representative: a primitive integer vector whose first
/// nonzero coordinate is positive.
pub fn projective_canonical(v: &Vec6) -> Vec6 {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let mut den = num_bigint::BigInt::one();
    for x in v {
        den = den.lcm(&x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.clone();
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        g = -g;
    }
    core::array::from_fn(|i| Rational::from(&ints[i] / &g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_values() {
        let r = simple_roots();
        assert_eq!(b_form(&r[0], &r[0]), Rational::from_int(2));
        assert_eq!(b_form(&r[1], &r[1]), Rational::from_int(2));
        let e0 = vec6([1, 0, 0, 0, 0, 0]);
        assert_eq!(b_form(&e0, &e0), Rational::new(1, 3));
    }

    #[test]
    fn dynkin_diagram() {
        let (g, edges) = gram_matrix();
        for i in 0..6 {
            assert_eq!(g[(i, i)], Rational::from_int(2));
        }
        assert_eq!(edges, alloc::vec![(1, 4), (2, 3), (3, 4), (4, 5), (5, 6)]);
        // E6 shape: one node of degree three with legs of lengths 1, 2, 2.
        let mut deg = [0; 7];
        for (a, b) in &edges {
            deg[*a] += 1;
            deg[*b] += 1;
        }
        assert_eq!(deg.iter().filter(|&&d| d == 3).count(), 1);
        assert_eq!(deg.iter().filter(|&&d| d == 1).count(), 3);
    }

    #[test]
    fn reflection_properties() {
        let r = simple_roots();
        let neg: Vec6 = core::array::from_fn(|i| -r[0][i].clone());
        assert_eq!(reflection(&r[0], &r[0]).unwrap(), neg);
        let x = vec6([0, 0, 0, 0, 1, 1]);
        assert_eq!(b_form(&x, &r[5]), Rational::ZERO);
        assert_eq!(reflection(&r[5], &x).unwrap(), x);
        assert!(reflection(&vec6([1, 0, 0, 0, 0, 0]), &x).is_err());
        assert_eq!(reflection_matrix(&r[5]).unwrap(), generator_matrices()[0]);
    }

    #[test]
    fn fundamental_weights() {
        let l2 = fundamental_weight(2).unwrap();
        assert_eq!(l2, vec6([2, 0, 0, 0, 0, 0]));
        let r = simple_roots();
        assert_eq!(b_form(&l2, &r[3]), Rational::ZERO);
        assert_eq!(b_form(&l2, &r[1]), Rational::ONE);
        assert_eq!(fundamental_weight(0), Err(WeylError::BadIndex(0)));
        for i in 1..=6 {
            let l = fundamental_weight(i).unwrap();
            for (j, a) in r.iter().enumerate() {
                assert_eq!(b_form(&l, a), if i == j + 1 { Rational::ONE } else { Rational::ZERO });
            }
        }
    }

    #[test]
    fn canonical_representatives() {
        let v = [Rational::new(-1, 2), Rational::ONE, Rational::ZERO, Rational::ZERO, Rational::ZERO, Rational::ZERO];
        assert_eq!(projective_canonical(&v), vec6([1, -2, 0, 0, 0, 0]));
        assert_eq!(projective_canonical(&vec6([0, 0, 4, 6, 0, 0])), vec6([0, 0, 2, 3, 0, 0]));
    }
}
