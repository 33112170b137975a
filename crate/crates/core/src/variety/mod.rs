//! The hypersurface `X = {F = 0} ⊂ P⁵` and its special subvarieties.

mod boundary;
mod quadrics;
mod sing;
mod special;

use alloc::vec::Vec;

use crate::exact::Rational;
use crate::poly::{RatPoly, SubstitutionMap, Vars};
use crate::weyl::{generator_matrices, invariant_polynomials, p5_vars, root_basis, GroupTable, Vec6};
use crate::VarietyError;

pub use boundary::{
    boundary_incidence, boundary_line_l, heisenberg_boundary_check, heisenberg_shift, heisenberg_sign,
    line_intersection, BoundaryReport, HeisenbergReport, ProjectiveLine,
};
pub use quadrics::{
    even_characteristics, m_cycle_check, m_index_permutation, p15_quadric, p15_vars, quadric_vanishing_count,
    restrict_quadrics, Characteristic, QuadricFamily, EMBEDDING,
};
pub use sing::{
    eigenplane_parametrization, generic_smooth_point_gradient, q22_parametrization, quadric_surface_orbit,
    sing_degree_accounting, singular_membership, QuadricSurface, SingAccounting,
};
pub use special::{
    branch_locus_factorization, factor_on_a1a1_space, factor_on_a2_space, igusa_hessian_identity, q36_locate,
    q67_s67_conic_check, r3_cubic, s22_birational_check, s67_octic, A1A1Factors, A2Factors, ConicCheck, HessianIdentity,
    Q36Report, S22MapCheck,
};

/// `S_i = s_i(X₁², X₂², X₃², X₆², X₇²)` for `i = 0..=5`.
fn squared_symmetric(vars: &Vars) -> Vec<RatPoly> {
    let sq_vars = Vars::new(&["Y1", "Y2", "Y3", "Y6", "Y7"]);
    let x = RatPoly::gens(vars);
    let images: Vec<RatPoly> = x[1..].iter().map(|xi| xi.pow(2)).collect();
    let map = SubstitutionMap::from_images(&sq_vars, vars, images).expect("five images");
    (0..=5)
        .map(|k| {
            RatPoly::elementary_symmetric(&sq_vars, k, &[0, 1, 2, 3, 4])
                .and_then(|s| s.substitute(&map))
                .expect("k ≤ 5")
        })
        .collect()
}

/// `F = F₁₀ - X₀X₁X₂X₃X₆X₇·F₄`.
pub fn build_f() -> RatPoly {
    let vars = p5_vars();
    let s = squared_symmetric(&vars);
    let x0 = RatPoly::var(&vars, 0);
    let x0_2 = x0.pow(2);
    let x0_4 = x0.pow(4);
    let c = |n: i64| Rational::from_int(n);
    let f4 = s[1].pow(2).scale(&c(-6)) + s[2].scale(&c(16)) + (&s[1] * &x0_2).scale(&c(4)) + x0_4.scale(&c(2));
    let x0_2_coeff = -s[2].pow(2) + (&s[1] * &s[3]).scale(&c(2)) + s[4].scale(&c(4));
    let f10 = &s[1] * &s[2].pow(2) - (s[1].pow(2) * &s[3]).scale(&c(3)) + (&s[1] * &s[4]).scale(&c(12))
        - s[5].scale(&c(48))
        + x0_2_coeff * &x0_2
        + &s[3] * &x0_4;
    let monomial = RatPoly::gens(&vars).into_iter().fold(RatPoly::one(&vars), |acc, x| acc * x);
    f10 - monomial * f4
}

/// Linear substitution `X ↦ G X` for a 6×6 coordinate matrix.
pub fn linear_map(g: &crate::exact::RatMatrix) -> SubstitutionMap<Rational> {
    let vars = p5_vars();
    let rows: Vec<Vec<Rational>> = (0..6).map(|i| g.row(i).to_vec()).collect();
    SubstitutionMap::linear(&vars, &vars, &rows).expect("6x6")
}

/// Checks `F(g X) = F(X)` for the four generators; reports the first failure.
pub fn verify_generator_invariance(f: &RatPoly) -> Result<(), VarietyError> {
    for (k, g) in generator_matrices().iter().enumerate() {
        if f.substitute(&linear_map(g))? != *f {
            return Err(VarietyError::NotInvariant(k));
        }
    }
    Ok(())
}

/// The scalar `c` with `F = c (a I₈I₂ + b I₆I₂² + d I₅² + e I₂⁵)` for
/// `coeffs = [a, b, d, e]`, e.g. `[11520, -4160, -4608, 25]`.
pub fn verify_invariant_identity(f: &RatPoly, orbit27: &[Vec6], coeffs: [i64; 4]) -> Result<Rational, VarietyError> {
    let inv = invariant_polynomials(orbit27, &[2, 5, 6, 8]);
    let (i2, i5, i6, i8) = (&inv[0], &inv[1], &inv[2], &inv[3]);
    let c = |n: i64| Rational::from_int(n);
    let i2_2 = i2.pow(2);
    let combo = (i8 * i2).scale(&c(coeffs[0]))
        + (i6 * &i2_2).scale(&c(coeffs[1]))
        + i5.pow(2).scale(&c(coeffs[2]))
        + (&i2_2.pow(2) * i2).scale(&c(coeffs[3]));
    f.proportionality(&combo).ok_or(VarietyError::NotProportional("invariant identity"))
}

/// Exhaustive check that `F(g x) = F(x)` at a fixed rational point for every
/// group element; returns the number of failures.
pub fn verify_full_group_invariance(f: &RatPoly, group: &GroupTable, point: &Vec6) -> usize {
    let p = root_basis();
    let pinv = p.inverse().expect("basis");
    let y = pinv.mul_vec(point).expect("6x6");
    let value = f.eval(point);
    group
        .elements()
        .iter()
        .filter(|g| {
            let gy: Vec<Rational> = (0..6)
                .map(|i| {
                    (0..6).fold(Rational::ZERO, |acc, j| acc + &(Rational::from(g.0[i][j]) * &y[j]))
                })
                .collect();
            f.eval(&p.mul_vec(&gy).expect("6x6")) != value
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_shape() {
        let f = build_f();
        assert_eq!(f.num_terms(), 147);
        assert_eq!(f.homogeneous_degree(), Some(10));
        let r = |v: [i64; 6]| v.map(Rational::from_int);
        assert!(f.eval(&r([1, 0, 0, 0, 0, 0])).is_zero());
        assert!(f.eval(&r([1, 1, 0, 0, 0, 0])).is_zero());
        assert!(!f.eval(&r([1, 2, 3, 4, 5, 7])).is_zero());
    }

    #[test]
    fn f_is_symmetric_in_five_variables() {
        let f = build_f();
        for perm in [[0, 2, 1, 3, 4, 5], [0, 1, 2, 4, 3, 5], [0, 5, 2, 3, 4, 1]] {
            assert_eq!(f.permute_vars(&perm), f);
        }
    }

    #[test]
    fn f_is_invariant_under_generators() {
        assert_eq!(verify_generator_invariance(&build_f()), Ok(()));
        let mut broken = build_f();
        broken.add_term(crate::poly::Monomial::from_exponents(&[0, 10, 0, 0, 0, 0]), Rational::ONE);
        assert!(verify_generator_invariance(&broken).is_err());
    }

    #[test]
    fn euler_identity_for_f() {
        let f = build_f();
        let vars = f.vars().clone();
        let mut lhs = RatPoly::zero(&vars);
        for i in 0..6 {
            lhs = lhs + RatPoly::var(&vars, i) * f.partial(i);
        }
        assert_eq!(lhs, f.scale(&Rational::from_int(10)));
    }
}
