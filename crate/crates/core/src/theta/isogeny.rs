//! Period-matrix diagrams `M Ω_τ = Ω_τ ᵗA⁻¹` and `N Ω_τ = Ω_{τ₂} N′`.

use alloc::vec::Vec;

use super::cmat::{CMat2, C64};
use crate::exact::Rational;
use crate::poly::{RatPoly, Vars};
use crate::symplectic::named;

type PolyMatrix = Vec<Vec<RatPoly>>;

fn int_matrix(vars: &Vars, rows: &[Vec<i64>]) -> PolyMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| RatPoly::constant(vars, Rational::from_int(x))).collect())
        .collect()
}

fn mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let vars = a[0][0].vars().clone();
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| (0..b.len()).fold(RatPoly::zero(&vars), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// `[[τ], [I]]` for a square polynomial matrix `τ`.
fn period(tau: &PolyMatrix) -> PolyMatrix {
    let vars = tau[0][0].vars().clone();
    let n = tau.len();
    let mut out = tau.clone();
    for i in 0..n {
        out.push((0..n).map(|j| if i == j { RatPoly::one(&vars) } else { RatPoly::zero(&vars) }).collect());
    }
    out
}

fn block(entries: &[[usize; 2]; 2], x: &[RatPoly], signs: &[[i64; 2]; 2]) -> [[RatPoly; 2]; 2] {
    core::array::from_fn(|i| core::array::from_fn(|j| x[entries[i][j]].scale(&Rational::from_int(signs[i][j]))))
}

fn assemble(blocks: [[[[RatPoly; 2]; 2]; 2]; 2]) -> PolyMatrix {
    (0..4).map(|i| (0..4).map(|j| blocks[i / 2][j / 2][i % 2][j % 2].clone()).collect()).collect()
}

/// Checks both diagrams with symbolic entries: `b` with four free entries for
/// the first, symmetric `τ₂` with three for the second.
pub fn isogeny_diagram_symbolic() -> bool {
    // M Ω_τ = Ω_τ ᵗA⁻¹ on H₄ᴹ.
    let bv = Vars::new(&["b11", "b12", "b21", "b22"]);
    let b = RatPoly::gens(&bv);
    let sum = [b[0].scale(&Rational::from_int(2)), &b[1] + &b[2], &b[1] + &b[2], b[3].scale(&Rational::from_int(2))];
    let s: [[RatPoly; 2]; 2] = [[sum[0].clone(), sum[1].clone()], [sum[2].clone(), sum[3].clone()]];
    let neg_b = block(&[[0, 1], [2, 3]], &b, &[[-1, -1], [-1, -1]]);
    let neg_bt = block(&[[0, 2], [1, 3]], &b, &[[-1, -1], [-1, -1]]);
    let tau = assemble([[s.clone(), neg_b], [neg_bt, s]]);
    let m = named("M").expect("M");
    let m_rows: Vec<Vec<i64>> = m.0.iter().map(|r| r.to_vec()).collect();
    let d_rows: Vec<Vec<i64>> = m.blocks()[3].iter().map(|r| r.to_vec()).collect();
    let omega = period(&tau);
    let lhs = mul(&int_matrix(&bv, &m_rows), &omega);
    let rhs = mul(&omega, &int_matrix(&bv, &d_rows));
    let first = lhs == rhs;

    // N Ω_τ = Ω_{τ₂} N′ on H₄^{M,M_B}.
    let tv = Vars::new(&["t11", "t12", "t22"]);
    let t = RatPoly::gens(&tv);
    let idx = [[0, 1], [1, 2]];
    let t2 = block(&idx, &t, &[[1, 1], [1, 1]]);
    let two_t2 = block(&idx, &t, &[[2, 2], [2, 2]]);
    let neg_t2 = block(&idx, &t, &[[-1, -1], [-1, -1]]);
    let omega_tau = period(&assemble([[two_t2.clone(), neg_t2.clone()], [neg_t2, two_t2]]));
    let tau2: PolyMatrix = t2.iter().map(|r| r.to_vec()).collect();
    let omega_tau2 = period(&tau2);
    let n = int_matrix(
        &tv,
        &[
            alloc::vec![1, 0, 1, 0, 0, 0, 0, 0],
            alloc::vec![0, 1, 0, 1, 0, 0, 0, 0],
            alloc::vec![0, 0, 0, 0, 1, 0, 1, 0],
            alloc::vec![0, 0, 0, 0, 0, 1, 0, 1],
        ],
    );
    let n_prime = int_matrix(&tv, &[alloc::vec![1, 0, 1, 0], alloc::vec![0, 1, 0, 1]]);
    let second = mul(&n, &omega_tau) == mul(&omega_tau2, &n_prime);
    first && second
}

/// Largest entry of `|N Ω_τ - Ω_{τ₂} N′|` at a numeric `τ₂`.
pub fn isogeny_diagram_residual(tau2: &CMat2) -> f64 {
    let tau = super::hermite_tau(tau2);
    let omega: Vec<[C64; 4]> = (0..8)
        .map(|i| {
            if i < 4 {
                tau[i]
            } else {
                core::array::from_fn(|j| if j == i - 4 { super::cmat::ONE } else { super::cmat::ZERO })
            }
        })
        .collect();
    // N sums rows (1,3), (2,4), (5,7), (6,8) of Ω_τ.
    let pairs = [(0, 2), (1, 3), (4, 6), (5, 7)];
    let mut worst = 0.0f64;
    for (r, (a, b)) in pairs.iter().enumerate() {
        for c in 0..4 {
            let lhs = omega[*a][c] + omega[*b][c];
            let rhs = if r < 2 {
                tau2[r][c % 2]
            } else if r - 2 == c % 2 {
                super::cmat::ONE
            } else {
                super::cmat::ZERO
            };
            worst = worst.max((lhs - rhs).norm());
        }
    }
    worst
}

pub fn isogeny_diagram_check(tau2: &CMat2) -> bool {
    isogeny_diagram_symbolic() && isogeny_diagram_residual(tau2) < 1e-12
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::cmat::I;

    #[test]
    fn diagrams_commute() {
        assert!(isogeny_diagram_symbolic());
        let t2 = [[I, super::super::cmat::ZERO], [super::super::cmat::ZERO, I]];
        assert!(isogeny_diagram_residual(&t2) < 1e-12);
        assert!(isogeny_diagram_check(&t2));
    }

    #[test]
    fn asymmetric_tau2_breaks_the_diagram() {
        let t2 = [[I, C64::new(0.3, 0.0)], [C64::new(-0.3, 0.0), I]];
        assert!(isogeny_diagram_residual(&t2) > 0.1);
    }
}
