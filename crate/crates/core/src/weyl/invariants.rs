use alloc::vec::Vec;

use super::{b_weights, p5_vars, vec6, EigenplaneBasis, GroupTable, Vec6};
use crate::exact::{Cyclotomic, Rational};
use crate::poly::{CycPoly, RatPoly, Vars};

/// The W(E6)-orbit of `(1, 0, 0, 0, 0, 0)`, in sorted order.
pub fn orbit_vectors_27(group: &GroupTable) -> Vec<Vec6> {
    group.orbit(&vec6([1, 0, 0, 0, 0, 0]), false).into_iter().collect()
}

/// The linear form `X ↦ b(X, v)`.
pub fn b_linear_form(vars: &Vars, v: &Vec6) -> RatPoly {
    let w = b_weights();
    let coeffs: Vec<Rational> = (0..6).map(|i| w[i].clone() * &v[i]).collect();
    RatPoly::linear(vars, &coeffs)
}

/// `I_k = Σ_i b(X, v_i)^k` over the given vectors.
pub fn invariant_polynomial(vectors: &[Vec6], k: u32) -> RatPoly {
    let vars = p5_vars();
    let mut acc = RatPoly::zero(&vars);
    for v in vectors {
        acc = acc + b_linear_form(&vars, v).pow(k);
    }
    acc
}

/// `I_k` for each listed degree, sharing the powers of each linear form.
pub fn invariant_polynomials(vectors: &[Vec6], degrees: &[u32]) -> Vec<RatPoly> {
    let vars = p5_vars();
    let top = degrees.iter().copied().max().unwrap_or(0);
    let mut sums: Vec<RatPoly> = (0..=top).map(|_| RatPoly::zero(&vars)).collect();
    for v in vectors {
        let l = b_linear_form(&vars, v);
        let mut p = RatPoly::one(&vars);
        for s in sums.iter_mut().skip(1) {
            p = &p * &l;
            *s = &*s + &p;
        }
    }
    degrees.iter().map(|&d| sums[d as usize].clone()).collect()
}

/// Parameters of a plane `X = W t`.
pub fn plane_vars() -> Vars {
    Vars::new(&["t0", "t1", "t2"])
}

/// `I_k(W t)` for a plane spanned by the columns of `W`, computed as
/// `Σ_i b(W t, v_i)^k` in the parameters `t`.
pub fn restricted_invariant(vectors: &[Vec6], plane: &EigenplaneBasis, k: u32) -> CycPoly {
    let t = plane_vars();
    let w = b_weights();
    let cols: Vec<Vec<Cyclotomic>> = (0..3).map(|j| plane.column(j)).collect();
    let mut acc = CycPoly::zero(&t);
    for v in vectors {
        // b(W t, v) = Σ_j t_j b(W_j, v).
        let coeffs: Vec<Cyclotomic> = cols
            .iter()
            .map(|c| {
                (0..6).fold(Cyclotomic::zero(), |s, i| s + &(c[i].clone() * &Cyclotomic::from(w[i].clone() * &v[i])))
            })
            .collect();
        acc = acc + CycPoly::linear(&t, &coeffs).pow(k);
    }
    acc
}
