//! Factorizations of `F` on special linear subspaces.

use alloc::vec::Vec;

use crate::exact::{Cyclotomic, RatMatrix, Rational};
use crate::poly::{CycPoly, Monomial, RatPoly, SubstitutionMap, Vars};
use crate::weyl::{p5_vars, root_basis, simple_roots, vec6, GroupTable, Vec6};
use crate::VarietyError;

use super::quadrics::QuadricFamily;
use super::linear_map;

fn four_vars(names: [&str; 4]) -> Vars {
    Vars::new(&names)
}

/// Pullback of `f` along `P⁵ ← target` with each `P⁵` coordinate sent to a
/// target variable (`slots[i]` is the target index of `Xᵢ`, or `None` for 0).
fn restrict(f: &RatPoly, target: &Vars, slots: [Option<usize>; 6]) -> Result<RatPoly, VarietyError> {
    let images = slots.iter().map(|s| s.map_or_else(|| RatPoly::zero(target), |i| RatPoly::var(target, i))).collect();
    Ok(f.substitute(&SubstitutionMap::from_images(&p5_vars(), target, images)?)?)
}

fn c(n: i64) -> Rational {
    Rational::from_int(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Factors {
    pub q22: RatPoly,
    pub f22: RatPoly,
}

/// `F(X₀, X₁, X₂, X₃, X₃, X₃) = q₂₂² f₂₂` with `q₂₂ = X₀X₃ - X₁X₂`.
pub fn factor_on_a2_space(f: &RatPoly) -> Result<A2Factors, VarietyError> {
    let v = four_vars(["X0", "X1", "X2", "X3"]);
    let fz = restrict(f, &v, [Some(0), Some(1), Some(2), Some(3), Some(3), Some(3)])?;
    let x = RatPoly::gens(&v);
    let q22 = &x[0] * &x[3] - &x[1] * &x[2];
    let f22 = fz.exact_divide(&q22.pow(2))?.ok_or(VarietyError::DivisionFailed("F|Z by q22^2"))?;
    Ok(A2Factors { q22, f22 })
}

/// The octic `X₀²X₁²X₂²X₃² - X₁⁴X₂⁴ - X₁⁴X₃⁴ - X₂⁴X₃⁴ + X₁⁴X₂²X₃² + X₁²X₂⁴X₃² + X₁²X₂²X₃⁴`.
pub fn s67_octic() -> RatPoly {
    let v = four_vars(["X0", "X1", "X2", "X3"]);
    let terms: [([u32; 4], i64); 7] = [
        ([2, 2, 2, 2], 1),
        ([0, 4, 4, 0], -1),
        ([0, 4, 0, 4], -1),
        ([0, 0, 4, 4], -1),
        ([0, 4, 2, 2], 1),
        ([0, 2, 4, 2], 1),
        ([0, 2, 2, 4], 1),
    ];
    RatPoly::from_terms(&v, terms.iter().map(|(e, k)| (Monomial::from_exponents(e), c(*k))))
}

fn q67_poly(vars: &Vars) -> RatPoly {
    let x = RatPoly::gens(vars);
    x[0].pow(2) - x[1].pow(2) - x[2].pow(2) - x[3].pow(2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1A1Factors {
    pub q67: RatPoly,
    /// The quotient `F|/q₆₇`, equal to `scalar · s₆₇`.
    pub quotient: RatPoly,
    pub scalar: Rational,
    /// Whether all partials of `s₆₇` vanish on the line `X₁ = X₂ = 0`.
    pub line_singular: bool,
}

pub fn factor_on_a1a1_space(f: &RatPoly) -> Result<A1A1Factors, VarietyError> {
    let v = four_vars(["X0", "X1", "X2", "X3"]);
    let restricted = restrict(f, &v, [Some(0), Some(1), Some(2), Some(3), None, None])?;
    let q67 = q67_poly(&v);
    let quotient = restricted.exact_divide(&q67)?.ok_or(VarietyError::DivisionFailed("F|(X6=X7=0) by q67"))?;
    let s67 = s67_octic();
    let scalar = quotient.proportionality(&s67).ok_or(VarietyError::NotProportional("quotient and s67"))?;
    let st = Vars::new(&["s", "t"]);
    let line = SubstitutionMap::from_images(
        &v,
        &st,
        alloc::vec![RatPoly::var(&st, 0), RatPoly::zero(&st), RatPoly::zero(&st), RatPoly::var(&st, 1)],
    )?;
    let line_singular = s67.gradient().iter().all(|d| d.substitute(&line).is_ok_and(|p| p.is_zero()));
    Ok(A1A1Factors { q67, quotient, scalar, line_singular })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessianIdentity {
    pub ratio: Rational,
    pub restricted_terms: usize,
    pub hessian_terms: usize,
}

/// `F(X₁+X₂+X₃+X₆+X₇, X₁, …, X₇) = c · det Hess(G)` with `G = s₂² - 4s₄`.
pub fn igusa_hessian_identity(f: &RatPoly) -> Result<HessianIdentity, VarietyError> {
    let v = Vars::new(&["X1", "X2", "X3", "X6", "X7"]);
    let x = RatPoly::gens(&v);
    let sum = x.iter().fold(RatPoly::zero(&v), |acc, xi| acc + xi);
    let mut images = alloc::vec![sum];
    images.extend(x.iter().cloned());
    let restricted = f.substitute(&SubstitutionMap::from_images(&p5_vars(), &v, images)?)?;
    let all = [0, 1, 2, 3, 4];
    let s2 = RatPoly::elementary_symmetric(&v, 2, &all)?;
    let s4 = RatPoly::elementary_symmetric(&v, 4, &all)?;
    let g = s2.pow(2) - s4.scale(&c(4));
    let hess = g.hessian_det(&all);
    let ratio = restricted.proportionality(&hess).ok_or(VarietyError::NotProportional("F|H and Hess(G)"))?;
    Ok(HessianIdentity { ratio, restricted_terms: restricted.num_terms(), hessian_terms: hess.num_terms() })
}

/// Checks `Z₀⁴+Z₁⁴+Z₂⁴-Z₀²Z₁²-Z₀²Z₂²-Z₁²Z₂² = (Z₀²+ω²Z₁²+ωZ₂²)(Z₀²+ωZ₁²+ω²Z₂²)`,
/// that conjugation swaps the factors, and that both vanish at `(1:±1:±1)`.
pub fn branch_locus_factorization() -> bool {
    let v = Vars::new(&["Z0", "Z1", "Z2"]);
    let z: Vec<CycPoly> = CycPoly::gens(&v).iter().map(|p| p.pow(2)).collect();
    let w = Cyclotomic::omega();
    let w2 = Cyclotomic::omega_bar();
    let a = &z[0] + &z[1].scale(&w2) + z[2].scale(&w);
    let b = &z[0] + &z[1].scale(&w) + z[2].scale(&w2);
    let quartic = |i: usize| z[i].pow(2);
    let lhs = quartic(0) + quartic(1) + quartic(2) - &z[0] * &z[1] - &z[0] * &z[2] - &z[1] * &z[2];
    let product = &a * &b;
    let swapped = a.conj() == b && b.conj() == a;
    let one = Cyclotomic::one();
    let points = [1i64, -1].iter().flat_map(|&s| [1i64, -1].map(move |t| (s, t)));
    let shared = points.into_iter().all(|(s, t)| {
        let p = [one.clone(), Cyclotomic::from(s), Cyclotomic::from(t)];
        a.eval(&p).is_zero() && b.eval(&p).is_zero()
    });
    lhs == product && swapped && shared
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Q36Report {
    /// The quadric factor of `F|W′` in the variables `X₀, X₁, X₃, X₆`, monic.
    pub q36: RatPoly,
    pub cofactor_degree: u32,
    pub vanishing_quadrics: usize,
    pub identically_zero_on_w: usize,
}

fn root_coordinates(v: &Vec6) -> [i32; 6] {
    let p = root_basis();
    let r = p.inverse().expect("basis").mul_vec(v).expect("6x6");
    core::array::from_fn(|i| r[i].to_i64().and_then(|n| i32::try_from(n).ok()).expect("root lattice"))
}

fn apply_int(g: &[[i32; 6]; 6], v: &[i32; 6]) -> [i32; 6] {
    core::array::from_fn(|i| (0..6).map(|j| g[i][j] * v[j]).sum())
}

/// Finds `g` moving `{(0,0,0,0,1,±1)}` onto `{±α₃, ±α₆}` and splits `F|W′`
/// (with `W′ = {X₁ = X₂, X₆ = X₇}`) against the transported `q₆₇`.
pub fn q36_locate(f: &RatPoly, group: &GroupTable, family: &QuadricFamily) -> Result<Q36Report, VarietyError> {
    let sources = [root_coordinates(&vec6([0, 0, 0, 0, 1, 1])), root_coordinates(&vec6([0, 0, 0, 0, 1, -1]))];
    let roots = simple_roots();
    let targets: Vec<[i32; 6]> = [&roots[2], &roots[5]]
        .iter()
        .flat_map(|r| {
            let rc = root_coordinates(r);
            [rc, rc.map(|x| -x)]
        })
        .collect();
    let g = group
        .elements()
        .iter()
        .find(|g| {
            let a = apply_int(&g.0, &sources[0]);
            let b = apply_int(&g.0, &sources[1]);
            targets.contains(&a) && targets.contains(&b) && a != b.map(|x| -x)
        })
        .ok_or(VarietyError::NoSuchElement("root pair onto {alpha3, alpha6}"))?;
    let ginv: RatMatrix = g.inverse().coordinates();

    let w = four_vars(["X0", "X1", "X3", "X6"]);
    let slots = [Some(0), Some(1), Some(1), Some(2), Some(3), Some(3)];
    let fw = restrict(f, &w, slots)?;
    let q67 = q67_poly(&p5_vars());
    let moved = q67.substitute(&linear_map(&ginv))?;
    let quadric = restrict(&moved, &w, slots)?;
    let cofactor = fw.exact_divide(&quadric)?.ok_or(VarietyError::DivisionFailed("F|W' by transported q67"))?;
    let q36 = quadric.monic();

    let mut vanishing_quadrics = 0;
    let mut identically_zero_on_w = 0;
    for q in &family.quadrics {
        let r = restrict(q, &w, slots)?;
        if r.is_zero() {
            identically_zero_on_w += 1;
        } else if r.exact_divide(&q36)?.is_some() {
            vanishing_quadrics += 1;
        }
    }
    Ok(Q36Report {
        q36,
        cofactor_degree: cofactor.homogeneous_degree().unwrap_or(0),
        vanishing_quadrics,
        identically_zero_on_w,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicCheck {
    /// `s₆₇∘φ = ratio · Π(X₀ ± X₁ ± X₂ ± X₃)∘φ`.
    pub ratio: Rational,
    pub nonzero_planes: usize,
    pub s67_even: bool,
}

/// Pulls `s₆₇` and the eight planes `X₀ = ±X₁ ± X₂ ± X₃` back along the
/// parametrization `(p²+q²+r², -p²+q²+r², 2pq, 2pr)` of `Q₆₇`.
pub fn q67_s67_conic_check() -> Result<ConicCheck, VarietyError> {
    let v = four_vars(["X0", "X1", "X2", "X3"]);
    let pqr = Vars::new(&["p", "q", "r"]);
    let t = RatPoly::gens(&pqr);
    let (p2, q2, r2) = (t[0].pow(2), t[1].pow(2), t[2].pow(2));
    let images = alloc::vec![
        &p2 + &q2 + &r2,
        -p2.clone() + &q2 + &r2,
        (&t[0] * &t[1]).scale(&c(2)),
        (&t[0] * &t[2]).scale(&c(2)),
    ];
    let phi = SubstitutionMap::from_images(&v, &pqr, images)?;
    debug_assert!(q67_poly(&v).substitute(&phi).is_ok_and(|p| p.is_zero()));

    let x = RatPoly::gens(&v);
    let mut planes = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            for s3 in [1, -1] {
                let plane = &x[0] + &x[1].scale(&c(s1)) + x[2].scale(&c(s2)) + x[3].scale(&c(s3));
                planes.push(plane.substitute(&phi)?);
            }
        }
    }
    let nonzero_planes = planes.iter().filter(|p| !p.is_zero()).count();
    let product = planes.iter().fold(RatPoly::one(&pqr), |acc, p| acc * p);
    let s67 = s67_octic();
    let ratio = s67
        .substitute(&phi)?
        .proportionality(&product)
        .ok_or(VarietyError::NotProportional("s67 and the eight planes on Q67"))?;
    let s67_even = s67.substitute(&SubstitutionMap::linear(
        &v,
        &v,
        &[
            alloc::vec![c(1), c(0), c(0), c(0)],
            alloc::vec![c(0), c(-1), c(0), c(0)],
            alloc::vec![c(0), c(0), c(1), c(0)],
            alloc::vec![c(0), c(0), c(0), c(1)],
        ],
    )?)? == s67;
    Ok(ConicCheck { ratio, nonzero_planes, s67_even })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S22MapCheck {
    /// `ψ∘φ = q₂₂·id` for the projection `ψ` to the first four coordinates.
    pub backward_after_forward: bool,
    /// `φ∘ψ∘φ = q₂₂³·φ`.
    pub forward_after_backward: bool,
    /// Lines on which `q₂₂` and `r₃` both vanish.
    pub lines: usize,
    pub lines_on_s22: usize,
    pub lines_singular_on_s22: usize,
}

/// `r₃ = X₃(X₀ - X₁ - X₂ + X₃)(X₀ + X₁ + X₂ + X₃)`.
pub fn r3_cubic(vars: &Vars) -> RatPoly {
    let x = RatPoly::gens(vars);
    &x[3] * &(&x[0] - &x[1] - &x[2] + &x[3]) * (&x[0] + &x[1] + &x[2] + &x[3])
}

/// The map `S₂₂ → P⁴`, `X ↦ (X₀q₂₂ : … : X₃q₂₂ : r₃)`, checked against its
/// inverse on a symbolic point, and the six lines `{q₂₂ = r₃ = 0}` checked
/// against `S₂₂ = {f₂₂ = 0}`.
pub fn s22_birational_check(f: &RatPoly) -> Result<S22MapCheck, VarietyError> {
    let a2 = factor_on_a2_space(f)?;
    let v = a2.q22.vars().clone();
    let x = RatPoly::gens(&v);
    let q22 = &a2.q22;
    let mut phi: Vec<RatPoly> = x.iter().map(|xi| xi * q22).collect();
    phi.push(r3_cubic(&v));

    let y = Vars::new(&["Y0", "Y1", "Y2", "Y3", "Y4"]);
    let psi = SubstitutionMap::from_images(&v, &y, RatPoly::gens(&y)[..4].to_vec())?;
    let phi_map = SubstitutionMap::from_images(&y, &v, phi.clone())?;
    let backward_after_forward = (0..4).all(|i| phi[i] == &x[i] * q22);
    let q22_cubed = q22.pow(3);
    let mut forward_after_backward = true;
    for p in &phi {
        // p(ψ(φ(X))) = p(q₂₂ X) with p homogeneous of degree 3.
        let back = p.substitute(&psi)?.substitute(&phi_map)?;
        forward_after_backward &= back == p * &q22_cubed;
    }

    // Two lines in each plane factor of r₃.
    let pts: [([i64; 4], [i64; 4]); 6] = [
        ([1, 0, 0, 0], [0, 0, 1, 0]),
        ([1, 0, 0, 0], [0, 1, 0, 0]),
        ([1, 0, 1, 0], [0, 1, 0, 1]),
        ([1, 1, 0, 0], [0, 0, 1, 1]),
        ([1, 0, -1, 0], [0, -1, 0, 1]),
        ([1, -1, 0, 0], [0, 0, -1, 1]),
    ];
    let st = Vars::new(&["s", "t"]);
    let (s, t) = (RatPoly::var(&st, 0), RatPoly::var(&st, 1));
    let mut lines = 0;
    let mut lines_on_s22 = 0;
    let mut lines_singular_on_s22 = 0;
    let r3 = r3_cubic(&v);
    let grad = a2.f22.gradient();
    for (p, q) in pts {
        let images =
            (0..4).map(|i| s.scale(&Rational::from_int(p[i])) + t.scale(&Rational::from_int(q[i]))).collect();
        let line = SubstitutionMap::from_images(&v, &st, images)?;
        if q22.substitute(&line)?.is_zero() && r3.substitute(&line)?.is_zero() {
            lines += 1;
        }
        if a2.f22.substitute(&line)?.is_zero() {
            lines_on_s22 += 1;
        }
        let mut singular = true;
        for d in &grad {
            singular &= d.substitute(&line)?.is_zero();
        }
        if singular {
            lines_singular_on_s22 += 1;
        }
    }
    Ok(S22MapCheck { backward_after_forward, forward_after_backward, lines, lines_on_s22, lines_singular_on_s22 })
}
