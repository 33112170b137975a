//! Points of the fixed loci in `H₄`.

use alloc::vec::Vec;

use rand::Rng;

use super::cmat::{self, CMat2, CMat4, C64};
use super::SiegelPoint;
use crate::symplectic::{named, triflection, SympMatrix};
use crate::ThetaError;

/// `N·τ = (aτ + b)(cτ + d)⁻¹`.
pub fn act(n: &SympMatrix, tau: &CMat4) -> Result<CMat4, ThetaError> {
    let [a, b, c, d] = n.blocks().map(|x| cmat::from_int4(&x));
    let num = cmat::add4(&cmat::mul4(&a, tau), &b);
    let den = cmat::add4(&cmat::mul4(&c, tau), &d);
    let inv = cmat::inverse4(&den).ok_or(ThetaError::NotPositiveDefinite)?;
    Ok(cmat::mul4(&num, &inv))
}

/// `max|N·τ - τ| / max|τ|`.
pub fn fixed_residual(n: &SympMatrix, tau: &CMat4) -> f64 {
    match act(n, tau) {
        Ok(m) => cmat::dist4(&m, tau) / cmat::max_abs4(tau).max(f64::MIN_POSITIVE),
        Err(_) => f64::INFINITY,
    }
}

/// `τ(b) = [[b + bᵀ, -b], [-bᵀ, b + bᵀ]]`.
pub fn hermite_tau(b: &CMat2) -> CMat4 {
    let mut t = [[cmat::ZERO; 4]; 4];
    for i in 0..2 {
        for j in 0..2 {
            let s = b[i][j] + b[j][i];
            t[i][j] = s;
            t[i + 2][j + 2] = s;
            t[i][j + 2] = -b[i][j];
            t[i + 2][j] = -b[j][i];
        }
    }
    t
}

const FIXED_TOL: f64 = 1e-10;

fn require_fixed(name: &'static str, tau: &CMat4) -> Result<(), ThetaError> {
    let n = named(name).expect("listed name");
    let r = fixed_residual(&n, tau);
    if r > FIXED_TOL {
        return Err(ThetaError::NotFixed(name, r));
    }
    Ok(())
}

/// `τ(b)`, checked to lie in `H₄` and to be fixed by `M`.
pub fn sample_hermite_point(b: &CMat2) -> Result<SiegelPoint, ThetaError> {
    let p = SiegelPoint::new(hermite_tau(b))?;
    require_fixed("M", p.matrix())?;
    Ok(p)
}

/// `b = iI + δ` with real and imaginary parts of `δ` uniform in `[-0.2, 0.2]`,
/// redrawn until `τ(b) ∈ H₄`.
pub fn random_b(rng: &mut impl Rng) -> CMat2 {
    loop {
        let b: CMat2 = core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let base = if i == j { cmat::I } else { cmat::ZERO };
                base + C64::new(rng.gen_range(-0.2..=0.2), rng.gen_range(-0.2..=0.2))
            })
        });
        if SiegelPoint::new(hermite_tau(&b)).is_ok() {
            return b;
        }
    }
}

/// Fixed loci inside `H₄ᴹ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedLocusTag {
    /// `H₄ᴹ`, parametrized by the four entries of `b`.
    M,
    /// `H₄^{M,M_B}`: `b = τ₂` symmetric, parameters `τ₁₁, τ₁₂, τ₂₂`.
    MMb,
    /// `H^{M₁₂}`: `b = [[p, q], [-q, p]]`, parameters `p, q`.
    M12,
    /// `H₄^{M,M_B,M_D}`: `τ₂ = [[t, u], [u, t]]`, parameters `t, u`.
    MMbMd,
}

impl FixedLocusTag {
    pub fn matrices(&self) -> &'static [&'static str] {
        match self {
            FixedLocusTag::M => &["M"],
            FixedLocusTag::MMb => &["M", "MB"],
            FixedLocusTag::M12 => &["M", "MC", "M12"],
            FixedLocusTag::MMbMd => &["M", "MB", "MD"],
        }
    }

    pub fn param_count(&self) -> usize {
        match self {
            FixedLocusTag::M => 4,
            FixedLocusTag::MMb => 3,
            FixedLocusTag::M12 | FixedLocusTag::MMbMd => 2,
        }
    }

    fn b(&self, p: &[C64]) -> CMat2 {
        match self {
            FixedLocusTag::M => [[p[0], p[1]], [p[2], p[3]]],
            FixedLocusTag::MMb => [[p[0], p[1]], [p[1], p[2]]],
            FixedLocusTag::M12 => [[p[0], p[1]], [-p[1], p[0]]],
            FixedLocusTag::MMbMd => [[p[0], p[1]], [p[1], p[0]]],
        }
    }
}

pub fn sample_fixed_locus(tag: FixedLocusTag, params: &[C64]) -> Result<SiegelPoint, ThetaError> {
    if params.len() != tag.param_count() {
        return Err(ThetaError::BadConfig("wrong number of locus parameters"));
    }
    let p = SiegelPoint::new(hermite_tau(&tag.b(params)))?;
    for name in tag.matrices() {
        require_fixed(name, p.matrix())?;
    }
    Ok(p)
}

/// Random parameters near `b = iI`, redrawn until the point lies in `H₄`.
pub fn random_locus_params(tag: FixedLocusTag, rng: &mut impl Rng) -> Vec<C64> {
    loop {
        let mut p: Vec<C64> =
            (0..tag.param_count()).map(|_| C64::new(rng.gen_range(-0.2..=0.2), rng.gen_range(-0.2..=0.2))).collect();
        let diag: &[usize] = match tag {
            FixedLocusTag::M => &[0, 3],
            FixedLocusTag::MMb => &[0, 2],
            FixedLocusTag::M12 | FixedLocusTag::MMbMd => &[0],
        };
        for &k in diag {
            p[k] += cmat::I;
        }
        if SiegelPoint::new(hermite_tau(&tag.b(&p))).is_ok() {
            return p;
        }
    }
}

fn b_from_real(x: &[f64; 8]) -> CMat2 {
    [[C64::new(x[0], x[4]), C64::new(x[1], x[5])], [C64::new(x[2], x[6]), C64::new(x[3], x[7])]]
}

fn residual_vec(n: &SympMatrix, x: &[f64; 8]) -> Option<[f64; 32]> {
    let tau = hermite_tau(&b_from_real(x));
    let moved = act(n, &tau).ok()?;
    let mut r = [0.0; 32];
    for i in 0..4 {
        for j in 0..4 {
            let d = moved[i][j] - tau[i][j];
            r[4 * i + j] = d.re;
            r[16 + 4 * i + j] = d.im;
        }
    }
    Some(r)
}

/// A point of `H₄ᴹ` fixed by the triflection, found by damped Gauss–Newton
/// on `N·τ(b) = τ(b)` from `b = start`.
pub fn triflection_fixed_point(start: &CMat2) -> Result<SiegelPoint, ThetaError> {
    let n = triflection();
    let mut x = [
        start[0][0].re,
        start[0][1].re,
        start[1][0].re,
        start[1][1].re,
        start[0][0].im,
        start[0][1].im,
        start[1][0].im,
        start[1][1].im,
    ];
    let norm = |r: &[f64; 32]| libm::sqrt(r.iter().map(|v| v * v).sum::<f64>());
    let mut res = f64::INFINITY;
    for _ in 0..100 {
        let r = residual_vec(&n, &x).ok_or(ThetaError::SolverFailed(res))?;
        res = norm(&r);
        if res < 1e-14 {
            break;
        }
        let h = 1e-7;
        let mut jac = [[0.0; 8]; 32];
        for k in 0..8 {
            let mut xk = x;
            xk[k] += h;
            let rk = residual_vec(&n, &xk).ok_or(ThetaError::SolverFailed(res))?;
            for i in 0..32 {
                jac[i][k] = (rk[i] - r[i]) / h;
            }
        }
        let mut jtj = [[0.0; 8]; 8];
        let mut rhs = [0.0; 8];
        for a in 0..8 {
            for b in 0..8 {
                jtj[a][b] = (0..32).map(|i| jac[i][a] * jac[i][b]).sum();
            }
            jtj[a][a] += 1e-12;
            rhs[a] = -(0..32).map(|i| jac[i][a] * r[i]).sum::<f64>();
        }
        let step = cmat::solve_real(jtj, rhs).ok_or(ThetaError::SolverFailed(res))?;
        for k in 0..8 {
            x[k] += step[k];
        }
    }
    if res > 1e-12 {
        return Err(ThetaError::SolverFailed(res));
    }
    let p = SiegelPoint::new(hermite_tau(&b_from_real(&x)))?;
    require_fixed("M", p.matrix())?;
    Ok(p)
}

/// Test points with known vanishing behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Generic,
    /// Diagonal `b`, mapping to a point of `Q₂₂`.
    Q22,
    /// Triflection-fixed, mapping to a point of `W₃`.
    W3,
    /// `b = diag(iT, y)` with large `T`, near a boundary line.
    BoundaryLine,
    /// `b = diag(iT, iT)` with large `T`, near a cusp.
    Cusp,
}

const DEGENERATE_T: f64 = 20.0;

pub fn profile_sample(kind: ProfileKind, rng: &mut impl Rng) -> Result<SiegelPoint, ThetaError> {
    let near_i = |rng: &mut dyn rand::RngCore| C64::new(rng.gen_range(-0.2..=0.2), 1.0 + rng.gen_range(-0.2..=0.2));
    let big = C64::new(0.0, DEGENERATE_T);
    match kind {
        ProfileKind::Generic => sample_hermite_point(&random_b(rng)),
        ProfileKind::Q22 => sample_hermite_point(&[[near_i(rng), cmat::ZERO], [cmat::ZERO, near_i(rng)]]),
        ProfileKind::W3 => {
            let start = [[cmat::I, C64::new(0.0, 0.1)], [C64::new(0.0, -0.2), cmat::I]];
            let jitter = C64::new(0.0, rng.gen_range(-0.05..=0.05));
            triflection_fixed_point(&[[start[0][0] + jitter, start[0][1]], [start[1][0], start[1][1]]])
        }
        ProfileKind::BoundaryLine => sample_hermite_point(&[[big, cmat::ZERO], [cmat::ZERO, near_i(rng)]]),
        ProfileKind::Cusp => sample_hermite_point(&[[big, cmat::ZERO], [cmat::ZERO, big]]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hermite_points_are_fixed_by_m() {
        let p = sample_hermite_point(&[[cmat::I, cmat::ZERO], [cmat::ZERO, cmat::I]]).unwrap();
        assert!(fixed_residual(&named("M").unwrap(), p.matrix()) < 1e-14);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            assert!(sample_hermite_point(&random_b(&mut rng)).is_ok());
        }
        let zero = [[cmat::ZERO; 2]; 2];
        assert_eq!(sample_hermite_point(&zero), Err(ThetaError::NotPositiveDefinite));
    }

    #[test]
    fn tagged_loci() {
        let i = cmat::I;
        assert!(sample_fixed_locus(FixedLocusTag::MMb, &[i, cmat::ZERO, i]).is_ok());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for tag in [FixedLocusTag::M, FixedLocusTag::MMb, FixedLocusTag::M12, FixedLocusTag::MMbMd] {
            let p = random_locus_params(tag, &mut rng);
            assert!(sample_fixed_locus(tag, &p).is_ok(), "{tag:?}");
        }
        // A generic M-fixed point is not fixed by M_B.
        let p = sample_fixed_locus(FixedLocusTag::M, &random_locus_params(FixedLocusTag::M, &mut rng)).unwrap();
        assert!(fixed_residual(&named("MB").unwrap(), p.matrix()) > 1e-3);
        assert!(sample_fixed_locus(FixedLocusTag::M12, &[i]).is_err());
    }

    #[test]
    fn triflection_point() {
        let start = [[cmat::I, C64::new(0.0, 0.1)], [C64::new(0.0, -0.2), cmat::I]];
        let p = triflection_fixed_point(&start).unwrap();
        assert!(fixed_residual(&triflection(), p.matrix()) < 1e-12);
    }
}
