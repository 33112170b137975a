//! Numerical theta constants on the Siegel space `H₄`.
//!
//! Convention: `θ[ε|ε′](τ, z) = Σ_m exp(πi[(m+ε/2)τ(m+ε/2)ᵀ + 2(m+ε/2)(z+ε′/2)ᵀ])`,
//! summed over `|mᵢ + εᵢ/2| ≤ N`. Characteristics are 4-bit indices
//! `8ε₁ + 4ε₂ + 2ε₃ + ε₄`.

mod cmat;
mod isogeny;
mod map;
mod sample;

use core::f64::consts::PI;

use alloc::vec::Vec;

pub use crate::variety::Characteristic as ThetaChar;
use crate::ThetaError;

pub use cmat::{CMat2, CMat4, C64};
pub use isogeny::{isogeny_diagram_check, isogeny_diagram_residual, isogeny_diagram_symbolic};
pub use map::{
    eigenspace_deviation, f_residual, mc_forced_vanishing, mc_theta_sign_rule, odd_null_max, theta_map_p5,
    vanishing_profile, ThetaImage, VanishingClass, VanishingProfile,
};
pub use sample::{
    act, fixed_residual, hermite_tau, profile_sample, random_b, random_locus_params, sample_fixed_locus,
    sample_hermite_point, triflection_fixed_point, FixedLocusTag, ProfileKind,
};

/// A point of `H₄`: symmetric with positive definite imaginary part.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SiegelPoint {
    tau: CMat4,
}

impl SiegelPoint {
    pub fn new(tau: CMat4) -> Result<Self, ThetaError> {
        let scale = cmat::max_abs4(&tau).max(1.0);
        if cmat::dist4(&tau, &cmat::transpose4(&tau)) > 1e-12 * scale {
            return Err(ThetaError::NotSymmetric);
        }
        let im: [[f64; 4]; 4] = core::array::from_fn(|i| core::array::from_fn(|j| 0.5 * (tau[i][j].im + tau[j][i].im)));
        if !cmat::is_positive_definite(&im) {
            return Err(ThetaError::NotPositiveDefinite);
        }
        Ok(SiegelPoint { tau })
    }

    pub fn matrix(&self) -> &CMat4 {
        &self.tau
    }
}

/// Truncation radius and zero tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaConfig {
    pub radius: u32,
    pub tolerance: f64,
}

impl Default for ThetaConfig {
    fn default() -> Self {
        ThetaConfig { radius: 8, tolerance: 1e-8 }
    }
}

impl ThetaConfig {
    pub fn new(radius: u32, tolerance: f64) -> Result<Self, ThetaError> {
        if radius < 1 {
            return Err(ThetaError::BadConfig("radius must be at least 1"));
        }
        if !(tolerance > 0.0 && tolerance < 1.0) {
            return Err(ThetaError::BadConfig("tolerance must lie in (0, 1)"));
        }
        Ok(ThetaConfig { radius, tolerance })
    }
}

fn bit(idx: u8, j: usize) -> u8 {
    (idx >> (3 - j)) & 1
}

/// Sums `exp(πi[s·vτvᵀ + 2v zᵀ + v ε′ᵀ])` over `v = m + ε/2` for all sixteen `ε′`
/// at once. Returns the sums and the largest ratio of the outermost shell to
/// the total absolute mass.
fn series(tau: &CMat4, s: f64, eps: u8, z: &[C64; 4], cfg: &ThetaConfig) -> Result<[C64; 16], ThetaError> {
    let n = cfg.radius as i64;
    let ranges: [(i64, i64); 4] = core::array::from_fn(|j| if bit(eps, j) == 1 { (-n, n - 1) } else { (-n, n) });
    let half: [f64; 4] = core::array::from_fn(|j| f64::from(bit(eps, j)) / 2.0);
    let mut sums = [cmat::ZERO; 16];
    let mut shell = [cmat::ZERO; 16];
    let mut mass = 0.0;
    let mut m = [0i64; 4];
    let on_shell = |m: &[i64; 4]| (0..4).any(|j| m[j] == ranges[j].0 || m[j] == ranges[j].1);
    for m0 in ranges[0].0..=ranges[0].1 {
        m[0] = m0;
        for m1 in ranges[1].0..=ranges[1].1 {
            m[1] = m1;
            for m2 in ranges[2].0..=ranges[2].1 {
                m[2] = m2;
                for m3 in ranges[3].0..=ranges[3].1 {
                    m[3] = m3;
                    let v: [f64; 4] = core::array::from_fn(|j| m[j] as f64 + half[j]);
                    let mut q = cmat::ZERO;
                    for a in 0..4 {
                        let mut row = cmat::ZERO;
                        for b in 0..4 {
                            row += tau[a][b] * v[b];
                        }
                        q += row * v[a];
                    }
                    let lin: C64 = (0..4).map(|j| z[j] * v[j]).sum();
                    let base = (cmat::I * PI * (q * s + lin * 2.0)).exp();
                    mass += base.norm();
                    let phases: [C64; 4] = core::array::from_fn(|j| (cmat::I * PI * v[j]).exp());
                    let mut terms = [base; 16];
                    for k in 1..16usize {
                        let low = k.trailing_zeros() as usize;
                        terms[k] = terms[k & (k - 1)] * phases[3 - low];
                    }
                    let outer = on_shell(&m);
                    for k in 0..16 {
                        sums[k] += terms[k];
                        if outer {
                            shell[k] += terms[k];
                        }
                    }
                }
            }
        }
    }
    let worst = shell.iter().map(|x| x.norm()).fold(0.0, f64::max) / mass.max(f64::MIN_POSITIVE);
    if worst > cfg.tolerance * 1e-3 {
        return Err(ThetaError::NotConverged(worst));
    }
    Ok(sums)
}

pub fn theta_value(ch: ThetaChar, tau: &SiegelPoint, z: &[C64; 4], cfg: &ThetaConfig) -> Result<C64, ThetaError> {
    Ok(series(&tau.tau, 1.0, ch.eps, z, cfg)?[ch.eps_prime as usize])
}

/// All 256 values `θ[ε|ε′](τ, 0)`, indexed `[ε][ε′]`.
pub fn theta_nulls(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<[[C64; 16]; 16], ThetaError> {
    let z = [cmat::ZERO; 4];
    let mut out = [[cmat::ZERO; 16]; 16];
    for (eps, row) in out.iter_mut().enumerate() {
        *row = series(&tau.tau, 1.0, eps as u8, &z, cfg)?;
    }
    Ok(out)
}

/// The 136 even thetanulls in the order of [`crate::variety::even_characteristics`].
pub fn even_theta_nulls(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<Vec<(ThetaChar, C64)>, ThetaError> {
    let all = theta_nulls(tau, cfg)?;
    Ok(crate::variety::even_characteristics()
        .into_iter()
        .map(|c| (c, all[c.eps as usize][c.eps_prime as usize]))
        .collect())
}

/// `Θ_σ(τ) = θ[σ|0](2τ, 0)` for `σ = 0..16`.
pub fn second_order_nulls(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<[C64; 16], ThetaError> {
    let z = [cmat::ZERO; 4];
    let mut out = [cmat::ZERO; 16];
    for (eps, v) in out.iter_mut().enumerate() {
        *v = series(&tau.tau, 2.0, eps as u8, &z, cfg)?[0];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diag_i() -> SiegelPoint {
        let t: CMat4 = core::array::from_fn(|i| core::array::from_fn(|j| if i == j { cmat::I } else { cmat::ZERO }));
        SiegelPoint::new(t).unwrap()
    }

    #[test]
    fn product_structure_at_i() {
        let one_dim: f64 = (-20i32..=20).map(|n| libm::exp(-PI * f64::from(n * n))).sum();
        let v = theta_value(ThetaChar { eps: 0, eps_prime: 0 }, &diag_i(), &[cmat::ZERO; 4], &ThetaConfig::default())
            .unwrap();
        assert!((v.re - libm::pow(one_dim, 4.0)).abs() < 1e-12 && v.im.abs() < 1e-12);
        assert!((v.re - 1.3932).abs() < 1e-4);
    }

    #[test]
    fn odd_characteristics_vanish() {
        let all = theta_nulls(&diag_i(), &ThetaConfig::default()).unwrap();
        for c in 0..16u8 {
            for d in 0..16u8 {
                let ch = ThetaChar { eps: c, eps_prime: d };
                if !ch.is_even() {
                    assert!(all[c as usize][d as usize].norm() < 1e-14);
                }
            }
        }
    }

    #[test]
    fn parity_in_z() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let b = random_b(&mut rng);
        let tau = sample_hermite_point(&b).unwrap();
        let z: [C64; 4] = core::array::from_fn(|_| C64::new(rng.gen_range(-0.3..0.3), rng.gen_range(-0.3..0.3)));
        let mz = z.map(|x| -x);
        let cfg = ThetaConfig::default();
        for (eps, eps_prime) in [(0u8, 0u8), (5, 3), (15, 15), (9, 1)] {
            let ch = ThetaChar { eps, eps_prime };
            let a = theta_value(ch, &tau, &z, &cfg).unwrap();
            let b = theta_value(ch, &tau, &mz, &cfg).unwrap();
            let sign = if ch.is_even() { 1.0 } else { -1.0 };
            assert!((a - b * sign).norm() < 1e-10 * a.norm().max(1.0));
        }
    }

    #[test]
    fn validation() {
        let mut t = *diag_i().matrix();
        t[0][1] = C64::new(0.5, 0.0);
        assert_eq!(SiegelPoint::new(t), Err(ThetaError::NotSymmetric));
        let mut t = *diag_i().matrix();
        t[2][2] = C64::new(0.0, -1.0);
        assert_eq!(SiegelPoint::new(t), Err(ThetaError::NotPositiveDefinite));
        assert!(ThetaConfig::new(0, 1e-8).is_err());
        assert!(ThetaConfig::new(8, 1.5).is_err());
    }

    #[test]
    fn small_radius_is_rejected_for_small_imaginary_part() {
        let t: CMat4 =
            core::array::from_fn(|i| core::array::from_fn(|j| if i == j { C64::new(0.0, 0.05) } else { cmat::ZERO }));
        let tau = SiegelPoint::new(t).unwrap();
        let cfg = ThetaConfig::new(2, 1e-8).unwrap();
        assert!(matches!(second_order_nulls(&tau, &cfg), Err(ThetaError::NotConverged(_))));
    }
}
