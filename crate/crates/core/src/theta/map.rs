//! The map `Θ : H₄ᴹ → P⁵` and vanishing patterns of thetanulls.

use alloc::vec::Vec;

use super::cmat::C64;
use super::{even_theta_nulls, second_order_nulls, theta_nulls, SiegelPoint, ThetaChar, ThetaConfig};
use crate::poly::RatPoly;
use crate::symplectic::named;
use crate::variety::m_cycle_check;
use crate::ThetaError;

/// Largest `|Θ_a - Θ_b|` over pairs in a common `M`-cycle, relative to `max|Θ|`.
pub fn eigenspace_deviation(nulls: &[C64; 16]) -> f64 {
    let scale = nulls.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut worst = 0.0f64;
    for cycle in m_cycle_check() {
        for w in cycle.windows(2) {
            worst = worst.max((nulls[w[0]] - nulls[w[1]]).norm());
        }
    }
    worst / scale.max(f64::MIN_POSITIVE)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaImage {
    /// `(X₀, X₁, X₂, X₃, X₆, X₇)`, scaled to unit maximal modulus.
    pub coords: [C64; 6],
    pub nulls: [C64; 16],
    pub deviation: f64,
}

pub fn theta_map_p5(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<ThetaImage, ThetaError> {
    let r = super::fixed_residual(&named("M").expect("M"), tau.matrix());
    if r > 1e-8 {
        return Err(ThetaError::NotFixed("M", r));
    }
    let nulls = second_order_nulls(tau, cfg)?;
    let deviation = eigenspace_deviation(&nulls);
    if deviation > cfg.tolerance {
        return Err(ThetaError::EigenspaceViolation(deviation));
    }
    let raw = [nulls[0], nulls[1], nulls[2], nulls[3], nulls[6], nulls[7]];
    let scale = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(ThetaImage { coords: raw.map(|z| z / scale), nulls, deviation })
}

/// `|F(x)| / max|xᵢ|^deg`.
pub fn f_residual(f: &RatPoly, x: &[C64]) -> f64 {
    let scale = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let deg = f.total_degree().unwrap_or(0) as i32;
    f.eval_complex(x).norm() / libm::pow(scale, f64::from(deg))
}

/// `θ[ε|ε′](M_C·τ) = sign · θ[ε₂ε₁ε₄ε₃|ε′₂ε′₁ε′₄ε′₃](τ)`; returns the permuted
/// characteristic and the sign.
pub fn mc_theta_sign_rule(ch: ThetaChar) -> (ThetaChar, i8) {
    let swap = |x: u8| ((x & 0b1010) >> 1) | ((x & 0b0101) << 1);
    let e = ch.eps_bits();
    let ep = ch.eps_prime_bits();
    let sign = if (e[1] * ep[1] + e[3] * ep[3]).is_multiple_of(2) { 1 } else { -1 };
    (ThetaChar { eps: swap(ch.eps), eps_prime: swap(ch.eps_prime) }, sign)
}

/// Even characteristics mapped to themselves with sign `-1`; their
/// thetanulls vanish on the `M_C`-fixed locus.
pub fn mc_forced_vanishing() -> Vec<ThetaChar> {
    crate::variety::even_characteristics()
        .into_iter()
        .filter(|&c| mc_theta_sign_rule(c) == (c, -1))
        .collect()
}

/// Largest modulus of the 120 odd thetanulls at `z = 0`.
pub fn odd_null_max(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<f64, ThetaError> {
    let all = theta_nulls(tau, cfg)?;
    let mut worst = 0.0f64;
    for eps in 0..16u8 {
        for eps_prime in 0..16u8 {
            if !(ThetaChar { eps, eps_prime }).is_even() {
                worst = worst.max(all[eps as usize][eps_prime as usize].norm());
            }
        }
    }
    Ok(worst)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VanishingClass {
    Generic,
    EllipticTimesThreefold,
    SurfaceTimesSurface,
    TorusSquaredTimesSurface,
    TorusBoundary,
    Unknown,
}

impl VanishingClass {
    pub fn from_count(n: usize) -> Self {
        match n {
            0 => VanishingClass::Generic,
            28 => VanishingClass::EllipticTimesThreefold,
            36 => VanishingClass::SurfaceTimesSurface,
            96 => VanishingClass::TorusSquaredTimesSurface,
            120 => VanishingClass::TorusBoundary,
            _ => VanishingClass::Unknown,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VanishingProfile {
    pub zero: Vec<ThetaChar>,
    /// Values between the zero threshold and `10³` times it.
    pub ambiguous: usize,
    pub class: VanishingClass,
}

pub fn vanishing_profile(tau: &SiegelPoint, cfg: &ThetaConfig) -> Result<VanishingProfile, ThetaError> {
    let nulls = even_theta_nulls(tau, cfg)?;
    let scale = nulls.iter().map(|(_, z)| z.norm()).fold(0.0, f64::max);
    let zero_cut = cfg.tolerance * scale;
    let zero: Vec<ThetaChar> = nulls.iter().filter(|(_, z)| z.norm() < zero_cut).map(|(c, _)| *c).collect();
    let ambiguous = nulls.iter().filter(|(_, z)| (zero_cut..1e3 * zero_cut).contains(&z.norm())).count();
    let class = if ambiguous == 0 { VanishingClass::from_count(zero.len()) } else { VanishingClass::Unknown };
    Ok(VanishingProfile { zero, ambiguous, class })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_rule() {
        let zero = ThetaChar { eps: 0, eps_prime: 0 };
        assert_eq!(mc_theta_sign_rule(zero), (zero, 1));
        let forced = mc_forced_vanishing();
        assert_eq!(forced.len(), 6);
        assert!(forced.iter().all(|c| c.is_even()));
        // [1000|0000] ↦ [0100|0000].
        assert_eq!(mc_theta_sign_rule(ThetaChar { eps: 8, eps_prime: 0 }).0, ThetaChar { eps: 4, eps_prime: 0 });
    }

    #[test]
    fn classes() {
        assert_eq!(VanishingClass::from_count(28), VanishingClass::EllipticTimesThreefold);
        assert_eq!(VanishingClass::from_count(7), VanishingClass::Unknown);
    }

    #[test]
    fn deviation_of_constant_vector_is_zero() {
        assert_eq!(eigenspace_deviation(&[C64::new(1.0, 0.0); 16]), 0.0);
    }
}
