//! The embedding `P⁵ → P¹⁵` and the 136 quadrics `Q[ε|ε′]`.
//!
//! Indices `σ ∈ F₂⁴` are encoded as `8σ₁ + 4σ₂ + 2σ₃ + σ₄`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exact::{Field, Rational};
use crate::poly::{Monomial, RatPoly, SubstitutionMap, Vars};
use crate::symplectic::a_block;
use crate::weyl::p5_vars;

/// For each `P¹⁵` slot, the index of the `P⁵` variable it carries
/// (`0..6` for `X₀, X₁, X₂, X₃, X₆, X₇`).
pub const EMBEDDING: [usize; 16] = [0, 1, 2, 3, 1, 1, 4, 5, 2, 5, 2, 4, 3, 4, 5, 3];

fn bits(i: usize) -> [u8; 4] {
    [(i >> 3) as u8 & 1, (i >> 2) as u8 & 1, (i >> 1) as u8 & 1, i as u8 & 1]
}

fn index(b: [i64; 4]) -> usize {
    b.iter().fold(0, |acc, &x| 2 * acc + x.rem_euclid(2) as usize)
}

fn dot(a: usize, b: usize) -> u32 {
    (a & b).count_ones()
}

/// The permutation `σ ↦ σA` of `F₂⁴`.
pub fn m_index_permutation() -> [usize; 16] {
    let a = a_block();
    core::array::from_fn(|i| {
        let s = bits(i);
        index(core::array::from_fn(|j| (0..4).map(|k| i64::from(s[k]) * a[k][j]).sum()))
    })
}

/// Cycle decomposition of `σ ↦ σA`, each cycle starting at its smallest index.
pub fn m_cycle_check() -> Vec<Vec<usize>> {
    let p = m_index_permutation();
    let mut seen = [false; 16];
    let mut cycles = Vec::new();
    for start in 0..16 {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push(i);
            i = p[i];
        }
        cycles.push(cycle);
    }
    cycles
}

/// A theta characteristic `[ε|ε′]`, each half encoded as a 4-bit index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Characteristic {
    pub eps: u8,
    pub eps_prime: u8,
}

impl Characteristic {
    pub fn is_even(&self) -> bool {
        dot(self.eps as usize, self.eps_prime as usize).is_multiple_of(2)
    }

    pub fn eps_bits(&self) -> [u8; 4] {
        bits(self.eps as usize)
    }

    pub fn eps_prime_bits(&self) -> [u8; 4] {
        bits(self.eps_prime as usize)
    }

    pub fn label(&self) -> String {
        let b = |v: [u8; 4]| v.iter().map(|x| if *x == 1 { '1' } else { '0' }).collect::<String>();
        format!("[{}|{}]", b(self.eps_bits()), b(self.eps_prime_bits()))
    }
}

/// The 136 even characteristics, ordered by `(ε, ε′)`.
pub fn even_characteristics() -> Vec<Characteristic> {
    let mut out = Vec::new();
    for eps in 0..16u8 {
        for eps_prime in 0..16u8 {
            let c = Characteristic { eps, eps_prime };
            if c.is_even() {
                out.push(c);
            }
        }
    }
    out
}

pub fn p15_vars() -> Vars {
    let names: Vec<String> = (0..16).map(|i| format!("Z{i}")).collect();
    Vars::new(&names)
}

/// `Q[ε|ε′] = Σ_σ (-1)^{(σ+ε)·ε′} X_σ X_{σ+ε}` on `P¹⁵`.
pub fn p15_quadric(ch: Characteristic) -> RatPoly {
    let vars = p15_vars();
    let mut q = RatPoly::zero(&vars);
    let (e, ep) = (ch.eps as usize, ch.eps_prime as usize);
    for s in 0..16 {
        let sign = if dot(s ^ e, ep).is_multiple_of(2) { 1 } else { -1 };
        q.add_term(Monomial::var(s).mul(&Monomial::var(s ^ e)), Rational::from_int(sign));
    }
    q
}

/// The 136 quadrics restricted to `P⁵`, in the order of [`even_characteristics`].
#[derive(Clone, Debug)]
pub struct QuadricFamily {
    pub characteristics: Vec<Characteristic>,
    pub quadrics: Vec<RatPoly>,
}

impl QuadricFamily {
    pub fn len(&self) -> usize {
        self.quadrics.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quadrics.is_empty()
    }

    pub fn get(&self, ch: Characteristic) -> Option<&RatPoly> {
        self.characteristics.iter().position(|c| *c == ch).map(|i| &self.quadrics[i])
    }

    /// Indices of the quadrics vanishing identically under `param`.
    pub fn vanishing<C: Field>(&self, param: &SubstitutionMap<C>) -> Vec<usize> {
        self.quadrics
            .iter()
            .enumerate()
            .filter(|(_, q)| q.map_coeffs(|c| C::from(c.clone())).substitute(param).expect("P5 ring").is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// Indices of the quadrics vanishing at an exact point.
    pub fn vanishing_at<C: Field>(&self, point: &[C]) -> Vec<usize> {
        self.quadrics
            .iter()
            .enumerate()
            .filter(|(_, q)| q.map_coeffs(|c| C::from(c.clone())).eval(point).is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// The pullback map `P¹⁵ ← P⁵` given by [`EMBEDDING`].
pub fn embedding_map() -> SubstitutionMap<Rational> {
    let p5 = p5_vars();
    let images = EMBEDDING.iter().map(|&v| RatPoly::var(&p5, v)).collect();
    SubstitutionMap::from_images(&p15_vars(), &p5, images).expect("16 images")
}

pub fn restrict_quadrics() -> QuadricFamily {
    let chars = even_characteristics();
    let map = embedding_map();
    let quadrics = chars.iter().map(|&c| p15_quadric(c).substitute(&map).expect("P15 ring")).collect();
    QuadricFamily { characteristics: chars, quadrics }
}

pub fn quadric_vanishing_count<C: Field>(param: &SubstitutionMap<C>, family: &QuadricFamily) -> usize {
    family.vanishing(param).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_of_m() {
        let p = m_index_permutation();
        assert_eq!(p[10], 2);
        assert_eq!(p[0], 0);
        let cycles = m_cycle_check();
        let expected: Vec<Vec<usize>> = alloc::vec![
            alloc::vec![0],
            alloc::vec![1, 4, 5],
            alloc::vec![2, 8, 10],
            alloc::vec![3, 12, 15],
            alloc::vec![6, 13, 11],
            alloc::vec![7, 9, 14],
        ];
        assert_eq!(cycles, expected);
    }

    #[test]
    fn embedding_is_constant_on_cycles() {
        let p = m_index_permutation();
        for i in 0..16 {
            assert_eq!(EMBEDDING[i], EMBEDDING[p[i]]);
        }
    }

    #[test]
    fn family_basics() {
        let fam = restrict_quadrics();
        assert_eq!(fam.len(), 136);
        assert_eq!(even_characteristics().len(), 136);
        let q00 = fam.get(Characteristic { eps: 0, eps_prime: 0 }).unwrap();
        let v = p5_vars();
        let x = RatPoly::gens(&v);
        let mut expected = x[0].pow(2);
        for xi in &x[1..] {
            expected = expected + xi.pow(2).scale(&Rational::from_int(3));
        }
        assert_eq!(*q00, expected);
    }

    #[test]
    fn exactly_one_quadric_is_m_invariant() {
        let p = m_index_permutation();
        let invariant = even_characteristics()
            .into_iter()
            .filter(|&c| {
                let q = p15_quadric(c);
                q.permute_vars(&p) == q
            })
            .count();
        assert_eq!(invariant, 1);
    }

    #[test]
    fn counts_at_cusp() {
        let fam = restrict_quadrics();
        let r = |v: [i64; 6]| v.map(Rational::from_int);
        assert_eq!(fam.vanishing_at(&r([1, 0, 0, 0, 0, 0])).len(), 120);
    }
}
