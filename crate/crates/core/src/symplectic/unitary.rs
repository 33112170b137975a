use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use super::lattice::f_basis_change;
use super::{classify_normalizer, named, NormalizerClass, SympMatrix};
use crate::SymplecticError;

/// An element of the field with four elements, `{0, 1, ω, ω² = ω + 1}`,
/// stored as the bit pattern of `a + b·ω`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA2: F4 = F4(3);

    /// Reduction of `a + b·ω` modulo 2.
    pub fn from_coeffs(a: i64, b: i64) -> F4 {
        F4((a.rem_euclid(2) as u8) | ((b.rem_euclid(2) as u8) << 1))
    }

    pub fn add(self, o: F4) -> F4 {
        F4(self.0 ^ o.0)
    }

    pub fn mul(self, o: F4) -> F4 {
        let (a1, b1) = (self.0 & 1, self.0 >> 1);
        let (a2, b2) = (o.0 & 1, o.0 >> 1);
        // (a1 + b1ω)(a2 + b2ω) with ω² = ω + 1.
        let a = (a1 & a2) ^ (b1 & b2);
        let b = (a1 & b2) ^ (a2 & b1) ^ (b1 & b2);
        F4(a | (b << 1))
    }

    /// The Frobenius `x ↦ x²`, which is the conjugation of `F₄/F₂`.
    pub fn conj(self) -> F4 {
        self.mul(self)
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl fmt::Debug for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w2"][self.0 as usize])
    }
}

/// A 4×4 matrix over `F₄`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UnitaryF4Matrix(pub [[F4; 4]; 4]);

impl UnitaryF4Matrix {
    pub const IDENTITY: UnitaryF4Matrix = {
        let mut m = [[F4::ZERO; 4]; 4];
        let mut i = 0;
        while i < 4 {
            m[i][i] = F4::ONE;
            i += 1;
        }
        UnitaryF4Matrix(m)
    };

    pub fn scalar(s: F4) -> Self {
        let mut m = [[F4::ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = s;
        }
        UnitaryF4Matrix(m)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m = [[F4::ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..4).fold(F4::ZERO, |acc, k| acc.add(self.0[i][k].mul(o.0[k][j])));
            }
        }
        UnitaryF4Matrix(m)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = [[F4::ZERO; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.0[j][i].conj();
            }
        }
        UnitaryF4Matrix(m)
    }

    /// `U* U = I`; the reduced Gram matrix `diag(1, 1, -1, -1)` is the identity mod 2.
    pub fn is_unitary(&self) -> bool {
        self.adjoint().mul(self) == Self::IDENTITY
    }

    pub fn pack(&self) -> u32 {
        let mut out = 0u32;
        for (k, v) in self.0.iter().flatten().enumerate() {
            out |= u32::from(v.0) << (2 * k);
        }
        out
    }

    pub fn unpack(bits: u32) -> Self {
        let mut m = [[F4::ZERO; 4]; 4];
        for (k, v) in m.iter_mut().flatten().enumerate() {
            *v = F4(((bits >> (2 * k)) & 3) as u8);
        }
        UnitaryF4Matrix(m)
    }
}

/// Writes `N` in the `Z[ω]`-basis `f_1, …, f_4` and reduces modulo 2.
pub fn reduce_to_unitary(n: &SympMatrix) -> Result<UnitaryF4Matrix, SymplecticError> {
    if classify_normalizer(n)? != NormalizerClass::Centralizer {
        return Err(SymplecticError::NotInCentralizer);
    }
    let (p, pinv) = f_basis_change();
    let x = pinv.mul(&n.to_rational()).and_then(|t| t.mul(&p)).expect("8x8");
    let mut m = [[F4::ZERO; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let a = x[(i, j)].to_i64().expect("integral");
            let b = x[(i + 4, j)].to_i64().expect("integral");
            *v = F4::from_coeffs(a, b);
        }
    }
    Ok(UnitaryF4Matrix(m))
}

/// Centralizer elements built from the named matrices: the Schreier
/// generators of `C_M ∩ ⟨named⟩` for the transversal `{I, M_B}`.
pub fn unitary_generators() -> Vec<SympMatrix> {
    let mb = named::mb();
    let mb_inv = mb.symplectic_inverse().expect("symplectic");
    let mut out = Vec::new();
    for name in ["M", "MB", "Md", "Me", "Mf", "Mpr", "Mip", "MC", "MD"] {
        let g = named::named(name).expect("named");
        match classify_normalizer(&g).expect("symplectic") {
            NormalizerClass::Centralizer => {
                out.push(g);
                out.push(mb * g * mb_inv);
            }
            NormalizerClass::NormalizerOnly => {
                out.push(g * mb_inv);
                out.push(mb * g);
            }
            NormalizerClass::Outside => {}
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All elements of the group generated by `gens`, as packed matrices.
pub fn unitary_closure(gens: &[UnitaryF4Matrix]) -> BTreeSet<u32> {
    let mut seen = BTreeSet::new();
    seen.insert(UnitaryF4Matrix::IDENTITY.pack());
    let mut frontier = alloc::vec![UnitaryF4Matrix::IDENTITY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.pack()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn f4_arithmetic() {
        assert_eq!(F4::OMEGA.mul(F4::OMEGA), F4::OMEGA2);
        assert_eq!(F4::OMEGA.mul(F4::OMEGA2), F4::ONE);
        assert_eq!(F4::OMEGA.conj(), F4::OMEGA2);
        assert_eq!(F4::ONE.add(F4::OMEGA), F4::OMEGA2);
    }

    #[test]
    fn reductions_of_basic_elements() {
        assert_eq!(reduce_to_unitary(&SympMatrix::IDENTITY), Ok(UnitaryF4Matrix::IDENTITY));
        assert_eq!(reduce_to_unitary(&named::m()), Ok(UnitaryF4Matrix::scalar(F4::OMEGA)));
        assert_eq!(reduce_to_unitary(&named::mb()), Err(SymplecticError::NotInCentralizer));
        for g in unitary_generators() {
            assert!(reduce_to_unitary(&g).unwrap().is_unitary());
        }
    }

    #[test]
    fn named_elements_generate_the_unitary_group() {
        let gens: Vec<_> = unitary_generators().iter().map(|g| reduce_to_unitary(g).unwrap()).collect();
        assert_eq!(unitary_closure(&gens).len(), 77760);
    }

    #[test]
    fn pack_round_trip() {
        let u = reduce_to_unitary(&named::mc()).unwrap();
        assert_eq!(UnitaryF4Matrix::unpack(u.pack()), u);
    }

    proptest! {
        #[test]
        fn reduction_is_multiplicative(word in proptest::collection::vec(0usize..8, 1..5), word2 in proptest::collection::vec(0usize..8, 1..5)) {
            let gens = unitary_generators();
            let build = |w: &[usize]| w.iter().fold(SympMatrix::IDENTITY, |acc, &k| acc * gens[k % gens.len()]);
            let (a, b) = (build(&word), build(&word2));
            let lhs = reduce_to_unitary(&(a * b)).unwrap();
            let rhs = reduce_to_unitary(&a).unwrap().mul(&reduce_to_unitary(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
