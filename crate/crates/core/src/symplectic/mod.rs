//! Integer symplectic matrices of size 8 and the structures attached to the
//! order-three element `M`.
//!
//! Conventions: `E = [[0, I], [-I, 0]]`, a matrix `N` is symplectic when
//! `N E Nᵀ = E`, and matrices act on column vectors. The lattice `Z⁸` is a
//! `Z[ω]`-module with ω acting as `M`, with basis `f_i = e_i + e_{i+4}`.

mod lattice;
mod named;
mod unitary;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use crate::exact::{ExactMatrix, Rational};
use crate::SymplecticError;

pub use lattice::{fixed_sublattice_det, hermitian_form, hermitian_gram, integer_kernel, triflection, LatticeVector};
pub use named::{a_block, named, named_table, parse_named_table, write_named_table, NAMES};
pub use unitary::{reduce_to_unitary, unitary_closure, unitary_generators, F4, UnitaryF4Matrix};

/// An 8×8 integer matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympMatrix(pub [[i64; 8]; 8]);

impl SympMatrix {
    pub const IDENTITY: SympMatrix = {
        let mut m = [[0; 8]; 8];
        let mut i = 0;
        while i < 8 {
            m[i][i] = 1;
            i += 1;
        }
        SympMatrix(m)
    };

    pub fn from_blocks(a: &[[i64; 4]; 4], b: &[[i64; 4]; 4], c: &[[i64; 4]; 4], d: &[[i64; 4]; 4]) -> Self {
        let mut m = [[0; 8]; 8];
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = a[i][j];
                m[i][j + 4] = b[i][j];
                m[i + 4][j] = c[i][j];
                m[i + 4][j + 4] = d[i][j];
            }
        }
        SympMatrix(m)
    }

    /// `diag(a, a⁻ᵀ)` for a unimodular 4×4 block.
    pub fn block_diagonal(a: &[[i64; 4]; 4]) -> Self {
        let inv = int_inverse4(a).expect("block is unimodular");
        let mut d = [[0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                d[i][j] = inv[j][i];
            }
        }
        Self::from_blocks(a, &[[0; 4]; 4], &[[0; 4]; 4], &d)
    }

    /// The four 4×4 blocks `a, b, c, d`.
    pub fn blocks(&self) -> [[[i64; 4]; 4]; 4] {
        let mut out = [[[0; 4]; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[0][i][j] = self.0[i][j];
                out[1][i][j] = self.0[i][j + 4];
                out[2][i][j] = self.0[i + 4][j];
                out[3][i][j] = self.0[i + 4][j + 4];
            }
        }
        out
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        let mut m = [[0; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.0[j][i];
            }
        }
        SympMatrix(m)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += other.0[i][j];
            }
        }
        SympMatrix(m)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::IDENTITY;
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Smallest `k ≤ bound` with `N^k = I`.
    pub fn order(&self, bound: u32) -> Option<u32> {
        let mut acc = *self;
        for k in 1..=bound {
            if acc == Self::IDENTITY {
                return Some(k);
            }
            acc = acc * *self;
        }
        None
    }

    pub fn is_symplectic(&self) -> bool {
        let e = j_matrix();
        *self * e * self.transpose() == e
    }

    /// `N⁻¹ = -E Nᵀ E`, valid for symplectic `N`.
    pub fn symplectic_inverse(&self) -> Result<Self, SymplecticError> {
        if !self.is_symplectic() {
            return Err(SymplecticError::NotSymplectic);
        }
        let e = j_matrix();
        Ok(-(e * self.transpose() * e))
    }

    pub fn mul_vec(&self, v: &[i64; 8]) -> [i64; 8] {
        let mut out = [0; 8];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..8).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    pub fn to_rational(&self) -> ExactMatrix<Rational> {
        ExactMatrix::from_fn(8, 8, |i, j| Rational::from_int(self.0[i][j]))
    }

    /// Membership in `Γ₄(2,4)`: `N ≡ I mod 2` and the diagonals of `a bᵀ`
    /// and `c dᵀ` vanish mod 4.
    pub fn in_gamma_2_4(&self) -> bool {
        let congruent = (0..8).all(|i| (0..8).all(|j| (self.0[i][j] - i64::from(i == j)).rem_euclid(2) == 0));
        if !congruent {
            return false;
        }
        let [a, b, c, d] = self.blocks();
        (0..4).all(|i| {
            let ab: i64 = (0..4).map(|k| a[i][k] * b[i][k]).sum();
            let cd: i64 = (0..4).map(|k| c[i][k] * d[i][k]).sum();
            ab.rem_euclid(4) == 0 && cd.rem_euclid(4) == 0
        })
    }
}

impl Mul for SympMatrix {
    type Output = SympMatrix;
    fn mul(self, rhs: SympMatrix) -> SympMatrix {
        let mut m = [[0i64; 8]; 8];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = (0..8).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        SympMatrix(m)
    }
}

impl Neg for SympMatrix {
    type Output = SympMatrix;
    fn neg(self) -> SympMatrix {
        SympMatrix(self.0.map(|row| row.map(|v| -v)))
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{row:?}")?;
        }
        write!(f, "]")
    }
}

/// The standard alternating form `E`.
pub fn j_matrix() -> SympMatrix {
    let i4 = id4();
    let mut neg = [[0; 4]; 4];
    for (k, row) in neg.iter_mut().enumerate() {
        row[k] = -1;
    }
    SympMatrix::from_blocks(&[[0; 4]; 4], &i4, &neg, &[[0; 4]; 4])
}

fn id4() -> [[i64; 4]; 4] {
    let mut m = [[0; 4]; 4];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn int_inverse4(a: &[[i64; 4]; 4]) -> Option<[[i64; 4]; 4]> {
    let m = ExactMatrix::<Rational>::from_i64_rows(a);
    let inv = m.inverse().ok()?;
    let mut out = [[0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = inv[(i, j)].to_i64().filter(|_| inv[(i, j)].is_integer())?;
        }
    }
    Some(out)
}

/// Placement of a symplectic matrix relative to `⟨M⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalizerClass {
    /// `N M = M N`.
    Centralizer,
    /// `N M N⁻¹ = M⁻¹`.
    NormalizerOnly,
    Outside,
}

pub fn classify_normalizer(n: &SympMatrix) -> Result<NormalizerClass, SymplecticError> {
    let inv = n.symplectic_inverse()?;
    let m = named::m();
    let conj = *n * m * inv;
    Ok(if conj == m {
        NormalizerClass::Centralizer
    } else if conj == m * m {
        NormalizerClass::NormalizerOnly
    } else {
        NormalizerClass::Outside
    })
}

/// Outcome of one named matrix identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Checks the relations among the named matrices:
/// `T M T⁻¹ = M_{2,2}`, `M₁₂ = M M_C` has order 12 with `M₁₂⁴ = M`,
/// `M₁₂³ = ±M_C`, and `M_B M_D = M_D M_B`.
pub fn conjugation_identities() -> Vec<IdentityCheck> {
    use alloc::format;
    let m = named::m();
    let t = named::t();
    let m22 = named::m22();
    let mc = named::mc();
    let md = named::md();
    let mb = named::mb();
    let m12 = named::m12();
    let mut out = Vec::new();
    let tmt = t * m * t.symplectic_inverse().expect("T is symplectic");
    out.push(IdentityCheck { name: "T M T^-1 = M22", holds: tmt == m22, detail: format!("{tmt:?}") });
    let order = m12.order(24);
    out.push(IdentityCheck { name: "order(M12) = 12", holds: order == Some(12), detail: format!("{order:?}") });
    let m12_4 = m12.pow(4);
    out.push(IdentityCheck { name: "M12^4 = M", holds: m12_4 == m, detail: format!("{m12_4:?}") });
    let m12_3 = m12.pow(3);
    let sign = if m12_3 == mc {
        "+"
    } else if m12_3 == -mc {
        "-"
    } else {
        "none"
    };
    out.push(IdentityCheck {
        name: "M12^3 = ±MC",
        holds: sign != "none",
        detail: format!("sign {sign}"),
    });
    out.push(IdentityCheck { name: "MB MD = MD MB", holds: mb * md == md * mb, detail: String::new() });
    out
}

/// `M_{β,0}`: `a = d = I`, `c = 0`, `b = diag(2β)`.
pub fn heisenberg_b(beta: [u8; 4]) -> SympMatrix {
    let mut b = [[0; 4]; 4];
    for i in 0..4 {
        b[i][i] = 2 * i64::from(beta[i] & 1);
    }
    SympMatrix::from_blocks(&id4(), &b, &[[0; 4]; 4], &id4())
}

/// `M_{0,γ}`: `a = d = I`, `b = 0`, `c = diag(2γ)`.
pub fn heisenberg_c(gamma: [u8; 4]) -> SympMatrix {
    let mut c = [[0; 4]; 4];
    for i in 0..4 {
        c[i][i] = 2 * i64::from(gamma[i] & 1);
    }
    SympMatrix::from_blocks(&id4(), &[[0; 4]; 4], &c, &id4())
}
