use alloc::vec;
use alloc::vec::Vec;

use super::{j_matrix, named, SympMatrix};
use crate::exact::{Cyclotomic, ExactMatrix, Rational};
use crate::SymplecticError;

/// A vector of `Z⁸`, viewed as a `Z[ω]`-module element with ω acting as `M`.
pub type LatticeVector = [i64; 8];

fn form(x: &LatticeVector, y: &LatticeVector) -> i64 {
    let ey = j_matrix().mul_vec(y);
    x.iter().zip(&ey).map(|(a, b)| a * b).sum()
}

/// `H_M(x, y) = E(x, M y) - ω E(x, y)`.
pub fn hermitian_form(x: &LatticeVector, y: &LatticeVector) -> Cyclotomic {
    let my = named::m().mul_vec(y);
    Cyclotomic::from_ints(form(x, &my), -form(x, y))
}

/// `f_i = e_i + e_{i+4}` for `i = 0..4`.
pub fn f_basis() -> [LatticeVector; 4] {
    let mut out = [[0; 8]; 4];
    for (i, v) in out.iter_mut().enumerate() {
        v[i] = 1;
        v[i + 4] = 1;
    }
    out
}

/// Gram matrix of `H_M` on `f_1, …, f_4`.
pub fn hermitian_gram() -> Vec<Vec<Cyclotomic>> {
    let f = f_basis();
    f.iter().map(|x| f.iter().map(|y| hermitian_form(x, y)).collect()).collect()
}

/// Basis of the saturated lattice `{x ∈ Zⁿ : A x = 0}`.
///
/// Row-reduces `[Aᵀ | I]` over the integers with unimodular operations; the
/// right halves of rows whose left half vanishes span the kernel lattice.
pub fn integer_kernel(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut rows: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            let mut r: Vec<i128> = (0..m).map(|k| i128::from(a[k][i])).collect();
            r.extend((0..n).map(|j| i128::from(i == j)));
            r
        })
        .collect();
    let mut top = 0;
    for c in 0..m {
        loop {
            let Some(p) = (top..n).filter(|&i| rows[i][c] != 0).min_by_key(|&i| rows[i][c].abs()) else {
                break;
            };
            rows.swap(top, p);
            let mut clean = true;
            for i in top + 1..n {
                if rows[i][c] != 0 {
                    let q = rows[i][c].div_euclid(rows[top][c]);
                    let pivot = rows[top].clone();
                    for (v, pv) in rows[i].iter_mut().zip(&pivot) {
                        *v -= q * pv;
                    }
                    clean &= rows[i][c] == 0;
                }
            }
            if clean {
                top += 1;
                break;
            }
        }
    }
    rows.into_iter()
        .filter(|r| r[..m].iter().all(|&v| v == 0))
        .map(|r| r[m..].iter().map(|&v| i64::try_from(v).expect("kernel entry fits")).collect())
        .collect()
}

/// Determinant of `E` restricted to the lattice of vectors fixed by `N`.
pub fn fixed_sublattice_det(n: &SympMatrix) -> Result<Rational, SymplecticError> {
    let a: Vec<Vec<i64>> =
        (0..8).map(|i| (0..8).map(|j| n.entry(i, j) - i64::from(i == j)).collect()).collect();
    let basis = integer_kernel(&a);
    if basis.len() != 4 {
        return Err(SymplecticError::WrongKernelRank(basis.len()));
    }
    let vecs: Vec<LatticeVector> = basis.iter().map(|b| b.clone().try_into().expect("length 8")).collect();
    let gram = ExactMatrix::from_fn(4, 4, |i, j| Rational::from_int(form(&vecs[i], &vecs[j])));
    Ok(gram.det().expect("square"))
}

/// The order-three element acting as ω on `Z[ω] f_1` and trivially on the
/// other three basis vectors. It is symplectic and commutes with `M`.
pub fn triflection() -> SympMatrix {
    let (p, pinv) = f_basis_change();
    // In the basis f_1..f_4, M f_1..M f_4: f_1 ↦ M f_1 and M f_1 ↦ -f_1 - M f_1.
    let mut q = ExactMatrix::<Rational>::identity(8);
    q[(0, 0)] = Rational::ZERO;
    q[(4, 0)] = Rational::ONE;
    q[(0, 4)] = Rational::from_int(-1);
    q[(4, 4)] = Rational::from_int(-1);
    let n = p.mul(&q).and_then(|pq| pq.mul(&pinv)).expect("8x8");
    let mut out = [[0; 8]; 8];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = n[(i, j)].to_i64().expect("integral");
        }
    }
    SympMatrix(out)
}

/// `P = [f_1 … f_4, M f_1 … M f_4]` and its inverse.
pub(super) fn f_basis_change() -> (ExactMatrix<Rational>, ExactMatrix<Rational>) {
    let m = named::m();
    let f = f_basis();
    let mut cols: Vec<Vec<Rational>> = vec![];
    for v in f.iter() {
        cols.push(v.iter().map(|&x| Rational::from_int(x)).collect());
    }
    for v in f.iter() {
        cols.push(m.mul_vec(v).iter().map(|&x| Rational::from_int(x)).collect());
    }
    let p = ExactMatrix::from_columns(&cols).expect("8 columns");
    let inv = p.inverse().expect("f-basis is a Z[ω]-basis");
    (p, inv)
}
