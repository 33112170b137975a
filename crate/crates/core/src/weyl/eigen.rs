use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{GroupTable, WeylElement};
use crate::exact::{Cyclotomic, ExactMatrix, Field, RatMatrix, Rational};
use crate::WeylError;

/// Coefficients of `det(xI - g)`, from `x⁶` down to the constant term.
pub fn characteristic_polynomial(g: &WeylElement) -> Vec<Rational> {
    // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
    let n = 6;
    let a = ExactMatrix::<Rational>::from_fn(n, n, |i, j| Rational::from_int(i64::from(g.0[i][j])));
    let mut coeffs = alloc::vec![Rational::ONE];
    let mut mk = ExactMatrix::<Rational>::zeros(n, n);
    for k in 1..=n {
        let prev_c = coeffs.last().expect("nonempty").clone();
        mk = a.mul(&mk).and_then(|t| t.add(&RatMatrix::identity(n).scale(&prev_c))).expect("square");
        let amk = a.mul(&mk).expect("square");
        let tr = (0..n).fold(Rational::ZERO, |acc, i| acc + &amk[(i, i)]);
        coeffs.push(-(tr * &Rational::new(1, k as i64)));
    }
    coeffs
}

/// `(x² + x + 1)³`.
fn class_c_charpoly() -> Vec<Rational> {
    [1, 3, 6, 7, 6, 3, 1].iter().map(|&c| Rational::from_int(c)).collect()
}

/// Elements of order three with characteristic polynomial `(x² + x + 1)³`.
pub fn conjugacy_class_c(group: &GroupTable) -> BTreeSet<WeylElement> {
    let target = class_c_charpoly();
    group
        .elements()
        .iter()
        // Order three without eigenvalue 1 forces trace -3; cheap prefilter.
        .filter(|g| g.trace() == -3 && !g.is_identity() && g.mul(g).mul(g).is_identity())
        .filter(|g| characteristic_polynomial(g) == target)
        .copied()
        .collect()
}

/// The order-three element `g₃`.
pub fn g3() -> WeylElement {
    let m = ExactMatrix::<Rational>::from_i64_rows(&[
        [-1, 0, 0, 0, 0, -3],
        [0, -1, -1, 1, 1, 0],
        [0, 1, -1, 1, -1, 0],
        [0, -1, -1, -1, -1, 0],
        [0, -1, 1, 1, -1, 0],
        [1, 0, 0, 0, 0, -1],
    ])
    .scale(&Rational::new(1, 2));
    WeylElement::from_coordinates(&m).expect("g3 lies in W(E6)")
}

/// A three-dimensional eigenspace over `Q(ω)`, stored as a 6×3 matrix in
/// reduced column echelon form so that equal spans compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EigenplaneBasis {
    columns: ExactMatrix<Cyclotomic>,
}

impl EigenplaneBasis {
    pub fn from_columns(cols: &[Vec<Cyclotomic>]) -> Result<Self, WeylError> {
        let m = ExactMatrix::from_columns(cols).map_err(|_| WeylError::EigenspaceDimension(cols.len()))?;
        let echelon = m.column_echelon();
        if echelon.cols() != 3 {
            return Err(WeylError::EigenspaceDimension(echelon.cols()));
        }
        Ok(Self { columns: echelon })
    }

    pub fn matrix(&self) -> &ExactMatrix<Cyclotomic> {
        &self.columns
    }

    pub fn column(&self, j: usize) -> Vec<Cyclotomic> {
        self.columns.column(j)
    }

    pub fn conj(&self) -> Self {
        Self { columns: self.columns.map(Field::conj).column_echelon() }
    }

    /// Image under a coordinate matrix.
    pub fn transform(&self, g: &RatMatrix) -> Self {
        let gc = g.map(|x| Cyclotomic::from(x.clone()));
        Self { columns: gc.mul(&self.columns).expect("6x6 times 6x3").column_echelon() }
    }
}

/// The `λ`-eigenspace of `g` acting on `Q(ω)⁶`.
pub fn eigenplane(g: &WeylElement, lambda: &Cyclotomic) -> Result<EigenplaneBasis, WeylError> {
    let gc = g.coordinates().map(|x| Cyclotomic::from(x.clone()));
    let shifted = gc.sub(&ExactMatrix::identity(6).scale(lambda)).expect("square");
    let kernel = shifted.kernel();
    if kernel.len() != 3 {
        return Err(WeylError::EigenspaceDimension(kernel.len()));
    }
    for v in &kernel {
        let gv = gc.mul_vec(v).expect("6x6");
        debug_assert!(gv.iter().zip(v).all(|(a, b)| *a == lambda.clone() * b));
    }
    EigenplaneBasis::from_columns(&kernel)
}

/// The span of the columns `(3, 0, 0, 0, 0, -1-2ω)`, `(0, 1, 0, ω, -ω², 0)`, `(0, 0, 1, -ω², -ω, 0)`.
pub fn w3_basis() -> EigenplaneBasis {
    let c = Cyclotomic::from_ints;
    let w = Cyclotomic::omega();
    let w2 = w.clone() * &w;
    let cols = [
        alloc::vec![c(3, 0), c(0, 0), c(0, 0), c(0, 0), c(0, 0), c(-1, -2)],
        alloc::vec![c(0, 0), c(1, 0), c(0, 0), w.clone(), -w2.clone(), c(0, 0)],
        alloc::vec![c(0, 0), c(0, 0), c(1, 0), -w2, -w, c(0, 0)],
    ];
    EigenplaneBasis::from_columns(&cols).expect("independent columns")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g3_is_in_class_c() {
        let g = g3();
        assert_eq!(g.order(), 3);
        assert_eq!(characteristic_polynomial(&g), class_c_charpoly());
        assert_eq!(characteristic_polynomial(&WeylElement::IDENTITY)[6], Rational::ONE);
    }

    #[test]
    fn w3_is_an_eigenplane_of_g3() {
        let g = g3();
        let p = eigenplane(&g, &Cyclotomic::omega()).unwrap();
        assert_eq!(p, w3_basis());
        let q = eigenplane(&g, &Cyclotomic::omega_bar()).unwrap();
        assert_eq!(q, p.conj());
        assert_ne!(p, q);
        assert_eq!(eigenplane(&g, &Cyclotomic::one()), Err(WeylError::EigenspaceDimension(0)));
    }
}
