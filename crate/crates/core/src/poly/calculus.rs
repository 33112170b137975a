use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Monomial, Poly};
use crate::exact::{ExactMatrix, Field};
use crate::PolyError;

impl<C: Field> Poly<C> {
    /// Formal partial derivative in variable `i`.
    pub fn partial(&self, i: usize) -> Poly<C> {
        let mut out = Poly::zero(self.vars());
        for (m, c) in self.terms() {
            if let Some(lower) = m.lower(i) {
                out.add_term(lower, c.clone() * &C::from(m.exp(i) as i64));
            }
        }
        out
    }

    pub fn partial_named(&self, name: &str) -> Result<Poly<C>, PolyError> {
        Ok(self.partial(self.vars().index_of(name)?))
    }

    pub fn gradient(&self) -> Vec<Poly<C>> {
        (0..self.nvars()).map(|i| self.partial(i)).collect()
    }

    /// Determinant of the matrix of second partials in the listed variables.
    pub fn hessian_det(&self, which: &[usize]) -> Poly<C> {
        let n = which.len();
        assert!(n <= 16, "hessian too large");
        let firsts: Vec<Poly<C>> = which.iter().map(|&i| self.partial(i)).collect();
        let h: Vec<Vec<Poly<C>>> =
            firsts.iter().map(|d| which.iter().map(|&j| d.partial(j)).collect()).collect();
        Self::det_of(&h, self)
    }

    /// Laplace expansion along rows, memoized on the set of remaining columns.
    fn det_of(h: &[Vec<Poly<C>>], like: &Poly<C>) -> Poly<C> {
        let n = h.len();
        if n == 0 {
            return Poly::one(like.vars());
        }
        let mut memo: BTreeMap<u32, Poly<C>> = BTreeMap::new();
        memo.insert(0, Poly::one(like.vars()));
        // Minor on rows n-k.. and column set `mask` with k bits.
        for k in 1..=n {
            let row = n - k;
            let masks: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).collect();
            for mask in masks {
                let mut acc = Poly::zero(like.vars());
                let mut sign_neg = false;
                for j in 0..n {
                    if mask & (1 << j) == 0 {
                        continue;
                    }
                    let entry = &h[row][j];
                    if !entry.is_zero() {
                        let minor = &memo[&(mask & !(1 << j))];
                        let t = entry * minor;
                        acc = if sign_neg { &acc - &t } else { &acc + &t };
                    }
                    sign_neg = !sign_neg;
                }
                memo.insert(mask, acc);
            }
            memo.retain(|m, _| m.count_ones() as usize >= k);
        }
        memo.remove(&((1u32 << n) - 1)).expect("full minor")
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn exact_divide(&self, g: &Poly<C>) -> Result<Option<Poly<C>>, PolyError> {
        if g.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.vars() != g.vars() {
            return Err(PolyError::VariableMismatch);
        }
        let (gm, gc) = g.leading_term().map(|(m, c)| (*m, c.clone())).expect("nonzero");
        let ginv = gc.inv().expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q = Poly::zero(self.vars());
        while let Some((rm, rc)) = r.leading_term().map(|(m, c)| (*m, c.clone())) {
            if !gm.divides(&rm) {
                return Ok(None);
            }
            let tm = gm.quotient_of(&rm);
            let tc = rc * &ginv;
            r = &r - &g.mul_term(&tm, &tc);
            q.add_term(tm, tc);
        }
        Ok(Some(q))
    }

    /// Rank of the symmetric matrix of a quadratic form.
    pub fn quadratic_form_rank(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Ok(0);
        }
        if self.homogeneous_degree() != Some(2) {
            return Err(PolyError::NotQuadratic);
        }
        let n = self.nvars();
        let half = C::from(crate::exact::Rational::new(1, 2));
        let mut s = ExactMatrix::<C>::zeros(n, n);
        for (m, c) in self.terms() {
            let idx: Vec<usize> = (0..n).flat_map(|i| core::iter::repeat_n(i, m.exp(i) as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                s[(i, i)] = c.clone();
            } else {
                let h = c.clone() * &half;
                s[(i, j)] = h.clone();
                s[(j, i)] = h;
            }
        }
        Ok(s.rank())
    }

    /// The monomial `x_i x_j` (or `x_i²`).
    pub fn quadratic_monomial(i: usize, j: usize) -> Monomial {
        Monomial::var(i).mul(&Monomial::var(j))
    }
}

#[cfg(test)]
mod tests {
    use alloc::format;
    use alloc::string::String;

    use super::*;
    use crate::exact::Rational;
    use crate::poly::tests::arb_poly;
    use crate::poly::{RatPoly, Vars};
    use proptest::prelude::*;

    fn ring(n: usize) -> Vars {
        let names: Vec<String> = (0..n).map(|i| format!("X{i}")).collect();
        Vars::new(&names)
    }

    #[test]
    fn partial_of_square() {
        let v = ring(1);
        let x = RatPoly::var(&v, 0);
        assert_eq!(x.pow(2).partial(0), x.scale(&Rational::from_int(2)));
        assert!(matches!(x.partial_named("Y"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn small_hessians() {
        let v = ring(2);
        let (x, y) = (RatPoly::var(&v, 0), RatPoly::var(&v, 1));
        assert_eq!((x.pow(2) + y.pow(2)).hessian_det(&[0, 1]), RatPoly::constant(&v, Rational::from_int(4)));
        assert_eq!((&x * &y).hessian_det(&[0, 1]), RatPoly::constant(&v, Rational::from_int(-1)));
    }

    #[test]
    fn hessian_matches_cofactor_formula_in_three_variables() {
        let v = ring(3);
        let g = Poly::gens(&v);
        let f: RatPoly = g[0].pow(3) + &g[0] * &g[1] * &g[2] + g[2].pow(2) * &g[1];
        let h: Vec<Vec<RatPoly>> = (0..3).map(|i| (0..3).map(|j| f.partial(i).partial(j)).collect()).collect();
        let d = &h[0][0] * &(&h[1][1] * &h[2][2] - &h[1][2] * &h[2][1])
            - &h[0][1] * &(&h[1][0] * &h[2][2] - &h[1][2] * &h[2][0])
            + &h[0][2] * &(&h[1][0] * &h[2][1] - &h[1][1] * &h[2][0]);
        assert_eq!(f.hessian_det(&[0, 1, 2]), d);
        // Relabelling the variables permutes rows and columns together.
        let perm = [2, 0, 1];
        assert_eq!(f.permute_vars(&perm).hessian_det(&[0, 1, 2]), d.permute_vars(&perm));
    }

    #[test]
    fn difference_of_squares_divides() {
        let v = ring(2);
        let (x, y) = (RatPoly::var(&v, 0), RatPoly::var(&v, 1));
        let q = (x.pow(2) - y.pow(2)).exact_divide(&(&x - &y)).unwrap();
        assert_eq!(q, Some(&x + &y));
        assert_eq!((x.pow(2) + y.pow(2)).exact_divide(&(&x - &y)).unwrap(), None);
        assert_eq!(x.exact_divide(&RatPoly::zero(&v)), Err(PolyError::ZeroDivisor));
    }

    #[test]
    fn quadratic_ranks() {
        let v = ring(3);
        let g = Poly::gens(&v);
        let q: RatPoly = g[0].pow(2) + g[1].pow(2) + g[2].pow(2);
        assert_eq!(q.quadratic_form_rank(), Ok(3));
        assert_eq!((&g[0] * &g[1]).quadratic_form_rank(), Ok(2));
        assert_eq!((&g[0] + &g[1]).pow(2).quadratic_form_rank(), Ok(1));
        assert_eq!(g[0].pow(3).quadratic_form_rank(), Err(PolyError::NotQuadratic));
    }

    proptest! {
        #[test]
        fn division_recovers_factor(f in arb_poly(3, 4, 3), g in arb_poly(3, 4, 3)) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.exact_divide(&g).unwrap(), Some(f));
        }

        #[test]
        fn euler_identity(f in arb_poly(3, 5, 3), d in 0u32..4) {
            // Keep only the degree-d part so the input is homogeneous.
            let h = Poly::from_terms(f.vars(), f.terms().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())));
            let v = h.vars().clone();
            let mut lhs = RatPoly::zero(&v);
            for i in 0..3 {
                lhs = lhs + &RatPoly::var(&v, i) * &h.partial(i);
            }
            prop_assert_eq!(lhs, h.scale(&Rational::from_int(d as i64)));
        }
    }
}
