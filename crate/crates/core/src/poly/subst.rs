use alloc::vec;
use alloc::vec::Vec;

use super::{Monomial, Poly, Vars};
use crate::exact::Field;
use crate::PolyError;

/// Assigns a polynomial in a target ring to each variable of a source ring.
#[derive(Clone, Debug)]
pub struct SubstitutionMap<C> {
    source: Vars,
    target: Vars,
    images: Vec<Option<Poly<C>>>,
}

impl<C: Field> SubstitutionMap<C> {
    /// An empty map; every source variable still needs an assignment.
    pub fn new(source: &Vars, target: &Vars) -> Self {
        Self { source: source.clone(), target: target.clone(), images: vec![None; source.len()] }
    }

    pub fn identity(vars: &Vars) -> Self {
        Self::from_images(vars, vars, Poly::gens(vars)).expect("same ring")
    }

    pub fn from_images(source: &Vars, target: &Vars, images: Vec<Poly<C>>) -> Result<Self, PolyError> {
        if images.len() != source.len() || images.iter().any(|p| p.vars() != target) {
            return Err(PolyError::VariableMismatch);
        }
        Ok(Self { source: source.clone(), target: target.clone(), images: images.into_iter().map(Some).collect() })
    }

    /// Linear substitution `x_i ↦ Σ_j rows[i][j]·y_j`.
    pub fn linear(source: &Vars, target: &Vars, rows: &[Vec<C>]) -> Result<Self, PolyError> {
        if rows.iter().any(|r| r.len() != target.len()) {
            return Err(PolyError::VariableMismatch);
        }
        let images = rows.iter().map(|r| Poly::linear(target, r)).collect();
        Self::from_images(source, target, images)
    }

    pub fn assign(&mut self, name: &str, image: Poly<C>) -> Result<&mut Self, PolyError> {
        let i = self.source.index_of(name)?;
        if image.vars() != &self.target {
            return Err(PolyError::VariableMismatch);
        }
        self.images[i] = Some(image);
        Ok(self)
    }

    pub fn source(&self) -> &Vars {
        &self.source
    }

    pub fn target(&self) -> &Vars {
        &self.target
    }

    pub fn image(&self, i: usize) -> Option<&Poly<C>> {
        self.images[i].as_ref()
    }

    /// `x ↦ image(x)` followed by `other`.
    pub fn then(&self, other: &Self) -> Result<Self, PolyError> {
        if self.target != other.source {
            return Err(PolyError::VariableMismatch);
        }
        let mut images = Vec::with_capacity(self.images.len());
        for (i, p) in self.images.iter().enumerate() {
            let p = p.as_ref().ok_or_else(|| self.missing(i))?;
            images.push(p.substitute(other)?);
        }
        Self::from_images(&self.source, &other.target, images)
    }

    fn missing(&self, i: usize) -> PolyError {
        PolyError::MissingAssignment(self.source.name(i).into())
    }
}

impl<C: Field> Poly<C> {
    /// Composes `self` with the assignments of `map`.
    pub fn substitute(&self, map: &SubstitutionMap<C>) -> Result<Poly<C>, PolyError> {
        if self.vars() != &map.source {
            return Err(PolyError::VariableMismatch);
        }
        let n = self.nvars();
        let mut max_exp = vec![0u32; n];
        for (m, _) in self.terms() {
            for (i, e) in max_exp.iter_mut().enumerate() {
                *e = (*e).max(m.exp(i));
            }
        }
        let mut powers: Vec<Vec<Poly<C>>> = Vec::with_capacity(n);
        for (i, &top) in max_exp.iter().enumerate() {
            let mut ps = vec![Poly::one(&map.target)];
            if top > 0 {
                let base = map.images[i].as_ref().ok_or_else(|| map.missing(i))?;
                for _ in 0..top {
                    let next = ps.last().expect("nonempty") * base;
                    ps.push(next);
                }
            }
            powers.push(ps);
        }
        let mut out = Poly::zero(&map.target);
        for (m, c) in self.terms() {
            let mut t = Poly::constant(&map.target, c.clone());
            for (i, ps) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = &t * &ps[e];
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Sets the listed variables to constants, keeping the ring.
    pub fn specialize(&self, values: &[(usize, C)]) -> Poly<C> {
        let mut out = Poly::zero(self.vars());
        'terms: for (m, c) in self.terms() {
            let mut coeff = c.clone();
            let mut exps: Vec<u32> = (0..self.nvars()).map(|i| m.exp(i)).collect();
            for (i, v) in values {
                let e = exps[*i];
                if e > 0 {
                    if v.is_zero() {
                        continue 'terms;
                    }
                    for _ in 0..e {
                        coeff *= v;
                    }
                    exps[*i] = 0;
                }
            }
            out.add_term(Monomial::from_exponents(&exps), coeff);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::poly::tests::arb_poly;
    use crate::poly::RatPoly;
    use proptest::prelude::*;

    fn xyz() -> Vars {
        Vars::new(&["X0", "X1", "X2"])
    }

    #[test]
    fn identity_substitution() {
        let v = xyz();
        let f = (&RatPoly::var(&v, 0) + &RatPoly::var(&v, 2)).pow(3);
        assert_eq!(f.substitute(&SubstitutionMap::identity(&v)).unwrap(), f);
    }

    #[test]
    fn missing_assignment_is_reported() {
        let v = xyz();
        let w = Vars::new(&["s", "t"]);
        let mut map = SubstitutionMap::new(&v, &w);
        map.assign("X0", RatPoly::var(&w, 0)).unwrap();
        let f = &RatPoly::var(&v, 0) * &RatPoly::var(&v, 1);
        assert_eq!(f.substitute(&map), Err(PolyError::MissingAssignment("X1".into())));
        // Variables absent from f need no image.
        assert!(RatPoly::var(&v, 0).pow(2).substitute(&map).is_ok());
    }

    #[test]
    fn linear_substitution_preserves_degree() {
        let v = xyz();
        let w = Vars::new(&["s", "t"]);
        let r = |a: i64| Rational::from_int(a);
        let map = SubstitutionMap::linear(&v, &w, &[vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(0), r(2)]]).unwrap();
        let f = &RatPoly::var(&v, 0).pow(2) - &(&RatPoly::var(&v, 1) * &RatPoly::var(&v, 2));
        let g = f.substitute(&map).unwrap();
        assert_eq!(g.homogeneous_degree(), Some(2));
    }

    #[test]
    fn specialize_drops_zeroed_terms() {
        let v = xyz();
        let f = &RatPoly::var(&v, 0) * &RatPoly::var(&v, 1) + RatPoly::var(&v, 2).pow(2);
        let g = f.specialize(&[(1, Rational::ZERO)]);
        assert_eq!(g, RatPoly::var(&v, 2).pow(2));
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_map(
            f in arb_poly(3, 4, 2),
            g in arb_poly(3, 4, 2),
            a in arb_poly(3, 3, 1),
            b in arb_poly(3, 3, 1),
            c in arb_poly(3, 3, 1),
        ) {
            let v = f.vars().clone();
            let map = SubstitutionMap::from_images(
                &v, &v,
                vec![a.with_vars(&v).unwrap(), b.with_vars(&v).unwrap(), c.with_vars(&v).unwrap()],
            ).unwrap();
            let g = g.with_vars(&v).unwrap();
            let lhs = (&f + &g).substitute(&map).unwrap();
            prop_assert_eq!(lhs, f.substitute(&map).unwrap() + g.substitute(&map).unwrap());
            let lhs = (&f * &g).substitute(&map).unwrap();
            prop_assert_eq!(lhs, f.substitute(&map).unwrap() * g.substitute(&map).unwrap());
        }
    }
}
