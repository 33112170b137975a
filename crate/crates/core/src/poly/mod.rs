//! Sparse multivariate polynomials over `Q` or `Q(ω)`.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] in graded
//! lexicographic order, so iteration, printing and term counts are
//! deterministic. No zero coefficient is ever stored.

mod calculus;
mod monomial;
mod subst;
mod text;


use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::exact::{Cyclotomic, ExactMatrix, Field, Rational};
use crate::PolyError;

pub use monomial::{Monomial, MAX_VARS};
pub use subst::SubstitutionMap;

/// An ordered list of variable names shared by the polynomials of one ring.
#[derive(Clone, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        assert!(names.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

/// A polynomial in the variables of a [`Vars`] ring.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C> {
    vars: Vars,
    terms: BTreeMap<Monomial, C>,
}

pub type RatPoly = Poly<Rational>;
pub type CycPoly = Poly<Cyclotomic>;

impl<C: Field> Poly<C> {
    pub fn zero(vars: &Vars) -> Self {
        Self { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        assert!(i < vars.len(), "variable index out of range");
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(i), C::one());
        p
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        Ok(Self::var(vars, vars.index_of(name)?))
    }

    /// All variables of the ring as degree-one polynomials.
    pub fn gens(vars: &Vars) -> Vec<Self> {
        (0..vars.len()).map(|i| Self::var(vars, i)).collect()
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `Σ coeffs[i]·x_i`.
    pub fn linear(vars: &Vars, coeffs: &[C]) -> Self {
        Self::from_terms(vars, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(i), c.clone())))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, if the polynomial is nonzero and homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_vars(other)?;
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let prod = ca.clone() * cb;
                let m = ma.mul(mb);
                match acc.entry(m) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &prod;
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Self { vars: self.vars.clone(), terms: acc })
    }

    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), v.clone() * c)).collect();
        Self { vars: self.vars.clone(), terms }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::ONE, c)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a point of the coefficient field.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars(), "point has wrong dimension");
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Floating-point evaluation at a complex point.
    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars(), "point has wrong dimension");
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// `Σ |c|·|x^m|`, the natural scale against which `|eval_complex|` is small.
    pub fn eval_abs_complex(&self, point: &[Complex64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_complex().norm();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    t *= x.norm();
                }
            }
            acc += t;
        }
        acc
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c));
        }
        out
    }

    /// Coefficientwise Galois conjugation.
    pub fn conj(&self) -> Self {
        self.map_coeffs(Field::conj)
    }

    /// Reinterprets the polynomial in another ring with the same number of variables.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self, PolyError> {
        if vars.len() != self.vars.len() {
            return Err(PolyError::VariableMismatch);
        }
        Ok(Self { vars: vars.clone(), terms: self.terms.clone() })
    }

    /// Renames variables by an index map `i ↦ perm[i]` within the same ring.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.permuted(perm), c.clone())).collect();
        Self { vars: self.vars.clone(), terms }
    }

    /// Divides by the coefficient of the leading term.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// If `self = c·other` for a nonzero scalar `c`, returns `c`.
    pub fn proportionality(&self, other: &Self) -> Option<C> {
        if self.vars != other.vars || self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (m, c) = self.leading_term()?;
        let d = other.terms.get(m)?;
        let ratio = c.clone() * &d.inv()?;
        let ok = self
            .terms
            .iter()
            .all(|(m, c)| other.terms.get(m).is_some_and(|d| d.clone() * &ratio == *c));
        ok.then_some(ratio)
    }

    /// Rank of the coefficient vectors of the given polynomials.
    pub fn coefficient_rank(polys: &[Self]) -> usize {
        let mut monos: Vec<Monomial> = polys.iter().flat_map(|p| p.terms.keys().copied()).collect();
        monos.sort();
        monos.dedup();
        if monos.is_empty() {
            return 0;
        }
        ExactMatrix::from_fn(polys.len(), monos.len(), |i, j| polys[i].coefficient(&monos[j])).rank()
    }

    /// Elementary symmetric polynomial of degree `k` in the listed variables.
    pub fn elementary_symmetric(vars: &Vars, k: usize, which: &[usize]) -> Result<Self, PolyError> {
        if k > which.len() {
            return Err(PolyError::DegreeOutOfRange { k, n: which.len() });
        }
        // e_k via the recurrence over prefixes: E_j(x_1..x_i) = E_j(..x_{i-1}) + x_i E_{j-1}(..x_{i-1}).
        let mut e: Vec<Self> = (0..=k).map(|j| if j == 0 { Self::one(vars) } else { Self::zero(vars) }).collect();
        for &v in which {
            let x = Self::var(vars, v);
            for j in (1..=k).rev() {
                let t = &x * &e[j - 1];
                e[j] = &e[j] + &t;
            }
        }
        Ok(e.swap_remove(k))
    }
}

impl Poly<Rational> {
    /// Embeds a rational polynomial into `Q(ω)[vars]`.
    pub fn to_cyclotomic(&self) -> Poly<Cyclotomic> {
        self.map_coeffs(|c| Cyclotomic::from(c.clone()))
    }
}

impl Poly<Cyclotomic> {
    /// Returns the polynomial over `Q` if every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly<Rational>> {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(*m, c.as_rational()?.clone());
        }
        Some(out)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Field> $tr<&Poly<C>> for &Poly<C> {
            type Output = Poly<C>;
            /// Panics if the operands live in different rings; use the
            /// `checked_*` methods to get an error instead.
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<C: Field> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Field> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<C: Field> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Field> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}
