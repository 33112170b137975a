//! The quadratic field `Q(ω)`, ω² + ω + 1 = 0, in the basis {1, ω}.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

use super::Rational;

/// `a + b·ω` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclotomic {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclotomic {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(Rational::from_int(a), Rational::from_int(b))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// ω̄ = ω² = −1 − ω.
    pub fn omega_bar() -> Self {
        Self::from_ints(-1, -1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.a)
    }

    /// Galois conjugation ω ↦ ω̄: `a + bω ↦ (a − b) − bω`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// Field norm `x·conj(x) = a² − ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(Self::new(c.a * &n, c.b * &n))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        // ω = −1/2 + (√3/2) i
        let s3 = libm::sqrt(3.0) / 2.0;
        let b = self.b.to_f64();
        Complex64::new(self.a.to_f64() - 0.5 * b, s3 * b)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        // (a1 + b1ω)(a2 + b2ω) = a1a2 − b1b2 + (a1b2 + a2b1 − b1b2)ω
        let bb = &self.b * &rhs.b;
        Self::new(
            &self.a * &rhs.a - &bb,
            &self.a * &rhs.b + &rhs.a * &self.b - bb,
        )
    }
}

impl From<Rational> for Cyclotomic {
    fn from(a: Rational) -> Self {
        Self::new(a, Rational::ZERO)
    }
}

impl From<i64> for Cyclotomic {
    fn from(a: i64) -> Self {
        Self::from_ints(a, 0)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Self::new(-self.a, -self.b)
    }
}

impl Add<&Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Self::new(self.a + &rhs.a, self.b + &rhs.b)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        self + &rhs
    }
}

impl Sub<&Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Self::new(self.a - &rhs.a, self.b - &rhs.b)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self - &rhs
    }
}

impl Mul<&Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        self.mul_impl(&rhs)
    }
}

impl Mul<&Cyclotomic> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.mul_impl(rhs);
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*w", self.b),
            (false, false) => write!(f, "({}+{}*w)", self.a, self.b),
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> Cyclotomic {
        Cyclotomic::omega()
    }

    #[test]
    fn omega_squared_reduces() {
        assert_eq!(w() * w(), Cyclotomic::from_ints(-1, -1));
        assert_eq!(w() * Cyclotomic::from_ints(-1, -1), Cyclotomic::one());
        assert_eq!(w().pow(3), Cyclotomic::one());
    }

    #[test]
    fn norm_of_one_plus_two_omega() {
        // (1+2ω)(1+2ω̄) expanded by hand: 1 + 2ω + 2ω² + 4 = 5 + 2(ω + ω²) = 3.
        let x = Cyclotomic::from_ints(1, 2);
        let product = x.clone() * x.conj();
        assert_eq!(product, Cyclotomic::from_ints(3, 0));
        assert_eq!(x.norm(), Rational::from_int(3));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(w().conj(), Cyclotomic::from_ints(-1, -1));
        assert_eq!(w().conj(), Cyclotomic::omega_bar());
        assert_eq!(Cyclotomic::from_ints(5, 0).conj(), Cyclotomic::from_ints(5, 0));
    }

    #[test]
    fn complex_embedding() {
        let z = w().to_complex();
        let cube = z * z * z;
        assert!((cube.re - 1.0).abs() < 1e-12 && cube.im.abs() < 1e-12);
    }

    fn cyc() -> impl Strategy<Value = Cyclotomic> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20)
            .prop_map(|(a, b, c, d)| Cyclotomic::new(Rational::new(a, b), Rational::new(c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(x in cyc(), y in cyc(), z in cyc()) {
            prop_assert_eq!((x.clone() * &y) * &z, x.clone() * &(y.clone() * &z));
            prop_assert_eq!(x.clone() * &y, y.clone() * &x);
            prop_assert_eq!(x.clone() * &(y.clone() + &z), x.clone() * &y + x.clone() * &z);
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * &x.inv().unwrap(), Cyclotomic::one());
            }
        }

        #[test]
        fn conj_is_involutive_automorphism(x in cyc(), y in cyc()) {
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert_eq!((x.clone() * &y).conj(), x.conj() * &y.conj());
            prop_assert_eq!((x.clone() + &y).conj(), x.conj() + &y.conj());
            prop_assert_eq!(x.conj() == x, x.is_rational());
        }

        #[test]
        fn norm_is_nonnegative_rational(x in cyc()) {
            let n = x.clone() * &x.conj();
            prop_assert!(n.is_rational());
            prop_assert!(n.a >= Rational::ZERO);
            prop_assert_eq!(n.a.is_zero(), x.is_zero());
        }
    }
}
