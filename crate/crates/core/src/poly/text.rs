use alloc::string::ToString;
use alloc::vec;
use core::fmt;

use super::{Monomial, Poly, Vars};
use crate::exact::Rational;
use crate::PolyError;

impl<C> Poly<C> {
    fn write_with(
        &self,
        f: &mut fmt::Formatter<'_>,
        coeff: impl Fn(&C, &mut fmt::Formatter<'_>) -> fmt::Result,
    ) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            coeff(c, f)?;
            for i in 0..self.vars.len() {
                match m.exp(i) {
                    0 => {}
                    1 => write!(f, "*{}", self.vars.name(i))?,
                    e => write!(f, "*{}^{e}", self.vars.name(i))?,
                }
            }
        }
        Ok(())
    }
}

/// Canonical form: terms in descending grlex order joined by `" + "`, each
/// written `coeff*X^e*...` with an explicit coefficient.
impl<C: fmt::Display> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c, f| write!(f, "{c}"))
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with(f, |c, f| write!(f, "{c:?}"))
    }
}

impl Poly<Rational> {
    /// Parses the canonical text form. Also accepts `-` between terms and
    /// factors without a coefficient, e.g. `X0^2 - 3*X1*X2`.
    pub fn parse(vars: &Vars, s: &str) -> Result<Self, PolyError> {
        let mut out = Poly::zero(vars);
        let s = s.trim();
        if s == "0" {
            return Ok(out);
        }
        let normalized = s.replace(" - ", " + -");
        for term in normalized.split(" + ") {
            let term = term.trim();
            let (negate, body) = match term.strip_prefix('-') {
                Some(rest) if rest.starts_with(|ch: char| ch.is_alphabetic()) => (true, rest),
                _ => (false, term),
            };
            let mut coeff = Rational::ONE;
            let mut exps = vec![0u32; vars.len()];
            for factor in body.split('*') {
                let factor = factor.trim();
                if factor.starts_with(|ch: char| ch.is_ascii_digit() || ch == '-') {
                    let c: Rational =
                        factor.parse().map_err(|_| PolyError::UnknownVariable(factor.to_string()))?;
                    coeff *= &c;
                } else {
                    let (name, e) = match factor.split_once('^') {
                        Some((n, e)) => {
                            (n, e.parse::<u32>().map_err(|_| PolyError::UnknownVariable(factor.to_string()))?)
                        }
                        None => (factor, 1),
                    };
                    exps[vars.index_of(name)?] += e;
                }
            }
            if negate {
                coeff = -coeff;
            }
            out.add_term(Monomial::from_exponents(&exps), coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::arb_poly;
    use crate::poly::RatPoly;
    use proptest::prelude::*;

    #[test]
    fn canonical_printing() {
        let v = Vars::new(&["X0", "X1", "X2"]);
        let p = RatPoly::parse(&v, "X2 - 3/2*X0*X1 + X0^2").unwrap();
        assert_eq!(p.to_string(), "1*X0^2 + -3/2*X0*X1 + 1*X2");
        assert_eq!(RatPoly::zero(&v).to_string(), "0");
        assert!(RatPoly::parse(&v, "Y^2").is_err());
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(f in arb_poly(3, 6, 3)) {
            let back = RatPoly::parse(f.vars(), &f.to_string()).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
