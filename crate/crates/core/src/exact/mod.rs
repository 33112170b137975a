//! Exact arithmetic: rationals, the field `Q(ω)`, and dense matrices over both.

mod cyclotomic;
mod field;
mod matrix;
mod rational;

pub use cyclotomic::Cyclotomic;
pub use field::Field;
pub use matrix::{ExactMatrix, RatMatrix};
pub use rational::{ParseRationalError, Rational};

/// Solves `A X = B` over an exact field.
pub fn exact_linear_solve<T: Field>(
    a: &ExactMatrix<T>,
    b: &ExactMatrix<T>,
) -> Result<ExactMatrix<T>, crate::ExactError> {
    a.solve(b)
}
