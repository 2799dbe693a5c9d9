//! Exact scalars: roots of unity, monomials in generic variables, and cyclotomic numbers.
//!
//! Text form of a [`Scalar`]: factors joined by `*`, each one of `-1`, `zeta(N,k)`,
//! or a variable with an optional integer exponent (`q^-1`).

mod cyclotomic;
mod rational01;
mod scalar;

pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic};
pub use rational01::Rational01;
pub use scalar::{Order, Scalar};
