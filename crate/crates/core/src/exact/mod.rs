//! Exact arithmetic kernel: rationals, polynomials, rational functions and
//! truncated power series over any [`Field`].

#[macro_use]
mod ops;
mod field;
mod parse;
mod poly;
mod ratfunc;
mod rational;
mod series;
mod zpoly;

pub use field::{sign, Field};
pub use parse::parse_rational_function;
pub use poly::{Poly, QPolynomial};
pub use ratfunc::{RatFunc, RationalFunction};
pub use rational::ExactRational;
pub use series::TruncatedSeries;

/// Shorthand for the formal variable `q` of [`RationalFunction`].
pub fn q() -> RationalFunction {
    RationalFunction::var()
}

/// `q^k` for any integer `k`.
pub fn q_pow(k: i64) -> RationalFunction {
    RationalFunction::var_pow(k)
}
