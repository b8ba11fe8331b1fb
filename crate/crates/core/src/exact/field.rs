use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use super::poly::Poly;
use super::rational::ExactRational;
use crate::error::Result;

/// A commutative field with exact arithmetic.
///
/// Implemented by [`ExactRational`] and by every rational function field
/// [`RatFunc<F>`](super::RatFunc) built over a `Field`, so fields such as
/// `Q(q)(t)(a)` are obtained by nesting.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + Sub<Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + Mul<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn inv(&self) -> Result<Self>;

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }

    fn from_int(n: i64) -> Self;

    fn from_rational(r: &ExactRational) -> Self;

    /// True when geometric sums in this element converge formally: `|x| < 1`
    /// for rationals, vanishing at `q = ∞` for rational functions.
    fn is_formally_small(&self) -> bool;

    /// Number of rational-function layers above `Q`.
    fn depth() -> usize;

    fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        Ok(result)
    }

    /// Monic greatest common divisor in `Self[x]`. The default is Euclid's
    /// algorithm; `ExactRational` overrides it with a primitive remainder
    /// sequence over the integers.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        euclid_gcd(a, b)
    }
}

pub(crate) fn euclid_gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_constant_nonzero() || b.is_constant_nonzero() {
        return Poly::one();
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    if x.is_zero() {
        x
    } else {
        x.monic()
    }
}

/// `(-1)^k` as a field element.
pub fn sign<F: Field>(k: i64) -> F {
    if k.rem_euclid(2) == 0 {
        F::one()
    } else {
        -F::one()
    }
}
