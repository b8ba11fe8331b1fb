use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::field::Field;
use super::poly::Poly;
use super::rational::ExactRational;
use crate::error::{Error, Result};

/// Quotient `num/den` of polynomials over `F`, kept in canonical form:
/// `gcd(num, den) = 1` and `den` monic. Zero is `0/1`.
///
/// Canonical form makes `==` the field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

/// Rational functions in `q` over `Q`; the universal coefficient field.
pub type RationalFunction = RatFunc<ExactRational>;

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return Self::zero_value();
        }
        if den.is_constant_nonzero() {
            return Self::normalized(num, den);
        }
        let g = num.gcd(&den);
        if g.is_constant_nonzero() {
            Self::normalized(num, den)
        } else {
            Self::normalized(
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        }
    }

    // Assumes gcd(num, den) = 1; scales so that den is monic.
    fn normalized(num: Poly<F>, den: Poly<F>) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    fn zero_value() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `x^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(F::one(), k as usize))
        } else {
            RatFunc {
                num: Poly::one(),
                den: Poly::monomial(F::one(), (-k) as usize),
            }
        }
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant_nonzero()
    }

    pub fn as_constant(&self) -> Option<F> {
        if self.num.is_zero() {
            Some(F::zero())
        } else if self.num.is_constant_nonzero() && self.den.is_constant_nonzero() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Order of vanishing at infinity, `deg den - deg num`; `None` for zero.
    pub fn valuation_at_infinity(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(self.den.degree().unwrap() as i64 - dn)
    }

    pub fn evaluate(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator {} vanishes at {x}", self.den)));
        }
        self.num.eval(x).try_div(&d)
    }

    /// Composition `f(g)` for a rational function `g`.
    pub fn substitute(&self, g: &Self) -> Result<Self> {
        let lift = |p: &Poly<F>| {
            let mut acc = Self::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc * g + &Self::constant(c.clone());
            }
            acc
        };
        lift(&self.num).try_div(&lift(&self.den))
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let n2 = if negate { -&other.num } else { other.num.clone() };
        if self.num.is_zero() {
            return RatFunc { num: n2, den: other.den.clone() };
        }
        if other.num.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &n2;
            if self.den.is_constant_nonzero() {
                return RatFunc { num, den: self.den.clone() };
            }
            return Self::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        if g.is_constant_nonzero() {
            let num = &(&self.num * &other.den) + &(&n2 * &self.den);
            if num.is_zero() {
                return Self::zero_value();
            }
            return RatFunc { num, den: &self.den * &other.den };
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = other.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&n2 * &d1);
        if num.is_zero() {
            return Self::zero_value();
        }
        let h = num.gcd(&g);
        if h.is_constant_nonzero() {
            RatFunc { num, den: &self.den * &d2 }
        } else {
            let num = num.exact_div(&h).expect("gcd divides");
            let den = (&self.den * &d2).exact_div(&h).expect("gcd divides");
            Self::normalized(num, den)
        }
    }
}

impl<'a, F: Field> Add<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self.add_impl(rhs, false)
    }
}

impl<'a, F: Field> Sub<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        self.add_impl(rhs, true)
    }
}

impl<'a, F: Field> Mul<&'a RatFunc<F>> for &'a RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: &RatFunc<F>) -> RatFunc<F> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero_value();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc { num: &self.num * &rhs.num, den: Poly::one() };
        }
        let cancel = |n: &Poly<F>, d: &Poly<F>| {
            let g = n.gcd(d);
            if g.is_constant_nonzero() {
                (n.clone(), d.clone())
            } else {
                (n.exact_div(&g).unwrap(), d.exact_div(&g).unwrap())
            }
        };
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl<F: Field> Neg for &RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> RatFunc<F> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

forward_ring_ops!([F: Field] RatFunc<F>);

impl<F: Field> From<F> for RatFunc<F> {
    fn from(c: F) -> Self {
        RatFunc::constant(c)
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::zero_value()
    }

    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    fn from_rational(r: &ExactRational) -> Self {
        Self::constant(F::from_rational(r))
    }

    fn is_formally_small(&self) -> bool {
        // Constants defer to the inner field, so `1/q` stays small in `Q(q)(t)`.
        match self.as_constant() {
            Some(c) => c.is_formally_small(),
            None => self.valuation_at_infinity().is_some_and(|v| v > 0),
        }
    }

    fn depth() -> usize {
        F::depth() + 1
    }
}

impl RationalFunction {
    /// `num/den` rescaled to coprime integer polynomials with a positive
    /// leading denominator coefficient.
    pub fn integer_form(&self) -> (Poly<ExactRational>, Poly<ExactRational>) {
        let mut l = BigInt::one();
        for c in self.num.coeffs().iter().chain(self.den.coeffs()) {
            l = l.lcm(c.denom());
        }
        let scale = ExactRational::integer(l);
        let num = self.num.scale(&scale);
        let den = self.den.scale(&scale);
        let mut g = BigInt::from(0);
        for c in num.coeffs().iter().chain(den.coeffs()) {
            g = g.gcd(c.numer());
        }
        let g = ExactRational::integer(g.abs());
        let inv = g.inv().expect("nonzero content");
        (num.scale(&inv), den.scale(&inv))
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = if F::depth() == 0 {
            // Safe: F is ExactRational exactly when depth is 0.
            let me: &dyn std::any::Any = self;
            let (n, d) = me
                .downcast_ref::<RationalFunction>()
                .expect("depth-0 coefficient field is ExactRational")
                .integer_form();
            (n.to_string(), d.to_string())
        } else {
            (self.num.to_string(), self.den.to_string())
        };
        if den == "1" {
            return write!(f, "{num}");
        }
        let num = if num.contains(' ') { format!("({num})") } else { num };
        let den = if den.contains(' ') || den.contains('*') { format!("({den})") } else { den };
        write!(f, "{num}/{den}")
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
