use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Power series in `u` truncated after `u^order`.
///
/// Every result keeps the smaller truncation order of its operands, so a
/// coefficient is never reported beyond the precision it was computed to.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<F> {
    order: usize,
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    /// Pads or truncates `coeffs` to length `order + 1`.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    pub fn constant(c: F, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c * u^k`.
    pub fn monomial(c: F, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &F {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TruncatedSeries<G> {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<TruncatedSeries<G>> {
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() + &other.coeffs[k])
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].clone() - &other.coeffs[k])
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|a| a.clone() * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut coeffs = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a.clone() * b);
                }
            }
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.inv()?;
        let mut b: Vec<F> = Vec::with_capacity(self.order + 1);
        b.push(inv0.clone());
        for n in 1..=self.order {
            let mut s = F::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    s += &(self.coeffs[k].clone() * &b[n - k]);
                }
            }
            b.push(-(s * &inv0));
        }
        Ok(TruncatedSeries { order: self.order, coeffs: b })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents go through [`inv`](Self::inv).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut result = Self::one(self.order);
        let mut base = self.clone();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Substitutes `u <- c * u^k` (`k >= 1`), keeping the truncation order.
    pub fn compose_scale(&self, c: &F, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Precondition("compose_scale needs k >= 1".into()));
        }
        let mut out = Self::zero(self.order);
        let mut cj = F::one();
        for j in 0..=self.order / k {
            out.coeffs[j * k] = self.coeffs[j].clone() * &cj;
            cj *= c;
        }
        Ok(out)
    }

    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Precondition("log needs constant term 1".into()));
        }
        let mut b = vec![F::zero(); self.order + 1];
        for n in 1..=self.order {
            // n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
            let mut s = self.coeffs[n].clone() * &F::from_int(n as i64);
            for k in 1..n {
                if !b[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    s -= &(b[k].clone() * &self.coeffs[n - k] * &F::from_int(k as i64));
                }
            }
            b[n] = s * &F::from_int(n as i64).inv()?;
        }
        Ok(TruncatedSeries { order: self.order, coeffs: b })
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs constant term 0".into()));
        }
        let mut b = vec![F::zero(); self.order + 1];
        b[0] = F::one();
        for n in 1..=self.order {
            // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
            let mut s = F::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !b[n - k].is_zero() {
                    s += &(self.coeffs[k].clone() * &b[n - k] * &F::from_int(k as i64));
                }
            }
            b[n] = s * &F::from_int(n as i64).inv()?;
        }
        Ok(TruncatedSeries { order: self.order, coeffs: b })
    }

    /// First index at which two series differ, up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order.min(other.order);
        (0..=order).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl<F: Field> fmt::Display for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.order + 1)
    }
}

impl<F: Field> fmt::Debug for TruncatedSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
