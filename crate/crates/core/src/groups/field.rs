//! `F_{p^k}` as `F_p[x]/(f)` with `f` found by trial division.
//!
//! Elements are stored as their base-`p` digit string packed into a `u64`
//! (digit `i` is the coefficient of `x^i`), so they are `Copy` and hashable
//! and the zero element is `0`.

use std::fmt;

use crate::error::{Error, Result};

const MAX_DEGREE: usize = 63;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FiniteFieldElem(pub u64);

impl fmt::Display for FiniteFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisField {
    p: u64,
    k: usize,
    size: u64,
    /// Monic modulus, lowest coefficient first, length `k + 1`.
    modulus: Vec<u64>,
}

/// Returns the prime `p` and exponent `k` with `q = p^k`.
pub fn prime_power(q: u64) -> Result<(u64, usize)> {
    if q < 2 {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r != 1 {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    Ok((p, k))
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

// Dense polynomials over F_p with coefficients in 0..p, lowest first, trimmed.

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv_lead = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let c = r[r.len() - 1] * inv_lead % p;
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn monic_of_degree(p: u64, d: usize, code: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(d + 1);
    let mut x = code;
    for _ in 0..d {
        c.push(x % p);
        x /= p;
    }
    c.push(1);
    c
}

/// Monic irreducibles over `F_p` of each degree `1..=max`, by sieving each
/// degree with trial division by the irreducibles of half the degree or less.
fn irreducibles_up_to(p: u64, max: usize) -> Vec<Vec<Vec<u64>>> {
    let mut by_degree: Vec<Vec<Vec<u64>>> = vec![vec![]];
    for d in 1..=max {
        let count = p.pow(d as u32);
        let found = (0..count)
            .map(|code| monic_of_degree(p, d, code))
            .filter(|f| {
                by_degree[1..=d / 2]
                    .iter()
                    .flatten()
                    .all(|g| !rem_fp(f, g, p).is_empty())
            })
            .collect();
        by_degree.push(found);
    }
    by_degree
}

impl GaloisField {
    /// `F_{p^k}` with the first monic irreducible of degree `k` in
    /// base-`p` code order as modulus.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) || k == 0 {
            return Err(Error::Precondition(format!("no field F_{{{p}^{k}}}")));
        }
        let size = (p as u128).checked_pow(k as u32).filter(|&s| s < 1 << 62);
        let size = match size {
            Some(s) if k <= MAX_DEGREE => s as u64,
            _ => return Err(Error::Budget(format!("F_{{{p}^{k}}} is too large"))),
        };
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let small = irreducibles_up_to(p, k / 2);
            (0..size)
                .map(|code| monic_of_degree(p, k, code))
                .find(|f| small.iter().flatten().all(|g| !rem_fp(f, g, p).is_empty()))
                .expect("an irreducible of every degree exists")
        };
        Ok(GaloisField { p, k, size, modulus })
    }

    /// The field with `q` elements.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q)?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FiniteFieldElem {
        FiniteFieldElem(0)
    }

    pub fn one(&self) -> FiniteFieldElem {
        FiniteFieldElem(1)
    }

    /// The class of `x`, a generator of the field over `F_p` (or `0` in `F_p`).
    pub fn x(&self) -> FiniteFieldElem {
        if self.k == 1 {
            FiniteFieldElem(0)
        } else {
            FiniteFieldElem(self.p)
        }
    }

    pub fn from_int(&self, n: i64) -> FiniteFieldElem {
        FiniteFieldElem(n.rem_euclid(self.p as i64) as u64)
    }

    /// All elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FiniteFieldElem> {
        (0..self.size).map(FiniteFieldElem)
    }

    fn digits(&self, a: FiniteFieldElem, out: &mut [u64]) {
        let mut x = a.0;
        for d in out.iter_mut().take(self.k) {
            *d = x % self.p;
            x /= self.p;
        }
    }

    fn pack(&self, d: &[u64]) -> FiniteFieldElem {
        let mut x = 0u64;
        for &c in d[..self.k].iter().rev() {
            x = x * self.p + c;
        }
        FiniteFieldElem(x)
    }

    pub fn add(&self, a: FiniteFieldElem, b: FiniteFieldElem) -> FiniteFieldElem {
        if self.p == 2 {
            return FiniteFieldElem(a.0 ^ b.0);
        }
        let (mut da, mut db) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        for i in 0..self.k {
            da[i] = (da[i] + db[i]) % self.p;
        }
        self.pack(&da)
    }

    pub fn neg(&self, a: FiniteFieldElem) -> FiniteFieldElem {
        if self.p == 2 {
            return a;
        }
        let mut da = [0u64; MAX_DEGREE];
        self.digits(a, &mut da);
        for d in da.iter_mut().take(self.k) {
            *d = (self.p - *d) % self.p;
        }
        self.pack(&da)
    }

    pub fn sub(&self, a: FiniteFieldElem, b: FiniteFieldElem) -> FiniteFieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FiniteFieldElem, b: FiniteFieldElem) -> FiniteFieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FiniteFieldElem(0);
        }
        let k = self.k;
        let p = self.p;
        let (mut da, mut db) = ([0u64; MAX_DEGREE], [0u64; MAX_DEGREE]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c != 0 {
                for j in 0..k {
                    prod[i - k + j] = (prod[i - k + j] + (p - c) * self.modulus[j]) % p;
                }
                prod[i] = 0;
            }
        }
        self.pack(&prod)
    }

    pub fn pow(&self, a: FiniteFieldElem, mut e: u64) -> FiniteFieldElem {
        let mut acc = self.one();
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(b, b);
            }
        }
        acc
    }

    pub fn inv(&self, a: FiniteFieldElem) -> Result<FiniteFieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.size - 2))
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: FiniteFieldElem) -> FiniteFieldElem {
        self.pow(a, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FiniteFieldElem) -> u64 {
        let mut n = self.size - 1;
        for r in prime_factors(n) {
            while n % r == 0 && self.pow(a, n / r) == self.one() {
                n /= r;
            }
        }
        n
    }

    /// An element of multiplicative order exactly `m`, where `m | size - 1`.
    pub fn element_of_order(&self, m: u64) -> Result<FiniteFieldElem> {
        let total = self.size - 1;
        if m == 0 || total % m != 0 {
            return Err(Error::Precondition(format!("{m} does not divide {total}")));
        }
        let primes = prime_factors(m);
        self.elements()
            .skip(1)
            .map(|a| self.pow(a, total / m))
            .find(|b| primes.iter().all(|r| self.pow(*b, m / r) != self.one()))
            .ok_or_else(|| Error::Unknown(format!("no element of order {m}")))
    }
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
