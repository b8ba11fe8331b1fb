//! Counts of irreducible polynomial classes over `F_q`, plain and up to the
//! duality `φ ↦ φ*`, for both `GL` (monic irreducibles) and `U`
//! (`U`-irreducibles, i.e. orbits of `a ↦ a^{-q}`).
//!
//! Self-dual and paired counts are reconstructed rather than quoted: the
//! product identity `∏ (1 - w^d)^{-N*(2d) - M*(d)} = (1 - w)^e / (1 - qw)`
//! yields `A_d = N*(2d) + M*(d)` by a logarithm and Möbius inversion, the
//! plain counts split as `N(d) = N*(d) + 2 M*(d)`, and odd degrees carry
//! `N*(1) = e`, `N*(d) = 0` otherwise. The second product identity stays
//! free to be checked.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::exact::{ExactRational, Field, TruncatedSeries};
use crate::groups::{prime_power, FiniteFieldElem, GaloisField};
use crate::{Flavor, Parity};

/// Möbius function.
pub fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |r| n % r == 0)
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 {
        Err(Error::Precondition("degree must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `N(d,q) = (1/d) Σ_{r|d} μ(r) q^{d/r}`, monic irreducibles of degree `d` (including `t`).
pub fn count_irreducible<F: Field>(d: usize, q: &F) -> Result<F> {
    check_degree(d)?;
    let mut sum = F::zero();
    for r in divisors(d) {
        sum += &(F::from_int(mobius(r as u64)) * q.pow((d / r) as i64)?);
    }
    sum.try_div(&F::from_int(d as i64))
}

/// `N̄(d,q) = (1/d) Σ_{r|d} μ(r) (q^{d/r} - (-1)^{d/r})`, `U`-irreducibles of degree `d`.
pub fn count_u_irreducible<F: Field>(d: usize, q: &F) -> Result<F> {
    check_degree(d)?;
    let mut sum = F::zero();
    for r in divisors(d) {
        let k = (d / r) as i64;
        let term = q.pow(k)? - crate::exact::sign::<F>(k);
        sum += &(F::from_int(mobius(r as u64)) * term);
    }
    sum.try_div(&F::from_int(d as i64))
}

/// Class counts in one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassCounts<F> {
    pub d: usize,
    pub flavor: Flavor,
    pub q: F,
    /// `N(d,q)` or `N̄(d,q)`.
    pub n_plain: F,
    /// `N*(d,q)` or `N̄*(d,q)`.
    pub n_selfdual: F,
    /// `M*(d,q)` or `M̄*(d,q)`.
    pub m_pairs: F,
}

/// `A_d = N*(2d,q) + M*(d,q)` for `d = 1..=max` from the logarithm of
/// `(1 - w)^e / (1 - qw)`. The same sequence serves `U`, since
/// `N̄*(2d) + M̄*(d) = N*(2d) + M*(d)`.
pub fn paired_exponents<F: Field>(max: usize, q: &F, parity: Parity) -> Result<Vec<F>> {
    let one = F::one();
    let num = TruncatedSeries::new(vec![one.clone(), -one.clone()], max).pow(parity.e())?;
    let den = TruncatedSeries::new(vec![one, -q.clone()], max);
    let log = num.try_div(&den)?.log()?;
    // n·[w^n] log = Σ_{d|n} d A_d, so d A_d = Σ_{r|d} μ(d/r) r [w^r] log.
    let mut out = vec![F::zero()];
    for d in 1..=max {
        let mut s = F::zero();
        for r in divisors(d) {
            let c = F::from_int(mobius((d / r) as u64) * r as i64) * log.coeff(r);
            s += &c;
        }
        out.push(s.try_div(&F::from_int(d as i64))?);
    }
    Ok(out)
}

/// Self-dual and paired counts for every degree `1..=max`; entry `d - 1`
/// holds degree `d`.
pub fn class_counts_up_to<F: Field>(max: usize, q: &F, parity: Parity, flavor: Flavor) -> Result<Vec<ClassCounts<F>>> {
    check_degree(max)?;
    let a = paired_exponents(max / 2 + 1, q, parity)?;
    let half = F::from_int(2).inv()?;
    let mut selfdual: Vec<F> = vec![F::zero(); max + 1];
    let mut pairs: Vec<F> = vec![F::zero(); max + 1];
    let mut plain: Vec<F> = vec![F::zero(); max + 1];
    for d in 1..=max {
        plain[d] = match flavor {
            Flavor::Gl => count_irreducible(d, q)?,
            Flavor::U => count_u_irreducible(d, q)?,
        };
        selfdual[d] = if d % 2 == 1 {
            if d == 1 { F::from_int(parity.e()) } else { F::zero() }
        } else {
            a[d / 2].clone() - &pairs[d / 2]
        };
        // t itself has no dual and is not counted among GL classes.
        let without_t = if flavor == Flavor::Gl && d == 1 { plain[d].clone() - F::one() } else { plain[d].clone() };
        pairs[d] = (without_t - &selfdual[d]) * &half;
    }
    Ok((1..=max)
        .map(|d| ClassCounts {
            d,
            flavor,
            q: q.clone(),
            n_plain: plain[d].clone(),
            n_selfdual: selfdual[d].clone(),
            m_pairs: pairs[d].clone(),
        })
        .collect())
}

/// Counts in degree `d` from the product identities.
pub fn count_selfdual_and_pairs<F: Field>(d: usize, q: &F, parity: Parity, flavor: Flavor) -> Result<ClassCounts<F>> {
    Ok(class_counts_up_to(d, q, parity, flavor)?.pop().expect("d >= 1"))
}

/// Counts at a numeric prime power.
pub fn count_at(d: usize, q: u64, flavor: Flavor) -> Result<ClassCounts<ExactRational>> {
    prime_power(q)?;
    count_selfdual_and_pairs(d, &ExactRational::from(q as i64), Parity::of(q), flavor)
}

/// Explicit enumeration budget for [`brute_poly_census`].
pub const CENSUS_MAX_Q: u64 = 9;
pub const CENSUS_MAX_D: usize = 6;

/// Counts by explicit enumeration over finite fields: monic irreducibles of
/// `F_q[t]` for `GL`, orbits of `a ↦ a^{-q}` for `U`.
pub fn brute_poly_census(d: usize, q: u64, flavor: Flavor) -> Result<ClassCounts<ExactRational>> {
    check_degree(d)?;
    prime_power(q)?;
    if q > CENSUS_MAX_Q || d > CENSUS_MAX_D {
        return Err(Error::Budget(format!("census needs q <= {CENSUS_MAX_Q} and d <= {CENSUS_MAX_D}")));
    }
    let (plain, selfdual, pairs) = match flavor {
        Flavor::Gl => gl_census(d, q)?,
        Flavor::U => u_census(d, q)?,
    };
    let r = |n: u64| ExactRational::from(n as i64);
    Ok(ClassCounts { d, flavor, q: r(q), n_plain: r(plain), n_selfdual: r(selfdual), m_pairs: r(pairs) })
}

/// `F_q` with addition and multiplication tables over element codes.
struct SmallField {
    q: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl SmallField {
    fn new(q: u64) -> Result<Self> {
        let f = GaloisField::with_order(q)?;
        let q = q as usize;
        let e = |i: usize| FiniteFieldElem(i as u64);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = f.add(e(a), e(b)).0 as usize;
                mul[a * q + b] = f.mul(e(a), e(b)).0 as usize;
            }
        }
        let inv = (0..q).map(|a| if a == 0 { 0 } else { f.inv(e(a)).unwrap().0 as usize }).collect();
        Ok(SmallField { q, add, mul, inv })
    }

    fn mul_monic(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut c = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                let m = self.mul[x * self.q + y];
                c[i + j] = self.add[c[i + j] * self.q + m];
            }
        }
        c
    }

    /// Monic polynomial of degree `d` from the base-`q` code of its lower coefficients.
    fn decode(&self, d: usize, mut code: usize) -> Vec<usize> {
        let mut c = Vec::with_capacity(d + 1);
        for _ in 0..d {
            c.push(code % self.q);
            code /= self.q;
        }
        c.push(1);
        c
    }

    fn encode(&self, p: &[usize]) -> usize {
        p[..p.len() - 1].iter().rev().fold(0, |acc, &c| acc * self.q + c)
    }
}

fn gl_census(d: usize, q: u64) -> Result<(u64, u64, u64)> {
    let f = SmallField::new(q)?;
    let qd = f.q.pow(d as u32);
    let mut reducible = vec![false; qd];
    for a in 1..=d / 2 {
        let b = d - a;
        for x in 0..f.q.pow(a as u32) {
            let px = f.decode(a, x);
            for y in 0..f.q.pow(b as u32) {
                let prod = f.mul_monic(&px, &f.decode(b, y));
                reducible[f.encode(&prod)] = true;
            }
        }
    }
    let (mut plain, mut selfdual, mut paired) = (0, 0, 0);
    for code in (0..qd).filter(|&c| !reducible[c]) {
        plain += 1;
        let phi = f.decode(d, code);
        if phi[0] == 0 {
            continue;
        }
        // φ*(t) = φ(0)^{-1} t^d φ(1/t)
        let c0 = f.inv[phi[0]];
        let star: Vec<usize> = phi.iter().rev().map(|&c| f.mul[c * f.q + c0]).collect();
        if star == phi {
            selfdual += 1;
        } else {
            paired += 1;
        }
    }
    Ok((plain, selfdual, paired / 2))
}

fn u_census(d: usize, q: u64) -> Result<(u64, u64, u64)> {
    // Fixed points of a ↦ a^{(-q)^d} form the cyclic group of order
    // q^d - (-1)^d, which sits in F_{q^d} for even d and in F_{q^{2d}} for odd d.
    let ext = if d % 2 == 0 { d } else { 2 * d };
    let big = GaloisField::with_order(q.pow(ext as u32))?;
    let m = if d % 2 == 0 { q.pow(d as u32) - 1 } else { q.pow(d as u32) + 1 };
    let h = big.element_of_order(m)?;
    let mut elems = Vec::with_capacity(m as usize);
    let mut index = HashMap::with_capacity(m as usize);
    let mut x = big.one();
    for i in 0..m as usize {
        index.insert(x, i);
        elems.push(x);
        x = big.mul(x, h);
    }
    let ftilde = |a: FiniteFieldElem| big.inv(big.pow(a, q)).expect("nonzero");
    let mut orbit_of = vec![usize::MAX; m as usize];
    let mut orbits: Vec<Vec<usize>> = vec![];
    for start in 0..m as usize {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![];
        let mut a = elems[start];
        loop {
            let i = index[&a];
            if orbit_of[i] != usize::MAX {
                break;
            }
            orbit_of[i] = id;
            orbit.push(i);
            a = ftilde(a);
        }
        orbits.push(orbit);
    }
    let (mut plain, mut selfdual, mut paired) = (0, 0, 0);
    for (id, orbit) in orbits.iter().enumerate() {
        if orbit.len() != d {
            continue;
        }
        plain += 1;
        let inverse = big.inv(elems[orbit[0]])?;
        if orbit_of[index[&inverse]] == id {
            selfdual += 1;
        } else {
            paired += 1;
        }
    }
    Ok((plain, selfdual, paired / 2))
}

/// TSV rows `flavor, d, q, N, N*, M*, source` for `d = 1..=d_max`.
pub fn census_tsv(flavor: Flavor, d_max: usize, q: u64, brute: bool) -> Result<String> {
    let mut out = String::from("flavor\td\tq\tN\tN*\tM*\tsource\n");
    let formula = class_counts_up_to(d_max, &ExactRational::from(q as i64), Parity::of(q), flavor)?;
    for c in &formula {
        writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\tformula", flavor, c.d, q, c.n_plain, c.n_selfdual, c.m_pairs).unwrap();
    }
    if brute {
        for d in 1..=d_max {
            let c = brute_poly_census(d, q, flavor)?;
            writeln!(out, "{}\t{}\t{}\t{}\t{}\t{}\tbrute", flavor, d, q, c.n_plain, c.n_selfdual, c.m_pairs).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q as qvar, QPolynomial, RationalFunction};

    fn r(n: i64) -> ExactRational {
        ExactRational::from(n)
    }

    #[test]
    fn mobius_values() {
        let mu: Vec<i64> = (1..=12).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }

    #[test]
    fn plain_counts() {
        assert_eq!(count_irreducible(1, &qvar()).unwrap(), qvar());
        let quad = RationalFunction::from_poly(QPolynomial::from_ints(&[0, -1, 1])) * RationalFunction::from(r(2)).inv().unwrap();
        assert_eq!(count_irreducible(2, &qvar()).unwrap(), quad);
        assert_eq!(count_irreducible(6, &r(2)).unwrap(), r(9));
        assert_eq!(count_u_irreducible(1, &qvar()).unwrap(), qvar() + RationalFunction::one());
        assert_eq!(count_u_irreducible(3, &qvar()).unwrap(), count_irreducible(3, &qvar()).unwrap());
        assert_eq!(count_u_irreducible(2, &r(2)).unwrap(), r(0));
        assert!(count_irreducible(0, &r(2)).is_err());
    }

    #[test]
    fn u_fixed_point_sums() {
        for q in [2, 3, 4, 5] {
            for m in 1..=8usize {
                let s = divisors(m).fold(r(0), |acc, k| acc + r(k as i64) * count_u_irreducible(k, &r(q)).unwrap());
                assert_eq!(s, r(q.pow(m as u32) - (-1i64).pow(m as u32)));
            }
        }
    }

    #[test]
    fn selfdual_examples() {
        let c = count_at(1, 2, Flavor::Gl).unwrap();
        assert_eq!((c.n_selfdual, c.m_pairs), (r(1), r(0)));
        let c = count_at(2, 2, Flavor::Gl).unwrap();
        assert_eq!(c.n_selfdual, r(1));
        for q in [2, 3, 4, 5] {
            for d in [3, 5, 7] {
                assert_eq!(count_at(d, q, Flavor::U).unwrap().n_selfdual, r(0));
            }
        }
    }

    #[test]
    fn census_examples() {
        let c = brute_poly_census(1, 3, Flavor::Gl).unwrap();
        assert_eq!((c.n_selfdual, c.m_pairs), (r(2), r(0)));
        assert_eq!(brute_poly_census(1, 2, Flavor::U).unwrap().n_plain, r(3));
        assert_eq!(brute_poly_census(2, 3, Flavor::Gl).unwrap().n_plain, r(3));
        assert_eq!(brute_poly_census(6, 2, Flavor::Gl).unwrap().n_plain, r(9));
        assert!(matches!(brute_poly_census(7, 2, Flavor::Gl), Err(Error::Budget(_))));
    }

    #[test]
    fn tsv_layout() {
        let t = census_tsv(Flavor::Gl, 2, 3, true).unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines[0], "flavor\td\tq\tN\tN*\tM*\tsource");
        assert_eq!(lines[1], "gl\t1\t3\t3\t2\t0\tformula");
        assert_eq!(lines[4], "gl\t2\t3\t3\t1\t1\tbrute");
    }
}
