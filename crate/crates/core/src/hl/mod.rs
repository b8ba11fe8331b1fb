//! Principal specializations of Schur and Hall–Littlewood functions,
//! a finite-variable Hall–Littlewood oracle, and Rogers–Szegő polynomials.
//!
//! `P_λ(1, z, z², ...; t)` is computed from the inverse Kostka–Foulkes
//! transition `P_λ = Σ_μ (K^{-1})_{λμ}(t) s_μ` and the hook formula for
//! `s_μ(1, z, z², ...)`. Every function is generic over the coefficient
//! field, so `z` and `t` may be numbers, rational functions of `q`, or
//! independent symbols.

mod kostka;
mod warnaar;

pub use kostka::{charge, kostka_foulkes, reading_word, semistandard_tableaux, KostkaMatrix, Tableau, KOSTKA_BUDGET};
pub use warnaar::{warnaar_sides, WarnaarParams};

use crate::error::{Error, Result};
use crate::exact::{Field, RationalFunction};
use crate::partitions::{gaussian_binomial_at, Partition};

/// `s_λ(1, z, z², ...) = z^{n(λ)} / ∏_b (1 - z^{h(b)})`.
pub fn schur_principal<F: Field>(lam: &Partition, z: &F) -> Result<F> {
    let mut den = F::one();
    for h in lam.hooks() {
        let f = F::one() - z.pow(h as i64)?;
        if f.is_zero() {
            return Err(Error::Pole(format!("1 - z^{h} vanishes at z = {z}")));
        }
        den *= &f;
    }
    z.pow(lam.n_stat() as i64)?.try_div(&den)
}

/// `P_λ(1, z, z², ...; t)`.
pub fn hl_principal<F: Field>(lam: &Partition, z: &F, t: &F) -> Result<F> {
    let k = kostka_foulkes(lam.size())?;
    let mut acc = F::zero();
    for mu in k.order() {
        let c = k.inverse_entry(lam, mu);
        if c.is_zero() {
            continue;
        }
        acc += &(c.eval_in(t) * &schur_principal(mu, z)?);
    }
    Ok(acc)
}

/// A Hall–Littlewood principal value with its arguments.
#[derive(Clone, Debug, PartialEq)]
pub struct HLValue {
    pub lam: Partition,
    pub z: RationalFunction,
    pub t: RationalFunction,
    pub value: RationalFunction,
}

pub fn hl_value(lam: &Partition, z: &RationalFunction, t: &RationalFunction) -> Result<HLValue> {
    Ok(HLValue { lam: lam.clone(), z: z.clone(), t: t.clone(), value: hl_principal(lam, z, t)? })
}

/// Most variables accepted by [`hl_finite_oracle`].
pub const FINITE_ORACLE_MAX_VARS: usize = 6;

/// `P_λ(x_1, ..., x_m; t)` by the coset form of the symmetrization:
/// the sum over distinct rearrangements `α` of `(λ, 0, ..., 0)` of
/// `x^α ∏_{α_i > α_j} (x_i - t x_j) / (x_i - x_j)`.
///
/// Unlike the full sum over `S_m` this needs no division by `v_λ(t)`, so it is
/// valid at every `t`, including roots of unity. The `x_i` must be distinct.
pub fn hl_finite_oracle<F: Field>(lam: &Partition, x: &[F], t: &F) -> Result<F> {
    let m = x.len();
    if m < lam.len() {
        return Ok(F::zero());
    }
    if m > FINITE_ORACLE_MAX_VARS {
        return Err(Error::Budget(format!("finite oracle takes at most {FINITE_ORACLE_MAX_VARS} variables")));
    }
    for i in 0..m {
        for j in i + 1..m {
            if x[i] == x[j] {
                return Err(Error::Precondition(format!("sample points x_{} and x_{} coincide", i + 1, j + 1)));
            }
        }
    }
    let mut alpha: Vec<usize> = lam.parts().to_vec();
    alpha.resize(m, 0);
    alpha.sort_unstable();
    let mut total = F::zero();
    loop {
        let mut term = F::one();
        for (xi, &a) in x.iter().zip(&alpha) {
            term *= &xi.pow(a as i64)?;
        }
        for i in 0..m {
            for j in 0..m {
                if alpha[i] > alpha[j] {
                    let num = x[i].clone() - &(t.clone() * &x[j]);
                    term = term * &num.try_div(&(x[i].clone() - &x[j]))?;
                }
            }
        }
        total += &term;
        if !next_permutation(&mut alpha) {
            break;
        }
    }
    Ok(total)
}

/// Full symmetrization `(1/v_λ(t)) Σ_{w ∈ S_m} w(x^λ ∏_{i<j} (x_i - t x_j)/(x_i - x_j))`,
/// written over the Vandermonde determinant. Needs `v_λ(t) ≠ 0`.
pub fn hl_symmetrization<F: Field>(lam: &Partition, x: &[F], t: &F) -> Result<F> {
    let m = x.len();
    if m < lam.len() {
        return Ok(F::zero());
    }
    let mut lam_pad = lam.parts().to_vec();
    lam_pad.resize(m, 0);
    let mut perm: Vec<usize> = (0..m).collect();
    let mut total = F::zero();
    loop {
        let mut term = F::from_int(permutation_sign(&perm));
        for (i, &pi) in perm.iter().enumerate() {
            term *= &x[pi].pow(lam_pad[i] as i64)?;
        }
        for i in 0..m {
            for j in i + 1..m {
                term *= &(x[perm[i]].clone() - &(t.clone() * &x[perm[j]]));
            }
        }
        total += &term;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let mut vandermonde = F::one();
    for i in 0..m {
        for j in i + 1..m {
            vandermonde *= &(x[i].clone() - &x[j]);
        }
    }
    let mut v = F::one();
    let mut mults: Vec<usize> = lam.multiplicities().values().copied().collect();
    mults.push(m - lam.len());
    for mi in mults {
        // v_m(t) = ∏_{j=1}^{m} (1 + t + ... + t^{j-1})
        for j in 1..=mi {
            let mut s = F::zero();
            for k in 0..j {
                s += &t.pow(k as i64)?;
            }
            v *= &s;
        }
    }
    total.try_div(&(vandermonde * &v))
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Rogers–Szegő polynomial `H_m(z; t) = Σ_j [m j]_t z^j`.
pub fn rogers_szego<F: Field>(m: usize, z: &F, t: &F) -> F {
    let mut acc = F::zero();
    let mut zj = F::one();
    for j in 0..=m {
        acc += &(gaussian_binomial_at(m, j, t) * &zj);
        zj *= z;
    }
    acc
}

/// `h_λ(z; t) = ∏_i H_{m_i(λ)}(z; t)`.
pub fn rs_multi<F: Field>(lam: &Partition, z: &F, t: &F) -> F {
    lam.multiplicities()
        .values()
        .fold(F::one(), |acc, &m| acc * rogers_szego(m, z, t))
}

/// `(c; d)_m = (1 - c)(1 - cd)···(1 - cd^{m-1})`.
pub fn pochhammer_cd<F: Field>(c: &F, d: &F, m: usize) -> F {
    let mut acc = F::one();
    let mut cd = c.clone();
    for _ in 0..m {
        acc *= &(F::one() - &cd);
        cd *= d;
    }
    acc
}

/// `c_ν(t) = ∏_i (1 - t)(1 - t³)···(1 - t^{m_i(ν) - 1})` for `ν` with all multiplicities even.
pub fn c_nu<F: Field>(nu: &Partition, t: &F) -> Result<F> {
    let mut acc = F::one();
    for &m in nu.multiplicities().values() {
        if m % 2 != 0 {
            return Err(Error::Precondition(format!("{nu} has an odd multiplicity")));
        }
        for k in (1..m).step_by(2) {
            acc *= &(F::one() - t.pow(k as i64)?);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, q_pow, ExactRational, RatFunc, RationalFunction as R};
    use crate::partitions::enumerate_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn one() -> R {
        R::one()
    }

    fn mz() -> R {
        -q_pow(-1)
    }

    #[test]
    fn schur_examples() {
        let z = q_pow(-1);
        assert_eq!(schur_principal(&p(&[1]), &z).unwrap(), (one() - z.clone()).inv().unwrap());
        let expected = q_pow(-1) * ((one() - q_pow(-1)).pow(2).unwrap() * (one() - q_pow(-3))).inv().unwrap();
        assert_eq!(schur_principal(&p(&[2, 1]), &z).unwrap(), expected);
        assert!(matches!(schur_principal(&p(&[2]), &one()), Err(Error::Pole(_))));
    }

    #[test]
    fn elementary_principal_value() {
        // e_m(1, -1/q, 1/q², ...) = (-1)^{C(m,2)} q^m / ((q+1)···(q^m - (-1)^m))
        for m in 1..=6usize {
            let lhs = schur_principal(&Partition::column(m), &mz()).unwrap();
            let mut den = one();
            for i in 1..=m as i64 {
                den = den * (q().pow(i).unwrap() - R::from(ExactRational::from((-1i64).pow(i as u32))));
            }
            let s = if (m * (m - 1) / 2) % 2 == 0 { one() } else { -one() };
            assert_eq!(lhs, s * q().pow(m as i64).unwrap() * den.inv().unwrap(), "m = {m}");
        }
    }

    #[test]
    fn displayed_hall_littlewood_values() {
        let t = q_pow(-1);
        let qq = q();
        let d = (qq.clone() + one()) * (qq.clone() * qq.clone() - one());
        let p2 = hl_principal(&p(&[2]), &mz(), &t).unwrap();
        assert_eq!(p2, qq.clone() * (qq.clone() * qq.clone() + one()) * d.inv().unwrap());
        let p11 = hl_principal(&p(&[1, 1]), &mz(), &t).unwrap();
        assert_eq!(p11, -(qq.clone() * qq.clone()) * d.inv().unwrap());
        // P_{(1^m)} does not depend on t.
        assert_eq!(hl_principal(&p(&[1, 1]), &mz(), &R::from(ExactRational::from(5))).unwrap(), p11);
    }

    #[test]
    fn row_value_from_product() {
        // P_(m)(x; t) = (1 - t)^{-1} [u^m] ∏ (1 - x_i t u)/(1 - x_i u)
        use crate::qseries::{euler_expand, GeometricFactorSpec};
        let (z, t) = (mz(), q_pow(-1));
        let order = 6;
        let num = euler_expand(&GeometricFactorSpec::new(-1, 1, t.clone(), z.clone(), 1), order).unwrap();
        let den = euler_expand(&GeometricFactorSpec::new(-1, 1, one(), z.clone(), -1), order).unwrap();
        let prod = num.mul(&den);
        for m in 1..=order {
            let expected = prod.coeff(m).clone() * (one() - t.clone()).inv().unwrap();
            assert_eq!(hl_principal(&Partition::row(m), &z, &t).unwrap(), expected, "m = {m}");
        }
    }

    #[test]
    fn hall_littlewood_at_t_equal_z() {
        // P_λ(1, t, t², ...; t) = t^{n(λ)} / ∏_i (t; t)_{m_i(λ)}
        let t = q_pow(-1);
        for n in 1..=5 {
            for lam in enumerate_partitions(n) {
                let mut den = one();
                for &m in lam.multiplicities().values() {
                    den = den * pochhammer_cd(&t, &t, m);
                }
                let expected = t.pow(lam.n_stat() as i64).unwrap() * den.inv().unwrap();
                assert_eq!(hl_principal(&lam, &t, &t).unwrap(), expected, "{lam}");
            }
        }
    }

    type T2 = RatFunc<RatFunc<R>>;

    #[test]
    fn two_variable_oracle() {
        // Field Q(q)(a)(b) with x = (a, b) symbolic and t = q.
        let a: T2 = RatFunc::from(RatFunc::<R>::var());
        let b: T2 = RatFunc::var();
        let t: T2 = RatFunc::from(RatFunc::<R>::from(q()));
        let x = [a.clone(), b.clone()];
        assert_eq!(hl_finite_oracle(&p(&[1]), &x, &t).unwrap(), a.clone() + b.clone());
        let expected = a.clone() * a.clone() + b.clone() * b.clone() + (T2::one() - t.clone()) * a.clone() * b.clone();
        assert_eq!(hl_finite_oracle(&p(&[2]), &x, &t).unwrap(), expected);
        assert_eq!(hl_symmetrization(&p(&[2]), &x, &t).unwrap(), expected);
        assert!(hl_finite_oracle(&p(&[1]), &[a.clone(), a], &t).is_err());
    }

    #[test]
    fn coset_form_matches_symmetrization() {
        let x: Vec<R> = (0..4).map(|i| q_pow(-i)).collect();
        let t = R::from(ExactRational::new(2, 7).unwrap());
        for n in 0..=4 {
            for lam in enumerate_partitions(n) {
                assert_eq!(
                    hl_finite_oracle(&lam, &x, &t).unwrap(),
                    hl_symmetrization(&lam, &x, &t).unwrap(),
                    "{lam}"
                );
            }
        }
    }

    #[test]
    fn finite_oracle_converges_for_two_one() {
        let (z, t) = (q_pow(-1), q_pow(-1));
        let lam = p(&[2, 1]);
        let full = hl_principal(&lam, &z, &t).unwrap();
        for m in 4..=6 {
            let x: Vec<R> = (0..m).map(|i| z.pow(i).unwrap()).collect();
            let diff = full.clone() - hl_finite_oracle(&lam, &x, &t).unwrap();
            assert!(diff.valuation_at_infinity().unwrap() >= m, "m = {m}");
        }
    }

    #[test]
    fn rogers_szego_values() {
        let t = q();
        let z = q_pow(-1);
        assert_eq!(rogers_szego(2, &z, &t), one() + (one() + t.clone()) * z.clone() + z.clone() * z.clone());
        let m1 = -one();
        assert_eq!(rogers_szego(2, &one(), &m1), R::from(ExactRational::from(2)));
        assert_eq!(rogers_szego(2, &m1, &q_pow(-1)), pochhammer_cd(&q_pow(-1), &q_pow(-2), 1));
        assert!(rogers_szego(3, &m1, &m1).is_zero());
        assert_eq!(pochhammer_cd(&z, &t, 0), one());
    }

    #[test]
    fn rogers_szego_at_minus_one() {
        let z = q();
        let m1 = -one();
        let z2 = z.clone() * z.clone() + one();
        for m in 0..=10usize {
            let expected = if m % 2 == 0 {
                z2.pow((m / 2) as i64).unwrap()
            } else {
                (z.clone() + one()) * z2.pow(((m - 1) / 2) as i64).unwrap()
            };
            assert_eq!(rogers_szego(m, &z, &m1), expected, "m = {m}");
            let ceil = R::from(ExactRational::from(1i64 << m.div_ceil(2)));
            assert_eq!(rogers_szego(m, &one(), &m1), ceil);
        }
    }

    #[test]
    fn c_nu_at_minus_one() {
        let m1 = -one();
        for n in (0..=8).step_by(2) {
            for nu in enumerate_partitions(n).into_iter().filter(|nu| nu.conjugate().is_even()) {
                let expected = R::from(ExactRational::from(1i64 << (nu.len() / 2)));
                assert_eq!(c_nu(&nu, &m1).unwrap(), expected, "{nu}");
            }
        }
    }
}
