//! Infinite products in `u` over the coefficient field, expanded into
//! [`TruncatedSeries`].
//!
//! Single-index products `∏_{i≥0} (1 ± c r^i u^a)^{±1}` use Euler's two
//! closed forms, so every coefficient is an exact finite expression.
//! Products over pairs `i < j` are expanded through the logarithm: each
//! `log(1 + y)` becomes a power sum in `x^{m(i+j)}`, and
//! `Σ_{1≤i<j} y^{i+j} = y³ / ((1 - y)(1 - y²))` is closed. Truncating the
//! index range instead would give wrong rational functions at every order.

use std::str::FromStr;

use crate::chars::GroupOrderTables;
use crate::error::{Error, Result};
use crate::exact::{sign, Field, TruncatedSeries};
use crate::Parity;

/// `∏_{i≥0} (1 + sign · c · r^i · u^a)^{exponent_sign}`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometricFactorSpec<F> {
    pub sign: i8,
    pub u_power: usize,
    pub coeff_base: F,
    pub ratio: F,
    pub exponent_sign: i8,
}

/// `∏_{1≤i<j} (1 + sign · v · u^a · x^{i+j})^{exponent}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairProductSpec<F> {
    pub sign: i8,
    pub v_coeff: F,
    pub u_power: usize,
    pub base: F,
    pub exponent: i64,
}

impl<F: Field> GeometricFactorSpec<F> {
    pub fn new(sign: i8, u_power: usize, coeff_base: F, ratio: F, exponent_sign: i8) -> Self {
        GeometricFactorSpec { sign, u_power, coeff_base, ratio, exponent_sign }
    }
}

impl<F: Field> PairProductSpec<F> {
    pub fn new(sign: i8, v_coeff: F, u_power: usize, base: F, exponent: i64) -> Self {
        PairProductSpec { sign, v_coeff, u_power, base, exponent }
    }
}

fn check_sign(s: i8, what: &str) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what} must be ±1, got {s}")))
    }
}

/// Expands a single-index product with Euler's identities:
///
/// * `∏ (1 - t r^i)^{-1} = Σ_n t^n / ((1-r)···(1-r^n))`
/// * `∏ (1 + t r^i) = Σ_n t^n r^{n(n-1)/2} / ((1-r)···(1-r^n))`
pub fn euler_expand<F: Field>(spec: &GeometricFactorSpec<F>, order: usize) -> Result<TruncatedSeries<F>> {
    check_sign(spec.sign, "sign")?;
    check_sign(spec.exponent_sign, "exponent_sign")?;
    if spec.u_power == 0 {
        return Err(Error::Precondition("u_power must be positive".into()));
    }
    if !spec.ratio.is_formally_small() {
        return Err(Error::Precondition(format!(
            "ratio {} has no positive valuation; the product does not expand",
            spec.ratio
        )));
    }
    let reciprocal = spec.exponent_sign < 0;
    // t = sign·c for (1 + t r^i), and t = -sign·c for (1 - t r^i)^{-1}.
    let t = if reciprocal == (spec.sign > 0) {
        -spec.coeff_base.clone()
    } else {
        spec.coeff_base.clone()
    };
    let mut coeffs = vec![F::zero(); order + 1];
    let mut t_pow = F::one();
    let mut poch = F::one();
    let mut r_pow = F::one();
    let mut r_tri = F::one();
    for n in 0..=order / spec.u_power {
        if n > 0 {
            r_pow *= &spec.ratio;
            poch *= &(F::one() - &r_pow);
            t_pow *= &t;
            if !reciprocal {
                // r^{n(n-1)/2} = r^{(n-1)(n-2)/2} · r^{n-1}
                r_tri = r_tri * &r_pow * &spec.ratio.inv()?;
            }
        }
        let mut c = t_pow.try_div(&poch)?;
        if !reciprocal {
            c *= &r_tri;
        }
        coeffs[n * spec.u_power] = c;
    }
    Ok(TruncatedSeries::new(coeffs, order))
}

/// Expands a pair product through `exp(exponent · Σ_m (-1)^{m+1} (sign·v)^m u^{am} S(x^m) / m)`.
pub fn pair_expand<F: Field>(spec: &PairProductSpec<F>, order: usize) -> Result<TruncatedSeries<F>> {
    check_sign(spec.sign, "sign")?;
    if spec.u_power == 0 {
        return Err(Error::Precondition("u_power must be positive".into()));
    }
    if spec.exponent == 0 || spec.v_coeff.is_zero() {
        return Ok(TruncatedSeries::one(order));
    }
    if !spec.base.is_formally_small() {
        return Err(Error::Precondition(format!("pair base {} has no positive valuation", spec.base)));
    }
    let sv = if spec.sign > 0 { spec.v_coeff.clone() } else { -spec.v_coeff.clone() };
    let mut log = vec![F::zero(); order + 1];
    let mut sv_pow = F::one();
    let mut x_pow = F::one();
    let exponent = F::from_int(spec.exponent);
    for m in 1..=order / spec.u_power {
        sv_pow *= &sv;
        x_pow *= &spec.base;
        let y = x_pow.clone();
        let y2 = y.clone() * &y;
        let s = (y2.clone() * &y).try_div(&((F::one() - &y) * &(F::one() - &y2)))?;
        let c = sign::<F>(m as i64 + 1) * &sv_pow * &s * &exponent * &F::from_int(m as i64).inv()?;
        log[m * spec.u_power] = c;
    }
    TruncatedSeries::new(log, order).exp()
}

/// Product of single-index and pair factors, each possibly repeated.
fn product<F: Field>(
    order: usize,
    singles: &[(GeometricFactorSpec<F>, i64)],
    pairs: &[PairProductSpec<F>],
) -> Result<TruncatedSeries<F>> {
    let mut acc = TruncatedSeries::one(order);
    for (spec, times) in singles {
        let s = euler_expand(spec, order)?;
        acc = acc.mul(&s.pow(*times)?);
    }
    for spec in pairs {
        acc = acc.mul(&pair_expand(spec, order)?);
    }
    Ok(acc)
}

/// The generating functions addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGf {
    /// `∏ (1 + u/q^i)^e / (1 - u²/q^i)`: real degree sums of `GL(n,q)`.
    GlRealGf,
    /// `Σ u^n q^{C(n,2)} Σ_r (...)`: involution counts of `GL(n,q)` over `(q^n-1)···(q-1)`.
    GlInvolGf,
    /// The `U(n,q)` real-degree product with single and pair factors.
    URealGf,
    /// `∏ (1 + u/(-q)^i)^e / (1 - u²/(-q)^i)`: involution counts of `U(n,q)`.
    UInvolGf,
    /// Half sum of the two `U` series, with `(-1)^{C(n,2)}` applied per coefficient.
    UEpsPlusGf,
    /// Half difference of the two `U` series.
    UEpsMinusGf,
}

impl NamedGf {
    pub const ALL: [NamedGf; 6] = [
        NamedGf::GlRealGf,
        NamedGf::GlInvolGf,
        NamedGf::URealGf,
        NamedGf::UInvolGf,
        NamedGf::UEpsPlusGf,
        NamedGf::UEpsMinusGf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGf::GlRealGf => "gl_real_gf",
            NamedGf::GlInvolGf => "gl_invol_gf",
            NamedGf::URealGf => "u_real_gf",
            NamedGf::UInvolGf => "u_invol_gf",
            NamedGf::UEpsPlusGf => "u_eps_plus_gf",
            NamedGf::UEpsMinusGf => "u_eps_minus_gf",
        }
    }
}

impl FromStr for NamedGf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGf::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Unknown(s.to_string()))
    }
}

/// `∏_{i≥1} (1 + u/q^i)^e · ∏_{i≥1} (1 - u²/q^i)^{-1}`.
pub fn gl_real_gf<F: Field>(parity: Parity, q: &F, order: usize) -> Result<TruncatedSeries<F>> {
    let x = q.inv()?;
    product(
        order,
        &[
            (GeometricFactorSpec::new(1, 1, x.clone(), x.clone(), 1), parity.e()),
            (GeometricFactorSpec::new(-1, 2, x.clone(), x, -1), 1),
        ],
        &[],
    )
}

/// Involution closed forms divided by `(q^n - 1)···(q - 1)`:
/// `q^{C(n,2)} Σ_r 1/(q^{r(2n-3r)} γ_r γ_{n-2r})` for even parity and
/// `q^{C(n,2)} Σ_r 1/(γ_r γ_{n-r})` for odd.
pub fn gl_invol_gf<F: Field>(parity: Parity, q: &F, order: usize) -> Result<TruncatedSeries<F>> {
    let tables = GroupOrderTables::new(q, order);
    let coeffs = (0..=order)
        .map(|n| {
            let mut sum = F::zero();
            match parity {
                Parity::Even => {
                    for r in 0..=n / 2 {
                        let e = (r * (2 * n - 3 * r)) as i64;
                        let d = q.pow(e)? * &tables.gamma[r] * &tables.gamma[n - 2 * r];
                        sum += &d.inv()?;
                    }
                }
                Parity::Odd => {
                    for r in 0..=n {
                        sum += &(tables.gamma[r].clone() * &tables.gamma[n - r]).inv()?;
                    }
                }
            }
            Ok(sum * &q.pow(binom2(n))?)
        })
        .collect::<Result<Vec<F>>>()?;
    Ok(TruncatedSeries::new(coeffs, order))
}

/// The product whose coefficient of `u^n`, times `(-1)^n (q^n - (-1)^n)···(q + 1)`,
/// is the real character degree sum of `U(n,q)`:
///
/// `∏_i (1 + u/(-q)^i)^e / (1 + u²/(-q)^{2i-1}) · ∏_{i<j} (1 + u²/(-q)^{i+j})^{1-e}
///  (1 - u²/(-q)^{i+j})^e / (1 + u²/(-q)^{i+j-1})`.
pub fn u_real_gf<F: Field>(parity: Parity, q: &F, order: usize) -> Result<TruncatedSeries<F>> {
    let mq = -q.clone();
    let x = mq.inv()?;
    let e = parity.e();
    product(
        order,
        &[
            (GeometricFactorSpec::new(1, 1, x.clone(), x.clone(), 1), e),
            (GeometricFactorSpec::new(1, 2, x.clone(), x.clone() * &x, -1), 1),
        ],
        &[
            PairProductSpec::new(1, F::one(), 2, x.clone(), 1 - e),
            PairProductSpec::new(-1, F::one(), 2, x.clone(), e),
            PairProductSpec::new(1, mq, 2, x, -1),
        ],
    )
}

/// `∏_i (1 + u/(-q)^i)^e / (1 - u²/(-q)^i)`.
pub fn u_invol_gf<F: Field>(parity: Parity, q: &F, order: usize) -> Result<TruncatedSeries<F>> {
    let x = (-q.clone()).inv()?;
    product(
        order,
        &[
            (GeometricFactorSpec::new(1, 1, x.clone(), x.clone(), 1), parity.e()),
            (GeometricFactorSpec::new(-1, 2, x.clone(), x, -1), 1),
        ],
        &[],
    )
}

/// Coefficientwise `(A_n ± (-1)^{C(n,2)} I_n) / 2` from the real-degree and
/// involution series.
pub fn u_eps_gf<F: Field>(parity: Parity, q: &F, order: usize, plus: bool) -> Result<TruncatedSeries<F>> {
    let a = u_real_gf(parity, q, order)?;
    let i = u_invol_gf(parity, q, order)?;
    let half = F::from_int(2).inv()?;
    let coeffs = (0..=order)
        .map(|n| {
            let s = sign::<F>(binom2(n));
            let term = s * i.coeff(n);
            let c = if plus { a.coeff(n).clone() + &term } else { a.coeff(n).clone() - &term };
            c * &half
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs, order))
}

/// Builds a named generating function at `q` (symbolic or numeric).
pub fn named_gf_at<F: Field>(name: NamedGf, parity: Parity, q: &F, order: usize) -> Result<TruncatedSeries<F>> {
    match name {
        NamedGf::GlRealGf => gl_real_gf(parity, q, order),
        NamedGf::GlInvolGf => gl_invol_gf(parity, q, order),
        NamedGf::URealGf => u_real_gf(parity, q, order),
        NamedGf::UInvolGf => u_invol_gf(parity, q, order),
        NamedGf::UEpsPlusGf => u_eps_gf(parity, q, order, true),
        NamedGf::UEpsMinusGf => u_eps_gf(parity, q, order, false),
    }
}

/// Builds a named generating function with symbolic `q`.
pub fn named_gf(name: &str, parity: Parity, order: usize) -> Result<TruncatedSeries<crate::exact::RationalFunction>> {
    named_gf_at(name.parse()?, parity, &crate::exact::q(), order)
}

pub(crate) fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, q_pow, ExactRational, RationalFunction as R};
    use crate::partitions::gaussian_binomial;

    fn one() -> R {
        R::one()
    }

    fn qpoch_inv(l: usize) -> R {
        // 1 / ((1 - 1/q)···(1 - 1/q^l))
        (1..=l)
            .fold(one(), |acc, i| acc * (one() - q_pow(-(i as i64))))
            .inv()
            .unwrap()
    }

    #[test]
    fn euler_plus_coefficients() {
        let order = 7;
        let s = euler_expand(&GeometricFactorSpec::new(1, 1, q_pow(-1), q_pow(-1), 1), order).unwrap();
        for l in 0..=order {
            let expected = q_pow(-((l * (l + 1) / 2) as i64)) * qpoch_inv(l);
            assert_eq!(s.coeff(l), &expected, "l = {l}");
        }
    }

    #[test]
    fn euler_reciprocal_coefficients() {
        let order = 8;
        let s = euler_expand(&GeometricFactorSpec::new(-1, 2, q_pow(-1), q_pow(-1), -1), order).unwrap();
        for k in 0..=order {
            let expected = if k % 2 == 0 {
                let r = k / 2;
                q_pow(-(r as i64)) * qpoch_inv(r)
            } else {
                R::zero()
            };
            assert_eq!(s.coeff(k), &expected, "k = {k}");
        }
    }

    #[test]
    fn euler_order_zero_and_errors() {
        let s = euler_expand(&GeometricFactorSpec::new(1, 1, q_pow(-1), q_pow(-1), 1), 0).unwrap();
        assert_eq!(s, TruncatedSeries::one(0));
        let bad = GeometricFactorSpec::new(1, 1, q_pow(-1), q(), 1);
        assert!(euler_expand(&bad, 3).is_err());
        let bad = GeometricFactorSpec::new(2, 1, q_pow(-1), q_pow(-1), 1);
        assert!(euler_expand(&bad, 3).is_err());
    }

    // Direct product of finitely many factors, compared only where it has settled.
    fn finite_product(order: usize, factors: usize, f: impl Fn(usize) -> TruncatedSeries<R>) -> TruncatedSeries<R> {
        (0..factors).fold(TruncatedSeries::one(order), |acc, i| acc.mul(&f(i)))
    }

    #[test]
    fn euler_matches_numeric_finite_product() {
        // At q = 3 and 40 factors the tail is below 3^-40; compare exact
        // closed forms against a finite product after rounding away the tail.
        type Q = ExactRational;
        let order = 5;
        let x = Q::new(1, 3).unwrap();
        let spec = GeometricFactorSpec::new(1, 1, x.clone(), x.clone(), 1);
        let closed = euler_expand(&spec, order).unwrap();
        let mut prod = TruncatedSeries::<Q>::one(order);
        let mut xi = x.clone();
        for _ in 0..40 {
            prod = prod.mul(&TruncatedSeries::new(vec![Q::one(), xi.clone()], order));
            xi = xi * &x;
        }
        let tol = Q::new(1, 1i64 << 40).unwrap();
        for k in 0..=order {
            assert!((closed.coeff(k).clone() - prod.coeff(k)).abs() < tol);
        }
    }

    #[test]
    fn pair_product_reduction() {
        // ∏_{i<j} (1 - u²/q^{i+j}) / (1 - u²/q^{i+j-1}) = ∏_i (1 - u²/q^{2i})^{-1}
        let order = 10;
        let x = q_pow(-1);
        let lhs = pair_expand(&PairProductSpec::new(-1, one(), 2, x.clone(), 1), order)
            .unwrap()
            .mul(&pair_expand(&PairProductSpec::new(-1, q(), 2, x.clone(), -1), order).unwrap());
        let rhs = euler_expand(&GeometricFactorSpec::new(-1, 2, q_pow(-2), q_pow(-2), -1), order).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn pair_trivial() {
        let s = pair_expand(&PairProductSpec::new(-1, R::zero(), 2, q_pow(-1), 1), 6).unwrap();
        assert_eq!(s, TruncatedSeries::one(6));
    }

    /// Expansion of a rational function vanishing at infinity in powers of 1/q.
    fn expand_at_infinity(f: &R, terms: usize) -> Vec<ExactRational> {
        // f(q) = num(q)/den(q); with w = 1/q, f = w^{dd-dn} rev(num)(w) / rev(den)(w).
        let (dn, dd) = (f.numer().degree().unwrap(), f.denom().degree().unwrap());
        let shift = dd - dn;
        let num = f.numer().reversed();
        let den = f.denom().reversed();
        let inv = TruncatedSeries::new(den.coeffs().to_vec(), terms).inv().unwrap();
        let s = TruncatedSeries::new(num.coeffs().to_vec(), terms).mul(&inv);
        let mut out = vec![ExactRational::from(0); shift.min(terms + 1)];
        out.extend(s.coeffs().iter().cloned());
        out.truncate(terms + 1);
        out
    }

    #[test]
    fn pair_against_truncated_double_product() {
        // Coefficients of ∏_{i<j} (1 - u²/q^{i+j}) compared with the product
        // over i < j ≤ 12, as expansions in 1/q through w^12 (exact there).
        let order = 6;
        let spec = PairProductSpec::new(-1, one(), 2, q_pow(-1), 1);
        let s = pair_expand(&spec, order).unwrap();
        let direct = finite_product(order, 1, |_| {
            let mut acc = TruncatedSeries::one(order);
            for j in 2..=12i64 {
                for i in 1..j {
                    acc = acc.mul(&TruncatedSeries::new(vec![one(), R::zero(), -q_pow(-(i + j))], order));
                }
            }
            acc
        });
        for k in [2, 4, 6] {
            let a = expand_at_infinity(s.coeff(k), 12);
            let b = expand_at_infinity(direct.coeff(k), 12);
            assert_eq!(a, b, "u^{k}");
        }
        let u2 = -q_pow(-3) * ((one() - q_pow(-1)) * (one() - q_pow(-2))).inv().unwrap();
        assert_eq!(s.coeff(2), &u2);
    }

    #[test]
    fn named_gl_coefficient() {
        let s = named_gf("gl_real_gf", Parity::Even, 2).unwrap();
        let scaled = s.coeff(2).clone() * (q() * q() - one()) * (q() - one());
        assert_eq!(scaled, q() * q());
    }

    #[test]
    fn named_u_examples() {
        let s = named_gf("u_invol_gf", Parity::Even, 3).unwrap();
        assert_eq!(s.coeff(0), &one());
        let s = named_gf("u_real_gf", Parity::Odd, 2).unwrap();
        let scaled = s.coeff(2).clone() * (q() * q() - one()) * (q() + one());
        assert_eq!(scaled, q() * q() + q());
        assert!(matches!(named_gf("nope", Parity::Odd, 2), Err(Error::Unknown(_))));
    }

    #[test]
    fn q_binomial_theorem() {
        // (1 + xq)···(1 + xq^n) = Σ_i [n i]_q q^{i(i+1)/2} x^i, as polynomials in x over Q(q)
        use crate::exact::Poly;
        for n in 0..=10usize {
            let lhs = (1..=n as i64).fold(Poly::<R>::one(), |acc, i| &acc * &Poly::new(vec![one(), q_pow(i)]));
            for i in 0..=n {
                let g = R::from_poly(gaussian_binomial(n as i64, i as i64).unwrap());
                assert_eq!(lhs.coeff(i), g * q_pow((i * (i + 1) / 2) as i64), "n = {n}, i = {i}");
            }
        }
    }

    #[test]
    fn substitution_principle() {
        let order = 8;
        for parity in [Parity::Even, Parity::Odd] {
            let gl = gl_real_gf(parity, &q(), order).unwrap();
            let flipped = gl.try_map(|c| c.substitute(&-q())).unwrap();
            assert_eq!(flipped, u_invol_gf(parity, &q(), order).unwrap());
        }
    }
}
