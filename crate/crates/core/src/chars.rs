//! Character degrees and real character degree sums of `GL(n,q)`, `U(n,q)`
//! and the classical Weyl groups, with the matching involution counts.
//!
//! A real character is a choice of partition per self-dual class and one
//! shared partition per dual pair, of total weight `n`. Sums over them are
//! computed three ways: by enumerating parameters over an explicit census
//! of classes, from generating-function coefficients, and from the
//! Hall–Littlewood partition sums.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{sign, ExactRational, Field, TruncatedSeries};
use crate::hl::{hl_principal, pochhammer_cd, rs_multi};
use crate::partitions::{enumerate_partitions, Partition};
use crate::polycount::brute_poly_census;
use crate::qseries::{binom2, gl_real_gf, u_eps_gf, u_invol_gf, u_real_gf};
use crate::{Flavor, Parity};

/// `γ_j = |GL(j,q)|` and `ω_j = |U(j,q)|` for `j = 0..=n`, with the
/// unipotent-free factors `(q^j - 1)···(q - 1)` and `(q^j - (-1)^j)···(q + 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupOrderTables<F> {
    pub gamma: Vec<F>,
    pub omega: Vec<F>,
    pub gl_factor: Vec<F>,
    pub u_factor: Vec<F>,
}

impl<F: Field> GroupOrderTables<F> {
    pub fn new(q: &F, n: usize) -> Self {
        let mut gl_factor = vec![F::one()];
        let mut u_factor = vec![F::one()];
        let mut qi = F::one();
        for i in 1..=n {
            qi *= q;
            gl_factor.push(gl_factor[i - 1].clone() * &(qi.clone() - F::one()));
            u_factor.push(u_factor[i - 1].clone() * &(qi.clone() - sign::<F>(i as i64)));
        }
        let tri = |j: usize| q.pow(binom2(j)).expect("q is nonzero");
        let gamma = (0..=n).map(|j| tri(j) * &gl_factor[j]).collect();
        let omega = (0..=n).map(|j| tri(j) * &u_factor[j]).collect();
        GroupOrderTables { gamma, omega, gl_factor, u_factor }
    }

    /// The per-group factor `(q^n - 1)···(q - 1)` or `(q^n - (-1)^n)···(q + 1)`.
    pub fn factor(&self, flavor: Flavor, n: usize) -> &F {
        match flavor {
            Flavor::Gl => &self.gl_factor[n],
            Flavor::U => &self.u_factor[n],
        }
    }

    pub fn order(&self, flavor: Flavor, n: usize) -> &F {
        match flavor {
            Flavor::Gl => &self.gamma[n],
            Flavor::U => &self.omega[n],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    SelfDual,
    Pair,
}

/// One class (or dual pair of classes) of degree `d` carrying `lam`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassAssignment {
    pub kind: ClassKind,
    pub d: usize,
    pub lam: Partition,
}

/// Parameters of a real character.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharParam {
    pub flavor: Flavor,
    pub assignments: Vec<ClassAssignment>,
}

impl CharParam {
    pub fn new(flavor: Flavor, assignments: Vec<ClassAssignment>) -> Result<Self> {
        if assignments.iter().any(|a| a.d == 0) {
            return Err(Error::Precondition("class degree must be positive".into()));
        }
        Ok(CharParam { flavor, assignments })
    }

    /// A single self-dual class of degree `d`.
    pub fn single(flavor: Flavor, d: usize, lam: Partition) -> Self {
        CharParam { flavor, assignments: vec![ClassAssignment { kind: ClassKind::SelfDual, d, lam }] }
    }

    /// `Σ multiplier · d · |λ|`, with multiplier 2 for pairs.
    pub fn weight(&self) -> usize {
        self.assignments
            .iter()
            .map(|a| a.d * a.lam.size() * if a.kind == ClassKind::Pair { 2 } else { 1 })
            .sum()
    }
}

impl fmt::Display for CharParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.flavor)?;
        for a in &self.assignments {
            let k = if a.kind == ClassKind::Pair { "pair" } else { "self" };
            write!(f, " {k}{}{}", a.d, a.lam)?;
        }
        Ok(())
    }
}

/// `q^{d n(λ')} / ∏_b (q^{d h(b)} - s^{d h(b)})` with `s = 1` for `GL`, `-1` for `U`.
pub fn class_factor<F: Field>(flavor: Flavor, d: usize, lam: &Partition, q: &F) -> Result<F> {
    let qd = q.pow(d as i64)?;
    let mut den = F::one();
    for h in lam.hooks() {
        let s = match flavor {
            Flavor::Gl => F::one(),
            Flavor::U => sign::<F>((d * h) as i64),
        };
        den *= &(qd.pow(h as i64)? - s);
    }
    qd.pow(lam.conjugate().n_stat() as i64)?.try_div(&den)
}

/// Degree of the character with parameters `p`:
/// `GL`: `(q^n - 1)···(q - 1) ∏ q^{d n(λ')} / ∏_b (q^{d h(b)} - 1)`;
/// `U`: the same with `q^{d h} - (-1)^{d h}` and `(q^n - (-1)^n)···(q + 1)`.
/// Pairs contribute their factor squared.
pub fn char_degree<F: Field>(p: &CharParam, q: &F) -> Result<F> {
    let n = p.weight();
    let tables = GroupOrderTables::new(q, n);
    let mut acc = tables.factor(p.flavor, n).clone();
    for a in &p.assignments {
        let f = class_factor(p.flavor, a.d, &a.lam, q)?;
        acc *= &f;
        if a.kind == ClassKind::Pair {
            acc *= &f;
        }
    }
    Ok(acc)
}

/// Budget for [`real_degree_sum_oracle`].
pub const ORACLE_MAX_N: usize = 4;
pub const ORACLE_MAX_Q: u64 = 4;

/// Every real character parameter of weight `n` over the classes found by
/// explicit census at `q`.
pub fn real_char_params(flavor: Flavor, n: usize, q: u64) -> Result<Vec<CharParam>> {
    if n > ORACLE_MAX_N || q > ORACLE_MAX_Q {
        return Err(Error::Budget(format!("oracle needs n <= {ORACLE_MAX_N} and q <= {ORACLE_MAX_Q}")));
    }
    // One slot per class or pair whose smallest nonempty partition still fits.
    let mut slots = vec![];
    for d in 1..=n {
        let census = brute_poly_census(d, q, flavor)?;
        let count = |c: &ExactRational| c.to_i64().expect("integer count") as usize;
        slots.extend(std::iter::repeat_n((ClassKind::SelfDual, d), count(&census.n_selfdual)));
        if 2 * d <= n {
            slots.extend(std::iter::repeat_n((ClassKind::Pair, d), count(&census.m_pairs)));
        }
    }
    let mut out = vec![];
    let mut chosen = vec![];
    assign(&slots, 0, n, &mut chosen, &mut |a| {
        out.push(CharParam { flavor, assignments: a.to_vec() });
    });
    Ok(out)
}

fn assign(
    slots: &[(ClassKind, usize)],
    i: usize,
    left: usize,
    chosen: &mut Vec<ClassAssignment>,
    emit: &mut dyn FnMut(&[ClassAssignment]),
) {
    if left == 0 {
        emit(chosen);
        return;
    }
    if i == slots.len() {
        return;
    }
    assign(slots, i + 1, left, chosen, emit);
    let (kind, d) = slots[i];
    let block = if kind == ClassKind::Pair { 2 * d } else { d };
    for k in 1..=left / block {
        for lam in enumerate_partitions(k) {
            chosen.push(ClassAssignment { kind, d, lam });
            assign(slots, i + 1, left - k * block, chosen, emit);
            chosen.pop();
        }
    }
}

/// Sum of real character degrees by explicit enumeration of parameters.
pub fn real_degree_sum_oracle(flavor: Flavor, n: usize, q: u64) -> Result<ExactRational> {
    let qr = ExactRational::from(q as i64);
    let mut total = ExactRational::from(0);
    for p in real_char_params(flavor, n, q)? {
        total = total + char_degree(&p, &qr)?;
    }
    Ok(total)
}

/// `#{h : h² = 1}` from the centralizer-order sums:
/// even `q`: `Σ_r |G_n| / (q^{r(2n-3r)} |G_r| |G_{n-2r}|)`; odd `q`: `Σ_r |G_n| / (|G_r| |G_{n-r}|)`.
pub fn involution_count<F: Field>(flavor: Flavor, n: usize, q: &F, parity: Parity) -> Result<F> {
    involution_count_from(flavor, n, q, parity, &GroupOrderTables::new(q, n))
}

/// [`involution_count`] over explicitly supplied group orders.
pub fn involution_count_from<F: Field>(
    flavor: Flavor,
    n: usize,
    q: &F,
    parity: Parity,
    t: &GroupOrderTables<F>,
) -> Result<F> {
    let g = |j: usize| t.order(flavor, j).clone();
    let mut sum = F::zero();
    match parity {
        Parity::Even => {
            for r in 0..=n / 2 {
                let den = q.pow((r * (2 * n - 3 * r)) as i64)? * g(r) * g(n - 2 * r);
                sum += &g(n).try_div(&den)?;
            }
        }
        Parity::Odd => {
            for r in 0..=n {
                sum += &g(n).try_div(&(g(r) * g(n - r)))?;
            }
        }
    }
    Ok(sum)
}

/// `(q^n - 1)···(q - 1) · [u^n] ∏ (1 + u/q^i)^e / (1 - u²/q^i)`.
pub fn gl_real_sum_gf<F: Field>(n: usize, q: &F, parity: Parity) -> Result<F> {
    let s = gl_real_gf(parity, q, n)?;
    Ok(GroupOrderTables::new(q, n).gl_factor[n].clone() * s.coeff(n))
}

/// `(-1)^n (q^n - (-1)^n)···(q + 1) · [u^n]` of a `U` series.
fn u_scaled<F: Field>(s: &TruncatedSeries<F>, n: usize, q: &F) -> F {
    sign::<F>(n as i64) * &GroupOrderTables::new(q, n).u_factor[n] * s.coeff(n)
}

/// Real character degree sum of `U(n,q)` from the product generating function.
pub fn u_real_sum_gf<F: Field>(n: usize, q: &F, parity: Parity) -> Result<F> {
    Ok(u_scaled(&u_real_gf(parity, q, n)?, n, q))
}

/// `#{h ∈ U(n,q) : h² = 1}` from its generating function, with the extra `(-1)^{C(n,2)}`.
pub fn u_invol_gf_count<F: Field>(n: usize, q: &F, parity: Parity) -> Result<F> {
    Ok(sign::<F>(binom2(n)) * u_scaled(&u_invol_gf(parity, q, n)?, n, q))
}

/// Degree sums over characters with indicator `+1` and `-1`, from the
/// half-sum and half-difference generating functions.
pub fn u_eps_split_gf<F: Field>(n: usize, q: &F, parity: Parity) -> Result<(F, F)> {
    let plus = u_scaled(&u_eps_gf(parity, q, n, true)?, n, q);
    let minus = u_scaled(&u_eps_gf(parity, q, n, false)?, n, q);
    Ok((plus, minus))
}

/// Budget for the closed partition sums.
pub const CLOSED_MAX_N: usize = 8;

/// Real character degree sums of `U(n,q)` from the Hall–Littlewood partition sums.
#[derive(Clone, Debug, PartialEq)]
pub struct UClosedSums<F> {
    pub total: F,
    pub eps_plus: F,
    pub eps_minus: F,
    /// Even `q`: indicator split recomputed from the `(1 ± (-1)^{C(n,2)})/2` form.
    /// Odd `q`: the second displayed expression for `total`.
    pub alternative: Vec<F>,
}

/// Principal values at `z = -1/q` with `t = 1/q` and `t = -1`, indexed by partition.
struct HlTable<F> {
    t_inv_q: Vec<Vec<(Partition, F)>>,
    t_minus_one: Vec<Vec<(Partition, F)>>,
}

impl<F: Field> HlTable<F> {
    fn new(q: &F, n: usize, with_minus_one: bool) -> Result<Self> {
        let z = -q.inv()?;
        let tq = q.inv()?;
        let m1 = -F::one();
        let mut t_inv_q = vec![];
        let mut t_minus_one = vec![];
        for k in 0..=n {
            let parts = enumerate_partitions(k);
            t_inv_q.push(parts.iter().map(|l| Ok((l.clone(), hl_principal(l, &z, &tq)?))).collect::<Result<Vec<_>>>()?);
            if with_minus_one {
                t_minus_one.push(parts.iter().map(|l| Ok((l.clone(), hl_principal(l, &z, &m1)?))).collect::<Result<Vec<_>>>()?);
            }
        }
        Ok(HlTable { t_inv_q, t_minus_one })
    }
}

/// `J_m = Σ_r (-1)^{m + C(m,2)} q^{C(m,2)} / (q^{r(2m-3r)} ω_r ω_{m-2r})`, the
/// coefficient of `u^m` in `∏ (1 + u/(-q)^i) / (1 - u²/(-q)^i)`.
fn j_even<F: Field>(m: usize, q: &F, t: &GroupOrderTables<F>) -> Result<F> {
    let mut s = F::zero();
    for r in 0..=m / 2 {
        let den = q.pow((r * (2 * m - 3 * r)) as i64)? * &t.omega[r] * &t.omega[m - 2 * r];
        s += &q.pow(binom2(m))?.try_div(&den)?;
    }
    Ok(sign::<F>(m as i64 + binom2(m)) * s)
}

/// Real character degree sums of `U(n,q)` from the closed partition sums.
pub fn u_real_sum_closed<F: Field>(n: usize, q: &F, parity: Parity) -> Result<UClosedSums<F>> {
    if n > CLOSED_MAX_N {
        return Err(Error::Budget(format!("closed sums need n <= {CLOSED_MAX_N}")));
    }
    let tables = GroupOrderTables::new(q, n);
    let un = tables.u_factor[n].clone();
    let qinv = q.inv()?;
    let half = F::from_int(2).inv()?;
    let invol = involution_count(Flavor::U, n, q, parity)?;
    let hl = HlTable::new(q, n, parity == Parity::Odd)?;
    // q^{-k/2} for even k
    let q_half = |k: usize| -> Result<F> {
        debug_assert!(k % 2 == 0);
        q.pow(-((k / 2) as i64))
    };
    match parity {
        Parity::Even => {
            let mut s = F::zero();
            for (lam, p) in &hl.t_inv_q[n] {
                s += &(q_half(lam.ell_odd() + n)? * p);
            }
            let total = un.clone() * &s;
            let eps_plus = (total.clone() + &invol) * &half;
            let eps_minus = (total.clone() - &invol) * &half;
            // (1 ± (-1)^{C(n,2)})/2 J_n + ½ Σ_{k≥1} S_k J_{n-2k}, S_k = Σ_{ℓ(λ_o)+|λ|=2k} q^{-k} P_λ.
            let mut tail = F::zero();
            for k in 1..=n / 2 {
                let mut sk = F::zero();
                for size in k..=2 * k {
                    for (lam, p) in &hl.t_inv_q[size] {
                        if lam.ell_odd() + size == 2 * k {
                            sk += &(q.pow(-(k as i64))? * p);
                        }
                    }
                }
                tail += &(sk * &j_even(n - 2 * k, q, &tables)?);
            }
            let jn = j_even(n, q, &tables)?;
            let s = sign::<F>(binom2(n));
            let scale = sign::<F>(n as i64) * &un;
            let alt_plus = scale.clone() * &((F::one() + &s) * &half * &jn + &(tail.clone() * &half));
            let alt_minus = scale * &((F::one() - s) * &half * &jn + &(tail * &half));
            Ok(UClosedSums { total, eps_plus, eps_minus, alternative: vec![alt_plus, alt_minus] })
        }
        Parity::Odd => {
            let two = F::from_int(2);
            let mut first = F::zero();
            let mut second = F::zero();
            for nu_size in 0..=n {
                let lam_size = n - nu_size;
                for (nu, pnu) in &hl.t_minus_one[nu_size] {
                    for (lam, plam) in &hl.t_inv_q[lam_size] {
                        let lo = lam.odd_part();
                        let le = lam.even_part();
                        let base = q.pow(-(nu_size as i64))? * &q_half(lo.len() + lam_size)? * plam * pnu;
                        let he = rs_multi(&le, &qinv, &qinv);
                        if nu.conjugate().is_even() {
                            let sgn = sign::<F>((nu_size / 2 + lo.len()) as i64);
                            let w = sgn
                                * &two.pow((nu.len() / 2) as i64)?
                                * &he
                                * &rs_multi(&lo, &F::one(), &qinv);
                            first += &(w * &base);
                        }
                        if lo.conjugate().is_even() && nu.even_part().conjugate().is_even() {
                            let sgn = sign::<F>(((lo.len() + nu.odd_part().len() + nu_size) / 2) as i64);
                            let mut pow2 = 0;
                            let mut poch = F::one();
                            for &m in nu.multiplicities().values() {
                                pow2 += m.div_ceil(2);
                            }
                            for &m in lo.multiplicities().values() {
                                poch *= &pochhammer_cd(&qinv, &qinv.pow(2)?, m / 2);
                            }
                            let w = sgn * &two.pow(pow2 as i64)? * &he * &poch;
                            second += &(w * &base);
                        }
                    }
                }
            }
            let scale = sign::<F>(n as i64) * &un;
            let total = scale.clone() * &first;
            let eps_plus = (total.clone() + &invol) * &half;
            let eps_minus = (total.clone() - &invol) * &half;
            Ok(UClosedSums { total, eps_plus, eps_minus, alternative: vec![scale * &second] })
        }
    }
}

/// Classical Weyl group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeylFamily {
    A,
    B,
    D,
}

impl std::str::FromStr for WeylFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" | "weylA" => Ok(WeylFamily::A),
            "B" | "b" | "weylB" => Ok(WeylFamily::B),
            "D" | "d" | "weylD" => Ok(WeylFamily::D),
            _ => Err(Error::Unknown(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylSums {
    pub degree_sum: u128,
    pub involutions: u128,
}

pub const WEYL_MAX_N: usize = 12;

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn hook_product(lam: &Partition) -> u128 {
    lam.hooks().iter().map(|&h| h as u128).product()
}

/// Degree sum from the hook formulas and involution count from the
/// exponential generating functions `e^{u+u²/2}`, `e^{2u+u²}`, `e^{u²}(e^{2u}+1)`.
pub fn weyl_sums(family: WeylFamily, n: usize) -> Result<WeylSums> {
    if n > WEYL_MAX_N {
        return Err(Error::Budget(format!("Weyl sums need n <= {WEYL_MAX_N}")));
    }
    let nf = factorial(n);
    let degree_sum = match family {
        WeylFamily::A => enumerate_partitions(n).iter().map(|l| nf / hook_product(l)).sum(),
        WeylFamily::B | WeylFamily::D => {
            let mut ordered_distinct = 0u128;
            let mut diagonal = 0u128;
            for k in 0..=n {
                for lam in enumerate_partitions(k) {
                    for tau in enumerate_partitions(n - k) {
                        let d = nf / (hook_product(&lam) * hook_product(&tau));
                        if lam == tau {
                            diagonal += d;
                        } else {
                            ordered_distinct += d;
                        }
                    }
                }
            }
            match family {
                WeylFamily::B => ordered_distinct + diagonal,
                // (μ,τ) and (τ,μ) restrict to one character; (λ,λ) splits into two halves.
                _ => ordered_distinct / 2 + diagonal,
            }
        }
    };
    type Q = ExactRational;
    let r = |a: i64, b: i64| Q::new(a, b).expect("nonzero denominator");
    let egf = |cs: Vec<Q>| TruncatedSeries::new(cs, n).exp();
    let series = match family {
        WeylFamily::A => egf(vec![r(0, 1), r(1, 1), r(1, 2)])?,
        WeylFamily::B => egf(vec![r(0, 1), r(2, 1), r(1, 1)])?,
        WeylFamily::D => {
            let e2 = egf(vec![r(0, 1), r(0, 1), r(1, 1)])?;
            let e2u = egf(vec![r(0, 1), r(2, 1)])?;
            e2.mul(&e2u.add(&TruncatedSeries::one(n)))
        }
    };
    let scale = match family {
        WeylFamily::D => Q::new(nf as i64, 2)?,
        _ => Q::from(nf as i64),
    };
    let inv = scale * series.coeff(n);
    let involutions = inv
        .to_integer()
        .and_then(|i| u128::try_from(i).ok())
        .ok_or_else(|| Error::Unknown(format!("non-integral involution count {inv}")))?;
    Ok(WeylSums { degree_sum, involutions })
}
