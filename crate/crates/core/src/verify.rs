//! Registry of named, runnable checks with structured reports.
//!
//! Every check compares exact values. A failing report carries the first
//! mismatch with both sides printed; budget violations become `skipped`.
//! Checks run in parallel and reports come back in registry order.

use std::fmt::Display;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::chars::{
    class_factor, involution_count, involution_count_from, real_degree_sum_oracle, u_real_sum_closed, weyl_sums,
    GroupOrderTables, WeylFamily, CLOSED_MAX_N, ORACLE_MAX_N,
};
use crate::error::{Error, Result};
use crate::exact::{q, sign, ExactRational, Field, QPolynomial, RatFunc, RationalFunction, TruncatedSeries};
use crate::groups::{count_square_roots_of_identity, formula_order, GROUP_BUDGET};
use crate::hl::{hl_finite_oracle, hl_principal, warnaar_sides, WarnaarParams, FINITE_ORACLE_MAX_VARS};
use crate::partitions::enumerate_partitions;
use crate::polycount::{brute_poly_census, class_counts_up_to, count_at, ClassCounts, CENSUS_MAX_D};
use crate::qseries::{
    binom2, euler_expand, gl_invol_gf, gl_real_gf, pair_expand, u_eps_gf, u_invol_gf, u_real_gf,
    GeometricFactorSpec, PairProductSpec,
};
use crate::{Flavor, Parity};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Evaluation points: the formal variable `q`, or a list of integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum QSelect {
    Symbolic,
    List(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckParams {
    pub nmax: usize,
    pub order: usize,
    pub q: QSelect,
    /// Test hook: adds 1 to `γ_j` in the involution sums of `thm-even`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturb_gamma: Option<usize>,
}

/// Optional overrides applied on top of a check's defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParamOverrides {
    pub nmax: Option<usize>,
    pub order: Option<usize>,
    pub q: Option<QSelect>,
    pub perturb_gamma: Option<usize>,
}

impl ParamOverrides {
    pub fn apply(&self, mut p: CheckParams) -> CheckParams {
        if let Some(n) = self.nmax {
            p.nmax = n;
        }
        if let Some(o) = self.order {
            p.order = o;
        }
        if let Some(q) = &self.q {
            p.q = q.clone();
        }
        if self.perturb_gamma.is_some() {
            p.perturb_gamma = self.perturb_gamma;
        }
        p
    }
}

/// Default-budget scale, read from `QCHARSUM_BUDGET`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Quick,
    Full,
}

impl Budget {
    pub fn from_env() -> Budget {
        match std::env::var("QCHARSUM_BUDGET").as_deref() {
            Ok("quick") => Budget::Quick,
            _ => Budget::Full,
        }
    }

    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Budget::Quick => quick,
            Budget::Full => full,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub status: Status,
    pub params: CheckParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub millis: u64,
}

impl CheckReport {
    /// The report with timing zeroed, for byte-level comparisons.
    pub fn without_timing(mut self) -> Self {
        self.millis = 0;
        self
    }

    pub fn tsv_row(&self) -> String {
        let params = serde_json::to_string(&self.params).expect("params serialize");
        let witness = match &self.witness {
            Some(w) => format!("{}: {} != {}", w.at, w.lhs, w.rhs),
            None => self.reason.clone().unwrap_or_default(),
        };
        format!("{}\t{}\t{}\t{}\t{}", self.id, self.status, self.millis, params, witness)
    }
}

pub const TSV_HEADER: &str = "id\tstatus\tmillis\tparams\twitness";

/// Collects the first mismatch and free-form notes while a check runs.
#[derive(Debug, Default)]
pub struct Cmp {
    witness: Option<Witness>,
    notes: Vec<String>,
    evaluated: usize,
    skipped: Vec<String>,
}

impl Cmp {
    pub fn check<T: PartialEq + Display>(&mut self, at: impl Display, lhs: &T, rhs: &T) -> bool {
        self.evaluated += 1;
        let ok = lhs == rhs;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness { at: at.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
        ok
    }

    pub fn series<F: Field>(&mut self, at: impl Display, lhs: &TruncatedSeries<F>, rhs: &TruncatedSeries<F>) -> bool {
        self.evaluated += 1;
        match lhs.first_difference(rhs) {
            None => true,
            Some(k) => {
                if self.witness.is_none() {
                    self.witness = Some(Witness {
                        at: format!("{at}, coefficient of u^{k}"),
                        lhs: lhs.coeff(k).to_string(),
                        rhs: rhs.coeff(k).to_string(),
                    });
                }
                false
            }
        }
    }

    pub fn holds(&mut self, at: impl Display, ok: bool, lhs: impl Display, rhs: impl Display) -> bool {
        self.evaluated += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness { at: at.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() });
        }
        ok
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn skip(&mut self, s: impl Into<String>) {
        self.skipped.push(s.into());
    }
}

type Runner = fn(&CheckParams, &mut Cmp) -> Result<()>;

pub struct CheckSpec {
    pub id: &'static str,
    pub tags: &'static [&'static str],
    pub description: &'static str,
    pub defaults: fn(Budget) -> CheckParams,
    run: Runner,
}

impl CheckSpec {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(&tag) || self.id == tag
    }
}

impl std::fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("tags", &self.tags).finish()
    }
}

fn sym(nmax: usize, order: usize) -> CheckParams {
    CheckParams { nmax, order, q: QSelect::Symbolic, perturb_gamma: None }
}

fn listed(nmax: usize, order: usize, qs: &[u64]) -> CheckParams {
    CheckParams { nmax, order, q: QSelect::List(qs.to_vec()), perturb_gamma: None }
}

macro_rules! spec {
    ($id:literal, [$($tag:literal),*], $desc:literal, $defaults:expr, $run:expr) => {
        CheckSpec { id: $id, tags: &[$($tag),*], description: $desc, defaults: $defaults, run: $run }
    };
}

static REGISTRY: &[CheckSpec] = &[
    spec!("weyl-A", ["weyl"], "S_n: degree sum equals involution count", |b| sym(b.pick(8, 12), 0), |p, c| weyl(WeylFamily::A, p, c)),
    spec!("weyl-B", ["weyl"], "W(B_n): degree sum equals involution count", |b| sym(b.pick(8, 12), 0), |p, c| weyl(WeylFamily::B, p, c)),
    spec!("weyl-D", ["weyl"], "W(D_n): degree sum equals involution count", |b| sym(b.pick(8, 12), 0), |p, c| weyl(WeylFamily::D, p, c)),
    spec!("lemma-prodlem-1", ["gl", "polycount"], "prod (1-w^d)^-N*(2d) (1-w^d)^-M*(d) = (1-w)^e/(1-qw)", |b| sym(0, b.pick(6, 10)), prodlem_1),
    spec!("lemma-prodlem-2", ["gl", "polycount"], "prod (1+w^d)^-N*(2d) (1-w^d)^-M*(d) = 1-w", |b| sym(0, b.pick(6, 10)), prodlem_2),
    spec!("thm-genfnGL", ["gl", "polycount"], "GL real degree sums: class census product equals the single-index product", |b| sym(0, b.pick(5, 8)), genfn_gl),
    spec!("thm-even", ["gl", "symbolic"], "GL, even q: real degree sum equals the involution count", |b| sym(b.pick(5, 8), 0), thm_even),
    spec!("cor-iden", ["gl", "qseries"], "prod (1+u/q^i)/(1-u^2/q^i) = sum u^n q^C(n,2) sum_r 1/(q^r(2n-3r) g_r g_n-2r)", |b| sym(0, b.pick(6, 10)), cor_iden),
    spec!("remark-igl-table", ["gl", "symbolic"], "i_GL(n,q) for n = 1..7 as listed polynomials", |b| sym(b.pick(7, 10), 0), igl_table_check),
    spec!("thm-odd", ["gl", "symbolic"], "GL, odd q: real degree sum equals the involution count", |b| sym(b.pick(5, 8), 0), thm_odd),
    spec!("cor-cort", ["gl", "qseries"], "prod (1+u/q^i)^2/(1-u^2/q^i) = sum u^n q^C(n,2) sum_r 1/(g_r g_n-r)", |b| sym(0, b.pick(6, 10)), cor_cort),
    spec!("u-prodlems", ["u", "polycount"], "U-irreducible count identities and the dual-pair product identities", |b| sym(0, b.pick(6, 10)), u_prodlems),
    spec!("thm-degreesU", ["u", "polycount"], "U real degree sums: class census product equals the displayed product", |b| sym(0, b.pick(5, 8)), degrees_u),
    spec!("thm-warid", ["hl", "warnaar"], "sum a^l(lo) h_le(ab;t) h_lo(b/a;t) P_l(x;t) = product, geometric x", |b| sym(0, b.pick(5, 8)), warid),
    spec!("cor-warcor", ["hl", "warnaar"], "sum a^l(lo) P_l(x;t) = product, geometric x", |b| sym(0, b.pick(6, 8)), warcor),
    spec!("prop-involU-even", ["u", "symbolic"], "U, even q: involution sum equals its generating function", |b| sym(b.pick(5, 8), 0), |p, c| invol_u(Parity::Even, p, c)),
    spec!("prop-involU-odd", ["u", "symbolic"], "U, odd q: involution sum equals its generating function", |b| sym(b.pick(5, 8), 0), |p, c| invol_u(Parity::Odd, p, c)),
    spec!("cor-epsplit-even", ["u", "symbolic"], "U, even q: indicator split sums add to the real sum and differ by the involution count", |b| sym(b.pick(4, 6), 0), |p, c| epsplit(Parity::Even, p, c)),
    spec!("cor-epsplit-odd", ["u", "symbolic"], "U, odd q: indicator split sums add to the real sum and differ by the involution count", |b| sym(b.pick(4, 6), 0), |p, c| epsplit(Parity::Odd, p, c)),
    spec!("thm-unsumeven", ["u", "hl"], "U, even q: Hall-Littlewood partition sum equals the real degree sum", |b| sym(b.pick(4, 6), 0), unsum_even),
    spec!("cor-unsumeven-pm", ["u", "hl"], "U, even q: indicator split from the partition sum and the involution count", |b| sym(b.pick(4, 6), 0), unsum_even_pm),
    spec!("cor-genfn-even-alt", ["u", "hl"], "U, even q: indicator split from the (1 +- (-1)^C(n,2))/2 expansion", |b| sym(b.pick(4, 6), 0), genfn_even_alt),
    spec!("thm-unsumodd", ["u", "hl"], "U, odd q: both partition-sum expressions equal the real degree sum", |b| sym(b.pick(4, 6), 0), unsum_odd),
    spec!("example-u2-even", ["u", "example"], "U(2,q), q even: real degree sum q^2", |_| sym(2, 0), example_u2_even),
    spec!("example-u3-even", ["u", "example"], "U(3,q), q even: indicator split (q^4-q^3+q^2, q^2-q)", |_| sym(3, 0), example_u3_even),
    spec!("example-u2-odd", ["u", "example"], "U(2,q), q odd: real sum q^2+q, indicator -1 sum q-1", |_| sym(2, 0), example_u2_odd),
    spec!("oracle-brute-involutions", ["oracle"], "matrix enumeration of h^2 = 1 against the closed involution sums", |b| listed(b.pick(2, 3), 0, &[]), oracle_brute),
    spec!("oracle-real-sums", ["oracle"], "real degree sums by enumerating character parameters over a class census", |b| listed(b.pick(3, 4), 0, &[2, 3]), oracle_real_sums),
    spec!("oracle-poly-census", ["oracle", "polycount"], "brute polynomial census against the counting formulas", |b| listed(b.pick(3, 4), 0, &[2, 3, 4, 5]), oracle_census),
    spec!("oracle-hl-finite", ["oracle", "hl"], "principal Hall-Littlewood values against finite symmetrization", |b| sym(b.pick(4, 5), 0), oracle_hl),
];

pub fn registry() -> &'static [CheckSpec] {
    REGISTRY
}

pub fn find(id: &str) -> Result<&'static CheckSpec> {
    REGISTRY.iter().find(|s| s.id == id).ok_or_else(|| Error::Unknown(id.to_string()))
}

/// Runs one check with explicit parameters.
pub fn run_check(spec: &CheckSpec, params: CheckParams) -> CheckReport {
    let start = Instant::now();
    let mut cmp = Cmp::default();
    let outcome = (spec.run)(&params, &mut cmp);
    let millis = start.elapsed().as_millis() as u64;
    let (status, reason) = match (&outcome, &cmp.witness) {
        (_, Some(_)) => (Status::Fail, None),
        (Err(Error::Budget(r)), None) => (Status::Skipped, Some(format!("budget: {r}"))),
        (Err(e), None) => {
            cmp.witness = Some(Witness { at: "error".into(), lhs: e.to_string(), rhs: "-".into() });
            (Status::Fail, None)
        }
        (Ok(()), None) if cmp.evaluated == 0 => (Status::Skipped, Some(cmp.skipped.join("; "))),
        (Ok(()), None) => (Status::Pass, None),
    };
    let mut notes = cmp.notes;
    notes.extend(cmp.skipped.into_iter().map(|s| format!("skipped: {s}")));
    CheckReport { id: spec.id.to_string(), status, params, witness: cmp.witness, reason, notes, millis }
}

/// Runs a check by id with defaults at `budget` plus `overrides`.
pub fn run_check_id(id: &str, budget: Budget, overrides: &ParamOverrides) -> Result<CheckReport> {
    let spec = find(id)?;
    Ok(run_check(spec, overrides.apply((spec.defaults)(budget))))
}

#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    pub reports: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl RunSummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Runs every registered check carrying `tag` (all when `None`), in parallel.
pub fn run_all(tag: Option<&str>, budget: Budget, overrides: &ParamOverrides) -> RunSummary {
    let specs: Vec<&CheckSpec> = REGISTRY.iter().filter(|s| tag.is_none_or(|t| s.has_tag(t))).collect();
    run_specs(&specs, budget, overrides)
}

pub fn run_specs(specs: &[&CheckSpec], budget: Budget, overrides: &ParamOverrides) -> RunSummary {
    let slots: Vec<Mutex<Option<CheckReport>>> = specs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(specs.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= specs.len() {
                    break;
                }
                let spec = specs[i];
                let report = run_check(spec, overrides.apply((spec.defaults)(budget)));
                *slots[i].lock().expect("slot lock") = Some(report);
            });
        }
    });
    let reports: Vec<CheckReport> =
        slots.into_iter().map(|m| m.into_inner().expect("slot lock").expect("every check ran")).collect();
    let count = |st: Status| reports.iter().filter(|r| r.status == st).count();
    RunSummary { passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped), reports }
}

// ---------------------------------------------------------------- drivers

type Body<F> = fn(&F, Parity, &CheckParams, &mut Cmp, &str) -> Result<()>;

/// Runs `sym` at the formal `q` for each parity, or `num` at each listed
/// `q` whose parity is in `parities`. An empty `parities` means any `q`.
fn drive(
    p: &CheckParams,
    parities: &[Parity],
    cmp: &mut Cmp,
    sym: Body<RationalFunction>,
    num: Body<ExactRational>,
) -> Result<()> {
    match &p.q {
        QSelect::Symbolic => {
            let ps: &[Parity] = if parities.is_empty() { &[Parity::Even] } else { parities };
            for &par in ps {
                let at = if parities.is_empty() { "symbolic q".to_string() } else { format!("symbolic q, {par} q") };
                sym(&q(), par, p, cmp, &at)?;
            }
        }
        QSelect::List(qs) => {
            for &qq in qs {
                if qq < 2 {
                    return Err(Error::Precondition(format!("q = {qq} is not a field size")));
                }
                let par = Parity::of(qq);
                if !parities.is_empty() && !parities.contains(&par) {
                    cmp.skip(format!("q={qq} has the wrong parity"));
                    continue;
                }
                num(&ExactRational::from(qq as i64), par, p, cmp, &format!("q={qq}"))?;
            }
        }
    }
    Ok(())
}

fn int<F: Field>(n: i64) -> F {
    F::from_int(n)
}

fn series<F: Field>(cs: Vec<F>, order: usize) -> TruncatedSeries<F> {
    TruncatedSeries::new(cs, order)
}

/// `∏ (1 - s w^m)^{-x}` over `(s, m, x)`, as `exp Σ x Σ_k s^k w^{mk} / k`.
fn power_product<F: Field>(factors: &[(i64, usize, F)], order: usize) -> Result<TruncatedSeries<F>> {
    let mut log = vec![F::zero(); order + 1];
    for (s, m, x) in factors {
        let mut k = 1;
        while m * k <= order {
            let sk = if *s < 0 && k % 2 == 1 { -F::one() } else { F::one() };
            log[m * k] += &(sk * x * &int::<F>(k as i64).inv()?);
            k += 1;
        }
    }
    series(log, order).exp()
}

// ---------------------------------------------------------------- weyl

fn weyl(family: WeylFamily, p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    for n in 0..=p.nmax {
        let s = weyl_sums(family, n)?;
        cmp.check(format!("n={n}"), &s.degree_sum, &s.involutions);
    }
    Ok(())
}

// ---------------------------------------------------------------- class counts

fn counts<F: Field>(max: usize, q: &F, par: Parity, flavor: Flavor) -> Result<Vec<ClassCounts<F>>> {
    let mut v = class_counts_up_to(max.max(1), q, par, flavor)?;
    v.insert(0, ClassCounts { d: 0, flavor, q: q.clone(), n_plain: F::zero(), n_selfdual: F::zero(), m_pairs: F::zero() });
    Ok(v)
}

/// `(1 - w)^e / (1 - qw)`.
fn lemma_rhs<F: Field>(q: &F, par: Parity, order: usize) -> Result<TruncatedSeries<F>> {
    let num = series(vec![F::one(), -F::one()], order).pow(par.e())?;
    num.try_div(&series(vec![F::one(), -q.clone()], order))
}

fn prodlem_1(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let c = counts(2 * p.order, q, par, Flavor::Gl)?;
        let mut f = vec![];
        for d in 1..=p.order {
            f.push((1, d, c[2 * d].n_selfdual.clone()));
            f.push((1, d, c[d].m_pairs.clone()));
        }
        cmp.series(at, &power_product(&f, p.order)?, &lemma_rhs(q, par, p.order)?);
        Ok(())
    }
    drive(p, &[Parity::Even, Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn prodlem_2(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let c = counts(2 * p.order, q, par, Flavor::Gl)?;
        let mut f = vec![];
        for d in 1..=p.order {
            f.push((-1, d, c[2 * d].n_selfdual.clone()));
            f.push((1, d, c[d].m_pairs.clone()));
        }
        cmp.series(at, &power_product(&f, p.order)?, &series(vec![F::one(), -F::one()], p.order));
        Ok(())
    }
    drive(p, &[Parity::Even, Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn u_prodlems(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let o = p.order;
        let u = counts(2 * o, q, par, Flavor::U)?;
        let g = counts(2 * o, q, par, Flavor::Gl)?;
        let one = || series(vec![F::one()], o);
        let onepw = series(vec![F::one(), F::one()], o);
        let onemw = series(vec![F::one(), -F::one()], o);
        let onemqw = series(vec![F::one(), -q.clone()], o);
        // Σ_{r|m} r N̄(r) = q^m - (-1)^m
        for m in 1..=o {
            let mut s = F::zero();
            for r in 1..=m {
                if m % r == 0 {
                    s += &(int::<F>(r as i64) * &u[r].n_plain);
                }
            }
            cmp.check(format!("{at}, fixed points m={m}"), &s, &(q.pow(m as i64)? - sign::<F>(m as i64)));
        }
        for d in 1..=2 * o {
            let c = &u[d];
            cmp.check(format!("{at}, N̄ = N̄* + 2M̄* at d={d}"), &c.n_plain, &(c.n_selfdual.clone() + &c.m_pairs + &c.m_pairs));
            if d % 2 == 1 {
                let e = if d == 1 { int(par.e()) } else { F::zero() };
                cmp.check(format!("{at}, N̄*(d) at odd d={d}"), &c.n_selfdual, &e);
                cmp.check(format!("{at}, N̄*(d) = N*(d) at odd d={d}"), &c.n_selfdual, &g[d].n_selfdual);
            }
        }
        for d in 1..=o {
            let lhs = u[2 * d].n_selfdual.clone() + &u[d].m_pairs;
            let rhs = g[2 * d].n_selfdual.clone() + &g[d].m_pairs;
            cmp.check(format!("{at}, N̄*(2d) + M̄*(d) = N*(2d) + M*(d) at d={d}"), &lhs, &rhs);
        }
        let all: Vec<_> = (1..=o).map(|d| (1, d, u[d].n_plain.clone())).collect();
        cmp.series(format!("{at}, U-irreducible product"), &power_product(&all, o)?, &onepw.try_div(&onemqw)?);
        let mk = |s2: i64, s1: i64, step2: usize, mult: i64| -> Vec<(i64, usize, F)> {
            (1..=o)
                .flat_map(|d| {
                    [
                        (s2, step2 * d, u[2 * d].n_selfdual.clone()),
                        (s1, d, u[d].m_pairs.clone() * &int::<F>(mult)),
                    ]
                })
                .collect()
        };
        cmp.series(format!("{at}, (1-w)^e/(1-qw) product"), &power_product(&mk(1, 1, 1, 1), o)?, &lemma_rhs(q, par, o)?);
        // (1 + w)^e (1 - qw) / (1 - qw²)
        let rhs2 = onepw.pow(par.e())?.mul(&onemqw).try_div(&series(vec![F::one(), F::zero(), -q.clone()], o))?;
        cmp.series(format!("{at}, (1+w)^e(1-qw)/(1-qw^2) product"), &power_product(&mk(-1, -1, 1, 1), o)?, &rhs2);
        let rhs3 = onepw.mul(&onemw.pow(par.e())?).try_div(&onemqw)?;
        cmp.series(format!("{at}, squared product"), &power_product(&mk(1, 1, 2, 2), o)?, &rhs3);
        cmp.series(format!("{at}, 1+w product"), &power_product(&mk(-1, 1, 1, 1), o)?, &onepw.mul(&one()));
        Ok(())
    }
    drive(p, &[Parity::Even, Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

/// `∏_d F_d^{N*(d)} G_d^{M*(d)}`, with `F_d = Σ_λ u^{d|λ|} c_d(λ)` and
/// `G_d = Σ_λ u^{2d|λ|} c_d(λ)²` built from the per-class degree factors.
fn census_product<F: Field>(flavor: Flavor, q: &F, par: Parity, order: usize) -> Result<TruncatedSeries<F>> {
    let c = counts(order, q, par, flavor)?;
    let mut log = series(vec![], order);
    for d in 1..=order {
        let mut fd = vec![F::zero(); order + 1];
        let mut gd = vec![F::zero(); order + 1];
        for k in 0..=order / d {
            for lam in enumerate_partitions(k) {
                let f = class_factor(flavor, d, &lam, q)?;
                if 2 * d * k <= order {
                    gd[2 * d * k] += &(f.clone() * &f);
                }
                fd[d * k] += &f;
            }
        }
        log = log.add(&series(fd, order).log()?.scale(&c[d].n_selfdual));
        log = log.add(&series(gd, order).log()?.scale(&c[d].m_pairs));
    }
    log.exp()
}

fn genfn_gl(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let lhs = census_product(Flavor::Gl, q, par, p.order)?;
        cmp.series(at, &lhs, &gl_real_gf(par, q, p.order)?);
        Ok(())
    }
    drive(p, &[Parity::Even, Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn degrees_u(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let lhs = census_product(Flavor::U, q, par, p.order)?;
        let gf = u_real_gf(par, q, p.order)?;
        let rhs = series((0..=p.order).map(|n| sign::<F>(n as i64) * gf.coeff(n)).collect(), p.order);
        cmp.series(at, &lhs, &rhs);
        Ok(())
    }
    drive(p, &[Parity::Even, Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

// ---------------------------------------------------------------- GL

fn thm_even(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        gl_equality(q, par, p, cmp, at)
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn thm_odd(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        gl_equality(q, par, p, cmp, at)
    }
    drive(p, &[Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

/// `(q^n - 1)···(q - 1) [u^n] GF = #{h : h² = 1}` for `n ≤ nmax`.
fn gl_equality<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
    let gf = gl_real_gf(par, q, p.nmax)?;
    let plain = GroupOrderTables::new(q, p.nmax);
    let mut tables = plain.clone();
    if let Some(j) = p.perturb_gamma {
        if j <= p.nmax {
            tables.gamma[j] += &F::one();
        }
    }
    for n in 0..=p.nmax {
        let lhs = plain.gl_factor[n].clone() * gf.coeff(n);
        let rhs = involution_count_from(Flavor::Gl, n, q, par, &tables)?;
        cmp.check(format!("{at}, n={n}"), &lhs, &rhs);
    }
    Ok(())
}

fn cor_iden(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, _: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        cmp.series(at, &gl_real_gf(Parity::Even, q, p.order)?, &gl_invol_gf(Parity::Even, q, p.order)?);
        Ok(())
    }
    drive(p, &[], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn cor_cort(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, _: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let o = p.order;
        cmp.series(at, &gl_real_gf(Parity::Odd, q, o)?, &gl_invol_gf(Parity::Odd, q, o)?);
        // The intermediate triple sum, whose coefficients reassemble the even-q product.
        let g = GroupOrderTables::new(q, o);
        let qinv = q.inv()?;
        let mut cs = vec![];
        for n in 0..=o {
            let mut s = F::zero();
            let mut poch = F::one();
            for t in 0..=n {
                if t > 0 {
                    poch *= &(F::one() - qinv.pow(t as i64)?);
                }
                let tail = sign::<F>(t as i64) * &(q.pow(t as i64)? * &poch).inv()?;
                for s_ in 0..=n - t {
                    let term = q.pow(binom2(n - t))?.try_div(&(g.gamma[s_].clone() * &g.gamma[n - t - s_]))?;
                    s += &(term * &tail);
                }
            }
            cs.push(s);
        }
        cmp.series(format!("{at}, triple sum"), &series(cs, o), &gl_real_gf(Parity::Even, q, o)?);
        Ok(())
    }
    drive(p, &[], cmp, go::<RationalFunction>, go::<ExactRational>)
}

/// `i_GL(n,q)` for `n = 1..=7`: `q^shift · Σ ±q^k` over signed exponents,
/// where the sign of `k = 0` is spelt out separately.
pub fn igl_table() -> Vec<QPolynomial> {
    let rows: [(usize, &[(i64, usize)]); 7] = [
        (0, &[(1, 0)]),
        (2, &[(1, 0)]),
        (1, &[(-1, 0), (1, 2), (1, 3)]),
        (2, &[(-1, 0), (1, 4), (1, 6)]),
        (6, &[(-1, 0), (-1, 1), (1, 4), (1, 5), (1, 6)]),
        (5, &[(1, 0), (-1, 3), (-1, 4), (-1, 5), (-1, 6), (1, 9), (1, 10), (1, 11), (1, 13)]),
        (7, &[(1, 0), (-1, 6), (-1, 7), (-1, 8), (-1, 9), (-1, 10), (1, 13), (1, 14), (1, 15), (1, 16), (1, 17)]),
    ];
    rows.iter()
        .map(|(shift, terms)| {
            let mut cs = vec![0i64; 25];
            for &(c, k) in terms.iter() {
                cs[k + shift] += c;
            }
            QPolynomial::from_ints(&cs)
        })
        .collect()
}

fn igl_table_check(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, _: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        for (i, expected) in igl_table().iter().enumerate() {
            let n = i + 1;
            let got = involution_count(Flavor::Gl, n, q, par)?;
            cmp.check(format!("{at}, n={n}"), &got, &expected.eval_in(q));
        }
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)?;
    if p.q == QSelect::Symbolic {
        let mut exceptions = vec![];
        for n in 1..=p.nmax {
            let v = involution_count(Flavor::Gl, n, &q(), Parity::Even)?;
            let small = v.is_polynomial()
                && v.numer().coeffs().iter().all(|c| c.to_i64().is_some_and(|k| (-1..=1).contains(&k)));
            if !small {
                exceptions.push(n.to_string());
            }
        }
        cmp.note(if exceptions.is_empty() {
            format!("i_GL(n,q) has coefficients in {{-1,0,1}} for every n <= {}", p.nmax)
        } else {
            format!("coefficients outside {{-1,0,1}} at n = {}", exceptions.join(","))
        });
    }
    Ok(())
}

// ---------------------------------------------------------------- U, generating functions

/// `(-1)^n (q^n - (-1)^n)···(q + 1)` for `n = 0..=nmax`.
fn u_scale<F: Field>(q: &F, nmax: usize) -> Vec<F> {
    let t = GroupOrderTables::new(q, nmax);
    (0..=nmax).map(|n| sign::<F>(n as i64) * &t.u_factor[n]).collect()
}

fn invol_u(parity: Parity, p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let s = u_invol_gf(par, q, p.nmax)?;
        let scale = u_scale(q, p.nmax);
        for n in 0..=p.nmax {
            let lhs = involution_count(Flavor::U, n, q, par)?;
            let rhs = sign::<F>(binom2(n)) * &scale[n] * s.coeff(n);
            cmp.check(format!("{at}, n={n}"), &lhs, &rhs);
        }
        Ok(())
    }
    drive(p, &[parity], cmp, go::<RationalFunction>, go::<ExactRational>)
}

/// The displayed indicator-split product, assembled factor by factor.
fn eps_product<F: Field>(q: &F, par: Parity, order: usize) -> Result<(TruncatedSeries<F>, TruncatedSeries<F>)> {
    let x = (-q.clone()).inv()?;
    let lin = euler_expand(&GeometricFactorSpec::new(1, 1, x.clone(), x.clone(), 1), order)?.pow(par.e())?;
    let odd_sq = euler_expand(&GeometricFactorSpec::new(1, 2, x.clone(), x.clone() * &x, -1), order)?;
    let pair = |s: i8, v: F, e: i64| pair_expand(&PairProductSpec::new(s, v, 2, x.clone(), e), order);
    let mut real = lin.mul(&odd_sq).mul(&pair(-1, F::one(), par.e())?).mul(&pair(1, x.inv()?, -1)?);
    if par == Parity::Odd {
        real = real.mul(&pair(1, F::one(), -1)?);
    }
    let invol = lin.mul(&euler_expand(&GeometricFactorSpec::new(-1, 2, x.clone(), x, -1), order)?);
    Ok((real, invol))
}

fn epsplit(parity: Parity, p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let (real, invol) = eps_product(q, par, p.nmax)?;
        let scale = u_scale(q, p.nmax);
        let half = int::<F>(2).inv()?;
        let plus_gf = u_eps_gf(par, q, p.nmax, true)?;
        let minus_gf = u_eps_gf(par, q, p.nmax, false)?;
        let total_gf = u_real_gf(par, q, p.nmax)?;
        for n in 0..=p.nmax {
            let s = sign::<F>(binom2(n));
            let plus = scale[n].clone() * &((real.coeff(n).clone() + &(s.clone() * invol.coeff(n))) * &half);
            let minus = scale[n].clone() * &((real.coeff(n).clone() - &(s * invol.coeff(n))) * &half);
            let total = scale[n].clone() * total_gf.coeff(n);
            let inv = involution_count(Flavor::U, n, q, par)?;
            cmp.check(format!("{at}, n={n}, plus + minus"), &(plus.clone() + &minus), &total);
            cmp.check(format!("{at}, n={n}, plus - minus"), &(plus.clone() - &minus), &inv);
            cmp.check(format!("{at}, n={n}, plus"), &plus, &(scale[n].clone() * plus_gf.coeff(n)));
            cmp.check(format!("{at}, n={n}, minus"), &minus, &(scale[n].clone() * minus_gf.coeff(n)));
        }
        Ok(())
    }
    drive(p, &[parity], cmp, go::<RationalFunction>, go::<ExactRational>)
}

/// `(total, plus, minus)` from the generating-function route.
fn u_gf_values<F: Field>(q: &F, par: Parity, n: usize) -> Result<(F, F, F)> {
    let scale = u_scale(q, n);
    let total = scale[n].clone() * u_real_gf(par, q, n)?.coeff(n);
    let plus = scale[n].clone() * u_eps_gf(par, q, n, true)?.coeff(n);
    let minus = scale[n].clone() * u_eps_gf(par, q, n, false)?.coeff(n);
    Ok((total, plus, minus))
}

fn closed_budget(p: &CheckParams) -> Result<usize> {
    if p.nmax > CLOSED_MAX_N {
        return Err(Error::Budget(format!("partition sums need nmax <= {CLOSED_MAX_N}")));
    }
    Ok(p.nmax)
}

fn unsum_even(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        for n in 0..=closed_budget(p)? {
            let closed = u_real_sum_closed(n, q, par)?;
            cmp.check(format!("{at}, n={n}"), &closed.total, &u_gf_values(q, par, n)?.0);
        }
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn unsum_even_pm(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        for n in 0..=closed_budget(p)? {
            let closed = u_real_sum_closed(n, q, par)?;
            let (_, plus, minus) = u_gf_values(q, par, n)?;
            cmp.check(format!("{at}, n={n}, plus"), &closed.eps_plus, &plus);
            cmp.check(format!("{at}, n={n}, minus"), &closed.eps_minus, &minus);
        }
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn genfn_even_alt(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        for n in 0..=closed_budget(p)? {
            let closed = u_real_sum_closed(n, q, par)?;
            let (_, plus, minus) = u_gf_values(q, par, n)?;
            cmp.check(format!("{at}, n={n}, plus"), &closed.alternative[0], &plus);
            cmp.check(format!("{at}, n={n}, minus"), &closed.alternative[1], &minus);
        }
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn unsum_odd(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        for n in 0..=closed_budget(p)? {
            let closed = u_real_sum_closed(n, q, par)?;
            cmp.check(format!("{at}, n={n}, two expressions"), &closed.total, &closed.alternative[0]);
            cmp.check(format!("{at}, n={n}, against the product"), &closed.total, &u_gf_values(q, par, n)?.0);
        }
        Ok(())
    }
    drive(p, &[Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

// ---------------------------------------------------------------- worked examples

fn poly<F: Field>(q: &F, cs: &[i64]) -> F {
    QPolynomial::from_ints(cs).eval_in(q)
}

fn example_u2_even(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, _: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let q2 = poly(q, &[0, 0, 1]);
        cmp.check(format!("{at}, product route"), &u_gf_values(q, par, 2)?.0, &q2);
        cmp.check(format!("{at}, partition sum"), &u_real_sum_closed(2, q, par)?.total, &q2);
        cmp.check(format!("{at}, involutions"), &involution_count(Flavor::U, 2, q, par)?, &q2);
        let z = -q.inv()?;
        let t = q.inv()?;
        // (q + 1)(q² - 1)
        let den = poly(q, &[-1, -1, 1, 1]);
        let p2 = hl_principal(&"[2]".parse()?, &z, &t)?;
        cmp.check(format!("{at}, P_(2)"), &p2, &poly(q, &[0, 1, 0, 1]).try_div(&den)?);
        let p11 = hl_principal(&"[1,1]".parse()?, &z, &t)?;
        cmp.check(format!("{at}, P_(1,1)"), &p11, &poly(q, &[0, 0, -1]).try_div(&den)?);
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn example_u3_even(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, _: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let plus = poly(q, &[0, 0, 1, -1, 1]);
        let minus = poly(q, &[0, -1, 1]);
        let (_, gp, gm) = u_gf_values(q, par, 3)?;
        cmp.check(format!("{at}, product route, plus"), &gp, &plus);
        cmp.check(format!("{at}, product route, minus"), &gm, &minus);
        let closed = u_real_sum_closed(3, q, par)?;
        cmp.check(format!("{at}, partition sum, plus"), &closed.eps_plus, &plus);
        cmp.check(format!("{at}, partition sum, minus"), &closed.eps_minus, &minus);
        cmp.check(format!("{at}, short expansion, plus"), &closed.alternative[0], &plus);
        cmp.check(format!("{at}, short expansion, minus"), &closed.alternative[1], &minus);
        let inv = involution_count(Flavor::U, 3, q, par)?;
        cmp.check(format!("{at}, involutions"), &inv, &poly(q, &[0, 1, 0, -1, 1]));
        Ok(())
    }
    drive(p, &[Parity::Even], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn example_u2_odd(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, par: Parity, _: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        let total = poly(q, &[0, 1, 1]);
        let minus = poly(q, &[-1, 1]);
        let (gt, _, gm) = u_gf_values(q, par, 2)?;
        cmp.check(format!("{at}, product route, total"), &gt, &total);
        cmp.check(format!("{at}, product route, minus"), &gm, &minus);
        let closed = u_real_sum_closed(2, q, par)?;
        cmp.check(format!("{at}, partition sum, total"), &closed.total, &total);
        cmp.check(format!("{at}, second expression, total"), &closed.alternative[0], &total);
        cmp.check(format!("{at}, partition sum, minus"), &closed.eps_minus, &minus);
        let inv = involution_count(Flavor::U, 2, q, par)?;
        cmp.check(format!("{at}, involutions"), &inv, &poly(q, &[2, -1, 1]));
        Ok(())
    }
    drive(p, &[Parity::Odd], cmp, go::<RationalFunction>, go::<ExactRational>)
}

// ---------------------------------------------------------------- Warnaar

type L1<F> = RatFunc<F>;
type L2<F> = RatFunc<L1<F>>;
type L3<F> = RatFunc<L2<F>>;

/// `Q(q)(t)(a)(b)` (or `Q(t)(a)(b)` at numeric `q`) with `z = ±1/q`, `c = 1`.
fn warnaar_run<F: Field>(q: &F, p: &CheckParams, cmp: &mut Cmp, at: &str, with_b: bool) -> Result<()> {
    let lift = |x: F| -> L3<F> { L3::<F>::from(L2::<F>::from(L1::<F>::from(x))) };
    let t = L3::<F>::from(L2::<F>::from(L1::<F>::var()));
    let a = L3::<F>::from(L2::<F>::var());
    let b: L3<F> = L3::<F>::var();
    for (label, z) in [("z=1/q", q.inv()?), ("z=-1/q", -q.inv()?)] {
        let params = WarnaarParams {
            a: a.clone(),
            b: with_b.then(|| b.clone()),
            t: t.clone(),
            z: lift(z),
            c: L3::<F>::one(),
        };
        let (lhs, rhs) = warnaar_sides(&params, p.order)?;
        cmp.series(format!("{at}, {label}"), &lhs, &rhs);
    }
    Ok(())
}

fn warid(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, _: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        warnaar_run(q, p, cmp, at, true)
    }
    drive(p, &[], cmp, go::<RationalFunction>, go::<ExactRational>)
}

fn warcor(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    fn go<F: Field>(q: &F, _: Parity, p: &CheckParams, cmp: &mut Cmp, at: &str) -> Result<()> {
        warnaar_run(q, p, cmp, at, false)
    }
    drive(p, &[], cmp, go::<RationalFunction>, go::<ExactRational>)
}

// ---------------------------------------------------------------- oracles

/// The brute-force group list used by default.
pub const BRUTE_GROUPS: [(Flavor, usize, u64); 10] = [
    (Flavor::Gl, 2, 2),
    (Flavor::Gl, 2, 3),
    (Flavor::Gl, 2, 4),
    (Flavor::Gl, 2, 5),
    (Flavor::Gl, 3, 2),
    (Flavor::Gl, 3, 3),
    (Flavor::Gl, 4, 2),
    (Flavor::U, 2, 2),
    (Flavor::U, 2, 3),
    (Flavor::U, 3, 2),
];

fn oracle_brute(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    let groups: Vec<(Flavor, usize, u64)> = match &p.q {
        QSelect::List(qs) if !qs.is_empty() => qs
            .iter()
            .flat_map(|&q| (1..=p.nmax).flat_map(move |n| [(Flavor::Gl, n, q), (Flavor::U, n, q)]))
            .collect(),
        _ => BRUTE_GROUPS.to_vec(),
    };
    for (flavor, n, qq) in groups {
        let name = format!("{}({n},{qq})", if flavor == Flavor::Gl { "GL" } else { "U" });
        if formula_order(flavor, n, qq) > GROUP_BUDGET {
            cmp.skip(format!("{name} exceeds the enumeration budget"));
            continue;
        }
        let brute = count_square_roots_of_identity(flavor, n, qq)?;
        let closed = involution_count(flavor, n, &ExactRational::from(qq as i64), Parity::of(qq))?;
        cmp.check(&name, &ExactRational::from(brute as i64), &closed);
    }
    Ok(())
}

fn oracle_qs(p: &CheckParams, default: &[u64]) -> Vec<u64> {
    match &p.q {
        QSelect::List(qs) if !qs.is_empty() => qs.clone(),
        _ => default.to_vec(),
    }
}

fn oracle_real_sums(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    if p.nmax > ORACLE_MAX_N {
        return Err(Error::Budget(format!("enumeration needs nmax <= {ORACLE_MAX_N}")));
    }
    for qq in oracle_qs(p, &[2, 3]) {
        let qr = ExactRational::from(qq as i64);
        let par = Parity::of(qq);
        let scale = u_scale(&qr, p.nmax);
        let gl = gl_real_gf(par, &qr, p.nmax)?;
        let u = u_real_gf(par, &qr, p.nmax)?;
        let t = GroupOrderTables::new(&qr, p.nmax);
        for n in 1..=p.nmax {
            match real_degree_sum_oracle(Flavor::Gl, n, qq) {
                Ok(v) => {
                    cmp.check(format!("GL({n},{qq})"), &v, &(t.gl_factor[n].clone() * gl.coeff(n)));
                }
                Err(Error::Budget(r)) => cmp.skip(format!("GL({n},{qq}): {r}")),
                Err(e) => return Err(e),
            }
            // the unitary enumeration grows faster, so it stops one size earlier
            if n < p.nmax.max(2) {
                match real_degree_sum_oracle(Flavor::U, n, qq) {
                    Ok(v) => {
                        cmp.check(format!("U({n},{qq})"), &v, &(scale[n].clone() * u.coeff(n)));
                    }
                    Err(Error::Budget(r)) => cmp.skip(format!("U({n},{qq}): {r}")),
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Ok(())
}

fn oracle_census(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    if p.nmax > CENSUS_MAX_D {
        return Err(Error::Budget(format!("census needs nmax <= {CENSUS_MAX_D}")));
    }
    for qq in oracle_qs(p, &[2, 3, 4, 5]) {
        for flavor in [Flavor::Gl, Flavor::U] {
            for d in 1..=p.nmax {
                let brute = brute_poly_census(d, qq, flavor)?;
                let formula = count_at(d, qq, flavor)?;
                let at = format!("{flavor} d={d} q={qq}");
                cmp.check(format!("{at}, N"), &brute.n_plain, &formula.n_plain);
                cmp.check(format!("{at}, N*"), &brute.n_selfdual, &formula.n_selfdual);
                cmp.check(format!("{at}, M*"), &brute.m_pairs, &formula.m_pairs);
            }
        }
    }
    Ok(())
}

fn oracle_hl(p: &CheckParams, cmp: &mut Cmp) -> Result<()> {
    if p.q != QSelect::Symbolic {
        cmp.skip("the valuation bound needs symbolic q");
        return Ok(());
    }
    let m = FINITE_ORACLE_MAX_VARS;
    let qi = q().inv()?;
    let m1 = -RationalFunction::one();
    let zs = [("z=1/q", qi.clone()), ("z=-1/q", -qi.clone())];
    let ts = [("t=1/q", qi.clone()), ("t=-1", m1), ("t=0", RationalFunction::zero())];
    for n in 0..=p.nmax {
        for lam in enumerate_partitions(n) {
            for (zl, z) in &zs {
                let x: Vec<RationalFunction> = (0..m).map(|i| z.pow(i as i64)).collect::<Result<_>>()?;
                for (tl, t) in &ts {
                    let full = hl_principal(&lam, z, t)?;
                    let finite = hl_finite_oracle(&lam, &x, t)?;
                    let diff = full.clone() - &finite;
                    let v = diff.valuation_at_infinity();
                    let ok = v.is_none_or(|v| v >= m as i64);
                    cmp.holds(
                        format!("{lam}, {zl}, {tl}: valuation of the {m}-variable difference >= {m}"),
                        ok,
                        &full,
                        &finite,
                    );
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_complete() {
        let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len());
        for id in [
            "weyl-A", "weyl-B", "weyl-D", "lemma-prodlem-1", "lemma-prodlem-2", "thm-genfnGL", "thm-even",
            "cor-iden", "remark-igl-table", "thm-odd", "cor-cort", "u-prodlems", "thm-degreesU", "thm-warid",
            "cor-warcor", "prop-involU-even", "prop-involU-odd", "cor-epsplit-even", "cor-epsplit-odd",
            "thm-unsumeven", "cor-unsumeven-pm", "cor-genfn-even-alt", "thm-unsumodd", "example-u2-even",
            "example-u3-even", "example-u2-odd", "oracle-brute-involutions", "oracle-real-sums",
            "oracle-poly-census", "oracle-hl-finite",
        ] {
            assert!(find(id).is_ok(), "{id}");
        }
        assert!(matches!(find("thm-nope"), Err(Error::Unknown(_))));
    }

    #[test]
    fn igl_rows() {
        let t = igl_table();
        assert_eq!(t[2], QPolynomial::from_ints(&[0, -1, 0, 1, 1]));
        assert_eq!(t[3], QPolynomial::from_ints(&[0, 0, -1, 0, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn cor_iden_at_order_zero() {
        let r = run_check(find("cor-iden").unwrap(), sym(0, 0));
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn perturbed_gamma_fails_at_three() {
        let mut p = sym(5, 0);
        p.perturb_gamma = Some(3);
        let r = run_check(find("thm-even").unwrap(), p);
        assert_eq!(r.status, Status::Fail);
        let w = r.witness.unwrap();
        assert!(w.at.ends_with("n=3"), "{}", w.at);
        assert_ne!(w.lhs, w.rhs);
    }

    #[test]
    fn wrong_parity_list_is_skipped() {
        let r = run_check(find("thm-even").unwrap(), listed(3, 0, &[3, 5]));
        assert_eq!(r.status, Status::Skipped);
    }

    #[test]
    fn budget_surfaces_as_skip() {
        let r = run_check(find("oracle-real-sums").unwrap(), listed(9, 0, &[2]));
        assert_eq!(r.status, Status::Skipped);
        assert!(r.reason.unwrap().starts_with("budget"));
    }
}
