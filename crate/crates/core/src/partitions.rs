//! Integer partitions, their diagram statistics, and Gaussian binomials.
//!
//! [`enumerate_partitions`] lists partitions in reverse lexicographic order:
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. Reverse lexicographic order
//! extends dominance, which keeps the Kostka–Foulkes matrix upper
//! unitriangular in that basis.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Field, QPolynomial};

/// A weakly decreasing list of positive parts. `[]` is the partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// Statistics of a partition used by the degree and Hall–Littlewood formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub conjugate: Partition,
    pub hooks: Vec<usize>,
    pub n_stat: usize,
    pub ell: usize,
    pub ell_odd: usize,
    pub even_part: Partition,
    pub odd_part: Partition,
    pub mults: BTreeMap<usize, usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("partition parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("partition parts must be weakly decreasing: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^m)`.
    pub fn column(m: usize) -> Self {
        Partition(vec![1; m])
    }

    /// `(m)`, or the empty partition for `m = 0`.
    pub fn row(m: usize) -> Self {
        Partition::from_parts(vec![m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// Hook lengths in row-major order of the diagram.
    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                hooks.push((row - j - 1) + (conj.0[j] - i - 1) + 1);
            }
        }
        hooks
    }

    /// Contents `j - i` of the boxes, row-major.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            out.extend((0..row).map(|j| j as i64 - i as i64));
        }
        out
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn multiplicity(&self, j: usize) -> usize {
        self.0.iter().filter(|&&p| p == j).count()
    }

    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn even_part(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|p| p % 2 == 0).collect())
    }

    pub fn odd_part(&self) -> Partition {
        Partition(self.0.iter().copied().filter(|p| p % 2 == 1).collect())
    }

    /// Number of odd parts, `ℓ(λ_o)`.
    pub fn ell_odd(&self) -> usize {
        self.0.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// True when every part is even.
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Dominance order `self ⊵ other` (equal sizes assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            conjugate: self.conjugate(),
            hooks: self.hooks(),
            n_stat: self.n_stat(),
            ell: self.len(),
            ell_odd: self.ell_odd(),
            even_part: self.even_part(),
            odd_part: self.odd_part(),
            mults: self.multiplicities(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[4,4,2]`, `4,4,2`, `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad partition `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size `0..=n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Vec<Partition>> {
    (0..=n).map(enumerate_partitions).collect()
}

/// `(t^m - 1)(t^{m-1} - 1)···(t - 1)` as a polynomial.
fn t_factorial(m: usize) -> QPolynomial {
    (1..=m).fold(QPolynomial::one(), |acc, i| {
        &acc * &(&QPolynomial::monomial(Field::one(), i) - &QPolynomial::one())
    })
}

/// Gaussian binomial `[n choose k]_t` as a polynomial in `t`.
pub fn gaussian_binomial(n: i64, k: i64) -> Result<QPolynomial> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Precondition(format!("gaussian binomial needs 0 <= k <= n, got n={n}, k={k}")));
    }
    let (n, k) = (n as usize, k as usize);
    let denom = &t_factorial(k) * &t_factorial(n - k);
    t_factorial(n).exact_div(&denom)
}

/// `[n choose k]_t` evaluated at an element of any field.
pub fn gaussian_binomial_at<F: Field>(n: usize, k: usize, t: &F) -> F {
    if k > n {
        return F::zero();
    }
    gaussian_binomial(n as i64, k as i64)
        .expect("in range")
        .eval_in(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent partition counter: p(n) by coin-change dynamic programming.
    fn partition_count(n: usize) -> usize {
        let mut ways = vec![0usize; n + 1];
        ways[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                ways[m] += ways[m - part];
            }
        }
        ways[n]
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).len(), 5);
        assert_eq!(partition_count(10), 42);
        for n in 0..=15 {
            assert_eq!(enumerate_partitions(n).len(), partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn reverse_lexicographic_order() {
        let got: Vec<String> = enumerate_partitions(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(got, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
        for n in 1..=9 {
            let ps = enumerate_partitions(n);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(a > b);
                    assert!(!b.dominates(a) || a == b, "{b} dominates earlier {a}");
                }
            }
        }
    }

    #[test]
    fn worked_example_statistics() {
        let lam = p(&[7, 4, 4, 3, 3, 2, 1, 1, 1]);
        let s = lam.stats();
        assert_eq!(s.even_part, p(&[4, 4, 2]));
        assert_eq!(s.odd_part, p(&[7, 3, 3, 1, 1, 1]));
        assert_eq!(s.ell, 9);
        assert_eq!(s.ell_odd, 6);
        assert_eq!(lam.multiplicity(7), 1);
        assert_eq!(lam.multiplicity(2), 1);
        assert_eq!(lam.multiplicity(4), 2);
        assert_eq!(lam.multiplicity(3), 2);
        assert_eq!(lam.multiplicity(1), 3);
    }

    #[test]
    fn small_diagrams() {
        let l = p(&[2, 1]);
        let mut h = l.hooks();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(l.n_stat(), 1);
        assert_eq!(l.conjugate(), l);

        let l = p(&[3, 1]);
        let mut h = l.hooks();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 2, 4]);
        assert_eq!(h.iter().sum::<usize>(), 8);
        assert_eq!(l.n_stat() + l.conjugate().n_stat() + l.size(), 1 + 3 + 4);
    }

    #[test]
    fn diagram_identities() {
        for n in 0..=12 {
            for l in enumerate_partitions(n) {
                assert_eq!(l.conjugate().conjugate(), l);
                let hook_sum: usize = l.hooks().iter().sum();
                assert_eq!(hook_sum, l.n_stat() + l.conjugate().n_stat() + n);
                assert_eq!(n % 2, l.ell_odd() % 2, "{l}");
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[4,4,2]".parse::<Partition>().unwrap(), p(&[4, 4, 2]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 1).unwrap(), QPolynomial::from_ints(&[1, 1]));
        assert_eq!(gaussian_binomial(4, 2).unwrap(), QPolynomial::from_ints(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0).unwrap(), QPolynomial::one());
        assert!(gaussian_binomial(3, 4).is_err());
        assert!(gaussian_binomial(3, -1).is_err());
    }

    #[test]
    fn gaussian_pascal_and_palindromes() {
        let t = QPolynomial::x();
        for n in 1..=10i64 {
            for k in 1..n {
                let lhs = gaussian_binomial(n, k).unwrap();
                let rhs = &gaussian_binomial(n - 1, k - 1).unwrap()
                    + &(&t.pow(k as u32) * &gaussian_binomial(n - 1, k).unwrap());
                assert_eq!(lhs, rhs);
                assert_eq!(lhs.degree(), Some((k * (n - k)) as usize));
                assert_eq!(lhs.reversed(), lhs);
            }
        }
    }
}
