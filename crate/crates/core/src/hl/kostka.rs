//! Kostka–Foulkes polynomials `K_{λμ}(t) = Σ_T t^{charge(T)}` over
//! semistandard tableaux, and the inverse transition matrix.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exact::{ExactRational, QPolynomial};
use crate::partitions::{enumerate_partitions, Partition};

/// Largest weight for which the matrix is built.
pub const KOSTKA_BUDGET: usize = 12;

/// A semistandard tableau stored as rows of entries, entries from 1.
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of shape `shape` and content `content`.
///
/// Entries equal to `v` form a horizontal strip, so the tableau is built as
/// a chain of shapes, one strip per letter.
pub fn semistandard_tableaux(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    let lam = shape.parts();
    if content.iter().sum::<usize>() != shape.size() {
        return vec![];
    }
    let mut out = vec![];
    let mut rows: Tableau = vec![vec![]; lam.len()];
    fill(lam, content, 0, &mut rows, &mut out);
    out
}

fn fill(lam: &[usize], content: &[usize], letter: usize, rows: &mut Tableau, out: &mut Vec<Tableau>) {
    if letter == content.len() {
        out.push(rows.clone());
        return;
    }
    let current: Vec<usize> = rows.iter().map(Vec::len).collect();
    strips(lam, &current, 0, content[letter], &mut current.clone(), &mut |next| {
        let mut added = vec![];
        for (i, (&a, &b)) in current.iter().zip(next).enumerate() {
            for _ in a..b {
                rows[i].push(letter + 1);
            }
            added.push(b - a);
        }
        fill(lam, content, letter + 1, rows, out);
        for (i, k) in added.into_iter().enumerate() {
            let len = rows[i].len();
            rows[i].truncate(len - k);
        }
    });
}

/// Shapes `next ⊆ lam` obtained from `cur` by adding a horizontal strip of `left` boxes.
fn strips(lam: &[usize], cur: &[usize], row: usize, left: usize, next: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if row == lam.len() {
        if left == 0 {
            emit(next);
        }
        return;
    }
    // Row `row` may grow up to the old length of the row above it.
    let cap = if row == 0 { lam[0] } else { cur[row - 1].min(lam[row]) };
    let max_add = cap.saturating_sub(cur[row]).min(left);
    for add in 0..=max_add {
        next[row] = cur[row] + add;
        strips(lam, cur, row + 1, left - add, next, emit);
    }
    next[row] = cur[row];
}

/// Reading word: rows from the bottom up, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are peeled off by scanning leftwards (cyclically) for
/// `1, 2, 3, ...`; inside each, letter `r+1` gets the index of `r`, plus one
/// when it sits to the right of `r`. The charge is the sum of indices.
pub fn charge(word: &[usize]) -> usize {
    let mut used = vec![false; word.len()];
    let mut remaining = word.len();
    let mut total = 0;
    while remaining > 0 {
        let mut letter = 1;
        let mut pos = word.len();
        let mut index = 0;
        loop {
            let left = (0..pos).rev().find(|&i| !used[i] && word[i] == letter);
            let found = match left {
                Some(i) => Some((i, false)),
                None => (pos..word.len()).rev().find(|&i| !used[i] && word[i] == letter).map(|i| (i, true)),
            };
            let Some((i, wrapped)) = found else { break };
            if letter > 1 && wrapped {
                index += 1;
            }
            total += index;
            used[i] = true;
            remaining -= 1;
            pos = i;
            letter += 1;
        }
    }
    total
}

/// `K(t)` and `K(t)^{-1}` over all partitions of `n`, rows and columns in
/// reverse lexicographic order, so both are upper unitriangular.
#[derive(Clone, Debug)]
pub struct KostkaMatrix {
    n: usize,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    k: Vec<Vec<QPolynomial>>,
    k_inv: Vec<Vec<QPolynomial>>,
}

impl KostkaMatrix {
    fn build(n: usize) -> Self {
        let order = enumerate_partitions(n);
        let len = order.len();
        let index = order.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut k = vec![vec![QPolynomial::zero(); len]; len];
        for (i, lam) in order.iter().enumerate() {
            for (j, mu) in order.iter().enumerate().skip(i) {
                if !lam.dominates(mu) {
                    continue;
                }
                let mut coeffs: Vec<ExactRational> = vec![];
                for t in semistandard_tableaux(lam, mu.parts()) {
                    let c = charge(&reading_word(&t));
                    if coeffs.len() <= c {
                        coeffs.resize(c + 1, ExactRational::from(0));
                    }
                    coeffs[c] = coeffs[c].clone() + ExactRational::from(1);
                }
                k[i][j] = QPolynomial::new(coeffs);
            }
        }
        // Back substitution for K X = 1, bottom row first.
        let mut k_inv = vec![vec![QPolynomial::zero(); len]; len];
        for i in (0..len).rev() {
            for j in i..len {
                let mut acc = if i == j { QPolynomial::one() } else { QPolynomial::zero() };
                for m in i + 1..=j {
                    if !k[i][m].is_zero() && !k_inv[m][j].is_zero() {
                        acc = &acc - &(&k[i][m] * &k_inv[m][j]);
                    }
                }
                k_inv[i][j] = acc;
            }
        }
        KostkaMatrix { n, order, index, k, k_inv }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn position(&self, lam: &Partition) -> Option<usize> {
        self.index.get(lam).copied()
    }

    /// `K_{λμ}(t)`.
    pub fn entry(&self, lam: &Partition, mu: &Partition) -> &QPolynomial {
        &self.k[self.index[lam]][self.index[mu]]
    }

    /// `(K^{-1})_{λμ}(t)`, so that `P_λ = Σ_μ (K^{-1})_{λμ} s_μ`.
    pub fn inverse_entry(&self, lam: &Partition, mu: &Partition) -> &QPolynomial {
        &self.k_inv[self.index[lam]][self.index[mu]]
    }

    pub fn rows(&self) -> &[Vec<QPolynomial>] {
        &self.k
    }

    pub fn inverse_rows(&self) -> &[Vec<QPolynomial>] {
        &self.k_inv
    }
}

/// The Kostka–Foulkes matrix of weight `n`, built once per process.
pub fn kostka_foulkes(n: usize) -> Result<Arc<KostkaMatrix>> {
    if n > KOSTKA_BUDGET {
        return Err(Error::Budget(format!("Kostka-Foulkes matrix for n = {n} exceeds {KOSTKA_BUDGET}")));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KostkaMatrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().unwrap().get(&n) {
        return Ok(m.clone());
    }
    let m = Arc::new(KostkaMatrix::build(n));
    cache.lock().unwrap().entry(n).or_insert(m.clone());
    Ok(m)
}
