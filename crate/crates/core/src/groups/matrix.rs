//! Square matrices over a [`GaloisField`].

use super::field::{FiniteFieldElem, GaloisField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixOverField {
    n: usize,
    entries: Vec<FiniteFieldElem>,
}

impl MatrixOverField {
    pub fn from_rows(rows: &[Vec<FiniteFieldElem>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        MatrixOverField { n, entries: rows.concat() }
    }

    pub fn identity(f: &GaloisField, n: usize) -> Self {
        let mut entries = vec![f.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = f.one();
        }
        MatrixOverField { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> FiniteFieldElem {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, f: &GaloisField, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![f.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == f.zero() {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = f.add(*e, f.mul(a, other.get(k, j)));
                }
            }
        }
        MatrixOverField { n, entries }
    }

    pub fn is_identity(&self, f: &GaloisField) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j) == if i == j { f.one() } else { f.zero() }))
    }

    /// `ḡᵀ` with entrywise `a ↦ a^q`.
    pub fn conjugate_transpose(&self, f: &GaloisField, q: u64) -> Self {
        let n = self.n;
        let mut entries = vec![f.zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = f.pow(self.get(i, j), q);
            }
        }
        MatrixOverField { n, entries }
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, f: &GaloisField) -> usize {
        let n = self.n;
        let mut m: Vec<Vec<FiniteFieldElem>> = (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(piv) = (rank..n).find(|&r| m[r][col] != f.zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = f.inv(m[rank][col]).expect("pivot is nonzero");
            for r in 0..n {
                if r != rank && m[r][col] != f.zero() {
                    let c = f.mul(m[r][col], inv);
                    for k in col..n {
                        let sub = f.mul(c, m[rank][k]);
                        m[r][k] = f.sub(m[r][k], sub);
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self, f: &GaloisField) -> bool {
        self.rank(f) == self.n
    }
}
