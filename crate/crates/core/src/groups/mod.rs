//! Brute-force oracles over explicit matrix groups: `GL(n,q)` and
//! `U(n,q) = {g ∈ GL(n,q²) : ḡᵀ g = 1}`.
//!
//! Elements are generated row by row (a basis for `GL`, an orthonormal frame
//! for `U`), so only group elements are ever visited.

mod field;
mod matrix;

pub use field::{prime_power, FiniteFieldElem, GaloisField};
pub use matrix::MatrixOverField;

use crate::error::{Error, Result};
use crate::Flavor;

/// Largest group that will be enumerated.
pub const GROUP_BUDGET: u128 = 10_000_000;

/// `|GL(n,q)|` or `|U(n,q)|` from the product formulas, as an integer.
pub fn formula_order(group: Flavor, n: usize, q: u64) -> u128 {
    let q = q as i128;
    let mut acc: i128 = q.pow((n * n.saturating_sub(1) / 2) as u32);
    for i in 1..=n as u32 {
        let s = match group {
            Flavor::Gl => 1,
            Flavor::U => (-1i128).pow(i),
        };
        acc *= q.pow(i) - s;
    }
    acc as u128
}

struct Enumerator {
    f: GaloisField,
    n: usize,
    q: u64,
    group: Flavor,
    vectors: Vec<Vec<FiniteFieldElem>>,
}

impl Enumerator {
    fn new(group: Flavor, n: usize, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("n must be positive".into()));
        }
        prime_power(q)?;
        let order = formula_order(group, n, q);
        if order > GROUP_BUDGET {
            return Err(Error::Budget(format!("{group}({n},{q}) has {order} elements")));
        }
        let f = match group {
            Flavor::Gl => GaloisField::with_order(q)?,
            Flavor::U => GaloisField::with_order(q * q)?,
        };
        let mut vectors = vec![vec![]];
        for _ in 0..n {
            vectors = vectors
                .into_iter()
                .flat_map(|v| {
                    f.elements().map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        Ok(Enumerator { f, n, q, group, vectors })
    }

    /// `Σ_k x_k conj(y_k)`.
    fn hermitian(&self, x: &[FiniteFieldElem], y: &[FiniteFieldElem]) -> FiniteFieldElem {
        x.iter().zip(y).fold(self.f.zero(), |acc, (&a, &b)| {
            self.f.add(acc, self.f.mul(a, self.f.pow(b, self.q)))
        })
    }

    fn visit(&self, visit: &mut dyn FnMut(&MatrixOverField)) {
        let mut rows = Vec::with_capacity(self.n);
        self.extend(&mut rows, visit);
    }

    fn extend(&self, rows: &mut Vec<Vec<FiniteFieldElem>>, visit: &mut dyn FnMut(&MatrixOverField)) {
        if rows.len() == self.n {
            visit(&MatrixOverField::from_rows(rows));
            return;
        }
        for v in &self.vectors {
            let ok = match self.group {
                Flavor::Gl => {
                    let mut trial = rows.clone();
                    trial.push(v.clone());
                    independent(&self.f, &trial)
                }
                Flavor::U => {
                    self.hermitian(v, v) == self.f.one()
                        && rows.iter().all(|r| self.hermitian(v, r) == self.f.zero())
                }
            };
            if ok {
                rows.push(v.clone());
                self.extend(rows, visit);
                rows.pop();
            }
        }
    }
}

fn independent(f: &GaloisField, rows: &[Vec<FiniteFieldElem>]) -> bool {
    let n = rows[0].len();
    let mut padded: Vec<Vec<FiniteFieldElem>> = rows.to_vec();
    padded.resize(n, vec![f.zero(); n]);
    MatrixOverField::from_rows(&padded).rank(f) == rows.len()
}

/// Calls `visit` on every element of the group.
pub fn for_each_element(group: Flavor, n: usize, q: u64, mut visit: impl FnMut(&GaloisField, &MatrixOverField)) -> Result<()> {
    let e = Enumerator::new(group, n, q)?;
    e.visit(&mut |m| visit(&e.f, m));
    Ok(())
}

/// Number of enumerated elements.
pub fn group_order(group: Flavor, n: usize, q: u64) -> Result<u64> {
    let mut count = 0;
    for_each_element(group, n, q, |_, _| count += 1)?;
    Ok(count)
}

/// `#{h : h² = 1}` by squaring every element.
pub fn count_square_roots_of_identity(group: Flavor, n: usize, q: u64) -> Result<u64> {
    let mut count = 0;
    for_each_element(group, n, q, |f, h| {
        if h.mul(f, h).is_identity(f) {
            count += 1;
        }
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(group_order(Flavor::Gl, 2, 3).unwrap(), 48);
        assert_eq!(group_order(Flavor::U, 2, 2).unwrap(), 18);
        assert_eq!(group_order(Flavor::U, 1, 3).unwrap(), 4);
        assert_eq!(formula_order(Flavor::U, 3, 2), 648);
    }

    #[test]
    fn square_roots_small() {
        assert_eq!(count_square_roots_of_identity(Flavor::Gl, 2, 2).unwrap(), 4);
        assert_eq!(count_square_roots_of_identity(Flavor::U, 2, 2).unwrap(), 4);
    }

    #[test]
    fn unitary_elements_satisfy_the_form() {
        for_each_element(Flavor::U, 2, 3, |f, g| {
            assert!(g.conjugate_transpose(f, 3).mul(f, g).is_identity(f));
        })
        .unwrap();
    }

    #[test]
    fn row_building_matches_filtering_all_matrices() {
        // Filter every 2×2 matrix over F_4 directly.
        let f = GaloisField::with_order(4).unwrap();
        let els: Vec<_> = f.elements().collect();
        let (mut gl, mut u) = (0, 0);
        for &a in &els {
            for &b in &els {
                for &c in &els {
                    for &d in &els {
                        let m = MatrixOverField::from_rows(&[vec![a, b], vec![c, d]]);
                        if m.is_invertible(&f) {
                            gl += 1;
                        }
                        if m.conjugate_transpose(&f, 2).mul(&f, &m).is_identity(&f) {
                            u += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(group_order(Flavor::Gl, 2, 4).unwrap(), gl);
        assert_eq!(group_order(Flavor::U, 2, 2).unwrap(), u);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(group_order(Flavor::Gl, 4, 4), Err(Error::Budget(_))));
        assert!(group_order(Flavor::Gl, 2, 6).is_err());
    }
}
