//! Published or hand-derived values, each recomputed here by a route that
//! does not go through the library code under test.

use qcharsum::chars::{char_degree, real_char_params, real_degree_sum_oracle, weyl_sums, CharParam, WeylFamily};
use qcharsum::exact::{q, q_pow, ExactRational, Field, QPolynomial, RationalFunction};
use qcharsum::groups::{count_square_roots_of_identity, group_order};
use qcharsum::hl::kostka_foulkes;
use qcharsum::hl::schur_principal;
use qcharsum::partitions::{enumerate_partitions, gaussian_binomial, Partition};
use qcharsum::polycount::count_at;
use qcharsum::Flavor;

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn int(n: i64) -> ExactRational {
    ExactRational::from(n)
}

#[test]
fn partition_counts_match_coin_change() {
    let max = 25;
    let mut dp = vec![0u64; max + 1];
    dp[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            dp[n] += dp[n - part];
        }
    }
    for (n, &count) in dp.iter().enumerate() {
        assert_eq!(enumerate_partitions(n).len() as u64, count, "n = {n}");
    }
    assert_eq!(dp[10], 42);
}

// Standard tableaux counted by removing a corner, no hooks involved.
fn syt(shape: &[usize]) -> u128 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    if shape.iter().sum::<usize>() <= 1 {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        if i + 1 == shape.len() || shape[i + 1] < shape[i] {
            let mut s = shape.clone();
            s[i] -= 1;
            total += syt(&s);
        }
    }
    total
}

#[test]
fn hook_products_count_standard_tableaux() {
    let mut h = part(&[3, 1]).hooks();
    h.sort_unstable();
    assert_eq!(h, vec![1, 1, 2, 4]);
    for n in 1..=9 {
        let fact: u128 = (1..=n as u128).product();
        for lam in enumerate_partitions(n) {
            let prod: u128 = lam.hooks().iter().map(|&x| x as u128).product();
            assert_eq!(fact / prod, syt(lam.parts()), "{lam}");
        }
    }
}

#[test]
fn gaussian_binomials_by_exact_division() {
    let one_minus_tk = |k: usize| {
        let mut c = vec![0i64; k + 1];
        c[0] = 1;
        c[k] = -1;
        QPolynomial::from_ints(&c)
    };
    assert_eq!(gaussian_binomial(4, 2).unwrap(), QPolynomial::from_ints(&[1, 1, 2, 1, 1]));
    for n in 0..=8usize {
        for k in 0..=n {
            let mut num = QPolynomial::one();
            let mut den = QPolynomial::one();
            for i in 0..k {
                num = num * one_minus_tk(n - i);
                den = den * one_minus_tk(i + 1);
            }
            assert_eq!(gaussian_binomial(n as i64, k as i64).unwrap(), num.exact_div(&den).unwrap(), "[{n} {k}]");
        }
    }
}

// Fill cells in reading order, keeping rows weak and columns strict.
fn count_ssyt(shape: &[usize], content: &[usize]) -> usize {
    fn go(shape: &[usize], cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> usize {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 0..left.len() {
            if left[v] == 0 || (c > 0 && grid[r][c - 1] > v) || (r > 0 && grid[r - 1][c] >= v) {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += go(shape, cells, k + 1, grid, left);
            left[v] += 1;
        }
        total
    }
    let cells: Vec<(usize, usize)> = shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    go(shape, &cells, 0, &mut grid, &mut content.to_vec())
}

#[test]
fn kostka_at_one_counts_tableaux() {
    for n in 1..=6 {
        let k = kostka_foulkes(n).unwrap();
        for lam in enumerate_partitions(n) {
            for mu in enumerate_partitions(n) {
                let entry = k.entry(&lam, &mu);
                let at_one = entry.eval(&int(1));
                assert_eq!(at_one, int(count_ssyt(lam.parts(), mu.parts()) as i64), "K[{lam}, {mu}]");
                let at_zero = entry.eval(&int(0));
                assert_eq!(at_zero, int((lam == mu) as i64), "K[{lam}, {mu}](0)");
            }
        }
    }
}

#[test]
fn schur_two_one_against_six_variable_monomials() {
    let x: Vec<RationalFunction> = (0..6).map(|i| q_pow(-i)).collect();
    let mut m21 = RationalFunction::zero();
    let mut m111 = RationalFunction::zero();
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                m21 += &(x[i].clone() * &x[i] * &x[j]);
            }
            for k in (j + 1)..6 {
                if i < j {
                    m111 += &(x[i].clone() * &x[j] * &x[k]);
                }
            }
        }
    }
    let finite = m21 + m111.clone() + m111;
    let full = schur_principal(&part(&[2, 1]), &q_pow(-1)).unwrap();
    let diff = full - finite;
    assert!(diff.valuation_at_infinity().unwrap() >= 6, "{diff}");
}

struct PrimeField(u64);

impl PrimeField {
    fn inv(&self, a: u64) -> u64 {
        (1..self.0).find(|b| a * b % self.0 == 1).unwrap()
    }
}

// Monic polynomials as coefficient vectors, constant term first.
fn monic_polys(p: u64, d: usize) -> Vec<Vec<u64>> {
    let count = p.pow(d as u32);
    (0..count)
        .map(|mut k| {
            let mut c = Vec::with_capacity(d + 1);
            for _ in 0..d {
                c.push(k % p);
                k /= p;
            }
            c.push(1);
            c
        })
        .collect()
}

fn mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn irreducibles(p: u64, d: usize) -> Vec<Vec<u64>> {
    let mut reducible = std::collections::HashSet::new();
    for a in 1..d {
        for f in monic_polys(p, a) {
            for g in monic_polys(p, d - a) {
                reducible.insert(mul_mod(&f, &g, p));
            }
        }
    }
    monic_polys(p, d).into_iter().filter(|f| !reducible.contains(f)).collect()
}

fn star(f: &[u64], field: &PrimeField) -> Option<Vec<u64>> {
    if f[0] == 0 {
        return None;
    }
    let c = field.inv(f[0]);
    Some(f.iter().rev().map(|x| x * c % field.0).collect())
}

#[test]
fn census_against_sieved_irreducibles() {
    for p in [2u64, 3, 5] {
        let field = PrimeField(p);
        for d in 1..=4 {
            let irr = irreducibles(p, d);
            let mut selfdual = 0;
            let mut paired = 0;
            for f in &irr {
                match star(f, &field) {
                    Some(g) if &g == f => selfdual += 1,
                    Some(_) => paired += 1,
                    None => {}
                }
            }
            let c = count_at(d, p, Flavor::Gl).unwrap();
            assert_eq!(c.n_plain, int(irr.len() as i64), "N({d},{p})");
            assert_eq!(c.n_selfdual, int(selfdual), "N*({d},{p})");
            assert_eq!(c.m_pairs, int(paired / 2), "M*({d},{p})");
        }
    }
    assert_eq!(count_at(1, 2, Flavor::Gl).unwrap().n_plain, int(2));
    assert_eq!(count_at(2, 2, Flavor::Gl).unwrap().n_plain, int(1));
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

// Signed permutations with a sign mask; `even_only` restricts to type D.
fn signed_involutions(n: usize, even_only: bool) -> u128 {
    let mut count = 0;
    for p in permutations(n) {
        for mask in 0u32..(1 << n) {
            if even_only && mask.count_ones() % 2 == 1 {
                continue;
            }
            let neg = |i: usize| mask >> i & 1 == 1;
            // w(i) = ±p(i); w² = 1 needs p² = 1 and equal signs on each 2-cycle.
            if (0..n).all(|i| p[p[i]] == i && neg(i) == neg(p[i])) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn weyl_involutions_by_enumeration() {
    for n in 1..=6 {
        let a = permutations(n).iter().filter(|p| (0..n).all(|i| p[p[i]] == i)).count() as u128;
        assert_eq!(weyl_sums(WeylFamily::A, n).unwrap().involutions, a, "A{n}");
        assert_eq!(weyl_sums(WeylFamily::B, n).unwrap().involutions, signed_involutions(n, false), "B{n}");
        if n >= 2 {
            assert_eq!(weyl_sums(WeylFamily::D, n).unwrap().involutions, signed_involutions(n, true), "D{n}");
        }
    }
    // n! [x^n] exp(x + x²/2)
    let invol = [1u128, 1, 2, 4, 10, 26, 76, 232];
    for (n, &v) in invol.iter().enumerate().skip(1) {
        assert_eq!(weyl_sums(WeylFamily::A, n).unwrap().degree_sum, v);
    }
}

#[test]
fn symmetric_group_degree_sum_from_tableaux() {
    for n in 1..=10 {
        let total: u128 = enumerate_partitions(n).iter().map(|l| syt(l.parts())).sum();
        assert_eq!(weyl_sums(WeylFamily::A, n).unwrap().degree_sum, total, "S_{n}");
    }
}

#[test]
fn small_group_orders_and_involutions() {
    assert_eq!(group_order(Flavor::U, 2, 2).unwrap(), 18);
    assert_eq!(group_order(Flavor::U, 3, 2).unwrap(), 648);
    assert_eq!(group_order(Flavor::Gl, 3, 2).unwrap(), 168);
    // GL(2,2) is S_3; GL(3,2) has 21 involutions; GL(2,3) has -1 and the 12 conjugates of diag(1,-1).
    assert_eq!(count_square_roots_of_identity(Flavor::Gl, 2, 2).unwrap(), 4);
    assert_eq!(count_square_roots_of_identity(Flavor::Gl, 3, 2).unwrap(), 22);
    assert_eq!(count_square_roots_of_identity(Flavor::Gl, 2, 3).unwrap(), 14);
}

#[test]
fn real_sums_from_known_character_tables() {
    // S_3: 1, 1, 2. GL(3,2): real degrees 1, 6, 7, 8 (the two of degree 3 are complex).
    assert_eq!(real_degree_sum_oracle(Flavor::Gl, 2, 2).unwrap(), int(4));
    assert_eq!(real_degree_sum_oracle(Flavor::Gl, 3, 2).unwrap(), int(22));
    assert_eq!(real_degree_sum_oracle(Flavor::U, 2, 2).unwrap(), int(4));
    // every character of S_3 is real, so the squares fill the group order
    let sq: ExactRational = real_char_params(Flavor::Gl, 2, 2)
        .unwrap()
        .iter()
        .map(|p| {
            let d = char_degree(p, &int(2)).unwrap();
            d.clone() * d
        })
        .fold(int(0), |a, b| a + b);
    assert_eq!(sq, int(6));
}

#[test]
fn unipotent_degrees_of_small_general_linear_groups() {
    let degrees = |n: usize| {
        let mut v: Vec<String> = enumerate_partitions(n)
            .into_iter()
            .map(|l| char_degree(&CharParam::single(Flavor::Gl, 1, l), &q()).unwrap().to_string())
            .collect();
        v.sort();
        v
    };
    let mut two = vec!["1".to_string(), q().to_string()];
    two.sort();
    assert_eq!(degrees(2), two);
    let q2q = q().pow(2).unwrap() + q();
    let mut three = vec!["1".to_string(), q2q.to_string(), q().pow(3).unwrap().to_string()];
    three.sort();
    assert_eq!(degrees(3), three);
}
