//! Integer-coefficient helpers behind the rational polynomial gcd.
//!
//! A heuristic gcd (evaluate at a large integer, take the integer gcd,
//! reconstruct, certify by exact division) handles the common case; a
//! primitive pseudo-remainder sequence is the fallback. Both are exact.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QPolynomial;
use super::rational::ExactRational;

type ZPoly = Vec<BigInt>;

fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with positive leading coefficient.
fn primitive(mut p: ZPoly) -> ZPoly {
    trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let mut c = content(&p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    if !c.is_one() {
        for x in p.iter_mut() {
            *x /= &c;
        }
    }
    p
}

fn to_primitive_integer(p: &QPolynomial) -> ZPoly {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    primitive(
        p.coeffs()
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect(),
    )
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let k = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &lr * bj;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

fn prs_gcd(a: ZPoly, b: ZPoly) -> ZPoly {
    let (mut x, mut y) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    while !y.is_empty() {
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    primitive(x)
}

/// True when `d` divides `p` over the integers.
fn divides(d: &[BigInt], p: &[BigInt]) -> bool {
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut r = p.to_vec();
    while r.len() > dd {
        let k = r.len() - 1 - dd;
        let (c, rem) = r.last().unwrap().div_rem(lc);
        if !rem.is_zero() {
            return false;
        }
        for (j, dj) in d.iter().enumerate() {
            r[k + j] -= &c * dj;
        }
        r.pop();
        trim(&mut r);
    }
    r.is_empty()
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn max_norm(p: &[BigInt]) -> BigInt {
    p.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn heuristic_gcd(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let mut xi: BigInt = BigInt::from(2) * max_norm(a).min(max_norm(b)) + 2;
    let deg = a.len().max(b.len()) as u64;
    for _ in 0..6 {
        if xi.bits() * deg > 200_000 {
            return None;
        }
        let mut g = eval(a, &xi).gcd(&eval(b, &xi));
        let mut h = Vec::new();
        let half = &xi >> 1;
        while !g.is_zero() {
            let mut d = g.mod_floor(&xi);
            if d > half {
                d -= &xi;
            }
            g = (g - &d) / &xi;
            h.push(d);
        }
        let h = primitive(h);
        if !h.is_empty() && divides(&h, a) && divides(&h, b) {
            return Some(h);
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Monic gcd of two nonzero rational polynomials.
pub(crate) fn rational_gcd(a: &QPolynomial, b: &QPolynomial) -> QPolynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant_nonzero() || b.is_constant_nonzero() {
        return QPolynomial::one();
    }
    let za = to_primitive_integer(a);
    let zb = to_primitive_integer(b);
    if za == zb {
        return a.monic();
    }
    let g = heuristic_gcd(&za, &zb).unwrap_or_else(|| prs_gcd(za, zb));
    let p = QPolynomial::new(g.into_iter().map(ExactRational::integer).collect());
    debug_assert!(p.leading().map(|c| c.numer().sign() == Sign::Plus).unwrap_or(true));
    p.monic()
}
