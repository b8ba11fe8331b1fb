//! Both sides of Warnaar's Hall–Littlewood summations under the geometric
//! substitution `x_i = c z^{i-1} u`, as series in `u`:
//!
//! `Σ_λ a^{ℓ(λ_o)} h_{λ_e}(ab; t) h_{λ_o}(b/a; t) P_λ(x; t)
//!   = ∏_i (1 + a x_i)(1 + b x_i) / (1 - x_i²) · ∏_{i<j} (1 - t x_i x_j) / (1 - x_i x_j)`,
//!
//! and the `b = 0` case where the Rogers–Szegő weights drop out.

use crate::error::Result;
use crate::exact::{Field, TruncatedSeries};
use crate::partitions::enumerate_partitions;
use crate::qseries::{euler_expand, pair_expand, GeometricFactorSpec, PairProductSpec};

use super::{hl_principal, rs_multi};

#[derive(Clone, Debug)]
pub struct WarnaarParams<F> {
    pub a: F,
    /// `None` gives the `b = 0` specialization.
    pub b: Option<F>,
    pub t: F,
    pub z: F,
    pub c: F,
}

/// `(partition sum, product)` truncated at `order`.
pub fn warnaar_sides<F: Field>(p: &WarnaarParams<F>, order: usize) -> Result<(TruncatedSeries<F>, TruncatedSeries<F>)> {
    let mut lhs = Vec::with_capacity(order + 1);
    let mut c_pow = F::one();
    for n in 0..=order {
        let mut sum = F::zero();
        for lam in enumerate_partitions(n) {
            let (even, odd) = (lam.even_part(), lam.odd_part());
            let mut w = p.a.pow(odd.len() as i64)?;
            if let Some(b) = &p.b {
                let ab = p.a.clone() * b;
                let b_over_a = b.try_div(&p.a)?;
                w = w * rs_multi(&even, &ab, &p.t) * rs_multi(&odd, &b_over_a, &p.t);
            }
            if w.is_zero() {
                continue;
            }
            sum += &(w * &hl_principal(&lam, &p.z, &p.t)?);
        }
        lhs.push(sum * &c_pow);
        c_pow *= &p.c;
    }
    let lhs = TruncatedSeries::new(lhs, order);

    let c2 = p.c.clone() * &p.c;
    let z_inv2 = p.z.pow(-2)?;
    let mut rhs = euler_expand(&GeometricFactorSpec::new(1, 1, p.a.clone() * &p.c, p.z.clone(), 1), order)?;
    if let Some(b) = &p.b {
        rhs = rhs.mul(&euler_expand(&GeometricFactorSpec::new(1, 1, b.clone() * &p.c, p.z.clone(), 1), order)?);
    }
    let z2 = p.z.clone() * &p.z;
    rhs = rhs.mul(&euler_expand(&GeometricFactorSpec::new(-1, 2, c2.clone(), z2, -1), order)?);
    // x_i x_j = c² z^{i+j-2} u², so the pair coefficient is c² z^{-2}.
    let v = c2 * &z_inv2;
    rhs = rhs.mul(&pair_expand(&PairProductSpec::new(-1, v.clone() * &p.t, 2, p.z.clone(), 1), order)?);
    rhs = rhs.mul(&pair_expand(&PairProductSpec::new(-1, v, 2, p.z.clone(), -1), order)?);
    Ok((lhs, rhs))
}
