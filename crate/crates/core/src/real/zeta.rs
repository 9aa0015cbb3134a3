//! Hurwitz zeta by Euler–Maclaurin, its s-derivative at 0, and the real
//! Stark units of Q(ζ_m)^+ computed two independent ways.

use num_traits::Zero;

use super::decompose::{decompose_gamma_product, ln_gamma_pair_from_betas};
use super::gamma::ln_gamma_abs;
use super::{BigReal, RealContext};
use crate::arith::{gcd, Rational};
use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};

/// ζ_H(s, x) = Σ_{n≥0} (x+n)^{-s} for x > 0, s ≠ 1.
fn hurwitz_unit_step(s: &BigReal, x: &Rational) -> BigReal {
    let ctx = s.ctx();
    let one = BigReal::one(ctx);
    let n_direct = ctx.digits() as i64 + 30;
    let mut sum = BigReal::zero(ctx);
    for n in 0..n_direct {
        let base = BigReal::from_rational(&(x + Rational::from_integer(n.into())), ctx);
        sum = &sum + &(-&(s * &base.ln())).exp();
    }
    let y_q = x + Rational::from_integer(n_direct.into());
    let y = BigReal::from_rational(&y_q, ctx);
    let ln_y = y.ln();
    let y_pow_neg_s = (-&(s * &ln_y)).exp();
    // ∫_y^∞ t^{-s} dt + y^{-s}/2
    sum = &sum + &(&(&y_pow_neg_s * &y) / &(s - &one));
    sum = &sum + &y_pow_neg_s.div_int(2);
    // Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k-2) · y^{-s-2k+1}
    let inv_y2 = y.square().recip();
    let mut t = (&(s * &y_pow_neg_s) / &y).div_int(2);
    let limit = 4 * n_direct;
    for k in 1..=limit {
        let term = &BigReal::from_rational(&bernoulli(2 * k as usize), ctx) * &t;
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        let kk = 2 * k;
        let rise = &(s + &BigReal::from_int(kk - 1, ctx)) * &(s + &BigReal::from_int(kk, ctx));
        t = (&(&t * &rise) * &inv_y2).div_int((kk + 1) * (kk + 2));
    }
    sum
}

/// ζ(s, v, z) = Σ_{n≥0} (z + vn)^{-s} = v^{-s} ζ_H(s, z/v).
pub fn hurwitz_zeta(s: &BigReal, v: &Rational, z: &Rational) -> Result<BigReal> {
    let ctx = s.ctx();
    if (s - &BigReal::one(ctx)).is_zero() {
        return Err(Error::domain("ζ(s, v, z) has a pole at s = 1"));
    }
    if v <= &Rational::zero() || z <= &Rational::zero() {
        return Err(Error::domain(format!("need v, z > 0; got v = {v}, z = {z}")));
    }
    let scale = (-&(s * &BigReal::from_rational(v, ctx).ln())).exp();
    Ok(&scale * &hurwitz_unit_step(s, &(z / v)))
}

/// ζ'(0, m, a), once by numerical differentiation and once from Lerch's
/// closed form ln Γ(a/m) - ½ ln 2π - ζ(0,m,a) ln m.
#[derive(Clone, Debug)]
pub struct ZetaDeriv0 {
    pub oracle: BigReal,
    pub closed_form: BigReal,
}

fn check_am(m: u64, a: u64) -> Result<()> {
    if m == 0 || a == 0 || a > m {
        return Err(Error::domain(format!("need 0 < a ≤ m; got a = {a}, m = {m}")));
    }
    Ok(())
}

/// ζ(0, m, a) = 1/2 - a/m.
pub fn hurwitz_zeta_at_zero(m: u64, a: u64) -> Rational {
    Rational::new(1.into(), 2.into()) - Rational::new(a.into(), m.into())
}

/// Richardson extrapolation of central differences with h = 10^{-D/4},
/// h/2 and h/4.
pub fn zeta_deriv0_oracle(m: u64, a: u64, ctx: RealContext) -> Result<BigReal> {
    check_am(m, a)?;
    let v = Rational::from_integer(m.into());
    let z = Rational::from_integer(a.into());
    let h0 = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(ctx.digits() / 4));
    let mut row: Vec<BigReal> = Vec::with_capacity(3);
    for level in 0..3u32 {
        let h = &h0 / Rational::from_integer((1i64 << level).into());
        let hr = BigReal::from_rational(&h, ctx);
        let plus = hurwitz_zeta(&hr, &v, &z)?;
        let minus = hurwitz_zeta(&-&hr, &v, &z)?;
        row.push(&(&plus - &minus) / &hr.mul_int(2));
    }
    // error expansion in h², so eliminate with factors 4 and 16
    let r1: Vec<BigReal> = (0..2)
        .map(|i| (&row[i + 1].mul_int(4) - &row[i]).div_int(3))
        .collect();
    Ok((&r1[1].mul_int(16) - &r1[0]).div_int(15))
}

pub fn zeta_deriv0_closed(m: u64, a: u64, ctx: RealContext) -> Result<BigReal> {
    check_am(m, a)?;
    let (lg, _) = ln_gamma_abs(&Rational::new(a.into(), m.into()), ctx)?;
    let half_ln_2pi = BigReal::ln_two_pi(ctx).div_int(2);
    let z0 = BigReal::from_rational(&hurwitz_zeta_at_zero(m, a), ctx);
    let ln_m = BigReal::from_int(m as i64, ctx).ln();
    Ok(&(&lg - &half_ln_2pi) - &(&z0 * &ln_m))
}

pub fn hurwitz_zeta_deriv0(m: u64, a: u64, ctx: RealContext) -> Result<ZetaDeriv0> {
    Ok(ZetaDeriv0 {
        oracle: zeta_deriv0_oracle(m, a, ctx)?,
        closed_form: zeta_deriv0_closed(m, a, ctx)?,
    })
}

/// u_Q(σ_{±a/m}) from the beta-product route, (2π / Γ(a/m)Γ((m-a)/m))²,
/// and from the zeta route, exp(-2 ζ'(0, σ)) with ζ'(0, σ) taken from the
/// differentiation oracle.
#[derive(Clone, Debug)]
pub struct StarkUnitReal {
    pub a: u64,
    pub m: u64,
    pub beta_route: BigReal,
    pub zeta_route: BigReal,
}

impl StarkUnitReal {
    pub fn value(&self) -> &BigReal {
        &self.beta_route
    }

    /// |beta route - zeta route|.
    pub fn discrepancy(&self) -> BigReal {
        (&self.beta_route - &self.zeta_route).abs()
    }
}

pub(crate) fn check_admissible(a: u64, m: u64) -> Result<()> {
    if m < 3 || a == 0 || 2 * a >= m || gcd(a, m) != 1 {
        return Err(Error::domain(format!(
            "need m ≥ 3, 0 < a < m/2 and gcd(a, m) = 1; got a = {a}, m = {m}"
        )));
    }
    Ok(())
}

/// The beta-product route alone.
pub fn stark_unit_real_beta(a: u64, m: u64, ctx: RealContext) -> Result<BigReal> {
    check_admissible(a, m)?;
    let expr = decompose_gamma_product(a, m)?;
    let ln_pair = ln_gamma_pair_from_betas(&expr, ctx)?;
    Ok((&BigReal::ln_two_pi(ctx) - &ln_pair).mul_int(2).exp())
}

pub fn stark_unit_real(a: u64, m: u64, ctx: RealContext) -> Result<StarkUnitReal> {
    let beta_route = stark_unit_real_beta(a, m, ctx)?;
    let d = &zeta_deriv0_oracle(m, a, ctx)? + &zeta_deriv0_oracle(m, m - a, ctx)?;
    let zeta_route = d.mul_int(-2).exp();
    Ok(StarkUnitReal { a, m, beta_route, zeta_route })
}
