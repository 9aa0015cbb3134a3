//! Γ and B at rational arguments via argument shift and the Stirling series.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, ToPrimitive};

use super::{BigReal, RealContext};
use crate::arith::Rational;
use crate::bernoulli::bernoulli_numbers;
use crate::error::{Error, Result};

/// Shift target for Stirling: beyond it the smallest series term is below
/// 10^{-(D+20)}, since that term is about e^{-2πz}.
pub fn stirling_threshold(ctx: RealContext) -> i64 {
    let d = (ctx.digits() + 20) as f64;
    (d * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI)).ceil() as i64 + 5
}

/// ln Γ(z) for a real z at or beyond the Stirling threshold. The series
/// alternates in sign past its first term and its tail is bounded by the
/// first omitted term, so summation stops once a term drops below one ulp.
fn stirling(z: &Rational, ctx: RealContext) -> BigReal {
    let zr = BigReal::from_rational(z, ctx);
    let half = BigReal::from_rational(&Rational::new(1.into(), 2.into()), ctx);
    let mut acc = &(&(&zr - &half) * &zr.ln()) - &zr;
    acc = &acc + &BigReal::ln_two_pi(ctx).div_int(2);
    let inv = zr.recip();
    let inv2 = inv.square();
    let mut power = inv;
    let limit = 4 * stirling_threshold(ctx) as usize + 8;
    let mut b = bernoulli_numbers(64);
    for k in 1..=limit {
        if 2 * k >= b.len() {
            b = bernoulli_numbers(4 * k);
        }
        let coef = &b[2 * k] / Rational::from_integer(((2 * k) * (2 * k - 1)).into());
        let term = &BigReal::from_rational(&coef, ctx) * &power;
        if term.is_zero() {
            return acc;
        }
        acc = &acc + &term;
        power = &power * &inv2;
    }
    panic!("Stirling series failed to converge at z = {z}");
}

type Key = (Rational, RealContext);

fn cache() -> &'static RwLock<HashMap<Key, (BigReal, i8)>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, (BigReal, i8)>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// (ln |Γ(q)|, sign Γ(q)) for any rational q that is not a pole.
pub fn ln_gamma_abs(q: &Rational, ctx: RealContext) -> Result<(BigReal, i8)> {
    if q.is_integer() && !q.is_positive() {
        return Err(Error::domain(format!("Γ has a pole at {q}")));
    }
    let key = (q.clone(), ctx);
    if let Some(v) = cache().read().expect("gamma cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    if q.is_negative() {
        // Γ(q)Γ(1-q) = π / sin(πq), and Γ(1-q) > 0.
        let (l, _) = ln_gamma_abs(&(Rational::one() - q), ctx)?;
        let reduced = q - Rational::from_integer((q.floor().to_integer() >> 1u32) << 1u32);
        let (sin, _) = (&BigReal::pi(ctx) * &BigReal::from_rational(&reduced, ctx)).sin_cos();
        let sign = sin.signum();
        let value = (&(&BigReal::pi(ctx).ln() - &sin.abs().ln()) - &l, sign);
        cache()
            .write()
            .expect("gamma cache poisoned")
            .insert(key, value.clone());
        return Ok(value);
    }
    let threshold = stirling_threshold(ctx);
    let shift = (threshold - q.floor().to_integer().to_i64().unwrap_or(i64::MAX)).max(0);
    // Γ(q) = Γ(q + n) / Π_{k<n} (q + k)
    let mut prod = Rational::one();
    for k in 0..shift {
        prod *= q + Rational::from_integer(k.into());
    }
    let z = q + Rational::from_integer(shift.into());
    let sign = if prod.is_negative() { -1 } else { 1 };
    let ln = &stirling(&z, ctx) - &BigReal::from_rational(&prod.abs(), ctx).ln();
    let value = (ln, sign);
    cache()
        .write()
        .expect("gamma cache poisoned")
        .insert(key, value.clone());
    Ok(value)
}

/// ln Γ(q) for q > 0.
pub fn ln_gamma(q: &Rational, ctx: RealContext) -> Result<BigReal> {
    if !q.is_positive() {
        return Err(Error::domain(format!("ln Γ needs a positive argument, got {q}")));
    }
    Ok(ln_gamma_abs(q, ctx)?.0)
}

/// Γ(q) for q > 0.
pub fn gamma_real(q: &Rational, ctx: RealContext) -> Result<BigReal> {
    Ok(ln_gamma(q, ctx)?.exp())
}

/// (ln |B(α,β)|, sign) for any α, β with Γ(α), Γ(β) finite.
pub fn ln_beta_abs(alpha: &Rational, beta: &Rational, ctx: RealContext) -> Result<(BigReal, i8)> {
    let (la, sa) = ln_gamma_abs(alpha, ctx)?;
    let (lb, sb) = ln_gamma_abs(beta, ctx)?;
    let sum = alpha + beta;
    if sum.is_integer() && !sum.is_positive() {
        // 1/Γ vanishes at the poles
        return Ok((BigReal::zero(ctx), 0));
    }
    let (lc, sc) = ln_gamma_abs(&sum, ctx)?;
    Ok((&(&la + &lb) - &lc, sa * sb * sc))
}

/// B(α, β) = Γ(α)Γ(β)/Γ(α+β) for α, β > 0.
pub fn beta_real(alpha: &Rational, beta: &Rational, ctx: RealContext) -> Result<BigReal> {
    if !alpha.is_positive() || !beta.is_positive() {
        return Err(Error::domain("the beta function needs positive arguments"));
    }
    Ok(ln_beta_abs(alpha, beta, ctx)?.0.exp())
}
