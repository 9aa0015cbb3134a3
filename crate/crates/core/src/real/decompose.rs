//! Γ(α)Γ(1-α) as a signed product of beta values and rationals, obtained
//! by telescoping (1-2x)B(x,x)B(1-x,1-x) = γ(x)²/γ(2x) with γ(x) = Γ(x)Γ(1-x).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gamma::{ln_beta_abs, ln_gamma_abs};
use super::{BigReal, RealContext};
use crate::arith::{frac, gcd, multiplicative_order, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Beta(Rational, Rational),
    Rational(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    pub exponent: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// m_0 > 1, with f the order of 2 mod m_0.
    General,
    /// m = 2^t.
    PowerOfTwo,
}

/// (Γ(a/m)Γ((m-a)/m))^E = ± Π factors, with the sign left open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaProductExpr {
    pub a: u64,
    pub m: u64,
    pub t: u32,
    pub m0: u64,
    pub f: Option<u32>,
    pub branch: Branch,
    pub lhs_exponent: BigInt,
    pub factors: Vec<Factor>,
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

/// Pushes ((1-2x) B(x,x) B(1-x,1-x))^e.
fn push_block(factors: &mut Vec<Factor>, x: Rational, exponent: BigInt) {
    let y = Rational::one() - &x;
    let pre = Rational::one() - &x * Rational::from_integer(2.into());
    factors.push(Factor { kind: FactorKind::Rational(pre), exponent: exponent.clone() });
    factors.push(Factor { kind: FactorKind::Beta(x.clone(), x), exponent: exponent.clone() });
    factors.push(Factor { kind: FactorKind::Beta(y.clone(), y), exponent });
}

pub fn decompose_gamma_product(a: u64, m: u64) -> Result<BetaProductExpr> {
    if a == 0 || a >= m || gcd(a, m) != 1 {
        return Err(Error::domain(format!("need 0 < a < m with gcd(a, m) = 1; got a = {a}, m = {m}")));
    }
    let t = m.trailing_zeros();
    let m0 = m >> t;
    let mut factors = Vec::new();
    if m0 == 1 {
        // α_k = ⟨a/2^k⟩; the k = 1 block degenerates to B(1/2,1/2) = γ(1/2).
        factors.push(Factor {
            kind: FactorKind::Beta(r(1, 2), r(1, 2)),
            exponent: BigInt::one(),
        });
        for k in 2..=t {
            let alpha = frac(&r(a as i64, 1 << k));
            push_block(&mut factors, alpha, pow2(k - 2));
        }
        return Ok(BetaProductExpr {
            a,
            m,
            t,
            m0,
            f: None,
            branch: Branch::PowerOfTwo,
            lhs_exponent: pow2(t - 1),
            factors,
        });
    }
    let f = multiplicative_order(2, m0).expect("m_0 is odd") as u32;
    let span = pow2(f) - 1;
    for k in 1..=t {
        let x = Rational::new(a.into(), (BigInt::from(m0) << k) as BigInt);
        push_block(&mut factors, x, pow2(k - 1) * &span);
    }
    for l in 0..f {
        let x = Rational::new(pow2(l) * a, m0.into());
        push_block(&mut factors, x, pow2(f - 1 - l));
    }
    Ok(BetaProductExpr {
        a,
        m,
        t,
        m0,
        f: Some(f),
        branch: Branch::General,
        lhs_exponent: pow2(t) * span,
        factors,
    })
}

impl fmt::Display for BetaProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(Γ({}/{})Γ({}/{}))^{} = ±", self.a, self.m, self.m - self.a, self.m, self.lhs_exponent)?;
        for (n, factor) in self.factors.iter().enumerate() {
            if n > 0 {
                f.write_str(" ·")?;
            }
            match &factor.kind {
                FactorKind::Beta(x, y) => write!(f, " B({x},{y})")?,
                FactorKind::Rational(q) => write!(f, " ({q})")?,
            }
            if !factor.exponent.is_one() {
                write!(f, "^{}", factor.exponent)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct BetaProductCheck {
    /// ±1 with LHS = sign · RHS.
    pub sign: i8,
    /// |LHS - sign·RHS| / |RHS|.
    pub residual: BigReal,
}

/// Working precision for a product with the given exponents: logs get
/// multiplied by numbers of this size, so extra digits are carried.
fn widened(expr: &BetaProductExpr, ctx: RealContext) -> RealContext {
    let extra = expr.lhs_exponent.to_string().len() as u32 + 5;
    RealContext::new(ctx.digits() + extra)
}

/// (ln |RHS|, sign RHS) at the given precision.
pub fn ln_abs_rhs(expr: &BetaProductExpr, ctx: RealContext) -> Result<(BigReal, i8)> {
    let mut log = BigReal::zero(ctx);
    let mut sign = 1i8;
    for factor in &expr.factors {
        let (l, s) = match &factor.kind {
            FactorKind::Beta(x, y) => ln_beta_abs(x, y, ctx)?,
            FactorKind::Rational(q) => {
                if q.is_zero() {
                    return Err(Error::domain("zero rational prefactor"));
                }
                let s = if q.is_negative() { -1 } else { 1 };
                (BigReal::from_rational(&q.abs(), ctx).ln(), s)
            }
        };
        if s == 0 {
            return Err(Error::domain("a beta factor vanishes"));
        }
        log = &log + &l.mul_bigint(&factor.exponent);
        if s < 0 && factor.exponent.is_odd() {
            sign = -sign;
        }
    }
    Ok((log, sign))
}

/// ln(Γ(a/m)Γ((m-a)/m)) computed directly.
pub fn ln_gamma_reflection_pair(a: u64, m: u64, ctx: RealContext) -> Result<BigReal> {
    let (l1, _) = ln_gamma_abs(&r(a as i64, m as i64), ctx)?;
    let (l2, _) = ln_gamma_abs(&r((m - a) as i64, m as i64), ctx)?;
    Ok(&l1 + &l2)
}

pub fn verify_beta_product(expr: &BetaProductExpr, ctx: RealContext) -> Result<BetaProductCheck> {
    let wide = widened(expr, ctx);
    let lhs = ln_gamma_reflection_pair(expr.a, expr.m, wide)?.mul_bigint(&expr.lhs_exponent);
    let (rhs, sign) = ln_abs_rhs(expr, wide)?;
    let residual = (&(&lhs - &rhs).exp() - &BigReal::one(wide)).abs();
    Ok(BetaProductCheck { sign, residual: residual.to_ctx(ctx) })
}

/// ln(Γ(a/m)Γ((m-a)/m)) recovered from the beta side alone, as ln|RHS| / E.
pub fn ln_gamma_pair_from_betas(expr: &BetaProductExpr, ctx: RealContext) -> Result<BigReal> {
    let wide = widened(expr, ctx);
    let (rhs, _) = ln_abs_rhs(expr, wide)?;
    Ok((&rhs / &BigReal::from_bigint(&expr.lhs_exponent, wide)).to_ctx(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ctx() -> RealContext {
        RealContext::new(40)
    }

    #[test]
    fn one_third_shape() {
        let e = decompose_gamma_product(1, 3).unwrap();
        assert_eq!((e.t, e.m0, e.f), (0, 3, Some(2)));
        assert_eq!(e.lhs_exponent, BigInt::from(3));
        assert_eq!(e.factors.len(), 6);
        assert_eq!(e.factors[0].kind, FactorKind::Rational(rat(1, 3)));
        assert_eq!(e.factors[0].exponent, BigInt::from(2));
        assert_eq!(e.factors[1].kind, FactorKind::Beta(rat(1, 3), rat(1, 3)));
        assert_eq!(e.factors[3].kind, FactorKind::Rational(rat(-1, 3)));
        assert_eq!(e.factors[4].kind, FactorKind::Beta(rat(2, 3), rat(2, 3)));
        assert_eq!(e.factors[5].kind, FactorKind::Beta(rat(1, 3), rat(1, 3)));
        assert_eq!(e.factors[5].exponent, BigInt::one());
    }

    #[test]
    fn power_of_two_shapes() {
        let e = decompose_gamma_product(1, 2).unwrap();
        assert_eq!(e.factors.len(), 1);
        assert_eq!(e.lhs_exponent, BigInt::one());
        let chk = verify_beta_product(&e, ctx()).unwrap();
        assert_eq!(chk.sign, 1);
        assert!(chk.residual.abs_below_pow10(30));

        let e = decompose_gamma_product(1, 4).unwrap();
        assert_eq!(e.factors[1].kind, FactorKind::Rational(rat(1, 2)));
        assert_eq!(e.factors[2].kind, FactorKind::Beta(rat(1, 4), rat(1, 4)));
        assert_eq!(e.factors[3].kind, FactorKind::Beta(rat(3, 4), rat(3, 4)));
        assert!(e.factors.iter().all(|f| f.exponent.is_one()));
    }

    #[test]
    fn grid_holds() {
        let c = ctx();
        for m in 2..=16u64 {
            for a in 1..m {
                if gcd(a, m) != 1 {
                    continue;
                }
                let e = decompose_gamma_product(a, m).unwrap();
                let chk = verify_beta_product(&e, c).unwrap();
                assert!(chk.residual.abs_below_pow10(30), "a={a} m={m}: {}", chk.residual);
            }
        }
    }

    #[test]
    fn recovered_pair_matches_reflection() {
        let c = ctx();
        let e = decompose_gamma_product(2, 7).unwrap();
        let pair = ln_gamma_pair_from_betas(&e, c).unwrap().exp();
        let direct = ln_gamma_reflection_pair(2, 7, c).unwrap().exp();
        assert!((&pair - &direct).abs_below_pow10(30));
    }

    #[test]
    fn rejects_non_coprime() {
        assert!(decompose_gamma_product(2, 4).is_err());
        assert!(decompose_gamma_product(0, 5).is_err());
    }
}
