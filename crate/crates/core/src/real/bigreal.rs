use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;

const LOG2_10: f64 = std::f64::consts::LOG2_10;
/// Decimal guard digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 25;

/// Working precision: `digits` requested decimal digits, carried in a
/// binary fixed-point format with guard bits on top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RealContext {
    digits: u32,
    bits: u32,
}

impl RealContext {
    pub fn new(digits: u32) -> Self {
        let bits = ((digits + GUARD_DIGITS) as f64 * LOG2_10).ceil() as u32 + 8;
        RealContext { digits, bits }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }
}

/// A real number mant / 2^bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigReal {
    mant: BigInt,
    ctx: RealContext,
}

fn round_shr(x: BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x;
    }
    (x + (BigInt::one() << (k - 1))) >> k
}

fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_mod_floor(den);
    if (r << 1u32).abs() >= den.abs() {
        q + 1
    } else {
        q
    }
}

impl BigReal {
    pub fn zero(ctx: RealContext) -> Self {
        BigReal { mant: BigInt::zero(), ctx }
    }

    pub fn one(ctx: RealContext) -> Self {
        Self::from_int(1, ctx)
    }

    pub fn from_int(n: i64, ctx: RealContext) -> Self {
        Self::from_bigint(&BigInt::from(n), ctx)
    }

    pub fn from_bigint(n: &BigInt, ctx: RealContext) -> Self {
        BigReal { mant: n << ctx.bits, ctx }
    }

    pub fn from_rational(q: &Rational, ctx: RealContext) -> Self {
        BigReal { mant: round_div(&(q.numer() << ctx.bits), q.denom()), ctx }
    }

    pub fn ctx(&self) -> RealContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i8 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        BigReal { mant: self.mant.abs(), ctx: self.ctx }
    }

    fn with(&self, mant: BigInt) -> Self {
        BigReal { mant, ctx: self.ctx }
    }

    /// The same value carried at another precision.
    pub fn to_ctx(&self, ctx: RealContext) -> Self {
        let mant = if ctx.bits >= self.ctx.bits {
            &self.mant << (ctx.bits - self.ctx.bits)
        } else {
            round_shr(self.mant.clone(), self.ctx.bits - ctx.bits)
        };
        BigReal { mant, ctx }
    }

    pub fn mul_bigint(&self, n: &BigInt) -> Self {
        BigReal { mant: &self.mant * n, ctx: self.ctx }
    }

    pub fn mul_int(&self, n: i64) -> Self {
        self.with(&self.mant * n)
    }

    pub fn div_int(&self, n: i64) -> Self {
        self.with(round_div(&self.mant, &BigInt::from(n)))
    }

    /// Multiplication by 2^k.
    pub fn ldexp(&self, k: i64) -> Self {
        if k >= 0 {
            self.with(&self.mant << k as u64)
        } else {
            self.with(round_shr(self.mant.clone(), (-k) as u32))
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Self {
        &BigReal::one(self.ctx) / self
    }

    pub fn sqrt(&self) -> Self {
        assert!(self.signum() >= 0, "square root of a negative number");
        self.with((&self.mant << self.ctx.bits).sqrt())
    }

    /// Nearest integer.
    pub fn round(&self) -> BigInt {
        round_shr(self.mant.clone(), self.ctx.bits)
    }

    pub fn floor(&self) -> BigInt {
        &self.mant >> self.ctx.bits
    }

    /// Is |x| < 10^{-k}?
    pub fn abs_below_pow10(&self, k: u32) -> bool {
        self.mant.abs() * BigInt::from(10).pow(k) < BigInt::one() << self.ctx.bits
    }

    /// log10 |x|, for reporting; -inf at zero.
    pub fn log10_abs(&self) -> f64 {
        if self.mant.is_zero() {
            return f64::NEG_INFINITY;
        }
        let nbits = self.mant.bits() as i64;
        let keep = 60.min(nbits);
        let top = (self.mant.abs() >> (nbits - keep) as u64).to_f64().unwrap_or(1.0);
        (top.log2() + (nbits - keep) as f64 - self.ctx.bits as f64) / LOG2_10
    }

    pub fn to_f64(&self) -> f64 {
        if self.mant.is_zero() {
            return 0.0;
        }
        let sign = if self.signum() < 0 { -1.0 } else { 1.0 };
        sign * 10f64.powf(self.log10_abs())
    }

    /// Fixed-point decimal rendering with `places` digits after the point.
    pub fn to_decimal(&self, places: u32) -> String {
        let scaled = round_shr(&self.mant * BigInt::from(10).pow(places), self.ctx.bits);
        let neg = scaled.is_negative();
        let digits = scaled.abs().to_string();
        let places = places as usize;
        let padded = if digits.len() <= places {
            format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
        } else {
            digits
        };
        let (int, frac) = padded.split_at(padded.len() - places);
        let sign = if neg { "-" } else { "" };
        if places == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }

    pub fn exp(&self) -> Self {
        let ctx = self.ctx;
        let consts = constants(ctx);
        let k = (self / &consts.ln2).round();
        let r = self - &(&consts.ln2 * &BigReal::from_bigint(&k, ctx));
        let halvings = 16;
        let r = r.ldexp(-halvings);
        // Taylor series for exp(r) with |r| < 2^-16
        let mut sum = BigReal::one(ctx);
        let mut term = BigReal::one(ctx);
        let mut n = 1;
        loop {
            term = (&term * &r).div_int(n);
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        for _ in 0..halvings {
            sum = sum.square();
        }
        sum.ldexp(k.to_i64().expect("exponent fits in i64"))
    }

    pub fn ln(&self) -> Self {
        ln_with(self, &constants(self.ctx).ln2)
    }

    /// x^y for x > 0.
    pub fn powr(&self, y: &BigReal) -> Self {
        (&self.ln() * y).exp()
    }

    pub fn sin_cos(&self) -> (Self, Self) {
        let ctx = self.ctx;
        let two_pi = constants(ctx).pi.mul_int(2);
        let k = (self / &two_pi).round();
        let r = self - &(&two_pi * &BigReal::from_bigint(&k, ctx));
        let halvings = 12;
        let r = r.ldexp(-halvings);
        let r2 = r.square();
        let mut s = r.clone();
        let mut c = BigReal::one(ctx);
        let mut ts = r.clone();
        let mut tc = BigReal::one(ctx);
        let mut n = 1;
        loop {
            tc = -(&(&tc * &r2).div_int((2 * n - 1) * (2 * n)));
            ts = -(&(&ts * &r2).div_int((2 * n) * (2 * n + 1)));
            if tc.is_zero() && ts.is_zero() {
                break;
            }
            c = &c + &tc;
            s = &s + &ts;
            n += 1;
        }
        for _ in 0..halvings {
            let s2 = (&s * &c).mul_int(2);
            let c2 = &c.square().mul_int(2) - &BigReal::one(ctx);
            s = s2;
            c = c2;
        }
        (s, c)
    }

    pub fn pi(ctx: RealContext) -> Self {
        constants(ctx).pi.clone()
    }

    pub fn ln2(ctx: RealContext) -> Self {
        constants(ctx).ln2.clone()
    }

    /// ln(2π).
    pub fn ln_two_pi(ctx: RealContext) -> Self {
        constants(ctx).ln_two_pi.clone()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.ctx, other.ctx, "mixed-precision real arithmetic");
    }
}

fn ln_with(x: &BigReal, ln2: &BigReal) -> BigReal {
    assert!(x.signum() > 0, "logarithm of a nonpositive number");
    let ctx = x.ctx;
    // x = 2^k y with y ∈ [1, 2)
    let k = x.mant.bits() as i64 - 1 - ctx.bits as i64;
    let y = x.ldexp(-k);
    let one = BigReal::one(ctx);
    let z = &(&y - &one) / &(&y + &one);
    &atanh_series(&z).mul_int(2) + &ln2.mul_int(k)
}

/// Σ z^{2i+1}/(2i+1).
fn atanh_series(z: &BigReal) -> BigReal {
    let z2 = z.square();
    let mut power = z.clone();
    let mut sum = z.clone();
    let mut n = 1;
    loop {
        power = &power * &z2;
        let term = power.div_int(2 * n + 1);
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
        n += 1;
    }
    sum
}

/// atan(1/n) in fixed point with `bits` fractional bits.
fn atan_inv(n: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let n2 = BigInt::from(n * n);
    let mut power = one / BigInt::from(n);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        k += 1;
    }
    sum
}

struct Constants {
    pi: BigReal,
    ln2: BigReal,
    ln_two_pi: BigReal,
}

fn constants(ctx: RealContext) -> Arc<Constants> {
    static CACHE: OnceLock<RwLock<HashMap<RealContext, Arc<Constants>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.read().expect("constant cache poisoned").get(&ctx) {
        return c.clone();
    }
    let extra = 16;
    let wide = ctx.bits + extra;
    // Machin: π = 16 atan(1/5) - 4 atan(1/239)
    let pi_wide = atan_inv(5, wide) * 16 - atan_inv(239, wide) * 4;
    let pi = BigReal { mant: round_shr(pi_wide, extra), ctx };
    let third = BigReal::from_rational(&Rational::new(1.into(), 3.into()), ctx);
    let ln2 = atanh_series(&third).mul_int(2);
    let ln_two_pi = ln_with(&pi.mul_int(2), &ln2);
    let built = Arc::new(Constants { pi, ln2, ln_two_pi });
    cache
        .write()
        .expect("constant cache poisoned")
        .entry(ctx)
        .or_insert(built)
        .clone()
}

impl<'a> Add<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn add(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        self.with(&self.mant + &rhs.mant)
    }
}

impl<'a> Sub<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn sub(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        self.with(&self.mant - &rhs.mant)
    }
}

impl<'a> Mul<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn mul(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        self.with(round_shr(&self.mant * &rhs.mant, self.ctx.bits))
    }
}

impl<'a> Div<&'a BigReal> for &'a BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        self.check(rhs);
        assert!(!rhs.is_zero(), "division by zero");
        self.with(round_div(&(&self.mant << self.ctx.bits), &rhs.mant))
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        self.with(-&self.mant)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

macro_rules! forward_owned {
    ($t:ty; $($tr:ident $f:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $f(self, rhs: $t) -> $t {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(BigReal; Add add, Sub sub, Mul mul, Div div);

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.ctx == other.ctx).then(|| self.mant.cmp(&other.mant))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(self.ctx.digits))
    }
}

/// A complex number as a pair of reals at the same precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal::zero(re.ctx());
        BigComplex { re, im }
    }

    /// exp(iθ).
    pub fn cis(theta: &BigReal) -> Self {
        let (s, c) = theta.sin_cos();
        BigComplex { re: c, im: s }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -&self.im }
    }

    pub fn abs(&self) -> BigReal {
        (&self.re.square() + &self.im.square()).sqrt()
    }

    pub fn scale(&self, x: &BigReal) -> Self {
        BigComplex { re: &self.re * x, im: &self.im * x }
    }
}

impl<'a> Add<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        BigComplex {
            re: &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        }
    }
}

forward_owned!(BigComplex; Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const E_50: &str = "2.71828182845904523536028747135266249775724709369995";
    const LN2_50: &str = "0.69314718055994530941723212145817656807550013436025";

    fn ctx() -> RealContext {
        RealContext::new(60)
    }

    #[test]
    fn constants_against_known_digits() {
        // Reference strings are truncated, so compare against a longer rendering.
        let first = |x: BigReal| x.to_decimal(58)[..52].to_string();
        assert_eq!(first(BigReal::pi(ctx())), PI_50);
        assert_eq!(first(BigReal::one(ctx()).exp()), E_50);
        assert_eq!(first(BigReal::ln2(ctx())), LN2_50);
    }

    #[test]
    fn exp_ln_roundtrip() {
        let c = ctx();
        for q in [rat(1, 7), rat(22, 3), rat(-15, 2), rat(1000, 1)] {
            let x = BigReal::from_rational(&q, c);
            let back = x.exp().ln();
            assert!((&back - &x).abs_below_pow10(70), "{q}");
        }
    }

    #[test]
    fn trig_identities() {
        let c = ctx();
        let pi = BigReal::pi(c);
        let (s, co) = pi.div_int(6).sin_cos();
        assert!((&s - &BigReal::from_rational(&rat(1, 2), c)).abs_below_pow10(70));
        let three_quarters = BigReal::from_rational(&rat(3, 4), c);
        assert!((&co.square() - &three_quarters).abs_below_pow10(70));
        let (s, co) = BigReal::from_int(100, c).sin_cos();
        assert!((&(&s.square() + &co.square()) - &BigReal::one(c)).abs_below_pow10(70));
    }

    #[test]
    fn sqrt_and_rendering() {
        let c = ctx();
        let r2 = BigReal::from_int(2, c).sqrt();
        assert_eq!(r2.to_decimal(20), "1.41421356237309504880");
        assert_eq!(BigReal::from_rational(&rat(-1, 8), c).to_decimal(3), "-0.125");
        assert_eq!(BigReal::from_rational(&rat(1, 6), c).to_decimal(4), "0.1667");
        assert!((BigReal::from_rational(&rat(1, 1000), c).log10_abs() + 3.0).abs() < 1e-9);
    }
}
