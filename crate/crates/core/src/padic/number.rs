use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{check_odd_prime, mod_inverse, pow_p, split_p, Rational};
use crate::error::{Error, Result};

/// Absolute precision recorded for an exactly known zero.
const EXACT: i64 = i64::MAX / 4;

/// An element of Q_p written `unit · p^valuation + O(p^{valuation + precision})`.
///
/// `precision` counts the known p-adic digits of `unit` (relative
/// precision). Zero carries no unit; its `valuation` slot holds the absolute
/// precision to which it is known, or a sentinel for an exact zero.
#[derive(Clone, Debug)]
pub struct PadicNumber {
    prime: u64,
    valuation: i64,
    unit: BigInt,
    precision: u32,
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        a + b
    }
}

impl PadicNumber {
    pub fn exact_zero(prime: u64) -> Self {
        PadicNumber {
            prime,
            valuation: EXACT,
            unit: BigInt::zero(),
            precision: 0,
        }
    }

    /// Zero known modulo `p^abs`.
    pub fn zero_to(prime: u64, abs: i64) -> Self {
        PadicNumber {
            prime,
            valuation: abs.min(EXACT),
            unit: BigInt::zero(),
            precision: 0,
        }
    }

    pub fn one(prime: u64, precision: u32) -> Self {
        Self::from_parts(prime, 0, BigInt::one(), precision)
    }

    /// Builds `unit · p^valuation` to `precision` relative digits, moving any
    /// factors of p out of `unit`.
    pub fn from_parts(prime: u64, valuation: i64, unit: BigInt, precision: u32) -> Self {
        let modulus = pow_p(prime, precision);
        let u = unit.mod_floor(&modulus);
        if u.is_zero() {
            return Self::zero_to(prime, valuation + precision as i64);
        }
        let (k, rest) = split_p(&u, prime);
        let precision = precision - k;
        PadicNumber {
            prime,
            valuation: valuation + k as i64,
            unit: rest.mod_floor(&pow_p(prime, precision)),
            precision,
        }
    }

    /// q as an element of Q_p with `precision` relative digits.
    pub fn from_rational(q: &Rational, prime: u64, precision: u32) -> Result<Self> {
        check_odd_prime(prime)?;
        if precision == 0 {
            return Err(Error::Precision("zero relative precision".into()));
        }
        if q.is_zero() {
            return Ok(Self::exact_zero(prime));
        }
        let (vn, n) = split_p(q.numer(), prime);
        let (vd, d) = split_p(q.denom(), prime);
        let modulus = pow_p(prime, precision);
        let dinv = mod_inverse(&d, &modulus).expect("cofactor is prime to p");
        Ok(PadicNumber {
            prime,
            valuation: vn as i64 - vd as i64,
            unit: (n * dinv).mod_floor(&modulus),
            precision,
        })
    }

    pub fn from_integer(n: &BigInt, prime: u64, precision: u32) -> Result<Self> {
        Self::from_rational(&Rational::from_integer(n.clone()), prime, precision)
    }

    pub fn from_i64(n: i64, prime: u64, precision: u32) -> Result<Self> {
        Self::from_integer(&BigInt::from(n), prime, precision)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.is_zero() && self.valuation >= EXACT
    }

    /// Valuation of a nonzero value; `None` for zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    /// Largest k such that the value is known to be divisible by p^k.
    pub fn known_valuation(&self) -> i64 {
        self.valuation
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// Exponent of the error term O(p^k); `i64::MAX / 4` for an exact zero.
    pub fn abs_precision(&self) -> i64 {
        if self.is_zero() {
            self.valuation
        } else {
            self.valuation + self.precision as i64
        }
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// Forgets every digit at or beyond p^abs.
    pub fn truncate_abs(&self, abs: i64) -> Self {
        if abs >= self.abs_precision() {
            return self.clone();
        }
        if self.is_zero() || abs <= self.valuation {
            return Self::zero_to(self.prime, abs);
        }
        let rel = (abs - self.valuation) as u32;
        PadicNumber {
            prime: self.prime,
            valuation: self.valuation,
            unit: self.unit.mod_floor(&pow_p(self.prime, rel)),
            precision: rel,
        }
    }

    /// Integer representative of a value in Z_p, reduced mod p^{abs}.
    pub fn to_integer(&self) -> Result<BigInt> {
        if self.is_zero() {
            return Ok(BigInt::zero());
        }
        if self.valuation < 0 {
            return Err(Error::domain("value is not in Z_p"));
        }
        Ok(&self.unit * pow_p(self.prime, self.valuation as u32))
    }

    /// The rational number `unit · p^valuation` (one representative).
    pub fn to_rational(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let u = Rational::from_integer(self.unit.clone());
        let pv = Rational::from_integer(pow_p(self.prime, self.valuation.unsigned_abs() as u32));
        if self.valuation >= 0 {
            u * pv
        } else {
            u / pv
        }
    }

    /// Is the value ≡ 0 mod p^k, as far as the known digits tell?
    pub fn is_zero_mod(&self, k: i64) -> bool {
        self.valuation >= k
    }

    /// Congruence to `p^k` of two values that are both known that far.
    pub fn eq_mod(&self, other: &Self, k: i64) -> bool {
        (self - other).is_zero_mod(k)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Zero("inverse"));
        }
        let modulus = pow_p(self.prime, self.precision);
        Ok(PadicNumber {
            prime: self.prime,
            valuation: -self.valuation,
            unit: mod_inverse(&self.unit, &modulus).expect("unit"),
            precision: self.precision,
        })
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        if n == 0 {
            return Ok(Self::one(self.prime, self.precision.max(1)));
        }
        if self.is_zero() {
            return Ok(Self::zero_to(self.prime, sat_add(self.valuation.saturating_mul(n), 0)));
        }
        let modulus = pow_p(self.prime, self.precision);
        Ok(PadicNumber {
            prime: self.prime,
            valuation: self.valuation * n,
            unit: self.unit.modpow(&BigInt::from(n), &modulus),
            precision: self.precision,
        })
    }

    /// Multiplication by p^k.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.valuation = sat_add(out.valuation, k);
        out
    }

    fn check_prime(&self, other: &Self) {
        assert_eq!(
            self.prime, other.prime,
            "{}",
            Error::PrimeMismatch(self.prime, other.prime)
        );
    }

    /// Balanced digits representative of the unit, in (-p^N/2, p^N/2].
    pub fn balanced_unit(&self) -> BigInt {
        let modulus = pow_p(self.prime, self.precision);
        let half = &modulus >> 1u32;
        if self.unit > half {
            &self.unit - modulus
        } else {
            self.unit.clone()
        }
    }

    /// Canonical rendering `u * p^v + O(p^{v+N})`; the `* p^0` factor is
    /// dropped for units.
    pub fn render(&self) -> String {
        let p = self.prime;
        if self.is_exact_zero() {
            return "0".to_string();
        }
        if self.is_zero() {
            return format!("O({p}^{})", self.valuation);
        }
        let u = self.balanced_unit();
        let err = self.abs_precision();
        if self.valuation == 0 {
            format!("{u} + O({p}^{err})")
        } else {
            format!("{u} * {p}^{} + O({p}^{err})", self.valuation)
        }
    }
}

impl fmt::Display for PadicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl PartialEq for PadicNumber {
    /// Equality of the known digits at the common precision.
    fn eq(&self, other: &Self) -> bool {
        if self.prime != other.prime {
            return false;
        }
        let d = self - other;
        d.is_zero()
    }
}

impl<'a> Add<&'a PadicNumber> for &'a PadicNumber {
    type Output = PadicNumber;

    fn add(self, other: &'a PadicNumber) -> PadicNumber {
        self.check_prime(other);
        let p = self.prime;
        let abs = self.abs_precision().min(other.abs_precision());
        if self.is_zero() {
            return other.truncate_abs(abs);
        }
        if other.is_zero() {
            return self.truncate_abs(abs);
        }
        let vm = self.valuation.min(other.valuation);
        if abs <= vm {
            return PadicNumber::zero_to(p, abs);
        }
        let rel = (abs - vm) as u32;
        let lift = |x: &PadicNumber| &x.unit * pow_p(p, (x.valuation - vm) as u32);
        let sum = lift(self) + lift(other);
        PadicNumber::from_parts(p, vm, sum, rel)
    }
}

impl<'a> Sub<&'a PadicNumber> for &'a PadicNumber {
    type Output = PadicNumber;

    fn sub(self, other: &'a PadicNumber) -> PadicNumber {
        self + &(-other)
    }
}

impl Neg for &PadicNumber {
    type Output = PadicNumber;

    fn neg(self) -> PadicNumber {
        if self.is_zero() {
            return self.clone();
        }
        let modulus = pow_p(self.prime, self.precision);
        PadicNumber {
            unit: (&modulus - &self.unit).mod_floor(&modulus),
            ..self.clone()
        }
    }
}

impl<'a> Mul<&'a PadicNumber> for &'a PadicNumber {
    type Output = PadicNumber;

    fn mul(self, other: &'a PadicNumber) -> PadicNumber {
        self.check_prime(other);
        let p = self.prime;
        match (self.is_zero(), other.is_zero()) {
            (true, true) => PadicNumber::zero_to(p, sat_add(self.valuation, other.valuation)),
            (true, false) => PadicNumber::zero_to(p, sat_add(self.valuation, other.valuation)),
            (false, true) => PadicNumber::zero_to(p, sat_add(self.valuation, other.valuation)),
            (false, false) => {
                let precision = self.precision.min(other.precision);
                let modulus = pow_p(p, precision);
                PadicNumber {
                    prime: p,
                    valuation: self.valuation + other.valuation,
                    unit: (&self.unit * &other.unit).mod_floor(&modulus),
                    precision,
                }
            }
        }
    }
}

impl<'a> Div<&'a PadicNumber> for &'a PadicNumber {
    type Output = PadicNumber;

    /// Panics on division by zero; use [`PadicNumber::inverse`] to handle it.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, other: &'a PadicNumber) -> PadicNumber {
        self * &other.inverse().expect("division by p-adic zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $m(self, other: PadicNumber) -> PadicNumber {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a PadicNumber> for PadicNumber {
            type Output = PadicNumber;
            fn $m(self, other: &'a PadicNumber) -> PadicNumber {
                (&self).$m(other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for PadicNumber {
    type Output = PadicNumber;
    fn neg(self) -> PadicNumber {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn from_rational_examples() {
        let x = PadicNumber::from_rational(&rat(1, 3), 5, 4).unwrap();
        assert_eq!(x.valuation(), Some(0));
        assert_eq!(x.unit(), &BigInt::from(417));
        let z = PadicNumber::from_rational(&int(0), 5, 4).unwrap();
        assert!(z.is_exact_zero());
        let t = PadicNumber::from_rational(&int(10), 5, 4).unwrap();
        assert_eq!(t.valuation(), Some(1));
        assert_eq!(t.unit(), &BigInt::from(2));
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(
            PadicNumber::from_rational(&int(1), 2, 4).unwrap_err(),
            Error::BadPrime(2)
        );
        assert_eq!(
            PadicNumber::from_rational(&int(1), 9, 4).unwrap_err(),
            Error::BadPrime(9)
        );
    }

    #[test]
    fn cancellation_tracks_precision() {
        let a = PadicNumber::from_rational(&int(1), 5, 6).unwrap();
        let b = PadicNumber::from_rational(&int(26), 5, 6).unwrap();
        let d = &b - &a;
        assert_eq!(d.valuation(), Some(2));
        assert_eq!(d.abs_precision(), 6);
        assert_eq!(d.precision(), 4);
        let zero = &a - &a;
        assert!(zero.is_zero());
        assert_eq!(zero.abs_precision(), 6);
    }

    #[test]
    fn division_and_inverse() {
        let a = PadicNumber::from_rational(&rat(2, 25), 5, 8).unwrap();
        let b = PadicNumber::from_rational(&rat(7, 3), 5, 8).unwrap();
        let q = &a / &b;
        let expect = PadicNumber::from_rational(&rat(6, 175), 5, 8).unwrap();
        assert_eq!(q, expect);
        assert_eq!(q.valuation(), Some(-2));
    }

    #[test]
    fn rendering() {
        let x = PadicNumber::from_rational(&int(-2), 5, 12).unwrap();
        assert_eq!(x.render(), "-2 + O(5^12)");
        let y = PadicNumber::from_rational(&rat(3, 25), 5, 4).unwrap();
        assert_eq!(y.render(), "3 * 5^-2 + O(5^2)");
        assert_eq!(PadicNumber::exact_zero(5).render(), "0");
    }

    #[test]
    fn truncation() {
        let x = PadicNumber::from_rational(&rat(1, 3), 7, 10).unwrap();
        let t = x.truncate_abs(4);
        assert_eq!(t.abs_precision(), 4);
        assert!(x.eq_mod(&t, 4));
    }
}
