use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi, gcd, mobius, Rational};
use crate::error::{Error, Result};
use crate::real::{BigComplex, BigReal, RealContext};

/// Coefficients (increasing degree) of the m-th cyclotomic polynomial,
/// Φ_m(x) = Π_{d | m} (x^d - 1)^{μ(m/d)}.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in divisors(m) {
        let mut factor = vec![BigInt::zero(); d as usize + 1];
        factor[0] = BigInt::from(-1);
        factor[d as usize] = BigInt::one();
        match mobius(m / d) {
            1 => num = poly_mul(&num, &factor),
            -1 => den = poly_mul(&den, &factor),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a monic (up to sign ±1) polynomial that is known to be exact.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1].clone();
    let mut q = vec![BigInt::zero(); num.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = &rem[k + dl - 1] / &lead;
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// Per-conductor data: Φ_m and the reductions of x^0, …, x^{m-1} mod Φ_m.
#[derive(Debug)]
pub struct CyclotomicTables {
    pub m: u64,
    pub phi: usize,
    pub poly: Vec<BigInt>,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicTables {
    fn build(m: u64) -> Self {
        let poly = cyclotomic_polynomial(m);
        let phi = euler_phi(m) as usize;
        debug_assert_eq!(poly.len(), phi + 1);
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_m
            let top = cur[phi - 1].clone();
            for k in (1..phi).rev() {
                cur[k] = cur[k - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !top.is_zero() {
                for k in 0..phi {
                    cur[k] -= &top * &poly[k];
                }
            }
        }
        CyclotomicTables { m, phi, poly, powers }
    }

    /// Reduction of x^n mod Φ_m.
    pub fn power(&self, n: u64) -> &[BigInt] {
        &self.powers[(n % self.m) as usize]
    }
}

/// Shared read-only tables for conductor m.
pub fn tables(m: u64) -> Arc<CyclotomicTables> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CyclotomicTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("table cache poisoned").get(&m) {
        return t.clone();
    }
    let built = Arc::new(CyclotomicTables::build(m));
    cache
        .write()
        .expect("table cache poisoned")
        .entry(m)
        .or_insert(built)
        .clone()
}

/// An element of Q(ζ_m) in the power basis 1, ζ, …, ζ^{φ(m)-1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    m: u64,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    pub fn zero(m: u64) -> Self {
        let phi = euler_phi(m) as usize;
        CyclotomicNumber { m, coeffs: vec![Rational::zero(); phi] }
    }

    pub fn from_rational(m: u64, q: Rational) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = q;
        out
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, Rational::one())
    }

    /// ζ_m^k for any integer k.
    pub fn zeta_power(m: u64, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as u64;
        let t = tables(m);
        CyclotomicNumber {
            m,
            coeffs: t.power(e).iter().map(|c| Rational::from_integer(c.clone())).collect(),
        }
    }

    pub fn zeta(m: u64) -> Self {
        Self::zeta_power(m, 1)
    }

    /// Σ_k counts[k] ζ^k, exponents taken mod m.
    pub fn from_exponent_counts(m: u64, counts: &[i64]) -> Self {
        let mut wide = vec![Rational::zero(); m as usize];
        for (k, &c) in counts.iter().enumerate() {
            wide[k % m as usize] += Rational::from_integer(c.into());
        }
        Self::reduce(m, &wide)
    }

    /// Reduces a vector indexed by exponents 0..m mod Φ_m.
    fn reduce(m: u64, wide: &[Rational]) -> Self {
        let t = tables(m);
        let mut coeffs = vec![Rational::zero(); t.phi];
        for (n, c) in wide.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, b) in t.power(n as u64).iter().enumerate() {
                if !b.is_zero() {
                    coeffs[k] += c * Rational::from_integer(b.clone());
                }
            }
        }
        CyclotomicNumber { m, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in Q.
    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// Image under the automorphism ζ_m ↦ ζ_m^t.
    pub fn galois_apply(&self, t: i64) -> Result<Self> {
        let m = self.m;
        let tr = t.rem_euclid(m as i64) as u64;
        if gcd(tr, m) != 1 {
            return Err(Error::domain(format!("gcd({t}, {m}) != 1")));
        }
        let mut wide = vec![Rational::zero(); m as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            wide[(k as u64 * tr % m) as usize] += c;
        }
        Ok(Self::reduce(m, &wide))
    }

    /// Complex conjugation, ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois_apply(-1).expect("-1 is always a unit")
    }

    pub fn scale(&self, q: &Rational) -> Self {
        CyclotomicNumber { m: self.m, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.m);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.m, other.m, "conductor mismatch");
    }
}

impl CyclotomicNumber {
    /// The image under ζ_m ↦ exp(2πi·t/m).
    pub fn embed(&self, t: i64, ctx: RealContext) -> BigComplex {
        let m = self.m as i64;
        let mut acc = BigComplex::from_real(BigReal::zero(ctx));
        let two_pi_over_m = BigReal::pi(ctx).mul_int(2).div_int(m);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (t * i as i64).rem_euclid(m);
            let z = BigComplex::cis(&two_pi_over_m.mul_int(k));
            acc = &acc + &z.scale(&BigReal::from_rational(c, ctx));
        }
        acc
    }

    /// The image under the standard embedding ζ_m ↦ exp(2πi/m).
    pub fn to_complex(&self, ctx: RealContext) -> BigComplex {
        self.embed(1, ctx)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        CyclotomicNumber {
            m: self.m,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { m: self.m, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self.check(rhs);
        let m = self.m as usize;
        let mut wide = vec![Rational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[(i + j) % m] += a * b;
                }
            }
        }
        CyclotomicNumber::reduce(self.m, &wide)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $f(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Power-basis rendering such as `3 + z5^2 - 1/2*z5^3`.
impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            first = false;
            let a = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => format!("z{}", self.m),
                _ => format!("z{}^{k}", self.m),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => write!(f, "{a}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{a}*{mono}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15), ints(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
    }

    #[test]
    fn rendering() {
        let x = CyclotomicNumber::from_exponent_counts(5, &[3, 0, 1, -2, 0]);
        assert_eq!(x.to_string(), "3 + z5^2 - 2*z5^3");
        let y = CyclotomicNumber::zeta(7).scale(&rat(-1, 2));
        assert_eq!(y.to_string(), "-1/2*z7");
        assert_eq!(CyclotomicNumber::zero(4).to_string(), "0");
    }

    #[test]
    fn zeta_has_order_m() {
        for m in 1..=30u64 {
            let z = CyclotomicNumber::zeta(m);
            assert_eq!(z.pow(m as u32), CyclotomicNumber::one(m), "m = {m}");
        }
    }

    #[test]
    fn sum_of_primitive_roots_is_mobius() {
        for m in 2..=20u64 {
            let mut s = CyclotomicNumber::zero(m);
            for a in 1..=m {
                if gcd(a, m) == 1 {
                    s = &s + &CyclotomicNumber::zeta_power(m, a as i64);
                }
            }
            assert_eq!(s.to_rational(), Some(int(mobius(m))));
        }
    }

    #[test]
    fn galois_on_powers() {
        let m = 9;
        let z2 = CyclotomicNumber::zeta_power(m, 2);
        assert_eq!(z2.galois_apply(4).unwrap(), CyclotomicNumber::zeta_power(m, 8));
        assert!(z2.galois_apply(3).is_err());
        assert_eq!(z2.galois_apply(1).unwrap(), z2);
    }
}
