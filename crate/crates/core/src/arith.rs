//! Exact integer and rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"`, `"-a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::domain(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    q - q.floor()
}

/// Fractional part in `(0, 1]`, written ⟨q⟩.
pub fn frac_pointed(q: &Rational) -> Rational {
    let f = frac(q);
    if f.is_zero() {
        Rational::one()
    } else {
        f
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        Err(Error::BadPrime(p))
    } else {
        Ok(())
    }
}

pub fn pow_p(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

/// p-adic valuation of a nonzero integer.
pub fn ord_int(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// Strips every factor of p, returning (valuation, cofactor).
pub fn split_p(n: &BigInt, p: u64) -> (u32, BigInt) {
    let v = ord_int(n, p);
    (v, n / pow_p(p, v))
}

/// p-adic valuation of a nonzero rational.
pub fn ord_rat(q: &Rational, p: u64) -> i64 {
    ord_int(q.numer(), p) as i64 - ord_int(q.denom(), p) as i64
}

/// Inverse of `a` modulo `m`, if it exists; result in `[0, m)`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow_mod(base: u64, exp: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut e = exp;
    let mut acc = 1u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `a` modulo `m` (requires gcd(a, m) = 1).
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * (a % m) % m;
        k += 1;
    }
    Some(k)
}

/// Least primitive root modulo an odd prime.
pub fn least_primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("primes have primitive roots")
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// The residues 0 < a < m/2 with gcd(a, m) = 1, one per pair σ_{±a/m}.
pub fn admissible_residues(m: u64) -> Vec<u64> {
    (1..m).filter(|&a| 2 * a < m && gcd(a, m) == 1).collect()
}

/// Pascal rows `C(n, 0..=n)` for `n <= max`.
pub fn binomial_table(max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointed_fraction_lands_in_half_open_unit() {
        assert_eq!(frac_pointed(&rat(4, 3)), rat(1, 3));
        assert_eq!(frac_pointed(&int(2)), int(1));
        assert_eq!(frac_pointed(&rat(-1, 3)), rat(2, 3));
        assert_eq!(frac(&int(2)), int(0));
    }

    #[test]
    fn valuations() {
        assert_eq!(ord_rat(&rat(7, 25), 5), -2);
        assert_eq!(ord_rat(&int(10), 5), 1);
        assert_eq!(split_p(&BigInt::from(250), 5), (3, BigInt::from(2)));
    }

    #[test]
    fn orders_and_roots() {
        assert_eq!(multiplicative_order(2, 13), Some(12));
        assert_eq!(multiplicative_order(2, 15), Some(4));
        assert_eq!(multiplicative_order(3, 12), None);
        assert_eq!(least_primitive_root(7), 3);
        assert_eq!(least_primitive_root(13), 2);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(12), 0);
        assert_eq!(admissible_residues(12), vec![1, 5]);
        assert_eq!(admissible_residues(5), vec![1, 2]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn inverse_mod_prime_power() {
        let inv = mod_inverse(&BigInt::from(3), &BigInt::from(625)).unwrap();
        assert_eq!(inv, BigInt::from(417));
        assert!(mod_inverse(&BigInt::from(5), &BigInt::from(625)).is_none());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("-7/25").unwrap(), rat(-7, 25));
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
