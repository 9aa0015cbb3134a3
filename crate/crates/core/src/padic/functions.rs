//! Teichmüller character, principal-unit part, Iwasawa logarithm and the
//! p-adic exponential.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modroots::UnitModRoots;
use super::PadicNumber;
use crate::arith::{mod_inverse, pow_p, split_p, Rational};
use crate::error::{Error, Result};

/// ω(z): the (p-1)-st root of unity congruent to the unit z mod p, found by
/// iterating x ↦ x^p until it is stable mod p^N.
pub fn teichmuller(z: &PadicNumber) -> Result<PadicNumber> {
    match z.valuation() {
        Some(0) => {}
        Some(v) => return Err(Error::NotUnit(v)),
        None => return Err(Error::Zero("Teichmüller lift")),
    }
    let p = z.prime();
    let n = z.precision();
    let modulus = pow_p(p, n);
    let exp = BigInt::from(p);
    let mut x = z.unit().clone();
    loop {
        let next = x.modpow(&exp, &modulus);
        if next == x {
            break;
        }
        x = next;
    }
    Ok(PadicNumber::from_parts(p, 0, x, n))
}

/// z^* = z ω(z p^{-v})^{-1} p^{-v}, the component of z in 1 + pZ_p.
pub fn star(z: &PadicNumber) -> Result<PadicNumber> {
    if z.is_zero() {
        return Err(Error::Zero("principal-unit part"));
    }
    let p = z.prime();
    let u = PadicNumber::from_parts(p, 0, z.unit().clone(), z.precision());
    let w = teichmuller(&u)?;
    Ok(&u / &w)
}

/// Smallest K with k - floor(log_p k) >= n for every k >= K.
pub fn log_truncation_bound(p: u64, n: u32) -> u32 {
    let n = n as i64;
    let mut k: i64 = 1;
    loop {
        // k - floor(log_p k) is nondecreasing, so the first hit suffices.
        let mut s = 0;
        let mut q = k;
        while q >= p as i64 {
            q /= p as i64;
            s += 1;
        }
        if k - s >= n {
            return k as u32;
        }
        k += 1;
    }
}

/// Σ_{k=1}^{terms} -(1 - x)^k / k for x ≡ 1 mod p, exactly modulo p^n.
fn log_principal(x: &BigInt, p: u64, n: u32, terms: u32) -> BigInt {
    let t = BigInt::one() - x; // divisible by p
    let mut smax = 0;
    let mut k = terms;
    while k >= p as u32 {
        k /= p as u32;
        smax += 1;
    }
    let wide = pow_p(p, n + smax);
    let modulus = pow_p(p, n);
    let mut power = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 1..=terms {
        power = (power * &t).mod_floor(&wide);
        let (s, cof) = split_p(&BigInt::from(k), p);
        let inv = mod_inverse(&cof, &modulus).expect("cofactor prime to p");
        let term = (&power / pow_p(p, s)) * inv;
        acc -= term;
    }
    acc.mod_floor(&modulus)
}

/// Iwasawa logarithm: log_p(p) = 0 and log_p kills roots of unity, so
/// log_p(z) = log_p(z^*). The result is known to O(p^N) with N the relative
/// precision of z.
pub fn log_iwasawa(z: &PadicNumber) -> Result<PadicNumber> {
    let n = z.precision();
    log_iwasawa_truncated(z, log_truncation_bound(z.prime(), n))
}

/// The logarithm series summed to exactly `terms` terms.
pub fn log_iwasawa_truncated(z: &PadicNumber, terms: u32) -> Result<PadicNumber> {
    let s = star(z)?;
    let p = z.prime();
    let n = s.precision();
    let value = log_principal(s.unit(), p, n, terms);
    Ok(PadicNumber::from_parts(p, 0, value, n))
}

/// exp(z) = Σ z^n / n! on pZ_p.
pub fn exp_small(z: &PadicNumber) -> Result<PadicNumber> {
    let p = z.prime();
    let abs = z.abs_precision();
    if z.is_exact_zero() {
        return Err(Error::Precision(
            "exact zero carries no precision; pass 0 + O(p^N)".into(),
        ));
    }
    if z.known_valuation() < 1 {
        return Err(Error::domain(format!(
            "exp series needs valuation >= 1, got {}",
            z.known_valuation()
        )));
    }
    let n = abs as u32;
    // val(z^k/k!) >= k(p-2)/(p-1) + 1/(p-1); stop once that reaches n.
    let mut kmax: u64 = 1;
    while (kmax * (p - 2) + 1) < (n as u64) * (p - 1) {
        kmax += 1;
    }
    let fact_val = |k: u64| -> u32 {
        let mut s = 0;
        let mut q = k;
        while q > 0 {
            q /= p;
            s += q;
        }
        s as u32
    };
    let smax = fact_val(kmax);
    let wide = pow_p(p, n + smax);
    let modulus = pow_p(p, n);
    let zi = z.to_integer()?;
    let mut power = BigInt::one();
    let mut fact_unit = BigInt::one();
    let mut acc = BigInt::one();
    for k in 1..=kmax {
        power = (power * &zi).mod_floor(&wide);
        let (_, cof) = split_p(&BigInt::from(k), p);
        fact_unit = (fact_unit * cof).mod_floor(&modulus);
        let inv = mod_inverse(&fact_unit, &modulus).expect("unit");
        acc += (&power / pow_p(p, fact_val(k))) * inv;
    }
    Ok(PadicNumber::from_parts(p, 0, acc, n))
}

/// exp_p(z) for arbitrary z ∈ Q_p, as its class modulo roots of unity.
///
/// Every admissible choice of exp_p(1/p^e) has logarithm 1/p^e, so the class
/// is exactly (valuation 0, log z).
pub fn exp_extended(z: &PadicNumber) -> UnitModRoots {
    UnitModRoots::new(Rational::zero(), z.clone())
}
