//! Morita's Γ_p on Z_p, Γ_p(n) = (-1)^n Π_{0<k<n, p∤k} k.

use std::collections::HashMap;
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::pow_p;
use crate::error::{Error, Result};
use crate::padic::progression::{progression_product_with, symmetric_terms};
use crate::padic::{elementary_symmetric_range, PadicNumber};

/// Γ_p(n) mod p^prec for an integer n ≥ 0. The product splits by residue
/// class r mod p into progressions r, r+p, r+2p, … that are evaluated in
/// closed form, so n may be as large as p^prec.
pub fn gamma_morita_int(n: &BigInt, p: u64, prec: u32) -> PadicNumber {
    assert!(!n.is_negative(), "integer representative must be nonnegative");
    let modulus = pow_p(p, prec);
    let pb = BigInt::from(p);
    let mut acc = BigInt::one();
    if !n.is_zero() {
        let last = n - 1u32;
        // The progression lengths take at most two distinct values.
        let terms = symmetric_terms(&pb, p, prec);
        let mut cache: Vec<(BigInt, Vec<BigInt>)> = Vec::with_capacity(2);
        for r in 1..p {
            let rb = BigInt::from(r);
            if last < rb {
                break;
            }
            let count = (&last - &rb).div_floor(&pb) + 1u32;
            let idx = match cache.iter().position(|(c, _)| *c == count) {
                Some(i) => i,
                None => {
                    cache.push((count.clone(), elementary_symmetric_range(&count, terms)));
                    cache.len() - 1
                }
            };
            let part = progression_product_with(&rb, &pb, &count, &cache[idx].1, p, prec);
            acc = (acc * part).mod_floor(&modulus);
        }
    }
    if n.is_odd() {
        acc = (-acc).mod_floor(&modulus);
    }
    PadicNumber::from_parts(p, 0, acc, prec)
}

/// The defining product taken literally; `n` must be small.
pub fn gamma_morita_direct(n: u64, p: u64, prec: u32) -> PadicNumber {
    let modulus = pow_p(p, prec);
    let mut acc = BigInt::one();
    for k in 1..n {
        if k % p != 0 {
            acc = (acc * k).mod_floor(&modulus);
        }
    }
    if n % 2 == 1 {
        acc = (-acc).mod_floor(&modulus);
    }
    PadicNumber::from_parts(p, 0, acc, prec)
}

type Key = (u64, u32, BigInt);

/// Rational arguments recur constantly (Γ_p(k/m) for a handful of k), and
/// their integer representatives are as large as p^prec.
static CACHE: LazyLock<Mutex<HashMap<Key, PadicNumber>>> = LazyLock::new(Default::default);
const CACHE_LIMIT: usize = 1 << 14;

/// Γ_p(z) for z ∈ Z_p, to O(p^min(prec, abs precision of z)).
pub fn gamma_morita(z: &PadicNumber, prec: u32) -> Result<PadicNumber> {
    let p = z.prime();
    if z.known_valuation() < 0 && !z.is_zero() {
        return Err(Error::domain(
            "Morita's gamma is defined on Z_p; use gamma_ext for negative valuation",
        ));
    }
    let n = (prec as i64).min(z.abs_precision());
    if n < 1 {
        return Err(Error::Precision("argument carries no digits".into()));
    }
    let n = n as u32;
    let rep = z.to_integer()?.mod_floor(&pow_p(p, n));
    let key = (p, n, rep);
    if let Some(hit) = CACHE.lock().expect("cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let value = gamma_morita_int(&key.2, p, n);
    let mut cache = CACHE.lock().expect("cache poisoned");
    if cache.len() >= CACHE_LIMIT {
        cache.clear();
    }
    cache.insert(key, value.clone());
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn small_values() {
        for p in [3u64, 5, 7] {
            assert_eq!(gamma_morita_int(&BigInt::zero(), p, 8), PadicNumber::one(p, 8));
            assert_eq!(gamma_morita_int(&BigInt::one(), p, 8), -PadicNumber::one(p, 8));
        }
        assert_eq!(gamma_morita_int(&BigInt::from(3), 5, 12).render(), "-2 + O(5^12)");
    }

    #[test]
    fn closed_form_matches_literal_product() {
        for p in [3u64, 5, 7] {
            for n in 0..400u64 {
                assert_eq!(
                    gamma_morita_int(&BigInt::from(n), p, 9),
                    gamma_morita_direct(n, p, 9),
                    "p={p} n={n}"
                );
            }
        }
    }

    #[test]
    fn rational_arguments() {
        let z = PadicNumber::from_rational(&rat(1, 3), 5, 10).unwrap();
        let w = PadicNumber::from_rational(&rat(2, 3), 5, 10).unwrap();
        let prod = &gamma_morita(&z, 10).unwrap() * &gamma_morita(&w, 10).unwrap();
        let one = PadicNumber::one(5, 10);
        assert!(prod == one || prod == -one);
        let bad = PadicNumber::from_rational(&rat(1, 5), 5, 10).unwrap();
        assert!(gamma_morita(&bad, 10).is_err());
    }
}
