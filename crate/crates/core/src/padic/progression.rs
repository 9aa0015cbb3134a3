//! Products of long arithmetic progressions modulo p^N.
//!
//! Π_{l<n} (A + l·d) with A a unit and p | d equals A^n Σ_k e_k(0..n) y^k,
//! y = d/A, where e_k is the k-th elementary symmetric function of
//! {0, 1, …, n-1}. Since v(y^k) ≥ k·v(d), only a handful of e_k matter, and
//! those come from Newton's identities over Faulhaber power sums. This makes
//! the cost independent of n, which can be as large as p^N.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{mod_inverse, ord_int, pow_p, Rational};
use crate::bernoulli::bernoulli_poly;

/// e_0..e_{k_max} of the multiset {0, 1, …, n-1}, exactly.
pub fn elementary_symmetric_range(n: &BigInt, k_max: usize) -> Vec<BigInt> {
    let nq = Rational::from_integer(n.clone());
    // Power sums P_i = Σ_{l<n} l^i = (B_{i+1}(n) - B_{i+1}(0)) / (i+1).
    let power_sums: Vec<BigInt> = (0..=k_max)
        .map(|i| {
            if i == 0 {
                return n.clone();
            }
            let zero = Rational::zero();
            let s = (bernoulli_poly(i + 1, &nq) - bernoulli_poly(i + 1, &zero))
                / Rational::from_integer(BigInt::from(i + 1));
            debug_assert!(s.is_integer());
            s.to_integer()
        })
        .collect();
    let mut e = vec![BigInt::one()];
    for k in 1..=k_max {
        let mut acc = BigInt::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        e.push(q);
    }
    e
}

/// Π_{l=0}^{n-1} (first + l·step) mod p^prec, for a unit `first` and
/// `step` ≡ 0 mod p. The empty product (n = 0) is 1.
pub fn progression_product(first: &BigInt, step: &BigInt, n: &BigInt, p: u64, prec: u32) -> BigInt {
    assert!(!n.is_negative());
    let e = if n.is_zero() || step.is_zero() {
        Vec::new()
    } else {
        elementary_symmetric_range(n, symmetric_terms(step, p, prec))
    };
    progression_product_with(first, step, n, &e, p, prec)
}

/// Number of elementary symmetric functions a progression with this step
/// needs at the given precision.
pub(crate) fn symmetric_terms(step: &BigInt, p: u64, prec: u32) -> usize {
    let step_val = ord_int(step, p).max(1);
    (prec as usize).div_ceil(step_val as usize)
}

/// As [`progression_product`], with e_0..e_k of {0, …, n-1} precomputed.
pub(crate) fn progression_product_with(
    first: &BigInt,
    step: &BigInt,
    n: &BigInt,
    e: &[BigInt],
    p: u64,
    prec: u32,
) -> BigInt {
    assert!(!n.is_negative());
    let modulus = pow_p(p, prec);
    if n.is_zero() {
        return BigInt::one().mod_floor(&modulus);
    }
    let first_inv = mod_inverse(first, &modulus).expect("first term must be a unit");
    let lead = first.mod_floor(&modulus).modpow(n, &modulus);
    if step.is_zero() {
        return lead;
    }
    let y = (step * first_inv).mod_floor(&modulus);
    let mut acc = BigInt::zero();
    let mut yk = BigInt::one();
    for ek in e.iter() {
        acc += ek.mod_floor(&modulus) * &yk;
        yk = (yk * &y).mod_floor(&modulus);
    }
    (lead * acc).mod_floor(&modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(first: i64, step: i64, n: i64, p: u64, prec: u32) -> BigInt {
        let m = pow_p(p, prec);
        let mut acc = BigInt::one();
        for l in 0..n {
            acc = (acc * BigInt::from(first + l * step)).mod_floor(&m);
        }
        acc
    }

    #[test]
    fn symmetric_functions_of_small_ranges() {
        // {0,1,2,3}: e1 = 6, e2 = 11, e3 = 6, e4 = 0
        let e = elementary_symmetric_range(&BigInt::from(4), 5);
        let want: Vec<BigInt> = [1, 6, 11, 6, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(e, want);
    }

    #[test]
    fn matches_naive_products() {
        for p in [3u64, 5, 7] {
            for (first, step_exp, n) in [(1i64, 1u32, 0i64), (2, 1, 17), (4, 2, 50), (1, 1, 300), (11, 3, 123)] {
                if first % p as i64 == 0 {
                    continue;
                }
                let step = (p as i64).pow(step_exp);
                let fast = progression_product(
                    &BigInt::from(first),
                    &BigInt::from(step),
                    &BigInt::from(n),
                    p,
                    10,
                );
                assert_eq!(fast, naive(first, step, n, p, 10), "p={p} a={first} d={step} n={n}");
            }
        }
    }
}
