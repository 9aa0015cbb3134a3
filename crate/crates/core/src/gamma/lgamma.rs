//! The series LΓ_{p,1}(a, (a_1)) for a ∈ Z_p^× and a_1 ∈ pZ_p:
//!
//! LΓ(a,(a_1)) = -B_1(a/a_1)
//!     - Σ_{k≥1} ((-1)^k / k) Σ_{l=0}^{k} C(k,l) ω(a)^{-l} a_1^l B_{l+1}(a/a_1) (-1)^{k-l}
//!
//! The Bernoulli values are exact rationals; ω(a) enters at guard precision
//! and the outer sum runs over integers scaled by a power of p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial_table, mod_inverse, pow_p, split_p, Rational};
use crate::bernoulli::bernoulli_numbers;
use crate::error::{Error, Result};
use crate::padic::{log_iwasawa, teichmuller, PadicNumber};

/// LΓ_{p,1}(a, (p^e)) together with its inputs.
#[derive(Clone, Debug)]
pub struct LGammaValue {
    pub a: PadicNumber,
    pub e: u32,
    pub value: PadicNumber,
}

fn floor_log(p: u64, k: u64) -> u32 {
    let mut s = 0;
    let mut q = k;
    while q >= p {
        q /= p;
        s += 1;
    }
    s
}

/// Number of outer terms K such that every dropped term (k > K) has
/// valuation at least `prec`, using v(term_k) ≥ k - 1 - e - ord_p(k).
pub fn lgamma_truncation(p: u64, e: u32, prec: i64) -> u32 {
    let mut k: u64 = 1;
    while (k as i64) - 1 - e as i64 - (floor_log(p, k) as i64) < prec {
        k += 1;
    }
    (k - 1) as u32
}

/// q·p^shift reduced mod `modulus`; requires ord_p(q) + shift ≥ 0.
fn scaled_mod(q: &Rational, p: u64, shift: u32, modulus: &BigInt) -> BigInt {
    let num = q.numer() * pow_p(p, shift);
    let (s, den) = split_p(q.denom(), p);
    let num = num / pow_p(p, s);
    let inv = mod_inverse(&den, modulus).expect("denominator prime to p");
    (num * inv).mod_floor(modulus)
}

struct Prepared {
    p: u64,
    e: u32,
    /// Each d_l = ω(a)^{-l} a_1^l B_{l+1}(a/a_1), times p^{e+1}, mod p^W.
    d: Vec<BigInt>,
    /// -B_1(a/a_1), times p^{e+1}, mod p^W.
    head: BigInt,
    width: u32,
}

/// Integer representatives of a and a_1 = c·p^e.
fn reps(a: &PadicNumber, a1: &PadicNumber) -> Result<(u64, BigInt, BigInt, u32)> {
    let p = a.prime();
    if a1.prime() != p {
        return Err(Error::PrimeMismatch(p, a1.prime()));
    }
    match a.valuation() {
        Some(0) => {}
        Some(v) => return Err(Error::NotUnit(v)),
        None => return Err(Error::Zero("LΓ argument")),
    }
    let e = match a1.valuation() {
        Some(v) if v >= 1 => v as u32,
        _ => return Err(Error::domain("a_1 must be a nonzero element of pZ_p")),
    };
    Ok((p, a.to_integer()?, a1.to_integer()?, e))
}

fn prepare(p: u64, big_a: &BigInt, big_a1: &BigInt, e: u32, terms: u32, width: u32) -> Prepared {
    let modulus = pow_p(p, width);
    let ra = Rational::from_integer(big_a.clone());
    let ra1 = Rational::from_integer(big_a1.clone());
    let kmax = terms as usize + 1;
    let b = bernoulli_numbers(kmax + 1);
    let binom = binomial_table(kmax + 1);
    // Powers A^j and A_1^j, j ≤ K + 2.
    let mut pa = vec![BigInt::one()];
    let mut pa1 = vec![BigInt::one()];
    for j in 1..=kmax + 1 {
        pa.push(&pa[j - 1] * big_a);
        pa1.push(&pa1[j - 1] * big_a1);
    }
    let w = teichmuller(&PadicNumber::from_parts(p, 0, big_a.clone(), width))
        .expect("a is a unit");
    let w_inv = mod_inverse(w.unit(), &modulus).expect("unit");
    let mut w_pow = BigInt::one();
    let mut d = Vec::with_capacity(terms as usize + 1);
    for l in 0..=terms as usize {
        // a_1^l B_{l+1}(A/A_1) = A_1^{-1} Σ_k C(l+1,k) B_k A^{l+1-k} A_1^k
        let n = l + 1;
        let mut acc = Rational::zero();
        for k in 0..=n {
            if b[k].is_zero() {
                continue;
            }
            let ints = &binom[n][k] * &pa[n - k] * &pa1[k];
            acc += &b[k] * Rational::from_integer(ints);
        }
        let c = acc / &ra1;
        let scaled = scaled_mod(&c, p, e + 1, &modulus);
        d.push((scaled * &w_pow).mod_floor(&modulus));
        w_pow = (w_pow * &w_inv).mod_floor(&modulus);
    }
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let head = scaled_mod(&(half - ra / ra1), p, e + 1, &modulus);
    Prepared { p, e, d, head, width }
}

impl Prepared {
    /// Σ_{l≤k} C(k,l)(-1)^{k-l} d_l, still scaled by p^{e+1}.
    fn inner(&self, k: usize, row: &[BigInt], modulus: &BigInt) -> BigInt {
        let mut s = BigInt::zero();
        for l in 0..=k {
            let t = &row[l] * &self.d[l];
            if (k - l).is_multiple_of(2) {
                s += t;
            } else {
                s -= t;
            }
        }
        s.mod_floor(modulus)
    }

    fn sum(&self, terms: u32) -> PadicNumber {
        let p = self.p;
        let modulus = pow_p(p, self.width);
        let smax = floor_log(p, terms.max(1) as u64);
        let binom = binomial_table(terms as usize);
        // Everything below is multiplied by p^{e+1+smax}.
        let lift = pow_p(p, smax);
        let mut acc = (&self.head * &lift).mod_floor(&modulus);
        for k in 1..=terms as usize {
            let s = self.inner(k, &binom[k], &modulus);
            let (v, cof) = split_p(&BigInt::from(k), p);
            let inv = mod_inverse(&cof, &modulus).expect("cofactor prime to p");
            let term = s * pow_p(p, smax - v) * inv;
            // -((-1)^k / k) S_k
            if k % 2 == 0 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        let shift = (self.e + 1 + smax) as i64;
        PadicNumber::from_parts(p, -shift, acc.mod_floor(&modulus), self.width)
    }

    /// Valuation of the k-th outer term, k = 1..=terms.
    fn term_valuations(&self, terms: u32) -> Vec<i64> {
        let modulus = pow_p(self.p, self.width);
        let binom = binomial_table(terms as usize);
        (1..=terms as usize)
            .map(|k| {
                let s = self.inner(k, &binom[k], &modulus);
                let v = PadicNumber::from_parts(self.p, 0, s, self.width).known_valuation();
                let (vk, _) = split_p(&BigInt::from(k), self.p);
                v - vk as i64 - self.e as i64 - 1
            })
            .collect()
    }
}

/// Output precision justified by the inputs and the request.
fn target_precision(a: &PadicNumber, a1: &PadicNumber, e: u32, prec: u32) -> Result<i64> {
    let from_a = a.abs_precision() - e as i64;
    let from_a1 = a1.precision() as i64 - e as i64;
    let target = (prec as i64).min(from_a).min(from_a1);
    if target < 1 {
        return Err(Error::Precision(format!(
            "inputs too coarse for LΓ with a_1 of valuation {e}"
        )));
    }
    Ok(target)
}

/// LΓ_{p,1}(a, (a_1)) summed to exactly `terms` outer terms, or to the
/// truncation bound when `terms` is `None`.
pub fn lgamma_series(
    a: &PadicNumber,
    a1: &PadicNumber,
    prec: u32,
    terms: Option<u32>,
) -> Result<PadicNumber> {
    let (p, big_a, big_a1, e) = reps(a, a1)?;
    let target = target_precision(a, a1, e, prec)?;
    let k = terms.unwrap_or_else(|| lgamma_truncation(p, e, target));
    let smax = floor_log(p, k.max(1) as u64);
    let width = target as u32 + smax + e + 3;
    let prepared = prepare(p, &big_a, &big_a1, e, k, width);
    Ok(prepared.sum(k).truncate_abs(target))
}

/// LΓ_{p,1}(a, (a_1)) for a general a_1 ∈ pZ_p.
pub fn lgamma_general(a: &PadicNumber, a1: &PadicNumber, prec: u32) -> Result<PadicNumber> {
    lgamma_series(a, a1, prec, None)
}

/// LΓ_{p,1}(a, (p^e)) to O(p^prec), or less if `a` is known to fewer
/// than prec + e digits.
pub fn lgamma(a: &PadicNumber, e: u32, prec: u32) -> Result<LGammaValue> {
    if e == 0 {
        return Err(Error::domain("e must be positive"));
    }
    let a1 = pe(a.prime(), e, prec)?;
    let value = lgamma_general(a, &a1, prec)?;
    Ok(LGammaValue { a: a.clone(), e, value })
}

fn pe(p: u64, e: u32, prec: u32) -> Result<PadicNumber> {
    PadicNumber::from_integer(&pow_p(p, e), p, prec + e + 8)
}

/// Valuations of the first `terms` outer terms of the series at (a, p^e).
pub fn lgamma_term_valuations(a: &PadicNumber, e: u32, terms: u32) -> Result<Vec<i64>> {
    let a1 = pe(a.prime(), e, terms + 8)?;
    let (p, big_a, big_a1, e) = reps(a, &a1)?;
    let width = terms + 2 * e + 8;
    Ok(prepare(p, &big_a, &big_a1, e, terms, width).term_valuations(terms))
}

/// Riemann-sum approximant (1/p^l) Σ_{n<p^l} f(n) of J_X(f) with
/// f(X) = -((a_1 X + a)/a_1)(1 - log_p(a_1 X + a)) and a_1 = p^e.
pub fn jx_oracle(a: &PadicNumber, e: u32, level: u32, prec: u32) -> Result<PadicNumber> {
    let p = a.prime();
    if e == 0 || level == 0 {
        return Err(Error::domain("e and the level must be positive"));
    }
    let count = (p as f64).powi(level as i32);
    if count > 1e6 {
        return Err(Error::Refused(format!("p^l = {count} exceeds 10^6")));
    }
    if !a.is_unit() {
        return Err(Error::NotUnit(a.known_valuation()));
    }
    let width = prec + e + level + 2;
    let big_a = a.to_integer()?;
    let a1 = pow_p(p, e);
    let one = PadicNumber::one(p, width);
    let mut acc = PadicNumber::zero_to(p, width as i64);
    for n in 0..count as u64 {
        let y = &a1 * BigInt::from(n) + &big_a;
        let y = PadicNumber::from_integer(&y, p, width)?;
        let f = -(&y.shift(-(e as i64)) * &(&one - &log_iwasawa(&y)?));
        acc = &acc + &f;
    }
    let limit = (prec as i64).min(a.abs_precision() - e as i64);
    Ok(acc.shift(-(level as i64)).truncate_abs(limit))
}

/// Same Riemann sum for an integer polynomial f(X) = X^n; tends to B_n.
pub fn jx_monomial(p: u64, n: u32, level: u32, prec: u32) -> Result<PadicNumber> {
    let count = pow_p(p, level);
    let modulus = pow_p(p, prec + level);
    let mut acc = BigInt::zero();
    let mut x = BigInt::zero();
    while x < count {
        acc += x.modpow(&BigInt::from(n), &modulus);
        x += 1;
    }
    if acc.is_negative() {
        acc = acc.mod_floor(&modulus);
    }
    Ok(PadicNumber::from_parts(p, -(level as i64), acc, prec + level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::bernoulli::bernoulli;

    fn pad(q: Rational, p: u64, n: u32) -> PadicNumber {
        PadicNumber::from_rational(&q, p, n).unwrap()
    }

    #[test]
    fn truncation_bound() {
        // p = 3, e = 1, N = 12: first k with k - 2 - floor(log_3 k) >= 12 is 16
        assert_eq!(lgamma_truncation(3, 1, 12), 15);
    }

    #[test]
    fn reflection_and_shift() {
        for (p, e) in [(3u64, 1u32), (5, 2), (7, 1), (3, 3)] {
            let pe = pow_p(p, e);
            for a in [1i64, 2, 4, 11] {
                if a % p as i64 == 0 {
                    continue;
                }
                let n = 12;
                let x = pad(int(a), p, n + e + 4);
                let l = lgamma(&x, e, n).unwrap().value;
                let refl = Rational::from_integer(&pe - BigInt::from(a));
                let r = lgamma(&pad(refl, p, n + e + 4), e, n).unwrap().value;
                assert!((&l + &r).is_zero_mod(n as i64), "reflection p={p} e={e} a={a}");
                let shifted = Rational::from_integer(&pe + BigInt::from(a));
                let s = lgamma(&pad(shifted, p, n + e + 4), e, n).unwrap().value;
                let log = log_iwasawa(&x).unwrap();
                assert!((&(&s - &l) - &log).is_zero_mod(n as i64), "shift p={p} e={e} a={a}");
            }
        }
    }

    #[test]
    fn extra_terms_change_nothing() {
        let a = pad(rat(7, 3), 5, 20);
        let a1 = pad(int(25), 5, 20);
        let k = lgamma_truncation(5, 2, 12);
        let base = lgamma_series(&a, &a1, 12, Some(k)).unwrap();
        let more = lgamma_series(&a, &a1, 12, Some(k + 10)).unwrap();
        assert!(base.eq_mod(&more, 12));
    }

    #[test]
    fn term_valuation_bound_holds() {
        for (p, e) in [(3u64, 1u32), (5, 1), (3, 2)] {
            let a = pad(int(2), p, 40);
            for (k, v) in lgamma_term_valuations(&a, e, 20).unwrap().into_iter().enumerate() {
                let k = k as u64 + 1;
                assert!(v >= k as i64 - 1 - e as i64 - floor_log(p, k) as i64);
            }
        }
    }

    #[test]
    fn monomial_sums_tend_to_bernoulli() {
        let b1 = pad(bernoulli(1), 5, 10);
        let b2 = pad(bernoulli(2), 5, 10);
        let mut prev = (i64::MIN, i64::MIN);
        for l in 1..=5 {
            let d1 = (&jx_monomial(5, 1, l, 10).unwrap() - &b1).known_valuation();
            let d2 = (&jx_monomial(5, 2, l, 10).unwrap() - &b2).known_valuation();
            assert!(d1 >= prev.0 && d2 >= prev.1);
            prev = (d1, d2);
        }
        assert!(prev.0 >= 4 && prev.1 >= 3);
    }

    #[test]
    fn oracle_converges_to_series() {
        let a = pad(int(1), 5, 20);
        let series = lgamma(&a, 1, 6).unwrap().value;
        let mut last = i64::MIN;
        for l in 1..=5 {
            let jx = jx_oracle(&a, 1, l, 6).unwrap();
            let v = (&jx - &series).known_valuation();
            assert!(v >= last, "level {l}: {v} < {last}");
            last = v;
        }
        assert!(last >= 3);
    }
}
