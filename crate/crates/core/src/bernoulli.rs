//! Exact Bernoulli numbers (convention B_1 = -1/2) and Bernoulli polynomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial_table, Rational};

/// Table B_0..B_K, grown on demand by the recurrence
/// Σ_{j<n} C(n, j) B_j = 0 (n ≥ 2).
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    table: Vec<Rational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            table: vec![Rational::one()],
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.table
    }

    /// Extends the table so that B_0..=B_n are present.
    pub fn extend_to(&mut self, n: usize) {
        if self.table.len() > n {
            return;
        }
        let rows = binomial_table(n + 1);
        for k in self.table.len()..=n {
            if k >= 3 && k % 2 == 1 {
                self.table.push(Rational::zero());
                continue;
            }
            // From row k+1: B_k = -(1/(k+1)) Σ_{j<k} C(k+1, j) B_j.
            let row = &rows[k + 1];
            let mut acc = Rational::zero();
            for (j, b) in self.table.iter().enumerate() {
                if !b.is_zero() {
                    acc += b * Rational::from_integer(row[j].clone());
                }
            }
            self.table.push(-acc / Rational::from_integer(BigInt::from(k + 1)));
        }
    }

    pub fn get(&mut self, n: usize) -> Rational {
        self.extend_to(n);
        self.table[n].clone()
    }
}

fn shared() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BernoulliCache::new()))
}

/// B_0..=B_n from the process-wide cache. Concurrent readers share the
/// table; growth takes the write lock and is idempotent.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    {
        let guard = shared().read().expect("bernoulli cache poisoned");
        if guard.len() > n {
            return guard.as_slice()[..=n].to_vec();
        }
    }
    let mut guard = shared().write().expect("bernoulli cache poisoned");
    guard.extend_to(n);
    guard.as_slice()[..=n].to_vec()
}

pub fn bernoulli(n: usize) -> Rational {
    {
        let guard = shared().read().expect("bernoulli cache poisoned");
        if guard.len() > n {
            return guard.as_slice()[n].clone();
        }
    }
    shared().write().expect("bernoulli cache poisoned").get(n)
}

/// B_n(x) = Σ_k C(n, k) B_k x^{n-k}.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(n);
    let mut binom = BigInt::one();
    let mut acc = Rational::zero();
    for (k, bk) in b.iter().enumerate() {
        acc = acc * x + bk * Rational::from_integer(binom.clone());
        binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{binomial, rat};

    #[test]
    fn first_values() {
        let b = bernoulli_numbers(12);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[12], rat(-691, 2730));
    }

    #[test]
    fn recurrence_holds_for_every_stored_index() {
        let b = bernoulli_numbers(40);
        for n in 2..=40u64 {
            let s: Rational = (0..n)
                .map(|j| &b[j as usize] * Rational::from_integer(binomial(n, j)))
                .sum();
            assert!(s.is_zero(), "recurrence fails at n={n}");
        }
        for k in 1..20 {
            assert!(b[2 * k + 1].is_zero());
        }
    }

    #[test]
    fn polynomial_spot_values() {
        assert_eq!(bernoulli_poly(1, &rat(1, 5)), rat(-3, 10));
        assert_eq!(bernoulli_poly(2, &rat(0, 1)), rat(1, 6));
        let x = rat(1, 3);
        let lhs = bernoulli_poly(3, &(rat(1, 1) - &x));
        assert_eq!(lhs, -bernoulli_poly(3, &x));
    }

    #[test]
    fn shift_identity() {
        // B_n(x+1) = B_n(x) + n x^{n-1}
        let x = rat(2, 7);
        for n in 1..10usize {
            let lhs = bernoulli_poly(n, &(&x + rat(1, 1)));
            let rhs = bernoulli_poly(n, &x)
                + rat(n as i64, 1) * num_traits::pow(x.clone(), n - 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn local_cache_matches_shared() {
        let mut c = BernoulliCache::new();
        assert_eq!(c.get(20), bernoulli(20));
        assert_eq!(c.len(), 21);
    }
}
