//! Algebraic invariants checked on random inputs.

use num_bigint::BigInt;
use proptest::prelude::*;

use stark_core::arith::{gcd, multiplicative_order, rat, Rational};
use stark_core::cyclotomic::{normalize_pm, stark_unit_exact, CyclotomicNumber};
use stark_core::gamma::{beta_p_pointed, epsilon, gamma_morita_direct, gamma_morita_int};
use stark_core::padic::{log_iwasawa, teichmuller, PadicNumber};
use stark_core::real::{beta_real, gamma_real, BigReal, RealContext};
use stark_core::reciprocity::frobenius_on_fraction;

const N: u32 = 10;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13])
}

/// A nonzero rational with small numerator and denominator.
fn small_rational() -> impl Strategy<Value = Rational> {
    (-5000i64..5000, 1i64..500).prop_filter("nonzero", |(n, _)| *n != 0).prop_map(|(n, d)| rat(n, d))
}

fn unit_rational(p: u64) -> impl Strategy<Value = Rational> {
    (1i64..100_000, 1i64..1000, any::<bool>())
        .prop_filter("unit", move |(n, d, _)| !(*n as u64).is_multiple_of(p) && !(*d as u64).is_multiple_of(p))
        .prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn padic(q: &Rational, p: u64) -> PadicNumber {
    PadicNumber::from_rational(q, p, N).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn padic_division_undoes_multiplication(p in prime(), x in small_rational(), y in small_rational()) {
        let (a, b) = (padic(&x, p), padic(&y, p));
        let prod = &a * &b;
        prop_assert_eq!(prod.known_valuation(), a.known_valuation() + b.known_valuation());
        let back = &prod / &b;
        prop_assert!(back.eq_mod(&a, a.known_valuation() + N as i64 - 1));
    }

    #[test]
    fn padic_round_trips_rationals(p in prime(), x in small_rational()) {
        let a = padic(&x, p);
        let again = padic(&a.to_rational(), p);
        prop_assert!(a.eq_mod(&again, a.abs_precision()));
    }

    #[test]
    fn iwasawa_log_is_a_homomorphism(p in prime(), x in small_rational(), y in small_rational()) {
        let (a, b) = (padic(&x, p), padic(&y, p));
        let lhs = log_iwasawa(&(&a * &b)).unwrap();
        let rhs = &log_iwasawa(&a).unwrap() + &log_iwasawa(&b).unwrap();
        prop_assert!(lhs.eq_mod(&rhs, N as i64 - 2));
    }

    #[test]
    fn iwasawa_log_kills_p(p in prime(), k in 1u32..4) {
        let x = PadicNumber::from_integer(&BigInt::from(p).pow(k), p, N).unwrap();
        prop_assert!(log_iwasawa(&x).unwrap().is_zero_mod(N as i64));
    }

    #[test]
    fn teichmuller_is_a_root_of_unity(p in prime(), u in any::<u32>()) {
        let u = u64::from(u) % (p * 1000) + 1;
        prop_assume!(u % p != 0);
        let w = teichmuller(&PadicNumber::from_i64(u as i64, p, N).unwrap()).unwrap();
        let one = PadicNumber::one(p, N);
        prop_assert!(w.pow((p - 1) as i64).unwrap().eq_mod(&one, N as i64));
        prop_assert!((&w - &PadicNumber::from_i64(u as i64, p, N).unwrap()).is_zero_mod(1));
    }

    #[test]
    fn morita_recurrence(p in prime(), n in 0u64..3000) {
        let g = gamma_morita_int(&BigInt::from(n), p, N);
        let next = gamma_morita_int(&BigInt::from(n + 1), p, N);
        let factor = if n % p == 0 { -1 } else { -(n as i64) };
        let expected = &g * &PadicNumber::from_i64(factor, p, N).unwrap();
        prop_assert!(next.eq_mod(&expected, N as i64));
    }

    #[test]
    fn morita_matches_the_defining_product(p in prime(), n in 0u64..400) {
        prop_assert!(gamma_morita_int(&BigInt::from(n), p, N).eq_mod(&gamma_morita_direct(n, p, N), N as i64));
    }

    #[test]
    fn morita_reflection_is_a_sign(p in prime(), z in 0u64..1_000_000) {
        let modulus = BigInt::from(p).pow(N);
        let z = BigInt::from(z) % &modulus;
        let w = (BigInt::from(1) - &z + &modulus) % &modulus;
        let prod = &gamma_morita_int(&z, p, N) * &gamma_morita_int(&w, p, N);
        let one = PadicNumber::one(p, N);
        prop_assert!(prod.eq_mod(&one, N as i64) || prod.eq_mod(&-&one, N as i64));
    }

    #[test]
    fn carries_of_complementary_pairs_sum_to_one(m in 3i64..40, i in 1i64..40, j in 1i64..40) {
        prop_assume!(i < m && j < m && i + j != m);
        let (r, s) = (rat(i, m), rat(j, m));
        let (r2, s2) = (rat(m - i, m), rat(m - j, m));
        prop_assert_eq!(epsilon(&r, &s).unwrap() + epsilon(&r2, &s2).unwrap(), 1);
    }

    #[test]
    fn pointed_beta_is_symmetric(p in prime(), m in 3i64..20, i in 1i64..20, j in 1i64..20) {
        prop_assume!(i < m && j < m && i + j != m && !(m as u64).is_multiple_of(p));
        let (r, s) = (rat(i, m), rat(j, m));
        let a = beta_p_pointed(&r, &s, p, N).unwrap();
        let b = beta_p_pointed(&s, &r, p, N).unwrap();
        prop_assert!(a.unit().unwrap().eq_mod(b.unit().unwrap(), N as i64));
    }

    #[test]
    fn frobenius_orbit_closes(p in prime(), m in 3i64..60, a in 1i64..60) {
        prop_assume!(a < m && gcd(a as u64, m as u64) == 1 && !(m as u64).is_multiple_of(p));
        let r = rat(a, m);
        let f = multiplicative_order(p % m as u64, m as u64).unwrap() as u32;
        prop_assert_eq!(frobenius_on_fraction(p, &r, f), r);
    }
}

fn cyclotomic(m: u64) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec(-4i64..=4, m as usize).prop_map(move |c| CyclotomicNumber::from_exponent_counts(m, &c))
}

fn unit_mod(m: u64) -> impl Strategy<Value = i64> {
    (1..m as i64).prop_filter("unit", move |t| gcd(*t as u64, m) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn galois_action_is_a_ring_map((_m, x, y, t) in (3u64..25).prop_flat_map(|m| (Just(m), cyclotomic(m), cyclotomic(m), unit_mod(m)))) {
        let prod = (&x * &y).galois_apply(t).unwrap();
        prop_assert_eq!(prod, &x.galois_apply(t).unwrap() * &y.galois_apply(t).unwrap());
        let sum = (&x + &y).galois_apply(t).unwrap();
        prop_assert_eq!(sum, &x.galois_apply(t).unwrap() + &y.galois_apply(t).unwrap());
    }

    #[test]
    fn galois_action_composes((_m, x, t, u) in (3u64..25).prop_flat_map(|m| (Just(m), cyclotomic(m), unit_mod(m), unit_mod(m)))) {
        let twice = x.galois_apply(u).unwrap().galois_apply(t).unwrap();
        prop_assert_eq!(twice, x.galois_apply(t * u).unwrap());
    }

    #[test]
    fn stark_units_permute_under_galois((m, a, t) in (3u64..31).prop_flat_map(|m| (Just(m), unit_mod(m), unit_mod(m)))) {
        // u(σ_a) = u(σ_{-a}), so representatives are folded into (0, m/2).
        let u = stark_unit_exact(normalize_pm(a, m), m).unwrap();
        let image = stark_unit_exact(normalize_pm(a * t, m), m).unwrap();
        prop_assert_eq!(u.galois_apply(t).unwrap(), image);
    }

    #[test]
    fn real_gamma_recurrence(n in 1i64..200, d in 1i64..50) {
        let ctx = RealContext::new(40);
        let z = rat(n, d);
        let lhs = gamma_real(&(&z + &Rational::from_integer(1.into())), ctx).unwrap();
        let rhs = &BigReal::from_rational(&z, ctx) * &gamma_real(&z, ctx).unwrap();
        let rel = (&(&lhs - &rhs) / &rhs).abs();
        prop_assert!(rel.abs_below_pow10(30), "relative error {}", rel.log10_abs());
    }

    #[test]
    fn real_beta_is_symmetric(a in 1i64..100, b in 1i64..100, d in 1i64..30) {
        let ctx = RealContext::new(40);
        let (x, y) = (rat(a, d), rat(b, d));
        let diff = &beta_real(&x, &y, ctx).unwrap() - &beta_real(&y, &x, ctx).unwrap();
        prop_assert!(diff.abs_below_pow10(30));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn units_have_valuation_zero(u in unit_rational(5)) {
        let x = padic(&u, 5);
        prop_assert!(x.is_unit());
        prop_assert_eq!(x.known_valuation(), 0);
    }
}
