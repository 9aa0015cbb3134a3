//! Pointwise checks of the p-adic identities: elementary functions, the LΓ
//! series, Morita's Γ_p, the extended Γ_p and Γ_col. Each takes explicit
//! inputs; sampling is the caller's business.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::report::{CheckReport, Params, Residual, Status};
use crate::arith::{ord_rat, pow_p, Rational};
use crate::bernoulli::{bernoulli_numbers, bernoulli_poly};
use crate::error::Result;
use crate::gamma::{
    beta_p, fractional_p_part, gamma_coleman, gamma_ext_rational, gamma_morita, gamma_morita_int,
    jx_oracle, lgamma, lgamma_general, lgamma_series, lgamma_truncation,
};
use crate::padic::{
    exp_extended, exp_small, log_iwasawa, star, teichmuller, PadicNumber, UnitModRoots,
};

/// Guard digits carried by every check beyond the compared precision.
pub(super) const GUARD: u32 = 4;

pub(super) fn pad(q: &Rational, p: u64, prec: u32) -> Result<PadicNumber> {
    let v = if q.is_zero() { 0 } else { ord_rat(q, p) };
    PadicNumber::from_rational(q, p, prec + 2 * v.unsigned_abs() as u32 + GUARD)
}

/// Compares two p-adic numbers to O(p^n) and reports the valuation of the
/// difference, capped at n.
pub(super) fn padic_cmp(x: &PadicNumber, y: &PadicNumber, n: u32) -> (Status, Residual) {
    let ok = x.eq_mod(y, n as i64);
    let v = (x - y).known_valuation().min(n as i64);
    (Status::from_bool(ok), Residual::Padic { valuation: v })
}

pub(super) fn class_cmp(x: &UnitModRoots, y: &UnitModRoots, n: u32) -> (Status, Residual, Option<String>) {
    if x.valuation() != y.valuation() {
        let why = format!("valuations differ: {} vs {}", x.valuation(), y.valuation());
        return (Status::Fail, Residual::Padic { valuation: i64::MIN / 4 }, Some(why));
    }
    let (s, r) = padic_cmp(x.log(), y.log(), n);
    (s, r, None)
}

pub(super) fn report(check: &str, params: Params, outcome: Result<(Status, Residual, Option<String>)>) -> CheckReport {
    match outcome {
        Ok((status, residual, detail)) => {
            let r = CheckReport::new(check, params, status, residual);
            match detail {
                Some(d) => r.with_detail(d),
                None => r,
            }
        }
        Err(e) => CheckReport::refused(check, params, e.to_string()),
    }
}

pub(super) fn with_none((s, r): (Status, Residual)) -> (Status, Residual, Option<String>) {
    (s, r, None)
}

// ---------------------------------------------------------------- padic-core

/// z = ω(u) · p^v · z^* with u the unit part.
pub fn check_star_decomposition(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("padic-core/star-decomposition", params, (|| {
        let x = pad(z, p, n)?;
        let v = x.known_valuation();
        let u = PadicNumber::from_parts(p, 0, x.unit().clone(), x.precision());
        let rebuilt = (&teichmuller(&u)? * &star(&x)?).shift(v);
        let principal = (&star(&x)? - &PadicNumber::one(p, n)).known_valuation() >= 1;
        let (s, r) = padic_cmp(&x.shift(-v), &rebuilt.shift(-v), n);
        let s = if principal { s } else { Status::Fail };
        Ok(with_none((s, r)))
    })())
}

pub fn check_log_homomorphism(x: &Rational, y: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("x={x},y={y}"));
    report("padic-core/log-homomorphism", params, (|| {
        let (a, b) = (pad(x, p, n)?, pad(y, p, n)?);
        let lhs = log_iwasawa(&(&a * &b))?;
        let rhs = &log_iwasawa(&a)? + &log_iwasawa(&b)?;
        Ok(with_none(padic_cmp(&lhs, &rhs, n)))
    })())
}

/// exp(log u) = u^* for a unit u.
pub fn check_exp_log(u: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("u={u}"));
    report("padic-core/exp-log", params, (|| {
        let x = pad(u, p, n)?;
        Ok(with_none(padic_cmp(&exp_small(&log_iwasawa(&x)?)?, &star(&x)?, n)))
    })())
}

/// log(exp z) = z for z ∈ pZ_p.
pub fn check_log_exp(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("padic-core/log-exp", params, (|| {
        let x = pad(z, p, n)?;
        Ok(with_none(padic_cmp(&log_iwasawa(&exp_small(&x)?)?, &x, n)))
    })())
}

pub fn check_teichmuller_order(u: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("u={u}"));
    report("padic-core/teichmuller-order", params, (|| {
        let w = teichmuller(&pad(u, p, n)?)?;
        let one = PadicNumber::one(p, n);
        let (s, r) = padic_cmp(&w.pow((p - 1) as i64)?, &one, n);
        let congruent = (&w - &pad(u, p, n)?).known_valuation() >= 1;
        Ok(with_none((if congruent { s } else { Status::Fail }, r)))
    })())
}

/// exp_extended(z1 + z2) = exp_extended(z1) + exp_extended(z2) as classes.
pub fn check_exp_extended_homomorphism(z1: &Rational, z2: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z1={z1},z2={z2}"));
    report("padic-core/exp-extended-homomorphism", params, (|| {
        let (a, b) = (pad(z1, p, n)?, pad(z2, p, n)?);
        let lhs = exp_extended(&(&a + &b));
        let rhs = &exp_extended(&a) + &exp_extended(&b);
        let sum_val = (&a + &b).abs_precision().min(n as i64);
        Ok(class_cmp(&lhs, &rhs, sum_val.max(0) as u32))
    })())
}

/// Σ_{j<k} C(k, j) B_j = 0 for 2 ≤ k ≤ n, exactly.
pub fn check_bernoulli_recurrence(n: usize) -> CheckReport {
    let b = bernoulli_numbers(n);
    let rows = crate::arith::binomial_table(n + 1);
    let ok = (2..=n).all(|k| {
        (0..k)
            .map(|j| &b[j] * Rational::from_integer(rows[k][j].clone()))
            .fold(Rational::zero(), |acc, x| acc + x)
            .is_zero()
    }) && b[1] == Rational::new((-1).into(), 2.into());
    CheckReport::new(
        "padic-core/bernoulli-recurrence",
        Params::new().input(format!("n={n}")),
        Status::from_bool(ok),
        Residual::Exact,
    )
}

// ------------------------------------------------------------- lgamma series

fn unit_pad(a: &BigInt, p: u64, n: u32, e: u32) -> Result<PadicNumber> {
    PadicNumber::from_integer(a, p, n + e + GUARD + 4)
}

/// LΓ(a, p^e) + LΓ(p^e - a, p^e) = 0.
pub fn check_lgamma_reflection(a: &BigInt, p: u64, e: u32, n: u32) -> CheckReport {
    let params = Params::new().p(p).e(e).n(n).input(format!("a={a}"));
    report("lgamma/reflection", params, (|| {
        let x = lgamma(&unit_pad(a, p, n, e)?, e, n + GUARD)?.value;
        let y = lgamma(&unit_pad(&(pow_p(p, e) - a), p, n, e)?, e, n + GUARD)?.value;
        Ok(with_none(padic_cmp(&(&x + &y), &PadicNumber::zero_to(p, n as i64), n)))
    })())
}

/// LΓ(a + p^e, p^e) - LΓ(a, p^e) = log_p a.
pub fn check_lgamma_shift(a: &BigInt, p: u64, e: u32, n: u32) -> CheckReport {
    let params = Params::new().p(p).e(e).n(n).input(format!("a={a}"));
    report("lgamma/shift", params, (|| {
        let x = unit_pad(a, p, n, e)?;
        let shifted = lgamma(&unit_pad(&(a + pow_p(p, e)), p, n, e)?, e, n + GUARD)?.value;
        let base = lgamma(&x, e, n + GUARD)?.value;
        Ok(with_none(padic_cmp(&(&shifted - &base), &log_iwasawa(&x)?, n)))
    })())
}

/// LΓ(ca, (c p^e)) = LΓ(a, (p^e)) + B_1(a/p^e) log_p c for a unit c.
pub fn check_lgamma_scaling(a: &BigInt, c: &BigInt, p: u64, e: u32, n: u32) -> CheckReport {
    let params = Params::new().p(p).e(e).n(n).input(format!("a={a},c={c}"));
    report("lgamma/scaling", params, (|| {
        let w = n + GUARD;
        let ca = unit_pad(&(c * a), p, n, e)?;
        let ca1 = PadicNumber::from_integer(&(c * pow_p(p, e)), p, w + e + 8)?;
        let lhs = lgamma_general(&ca, &ca1, w)?;
        let base = lgamma(&unit_pad(a, p, n, e)?, e, w)?.value;
        let b1 = bernoulli_poly(1, &Rational::new(a.clone(), pow_p(p, e)));
        let logc = log_iwasawa(&PadicNumber::from_integer(c, p, w + e + 4)?)?;
        let rhs = &base + &(&pad(&b1, p, w + e)? * &logc);
        Ok(with_none(padic_cmp(&lhs, &rhs, n)))
    })())
}

/// Ten extra outer terms change nothing at the reported precision.
pub fn check_lgamma_truncation(a: &BigInt, p: u64, e: u32, n: u32) -> CheckReport {
    let params = Params::new().p(p).e(e).n(n).input(format!("a={a}"));
    report("lgamma/truncation", params, (|| {
        let x = unit_pad(a, p, n, e)?;
        let a1 = PadicNumber::from_integer(&pow_p(p, e), p, n + 2 * e + 12)?;
        let k = lgamma_truncation(p, e, n as i64);
        let short = lgamma_series(&x, &a1, n, Some(k))?;
        let long = lgamma_series(&x, &a1, n, Some(k + 10))?;
        Ok(with_none(padic_cmp(&short, &long, n)))
    })())
}

/// Valuations of LΓ(a, p^e) - J_X-approximant at levels 1..=levels; the
/// check passes when they are nondecreasing.
pub fn check_jx_convergence(a: &BigInt, p: u64, e: u32, levels: u32, n: u32) -> CheckReport {
    let params = Params::new().p(p).e(e).n(n).input(format!("a={a},levels={levels}"));
    report("lgamma/jx-convergence", params, (|| {
        let x = unit_pad(a, p, n, e)?;
        let series = lgamma(&x, e, n)?.value;
        let mut vals = Vec::new();
        for l in 1..=levels {
            let approx = jx_oracle(&x, e, l, n)?;
            vals.push((&series - &approx).known_valuation().min(n as i64));
        }
        let ok = vals.windows(2).all(|w| w[0] <= w[1]);
        let last = *vals.last().unwrap_or(&0);
        let listing = vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let mut detail = format!("valuations by level: {listing}");
        if !ok {
            // The Riemann-sum error is Σ_j p^{jl} T_j; terms can cancel at a
            // single level, lifting that level above its neighbours.
            detail.push_str("; not monotone (cancellation at an early level)");
        }
        Ok((Status::from_bool(ok), Residual::Padic { valuation: last }, Some(detail)))
    })())
}

// ------------------------------------------------------- gamma equations

/// Γ_p(z)Γ_p(1-z) = ±1 for z ∈ Z_p; the sign is recorded.
pub fn check_morita_reflection(z: &BigInt, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    let modulus = pow_p(p, n);
    let z0 = z.mod_floor(&modulus);
    let w = (BigInt::one() - &z0).mod_floor(&modulus);
    let prod = &gamma_morita_int(&z0, p, n) * &gamma_morita_int(&w, p, n);
    let one = PadicNumber::one(p, n);
    let (plus, _) = padic_cmp(&prod, &one, n);
    let (minus, _) = padic_cmp(&prod, &-&one, n);
    let (status, sign, other) = match (plus, minus) {
        (Status::Pass, _) => (Status::Pass, "+1", &one),
        (_, Status::Pass) => (Status::Pass, "-1", &one),
        _ => (Status::Fail, "none", &one),
    };
    let residual = if status == Status::Pass {
        Residual::Padic { valuation: n as i64 }
    } else {
        Residual::Padic { valuation: (&prod - other).known_valuation().min(n as i64) }
    };
    CheckReport::new("gamma-fe/morita-reflection", params, status, residual).observed(sign)
}

/// a ≡ b mod p^k implies Γ_p(a) ≡ Γ_p(b) mod p^k.
pub fn check_morita_continuity(a: &BigInt, b: &BigInt, k: u32, p: u64) -> CheckReport {
    let params = Params::new().p(p).n(k).input(format!("a={a},b={b}"));
    let same_class = (a - b).mod_floor(&pow_p(p, k)).is_zero();
    if !same_class {
        return CheckReport::refused("gamma-fe/morita-continuity", params, "a and b are not congruent");
    }
    let w = k + 2;
    let (s, r) = padic_cmp(&gamma_morita_int(a, p, w), &gamma_morita_int(b, p, w), k);
    CheckReport::new("gamma-fe/morita-continuity", params, s, r)
}

/// Γ_p(z+1) ≡ z^* Γ_p(z) mod μ∞ for v(z) < 0.
pub fn check_gamma_ext_shift(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("gamma-fe/extended-shift", params, (|| {
        let w = n + GUARD;
        let lhs = gamma_ext_rational(&(z + Rational::one()), p, w)?;
        let rhs = &UnitModRoots::of(&star(&pad(z, p, w)?)?)? + &gamma_ext_rational(z, p, w)?;
        Ok(class_cmp(&lhs, &rhs, n))
    })())
}

/// Γ_p(z)Γ_p(1-z) ≡ 1 mod μ∞ for v(z) < 0.
pub fn check_gamma_ext_reflection(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("gamma-fe/extended-reflection", params, (|| {
        let w = n + GUARD;
        let sum = &gamma_ext_rational(z, p, w)? + &gamma_ext_rational(&(Rational::one() - z), p, w)?;
        Ok(class_cmp(&sum, &UnitModRoots::identity(p), n))
    })())
}

/// Multiplication formulas for v(z) < 0 (or pz ∈ Z_p when m = p):
/// p ∤ m: Γ_p(mz) = Π_k m^{z+k/m-1/2} Γ_p(z + k/m);
/// m = p, pz ∉ Z_p: Γ_p(pz) = Π_k Γ_p(z + k/p);
/// m = p, pz ∈ Z_p: Γ_p(pz) ≡ Π_{k: pz+k unit} Γ_p(z + k/p).
pub fn check_gamma_ext_multiplication(z: &Rational, m: u64, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).m(m).n(n).input(format!("z={z}"));
    report("gamma-fe/multiplication", params, (|| {
        let w = n + GUARD;
        let mq = Rational::from_integer(m.into());
        let mz = &mq * z;
        let shifted = |k: u64| z + Rational::new(k.into(), m.into());
        let v = if z.is_zero() { 0 } else { ord_rat(z, p) };
        if !m.is_multiple_of(p) {
            let logm = log_iwasawa(&PadicNumber::from_integer(&m.into(), p, w + 2 * v.unsigned_abs() as u32 + 4)?)?;
            let half = Rational::new(1.into(), 2.into());
            let mut rhs = UnitModRoots::identity(p);
            for k in 0..m {
                let zk = shifted(k);
                let expo = &pad(&(&zk - &half), p, w)? * &logm;
                rhs = &(&rhs + &exp_extended(&expo)) + &gamma_ext_rational(&zk, p, w)?;
            }
            return Ok(class_cmp(&gamma_ext_rational(&mz, p, w)?, &rhs, n));
        }
        if v <= -2 {
            let rhs: UnitModRoots = (0..m).map(|k| gamma_ext_rational(&shifted(k), p, w)).sum::<Result<_>>()?;
            return Ok(class_cmp(&gamma_ext_rational(&mz, p, w)?, &rhs, n));
        }
        // pz ∈ Z_p: Morita on the left, extended factors with pz + k a unit on the right.
        let lhs = UnitModRoots::of(&gamma_morita(&pad(&mz, p, w)?, w)?)?;
        let mut rhs = UnitModRoots::identity(p);
        for k in 0..m {
            let pzk = &mz + Rational::from_integer(k.into());
            if !pzk.is_zero() && ord_rat(&pzk, p) == 0 {
                rhs = &rhs + &gamma_ext_rational(&shifted(k), p, w)?;
            }
        }
        Ok(class_cmp(&lhs, &rhs, n))
    })())
}

/// B_p(z, z) = Γ_p(z) - Γ_p(z + 1/2) - (2z - 1/2) log_p 2 as classes, which
/// is the duplication formula rewritten through the plain beta.
pub fn check_beta_duplication(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("gamma-fe/beta-duplication", params, (|| {
        let w = n + GUARD;
        let v = ord_rat(z, p);
        let half = Rational::new(1.into(), 2.into());
        let log2 = log_iwasawa(&PadicNumber::from_integer(&2.into(), p, w + 2 * v.unsigned_abs() as u32 + 4)?)?;
        let two_z = z * Rational::from_integer(2.into());
        let expo = &pad(&(&two_z - &half), p, w)? * &log2;
        let rhs = &(&gamma_ext_rational(z, p, w)? - &gamma_ext_rational(&(z + &half), p, w)?) - &exp_extended(&expo);
        Ok(class_cmp(&beta_p(z, z, p, w)?, &rhs, n))
    })())
}

/// class Γ_col(z) = Γ_p(z) - Γ_p(z_p) mod μ∞, with z = z_p + z_0.
pub fn check_coleman_bridge(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("gamma-fe/coleman-bridge", params, (|| {
        let w = n + GUARD;
        let x = pad(z, p, w)?;
        let zp = fractional_p_part(&x)?;
        let col = UnitModRoots::of(&gamma_coleman(&x, w)?)?;
        let rhs = if zp.is_zero() {
            UnitModRoots::of(&gamma_morita(&x, w)?)?
        } else {
            &gamma_ext_rational(z, p, w)? - &gamma_ext_rational(&zp, p, w)?
        };
        Ok(class_cmp(&col, &rhs, n))
    })())
}

/// Γ_col(z) = 1 on Z[1/p] ∩ [0, 1) and Γ_col(z+1) = z^* Γ_col(z) off Z_p;
/// on Z_p the recurrence is Morita's, -z or -1.
pub fn check_coleman_normalization(z: &Rational, p: u64, n: u32) -> CheckReport {
    let params = Params::new().p(p).n(n).input(format!("z={z}"));
    report("gamma-fe/coleman-normalization", params, (|| {
        let w = n + GUARD;
        let x = pad(z, p, w)?;
        let zp = fractional_p_part(&x)?;
        let at_zp = gamma_coleman(&pad(&zp, p, w)?, w)?;
        let (s1, _) = padic_cmp(&at_zp, &PadicNumber::one(p, n), n);
        let next = gamma_coleman(&pad(&(z + Rational::one()), p, w)?, w)?;
        // On Z_p, Γ_col is Morita's function with its own recurrence.
        let factor = if zp.is_zero() {
            if x.is_unit() { -x.clone() } else { -PadicNumber::one(p, w) }
        } else {
            star(&x)?
        };
        let (s2, r) = padic_cmp(&next, &(&factor * &gamma_coleman(&x, w)?), n);
        let ok = s1 == Status::Pass && s2 == Status::Pass;
        Ok(with_none((Status::from_bool(ok), r)))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn assert_pass(r: CheckReport) {
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn padic_core_samples() {
        for p in [3u64, 5, 7] {
            assert_pass(check_star_decomposition(&rat(98, 3), p, 12));
            assert_pass(check_log_homomorphism(&rat(7, 2), &rat(11, 13), p, 12));
            assert_pass(check_exp_log(&rat(2, 11), p, 12));
            assert_pass(check_log_exp(&rat(p as i64 * 4, 11), p, 12));
            assert_pass(check_teichmuller_order(&rat(2, 1), p, 12));
            assert_pass(check_exp_extended_homomorphism(&rat(1, p as i64), &rat(3, 1), p, 12));
        }
        assert_pass(check_bernoulli_recurrence(40));
    }

    #[test]
    fn lgamma_samples() {
        for p in [3u64, 5, 7] {
            for e in 1..=3 {
                let a = BigInt::from(1234567u64 * (p - 1) + 1);
                let a = if (&a % p).is_zero() { a + 1 } else { a };
                assert_pass(check_lgamma_reflection(&a, p, e, 12));
                assert_pass(check_lgamma_shift(&a, p, e, 12));
                assert_pass(check_lgamma_scaling(&a, &BigInt::from(2), p, e, 12));
                assert_pass(check_lgamma_truncation(&a, p, e, 12));
            }
        }
        assert_pass(check_jx_convergence(&BigInt::from(7), 3, 1, 4, 8));
    }

    #[test]
    fn gamma_equations() {
        for p in [3u64, 5, 7] {
            assert_pass(check_morita_reflection(&BigInt::from(123456), p, 12));
            assert_pass(check_morita_continuity(&BigInt::from(17), &(BigInt::from(17) + pow_p(p, 5) * 3), 5, p));
            let z = rat(2, (p * p) as i64) + rat(5, 1);
            assert_pass(check_gamma_ext_shift(&z, p, 12));
            assert_pass(check_gamma_ext_reflection(&z, p, 12));
            for m in [2u64, 3] {
                assert_pass(check_gamma_ext_multiplication(&z, m, p, 12));
            }
            assert_pass(check_gamma_ext_multiplication(&rat(4, p as i64), p, p, 12));
            assert_pass(check_gamma_ext_multiplication(&rat(4, 1), p, p, 12));
            assert_pass(check_beta_duplication(&z, p, 12));
            assert_pass(check_coleman_bridge(&(rat(7, (p * p) as i64) + rat(123, 1)), p, 10));
            assert_pass(check_coleman_normalization(&(rat(1, p as i64) + rat(3, 1)), p, 10));
        }
    }

    #[test]
    fn distinct_classes_are_distinguished() {
        let z = rat(2, 25) + rat(5, 1);
        let a = gamma_ext_rational(&z, 5, 16).unwrap();
        let b = gamma_ext_rational(&(z + rat(1, 1)), 5, 16).unwrap();
        assert_eq!(class_cmp(&a, &b, 12).0, Status::Fail);
        assert_eq!(class_cmp(&a, &a, 12).0, Status::Pass);
    }
}
