//! Frobenius scalar factors on the (i/m, j/m) eigenspaces.

use num_bigint::BigInt;

use super::beta::{beta_p, beta_p_pointed, epsilon};
use super::extended::lift;
use crate::arith::{frac_pointed, gcd, is_prime, pow_mod, Rational};
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, UnitModRoots};

/// ⟨p^degree · r⟩, the action of a Frobenius of the given degree on
/// r ∈ Q ∩ (0, 1] viewed as a root of unity.
pub fn frobenius_on_fraction(p: u64, r: &Rational, degree: u32) -> Rational {
    let pd = Rational::from_integer(BigInt::from(p).pow(degree));
    frac_pointed(&(r * pd))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorCase {
    /// p ∤ m.
    Good,
    /// p | m and p ∤ ij(i+j).
    Bad,
}

#[derive(Clone, Debug)]
pub struct FrobeniusFactor {
    pub p: u64,
    pub m: u64,
    pub i: u64,
    pub j: u64,
    pub degree: u32,
    pub case: FactorCase,
    /// Class mod μ∞.
    pub value: UnitModRoots,
    /// The exact scalar, available in the good case.
    pub concrete: Option<PadicNumber>,
}

/// Multiplier t for a Frobenius of degree d in the bad case m = p^a m':
/// t ≡ p^d mod m' and t ≡ 1 mod p^a.
pub fn bad_case_multiplier(p: u64, m: u64, degree: u32) -> u64 {
    let mut pa = 1;
    let mut rest = m;
    while rest.is_multiple_of(p) {
        rest /= p;
        pa *= p;
    }
    let target = pow_mod(p, degree as u64, rest);
    (0..m)
        .find(|&t| t % rest == target % rest && t % pa == 1 % pa)
        .expect("CRT solution exists")
}

fn validate(i: u64, j: u64, m: u64, p: u64) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadPrime(p));
    }
    if i == 0 || j == 0 || i >= m || j >= m || i + j == m {
        return Err(Error::domain(format!(
            "need 0 < i, j < m and i + j != m; got ({i}, {j}) with m = {m}"
        )));
    }
    Ok(())
}

pub fn frobenius_factor(
    i: u64,
    j: u64,
    m: u64,
    p: u64,
    degree: u32,
    prec: u32,
) -> Result<FrobeniusFactor> {
    validate(i, j, m, p)?;
    let r0 = Rational::new(i.into(), m.into());
    let s0 = Rational::new(j.into(), m.into());
    if gcd(p, m) == 1 {
        let concrete = good_case(&r0, &s0, p, degree, prec)?;
        let value = UnitModRoots::of(&concrete)?;
        return Ok(FrobeniusFactor {
            p,
            m,
            i,
            j,
            degree,
            case: FactorCase::Good,
            value,
            concrete: Some(concrete),
        });
    }
    if (i * j * (i + j)).is_multiple_of(p) {
        return Err(Error::domain(format!("p = {p} divides ij(i+j) for ({i}, {j})")));
    }
    let t = bad_case_multiplier(p, m, degree);
    let ti = frac_pointed(&(&r0 * Rational::from_integer(t.into())));
    let tj = frac_pointed(&(&s0 * Rational::from_integer(t.into())));
    let diff = &beta_p(&r0, &s0, p, prec)? - &beta_p(&ti, &tj, p, prec)?;
    let value = UnitModRoots::new(Rational::new(degree.into(), 2.into()), diff.log().clone());
    Ok(FrobeniusFactor { p, m, i, j, degree, case: FactorCase::Bad, value, concrete: None })
}

/// Π_{k=1}^{d} (-1)^{ε_k} p^{1-ε_{k-1}} / B_p⟨r_k, s_k⟩ times
/// ⟨r_d + s_d⟩^{ε_d} / ⟨r_0 + s_0⟩^{ε_0}, where r_k = ⟨p^k r⟩.
fn good_case(r: &Rational, s: &Rational, p: u64, degree: u32, prec: u32) -> Result<PadicNumber> {
    let orbit: Vec<(Rational, Rational)> = (0..=degree)
        .map(|k| (frobenius_on_fraction(p, r, k), frobenius_on_fraction(p, s, k)))
        .collect();
    let eps: Vec<u8> = orbit
        .iter()
        .map(|(a, b)| epsilon(a, b))
        .collect::<Result<_>>()?;
    let mut acc = PadicNumber::one(p, prec);
    for k in 1..=degree as usize {
        let (a, b) = &orbit[k];
        let beta = beta_p_pointed(a, b, p, prec)?;
        let unit = beta.unit().expect("p ∤ m keeps every argument in Z_p");
        acc = &acc / unit;
        if eps[k] == 1 {
            acc = -acc;
        }
        acc = acc.shift(1 - eps[k - 1] as i64);
    }
    let bracket = |k: usize| -> Result<PadicNumber> {
        let (a, b) = &orbit[k];
        let sum = frac_pointed(&(a + b));
        if eps[k] == 0 {
            Ok(PadicNumber::one(p, prec))
        } else {
            lift(&sum, p, prec)
        }
    };
    let d = degree as usize;
    Ok(&(&acc * &bracket(d)?) / &bracket(0)?)
}

/// Σ_{k=0}^{d-1} (1 - ε_k) along the Frobenius orbit of (r, s).
pub fn expected_good_valuation(r: &Rational, s: &Rational, p: u64, degree: u32) -> Result<i64> {
    let mut v = 0;
    for k in 0..degree {
        let a = frobenius_on_fraction(p, r, k);
        let b = frobenius_on_fraction(p, s, k);
        v += 1 - epsilon(&a, &b)? as i64;
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn frobenius_action_on_fractions() {
        assert_eq!(frobenius_on_fraction(5, &rat(1, 3), 1), rat(2, 3));
        assert_eq!(frobenius_on_fraction(7, &rat(1, 3), 1), rat(1, 3));
        assert_eq!(frobenius_on_fraction(2, &rat(3, 7), 3), rat(3, 7));
    }

    #[test]
    fn degree_zero_is_identity() {
        let f = frobenius_factor(1, 1, 3, 7, 0, 10).unwrap();
        assert_eq!(f.concrete.unwrap(), PadicNumber::one(7, 10));
        assert!(f.value.is_identity(10));
    }

    #[test]
    fn fixed_point_case() {
        // p ≡ 1 mod m: factor = (-1)^ε p^{1-ε} / B_p⟨i/m, j/m⟩
        for (i, j) in [(1u64, 1u64), (2, 2), (1, 3)] {
            let (p, m) = (11u64, 5u64);
            let (r, s) = (rat(i as i64, m as i64), rat(j as i64, m as i64));
            let eps = epsilon(&r, &s).unwrap();
            let f = frobenius_factor(i, j, m, p, 1, 10).unwrap().concrete.unwrap();
            let beta = beta_p_pointed(&r, &s, p, 10).unwrap();
            let mut expect = (&PadicNumber::one(p, 10) / beta.unit().unwrap()).shift(1 - eps as i64);
            if eps == 1 {
                expect = -expect;
            }
            assert_eq!(f, expect);
        }
    }

    #[test]
    fn valuations_follow_the_carries() {
        for (p, m, d) in [(5u64, 3u64, 2u32), (3, 7, 6), (7, 4, 2)] {
            for i in 1..m {
                for j in 1..m {
                    if i + j == m {
                        continue;
                    }
                    let f = frobenius_factor(i, j, m, p, d, 8).unwrap();
                    let (r, s) = (rat(i as i64, m as i64), rat(j as i64, m as i64));
                    let want = expected_good_valuation(&r, &s, p, d).unwrap();
                    assert_eq!(f.value.valuation(), &Rational::from_integer(want.into()));
                }
            }
        }
    }

    #[test]
    fn bad_case_valuation_is_half_degree() {
        let f = frobenius_factor(1, 2, 25, 5, 1, 8).unwrap();
        assert_eq!(f.case, FactorCase::Bad);
        assert_eq!(f.value.valuation(), &rat(1, 2));
        assert!(frobenius_factor(1, 4, 25, 5, 1, 8).is_err());
        assert_eq!(bad_case_multiplier(5, 15, 1), 11);
    }

    #[test]
    fn full_bad_orbit_has_zero_log() {
        // t = 1 when m is a pure p-power, so the log difference vanishes.
        let f = frobenius_factor(1, 2, 25, 5, 3, 8).unwrap();
        assert!(f.value.log().is_zero_mod(8));
        assert_eq!(f.value.valuation(), &rat(3, 2));
    }
}
