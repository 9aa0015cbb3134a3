//! Γ_p on Q_p - Z_p (as a class mod μ∞), the combined Γ_p on Q, and
//! Coleman's Γ_col.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::lgamma::lgamma;
use super::morita::gamma_morita;
use crate::arith::{ord_rat, pow_p, Rational};
use crate::error::{Error, Result};
use crate::padic::{progression_product, star, teichmuller, PadicNumber, UnitModRoots};

/// Γ_p(z) for v(z) = -e < 0, as the class (0, LΓ_{p,1}(z p^e, (p^e))).
pub fn gamma_ext(z: &PadicNumber, prec: u32) -> Result<UnitModRoots> {
    let p = z.prime();
    let e = match z.valuation() {
        Some(v) if v < 0 => (-v) as u32,
        _ => {
            return Err(Error::domain(
                "extended gamma needs v(z) < 0; use gamma_morita on Z_p",
            ))
        }
    };
    let z0 = PadicNumber::from_parts(p, 0, z.unit().clone(), z.precision());
    let l = lgamma(&z0, e, prec)?;
    Ok(UnitModRoots::new(Rational::zero(), l.value))
}

/// Relative precision needed so that a rational of valuation `v` yields
/// results to O(p^prec).
pub(crate) fn input_precision(v: i64, prec: u32) -> u32 {
    prec + 2 * v.unsigned_abs() as u32 + 4
}

pub(crate) fn lift(q: &Rational, p: u64, prec: u32) -> Result<PadicNumber> {
    let v = if q.is_zero() { 0 } else { ord_rat(q, p) };
    PadicNumber::from_rational(q, p, input_precision(v, prec))
}

/// gamma_ext at a rational argument of negative valuation.
pub fn gamma_ext_rational(q: &Rational, p: u64, prec: u32) -> Result<UnitModRoots> {
    gamma_ext(&lift(q, p, prec)?, prec)
}

/// Γ_p at a rational: Morita's value on Z_p, the extended class elsewhere.
#[derive(Clone, Debug)]
pub enum GammaValue {
    Morita(PadicNumber),
    Extended(UnitModRoots),
}

impl GammaValue {
    /// The class mod μ∞ in either case.
    pub fn class(&self) -> Result<UnitModRoots> {
        match self {
            GammaValue::Morita(x) => UnitModRoots::of(x),
            GammaValue::Extended(c) => Ok(c.clone()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            GammaValue::Morita(x) => x.render(),
            GammaValue::Extended(c) => c.render(),
        }
    }
}

pub fn gamma_p(q: &Rational, p: u64, prec: u32) -> Result<GammaValue> {
    let z = lift(q, p, prec)?;
    if q.is_zero() || ord_rat(q, p) >= 0 {
        Ok(GammaValue::Morita(gamma_morita(&z, prec)?))
    } else {
        Ok(GammaValue::Extended(gamma_ext(&z, prec)?))
    }
}

/// z_p ∈ Z[1/p] ∩ [0, 1) with z - z_p ∈ Z_p.
pub fn fractional_p_part(z: &PadicNumber) -> Result<Rational> {
    let v = z.known_valuation();
    if z.is_zero() || v >= 0 {
        return Ok(Rational::zero());
    }
    let e = (-v) as u32;
    if z.precision() < e {
        return Err(Error::Precision("digits below p^0 are not all known".into()));
    }
    let pe = pow_p(z.prime(), e);
    Ok(Rational::new(z.unit().mod_floor(&pe), pe))
}

/// Integer representative n ≡ z - z_p mod p^N and the denominator exponent
/// e of z_p, together with A = z_p p^e.
struct ColemanSplit {
    e: u32,
    big_a: BigInt,
    n: BigInt,
    prec: u32,
}

fn split(z: &PadicNumber, prec: u32) -> Result<ColemanSplit> {
    let p = z.prime();
    let zp = fractional_p_part(z)?;
    let e = (-z.known_valuation()) as u32;
    let z0 = z - &PadicNumber::from_rational(&zp, p, z.precision())?;
    let n = (prec as i64).min(z0.abs_precision());
    if n < 1 {
        return Err(Error::Precision("argument carries no digits in Z_p".into()));
    }
    let n = n as u32;
    let rep = z0.to_integer()?.mod_floor(&pow_p(p, n));
    Ok(ColemanSplit { e, big_a: zp.numer().clone(), n: rep, prec: n })
}

/// Coleman's Γ_col(z) = lim_{n→z_0} Π_{l<n} (z_p + l)^*, where z = z_p + z_0.
///
/// With A = z_p p^e the factors are (A + l p^e)/ω(A), so the product is
/// ω(A)^{-n} Π_{l<n}(A + l p^e), a progression product. On Z_p this is
/// Morita's Γ_p.
pub fn gamma_coleman(z: &PadicNumber, prec: u32) -> Result<PadicNumber> {
    if z.is_zero() || z.known_valuation() >= 0 {
        return gamma_morita(z, prec);
    }
    let p = z.prime();
    let s = split(z, prec)?;
    let modulus = pow_p(p, s.prec);
    let w = teichmuller(&PadicNumber::from_parts(p, 0, s.big_a.clone(), s.prec))?;
    let order = BigInt::from(p - 1);
    let k = (-&s.n).mod_floor(&order);
    let w_pow = w.unit().modpow(&k, &modulus);
    let prod = progression_product(&s.big_a, &pow_p(p, s.e), &s.n, p, s.prec);
    Ok(PadicNumber::from_parts(p, 0, (prod * w_pow).mod_floor(&modulus), s.prec))
}

/// The literal product Π_{l<n} (z_p + l)^*, refused above `cap` factors.
pub fn gamma_coleman_direct(z: &PadicNumber, prec: u32, cap: u64) -> Result<PadicNumber> {
    if z.is_zero() || z.known_valuation() >= 0 {
        return gamma_morita(z, prec);
    }
    let p = z.prime();
    let s = split(z, prec)?;
    if s.n.is_negative() || s.n > BigInt::from(cap) {
        return Err(Error::Refused(format!(
            "representative {} exceeds the product cap {cap}; lower the precision",
            s.n
        )));
    }
    let n: u64 = s.n.to_string().parse().expect("bounded by cap");
    let pe = pow_p(p, s.e);
    let mut acc = PadicNumber::one(p, s.prec);
    for l in 0..n {
        let x = PadicNumber::from_integer(&(&s.big_a + &pe * l), p, s.prec)?;
        acc = &acc * &star(&x)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::padic::log_iwasawa;

    #[test]
    fn fractional_parts() {
        let z = PadicNumber::from_rational(&rat(16, 5), 5, 10).unwrap();
        assert_eq!(fractional_p_part(&z).unwrap(), rat(1, 5));
        let z = PadicNumber::from_rational(&rat(7, 25), 5, 10).unwrap();
        assert_eq!(fractional_p_part(&z).unwrap(), rat(7, 25));
        let z = PadicNumber::from_rational(&rat(2, 3), 5, 10).unwrap();
        assert_eq!(fractional_p_part(&z).unwrap(), int(0));
        let z = PadicNumber::from_rational(&rat(-1, 5), 5, 10).unwrap();
        assert_eq!(fractional_p_part(&z).unwrap(), rat(4, 5));
    }

    #[test]
    fn coleman_is_one_on_the_unit_interval() {
        for (q, p) in [(rat(1, 5), 5u64), (rat(2, 3), 3), (rat(13, 49), 7)] {
            let z = PadicNumber::from_rational(&q, p, 12).unwrap();
            assert_eq!(gamma_coleman(&z, 10).unwrap(), PadicNumber::one(p, 10));
        }
    }

    #[test]
    fn coleman_functional_equation_and_direct_product() {
        let p = 5;
        for q in [rat(3, 5), rat(-7, 25), rat(41, 5)] {
            let z = PadicNumber::from_rational(&q, p, 14).unwrap();
            let z1 = PadicNumber::from_rational(&(&q + int(1)), p, 14).unwrap();
            let lhs = gamma_coleman(&z1, 8).unwrap();
            let rhs = &star(&z).unwrap() * &gamma_coleman(&z, 8).unwrap();
            assert!(lhs.eq_mod(&rhs, 8));
            let direct = gamma_coleman_direct(&z, 6, 1_000_000).unwrap();
            assert!(direct.eq_mod(&gamma_coleman(&z, 6).unwrap(), 6));
        }
        let z = PadicNumber::from_rational(&rat(-1, 5), 5, 14).unwrap();
        assert!(matches!(gamma_coleman_direct(&z, 12, 1000), Err(Error::Refused(_))));
    }

    #[test]
    fn extended_functional_equation() {
        let p = 7;
        let q = rat(3, 49);
        let a = gamma_ext_rational(&q, p, 10).unwrap();
        let b = gamma_ext_rational(&(&q + int(1)), p, 10).unwrap();
        let z = lift(&q, p, 10).unwrap();
        let step = UnitModRoots::new(int(0), log_iwasawa(&z).unwrap());
        assert!(b.eq_mod(&(a + step), 10));
    }
}
