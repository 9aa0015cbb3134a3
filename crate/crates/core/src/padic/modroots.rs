use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::{log_iwasawa, PadicNumber};
use crate::arith::Rational;
use crate::error::Result;

/// A nonzero algebraic p-adic number modulo roots of unity, stored as
/// (valuation, Iwasawa logarithm). The group law is componentwise addition,
/// and two classes agree iff both components agree.
#[derive(Clone, Debug)]
pub struct UnitModRoots {
    valuation: Rational,
    log: PadicNumber,
}

impl UnitModRoots {
    pub fn new(valuation: Rational, log: PadicNumber) -> Self {
        UnitModRoots { valuation, log }
    }

    pub fn identity(prime: u64) -> Self {
        UnitModRoots::new(Rational::zero(), PadicNumber::exact_zero(prime))
    }

    /// Class of a concrete nonzero z: (ord_p z, log_p z).
    pub fn of(z: &PadicNumber) -> Result<Self> {
        let log = log_iwasawa(z)?;
        let v = z.valuation().expect("log_iwasawa rejects zero");
        Ok(UnitModRoots::new(Rational::from_integer(v.into()), log))
    }

    pub fn prime(&self) -> u64 {
        self.log.prime()
    }

    pub fn valuation(&self) -> &Rational {
        &self.valuation
    }

    pub fn log(&self) -> &PadicNumber {
        &self.log
    }

    /// n-th power of the class.
    pub fn scale(&self, n: i64) -> Self {
        let k = PadicNumber::from_i64(n, self.prime(), self.log.precision().max(1) + 8)
            .unwrap_or_else(|_| PadicNumber::exact_zero(self.prime()));
        let log = if n == 0 {
            PadicNumber::exact_zero(self.prime())
        } else {
            &self.log * &k
        };
        UnitModRoots::new(&self.valuation * Rational::from_integer(n.into()), log)
    }

    /// Equality mod μ∞ with the logarithms compared to O(p^k).
    pub fn eq_mod(&self, other: &Self, k: i64) -> bool {
        self.valuation == other.valuation && self.log.eq_mod(&other.log, k)
    }

    pub fn is_identity(&self, k: i64) -> bool {
        self.valuation.is_zero() && self.log.is_zero_mod(k)
    }

    /// Known p-adic valuation of the logarithm difference.
    pub fn log_residual(&self, other: &Self) -> i64 {
        (&self.log - &other.log).known_valuation()
    }

    pub fn render(&self) -> String {
        format!("(val={}, log={})", self.valuation, self.log.render())
    }
}

impl fmt::Display for UnitModRoots {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for UnitModRoots {
    type Output = UnitModRoots;
    fn add(self, other: UnitModRoots) -> UnitModRoots {
        &self + &other
    }
}

impl<'a> Add<&'a UnitModRoots> for &'a UnitModRoots {
    type Output = UnitModRoots;
    fn add(self, other: &'a UnitModRoots) -> UnitModRoots {
        UnitModRoots::new(&self.valuation + &other.valuation, &self.log + &other.log)
    }
}

impl Sub for UnitModRoots {
    type Output = UnitModRoots;
    fn sub(self, other: UnitModRoots) -> UnitModRoots {
        &self - &other
    }
}

impl<'a> Sub<&'a UnitModRoots> for &'a UnitModRoots {
    type Output = UnitModRoots;
    fn sub(self, other: &'a UnitModRoots) -> UnitModRoots {
        UnitModRoots::new(&self.valuation - &other.valuation, &self.log - &other.log)
    }
}

impl Neg for &UnitModRoots {
    type Output = UnitModRoots;
    fn neg(self) -> UnitModRoots {
        UnitModRoots::new(-&self.valuation, -&self.log)
    }
}

impl std::iter::Sum for UnitModRoots {
    fn sum<I: Iterator<Item = UnitModRoots>>(mut iter: I) -> UnitModRoots {
        let first = iter.next().expect("sum of an empty class list");
        iter.fold(first, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::padic::teichmuller;

    #[test]
    fn class_of_concrete_numbers() {
        let p = 7;
        let z = PadicNumber::from_rational(&rat(98, 3), p, 12).unwrap();
        let c = UnitModRoots::of(&z).unwrap();
        assert_eq!(c.valuation(), &int(2));
        // Multiplying by a root of unity leaves the class unchanged.
        let w = teichmuller(&PadicNumber::from_i64(3, p, 12).unwrap()).unwrap();
        let c2 = UnitModRoots::of(&(&z * &w)).unwrap();
        assert!(c.eq_mod(&c2, 12));
    }

    #[test]
    fn homomorphism() {
        let p = 5;
        let a = PadicNumber::from_rational(&rat(3, 50), p, 12).unwrap();
        let b = PadicNumber::from_rational(&rat(-11, 7), p, 12).unwrap();
        let lhs = UnitModRoots::of(&(&a * &b)).unwrap();
        let rhs = UnitModRoots::of(&a).unwrap() + UnitModRoots::of(&b).unwrap();
        assert!(lhs.eq_mod(&rhs, 12));
        let cube = UnitModRoots::of(&a.pow(3).unwrap()).unwrap();
        assert!(cube.eq_mod(&UnitModRoots::of(&a).unwrap().scale(3), 12));
    }
}
