//! The pointed beta B_p⟨α,β⟩ = Γ_p(⟨α⟩)Γ_p(⟨β⟩)/Γ_p(⟨α+β⟩) and the plain
//! beta B_p(α,β) = Γ_p(α)Γ_p(β)/Γ_p(α+β).

use num_traits::{One, Zero};

use super::extended::{gamma_ext_rational, lift};
use super::morita::gamma_morita;
use crate::arith::{frac_pointed, ord_rat, Rational};
use crate::error::{Error, Result};
use crate::padic::{PadicNumber, UnitModRoots};

/// The carry ε(r, s) = ⟨r⟩ + ⟨s⟩ - ⟨r + s⟩ ∈ {0, 1}.
pub fn epsilon(r: &Rational, s: &Rational) -> Result<u8> {
    let sum = frac_pointed(r) + frac_pointed(s);
    if sum.is_integer() {
        return Err(Error::domain(format!("⟨{r}⟩ + ⟨{s}⟩ is an integer")));
    }
    Ok(if sum < Rational::one() { 0 } else { 1 })
}

#[derive(Clone, Debug)]
pub enum BetaValue {
    /// All three arguments in Z_p: a concrete unit.
    Unit(PadicNumber),
    /// All three arguments outside Z_p: a class mod μ∞.
    Class(UnitModRoots),
}

impl BetaValue {
    pub fn class(&self) -> Result<UnitModRoots> {
        match self {
            BetaValue::Unit(x) => UnitModRoots::of(x),
            BetaValue::Class(c) => Ok(c.clone()),
        }
    }

    pub fn unit(&self) -> Option<&PadicNumber> {
        match self {
            BetaValue::Unit(x) => Some(x),
            BetaValue::Class(_) => None,
        }
    }

    pub fn render(&self) -> String {
        match self {
            BetaValue::Unit(x) => x.render(),
            BetaValue::Class(c) => c.render(),
        }
    }
}

fn in_zp(q: &Rational, p: u64) -> bool {
    q.is_zero() || ord_rat(q, p) >= 0
}

pub fn beta_p_pointed(alpha: &Rational, beta: &Rational, p: u64, prec: u32) -> Result<BetaValue> {
    let args = [frac_pointed(alpha), frac_pointed(beta), frac_pointed(&(alpha + beta))];
    let inside = args.iter().filter(|q| in_zp(q, p)).count();
    match inside {
        3 => {
            let g = |q: &Rational| gamma_morita(&lift(q, p, prec)?, prec);
            let num = &g(&args[0])? * &g(&args[1])?;
            Ok(BetaValue::Unit(&num / &g(&args[2])?))
        }
        0 => {
            let g = |q: &Rational| gamma_ext_rational(q, p, prec);
            Ok(BetaValue::Class(&(g(&args[0])? + g(&args[1])?) - &g(&args[2])?))
        }
        _ => Err(Error::domain(format!(
            "mixed arguments ⟨{alpha}⟩, ⟨{beta}⟩, ⟨{}⟩: some lie in Z_p and some do not",
            alpha + beta
        ))),
    }
}

pub fn beta_p(alpha: &Rational, beta: &Rational, p: u64, prec: u32) -> Result<UnitModRoots> {
    let sum = alpha + beta;
    for q in [alpha, beta, &sum] {
        if in_zp(q, p) {
            return Err(Error::domain(format!(
                "{q} lies in Z_p; the plain beta needs all arguments outside Z_p"
            )));
        }
    }
    let g = |q: &Rational| gamma_ext_rational(q, p, prec);
    Ok(&(g(alpha)? + g(beta)?) - &g(&sum)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::padic::star;

    #[test]
    fn carries() {
        assert_eq!(epsilon(&rat(1, 3), &rat(1, 3)).unwrap(), 0);
        assert_eq!(epsilon(&rat(2, 3), &rat(2, 3)).unwrap(), 1);
        assert_eq!(epsilon(&rat(1, 5), &rat(3, 5)).unwrap(), 0);
        assert!(epsilon(&rat(1, 3), &rat(2, 3)).is_err());
    }

    #[test]
    fn pointed_product_is_a_sign() {
        let a = beta_p_pointed(&rat(1, 3), &rat(1, 3), 5, 12).unwrap();
        let b = beta_p_pointed(&rat(2, 3), &rat(2, 3), 5, 12).unwrap();
        let prod = a.unit().unwrap() * b.unit().unwrap();
        let one = PadicNumber::one(5, 12);
        assert!(prod == one || prod == -one);
    }

    #[test]
    fn plain_beta_reflection() {
        let p = 5;
        let lhs = beta_p(&rat(1, 25), &rat(2, 25), p, 10).unwrap()
            + beta_p(&rat(24, 25), &rat(23, 25), p, 10).unwrap();
        let z = PadicNumber::from_rational(&rat(25, 22), p, 14).unwrap();
        let rhs = UnitModRoots::of(&star(&z).unwrap()).unwrap();
        assert!(lhs.eq_mod(&rhs, 10));
    }

    #[test]
    fn mixed_domains_rejected() {
        assert!(beta_p_pointed(&rat(1, 5), &rat(1, 3), 5, 8).is_err());
        assert!(beta_p(&rat(1, 5), &rat(4, 5), 5, 8).is_err());
    }
}
