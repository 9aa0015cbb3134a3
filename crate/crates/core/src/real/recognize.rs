//! Recognizing a numerically known number as a root of a small integer
//! polynomial. A success is evidence, not proof; a failure says nothing.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::lll::lll_reduce;
use super::{BigComplex, BigReal};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Found(IntPoly),
    NotFound,
}

impl Recognition {
    pub fn polynomial(&self) -> Option<&IntPoly> {
        match self {
            Recognition::Found(p) => Some(p),
            Recognition::NotFound => None,
        }
    }
}

/// Precision heuristic: D ≥ 3 · degree · (decimal digits of the height bound).
pub fn required_digits(degree_bound: usize, height_bound: &BigInt) -> u32 {
    3 * degree_bound as u32 * height_bound.abs().to_string().len() as u32
}

fn scaled(x: &BigReal, scale: &BigInt) -> BigInt {
    x.mul_bigint(scale).round()
}

fn eval_complex(coeffs: &[BigInt], x: &BigComplex) -> BigComplex {
    let ctx = x.re.ctx();
    let mut acc = BigComplex::from_real(BigReal::zero(ctx));
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + &BigComplex::from_real(BigReal::from_bigint(c, ctx));
    }
    acc
}

/// Searches degrees 1..=degree_bound in turn; the first relation that is
/// short enough and small enough at x is returned.
pub fn recognize_algebraic_complex(
    x: &BigComplex,
    degree_bound: usize,
    height_bound: &BigInt,
) -> Result<Recognition> {
    let ctx = x.re.ctx();
    let digits = ctx.digits();
    let need = required_digits(degree_bound, height_bound);
    if digits < need {
        return Err(Error::Refused(format!(
            "{digits} digits cannot certify degree {degree_bound} with height {height_bound}; need {need}"
        )));
    }
    let scale = BigInt::from(10).pow(digits);
    let with_imag = !x.im.abs_below_pow10(digits);
    let mut powers = vec![BigComplex::from_real(BigReal::one(ctx))];
    for _ in 0..degree_bound {
        let next = powers.last().expect("non-empty") * x;
        powers.push(next);
    }
    for deg in 1..=degree_bound {
        let n = deg + 1;
        let basis: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row = vec![BigInt::zero(); n];
                row[i] = BigInt::from(1);
                row.push(scaled(&powers[i].re, &scale));
                if with_imag {
                    row.push(scaled(&powers[i].im, &scale));
                }
                row
            })
            .collect();
        let reduced = lll_reduce(basis);
        let coeffs: Vec<BigInt> = reduced[0][..n].to_vec();
        if coeffs[deg].is_zero() || coeffs.iter().any(|c| c.abs() > *height_bound) {
            continue;
        }
        if eval_complex(&coeffs, x).abs().abs_below_pow10(digits / 2) {
            return Ok(Recognition::Found(IntPoly::primitive(coeffs)));
        }
    }
    Ok(Recognition::NotFound)
}

pub fn recognize_algebraic(x: &BigReal, degree_bound: usize, height_bound: &BigInt) -> Result<Recognition> {
    recognize_algebraic_complex(&BigComplex::from_real(x.clone()), degree_bound, height_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real::RealContext;

    #[test]
    fn square_root_of_two() {
        let c = RealContext::new(50);
        let x = BigReal::from_int(2, c).sqrt();
        let got = recognize_algebraic(&x, 2, &BigInt::from(100)).unwrap();
        assert_eq!(got, Recognition::Found(IntPoly::from_i64(&[-2, 0, 1])));
    }

    #[test]
    fn pi_is_not_recognized() {
        let c = RealContext::new(100);
        let got = recognize_algebraic(&BigReal::pi(c), 4, &BigInt::from(1_000_000)).unwrap();
        assert_eq!(got, Recognition::NotFound);
    }

    #[test]
    fn refuses_without_precision() {
        let c = RealContext::new(20);
        assert!(recognize_algebraic(&BigReal::pi(c), 4, &BigInt::from(1_000_000)).is_err());
    }

    #[test]
    fn complex_root_of_unity() {
        let c = RealContext::new(40);
        let theta = BigReal::pi(c).mul_int(2).div_int(3);
        let z = BigComplex::cis(&theta);
        let got = recognize_algebraic_complex(&z, 2, &BigInt::from(10)).unwrap();
        assert_eq!(got, Recognition::Found(IntPoly::from_i64(&[1, 1, 1])));
    }
}
