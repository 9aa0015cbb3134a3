//! Integer polynomials in one variable, kept primitive with a positive
//! leading coefficient so that equality means equality of minimal
//! polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients in increasing degree, dividing
    /// out the content and fixing the sign of the leading term.
    pub fn primitive(coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let content = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if !content.is_zero() && !content.is_one() {
            for c in coeffs.iter_mut() {
                *c /= &content;
            }
        }
        if coeffs.last().is_some_and(Signed::is_negative) {
            for c in coeffs.iter_mut() {
                *c = -&*c;
            }
        }
        IntPoly { coeffs }
    }

    /// Clears denominators of a rational polynomial, then normalizes.
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect();
        IntPoly::primitive(ints)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::primitive(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Largest absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(k == 0 && first) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn normalization() {
        let p = IntPoly::from_i64(&[-10, 10, -2]);
        assert_eq!(p, IntPoly::from_i64(&[5, -5, 1]));
        assert_eq!(p.to_string(), "x^2 - 5x + 5");
        assert_eq!(IntPoly::from_i64(&[-3, 1]).to_string(), "x - 3");
        assert_eq!(IntPoly::from_rationals(&[rat(1, 2), rat(-1, 3)]).to_string(), "2x - 3");
        assert_eq!(IntPoly::from_i64(&[0, 0, 1]).to_string(), "x^2");
    }

    #[test]
    fn evaluation() {
        let p = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.eval(&rat(3, 1)), rat(7, 1));
        assert_eq!(p.height(), BigInt::from(2));
    }
}
