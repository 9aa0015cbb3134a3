use num_traits::{One, Zero};

use super::CyclotomicNumber;
use crate::arith::{admissible_residues, gcd, Rational};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

fn check_admissible(a: u64, m: u64) -> Result<()> {
    if m < 3 || a == 0 || 2 * a >= m || gcd(a, m) != 1 {
        return Err(Error::domain(format!(
            "need m >= 3, 0 < a < m/2 and gcd(a, m) = 1; got a = {a}, m = {m}"
        )));
    }
    Ok(())
}

/// The Stark unit 2 - ζ_m^a - ζ_m^{-a} = (2 sin(πa/m))² of σ_{±a/m}.
pub fn stark_unit_exact(a: u64, m: u64) -> Result<CyclotomicNumber> {
    check_admissible(a, m)?;
    let two = CyclotomicNumber::from_rational(m, Rational::from_integer(2.into()));
    let z = CyclotomicNumber::zeta_power(m, a as i64);
    let zi = CyclotomicNumber::zeta_power(m, -(a as i64));
    Ok(&(&two - &z) - &zi)
}

/// Representative 0 < a' < m/2 of ±ta mod m.
pub fn normalize_pm(ta: i64, m: u64) -> u64 {
    let r = ta.rem_euclid(m as i64) as u64;
    r.min(m - r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecExactEntry {
    pub a: u64,
    pub image: u64,
    pub holds: bool,
}

/// Compares τ_t(u(σ_a)) with u(σ_{ta}) for every admissible a.
pub fn rec_exact_check(m: u64, t: i64) -> Result<Vec<RecExactEntry>> {
    if gcd(t.rem_euclid(m as i64) as u64, m) != 1 {
        return Err(Error::domain(format!("gcd({t}, {m}) != 1")));
    }
    admissible_residues(m)
        .into_iter()
        .map(|a| {
            let image = normalize_pm(t * a as i64, m);
            let lhs = stark_unit_exact(a, m)?.galois_apply(t)?;
            let rhs = stark_unit_exact(image, m)?;
            Ok(RecExactEntry { a, image, holds: lhs == rhs })
        })
        .collect()
}

/// Minimal polynomial over Q, found as the first linear dependence among
/// 1, x, x², … in the power basis.
pub fn min_poly(x: &CyclotomicNumber, degree_bound: usize) -> Result<IntPoly> {
    if x.is_zero() {
        return Err(Error::Zero("minimal polynomial"));
    }
    let m = x.conductor();
    let mut powers = vec![CyclotomicNumber::one(m)];
    for d in 1..=degree_bound {
        let next = &powers[d - 1] * x;
        if let Some(c) = solve_in_span(&powers, &next) {
            let mut coeffs: Vec<Rational> = c.into_iter().map(|v| -v).collect();
            coeffs.push(Rational::one());
            return Ok(IntPoly::from_rationals(&coeffs));
        }
        powers.push(next);
    }
    Err(Error::domain(format!("minimal polynomial degree exceeds {degree_bound}")))
}

/// Coefficients c with Σ c_k basis_k = target, if any.
fn solve_in_span(basis: &[CyclotomicNumber], target: &CyclotomicNumber) -> Option<Vec<Rational>> {
    let n = basis.len();
    let rows = target.coeffs().len();
    // augmented matrix, one row per coordinate
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b.coeffs()[r].clone()).collect();
            row.push(target.coeffs()[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let inv = Rational::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..=n {
                    let sub = &f * &a[r][k];
                    a[i][k] -= sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = a[i][n].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::cyclotomic::cyclotomic_polynomial;

    #[test]
    fn stark_unit_values() {
        assert_eq!(stark_unit_exact(1, 3).unwrap().to_rational(), Some(int(3)));
        assert_eq!(stark_unit_exact(1, 4).unwrap().to_rational(), Some(int(2)));
        assert_eq!(stark_unit_exact(1, 6).unwrap().to_rational(), Some(int(1)));
        assert!(stark_unit_exact(2, 6).is_err());
        assert!(stark_unit_exact(3, 5).is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let u = stark_unit_exact(1, 5).unwrap();
        assert_eq!(min_poly(&u, 4).unwrap(), IntPoly::from_i64(&[5, -5, 1]));
        let three = CyclotomicNumber::from_rational(7, int(3));
        assert_eq!(min_poly(&three, 1).unwrap(), IntPoly::from_i64(&[-3, 1]));
        let z = CyclotomicNumber::zeta(5);
        assert_eq!(
            min_poly(&z, 4).unwrap(),
            IntPoly::primitive(cyclotomic_polynomial(5))
        );
        assert!(min_poly(&z, 3).is_err());
    }

    #[test]
    fn reciprocity_examples() {
        let r = rec_exact_check(5, 2).unwrap();
        assert_eq!(r[0], RecExactEntry { a: 1, image: 2, holds: true });
        for m in 3..=12u64 {
            for e in rec_exact_check(m, m as i64 - 1).unwrap() {
                assert!(e.holds && e.image == e.a);
            }
        }
    }

    #[test]
    fn embedding_matches_real_stark_unit() {
        use crate::real::{stark_unit_real_beta, RealContext};
        let c = RealContext::new(40);
        for (a, m) in [(1u64, 5u64), (2, 7), (3, 10), (5, 12)] {
            let exact = stark_unit_exact(a, m).unwrap().to_complex(c);
            let real = stark_unit_real_beta(a, m, c).unwrap();
            assert!((&exact.re - &real).abs_below_pow10(30), "a={a} m={m}");
            assert!(exact.im.abs_below_pow10(30));
            // totally positive
            for t in 1..m as i64 {
                if crate::arith::gcd(t as u64, m) == 1 {
                    assert!(stark_unit_exact(a, m).unwrap().embed(t, c).re.signum() > 0);
                }
            }
        }
    }
}
