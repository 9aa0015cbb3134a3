//! Brute-force Jacobi sums over F_p and their image in Q_p.

use num_bigint::BigInt;

use crate::arith::{is_prime, least_primitive_root, Rational};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::padic::{teichmuller, PadicNumber};

fn check(p: u64, m: u64, i: u64, j: u64) -> Result<()> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadPrime(p));
    }
    if m < 2 || !(p - 1).is_multiple_of(m) {
        return Err(Error::domain(format!("m = {m} does not divide p - 1 = {}", p - 1)));
    }
    if i == 0 || j == 0 || i >= m || j >= m || i + j == m {
        return Err(Error::domain(format!("inadmissible (i, j) = ({i}, {j}) for m = {m}")));
    }
    Ok(())
}

/// Multiplicity of each ζ_m^k in J(χ^i, χ^j) = Σ_{x ≠ 0,1} χ^i(x) χ^j(1-x),
/// with χ(g) = ζ_m for the least primitive root g.
fn exponent_counts(p: u64, m: u64, i: u64, j: u64) -> Vec<i64> {
    let g = least_primitive_root(p);
    let mut index = vec![0u64; p as usize];
    let mut x = 1u64;
    for k in 0..p - 1 {
        index[x as usize] = k;
        x = x * g % p;
    }
    let mut counts = vec![0i64; m as usize];
    for x in 2..p {
        let e = (i * index[x as usize] + j * index[(p + 1 - x) as usize]) % m;
        counts[e as usize] += 1;
    }
    counts
}

pub fn jacobi_sum(p: u64, m: u64, i: u64, j: u64) -> Result<CyclotomicNumber> {
    check(p, m, i, j)?;
    Ok(CyclotomicNumber::from_exponent_counts(m, &exponent_counts(p, m, i, j)))
}

/// The image of ζ_m under the embedding used for Jacobi sums:
/// ω(g)^{(p-1)/m}.
pub fn embedded_root_of_unity(p: u64, m: u64, prec: u32) -> Result<PadicNumber> {
    let g = PadicNumber::from_i64(least_primitive_root(p) as i64, p, prec)?;
    teichmuller(&g)?.pow(((p - 1) / m) as i64)
}

/// Evaluates an element of Q(ζ_m) at a given p-adic image of ζ_m.
pub fn embed_cyclotomic(x: &CyclotomicNumber, zeta: &PadicNumber, prec: u32) -> Result<PadicNumber> {
    let p = zeta.prime();
    let mut acc = PadicNumber::zero_to(p, prec as i64);
    let mut power = PadicNumber::one(p, prec);
    for c in x.coeffs() {
        if *c != Rational::from_integer(BigInt::from(0)) {
            acc = &acc + &(&PadicNumber::from_rational(c, p, prec + 4)? * &power);
        }
        power = &power * zeta;
    }
    Ok(acc)
}

/// J(χ^i, χ^j) embedded in Q_p via ζ_m ↦ ω(g)^{(p-1)/m}.
pub fn jacobi_sum_padic(p: u64, m: u64, i: u64, j: u64, prec: u32) -> Result<PadicNumber> {
    check(p, m, i, j)?;
    let zeta = embedded_root_of_unity(p, m, prec + 2)?;
    let counts = exponent_counts(p, m, i, j);
    let mut acc = PadicNumber::zero_to(p, prec as i64 + 2);
    let mut power = PadicNumber::one(p, prec + 2);
    for c in counts {
        if c != 0 {
            acc = &acc + &(&PadicNumber::from_i64(c, p, prec + 2)? * &power);
        }
        power = &power * &zeta;
    }
    Ok(acc.truncate_abs(prec as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn norm_is_p() {
        for (p, m) in [(7u64, 3u64), (13, 4), (11, 5), (13, 3)] {
            for i in 1..m {
                for j in 1..m {
                    if i + j == m {
                        continue;
                    }
                    let jac = jacobi_sum(p, m, i, j).unwrap();
                    let norm = &jac * &jac.conj();
                    assert_eq!(norm.to_rational(), Some(int(p as i64)), "p={p} m={m} ({i},{j})");
                    assert_eq!(jac, jacobi_sum(p, m, j, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn embedding_agrees_with_direct_sum() {
        let (p, m) = (13u64, 4u64);
        let zeta = embedded_root_of_unity(p, m, 10).unwrap();
        let jac = jacobi_sum(p, m, 1, 2).unwrap();
        let a = embed_cyclotomic(&jac, &zeta, 10).unwrap();
        let b = jacobi_sum_padic(p, m, 1, 2, 10).unwrap();
        assert!(a.eq_mod(&b, 10));
    }

    #[test]
    fn rejects_bad_conductor() {
        assert!(jacobi_sum(7, 4, 1, 1).is_err());
        assert!(jacobi_sum(7, 3, 1, 2).is_err());
    }
}
