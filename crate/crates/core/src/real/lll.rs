//! Integral LLL reduction (δ = 3/4) with exact Gram–Schmidt data.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn round_div(num: &BigInt, den: &BigInt) -> BigInt {
    // den > 0
    let (q, r) = num.div_mod_floor(den);
    if (r << 1u32) >= *den {
        q + 1
    } else {
        q
    }
}

struct State {
    b: Vec<Vec<BigInt>>,
    /// d[0] = 1, d[i] = Gram determinant of the first i vectors.
    d: Vec<BigInt>,
    /// lam[k][j] for j < k, both 1-indexed.
    lam: Vec<Vec<BigInt>>,
}

impl State {
    fn red(&mut self, k: usize, l: usize) {
        let two_lam = self.lam[k][l].abs() << 1u32;
        if two_lam <= self.d[l] {
            return;
        }
        let q = round_div(&self.lam[k][l], &self.d[l]);
        let bl = self.b[l - 1].clone();
        for (x, y) in self.b[k - 1].iter_mut().zip(&bl) {
            *x -= &q * y;
        }
        let dl = self.d[l].clone();
        self.lam[k][l] -= &q * dl;
        for i in 1..l {
            let v = &q * &self.lam[l][i];
            self.lam[k][i] -= v;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        self.b.swap(k - 1, k - 2);
        for j in 1..k - 1 {
            let t = self.lam[k][j].clone();
            self.lam[k][j] = std::mem::replace(&mut self.lam[k - 1][j], t);
        }
        let lambda = self.lam[k][k - 1].clone();
        let big_b = (&self.d[k - 2] * &self.d[k] + &lambda * &lambda) / &self.d[k - 1];
        for i in k + 1..=kmax {
            let t = self.lam[i][k].clone();
            self.lam[i][k] = (&self.d[k] * &self.lam[i][k - 1] - &lambda * &t) / &self.d[k - 1];
            self.lam[i][k - 1] = (&big_b * &t + &lambda * &self.lam[i][k]) / &self.d[k];
        }
        self.d[k - 1] = big_b;
    }
}

/// LLL-reduces linearly independent integer row vectors.
pub fn lll_reduce(basis: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n = basis.len();
    if n < 2 {
        return basis;
    }
    let mut s = State {
        d: vec![BigInt::zero(); n + 1],
        lam: vec![vec![BigInt::zero(); n + 1]; n + 1],
        b: basis,
    };
    s.d[0] = BigInt::from(1);
    s.d[1] = dot(&s.b[0], &s.b[0]);
    let mut k = 2;
    let mut kmax = 1;
    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut u = dot(&s.b[k - 1], &s.b[j - 1]);
                for i in 1..j {
                    u = (&s.d[i] * &u - &s.lam[k][i] * &s.lam[j][i]) / &s.d[i - 1];
                }
                if j < k {
                    s.lam[k][j] = u;
                } else {
                    assert!(!u.is_zero(), "LLL input vectors are dependent");
                    s.d[k] = u;
                }
            }
        }
        loop {
            s.red(k, k - 1);
            let lhs = (&s.d[k] * &s.d[k - 2]) << 2u32;
            let rhs = &s.d[k - 1] * &s.d[k - 1] * 3 - ((&s.lam[k][k - 1] * &s.lam[k][k - 1]) << 2u32);
            if lhs < rhs {
                s.swap(k, kmax);
                k = (k - 1).max(2);
            } else {
                break;
            }
        }
        for l in (1..k - 1).rev() {
            s.red(k, l);
        }
        k += 1;
    }
    s.b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn classic_example() {
        // Basis from the standard textbook example; reduced first vector has norm² 3.
        let out = lll_reduce(vec![v(&[1, 1, 1]), v(&[-1, 0, 2]), v(&[3, 5, 6])]);
        let norms: Vec<BigInt> = out.iter().map(|b| dot(b, b)).collect();
        assert!(norms[0] <= BigInt::from(3));
    }

    #[test]
    fn finds_integer_relation() {
        // 3·1 + 1·1000 - 1·1003 = 0, scaled into the last column
        let out = lll_reduce(vec![v(&[1, 0, 0, 1000]), v(&[0, 1, 0, 1_000_000]), v(&[0, 0, 1, 1_003_000])]);
        assert!(out[0][3].is_zero());
        let c: Vec<i64> = out[0][..3].iter().map(|x| i64::try_from(x).unwrap()).collect();
        assert!(c == [3, 1, -1] || c == [-3, -1, 1], "{c:?}");
    }
}
