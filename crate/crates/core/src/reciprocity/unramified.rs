//! The unramified extension of Q_p of degree f, modelled as
//! (Z/p^n)[x]/(g) for a monic g that is irreducible mod p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{mod_inverse, ord_int, pow_p, prime_factors, Rational};
use crate::error::{Error, Result};
use crate::padic::log_truncation_bound;

// ------------------------------------------------------------ F_p[x] helpers

fn trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_mulmod(a: &[u64], b: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    fp_rem(prod, g, p)
}

/// Remainder mod a monic g.
fn fp_rem(mut a: Vec<u64>, g: &[u64], p: u64) -> Vec<u64> {
    let d = g.len() - 1;
    trim(&mut a);
    while a.len() > d {
        let lead = *a.last().expect("non-empty");
        let shift = a.len() - 1 - d;
        for (k, &c) in g.iter().enumerate() {
            a[shift + k] = (a[shift + k] + (p - lead) * c % p) % p;
        }
        trim(&mut a);
    }
    a
}

fn fp_powmod(base: &[u64], mut e: BigInt, g: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = fp_rem(base.to_vec(), g, p);
    while e.is_positive() {
        if e.is_odd() {
            result = fp_mulmod(&result, &b, g, p);
        }
        b = fp_mulmod(&b, &b, g, p);
        e >>= 1;
    }
    fp_rem(result, g, p)
}

fn fp_inv(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

fn fp_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // make b monic, then a mod b
        let inv = fp_inv(*b.last().expect("non-empty"), p);
        for c in b.iter_mut() {
            *c = *c * inv % p;
        }
        let r = fp_rem(a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or: g of degree f is irreducible iff gcd(g, x^{p^i} - x) = 1 for
/// every i ≤ f/2.
fn fp_is_irreducible(g: &[u64], p: u64) -> bool {
    let f = g.len() - 1;
    if f == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    let mut xp = x.clone();
    for _ in 0..f / 2 {
        xp = fp_powmod(&xp, BigInt::from(p), g, p);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        if fp_gcd(g.to_vec(), diff, p).len() > 1 {
            return false;
        }
    }
    true
}

/// The first monic irreducible polynomial of degree f over F_p in the
/// order of its coefficient vectors read as base-p numbers.
pub fn first_irreducible(p: u64, f: u32) -> Vec<u64> {
    let f = f as usize;
    let mut counter = vec![0u64; f];
    loop {
        let mut g = counter.clone();
        g.push(1);
        if (f == 1 || g[0] != 0) && fp_is_irreducible(&g, p) {
            return g;
        }
        let mut k = 0;
        loop {
            counter[k] += 1;
            if counter[k] < p {
                break;
            }
            counter[k] = 0;
            k += 1;
            assert!(k < f, "no irreducible polynomial of degree {f} over F_{p}");
        }
    }
}

// ------------------------------------------------------- the extension ring

/// (Z/p^n)[x]/(g) with g monic and irreducible mod p.
#[derive(Clone, Debug)]
pub struct Unramified {
    p: u64,
    f: usize,
    n: u32,
    modulus: BigInt,
    g: Vec<BigInt>,
    g_mod_p: Vec<u64>,
}

/// An element as f coefficients in [0, p^n).
pub type Elem = Vec<BigInt>;

impl Unramified {
    pub fn new(p: u64, f: u32, n: u32) -> Self {
        let g_mod_p = first_irreducible(p, f);
        Unramified {
            p,
            f: f as usize,
            n,
            modulus: pow_p(p, n),
            g: g_mod_p.iter().map(|&c| BigInt::from(c)).collect(),
            g_mod_p,
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.f
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    /// q = p^f, the size of the residue field.
    pub fn residue_size(&self) -> BigInt {
        BigInt::from(self.p).pow(self.f as u32)
    }

    pub fn zero(&self) -> Elem {
        vec![BigInt::zero(); self.f]
    }

    pub fn one(&self) -> Elem {
        self.constant(&BigInt::one())
    }

    pub fn constant(&self, c: &BigInt) -> Elem {
        let mut e = self.zero();
        e[0] = c.mod_floor(&self.modulus);
        e
    }

    pub fn from_rational(&self, q: &Rational) -> Result<Elem> {
        let den = mod_inverse(q.denom(), &self.modulus)
            .ok_or_else(|| Error::domain(format!("{q} is not p-integral")))?;
        Ok(self.constant(&(q.numer() * den)))
    }

    /// The class of x.
    pub fn generator(&self) -> Elem {
        let mut e = self.zero();
        if self.f == 1 {
            // x ≡ -g_0 when g = x + g_0
            e[0] = (-&self.g[0]).mod_floor(&self.modulus);
        } else {
            e[1] = BigInt::one();
        }
        e
    }

    fn reduce(&self, mut wide: Vec<BigInt>) -> Elem {
        let f = self.f;
        for k in (f..wide.len()).rev() {
            let lead = std::mem::take(&mut wide[k]);
            if lead.is_zero() {
                continue;
            }
            for (i, c) in self.g[..f].iter().enumerate() {
                wide[k - f + i] -= &lead * c;
            }
        }
        wide.truncate(f);
        wide.resize(f, BigInt::zero());
        wide.iter().map(|c| c.mod_floor(&self.modulus)).collect()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| (x + y).mod_floor(&self.modulus)).collect()
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| (x - y).mod_floor(&self.modulus)).collect()
    }

    pub fn scale(&self, a: &Elem, c: &BigInt) -> Elem {
        a.iter().map(|x| (x * c).mod_floor(&self.modulus)).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut wide = vec![BigInt::zero(); 2 * self.f - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                wide[i + j] += x * y;
            }
        }
        self.reduce(wide)
    }

    pub fn pow(&self, a: &Elem, e: &BigInt) -> Elem {
        assert!(!e.is_negative(), "negative exponent");
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e.clone();
        while e.is_positive() {
            if e.is_odd() {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Minimum coefficient valuation; n for zero.
    pub fn valuation(&self, a: &Elem) -> u32 {
        a.iter()
            .filter(|c| !c.is_zero())
            .map(|c| ord_int(c, self.p))
            .min()
            .unwrap_or(self.n)
            .min(self.n)
    }

    fn mod_p(&self, a: &Elem) -> Vec<u64> {
        let p = BigInt::from(self.p);
        let mut v: Vec<u64> = a.iter().map(|c| c.mod_floor(&p).to_u64().expect("small")).collect();
        trim(&mut v);
        v
    }

    fn lift_mod_p(&self, a: &[u64]) -> Elem {
        let mut e = self.zero();
        for (i, &c) in a.iter().enumerate() {
            e[i] = BigInt::from(c);
        }
        e
    }

    /// Inverse of a unit by Newton iteration from the residue-field inverse.
    pub fn inverse(&self, a: &Elem) -> Result<Elem> {
        let r = self.mod_p(a);
        if r.is_empty() {
            return Err(Error::NotUnit(self.valuation(a) as i64));
        }
        let q = self.residue_size();
        let inv0 = fp_powmod(&r, q - 2u32, &self.g_mod_p, self.p);
        let mut x = self.lift_mod_p(&inv0);
        let two = self.constant(&BigInt::from(2));
        let mut correct = 1u32;
        while correct < self.n {
            let ax = self.mul(a, &x);
            x = self.mul(&x, &self.sub(&two, &ax));
            correct *= 2;
        }
        Ok(x)
    }

    /// A primitive m-th root of unity with m | q - 1: the Teichmüller lift of
    /// the first residue-field element (in coefficient order) of order m.
    pub fn root_of_unity(&self, m: u64) -> Result<Elem> {
        let q = self.residue_size();
        let qm1 = &q - 1u32;
        if !(&qm1 % m).is_zero() {
            return Err(Error::domain(format!("{m} does not divide p^f - 1 = {qm1}")));
        }
        let cofactor = &qm1 / m;
        let primes = prime_factors(m);
        let size = q.to_u64().unwrap_or(u64::MAX);
        for idx in 1..size {
            let mut v = Vec::with_capacity(self.f);
            let mut k = idx;
            for _ in 0..self.f {
                v.push(k % self.p);
                k /= self.p;
            }
            trim(&mut v);
            let z = fp_powmod(&v, cofactor.clone(), &self.g_mod_p, self.p);
            let is_one = |w: &Vec<u64>| w.len() == 1 && w[0] == 1;
            if is_one(&z) && m > 1 {
                continue;
            }
            let primitive = primes.iter().all(|&l| {
                let w = fp_powmod(&z, BigInt::from(m / l), &self.g_mod_p, self.p);
                !is_one(&w)
            });
            if primitive {
                return Ok(self.teichmuller(&self.lift_mod_p(&z)));
            }
        }
        Err(Error::domain(format!("no element of order {m} found")))
    }

    /// ω(a): iterate y ↦ y^q until stable.
    pub fn teichmuller(&self, a: &Elem) -> Elem {
        let q = self.residue_size();
        let mut y = a.clone();
        loop {
            let next = self.pow(&y, &q);
            if next == y {
                return y;
            }
            y = next;
        }
    }

    fn eval_poly(&self, coeffs: &[BigInt], at: &Elem) -> Elem {
        coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, at), &self.constant(c))
        })
    }

    /// The image of x under the Frobenius automorphism: the root of g
    /// congruent to x^p mod p, by Newton iteration.
    pub fn frobenius_of_generator(&self) -> Result<Elem> {
        let x = self.generator();
        let mut y = self.pow(&x, &BigInt::from(self.p));
        let deriv: Vec<BigInt> = self.g.iter().enumerate().skip(1).map(|(k, c)| c * k).collect();
        let mut correct = 1u32;
        while correct < self.n {
            let step = self.mul(&self.eval_poly(&self.g, &y), &self.inverse(&self.eval_poly(&deriv, &y))?);
            y = self.sub(&y, &step);
            correct *= 2;
        }
        Ok(y)
    }

    /// Applies the ring automorphism sending x to `x_image` coefficientwise.
    pub fn apply_automorphism(&self, a: &Elem, x_image: &Elem) -> Elem {
        self.eval_poly(a, x_image)
    }

    /// Iwasawa-style logarithm of a unit: log(a^{q-1}) / (q-1), which
    /// annihilates the roots of unity. Valid to O(p^n) less a few digits lost
    /// to divisions by p in the series; callers carry guard digits.
    pub fn log_unit(&self, a: &Elem) -> Result<Elem> {
        if self.valuation(a) != 0 || self.mod_p(a).is_empty() {
            return Err(Error::NotUnit(self.valuation(a) as i64));
        }
        let q = self.residue_size();
        let principal = self.pow(a, &(&q - 1u32));
        let w = self.sub(&principal, &self.one());
        let k_max = log_truncation_bound(self.p, self.n);
        let mut acc = self.zero();
        let mut power = self.one();
        for k in 1..=k_max as u64 {
            power = self.mul(&power, &w);
            let (s, cof) = (ord_int(&BigInt::from(k), self.p), k / self.p.pow(ord_int(&BigInt::from(k), self.p)));
            let ps = pow_p(self.p, s);
            let inv = mod_inverse(&BigInt::from(cof), &self.modulus).expect("unit");
            // power is divisible by p^k ≥ p^s coefficientwise
            let term: Elem = power.iter().map(|c| ((c / &ps) * &inv).mod_floor(&self.modulus)).collect();
            acc = if k % 2 == 1 { self.add(&acc, &term) } else { self.sub(&acc, &term) };
        }
        let inv_qm1 = mod_inverse(&(&q - 1u32), &self.modulus).expect("q - 1 is a unit");
        Ok(self.scale(&acc, &inv_qm1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibles() {
        assert_eq!(first_irreducible(3, 2), vec![1, 0, 1]); // x² + 1
        assert_eq!(first_irreducible(5, 1), vec![0, 1]);
        // x^2 - 2 is irreducible over F_5 while x^2 - 1 is not
        assert!(fp_is_irreducible(&[3, 0, 1], 5));
        assert!(!fp_is_irreducible(&[4, 0, 1], 5));
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        let ext = Unramified::new(3, 4, 10);
        let z = ext.root_of_unity(5).unwrap();
        assert_eq!(ext.pow(&z, &BigInt::from(5)), ext.one());
        assert_ne!(z, ext.one());
        // Φ_5(ζ) = 0
        let mut s = ext.zero();
        for k in 0..5 {
            s = ext.add(&s, &ext.pow(&z, &BigInt::from(k)));
        }
        assert_eq!(s, ext.zero());
    }

    #[test]
    fn frobenius_is_a_ring_map_raising_roots_of_unity() {
        let ext = Unramified::new(5, 3, 10);
        let phi = ext.frobenius_of_generator().unwrap();
        let z = ext.root_of_unity(31).unwrap();
        let image = ext.apply_automorphism(&z, &phi);
        assert_eq!(image, ext.pow(&z, &BigInt::from(5)));
        // φ^f = id
        let mut x = ext.generator();
        for _ in 0..3 {
            x = ext.apply_automorphism(&x, &phi);
        }
        assert_eq!(x, ext.generator());
    }

    #[test]
    fn log_kills_torsion_and_is_additive() {
        let ext = Unramified::new(7, 2, 12);
        let z = ext.root_of_unity(8).unwrap();
        assert_eq!(ext.log_unit(&z).unwrap(), ext.zero());
        let a = ext.add(&ext.generator(), &ext.constant(&BigInt::from(3)));
        let b = ext.add(&ext.mul(&ext.generator(), &ext.generator()), &ext.generator());
        let la = ext.log_unit(&a).unwrap();
        let lb = ext.log_unit(&b).unwrap();
        let lab = ext.log_unit(&ext.mul(&a, &b)).unwrap();
        let diff = ext.sub(&lab, &ext.add(&la, &lb));
        assert!(ext.valuation(&diff) >= 10);
        let inv = ext.inverse(&a).unwrap();
        assert_eq!(ext.mul(&a, &inv), ext.one());
    }
}
