//! Exact coefficient fields: the rationals and prime fields F_p.

use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use rand::Rng;
use std::fmt::Debug;

/// An exact field of coefficients. Every operation is closed-form; there is
/// no rounding anywhere.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    /// 0 for the rationals, p for F_p.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse. Panics on zero; callers guard.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// num/den as a field element; den must be invertible.
    fn from_ratio(&self, num: i64, den: i64) -> Result<Self::Elem>;

    /// Uniformly random element.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    /// Render for reports and polynomial text syntax.
    fn fmt_elem(&self, a: &Self::Elem) -> String;
}

/// The field of rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: i64, den: i64) -> Result<BigRational> {
        if den == 0 {
            return Err(Error::precondition("zero denominator"));
        }
        Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        // Small numerators keep random rational fixtures readable.
        let n: i64 = rng.random_range(-20..=20);
        BigRational::from_integer(BigInt::from(n))
    }

    fn fmt_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.is_negative() && (-a).denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// The prime field F_p for a prime p < 2^31, elements stored reduced mod p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1 % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (*a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i64) as u64
    }

    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn from_ratio(&self, num: i64, den: i64) -> Result<u64> {
        let d = self.from_i64(den);
        if d == 0 {
            return Err(Error::precondition(format!(
                "denominator {den} is zero in F_{}",
                self.p
            )));
        }
        Ok(self.mul(&self.from_i64(num), &self.inv(&d)))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }

    fn fmt_elem(&self, a: &u64) -> String {
        // Balanced representatives read better: -1 instead of 32002.
        if *a > self.p / 2 {
            format!("-{}", self.p - *a)
        } else {
            a.to_string()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn fp_axioms_exact() {
        let f = PrimeField::new(32003).unwrap();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
            assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
            assert_eq!(
                f.mul(&a, &f.add(&b, &c)),
                f.add(&f.mul(&a, &b), &f.mul(&a, &c))
            );
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a)), f.one());
            }
        }
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(32001).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_inverse_and_ratio() {
        let q = Rationals;
        let half = q.from_ratio(1, 2).unwrap();
        assert!(q.is_one(&q.mul(&half, &q.from_i64(2))));
        assert_eq!(q.fmt_elem(&half), "1/2");
        assert_eq!(q.fmt_elem(&q.from_i64(-3)), "-3");
    }
}
