use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{CoeffDomain, Field, Ring};

/// The prime field `GF(p)` for a word-sized prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Returns `None` unless `p` is a prime below 2^32.
    pub fn new(p: u64) -> Option<Self> {
        (p >= 2 && p < (1 << 32) && is_prime(p)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn inv_mod(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let (mut t, mut new_t) = (0i128, 1i128);
        let (mut r, mut new_r) = (self.p as i128, a as i128);
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        Some(t.rem_euclid(self.p as i128) as u64)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, n: &BigInt) -> u64 {
        let r = n % BigInt::from(self.p);
        let r = r.to_i64().unwrap();
        r.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn exact_div(&self, a: &u64, b: &u64) -> Option<u64> {
        self.inv_mod(*b).map(|i| a * i % self.p)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::PrimeField(self.p)
    }
    fn fmt_elem(&self, a: &u64, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
}

impl Field for PrimeField {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(7).is_some());
        assert!(PrimeField::new(9).is_none());
        assert!(PrimeField::new(1).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            let i = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &i), 1);
        }
        assert_eq!(f.from_i64(-1), 100);
    }
}
