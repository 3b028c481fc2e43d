use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{CoeffDomain, Ring};

/// The integers, backed by `BigInt`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.sign() == Sign::NoSign
    }
    fn is_one(&self, a: &BigInt) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }
    fn mul_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a *= b;
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::Integers
    }
    fn fmt_elem(&self, a: &BigInt, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn is_negative(&self, a: &BigInt) -> bool {
        a.is_negative()
    }
    fn weight(&self, a: &BigInt) -> usize {
        a.bits() as usize
    }
}
