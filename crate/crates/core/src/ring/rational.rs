use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{CoeffDomain, Field, Ring};

/// The rational numbers, backed by `BigRational`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn add_assign(&self, a: &mut BigRational, b: &BigRational) {
        *a += b;
    }
    fn exact_div(&self, a: &BigRational, b: &BigRational) -> Option<BigRational> {
        (!b.is_zero()).then(|| a / b)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::Rationals
    }
    fn fmt_elem(&self, a: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }
    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }
    fn weight(&self, a: &BigRational) -> usize {
        (a.numer().bits() + a.denom().bits()) as usize
    }
}

impl Field for RationalField {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    // Gröbner computations over QQ keep integer-primitive polynomials, so
    // cancellation is fraction free.
    fn cancel_factors(&self, lc_f: &BigRational, lc_g: &BigRational) -> (Option<BigRational>, BigRational) {
        if lc_f.is_integer() && lc_g.is_integer() {
            let (a, b) = (lc_f.numer(), lc_g.numer());
            let g = a.gcd(b);
            let mut s = b / &g;
            let mut t = a / &g;
            if s.is_negative() {
                s = -s;
                t = -t;
            }
            if s.is_one() {
                (None, BigRational::from_integer(t))
            } else {
                (Some(BigRational::from_integer(s)), BigRational::from_integer(t))
            }
        } else {
            (None, lc_f / lc_g)
        }
    }

    fn normalizer<'a>(&self, coeffs: impl Iterator<Item = &'a BigRational>) -> Option<BigRational> {
        let coeffs: Vec<&BigRational> = coeffs.collect();
        let scale = primitive_scale(&coeffs)?;
        (!scale.is_one()).then_some(scale)
    }
}

/// The factor that turns rationals into coprime integers with a positive
/// first entry; `None` for an empty or all-zero list.
pub(crate) fn primitive_scale(coeffs: &[&BigRational]) -> Option<BigRational> {
    let first = coeffs.iter().find(|c| !c.is_zero())?;
    let mut lcm = BigInt::one();
    for c in coeffs {
        if !c.denom().is_one() {
            lcm = lcm.lcm(c.denom());
        }
    }
    let mut g = BigInt::zero();
    for c in coeffs {
        let num = if c.denom().is_one() { c.numer() * &lcm } else { c.numer() * (&lcm / c.denom()) };
        g = g.gcd(&num);
        if g.is_one() {
            break;
        }
    }
    if first.is_negative() {
        g = -g;
    }
    Some(BigRational::new(lcm, g))
}

/// Scale rationals in place to coprime integers with a positive first entry.
pub(crate) fn make_primitive(coeffs: &mut [BigRational]) {
    let refs: Vec<&BigRational> = coeffs.iter().collect();
    if let Some(scale) = primitive_scale(&refs) {
        if !scale.is_one() {
            for c in coeffs.iter_mut() {
                *c = &*c * &scale;
            }
        }
    }
}
