use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::{CoeffDomain, Ring};
use crate::poly::{Poly, PolyRing};

/// Polynomials in parameter variables, used as a coefficient domain
/// (`ZZ[t,u]` in `ZZ[t,u][w,x,y,z]`).
#[derive(Debug, Clone)]
pub struct PolyDomain<R: Ring> {
    ring: Arc<PolyRing<R>>,
}

impl<R: Ring> PartialEq for PolyDomain<R> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }
}

impl<R: Ring> PolyDomain<R> {
    pub fn new(ring: Arc<PolyRing<R>>) -> Self {
        PolyDomain { ring }
    }

    pub fn params(&self) -> &Arc<PolyRing<R>> {
        &self.ring
    }

    pub fn base(&self) -> &R {
        self.ring.coeffs()
    }
}

impl<R: Ring> Ring for PolyDomain<R> {
    type Elem = Poly<R>;

    fn zero(&self) -> Poly<R> {
        self.ring.zero()
    }
    fn one(&self) -> Poly<R> {
        self.ring.one()
    }
    fn from_int(&self, n: &BigInt) -> Poly<R> {
        self.ring.constant(self.ring.coeffs().from_int(n))
    }
    fn is_zero(&self, a: &Poly<R>) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a + b
    }
    fn sub(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a - b
    }
    fn neg(&self, a: &Poly<R>) -> Poly<R> {
        -a
    }
    fn mul(&self, a: &Poly<R>, b: &Poly<R>) -> Poly<R> {
        a * b
    }
    fn exact_div(&self, a: &Poly<R>, b: &Poly<R>) -> Option<Poly<R>> {
        if b.is_zero() {
            return None;
        }
        if b.is_constant() {
            return a.div_coeffs(&b.constant_term());
        }
        a.exact_div(b)
    }
    fn is_field(&self) -> bool {
        false
    }
    fn domain(&self) -> CoeffDomain {
        CoeffDomain::Polynomial {
            base: Box::new(self.ring.coeffs().domain()),
            params: self.ring.vars().to_vec(),
        }
    }
    fn fmt_elem(&self, a: &Poly<R>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{a}")
    }
    fn is_compound(&self, a: &Poly<R>) -> bool {
        a.len() > 1 || a.terms().first().is_some_and(|(m, c)| m.is_one() && self.base().is_compound(c))
    }
    fn is_negative(&self, a: &Poly<R>) -> bool {
        a.len() == 1 && self.base().is_negative(&a.terms()[0].1)
    }
    fn weight(&self, a: &Poly<R>) -> usize {
        a.terms().iter().map(|(_, c)| 1 + self.base().weight(c)).sum()
    }
}
