//! Exact coefficient domains.
//!
//! A [`Ring`] is a runtime ring object: it owns whatever context is needed
//! (a modulus, a parameter ring) and performs arithmetic on plain element
//! values. All domains here are integral domains with exact division.

mod integer;
mod polydomain;
mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;

pub use integer::IntegerRing;
pub use polydomain::PolyDomain;
pub use prime::PrimeField;
pub use rational::RationalField;
pub(crate) use rational::make_primitive;

/// Descriptor of a coefficient domain, independent of the element type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CoeffDomain {
    Integers,
    Rationals,
    PrimeField(u64),
    Polynomial {
        base: Box<CoeffDomain>,
        params: Vec<String>,
    },
}

impl CoeffDomain {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffDomain::Integers | CoeffDomain::Rationals => 0,
            CoeffDomain::PrimeField(p) => *p,
            CoeffDomain::Polynomial { base, .. } => base.characteristic(),
        }
    }

    /// Nesting depth: 1 for a base domain, 2 for one parameter block, ...
    pub fn depth(&self) -> usize {
        match self {
            CoeffDomain::Polynomial { base, .. } => 1 + base.depth(),
            _ => 1,
        }
    }
}

impl fmt::Display for CoeffDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffDomain::Integers => write!(f, "ZZ"),
            CoeffDomain::Rationals => write!(f, "QQ"),
            CoeffDomain::PrimeField(p) => write!(f, "GF({p})"),
            CoeffDomain::Polynomial { base, params } => write!(f, "{base}[{}]", params.join(",")),
        }
    }
}

/// An exact commutative integral domain.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `a / b` when `b` divides `a` exactly, `None` otherwise (including `b = 0`).
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    fn is_field(&self) -> bool;
    fn domain(&self) -> CoeffDomain;

    fn fmt_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// True when the element prints as a sum and needs parentheses as a factor.
    fn is_compound(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// True when the printed form starts with a minus sign that can be
    /// pulled out in front of a product.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    /// Size measure used for pivot selection (smaller is cheaper).
    fn weight(&self, _a: &Self::Elem) -> usize {
        1
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    fn mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.mul(a, b);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn display<'a>(&'a self, a: &'a Self::Elem) -> ElemDisplay<'a, Self> {
        ElemDisplay { ring: self, elem: a }
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.exact_div(&self.one(), a)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.exact_div(a, b)
    }

    /// Multipliers `(s, t)` with `s * lc_f == t * lc_g`, used when cancelling a
    /// leading term of `f` against `g`. `s = None` stands for 1.
    fn cancel_factors(&self, lc_f: &Self::Elem, lc_g: &Self::Elem) -> (Option<Self::Elem>, Self::Elem) {
        (None, self.div(lc_f, lc_g).expect("nonzero leading coefficient"))
    }

    /// Factor bringing a coefficient sequence (leading coefficient first) to
    /// its preferred representative in Gröbner computations: monic over
    /// generic fields. `None` when the sequence is already normalized.
    fn normalizer<'a>(&self, mut coeffs: impl Iterator<Item = &'a Self::Elem>) -> Option<Self::Elem>
    where
        Self::Elem: 'a,
    {
        let lc = coeffs.next()?;
        if self.is_one(lc) {
            None
        } else {
            self.inv(lc)
        }
    }
}

pub struct ElemDisplay<'a, R: Ring + ?Sized> {
    ring: &'a R,
    elem: &'a R::Elem,
}

impl<R: Ring> fmt::Display for ElemDisplay<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.fmt_elem(self.elem, f)
    }
}
