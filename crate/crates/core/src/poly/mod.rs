//! Sparse distributed multivariate polynomials.

mod display;
mod monomial;
mod polynomial;
mod subst;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ring::Ring;

pub use monomial::{Exponents, Monomial, MonomialOrder};
pub use polynomial::{Homogeneity, Poly};
pub(crate) use polynomial::merge_terms;
pub use subst::{linear_change, random_unimodular, Subst};
pub(crate) use subst::random_unimodular_with;

/// A polynomial ring context: ordered variable names, a coefficient domain
/// and a monomial order.
#[derive(Debug, Clone)]
pub struct PolyRing<R: Ring> {
    vars: Vec<String>,
    coeffs: R,
    order: MonomialOrder,
}

impl<R: Ring> PartialEq for PolyRing<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order && self.coeffs == other.coeffs
    }
}

impl<R: Ring> PolyRing<R> {
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        coeffs: R,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        if !order.validate(vars.len()) {
            return Err(Error::InvalidInput(format!("order {order:?} does not fit {} variables", vars.len())));
        }
        Ok(Arc::new(PolyRing { vars, coeffs, order }))
    }

    /// A grevlex ring; panics on duplicate names.
    pub fn grevlex<S: Into<String>>(vars: impl IntoIterator<Item = S>, coeffs: R) -> Arc<Self> {
        Self::new(vars, coeffs, MonomialOrder::GrevLex).expect("valid ring")
    }

    /// Variables named `prefix0 .. prefix{n-1}`.
    pub fn indexed(prefix: &str, n: usize, coeffs: R) -> Arc<Self> {
        Self::grevlex((0..n).map(|i| format!("{prefix}{i}")), coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn coeffs(&self) -> &R {
        &self.coeffs
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<Self>> {
        Self::new(self.vars.clone(), self.coeffs.clone(), order)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(self: &Arc<Self>) -> Poly<R> {
        Poly::zero(self)
    }

    pub fn one(self: &Arc<Self>) -> Poly<R> {
        Poly::constant(self, self.coeffs.one())
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly<R> {
        Poly::from_sorted_terms(self, vec![(Monomial::var(self.nvars(), i, 1), self.coeffs.one())])
    }

    pub fn var_named(self: &Arc<Self>, name: &str) -> Result<Poly<R>> {
        let i = self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        Ok(self.var(i))
    }

    pub fn constant(self: &Arc<Self>, c: R::Elem) -> Poly<R> {
        Poly::constant(self, c)
    }

    pub fn int(self: &Arc<Self>, n: i64) -> Poly<R> {
        Poly::constant(self, self.coeffs.from_i64(n))
    }

    pub fn monomial(self: &Arc<Self>, m: Monomial, c: R::Elem) -> Poly<R> {
        Poly::from_terms(self, vec![(m, c)])
    }
}

pub(crate) fn same_ring<R: Ring>(a: &Arc<PolyRing<R>>, b: &Arc<PolyRing<R>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
