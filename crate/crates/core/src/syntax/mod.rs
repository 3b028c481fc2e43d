//! Text syntax: batch scripts, polynomial expressions and their evaluation.
//!
//! ```text
//! ring ZZ[t,u][w,x,y,z];
//! F = w^6 + x^6 + y^6 + w*x*y^4;
//! G = w^6 + x^6 + y^6 + z^6;
//! discriminant(t*F + u*G);
//! ```
//!
//! Multiplication is always explicit; `#` starts a comment.

mod ast;
mod lexer;
mod parser;

use std::sync::Arc;

use num_bigint::BigInt;

pub use ast::{BaseDomain, Binding, Expr, ExprKind, RingDecl, Script};
pub use lexer::Span;

use crate::error::Result;
use crate::poly::{Poly, PolyRing};
use crate::ring::{IntegerRing, PolyDomain, PrimeField, RationalField, Ring};

pub fn parse_script(src: &str) -> Result<Script> {
    parser::Parser::new(src)?.script()
}

/// Parses a single expression spanning the whole input.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = parser::Parser::new(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Coefficient domains whose elements can be named in source text.
pub trait CoeffSyntax: Ring {
    /// The element denoted by a parameter name, if the domain has one.
    fn parameter(&self, _name: &str) -> Option<Self::Elem> {
        None
    }
}

impl CoeffSyntax for IntegerRing {}
impl CoeffSyntax for RationalField {}
impl CoeffSyntax for PrimeField {}

impl<R: CoeffSyntax> CoeffSyntax for PolyDomain<R> {
    fn parameter(&self, name: &str) -> Option<Poly<R>> {
        let params = self.params();
        match params.var_index(name) {
            Some(i) => Some(params.var(i)),
            None => self.base().parameter(name).map(|c| params.constant(c)),
        }
    }
}

/// Evaluates `expr` to a polynomial in `ring`. Identifiers resolve to ring
/// variables, then coefficient parameters, then `lookup`.
pub fn eval_poly<R: CoeffSyntax>(
    ring: &Arc<PolyRing<R>>,
    expr: &Expr,
    lookup: &dyn Fn(&str) -> Option<Poly<R>>,
) -> Result<Poly<R>> {
    let k = ring.coeffs();
    let rec = |e: &Expr| eval_poly(ring, e, lookup);
    Ok(match &expr.kind {
        ExprKind::Int(n) => ring.constant(k.from_int(n)),
        ExprKind::Ident(name) => {
            if let Some(i) = ring.var_index(name) {
                ring.var(i)
            } else if let Some(c) = k.parameter(name) {
                ring.constant(c)
            } else if let Some(p) = lookup(name) {
                p
            } else {
                return Err(expr.span.error(format!("undeclared identifier `{name}`")));
            }
        }
        ExprKind::Neg(a) => -rec(a)?,
        ExprKind::Add(a, b) => &rec(a)? + &rec(b)?,
        ExprKind::Sub(a, b) => &rec(a)? - &rec(b)?,
        ExprKind::Mul(a, b) => &rec(a)? * &rec(b)?,
        ExprKind::Div(a, b) => {
            let num = rec(a)?;
            let den = rec(b)?;
            if !den.is_constant() || den.is_zero() {
                return Err(expr.span.error("division is only by nonzero constants"));
            }
            num.div_coeffs(&den.constant_term())
                .ok_or_else(|| expr.span.error(format!("division is not exact over {}", k.domain())))?
        }
        ExprKind::Pow(a, e) => rec(a)?.pow(*e),
        ExprKind::Call(name, _) => {
            return Err(expr.span.error(format!("`{name}(...)` is not a polynomial expression")));
        }
    })
}

/// Parses and evaluates a polynomial in `ring`.
pub fn parse_poly<R: CoeffSyntax>(ring: &Arc<PolyRing<R>>, src: &str) -> Result<Poly<R>> {
    eval_poly(ring, &parse_expr(src)?, &|_| None)
}

/// Integer value of a constant expression (used for command arguments).
pub fn eval_int(expr: &Expr) -> Result<BigInt> {
    match &expr.kind {
        ExprKind::Int(n) => Ok(n.clone()),
        ExprKind::Neg(a) => Ok(-eval_int(a)?),
        _ => Err(expr.span.error("expected an integer")),
    }
}

#[cfg(test)]
mod tests;
