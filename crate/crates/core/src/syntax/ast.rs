use std::fmt;

use num_bigint::BigInt;

use super::lexer::Span;

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

/// Equality ignores source positions.
impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Call(String, Vec<Expr>),
}

impl Expr {
    pub(crate) fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    fn precedence(&self) -> u8 {
        match &self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 1,
            ExprKind::Mul(..) | ExprKind::Div(..) => 2,
            ExprKind::Neg(_) => 3,
            ExprKind::Pow(..) => 4,
            ExprKind::Int(_) | ExprKind::Ident(_) | ExprKind::Call(..) => 5,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Int(n) => write!(f, "{n}"),
            ExprKind::Ident(s) => f.write_str(s),
            ExprKind::Neg(a) => {
                f.write_str("-")?;
                a.fmt_child(f, 3)
            }
            ExprKind::Add(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" + ")?;
                b.fmt_child(f, 2)
            }
            ExprKind::Sub(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" - ")?;
                b.fmt_child(f, 2)
            }
            ExprKind::Mul(a, b) => {
                a.fmt_child(f, 2)?;
                f.write_str("*")?;
                b.fmt_child(f, 3)
            }
            ExprKind::Div(a, b) => {
                a.fmt_child(f, 2)?;
                f.write_str("/")?;
                b.fmt_child(f, 3)
            }
            ExprKind::Pow(a, e) => {
                a.fmt_child(f, 5)?;
                write!(f, "^{e}")
            }
            ExprKind::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Base coefficient domain of a ring declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseDomain {
    Integers,
    Rationals,
    PrimeField(u64),
}

impl fmt::Display for BaseDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseDomain::Integers => f.write_str("ZZ"),
            BaseDomain::Rationals => f.write_str("QQ"),
            BaseDomain::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// `ring ZZ[t,u][w,x,y,z];` — an optional parameter block, then the main
/// variables.
#[derive(Debug, Clone, PartialEq)]
pub struct RingDecl {
    pub base: BaseDomain,
    pub params: Option<Vec<String>>,
    pub vars: Vec<String>,
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ring {}", self.base)?;
        if let Some(p) = &self.params {
            write!(f, "[{}]", p.join(","))?;
        }
        write!(f, "[{}];", self.vars.join(","))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Binding {
    pub name: String,
    pub expr: Expr,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Script {
    pub ring: RingDecl,
    pub bindings: Vec<Binding>,
    pub command: Option<Expr>,
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.ring)?;
        for b in &self.bindings {
            writeln!(f, "{} = {};", b.name, b.expr)?;
        }
        if let Some(c) = &self.command {
            writeln!(f, "{c};")?;
        }
        Ok(())
    }
}
