use num_traits::ToPrimitive;

use super::ast::{BaseDomain, Binding, Expr, ExprKind, RingDecl, Script};
use super::lexer::{tokenize, Span, Tok};
use crate::error::Result;

pub(crate) struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(src)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn advance(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &Tok, what: &str) -> Result<Span> {
        if self.peek() == tok {
            Ok(self.advance().1)
        } else {
            Err(self.span().error(format!("expected {what}, found {}", self.peek().describe())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Span)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let span = self.advance().1;
                Ok((s, span))
            }
            other => Err(self.span().error(format!("expected {what}, found {}", other.describe()))),
        }
    }

    pub(crate) fn at_eof(&self) -> bool {
        *self.peek() == Tok::Eof
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        if self.at_eof() {
            Ok(())
        } else {
            Err(self.span().error(format!("unexpected {}", self.peek().describe())))
        }
    }

    pub(crate) fn script(&mut self) -> Result<Script> {
        let ring = self.ring_decl()?;
        let mut bindings: Vec<Binding> = Vec::new();
        let mut command = None;
        while !self.at_eof() {
            if command.is_some() {
                return Err(self.span().error("the command must be the last statement"));
            }
            let is_binding = matches!(self.peek(), Tok::Ident(_)) && self.toks.get(self.pos + 1).map(|t| &t.0) == Some(&Tok::Eq);
            if is_binding {
                let (name, span) = self.ident("a name")?;
                if ring.vars.contains(&name) || ring.params.as_ref().is_some_and(|p| p.contains(&name)) {
                    return Err(span.error(format!("`{name}` is a ring variable and cannot be rebound")));
                }
                self.advance();
                let expr = self.expr()?;
                self.expect(&Tok::Semi, "`;`")?;
                bindings.retain(|b| b.name != name);
                bindings.push(Binding { name, expr });
            } else {
                let expr = self.expr()?;
                if !matches!(expr.kind, ExprKind::Call(..)) {
                    return Err(expr.span.error("a command must be a call such as `resultant(F,G,H)`"));
                }
                if !self.eat(&Tok::Semi) && !self.at_eof() {
                    return Err(self.span().error(format!("expected `;`, found {}", self.peek().describe())));
                }
                command = Some(expr);
            }
        }
        Ok(Script { ring, bindings, command })
    }

    fn ring_decl(&mut self) -> Result<RingDecl> {
        let (kw, span) = self.ident("`ring`")?;
        if kw != "ring" {
            return Err(span.error("a script starts with a ring declaration such as `ring QQ[x,y,z];`"));
        }
        let (name, span) = self.ident("a coefficient domain (ZZ, QQ or GF(p))")?;
        let base = match name.as_str() {
            "ZZ" => BaseDomain::Integers,
            "QQ" => BaseDomain::Rationals,
            "GF" => {
                self.expect(&Tok::LParen, "`(`")?;
                let (tok, pspan) = self.advance();
                let Tok::Int(p) = tok else {
                    return Err(pspan.error("expected a prime modulus"));
                };
                let p = p
                    .to_u64()
                    .filter(|&p| crate::ring::PrimeField::new(p).is_some())
                    .ok_or_else(|| pspan.error(format!("{p} is not a prime below 2^32")))?;
                self.expect(&Tok::RParen, "`)`")?;
                BaseDomain::PrimeField(p)
            }
            other => return Err(span.error(format!("unknown coefficient domain `{other}`"))),
        };
        let mut blocks: Vec<(Vec<String>, Span)> = Vec::new();
        while *self.peek() == Tok::LBracket {
            let open = self.advance().1;
            let mut names = Vec::new();
            loop {
                let (v, vspan) = self.ident("a variable name")?;
                if names.contains(&v) || blocks.iter().any(|(b, _)| b.contains(&v)) {
                    return Err(vspan.error(format!("variable `{v}` declared twice")));
                }
                names.push(v);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
            self.expect(&Tok::RBracket, "`]`")?;
            blocks.push((names, open));
        }
        self.expect(&Tok::Semi, "`;`")?;
        match blocks.len() {
            0 => Err(span.error("the ring needs a variable block such as `[x,y,z]`")),
            1 => Ok(RingDecl { base, params: None, vars: blocks.pop().unwrap().0 }),
            2 => {
                let vars = blocks.pop().unwrap().0;
                let params = blocks.pop().unwrap().0;
                Ok(RingDecl { base, params: Some(params), vars })
            }
            _ => Err(blocks[2].1.error("at most one parameter block is supported")),
        }
    }

    pub(crate) fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            let span = self.advance().1;
            let rhs = self.term()?;
            lhs = Expr::new(kind(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let kind: fn(Box<Expr>, Box<Expr>) -> ExprKind = match self.peek() {
                Tok::Star => ExprKind::Mul,
                Tok::Slash => ExprKind::Div,
                Tok::Ident(_) | Tok::Int(_) | Tok::LParen => {
                    return Err(self.span().error("missing operator (write `*` for multiplication)"));
                }
                _ => return Ok(lhs),
            };
            let span = self.advance().1;
            let rhs = self.unary()?;
            lhs = Expr::new(kind(Box::new(lhs), Box::new(rhs)), span);
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            let span = self.advance().1;
            let inner = self.unary()?;
            return Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let caret = self.advance().1;
        let Tok::Int(e) = self.peek().clone() else {
            return Err(caret.error("`^` must be followed by a nonnegative integer exponent"));
        };
        self.advance();
        let e = e.to_u32().filter(|&e| e <= u16::MAX as u32).ok_or_else(|| caret.error("exponent too large"))?;
        if *self.peek() == Tok::Caret {
            return Err(self.span().error("chained powers need parentheses"));
        }
        Ok(Expr::new(ExprKind::Pow(Box::new(base), e), caret))
    }

    fn atom(&mut self) -> Result<Expr> {
        let (tok, span) = self.advance();
        match tok {
            Tok::Int(n) => Ok(Expr::new(ExprKind::Int(n), span)),
            Tok::Ident(name) => {
                if !self.eat(&Tok::LParen) {
                    return Ok(Expr::new(ExprKind::Ident(name), span));
                }
                let mut args = Vec::new();
                if !self.eat(&Tok::RParen) {
                    loop {
                        args.push(self.expr()?);
                        if self.eat(&Tok::RParen) {
                            break;
                        }
                        self.expect(&Tok::Comma, "`,` or `)`")?;
                    }
                }
                Ok(Expr::new(ExprKind::Call(name, args), span))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            other => Err(span.error(format!("expected an expression, found {}", other.describe()))),
        }
    }
}
