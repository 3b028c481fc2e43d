use std::collections::HashMap;
use std::sync::Arc;

use eliminant::chow::{self, ChowFormResult, PluckerElement, PluckerRing};
use eliminant::resultant::ResultantDomain;
use eliminant::syntax::{eval_int, eval_poly, CoeffSyntax, Expr, ExprKind, Script, Span};
use eliminant::{
    discriminant, resultant, Algorithm, Error, HomSystem, Ideal, IntegerRing, Poly, PolyDomain, PolyRing, PrimeField,
    RationalField, Result, ResultantOptions, Ring, RingMap,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

type Q = RationalField;

/// Coefficient domains a script can be declared over. The Chow-form
/// commands work over the rationals; `to_rational` is how a script's
/// polynomials get there.
pub trait ScriptDomain: CoeffSyntax + ResultantDomain {
    fn to_rational(p: &Poly<Self>, target: &Arc<PolyRing<Q>>) -> Result<Poly<Q>>;
}

fn rational_only<T>() -> Result<T> {
    Err(Error::Unsupported("ideal and Chow-form commands need ZZ or QQ coefficients without parameters".into()))
}

impl ScriptDomain for IntegerRing {
    fn to_rational(p: &Poly<Self>, target: &Arc<PolyRing<Q>>) -> Result<Poly<Q>> {
        let terms = p.terms().iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect();
        Ok(Poly::from_terms(target, terms))
    }
}

impl ScriptDomain for RationalField {
    fn to_rational(p: &Poly<Self>, target: &Arc<PolyRing<Q>>) -> Result<Poly<Q>> {
        Ok(Poly::from_terms(target, p.terms().to_vec()))
    }
}

impl ScriptDomain for PrimeField {
    fn to_rational(_: &Poly<Self>, _: &Arc<PolyRing<Q>>) -> Result<Poly<Q>> {
        rational_only()
    }
}

impl<R: CoeffSyntax> ScriptDomain for PolyDomain<R>
where
    PolyDomain<R>: ResultantDomain,
{
    fn to_rational(_: &Poly<Self>, _: &Arc<PolyRing<Q>>) -> Result<Poly<Q>> {
        rational_only()
    }
}

/// Everything a script name can be bound to.
#[derive(Debug, Clone)]
pub enum Value<R: Ring> {
    Poly(Poly<R>),
    /// A resultant or discriminant: an element of the coefficient domain.
    Scalar(R::Elem),
    Int(BigInt),
    Bool(bool),
    Ideal(Ideal<Q>),
    Map(RingMap<Q>),
    Chow(ChowFormResult),
    Plucker(PluckerElement),
    /// A polynomial in Stiefel coordinates.
    Stiefel(Poly<Q>),
    Cayley { segre: Ideal<Q>, xresultant: Ideal<Q> },
}

impl<R: Ring> Value<R> {
    fn kind(&self) -> &'static str {
        match self {
            Value::Poly(_) => "a polynomial",
            Value::Scalar(_) => "a coefficient",
            Value::Int(_) => "an integer",
            Value::Bool(_) => "a truth value",
            Value::Ideal(_) => "an ideal",
            Value::Map(_) => "a ring map",
            Value::Chow(_) => "a Chow form",
            Value::Plucker(_) => "a Plücker element",
            Value::Stiefel(_) => "a Stiefel polynomial",
            Value::Cayley { .. } => "a Cayley-trick pair",
        }
    }
}

/// Algorithm bookkeeping of the last resultant computed.
#[derive(Debug, Clone, Default)]
pub struct Stats {
    pub algorithm: Option<Algorithm>,
    pub coordinate_changes: usize,
}

pub struct Session<R: ScriptDomain> {
    ring: Arc<PolyRing<R>>,
    rational: Arc<PolyRing<Q>>,
    values: HashMap<String, Value<R>>,
    opts: ResultantOptions,
    pub stats: Stats,
}

fn arity(span: Span, name: &str, args: &[Expr], want: &[usize]) -> Result<()> {
    if want.contains(&args.len()) {
        return Ok(());
    }
    let expected = match want {
        [n] => n.to_string(),
        _ => format!("{} or {}", want[0], want[want.len() - 1]),
    };
    Err(span.error(format!("`{name}` takes {expected} argument(s), got {}", args.len())))
}

fn contains_call(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Int(_) | ExprKind::Ident(_) => false,
        ExprKind::Call(..) => true,
        ExprKind::Neg(a) | ExprKind::Pow(a, _) => contains_call(a),
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) | ExprKind::Div(a, b) => {
            contains_call(a) || contains_call(b)
        }
    }
}

fn small(e: &Expr, what: &str) -> Result<usize> {
    eval_int(e)?.to_usize().ok_or_else(|| e.span.error(format!("{what} must be a small nonnegative integer")))
}

impl<R: ScriptDomain> Session<R> {
    pub fn new(ring: Arc<PolyRing<R>>, opts: ResultantOptions) -> Self {
        let rational = PolyRing::new(ring.vars().to_vec(), RationalField, ring.order().clone()).expect("same variables");
        Session { ring, rational, values: HashMap::new(), opts, stats: Stats::default() }
    }

    /// Evaluates the bindings in order, then the command.
    pub fn run(&mut self, script: &Script) -> Result<Option<Value<R>>> {
        for b in &script.bindings {
            let v = self.eval(&b.expr)?;
            self.values.insert(b.name.clone(), v);
        }
        script.command.as_ref().map(|c| self.eval(c)).transpose()
    }

    fn eval(&mut self, e: &Expr) -> Result<Value<R>> {
        match &e.kind {
            ExprKind::Ident(name) if self.ring.var_index(name).is_none() => {
                if let Some(v) = self.values.get(name) {
                    return Ok(v.clone());
                }
            }
            ExprKind::Call(name, args) => return self.call(e.span, name, args),
            _ => {}
        }
        if contains_call(e) {
            return Err(e.span.error("commands cannot be combined with arithmetic"));
        }
        self.poly(e).map(Value::Poly)
    }

    fn poly(&mut self, e: &Expr) -> Result<Poly<R>> {
        if let ExprKind::Call(..) = e.kind {
            return match self.eval(e)? {
                Value::Poly(p) => Ok(p),
                Value::Scalar(c) => Ok(self.ring.constant(c)),
                other => Err(e.span.error(format!("expected a polynomial, found {}", other.kind()))),
            };
        }
        let values = &self.values;
        let ring = &self.ring;
        eval_poly(ring, e, &|name| match values.get(name)? {
            Value::Poly(p) => Some(p.clone()),
            Value::Scalar(c) => Some(ring.constant(c.clone())),
            Value::Int(n) => Some(ring.constant(ring.coeffs().from_int(n))),
            _ => None,
        })
        .map_err(|err| match (&err, &e.kind) {
            (Error::Parse { .. }, ExprKind::Ident(n)) if values.contains_key(n) => {
                e.span.error(format!("`{n}` is {}, not a polynomial", values[n].kind()))
            }
            _ => err,
        })
    }

    fn rational_poly(&mut self, e: &Expr) -> Result<Poly<Q>> {
        R::to_rational(&self.poly(e)?, &self.rational)
    }

    fn expect<T>(&mut self, e: &Expr, what: &str, pick: impl FnOnce(Value<R>) -> Option<T>) -> Result<T> {
        let v = self.eval(e)?;
        let kind = v.kind();
        pick(v).ok_or_else(|| e.span.error(format!("expected {what}, found {kind}")))
    }

    fn ideal(&mut self, e: &Expr) -> Result<Ideal<Q>> {
        self.expect(e, "an ideal", |v| match v {
            Value::Ideal(i) => Some(i),
            _ => None,
        })
    }

    fn plucker(&mut self, e: &Expr) -> Result<(PluckerElement, Option<ChowFormResult>)> {
        self.expect(e, "a Plücker element", |v| match v {
            Value::Plucker(w) => Some((w, None)),
            Value::Chow(w) => Some((w.element.clone(), Some(w))),
            _ => None,
        })
    }

    fn cayley(&mut self, e: &Expr) -> Result<(Ideal<Q>, Ideal<Q>)> {
        self.expect(e, "a Cayley-trick pair", |v| match v {
            Value::Cayley { segre, xresultant } => Some((segre, xresultant)),
            _ => None,
        })
    }

    fn call(&mut self, span: Span, name: &str, args: &[Expr]) -> Result<Value<R>> {
        match name {
            "resultant" => {
                if args.is_empty() {
                    return Err(span.error("`resultant` needs one form per variable"));
                }
                let polys = args.iter().map(|a| self.poly(a)).collect::<Result<Vec<_>>>()?;
                let sys = HomSystem::new(polys)?;
                let out = resultant(&sys, &self.opts)?;
                self.stats = Stats { algorithm: Some(out.algorithm), coordinate_changes: out.coordinate_changes };
                Ok(Value::Scalar(out.value))
            }
            "discriminant" => {
                arity(span, name, args, &[1, 2])?;
                let f = self.poly(&args[0])?;
                let degree = args
                    .get(1)
                    .map(|d| small(d, "the degree").map(|d| d as u32))
                    .transpose()?;
                let out = discriminant(&f, degree, &self.opts)?;
                self.stats = Stats { algorithm: Some(out.algorithm), coordinate_changes: out.coordinate_changes };
                Ok(Value::Scalar(out.value))
            }
            "ideal" => {
                let gens = args.iter().map(|a| self.rational_poly(a)).collect::<Result<Vec<_>>>()?;
                Ok(Value::Ideal(Ideal::new(&self.rational, gens)?))
            }
            "veronese" => {
                arity(span, name, args, &[2])?;
                let k = small(&args[0], "k")?;
                let d = small(&args[1], "d")?;
                Ok(Value::Map(chow::veronese(k, d as u32)?))
            }
            "kernel" => {
                arity(span, name, args, &[1])?;
                let map = self.expect(&args[0], "a ring map", |v| match v {
                    Value::Map(m) => Some(m),
                    _ => None,
                })?;
                Ok(Value::Ideal(map.kernel()?))
            }
            "saturate" => {
                arity(span, name, args, &[1, 2])?;
                let i = self.ideal(&args[0])?;
                let j = match args.get(1) {
                    Some(a) => self.ideal(a)?,
                    None => Ideal::irrelevant(i.ring()),
                };
                Ok(Value::Ideal(i.saturate(&j)?))
            }
            "equal" => {
                arity(span, name, args, &[2])?;
                let a = self.eval(&args[0])?;
                let b = self.eval(&args[1])?;
                let same = match (&a, &b) {
                    (Value::Ideal(x), Value::Ideal(y)) => x.equals(y)?,
                    (Value::Poly(x), Value::Poly(y)) => x == y,
                    (Value::Scalar(x), Value::Scalar(y)) => x == y,
                    (Value::Stiefel(x), Value::Stiefel(y)) => x == y,
                    (Value::Plucker(x), Value::Plucker(y)) => x == y,
                    (Value::Chow(x), Value::Plucker(y)) | (Value::Plucker(y), Value::Chow(x)) => x.element == *y,
                    (Value::Chow(x), Value::Chow(y)) => x.element == y.element,
                    _ => return Err(span.error(format!("cannot compare {} with {}", a.kind(), b.kind()))),
                };
                Ok(Value::Bool(same))
            }
            "plucker" => {
                arity(span, name, args, &[3])?;
                let k = small(&args[0], "k")?;
                let n = small(&args[1], "n")?;
                let g = PluckerRing::new(k, n)?;
                let p = eval_poly(g.ring(), &args[2], &|_| None)?;
                Ok(Value::Plucker(g.element(p)?))
            }
            "chowform" => {
                arity(span, name, args, &[1])?;
                let i = self.ideal(&args[0])?;
                Ok(Value::Chow(chow::chow_form(&i)?))
            }
            "chowequations" => {
                arity(span, name, args, &[1])?;
                let (w, full) = self.plucker(&args[0])?;
                let eqs = match full {
                    Some(full) => chow::chow_equations(&full)?,
                    None => chow::chow_equations_in(&w, &self.chow_source(&w)?)?,
                };
                Ok(Value::Ideal(eqs))
            }
            "dualize" => {
                arity(span, name, args, &[1])?;
                let (w, _) = self.plucker(&args[0])?;
                Ok(Value::Plucker(chow::dualize(&w)?))
            }
            "stiefel" => {
                arity(span, name, args, &[1])?;
                let (w, _) = self.plucker(&args[0])?;
                Ok(Value::Stiefel(chow::from_plucker_to_stiefel(&w)?))
            }
            "cayleytrick" => {
                arity(span, name, args, &[1])?;
                let i = self.ideal(&args[0])?;
                let (segre, xresultant) = chow::cayley_trick(&i)?;
                Ok(Value::Cayley { segre, xresultant })
            }
            "segre" | "xresultant" => {
                arity(span, name, args, &[1])?;
                let (segre, xres) = self.cayley(&args[0])?;
                Ok(Value::Ideal(if name == "segre" { segre } else { xres }))
            }
            "dualvariety" => {
                arity(span, name, args, &[1])?;
                let i = self.ideal(&args[0])?;
                Ok(Value::Ideal(chow::dual_variety(&i)?))
            }
            "degree" | "dim" => {
                arity(span, name, args, &[1])?;
                let i = self.ideal(&args[0])?;
                let v = if name == "degree" {
                    i.degree()?.map(BigInt::from)
                } else {
                    i.krull_dim()?.map(BigInt::from)
                };
                Ok(Value::Int(v.unwrap_or_else(|| BigInt::from(-1))))
            }
            other => Err(span.error(format!("unknown command `{other}`"))),
        }
    }

    /// The ring of `P^n` a bare Plücker element lives over: the script's
    /// ring when it has `n + 1` variables, otherwise `x0..xn`.
    fn chow_source(&self, w: &PluckerElement) -> Result<Arc<PolyRing<Q>>> {
        let n = w.plucker_ring().n();
        if self.rational.nvars() == n + 1 {
            Ok(self.rational.clone())
        } else {
            Ok(PolyRing::grevlex((0..=n).map(|i| format!("x{i}")), RationalField))
        }
    }
}
