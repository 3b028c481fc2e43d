use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::monomial::Monomial;
use super::{same_ring, PolyRing};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// A polynomial in canonical form: terms strictly decreasing in the ring's
/// monomial order, no zero coefficients.
#[derive(Clone, Debug)]
pub struct Poly<R: Ring> {
    ring: Arc<PolyRing<R>>,
    terms: Vec<(Monomial, R::Elem)>,
}

/// Result of a homogeneity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    Any,
    Degree(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    /// Homogeneous of degree `d` (the zero polynomial qualifies).
    pub fn admits(self, d: u32) -> bool {
        match self {
            Homogeneity::Any => true,
            Homogeneity::Degree(e) => e == d,
            Homogeneity::Inhomogeneous => false,
        }
    }
}

impl<R: Ring> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && same_ring(&self.ring, &other.ring)
    }
}

impl<R: Ring> Eq for Poly<R> {}

impl<R: Ring> Hash for Poly<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<R: Ring> Poly<R> {
    pub fn zero(ring: &Arc<PolyRing<R>>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<R>>, c: R::Elem) -> Self {
        if ring.coeffs().is_zero(&c) {
            return Self::zero(ring);
        }
        Poly {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates and
    /// drops zeros.
    pub fn from_terms(ring: &Arc<PolyRing<R>>, terms: Vec<(Monomial, R::Elem)>) -> Self {
        let r = ring.coeffs();
        let mut map: HashMap<Monomial, R::Elem> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match map.get_mut(&m) {
                Some(acc) => r.add_assign(acc, &c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !r.is_zero(c)).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts the caller that terms are sorted, distinct and nonzero.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<R>>, terms: Vec<(Monomial, R::Elem)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<R>> {
        &self.ring
    }

    pub fn coeff_ring(&self) -> &R {
        self.ring.coeffs()
    }

    pub fn terms(&self) -> &[(Monomial, R::Elem)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, R::Elem)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, R::Elem)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&R::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant term (possibly zero).
    pub fn constant_term(&self) -> R::Elem {
        self.coeff_of(&Monomial::one(self.ring.nvars()))
    }

    pub fn coeff_of(&self, m: &Monomial) -> R::Elem {
        match self.terms.binary_search_by(|(t, _)| self.ring.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.coeff_ring().zero(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var) as u32).max().unwrap_or(0)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => Homogeneity::Any,
            Some(d) => {
                if it.all(|e| e == d) {
                    Homogeneity::Degree(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Variables occurring in the polynomial.
    pub fn support(&self) -> Vec<bool> {
        let mut s = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                s[i] = true;
            }
        }
        s
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "[{}] vs [{}]",
                self.ring.vars().join(","),
                other.ring.vars().join(",")
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_scaled(other, None, None))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let minus = self.coeff_ring().neg(&self.coeff_ring().one());
        Ok(self.add_scaled(other, Some(&minus), None))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * m * other` by sorted merge; `None` means 1.
    pub fn add_scaled(&self, other: &Self, c: Option<&R::Elem>, m: Option<&Monomial>) -> Self {
        let terms = merge_terms(&self.ring, &self.terms, &other.terms, None, c, m);
        Poly::from_sorted_terms(&self.ring, terms)
    }

    /// `s * self - t * m * other` where `None` for `s` means 1.
    pub(crate) fn cancel_with(&self, s: Option<&R::Elem>, t: &R::Elem, m: &Monomial, other: &Self) -> Self {
        let r = self.coeff_ring();
        let minus_t = r.neg(t);
        let terms = merge_terms(&self.ring, &self.terms, &other.terms, s, Some(&minus_t), Some(m));
        Poly::from_sorted_terms(&self.ring, terms)
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (short, long) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if short.len() == 1 {
            let (m, c) = &short.terms[0];
            return long.mul_term(m, c);
        }
        let r = self.coeff_ring();
        let mut map: HashMap<Monomial, R::Elem> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &short.terms {
            for (mb, cb) in &long.terms {
                let m = ma.mul(mb);
                let c = r.mul(ca, cb);
                match map.get_mut(&m) {
                    Some(acc) => r.add_assign(acc, &c),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !r.is_zero(c)).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Poly::from_sorted_terms(&self.ring, terms)
    }

    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let r = self.coeff_ring();
        if r.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, d)| {
                let p = r.mul(d, c);
                (!r.is_zero(&p)).then(|| (t.mul(m), p))
            })
            .collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        self.mul_term(&Monomial::one(self.ring.nvars()), c)
    }

    pub fn neg(&self) -> Self {
        let r = self.coeff_ring();
        Poly::from_sorted_terms(&self.ring, self.terms.iter().map(|(m, c)| (m.clone(), r.neg(c))).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divides every coefficient exactly by `c`.
    pub fn div_coeffs(&self, c: &R::Elem) -> Option<Self> {
        let r = self.coeff_ring();
        let mut terms = Vec::with_capacity(self.len());
        for (m, d) in &self.terms {
            terms.push((m.clone(), r.exact_div(d, c)?));
        }
        Some(Poly::from_sorted_terms(&self.ring, terms))
    }

    pub fn map_coeffs(&self, f: impl Fn(&R::Elem) -> R::Elem) -> Self {
        let r = self.coeff_ring();
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let d = f(c);
                (!r.is_zero(&d)).then(|| (m.clone(), d))
            })
            .collect();
        Poly::from_sorted_terms(&self.ring, terms)
    }

    /// Reinterprets the polynomial in a ring with the same variables and
    /// coefficients but a possibly different order.
    pub fn reorder(&self, target: &Arc<PolyRing<R>>) -> Self {
        debug_assert_eq!(target.vars(), self.ring.vars());
        if same_ring(&self.ring, target) {
            return Poly {
                ring: target.clone(),
                terms: self.terms.clone(),
            };
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.cmp(&b.0, &a.0));
        Poly::from_sorted_terms(target, terms)
    }

    /// Moves the polynomial into `target` over the same coefficients, sending
    /// variable `i` to variable `var_map[i]` of `target`.
    pub fn embed(&self, target: &Arc<PolyRing<R>>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n).exps().to_vec();
                for (i, &x) in m.exps().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Moves the polynomial into `target` by matching variable names.
    pub fn embed_by_name(&self, target: &Arc<PolyRing<R>>) -> Result<Self> {
        let map = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v).ok_or_else(|| Error::UnknownVariable(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.embed(target, &map))
    }

    /// Restricts to a ring on a subset of variables; `var_map[i]` is the
    /// target index of variable `i`, `None` for variables that must not occur.
    pub fn restrict(&self, target: &Arc<PolyRing<R>>, var_map: &[Option<usize>]) -> Option<Self> {
        let n = target.nvars();
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exps().iter().enumerate() {
                if x > 0 {
                    e[var_map[i]?] = x;
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Some(Poly::from_terms(target, terms))
    }

    /// Value at a point of the coefficient domain.
    pub fn evaluate(&self, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.ring.nvars());
        let r = self.coeff_ring();
        let mut powers: Vec<Vec<R::Elem>> = point.iter().map(|x| vec![r.one(), x.clone()]).collect();
        let mut acc = r.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = r.mul(powers[i].last().unwrap(), &point[i]);
                    powers[i].push(next);
                }
                t = r.mul(&t, &powers[i][e]);
            }
            r.add_assign(&mut acc, &t);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let r = self.coeff_ring();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) > 0)
            .filter_map(|(m, c)| {
                let e = m.exp(var);
                let mut exps = m.exps().to_vec();
                exps[var] -= 1;
                let d = r.mul(c, &r.from_i64(e as i64));
                (!r.is_zero(&d)).then(|| (Monomial::new(exps), d))
            })
            .collect();
        Poly::from_terms(&self.ring, terms)
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a
    /// remainder (or a leading coefficient does not divide exactly).
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Division with remainder by leading terms in the ring order. Returns
    /// `None` when a leading-coefficient division is not exact in the ring.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let (lm, lc) = divisor.leading_term()?;
        let r = self.coeff_ring();
        let mut rem = self.clone();
        let mut quot_terms = Vec::new();
        let mut out_terms = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            match lm.div(&m) {
                Some(q) => {
                    let qc = r.exact_div(&c, lc)?;
                    rem = rem.cancel_with(None, &qc, &q, divisor);
                    quot_terms.push((q, qc));
                }
                None => out_terms.push(rem.terms.remove(0)),
            }
        }
        Some((
            Poly::from_terms(&self.ring, quot_terms),
            Poly::from_sorted_terms(&self.ring, out_terms),
        ))
    }

    /// Coefficients with respect to the variables in `mask`: groups terms by
    /// their exponents on the masked variables. The returned polynomials
    /// contain only the unmasked variables.
    pub fn coefficients_in(&self, mask: &[bool]) -> Vec<(Monomial, Poly<R>)> {
        let n = self.ring.nvars();
        let mut groups: HashMap<Monomial, Vec<(Monomial, R::Elem)>> = HashMap::new();
        for (m, c) in &self.terms {
            let mut outer = vec![0u16; n];
            let mut inner = vec![0u16; n];
            for i in 0..n {
                if mask[i] {
                    outer[i] = m.exp(i);
                } else {
                    inner[i] = m.exp(i);
                }
            }
            groups.entry(Monomial::new(outer)).or_default().push((Monomial::new(inner), c.clone()));
        }
        let mut out: Vec<_> = groups.into_iter().map(|(k, v)| (k, Poly::from_terms(&self.ring, v))).collect();
        out.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        out
    }
}

/// Merge `s*a + c*m*b` over sorted term lists.
pub(crate) fn merge_terms<R: Ring>(
    ring: &PolyRing<R>,
    a: &[(Monomial, R::Elem)],
    b: &[(Monomial, R::Elem)],
    s: Option<&R::Elem>,
    c: Option<&R::Elem>,
    m: Option<&Monomial>,
) -> Vec<(Monomial, R::Elem)> {
    let r = ring.coeffs();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let scale_a = |x: &R::Elem| match s {
        Some(s) => r.mul(x, s),
        None => x.clone(),
    };
    let shift = |t: &Monomial| match m {
        Some(m) => t.mul(m),
        None => t.clone(),
    };
    let scale_b = |x: &R::Elem| match c {
        Some(c) => r.mul(x, c),
        None => x.clone(),
    };
    let mut i = 0;
    let mut j = 0;
    let mut bj: Option<Monomial> = b.first().map(|t| shift(&t.0));
    while i < a.len() || j < b.len() {
        let ord = match (i < a.len(), &bj) {
            (true, Some(mb)) => ring.cmp(&a[i].0, mb),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let x = scale_a(&a[i].1);
                if !r.is_zero(&x) {
                    out.push((a[i].0.clone(), x));
                }
                i += 1;
            }
            Ordering::Less => {
                let x = scale_b(&b[j].1);
                if !r.is_zero(&x) {
                    out.push((bj.take().unwrap(), x));
                }
                j += 1;
                bj = b.get(j).map(|t| shift(&t.0));
            }
            Ordering::Equal => {
                let x = r.add(&scale_a(&a[i].1), &scale_b(&b[j].1));
                if !r.is_zero(&x) {
                    out.push((a[i].0.clone(), x));
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| shift(&t.0));
            }
        }
    }
    out
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl<R: Ring> Neg for &Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(self)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<R: Ring> $tr for Poly<R> {
            type Output = Poly<R>;
            fn $f(self, rhs: Poly<R>) -> Poly<R> {
                (&self).$f(&rhs)
            }
        }
        impl<R: Ring> $tr<&Poly<R>> for Poly<R> {
            type Output = Poly<R>;
            fn $f(self, rhs: &Poly<R>) -> Poly<R> {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly::neg(&self)
    }
}

impl Poly<crate::ring::RationalField> {
    /// The positive scalar multiple with coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let (monos, mut coeffs): (Vec<_>, Vec<_>) = self.terms.iter().cloned().unzip();
        crate::ring::make_primitive(&mut coeffs);
        Poly::from_sorted_terms(&self.ring, monos.into_iter().zip(coeffs).collect())
    }
}
