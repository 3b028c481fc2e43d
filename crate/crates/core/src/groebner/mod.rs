//! Ideals over fields: Gröbner bases, normal forms, elimination,
//! saturation, intersections, ring-map kernels and Krull dimension.

mod buchberger;
mod hilbert;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Monomial, MonomialOrder, Poly, PolyRing};
use crate::ring::{Field, Ring};

/// Reduced Gröbner basis of `gens` for the order of `ring`: monic, sorted by
/// ascending leading monomial. The unit ideal gives `[1]`, the zero ideal `[]`.
pub fn groebner_basis<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    for g in gens {
        if !crate::poly::same_ring(g.ring(), ring) {
            return Err(Error::RingMismatch("generator outside the ideal's ring".into()));
        }
    }
    buchberger::buchberger(ring, gens)
}

/// Remainder of `p` modulo a Gröbner basis. Only terms not divisible by any
/// leading monomial of `gb` survive.
pub fn normal_form<F: Field>(p: &Poly<F>, gb: &[Poly<F>]) -> Poly<F> {
    buchberger::remainder(p, gb)
}

/// Name not occurring in `taken`, built from `stem`.
pub(crate) fn fresh_name(stem: &str, taken: &[String]) -> String {
    let mut name = stem.to_string();
    let mut i = 0;
    while taken.contains(&name) {
        i += 1;
        name = format!("{stem}{i}");
    }
    name
}

/// A finitely generated ideal with a lazily computed Gröbner basis for the
/// order of its ring.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Poly<F>>,
    gb: OnceLock<Vec<Poly<F>>>,
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Poly<F>>) -> Result<Self> {
        for g in &gens {
            if !crate::poly::same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch("generator outside the ideal's ring".into()));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Arc<PolyRing<F>>) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], gb: OnceLock::new() }
    }

    /// The ideal generated by all variables.
    pub fn irrelevant(ring: &Arc<PolyRing<F>>) -> Self {
        let gens = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    fn with_basis(ring: &Arc<PolyRing<F>>, gb: Vec<Poly<F>>) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal { ring: ring.clone(), gens: gb, gb: cell }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.homogeneity() != Homogeneity::Inhomogeneous)
    }

    /// The reduced Gröbner basis for the ring's order (computed once).
    pub fn groebner_basis(&self) -> Result<&[Poly<F>]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger::buchberger(&self.ring, &self.gens)?;
        let _ = self.gb.set(gb);
        Ok(self.gb.get().expect("just set"))
    }

    /// Reduced Gröbner basis for another order; the polynomials live in a
    /// copy of the ring carrying that order.
    pub fn groebner_basis_for(&self, order: MonomialOrder) -> Result<Vec<Poly<F>>> {
        if &order == self.ring.order() {
            return Ok(self.groebner_basis()?.to_vec());
        }
        let target = self.ring.with_order(order)?;
        let gens: Vec<Poly<F>> = self.gens.iter().map(|g| g.reorder(&target)).collect();
        buchberger::buchberger(&target, &gens)
    }

    pub fn normal_form(&self, p: &Poly<F>) -> Result<Poly<F>> {
        if !crate::poly::same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch("normal form of a foreign polynomial".into()));
        }
        Ok(normal_form(p, self.groebner_basis()?))
    }

    pub fn contains(&self, p: &Poly<F>) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner_basis()?.iter().any(|g| g.is_constant()))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_ring(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals via their reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal<F>) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner_basis()? == other.groebner_basis()?)
    }

    fn check_ring(&self, other: &Ideal<F>) -> Result<()> {
        if crate::poly::same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch("ideals in different rings".into()))
        }
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// Generators moved into `target` by variable name.
    pub fn embed_by_name(&self, target: &Arc<PolyRing<F>>) -> Result<Ideal<F>> {
        let gens = self.gens.iter().map(|g| g.embed_by_name(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Restriction to a ring on a subset of the variables (matched by name).
    /// Fails if a generator involves a variable missing from `target`.
    pub fn restrict_to(&self, target: &Arc<PolyRing<F>>) -> Result<Ideal<F>> {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v)).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.restrict(target, &map)
                    .ok_or_else(|| Error::InvalidInput("generator involves a dropped variable".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// `I ∩ k[remaining variables]`, expressed in the same ring. The result's
    /// generators form a Gröbner basis of the elimination ideal.
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal<F>> {
        let mut dropped = Vec::new();
        for name in drop {
            let i = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            if !dropped.contains(&i) {
                dropped.push(i);
            }
        }
        self.eliminate_indices(&dropped)
    }

    pub(crate) fn eliminate_indices(&self, dropped: &[usize]) -> Result<Ideal<F>> {
        if dropped.is_empty() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let mut dropped: Vec<usize> = dropped.to_vec();
        dropped.sort_unstable();
        let kept: Vec<usize> = (0..n).filter(|i| !dropped.contains(i)).collect();
        // Dropped block first, kept block second, each in the original order.
        let perm: Vec<usize> = dropped.iter().chain(kept.iter()).copied().collect();
        let mut to_new = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let elim = PolyRing::new(names, self.ring.coeffs().clone(), MonomialOrder::Elimination(dropped.len()))?;
        let gens: Vec<Poly<F>> = self.gens.iter().map(|g| g.embed(&elim, &to_new)).collect();
        let gb = buchberger::buchberger(&elim, &gens)?;
        let back: Vec<Option<usize>> = perm.iter().map(|&old| (!dropped.contains(&old)).then_some(old)).collect();
        let kept_gens: Vec<Poly<F>> = gb.iter().filter_map(|g| g.restrict(&self.ring, &back)).collect();
        Ideal::new(&self.ring, kept_gens)
    }

    /// `I : g^∞` for a single polynomial.
    pub fn saturate_by(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        if !crate::poly::same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("saturating by a foreign polynomial".into()));
        }
        if g.is_zero() {
            // I : 0^∞ is the unit ideal.
            return Ok(Ideal::unit(&self.ring));
        }
        if g.is_constant() || self.is_zero() {
            return Ok(self.clone());
        }
        if let Some(v) = as_variable(g) {
            if self.is_homogeneous() {
                return self.saturate_variable_homogeneous(v);
            }
        }
        self.saturate_rabinowitsch(g)
    }

    /// `I : J^∞`, as the intersection of the saturations by each generator
    /// of `J`.
    pub fn saturate(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(j)?;
        let gens: Vec<&Poly<F>> = j.gens.iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        if gens.iter().any(|g| g.is_constant()) {
            return Ok(self.clone());
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in gens {
            let s = self.saturate_by(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.expect("at least one generator"))
    }

    /// For homogeneous `I` and a variable `v`: a grevlex basis with `v`
    /// smallest, with every element divided by its largest power of `v`.
    fn saturate_variable_homogeneous(&self, v: usize) -> Result<Ideal<F>> {
        let n = self.ring.nvars();
        let perm: Vec<usize> = (0..n).filter(|&i| i != v).chain(std::iter::once(v)).collect();
        let mut to_new = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let moved = PolyRing::new(names, self.ring.coeffs().clone(), MonomialOrder::GrevLex)?;
        let gens: Vec<Poly<F>> = self.gens.iter().map(|g| g.embed(&moved, &to_new)).collect();
        let gb = buchberger::buchberger(&moved, &gens)?;
        let last = n - 1;
        let back: Vec<usize> = perm.clone();
        let out = gb
            .into_iter()
            .map(|g| {
                let k = g.terms().iter().map(|(m, _)| m.exp(last)).min().unwrap_or(0);
                let divided = if k == 0 {
                    g
                } else {
                    let terms = g
                        .terms()
                        .iter()
                        .map(|(m, c)| {
                            let mut e = m.exps().to_vec();
                            e[last] -= k;
                            (Monomial::new(e), c.clone())
                        })
                        .collect();
                    Poly::from_terms(&moved, terms)
                };
                divided.embed(&self.ring, &back)
            })
            .collect();
        Ideal::new(&self.ring, out)
    }

    fn saturate_rabinowitsch(&self, g: &Poly<F>) -> Result<Ideal<F>> {
        let t = fresh_name("t", self.ring.vars());
        let (ext, to_ext) = self.extend_front(&t)?;
        let mut gens: Vec<Poly<F>> = self.gens.iter().map(|p| p.embed(&ext, &to_ext)).collect();
        let tg = &ext.var(0) * &g.embed(&ext, &to_ext);
        gens.push(&ext.one() - &tg);
        let elim = Ideal::new(&ext, gens)?.eliminate_indices(&[0])?;
        elim.drop_front()
    }

    /// The ring with one extra variable `name` in front (elimination order for
    /// it), and the embedding map of the old variables.
    fn extend_front(&self, name: &str) -> Result<(Arc<PolyRing<F>>, Vec<usize>)> {
        let mut names = vec![name.to_string()];
        names.extend(self.ring.vars().iter().cloned());
        let ext = PolyRing::new(names, self.ring.coeffs().clone(), MonomialOrder::GrevLex)?;
        let map = (1..=self.ring.nvars()).collect();
        Ok((ext, map))
    }

    /// Inverse of `extend_front` for ideals not involving the extra variable.
    fn drop_front(&self) -> Result<Ideal<F>> {
        let n = self.ring.nvars() - 1;
        let names: Vec<String> = self.ring.vars()[1..].to_vec();
        let base = PolyRing::new(names, self.ring.coeffs().clone(), MonomialOrder::GrevLex)?;
        let map: Vec<Option<usize>> = std::iter::once(None).chain((0..n).map(Some)).collect();
        let gens = self
            .gens
            .iter()
            .map(|g| g.restrict(&base, &map).ok_or_else(|| Error::InvalidInput("extra variable survived".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&base, gens)
    }

    /// `I ∩ K` by eliminating `T` from `T·I + (1−T)·K`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let t = fresh_name("t", self.ring.vars());
        let (ext, map) = self.extend_front(&t)?;
        let tv = ext.var(0);
        let one_minus = &ext.one() - &tv;
        let mut gens: Vec<Poly<F>> = self.gens.iter().map(|g| &tv * &g.embed(&ext, &map)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus * &g.embed(&ext, &map)));
        let elim = Ideal::new(&ext, gens)?.eliminate_indices(&[0])?;
        let out = elim.drop_front()?;
        // Back in the caller's ring (it may carry another order).
        let gens = out.gens.iter().map(|g| g.embed_by_name(&self.ring)).collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Krull dimension of the quotient ring; `None` for the unit ideal.
    pub fn krull_dim(&self) -> Result<Option<usize>> {
        let gb = self.groebner_basis_for(MonomialOrder::GrevLex)?;
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = gb.iter().map(|g| g.leading_monomial().unwrap().support().collect()).collect();
        Ok(Some(max_independent_set(n, &supports)))
    }

    /// Degree of the projective variety of a homogeneous ideal, read off
    /// the Hilbert series of its leading-term ideal; `None` for the unit ideal.
    pub fn degree(&self) -> Result<Option<u64>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous("degree of an inhomogeneous ideal".into()));
        }
        let gb = self.groebner_basis_for(MonomialOrder::GrevLex)?;
        if gb.iter().any(|g| g.is_constant()) {
            return Ok(None);
        }
        let lms: Vec<Monomial> = gb.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        let (_, deg) = hilbert::dimension_and_degree(hilbert::numerator(&lms), self.ring.nvars());
        Ok(Some(deg as u64))
    }

    /// The reduced Gröbner basis as an ideal.
    pub fn trim(&self) -> Result<Ideal<F>> {
        Ok(Ideal::with_basis(&self.ring, self.groebner_basis()?.to_vec()))
    }
}

/// The index of `g` if it is a single variable with coefficient 1 (or any
/// unit coefficient).
fn as_variable<F: Field>(g: &Poly<F>) -> Option<usize> {
    if g.len() != 1 {
        return None;
    }
    let (m, _) = &g.terms()[0];
    let mut support = m.support();
    let v = support.next()?;
    (support.next().is_none() && m.exp(v) == 1).then_some(v)
}

/// Largest set of variables containing the support of no leading monomial.
fn max_independent_set(n: usize, supports: &[Vec<usize>]) -> usize {
    fn rec(v: usize, n: usize, chosen: &mut Vec<bool>, size: usize, supports: &[Vec<usize>], best: &mut usize) {
        if size + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = size;
            return;
        }
        chosen[v] = true;
        let ok = supports.iter().all(|s| !s.iter().all(|&i| i <= v && chosen[i]));
        if ok {
            rec(v + 1, n, chosen, size + 1, supports, best);
        }
        chosen[v] = false;
        rec(v + 1, n, chosen, size, supports, best);
    }
    let mut best = 0;
    rec(0, n, &mut vec![false; n], 0, supports, &mut best);
    best
}

/// A ring homomorphism given by the images of the source variables.
#[derive(Clone, Debug)]
pub struct RingMap<R: Ring> {
    source: Arc<PolyRing<R>>,
    target: Arc<PolyRing<R>>,
    images: Vec<Poly<R>>,
}

impl<R: Ring> RingMap<R> {
    pub fn new(source: &Arc<PolyRing<R>>, target: &Arc<PolyRing<R>>, images: Vec<Poly<R>>) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if images.iter().any(|p| !crate::poly::same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch("image outside the target ring".into()));
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn source(&self) -> &Arc<PolyRing<R>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing<R>> {
        &self.target
    }

    pub fn images(&self) -> &[Poly<R>] {
        &self.images
    }

    pub fn apply(&self, p: &Poly<R>) -> Result<Poly<R>> {
        if !crate::poly::same_ring(p.ring(), &self.source) {
            return Err(Error::RingMismatch("ring map applied to a foreign polynomial".into()));
        }
        Ok(p.eval_hom(&self.target, &self.images, |c| self.target.constant(c.clone())))
    }
}

impl<F: Field> RingMap<F> {
    /// Kernel via the graph ideal: eliminate the target variables from
    /// `(y_i − φ(y_i))`.
    pub fn kernel(&self) -> Result<Ideal<F>> {
        let m = self.target.nvars();
        let mut names: Vec<String> = Vec::with_capacity(m + self.source.nvars());
        for v in self.target.vars() {
            names.push(fresh_name(&format!("{v}'"), self.source.vars()));
        }
        names.extend(self.source.vars().iter().cloned());
        let graph = PolyRing::new(names, self.source.coeffs().clone(), MonomialOrder::GrevLex)?;
        let tmap: Vec<usize> = (0..m).collect();
        let gens: Vec<Poly<F>> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, img)| &graph.var(m + i) - &img.embed(&graph, &tmap))
            .collect();
        let elim = Ideal::new(&graph, gens)?.eliminate_indices(&tmap)?;
        let back: Vec<Option<usize>> = (0..m).map(|_| None).chain((0..self.source.nvars()).map(Some)).collect();
        let gens = elim
            .gens
            .iter()
            .map(|g| g.restrict(&self.source, &back).ok_or_else(|| Error::InvalidInput("kernel".into())))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.source, gens)
    }
}
