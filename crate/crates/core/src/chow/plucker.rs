use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};
use crate::poly::{Poly, PolyRing};
use crate::ring::RationalField;

type Q = RationalField;

/// All `size`-subsets of `0..n` in colexicographic order: `{0,1}, {0,2},
/// {1,2}, {0,3}, …`.
pub fn colex_subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = crate::linalg::combinations(n, size);
    out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    out
}

/// Sign of the permutation listing `first` and then `second`.
pub(crate) fn shuffle_sign(first: &[usize], second: &[usize]) -> i64 {
    let inversions = first.iter().map(|a| second.iter().filter(|b| *b < a).count()).sum::<usize>();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn complement(set: &[usize], n: usize) -> Vec<usize> {
    (0..n).filter(|i| !set.contains(i)).collect()
}

/// All maximal minors of a matrix of polynomials (rows ≤ columns), keyed by
/// sorted column subsets. Expands along successive rows, sharing the minors
/// of the leading rows.
pub(crate) fn maximal_minors(rows: &[Vec<Poly<Q>>]) -> BTreeMap<Vec<usize>, Poly<Q>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let ring = rows[0][0].ring().clone();
    let mut level: BTreeMap<Vec<usize>, Poly<Q>> = BTreeMap::from([(Vec::new(), ring.one())]);
    for (r, row) in rows.iter().enumerate() {
        let mut next = BTreeMap::new();
        for set in crate::linalg::combinations(cols, r + 1) {
            let mut acc = ring.zero();
            for (pos, &c) in set.iter().enumerate() {
                if row[c].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = set.iter().copied().filter(|&x| x != c).collect();
                let sub = &level[&rest];
                if sub.is_zero() {
                    continue;
                }
                let t = &row[c] * sub;
                acc = if (r + pos) % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            next.insert(set, acc);
        }
        level = next;
    }
    level
}

pub(crate) fn primitive(p: &Poly<Q>) -> Poly<Q> {
    p.primitive()
}

/// The homogeneous coordinate ring of the Grassmannian `G(k, P^n)` of
/// `k`-planes: one variable `x_I` per `(k+1)`-subset `I` of `{0..n}` (colex
/// order, grevlex), modulo the quadratic Plücker relations.
pub struct PluckerRing {
    k: usize,
    n: usize,
    subsets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    ring: Arc<PolyRing<Q>>,
    relations: Ideal<Q>,
}

impl fmt::Debug for PluckerRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PluckerRing(G({}, {}))", self.k, self.n)
    }
}

impl PartialEq for PluckerRing {
    fn eq(&self, other: &Self) -> bool {
        (self.k, self.n) == (other.k, other.n)
    }
}

impl Eq for PluckerRing {}

pub(crate) fn plucker_name(set: &[usize]) -> String {
    let mut s = String::from("x");
    for i in set {
        s.push('_');
        s.push_str(&i.to_string());
    }
    s
}

impl PluckerRing {
    pub fn new(k: usize, n: usize) -> Result<Arc<Self>> {
        if k > n {
            return Err(Error::InvalidInput(format!("G({k}, {n}) needs k <= n")));
        }
        let subsets = colex_subsets(n + 1, k + 1);
        let index = subsets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let ring = PolyRing::grevlex(subsets.iter().map(|s| plucker_name(s)), RationalField);
        let mut me = PluckerRing { k, n, subsets, index, ring: ring.clone(), relations: Ideal::zero(&ring) };
        let rels = me.quadrics();
        me.relations = Ideal::new(&ring, rels)?;
        Ok(Arc::new(me))
    }

    /// `sum_l (−1)^l x_{I ∪ j_l} x_{J \ j_l}` over `|I| = k`, `|J| = k+2`,
    /// with antisymmetric brackets.
    fn quadrics(&self) -> Vec<Poly<Q>> {
        let size = self.k + 1;
        let mut out: Vec<Poly<Q>> = Vec::new();
        for i in crate::linalg::combinations(self.n + 1, size - 1) {
            for j in crate::linalg::combinations(self.n + 1, size + 1) {
                let mut rel = self.ring.zero();
                for (l, &jl) in j.iter().enumerate() {
                    if i.contains(&jl) {
                        continue;
                    }
                    let mut left = i.clone();
                    left.push(jl);
                    let sign = shuffle_sign(&i, &[jl]) * if l % 2 == 0 { 1 } else { -1 };
                    left.sort_unstable();
                    let right: Vec<usize> = j.iter().copied().filter(|&x| x != jl).collect();
                    let t = &self.var(&left) * &self.var(&right);
                    rel = if sign > 0 { &rel + &t } else { &rel - &t };
                }
                if !rel.is_zero() {
                    let rel = primitive(&rel);
                    if !out.contains(&rel) {
                        out.push(rel);
                    }
                }
            }
        }
        out
    }

    /// `G(k, P^n)`: dimension `k` of the planes.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn ring(&self) -> &Arc<PolyRing<Q>> {
        &self.ring
    }

    pub fn relations(&self) -> &Ideal<Q> {
        &self.relations
    }

    /// The variable of a sorted subset.
    pub fn var(&self, set: &[usize]) -> Poly<Q> {
        self.ring.var(self.index[set])
    }

    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// `x_I ↦ maximal minor on columns I` for a `(k+1) x (n+1)` matrix of
    /// polynomials in `target`.
    pub fn minor_map(&self, target: &Arc<PolyRing<Q>>, rows: &[Vec<Poly<Q>>]) -> Result<RingMap<Q>> {
        if rows.len() != self.k + 1 || rows.iter().any(|r| r.len() != self.n + 1) {
            return Err(Error::DimensionMismatch(format!(
                "G({}, {}) needs a {}x{} matrix",
                self.k,
                self.n,
                self.k + 1,
                self.n + 1
            )));
        }
        let minors = maximal_minors(rows);
        RingMap::new(&self.ring, target, self.subsets.iter().map(|s| minors[s].clone()).collect())
    }

    /// Canonical representative of the class of `p`.
    pub fn element(self: &Arc<Self>, p: Poly<Q>) -> Result<PluckerElement> {
        if !crate::poly::same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch("polynomial outside the Plücker ring".into()));
        }
        let rep = primitive(&self.relations.normal_form(&p)?);
        Ok(PluckerElement { ring: self.clone(), rep })
    }
}

/// A residue class in a Plücker ring, stored as its normal form with
/// coprime integer coefficients and positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PluckerElement {
    ring: Arc<PluckerRing>,
    rep: Poly<Q>,
}

impl PluckerElement {
    pub fn plucker_ring(&self) -> &Arc<PluckerRing> {
        &self.ring
    }

    pub fn rep(&self) -> &Poly<Q> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.rep.total_degree()
    }

    /// Equality up to a nonzero scalar (so up to sign, after canonicalization).
    pub fn equals_up_to_sign(&self, other: &PluckerElement) -> bool {
        self.ring == other.ring && (self.rep == other.rep || self.rep == -&other.rep)
    }
}

impl fmt::Display for PluckerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// The duality `G(k, P^n) = G(n−k−1, P^n*)`: `x_I ↦ sign(I, I^c) x_{I^c}`.
pub fn dualize(w: &PluckerElement) -> Result<PluckerElement> {
    let (k, n) = (w.ring.k, w.ring.n);
    if k == n {
        return Err(Error::InvalidInput("G(n, n) has no dual Grassmannian".into()));
    }
    let dual = PluckerRing::new(n - k - 1, n)?;
    let images = w
        .ring
        .subsets
        .iter()
        .map(|s| {
            let c = complement(s, n + 1);
            let v = dual.var(&c);
            if shuffle_sign(s, &c) > 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    let rep = RingMap::new(&w.ring.ring, &dual.ring, images)?.apply(&w.rep)?;
    dual.element(rep)
}

/// `QQ[x_{i,j}]` for an `rows x cols` matrix, row-major.
pub fn stiefel_ring(rows: usize, cols: usize) -> Arc<PolyRing<Q>> {
    let names = (0..rows).flat_map(|i| (0..cols).map(move |j| format!("x_{i}_{j}")));
    PolyRing::grevlex(names, RationalField)
}

/// Substitutes every Plücker variable by the corresponding maximal minor
/// of a generic `(k+1) x (n+1)` matrix. No rescaling: the image of a
/// canonical element is already integral and primitive.
pub fn from_plucker_to_stiefel(w: &PluckerElement) -> Result<Poly<Q>> {
    let (rows, cols) = (w.ring.k + 1, w.ring.n + 1);
    let target = stiefel_ring(rows, cols);
    let m: Vec<Vec<Poly<Q>>> = (0..rows).map(|i| (0..cols).map(|j| target.var(i * cols + j)).collect()).collect();
    w.ring.minor_map(&target, &m)?.apply(&w.rep)
}
