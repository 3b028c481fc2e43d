//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair update.

use std::sync::Arc;

use crate::budget;
use crate::error::Result;
use crate::poly::{merge_terms, Monomial, Poly, PolyRing};
use crate::ring::{Field, Ring};

type Terms<F> = Vec<(Monomial, <F as Ring>::Elem)>;

fn support_mask(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
}

/// A reducer: leading monomial, its support mask and the polynomial.
pub(crate) struct Reducer<'a, F: Field> {
    lm: &'a Monomial,
    mask: u64,
    poly: &'a Poly<F>,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub(crate) fn new(poly: &'a Poly<F>) -> Option<Self> {
        let lm = poly.leading_monomial()?;
        Some(Reducer { lm, mask: support_mask(lm), poly })
    }
}

fn find_reducer<'a, 'b, F: Field>(reducers: &'b [Reducer<'a, F>], m: &Monomial) -> Option<&'b Reducer<'a, F>> {
    let mask = support_mask(m);
    reducers
        .iter()
        .find(|r| r.mask & !mask == 0 && r.lm.degree() <= m.degree() && r.lm.divides(m))
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Scale freely by units to keep coefficients small; the result is an
    /// associate of the true remainder.
    FractionFree,
    /// Plain division: the result is the remainder itself.
    Exact,
}

/// Fully reduces `terms` by `reducers`. With `skip_lead`, the leading term
/// is left alone and only the tail is reduced.
pub(crate) fn reduce_terms<F: Field>(
    ring: &Arc<PolyRing<F>>,
    mut rest: Terms<F>,
    reducers: &[Reducer<'_, F>],
    mode: Mode,
    skip_lead: bool,
) -> Terms<F> {
    let k = ring.coeffs();
    let mut done: Terms<F> = Vec::new();
    let mut pos = 0;
    if skip_lead && !rest.is_empty() {
        done.push(rest[0].clone());
        pos = 1;
    }
    let mut scaled_steps = 0usize;
    while pos < rest.len() {
        let (m, c) = &rest[pos];
        let Some(r) = find_reducer(reducers, m) else {
            done.push(rest[pos].clone());
            pos += 1;
            continue;
        };
        let lc = r.poly.leading_coeff().expect("nonzero reducer");
        let (s, t) = match mode {
            Mode::FractionFree => k.cancel_factors(c, lc),
            Mode::Exact => (None, k.div(c, lc).expect("nonzero leading coefficient")),
        };
        let shift = r.lm.div(m).expect("reducer divides");
        let minus_t = k.neg(&t);
        if let Some(s) = &s {
            for (_, d) in done.iter_mut() {
                k.mul_assign(d, s);
            }
            scaled_steps += 1;
        }
        rest = merge_terms(ring, &rest[pos + 1..], &r.poly.terms()[1..], s.as_ref(), Some(&minus_t), Some(&shift));
        pos = 0;
        if scaled_steps >= 16 {
            scaled_steps = 0;
            normalize_pair::<F>(k, &mut done, &mut rest);
        }
    }
    done
}

fn normalize_pair<F: Field>(k: &F, a: &mut Terms<F>, b: &mut Terms<F>) {
    let factor = k.normalizer(a.iter().chain(b.iter()).map(|t| &t.1));
    if let Some(f) = factor {
        for (_, c) in a.iter_mut().chain(b.iter_mut()) {
            k.mul_assign(c, &f);
        }
    }
}

fn normalized<F: Field>(p: Poly<F>) -> Poly<F> {
    let k = p.coeff_ring().clone();
    match k.normalizer(p.terms().iter().map(|t| &t.1)) {
        Some(f) => p.scale(&f),
        None => p,
    }
}

fn monic<F: Field>(p: Poly<F>) -> Poly<F> {
    let k = p.coeff_ring().clone();
    match p.leading_coeff() {
        Some(lc) if !k.is_one(lc) => {
            let inv = k.inv(lc).expect("nonzero leading coefficient");
            p.scale(&inv)
        }
        _ => p,
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<F: Field> {
    ring: Arc<PolyRing<F>>,
    polys: Vec<Poly<F>>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> State<F> {
    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    fn reducers(&self) -> Vec<Reducer<'_, F>> {
        (0..self.polys.len())
            .filter(|&i| self.active[i])
            .filter_map(|i| Reducer::new(&self.polys[i]))
            .collect()
    }

    fn reduce(&self, p: Poly<F>) -> Poly<F> {
        let reducers = self.reducers();
        let terms = reduce_terms(&self.ring, p.into_terms(), &reducers, Mode::FractionFree, false);
        normalized(Poly::from_terms(&self.ring, terms))
    }

    fn spoly(&self, pair: &Pair) -> Poly<F> {
        let (f, g) = (&self.polys[pair.i], &self.polys[pair.j]);
        let k = self.ring.coeffs();
        let (lf, lg) = (f.leading_coeff().unwrap(), g.leading_coeff().unwrap());
        let mf = self.lm(pair.i).div(&pair.lcm).unwrap();
        let mg = self.lm(pair.j).div(&pair.lcm).unwrap();
        // s*lf == t*lg, so s*mf*f - t*mg*g cancels the leading terms.
        let (s, t) = k.cancel_factors(lf, lg);
        let minus_t = k.neg(&t);
        let a = f.mul_term(&mf, s.as_ref().unwrap_or(&k.one()));
        let terms = merge_terms(&self.ring, &a.terms()[1..], &g.terms()[1..], None, Some(&minus_t), Some(&mg));
        Poly::from_terms(&self.ring, terms)
    }

    /// Inserts `h` (reduced, nonzero) and updates the pair set.
    fn insert(&mut self, h: Poly<F>, sugar: u32) {
        let k = self.polys.len();
        let lh = h.leading_monomial().unwrap().clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let candidates: Vec<(usize, Monomial, bool)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let li = self.lm(i);
                (i, li.lcm(&lh), li.gcd_is_one(&lh))
            })
            .collect();

        // Chain criterion among the new pairs: drop (i,h) when another new pair
        // has an lcm properly dividing its lcm.
        let minimal: Vec<bool> = candidates
            .iter()
            .map(|(_, la, _)| !candidates.iter().any(|(_, lb, _)| lb != la && lb.divides(la)))
            .collect();
        // Of the pairs sharing an lcm keep one; if any of them is coprime the
        // whole group is redundant by the product criterion.
        let mut fresh: Vec<Pair> = Vec::new();
        let mut seen: Vec<Monomial> = Vec::new();
        for (idx, (i, lcm, _)) in candidates.iter().enumerate() {
            if !minimal[idx] || seen.contains(lcm) {
                continue;
            }
            seen.push(lcm.clone());
            let group_coprime = candidates
                .iter()
                .enumerate()
                .any(|(b, (_, lb, c))| minimal[b] && *c && lb == lcm);
            if group_coprime {
                continue;
            }
            let si = self.sugar[*i] + lcm.degree() - self.lm(*i).degree();
            let sh = sugar + lcm.degree() - lh.degree();
            fresh.push(Pair { i: *i, j: k, lcm: lcm.clone(), sugar: si.max(sh) });
        }

        // Old pairs whose lcm is divisible by lm(h) and differs from both new lcms.
        let polys = &self.polys;
        let lm_of = |i: usize| polys[i].leading_monomial().unwrap();
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = lm_of(p.i).lcm(&lh);
            let lj = lm_of(p.j).lcm(&lh);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(fresh);

        for i in 0..k {
            if self.active[i] && lh.divides(self.lm(i)) {
                self.active[i] = false;
            }
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ring = &self.ring;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar.cmp(&pb.sugar).then_with(|| ring.cmp(&pa.lcm, &pb.lcm))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` for the order of
/// their ring: monic, sorted by ascending leading monomial.
pub(crate) fn buchberger<F: Field>(ring: &Arc<PolyRing<F>>, gens: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
    let mut input: Vec<Poly<F>> = gens.iter().filter(|g| !g.is_zero()).cloned().map(normalized).collect();
    if input.iter().any(|g| g.is_constant()) {
        return Ok(vec![ring.one()]);
    }
    input.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut st = State {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for g in input {
        let sugar = g.total_degree().unwrap_or(0);
        let h = st.reduce(g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        st.insert(h, sugar);
    }
    while let Some(pair) = st.next_pair() {
        budget::check()?;
        let s = st.spoly(&pair);
        if s.is_zero() {
            continue;
        }
        let h = st.reduce(s);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![ring.one()]);
        }
        st.insert(h, pair.sugar);
    }
    let basis: Vec<Poly<F>> = (0..st.polys.len())
        .filter(|&i| st.active[i])
        .map(|i| st.polys[i].clone())
        .collect();
    Ok(interreduce(ring, basis))
}

/// Tail-reduces a minimal basis, makes it monic and sorts it.
fn interreduce<F: Field>(ring: &Arc<PolyRing<F>>, mut basis: Vec<Poly<F>>) -> Vec<Poly<F>> {
    basis.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut out: Vec<Poly<F>> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let reducers: Vec<Reducer<'_, F>> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .filter_map(|(_, p)| Reducer::new(p))
            .collect();
        let terms = reduce_terms(ring, basis[i].terms().to_vec(), &reducers, Mode::FractionFree, true);
        out.push(monic(Poly::from_terms(ring, terms)));
    }
    out
}

/// Remainder of `p` on division by `basis` (plain field division).
pub(crate) fn remainder<F: Field>(p: &Poly<F>, basis: &[Poly<F>]) -> Poly<F> {
    let reducers: Vec<Reducer<'_, F>> = basis.iter().filter_map(Reducer::new).collect();
    let terms = reduce_terms(p.ring(), p.terms().to_vec(), &reducers, Mode::Exact, false);
    Poly::from_sorted_terms(p.ring(), terms)
}
