use std::sync::Arc;

use super::plucker::{complement, maximal_minors, primitive, shuffle_sign, stiefel_ring};
use super::{dualize, from_plucker_to_stiefel, PluckerElement, PluckerRing};
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Ideal, RingMap};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use crate::ring::{RationalField, Ring};

type Q = RationalField;

/// The `d`-th Veronese map of `P^k`: `x_i ↦` the `i`-th degree-`d`
/// monomial in `s_0..s_k`, grevlex-largest first.
pub fn veronese(k: usize, d: u32) -> Result<RingMap<Q>> {
    if k < 1 || d < 1 {
        return Err(Error::InvalidInput(format!("veronese({k}, {d}) needs k, d >= 1")));
    }
    let target = PolyRing::grevlex((0..=k).map(|i| format!("s{i}")), RationalField);
    let mut monos = Monomial::all_of_degree(k + 1, d);
    monos.sort_by(|a, b| target.cmp(b, a));
    let source = PolyRing::grevlex((0..monos.len()).map(|i| format!("x{i}")), RationalField);
    let images = monos.into_iter().map(|m| target.monomial(m, RationalField.one())).collect();
    RingMap::new(&source, &target, images)
}

/// The Chow form of a projective variety `X` of dimension `k` and degree
/// `d` in `P^n`, in the Plücker coordinates of `G(n−k−1, P^n)`.
#[derive(Debug, Clone)]
pub struct ChowFormResult {
    pub element: PluckerElement,
    pub source_dim: usize,
    pub source_degree: u64,
    pub ambient: usize,
    /// The coordinate ring of `P^n` containing the ideal of `X`.
    pub source: Arc<PolyRing<Q>>,
}

/// Internal ring with `blocks` of fresh variables, the first `eliminate`
/// of them in an elimination block.
fn block_ring(blocks: &[Vec<String>], eliminate: usize) -> Result<Arc<PolyRing<Q>>> {
    let names: Vec<String> = blocks.concat();
    PolyRing::new(names, RationalField, MonomialOrder::Elimination(eliminate))
}

/// Elements of `gb` involving only the variables from `from` on, moved to
/// `target` (whose variables are those, in order).
fn tail_part(gb: &[Poly<Q>], from: usize, target: &Arc<PolyRing<Q>>) -> Vec<Poly<Q>> {
    let n = gb.first().map_or(0, |g| g.ring().nvars());
    let back: Vec<Option<usize>> = (0..n).map(|i| i.checked_sub(from)).collect();
    gb.iter().filter_map(|g| g.restrict(target, &back)).collect()
}

fn projective_dimension(i: &Ideal<Q>) -> Result<usize> {
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous("expected a homogeneous ideal".into()));
    }
    match i.krull_dim()? {
        Some(d) if d >= 1 => Ok(d - 1),
        _ => Err(Error::InvalidInput("the ideal defines the empty projective variety".into())),
    }
}

/// A coordinate `x_c` not vanishing on `X`; `x_c = 1` is an affine chart
/// meeting the (irreducible) variety.
fn chart(i: &Ideal<Q>) -> Result<usize> {
    for c in 0..i.ring().nvars() {
        if !i.contains(&i.ring().var(c))? {
            return Ok(c);
        }
    }
    Err(Error::InvalidInput("the ideal contains every coordinate".into()))
}

/// Polynomials of `ring` (variable `chart` set to 1) moved to `target`,
/// whose variables from `offset` on are the remaining ones of `ring`.
fn dehomogenize(p: &Poly<Q>, chart: usize, target: &Arc<PolyRing<Q>>, offset: usize) -> Poly<Q> {
    let images: Vec<Poly<Q>> = (0..p.ring().nvars())
        .map(|j| match j.cmp(&chart) {
            std::cmp::Ordering::Less => target.var(offset + j),
            std::cmp::Ordering::Equal => target.one(),
            std::cmp::Ordering::Greater => target.var(offset + j - 1),
        })
        .collect();
    p.eval_hom(target, &images, |c| target.constant(c.clone()))
}

/// Chow form of the irreducible variety `V(i)` by one elimination: with
/// `u` a `(k+1) x (n+1)` matrix of indeterminates, eliminate `x` and `u`
/// from `i + (u x) + (p_J − minor_J(u))` on an affine chart of `X`, keep
/// the least-degree element outside the Plücker ideal and pass from the
/// row space of `u` to its kernel.
pub fn chow_form(i: &Ideal<Q>) -> Result<ChowFormResult> {
    let ring = i.ring().clone();
    let n = ring.nvars() - 1;
    let k = projective_dimension(i)?;
    if k == n {
        return Err(Error::InvalidInput("X is all of projective space".into()));
    }
    let degree = i.degree()?.expect("proper ideal");
    let c = chart(i)?;

    let rows = k + 1;
    let u_names: Vec<String> = (0..rows).flat_map(|a| (0..=n).map(move |b| format!("_u{a}_{b}"))).collect();
    let x_names: Vec<String> = (0..n).map(|j| format!("_x{j}")).collect();
    let grass = PluckerRing::new(k, n)?;
    let p_names: Vec<String> = grass.ring().vars().to_vec();
    let (nu, nx) = (u_names.len(), x_names.len());
    let big = block_ring(&[u_names, x_names, p_names], nu + nx)?;

    let mut gens: Vec<Poly<Q>> = i.gens().iter().map(|g| dehomogenize(g, c, &big, nu)).collect();
    let xs: Vec<Poly<Q>> = (0..=n).map(|j| dehomogenize(&ring.var(j), c, &big, nu)).collect();
    let u: Vec<Vec<Poly<Q>>> = (0..rows).map(|a| (0..=n).map(|b| big.var(a * (n + 1) + b)).collect()).collect();
    for row in &u {
        let mut lin = big.zero();
        for (uj, xj) in row.iter().zip(&xs) {
            lin = &lin + &(uj * xj);
        }
        gens.push(lin);
    }
    let minors = maximal_minors(&u);
    for (idx, set) in grass.subsets().iter().enumerate() {
        gens.push(&big.var(nu + nx + idx) - &minors[set]);
    }
    let gb = groebner_basis(&big, &gens)?;
    let found = tail_part(&gb, nu + nx, grass.ring());

    let mut best: Option<PluckerElement> = None;
    for g in found {
        let e = grass.element(g)?;
        if e.is_zero() {
            continue;
        }
        if best.as_ref().is_none_or(|b| (e.degree(), e.rep().len()) < (b.degree(), b.rep().len())) {
            best = Some(e);
        }
    }
    let row_space = best.ok_or_else(|| {
        Error::InvalidInput("elimination left no hypersurface; is the ideal prime of the expected dimension?".into())
    })?;

    // Row space of u in G(k, P^n*) ↔ its kernel in G(n−k−1, P^n):
    // p_J = sign(J^c, J) q_{J^c}.
    let kernel = PluckerRing::new(n - k - 1, n)?;
    let images = grass
        .subsets()
        .iter()
        .map(|s| {
            let comp = complement(s, n + 1);
            let v = kernel.var(&comp);
            if shuffle_sign(&comp, s) > 0 {
                v
            } else {
                -v
            }
        })
        .collect();
    let rep = RingMap::new(grass.ring(), kernel.ring(), images)?.apply(row_space.rep())?;
    Ok(ChowFormResult {
        element: kernel.element(rep)?,
        source_dim: k,
        source_degree: degree,
        ambient: n,
        source: ring,
    })
}

/// The ideal of `x ∈ P^n` such that every `(n−k−1)`-plane through `x`
/// meets `X`: substitute the maximal minors of the matrix with rows `x`,
/// `y_1, …` and take all coefficients in the `y`s. Saturating recovers
/// the ideal of `X`.
pub fn chow_equations(w: &ChowFormResult) -> Result<Ideal<Q>> {
    chow_equations_in(&w.element, &w.source)
}

pub fn chow_equations_in(w: &PluckerElement, source: &Arc<PolyRing<Q>>) -> Result<Ideal<Q>> {
    let pr = w.plucker_ring();
    let n = pr.n();
    if source.nvars() != n + 1 {
        return Err(Error::DimensionMismatch(format!(
            "a form on G({}, {n}) needs {} coordinates, got {}",
            pr.k(),
            n + 1,
            source.nvars()
        )));
    }
    let extra = pr.k();
    let y_names: Vec<String> = (0..extra).flat_map(|a| (0..=n).map(move |b| format!("_y{a}_{b}"))).collect();
    let ny = y_names.len();
    let ring = block_ring(&[y_names, source.vars().to_vec()], ny)?;
    let mut rows: Vec<Vec<Poly<Q>>> = vec![(0..=n).map(|j| ring.var(ny + j)).collect()];
    rows.extend((0..extra).map(|a| (0..=n).map(|b| ring.var(a * (n + 1) + b)).collect()));
    let p = pr.minor_map(&ring, &rows)?.apply(w.rep())?;
    let mask: Vec<bool> = (0..ring.nvars()).map(|v| v < ny).collect();
    let back: Vec<Option<usize>> = (0..ring.nvars()).map(|v| v.checked_sub(ny)).collect();
    let gens = p
        .coefficients_in(&mask)
        .into_iter()
        .map(|(_, c)| primitive(&c.restrict(source, &back).expect("coefficients live in x")))
        .collect();
    Ideal::new(source, gens)
}

/// The Cayley trick: the ideal of `P^k × X` in `P(Mat(k+1, n+1))` (entries
/// `x_{i,j} = s_i y_j`, `y ∈ X`) and the principal ideal of the
/// `X`-resultant, the Stiefel form of the dualized Chow form.
pub fn cayley_trick(i: &Ideal<Q>) -> Result<(Ideal<Q>, Ideal<Q>)> {
    let w = chow_form(i)?;
    let (rows, cols) = (w.source_dim + 1, w.ambient + 1);
    let target = stiefel_ring(rows, cols);
    let s_names: Vec<String> = (0..rows).map(|a| format!("_s{a}")).collect();
    let y_names: Vec<String> = (0..cols).map(|b| format!("_y{b}")).collect();
    let big = block_ring(&[s_names, y_names, target.vars().to_vec()], rows + cols)?;
    let ymap: Vec<usize> = (rows..rows + cols).collect();
    let mut gens: Vec<Poly<Q>> = i.gens().iter().map(|g| g.embed(&big, &ymap)).collect();
    for a in 0..rows {
        for b in 0..cols {
            gens.push(&big.var(rows + cols + a * cols + b) - &(&big.var(a) * &big.var(rows + b)));
        }
    }
    let segre = Ideal::new(&target, tail_part(&groebner_basis(&big, &gens)?, rows + cols, &target))?;
    let xres = from_plucker_to_stiefel(&dualize(&w.element)?)?;
    Ok((segre, Ideal::new(&target, vec![xres])?))
}
