//! The Poisson recursion:
//! `Res(F_0..F_n) = Res(F̄_0..F̄_{n-1})^{d_n} · det(m_{f_n})`, where `F̄_i`
//! sets the last variable to 0, `f_i` sets it to 1 and `m_{f_n}` is
//! multiplication by `f_n` on `k[x_0..x_{n-1}]/(f_0..f_{n-1})`.

use std::collections::HashMap;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use super::{HomSystem, ResultantOptions, ResultantOutcome, Algorithm, MAX_COORDINATE_CHANGES};
use crate::budget;
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form, Ideal};
use crate::linalg::Matrix;
use crate::poly::{linear_change, random_unimodular_with, Monomial, Poly, PolyRing};
use crate::ring::Field;

/// `k[x]/(f_0..f_{n-1})` with a standard-monomial basis.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra<F: Field> {
    ring: Arc<PolyRing<F>>,
    gb: Vec<Poly<F>>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Standard monomials, ascending in the ring order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn groebner_basis(&self) -> &[Poly<F>] {
        &self.gb
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    /// Coordinates of the class of `p` in the standard-monomial basis.
    pub fn coordinates(&self, p: &Poly<F>) -> Vec<F::Elem> {
        let k = self.ring.coeffs();
        let mut out = vec![k.zero(); self.dim()];
        for (m, c) in normal_form(p, &self.gb).into_terms() {
            out[self.index[&m]] = c;
        }
        out
    }
}

/// Grevlex Gröbner basis of `fs` and the monomials outside its leading-term
/// ideal. Fails with `GenericityFailed` when the quotient is infinite
/// dimensional.
pub fn quotient_basis<F: Field>(fs: &[Poly<F>]) -> Result<QuotientAlgebra<F>> {
    let Some(first) = fs.first() else {
        return Err(Error::InvalidInput("quotient of an empty system".into()));
    };
    let ring = first.ring().clone();
    let gb = groebner_basis(&ring, fs)?;
    let n = ring.nvars();
    let lms: Vec<&Monomial> = gb.iter().map(|g| g.leading_monomial().expect("nonzero")).collect();
    // Finite iff every variable has a pure power among the leading monomials.
    let mut bounds = vec![u16::MAX; n];
    for m in &lms {
        let support: Vec<usize> = m.support().collect();
        if support.len() == 1 {
            let v = support[0];
            bounds[v] = bounds[v].min(m.exp(v));
        } else if support.is_empty() {
            bounds.iter_mut().for_each(|b| *b = 0);
        }
    }
    if bounds.iter().any(|&b| b == u16::MAX) {
        return Err(Error::GenericityFailed("the affine quotient is infinite dimensional".into()));
    }
    let mut basis = Vec::new();
    if bounds.iter().all(|&b| b > 0) {
        let mut exps = vec![0u16; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !lms.iter().any(|l| l.divides(&m)) {
                basis.push(m);
            }
            // Odometer over the box of exponents below the pure-power bounds.
            let mut i = 0;
            while i < n {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    basis.sort_by(|a, b| ring.cmp(a, b));
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    Ok(QuotientAlgebra { ring, gb, basis, index })
}

/// Matrix of multiplication by `f` on the quotient: column `j` holds the
/// coordinates of `f · b_j`.
pub fn mult_matrix<F: Field>(f: &Poly<F>, a: &QuotientAlgebra<F>) -> Result<Matrix<F>> {
    if !crate::poly::same_ring(f.ring(), &a.ring) {
        return Err(Error::RingMismatch("multiplier outside the quotient's ring".into()));
    }
    let k = a.ring.coeffs().clone();
    let d = a.dim();
    let mut m = Matrix::zeros(k.clone(), d, d);
    for (j, b) in a.basis.iter().enumerate() {
        let prod = f.mul_term(b, &k.one());
        for (i, c) in a.coordinates(&prod).into_iter().enumerate() {
            m.set(i, j, c);
        }
    }
    Ok(m)
}

/// One level of a successful Poisson recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoissonLevel<E> {
    /// Number of variables at this level.
    pub nvars: usize,
    /// `Res(F̄_0, …, F̄_{n-1})`.
    pub outer: E,
    /// `d_n`, the power of the outer factor.
    pub exponent: u32,
    pub quotient_dim: usize,
    /// `det(m_{f_n})`.
    pub inner: E,
}

/// Poisson resultant over a field together with the per-level factors,
/// innermost level first.
pub fn poisson_with_trace<F: Field>(
    sys: &HomSystem<F>,
    seed: u64,
) -> Result<(ResultantOutcome<F::Elem>, Vec<PoissonLevel<F::Elem>>)> {
    let opts = ResultantOptions { seed, ..Default::default() };
    let mut rng = opts.rng();
    let mut changes = 0;
    let mut trace = Vec::new();
    let value = level(sys.polys(), sys.degrees(), &mut rng, &mut changes, &mut trace)?;
    Ok((ResultantOutcome { value, algorithm: Algorithm::Poisson, coordinate_changes: changes, seed }, trace))
}

pub(crate) fn poisson_field<F: Field>(
    sys: &HomSystem<F>,
    rng: &mut ChaCha8Rng,
    trace: Option<&mut Vec<PoissonLevel<F::Elem>>>,
) -> Result<(F::Elem, usize)> {
    let mut changes = 0;
    let mut local = Vec::new();
    let value = level(sys.polys(), sys.degrees(), rng, &mut changes, &mut local)?;
    if let Some(t) = trace {
        *t = local;
    }
    Ok((value, changes))
}

/// `F(x_0, …, x_{n-1}, c)` for `c ∈ {0, 1}`, in the ring of the first `n` variables.
fn set_last<F: Field>(p: &Poly<F>, sub: &Arc<PolyRing<F>>, one: bool) -> Poly<F> {
    let n = sub.nvars();
    let terms = p
        .terms()
        .iter()
        .filter(|(m, _)| one || m.exp(n) == 0)
        .map(|(m, c)| (Monomial::new(m.exps()[..n].to_vec()), c.clone()))
        .collect();
    Poly::from_terms(sub, terms)
}

fn level<F: Field>(
    polys: &[Poly<F>],
    degrees: &[u32],
    rng: &mut ChaCha8Rng,
    changes: &mut usize,
    trace: &mut Vec<PoissonLevel<F::Elem>>,
) -> Result<F::Elem> {
    let ring = polys[0].ring().clone();
    let k = ring.coeffs().clone();
    let n = polys.len() - 1;
    if polys.iter().any(|p| p.is_zero()) {
        return Ok(k.zero());
    }
    if n == 0 {
        return Ok(polys[0].coeff_of(&Monomial::var(1, 0, degrees[0] as u16)));
    }
    let sub = PolyRing::grevlex(ring.vars()[..n].to_vec(), k.clone());
    let bezout: usize = degrees[..n].iter().map(|&d| d as usize).product();
    for attempt in 0..=MAX_COORDINATE_CHANGES {
        budget::check()?;
        let current: Vec<Poly<F>> = if attempt == 0 {
            polys.to_vec()
        } else {
            *changes += 1;
            let a = random_unimodular_with(n + 1, rng, attempt as i64 + 1);
            linear_change(polys, &a.map(k.clone(), |x| k.from_int(x)))?
        };
        let bars: Vec<Poly<F>> = current[..n].iter().map(|p| set_last(p, &sub, false)).collect();
        let mut inner_trace = Vec::new();
        let outer = level(&bars, &degrees[..n], rng, changes, &mut inner_trace)?;
        if k.is_zero(&outer) {
            continue;
        }
        let fs: Vec<Poly<F>> = current[..n].iter().map(|p| set_last(p, &sub, true)).collect();
        let q = match quotient_basis(&fs) {
            Ok(q) if q.dim() == bezout => q,
            Ok(_) | Err(Error::GenericityFailed(_)) => continue,
            Err(e) => return Err(e),
        };
        let last = set_last(&current[n], &sub, true);
        let inner = if last.is_constant() {
            k.pow(&last.constant_term(), bezout as u64)
        } else {
            mult_matrix(&last, &q)?.det()?
        };
        let value = k.mul(&k.pow(&outer, degrees[n] as u64), &inner);
        trace.extend(inner_trace);
        trace.push(PoissonLevel { nvars: n + 1, outer, exponent: degrees[n], quotient_dim: q.dim(), inner });
        return Ok(value);
    }
    // Every hyperplane tried meets V(F_0..F_{n-1}): if that variety is
    // positive dimensional it meets V(F_n) too, and the resultant vanishes.
    let first: Ideal<F> = Ideal::new(&ring, polys[..n].to_vec())?;
    if first.krull_dim()?.is_some_and(|d| d >= 2) {
        return Ok(k.zero());
    }
    Err(Error::GenericityFailed(format!(
        "no coordinate change in {} attempts made the forms generic at infinity",
        MAX_COORDINATE_CHANGES
    )))
}
