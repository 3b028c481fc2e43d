use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::monomial::Monomial;
use super::{Poly, PolyRing};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{IntegerRing, Ring};

/// Right-hand side of a substitution.
#[derive(Debug, Clone)]
pub enum Subst<R: Ring> {
    Poly(Poly<R>),
    Scalar(R::Elem),
}

impl<R: Ring> Poly<R> {
    /// Simultaneous substitution of named variables inside the same ring.
    pub fn substitute(&self, assignment: &[(&str, Subst<R>)]) -> Result<Poly<R>> {
        let ring = self.ring().clone();
        let mut images: Vec<Poly<R>> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        for (name, s) in assignment {
            let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
            images[i] = match s {
                Subst::Poly(p) => {
                    if !super::same_ring(p.ring(), &ring) {
                        return Err(Error::RingMismatch(format!("substitution for `{name}`")));
                    }
                    p.clone()
                }
                Subst::Scalar(c) => ring.constant(c.clone()),
            };
        }
        let one = |c: &R::Elem| ring.constant(c.clone());
        Ok(self.eval_hom(&ring, &images, one))
    }

    /// Ring homomorphism evaluation: variable `i` goes to `images[i]`, each
    /// coefficient goes through `coeff` into the target ring.
    pub fn eval_hom<S: Ring>(
        &self,
        target: &Arc<PolyRing<S>>,
        images: &[Poly<S>],
        coeff: impl Fn(&R::Elem) -> Poly<S>,
    ) -> Poly<S> {
        assert_eq!(images.len(), self.ring().nvars());
        let s = target.coeffs();
        let mut powers: Vec<Vec<Poly<S>>> = images.iter().map(|p| vec![target.one(), p.clone()]).collect();
        let mut acc: HashMap<Monomial, S::Elem> = HashMap::new();
        for (m, c) in self.terms() {
            let mut term = coeff(c);
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 || term.is_zero() {
                    continue;
                }
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e];
            }
            for (tm, tc) in term.into_terms() {
                match acc.get_mut(&tm) {
                    Some(x) => s.add_assign(x, &tc),
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        Poly::from_terms(target, acc.into_iter().collect())
    }
}

/// Applies the coordinate change `x -> A x` to every polynomial.
pub fn linear_change<R: Ring>(polys: &[Poly<R>], a: &Matrix<R>) -> Result<Vec<Poly<R>>> {
    let Some(first) = polys.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let n = ring.nvars();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix for {} variables",
            a.rows(),
            a.cols(),
            n
        )));
    }
    let images: Vec<Poly<R>> = (0..n)
        .map(|j| {
            let terms = (0..n).map(|k| (Monomial::var(n, k, 1), a.get(j, k).clone())).collect();
            Poly::from_terms(&ring, terms)
        })
        .collect();
    polys
        .iter()
        .map(|p| {
            if !super::same_ring(p.ring(), &ring) {
                return Err(Error::RingMismatch("linear_change inputs".into()));
            }
            Ok(p.eval_hom(&ring, &images, |c| ring.constant(c.clone())))
        })
        .collect()
}

/// A random integer matrix of determinant exactly 1: the product of a unit
/// lower and a unit upper triangular matrix with off-diagonal entries in
/// `[-amplitude, amplitude]`. Deterministic for a given seed.
pub fn random_unimodular(size: usize, seed: u64, amplitude: i64) -> Matrix<IntegerRing> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_unimodular_with(size, &mut rng, amplitude)
}

pub(crate) fn random_unimodular_with(size: usize, rng: &mut ChaCha8Rng, amplitude: i64) -> Matrix<IntegerRing> {
    let amp = amplitude.max(0);
    let draw = |rng: &mut ChaCha8Rng| BigInt::from(rng.random_range(-amp..=amp));
    let mut lower = Matrix::identity(IntegerRing, size);
    let mut upper = Matrix::identity(IntegerRing, size);
    for i in 0..size {
        for j in 0..i {
            lower.set(i, j, draw(rng));
        }
        for j in i + 1..size {
            upper.set(i, j, draw(rng));
        }
    }
    lower.mul(&upper).expect("square factors")
}
