//! The Macaulay formula `det D = Res · det D'`.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Algorithm, HomSystem, ResultantOutcome, MAX_COORDINATE_CHANGES};
use crate::budget;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{random_unimodular_with, Monomial};
use crate::ring::Ring;

/// The Macaulay matrices of a system. Rows and columns of `d` are both
/// indexed by `monomials` (degree `δ = Σd_i − n`); row `α` holds the
/// coefficients of `x^α / x_i^{d_i} · F_i` with `i = sets[α]`.
#[derive(Debug, Clone)]
pub struct MacaulayMatrices<R: Ring> {
    pub d: Matrix<R>,
    pub d_prime: Matrix<R>,
    pub delta: u32,
    pub monomials: Vec<Monomial>,
    /// The `i` with `x^α ∈ S_i` for each monomial.
    pub sets: Vec<usize>,
    /// Whether each monomial is divisible by exactly one `x_i^{d_i}`.
    pub reduced: Vec<bool>,
    /// Positions (into `monomials`) of the rows and columns kept in `d_prime`.
    pub kept: Vec<usize>,
}

pub fn macaulay_matrices<R: Ring>(sys: &HomSystem<R>) -> Result<MacaulayMatrices<R>> {
    let n = sys.n();
    let nvars = n + 1;
    let degrees = sys.degrees();
    let total: u32 = degrees.iter().sum();
    let delta = total
        .checked_sub(n as u32)
        .ok_or_else(|| Error::InvalidInput("degree sum too small for the Macaulay formula".into()))?;
    let k = sys.ring().coeffs().clone();
    let monomials = Monomial::all_of_degree(nvars, delta);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let size = monomials.len();

    let mut sets = Vec::with_capacity(size);
    let mut reduced = Vec::with_capacity(size);
    for m in &monomials {
        let hits: Vec<usize> = (0..nvars).filter(|&j| m.exp(j) as u32 >= degrees[j]).collect();
        // δ = Σd_i − n forces at least one hit (pigeonhole).
        let first = *hits.first().expect("some x_i^{d_i} divides every degree-δ monomial");
        sets.push(first);
        reduced.push(hits.len() == 1);
    }

    let mut d = Matrix::zeros(k.clone(), size, size);
    for (row, m) in monomials.iter().enumerate() {
        let i = sets[row];
        let mut e = m.exps().to_vec();
        e[i] -= degrees[i] as u16;
        let shift = Monomial::new(e);
        for (t, c) in sys.polys()[i].terms() {
            let col = index[&t.mul(&shift)];
            d.set(row, col, c.clone());
        }
    }
    let kept: Vec<usize> = (0..size).filter(|&i| !reduced[i]).collect();
    let d_prime = d.submatrix(&kept, &kept);
    Ok(MacaulayMatrices { d, d_prime, delta, monomials, sets, reduced, kept })
}

/// `det D / det D'`, retrying after random unimodular coordinate changes
/// while `det D' = 0`.
pub fn macaulay_resultant<R: Ring>(sys: &HomSystem<R>, seed: u64) -> Result<ResultantOutcome<R::Elem>> {
    let k = sys.ring().coeffs().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4d41_4341_554c_4159);
    let mut current = sys.clone();
    for attempt in 0..=MAX_COORDINATE_CHANGES {
        budget::check()?;
        if attempt > 0 {
            let a = random_unimodular_with(sys.n() + 1, &mut rng, attempt as i64 + 1);
            current = sys.transformed(&a)?;
        }
        let mats = macaulay_matrices(&current)?;
        let den = mats.d_prime.det()?;
        if k.is_zero(&den) {
            continue;
        }
        let num = mats.d.det()?;
        let value = k
            .exact_div(&num, &den)
            .ok_or_else(|| Error::InexactDivision("det D is not divisible by det D'".into()))?;
        return Ok(ResultantOutcome { value, algorithm: Algorithm::Macaulay, coordinate_changes: attempt, seed });
    }
    Err(Error::ZeroDenominator(format!(
        "det D' vanished after {MAX_COORDINATE_CHANGES} coordinate changes; try --algorithm poisson or interpolate"
    )))
}
