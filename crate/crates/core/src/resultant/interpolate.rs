//! Resultants over parameter rings by evaluation at integer grid points and
//! dense Newton interpolation.
//!
//! When every form's coefficients are homogeneous in the parameters (of
//! degree `e_i` for form `i`), the resultant is homogeneous of degree
//! `E = Σ e_i ∏_{l≠i} d_l` in them, so the last parameter is set to 1 and
//! restored afterwards. Either way the degree in each interpolated parameter
//! `t_j` is at most `Σ_i ∏_{l≠i} d_l · max_α deg_{t_j} c_{i,α}`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng as _;

use super::{resultant, Algorithm, HomSystem, ResultantDomain, ResultantOptions, ResultantOutcome};
use crate::budget;
use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Monomial, Poly, PolyRing};
use crate::ring::{IntegerRing, PolyDomain, RationalField, Ring};

pub fn interpolate_resultant<R: ResultantDomain>(
    sys: &HomSystem<R>,
    opts: &ResultantOptions,
) -> Result<ResultantOutcome<R::Elem>> {
    let (value, coordinate_changes) = R::interpolate(sys, opts)?;
    Ok(ResultantOutcome { value, algorithm: Algorithm::Interpolate, coordinate_changes, seed: opts.seed })
}

pub(crate) fn interpolate_integer(
    sys: &HomSystem<PolyDomain<IntegerRing>>,
    opts: &ResultantOptions,
) -> Result<(Poly<IntegerRing>, usize)> {
    let (q, changes) = interpolate_with(sys, opts, |c| BigRational::from_integer(c.clone()))?;
    let params = sys.ring().coeffs().params().clone();
    let terms = q
        .terms()
        .iter()
        .map(|(m, c)| {
            if c.is_integer() {
                Ok((m.clone(), c.numer().clone()))
            } else {
                Err(Error::InexactDivision("interpolated resultant is not integral".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((Poly::from_terms(&params, terms), changes))
}

pub(crate) fn interpolate_rational(
    sys: &HomSystem<PolyDomain<RationalField>>,
    opts: &ResultantOptions,
) -> Result<(Poly<RationalField>, usize)> {
    let (q, changes) = interpolate_with(sys, opts, |c| c.clone())?;
    let params = sys.ring().coeffs().params().clone();
    Ok((Poly::from_terms(&params, q.into_terms()), changes))
}

/// Degree of each form's coefficients when they are all homogeneous of one
/// degree in the parameters.
fn parameter_degrees<B: Ring>(sys: &HomSystem<PolyDomain<B>>) -> Option<Vec<u32>> {
    sys.polys()
        .iter()
        .map(|f| {
            let mut deg = Homogeneity::Any;
            for (_, c) in f.terms() {
                match (deg, c.homogeneity()) {
                    (_, Homogeneity::Inhomogeneous) => return None,
                    (Homogeneity::Any, h) => deg = h,
                    (Homogeneity::Degree(a), Homogeneity::Degree(b)) if a != b => return None,
                    _ => {}
                }
            }
            Some(deg.degree().unwrap_or(0))
        })
        .collect()
}

struct Plan {
    /// Number of parameters interpolated (the rest, if any, is the last one set to 1).
    free: usize,
    /// Degree bound per free parameter.
    bounds: Vec<usize>,
    /// Total degree of the resultant in the parameters, in the homogeneous case.
    homogeneous_degree: Option<u64>,
}

fn plan<B: Ring>(sys: &HomSystem<PolyDomain<B>>) -> Plan {
    let m = sys.ring().coeffs().params().nvars();
    let degrees = sys.degrees();
    let weights: Vec<u64> = (0..degrees.len())
        .map(|i| (0..degrees.len()).filter(|&l| l != i).map(|l| degrees[l] as u64).product())
        .collect();
    let homogeneous_degree = parameter_degrees(sys)
        .filter(|_| m > 0)
        .map(|e| e.iter().zip(&weights).map(|(&e, &w)| e as u64 * w).sum());
    let free = if homogeneous_degree.is_some() { m - 1 } else { m };
    let bounds = (0..free)
        .map(|j| {
            sys.polys()
                .iter()
                .zip(&weights)
                .map(|(f, &w)| w * f.terms().iter().map(|(_, c)| c.degree_in(j) as u64).max().unwrap_or(0))
                .sum::<u64>() as usize
        })
        .collect();
    Plan { free, bounds, homogeneous_degree }
}

fn specialize<B: Ring>(sys: &HomSystem<PolyDomain<B>>, point: &[BigInt]) -> HomSystem<B> {
    let params = sys.ring().coeffs().params();
    let base = params.coeffs().clone();
    let values: Vec<B::Elem> = point.iter().map(|v| base.from_int(v)).collect();
    sys.map_coeffs(base, |c| c.evaluate(&values))
}

/// Evaluates the resultant of every specialized system at `points`, using up
/// to `threads` workers; results keep the order of `points`.
fn evaluate_all<B: ResultantDomain>(
    sys: &HomSystem<PolyDomain<B>>,
    points: &[Vec<BigInt>],
    opts: &ResultantOptions,
    to_q: &(dyn Fn(&B::Elem) -> BigRational + Sync),
) -> Result<(Vec<BigRational>, usize)> {
    let inner = ResultantOptions { algorithm: Algorithm::Auto, seed: opts.seed, threads: 1 };
    let eval = |p: &Vec<BigInt>| -> Result<(BigRational, usize)> {
        budget::check()?;
        let out = resultant(&specialize(sys, p), &inner)?;
        Ok((to_q(&out.value), out.coordinate_changes))
    };
    let threads = opts.threads.max(1).min(points.len().max(1));
    let results: Vec<Result<(BigRational, usize)>> = if threads == 1 {
        points.iter().map(eval).collect()
    } else {
        let deadline = budget::current();
        let chunk = points.len().div_ceil(threads);
        std::thread::scope(|s| {
            let handles: Vec<_> = points
                .chunks(chunk)
                .map(|part| s.spawn(|| budget::with_instant(deadline, || part.iter().map(eval).collect::<Vec<_>>())))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    };
    let mut values = Vec::with_capacity(points.len());
    let mut changes = 0;
    for r in results {
        let (v, c) = r?;
        values.push(v);
        changes += c;
    }
    Ok((values, changes))
}

/// Newton interpolation in variable `j` of `ring` through `(nodes[k], values[k])`.
fn newton(ring: &Arc<PolyRing<RationalField>>, j: usize, nodes: &[BigInt], values: Vec<Poly<RationalField>>) -> Poly<RationalField> {
    let mut c = values;
    let d = nodes.len();
    for level in 1..d {
        for k in (level..d).rev() {
            let diff = BigRational::from_integer(&nodes[k] - &nodes[k - level]);
            let inv = BigRational::one() / diff;
            c[k] = (&c[k] - &c[k - 1]).scale(&inv);
        }
    }
    let t = ring.var(j);
    let mut acc = c[d - 1].clone();
    for k in (0..d - 1).rev() {
        let factor = &t - &ring.constant(BigRational::from_integer(nodes[k].clone()));
        acc = &(&acc * &factor) + &c[k];
    }
    acc
}

fn build(
    ring: &Arc<PolyRing<RationalField>>,
    j: usize,
    grids: &[Vec<BigInt>],
    values: &[BigRational],
) -> Poly<RationalField> {
    if j == grids.len() {
        return ring.constant(values[0].clone());
    }
    let block = values.len() / grids[j].len();
    let slices: Vec<Poly<RationalField>> = (0..grids[j].len())
        .map(|k| build(ring, j + 1, grids, &values[k * block..(k + 1) * block]))
        .collect();
    newton(ring, j, &grids[j], slices)
}

fn cartesian(grids: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut out = vec![Vec::new()];
    for g in grids {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                g.iter().map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v.clone());
                    p
                })
            })
            .collect();
    }
    out
}

/// Interpolated resultant as a polynomial over QQ in all parameters.
fn interpolate_with<B: ResultantDomain>(
    sys: &HomSystem<PolyDomain<B>>,
    opts: &ResultantOptions,
    to_q: impl Fn(&B::Elem) -> BigRational + Sync,
) -> Result<(Poly<RationalField>, usize)> {
    let params = sys.ring().coeffs().params().clone();
    let m = params.nvars();
    let plan = plan(sys);
    let qparams = PolyRing::new(params.vars().to_vec(), RationalField, params.order().clone())?;
    let free_ring = PolyRing::grevlex(params.vars()[..plan.free].to_vec(), RationalField);
    let mut rng = opts.rng();
    let mut start = BigInt::from(2 + opts.seed % 1000);
    let widest = plan.bounds.iter().copied().max().unwrap_or(0);
    let mut changes = 0;
    for _round in 0..2 {
        let grids: Vec<Vec<BigInt>> = plan
            .bounds
            .iter()
            .map(|&d| (0..=d).map(|k| &start + BigInt::from(k)).collect())
            .collect();
        let mut points = cartesian(&grids);
        if plan.homogeneous_degree.is_some() {
            points.iter_mut().for_each(|p| p.push(BigInt::one()));
        }
        let (values, c) = evaluate_all(sys, &points, opts, &to_q)?;
        changes += c;
        let free_poly = build(&free_ring, 0, &grids, &values);

        // Back to all parameters.
        let full = match plan.homogeneous_degree {
            Some(e) => {
                let terms = free_poly
                    .terms()
                    .iter()
                    .map(|(mono, c)| {
                        let mut exps = mono.exps().to_vec();
                        let rest = e
                            .checked_sub(mono.degree() as u64)
                            .filter(|&r| r <= u16::MAX as u64)
                            .ok_or_else(|| Error::InterpolationFailed("degree exceeds the homogeneity bound".into()))?;
                        exps.push(rest as u16);
                        Ok((Monomial::new(exps), c.clone()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Poly::from_terms(&qparams, terms)
            }
            None => free_poly.embed(&qparams, &(0..m).collect::<Vec<_>>()),
        };

        // One extra point off the grid, in all parameters.
        let far = &start + BigInt::from(widest + 1);
        let check: Vec<BigInt> = (0..m).map(|_| &far + BigInt::from(rng.random_range(0..1000u32))).collect();
        let (direct, c) = evaluate_all(sys, std::slice::from_ref(&check), opts, &to_q)?;
        changes += c;
        let qpoint: Vec<BigRational> = check.iter().map(|v| BigRational::from_integer(v.clone())).collect();
        if full.evaluate(&qpoint) == direct[0] {
            return Ok((full, changes));
        }
        start = &far + BigInt::from(1000 + widest);
    }
    Err(Error::InterpolationFailed("verification point disagreed twice".into()))
}
