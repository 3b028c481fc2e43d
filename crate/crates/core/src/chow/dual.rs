use std::sync::Arc;

use super::plucker::maximal_minors;
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, Ideal};
use crate::linalg::combinations;
use crate::poly::{MonomialOrder, Poly, PolyRing};
use crate::ring::RationalField;

type Q = RationalField;

/// How the conormal variety is cut out of `V(I + (c+1)-minors of [J; y])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DualStrategy {
    /// `c` generators of `I` with a `c x c` Jacobian minor `Δ ∉ I`; remove
    /// `V(Δ)` with one extra variable (`1 − zΔ`) in the same elimination.
    /// Exact for irreducible `X`: the conormal variety over `X \ V(Δ)` is dense.
    #[default]
    ChosenMinor,
    /// Saturate by the ideal of all `c x c` minors of the full Jacobian,
    /// then eliminate.
    FullMinors,
}

fn jacobian(gens: &[Poly<Q>], target: &Arc<PolyRing<Q>>, xmap: &[usize]) -> Vec<Vec<Poly<Q>>> {
    gens.iter()
        .map(|g| (0..xmap.len()).map(|j| g.derivative(j).embed(target, xmap)).collect())
        .collect()
}

/// `c` generators and a `c x c` minor of their Jacobian not in `i`.
fn complete_intersection_minor(i: &Ideal<Q>, c: usize) -> Result<(Vec<Poly<Q>>, Poly<Q>)> {
    let ring = i.ring();
    let mut gens = i.groebner_basis()?.to_vec();
    gens.sort_by_key(|g| (g.total_degree(), g.len()));
    let xmap: Vec<usize> = (0..ring.nvars()).collect();
    for choice in combinations(gens.len(), c) {
        let chosen: Vec<Poly<Q>> = choice.iter().map(|&a| gens[a].clone()).collect();
        let jac = jacobian(&chosen, ring, &xmap);
        for m in maximal_minors(&jac).into_values() {
            if !m.is_zero() && !i.contains(&m)? {
                return Ok((chosen, m));
            }
        }
    }
    Err(Error::InvalidInput("the Jacobian has rank below the codimension on V(I); is I prime?".into()))
}

/// The dual variety of the irreducible `X = V(i) ⊂ P^n`, in the dual
/// coordinates identified with the variables of `i`'s ring through the
/// standard pairing.
pub fn dual_variety(i: &Ideal<Q>) -> Result<Ideal<Q>> {
    dual_variety_with(i, DualStrategy::default())
}

pub fn dual_variety_with(i: &Ideal<Q>, strategy: DualStrategy) -> Result<Ideal<Q>> {
    let ring = i.ring().clone();
    let nv = ring.nvars();
    if !i.is_homogeneous() {
        return Err(Error::NotHomogeneous("dual variety of an inhomogeneous ideal".into()));
    }
    let dim = i.krull_dim()?.filter(|&d| d >= 1).ok_or_else(|| Error::InvalidInput("empty variety".into()))?;
    let c = nv - dim;
    if c == 0 {
        // No hyperplane is tangent to all of projective space.
        return Ok(Ideal::unit(&ring));
    }
    let x_names: Vec<String> = (0..nv).map(|j| format!("_x{j}")).collect();
    match strategy {
        DualStrategy::ChosenMinor => {
            let (chosen, delta) = complete_intersection_minor(i, c)?;
            let names: Vec<String> = std::iter::once("_z".to_string())
                .chain(x_names)
                .chain(ring.vars().iter().cloned())
                .collect();
            let big = PolyRing::new(names, RationalField, MonomialOrder::Elimination(1 + nv))?;
            let xmap: Vec<usize> = (1..=nv).collect();
            let mut gens: Vec<Poly<Q>> = i.gens().iter().map(|g| g.embed(&big, &xmap)).collect();
            let mut rows = jacobian(&chosen, &big, &xmap);
            rows.push((0..nv).map(|j| big.var(1 + nv + j)).collect());
            gens.extend(maximal_minors(&rows).into_values().filter(|m| !m.is_zero()));
            gens.push(&big.one() - &(&big.var(0) * &delta.embed(&big, &xmap)));
            let gb = groebner_basis(&big, &gens)?;
            let back: Vec<Option<usize>> = (0..big.nvars()).map(|v| v.checked_sub(1 + nv)).collect();
            Ideal::new(&ring, gb.iter().filter_map(|g| g.restrict(&ring, &back)).collect())
        }
        DualStrategy::FullMinors => {
            let names: Vec<String> = x_names.into_iter().chain(ring.vars().iter().cloned()).collect();
            let big = PolyRing::grevlex(names, RationalField);
            let xmap: Vec<usize> = (0..nv).collect();
            let gens_x = i.groebner_basis()?.to_vec();
            let mut gens: Vec<Poly<Q>> = gens_x.iter().map(|g| g.embed(&big, &xmap)).collect();
            let full = jacobian(&gens_x, &big, &xmap);
            let y: Vec<Poly<Q>> = (0..nv).map(|j| big.var(nv + j)).collect();
            for choice in combinations(gens_x.len(), c) {
                let mut rows: Vec<Vec<Poly<Q>>> = choice.iter().map(|&a| full[a].clone()).collect();
                rows.push(y.clone());
                gens.extend(maximal_minors(&rows).into_values().filter(|m| !m.is_zero()));
            }
            let mut singular = Vec::new();
            for choice in combinations(gens_x.len(), c) {
                let rows: Vec<Vec<Poly<Q>>> = choice.iter().map(|&a| full[a].clone()).collect();
                singular.extend(maximal_minors(&rows).into_values().filter(|m| !m.is_zero()));
            }
            let conormal = Ideal::new(&big, gens)?.saturate(&Ideal::new(&big, singular)?)?;
            let names: Vec<String> = (0..nv).map(|j| format!("_x{j}")).collect();
            let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let elim = conormal.eliminate(&refs)?;
            let back: Vec<Option<usize>> = (0..big.nvars()).map(|v| v.checked_sub(nv)).collect();
            Ideal::new(&ring, elim.gens().iter().filter_map(|g| g.restrict(&ring, &back)).collect())
        }
    }
}
