//! Resultants of `n+1` homogeneous forms in `n+1` variables and
//! discriminants of single forms.
//!
//! Three algorithms are available: the Poisson recursion (quotient algebras
//! and multiplication maps), the Macaulay quotient `det D / det D'`, and
//! evaluation/interpolation for coefficients depending on parameters.

mod discriminant;
mod interpolate;
mod macaulay;
mod poisson;


use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Poly, PolyRing};
use crate::ring::{IntegerRing, PolyDomain, PrimeField, RationalField, Ring};

pub use discriminant::{discriminant, discriminant_exponent};
pub use interpolate::interpolate_resultant;
pub use macaulay::{macaulay_matrices, macaulay_resultant, MacaulayMatrices};
pub use poisson::{mult_matrix, poisson_with_trace, quotient_basis, PoissonLevel, QuotientAlgebra};

/// Attempts at reaching generic coordinates before giving up.
pub(crate) const MAX_COORDINATE_CHANGES: usize = 5;

/// `n+1` homogeneous forms of declared degrees in a ring of `n+1` variables.
#[derive(Debug, Clone)]
pub struct HomSystem<R: Ring> {
    ring: Arc<PolyRing<R>>,
    polys: Vec<Poly<R>>,
    degrees: Vec<u32>,
}

impl<R: Ring> HomSystem<R> {
    /// Degrees are read off the forms; zero forms need [`HomSystem::with_degrees`].
    pub fn new(polys: Vec<Poly<R>>) -> Result<Self> {
        let degrees = polys
            .iter()
            .enumerate()
            .map(|(i, p)| match p.homogeneity() {
                Homogeneity::Degree(d) => Ok(d),
                Homogeneity::Any => Err(Error::InvalidInput(format!("form {i} is zero; declare its degree"))),
                Homogeneity::Inhomogeneous => Err(Error::NotHomogeneous(format!("form {i}: {p}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_degrees(polys, degrees)
    }

    pub fn with_degrees(polys: Vec<Poly<R>>, degrees: Vec<u32>) -> Result<Self> {
        let Some(first) = polys.first() else {
            return Err(Error::InvalidInput("empty system".into()));
        };
        let ring = first.ring().clone();
        if polys.len() != ring.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} forms in {} variables (need one form per variable)",
                polys.len(),
                ring.nvars()
            )));
        }
        if degrees.len() != polys.len() {
            return Err(Error::DimensionMismatch("one degree per form".into()));
        }
        for (i, (p, &d)) in polys.iter().zip(&degrees).enumerate() {
            if !crate::poly::same_ring(p.ring(), &ring) {
                return Err(Error::RingMismatch(format!("form {i}")));
            }
            if d == 0 {
                return Err(Error::InvalidInput(format!("form {i} has degree 0")));
            }
            if !p.homogeneity().admits(d) {
                return Err(Error::NotHomogeneous(format!("form {i} is not homogeneous of degree {d}")));
            }
        }
        Ok(HomSystem { ring, polys, degrees })
    }

    pub fn ring(&self) -> &Arc<PolyRing<R>> {
        &self.ring
    }

    pub fn polys(&self) -> &[Poly<R>] {
        &self.polys
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// `n`, one less than the number of variables.
    pub fn n(&self) -> usize {
        self.polys.len() - 1
    }

    pub(crate) fn replace_polys(&self, polys: Vec<Poly<R>>) -> Self {
        HomSystem { ring: self.ring.clone(), polys, degrees: self.degrees.clone() }
    }

    /// The same system over another coefficient domain.
    pub fn map_coeffs<S: Ring>(&self, coeffs: S, f: impl Fn(&R::Elem) -> S::Elem) -> HomSystem<S> {
        let ring = PolyRing::new(self.ring.vars().to_vec(), coeffs, self.ring.order().clone()).expect("same shape");
        let polys = self
            .polys
            .iter()
            .map(|p| {
                let k = ring.coeffs();
                let terms = p
                    .terms()
                    .iter()
                    .map(|(m, c)| (m.clone(), f(c)))
                    .filter(|(_, c)| !k.is_zero(c))
                    .collect();
                Poly::from_terms(&ring, terms)
            })
            .collect();
        HomSystem { ring, polys, degrees: self.degrees.clone() }
    }

    /// The system after the substitution `x ↦ A x` for an integer matrix.
    pub(crate) fn transformed(&self, a: &crate::Matrix<IntegerRing>) -> Result<Self> {
        let k = self.ring.coeffs().clone();
        let m = a.map(k.clone(), |x| k.from_int(x));
        Ok(self.replace_polys(crate::poly::linear_change(&self.polys, &m)?))
    }
}

impl HomSystem<IntegerRing> {
    pub fn to_rational(&self) -> HomSystem<RationalField> {
        self.map_coeffs(RationalField, |c| BigRational::from_integer(c.clone()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    #[default]
    Auto,
    Poisson,
    Macaulay,
    Interpolate,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Poisson => "poisson",
            Algorithm::Macaulay => "macaulay",
            Algorithm::Interpolate => "interpolate",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "poisson" => Ok(Algorithm::Poisson),
            "macaulay" => Ok(Algorithm::Macaulay),
            "interpolate" => Ok(Algorithm::Interpolate),
            other => Err(Error::InvalidInput(format!("unknown algorithm `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantOptions {
    pub algorithm: Algorithm,
    /// Seeds every randomized coordinate change and interpolation grid.
    pub seed: u64,
    /// Worker threads for embarrassingly parallel stages (interpolation grids).
    pub threads: usize,
}

impl Default for ResultantOptions {
    fn default() -> Self {
        ResultantOptions { algorithm: Algorithm::Auto, seed: 0, threads: 1 }
    }
}

impl ResultantOptions {
    pub fn with_algorithm(algorithm: Algorithm) -> Self {
        ResultantOptions { algorithm, ..Default::default() }
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultantOutcome<E> {
    pub value: E,
    /// The algorithm that produced the value.
    pub algorithm: Algorithm,
    pub coordinate_changes: usize,
    pub seed: u64,
}

impl<E> ResultantOutcome<E> {
    pub fn map<T>(self, f: impl FnOnce(E) -> T) -> ResultantOutcome<T> {
        ResultantOutcome {
            value: f(self.value),
            algorithm: self.algorithm,
            coordinate_changes: self.coordinate_changes,
            seed: self.seed,
        }
    }
}

/// Coefficient domains for which resultants can be computed, with the
/// algorithms each supports.
pub trait ResultantDomain: Ring {
    /// What `Algorithm::Auto` runs first.
    fn preferred_algorithm(&self) -> Algorithm;

    /// Poisson recursion; returns the value and the number of coordinate
    /// changes applied.
    fn poisson(sys: &HomSystem<Self>, rng: &mut ChaCha8Rng) -> Result<(Self::Elem, usize)>;

    fn interpolate(sys: &HomSystem<Self>, opts: &ResultantOptions) -> Result<(Self::Elem, usize)> {
        let _ = (sys, opts);
        Err(Error::Unsupported("interpolation needs parameters over ZZ or QQ".into()))
    }
}

impl ResultantDomain for RationalField {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Poisson
    }
    fn poisson(sys: &HomSystem<Self>, rng: &mut ChaCha8Rng) -> Result<(BigRational, usize)> {
        poisson::poisson_field(sys, rng, None)
    }
}

impl ResultantDomain for PrimeField {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Poisson
    }
    fn poisson(sys: &HomSystem<Self>, rng: &mut ChaCha8Rng) -> Result<(u64, usize)> {
        poisson::poisson_field(sys, rng, None)
    }
}

impl ResultantDomain for IntegerRing {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Poisson
    }
    fn poisson(sys: &HomSystem<Self>, rng: &mut ChaCha8Rng) -> Result<(BigInt, usize)> {
        let (v, changes) = poisson::poisson_field(&sys.to_rational(), rng, None)?;
        if !v.denom().is_one() {
            return Err(Error::InexactDivision(format!("Poisson value {v} over ZZ is not integral")));
        }
        Ok((v.numer().clone(), changes))
    }
}

fn no_poisson<T>() -> Result<T> {
    Err(Error::Unsupported(
        "the Poisson recursion needs a fraction field; use interpolate or macaulay for parametric coefficients".into(),
    ))
}

impl ResultantDomain for PolyDomain<IntegerRing> {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Interpolate
    }
    fn poisson(_: &HomSystem<Self>, _: &mut ChaCha8Rng) -> Result<(Poly<IntegerRing>, usize)> {
        no_poisson()
    }
    fn interpolate(sys: &HomSystem<Self>, opts: &ResultantOptions) -> Result<(Poly<IntegerRing>, usize)> {
        interpolate::interpolate_integer(sys, opts)
    }
}

impl ResultantDomain for PolyDomain<RationalField> {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Interpolate
    }
    fn poisson(_: &HomSystem<Self>, _: &mut ChaCha8Rng) -> Result<(Poly<RationalField>, usize)> {
        no_poisson()
    }
    fn interpolate(sys: &HomSystem<Self>, opts: &ResultantOptions) -> Result<(Poly<RationalField>, usize)> {
        interpolate::interpolate_rational(sys, opts)
    }
}

impl ResultantDomain for PolyDomain<PrimeField> {
    fn preferred_algorithm(&self) -> Algorithm {
        Algorithm::Macaulay
    }
    fn poisson(_: &HomSystem<Self>, _: &mut ChaCha8Rng) -> Result<(Poly<PrimeField>, usize)> {
        no_poisson()
    }
}

/// `Res(F_0, …, F_n)`. `Auto` runs the domain's preferred algorithm and
/// falls back to the Macaulay formula when genericity cannot be reached.
pub fn resultant<R: ResultantDomain>(sys: &HomSystem<R>, opts: &ResultantOptions) -> Result<ResultantOutcome<R::Elem>> {
    let k = sys.ring().coeffs();
    // A vanishing form shares a zero with any n other forms in n+1 variables.
    if sys.polys().iter().any(|p| p.is_zero()) {
        let algorithm = match opts.algorithm {
            Algorithm::Auto => k.preferred_algorithm(),
            a => a,
        };
        return Ok(ResultantOutcome { value: k.zero(), algorithm, coordinate_changes: 0, seed: opts.seed });
    }
    let wanted = match opts.algorithm {
        Algorithm::Auto => k.preferred_algorithm(),
        a => a,
    };
    let outcome = |value, algorithm, coordinate_changes| ResultantOutcome {
        value,
        algorithm,
        coordinate_changes,
        seed: opts.seed,
    };
    let first = match wanted {
        Algorithm::Poisson => R::poisson(sys, &mut opts.rng()).map(|(v, c)| outcome(v, Algorithm::Poisson, c)),
        Algorithm::Interpolate => R::interpolate(sys, opts).map(|(v, c)| outcome(v, Algorithm::Interpolate, c)),
        Algorithm::Macaulay | Algorithm::Auto => return macaulay_resultant(sys, opts.seed),
    };
    match first {
        Err(Error::GenericityFailed(_)) if wanted == Algorithm::Poisson => macaulay_resultant(sys, opts.seed),
        other => other,
    }
}
