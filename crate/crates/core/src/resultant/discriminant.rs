use super::{resultant, HomSystem, ResultantDomain, ResultantOptions, ResultantOutcome};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// The exponent `e` in `c_{d,n} = d^e`, `e = ((−1)^{n+1} − (d−1)^{n+1}) / d`,
/// for a form of degree `d` in `nvars = n + 1` variables.
pub fn discriminant_exponent(d: u32, nvars: usize) -> Result<i64> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("discriminant needs degree at least 2, got {d}")));
    }
    let k = u32::try_from(nvars).map_err(|_| Error::InvalidInput("too many variables".into()))?;
    let sign: i128 = if k % 2 == 0 { 1 } else { -1 };
    let power = (d as i128 - 1)
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidInput("discriminant exponent overflows".into()))?;
    let num = sign - power;
    if num % d as i128 != 0 {
        return Err(Error::InexactDivision(format!("exponent numerator {num} is not divisible by {d}")));
    }
    i64::try_from(num / d as i128).map_err(|_| Error::InvalidInput("discriminant exponent overflows".into()))
}

/// `Dis(F) = d^e · Res(∂F/∂x_0, …, ∂F/∂x_n)`. The degree is read off `f`
/// unless given (needed for the zero form).
pub fn discriminant<R: ResultantDomain>(
    f: &Poly<R>,
    degree: Option<u32>,
    opts: &ResultantOptions,
) -> Result<ResultantOutcome<R::Elem>> {
    let d = match degree {
        Some(d) => d,
        None => f
            .homogeneity()
            .degree()
            .ok_or_else(|| Error::NotHomogeneous(format!("{f} has no single degree")))?,
    };
    if !f.homogeneity().admits(d) {
        return Err(Error::NotHomogeneous(format!("{f} is not homogeneous of degree {d}")));
    }
    let ring = f.ring();
    let e = discriminant_exponent(d, ring.nvars())?;
    let partials: Vec<Poly<R>> = (0..ring.nvars()).map(|i| f.derivative(i)).collect();
    let sys = HomSystem::with_degrees(partials, vec![d - 1; ring.nvars()])?;
    let out = resultant(&sys, opts)?;
    let k = ring.coeffs().clone();
    let scale = k.pow(&k.from_i64(d as i64), e.unsigned_abs());
    Ok(if e >= 0 {
        out.map(|v| k.mul(&v, &scale))
    } else {
        let value = k
            .exact_div(&out.value, &scale)
            .ok_or_else(|| Error::InexactDivision(format!("resultant of the partials is not divisible by {d}^{}", -e)))?;
        ResultantOutcome { value, ..out }
    })
}
