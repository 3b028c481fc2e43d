//! Benchmark fixtures shared by the criterion targets.

use std::sync::Arc;

use eliminant::syntax::parse_poly;
use eliminant::{HomSystem, Ideal, IntegerRing, Poly, PolyRing, RationalField};

fn zz(vars: &[&str], polys: &[&str]) -> HomSystem<IntegerRing> {
    let r = PolyRing::grevlex(vars.iter().copied(), IntegerRing);
    HomSystem::new(polys.iter().map(|p| parse_poly(&r, p).unwrap()).collect()).unwrap()
}

/// `x^3 + y^2 z, xy + y^2 + xz + yz, y^4 + z^4`, resultant 16.
pub fn classic() -> HomSystem<IntegerRing> {
    zz(&["x", "y", "z"], &["x^3 + y^2*z", "x*y + y^2 + x*z + y*z", "y^4 + z^4"])
}

/// Three dense ternary forms of degree `d` with small coefficients.
pub fn dense_ternary(d: u32) -> HomSystem<IntegerRing> {
    let r = PolyRing::grevlex(["x", "y", "z"], IntegerRing);
    let monos = eliminant::Monomial::all_of_degree(3, d);
    let polys = (0..3i64)
        .map(|i| {
            let terms = monos
                .iter()
                .enumerate()
                .map(|(k, m)| (m.clone(), ((k as i64 * 7 + i * 3) % 11 - 5).into()))
                .collect();
            Poly::from_terms(&r, terms)
        })
        .collect();
    HomSystem::new(polys).unwrap()
}

pub fn fermat_sextic() -> Poly<IntegerRing> {
    let r = PolyRing::grevlex(["w", "x", "y", "z"], IntegerRing);
    parse_poly(&r, "w^6 + x^6 + y^6 + z^6").unwrap()
}

pub fn twisted_cubic() -> Ideal<RationalField> {
    eliminant::chow::veronese(1, 3).unwrap().kernel().unwrap()
}

pub fn conic() -> Ideal<RationalField> {
    let r: Arc<PolyRing<RationalField>> = PolyRing::grevlex(["x0", "x1", "x2"], RationalField);
    Ideal::new(&r, vec![parse_poly(&r, "x1^2 - x0*x2").unwrap()]).unwrap()
}
