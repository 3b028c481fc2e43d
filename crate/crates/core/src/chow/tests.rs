use super::*;
use crate::groebner::Ideal;
use crate::poly::PolyRing;
use crate::ring::RationalField;
use crate::syntax::parse_poly;

fn twisted_cubic() -> Ideal<RationalField> {
    veronese(1, 3).unwrap().kernel().unwrap()
}

fn ideal(r: &std::sync::Arc<PolyRing<RationalField>>, gens: &[&str]) -> Ideal<RationalField> {
    Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
}

fn element(g: &std::sync::Arc<PluckerRing>, s: &str) -> PluckerElement {
    g.element(parse_poly(g.ring(), s).unwrap()).unwrap()
}

#[test]
fn subsets_are_colex() {
    let names: Vec<String> = PluckerRing::new(1, 3).unwrap().ring().vars().to_vec();
    assert_eq!(names, ["x_0_1", "x_0_2", "x_1_2", "x_0_3", "x_1_3", "x_2_3"]);
}

#[test]
fn plucker_relations_vanish_on_minors() {
    for (k, n) in [(1, 3), (1, 4), (2, 4), (0, 3)] {
        let g = PluckerRing::new(k, n).unwrap();
        let st = stiefel_ring(k + 1, n + 1);
        let m: Vec<Vec<_>> = (0..=k).map(|i| (0..=n).map(|j| st.var(i * (n + 1) + j)).collect()).collect();
        let map = g.minor_map(&st, &m).unwrap();
        for r in g.relations().gens() {
            assert!(map.apply(r).unwrap().is_zero(), "G({k},{n}): {r}");
        }
    }
    let g13 = PluckerRing::new(1, 3).unwrap();
    assert_eq!(g13.relations().gens().len(), 1);
    assert_eq!(g13.relations().gens()[0].to_string(), "x_1_2*x_0_3 - x_0_2*x_1_3 + x_0_1*x_2_3");
}

#[test]
fn veronese_maps() {
    let v = veronese(1, 1).unwrap();
    assert!(v.kernel().unwrap().is_zero() || v.kernel().unwrap().gens().iter().all(|g| g.is_zero()));
    let conic = veronese(1, 2).unwrap();
    let images: Vec<String> = conic.images().iter().map(|p| p.to_string()).collect();
    assert_eq!(images, ["s0^2", "s0*s1", "s1^2"]);
    let src = conic.source().clone();
    assert!(conic.kernel().unwrap().equals(&ideal(&src, &["x1^2 - x0*x2"])).unwrap());
    let c = twisted_cubic();
    let expected = ideal(c.ring(), &["x2^2 - x1*x3", "x1*x2 - x0*x3", "x1^2 - x0*x2"]);
    assert!(c.equals(&expected).unwrap());
    assert_eq!(veronese(2, 2).unwrap().source().nvars(), 6);
}

#[test]
fn twisted_cubic_chow_form() {
    let w = chow_form(&twisted_cubic()).unwrap();
    assert_eq!((w.source_dim, w.source_degree, w.ambient), (1, 3, 3));
    let g = w.element.plucker_ring().clone();
    assert_eq!((g.k(), g.n()), (1, 3));
    let session = element(
        &g,
        "x_1_2^3 - x_0_2*x_1_2*x_1_3 + x_0_1*x_1_3^2 + x_0_2^2*x_2_3 - 2*x_0_1*x_1_2*x_2_3 - x_0_1*x_0_3*x_2_3",
    );
    assert!(w.element.equals_up_to_sign(&session), "{}", w.element);
    assert_eq!(g.relations().normal_form(w.element.rep()).unwrap(), *w.element.rep());
}

#[test]
fn twisted_cubic_dual_form_and_stiefel() {
    let w = chow_form(&twisted_cubic()).unwrap();
    let d = dualize(&w.element).unwrap();
    let g = d.plucker_ring().clone();
    let session = element(
        &g,
        "x_0_3^3 - x_0_2*x_0_3*x_1_3 + x_0_1*x_1_3^2 + x_0_2^2*x_2_3 - x_0_1*x_1_2*x_2_3 - 2*x_0_1*x_0_3*x_2_3",
    );
    assert!(d.equals_up_to_sign(&session), "{d}");
    assert_eq!(dualize(&d).unwrap(), w.element);

    let s = from_plucker_to_stiefel(&d).unwrap();
    assert_eq!(s.ring().nvars(), 8);
    assert_eq!(s.total_degree(), Some(6));
    let (m, c) = s.leading_term().unwrap();
    assert_eq!(s.ring().monomial(m.clone(), c.clone()).to_string(), "-x_0_3^3*x_1_0^3");
    // Degree 3 in each row.
    assert!(s.terms().iter().all(|(m, _)| m.exps()[..4].iter().map(|&e| e as u32).sum::<u32>() == 3));
}

#[test]
fn twisted_cubic_chow_equations() {
    let c = twisted_cubic();
    let w = chow_form(&c).unwrap();
    let eqs = chow_equations(&w).unwrap();
    let sat = eqs.saturate(&Ideal::irrelevant(c.ring())).unwrap();
    assert!(sat.equals(&c).unwrap());
}

#[test]
fn hyperplane_and_conic_chow_forms() {
    let r = PolyRing::grevlex(["x0", "x1", "x2", "x3"], RationalField);
    let h = ideal(&r, &["2*x0 - x1 + 3*x3"]);
    let w = chow_form(&h).unwrap();
    let g = w.element.plucker_ring().clone();
    assert_eq!((g.k(), g.n()), (0, 3));
    assert!(w.element.equals_up_to_sign(&element(&g, "2*x_0 - x_1 + 3*x_3")));
    assert!(chow_equations(&w).unwrap().equals(&h).unwrap());

    let p2 = PolyRing::grevlex(["x0", "x1", "x2"], RationalField);
    let conic = ideal(&p2, &["x1^2 - x0*x2"]);
    let w = chow_form(&conic).unwrap();
    let g = w.element.plucker_ring().clone();
    assert!(w.element.equals_up_to_sign(&element(&g, "x_1^2 - x_0*x_2")));
    let sat = chow_equations(&w).unwrap().saturate(&Ideal::irrelevant(&p2)).unwrap();
    assert!(sat.equals(&conic).unwrap());
}

#[test]
fn dualize_examples() {
    let g = PluckerRing::new(1, 3).unwrap();
    let d = dualize(&element(&g, "x_0_1")).unwrap();
    assert_eq!(d.to_string(), "x_2_3");
    let e = element(&g, "x_0_2*x_1_3 + 5*x_1_2^2 - x_0_3");
    assert_eq!(dualize(&dualize(&e).unwrap()).unwrap(), e);
}

#[test]
fn stiefel_of_a_bracket() {
    let g = PluckerRing::new(1, 3).unwrap();
    let s = from_plucker_to_stiefel(&element(&g, "x_0_1")).unwrap();
    assert_eq!(s, parse_poly(s.ring(), "x_0_0*x_1_1 - x_0_1*x_1_0").unwrap());
    for r in g.relations().gens() {
        assert!(from_plucker_to_stiefel(&g.element(r.clone()).unwrap()).unwrap().is_zero());
        assert!(g.element(r.clone()).unwrap().is_zero());
    }
}

#[test]
fn point_cayley_trick() {
    let r = PolyRing::grevlex(["x0", "x1"], RationalField);
    let (segre, xres) = cayley_trick(&ideal(&r, &["x0"])).unwrap();
    let st = segre.ring().clone();
    assert_eq!(st.nvars(), 2);
    assert!(segre.equals(&ideal(&st, &["x_0_0"])).unwrap());
    assert_eq!(xres.gens().len(), 1);
    assert_eq!(xres.gens()[0].total_degree(), Some(1));
}

#[test]
fn dual_varieties() {
    let r = PolyRing::grevlex(["x0", "x1", "x2"], RationalField);
    let conic = ideal(&r, &["x1^2 - x0*x2"]);
    let expected = ideal(&r, &["x1^2 - 4*x0*x2"]);
    assert!(dual_variety(&conic).unwrap().equals(&expected).unwrap());
    assert!(dual_variety_with(&conic, DualStrategy::FullMinors).unwrap().equals(&expected).unwrap());
    let plane = ideal(&r, &["x0"]);
    assert!(dual_variety(&plane).unwrap().equals(&ideal(&r, &["x1", "x2"])).unwrap());
}

#[test]
fn conic_cayley_trick_matches_the_dual() {
    let r = PolyRing::grevlex(["x0", "x1", "x2"], RationalField);
    let (segre, xres) = cayley_trick(&ideal(&r, &["x1^2 - x0*x2"])).unwrap();
    assert!(dual_variety(&segre).unwrap().equals(&xres).unwrap());
}
