use super::*;
use crate::error::Error;
use crate::poly::PolyRing;
use crate::ring::{IntegerRing, PolyDomain, RationalField};

fn zz(vars: &[&str]) -> Arc<PolyRing<IntegerRing>> {
    PolyRing::grevlex(vars.iter().copied(), IntegerRing)
}

#[test]
fn sextic_has_four_terms() {
    let r = zz(&["w", "x", "y", "z"]);
    let f = parse_poly(&r, "w^6+x^6+y^6+w*x*y^4").unwrap();
    assert_eq!(f.len(), 4);
    assert_eq!(f.total_degree(), Some(6));
}

#[test]
fn cube_of_binomial() {
    let r = zz(&["x"]);
    assert_eq!(parse_poly(&r, "(x+1)^3").unwrap().to_string(), "x^3 + 3*x^2 + 3*x + 1");
}

#[test]
fn dangling_caret_points_at_caret() {
    let r = zz(&["x"]);
    match parse_poly(&r, "x^").unwrap_err() {
        Error::Parse { line, column, .. } => assert_eq!((line, column), (1, 2)),
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn implicit_multiplication_is_rejected() {
    let r = zz(&["x", "y"]);
    let err = parse_poly(&r, "2x + y").unwrap_err();
    assert!(matches!(err, Error::Parse { column: 2, .. }), "{err}");
}

#[test]
fn undeclared_identifier() {
    let r = zz(&["x"]);
    let err = parse_poly(&r, "x + q").unwrap_err();
    assert!(err.to_string().contains("undeclared identifier `q`"));
}

#[test]
fn rational_literals() {
    let r = PolyRing::grevlex(["x"], RationalField);
    assert_eq!(parse_poly(&r, "1/2*x - 3/4").unwrap().to_string(), "1/2*x - 3/4");
    assert!(parse_poly(&zz(&["x"]), "x/2").is_err());
    assert_eq!(parse_poly(&zz(&["x"]), "(4*x)/2").unwrap().to_string(), "2*x");
}

#[test]
fn pencil_over_parameter_ring() {
    let params = PolyRing::grevlex(["t", "u"], IntegerRing);
    let r = PolyRing::grevlex(["w", "x", "y", "z"], PolyDomain::new(params));
    let f = parse_poly(&r, "w^6+x^6+y^6+w*x*y^4").unwrap();
    let g = parse_poly(&r, "w^6+x^6+y^6+z^6").unwrap();
    let t = parse_poly(&r, "t").unwrap();
    let u = parse_poly(&r, "u").unwrap();
    let pencil = &(&t * &f) + &(&u * &g);
    assert_eq!(
        pencil.to_string(),
        "(t + u)*w^6 + (t + u)*x^6 + t*w*x*y^4 + (t + u)*y^6 + u*z^6"
    );
    assert_eq!(parse_poly(&r, &pencil.to_string()).unwrap(), pencil);
}

#[test]
fn script_structure() {
    let src = "# the classic example\nring ZZ[x,y,z];\nF = x^3+y^2*z;\nG = x*y+y^2+x*z+y*z;\nH = y^4+z^4;\nresultant(F,G,H);\n";
    let s = parse_script(src).unwrap();
    assert_eq!(s.ring.vars, vec!["x", "y", "z"]);
    assert_eq!(s.bindings.len(), 3);
    assert!(matches!(&s.command.as_ref().unwrap().kind, ExprKind::Call(n, a) if n == "resultant" && a.len() == 3));
    assert_eq!(parse_script(&s.to_string()).unwrap(), s);
}

#[test]
fn ring_declarations() {
    let s = parse_script("ring GF(101)[a,b][x,y];").unwrap();
    assert_eq!(s.ring.base, BaseDomain::PrimeField(101));
    assert_eq!(s.ring.params, Some(vec!["a".to_string(), "b".to_string()]));
    assert!(parse_script("ring ZZ[a][b][x];").unwrap_err().to_string().contains("one parameter block"));
    assert!(parse_script("ring GF(100)[x];").is_err());
    assert!(parse_script("ring RR[x];").is_err());
    assert!(parse_script("ring QQ[x,x];").is_err());
    assert!(parse_script("F = x;").is_err());
}

#[test]
fn printer_keeps_needed_parentheses() {
    for src in ["-(x + y)^2", "x - (y - z)", "(x*y)^3", "x/(2*y)", "-x^2", "x*-y", "(-x)^3", "f(x, y + 1)"] {
        let e = parse_expr(src).unwrap();
        let again = parse_expr(&e.to_string()).unwrap();
        assert_eq!(e, again, "{src} printed as {e}");
    }
}
