use std::fmt;

use super::monomial::Monomial;
use super::Poly;
use crate::ring::Ring;

pub(crate) fn fmt_monomial(m: &Monomial, vars: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

struct Term<'a, R: Ring> {
    poly: &'a Poly<R>,
    idx: usize,
}

impl<R: Ring> fmt::Display for Term<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, c) = &self.poly.terms()[self.idx];
        let r = self.poly.coeff_ring();
        let vars = self.poly.ring().vars();
        if m.is_one() {
            if r.is_compound(c) {
                return write!(f, "({})", r.display(c));
            }
            return write!(f, "{}", r.display(c));
        }
        if r.is_one(c) {
            return fmt_monomial(m, vars, f);
        }
        let minus_one = r.neg(&r.one());
        if *c == minus_one {
            f.write_str("-")?;
            return fmt_monomial(m, vars, f);
        }
        if r.is_compound(c) {
            write!(f, "({})*", r.display(c))?;
        } else {
            write!(f, "{}*", r.display(c))?;
        }
        fmt_monomial(m, vars, f)
    }
}

/// Canonical text form: terms in ring order, `*` between factors, `^` for
/// powers, `-` pulled out of leading coefficients.
impl<R: Ring> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for idx in 0..self.len() {
            let s = Term { poly: self, idx }.to_string();
            if idx == 0 {
                f.write_str(&s)?;
            } else if let Some(rest) = s.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {s}")?;
            }
        }
        Ok(())
    }
}
