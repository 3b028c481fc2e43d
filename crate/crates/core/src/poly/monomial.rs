use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 10]>;

/// An exponent vector with its cached total degree.
#[derive(Clone, Debug)]
pub struct Monomial {
    exps: Exponents,
    degree: u32,
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Monomial {
    pub fn new(exps: impl Into<Exponents>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect::<Exponents>(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u16) -> Monomial {
        Monomial::new(self.exps.iter().map(|a| a * e).collect::<Exponents>())
    }

    /// Support of the monomial: indices with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// lexicographically decreasing order (x0^d first).
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(nvars: usize, i: usize, left: u32, cur: &mut Exponents, out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left as u16;
                out.push(Monomial::new(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(nvars, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        let mut cur = SmallVec::from_elem(0, nvars);
        rec(nvars, 0, d, &mut cur, &mut out);
        out
    }
}

/// Term orders on monomials. All orders are degree compatible except
/// `Lex` and the block orders, which exist for elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Product order: the first `k` variables form a block compared first
    /// (grevlex inside each block).
    Elimination(usize),
    /// General product order over variable groups, compared in sequence with
    /// grevlex inside each group.
    Blocks(Vec<Vec<usize>>),
    /// Weighted degree, ties broken by grevlex.
    Weighted(Vec<u32>),
}

fn grevlex_on(a: &[u16], b: &[u16], idx: impl DoubleEndedIterator<Item = usize> + Clone) -> Ordering {
    let da: u32 = idx.clone().map(|i| a[i] as u32).sum();
    let db: u32 = idx.clone().map(|i| b[i] as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in idx.rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (x, y) = (a.exps(), b.exps());
        match self {
            MonomialOrder::Lex => x.cmp(y),
            MonomialOrder::GrevLex => {
                match a.degree.cmp(&b.degree) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for i in (0..x.len()).rev() {
                    match x[i].cmp(&y[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(k) => {
                let k = (*k).min(x.len());
                grevlex_on(x, y, 0..k).then_with(|| grevlex_on(x, y, k..x.len()))
            }
            MonomialOrder::Blocks(blocks) => {
                for block in blocks {
                    match grevlex_on(x, y, block.iter().copied()) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = x.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = y.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                wa.cmp(&wb).then_with(|| MonomialOrder::GrevLex.cmp(a, b))
            }
        }
    }

    /// Whether the order is compatible with total degree (needed for the
    /// sugar heuristic to coincide with actual degree on homogeneous input).
    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    pub fn validate(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Lex | MonomialOrder::GrevLex => true,
            MonomialOrder::Elimination(k) => *k <= nvars,
            MonomialOrder::Blocks(blocks) => {
                let mut seen = vec![false; nvars];
                for &i in blocks.iter().flatten() {
                    if i >= nvars || seen[i] {
                        return false;
                    }
                    seen[i] = true;
                }
                seen.into_iter().all(|s| s)
            }
            MonomialOrder::Weighted(w) => w.len() == nvars && w.iter().all(|&x| x > 0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::new(SmallVec::from_slice(e))
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in grevlex with x > y > z
        let seq = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn elimination_order_prefers_block() {
        let o = MonomialOrder::Elimination(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(3, 7).len(), 36);
        assert_eq!(Monomial::all_of_degree(4, 17).len(), 1140);
        assert_eq!(Monomial::all_of_degree(1, 3), vec![m(&[3])]);
        let l = Monomial::all_of_degree(2, 2);
        assert_eq!(l, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn division_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 3, 0]);
        assert_eq!(a.lcm(&b), m(&[2, 3, 0]));
        assert!(m(&[1, 1, 0]).divides(&a));
        assert_eq!(m(&[1, 1, 0]).div(&a), Some(m(&[1, 0, 0])));
        assert!(m(&[1, 0, 0]).gcd_is_one(&m(&[0, 1, 1])));
    }
}
