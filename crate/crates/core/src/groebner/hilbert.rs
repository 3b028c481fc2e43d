//! Hilbert series numerators of monomial ideals.

use crate::poly::Monomial;

/// Drops generators divisible by another one.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn sub_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] -= y;
    }
}

/// `K(t)` with `HS(R/M) = K(t) / (1 − t)^n`, coefficients by ascending power.
pub(crate) fn numerator(gens: &[Monomial]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.gcd_is_one(b)));
    if coprime {
        return gens.iter().fold(vec![1], |acc, m| {
            let mut f = vec![0; m.degree() as usize + 1];
            f[0] = 1;
            f[m.degree() as usize] -= 1;
            mul(&acc, &f)
        });
    }
    // K(M' + (m)) = K(M') − t^{deg m} K(M' : m), pivoting on the last generator.
    let (pivot, rest) = gens.split_last().expect("nonempty");
    let colon: Vec<Monomial> = rest.iter().map(|g| pivot.div(&g.lcm(pivot)).expect("lcm")).collect();
    let mut out = numerator(rest);
    sub_shifted(&mut out, &numerator(&colon), pivot.degree() as usize);
    out
}

/// `(dimension, degree)` of `R/M` from the numerator over `(1 − t)^n`.
pub(crate) fn dimension_and_degree(mut k: Vec<i64>, n: usize) -> (usize, i64) {
    let mut powers = 0;
    // Divide by (1 − t) while K(1) = 0.
    while powers < n && k.iter().sum::<i64>() == 0 && k.iter().any(|&c| c != 0) {
        let mut q = vec![0; k.len() - 1];
        let mut acc = 0;
        for i in 0..k.len() - 1 {
            acc += k[i];
            q[i] = acc;
        }
        k = q;
        powers += 1;
    }
    (n - powers, k.iter().sum())
}
