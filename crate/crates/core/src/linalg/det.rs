use super::Matrix;
use crate::ring::Ring;

/// How `Matrix::det_with` evaluates a determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DetStrategy {
    #[default]
    Auto,
    Bareiss,
    Cofactor,
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Laplace expansion along the first row.
pub(super) fn cofactor<R: Ring>(m: &Matrix<R>) -> R::Elem {
    let cols: Vec<usize> = (0..m.cols()).collect();
    cofactor_rec(m, 0, &cols)
}

fn cofactor_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R::Elem {
    let r = m.ring();
    match cols.len() {
        0 => return r.one(),
        1 => return m.get(row, cols[0]).clone(),
        _ => {}
    }
    let mut acc = r.zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = m.get(row, c);
        if r.is_zero(a) {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let sub = cofactor_rec(m, row + 1, &rest);
        if r.is_zero(&sub) {
            continue;
        }
        let t = r.mul(a, &sub);
        if pos % 2 == 0 {
            r.add_assign(&mut acc, &t);
        } else {
            acc = r.sub(&acc, &t);
        }
    }
    acc
}

/// Fraction-free Gaussian elimination. Every division is exact in the
/// coefficient domain; the pivot in each column is the lightest nonzero
/// candidate.
pub(super) fn bareiss<R: Ring>(m: &Matrix<R>) -> R::Elem {
    let n = m.rows();
    let r = m.ring().clone();
    if n == 0 {
        return r.one();
    }
    let mut a: Vec<Vec<R::Elem>> = m.to_rows();
    let mut prev = r.one();
    let mut negate = false;
    for k in 0..n {
        let piv = (k..n)
            .filter(|&i| !r.is_zero(&a[i][k]))
            .min_by_key(|&i| (r.weight(&a[i][k]), a[i][k..].iter().filter(|x| !r.is_zero(x)).count()));
        let Some(piv) = piv else {
            return r.zero();
        };
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let akk = &pivot_row[k];
        let unit_prev = r.is_one(&prev);
        let same_scale = *akk == prev;
        for row in bottom.iter_mut() {
            let aik = row[k].clone();
            let eliminate = !r.is_zero(&aik);
            if !eliminate && same_scale {
                continue;
            }
            for j in k + 1..n {
                let aij = &row[j];
                let mut v = if r.is_zero(aij) { r.zero() } else { r.mul(akk, aij) };
                if eliminate && !r.is_zero(&pivot_row[j]) {
                    v = r.sub(&v, &r.mul(&aik, &pivot_row[j]));
                }
                if !unit_prev && !r.is_zero(&v) {
                    v = r.exact_div(&v, &prev).expect("Bareiss division must be exact");
                }
                row[j] = v;
            }
            row[k] = r.zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        r.neg(&d)
    } else {
        d
    }
}
