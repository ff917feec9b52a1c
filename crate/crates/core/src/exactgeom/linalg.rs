//! Dense exact linear algebra over rationals: row reduction, rank,
//! null spaces, linear solves. Everything is small and dense here.

use super::rat::{lex_cmp, Rat};
use num_traits::{One, Zero};

/// Reduced row echelon form. Returns the nonzero rows and the pivot
/// column of each row. The result is the canonical basis of the row
/// space: two matrices span the same row space iff their rrefs agree.
pub fn rref(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return (vec![], vec![]);
    }
    let ncols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &m[r][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    rref(rows).1.len()
}

/// Canonical basis of {x : rows * x = 0}, one vector per free column,
/// ordered by free-column index.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (m, pivots) = rref(rows);
    let mut basis = Vec::new();
    let piv_set: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    for free in 0..ncols {
        if piv_set[free] {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// One solution of `rows * x = rhs`, or None when inconsistent.
pub fn solve(rows: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let (m, pivots) = rref(&aug);
    if pivots.iter().any(|&p| p == ncols) {
        return None; // a pivot in the rhs column
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &p) in m.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Is `v` in the row space of `basis`?
pub fn in_span(v: &[Rat], basis: &[Vec<Rat>]) -> bool {
    let r0 = rank(basis);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(&ext) == r0
}

/// Do the two row sets span the same space?
pub fn same_span(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    rref(a).0 == rref(b).0
}

/// Is span(a) contained in span(b)?
pub fn span_contained(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> bool {
    a.iter().all(|v| in_span(v, b))
}

pub fn mat_vec(rows: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    rows.iter().map(|r| super::rat::dot(r, x)).collect()
}

pub fn transpose(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if rows.is_empty() {
        return vec![];
    }
    let ncols = rows[0].len();
    (0..ncols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = Rat::one();
            row
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let bt = transpose(b);
    a.iter()
        .map(|row| bt.iter().map(|col| super::rat::dot(row, col)).collect())
        .collect()
}

/// Affine dimension of a point set (dimension of its affine hull).
pub fn affine_dim(points: &[Vec<Rat>]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => {
            let dirs: Vec<Vec<Rat>> = rest.iter().map(|p| super::rat::sub(p, p0)).collect();
            rank(&dirs)
        }
    }
}

/// Sort and deduplicate a list of rational vectors (canonical order).
pub fn sort_dedup(mut vs: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    vs.sort_by(|a, b| lex_cmp(a, b));
    vs.dedup();
    vs
}
