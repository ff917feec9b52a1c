//! Double description method for polyhedral cones, with exact rational
//! arithmetic and combinatorial adjacency tests.
//!
//! The cone is `{ z : m.z <= 0 }` for inequality constraints and
//! `{ z : m.z = 0 }` for equality constraints. The description keeps a
//! lineality basis separate from the extreme rays; rays are L1-normalized
//! so deduplication is exact equality.

use super::rat::{dot, l1_normalize, lex_cmp, neg, Rat};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintKind {
    Ineq,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Cone {
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<Rat>,
    zero: BitSet,
}

/// Fixed-width bit set over the constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(nbits: usize) -> Self {
        BitSet {
            words: vec![0; nbits.div_ceil(64)],
        }
    }
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn intersect(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }
    fn contains_all(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == *b)
    }
}

/// Run double description over the given constraints (in order).
pub fn dd_cone(constraints: &[(Vec<Rat>, ConstraintKind)], dim: usize) -> Cone {
    let total = constraints.len();
    let mut lineality: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut v = vec![Rat::zero(); dim];
            v[i] = Rat::from_integer(1.into());
            v
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (j, (m, kind)) in constraints.iter().enumerate() {
        if let Some(idx) = lineality.iter().position(|l| !dot(m, l).is_zero()) {
            // a lineality vector leaves the hyperplane: reduce along it
            let l = lineality.remove(idx);
            let lbar = if dot(m, &l).is_positive() { neg(&l) } else { l };
            let mlbar = dot(m, &lbar);
            for l2 in lineality.iter_mut() {
                let f = &dot(m, l2) / &mlbar;
                if !f.is_zero() {
                    for (a, b) in l2.iter_mut().zip(&lbar) {
                        *a -= &f * b;
                    }
                }
            }
            for r in rays.iter_mut() {
                let f = &dot(m, &r.v) / &mlbar;
                if !f.is_zero() {
                    for (a, b) in r.v.iter_mut().zip(&lbar) {
                        *a -= &f * b;
                    }
                    r.v = l1_normalize(&r.v);
                }
                r.zero.set(j);
            }
            if *kind == ConstraintKind::Ineq {
                // lbar itself survives as a ray strictly inside the halfspace
                let mut zero = BitSet::new(total);
                for k in 0..j {
                    zero.set(k);
                }
                rays.push(Ray {
                    v: l1_normalize(&lbar),
                    zero,
                });
            }
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(m, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::new();
        let mut pos = Vec::new();
        let mut nonpos = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            match v.cmp(&Rat::zero()) {
                Ordering::Greater => pos.push(i),
                Ordering::Equal => {
                    let mut r = rays[i].clone();
                    r.zero.set(j);
                    next.push(r);
                }
                Ordering::Less => {
                    if *kind == ConstraintKind::Ineq {
                        nonpos.push(i);
                        next.push(rays[i].clone());
                    } else {
                        nonpos.push(i);
                    }
                }
            }
        }
        for &ip in &pos {
            for &in_ in &nonpos {
                if !adjacent(&rays, ip, in_) {
                    continue;
                }
                // combination with m.z = 0
                let (a, b) = (&vals[ip], &vals[in_]);
                let mut v = Vec::with_capacity(dim);
                for (x, y) in rays[ip].v.iter().zip(&rays[in_].v) {
                    // a * y - b * x  (positive combination since b < 0 < a)
                    v.push(a * y - b * x);
                }
                if v.iter().all(|x| x.is_zero()) {
                    continue;
                }
                let mut zero = rays[ip].zero.intersect(&rays[in_].zero);
                zero.set(j);
                next.push(Ray {
                    v: l1_normalize(&v),
                    zero,
                });
            }
        }
        // dedupe exact duplicates
        next.sort_by(|x, y| lex_cmp(&x.v, &y.v));
        next.dedup_by(|x, y| x.v == y.v);
        rays = next;
    }

    let mut out: Vec<Vec<Rat>> = rays.into_iter().map(|r| r.v).collect();
    out.sort_by(|a, b| lex_cmp(a, b));
    out.dedup();
    Cone {
        lineality: super::linalg::rref(&lineality).0,
        rays: out,
    }
}

/// Combinatorial adjacency: two rays are adjacent iff no third ray's
/// zero set contains the intersection of theirs.
fn adjacent(rays: &[Ray], i: usize, k: usize) -> bool {
    let z = rays[i].zero.intersect(&rays[k].zero);
    for (t, r) in rays.iter().enumerate() {
        if t != i && t != k && r.zero.contains_all(&z) {
            return false;
        }
    }
    true
}
