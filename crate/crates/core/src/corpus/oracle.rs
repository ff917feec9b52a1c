//! Brute-force oracles used to recompute derived expectations before
//! comparison. Deliberately independent of the simplex and double
//! description code paths: everything here is subset enumeration plus
//! exact Gaussian elimination.

use crate::exactgeom::linalg::{rank, solve, sort_dedup};
use crate::exactgeom::polytope::HRep;
use crate::exactgeom::rat::{dot, Rat};

/// All vertices of the bounded polyhedron described by `hrep`, found by
/// solving every candidate binding subsystem.
pub fn brute_force_vertices(dim: usize, hrep: &HRep) -> Vec<Vec<Rat>> {
    let eq_rows: Vec<Vec<Rat>> = hrep.equalities.iter().map(|(a, _)| a.clone()).collect();
    let eq_rank = rank(&eq_rows);
    let free = dim.saturating_sub(eq_rank);
    let n = hrep.inequalities.len();
    let mut out: Vec<Vec<Rat>> = Vec::new();
    let mut subset: Vec<usize> = Vec::new();
    enumerate_subsets(n, free, &mut subset, &mut |chosen| {
        let mut a: Vec<Vec<Rat>> = eq_rows.clone();
        let mut b: Vec<Rat> = hrep.equalities.iter().map(|(_, c)| c.clone()).collect();
        for &k in chosen {
            a.push(hrep.inequalities[k].0.clone());
            b.push(hrep.inequalities[k].1.clone());
        }
        if rank(&a) < dim {
            return;
        }
        if let Some(x) = solve(&a, &b) {
            let feasible = hrep.inequalities.iter().all(|(r, c)| dot(r, &x) <= *c)
                && hrep.equalities.iter().all(|(r, c)| &dot(r, &x) == c);
            if feasible {
                out.push(x);
            }
        }
    });
    sort_dedup(out)
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if current.len() == k {
        visit(current);
        return;
    }
    let start = current.last().map_or(0, |&x| x + 1);
    for i in start..n {
        current.push(i);
        enumerate_subsets(n, k, current, visit);
        current.pop();
    }
}

/// Minimum of a linear objective over a bounded polyhedron, evaluated on
/// the brute-forced vertex set. None when infeasible.
pub fn brute_force_lp_min(
    dim: usize,
    objective: &[Rat],
    hrep: &HRep,
) -> Option<Rat> {
    brute_force_vertices(dim, hrep)
        .iter()
        .map(|x| dot(objective, x))
        .min()
}

/// Is `p` a convex combination of `points`? Solved by brute-forcing the
/// weight polytope's vertices.
pub fn brute_force_in_hull(p: &[Rat], points: &[Vec<Rat>]) -> bool {
    let n = points.len();
    if n == 0 {
        return false;
    }
    let d = p.len();
    let mut equalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for coord in 0..d {
        let row: Vec<Rat> = points.iter().map(|x| x[coord].clone()).collect();
        equalities.push((row, p[coord].clone()));
    }
    equalities.push((
        vec![Rat::from_integer(1.into()); n],
        Rat::from_integer(1.into()),
    ));
    let hrep = HRep {
        equalities,
        inequalities: crate::exactgeom::polytope::nonneg_constraints(n),
        incidence: None,
    };
    !brute_force_vertices(n, &hrep).is_empty()
}

/// Extreme-point test by brute force: member of the hull but not of the
/// hull of the other generators.
pub fn brute_force_extreme(p: &[Rat], generators: &[Vec<Rat>]) -> Option<bool> {
    let gens = sort_dedup(generators.to_vec());
    if !brute_force_in_hull(p, &gens) {
        return None;
    }
    let others: Vec<Vec<Rat>> = gens.into_iter().filter(|g| g.as_slice() != p).collect();
    if others.is_empty() {
        return Some(true);
    }
    Some(!brute_force_in_hull(p, &others))
}

/// Affine dimension by a route independent of `rref`: greedy growth of
/// an affinely independent subset, testing independence with
/// determinant-free elimination over explicit difference vectors.
pub fn brute_force_affine_dim(points: &[Vec<Rat>]) -> usize {
    let Some((first, rest)) = points.split_first() else {
        return 0;
    };
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for p in rest {
        let d: Vec<Rat> = p.iter().zip(first).map(|(a, b)| a - b).collect();
        let mut candidate = dirs.clone();
        candidate.push(d);
        if independent(&candidate) {
            dirs = candidate;
        }
    }
    dirs.len()
}

fn independent(rows: &[Vec<Rat>]) -> bool {
    rank(rows) == rows.len()
}
