//! Polytopes with exact vertex and facet representations.

use super::dd::{dd_cone, ConstraintKind};
use super::linalg::{affine_dim, mat_mul, nullspace, rref, solve, sort_dedup, transpose};
use super::lp::feasible;
use super::rat::{dot, l1_normalize, lex_cmp, sub, Rat};
use crate::error::Error;
use num_traits::{One, Zero};

/// Half-space description: equalities `a.x = b` plus inequalities
/// `a.x <= b`, with optional vertex incidence per inequality.
#[derive(Debug, Clone, Default)]
pub struct HRep {
    pub equalities: Vec<(Vec<Rat>, Rat)>,
    pub inequalities: Vec<(Vec<Rat>, Rat)>,
    /// For each inequality, the indices of the incident vertices.
    pub incidence: Option<Vec<Vec<usize>>>,
}

/// A polytope in an ambient rational space. The vertex list is always
/// deduplicated, canonically ordered, and consists of extreme points.
#[derive(Debug, Clone)]
pub struct Polytope {
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub hrep: Option<HRep>,
}

impl Polytope {
    /// Build from a point cloud; non-extreme points are filtered out.
    pub fn from_points(dim: usize, points: &[Vec<Rat>]) -> Result<Polytope, Error> {
        for p in points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch("polytope point".into()));
            }
        }
        let pts = sort_dedup(points.to_vec());
        let mut vertices = Vec::new();
        for p in &pts {
            if is_extreme_point(p, &pts)? {
                vertices.push(p.clone());
            }
        }
        Ok(Polytope {
            dim,
            vertices,
            hrep: None,
        })
    }

    /// Build from a half-space description by vertex enumeration.
    pub fn from_hrep(dim: usize, hrep: HRep) -> Result<Polytope, Error> {
        let vertices = vertex_enumeration(dim, &hrep)?;
        Ok(Polytope {
            dim,
            vertices,
            hrep: Some(hrep),
        })
    }

    pub fn affine_dim(&self) -> usize {
        affine_dim(&self.vertices)
    }

    pub fn is_simplex(&self) -> bool {
        !self.vertices.is_empty() && self.vertices.len() == self.affine_dim() + 1
    }

    /// Ensure the facet description is present (computed from vertices).
    pub fn with_facets(mut self) -> Result<Polytope, Error> {
        if self.hrep.as_ref().is_some_and(|h| h.incidence.is_some()) {
            return Ok(self);
        }
        let h = facet_enumeration(self.dim, &self.vertices)?;
        self.hrep = Some(h);
        Ok(self)
    }
}

/// Exact vertex enumeration of a bounded polyhedron given by `hrep`,
/// via double description of the homogenization cone.
pub fn vertex_enumeration(dim: usize, hrep: &HRep) -> Result<Vec<Vec<Rat>>, Error> {
    let mut constraints: Vec<(Vec<Rat>, ConstraintKind)> = Vec::new();
    // equalities first: they reduce lineality immediately
    for (a, b) in &hrep.equalities {
        let mut m = a.clone();
        m.push(-b.clone());
        constraints.push((m, ConstraintKind::Eq));
    }
    // homogenization coordinate is nonnegative: -t <= 0
    let mut tcon = vec![Rat::zero(); dim + 1];
    tcon[dim] = -Rat::one();
    constraints.push((tcon, ConstraintKind::Ineq));
    // pair antipodal inequality normals next to each other; slab-like
    // inputs then keep the intermediate descriptions small
    let mut ineqs: Vec<Vec<Rat>> = hrep
        .inequalities
        .iter()
        .map(|(a, b)| {
            let mut m = a.clone();
            m.push(-b.clone());
            m
        })
        .collect();
    ineqs = pair_antipodal(ineqs);
    for m in ineqs {
        constraints.push((m, ConstraintKind::Ineq));
    }

    let cone = dd_cone(&constraints, dim + 1);
    if !cone.lineality.is_empty() {
        return Err(Error::UnboundedPolyhedron);
    }
    let mut vertices = Vec::new();
    for r in &cone.rays {
        let t = &r[dim];
        if t.is_zero() {
            if r.iter().any(|x| !x.is_zero()) {
                return Err(Error::UnboundedPolyhedron);
            }
        } else {
            vertices.push(r[..dim].iter().map(|x| x / t).collect());
        }
    }
    Ok(sort_dedup(vertices))
}

/// Order homogenized rows so that rows with antipodal normal parts sit
/// next to each other; slab-like inputs then keep the intermediate
/// double-description small.
fn pair_antipodal(mut ms: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let dim = match ms.first() {
        Some(m) => m.len() - 1,
        None => return ms,
    };
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(ms.len());
    while !ms.is_empty() {
        let m = ms.remove(0);
        let nrm = m[..dim].to_vec();
        out.push(m);
        if nrm.iter().all(|x| x.is_zero()) {
            continue;
        }
        let neg: Vec<Rat> = nrm.iter().map(|x| -x).collect();
        if let Some(i) = ms.iter().position(|x| parallel(&x[..dim], &neg)) {
            let paired = ms.remove(i);
            out.push(paired);
        }
    }
    out
}

fn parallel(a: &[Rat], b: &[Rat]) -> bool {
    if a.iter().all(|x| x.is_zero()) || b.iter().all(|x| x.is_zero()) {
        return false;
    }
    l1_normalize(a) == l1_normalize(b)
}

/// Irredundant facet description of `conv(vertices)` with vertex-facet
/// incidence. When the hull is not full-dimensional the inequalities are
/// facets relative to the affine hull and the affine hull itself is
/// returned through the equality list.
pub fn facet_enumeration(dim: usize, vertices: &[Vec<Rat>]) -> Result<HRep, Error> {
    let verts = sort_dedup(vertices.to_vec());
    if verts.len() < 2 {
        return Err(Error::DegenerateInput(
            "facet enumeration needs at least 2 distinct points".into(),
        ));
    }
    let x0 = verts[0].clone();
    let dirs: Vec<Vec<Rat>> = verts.iter().map(|v| sub(v, &x0)).collect();
    let (basis, _) = rref(&dirs);
    let k = basis.len();

    // affine hull: normals e with e.(x - x0) = 0
    let normals = nullspace(&basis, dim);
    let equalities: Vec<(Vec<Rat>, Rat)> = normals
        .into_iter()
        .map(|e| {
            let b = dot(&e, &x0);
            (e, b)
        })
        .collect();

    // coordinates of each vertex in the hull basis: dirs = Y * basis
    let bt = transpose(&basis);
    let ys: Vec<Vec<Rat>> = dirs
        .iter()
        .map(|d| {
            solve(&bt, d).expect("direction must lie in the affine hull")
        })
        .collect();

    // facets of conv(ys) in R^k: extreme rays of {(a,b) : a.y - b <= 0}
    let cons: Vec<(Vec<Rat>, ConstraintKind)> = ys
        .iter()
        .map(|y| {
            let mut m = y.clone();
            m.push(-Rat::one());
            (m, ConstraintKind::Ineq)
        })
        .collect();
    let cone = dd_cone(&cons, k + 1);
    if !cone.lineality.is_empty() {
        return Err(Error::InternalCheck(
            "dual cone of a spanning point set has lineality".into(),
        ));
    }

    // map (a, b) back to ambient normals: a_amb = N^T (N N^T)^(-1) a
    // where basis rows are N, so that a_amb . (x - x0) = a . y(x).
    let nnt = mat_mul(&basis, &transpose(&basis));
    let mut facets: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for ray in &cone.rays {
        let a = &ray[..k];
        let b = &ray[k];
        if a.iter().all(|x| x.is_zero()) {
            continue; // the trivial ray (0, 1)
        }
        let w = solve(&nnt, a).expect("Gram matrix is invertible");
        let mut amb = vec![Rat::zero(); dim];
        for (wi, brow) in w.iter().zip(&basis) {
            for (x, bij) in amb.iter_mut().zip(brow) {
                *x += wi * bij;
            }
        }
        let offset = b + &dot(&amb, &x0);
        let mut cat = amb.clone();
        cat.push(offset.clone());
        let norm = l1_normalize(&cat);
        let (na, nb) = (norm[..dim].to_vec(), norm[dim].clone());
        facets.push((na, nb));
    }
    facets.sort_by(|x, y| lex_cmp(&x.0, &y.0).then_with(|| x.1.cmp(&y.1)));
    facets.dedup();

    let incidence: Vec<Vec<usize>> = facets
        .iter()
        .map(|(a, b)| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, v)| &dot(a, v) == b)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    Ok(HRep {
        equalities,
        inequalities: facets,
        incidence: Some(incidence),
    })
}

/// Is `p` an extreme point of `conv(generators)`? Duplicates of `p` are
/// removed before the test; errors with `PointNotInHull` when `p` is not
/// even a member.
pub fn is_extreme_point(p: &[Rat], generators: &[Vec<Rat>]) -> Result<bool, Error> {
    let gens = sort_dedup(generators.to_vec());
    if !in_hull(p, &gens)? {
        return Err(Error::PointNotInHull);
    }
    let others: Vec<Vec<Rat>> = gens.into_iter().filter(|g| g.as_slice() != p).collect();
    if others.is_empty() {
        return Ok(true);
    }
    Ok(!in_hull(p, &others)?)
}

/// LP feasibility: is `p` a convex combination of `points`?
pub fn in_hull(p: &[Rat], points: &[Vec<Rat>]) -> Result<bool, Error> {
    if points.is_empty() {
        return Ok(false);
    }
    let n = points.len();
    let d = p.len();
    // variables: lambda_1..lambda_n >= 0, sum = 1, sum lambda_i x_i = p
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(d + 1);
    for coord in 0..d {
        let row: Vec<Rat> = points.iter().map(|x| x[coord].clone()).collect();
        eq.push((row, p[coord].clone()));
    }
    eq.push((vec![Rat::one(); n], Rat::one()));
    let ineq: Vec<(Vec<Rat>, Rat)> = (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = -Rat::one();
            (row, Rat::zero())
        })
        .collect();
    feasible(&eq, &ineq, n)
}

/// The polar `{y : v.y <= 1 for all vertices v}` of a polytope with zero
/// in its interior, as a vertex-enumerated polytope.
pub fn polar(dim: usize, vertices: &[Vec<Rat>]) -> Result<Polytope, Error> {
    let hrep = HRep {
        equalities: vec![],
        inequalities: vertices
            .iter()
            .map(|v| (v.clone(), Rat::one()))
            .collect(),
        incidence: None,
    };
    Polytope::from_hrep(dim, hrep)
}

/// Nonnegativity constraints `-x_i <= 0` for all coordinates; a common
/// inequality block.
pub fn nonneg_constraints(n: usize) -> Vec<(Vec<Rat>, Rat)> {
    (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            row[i] = -Rat::one();
            (row, Rat::zero())
        })
        .collect()
}

/// Check that every vertex satisfies the H-representation, binding at
/// least where the incidence says so. Used as the self-verification pass.
pub fn verify_v_h_consistency(p: &Polytope) -> Result<(), Error> {
    let Some(h) = &p.hrep else {
        return Ok(());
    };
    for v in &p.vertices {
        for (a, b) in &h.equalities {
            if &dot(a, v) != b {
                return Err(Error::InternalCheck("vertex violates equality".into()));
            }
        }
        for (a, b) in &h.inequalities {
            if dot(a, v) > *b {
                return Err(Error::InternalCheck("vertex violates inequality".into()));
            }
        }
    }
    Ok(())
}

/// Canonical test: `vertex_enumeration(facet_enumeration(V)) == V`.
pub fn round_trip_vertices(dim: usize, vertices: &[Vec<Rat>]) -> Result<Vec<Vec<Rat>>, Error> {
    let h = facet_enumeration(dim, vertices)?;
    vertex_enumeration(dim, &h)
}

/// Rank-based extremality inside an H-representation (no vertex
/// enumeration needed).
pub use super::lp::is_extreme_in_hrep;
