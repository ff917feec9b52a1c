//! Choquet boundary computation, the equivalent-condition report, and
//! the boundary-measure predicate.

use crate::error::Error;
use crate::exactgeom::lp::is_extreme_in_hrep;
use crate::exactgeom::polytope::{is_extreme_point, vertex_enumeration, HRep};
use crate::exactgeom::rat::{neg, Rat};
use crate::function_space::{hs_evaluation, weak_space, FunctionSpace, OperatorMatrix, ScalarSpace};
use crate::normed_space::dual_ball;
use crate::representation::{ScalarMeasure, VectorMeasure};
use crate::Result;
use num_traits::{One, Zero};

/// Boundary of a scalar space: points whose evaluation functional is
/// extreme in the absolutely convex hull of all evaluations (the dual
/// unit ball at finite scale).
pub fn choquet_boundary_scalar(space: &ScalarSpace) -> Result<Vec<usize>> {
    let rows: Vec<Vec<Rat>> = (0..space.n()).map(|t| space.evaluation(t)).collect();
    let mut gens: Vec<Vec<Rat>> = rows.clone();
    gens.extend(rows.iter().map(|r| neg(r)));
    let mut out = Vec::new();
    for (t, row) in rows.iter().enumerate() {
        if is_extreme_point(row, &gens)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// Choquet boundary of H, computed through the weak space.
pub fn choquet_boundary(space: &FunctionSpace) -> Result<Vec<usize>> {
    choquet_boundary_scalar(&weak_space(space))
}

/// The five equivalent boundary conditions at a point, each computed by
/// its own route, plus the operator-ball extremality (which is *not*
/// equivalent) and an optional probe at a specific dual functional.
#[derive(Debug, Clone)]
pub struct BoundaryConditions {
    /// phi_H(t) extreme in the absolutely convex hull of the operator
    /// evaluations (flattened matrices).
    pub cond1: bool,
    /// phi_Hw(t) extreme in the weak-space dual ball.
    pub cond2: bool,
    /// phi_Hs(t, x*) extreme for some x* in the dual ball (vertices
    /// suffice: H_s elements are affine in x*).
    pub cond3: bool,
    /// phi_Hs(t, e*) extreme for some extreme e* of the dual ball.
    pub cond4: bool,
    /// When H(t) = E: phi_Hs(t, e*) extreme for every extreme e*.
    pub cond5: Option<bool>,
    /// phi_H(t) extreme in the full operator unit ball.
    pub operator_ball_extreme: Option<bool>,
    /// For a probe x*: is phi_Hs(t, x*) equal to phi_Hs(t, 0)?
    pub probe_equals_zero_evaluation: Option<bool>,
    /// For a probe x*: is phi_Hs(t, x*) extreme?
    pub probe_extreme: Option<bool>,
}

pub fn boundary_conditions_report(
    space: &FunctionSpace,
    t: usize,
    probe_x_star: Option<&[Rat]>,
) -> Result<BoundaryConditions> {
    if space.target.smooth_dual() {
        return Err(Error::SmoothNormUnsupported);
    }
    let w = weak_space(space);

    // cond2 on the weak space
    let wrows: Vec<Vec<Rat>> = (0..space.n()).map(|u| w.evaluation(u)).collect();
    let mut wgens = wrows.clone();
    wgens.extend(wrows.iter().map(|r| neg(r)));
    let cond2 = is_extreme_point(&wrows[t], &wgens)?;

    // cond1 on flattened operator evaluations
    let orows: Vec<Vec<Rat>> = (0..space.n())
        .map(|u| OperatorMatrix::evaluation(space, u).flatten())
        .collect();
    let mut ogens = orows.clone();
    ogens.extend(orows.iter().map(|r| neg(r)));
    let cond1 = is_extreme_point(&orows[t], &ogens)?;

    // H_s evaluations over K x dual-ball vertices
    let dv = dual_ball(&space.target)?;
    let mut hs_gens: Vec<Vec<Rat>> = Vec::new();
    for u in 0..space.n() {
        for y in dv.ext_points() {
            hs_gens.push(hs_evaluation(space, &w, u, y));
        }
    }
    let mut hs_all = hs_gens.clone();
    hs_all.extend(hs_gens.iter().map(|r| neg(r)));
    let mut any_extreme = false;
    let mut all_extreme = true;
    for y in dv.ext_points() {
        let ev = hs_evaluation(space, &w, t, y);
        let ext = is_extreme_point(&ev, &hs_all)?;
        any_extreme |= ext;
        all_extreme &= ext;
    }
    let cond3 = any_extreme;
    let cond4 = any_extreme;
    let h_t_full = {
        let rows: Vec<Vec<Rat>> = (0..space.m()).map(|j| space.value(j, t).to_vec()).collect();
        crate::exactgeom::linalg::rank(&rows) == space.d()
    };
    let cond5 = if h_t_full { Some(all_extreme) } else { None };

    // operator ball: binding-rank extremality of phi_H(t) in
    // { U : ||U h|| <= 1 for h in the vertices of B_H }
    let operator_ball_extreme = {
        let ball = space.unit_ball_constraints()?;
        let bh = vertex_enumeration(
            space.m(),
            &HRep {
                equalities: vec![],
                inequalities: ball,
                incidence: None,
            },
        )?;
        let dm = space.d() * space.m();
        let mut ineq: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for c in &bh {
            for y in dv.ext_points() {
                // <y, U c> = sum_{i,j} y_i c_j U_{ij}
                let mut row = vec![Rat::zero(); dm];
                for (i, yi) in y.iter().enumerate() {
                    if yi.is_zero() {
                        continue;
                    }
                    for (j, cj) in c.iter().enumerate() {
                        row[i * space.m() + j] = yi * cj;
                    }
                }
                ineq.push((row, Rat::one()));
            }
        }
        let phit = OperatorMatrix::evaluation(space, t).flatten();
        Some(is_extreme_in_hrep(&phit, &[], &ineq)?)
    };

    let (probe_equals_zero_evaluation, probe_extreme) = match probe_x_star {
        Some(xs) => {
            let ev = hs_evaluation(space, &w, t, xs);
            let zero = hs_evaluation(space, &w, t, &vec![Rat::zero(); space.d()]);
            let extreme = match is_extreme_point(&ev, &hs_all) {
                Ok(b) => b,
                Err(Error::PointNotInHull) => false,
                Err(e) => return Err(e),
            };
            (Some(ev == zero), Some(extreme))
        }
        None => (None, None),
    };

    Ok(BoundaryConditions {
        cond1,
        cond2,
        cond3,
        cond4,
        cond5,
        operator_ball_extreme,
        probe_equals_zero_evaluation,
        probe_extreme,
    })
}

/// Is the scalar measure carried by the Choquet boundary? Exact for any
/// target since only the support matters.
pub fn is_boundary_scalar(space: &FunctionSpace, mu: &ScalarMeasure) -> Result<bool> {
    let ch = choquet_boundary(space)?;
    Ok(mu.support().iter().all(|s| ch.contains(s)))
}

/// Is the vector measure carried by the Choquet boundary? The variation
/// |mu| has irrational point masses over smooth targets, so those are
/// rejected; scalar measures are always exact.
pub fn is_boundary_vector(space: &FunctionSpace, mu: &VectorMeasure) -> Result<bool> {
    if space.target.smooth_dual() {
        return Err(Error::SmoothNormUnsupported);
    }
    // per-point mass is the dual norm; its support is the row support
    let var = mu.variation_vector(&space.target)?;
    let ch = choquet_boundary(space)?;
    Ok(var.support().iter().all(|s| ch.contains(s)))
}

/// Boundary membership for a scalar measure over a scalar space.
pub fn is_boundary_scalar_space(space: &ScalarSpace, mu: &ScalarMeasure) -> Result<bool> {
    let ch = choquet_boundary_scalar(space)?;
    Ok(mu.support().iter().all(|s| ch.contains(s)))
}

/// One-line summary used by reports: the boundary as labels.
pub fn boundary_labels(space: &FunctionSpace) -> Result<Vec<String>> {
    Ok(choquet_boundary(space)?
        .into_iter()
        .map(|t| space.points.label(t).to_string())
        .collect())
}

