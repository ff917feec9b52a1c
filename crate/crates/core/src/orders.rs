//! Order structures on measures: the convex cone of the weak space, the
//! Choquet order, envelopes and maximality, the lift to the product
//! space K x B_{E*}, comparisons inside N(mu), and the product
//! representation on the boundary grid.

use crate::boundary::{choquet_boundary, choquet_boundary_scalar};
use crate::error::Error;
use crate::exactgeom::dd::{dd_cone, ConstraintKind};
use crate::exactgeom::lp::{feasible, lp_solve_raw, LinearProgram, LpStatus};
use crate::exactgeom::rat::{dot, lex_cmp, Rat};
use crate::function_space::{weak_space, FunctionSpace, ScalarSpace};
use crate::normed_space::{
    dual_ball, dual_norm_exact, is_simplexoid, NormSpec,
};
use crate::representation::{
    functional_norm, representing_measures_scalar_space, ScalarMeasure, VectorMeasure,
};
use crate::Result;
use num_traits::{One, Signed, Zero};

/// The cone S(H_w) of H_w-convex functions, described by inequalities
/// `f(t) <= <sigma, f>` over vertices sigma of each M_t, together with
/// its generator description (lineality + extreme rays).
#[derive(Debug, Clone)]
pub struct ConvexCone {
    /// normals g with the cone = { f : g . f <= 0 for all g }
    pub inequalities: Vec<Vec<Rat>>,
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

impl ConvexCone {
    pub fn contains(&self, f: &[Rat]) -> bool {
        self.inequalities.iter().all(|g| !dot(g, f).is_positive())
    }
}

/// Build S(H_w); vertex constraints suffice by linearity in the measure.
pub fn convex_cone(space: &ScalarSpace) -> Result<ConvexCone> {
    let n = space.n();
    let mut inequalities = Vec::new();
    for t in 0..n {
        let (_, verts) = representing_measures_scalar_space(space, t)?;
        for sigma in verts {
            // f(t) - <sigma, f> <= 0
            let mut row = vec![Rat::zero(); n];
            row[t] += Rat::one();
            for (s, w) in sigma.values.iter().enumerate() {
                row[s] -= w;
            }
            if row.iter().any(|x| !x.is_zero()) {
                inequalities.push(row);
            }
        }
    }
    let cons: Vec<(Vec<Rat>, ConstraintKind)> = inequalities
        .iter()
        .map(|g| (g.clone(), ConstraintKind::Ineq))
        .collect();
    let cone = dd_cone(&cons, n);
    Ok(ConvexCone {
        inequalities,
        lineality: cone.lineality,
        rays: cone.rays,
    })
}

/// sigma1 <= sigma2 in the Choquet order of the weak space: the
/// difference must integrate every cone generator nonnegatively.
pub fn choquet_leq(
    cone: &ConvexCone,
    sigma1: &ScalarMeasure,
    sigma2: &ScalarMeasure,
) -> Result<bool> {
    if !sigma1.is_nonnegative() || !sigma2.is_nonnegative() {
        return Err(Error::NegativeMeasure);
    }
    let delta: Vec<Rat> = sigma2
        .values
        .iter()
        .zip(&sigma1.values)
        .map(|(a, b)| a - b)
        .collect();
    for l in &cone.lineality {
        if !dot(l, &delta).is_zero() {
            return Ok(false);
        }
    }
    for r in &cone.rays {
        if dot(r, &delta).is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Lower envelope: per point the sup of cone members below f.
pub fn lower_envelope(cone: &ConvexCone, f: &[Rat]) -> Result<Vec<Rat>> {
    let n = f.len();
    let mut ineq: Vec<(Vec<Rat>, Rat)> = cone
        .inequalities
        .iter()
        .map(|g| (g.clone(), Rat::zero()))
        .collect();
    for t in 0..n {
        let mut row = vec![Rat::zero(); n];
        row[t] = Rat::one();
        ineq.push((row, f[t].clone()));
    }
    let mut out = Vec::with_capacity(n);
    for t in 0..n {
        let mut objective = vec![Rat::zero(); n];
        objective[t] = -Rat::one(); // maximize g(t)
        let lp = LinearProgram {
            objective,
            eq: vec![],
            ineq: ineq.clone(),
        };
        let r = lp_solve_raw(&lp)?;
        match r.status {
            LpStatus::Optimal => out.push(-r.value.unwrap()),
            _ => {
                return Err(Error::InternalCheck(
                    "envelope program must be bounded and feasible".into(),
                ))
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct MaximalityReport {
    pub carried_by_boundary: bool,
    pub envelope_test: bool,
    pub criteria_agree: bool,
}

/// Two maximality criteria for a positive scalar measure: support inside
/// the boundary, and the envelope test over the canonical family (signed
/// coordinate indicators plus the cone generators).
pub fn maximality_check(space: &ScalarSpace, sigma: &ScalarMeasure) -> Result<MaximalityReport> {
    if !space.contains_constants() {
        return Err(Error::NoConstantsInHw);
    }
    if !sigma.is_nonnegative() {
        return Err(Error::NegativeMeasure);
    }
    let ch = choquet_boundary_scalar(space)?;
    let carried_by_boundary = sigma.support().iter().all(|s| ch.contains(s));

    let cone = convex_cone(space)?;
    let n = space.n();
    let mut family: Vec<Vec<Rat>> = Vec::new();
    for t in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[t] = Rat::one();
        family.push(e.clone());
        e[t] = -Rat::one();
        family.push(e);
    }
    family.extend(cone.rays.iter().cloned());
    family.extend(cone.lineality.iter().cloned());
    let mut envelope_test = true;
    for f in &family {
        let env = lower_envelope(&cone, f)?;
        let gap: Rat = (0..n).map(|t| (&f[t] - &env[t]) * &sigma.values[t]).sum();
        if !gap.is_zero() {
            envelope_test = false;
            break;
        }
    }
    Ok(MaximalityReport {
        carried_by_boundary,
        envelope_test,
        criteria_agree: carried_by_boundary == envelope_test,
    })
}

/// A finitely supported positive measure on K x B_{E*}.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductMeasure {
    /// (point index, dual vector, positive mass)
    pub atoms: Vec<(usize, Vec<Rat>, Rat)>,
}

impl ProductMeasure {
    pub fn new(mut atoms: Vec<(usize, Vec<Rat>, Rat)>) -> Result<Self> {
        atoms.retain(|(_, _, m)| !m.is_zero());
        if atoms.iter().any(|(_, _, m)| m.is_negative()) {
            return Err(Error::NegativeMeasure);
        }
        // canonical order and merge of identical (point, direction) atoms
        atoms.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| lex_cmp(&a.1, &b.1)));
        let mut merged: Vec<(usize, Vec<Rat>, Rat)> = Vec::new();
        for (t, x, m) in atoms {
            match merged.last_mut() {
                Some((lt, lx, lm)) if *lt == t && *lx == x => *lm += m,
                _ => merged.push((t, x, m)),
            }
        }
        Ok(ProductMeasure { atoms: merged })
    }

    pub fn mass(&self) -> Rat {
        self.atoms.iter().map(|(_, _, m)| m.clone()).sum()
    }

    /// Projection to K: total mass per point.
    pub fn first_marginal(&self, n: usize) -> ScalarMeasure {
        let mut v = vec![Rat::zero(); n];
        for (t, _, m) in &self.atoms {
            v[*t] += m;
        }
        ScalarMeasure::new(v)
    }

    /// Kernel at a point: the atoms above it, normalized to mass one.
    pub fn kernel_at(&self, t: usize) -> Option<Vec<(Vec<Rat>, Rat)>> {
        let total: Rat = self
            .atoms
            .iter()
            .filter(|(u, _, _)| *u == t)
            .map(|(_, _, m)| m.clone())
            .sum();
        if total.is_zero() {
            return None;
        }
        Some(
            self.atoms
                .iter()
                .filter(|(u, _, _)| *u == t)
                .map(|(_, x, m)| (x.clone(), m / &total))
                .collect(),
        )
    }
}

/// T*: push the product measure down to an E*-valued measure on K.
pub fn t_star(n: usize, d: usize, nu: &ProductMeasure) -> VectorMeasure {
    let mut values = vec![vec![Rat::zero(); d]; n];
    for (t, x, m) in &nu.atoms {
        for (cell, xi) in values[*t].iter_mut().zip(x) {
            *cell += m * xi;
        }
    }
    VectorMeasure::new(values)
}

/// W: lift a vector measure to one atom per nonzero row, placed at the
/// normalized dual direction with the row's mass.
pub fn w_map(target: &NormSpec, mu: &VectorMeasure) -> Result<ProductMeasure> {
    if target.smooth_dual() {
        return Err(Error::SmoothNormUnsupported);
    }
    let mut atoms = Vec::new();
    for (t, row) in mu.values.iter().enumerate() {
        if row.iter().all(|x| x.is_zero()) {
            continue;
        }
        let mass = dual_norm_exact(target, row)?;
        let dir: Vec<Rat> = row.iter().map(|x| x / &mass).collect();
        atoms.push((t, dir, mass));
    }
    ProductMeasure::new(atoms)
}

/// Finite-support dilation order on the dual ball: sigma1 <= sigma2 iff
/// each sigma1 atom splits into a sigma2-supported measure with the same
/// barycenter (Cartier–Fell–Meyer at finite support, an LP feasibility).
pub fn choquet_leq_ball(
    target: &NormSpec,
    sigma1: &[(Vec<Rat>, Rat)],
    sigma2: &[(Vec<Rat>, Rat)],
) -> Result<bool> {
    let d = target.dim;
    for (x, m) in sigma1.iter().chain(sigma2.iter()) {
        if m.is_negative() {
            return Err(Error::NegativeMeasure);
        }
        if dual_norm_exact(target, x)? > Rat::one() {
            return Err(Error::InvalidInput("atom outside the dual ball".into()));
        }
    }
    let mass1: Rat = sigma1.iter().map(|(_, m)| m.clone()).sum();
    let mass2: Rat = sigma2.iter().map(|(_, m)| m.clone()).sum();
    let bar = |sig: &[(Vec<Rat>, Rat)]| -> Vec<Rat> {
        let mut b = vec![Rat::zero(); d];
        for (x, m) in sig {
            for (cell, xi) in b.iter_mut().zip(x) {
                *cell += m * xi;
            }
        }
        b
    };
    if mass1 != mass2 || bar(sigma1) != bar(sigma2) {
        return Err(Error::BarycenterMismatch);
    }
    let (p, q) = (sigma1.len(), sigma2.len());
    let nv = p * q; // transition masses w_ij
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    // row sums: sum_j w_ij = m_i
    for i in 0..p {
        let mut row = vec![Rat::zero(); nv];
        for j in 0..q {
            row[i * q + j] = Rat::one();
        }
        eq.push((row, sigma1[i].1.clone()));
    }
    // column sums: sum_i w_ij = m'_j
    for j in 0..q {
        let mut row = vec![Rat::zero(); nv];
        for i in 0..p {
            row[i * q + j] = Rat::one();
        }
        eq.push((row, sigma2[j].1.clone()));
    }
    // per-atom barycenters: sum_j w_ij y_j = m_i x_i
    for i in 0..p {
        for k in 0..d {
            let mut row = vec![Rat::zero(); nv];
            for j in 0..q {
                row[i * q + j] = sigma2[j].0[k].clone();
            }
            eq.push((row, &sigma1[i].1 * &sigma1[i].0[k]));
        }
    }
    let ineq = crate::exactgeom::polytope::nonneg_constraints(nv);
    feasible(&eq, &ineq, nv)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NMuComparison {
    Leq,
    Geq,
    Equal,
    Incomparable,
}

/// Verify membership in N(mu): exact projection and equal mass. Equality
/// of masses forces unit-sphere atoms and the marginal |mu| pointwise.
pub fn verify_in_n_mu(
    space: &FunctionSpace,
    mu: &VectorMeasure,
    nu: &ProductMeasure,
) -> Result<()> {
    let (n, d) = (space.n(), space.d());
    if t_star(n, d, nu) != *mu {
        return Err(Error::NotInNMu);
    }
    if nu.mass() != mu.total_variation(&space.target)? {
        return Err(Error::NotInNMu);
    }
    Ok(())
}

/// Compare two members of N(mu) for a boundary mu: the order reverses
/// pointwise into the ball order of the kernels.
pub fn n_mu_compare(
    space: &FunctionSpace,
    mu: &VectorMeasure,
    nu1: &ProductMeasure,
    nu2: &ProductMeasure,
) -> Result<NMuComparison> {
    if !crate::boundary::is_boundary_vector(space, mu)? {
        return Err(Error::NotMaximal);
    }
    verify_in_n_mu(space, mu, nu1)?;
    verify_in_n_mu(space, mu, nu2)?;
    if nu1 == nu2 {
        return Ok(NMuComparison::Equal);
    }
    let n = space.n();
    let var = mu.variation_vector(&space.target)?;
    let mut leq = true; // nu1 < nu2
    let mut geq = true;
    for t in 0..n {
        if var.values[t].is_zero() {
            continue;
        }
        let k1 = nu1.kernel_at(t).ok_or(Error::NotInNMu)?;
        let k2 = nu2.kernel_at(t).ok_or(Error::NotInNMu)?;
        // nu1 <_{H,c} nu2 iff kernel2 < kernel1 in the ball order, per point
        if leq && !choquet_leq_ball(&space.target, &k2, &k1)? {
            leq = false;
        }
        if geq && !choquet_leq_ball(&space.target, &k1, &k2)? {
            geq = false;
        }
        if !leq && !geq {
            return Ok(NMuComparison::Incomparable);
        }
    }
    Ok(match (leq, geq) {
        (true, true) => NMuComparison::Equal,
        (true, false) => NMuComparison::Leq,
        (false, true) => NMuComparison::Geq,
        (false, false) => NMuComparison::Incomparable,
    })
}

#[derive(Debug, Clone)]
pub struct NMuMinimalReport {
    /// One minimal element: kernels supported on dual-ball vertices.
    pub minimal: ProductMeasure,
    pub unique: bool,
    /// When not unique: a point and two distinct vertex-supported kernels.
    pub witness: Option<(usize, Vec<(Vec<Rat>, Rat)>, Vec<(Vec<Rat>, Rat)>)>,
}

/// Minimal elements of N(mu): per point, vertex-supported probabilities
/// with barycenter mu_t / |mu|(t). Unique iff every such barycenter's
/// minimal face is a simplex; for a simplexoid dual ball this holds for
/// every mu.
pub fn n_mu_minimal(space: &FunctionSpace, mu: &VectorMeasure) -> Result<NMuMinimalReport> {
    if !crate::boundary::is_boundary_vector(space, mu)? {
        return Err(Error::NotMaximal);
    }
    let var = mu.variation_vector(&space.target)?;
    let mut atoms: Vec<(usize, Vec<Rat>, Rat)> = Vec::new();
    let mut unique = true;
    let mut witness = None;
    for (t, row) in mu.values.iter().enumerate() {
        let mass = &var.values[t];
        if mass.is_zero() {
            continue;
        }
        let dir: Vec<Rat> = row.iter().map(|x| x / mass).collect();
        let dec = crate::normed_space::barycenter_decomposition(&space.target, &dir)?;
        for (v, w) in &dec.atoms {
            atoms.push((t, v.clone(), w * mass));
        }
        if !dec.unique {
            unique = false;
            if witness.is_none() {
                witness = Some((t, dec.atoms.clone(), dec.alternative.clone().unwrap()));
            }
        }
    }
    // cross-check against the simplexoid criterion: a simplexoid dual
    // ball forces uniqueness for every mu
    if is_simplexoid(&space.target)? && !unique {
        return Err(Error::InternalCheck(
            "simplexoid dual ball must give unique minimal kernels".into(),
        ));
    }
    Ok(NMuMinimalReport {
        minimal: ProductMeasure::new(atoms)?,
        unique,
        witness,
    })
}

#[derive(Debug, Clone)]
pub struct ProductRepresentation {
    pub nu: ProductMeasure,
    pub mass: Rat,
}

/// Minimal-mass positive representation of a functional over the grid
/// Ch_H(K) x ext B_{E*}. The minimum equals the functional norm.
pub fn product_representation(
    space: &FunctionSpace,
    phi: &[Rat],
) -> Result<ProductRepresentation> {
    let w = weak_space(space);
    if !w.contains_constants() {
        return Err(Error::NoConstantsInHw);
    }
    if space.target.smooth_dual() {
        return Err(Error::SmoothNormUnsupported);
    }
    let ch = choquet_boundary(space)?;
    let dv = dual_ball(&space.target)?;
    let ext = dv.ext_points();
    let grid: Vec<(usize, &Vec<Rat>)> = ch
        .iter()
        .flat_map(|&t| ext.iter().map(move |e| (t, e)))
        .collect();
    let nv = grid.len();
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (j, pj) in phi.iter().enumerate() {
        let row: Vec<Rat> = grid
            .iter()
            .map(|(t, e)| dot(e, space.value(j, *t)))
            .collect();
        eq.push((row, pj.clone()));
    }
    let ineq = crate::exactgeom::polytope::nonneg_constraints(nv);
    let lp = LinearProgram {
        objective: vec![Rat::one(); nv],
        eq,
        ineq,
    };
    let out = lp_solve_raw(&lp)?;
    if out.status != LpStatus::Optimal {
        return Err(Error::InternalCheck(
            "boundary-grid representation must be feasible".into(),
        ));
    }
    let mass = out.value.unwrap();
    let (norm, _) = functional_norm(space, phi)?;
    if mass != norm {
        return Err(Error::MassMismatch);
    }
    let weights = out.point.unwrap();
    let atoms: Vec<(usize, Vec<Rat>, Rat)> = grid
        .iter()
        .zip(&weights)
        .filter(|(_, m)| !m.is_zero())
        .map(|((t, e), m)| (*t, (*e).clone(), m.clone()))
        .collect();
    Ok(ProductRepresentation {
        nu: ProductMeasure::new(atoms)?,
        mass,
    })
}
