//! Representing-measure polytopes, simpliciality verdicts, the two
//! H-affine function spaces, the dilation operator, and the finite
//! L1-predual test.

use crate::boundary::{choquet_boundary, is_boundary_vector};
use crate::error::Error;
use crate::exactgeom::linalg::{
    in_span, nullspace, rank, rref, same_span, sort_dedup, span_contained,
};
use crate::exactgeom::lp::{lp_solve_raw, LinearProgram, LpStatus};
use crate::exactgeom::polytope::{
    is_extreme_point, nonneg_constraints, polar, vertex_enumeration, HRep, Polytope,
};
use crate::exactgeom::rat::{dot, l1_norm, lex_cmp, Rat};
use crate::function_space::{
    composed_space, state_space, weak_space, FunctionSpace, ScalarSpace,
};
use crate::normed_space::{dual_ball, dual_norm_exact, NormKind, NormSpec};
use crate::Result;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Signed point masses on the finite compact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarMeasure {
    pub values: Vec<Rat>,
}

impl ScalarMeasure {
    pub fn new(values: Vec<Rat>) -> Self {
        ScalarMeasure { values }
    }

    pub fn dirac(n: usize, t: usize) -> Self {
        let mut v = vec![Rat::zero(); n];
        v[t] = Rat::one();
        ScalarMeasure { values: v }
    }

    pub fn total_variation(&self) -> Rat {
        l1_norm(&self.values)
    }

    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Integral of a scalar function given by its value vector.
    pub fn integrate(&self, f: &[Rat]) -> Rat {
        dot(&self.values, f)
    }
}

/// E*-valued point masses: row s is the dual vector mu({s}).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorMeasure {
    pub values: Vec<Vec<Rat>>,
}

impl VectorMeasure {
    pub fn new(values: Vec<Vec<Rat>>) -> Self {
        VectorMeasure { values }
    }

    pub fn zero(n: usize, d: usize) -> Self {
        VectorMeasure {
            values: vec![vec![Rat::zero(); d]; n],
        }
    }

    /// sigma (x) x*: the product measure with scalar part sigma.
    pub fn tensor(sigma: &ScalarMeasure, x_star: &[Rat]) -> Self {
        VectorMeasure {
            values: sigma
                .values
                .iter()
                .map(|w| x_star.iter().map(|x| w * x).collect())
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, row)| row.iter().any(|x| !x.is_zero()))
            .map(|(i, _)| i)
            .collect()
    }

    /// Total variation: the sum of per-point dual norms (polyhedral only).
    pub fn total_variation(&self, target: &NormSpec) -> Result<Rat> {
        let mut s = Rat::zero();
        for row in &self.values {
            s += dual_norm_exact(target, row)?;
        }
        Ok(s)
    }

    /// Per-point mass vector |mu| (polyhedral only).
    pub fn variation_vector(&self, target: &NormSpec) -> Result<ScalarMeasure> {
        let mut out = Vec::with_capacity(self.values.len());
        for row in &self.values {
            out.push(dual_norm_exact(target, row)?);
        }
        Ok(ScalarMeasure::new(out))
    }

    /// Action on a function space element given by coefficients.
    pub fn act(&self, space: &FunctionSpace, coeff: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for t in 0..space.n() {
            s += dot(&self.values[t], &space.eval(coeff, t));
        }
        s
    }

    /// Action on each basis function: the functional on H it represents.
    pub fn functional(&self, space: &FunctionSpace) -> Vec<Rat> {
        (0..space.m())
            .map(|j| {
                (0..space.n())
                    .map(|t| dot(&self.values[t], space.value(j, t)))
                    .sum()
            })
            .collect()
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn from_flat(n: usize, d: usize, flat: &[Rat]) -> Self {
        VectorMeasure {
            values: (0..n).map(|t| flat[t * d..(t + 1) * d].to_vec()).collect(),
        }
    }
}

/// Exact norm of a functional on H: by finite-scale duality it is the
/// minimal total variation of a representing vector measure. Returns the
/// value and one optimal measure.
pub fn functional_norm(space: &FunctionSpace, phi: &[Rat]) -> Result<(Rat, VectorMeasure)> {
    if phi.len() != space.m() {
        return Err(Error::DimensionMismatch("functional on basis".into()));
    }
    let (n, d) = (space.n(), space.d());
    let primal = space.target.primal_vertices()?;
    // variables: mu in R^(n*d), r in R^n; minimize sum r
    let nv = n * d + n;
    let mut ineq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for t in 0..n {
        for v in &primal {
            // <mu_t, v> - r_t <= 0
            let mut row = vec![Rat::zero(); nv];
            for k in 0..d {
                row[t * d + k] = v[k].clone();
            }
            row[n * d + t] = -Rat::one();
            ineq.push((row, Rat::zero()));
        }
    }
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for j in 0..space.m() {
        let mut row = vec![Rat::zero(); nv];
        for t in 0..n {
            let val = space.value(j, t);
            for k in 0..d {
                row[t * d + k] = val[k].clone();
            }
        }
        eq.push((row, phi[j].clone()));
    }
    let mut objective = vec![Rat::zero(); nv];
    for cell in objective.iter_mut().skip(n * d) {
        *cell = Rat::one();
    }
    let lp = LinearProgram { objective, eq, ineq };
    let out = lp_solve_raw(&lp)?;
    match out.status {
        LpStatus::Optimal => {
            let p = out.point.unwrap();
            Ok((
                out.value.unwrap(),
                VectorMeasure::from_flat(n, d, &p[..n * d]),
            ))
        }
        _ => Err(Error::InternalCheck(
            "representation system must be solvable".into(),
        )),
    }
}

/// Minimal total variation of a scalar measure representing a functional
/// on a scalar space (the norm on the scalar space's dual).
pub fn scalar_functional_norm(space: &ScalarSpace, phi: &[Rat]) -> Result<(Rat, ScalarMeasure)> {
    let n = space.n();
    let nv = 2 * n; // sigma, r
    let mut ineq = Vec::new();
    for t in 0..n {
        for sign in [1i64, -1] {
            let mut row = vec![Rat::zero(); nv];
            row[t] = Rat::from_integer(BigInt::from(sign));
            row[n + t] = -Rat::one();
            ineq.push((row, Rat::zero()));
        }
    }
    let mut eq = Vec::new();
    for (j, f) in space.basis().iter().enumerate() {
        let mut row = vec![Rat::zero(); nv];
        row[..n].clone_from_slice(f);
        eq.push((row, phi[j].clone()));
    }
    let mut objective = vec![Rat::zero(); nv];
    for cell in objective.iter_mut().skip(n) {
        *cell = Rat::one();
    }
    let lp = LinearProgram { objective, eq, ineq };
    let out = lp_solve_raw(&lp)?;
    match out.status {
        LpStatus::Optimal => {
            let p = out.point.unwrap();
            Ok((out.value.unwrap(), ScalarMeasure::new(p[..n].to_vec())))
        }
        _ => Err(Error::InternalCheck(
            "scalar representation system must be solvable".into(),
        )),
    }
}

/// The H-representation, in the lifted (sigma+, sigma-) space, of the set
/// of scalar measures representing the evaluation at `t` with total
/// variation equal to `mass`.
fn scalar_rep_hrep(space: &ScalarSpace, t: usize, mass: &Rat) -> (HRep, usize) {
    let n = space.n();
    let nv = 2 * n;
    let mut equalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for f in space.basis() {
        let mut row = Vec::with_capacity(nv);
        row.extend(f.iter().cloned());
        row.extend(f.iter().map(|x| -x));
        equalities.push((row, f[t].clone()));
    }
    equalities.push((vec![Rat::one(); nv], mass.clone()));
    (
        HRep {
            equalities,
            inequalities: nonneg_constraints(nv),
            incidence: None,
        },
        nv,
    )
}

/// M_t of a scalar space: the polytope of minimal-variation representing
/// measures of the evaluation at `t`, as an explicit vertex list.
pub fn representing_measures_scalar_space(
    space: &ScalarSpace,
    t: usize,
) -> Result<(Rat, Vec<ScalarMeasure>)> {
    let phi = space.evaluation(t);
    let (mass, _) = scalar_functional_norm(space, &phi)?;
    let (hrep, nv) = scalar_rep_hrep(space, t, &mass);
    let n = space.n();
    let lifted = vertex_enumeration(nv, &hrep)?;
    // at minimal mass the split is tight, so projection is injective
    let mut out: Vec<ScalarMeasure> = lifted
        .iter()
        .map(|z| {
            ScalarMeasure::new((0..n).map(|i| &z[i] - &z[n + i]).collect())
        })
        .collect();
    out.sort_by(|a, b| lex_cmp(&a.values, &b.values));
    out.dedup();
    // extreme-point filtering after projection
    let flat: Vec<Vec<Rat>> = out.iter().map(|m| m.values.clone()).collect();
    let mut vertices = Vec::new();
    for m in &flat {
        if is_extreme_point(m, &flat)? {
            vertices.push(ScalarMeasure::new(m.clone()));
        }
    }
    Ok((mass, vertices))
}

/// M_t(H) = M_t(H_w): representing measures of the evaluation operator.
pub fn representing_measures_scalar(
    space: &FunctionSpace,
    t: usize,
) -> Result<(Rat, Vec<ScalarMeasure>)> {
    representing_measures_scalar_space(&weak_space(space), t)
}

/// How a functional on H is specified: raw values on the basis, or the
/// composition of a dual functional with an evaluation (which is what the
/// smooth-target reduction needs).
#[derive(Debug, Clone)]
pub enum FunctionalSpec {
    Raw(Vec<Rat>),
    Composed { point: usize, x_star: Vec<Rat> },
}

impl FunctionalSpec {
    pub fn values(&self, space: &FunctionSpace) -> Vec<Rat> {
        match self {
            FunctionalSpec::Raw(v) => v.clone(),
            FunctionalSpec::Composed { point, x_star } => {
                space.composed_functional(*point, x_star)
            }
        }
    }
}

/// The vertex-enumerated polytope of minimal-variation representing
/// vector measures of a functional.
#[derive(Debug, Clone)]
pub struct RepresentingPolytope {
    pub mass: Rat,
    pub vertices: Vec<VectorMeasure>,
    /// True when the vertex list describes the full set; false when it is
    /// a certified subset obtained through the smooth-target reduction
    /// without the constants hypothesis.
    pub complete: bool,
}

/// Representing vector measures. Polyhedral targets get the exact
/// polytope; smooth targets are routed through the strictly-convex-dual
/// reduction (only for composed functionals).
pub fn representing_measures_vector(
    space: &FunctionSpace,
    phi: &FunctionalSpec,
) -> Result<RepresentingPolytope> {
    if space.target.smooth_dual() {
        return lp_reduction_measures(space, phi);
    }
    let values = phi.values(space);
    let (mass, _) = functional_norm(space, &values)?;
    let vertices = vector_rep_vertices(space, &values, &mass, None)?;
    Ok(RepresentingPolytope {
        mass,
        vertices,
        complete: true,
    })
}

/// Vertices of `{mu : mu represents phi, total variation = mass}`,
/// optionally restricted to measures supported inside `support`.
pub fn vector_rep_vertices(
    space: &FunctionSpace,
    phi: &[Rat],
    mass: &Rat,
    support: Option<&[usize]>,
) -> Result<Vec<VectorMeasure>> {
    let (n, d) = (space.n(), space.d());
    let primal = space.target.primal_vertices()?;
    let nv = n * d + n; // mu rows flattened, then r
    let mut inequalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for t in 0..n {
        for v in &primal {
            let mut row = vec![Rat::zero(); nv];
            for k in 0..d {
                row[t * d + k] = v[k].clone();
            }
            row[n * d + t] = -Rat::one();
            inequalities.push((row, Rat::zero()));
        }
    }
    let mut equalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for j in 0..space.m() {
        let mut row = vec![Rat::zero(); nv];
        for t in 0..n {
            let val = space.value(j, t);
            for k in 0..d {
                row[t * d + k] = val[k].clone();
            }
        }
        equalities.push((row, phi[j].clone()));
    }
    {
        let mut row = vec![Rat::zero(); nv];
        for cell in row.iter_mut().skip(n * d) {
            *cell = Rat::one();
        }
        equalities.push((row, mass.clone()));
    }
    if let Some(supp) = support {
        for t in 0..n {
            if !supp.contains(&t) {
                for k in 0..d {
                    let mut row = vec![Rat::zero(); nv];
                    row[t * d + k] = Rat::one();
                    equalities.push((row, Rat::zero()));
                }
            }
        }
    }
    let hrep = HRep {
        equalities,
        inequalities,
        incidence: None,
    };
    let lifted = vertex_enumeration(nv, &hrep)?;
    let mut flats: Vec<Vec<Rat>> = lifted.iter().map(|z| z[..n * d].to_vec()).collect();
    flats = sort_dedup(flats);
    // projection can merge lifted vertices; keep extreme points only
    let mut out = Vec::new();
    for f in &flats {
        if is_extreme_point(f, &flats)? {
            out.push(VectorMeasure::from_flat(n, d, f));
        }
    }
    Ok(out)
}

/// Membership check: does `mu` represent `phi` with the right mass?
pub fn verify_representing(
    space: &FunctionSpace,
    phi: &[Rat],
    mass: &Rat,
    mu: &VectorMeasure,
) -> Result<bool> {
    Ok(mu.functional(space) == phi && &mu.total_variation(&space.target)? == mass)
}

// ---------------------------------------------------------------------
// smooth-target reduction
// ---------------------------------------------------------------------

/// Representing measures over a smooth l_p target for a composed
/// functional x* o phi_H(t), through the scalar reduction
/// `{sigma (x) x* : sigma in M_t(x* o H)}`.
///
/// With constants in H the reduction is exact (strictly convex dual);
/// without constants each probe carries a rational certificate that the
/// products really are members, and the result is flagged incomplete.
fn lp_reduction_measures(
    space: &FunctionSpace,
    phi: &FunctionalSpec,
) -> Result<RepresentingPolytope> {
    let FunctionalSpec::Composed { point, x_star } = phi else {
        return Err(Error::SmoothNormUnsupported);
    };
    let t = *point;
    if x_star.iter().all(|x| x.is_zero()) {
        return Ok(RepresentingPolytope {
            mass: Rat::zero(),
            vertices: vec![VectorMeasure::zero(space.n(), space.d())],
            complete: true,
        });
    }
    let composed = composed_space(space, x_star);
    let (scalar_mass, sigmas) = representing_measures_scalar_space(&composed, t)?;
    let complete = space.contains_constants();
    if !complete {
        match lp_probe_certificate(space, t, x_star)? {
            None => return Err(Error::SmoothNormUnsupported),
            Some(Certificate::Slab) if !scalar_mass.is_one() => {
                // a valid slab scheme forces unit scalar mass
                return Err(Error::InternalCheck(
                    "slab-certified probe with non-unit scalar mass".into(),
                ));
            }
            Some(_) => {}
        }
    } else if !scalar_mass.is_one() {
        // with constants the scalar representing measures are
        // probabilities and the reduction is an equality of sets
        return Err(Error::InternalCheck(
            "composed space with constants must have unit evaluation norm".into(),
        ));
    }
    let vertices: Vec<VectorMeasure> = sigmas
        .iter()
        .map(|s| VectorMeasure::tensor(s, x_star))
        .collect();
    Ok(RepresentingPolytope {
        mass: scalar_mass, // scalar mass; the l_p factor ||x*||_q is symbolic
        vertices,
        complete,
    })
}

/// Certificate that `||x* o phi_H(t)|| = ||x*||_q * ||phi_{x*oH}(t)||`
/// for a smooth l_p target, so that products sigma (x) x* with sigma in
/// M_t(x* o H) have minimal variation.
///
/// Two rational sufficient conditions are tried:
///  * axis probe: x* is supported on one coordinate i and the axis
///    sections of H realize the composed space (then the l_p ball meets
///    the axis in the exact interval);
///  * slab attainment: a scheme of H-functions realizes every target
///    value x in the slab `{|x_i| <= w_i}` of the unit ball, and the
///    unique l_p-norming point of x* lies in the slab, checked through
///    integer powers of rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// x* is an axis functional realized by the axis sections of H.
    Axis,
    /// A slab scheme attains the norming point of x*.
    Slab,
}

pub fn lp_probe_certificate(
    space: &FunctionSpace,
    t: usize,
    x_star: &[Rat],
) -> Result<Option<Certificate>> {
    let nz: Vec<usize> = x_star
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect();
    if nz.len() == 1 && axis_certificate(space, nz[0])? {
        return Ok(Some(Certificate::Axis));
    }
    Ok(if slab_certificate(space, t, x_star)? {
        Some(Certificate::Slab)
    } else {
        None
    })
}

/// Does `{g * e_i : g in e_i* o H}` lie inside H? Then the composed
/// space's unit ball is realized on the axis for every l_p norm.
fn axis_certificate(space: &FunctionSpace, i: usize) -> Result<bool> {
    let (n, d) = (space.n(), space.d());
    let ei = {
        let mut v = vec![Rat::zero(); d];
        v[i] = Rat::one();
        v
    };
    let comp = composed_space(space, &ei);
    for g in comp.basis() {
        let mut f = vec![Rat::zero(); n * d];
        for (s, gv) in g.iter().enumerate() {
            f[s * d + i] = gv.clone();
        }
        if !in_span(&f, space.basis()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Search for a scheme g_1..g_d of axis functions in H with g_i(t) = 1
/// whose joint point values form, at every point, either a contraction
/// (all entries at most one) or a single-coordinate matrix bounded by
/// the reciprocal slab width.
///
/// Such a scheme shows that every x in the unit ball with |x_i| <= w_i
/// is a point value f(t) for some f of norm at most one (send x to
/// sum_i x_i g_i e_i), for every l_p norm simultaneously. The slab
/// widths come from the sup-norm relaxation of the unit ball of H, which
/// upper-bounds the l_p point values.
fn slab_certificate(space: &FunctionSpace, t: usize, x_star: &[Rat]) -> Result<bool> {
    let NormKind::Lp(p) = &space.target.kind else {
        return Ok(false);
    };
    let (n, d) = (space.n(), space.d());

    // slab widths from the sup-norm relaxation (exact polyhedral program)
    let relaxed = FunctionSpace::new(
        space.points.clone(),
        crate::normed_space::NormSpec::linf(d),
        space.basis().to_vec(),
    )?;
    let ball = relaxed.unit_ball_constraints()?;
    let mut w: Vec<Rat> = Vec::with_capacity(d);
    for i in 0..d {
        let mut e = vec![Rat::zero(); d];
        e[i] = Rat::one();
        let width = crate::function_space::sup_over(&ball, &relaxed.composed_functional(t, &e))?;
        w.push(width.min(Rat::one()));
    }
    if w.iter().any(|wi| wi.is_zero()) {
        return Ok(false);
    }

    // try every per-point case assignment: contraction, or one heavy
    // coordinate; the scheme existence is a linear feasibility per case
    let axes: Vec<Vec<Vec<Rat>>> = (0..d).map(|i| axis_subspace(space, i)).collect();
    if axes.iter().any(|a| a.is_empty()) {
        return Ok(false);
    }
    let cases = (d + 1).checked_pow(n as u32).unwrap_or(usize::MAX);
    if cases > 4096 {
        return Ok(false);
    }
    let mut found = false;
    'outer: for code in 0..cases {
        let mut assign = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            assign.push(c % (d + 1)); // d = contraction, i < d = heavy coord i
            c /= d + 1;
        }
        if assign[t] != d {
            continue; // the scheme is the identity at t
        }
        // feasibility over the coefficients of the d axis functions
        let offsets: Vec<usize> = axes
            .iter()
            .scan(0usize, |acc, a| {
                let o = *acc;
                *acc += a.len();
                Some(o)
            })
            .collect();
        let nv: usize = axes.iter().map(|a| a.len()).sum();
        let val_row = |i: usize, s: usize| -> Vec<Rat> {
            let mut row = vec![Rat::zero(); nv];
            for (k, g) in axes[i].iter().enumerate() {
                row[offsets[i] + k] = g[s].clone();
            }
            row
        };
        let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
        let mut ineq: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for i in 0..d {
            eq.push((val_row(i, t), Rat::one()));
        }
        for (s, &case) in assign.iter().enumerate() {
            if case == d {
                for i in 0..d {
                    let row = val_row(i, s);
                    let neg: Vec<Rat> = row.iter().map(|x| -x).collect();
                    ineq.push((row, Rat::one()));
                    ineq.push((neg, Rat::one()));
                }
            } else {
                let heavy = case;
                for i in 0..d {
                    if i == heavy {
                        let bound = w[i].recip();
                        let row = val_row(i, s);
                        let neg: Vec<Rat> = row.iter().map(|x| -x).collect();
                        ineq.push((row, bound.clone()));
                        ineq.push((neg, bound));
                    } else {
                        eq.push((val_row(i, s), Rat::zero()));
                    }
                }
            }
        }
        if crate::exactgeom::lp::feasible(&eq, &ineq, nv)? {
            found = true;
            break 'outer;
        }
    }
    if !found {
        return Ok(false);
    }

    // norming point inside the slab: (|x*_i| / M)^b <= w_i^(a-b) with
    // p = a/b; M = max_j |x*_j| underestimates the dual norm, so the
    // check is sufficient
    let m = x_star
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(Rat::zero);
    if m.is_zero() {
        return Ok(true);
    }
    let (a_u, b_u) = match (u32::try_from(p.numer()), u32::try_from(p.denom())) {
        (Ok(x), Ok(y)) if x > y => (x, y),
        _ => return Ok(false),
    };
    for i in 0..d {
        if w[i] >= Rat::one() {
            continue;
        }
        let lhs = (x_star[i].abs() / &m).pow(b_u as i32);
        let rhs = w[i].pow((a_u - b_u) as i32);
        if lhs > rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of the axis subspace `{g : g * e_i lies in H}` of scalar value
/// vectors.
fn axis_subspace(space: &FunctionSpace, i: usize) -> Vec<Vec<Rat>> {
    let (n, d, m) = (space.n(), space.d(), space.m());
    // unknowns (g, c): g * e_i = sum_j c_j h_j
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in 0..n {
        for k in 0..d {
            let mut row = vec![Rat::zero(); n + m];
            if k == i {
                row[s] = Rat::one();
            }
            for (j, cell) in row.iter_mut().skip(n).enumerate() {
                *cell = -space.value(j, s)[k].clone();
            }
            rows.push(row);
        }
    }
    let ns = nullspace(&rows, n + m);
    let gs: Vec<Vec<Rat>> = ns.iter().map(|v| v[..n].to_vec()).collect();
    rref(&gs).0
}

// ---------------------------------------------------------------------
// simpliciality
// ---------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplKind {
    Weak,
    FunctionalWeak,
    Vector,
    FunctionalVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictStatus {
    Holds,
    HoldsOnProbes,
    Fails,
}

/// A machine-checked counterexample: two distinct boundary measures
/// representing the same target.
#[derive(Debug, Clone)]
pub enum Witness {
    Scalar {
        point: usize,
        a: ScalarMeasure,
        b: ScalarMeasure,
    },
    ScalarFunctional {
        phi: Vec<Rat>,
        a: ScalarMeasure,
        b: ScalarMeasure,
    },
    Vector {
        point: usize,
        x_star: Vec<Rat>,
        a: VectorMeasure,
        b: VectorMeasure,
    },
}

#[derive(Debug, Clone)]
pub struct ProbeRecord {
    pub point: usize,
    pub x_star: Vec<Rat>,
    pub boundary_count: usize,
}

#[derive(Debug, Clone)]
pub struct SimplicialityVerdict {
    pub kind: SimplKind,
    pub status: VerdictStatus,
    pub witness: Option<Witness>,
    pub probe_log: Vec<ProbeRecord>,
}

/// Vertices of M_t(S) restricted to measures carried by the boundary of
/// the scalar space.
fn boundary_scalar_measures(
    space: &ScalarSpace,
    t: usize,
    ch: &[usize],
) -> Result<Vec<ScalarMeasure>> {
    let phi = space.evaluation(t);
    let (mass, _) = scalar_functional_norm(space, &phi)?;
    boundary_scalar_measures_for(space, &phi, &mass, ch)
}

fn boundary_scalar_measures_for(
    space: &ScalarSpace,
    phi: &[Rat],
    mass: &Rat,
    ch: &[usize],
) -> Result<Vec<ScalarMeasure>> {
    let n = space.n();
    let nv = 2 * n;
    let mut equalities: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for (j, f) in space.basis().iter().enumerate() {
        let mut row = Vec::with_capacity(nv);
        row.extend(f.iter().cloned());
        row.extend(f.iter().map(|x| -x));
        equalities.push((row, phi[j].clone()));
    }
    equalities.push((vec![Rat::one(); nv], mass.clone()));
    for u in 0..n {
        if !ch.contains(&u) {
            for idx in [u, n + u] {
                let mut row = vec![Rat::zero(); nv];
                row[idx] = Rat::one();
                equalities.push((row, Rat::zero()));
            }
        }
    }
    let hrep = HRep {
        equalities,
        inequalities: nonneg_constraints(nv),
        incidence: None,
    };
    let lifted = vertex_enumeration(nv, &hrep)?;
    let mut out: Vec<Vec<Rat>> = lifted
        .iter()
        .map(|z| (0..n).map(|i| &z[i] - &z[n + i]).collect())
        .collect();
    out = sort_dedup(out);
    let mut vertices = Vec::new();
    for f in &out {
        if is_extreme_point(f, &out)? {
            vertices.push(ScalarMeasure::new(f.clone()));
        }
    }
    Ok(vertices)
}

/// Is the scalar space simplicial? (unique boundary measure in each M_t)
pub fn scalar_simplicial(space: &ScalarSpace) -> Result<(VerdictStatus, Option<(usize, ScalarMeasure, ScalarMeasure)>)> {
    let ch = crate::boundary::choquet_boundary_scalar(space)?;
    for t in 0..space.n() {
        let verts = boundary_scalar_measures(space, t, &ch)?;
        if verts.is_empty() {
            return Err(Error::InternalCheck(
                "a boundary representing measure must exist".into(),
            ));
        }
        if verts.len() > 1 {
            return Ok((
                VerdictStatus::Fails,
                Some((t, verts[0].clone(), verts[1].clone())),
            ));
        }
    }
    Ok((VerdictStatus::Holds, None))
}

/// Weak simpliciality of H: reduces to simpliciality of H_w.
pub fn weak_simplicial(space: &FunctionSpace) -> Result<SimplicialityVerdict> {
    let w = weak_space(space);
    let (status, wit) = scalar_simplicial(&w)?;
    let witness = wit.map(|(t, a, b)| {
        debug_assert!(verify_scalar_witness(&w, t, &a, &b));
        Witness::Scalar { point: t, a, b }
    });
    Ok(SimplicialityVerdict {
        kind: SimplKind::Weak,
        status,
        witness,
        probe_log: vec![],
    })
}

fn verify_scalar_witness(w: &ScalarSpace, t: usize, a: &ScalarMeasure, b: &ScalarMeasure) -> bool {
    let act_a: Vec<Rat> = w.basis().iter().map(|f| a.integrate(f)).collect();
    let act_b: Vec<Rat> = w.basis().iter().map(|f| b.integrate(f)).collect();
    let phi = w.evaluation(t);
    let act_t: Vec<Rat> = w
        .basis()
        .iter()
        .enumerate()
        .map(|(j, _)| phi[j].clone())
        .collect();
    a != b
        && act_a == act_t
        && act_b == act_t
        && a.total_variation() == b.total_variation()
}

/// Functional weak simpliciality (constants case): the state space of
/// H_w must be a simplex. Fails produce two boundary measures
/// representing a common functional, built from two barycentric
/// decompositions.
pub fn functional_weak_simplicial(space: &FunctionSpace) -> Result<SimplicialityVerdict> {
    let w = weak_space(space);
    if !w.contains_constants() {
        return Err(Error::NoConstantsInHw);
    }
    let ss = state_space(&w)?;
    if ss.is_simplex() {
        return Ok(SimplicialityVerdict {
            kind: SimplKind::FunctionalWeak,
            status: VerdictStatus::Holds,
            witness: None,
            probe_log: vec![],
        });
    }
    // not a simplex: the barycenter of the vertices admits two distinct
    // decompositions; lift each to a measure on K supported on boundary
    // preimages of the state-space vertices
    let verts = &ss.vertices;
    let vcount = Rat::from_integer(BigInt::from(verts.len() as i64));
    let mut bary = vec![Rat::zero(); ss.dim];
    for v in verts {
        for (b, x) in bary.iter_mut().zip(v) {
            *b += x / &vcount;
        }
    }
    let dec = crate::normed_space::decompose_over(verts, &bary)?;
    let alt = dec
        .alternative
        .clone()
        .ok_or_else(|| Error::InternalCheck("non-simplex must decompose non-uniquely".into()))?;
    let ch = crate::boundary::choquet_boundary_scalar(&w)?;
    let lift = |atoms: &[(Vec<Rat>, Rat)]| -> Result<ScalarMeasure> {
        let mut vals = vec![Rat::zero(); w.n()];
        for (vtx, wt) in atoms {
            let t = ch
                .iter()
                .copied()
                .find(|&t| w.evaluation(t) == *vtx)
                .ok_or_else(|| {
                    Error::InternalCheck("state-space vertex must be a boundary evaluation".into())
                })?;
            vals[t] += wt;
        }
        Ok(ScalarMeasure::new(vals))
    };
    let a = lift(&dec.atoms)?;
    let b = lift(&alt)?;
    Ok(SimplicialityVerdict {
        kind: SimplKind::FunctionalWeak,
        status: VerdictStatus::Fails,
        witness: Some(Witness::ScalarFunctional {
            phi: bary,
            a,
            b,
        }),
        probe_log: vec![],
    })
}

/// Flip a probe so its first nonzero coordinate is positive. The
/// representing sets of x* and -x* mirror each other, so one
/// representative per sign pair suffices.
fn sign_canonical(v: Vec<Rat>) -> Vec<Rat> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v,
    }
}

fn push_canonical(out: &mut Vec<Vec<Rat>>, v: Vec<Rat>) {
    let c = sign_canonical(v);
    if !out.contains(&c) {
        out.push(c);
    }
}

/// Default probe functionals in a fixed order: dual-ball vertices first,
/// then normalized facet barycenters, then normalized pairwise vertex
/// midpoints; one representative per antipodal pair.
pub fn default_probes(target: &NormSpec) -> Result<Vec<Vec<Rat>>> {
    let db = dual_ball(target)?;
    let poly = db.polytope.clone().with_facets()?;
    let mut probes: Vec<Vec<Rat>> = Vec::new();
    for v in &poly.vertices {
        push_canonical(&mut probes, v.clone());
    }
    let normalize = |v: Vec<Rat>| -> Result<Option<Vec<Rat>>> {
        if v.iter().all(|x| x.is_zero()) {
            return Ok(None);
        }
        let nrm = dual_norm_exact(target, &v)?;
        Ok(Some(v.iter().map(|x| x / &nrm).collect()))
    };
    if let Some(h) = &poly.hrep {
        if let Some(inc) = &h.incidence {
            let mut centers = Vec::new();
            for facet in inc {
                let cnt = Rat::from_integer(BigInt::from(facet.len() as i64));
                let mut b = vec![Rat::zero(); target.dim];
                for &i in facet {
                    for (cell, x) in b.iter_mut().zip(&poly.vertices[i]) {
                        *cell += x / &cnt;
                    }
                }
                if let Some(p) = normalize(b)? {
                    centers.push(sign_canonical(p));
                }
            }
            for c in sort_dedup(centers) {
                push_canonical(&mut probes, c);
            }
        }
    }
    let vs = &poly.vertices;
    let mut mids = Vec::new();
    for i in 0..vs.len() {
        for j in (i + 1)..vs.len() {
            let mid: Vec<Rat> = vs[i]
                .iter()
                .zip(&vs[j])
                .map(|(a, b)| (a + b) / Rat::from_integer(BigInt::from(2)))
                .collect();
            if let Some(p) = normalize(mid)? {
                mids.push(sign_canonical(p));
            }
        }
    }
    for m in sort_dedup(mids) {
        push_canonical(&mut probes, m);
    }
    Ok(probes)
}

/// Probe functionals for a smooth l_p target: coordinate probes first,
/// then mixed probes with a small rational coefficient (certified per
/// use through the slab scheme).
pub fn default_lp_probes(dim: usize) -> Vec<Vec<Rat>> {
    let mut out: Vec<Vec<Rat>> = Vec::new();
    let small = Rat::new(BigInt::one(), BigInt::from(8));
    for i in 0..dim {
        let mut e = vec![Rat::zero(); dim];
        e[i] = Rat::one();
        push_canonical(&mut out, e);
    }
    let mut mixed = Vec::new();
    for i in 0..dim {
        let mut e = vec![Rat::zero(); dim];
        e[i] = Rat::one();
        for j in 0..dim {
            if i == j {
                continue;
            }
            for sign in [1i64, -1] {
                let mut v = e.clone();
                v[j] = &small * Rat::from_integer(BigInt::from(sign));
                mixed.push(sign_canonical(v));
            }
        }
    }
    for v in sort_dedup(mixed) {
        push_canonical(&mut out, v);
    }
    out
}

/// Boundary-restricted vertex set of the representing polytope at a
/// composed-functional probe.
pub fn boundary_vector_measures(
    space: &FunctionSpace,
    t: usize,
    x_star: &[Rat],
    ch: &[usize],
) -> Result<Vec<VectorMeasure>> {
    if space.target.smooth_dual() {
        let rp = lp_reduction_measures(
            space,
            &FunctionalSpec::Composed {
                point: t,
                x_star: x_star.to_vec(),
            },
        )?;
        let mut out: Vec<VectorMeasure> = rp
            .vertices
            .into_iter()
            .filter(|m| m.support().iter().all(|s| ch.contains(s)))
            .collect();
        out.sort_by(|a, b| lex_cmp(&a.flatten(), &b.flatten()));
        out.dedup();
        return Ok(out);
    }
    let phi = space.composed_functional(t, x_star);
    let (mass, _) = functional_norm(space, &phi)?;
    vector_rep_vertices(space, &phi, &mass, Some(ch))
}

/// Vector simpliciality over the default probe grid (plus extras).
/// Negative verdicts are exact; positive verdicts certify the probes.
pub fn vector_simplicial(
    space: &FunctionSpace,
    extra_probes: &[(usize, Vec<Rat>)],
) -> Result<SimplicialityVerdict> {
    let ch = choquet_boundary(space)?;
    let mut probe_log = Vec::new();

    // constants shortcut: vector simplicial implies weakly simplicial
    if space.contains_constants() {
        let wk = weak_simplicial(space)?;
        if wk.status == VerdictStatus::Fails {
            if let Some(Witness::Scalar { point, a, b }) = wk.witness {
                // tensor the scalar witnesses with a unit functional
                let e1 = {
                    let mut v = vec![Rat::zero(); space.d()];
                    v[0] = Rat::one();
                    v
                };
                let wa = VectorMeasure::tensor(&a, &e1);
                let wb = VectorMeasure::tensor(&b, &e1);
                return Ok(SimplicialityVerdict {
                    kind: SimplKind::Vector,
                    status: VerdictStatus::Fails,
                    witness: Some(Witness::Vector {
                        point,
                        x_star: e1,
                        a: wa,
                        b: wb,
                    }),
                    probe_log,
                });
            }
        }
    }

    let probes: Vec<Vec<Rat>> = if space.target.smooth_dual() {
        default_lp_probes(space.d())
    } else {
        default_probes(&space.target)?
    };
    for t in 0..space.n() {
        let mut all: Vec<Vec<Rat>> = Vec::new();
        for (pt, xs) in extra_probes {
            if *pt == t {
                all.push(xs.clone());
            }
        }
        all.extend(probes.iter().cloned());
        for x_star in &all {
            let verts = match boundary_vector_measures(space, t, x_star, &ch) {
                Ok(v) => v,
                Err(Error::SmoothNormUnsupported) => continue, // uncertified probe
                Err(e) => return Err(e),
            };
            probe_log.push(ProbeRecord {
                point: t,
                x_star: x_star.clone(),
                boundary_count: verts.len(),
            });
            if verts.is_empty() {
                return Err(Error::InternalCheck(
                    "a boundary representing vector measure must exist".into(),
                ));
            }
            if verts.len() > 1 {
                let (a, b) = (verts[0].clone(), verts[1].clone());
                verify_vector_witness(space, t, x_star, &a, &b)?;
                return Ok(SimplicialityVerdict {
                    kind: SimplKind::Vector,
                    status: VerdictStatus::Fails,
                    witness: Some(Witness::Vector {
                        point: t,
                        x_star: x_star.clone(),
                        a,
                        b,
                    }),
                    probe_log,
                });
            }
        }
    }
    Ok(SimplicialityVerdict {
        kind: SimplKind::Vector,
        status: VerdictStatus::HoldsOnProbes,
        witness: None,
        probe_log,
    })
}

/// Re-verify a Fails witness pair: distinct, same action on H, same
/// total variation, both carried by the boundary.
fn verify_vector_witness(
    space: &FunctionSpace,
    t: usize,
    x_star: &[Rat],
    a: &VectorMeasure,
    b: &VectorMeasure,
) -> Result<()> {
    if a == b {
        return Err(Error::InternalCheck("witness measures equal".into()));
    }
    if a.functional(space) != b.functional(space) {
        return Err(Error::InternalCheck("witness actions differ".into()));
    }
    if space.target.is_polyhedral() {
        if a.total_variation(&space.target)? != b.total_variation(&space.target)? {
            return Err(Error::InternalCheck("witness masses differ".into()));
        }
        if !is_boundary_vector(space, a)? || !is_boundary_vector(space, b)? {
            return Err(Error::InternalCheck("witness not boundary".into()));
        }
    } else {
        // products sigma (x) x* share the l_p factor; compare scalar masses
        let ch = choquet_boundary(space)?;
        for m in [a, b] {
            if !m.support().iter().all(|s| ch.contains(s)) {
                return Err(Error::InternalCheck("witness not boundary".into()));
            }
        }
    }
    let _ = (t, x_star);
    Ok(())
}

// ---------------------------------------------------------------------
// H-affine functions
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct AcSpaces {
    /// A_c(H_w) as a scalar space.
    pub ac_scalar: ScalarSpace,
    /// rref basis of A_c^w(H) inside R^(n*d).
    pub ac_w: Vec<Vec<Rat>>,
    /// rref basis of the certified superset of A_c^v(H).
    pub ac_v_upper: Vec<Vec<Rat>>,
    /// True when constants hold and ac_w is not contained in ac_v_upper,
    /// which proves A_c^v(H) differs from A_c^w(H).
    pub ac_v_certified_negative: bool,
    pub probes_used: Vec<(usize, Vec<Rat>)>,
}

/// A_c of a scalar space: functions respected by every vertex of every
/// M_t (vertex constraints suffice by affinity in the measure).
pub fn ac_scalar_space(space: &ScalarSpace) -> Result<ScalarSpace> {
    let n = space.n();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for t in 0..n {
        let (_, verts) = representing_measures_scalar_space(space, t)?;
        for sigma in verts {
            // f(t) - integral = 0
            let mut row = vec![Rat::zero(); n];
            row[t] += Rat::one();
            for (s, w) in sigma.values.iter().enumerate() {
                row[s] -= w;
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis = nullspace(&rows, n);
    Ok(ScalarSpace::new(space.points.clone(), &basis))
}

/// Both H-affine spaces, with the A_c^v side probe-certified.
pub fn ac_spaces(
    space: &FunctionSpace,
    extra_probes: &[(usize, Vec<Rat>)],
) -> Result<AcSpaces> {
    let (n, d) = (space.n(), space.d());
    let nd = n * d;
    let w = weak_space(space);
    let ac_scalar = ac_scalar_space(&w)?;

    // A_c^w(H): componentwise constraints from scalar vertices of M_t(H_w)
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for t in 0..n {
        let (_, verts) = representing_measures_scalar_space(&w, t)?;
        for sigma in verts {
            for k in 0..d {
                let mut row = vec![Rat::zero(); nd];
                row[t * d + k] += Rat::one();
                for (s, wt) in sigma.values.iter().enumerate() {
                    row[s * d + k] -= wt;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ac_w = rref(&nullspace(&rows, nd)).0;

    // A_c^v upper bound: constraints from certified members of the
    // representing polytopes at probe functionals
    let probes: Vec<Vec<Rat>> = if space.target.smooth_dual() {
        default_lp_probes(d)
    } else {
        default_probes(&space.target)?
    };
    let mut vrows: Vec<Vec<Rat>> = Vec::new();
    let mut probes_used: Vec<(usize, Vec<Rat>)> = Vec::new();
    for t in 0..n {
        let mut all: Vec<Vec<Rat>> = Vec::new();
        for (pt, xs) in extra_probes {
            if *pt == t {
                all.push(xs.clone());
            }
        }
        all.extend(probes.iter().cloned());
        for x_star in all {
            let rp = match representing_measures_vector(
                space,
                &FunctionalSpec::Composed {
                    point: t,
                    x_star: x_star.clone(),
                },
            ) {
                Ok(rp) => rp,
                Err(Error::SmoothNormUnsupported) => continue,
                Err(e) => return Err(e),
            };
            probes_used.push((t, x_star.clone()));
            for mu in &rp.vertices {
                // x*(F(t)) = sum_s <mu_s, F(s)>
                let mut row = vec![Rat::zero(); nd];
                for k in 0..d {
                    row[t * d + k] += x_star[k].clone();
                }
                for (s, ms) in mu.values.iter().enumerate() {
                    for k in 0..d {
                        row[s * d + k] -= &ms[k];
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    vrows.push(row);
                }
            }
        }
    }
    let ac_v_upper = rref(&nullspace(&vrows, nd)).0;

    let constants = space.contains_constants();
    let ac_v_certified_negative = constants && !span_contained(&ac_w, &ac_v_upper);

    Ok(AcSpaces {
        ac_scalar,
        ac_w,
        ac_v_upper,
        ac_v_certified_negative,
        probes_used,
    })
}

/// A function space spanned by an n*d-vector basis (e.g. ac_w) over the
/// same points and target.
pub fn span_as_function_space(space: &FunctionSpace, basis: &[Vec<Rat>]) -> Result<FunctionSpace> {
    FunctionSpace::new(space.points.clone(), space.target.clone(), rref(basis).0)
}

// ---------------------------------------------------------------------
// dilation
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct DilationChecks {
    pub idempotent: bool,
    pub rows_boundary_probabilities: bool,
    pub fixed_space_equals_ac_w: bool,
    pub restriction_dim_formula: bool,
    pub restriction_isometry: bool,
}

#[derive(Debug, Clone)]
pub struct DilationSuite {
    /// Row t holds the unique boundary measure delta_t in M_t(H_w).
    pub matrix: Vec<Vec<Rat>>,
    pub checks: DilationChecks,
}

pub fn dilation_suite(space: &FunctionSpace) -> Result<DilationSuite> {
    let w = weak_space(space);
    if !w.contains_constants() {
        return Err(Error::NoConstantsInHw);
    }
    let wk = weak_simplicial(space)?;
    if wk.status != VerdictStatus::Holds {
        return Err(Error::NotWeaklySimplicial);
    }
    let ch = choquet_boundary(space)?;
    let n = space.n();
    let mut matrix = Vec::with_capacity(n);
    for t in 0..n {
        let verts = boundary_scalar_measures(&w, t, &ch)?;
        if verts.len() != 1 {
            return Err(Error::InternalCheck(
                "weakly simplicial space must have unique boundary measures".into(),
            ));
        }
        matrix.push(verts[0].values.clone());
    }

    // D^2 = D
    let d2 = crate::exactgeom::linalg::mat_mul(&matrix, &matrix);
    let idempotent = d2 == matrix;

    // rows are probabilities supported on the boundary
    let rows_boundary_probabilities = matrix.iter().all(|row| {
        row.iter().all(|x| !x.is_negative())
            && row.iter().sum::<Rat>().is_one()
            && row
                .iter()
                .enumerate()
                .all(|(s, x)| x.is_zero() || ch.contains(&s))
    });

    // fixed space of D (x) id_d equals A_c^w(H)
    let d = space.d();
    let nd = n * d;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for t in 0..n {
        for k in 0..d {
            // F(t)_k - sum_s D[t][s] F(s)_k = 0
            let mut row = vec![Rat::zero(); nd];
            row[t * d + k] += Rat::one();
            for s in 0..n {
                row[s * d + k] -= &matrix[t][s];
            }
            if row.iter().any(|x| !x.is_zero()) {
                rows.push(row);
            }
        }
    }
    let fixed = rref(&nullspace(&rows, nd)).0;
    let acs = ac_spaces(space, &[])?;
    let fixed_space_equals_ac_w = same_span(&fixed, &acs.ac_w);

    // restriction to the boundary is a bijective isometry onto C(Ch, E)
    let restriction_dim_formula = acs.ac_w.len() == ch.len() * d
        && rank(
            &acs.ac_w
                .iter()
                .map(|f| {
                    ch.iter()
                        .flat_map(|&t| f[t * d..(t + 1) * d].to_vec())
                        .collect::<Vec<Rat>>()
                })
                .collect::<Vec<_>>(),
        ) == acs.ac_w.len();

    let restriction_isometry = restriction_isometry_check(space, &acs.ac_w, &ch)?;

    Ok(DilationSuite {
        matrix,
        checks: DilationChecks {
            idempotent,
            rows_boundary_probabilities,
            fixed_space_equals_ac_w,
            restriction_dim_formula,
            restriction_isometry,
        },
    })
}

/// For every t and dual vertex y: sup { <y, F(t)> : F in ac_w,
/// ||F(s)|| <= 1 on the boundary } must not exceed one.
fn restriction_isometry_check(
    space: &FunctionSpace,
    ac_w: &[Vec<Rat>],
    ch: &[usize],
) -> Result<bool> {
    if ac_w.is_empty() {
        return Ok(true);
    }
    let d = space.d();
    let dv = dual_ball(&space.target)?;
    let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for &s in ch {
        for y in dv.ext_points() {
            let row: Vec<Rat> = ac_w
                .iter()
                .map(|f| dot(y, &f[s * d..(s + 1) * d]))
                .collect();
            cons.push((row, Rat::one()));
        }
    }
    for t in 0..space.n() {
        for y in dv.ext_points() {
            let obj: Vec<Rat> = ac_w
                .iter()
                .map(|f| dot(y, &f[t * d..(t + 1) * d]))
                .collect();
            let sup = crate::function_space::sup_over(&cons, &obj)?;
            if sup > Rat::one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------
// L1-predual test
// ---------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct L1PredualReport {
    pub acw_is_l1_predual: bool,
    pub e_is_l1_predual: bool,
    pub weakly_simplicial: bool,
    /// acw_is_l1_predual == (weakly_simplicial && e_is_l1_predual)
    pub equivalence_holds: bool,
}

/// Finite-dimensional L1-predual test: the dual ball must be a
/// cross-polytope (2k vertices in k independent antipodal pairs).
pub fn is_cross_polytope(vertices: &[Vec<Rat>], space_dim: usize) -> bool {
    if vertices.len() != 2 * space_dim {
        return false;
    }
    let mut reps: Vec<Vec<Rat>> = Vec::new();
    for v in vertices {
        let neg: Vec<Rat> = v.iter().map(|x| -x).collect();
        if !vertices.contains(&neg) {
            return false;
        }
        if !reps.contains(v) && !reps.contains(&neg) {
            reps.push(v.clone());
        }
    }
    reps.len() == space_dim && rank(&reps) == space_dim
}

pub fn l1_predual_check(space: &FunctionSpace) -> Result<L1PredualReport> {
    let w = weak_space(space);
    if !w.contains_constants() {
        return Err(Error::NoConstantsInHw);
    }
    if space.target.smooth_dual() {
        return Err(Error::SmoothNormUnsupported);
    }
    let e_is_l1_predual = {
        let db = dual_ball(&space.target)?;
        is_cross_polytope(&db.polytope.vertices, space.target.dim)
    };
    let weakly_simplicial = weak_simplicial(space)?.status == VerdictStatus::Holds;

    // dual ball of A_c^w(H) with its sup-type norm, in coefficient space
    let acs = ac_spaces(space, &[])?;
    let k = acs.ac_w.len();
    let acw_is_l1_predual = if k == 0 {
        true
    } else {
        let d = space.d();
        let dv = dual_ball(&space.target)?;
        let mut cons: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for t in 0..space.n() {
            for y in dv.ext_points() {
                let row: Vec<Rat> = acs
                    .ac_w
                    .iter()
                    .map(|f| dot(y, &f[t * d..(t + 1) * d]))
                    .collect();
                cons.push((row, Rat::one()));
            }
        }
        let ball = Polytope::from_hrep(
            k,
            HRep {
                equalities: vec![],
                inequalities: cons,
                incidence: None,
            },
        )?;
        let dual = polar(k, &ball.vertices)?;
        is_cross_polytope(&dual.vertices, k)
    };

    let equivalence_holds = acw_is_l1_predual == (weakly_simplicial && e_is_l1_predual);
    Ok(L1PredualReport {
        acw_is_l1_predual,
        e_is_l1_predual,
        weakly_simplicial,
        equivalence_holds,
    })
}
