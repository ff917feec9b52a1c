//! The central model: a space H of E-valued functions on a finite point
//! set, its derived scalar spaces, evaluation norms, and the reduction of
//! operator representability to the weak space.

use crate::error::Error;
use crate::exactgeom::linalg::{in_span, nullspace, rank, rref, transpose};
use crate::exactgeom::lp::{lp_solve_raw, LinearProgram, LpStatus};
use crate::exactgeom::polytope::Polytope;
use crate::exactgeom::rat::{dot, Rat};
use crate::normed_space::{dual_ball, NormSpec};
use crate::representation::ScalarMeasure;
use crate::Result;
use num_traits::{One, Zero};

/// The finite compact: an ordered list of distinct point labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCompact {
    labels: Vec<String>,
}

impl FiniteCompact {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidInput("point set must be nonempty".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::InvalidInput(format!("duplicate point label {l}")));
            }
        }
        Ok(FiniteCompact { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// H: a linearly independent basis of E-valued functions, each flattened
/// point-major to length n*d (coordinates of f(t_0), then f(t_1), ...).
#[derive(Debug, Clone)]
pub struct FunctionSpace {
    pub points: FiniteCompact,
    pub target: NormSpec,
    basis: Vec<Vec<Rat>>,
}

impl FunctionSpace {
    pub fn new(points: FiniteCompact, target: NormSpec, basis: Vec<Vec<Rat>>) -> Result<Self> {
        let expect = points.len() * target.dim;
        if basis.is_empty() {
            return Err(Error::InvalidInput("basis must be nonempty".into()));
        }
        for b in &basis {
            if b.len() != expect {
                return Err(Error::DimensionMismatch(format!(
                    "basis function has length {}, expected {}",
                    b.len(),
                    expect
                )));
            }
        }
        if rank(&basis) != basis.len() {
            return Err(Error::InvalidInput(
                "basis functions are linearly dependent".into(),
            ));
        }
        Ok(FunctionSpace {
            points,
            target,
            basis,
        })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn d(&self) -> usize {
        self.target.dim
    }

    /// Number of basis functions.
    pub fn m(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Value of basis function `j` at point `t` (a slice of length d).
    pub fn value(&self, j: usize, t: usize) -> &[Rat] {
        let d = self.d();
        &self.basis[j][t * d..(t + 1) * d]
    }

    /// Value at `t` of the function with coefficient vector `c`.
    pub fn eval(&self, c: &[Rat], t: usize) -> Vec<Rat> {
        let d = self.d();
        let mut out = vec![Rat::zero(); d];
        for (cj, bj) in c.iter().zip(&self.basis) {
            if cj.is_zero() {
                continue;
            }
            for (k, cell) in out.iter_mut().enumerate() {
                *cell += cj * &bj[t * d + k];
            }
        }
        out
    }

    /// Constraints of the sup-norm unit ball of H in coefficient space:
    /// `<y, f(t)> <= 1` for every point t and dual-ball vertex y.
    pub fn unit_ball_constraints(&self) -> Result<Vec<(Vec<Rat>, Rat)>> {
        let dv = dual_ball(&self.target)?;
        let mut out = Vec::new();
        for t in 0..self.n() {
            for y in dv.ext_points() {
                let row: Vec<Rat> = (0..self.m())
                    .map(|j| dot(y, self.value(j, t)))
                    .collect();
                out.push((row, Rat::one()));
            }
        }
        Ok(out)
    }

    /// The scalar functional `x* o phi_H(t)` in basis coordinates.
    pub fn composed_functional(&self, t: usize, x_star: &[Rat]) -> Vec<Rat> {
        (0..self.m()).map(|j| dot(x_star, self.value(j, t))).collect()
    }

    pub fn constants_status(&self) -> ConstantsStatus {
        let dim = self.constant_subspace().len();
        if dim == self.d() {
            ConstantsStatus::Full
        } else if dim > 0 {
            ConstantsStatus::Some
        } else {
            ConstantsStatus::None
        }
    }

    pub fn contains_constants(&self) -> bool {
        self.constants_status() == ConstantsStatus::Full
    }

    /// Basis of `{x in E : the constant function x lies in H}`.
    pub fn constant_subspace(&self) -> Vec<Vec<Rat>> {
        let (n, d, m) = (self.n(), self.d(), self.m());
        // unknowns (c, x): for every point t and coordinate k,
        // sum_j c_j basis_j(t)_k - x_k = 0
        let mut rows = Vec::with_capacity(n * d);
        for t in 0..n {
            for k in 0..d {
                let mut row = vec![Rat::zero(); m + d];
                for (j, cell) in row.iter_mut().enumerate().take(m) {
                    *cell = self.value(j, t)[k].clone();
                }
                row[m + k] = -Rat::one();
                rows.push(row);
            }
        }
        let ns = nullspace(&rows, m + d);
        let xs: Vec<Vec<Rat>> = ns.iter().map(|v| v[m..].to_vec()).collect();
        rref(&xs).0
    }

    /// Does H separate the points of K (equivalently: does H_w)?
    pub fn separates_points(&self) -> bool {
        weak_space(self).separates_points()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstantsStatus {
    Full,
    Some,
    None,
}

/// A scalar function space on the same point set, held by its canonical
/// (reduced row echelon) basis so equality of spaces is basis equality.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarSpace {
    pub points: FiniteCompact,
    basis: Vec<Vec<Rat>>,
}

impl ScalarSpace {
    pub fn new(points: FiniteCompact, spanning: &[Vec<Rat>]) -> Self {
        let (basis, _) = rref(spanning);
        ScalarSpace { points, basis }
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, f: &[Rat]) -> bool {
        in_span(f, &self.basis)
    }

    pub fn contains_constants(&self) -> bool {
        self.contains(&vec![Rat::one(); self.n()])
    }

    pub fn separates_pair(&self, s: usize, t: usize) -> bool {
        self.basis.iter().any(|f| f[s] != f[t])
    }

    pub fn separates_points(&self) -> bool {
        for s in 0..self.n() {
            for t in (s + 1)..self.n() {
                if !self.separates_pair(s, t) {
                    return false;
                }
            }
        }
        true
    }

    /// Evaluation functional at `t` in basis coordinates.
    pub fn evaluation(&self, t: usize) -> Vec<Rat> {
        self.basis.iter().map(|f| f[t].clone()).collect()
    }

    /// View as a function space over the one-dimensional sup-norm target.
    pub fn as_function_space(&self) -> FunctionSpace {
        FunctionSpace::new(self.points.clone(), NormSpec::linf(1), self.basis.clone())
            .expect("rref basis is independent")
    }
}

/// A functional on E in standard dual coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct EFunctional {
    pub coords: Vec<Rat>,
}

/// An operator H -> E as a d x m matrix on basis coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    /// entries[i][j] = i-th coordinate of U(h_j)
    pub entries: Vec<Vec<Rat>>,
}

impl OperatorMatrix {
    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    /// phi_H(t) as an operator matrix.
    pub fn evaluation(space: &FunctionSpace, t: usize) -> Self {
        let d = space.d();
        let entries = (0..d)
            .map(|i| {
                (0..space.m())
                    .map(|j| space.value(j, t)[i].clone())
                    .collect()
            })
            .collect();
        OperatorMatrix { entries }
    }

    pub fn flatten(&self) -> Vec<Rat> {
        self.entries.iter().flatten().cloned().collect()
    }
}

/// H_w: the span of all coordinate slices of the basis functions. The
/// coordinate functionals span E*, so this equals the span of all
/// x* o h for h in H.
pub fn weak_space(space: &FunctionSpace) -> ScalarSpace {
    let (n, d) = (space.n(), space.d());
    let mut rows = Vec::with_capacity(space.m() * d);
    for b in space.basis() {
        for i in 0..d {
            rows.push((0..n).map(|t| b[t * d + i].clone()).collect());
        }
    }
    ScalarSpace::new(space.points.clone(), &rows)
}

/// The scalar space `x* o H` for a fixed dual functional.
pub fn composed_space(space: &FunctionSpace, x_star: &[Rat]) -> ScalarSpace {
    let n = space.n();
    let rows: Vec<Vec<Rat>> = (0..space.m())
        .map(|j| (0..n).map(|t| dot(x_star, space.value(j, t))).collect())
        .collect();
    ScalarSpace::new(space.points.clone(), &rows)
}

/// Structural facts about H at a pair of points.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub separates: bool,
    pub constants: ConstantsStatus,
    pub constants_w: bool,
    /// rref basis of H(t) in E
    pub h_t: Vec<Vec<Rat>>,
    /// rref basis of H(s, t) in E x E
    pub h_st: Vec<Vec<Rat>>,
    /// rref basis of H(s - t) in E
    pub h_s_minus_t: Vec<Vec<Rat>>,
}

pub fn structure_report(space: &FunctionSpace, s: usize, t: usize) -> Result<StructureReport> {
    if s == t {
        return Err(Error::SamePoint);
    }
    let d = space.d();
    let h_t: Vec<Vec<Rat>> = (0..space.m()).map(|j| space.value(j, t).to_vec()).collect();
    let h_st: Vec<Vec<Rat>> = (0..space.m())
        .map(|j| {
            let mut v = space.value(j, s).to_vec();
            v.extend_from_slice(space.value(j, t));
            v
        })
        .collect();
    let h_smt: Vec<Vec<Rat>> = (0..space.m())
        .map(|j| {
            let vs = space.value(j, s);
            let vt = space.value(j, t);
            (0..d).map(|k| &vs[k] - &vt[k]).collect()
        })
        .collect();
    let w = weak_space(space);
    Ok(StructureReport {
        separates: space.separates_points(),
        constants: space.constants_status(),
        constants_w: w.contains_constants(),
        h_t: rref(&h_t).0,
        h_st: rref(&h_st).0,
        h_s_minus_t: rref(&h_smt).0,
    })
}

/// Norms of the evaluation functionals at a point (and optionally at a
/// dual functional for the lifted variants).
#[derive(Debug, Clone)]
pub struct EvaluationNorms {
    pub phi_h: Rat,
    pub phi_hw: Rat,
    pub phi_hl: Option<Rat>,
    pub phi_hs: Rat,
}

/// Maximize a linear objective over a polytope given by inequality
/// constraints.
pub(crate) fn sup_over(constraints: &[(Vec<Rat>, Rat)], objective: &[Rat]) -> Result<Rat> {
    let lp = LinearProgram {
        objective: objective.iter().map(|x| -x.clone()).collect(),
        eq: vec![],
        ineq: constraints.to_vec(),
    };
    let out = lp_solve_raw(&lp)?;
    match out.status {
        LpStatus::Optimal => Ok(-out.value.unwrap()),
        LpStatus::Infeasible => Err(Error::InternalCheck("unit ball is empty".into())),
        LpStatus::Unbounded => Err(Error::InternalCheck("unit ball is unbounded".into())),
    }
}

/// ||phi_Hw(t)||: sup f(t) over the sup-norm unit ball of the scalar
/// space.
pub fn scalar_evaluation_norm(space: &ScalarSpace, t: usize) -> Result<Rat> {
    let n = space.n();
    let mut cons = Vec::with_capacity(2 * n);
    for u in 0..n {
        let row: Vec<Rat> = space.basis().iter().map(|f| f[u].clone()).collect();
        let neg: Vec<Rat> = row.iter().map(|x| -x).collect();
        cons.push((row, Rat::one()));
        cons.push((neg, Rat::one()));
    }
    sup_over(&cons, &space.evaluation(t))
}

pub fn evaluation_norms(
    space: &FunctionSpace,
    t: usize,
    x_star: Option<&[Rat]>,
) -> Result<EvaluationNorms> {
    let w = weak_space(space);
    let phi_hw = scalar_evaluation_norm(&w, t)?;

    if space.target.smooth_dual() {
        // the exact operator-norm paths need the dual-ball polytope
        return Err(Error::SmoothNormUnsupported);
    }

    let ball = space.unit_ball_constraints()?;
    let dv = dual_ball(&space.target)?;
    // ||phi_H(t)|| = max over dual vertices y of sup <y, f(t)> over B_H
    let mut phi_h = Rat::zero();
    for y in dv.ext_points() {
        let v = sup_over(&ball, &space.composed_functional(t, y))?;
        if v > phi_h {
            phi_h = v;
        }
    }
    // ||phi_Hl(t, x*)|| = sup x*(f(t)) over the symmetric ball B_H
    let phi_hl = match x_star {
        Some(xs) => Some(sup_over(&ball, &space.composed_functional(t, xs))?),
        None => None,
    };
    // ||phi_Hs(t, x*)||
    let zero_xs = vec![Rat::zero(); space.d()];
    let xs = x_star.unwrap_or(&zero_xs);
    let phi_hs = {
        let (cons, obj) = hs_ball_and_objective(space, &w, t, xs)?;
        sup_over(&cons, &obj)?
    };

    // postconditions from the evaluation-norm lemma
    if space.constants_status() == ConstantsStatus::Full {
        if let (Some(hl), Some(xs)) = (&phi_hl, x_star) {
            let xnorm = crate::normed_space::dual_norm_exact(&space.target, xs)?;
            if *hl != xnorm {
                return Err(Error::InternalCheck(
                    "with constants, ||phi_Hl(t,x*)|| must equal ||x*||".into(),
                ));
            }
        }
        if !phi_h.is_one() {
            return Err(Error::InternalCheck(
                "with constants, ||phi_H(t)|| must be 1".into(),
            ));
        }
    }
    if space.constants_status() != ConstantsStatus::None && phi_h != phi_hw {
        return Err(Error::InternalCheck(
            "with some constants, ||phi_H|| must equal ||phi_Hw||".into(),
        ));
    }
    if phi_hw != phi_hs {
        return Err(Error::InternalCheck(
            "||phi_Hw(t)|| must equal ||phi_Hs(t,x*)||".into(),
        ));
    }
    Ok(EvaluationNorms {
        phi_h,
        phi_hw,
        phi_hl,
        phi_hs,
    })
}

/// Unit-ball constraints of H_s over coefficients (c_g, c_h) and the
/// objective vector of the evaluation at (t, x*). Representations
/// g o pi_1 + T h are unique (g = 0 and h = 0 follow from evaluating at
/// x* = 0), so the coefficient space is H_w x H. The sup over the dual
/// ball restricts to its vertices because every member of H_s is affine
/// in x*.
pub fn hs_ball_and_objective(
    space: &FunctionSpace,
    w: &ScalarSpace,
    t: usize,
    x_star: &[Rat],
) -> Result<(Vec<(Vec<Rat>, Rat)>, Vec<Rat>)> {
    let dv = dual_ball(&space.target)?;
    let (kw, m) = (w.dim(), space.m());
    let mut cons = Vec::new();
    for s in 0..space.n() {
        for y in dv.ext_points() {
            // |g(s) + <y, h(s)>| <= 1
            let mut row = Vec::with_capacity(kw + m);
            for f in w.basis() {
                row.push(f[s].clone());
            }
            for j in 0..m {
                row.push(dot(y, space.value(j, s)));
            }
            let neg: Vec<Rat> = row.iter().map(|x| -x).collect();
            cons.push((row, Rat::one()));
            cons.push((neg, Rat::one()));
        }
    }
    Ok((cons, hs_evaluation(space, w, t, x_star)))
}

/// Evaluation vector of phi_Hs(t, x*) on the H_s coefficient space.
pub fn hs_evaluation(space: &FunctionSpace, w: &ScalarSpace, t: usize, x_star: &[Rat]) -> Vec<Rat> {
    let mut v = Vec::with_capacity(w.dim() + space.m());
    for f in w.basis() {
        v.push(f[t].clone());
    }
    for j in 0..space.m() {
        v.push(dot(x_star, space.value(j, t)));
    }
    v
}

/// Exhaustive list of (s, t, sign) with phi_H(t) = sign * phi_H(s) for
/// s < t, plus self-collapses (t, t, -1) where the evaluation vanishes.
/// Computed on the weak-space evaluations, which is equivalent.
pub fn theta_collapses(space: &FunctionSpace) -> Vec<(usize, usize, i8)> {
    let w = weak_space(space);
    let rows: Vec<Vec<Rat>> = (0..space.n()).map(|t| w.evaluation(t)).collect();
    let mut out = Vec::new();
    for s in 0..rows.len() {
        for t in s..rows.len() {
            if s != t && rows[s] == rows[t] {
                out.push((s, t, 1i8));
            }
            let negs: Vec<Rat> = rows[s].iter().map(|x| -x).collect();
            if rows[t] == negs {
                out.push((s, t, -1i8));
            }
        }
    }
    out
}

/// Outcome of the operator-representability test.
#[derive(Debug, Clone)]
pub enum Representability {
    NotRepresentable,
    Representable { norm_r: Rat, witness: ScalarMeasure },
}

/// Can `U` be written as a Bochner integral against a scalar measure?
/// Minimizes the total variation when so.
pub fn representable_operator(
    space: &FunctionSpace,
    u: &OperatorMatrix,
) -> Result<Representability> {
    let (n, d, m) = (space.n(), space.d(), space.m());
    if u.entries.len() != d || u.entries.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch("operator matrix".into()));
    }
    // variables: mu in R^n (signed), r in R^n with r_s >= |mu_s|
    let nv = 2 * n;
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for j in 0..m {
        for i in 0..d {
            let mut row = vec![Rat::zero(); nv];
            for (s, cell) in row.iter_mut().enumerate().take(n) {
                *cell = space.value(j, s)[i].clone();
            }
            eq.push((row, u.entries[i][j].clone()));
        }
    }
    let mut ineq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for s in 0..n {
        for sign in [1i64, -1] {
            let mut row = vec![Rat::zero(); nv];
            row[s] = Rat::from_integer(sign.into());
            row[n + s] = -Rat::one();
            ineq.push((row, Rat::zero()));
        }
    }
    let mut objective = vec![Rat::zero(); nv];
    for cell in objective.iter_mut().skip(n) {
        *cell = Rat::one();
    }
    let lp = LinearProgram { objective, eq, ineq };
    let out = lp_solve_raw(&lp)?;
    match out.status {
        LpStatus::Infeasible => Ok(Representability::NotRepresentable),
        LpStatus::Optimal => {
            let point = out.point.unwrap();
            Ok(Representability::Representable {
                norm_r: out.value.unwrap(),
                witness: ScalarMeasure::new(point[..n].to_vec()),
            })
        }
        LpStatus::Unbounded => Err(Error::InternalCheck(
            "variation objective cannot be unbounded".into(),
        )),
    }
}

/// State space of a scalar space containing constants: the convex hull
/// of its evaluation functionals in basis coordinates.
pub fn state_space(space: &ScalarSpace) -> Result<Polytope> {
    if !space.contains_constants() {
        return Err(Error::NoConstants);
    }
    let pts: Vec<Vec<Rat>> = (0..space.n()).map(|t| space.evaluation(t)).collect();
    Polytope::from_points(space.dim(), &pts)
}

/// Matrix of the canonical operator associated with a weak-space
/// functional (in weak-space basis coordinates) on the H basis.
pub fn upsilon_operator(space: &FunctionSpace, w: &ScalarSpace, phi: &[Rat]) -> OperatorMatrix {
    let (n, d) = (space.n(), space.d());
    let wb = transpose(w.basis());
    let mut entries = vec![vec![Rat::zero(); space.m()]; d];
    for (j, b) in space.basis().iter().enumerate() {
        for (i, row) in entries.iter_mut().enumerate() {
            let slice: Vec<Rat> = (0..n).map(|t| b[t * d + i].clone()).collect();
            let coeffs = crate::exactgeom::linalg::solve(&wb, &slice)
                .expect("coordinate slice lies in the weak space");
            row[j] = dot(&coeffs, phi);
        }
    }
    OperatorMatrix { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, rat_i};

    fn ri(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_i(x)).collect()
    }

    fn pts(ls: &[&str]) -> FiniteCompact {
        FiniteCompact::new(ls.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn finite_compact_rejects_duplicates_and_empty() {
        assert!(FiniteCompact::new(vec![]).is_err());
        assert!(FiniteCompact::new(vec!["a".into(), "a".into()]).is_err());
        let k = pts(&["x", "y"]);
        assert_eq!(k.index("y"), Some(1));
        assert_eq!(k.index("z"), None);
    }

    #[test]
    fn dependent_basis_rejected() {
        let err = FunctionSpace::new(
            pts(&["0", "1"]),
            NormSpec::linf(1),
            vec![ri(&[1, 0]), ri(&[2, 0])],
        );
        assert!(err.is_err());
    }

    #[test]
    fn full_space_weak_space_is_everything() {
        let s = FunctionSpace::new(
            pts(&["0", "1"]),
            NormSpec::linf(2),
            vec![
                ri(&[1, 0, 0, 0]),
                ri(&[0, 1, 0, 0]),
                ri(&[0, 0, 1, 0]),
                ri(&[0, 0, 0, 1]),
            ],
        )
        .unwrap();
        assert_eq!(weak_space(&s).dim(), 2);
        assert!(s.contains_constants());
        assert!(s.separates_points());
    }

    #[test]
    fn structure_report_same_point_errors() {
        let s = FunctionSpace::new(pts(&["0", "1"]), NormSpec::linf(1), vec![ri(&[1, 0]), ri(&[0, 1])])
            .unwrap();
        assert!(matches!(structure_report(&s, 1, 1), Err(crate::Error::SamePoint)));
    }

    #[test]
    fn theta_self_collapse_at_vanishing_point() {
        // all basis functions vanish at point 0
        let s = FunctionSpace::new(pts(&["0", "1"]), NormSpec::linf(1), vec![ri(&[0, 1])]).unwrap();
        let collapses = theta_collapses(&s);
        assert!(collapses.contains(&(0, 0, -1)));
    }

    #[test]
    fn constants_lemma_postconditions() {
        // full constants: phi_Hl(t, x*) = ||x*|| and phi_H = 1
        let s = FunctionSpace::new(
            pts(&["0", "1"]),
            NormSpec::linf(2),
            vec![
                ri(&[1, 0, 1, 0]),
                ri(&[0, 1, 0, 1]),
                ri(&[0, 0, 1, 1]),
            ],
        )
        .unwrap();
        assert_eq!(s.constants_status(), ConstantsStatus::Full);
        let xs = ri(&[2, -3]);
        let norms = evaluation_norms(&s, 0, Some(&xs)).unwrap();
        assert_eq!(norms.phi_hl.unwrap(), rat_i(5)); // l1 dual norm of (2,-3)
        assert_eq!(norms.phi_h, rat_i(1));
        assert_eq!(norms.phi_hw, rat_i(1));
        assert_eq!(norms.phi_hs, rat_i(1));
    }

    #[test]
    fn rotation_on_a_singleton_is_not_representable() {
        let s = FunctionSpace::new(
            pts(&["0"]),
            NormSpec::linf(2),
            vec![ri(&[1, 0]), ri(&[0, 1])],
        )
        .unwrap();
        let rot = OperatorMatrix {
            entries: vec![ri(&[0, -1]), ri(&[1, 0])],
        };
        assert!(matches!(
            representable_operator(&s, &rot).unwrap(),
            Representability::NotRepresentable
        ));
        // the evaluation itself is representable with unit variation
        let ev = OperatorMatrix::evaluation(&s, 0);
        match representable_operator(&s, &ev).unwrap() {
            Representability::Representable { norm_r, witness } => {
                assert_eq!(norm_r, rat_i(1));
                assert_eq!(witness.values, ri(&[1]));
            }
            _ => panic!("evaluation must be representable"),
        }
    }

    #[test]
    fn state_space_requires_constants() {
        let w = ScalarSpace::new(pts(&["0", "1"]), &[ri(&[1, -1])]);
        assert!(matches!(state_space(&w), Err(crate::Error::NoConstants)));
        let full = ScalarSpace::new(pts(&["0", "1"]), &[ri(&[1, 0]), ri(&[0, 1])]);
        let ss = state_space(&full).unwrap();
        assert_eq!(ss.vertices.len(), 2); // a 1-simplex
        assert!(ss.is_simplex());
    }

    #[test]
    fn singleton_state_space_is_a_point() {
        let w = ScalarSpace::new(pts(&["0"]), &[ri(&[1])]);
        let ss = state_space(&w).unwrap();
        assert_eq!(ss.vertices.len(), 1);
    }

    #[test]
    fn smooth_target_evaluation_norms_unsupported() {
        let s = FunctionSpace::new(
            pts(&["0"]),
            NormSpec::lp(2, rat(3, 2)).unwrap(),
            vec![ri(&[1, 0]), ri(&[0, 1])],
        )
        .unwrap();
        assert!(matches!(
            evaluation_norms(&s, 0, None),
            Err(crate::Error::SmoothNormUnsupported)
        ));
    }
}
