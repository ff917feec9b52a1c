//! Exact two-phase simplex with Bland's anti-cycling rule.
//!
//! Variables are free; internally each is split as `x = u - v` with
//! `u, v >= 0`, inequalities get slack variables, and infeasibility is
//! detected through phase-one artificials. No floating point anywhere.

use super::linalg::{nullspace, rank};
use super::rat::{dot, Rat};
use crate::error::Error;
use num_traits::{One, Signed, Zero};

/// `minimize objective . x` subject to `eq: a.x = b` and `ineq: a.x <= b`.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub objective: Vec<Rat>,
    pub eq: Vec<(Vec<Rat>, Rat)>,
    pub ineq: Vec<(Vec<Rat>, Rat)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rat>,
    pub point: Option<Vec<Rat>>,
    /// Affine dimension of the optimal face (0 means the optimum is unique).
    pub optimal_face_dim: Option<usize>,
}

impl LpOutcome {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

fn check_dims(lp: &LinearProgram) -> Result<usize, Error> {
    let n = lp.objective.len();
    for (a, _) in lp.eq.iter().chain(lp.ineq.iter()) {
        if a.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "constraint of length {} against {} variables",
                a.len(),
                n
            )));
        }
    }
    Ok(n)
}

/// Solve without computing the optimal face dimension.
pub fn lp_solve_raw(lp: &LinearProgram) -> Result<LpOutcome, Error> {
    let n = check_dims(lp)?;
    let n_ineq = lp.ineq.len();
    let n_rows = lp.eq.len() + n_ineq;
    // columns: u (n), v (n), slacks (n_ineq)
    let n_cols = 2 * n + n_ineq;

    // rows: [A, -A, 0 | b], [G, -G, I | h], normalized to rhs >= 0
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_rows);
    let mut rhs: Vec<Rat> = Vec::with_capacity(n_rows);
    for (k, (a, b)) in lp.eq.iter().chain(lp.ineq.iter()).enumerate() {
        let mut row = vec![Rat::zero(); n_cols];
        for j in 0..n {
            row[j] = a[j].clone();
            row[n + j] = -a[j].clone();
        }
        if k >= lp.eq.len() {
            row[2 * n + (k - lp.eq.len())] = Rat::one();
        }
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            rhs.push(-b.clone());
        } else {
            rhs.push(b.clone());
        }
        rows.push(row);
    }

    let mut t = Tableau::new(rows, rhs);
    if !t.phase_one() {
        return Ok(LpOutcome {
            status: LpStatus::Infeasible,
            value: None,
            point: None,
            optimal_face_dim: None,
        });
    }

    // phase-two objective over the split variables
    let mut cost = vec![Rat::zero(); n_cols];
    for j in 0..n {
        cost[j] = lp.objective[j].clone();
        cost[n + j] = -lp.objective[j].clone();
    }
    if !t.phase_two(&cost) {
        return Ok(LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
            optimal_face_dim: None,
        });
    }

    let z = t.solution(n_cols);
    let x: Vec<Rat> = (0..n).map(|j| &z[j] - &z[n + j]).collect();
    let value = dot(&lp.objective, &x);
    Ok(LpOutcome {
        status: LpStatus::Optimal,
        value: Some(value),
        point: Some(x),
        optimal_face_dim: None,
    })
}

/// Solve and, when optimal, compute the affine dimension of the optimal
/// face as the nullity of the normals binding on the whole face (the
/// equality rows, the objective, and every inequality that is tight over
/// the entire face — detected with one auxiliary program per inequality).
pub fn lp_solve(lp: &LinearProgram) -> Result<LpOutcome, Error> {
    let mut out = lp_solve_raw(lp)?;
    if out.status != LpStatus::Optimal {
        return Ok(out);
    }
    let n = lp.objective.len();
    let opt = out.value.clone().unwrap();

    // Feasibility system of the optimal face: original constraints plus
    // objective pinned at the optimum.
    let mut face = lp.clone();
    face.eq.push((lp.objective.clone(), opt));

    let mut normals: Vec<Vec<Rat>> = lp.eq.iter().map(|(a, _)| a.clone()).collect();
    if !lp.objective.iter().all(|c| c.is_zero()) {
        normals.push(lp.objective.clone());
    }
    for (a, b) in &lp.ineq {
        // tight on the whole face  <=>  min a.x over the face equals b
        let aux = LinearProgram {
            objective: a.clone(),
            eq: face.eq.clone(),
            ineq: face.ineq.clone(),
        };
        let r = lp_solve_raw(&aux)?;
        match r.status {
            LpStatus::Optimal if r.value.as_ref() == Some(b) => normals.push(a.clone()),
            LpStatus::Infeasible => {
                return Err(Error::InternalCheck(
                    "optimal face became infeasible".into(),
                ))
            }
            _ => {}
        }
    }
    out.optimal_face_dim = Some(nullspace(&normals, n).len());
    Ok(out)
}

/// Dimension of the polyhedron `{eq, ineq}` (affine dimension), or None
/// when the set is empty. Reuses the always-binding machinery by solving
/// with a zero objective.
pub fn polyhedron_dim(eq: &[(Vec<Rat>, Rat)], ineq: &[(Vec<Rat>, Rat)], n: usize) -> Result<Option<usize>, Error> {
    let lp = LinearProgram {
        objective: vec![Rat::zero(); n],
        eq: eq.to_vec(),
        ineq: ineq.to_vec(),
    };
    let out = lp_solve(&lp)?;
    match out.status {
        LpStatus::Infeasible => Ok(None),
        LpStatus::Optimal => Ok(out.optimal_face_dim),
        LpStatus::Unbounded => unreachable!("zero objective cannot be unbounded"),
    }
}

/// Does the system have a solution?
pub fn feasible(eq: &[(Vec<Rat>, Rat)], ineq: &[(Vec<Rat>, Rat)], n: usize) -> Result<bool, Error> {
    let lp = LinearProgram {
        objective: vec![Rat::zero(); n],
        eq: eq.to_vec(),
        ineq: ineq.to_vec(),
    };
    Ok(lp_solve_raw(&lp)?.status == LpStatus::Optimal)
}

/// Dense simplex tableau; `data[i]` holds the row coefficients with the
/// right-hand side in the last column, `cost` is the reduced-cost row
/// with the (negated) objective value in its last entry.
struct Tableau {
    data: Vec<Vec<Rat>>,
    cost: Vec<Rat>,
    basis: Vec<usize>,
    n_struct: usize,
}

impl Tableau {
    fn new(rows: Vec<Vec<Rat>>, rhs: Vec<Rat>) -> Self {
        let m = rows.len();
        let n_struct = rows.first().map_or(0, |r| r.len());
        // append artificial columns and the rhs
        let mut data = Vec::with_capacity(m);
        for (i, row) in rows.into_iter().enumerate() {
            let mut r = row;
            for k in 0..m {
                r.push(if k == i { Rat::one() } else { Rat::zero() });
            }
            r.push(rhs[i].clone());
            data.push(r);
        }
        let basis: Vec<usize> = (0..m).map(|i| n_struct + i).collect();
        Tableau {
            data,
            cost: vec![],
            basis,
            n_struct,
        }
    }

    fn ncols(&self) -> usize {
        self.data.first().map_or(0, |r| r.len())
    }

    /// Minimize the sum of artificials. True iff the system is feasible;
    /// afterwards artificial columns are pivoted or zeroed out.
    fn phase_one(&mut self) -> bool {
        let m = self.data.len();
        let total = self.ncols();
        // cost row for sum of artificials, expressed over the current basis
        let mut cost = vec![Rat::zero(); total];
        for j in self.n_struct..self.n_struct + m {
            cost[j] = Rat::one();
        }
        // make reduced costs of basic columns zero
        for i in 0..m {
            let r = self.data[i].clone();
            for j in 0..total {
                cost[j] -= &r[j];
            }
        }
        self.cost = cost;
        self.pivot_loop(self.n_struct + m);
        let obj = -self.cost[total - 1].clone();
        if !obj.is_zero() {
            return false;
        }
        // drive artificials out of the basis where possible
        for i in 0..m {
            if self.basis[i] >= self.n_struct {
                let col = (0..self.n_struct).find(|&j| !self.data[i][j].is_zero());
                if let Some(j) = col {
                    self.pivot(i, j);
                }
            }
        }
        // rows still basic in an artificial are all-zero in the structural
        // columns with zero rhs: redundant, drop them so phase two cannot
        // push an artificial positive
        let keep: Vec<bool> = self.basis.iter().map(|&b| b < self.n_struct).collect();
        let mut i = 0;
        self.data.retain(|_| {
            let k = keep[i];
            i += 1;
            k
        });
        let mut i = 0;
        self.basis.retain(|_| {
            let k = keep[i];
            i += 1;
            k
        });
        true
    }

    /// Minimize `obj` over the structural columns. False iff unbounded.
    fn phase_two(&mut self, obj: &[Rat]) -> bool {
        let m = self.data.len();
        let total = self.ncols();
        let mut cost = vec![Rat::zero(); total];
        cost[..self.n_struct].clone_from_slice(&obj[..self.n_struct]);
        for i in 0..m {
            let b = self.basis[i];
            if b < self.n_struct && !obj[b].is_zero() {
                let f = obj[b].clone();
                let row = self.data[i].clone();
                for j in 0..total {
                    let t = &row[j] * &f;
                    cost[j] = &cost[j] - &t;
                }
            }
        }
        self.cost = cost;
        // artificial columns are barred from re-entering
        self.pivot_loop(self.n_struct)
    }

    /// Bland's rule: entering = lowest-index negative reduced cost among
    /// the first `allowed` columns; leaving = lowest basis index among the
    /// minimum ratios. Returns false on unboundedness.
    fn pivot_loop(&mut self, allowed: usize) -> bool {
        let m = self.data.len();
        let rhs_col = self.ncols() - 1;
        loop {
            let entering = (0..allowed).find(|&j| self.cost[j].is_negative());
            let Some(e) = entering else {
                return true;
            };
            let mut leave: Option<usize> = None;
            let mut best: Option<Rat> = None;
            for i in 0..m {
                if self.data[i][e].is_positive() {
                    let ratio = &self.data[i][rhs_col] / &self.data[i][e];
                    let better = match &best {
                        None => true,
                        Some(b) => {
                            ratio < *b
                                || (ratio == *b
                                    && self.basis[i] < self.basis[leave.unwrap()])
                        }
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            let Some(l) = leave else {
                return false;
            };
            self.pivot(l, e);
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let total = self.ncols();
        let p = self.data[row][col].clone();
        debug_assert!(!p.is_zero());
        for j in 0..total {
            self.data[row][j] = &self.data[row][j] / &p;
        }
        for i in 0..self.data.len() {
            if i != row && !self.data[i][col].is_zero() {
                let f = self.data[i][col].clone();
                for j in 0..total {
                    let t = &self.data[row][j] * &f;
                    self.data[i][j] = &self.data[i][j] - &t;
                }
            }
        }
        if !self.cost.is_empty() && !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for j in 0..total {
                let t = &self.data[row][j] * &f;
                self.cost[j] = &self.cost[j] - &t;
            }
        }
        self.basis[row] = col;
    }

    fn solution(&self, n_cols: usize) -> Vec<Rat> {
        let rhs_col = self.ncols() - 1;
        let mut z = vec![Rat::zero(); n_cols];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n_cols {
                z[b] = self.data[i][rhs_col].clone();
            }
        }
        z
    }
}

/// Is the rank of the binding constraints at `point` full? The exact
/// extreme-point test for a point known to satisfy the H-representation.
pub fn is_extreme_in_hrep(
    point: &[Rat],
    eq: &[(Vec<Rat>, Rat)],
    ineq: &[(Vec<Rat>, Rat)],
) -> Result<bool, Error> {
    let n = point.len();
    let mut binding: Vec<Vec<Rat>> = Vec::new();
    for (a, b) in eq {
        if &dot(a, point) != b {
            return Err(Error::InvalidInput("point violates an equality".into()));
        }
        binding.push(a.clone());
    }
    for (a, b) in ineq {
        let v = dot(a, point);
        if &v > b {
            return Err(Error::InvalidInput("point violates an inequality".into()));
        }
        if &v == b {
            binding.push(a.clone());
        }
    }
    Ok(rank(&binding) == n)
}
