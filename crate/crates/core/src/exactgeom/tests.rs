use super::lp::{feasible, is_extreme_in_hrep, lp_solve, LinearProgram, LpStatus};
use super::polytope::{
    facet_enumeration, in_hull, is_extreme_point, polar, round_trip_vertices,
    vertex_enumeration, HRep, Polytope,
};
use super::rat::{dot, rat, rat_i, Rat};
use crate::exactgeom::linalg::{nullspace, rank, rref, solve, sort_dedup};
use num_traits::{One, Signed, Zero};

fn v(xs: &[i64]) -> Vec<Rat> {
    xs.iter().map(|&x| rat_i(x)).collect()
}

// ---- brute-force oracles ---------------------------------------------

/// Enumerate candidate vertices by solving every maximal subsystem of
/// binding constraints; keep the feasible ones. Exponential and exact.
fn brute_force_vertices(dim: usize, h: &HRep) -> Vec<Vec<Rat>> {
    let mut rows: Vec<(Vec<Rat>, Rat)> = h.equalities.clone();
    let free = dim - rank(&rows.iter().map(|(a, _)| a.clone()).collect::<Vec<_>>()).min(dim);
    let ineqs = &h.inequalities;
    let mut out: Vec<Vec<Rat>> = Vec::new();
    let n = ineqs.len();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    // choose up to `free` inequalities to bind
    for _ in 0..free {
        let mut next = Vec::new();
        for s in &stack {
            let start = s.last().map_or(0, |&x| x + 1);
            for k in start..n {
                let mut t = s.clone();
                t.push(k);
                next.push(t);
            }
        }
        stack.extend(next);
    }
    for subset in &stack {
        let mut sys = rows.clone();
        for &k in subset {
            sys.push(ineqs[k].clone());
        }
        let a: Vec<Vec<Rat>> = sys.iter().map(|(r, _)| r.clone()).collect();
        let b: Vec<Rat> = sys.iter().map(|(_, c)| c.clone()).collect();
        if rank(&a) < dim {
            continue;
        }
        if let Some(x) = solve(&a, &b) {
            let feas = ineqs.iter().all(|(r, c)| dot(r, &x) <= *c)
                && h.equalities.iter().all(|(r, c)| &dot(r, &x) == c);
            if feas {
                out.push(x);
            }
        }
    }
    rows.clear();
    sort_dedup(out)
}

/// Brute-force LP: evaluate the objective on all brute-force vertices.
/// Valid for bounded feasible regions.
fn brute_force_lp_min(lp: &LinearProgram) -> Option<Rat> {
    let h = HRep {
        equalities: lp.eq.clone(),
        inequalities: lp.ineq.clone(),
        incidence: None,
    };
    let verts = brute_force_vertices(lp.objective.len(), &h);
    verts.iter().map(|x| dot(&lp.objective, x)).min()
}

// ---- lp ---------------------------------------------------------------

#[test]
fn lp_halfline_boundary() {
    // minimize x subject to x >= 0
    let lp = LinearProgram {
        objective: v(&[1]),
        eq: vec![],
        ineq: vec![(v(&[-1]), rat_i(0))],
    };
    let out = lp_solve(&lp).unwrap();
    assert_eq!(out.status, LpStatus::Optimal);
    assert_eq!(out.value.unwrap(), rat_i(0));
    assert_eq!(out.point.unwrap(), v(&[0]));
    assert_eq!(out.optimal_face_dim, Some(0));
}

#[test]
fn lp_infeasible_system() {
    // x <= 0 and x >= 1
    let lp = LinearProgram {
        objective: v(&[1]),
        eq: vec![],
        ineq: vec![(v(&[1]), rat_i(0)), (v(&[-1]), rat_i(-1))],
    };
    let out = lp_solve(&lp).unwrap();
    assert_eq!(out.status, LpStatus::Infeasible);
}

#[test]
fn lp_unbounded() {
    let lp = LinearProgram {
        objective: v(&[-1]),
        eq: vec![],
        ineq: vec![(v(&[-1]), rat_i(0))],
    };
    let out = lp_solve(&lp).unwrap();
    assert_eq!(out.status, LpStatus::Unbounded);
}

#[test]
fn lp_degenerate_square_face() {
    // minimize 0 over the unit square: optimal face is the whole square
    let lp = LinearProgram {
        objective: v(&[0, 0]),
        eq: vec![],
        ineq: vec![
            (v(&[1, 0]), rat_i(1)),
            (v(&[-1, 0]), rat_i(0)),
            (v(&[0, 1]), rat_i(1)),
            (v(&[0, -1]), rat_i(0)),
        ],
    };
    let out = lp_solve(&lp).unwrap();
    assert_eq!(out.optimal_face_dim, Some(2));

    // minimize x over the square: optimal face is an edge
    let lp2 = LinearProgram {
        objective: v(&[1, 0]),
        ..lp.clone()
    };
    let out2 = lp_solve(&lp2).unwrap();
    assert_eq!(out2.value.unwrap(), rat_i(0));
    assert_eq!(out2.optimal_face_dim, Some(1));
}

#[test]
fn lp_matches_brute_force_on_random_programs() {
    // small deterministic family of programs over the cube with random-ish
    // rational data
    let cube: Vec<(Vec<Rat>, Rat)> = vec![
        (v(&[1, 0, 0]), rat_i(1)),
        (v(&[-1, 0, 0]), rat_i(1)),
        (v(&[0, 1, 0]), rat_i(1)),
        (v(&[0, -1, 0]), rat_i(1)),
        (v(&[0, 0, 1]), rat_i(1)),
        (v(&[0, 0, -1]), rat_i(1)),
        (v(&[1, 1, 1]), rat(3, 2)),
    ];
    let objs = [
        v(&[1, 2, 3]),
        v(&[-1, 1, 0]),
        vec![rat(1, 3), rat(-2, 5), rat(7, 2)],
        v(&[0, 0, -1]),
    ];
    for obj in &objs {
        let lp = LinearProgram {
            objective: obj.clone(),
            eq: vec![(v(&[1, 1, 0]), rat(1, 2))],
            ineq: cube.clone(),
        };
        let out = lp_solve(&lp).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        let brute = brute_force_lp_min(&lp).unwrap();
        assert_eq!(out.value.unwrap(), brute, "objective {:?}", obj);
        // strong duality: the explicitly constructed dual attains the value
        assert_lp_strong_duality(&lp);
    }
}

/// Construct and solve the dual program explicitly; exact agreement with
/// the primal is the strong-duality cross-check.
pub fn assert_lp_strong_duality(lp: &LinearProgram) {
    let out = lp_solve(&lp.clone()).unwrap();
    if out.status != LpStatus::Optimal {
        return;
    }
    let n = lp.objective.len();
    let me = lp.eq.len();
    let mi = lp.ineq.len();
    // primal: min c.x st A x = b, G x <= h
    // dual:   max b.y + h.z st A^T y + G^T z = c, z <= 0
    // as a min problem: min -(b.y + h.z)
    let mut obj = Vec::with_capacity(me + mi);
    for (_, b) in &lp.eq {
        obj.push(-b.clone());
    }
    for (_, h) in &lp.ineq {
        obj.push(-h.clone());
    }
    let mut eq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for j in 0..n {
        let mut row = Vec::with_capacity(me + mi);
        for (a, _) in &lp.eq {
            row.push(a[j].clone());
        }
        for (g, _) in &lp.ineq {
            row.push(g[j].clone());
        }
        eq.push((row, lp.objective[j].clone()));
    }
    let mut ineq: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for k in 0..mi {
        let mut row = vec![Rat::zero(); me + mi];
        row[me + k] = Rat::one();
        ineq.push((row, Rat::zero()));
    }
    let dual = LinearProgram {
        objective: obj,
        eq,
        ineq,
    };
    let dout = lp_solve(&dual).unwrap();
    assert_eq!(dout.status, LpStatus::Optimal, "dual not optimal");
    assert_eq!(
        -dout.value.unwrap(),
        out.value.unwrap(),
        "strong duality violated"
    );
}

// ---- polytopes ---------------------------------------------------------

fn unit_square_hrep() -> HRep {
    HRep {
        equalities: vec![],
        inequalities: vec![
            (v(&[1, 0]), rat_i(1)),
            (v(&[-1, 0]), rat_i(0)),
            (v(&[0, 1]), rat_i(1)),
            (v(&[0, -1]), rat_i(0)),
        ],
        incidence: None,
    }
}

#[test]
fn vertex_enumeration_unit_square() {
    let verts = vertex_enumeration(2, &unit_square_hrep()).unwrap();
    assert_eq!(
        verts,
        vec![v(&[0, 0]), v(&[0, 1]), v(&[1, 0]), v(&[1, 1])]
    );
}

#[test]
fn vertex_enumeration_cross_polytope() {
    // |x| + |y| <= 1 via four facets
    let h = HRep {
        equalities: vec![],
        inequalities: vec![
            (v(&[1, 1]), rat_i(1)),
            (v(&[1, -1]), rat_i(1)),
            (v(&[-1, 1]), rat_i(1)),
            (v(&[-1, -1]), rat_i(1)),
        ],
        incidence: None,
    };
    let verts = vertex_enumeration(2, &h).unwrap();
    assert_eq!(
        verts,
        vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]
    );
}

#[test]
fn vertex_enumeration_matches_brute_force() {
    let triangle_with_eq = HRep {
        equalities: vec![(v(&[1, 1, 1]), rat_i(1))],
        inequalities: vec![
            (v(&[-1, 0, 0]), rat_i(0)),
            (v(&[0, -1, 0]), rat_i(0)),
            (v(&[0, 0, -1]), rat_i(0)),
            (v(&[2, 1, 0]), rat(3, 2)),
        ],
        incidence: None,
    };
    let dd = vertex_enumeration(3, &triangle_with_eq).unwrap();
    let brute = brute_force_vertices(3, &triangle_with_eq);
    assert_eq!(dd, brute);
}

#[test]
fn unbounded_polyhedron_signals_error() {
    let h = HRep {
        equalities: vec![],
        inequalities: vec![(v(&[-1, 0]), rat_i(0)), (v(&[0, -1]), rat_i(0))],
        incidence: None,
    };
    assert!(matches!(
        vertex_enumeration(2, &h),
        Err(crate::Error::UnboundedPolyhedron)
    ));
}

#[test]
fn facet_enumeration_triangle_and_cube() {
    let tri = vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1])];
    let h = facet_enumeration(2, &tri).unwrap();
    assert_eq!(h.inequalities.len(), 3);
    assert!(h.equalities.is_empty());

    let mut cube = Vec::new();
    for sx in [-1i64, 1] {
        for sy in [-1i64, 1] {
            for sz in [-1i64, 1] {
                cube.push(v(&[sx, sy, sz]));
            }
        }
    }
    let h = facet_enumeration(3, &cube).unwrap();
    assert_eq!(h.inequalities.len(), 6);
    let inc = h.incidence.unwrap();
    assert!(inc.iter().all(|f| f.len() == 4));
}

#[test]
fn facet_enumeration_lower_dimensional() {
    // a segment inside R^2: one equality, two facets
    let seg = vec![v(&[0, 0]), v(&[2, 2])];
    let h = facet_enumeration(2, &seg).unwrap();
    assert_eq!(h.equalities.len(), 1);
    assert_eq!(h.inequalities.len(), 2);
    let back = vertex_enumeration(2, &h).unwrap();
    assert_eq!(back, sort_dedup(seg));
}

#[test]
fn round_trip_v_h_v() {
    let polys: Vec<(usize, Vec<Vec<Rat>>)> = vec![
        (2, vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]),
        (2, vec![v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]),
        (
            3,
            vec![
                v(&[1, 0, 0]),
                v(&[-1, 0, 0]),
                v(&[0, 1, 0]),
                v(&[0, -1, 0]),
                v(&[0, 0, 1]),
                v(&[0, 0, -1]),
            ],
        ),
    ];
    for (d, vs) in polys {
        let vs = sort_dedup(vs);
        let back = round_trip_vertices(d, &vs).unwrap();
        assert_eq!(back, vs);
    }
}

#[test]
fn extreme_point_tests() {
    let square = vec![v(&[0, 0]), v(&[1, 0]), v(&[0, 1]), v(&[1, 1])];
    assert!(is_extreme_point(&v(&[0, 0]), &square).unwrap());
    let mut with_mid = square.clone();
    with_mid.push(vec![rat(1, 2), rat_i(0)]);
    assert!(!is_extreme_point(&[rat(1, 2), rat_i(0)], &with_mid).unwrap());
    assert!(matches!(
        is_extreme_point(&v(&[5, 5]), &square),
        Err(crate::Error::PointNotInHull)
    ));
    // duplicates of p removed before the test
    let mut dup = square.clone();
    dup.push(v(&[1, 1]));
    assert!(is_extreme_point(&v(&[1, 1]), &dup).unwrap());
}

#[test]
fn polar_of_linf_ball_is_l1_ball() {
    let mut cube = Vec::new();
    for sx in [-1i64, 1] {
        for sy in [-1i64, 1] {
            cube.push(v(&[sx, sy]));
        }
    }
    let p = polar(2, &cube).unwrap();
    assert_eq!(
        p.vertices,
        vec![v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]
    );
}

#[test]
fn extreme_in_hrep_matches_vertex_list() {
    let h = unit_square_hrep();
    let verts = vertex_enumeration(2, &h).unwrap();
    for vert in &verts {
        assert!(is_extreme_in_hrep(vert, &h.equalities, &h.inequalities).unwrap());
    }
    let mid = vec![rat(1, 2), rat(1, 2)];
    assert!(!is_extreme_in_hrep(&mid, &h.equalities, &h.inequalities).unwrap());
}

#[test]
fn in_hull_membership() {
    let tri = vec![v(&[0, 0]), v(&[2, 0]), v(&[0, 2])];
    assert!(in_hull(&vec![rat(1, 2), rat(1, 2)], &tri).unwrap());
    assert!(!in_hull(&v(&[2, 2]), &tri).unwrap());
}

#[test]
fn polytope_from_points_filters_interior() {
    let pts = vec![
        v(&[0, 0]),
        v(&[2, 0]),
        v(&[0, 2]),
        vec![rat(1, 2), rat(1, 2)], // interior
        v(&[1, 0]),                 // edge midpoint
    ];
    let p = Polytope::from_points(2, &pts).unwrap();
    assert_eq!(p.vertices, vec![v(&[0, 0]), v(&[0, 2]), v(&[2, 0])]);
}

// ---- linalg ------------------------------------------------------------

#[test]
fn rref_and_nullspace() {
    let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
    let (r, piv) = rref(&m);
    assert_eq!(piv, vec![0, 1]);
    assert_eq!(r.len(), 2);
    let ns = nullspace(&m, 3);
    assert_eq!(ns.len(), 1);
    for row in &m {
        assert!(dot(row, &ns[0]).is_zero());
    }
}

#[test]
fn feasibility_and_solution() {
    let eq = vec![(v(&[1, 1]), rat_i(1))];
    let ineq = vec![(v(&[-1, 0]), rat_i(0)), (v(&[0, -1]), rat_i(0))];
    assert!(feasible(&eq, &ineq, 2).unwrap());
    let eq_bad = vec![(v(&[1, 1]), rat_i(-1))];
    assert!(!feasible(&eq_bad, &ineq, 2).unwrap());
}
