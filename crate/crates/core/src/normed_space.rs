//! Norms on finite-dimensional rational spaces, their dual balls, and the
//! geometric predicates built on them (simplexoid test, barycentric
//! decompositions on the dual sphere, strict convexity of the dual).

use crate::error::Error;
use crate::exactgeom::linalg::{affine_dim, rank, sort_dedup};
use crate::exactgeom::polytope::{polar, vertex_enumeration, HRep, Polytope};
use crate::exactgeom::rat::{dot, Rat};
use crate::Result;
use num_traits::{One, ToPrimitive, Zero};

/// How the norm is given. Polyhedral kinds carry exact polytope duals;
/// the smooth `l_p` kind is excluded from every exact polytope path and
/// only enters through the strictly-convex-dual reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormKind {
    Linf,
    L1,
    /// Unit ball given by its vertex list (symmetric, spanning).
    PolyhedralBall(Vec<Vec<Rat>>),
    /// Smooth l_p with rational p in (1, infinity).
    Lp(Rat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormSpec {
    pub dim: usize,
    pub kind: NormKind,
}

/// The polar of the primal unit ball, with its vertices enumerated.
#[derive(Debug, Clone)]
pub struct DualBall {
    pub polytope: Polytope,
}

impl DualBall {
    pub fn ext_points(&self) -> &[Vec<Rat>] {
        &self.polytope.vertices
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormSide {
    Primal,
    Dual,
}

/// Exact value for polyhedral kinds; smooth norms are approximate and
/// flagged as such.
#[derive(Debug, Clone, PartialEq)]
pub enum NormValue {
    Exact(Rat),
    Approx(f64),
}

impl NormValue {
    pub fn exact(self) -> Result<Rat> {
        match self {
            NormValue::Exact(r) => Ok(r),
            NormValue::Approx(_) => Err(Error::SmoothNormUnsupported),
        }
    }
}

impl NormSpec {
    pub fn linf(dim: usize) -> Self {
        NormSpec {
            dim,
            kind: NormKind::Linf,
        }
    }

    pub fn l1(dim: usize) -> Self {
        NormSpec {
            dim,
            kind: NormKind::L1,
        }
    }

    pub fn lp(dim: usize, p: Rat) -> Result<Self> {
        if p <= Rat::one() {
            return Err(Error::InvalidInput("l_p kind needs p in (1, inf)".into()));
        }
        Ok(NormSpec {
            dim,
            kind: NormKind::Lp(p),
        })
    }

    /// Polyhedral ball from its vertex list. The list must be symmetric
    /// and span the space; non-extreme points are dropped.
    pub fn polyhedral(dim: usize, vertices: Vec<Vec<Rat>>) -> Result<Self> {
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch("ball vertex".into()));
            }
        }
        let vs = sort_dedup(vertices);
        for v in &vs {
            let neg: Vec<Rat> = v.iter().map(|x| -x).collect();
            if !vs.contains(&neg) {
                return Err(Error::InvalidInput(
                    "polyhedral ball vertex set is not symmetric".into(),
                ));
            }
        }
        if rank(&vs) != dim {
            return Err(Error::InvalidInput(
                "polyhedral ball vertices do not span the space".into(),
            ));
        }
        let poly = Polytope::from_points(dim, &vs)?;
        Ok(NormSpec {
            dim,
            kind: NormKind::PolyhedralBall(poly.vertices),
        })
    }

    pub fn smooth_dual(&self) -> bool {
        matches!(self.kind, NormKind::Lp(_))
    }

    pub fn is_polyhedral(&self) -> bool {
        !self.smooth_dual()
    }

    /// Vertices of the primal unit ball (polyhedral kinds only).
    pub fn primal_vertices(&self) -> Result<Vec<Vec<Rat>>> {
        match &self.kind {
            NormKind::Linf => {
                let mut out = Vec::with_capacity(1 << self.dim);
                for mask in 0..(1usize << self.dim) {
                    let v: Vec<Rat> = (0..self.dim)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                -Rat::one()
                            } else {
                                Rat::one()
                            }
                        })
                        .collect();
                    out.push(v);
                }
                Ok(sort_dedup(out))
            }
            NormKind::L1 => {
                let mut out = Vec::new();
                for i in 0..self.dim {
                    let mut v = vec![Rat::zero(); self.dim];
                    v[i] = Rat::one();
                    out.push(v.clone());
                    v[i] = -Rat::one();
                    out.push(v);
                }
                Ok(sort_dedup(out))
            }
            NormKind::PolyhedralBall(vs) => Ok(vs.clone()),
            NormKind::Lp(_) => Err(Error::SmoothNormUnsupported),
        }
    }

    /// Dual exponent q with 1/p + 1/q = 1 (for the Lp kind).
    pub fn dual_exponent(&self) -> Option<Rat> {
        match &self.kind {
            NormKind::Lp(p) => Some(p / (p - Rat::one())),
            _ => None,
        }
    }
}

/// Exact polar polytope of the primal ball, vertices enumerated.
pub fn dual_ball(spec: &NormSpec) -> Result<DualBall> {
    let verts = spec.primal_vertices()?;
    let poly = polar(spec.dim, &verts)?;
    Ok(DualBall { polytope: poly })
}

/// Primal side: Minkowski gauge of the ball. Dual side: support function
/// of the ball. Both reduce to maxima over vertex sets for polyhedral
/// kinds; the Lp kind yields flagged floating-point values.
pub fn norm_value(spec: &NormSpec, x: &[Rat], side: NormSide) -> Result<NormValue> {
    if x.len() != spec.dim {
        return Err(Error::DimensionMismatch("norm_value input".into()));
    }
    match &spec.kind {
        NormKind::Lp(p) => {
            let pf = p.to_f64().unwrap();
            let e = match side {
                NormSide::Primal => pf,
                NormSide::Dual => pf / (pf - 1.0),
            };
            let s: f64 = x
                .iter()
                .map(|r| r.to_f64().unwrap().abs().powf(e))
                .sum();
            Ok(NormValue::Approx(s.powf(1.0 / e)))
        }
        _ => {
            let vertices = match side {
                // gauge of the ball = sup over the polar's vertices
                NormSide::Primal => dual_ball(spec)?.polytope.vertices,
                NormSide::Dual => spec.primal_vertices()?,
            };
            let m = vertices
                .iter()
                .map(|v| dot(x, v))
                .max()
                .unwrap_or_else(Rat::zero);
            Ok(NormValue::Exact(m))
        }
    }
}

/// Exact dual norm for polyhedral kinds (max over primal ball vertices).
pub fn dual_norm_exact(spec: &NormSpec, x: &[Rat]) -> Result<Rat> {
    norm_value(spec, x, NormSide::Dual)?.exact()
}

/// Is the dual ball a simplexoid (every proper face a simplex)? Every
/// proper face of a polytope is a face of a facet, and faces of simplices
/// are simplices, so checking facets suffices.
pub fn is_simplexoid(spec: &NormSpec) -> Result<bool> {
    let db = dual_ball(spec)?;
    let poly = db.polytope.with_facets()?;
    let h = poly.hrep.as_ref().unwrap();
    let inc = h.incidence.as_ref().unwrap();
    for facet_vs in inc {
        let pts: Vec<Vec<Rat>> = facet_vs.iter().map(|&i| poly.vertices[i].clone()).collect();
        let d = affine_dim(&pts);
        if pts.len() != d + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One barycentric decomposition of a dual unit vector over the vertices
/// of its minimal face, with a uniqueness flag.
#[derive(Debug, Clone)]
pub struct BarycenterDecomposition {
    /// (dual-ball vertex, positive weight); weights sum to one.
    pub atoms: Vec<(Vec<Rat>, Rat)>,
    pub unique: bool,
    /// A second, distinct decomposition when not unique.
    pub alternative: Option<Vec<(Vec<Rat>, Rat)>>,
}

/// Decompose `x_star` (of dual norm one) as a convex combination of
/// dual-ball vertices of its minimal face.
pub fn barycenter_decomposition(
    spec: &NormSpec,
    x_star: &[Rat],
) -> Result<BarycenterDecomposition> {
    let primal = spec.primal_vertices()?;
    let norm = primal
        .iter()
        .map(|v| dot(x_star, v))
        .max()
        .unwrap_or_else(Rat::zero);
    if !norm.is_one() {
        return Err(Error::NotOnSphere);
    }
    let db = dual_ball(spec)?;
    // the minimal face of x_star is cut out by the primal vertices it norms
    let tight: Vec<&Vec<Rat>> = primal
        .iter()
        .filter(|v| dot(x_star, v).is_one())
        .collect();
    let face: Vec<Vec<Rat>> = db
        .polytope
        .vertices
        .iter()
        .filter(|w| tight.iter().all(|v| dot(w, v).is_one()))
        .cloned()
        .collect();
    decompose_over(&face, x_star)
}

/// Decompositions of `target` as a probability combination of `points`;
/// vertex-enumerates the weight polytope.
pub fn decompose_over(
    points: &[Vec<Rat>],
    target: &[Rat],
) -> Result<BarycenterDecomposition> {
    let n = points.len();
    let d = target.len();
    if n == 0 {
        return Err(Error::PointNotInHull);
    }
    let mut eqs: Vec<(Vec<Rat>, Rat)> = Vec::with_capacity(d + 1);
    for coord in 0..d {
        let row: Vec<Rat> = points.iter().map(|x| x[coord].clone()).collect();
        eqs.push((row, target[coord].clone()));
    }
    eqs.push((vec![Rat::one(); n], Rat::one()));
    let hrep = HRep {
        equalities: eqs,
        inequalities: crate::exactgeom::polytope::nonneg_constraints(n),
        incidence: None,
    };
    let weights = vertex_enumeration(n, &hrep)?;
    if weights.is_empty() {
        return Err(Error::PointNotInHull);
    }
    let to_atoms = |lam: &Vec<Rat>| -> Vec<(Vec<Rat>, Rat)> {
        lam.iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .map(|(i, w)| (points[i].clone(), w.clone()))
            .collect()
    };
    Ok(BarycenterDecomposition {
        atoms: to_atoms(&weights[0]),
        unique: weights.len() == 1,
        alternative: weights.get(1).map(to_atoms),
    })
}

/// True for the smooth Lp kind and in dimension one; false for
/// polyhedral kinds in dimension at least two.
pub fn strictly_convex_dual(spec: &NormSpec) -> bool {
    if spec.dim <= 1 {
        return true;
    }
    matches!(spec.kind, NormKind::Lp(_))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat::{rat, rat_i};

    fn ri(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat_i(x)).collect()
    }

    #[test]
    fn linf_dual_is_l1_ball() {
        let db = dual_ball(&NormSpec::linf(2)).unwrap();
        assert_eq!(
            db.ext_points(),
            &[ri(&[-1, 0]), ri(&[0, -1]), ri(&[0, 1]), ri(&[1, 0])]
        );
    }

    #[test]
    fn l1_dual_is_cube() {
        let db = dual_ball(&NormSpec::l1(3)).unwrap();
        assert_eq!(db.ext_points().len(), 8);
    }

    #[test]
    fn smooth_norm_rejected_on_exact_paths() {
        let spec = NormSpec::lp(2, rat(3, 2)).unwrap();
        assert!(matches!(dual_ball(&spec), Err(crate::Error::SmoothNormUnsupported)));
        assert!(matches!(is_simplexoid(&spec), Err(crate::Error::SmoothNormUnsupported)));
        assert!(matches!(
            norm_value(&spec, &ri(&[1, 1]), NormSide::Primal).unwrap(),
            NormValue::Approx(_)
        ));
    }

    #[test]
    fn norm_values_exact() {
        let linf = NormSpec::linf(2);
        assert_eq!(
            norm_value(&linf, &[rat_i(1), rat_i(-1)], NormSide::Primal).unwrap(),
            NormValue::Exact(rat_i(1))
        );
        assert_eq!(
            norm_value(&linf, &[rat_i(1), rat_i(-1)], NormSide::Dual).unwrap(),
            NormValue::Exact(rat_i(2))
        );
    }

    #[test]
    fn simplexoid_verdicts() {
        assert!(is_simplexoid(&NormSpec::linf(2)).unwrap());
        assert!(is_simplexoid(&NormSpec::l1(2)).unwrap());
        assert!(is_simplexoid(&NormSpec::linf(3)).unwrap()); // cross-polytope dual
        assert!(!is_simplexoid(&NormSpec::l1(3)).unwrap()); // cube dual
    }

    #[test]
    fn strictly_convex_dual_cases() {
        assert!(strictly_convex_dual(&NormSpec::lp(2, rat(3, 2)).unwrap()));
        assert!(!strictly_convex_dual(&NormSpec::linf(2)));
        assert!(strictly_convex_dual(&NormSpec::linf(1)));
    }

    #[test]
    fn barycenter_decomposition_cases() {
        let l1_3 = NormSpec::l1(3); // dual ball = cube
        // a cube vertex decomposes as itself
        let dec = barycenter_decomposition(&l1_3, &ri(&[1, 1, 1])).unwrap();
        assert!(dec.unique);
        assert_eq!(dec.atoms, vec![(ri(&[1, 1, 1]), rat_i(1))]);
        // an edge midpoint splits evenly between its two endpoints
        let dec = barycenter_decomposition(&l1_3, &ri(&[1, 1, 0])).unwrap();
        assert!(dec.unique);
        assert_eq!(dec.atoms.len(), 2);
        assert!(dec.atoms.iter().all(|(_, w)| *w == rat(1, 2)));
        // a square facet center has two distinct decompositions
        let dec = barycenter_decomposition(&l1_3, &ri(&[1, 0, 0])).unwrap();
        assert!(!dec.unique);
        assert!(dec.alternative.is_some());
        // off-sphere input is rejected
        assert!(matches!(
            barycenter_decomposition(&l1_3, &[rat(1, 2), rat_i(0), rat_i(0)]),
            Err(crate::Error::NotOnSphere)
        ));
    }

    #[test]
    fn polyhedral_ball_validation() {
        // asymmetric set rejected
        assert!(NormSpec::polyhedral(2, vec![ri(&[1, 0]), ri(&[0, 1])]).is_err());
        // non-spanning set rejected
        assert!(NormSpec::polyhedral(2, vec![ri(&[1, 0]), ri(&[-1, 0])]).is_err());
        // interior points are filtered
        let spec = NormSpec::polyhedral(
            2,
            vec![
                ri(&[1, 1]),
                ri(&[-1, -1]),
                ri(&[1, -1]),
                ri(&[-1, 1]),
                ri(&[0, 0]),
            ],
        )
        .unwrap();
        assert_eq!(spec.primal_vertices().unwrap().len(), 4);
    }

    #[test]
    fn bipolar_reproduces_primal_vertices() {
        for spec in [
            NormSpec::linf(2),
            NormSpec::l1(2),
            NormSpec::linf(3),
            NormSpec::l1(3),
        ] {
            let primal = spec.primal_vertices().unwrap();
            let dual = dual_ball(&spec).unwrap();
            let back = crate::exactgeom::polytope::polar(spec.dim, dual.ext_points()).unwrap();
            assert_eq!(back.vertices, primal, "bipolar failed for {:?}", spec.kind);
        }
    }
}
