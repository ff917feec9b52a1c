//! Machine-readable encodings of the worked examples, each with an
//! expectation table carrying exact expected results and provenance.
//! Derived expectations are recomputed by the brute-force oracles in
//! `oracle` before comparison.

pub mod oracle;
mod verify;

pub use verify::{verify_corpus, verify_fixture, CheckResult};

use crate::exactgeom::rat::{rat, rat_i, Rat};
use crate::function_space::{FiniteCompact, FunctionSpace};
use crate::normed_space::NormSpec;
use crate::Result;

/// A corpus fixture: a problem instance plus any extra probe
/// functionals its expectations need.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub space: FunctionSpace,
    /// extra probe functionals (point index, dual vector)
    pub extra_probes: Vec<(usize, Vec<Rat>)>,
}

/// Entries deliberately not encoded: examples over infinite compacta.
#[derive(Debug, Clone)]
pub struct OutOfScopeStub {
    pub name: &'static str,
    pub note: &'static str,
}

pub fn out_of_scope() -> Vec<OutOfScopeStub> {
    vec![
        OutOfScopeStub {
            name: "vsnews",
            note: "vector simplicial without weak simpliciality needs an infinite compact; \
                   not encodable at finite scale",
        },
        OutOfScopeStub {
            name: "normyevaluaci3",
            note: "the scalar strict-inequality example lives on the unit interval; \
                   not encodable at finite scale",
        },
    ]
}

fn labels(ls: &[&str]) -> FiniteCompact {
    FiniteCompact::new(ls.iter().map(|s| s.to_string()).collect()).unwrap()
}

/// Flatten per-point d-vectors into a basis row.
fn flat(rows: &[&[(i64, i64)]]) -> Vec<Rat> {
    rows.iter()
        .flat_map(|pt| pt.iter().map(|&(n, d)| rat(n, d)))
        .collect()
}

/// The five-point space with a two-speed barycentric constraint over the
/// sup-norm plane; the central fixture.
fn nezachovani_basis() -> Vec<Vec<Rat>> {
    // points: [-2, -1, 0, 1, 2], coordinates (f1, f2) per point
    vec![
        // f1(-1) = 1
        flat(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(1, 2), (0, 1)], &[(0, 1), (0, 1)], &[(2, 1), (0, 1)]]),
        // f1(1) = 1
        flat(&[&[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(1, 2), (0, 1)], &[(1, 1), (0, 1)], &[(2, 1), (0, 1)]]),
        // f2(-1) = 1
        flat(&[&[(0, 1), (0, 1)], &[(0, 1), (1, 1)], &[(0, 1), (1, 2)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)]]),
        // f2(1) = 1
        flat(&[&[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (1, 2)], &[(0, 1), (1, 1)], &[(0, 1), (0, 1)]]),
        // f1(-2) = 1 (then f1(2) = -1)
        flat(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(-1, 1), (0, 1)]]),
        // f2(-2) = 1
        flat(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)]]),
        // f2(2) = 1
        flat(&[&[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (1, 1)]]),
    ]
}

fn nezachovani_points() -> FiniteCompact {
    labels(&["-2", "-1", "0", "1", "2"])
}

/// Ball of `max(||.||_inf, (2/3)||.||_1) <= 1` in the plane: an octagon.
fn renorm2_ball() -> Vec<Vec<Rat>> {
    let mut vs = Vec::new();
    for (a, b) in [(2i64, 1i64), (1, 2)] {
        for sa in [1i64, -1] {
            for sb in [1i64, -1] {
                vs.push(vec![rat(sa * a, 2), rat(sb * b, 2)]);
            }
        }
    }
    vs
}

fn two_point_basis(rows: &[[(i64, i64); 4]]) -> Vec<Vec<Rat>> {
    rows.iter()
        .map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect())
        .collect()
}

pub fn fixtures() -> Vec<Fixture> {
    let mut out = Vec::new();

    // --- evaluation-norm examples -----------------------------------
    out.push(Fixture {
        name: "normyevaluaci1",
        description: "two points, first coordinate pinned at the origin point",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(0, 1), (0, 1), (1, 1), (0, 1)], // 0 -> (0,0), 1 -> (1,0)
                [(0, 1), (1, 1), (0, 1), (1, 1)], // constant (0,1)
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    out.push(Fixture {
        name: "normyevaluaci2",
        description: "two points with a half-speed swap at the second point",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(1, 1), (0, 1), (0, 1), (1, 2)], // a = 1
                [(0, 1), (1, 1), (1, 2), (0, 1)], // b = 1
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    out.push(Fixture {
        name: "halfnorm-boundary",
        description: "boundary point whose evaluation has norm one half",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(1, 1), (0, 1), (0, 1), (1, 2)],
                [(0, 1), (1, 1), (1, 2), (0, 1)],
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    // --- structural examples ----------------------------------------
    out.push(Fixture {
        name: "sec2ex1",
        description: "constants plus scalar multiples of a fixed direction",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(0, 1), (1, 1), (0, 1), (1, 1)], // constant (0,1)
                [(1, 1), (0, 1), (0, 1), (0, 1)], // indicator_0 * x
                [(0, 1), (0, 1), (1, 1), (0, 1)], // indicator_1 * x
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    out.push(Fixture {
        name: "sec2ex3",
        description: "two points with an odd symmetry",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(1, 1), (0, 1), (-1, 1), (0, 1)],
                [(0, 1), (1, 1), (0, 1), (-1, 1)],
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    out.push(Fixture {
        name: "sec2constw",
        description: "no constants in H, but constants in the weak space",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(1, 1), (0, 1), (2, 1), (0, 1)],  // a = 1
                [(0, 1), (1, 1), (0, 1), (-1, 1)], // b = 1
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    // --- boundary optimality examples --------------------------------
    for (name, spec) in [
        ("chH-protipr-linf", NormSpec::linf(2)),
        ("chH-protipr-l1", NormSpec::l1(2)),
    ] {
        out.push(Fixture {
            name,
            description:
                "first coordinate pinned at one point; operator-ball extremality depends on the norm",
            space: FunctionSpace::new(
                labels(&["0", "1"]),
                spec,
                two_point_basis(&[
                    [(0, 1), (1, 1), (0, 1), (0, 1)], // f2(0) = 1
                    [(0, 1), (0, 1), (1, 1), (0, 1)], // f1(1) = 1
                    [(0, 1), (0, 1), (0, 1), (1, 1)], // f2(1) = 1
                ]),
            )
            .unwrap(),
            extra_probes: vec![],
        });
    }

    // --- the central five-point fixture -------------------------------
    out.push(Fixture {
        name: "nezachovani",
        description: "five points, two-speed barycentric constraints over the sup-norm plane",
        space: FunctionSpace::new(
            nezachovani_points(),
            NormSpec::linf(2),
            nezachovani_basis(),
        )
        .unwrap(),
        extra_probes: vec![(2, vec![rat_i(1), rat_i(1)])],
    });

    out.push(Fixture {
        name: "renorm1",
        description: "the five-point space over a smooth l_p plane",
        space: FunctionSpace::new(
            nezachovani_points(),
            NormSpec::lp(2, rat(3, 2)).unwrap(),
            nezachovani_basis(),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    out.push(Fixture {
        name: "renorm2",
        description: "the five-point space over an octagonal renorming of the plane",
        space: FunctionSpace::new(
            nezachovani_points(),
            NormSpec::polyhedral(2, renorm2_ball()).unwrap(),
            nezachovani_basis(),
        )
        .unwrap(),
        extra_probes: vec![(2, vec![rat_i(1), rat_i(1)])],
    });

    // --- constants-case simpliciality examples ------------------------
    out.push(Fixture {
        name: "wsnevs-const",
        description: "second coordinate constant; weakly but not vector simplicial",
        space: FunctionSpace::new(
            labels(&["0", "1"]),
            NormSpec::linf(2),
            two_point_basis(&[
                [(1, 1), (0, 1), (0, 1), (0, 1)], // h1(0) = 1
                [(0, 1), (0, 1), (1, 1), (0, 1)], // h1(1) = 1
                [(0, 1), (1, 1), (0, 1), (1, 1)], // h2 = 1 (constant)
            ]),
        )
        .unwrap(),
        extra_probes: vec![],
    });

    let renorm_const_basis = || -> Vec<Vec<Rat>> {
        // points [-1, 0, 1]; constraint f1(0)+f2(0) = f1(1)+f2(-1)
        vec![
            flat(&[&[(1, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (0, 1)]]), // f1(-1)
            flat(&[&[(0, 1), (1, 1)], &[(0, 1), (0, 1)], &[(-1, 1), (0, 1)]]), // f2(-1)
            flat(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(1, 1), (0, 1)]]), // f1(0)
            flat(&[&[(0, 1), (0, 1)], &[(0, 1), (1, 1)], &[(1, 1), (0, 1)]]), // f2(0)
            flat(&[&[(0, 1), (0, 1)], &[(0, 1), (0, 1)], &[(0, 1), (1, 1)]]), // f2(1)
        ]
    };
    out.push(Fixture {
        name: "renorm-const-linf",
        description: "three points with a cross constraint over the sup-norm plane",
        space: FunctionSpace::new(
            labels(&["-1", "0", "1"]),
            NormSpec::linf(2),
            renorm_const_basis(),
        )
        .unwrap(),
        extra_probes: vec![(1, vec![rat_i(1), rat_i(1)])],
    });
    out.push(Fixture {
        name: "renorm-const-lp",
        description: "the cross-constraint space over a smooth l_p plane",
        space: FunctionSpace::new(
            labels(&["-1", "0", "1"]),
            NormSpec::lp(2, rat(3, 2)).unwrap(),
            renorm_const_basis(),
        )
        .unwrap(),
        extra_probes: vec![(1, vec![rat_i(1), rat_i(1)])],
    });

    // --- scalar square: the classical non-simplex ---------------------
    out.push(Fixture {
        name: "square",
        description: "five scalar points whose state space is a square",
        space: FunctionSpace::new(
            labels(&["0", "1", "2", "3", "4"]),
            NormSpec::linf(1),
            vec![
                vec![rat(1, 2), rat_i(1), rat_i(0), rat_i(0), rat_i(1)],
                vec![rat_i(0), rat_i(0), rat_i(1), rat_i(0), rat_i(-1)],
                vec![rat(1, 2), rat_i(0), rat_i(0), rat_i(1), rat_i(1)],
            ],
        )
        .unwrap(),
        extra_probes: vec![],
    });

    // --- three-dimensional targets: simplexoid and L1-predual ---------
    let full_space = |k: usize, d: usize| -> Vec<Vec<Rat>> {
        let nd = k * d;
        (0..nd)
            .map(|i| {
                let mut v = vec![rat_i(0); nd];
                v[i] = rat_i(1);
                v
            })
            .collect()
    };
    out.push(Fixture {
        name: "l13-cube",
        description: "full space over the three-dimensional l1 target (cube dual ball)",
        space: FunctionSpace::new(labels(&["0", "1"]), NormSpec::l1(3), full_space(2, 3))
            .unwrap(),
        extra_probes: vec![],
    });
    out.push(Fixture {
        name: "linf3-crosspolytope",
        description: "full space over the three-dimensional sup-norm target (cross-polytope dual)",
        space: FunctionSpace::new(labels(&["0", "1"]), NormSpec::linf(3), full_space(2, 3))
            .unwrap(),
        extra_probes: vec![],
    });

    out
}

pub fn fixture(name: &str) -> Result<Fixture> {
    fixtures()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| crate::Error::InvalidInput(format!("unknown fixture {name}")))
}
