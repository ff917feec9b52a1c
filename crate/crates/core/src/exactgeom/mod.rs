//! Exact rational linear programming and polytope machinery.

pub mod dd;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod rat;

pub use lp::{lp_solve, LinearProgram, LpOutcome, LpStatus};
pub use polytope::{
    facet_enumeration, is_extreme_point, vertex_enumeration, HRep, Polytope,
};
pub use rat::Rat;

#[cfg(test)]
mod tests;
