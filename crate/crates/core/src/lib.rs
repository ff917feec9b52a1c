//! Exact rational workbench for vector-valued function spaces on finite
//! point sets.
//!
//! Everything here is computed over arbitrary-precision rationals: linear
//! programs are solved with an exact simplex method, polytopes are converted
//! between vertex and facet descriptions with the double description method,
//! and every verdict (boundary membership, simpliciality, orderings) is
//! either exact or explicitly probe-certified.

pub mod boundary;
pub mod corpus;
pub mod error;
pub mod exactgeom;
pub mod function_space;
pub mod normed_space;
pub mod orders;
pub mod representation;

pub use error::Error;
pub use exactgeom::rat::Rat;

pub type Result<T> = std::result::Result<T, Error>;
