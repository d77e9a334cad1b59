//! Delannoy paths of any dimension, their enumeration and projections, the
//! three-way lift solver, and the codec between pairs of increasing tuples
//! and planar paths.
//!
//! Axes and coordinates are 0-based throughout the API: a planar path has
//! axis 0 (first tuple) and axis 1 (second tuple).

mod lift;
mod orbit;
mod path;
mod weight;

pub use lift::{lift3, lift3_all, lifts_over};
pub use orbit::{canonical_representative, encode_orbit, strictly_increasing, OrbitRepresentative};
pub use path::{delannoy_number, enumerate_paths, project_path, Path, Step, MAX_DIM};
pub use weight::{w, Letter, Weight};
