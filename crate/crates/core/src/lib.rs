//! Exact computations in the Delannoy category.
//!
//! * [`combinatorics`]: Delannoy paths, projections, lifts, orbit codec.
//! * [`euler`]: Schwartz functions on ordered tuples with Euler-characteristic
//!   integration.
//! * [`category`]: the path category with signed composition, projectors,
//!   traces and an integration oracle.
//! * [`kring`]: the Grothendieck ring with its products, branching maps, Hopf
//!   structure and λ-operations.
//! * [`verify`]: self-contained verification suites.

pub mod category;
pub mod combinatorics;
pub mod error;
pub mod euler;
pub mod kring;
pub mod linalg;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;
