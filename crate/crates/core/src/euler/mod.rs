//! Schwartz functions on increasing tuples of rationals with Euler
//! characteristic integration.
//!
//! A function of arity `n` is a finite combination of cells relative to a
//! breakpoint set `a_1 < ⋯ < a_m`. A cell is described by the slot of each
//! coordinate: slot `2j` is the open gap between `a_j` and `a_{j+1}` (the two
//! outer gaps unbounded) and slot `2j-1` is the point `a_j`. Points have
//! volume 1 and open intervals −1, so a cell has volume `(−1)^{#gaps}`.
//!
//! Coordinate indices are 0-based.

mod cells;
mod function;
mod generators;
mod random;

pub use cells::{all_cells, cell_count, representative, signature_of, Breakpoints, CellSignature};
pub use function::{integrate, multiply, pair, pushforward_coordinate, refine, SchwartzFn};
pub use generators::{key_member, phi_generator, psi_key_function, HalfOpenInterval};
pub use random::{random_breakpoints, random_function};
