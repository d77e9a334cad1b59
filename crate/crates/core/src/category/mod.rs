//! The path category: hom spaces spanned by planar Delannoy paths with the
//! signed composition rule, plus an Euler-integration oracle for it.
//!
//! Kernel convention: a path `p ∈ Γ(n, m)` stands for the indicator of its
//! orbit in `R^(n) × R^(m)`, with the output tuple (row index) on axis 0. So
//! in arity one, `a = ((1,0),(0,1))` is `1_{x<y}`, `b = ((0,1),(1,0))` is
//! `1_{y<x}` and `d = ((1,1))` is `1_{x=y}`, with `x` the output.
//!
//! Under this convention `π_● = [d] + [a]` (the kernel `1_{x≤y}`) and
//! `π_○ = [d] + [b]`. A quasi-diagonal path acts on the image of `π_λ` by a
//! scalar that vanishes when it turns the same way as `π_λ` in some square
//! and picks up −1 from each square where it turns the other way.

mod compose;
mod kernel;
mod morphism;
mod projector;

pub use compose::{compose, compose_basis, compose_basis_by_epsilon, compose_oracle, epsilon};
pub use kernel::{apply_kernel, invariant_extension, slice_kernel, slice_signature};
pub use morphism::{identity, random_morphism, Morphism};
pub use projector::{
    eigenvalue, invariant_operator, multiplicity_rank, projector, quasi_diagonal, squares_of, trace, Square,
};

#[cfg(test)]
mod tests;
