//! The Grothendieck ring K with basis `a_λ` over weights `λ`.
//!
//! K carries the ring product [`tensor_mul`] (a sum over ruffles), the
//! concatenation product [`concat_mul`], induction and restriction, a Hopf
//! structure with counit and antipode, and binomial/Adams/Schur operations.
//! Coefficients are exact rationals; the λ-operations assert integrality.

mod class;
mod hilbert;
mod lambda;
mod ring;

pub use class::{random_class, KClass, KTensorClass};
pub use hilbert::{hilbert_value, is_lyndon, lyndon_weights, primitives, reduced_coproduct};
pub use lambda::{
    adams, binomial_signed, hook_content, lambda_binomial, schur_apply, schur_dimension_poly, IntValuedPoly,
    Partition,
};
pub use ring::{
    antipode, antipode_basis, basis_product, concat_mul, convolve, counit, dual, induce, inner, inner_tensor,
    line_class, multiply_factors, power_class, restrict, tensor_mul, tensor_mul_pair, tensor_pow,
};

#[cfg(test)]
mod tests;
