use num::Zero;

use crate::combinatorics::Weight;
use crate::linalg;
use crate::scalar::{binomial, Scalar};

use super::class::{KClass, KTensorClass};
use super::ring::restrict;

/// `h_x(N) = Σ coeff_λ · binom(N, ℓ(λ))`: invariants of `G(a)`, `|a| = N`.
pub fn hilbert_value(x: &KClass, n: usize) -> Scalar {
    x.terms()
        .map(|(w, c)| c * Scalar::from_integer(binomial(n as u64, w.len() as u64)))
        .sum()
}

/// A word strictly smaller than each of its proper suffixes (● < ○).
pub fn is_lyndon(w: &Weight) -> bool {
    let l = w.letters();
    !l.is_empty() && (1..l.len()).all(|i| l < &l[i..])
}

pub fn lyndon_weights(n: usize) -> Vec<Weight> {
    Weight::all_of_length(n).into_iter().filter(is_lyndon).collect()
}

/// `Δ(x) = res(x) − x⊗1 − 1⊗x`.
pub fn reduced_coproduct(x: &KClass) -> KTensorClass {
    restrict(x)
        .sub(&KTensorClass::outer(x, &KClass::one()))
        .sub(&KTensorClass::outer(&KClass::one(), x))
}

/// A basis of the primitive elements (the kernel of `Δ`) inside `K_{≤d}`.
pub fn primitives(d: usize) -> Vec<KClass> {
    let words = Weight::all_up_to(d);
    let images: Vec<KTensorClass> = words.iter().map(|w| reduced_coproduct(&KClass::basis(w.clone()))).collect();
    let mut rows: Vec<(Weight, Weight)> = images
        .iter()
        .flat_map(|t| t.terms().map(|(l, r, _)| (l.clone(), r.clone())))
        .collect();
    rows.sort();
    rows.dedup();
    let matrix: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|(l, r)| images.iter().map(|t| t.coeff(l, r)).collect())
        .collect();
    linalg::nullspace(&matrix, words.len())
        .into_iter()
        .map(|v| {
            KClass::from_terms(words.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()))
        })
        .collect()
}
