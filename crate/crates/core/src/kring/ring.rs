use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::One;

use crate::combinatorics::{enumerate_paths, Letter, Weight};
use crate::scalar::{sign, Scalar};

use super::class::{KClass, KTensorClass};

/// `x ⊙ y`: bilinear extension of word concatenation.
pub fn concat_mul(x: &KClass, y: &KClass) -> KClass {
    let mut out = KClass::zero();
    for (l, a) in x.terms() {
        for (r, b) in y.terms() {
            out.add_term(l.concat(r), a * b);
        }
    }
    out
}

/// `[C(R)] = a_● + a_○ + 1`.
pub fn line_class() -> KClass {
    KClass::from_terms([
        (Weight::constant(Letter::Black, 1), Scalar::one()),
        (Weight::constant(Letter::White, 1), Scalar::one()),
        (Weight::empty(), Scalar::one()),
    ])
}

/// `[C(R^(n))] = [C(R)]^{⊙n}`.
pub fn power_class(n: usize) -> KClass {
    (0..n).fold(KClass::one(), |acc, _| concat_mul(&acc, &line_class()))
}

fn product_cache() -> &'static Mutex<HashMap<(Weight, Weight), KClass>> {
    static CACHE: OnceLock<Mutex<HashMap<(Weight, Weight), KClass>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `a_λ · a_μ` as a sum over ruffles, i.e. over Γ(ℓ(λ), ℓ(μ)): a lone step
/// emits the next letter of its word, and a collision of `α` with `β` emits
/// `α` if they agree and `● + ○ + 1` otherwise.
pub fn basis_product(lambda: &Weight, mu: &Weight) -> KClass {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = product_cache().lock().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    let (l, m) = (lambda.letters(), mu.letters());
    let mut out = KClass::zero();
    for p in enumerate_paths(&[l.len(), m.len()]) {
        let mut words = vec![Weight::empty()];
        let (mut i, mut j) = (0, 0);
        for s in p.steps() {
            match (s.get(0), s.get(1)) {
                (true, false) => {
                    words.iter_mut().for_each(|w| w.push(l[i]));
                    i += 1;
                }
                (false, true) => {
                    words.iter_mut().for_each(|w| w.push(m[j]));
                    j += 1;
                }
                _ => {
                    if l[i] == m[j] {
                        words.iter_mut().for_each(|w| w.push(l[i]));
                    } else {
                        words = words
                            .into_iter()
                            .flat_map(|w| {
                                let mut b = w.clone();
                                b.push(Letter::Black);
                                let mut c = w.clone();
                                c.push(Letter::White);
                                [b, c, w]
                            })
                            .collect();
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for w in words {
            out.add_term(w, Scalar::one());
        }
    }
    product_cache().lock().expect("cache poisoned").insert(key, out.clone());
    out
}

/// The ring product of K.
pub fn tensor_mul(x: &KClass, y: &KClass) -> KClass {
    let mut out = KClass::zero();
    for (l, a) in x.terms() {
        for (r, b) in y.terms() {
            let c = a * b;
            for (w, d) in basis_product(l, r).terms() {
                out.add_term(w.clone(), &c * d);
            }
        }
    }
    out
}

pub fn tensor_pow(x: &KClass, k: usize) -> KClass {
    (0..k).fold(KClass::one(), |acc, _| tensor_mul(&acc, x))
}

/// `ind(a_λ ⊗ a_μ) = a_λ ⊙ [C(R)] ⊙ a_μ`.
pub fn induce(t: &KTensorClass) -> KClass {
    let mut out = KClass::zero();
    for (l, r, c) in t.terms() {
        let mid = concat_mul(&KClass::basis(l.clone()), &line_class());
        out = out.add(&concat_mul(&mid, &KClass::basis(r.clone())).scale(c));
    }
    out
}

/// Splits each word between letters, and around each deleted letter.
pub fn restrict(x: &KClass) -> KTensorClass {
    let mut out = KTensorClass::zero();
    for (w, c) in x.terms() {
        let n = w.len();
        for i in 0..=n {
            out.add_term(w.slice(0, i), w.slice(i, n), c.clone());
        }
        for i in 1..=n {
            out.add_term(w.slice(0, i - 1), w.slice(i, n), c.clone());
        }
    }
    out
}

/// `δ(a_λ) = (−1)^{ℓ(λ)}`.
pub fn counit(x: &KClass) -> Scalar {
    x.terms().map(|(w, c)| c * sign(w.len())).sum()
}

/// Product of the two tensor factors.
pub fn multiply_factors(t: &KTensorClass) -> KClass {
    let mut out = KClass::zero();
    for (l, r, c) in t.terms() {
        out = out.add(&basis_product(l, r).scale(c));
    }
    out
}

/// Componentwise product in K ⊗ K.
pub fn tensor_mul_pair(s: &KTensorClass, t: &KTensorClass) -> KTensorClass {
    let mut out = KTensorClass::zero();
    for (l1, r1, a) in s.terms() {
        for (l2, r2, b) in t.terms() {
            let left = basis_product(l1, l2);
            let right = basis_product(r1, r2);
            out = out.add(&KTensorClass::outer(&left, &right).scale(&(a * b)));
        }
    }
    out
}

/// Applies `f` to the left factor and `g` to the right, then multiplies.
pub fn convolve(x: &KClass, f: impl Fn(&Weight) -> KClass, g: impl Fn(&Weight) -> KClass) -> KClass {
    let mut out = KClass::zero();
    for (l, r, c) in restrict(x).terms() {
        out = out.add(&tensor_mul(&f(l), &g(r)).scale(c));
    }
    out
}

fn antipode_cache() -> &'static Mutex<HashMap<Weight, KClass>> {
    static CACHE: OnceLock<Mutex<HashMap<Weight, KClass>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `S(a_λ)` from `Σ_i a_{λ[1,i]} S(a_{λ(i,n]}) + Σ_i a_{λ[1,i)} S(a_{λ(i,n]}) = (−1)^n`.
///
/// The recursion solves `m∘(id⊗S)∘res = ηδ`; each new word is also checked
/// against `m∘(S⊗id)∘res = ηδ`, panicking on failure.
pub fn antipode_basis(lambda: &Weight) -> KClass {
    if let Some(hit) = antipode_cache().lock().expect("cache poisoned").get(lambda) {
        return hit.clone();
    }
    let n = lambda.len();
    let mut s = KClass::constant(1).scale(&sign(n));
    for i in 1..=n {
        let tail = antipode_basis(&lambda.slice(i, n));
        s = s.sub(&tensor_mul(&KClass::basis(lambda.slice(0, i)), &tail));
        s = s.sub(&tensor_mul(&KClass::basis(lambda.slice(0, i - 1)), &tail));
    }
    antipode_cache().lock().expect("cache poisoned").insert(lambda.clone(), s.clone());
    let x = KClass::basis(lambda.clone());
    let left = convolve(&x, antipode_basis, |w| KClass::basis(w.clone()));
    assert_eq!(left, KClass::constant(1).scale(&sign(n)), "antipode axiom fails at {lambda}");
    s
}

pub fn antipode(x: &KClass) -> KClass {
    let mut out = KClass::zero();
    for (w, c) in x.terms() {
        out = out.add(&antipode_basis(w).scale(c));
    }
    out
}

/// Swaps ● and ○ in every word.
pub fn dual(x: &KClass) -> KClass {
    KClass::from_terms(x.terms().map(|(w, c)| (w.dual(), c.clone())))
}

/// The form with `⟨a_λ, a_μ⟩ = [λ = μ]`.
pub fn inner(x: &KClass, y: &KClass) -> Scalar {
    x.terms().map(|(w, c)| c * y.coeff(w)).sum()
}

pub fn inner_tensor(s: &KTensorClass, t: &KTensorClass) -> Scalar {
    s.terms().map(|(l, r, c)| c * t.coeff(l, r)).sum()
}
