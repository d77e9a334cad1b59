use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::combinatorics::{canonical_representative, enumerate_paths, lift3, lifts_over, project_path, Path};
use crate::error::{Error, Result};
use crate::euler::pair;
use crate::scalar::{int, sign_i64};

use super::kernel::slice_kernel;
use super::morphism::Morphism;

type BasisProduct = Vec<(Path, i64)>;

fn cache() -> &'static Mutex<HashMap<(Path, Path), BasisProduct>> {
    static CACHE: OnceLock<Mutex<HashMap<(Path, Path), BasisProduct>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `ε(p1, p2, p3)`: `Some((−1)^{ℓ(q)+ℓ(p3)})` when the three paths have a
/// common lift `q`, `None` otherwise.
pub fn epsilon(p1: &Path, p2: &Path, p3: &Path) -> Result<Option<i64>> {
    Ok(lift3(p1, p2, p3)?.map(|q| sign_i64(q.len() + p3.len())))
}

/// `[p1] ∘ [p2]` by enumerating all lifts `q` over `(p1, p2)`. Each lift
/// determines `p3 = π13(q)`, and distinct lifts give distinct `p3`.
pub fn compose_basis(p1: &Path, p2: &Path) -> Result<BasisProduct> {
    let key = (p1.clone(), p2.clone());
    if let Some(hit) = cache().lock().expect("cache poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let mut out = Vec::new();
    for q in lifts_over(p1, p2)? {
        let p3 = project_path(&q, &[0, 2])?;
        out.push((p3.clone(), sign_i64(q.len() + p3.len())));
    }
    out.sort();
    for w in out.windows(2) {
        assert!(w[0].0 != w[1].0, "two lifts over ({p1}, {p2}) share a projection");
    }
    cache().lock().expect("cache poisoned").insert(key, out.clone());
    Ok(out)
}

/// `[p1] ∘ [p2]` by scanning all of Γ(n, ℓ) and calling [`epsilon`].
pub fn compose_basis_by_epsilon(p1: &Path, p2: &Path) -> Result<BasisProduct> {
    if p1.dim() != 2 || p2.dim() != 2 {
        return Err(Error::PathDimension { expected: 2, found: p1.dim().max(p2.dim()) });
    }
    let (n, l) = (p1.target()[0], p2.target()[1]);
    let mut out = Vec::new();
    for p3 in enumerate_paths(&[n, l]) {
        if let Some(e) = epsilon(p1, p2, &p3)? {
            out.push((p3, e));
        }
    }
    Ok(out)
}

/// Composition `f ∘ g` for `f: n ← m`, `g: m ← ℓ`.
pub fn compose(f: &Morphism, g: &Morphism) -> Result<Morphism> {
    if f.source() != g.target() {
        return Err(Error::ArityMismatch { left: f.source(), right: g.target() });
    }
    let mut out = Morphism::zero(f.target(), g.source());
    for (p1, c1) in f.terms() {
        for (p2, c2) in g.terms() {
            let c = c1 * c2;
            for (p3, e) in compose_basis(p1, p2)? {
                out.add_unchecked(p3, &c * int(e));
            }
        }
    }
    Ok(out)
}

/// `[p1] ∘ [p2]` by Euler integration over the middle variable, one output
/// orbit at a time.
pub fn compose_oracle(p1: &Path, p2: &Path) -> Result<Morphism> {
    if p1.dim() != 2 || p2.dim() != 2 {
        return Err(Error::PathDimension { expected: 2, found: p1.dim().max(p2.dim()) });
    }
    if p1.target()[1] != p2.target()[0] {
        return Err(Error::ArityMismatch { left: p1.target()[1], right: p2.target()[0] });
    }
    let (n, l) = (p1.target()[0], p2.target()[1]);
    let mut out = Morphism::zero(n, l);
    for p3 in enumerate_paths(&[n, l]) {
        let (z, x) = canonical_representative(&p3)?.into_parts();
        let left = slice_kernel(p1, &z, 0)?;
        let right = slice_kernel(p2, &x, 1)?;
        out.add_unchecked(p3, pair(&left, &right)?);
    }
    Ok(out)
}
