use crate::combinatorics::{enumerate_paths, strictly_increasing, Path};
use crate::error::{Error, Result};
use crate::euler::{all_cells, pair, representative, Breakpoints, CellSignature, SchwartzFn};
use crate::scalar::Scalar;

use super::morphism::Morphism;

/// The cell of the free tuple `w` with `(fixed, w)` (or `(w, fixed)`) in the
/// orbit of `p`, relative to the breakpoints `fixed`. `axis` is the axis of
/// `p` that `fixed` occupies (0 = output, 1 = input).
pub fn slice_signature(p: &Path, axis: usize) -> Result<CellSignature> {
    if p.dim() != 2 {
        return Err(Error::PathDimension { expected: 2, found: p.dim() });
    }
    if axis > 1 {
        return Err(Error::IndexOutOfRange { index: axis, arity: 2 });
    }
    let free = 1 - axis;
    let mut j = 0;
    let mut slots = Vec::with_capacity(p.target()[free]);
    for s in p.steps() {
        match (s.get(axis), s.get(free)) {
            (true, false) => j += 1,
            (false, true) => slots.push(2 * j),
            (true, true) => {
                slots.push(2 * j + 1);
                j += 1;
            }
            (false, false) => unreachable!("steps are nonzero"),
        }
    }
    CellSignature::new(slots, p.target()[axis])
}

/// Restriction of the orbit indicator of `p` to the slice where axis `axis`
/// equals `fixed`, as a function of the other tuple.
pub fn slice_kernel(p: &Path, fixed: &[Scalar], axis: usize) -> Result<SchwartzFn> {
    let sig = slice_signature(p, axis)?;
    let expected = p.target()[axis];
    if fixed.len() != expected {
        return Err(Error::LengthMismatch { expected, found: fixed.len() });
    }
    let bps = Breakpoints::new(fixed.to_vec())?;
    Ok(SchwartzFn::indicator(bps, sig))
}

/// `(A_f φ)(x) = ∫ A_f(x, y) φ(y) dy`, returned over `φ`'s breakpoints.
pub fn apply_kernel(f: &Morphism, phi: &SchwartzFn) -> Result<SchwartzFn> {
    if f.source() != phi.arity() {
        return Err(Error::ArityMismatch { left: f.source(), right: phi.arity() });
    }
    let bps = phi.breakpoints().clone();
    let mut cells = Vec::new();
    for sig in all_cells(f.target(), bps.len()) {
        let x = representative(&sig, &bps, 0);
        let mut value = Scalar::default();
        for (p, c) in f.terms() {
            value += c * pair(&slice_kernel(p, &x, 0)?, phi)?;
        }
        cells.push((sig, value));
    }
    SchwartzFn::from_cells(f.target(), bps, cells)
}

/// The invariant kernel whose column at `a` is `x`: the coefficient of
/// `p ∈ Γ(m', n)` is the value of `x` on the cell that `p` cuts out.
pub fn invariant_extension(x: &SchwartzFn, a: &[Scalar]) -> Result<Morphism> {
    if !strictly_increasing(a) {
        return Err(Error::NotIncreasing);
    }
    if x.breakpoints().points() != a {
        return Err(Error::BreakpointMismatch);
    }
    let (target, source) = (x.arity(), a.len());
    let mut out = Morphism::zero(target, source);
    for p in enumerate_paths(&[target, source]) {
        let c = x.coeff(&slice_signature(&p, 1)?);
        out.add_unchecked(p, c);
    }
    Ok(out)
}
