use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

use super::cells::{signature_of, Breakpoints, CellSignature};

/// A constructible function on increasing `n`-tuples: a finite combination
/// of cell indicators over a breakpoint set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "FnWire", into = "FnWire")]
pub struct SchwartzFn {
    arity: usize,
    breakpoints: Breakpoints,
    coeffs: BTreeMap<CellSignature, Scalar>,
}

impl SchwartzFn {
    pub fn zero(arity: usize, breakpoints: Breakpoints) -> Self {
        SchwartzFn { arity, breakpoints, coeffs: BTreeMap::new() }
    }

    /// The constant 1 on the one-point space of 0-tuples.
    pub fn one_point() -> Self {
        SchwartzFn::indicator(Breakpoints::empty(), CellSignature::new_unchecked(vec![]))
    }

    pub fn indicator(breakpoints: Breakpoints, sig: CellSignature) -> Self {
        assert!(sig.is_valid_for(breakpoints.len()), "signature does not fit breakpoints");
        let mut f = SchwartzFn::zero(sig.arity(), breakpoints);
        f.coeffs.insert(sig, Scalar::one());
        f
    }

    pub fn from_cells(
        arity: usize,
        breakpoints: Breakpoints,
        cells: impl IntoIterator<Item = (CellSignature, Scalar)>,
    ) -> Result<Self> {
        let mut f = SchwartzFn::zero(arity, breakpoints);
        for (sig, c) in cells {
            if sig.arity() != arity {
                return Err(Error::ArityMismatch { left: arity, right: sig.arity() });
            }
            if !sig.is_valid_for(f.breakpoints.len()) {
                return Err(Error::InvalidSignature {
                    slots: sig.slots().to_vec(),
                    arity,
                    breakpoints: f.breakpoints.len(),
                });
            }
            f.add_to(sig, c);
        }
        Ok(f)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn breakpoints(&self) -> &Breakpoints {
        &self.breakpoints
    }

    pub fn cells(&self) -> impl Iterator<Item = (&CellSignature, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, sig: &CellSignature) -> Scalar {
        self.coeffs.get(sig).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn add_to(&mut self, sig: CellSignature, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(sig) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> SchwartzFn {
        let mut out = SchwartzFn::zero(self.arity, self.breakpoints.clone());
        for (sig, v) in &self.coeffs {
            out.add_to(sig.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SchwartzFn) -> Result<SchwartzFn> {
        check_arity(self, other)?;
        let b = self.breakpoints.union(&other.breakpoints);
        let mut out = refine(self, &b)?;
        for (sig, v) in refine(other, &b)?.coeffs {
            out.add_to(sig, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchwartzFn) -> Result<SchwartzFn> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Semantic equality: equal after refinement to common breakpoints.
    pub fn equivalent(&self, other: &SchwartzFn) -> bool {
        self.arity == other.arity && self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    /// Value at an increasing tuple.
    pub fn evaluate(&self, x: &[Scalar]) -> Result<Scalar> {
        if x.len() != self.arity {
            return Err(Error::LengthMismatch { expected: self.arity, found: x.len() });
        }
        Ok(self.coeff(&signature_of(x, &self.breakpoints)?))
    }
}

impl fmt::Display for SchwartzFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (sig, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{:?}", scalar::pretty(c), sig.slots())?;
        }
        write!(f, " over {}", self.breakpoints)
    }
}

fn check_arity(f: &SchwartzFn, g: &SchwartzFn) -> Result<()> {
    if f.arity != g.arity {
        return Err(Error::ArityMismatch { left: f.arity, right: g.arity });
    }
    Ok(())
}

/// Euler integral: Σ coeff · (−1)^{#interval slots}.
pub fn integrate(f: &SchwartzFn) -> Scalar {
    f.coeffs.iter().map(|(sig, c)| c * sig.volume()).sum()
}

/// Re-expresses `f` over `finer ⊇ f.breakpoints`.
pub fn refine(f: &SchwartzFn, finer: &Breakpoints) -> Result<SchwartzFn> {
    if !finer.contains_all(&f.breakpoints) {
        return Err(Error::NotARefinement(finer.to_string()));
    }
    if finer == &f.breakpoints {
        return Ok(f.clone());
    }
    // New slot of each old breakpoint.
    let old = f.breakpoints.points();
    let pos: Vec<usize> = old.iter().map(|p| finer.slot_of(p)).collect();
    let top = 2 * finer.len();
    let sub_slots = |s: usize| -> (usize, usize) {
        if s % 2 == 1 {
            let p = pos[(s - 1) / 2];
            (p, p)
        } else {
            let j = s / 2;
            let lo = if j == 0 { 0 } else { pos[j - 1] + 1 };
            let hi = if j == old.len() { top } else { pos[j] - 1 };
            (lo, hi)
        }
    };
    let mut out = SchwartzFn::zero(f.arity, finer.clone());
    for (sig, c) in &f.coeffs {
        let slots = sig.slots();
        let mut expansions: Vec<Vec<usize>> = vec![Vec::with_capacity(slots.len())];
        let mut i = 0;
        while i < slots.len() {
            let s = slots[i];
            let mut k = 1;
            while i + k < slots.len() && slots[i + k] == s {
                k += 1;
            }
            let (lo, hi) = sub_slots(s);
            let runs = increasing_runs(k, lo, hi);
            expansions = expansions
                .into_iter()
                .flat_map(|prefix| {
                    runs.iter().map(move |r| {
                        let mut v = prefix.clone();
                        v.extend_from_slice(r);
                        v
                    })
                })
                .collect();
            i += k;
        }
        for e in expansions {
            out.add_to(CellSignature::new_unchecked(e), c.clone());
        }
    }
    Ok(out)
}

/// Weakly increasing `k`-sequences in `lo..=hi`, odd values used at most once.
fn increasing_runs(k: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for s in lo..=hi {
            cur.push(s);
            go(k, if s % 2 == 1 { s + 1 } else { s }, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Pointwise product, computed cellwise over the union of breakpoints.
pub fn multiply(f: &SchwartzFn, g: &SchwartzFn) -> Result<SchwartzFn> {
    check_arity(f, g)?;
    let b = f.breakpoints.union(&g.breakpoints);
    let (rf, rg) = (refine(f, &b)?, refine(g, &b)?);
    let mut out = SchwartzFn::zero(f.arity, b);
    for (sig, c) in &rf.coeffs {
        if let Some(d) = rg.coeffs.get(sig) {
            out.add_to(sig.clone(), c * d);
        }
    }
    Ok(out)
}

/// `⟨f, g⟩ = ∫ f·g`.
pub fn pair(f: &SchwartzFn, g: &SchwartzFn) -> Result<Scalar> {
    check_arity(f, g)?;
    // Same as integrate(multiply(f, g)) without materializing the product.
    let b = f.breakpoints.union(&g.breakpoints);
    let (rf, rg) = (refine(f, &b)?, refine(g, &b)?);
    let (small, big) = if rf.coeffs.len() <= rg.coeffs.len() { (&rf, &rg) } else { (&rg, &rf) };
    Ok(small
        .coeffs
        .iter()
        .filter_map(|(sig, c)| big.coeffs.get(sig).map(|d| c * d * sig.volume()))
        .sum())
}

/// Integrates out coordinate `i` (0-based). Each fiber is a point (+1) or an
/// open interval (−1).
pub fn pushforward_coordinate(f: &SchwartzFn, i: usize) -> Result<SchwartzFn> {
    if i >= f.arity {
        return Err(Error::IndexOutOfRange { index: i, arity: f.arity });
    }
    let mut out = SchwartzFn::zero(f.arity - 1, f.breakpoints.clone());
    for (sig, c) in &f.coeffs {
        let mut slots = sig.slots().to_vec();
        let s = slots.remove(i);
        let c = if s % 2 == 1 { c.clone() } else { -c };
        out.add_to(CellSignature::new_unchecked(slots), c);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct FnWire {
    n: usize,
    breakpoints: Vec<String>,
    cells: Vec<CellWire>,
}

#[derive(Serialize, Deserialize)]
struct CellWire {
    slots: Vec<usize>,
    coeff: String,
}

impl TryFrom<FnWire> for SchwartzFn {
    type Error = Error;
    fn try_from(w: FnWire) -> Result<Self> {
        let points = w.breakpoints.iter().map(|s| scalar::parse(s)).collect::<Result<Vec<_>>>()?;
        let bps = Breakpoints::new(points)?;
        let m = bps.len();
        let cells = w
            .cells
            .into_iter()
            .map(|c| Ok((CellSignature::new(c.slots, m)?, scalar::parse(&c.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        SchwartzFn::from_cells(w.n, bps, cells)
    }
}

impl From<SchwartzFn> for FnWire {
    fn from(f: SchwartzFn) -> Self {
        FnWire {
            n: f.arity,
            breakpoints: f.breakpoints.points().iter().map(scalar::format).collect(),
            cells: f
                .coeffs
                .iter()
                .map(|(sig, c)| CellWire { slots: sig.slots().to_vec(), coeff: scalar::format(c) })
                .collect(),
        }
    }
}
