use std::fmt;

use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, sign, Scalar};

/// A strictly increasing finite set of rationals.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Breakpoints(Vec<Scalar>);

impl Breakpoints {
    pub fn new(points: Vec<Scalar>) -> Result<Self> {
        if !points.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::NotIncreasing);
        }
        Ok(Breakpoints(points))
    }

    /// Sorts and deduplicates arbitrary points.
    pub fn from_unsorted(mut points: Vec<Scalar>) -> Self {
        points.sort();
        points.dedup();
        Breakpoints(points)
    }

    pub fn empty() -> Self {
        Breakpoints(Vec::new())
    }

    pub fn points(&self) -> &[Scalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_all(&self, other: &Breakpoints) -> bool {
        other.0.iter().all(|p| self.0.binary_search(p).is_ok())
    }

    pub fn union(&self, other: &Breakpoints) -> Breakpoints {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Breakpoints::from_unsorted(v)
    }

    /// Slot of a single real number: `2j+1` for the point `a_{j+1}`, `2j`
    /// for the open gap below it (0-based `j`).
    pub fn slot_of(&self, x: &Scalar) -> usize {
        match self.0.binary_search(x) {
            Ok(i) => 2 * i + 1,
            Err(i) => 2 * i,
        }
    }
}

impl fmt::Display for Breakpoints {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Combinatorial type of an increasing tuple relative to `m` breakpoints.
/// Even slot `2j` is the open gap `I_j`, odd slot `2j-1` the point `a_j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CellSignature(Vec<usize>);

impl CellSignature {
    pub fn new(slots: Vec<usize>, breakpoints: usize) -> Result<Self> {
        let bad = || Error::InvalidSignature {
            slots: slots.clone(),
            arity: slots.len(),
            breakpoints,
        };
        if slots.iter().any(|&s| s > 2 * breakpoints) {
            return Err(bad());
        }
        for w in slots.windows(2) {
            if w[0] > w[1] || (w[0] == w[1] && w[0] % 2 == 1) {
                return Err(bad());
            }
        }
        Ok(CellSignature(slots))
    }

    pub(crate) fn new_unchecked(slots: Vec<usize>) -> Self {
        CellSignature(slots)
    }

    pub fn slots(&self) -> &[usize] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn interval_slots(&self) -> usize {
        self.0.iter().filter(|&&s| s % 2 == 0).count()
    }

    /// Euler volume of the cell, `(-1)^{#interval slots}`.
    pub fn volume(&self) -> Scalar {
        sign(self.interval_slots())
    }

    pub fn is_valid_for(&self, breakpoints: usize) -> bool {
        CellSignature::new(self.0.clone(), breakpoints).is_ok()
    }
}

/// Every valid signature of arity `n` over `m` breakpoints, sorted.
pub fn all_cells(n: usize, m: usize) -> Vec<CellSignature> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(n);
    fill(n, 0, 2 * m, &mut stack, &mut out);
    out
}

fn fill(n: usize, lo: usize, hi: usize, stack: &mut Vec<usize>, out: &mut Vec<CellSignature>) {
    if stack.len() == n {
        out.push(CellSignature(stack.clone()));
        return;
    }
    for s in lo..=hi {
        stack.push(s);
        // A point slot may host one coordinate only.
        let next = if s % 2 == 1 { s + 1 } else { s };
        fill(n, next, hi, stack, out);
        stack.pop();
    }
}

/// Number of valid signatures of arity `n` over `m` breakpoints.
pub fn cell_count(n: usize, m: usize) -> BigUint {
    // ways[k] = fillings of k coordinates into the slots processed so far.
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for slot in 0..=2 * m {
        if slot % 2 == 0 {
            for k in 1..=n {
                let prev = ways[k - 1].clone();
                ways[k] += prev;
            }
        } else {
            for k in (1..=n).rev() {
                let prev = ways[k - 1].clone();
                ways[k] += prev;
            }
        }
    }
    ways[n].clone()
}

/// A concrete tuple inside the cell. `variant` selects among distinct
/// choices of the interval coordinates; `variant = 0` is the canonical one.
pub fn representative(sig: &CellSignature, bps: &Breakpoints, variant: usize) -> Vec<Scalar> {
    let a = bps.points();
    let m = a.len();
    let slots = sig.slots();
    let v = variant as i64;
    let mut out = Vec::with_capacity(slots.len());
    let mut i = 0;
    while i < slots.len() {
        let s = slots[i];
        let mut k = 1;
        while i + k < slots.len() && slots[i + k] == s {
            k += 1;
        }
        if s % 2 == 1 {
            out.push(a[(s - 1) / 2].clone());
        } else {
            let j = s / 2;
            for t in 1..=k as i64 {
                let x = if m == 0 {
                    int(t + v)
                } else if j == 0 {
                    &a[0] - int(v + k as i64 + 1 - t)
                } else if j == m {
                    &a[m - 1] + int(v + t)
                } else {
                    let (l, r) = (&a[j - 1], &a[j]);
                    let mut denom = 1i64;
                    while denom < k as i64 + 1 {
                        denom *= 2;
                    }
                    denom <<= variant;
                    l + (r - l) * Scalar::new(t.into(), denom.into())
                };
                out.push(x);
            }
        }
        i += k;
    }
    out
}

/// The signature of a strictly increasing tuple.
pub fn signature_of(x: &[Scalar], bps: &Breakpoints) -> Result<CellSignature> {
    if !x.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::NotIncreasing);
    }
    Ok(CellSignature(x.iter().map(|p| bps.slot_of(p)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::delannoy_number;
    use num::ToPrimitive;

    fn bps(v: &[i64]) -> Breakpoints {
        Breakpoints::new(v.iter().map(|&k| int(k)).collect()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(cell_count(1, 1).to_u64(), Some(3));
        assert_eq!(cell_count(2, 1).to_u64(), Some(5));
        assert_eq!(all_cells(2, 1).len(), 5);
        for n in 0..=4 {
            for m in 0..=4 {
                let c = cell_count(n, m);
                assert_eq!(c.to_usize().unwrap(), all_cells(n, m).len());
                assert_eq!(c, delannoy_number(n, m));
            }
        }
    }

    #[test]
    fn signature_validation() {
        assert!(CellSignature::new(vec![0, 0, 2], 1).is_ok());
        assert!(CellSignature::new(vec![1, 1], 1).is_err());
        assert!(CellSignature::new(vec![2, 0], 1).is_err());
        assert!(CellSignature::new(vec![3], 1).is_err());
    }

    #[test]
    fn representatives_lie_in_their_cells() {
        let b = bps(&[0, 1, 5]);
        for n in 0..=3 {
            for sig in all_cells(n, 3) {
                for v in 0..3 {
                    let x = representative(&sig, &b, v);
                    assert_eq!(signature_of(&x, &b).unwrap(), sig);
                }
                let x0 = representative(&sig, &b, 0);
                let x1 = representative(&sig, &b, 1);
                if sig.interval_slots() > 0 {
                    assert_ne!(x0, x1);
                }
            }
        }
        for sig in all_cells(2, 0) {
            assert_eq!(signature_of(&representative(&sig, &Breakpoints::empty(), 2), &Breakpoints::empty()).unwrap(), sig);
        }
    }
}
