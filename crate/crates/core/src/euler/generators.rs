use num::One;

use crate::combinatorics::{Letter, Weight};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::cells::{all_cells, representative, Breakpoints, CellSignature};
use super::function::SchwartzFn;

/// `(open, closed]` for ● or `[closed, open)` for ○; a missing open endpoint
/// means −∞ for ● and +∞ for ○.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfOpenInterval {
    kind: Letter,
    closed: Scalar,
    open: Option<Scalar>,
}

impl HalfOpenInterval {
    pub fn new(kind: Letter, closed: Scalar, open: Option<Scalar>) -> Result<Self> {
        let ok = match (&open, kind) {
            (None, _) => true,
            (Some(b), Letter::Black) => b < &closed,
            (Some(b), Letter::White) => &closed < b,
        };
        if !ok {
            return Err(Error::MalformedInterval(0));
        }
        Ok(HalfOpenInterval { kind, closed, open })
    }

    /// `(open, closed]`.
    pub fn black(open: Option<Scalar>, closed: Scalar) -> Result<Self> {
        HalfOpenInterval::new(Letter::Black, closed, open)
    }

    /// `[closed, open)`.
    pub fn white(closed: Scalar, open: Option<Scalar>) -> Result<Self> {
        HalfOpenInterval::new(Letter::White, closed, open)
    }

    pub fn kind(&self) -> Letter {
        self.kind
    }

    pub fn closed(&self) -> &Scalar {
        &self.closed
    }

    pub fn open(&self) -> Option<&Scalar> {
        self.open.as_ref()
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        match self.kind {
            Letter::Black => x <= &self.closed && self.open.as_ref().map_or(true, |b| b < x),
            Letter::White => &self.closed <= x && self.open.as_ref().map_or(true, |b| x < b),
        }
    }

    // (value, inclusive); None is infinite.
    fn lower(&self) -> Option<(&Scalar, bool)> {
        match self.kind {
            Letter::Black => self.open.as_ref().map(|b| (b, false)),
            Letter::White => Some((&self.closed, true)),
        }
    }

    fn upper(&self) -> Option<(&Scalar, bool)> {
        match self.kind {
            Letter::Black => Some((&self.closed, true)),
            Letter::White => self.open.as_ref().map(|b| (b, false)),
        }
    }

    fn precedes(&self, next: &HalfOpenInterval) -> bool {
        match (self.upper(), next.lower()) {
            (Some((u, ui)), Some((l, li))) => u < l || (u == l && !(ui && li)),
            _ => false,
        }
    }
}

/// Indicator of `I_1 × ⋯ × I_n` on increasing tuples.
pub fn phi_generator(intervals: &[HalfOpenInterval]) -> Result<SchwartzFn> {
    for (i, w) in intervals.windows(2).enumerate() {
        if !w[0].precedes(&w[1]) {
            return Err(Error::IntervalOrder(i, i + 1));
        }
    }
    let mut ends = Vec::new();
    for iv in intervals {
        ends.push(iv.closed.clone());
        ends.extend(iv.open.clone());
    }
    let bps = Breakpoints::from_unsorted(ends);
    let options: Vec<[usize; 2]> = intervals
        .iter()
        .map(|iv| {
            let point = bps.slot_of(&iv.closed);
            let gap = match iv.kind {
                Letter::Black => point - 1,
                Letter::White => point + 1,
            };
            [gap, point]
        })
        .collect();
    let mut sigs: Vec<Vec<usize>> = vec![vec![]];
    for opts in &options {
        sigs = sigs
            .into_iter()
            .flat_map(|s| {
                opts.iter().map(move |&o| {
                    let mut v = s.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    let m = bps.len();
    let cells = sigs
        .into_iter()
        .map(|s| Ok((CellSignature::new(s, m)?, Scalar::one())))
        .collect::<Result<Vec<_>>>()?;
    SchwartzFn::from_cells(intervals.len(), bps, cells)
}

/// Whether `(x, a)` lies in the key set of `λ`.
pub fn key_member(lambda: &Weight, x: &[Scalar], a: &[Scalar]) -> bool {
    let n = lambda.len();
    debug_assert!(x.len() == n && a.len() == n);
    (0..n).all(|i| {
        let side = match lambda.letters()[i] {
            Letter::Black => x[i] <= a[i],
            Letter::White => a[i] <= x[i],
        };
        side && (i + 1 == n || (x[i] < a[i + 1] && a[i] < x[i + 1]))
    })
}

/// Indicator of `{x : (x, a) ∈ Ψ_λ}` over the breakpoints `a`.
pub fn psi_key_function(lambda: &Weight, a: &[Scalar]) -> Result<SchwartzFn> {
    if a.len() != lambda.len() {
        return Err(Error::LengthMismatch { expected: lambda.len(), found: a.len() });
    }
    let bps = Breakpoints::new(a.to_vec())?;
    let n = lambda.len();
    let cells = all_cells(n, n)
        .into_iter()
        .filter(|sig| key_member(lambda, &representative(sig, &bps, 0), a))
        .map(|sig| (sig, Scalar::one()))
        .collect::<Vec<_>>();
    SchwartzFn::from_cells(n, bps, cells)
}
