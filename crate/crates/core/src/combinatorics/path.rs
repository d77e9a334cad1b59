use std::fmt;

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported path dimension (steps are stored as bit masks).
pub const MAX_DIM: usize = 16;

/// A nonzero 0-1 vector. Coordinate 0 is the most significant bit of `mask`,
/// so comparing masks compares bit vectors lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    dim: u8,
    mask: u16,
}

impl Step {
    pub fn new(coords: &[u8]) -> Result<Self> {
        if coords.is_empty() || coords.len() > MAX_DIM {
            return Err(Error::StepDimension {
                expected: coords.len().clamp(1, MAX_DIM),
                found: coords.len(),
            });
        }
        let mut mask = 0u16;
        for &c in coords {
            if c > 1 {
                return Err(Error::StepDimension {
                    expected: coords.len(),
                    found: coords.len(),
                });
            }
            mask = (mask << 1) | c as u16;
        }
        Self::from_mask(coords.len(), mask)
    }

    pub fn from_mask(dim: usize, mask: u16) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM || (dim < 16 && mask >> dim != 0) {
            return Err(Error::StepDimension { expected: dim, found: dim });
        }
        if mask == 0 {
            return Err(Error::ZeroStep);
        }
        Ok(Step { dim: dim as u8, mask })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn mask(&self) -> u16 {
        self.mask
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.dim());
        (self.mask >> (self.dim() - 1 - i)) & 1 == 1
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.dim()).map(|i| self.get(i) as u8).collect()
    }

    /// Restriction to `axes`, or `None` when it is the zero vector.
    pub fn project(&self, axes: &[usize]) -> Option<Step> {
        let mut mask = 0u16;
        for &a in axes {
            mask = (mask << 1) | self.get(a) as u16;
        }
        (mask != 0).then_some(Step { dim: axes.len() as u8, mask })
    }

    /// All `2^d - 1` steps of dimension `d`, in increasing order.
    pub fn all(dim: usize) -> impl Iterator<Item = Step> {
        assert!((1..=MAX_DIM).contains(&dim));
        (1..=((1u32 << dim) - 1)).map(move |m| Step { dim: dim as u8, mask: m as u16 })
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.dim() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, ")")
    }
}

/// A `d`-dimensional Delannoy path.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "PathWire", into = "PathWire")]
pub struct Path {
    dim: usize,
    steps: Vec<Step>,
    target: Vec<usize>,
}

impl Path {
    pub fn new(dim: usize, steps: Vec<Step>) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::PathDimension { expected: MAX_DIM, found: dim });
        }
        let mut target = vec![0; dim];
        for s in &steps {
            if s.dim() != dim {
                return Err(Error::StepDimension { expected: dim, found: s.dim() });
            }
            for (i, t) in target.iter_mut().enumerate() {
                *t += s.get(i) as usize;
            }
        }
        Ok(Path { dim, steps, target })
    }

    pub fn from_coords(dim: usize, steps: &[Vec<u8>]) -> Result<Self> {
        let steps = steps
            .iter()
            .map(|c| {
                if c.len() != dim {
                    return Err(Error::StepDimension { expected: dim, found: c.len() });
                }
                Step::new(c)
            })
            .collect::<Result<Vec<_>>>()?;
        Path::new(dim, steps)
    }

    /// Convenience constructor for planar paths.
    pub fn planar(steps: &[(u8, u8)]) -> Result<Self> {
        let steps: Vec<Vec<u8>> = steps.iter().map(|&(a, b)| vec![a, b]).collect();
        Path::from_coords(2, &steps)
    }

    pub fn empty(dim: usize) -> Self {
        Path::new(dim, Vec::new()).expect("dimension within bounds")
    }

    /// `n` copies of the all-ones step.
    pub fn diagonal(dim: usize, n: usize) -> Self {
        if n == 0 {
            return Path::empty(dim);
        }
        let ones = Step::from_mask(dim, ((1u32 << dim) - 1) as u16).expect("valid dim");
        Path::new(dim, vec![ones; n]).expect("consistent dims")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn target(&self) -> &[usize] {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        let full = ((1u32 << self.dim) - 1) as u16;
        self.steps.iter().all(|s| s.mask == full)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct PathWire {
    d: usize,
    steps: Vec<Vec<u8>>,
}

impl TryFrom<PathWire> for Path {
    type Error = Error;
    fn try_from(w: PathWire) -> Result<Self> {
        Path::from_coords(w.d, &w.steps)
    }
}

impl From<Path> for PathWire {
    fn from(p: Path) -> Self {
        PathWire {
            d: p.dim,
            steps: p.steps.iter().map(Step::coords).collect(),
        }
    }
}

/// All of Γ(target), sorted lexicographically by step sequence.
pub fn enumerate_paths(target: &[usize]) -> Vec<Path> {
    let dim = target.len();
    if dim == 0 {
        return vec![Path::empty(0)];
    }
    assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
    let mut out = Vec::new();
    let mut remaining = target.to_vec();
    let mut stack = Vec::new();
    dfs(dim, &mut remaining, &mut stack, &mut out);
    out
}

fn dfs(dim: usize, remaining: &mut [usize], stack: &mut Vec<Step>, out: &mut Vec<Path>) {
    if remaining.iter().all(|&r| r == 0) {
        out.push(Path::new(dim, stack.clone()).expect("steps share the dimension"));
        return;
    }
    for s in Step::all(dim) {
        if (0..dim).all(|i| !s.get(i) || remaining[i] > 0) {
            for (i, r) in remaining.iter_mut().enumerate() {
                *r -= s.get(i) as usize;
            }
            stack.push(s);
            dfs(dim, remaining, stack, out);
            stack.pop();
            for (i, r) in remaining.iter_mut().enumerate() {
                *r += s.get(i) as usize;
            }
        }
    }
}

/// D(n,m) by the three-term recurrence.
pub fn delannoy_number(n: usize, m: usize) -> BigUint {
    let mut row: Vec<BigUint> = vec![BigUint::from(1u8); m + 1];
    for _ in 0..n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(BigUint::from(1u8));
        for j in 1..=m {
            let v = &row[j] + &next[j - 1] + &row[j - 1];
            next.push(v);
        }
        row = next;
    }
    row[m].clone()
}

/// Projects onto `axes` (0-based), deleting steps that become zero.
pub fn project_path(p: &Path, axes: &[usize]) -> Result<Path> {
    let mut seen = vec![false; p.dim()];
    for &a in axes {
        if a >= p.dim() || seen[a] {
            return Err(Error::NonInjectiveAxes { axes: axes.to_vec(), dim: p.dim() });
        }
        seen[a] = true;
    }
    if axes.is_empty() {
        return Err(Error::NonInjectiveAxes { axes: vec![], dim: p.dim() });
    }
    let steps = p.steps().iter().filter_map(|s| s.project(axes)).collect();
    Path::new(axes.len(), steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::ToPrimitive;

    fn brute_force(target: &[usize]) -> Vec<Path> {
        // Every sequence over the nonzero steps with length ≤ Σ target,
        // filtered by its sum.
        let dim = target.len();
        let total: usize = target.iter().sum();
        let steps: Vec<Step> = Step::all(dim).collect();
        let mut out = Vec::new();
        let mut frontier: Vec<Vec<Step>> = vec![vec![]];
        for _ in 0..=total {
            let mut next = Vec::new();
            for seq in frontier {
                let p = Path::new(dim, seq.clone()).unwrap();
                if p.target() == target {
                    out.push(p);
                }
                for s in &steps {
                    let mut q = seq.clone();
                    q.push(*s);
                    next.push(q);
                }
            }
            frontier = next;
        }
        out.sort();
        out
    }

    #[test]
    fn thirteen_planar_paths() {
        assert_eq!(enumerate_paths(&[2, 2]).len(), 13);
    }

    #[test]
    fn zero_target_has_only_the_empty_path() {
        let ps = enumerate_paths(&[0, 0]);
        assert_eq!(ps, vec![Path::empty(2)]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let ps = enumerate_paths(&[1, 1, 1]);
        assert_eq!(ps.len(), 13);
        assert_eq!(ps, brute_force(&[1, 1, 1]));
        assert_eq!(enumerate_paths(&[2, 1]), brute_force(&[2, 1]));
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let ps = enumerate_paths(&[3, 2]);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn recurrence_matches_enumeration() {
        assert_eq!(delannoy_number(2, 2).to_u64(), Some(13));
        assert_eq!(delannoy_number(3, 3).to_u64(), Some(63));
        assert_eq!(delannoy_number(5, 0).to_u64(), Some(1));
        assert_eq!(delannoy_number(0, 5).to_u64(), Some(1));
        for n in 0..=4 {
            for m in 0..=4 {
                assert_eq!(delannoy_number(n, m).to_usize().unwrap(), enumerate_paths(&[n, m]).len());
            }
        }
    }

    #[test]
    fn projection_examples() {
        let q = Path::from_coords(3, &[vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(project_path(&q, &[0, 2]).unwrap(), Path::planar(&[(1, 0), (0, 1)]).unwrap());
        assert_eq!(project_path(&Path::diagonal(3, 1), &[0, 1]).unwrap(), Path::diagonal(2, 1));
        let e = Path::from_coords(3, &[vec![1, 0, 0]]).unwrap();
        let pe = project_path(&e, &[1, 2]).unwrap();
        assert!(pe.is_empty());
        assert_eq!(pe.target(), &[0, 0]);
        assert!(project_path(&q, &[0, 0]).is_err());
        assert!(project_path(&q, &[3]).is_err());
    }

    #[test]
    fn rejects_bad_steps() {
        assert_eq!(Step::new(&[0, 0]), Err(Error::ZeroStep));
        assert!(Step::new(&[2, 0]).is_err());
        assert!(Path::from_coords(2, &[vec![1, 0, 1]]).is_err());
    }

    #[test]
    fn step_order_is_lexicographic() {
        let a = Step::new(&[0, 1]).unwrap();
        let b = Step::new(&[1, 0]).unwrap();
        let c = Step::new(&[1, 1]).unwrap();
        assert!(a < b && b < c);
    }
}
