use crate::error::{Error, Result};

use super::path::{Path, Step};

const PAIRS: [[usize; 2]; 3] = [[0, 1], [1, 2], [0, 2]];

fn check_planar(p: &Path) -> Result<()> {
    if p.dim() != 2 {
        return Err(Error::PathDimension { expected: 2, found: p.dim() });
    }
    Ok(())
}

fn mismatch(expected: &[usize], found: &[usize]) -> Error {
    Error::PathTarget { expected: expected.to_vec(), found: found.to_vec() }
}

/// Backtracking over the seven nonzero 3-bit steps. `constraints[k]` is the
/// required projection onto `PAIRS[k]`, if any; each chosen step must match
/// the head of every constrained projection it does not vanish on.
fn search(constraints: [Option<&Path>; 3], target: [usize; 3]) -> Vec<Path> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut heads = [0usize; 3];
    let mut remaining = target;
    go(&constraints, &mut heads, &mut remaining, &mut stack, &mut out);
    out
}

fn go(
    constraints: &[Option<&Path>; 3],
    heads: &mut [usize; 3],
    remaining: &mut [usize; 3],
    stack: &mut Vec<Step>,
    out: &mut Vec<Path>,
) {
    if remaining.iter().all(|&r| r == 0) {
        let done = constraints
            .iter()
            .zip(heads.iter())
            .all(|(c, &h)| c.map_or(true, |p| h == p.len()));
        if done {
            out.push(Path::new(3, stack.clone()).expect("3-dimensional steps"));
        }
        return;
    }
    'steps: for s in Step::all(3) {
        if (0..3).any(|i| s.get(i) && remaining[i] == 0) {
            continue;
        }
        let mut advanced = [false; 3];
        for (k, c) in constraints.iter().enumerate() {
            if let (Some(p), Some(proj)) = (c, s.project(&PAIRS[k])) {
                if p.steps().get(heads[k]) != Some(&proj) {
                    continue 'steps;
                }
                advanced[k] = true;
            }
        }
        for k in 0..3 {
            heads[k] += advanced[k] as usize;
        }
        for i in 0..3 {
            remaining[i] -= s.get(i) as usize;
        }
        stack.push(s);
        go(constraints, heads, remaining, stack, out);
        stack.pop();
        for i in 0..3 {
            remaining[i] += s.get(i) as usize;
        }
        for k in 0..3 {
            heads[k] -= advanced[k] as usize;
        }
    }
}

/// Every `q ∈ Γ(n,m,ℓ)` whose three pairwise projections are the given paths.
pub fn lift3_all(p12: &Path, p23: &Path, p13: &Path) -> Result<Vec<Path>> {
    for p in [p12, p23, p13] {
        check_planar(p)?;
    }
    let (n, m, l) = (p12.target()[0], p12.target()[1], p23.target()[1]);
    if p23.target()[0] != m {
        return Err(mismatch(&[m, l], p23.target()));
    }
    if p13.target() != [n, l] {
        return Err(mismatch(&[n, l], p13.target()));
    }
    Ok(search([Some(p12), Some(p23), Some(p13)], [n, m, l]))
}

/// The unique lift of three planar paths, if one exists.
///
/// Panics if the search finds more than one lift.
pub fn lift3(p12: &Path, p23: &Path, p13: &Path) -> Result<Option<Path>> {
    let mut all = lift3_all(p12, p23, p13)?;
    assert!(all.len() <= 1, "found {} lifts of ({p12}, {p23}, {p13})", all.len());
    Ok(all.pop())
}

/// Every `q` with `π12(q) = p12` and `π23(q) = p23`, in canonical order.
pub fn lifts_over(p12: &Path, p23: &Path) -> Result<Vec<Path>> {
    check_planar(p12)?;
    check_planar(p23)?;
    let (n, m) = (p12.target()[0], p12.target()[1]);
    if p23.target()[0] != m {
        return Err(mismatch(&[m, p23.target()[1]], p23.target()));
    }
    Ok(search([Some(p12), Some(p23), None], [n, m, p23.target()[1]]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_paths, project_path};

    #[test]
    fn diagonal_lifts_to_diagonal() {
        for n in 0..4 {
            let d = Path::diagonal(2, n);
            assert_eq!(lift3(&d, &d, &d).unwrap(), Some(Path::diagonal(3, n)));
        }
    }

    #[test]
    fn inconsistent_triple_has_no_lift() {
        let a = Path::planar(&[(1, 0), (0, 1)]).unwrap();
        let d = Path::planar(&[(1, 1)]).unwrap();
        assert_eq!(lift3(&a, &a, &d).unwrap(), None);
    }

    #[test]
    fn lifts_are_unique_up_to_two() {
        for n in 0..=2 {
            for m in 0..=2 {
                for l in 0..=2 {
                    // Group all 3D paths by their projection triple; every
                    // triple must be hit at most once and lift3 must find it.
                    let mut seen = std::collections::BTreeMap::new();
                    for q in enumerate_paths(&[n, m, l]) {
                        let key = (
                            project_path(&q, &[0, 1]).unwrap(),
                            project_path(&q, &[1, 2]).unwrap(),
                            project_path(&q, &[0, 2]).unwrap(),
                        );
                        assert!(seen.insert(key, q).is_none());
                    }
                    for p12 in enumerate_paths(&[n, m]) {
                        for p23 in enumerate_paths(&[m, l]) {
                            for p13 in enumerate_paths(&[n, l]) {
                                let got = lift3(&p12, &p23, &p13).unwrap();
                                let key = (p12.clone(), p23.clone(), p13);
                                assert_eq!(got.as_ref(), seen.get(&key));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lifts_over_covers_every_third_projection() {
        let p12 = Path::planar(&[(1, 0), (1, 1), (0, 1)]).unwrap();
        let p23 = Path::planar(&[(0, 1), (1, 1), (1, 0)]).unwrap();
        let qs = lifts_over(&p12, &p23).unwrap();
        assert!(!qs.is_empty());
        for q in &qs {
            let p13 = project_path(q, &[0, 2]).unwrap();
            assert_eq!(lift3(&p12, &p23, &p13).unwrap().as_ref(), Some(q));
        }
    }

    #[test]
    fn rejects_mismatched_targets() {
        let a = Path::planar(&[(1, 0)]).unwrap();
        let d = Path::planar(&[(1, 1)]).unwrap();
        assert!(lift3(&a, &d, &d).is_err());
    }
}
