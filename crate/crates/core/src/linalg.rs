//! Small dense exact linear algebra: products, fraction-free rank, and
//! rational null spaces.

use num::{BigInt, Zero};

use crate::scalar::Scalar;

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..cols)
                .map(|j| (0..inner).filter(|&k| !row[k].is_zero()).map(|k| &row[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Rank of an integer matrix by Bareiss elimination; every intermediate
/// division is exact.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                debug_assert!((&v % &prev).is_zero());
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Scalar>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..cols {
                    let d = &f * &m[r][k];
                    m[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// A basis of `{v : m v = 0}`.
pub fn nullspace(m: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use proptest::prelude::*;

    fn ints(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(bareiss_rank(ints(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(bareiss_rank(ints(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(bareiss_rank(ints(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
    }

    #[test]
    fn nullspace_of_a_rank_one_matrix() {
        let m = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        let ns = nullspace(&m, 2);
        assert_eq!(ns, vec![vec![int(-2), int(1)]]);
    }

    proptest! {
        #[test]
        fn bareiss_matches_rational_rank(entries in proptest::collection::vec(-3i64..=3, 16), r in 1usize..=4) {
            let rows: Vec<Vec<i64>> = entries.chunks(4).take(r).map(|c| c.to_vec()).collect();
            let q: Vec<Vec<Scalar>> = rows.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
            let z: Vec<Vec<BigInt>> = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
            prop_assert_eq!(bareiss_rank(z), rank(&q));
        }
    }
}
