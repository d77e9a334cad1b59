use rand::seq::SliceRandom;
use rand::Rng;

use crate::scalar::{int, Scalar};

use super::cells::{all_cells, Breakpoints};
use super::function::SchwartzFn;

/// `m` distinct rationals with denominators in {1, 2, 3}.
pub fn random_breakpoints<R: Rng>(rng: &mut R, m: usize) -> Breakpoints {
    let mut pts: Vec<Scalar> = Vec::new();
    while pts.len() < m {
        let q = Scalar::new(rng.gen_range(-12i64..=12).into(), rng.gen_range(1i64..=3).into());
        if !pts.contains(&q) {
            pts.push(q);
        }
    }
    Breakpoints::from_unsorted(pts)
}

/// A function of arity `n` over up to `max_bps` random breakpoints with
/// small integer coefficients on a random subset of cells.
pub fn random_function<R: Rng>(rng: &mut R, n: usize, max_bps: usize) -> SchwartzFn {
    let m = rng.gen_range(0..=max_bps);
    let bps = random_breakpoints(rng, m);
    let mut cells = all_cells(n, bps.len());
    cells.shuffle(rng);
    let k = rng.gen_range(0..=cells.len().min(6));
    let terms = cells.into_iter().take(k).map(|c| (c, int(rng.gen_range(-3..=3))));
    SchwartzFn::from_cells(n, bps, terms).expect("cells drawn from the right arity")
}
