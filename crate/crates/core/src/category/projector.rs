use num::{BigInt, One, ToPrimitive};

use crate::combinatorics::{Letter, Path, Step, Weight};
use crate::error::{Error, Result};
use crate::euler::{all_cells, psi_key_function, Breakpoints, SchwartzFn};
use crate::linalg;
use crate::scalar::{int, sign, Scalar};

use super::kernel::{apply_kernel, invariant_extension};
use super::morphism::Morphism;

/// How a quasi-diagonal path crosses one diagonal square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Square {
    Diagonal,
    /// `(1,0)` then `(0,1)`: the output coordinate comes first.
    OutputFirst,
    /// `(0,1)` then `(1,0)`.
    InputFirst,
}

impl Square {
    /// The turn used by the projector of a letter: ● is `1_{x ≤ y}` with `x`
    /// the output, so its off-diagonal part is the output-first turn.
    pub fn of(letter: Letter) -> Square {
        match letter {
            Letter::Black => Square::OutputFirst,
            Letter::White => Square::InputFirst,
        }
    }

    fn steps(self) -> &'static [u16] {
        match self {
            Square::Diagonal => &[0b11],
            Square::OutputFirst => &[0b10, 0b01],
            Square::InputFirst => &[0b01, 0b10],
        }
    }
}

/// The path crossing each square as given.
pub fn quasi_diagonal(squares: &[Square]) -> Path {
    let steps = squares
        .iter()
        .flat_map(|s| s.steps().iter().map(|&m| Step::from_mask(2, m).expect("planar")))
        .collect();
    Path::new(2, steps).expect("planar")
}

/// Splits a path of Γ(n, n) into squares, or `None` if it leaves the diagonal.
pub fn squares_of(p: &Path) -> Option<Vec<Square>> {
    if p.dim() != 2 || p.target()[0] != p.target()[1] {
        return None;
    }
    let masks: Vec<u16> = p.steps().iter().map(|s| s.mask()).collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < masks.len() {
        let sq = match (masks[k], masks.get(k + 1)) {
            (0b11, _) => Square::Diagonal,
            (0b10, Some(0b01)) => Square::OutputFirst,
            (0b01, Some(0b10)) => Square::InputFirst,
            _ => return None,
        };
        k += sq.steps().len();
        out.push(sq);
    }
    Some(out)
}

/// `π_λ`: the sum over the `2^n` quasi-diagonal paths that use, in square
/// `i`, either the diagonal step or the turn [`Square::of`]`(λ_i)`.
///
/// With this turn convention `π_λ∘[p]∘π_λ = ε(λ,p)·π_λ` for quasi-diagonal
/// `p`, where square `i` contributes 1 for a diagonal step, 0 for the same
/// turn as `π_λ`, and −1 for the opposite turn (see [`eigenvalue`]).
pub fn projector(lambda: &Weight) -> Morphism {
    let n = lambda.len();
    let mut out = Morphism::zero(n, n);
    for mask in 0u32..(1 << n) {
        let squares: Vec<Square> = lambda
            .letters()
            .iter()
            .enumerate()
            .map(|(i, &l)| if mask >> i & 1 == 1 { Square::of(l) } else { Square::Diagonal })
            .collect();
        out.add_unchecked(quasi_diagonal(&squares), Scalar::one());
    }
    out
}

/// `ε(λ, p)` for a quasi-diagonal `p`, `None` otherwise.
pub fn eigenvalue(lambda: &Weight, p: &Path) -> Option<i64> {
    let squares = squares_of(p)?;
    if squares.len() != lambda.len() {
        return None;
    }
    Some(
        squares
            .iter()
            .zip(lambda.letters())
            .map(|(&s, &l)| match s {
                Square::Diagonal => 1,
                t if t == Square::of(l) => 0,
                _ => -1,
            })
            .product(),
    )
}

/// `∫ A(x, x) dx`: only the diagonal orbit meets the diagonal.
pub fn trace(f: &Morphism) -> Result<Scalar> {
    if f.target() != f.source() {
        return Err(Error::NotSquare { rows: f.target(), cols: f.source() });
    }
    let n = f.target();
    Ok(sign(n) * f.coeff(&Path::diagonal(2, n)))
}

/// The operator `e_λ` on `G(a)`-invariants of arity `m`, `a = (1, …, ℓ(λ))`,
/// as a matrix in the cell basis (column `j` is the image of cell `j`).
pub fn invariant_operator(lambda: &Weight, m: usize) -> Result<Vec<Vec<Scalar>>> {
    let n = lambda.len();
    let a: Vec<Scalar> = (1..=n as i64).map(int).collect();
    let bps = Breakpoints::new(a.clone())?;
    let psi = psi_key_function(lambda, &a)?;
    let basis = all_cells(m, n);
    let mut matrix = vec![vec![Scalar::default(); basis.len()]; basis.len()];
    for (j, cell) in basis.iter().enumerate() {
        let x = SchwartzFn::indicator(bps.clone(), cell.clone());
        let image = apply_kernel(&invariant_extension(&x, &a)?, &psi)?;
        for (i, row) in basis.iter().enumerate() {
            matrix[i][j] = image.coeff(row);
        }
    }
    Ok(matrix)
}

/// Rank of `e_λ` on arity-`m` invariants: the multiplicity of `L_λ` in
/// `C(R^(m))`. Panics if `e_λ` is not idempotent.
pub fn multiplicity_rank(lambda: &Weight, m: usize) -> Result<usize> {
    let e = invariant_operator(lambda, m)?;
    assert_eq!(linalg::mat_mul(&e, &e), e, "e_{lambda} is not idempotent at arity {m}");
    let ints: Vec<Vec<BigInt>> = e
        .iter()
        .map(|row| {
            row.iter()
                .map(|q| {
                    assert!(q.is_integer(), "non-integral entry in e_{lambda}");
                    q.to_integer()
                })
                .collect()
        })
        .collect();
    Ok(linalg::bareiss_rank(ints).to_usize().expect("small rank"))
}
