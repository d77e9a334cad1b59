use std::fmt;

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{binomial, int, Scalar};

use super::class::KClass;
use super::ring::tensor_mul;

/// A weakly decreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                go(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Length of the column `c` (0-based).
    fn column_len(&self, c: usize) -> usize {
        self.0.iter().filter(|&&p| p > c).count()
    }

    /// Cells `(row, col)` with their content `col − row` and hook length.
    pub fn cells(&self) -> Vec<(usize, usize, i64, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c - 1) + (self.column_len(c) - r - 1) + 1;
                out.push((r, c, c as i64 - r as i64, hook));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::InvalidPartition(vec![])))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// `p(t) = Σ c_i binom(t, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntValuedPoly {
    coeffs: Vec<BigInt>,
}

impl IntValuedPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntValuedPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn eval(&self, t: i64) -> BigInt {
        self.coeffs.iter().enumerate().map(|(i, c)| c * binomial_signed(t, i)).sum()
    }
}

/// `binom(t, i)` for any integer `t`.
pub fn binomial_signed(t: i64, i: usize) -> BigInt {
    if t >= 0 {
        return binomial(t as u64, i as u64);
    }
    // binom(−s, i) = (−1)^i binom(s + i − 1, i)
    let b = binomial((-t) as u64 + i as u64 - 1, i as u64);
    if i % 2 == 0 {
        b
    } else {
        -b
    }
}

/// `binom(x, i)` in K. Panics if a coefficient is not an integer.
pub fn lambda_binomial(x: &KClass, i: usize) -> KClass {
    let mut acc = KClass::one();
    for k in 0..i {
        let factor = x.sub(&KClass::constant(k as i64));
        acc = tensor_mul(&acc, &factor);
    }
    let fact: BigInt = (1..=i).map(BigInt::from).product();
    let out = acc.scale(&Scalar::new(BigInt::one(), fact));
    assert!(out.is_integral(), "binom(x, {i}) is not integral for x = {x}");
    out
}

/// `ψ^k(x)` from `λ^1, …, λ^k` by Newton's identities.
pub fn adams(x: &KClass, k: usize) -> KClass {
    assert!(k >= 1, "Adams operations are indexed from 1");
    let lambdas: Vec<KClass> = (0..=k).map(|i| lambda_binomial(x, i)).collect();
    let mut psi: Vec<KClass> = vec![KClass::zero(); k + 1];
    for n in 1..=k {
        let mut acc = lambdas[n].scale(&int(n as i64 * if n % 2 == 1 { 1 } else { -1 }));
        for j in 1..n {
            let term = tensor_mul(&lambdas[j], &psi[n - j]);
            acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
        }
        psi[n] = acc;
    }
    psi.swap_remove(k)
}

/// `p_λ(t) = Π (t + content)/hook`, as exact rationals.
pub fn hook_content(lambda: &Partition, t: i64) -> Scalar {
    lambda
        .cells()
        .iter()
        .map(|&(_, _, content, hook)| Scalar::new(BigInt::from(t + content), BigInt::from(hook)))
        .product()
}

/// `p_λ` in the binomial basis, via finite differences of the hook content
/// formula at `0..=|λ|`.
pub fn schur_dimension_poly(lambda: &Partition) -> IntValuedPoly {
    let d = lambda.size();
    let values: Vec<Scalar> = (0..=d as i64).map(|t| hook_content(lambda, t)).collect();
    let coeffs = (0..=d)
        .map(|i| {
            let c: Scalar = (0..=i)
                .map(|j| {
                    let s = if (i - j) % 2 == 0 { int(1) } else { int(-1) };
                    s * Scalar::from_integer(binomial(i as u64, j as u64)) * &values[j]
                })
                .sum();
            assert!(c.is_integer(), "p_{lambda} has a non-integral binomial coefficient");
            c.to_integer()
        })
        .collect();
    IntValuedPoly::new(coeffs)
}

/// `s_λ(x) = Σ_i c(λ, i) binom(x, i)`.
pub fn schur_apply(lambda: &Partition, x: &KClass) -> KClass {
    let p = schur_dimension_poly(lambda);
    let mut out = KClass::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&lambda_binomial(x, i).scale(&Scalar::from_integer(c.clone())));
        }
    }
    assert!(out.is_integral());
    out
}
