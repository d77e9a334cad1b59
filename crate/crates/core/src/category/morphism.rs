use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_paths, Path};
use crate::error::{Error, Result};
use crate::scalar::{self, int, Scalar};

/// A formal combination of paths in Γ(n, m): a map from arity `m` to arity `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MorphismWire", into = "MorphismWire")]
pub struct Morphism {
    target: usize,
    source: usize,
    coeffs: BTreeMap<Path, Scalar>,
}

impl Morphism {
    pub fn zero(target: usize, source: usize) -> Self {
        Morphism { target, source, coeffs: BTreeMap::new() }
    }

    /// `[p]` for a planar path `p`.
    pub fn basis(p: &Path) -> Result<Self> {
        if p.dim() != 2 {
            return Err(Error::PathDimension { expected: 2, found: p.dim() });
        }
        let mut f = Morphism::zero(p.target()[0], p.target()[1]);
        f.add_term(p.clone(), Scalar::one())?;
        Ok(f)
    }

    pub fn from_terms(
        target: usize,
        source: usize,
        terms: impl IntoIterator<Item = (Path, Scalar)>,
    ) -> Result<Self> {
        let mut f = Morphism::zero(target, source);
        for (p, c) in terms {
            f.add_term(p, c)?;
        }
        Ok(f)
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, p: &Path) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, p: Path, c: Scalar) -> Result<()> {
        if p.dim() != 2 {
            return Err(Error::PathDimension { expected: 2, found: p.dim() });
        }
        if p.target() != [self.target, self.source] {
            return Err(Error::PathTarget {
                expected: vec![self.target, self.source],
                found: p.target().to_vec(),
            });
        }
        self.add_unchecked(p, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, p: Path, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
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

    pub fn scale(&self, c: &Scalar) -> Morphism {
        let mut out = Morphism::zero(self.target, self.source);
        for (p, v) in &self.coeffs {
            out.add_unchecked(p.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if (self.target, self.source) != (other.target, other.source) {
            return Err(Error::ArityMismatch { left: self.source, right: other.source });
        }
        let mut out = self.clone();
        for (p, v) in &other.coeffs {
            out.add_unchecked(p.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.add(&other.scale(&-Scalar::one()))
    }
}

/// The all-diagonal path in Γ(n, n).
pub fn identity(n: usize) -> Morphism {
    Morphism::basis(&Path::diagonal(2, n)).expect("planar path")
}

/// A morphism with up to `max_terms` random basis paths and small coefficients.
pub fn random_morphism<R: Rng>(rng: &mut R, target: usize, source: usize, max_terms: usize) -> Morphism {
    let paths = enumerate_paths(&[target, source]);
    let k = rng.gen_range(1..=max_terms.max(1));
    let mut f = Morphism::zero(target, source);
    for p in paths.choose_multiple(rng, k) {
        f.add_unchecked(p.clone(), int(rng.gen_range(-3..=3)));
    }
    f
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            f.write_str(match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            })?;
            if !abs.is_one() {
                write!(f, "{}", scalar::pretty(&abs))?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MorphismWire {
    n: usize,
    m: usize,
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    path: Path,
    coeff: String,
}

impl TryFrom<MorphismWire> for Morphism {
    type Error = Error;
    fn try_from(w: MorphismWire) -> Result<Self> {
        let terms = w
            .terms
            .into_iter()
            .map(|t| Ok((t.path, scalar::parse(&t.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Morphism::from_terms(w.n, w.m, terms)
    }
}

impl From<Morphism> for MorphismWire {
    fn from(f: Morphism) -> Self {
        MorphismWire {
            n: f.target,
            m: f.source,
            terms: f
                .coeffs
                .into_iter()
                .map(|(path, c)| TermWire { path, coeff: scalar::format(&c) })
                .collect(),
        }
    }
}
