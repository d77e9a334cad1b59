use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

use super::path::{Path, Step};

/// A pair of strictly increasing rational tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRepresentative {
    #[serde(with = "scalar_vec")]
    x: Vec<Scalar>,
    #[serde(with = "scalar_vec")]
    y: Vec<Scalar>,
}

impl OrbitRepresentative {
    pub fn new(x: Vec<Scalar>, y: Vec<Scalar>) -> Result<Self> {
        if !strictly_increasing(&x) || !strictly_increasing(&y) {
            return Err(Error::NotIncreasing);
        }
        Ok(OrbitRepresentative { x, y })
    }

    pub fn x(&self) -> &[Scalar] {
        &self.x
    }

    pub fn y(&self) -> &[Scalar] {
        &self.y
    }

    pub fn into_parts(self) -> (Vec<Scalar>, Vec<Scalar>) {
        (self.x, self.y)
    }
}

pub fn strictly_increasing(v: &[Scalar]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Reads the relative order of `(x, y)` as a planar path; axis 0 is `x`.
pub fn encode_orbit(rep: &OrbitRepresentative) -> Path {
    let (x, y) = (rep.x(), rep.y());
    let (mut i, mut j) = (0, 0);
    let mut steps = Vec::with_capacity(x.len() + y.len());
    while i < x.len() || j < y.len() {
        let mask = match (x.get(i), y.get(j)) {
            (Some(a), Some(b)) if a == b => 0b11,
            (Some(a), Some(b)) if a < b => 0b10,
            (Some(_), None) => 0b10,
            _ => 0b01,
        };
        if mask & 0b10 != 0 {
            i += 1;
        }
        if mask & 0b01 != 0 {
            j += 1;
        }
        steps.push(Step::from_mask(2, mask).expect("nonzero planar step"));
    }
    Path::new(2, steps).expect("planar steps")
}

/// Places the merged points of `p` at `1..=ℓ(p)`.
pub fn canonical_representative(p: &Path) -> Result<OrbitRepresentative> {
    if p.dim() != 2 {
        return Err(Error::PathDimension { expected: 2, found: p.dim() });
    }
    let (mut x, mut y) = (Vec::new(), Vec::new());
    for (k, s) in p.steps().iter().enumerate() {
        let t = int(k as i64 + 1);
        if s.get(0) {
            x.push(t.clone());
        }
        if s.get(1) {
            y.push(t);
        }
    }
    OrbitRepresentative::new(x, y)
}

mod scalar_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::{self, Scalar};

    pub fn serialize<S: Serializer>(v: &[Scalar], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(scalar::format))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Scalar>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| scalar::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
