use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Weight;
use crate::error::{Error, Result};
use crate::scalar::{self, int, Scalar};

fn accumulate<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
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

/// An element of K: a finite combination of the basis classes `a_λ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ClassWire", into = "ClassWire")]
pub struct KClass {
    coeffs: BTreeMap<Weight, Scalar>,
}

impl KClass {
    pub fn zero() -> Self {
        KClass::default()
    }

    /// `1 = a_∅`.
    pub fn one() -> Self {
        KClass::basis(Weight::empty())
    }

    pub fn basis(w: Weight) -> Self {
        let mut x = KClass::zero();
        x.add_term(w, Scalar::one());
        x
    }

    pub fn constant(c: i64) -> Self {
        KClass::one().scale(&int(c))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, Scalar)>) -> Self {
        let mut x = KClass::zero();
        for (w, c) in terms {
            x.add_term(w, c);
        }
        x
    }

    /// Parses terms such as `"bw:2, b:-1, :3"` (empty word allowed).
    pub fn parse_terms(s: &str) -> Result<Self> {
        let mut x = KClass::zero();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (word, coeff) = part.split_once(':').unwrap_or((part, "1"));
            x.add_term(word.trim().parse()?, scalar::parse(coeff)?);
        }
        Ok(x)
    }

    pub fn add_term(&mut self, w: Weight, c: Scalar) {
        accumulate(&mut self.coeffs, w, c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, w: &Weight) -> Scalar {
        self.coeffs.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Weight::len).max()
    }

    /// The part supported on words of length `d`.
    pub fn part_of_degree(&self, d: usize) -> KClass {
        KClass::from_terms(self.terms().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Scalar) -> KClass {
        KClass::from_terms(self.terms().map(|(w, v)| (w.clone(), v * c)))
    }

    pub fn add(&self, other: &KClass) -> KClass {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KClass) -> KClass {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Weights in canonical order with their coefficients, for display.
    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.coeffs.iter().enumerate() {
            let neg = c < &Scalar::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            out.push_str(match (k, neg) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            let unit = abs.is_one();
            if w.is_empty() {
                out.push_str(&scalar::pretty(&abs));
            } else {
                if !unit {
                    out.push_str(&scalar::pretty(&abs));
                }
                out.push_str("a_");
                out.push_str(&w.symbols());
            }
        }
        out
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// A random class with up to four terms of degree at most `max_deg`.
pub fn random_class<R: Rng>(rng: &mut R, max_deg: usize) -> KClass {
    let words = Weight::all_up_to(max_deg);
    let mut x = KClass::zero();
    for _ in 0..rng.gen_range(1..=4) {
        let w = words[rng.gen_range(0..words.len())].clone();
        x.add_term(w, int(rng.gen_range(-3..=3)));
    }
    x
}

/// An element of K ⊗ K.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TensorWire", into = "TensorWire")]
pub struct KTensorClass {
    coeffs: BTreeMap<(Weight, Weight), Scalar>,
}

impl KTensorClass {
    pub fn zero() -> Self {
        KTensorClass::default()
    }

    pub fn basis(l: Weight, r: Weight) -> Self {
        let mut t = KTensorClass::zero();
        t.add_term(l, r, Scalar::one());
        t
    }

    /// `x ⊗ y`.
    pub fn outer(x: &KClass, y: &KClass) -> Self {
        let mut t = KTensorClass::zero();
        for (l, a) in x.terms() {
            for (r, b) in y.terms() {
                t.add_term(l.clone(), r.clone(), a * b);
            }
        }
        t
    }

    pub fn add_term(&mut self, l: Weight, r: Weight, c: Scalar) {
        accumulate(&mut self.coeffs, (l, r), c);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &Weight, &Scalar)> {
        self.coeffs.iter().map(|((l, r), c)| (l, r, c))
    }

    pub fn coeff(&self, l: &Weight, r: &Weight) -> Scalar {
        self.coeffs.get(&(l.clone(), r.clone())).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> KTensorClass {
        let mut out = KTensorClass::zero();
        for (l, r, v) in self.terms() {
            out.add_term(l.clone(), r.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &KTensorClass) -> KTensorClass {
        let mut out = self.clone();
        for (l, r, c) in other.terms() {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &KTensorClass) -> KTensorClass {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn pretty(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let sym = |w: &Weight| if w.is_empty() { "1".to_string() } else { format!("a_{}", w.symbols()) };
        self.terms()
            .map(|(l, r, c)| format!("{}·{}⊗{}", scalar::pretty(c), sym(l), sym(r)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for KTensorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassWire {
    terms: Vec<TermWire>,
}

#[derive(Serialize, Deserialize)]
struct TermWire {
    word: Weight,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct TensorWire {
    terms: Vec<TensorTermWire>,
}

#[derive(Serialize, Deserialize)]
struct TensorTermWire {
    left: Weight,
    right: Weight,
    coeff: String,
}

impl TryFrom<ClassWire> for KClass {
    type Error = Error;
    fn try_from(w: ClassWire) -> Result<Self> {
        let terms = w.terms.into_iter().map(|t| Ok((t.word, scalar::parse(&t.coeff)?))).collect::<Result<Vec<_>>>()?;
        Ok(KClass::from_terms(terms))
    }
}

impl From<KClass> for ClassWire {
    fn from(x: KClass) -> Self {
        ClassWire {
            terms: x.coeffs.into_iter().map(|(word, c)| TermWire { word, coeff: scalar::format(&c) }).collect(),
        }
    }
}

impl TryFrom<TensorWire> for KTensorClass {
    type Error = Error;
    fn try_from(w: TensorWire) -> Result<Self> {
        let mut t = KTensorClass::zero();
        for term in w.terms {
            t.add_term(term.left, term.right, scalar::parse(&term.coeff)?);
        }
        Ok(t)
    }
}

impl From<KTensorClass> for TensorWire {
    fn from(t: KTensorClass) -> Self {
        TensorWire {
            terms: t
                .coeffs
                .into_iter()
                .map(|((left, right), c)| TensorTermWire { left, right, coeff: scalar::format(&c) })
                .collect(),
        }
    }
}
