use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The two letters of a weight. `Black` (●, `'b'`) sorts before `White` (○, `'w'`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Black,
    White,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::Black => Letter::White,
            Letter::White => Letter::Black,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Black => 'b',
            Letter::White => 'w',
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::Black => '●',
            Letter::White => '○',
        }
    }

    pub fn from_char(c: char) -> Result<Letter> {
        match c {
            'b' | '●' => Ok(Letter::Black),
            'w' | '○' => Ok(Letter::White),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

/// A word over {●, ○}.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Weight(Vec<Letter>);

impl Weight {
    pub fn new(letters: Vec<Letter>) -> Self {
        Weight(letters)
    }

    pub fn empty() -> Self {
        Weight(Vec::new())
    }

    /// The word with `n` copies of `letter`.
    pub fn constant(letter: Letter, n: usize) -> Self {
        Weight(vec![letter; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Weight(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn slice(&self, lo: usize, hi: usize) -> Weight {
        Weight(self.0[lo..hi].to_vec())
    }

    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    /// Swaps ● and ○ in every position.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().map(|l| l.swap()).collect())
    }

    /// Pretty form using ● and ○; the empty word renders as ∅.
    pub fn symbols(&self) -> String {
        if self.0.is_empty() {
            return "∅".to_string();
        }
        self.0.iter().map(|l| l.symbol()).collect()
    }

    /// All `2^n` words of length `n`, in lexicographic order.
    pub fn all_of_length(n: usize) -> Vec<Weight> {
        let mut out = vec![Weight::empty()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    [Letter::Black, Letter::White].map(|l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `n`, shortest first.
    pub fn all_up_to(n: usize) -> Vec<Weight> {
        (0..=n).flat_map(Weight::all_of_length).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars().map(Letter::from_char).collect::<Result<Vec<_>>>().map(Weight)
    }
}

impl TryFrom<String> for Weight {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Weight> for String {
    fn from(w: Weight) -> String {
        w.to_string()
    }
}

/// Shorthand for parsing a `b`/`w` string; panics on invalid input.
pub fn w(s: &str) -> Weight {
    s.parse().expect("weight literal over b/w")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let x: Weight = "bwb".parse().unwrap();
        assert_eq!(x.to_string(), "bwb");
        assert_eq!(x.symbols(), "●○●");
        assert_eq!(Weight::empty().to_string(), "");
        assert!("bx".parse::<Weight>().is_err());
        assert_eq!("●○".parse::<Weight>().unwrap(), w("bw"));
    }

    #[test]
    fn dual_and_reverse() {
        assert_eq!(w("bw").dual(), w("wb"));
        assert_eq!(w("bbw").reversed(), w("wbb"));
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(Weight::all_of_length(3).len(), 8);
        assert_eq!(Weight::all_up_to(2).len(), 7);
        assert!(w("bb") < w("bw") && w("b") < w("w"));
    }
}
