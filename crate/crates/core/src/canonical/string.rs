use std::fmt;
use std::str::FromStr;

use crate::automaton::Automaton;
use crate::error::{Error, Result};
use crate::State;

/// Sequence of `n + 1` state tuples `(targets..., finality)`, tuple 0 being Ω.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalString {
    // `flat` first so the derived order is the lexicographic order of flat strings
    // whenever n and k agree.
    flat: Vec<usize>,
    n: usize,
    k: usize,
}

impl CanonicalString {
    /// Wraps a flat string of `(k + 1)(n + 1)` values, checking shape and value range only.
    pub fn from_flat(n: usize, k: usize, flat: Vec<usize>) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Parse(
                "need at least one state and one symbol".into(),
            ));
        }
        if flat.len() != (n + 1) * (k + 1) {
            return Err(Error::Parse(format!(
                "expected {} values, got {}",
                (n + 1) * (k + 1),
                flat.len()
            )));
        }
        if let Some(pos) = flat.iter().position(|&v| v > n) {
            return Err(Error::Parse(format!(
                "value {} at position {pos} exceeds {n}",
                flat[pos]
            )));
        }
        Ok(CanonicalString { flat, n, k })
    }

    pub(crate) fn from_flat_unchecked(n: usize, k: usize, flat: Vec<usize>) -> Self {
        debug_assert_eq!(flat.len(), (n + 1) * (k + 1));
        CanonicalString { flat, n, k }
    }

    pub fn from_tuples(tuples: &[Vec<usize>]) -> Result<Self> {
        if tuples.len() < 2 {
            return Err(Error::Parse("need at least two tuples".into()));
        }
        let width = tuples[0].len();
        if width < 2 {
            return Err(Error::Parse(
                "tuples need at least one target and a finality bit".into(),
            ));
        }
        if let Some(i) = tuples.iter().position(|t| t.len() != width) {
            return Err(Error::Parse(format!(
                "tuple {i} has width {}, expected {width}",
                tuples[i].len()
            )));
        }
        Self::from_flat(tuples.len() - 1, width - 1, tuples.concat())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn flat(&self) -> &[usize] {
        &self.flat
    }

    /// The whole tuple of state `i`, finality last.
    pub fn tuple(&self, i: State) -> &[usize] {
        let w = self.k + 1;
        &self.flat[i * w..(i + 1) * w]
    }

    pub fn targets(&self, i: State) -> &[usize] {
        &self.tuple(i)[..self.k]
    }

    pub fn finality(&self, i: State) -> usize {
        self.tuple(i)[self.k]
    }

    /// Flat position of the first value of tuple `i`.
    pub fn tuple_start(&self, i: State) -> usize {
        i * (self.k + 1)
    }

    pub fn tuples(&self) -> impl Iterator<Item = &[usize]> {
        self.flat.chunks(self.k + 1)
    }

    /// Reads the string as an automaton with state `i` as tuple `i` and initial state `n`,
    /// without checking the canonical-form conditions.
    pub(crate) fn to_automaton_unchecked(&self) -> Result<Automaton> {
        let rows: Vec<Vec<State>> = (0..=self.n).map(|i| self.targets(i).to_vec()).collect();
        let finals: Vec<State> = (1..=self.n).filter(|&i| self.finality(i) == 1).collect();
        Automaton::new(self.n, self.k, &rows, self.n, &finals)
    }
}

impl fmt::Display for CanonicalString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.tuples().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in t.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl FromStr for CanonicalString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tuples: Vec<Vec<usize>> =
            serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_tuples(&tuples)
    }
}
