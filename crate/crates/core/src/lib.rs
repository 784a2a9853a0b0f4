//! Trim acyclic deterministic finite automata: canonical strings, minimization,
//! exact isomorph-free generation and counting.

pub mod automaton;
pub mod canonical;
pub mod error;
pub mod formula;
pub mod generate;
pub mod json;
pub mod oracle;
pub mod rank;
pub mod samples;

/// State index; `0` is always the dead state.
pub type State = usize;

pub use automaton::{isomorphic, Automaton, Word, DEAD};
pub use canonical::{decode, encode, validate, CanonicalString, CharWord, Mode};
pub use error::{Condition, Error, Result, Violation};
pub use generate::Generator;
pub use rank::{compute_ranks, RankTable};
