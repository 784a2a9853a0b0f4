//! Canonical string representation of trim acyclic automata.
//!
//! States are numbered by increasing rank. Inside a rank they are ordered by
//! their renamed transition tuple and, for ties between equivalent states, by
//! their characteristic word.

mod charword;
mod numbering;
mod string;
mod validate;

pub use charword::{characteristic_word, characteristic_words, CharWord, Token};
pub use numbering::{canonical_numbering, compare_states, encode, Numbering};
pub use string::CanonicalString;
pub use validate::{decode, validate};

/// Which class of automata a canonical string describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// All trim acyclic automata; equal tuples allowed within a rank.
    Adfa,
    /// Minimal ones only; tuples strictly ascend within a rank.
    Madfa,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Adfa => "adfa",
            Mode::Madfa => "madfa",
        })
    }
}
