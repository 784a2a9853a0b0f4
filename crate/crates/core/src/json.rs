//! JSON form of an automaton:
//! `{"n", "k", "alphabet"?, "initial", "finals", "delta"}` with `n + 1` rows in `delta`.

use serde::{Deserialize, Serialize};

use crate::automaton::Automaton;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub n: usize,
    pub k: usize,
    /// Display names of the symbols, in alphabet order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    pub initial: usize,
    pub finals: Vec<usize>,
    pub delta: Vec<Vec<usize>>,
}

impl AutomatonJson {
    pub fn from_automaton(aut: &Automaton, alphabet: Option<Vec<String>>) -> Self {
        AutomatonJson {
            n: aut.n(),
            k: aut.k(),
            alphabet,
            initial: aut.initial(),
            finals: aut.finals(),
            delta: aut.rows(),
        }
    }

    pub fn to_automaton(&self) -> Result<Automaton> {
        if let Some(names) = &self.alphabet {
            if names.len() != self.k {
                return Err(Error::InvalidAutomaton(format!(
                    "alphabet has {} names for {} symbols",
                    names.len(),
                    self.k
                )));
            }
        }
        Automaton::new(self.n, self.k, &self.delta, self.initial, &self.finals)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
