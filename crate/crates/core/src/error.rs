use std::fmt;

use crate::State;

/// Conditions a canonical string is checked against, in checking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// Dead-state and pre-dead-state tuples.
    N0,
    /// Finality bits are 0 or 1.
    N1,
    /// Rank structure.
    N2,
    /// Every non-initial state occurs as a transition target.
    N3,
    /// Targets lie in strictly lower ranks.
    N4,
    /// Every state of positive rank reaches the rank immediately below.
    N5,
    /// Strict tuple ascent within each rank (minimal mode).
    N6,
    /// Non-decreasing tuples within each rank, equal runs ordered by characteristic word.
    N6Relaxed,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::N0 => "N0",
            Condition::N1 => "N1",
            Condition::N2 => "N2",
            Condition::N3 => "N3",
            Condition::N4 => "N4",
            Condition::N5 => "N5",
            Condition::N6 => "N6",
            Condition::N6Relaxed => "N6'",
        };
        f.write_str(s)
    }
}

/// First violated condition of a canonical string and the flat-string position where it shows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub position: usize,
}

impl Violation {
    pub(crate) fn new(condition: Condition, position: usize) -> Self {
        Violation {
            condition,
            position,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violation {} {}", self.condition, self.position)
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("automaton has a cycle through state {state}")]
    Cyclic { state: State },
    #[error("automaton is not trim: state {state} is not useful or not reachable")]
    NotTrim { state: State },
    #[error("symbol index {symbol} is outside the alphabet of size {k}")]
    BadSymbol { symbol: usize, k: usize },
    #[error("automaton is not minimal")]
    NotMinimal,
    #[error("states {0} and {1} have equal tuples and equal characteristic words")]
    Incomparable(State, State),
    #[error("invalid canonical string: {0}")]
    InvalidString(Violation),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("no closed formula for n = {n}")]
    UnsupportedN { n: usize },
    #[error("search space of {needed} labeled automata exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
