//! Characteristic words: the least token sequence over all reverse paths from a
//! state back to the initial state.

use std::fmt;

use crate::automaton::{Automaton, DEAD};
use crate::error::Result;
use crate::rank::RankTable;
use crate::State;

/// One reverse step `(rank of source, symbol, finality of source)`.
///
/// Field order gives the token order: rank, then symbol, then finality with 0 < 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Token {
    pub rank: usize,
    pub symbol: usize,
    pub finality: u8,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rank)?;
        if self.symbol < 26 {
            write!(f, "{}", (b'a' + self.symbol as u8) as char)?;
        } else {
            write!(f, "[{}]", self.symbol)?;
        }
        write!(f, "{}", self.finality)
    }
}

/// Token sequence compared lexicographically, a strict prefix being smaller.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharWord(pub Vec<Token>);

impl CharWord {
    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn prepend(token: Token, rest: &CharWord) -> CharWord {
        let mut v = Vec::with_capacity(rest.0.len() + 1);
        v.push(token);
        v.extend_from_slice(&rest.0);
        CharWord(v)
    }
}

impl fmt::Display for CharWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| t.fmt(f))
    }
}

/// Characteristic words of every state, indexed by state (Ω's entry is empty and meaningless).
///
/// Predecessors always have strictly larger rank, so sweeping ranks downward
/// from the initial state finalises each word before it is extended.
pub fn characteristic_words(aut: &Automaton, ranks: &RankTable) -> Vec<CharWord> {
    let mut best: Vec<Option<CharWord>> = vec![None; aut.n() + 1];
    best[aut.initial()] = Some(CharWord::default());
    for class in ranks.classes().iter().rev() {
        for &s in class {
            let word = best[s]
                .clone()
                .expect("trim automaton: every state is reached");
            let finality = aut.is_final(s) as u8;
            let rank = ranks.of(s);
            for symbol in 0..aut.k() {
                let t = aut.next(s, symbol);
                if t == DEAD {
                    continue;
                }
                let token = Token {
                    rank,
                    symbol,
                    finality,
                };
                let better = match &best[t] {
                    None => true,
                    Some(cur) => (token, &word.0[..]) < (cur.0[0], &cur.0[1..]),
                };
                if better {
                    best[t] = Some(CharWord::prepend(token, &word));
                }
            }
        }
    }
    best.into_iter().map(Option::unwrap_or_default).collect()
}

/// Characteristic word of a single state.
pub fn characteristic_word(aut: &Automaton, ranks: &RankTable, s: State) -> Result<CharWord> {
    if s == DEAD || s > aut.n() {
        return Err(crate::Error::InvalidAutomaton(format!(
            "state {s} is not a useful state"
        )));
    }
    Ok(characteristic_words(aut, ranks).swap_remove(s))
}
