use std::cmp::Ordering;

use super::charword::{characteristic_words, CharWord};
use super::string::CanonicalString;
use super::Mode;
use crate::automaton::{Automaton, DEAD};
use crate::error::{Error, Result};
use crate::rank::compute_ranks;
use crate::State;

/// Canonical state numbering: Ω is 0 and the useful states get `1..=n`
/// by increasing rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numbering {
    phi: Vec<State>,
    order: Vec<State>,
}

impl Numbering {
    /// Number assigned to state `s`.
    pub fn of(&self, s: State) -> State {
        self.phi[s]
    }

    /// State numbered `i`.
    pub fn state(&self, i: State) -> State {
        self.order[i]
    }

    pub fn as_slice(&self) -> &[State] {
        &self.phi
    }
}

/// Tuple of `s` with targets renamed through a (partial) numbering.
fn renamed_tuple(aut: &Automaton, phi: &[State], s: State) -> Vec<usize> {
    let mut tuple: Vec<usize> = aut.row(s).iter().map(|&t| phi[t]).collect();
    tuple.push(aut.is_final(s) as usize);
    tuple
}

/// Orders two states of the same rank: by renamed tuple, then by characteristic word.
///
/// `phi` must already number every state of lower rank, and `words` holds the
/// characteristic words indexed by state.
pub fn compare_states(
    aut: &Automaton,
    phi: &[State],
    words: &[CharWord],
    s: State,
    t: State,
) -> Result<Ordering> {
    let by_tuple = renamed_tuple(aut, phi, s).cmp(&renamed_tuple(aut, phi, t));
    match by_tuple.then_with(|| words[s].cmp(&words[t])) {
        Ordering::Equal if s != t => Err(Error::Incomparable(s, t)),
        ord => Ok(ord),
    }
}

pub fn canonical_numbering(aut: &Automaton, mode: Mode) -> Result<Numbering> {
    let ranks = compute_ranks(aut)?;
    if mode == Mode::Madfa && !aut.is_minimal() {
        return Err(Error::NotMinimal);
    }
    let words = characteristic_words(aut, &ranks);
    let mut phi = vec![DEAD; aut.n() + 1];
    let mut order = vec![DEAD];
    for class in ranks.classes() {
        let mut keyed: Vec<(Vec<usize>, &CharWord, State)> = class
            .iter()
            .map(|&s| (renamed_tuple(aut, &phi, s), &words[s], s))
            .collect();
        keyed.sort();
        if let Some(w) = keyed
            .windows(2)
            .find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1)
        {
            return Err(Error::Incomparable(w[0].2, w[1].2));
        }
        for (_, _, s) in keyed {
            phi[s] = order.len();
            order.push(s);
        }
    }
    Ok(Numbering { phi, order })
}

/// Canonical string of a trim acyclic automaton.
pub fn encode(aut: &Automaton, mode: Mode) -> Result<CanonicalString> {
    let numbering = canonical_numbering(aut, mode)?;
    let k = aut.k();
    let mut flat = Vec::with_capacity((aut.n() + 1) * (k + 1));
    flat.extend(std::iter::repeat_n(0, k + 1));
    for i in aut.states() {
        let s = numbering.state(i);
        flat.extend(aut.row(s).iter().map(|&t| numbering.of(t)));
        flat.push(aut.is_final(s) as usize);
    }
    Ok(CanonicalString::from_flat_unchecked(aut.n(), k, flat))
}
