//! State ranks: the length of the longest word leading from a state to a final state.

use crate::automaton::{Automaton, DEAD};
use crate::error::{Error, Result};
use crate::State;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    /// Indexed by state; Ω carries no rank.
    rank: Vec<Option<usize>>,
    classes: Vec<Vec<State>>,
    predead: Vec<State>,
}

impl RankTable {
    /// Rank of `s`; `None` for Ω.
    pub fn rank(&self, s: State) -> Option<usize> {
        self.rank[s]
    }

    /// Rank of a useful state.
    ///
    /// Panics on Ω.
    pub(crate) fn of(&self, s: State) -> usize {
        self.rank[s].expect("the dead state has no rank")
    }

    /// Rank of the initial state, the largest rank in the automaton.
    pub fn diameter(&self) -> usize {
        self.classes.len() - 1
    }

    /// `classes()[l]` holds the states of rank `l` in increasing state order.
    pub fn classes(&self) -> &[Vec<State>] {
        &self.classes
    }

    pub fn class(&self, l: usize) -> &[State] {
        &self.classes[l]
    }

    /// States whose transitions all lead to Ω.
    pub fn predead(&self) -> &[State] {
        &self.predead
    }
}

/// Longest-path ranks without any reachability requirement.
///
/// Fails with `Cyclic` if a useful state lies on a cycle and `NotTrim` if some
/// state cannot reach a final state.
pub(crate) fn longest_paths(aut: &Automaton) -> Result<Vec<Option<usize>>> {
    if let Some(state) = aut.find_cycle() {
        return Err(Error::Cyclic { state });
    }
    let mut memo: Vec<Option<Option<usize>>> = vec![None; aut.n() + 1];
    memo[DEAD] = Some(None);
    fn visit(aut: &Automaton, s: State, memo: &mut Vec<Option<Option<usize>>>) -> Option<usize> {
        if let Some(r) = memo[s] {
            return r;
        }
        let mut best = aut.is_final(s).then_some(0);
        for a in 0..aut.k() {
            let t = aut.next(s, a);
            if let Some(r) = visit(aut, t, memo) {
                best = Some(best.map_or(r + 1, |b| b.max(r + 1)));
            }
        }
        memo[s] = Some(best);
        best
    }
    let mut ranks = vec![None; aut.n() + 1];
    for s in aut.states() {
        match visit(aut, s, &mut memo) {
            Some(r) => ranks[s] = Some(r),
            None => return Err(Error::NotTrim { state: s }),
        }
    }
    Ok(ranks)
}

/// Ranks, rank classes and pre-dead states of a trim acyclic automaton.
pub fn compute_ranks(aut: &Automaton) -> Result<RankTable> {
    let rank = longest_paths(aut)?;
    let reachable = aut.reachable();
    if let Some(state) = aut.states().find(|&s| !reachable[s]) {
        return Err(Error::NotTrim { state });
    }
    let diameter = rank[aut.initial()].expect("useful state has a rank");
    let mut classes = vec![Vec::new(); diameter + 1];
    for s in aut.states() {
        // every state is reachable, so none can exceed the initial state's rank
        classes[rank[s].unwrap()].push(s);
    }
    let predead = aut.states().filter(|&s| aut.is_predead(s)).collect();
    Ok(RankTable {
        rank,
        classes,
        predead,
    })
}
