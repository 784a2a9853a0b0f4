//! Complete deterministic automata over `n` useful states plus the dead state.
//!
//! States are numbered `0..=n`; state `0` is the dead state Ω, which loops on
//! every symbol. Symbols are indices `0..k` in alphabet order.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::rank::{compute_ranks, RankTable};
use crate::State;

/// The dead state.
pub const DEAD: State = 0;

/// Word over symbol indices.
pub type Word = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automaton {
    n: usize,
    k: usize,
    /// Row-major `(n + 1) x k` transition table; row 0 belongs to Ω.
    delta: Vec<State>,
    initial: State,
    finals: Vec<bool>,
}

impl Automaton {
    /// Builds an automaton from its transition rows (one per state `0..=n`),
    /// checking every structural invariant.
    pub fn new(
        n: usize,
        k: usize,
        rows: &[Vec<State>],
        initial: State,
        finals: &[State],
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidAutomaton(msg));
        if n == 0 {
            return bad("at least one useful state is required".into());
        }
        if k == 0 {
            return bad("alphabet must be non-empty".into());
        }
        if rows.len() != n + 1 {
            return bad(format!(
                "expected {} transition rows, got {}",
                n + 1,
                rows.len()
            ));
        }
        let mut delta = Vec::with_capacity((n + 1) * k);
        for (s, row) in rows.iter().enumerate() {
            if row.len() != k {
                return bad(format!("row {s} has {} entries, expected {k}", row.len()));
            }
            for &t in row {
                if t > n {
                    return bad(format!("row {s} targets state {t} outside [0,{n}]"));
                }
                if s == DEAD && t != DEAD {
                    return bad("the dead state must loop on every symbol".into());
                }
            }
            delta.extend_from_slice(row);
        }
        if initial == DEAD || initial > n {
            return bad(format!("initial state {initial} outside [1,{n}]"));
        }
        if finals.is_empty() {
            return bad("set of final states is empty".into());
        }
        let mut is_final = vec![false; n + 1];
        for &f in finals {
            if f == DEAD || f > n {
                return bad(format!("final state {f} outside [1,{n}]"));
            }
            is_final[f] = true;
        }
        Ok(Automaton {
            n,
            k,
            delta,
            initial,
            finals: is_final,
        })
    }

    /// Builds an automaton whose invariants the caller has already established.
    pub(crate) fn from_parts(
        n: usize,
        k: usize,
        delta: Vec<State>,
        initial: State,
        finals: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(delta.len(), (n + 1) * k);
        debug_assert_eq!(finals.len(), n + 1);
        debug_assert!(delta[..k].iter().all(|&t| t == DEAD));
        Automaton {
            n,
            k,
            delta,
            initial,
            finals,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    /// Useful states `1..=n`.
    pub fn states(&self) -> std::ops::RangeInclusive<State> {
        1..=self.n
    }

    #[inline]
    pub fn next(&self, s: State, symbol: usize) -> State {
        self.delta[s * self.k + symbol]
    }

    #[inline]
    pub fn row(&self, s: State) -> &[State] {
        &self.delta[s * self.k..(s + 1) * self.k]
    }

    #[inline]
    pub fn is_final(&self, s: State) -> bool {
        self.finals[s]
    }

    pub fn finals(&self) -> Vec<State> {
        self.states().filter(|&s| self.finals[s]).collect()
    }

    /// All transition rows, including Ω's.
    pub fn rows(&self) -> Vec<Vec<State>> {
        self.delta.chunks(self.k).map(<[State]>::to_vec).collect()
    }

    /// A state whose every transition goes to Ω.
    pub fn is_predead(&self, s: State) -> bool {
        s != DEAD && self.row(s).iter().all(|&t| t == DEAD)
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Some useful state lying on a cycle, if any.
    pub(crate) fn find_cycle(&self) -> Option<State> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut color = vec![0u8; self.n + 1];
        for root in self.states() {
            if color[root] != 0 {
                continue;
            }
            let mut stack = vec![(root, 0usize)];
            color[root] = 1;
            while let Some(&mut (s, ref mut sym)) = stack.last_mut() {
                if *sym == self.k {
                    color[s] = 2;
                    stack.pop();
                    continue;
                }
                let t = self.next(s, *sym);
                *sym += 1;
                if t == DEAD {
                    continue;
                }
                match color[t] {
                    0 => {
                        color[t] = 1;
                        stack.push((t, 0));
                    }
                    1 => return Some(t),
                    _ => {}
                }
            }
        }
        None
    }

    /// Useful states reachable from the initial state.
    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.n + 1];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(s) = stack.pop() {
            for &t in self.row(s) {
                if t != DEAD && !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn is_initially_connected(&self) -> bool {
        self.reachable()[1..].iter().all(|&r| r)
    }

    /// States from which a final state can be reached.
    pub(crate) fn useful(&self) -> Vec<bool> {
        let mut useful = self.finals.clone();
        // reverse fixpoint; n is small so the quadratic sweep is fine
        let mut changed = true;
        while changed {
            changed = false;
            for s in self.states() {
                if !useful[s] && self.row(s).iter().any(|&t| t != DEAD && useful[t]) {
                    useful[s] = true;
                    changed = true;
                }
            }
        }
        useful
    }

    pub fn is_trim(&self) -> bool {
        self.is_initially_connected() && self.useful()[1..].iter().all(|&u| u)
    }

    fn check_word(&self, word: &[usize]) -> Result<()> {
        match word.iter().find(|&&a| a >= self.k) {
            Some(&symbol) => Err(Error::BadSymbol { symbol, k: self.k }),
            None => Ok(()),
        }
    }

    /// State reached from `s` by reading `word`.
    pub fn walk(&self, s: State, word: &[usize]) -> Result<State> {
        self.check_word(word)?;
        Ok(word.iter().fold(s, |q, &a| self.next(q, a)))
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        let q = self.walk(self.initial, word)?;
        Ok(self.finals[q])
    }

    /// Right language of `s`. Requires acyclicity, otherwise the language may be infinite.
    pub fn right_language(&self, s: State) -> Result<BTreeSet<Word>> {
        if let Some(state) = self.find_cycle() {
            return Err(Error::Cyclic { state });
        }
        let mut out = BTreeSet::new();
        let mut prefix = Vec::new();
        self.collect_words(s, &mut prefix, &mut out);
        Ok(out)
    }

    fn collect_words(&self, s: State, prefix: &mut Word, out: &mut BTreeSet<Word>) {
        if s == DEAD {
            return;
        }
        if self.finals[s] {
            out.insert(prefix.clone());
        }
        for a in 0..self.k {
            prefix.push(a);
            self.collect_words(self.next(s, a), prefix, out);
            prefix.pop();
        }
    }

    /// The full (finite) language of an acyclic automaton.
    pub fn language(&self) -> Result<BTreeSet<Word>> {
        self.right_language(self.initial)
    }

    /// Same finality and identical transition rows.
    pub fn mergeable(&self, s: State, t: State) -> bool {
        self.finals[s] == self.finals[t] && self.row(s) == self.row(t)
    }

    /// No two distinct useful states are mergeable.
    pub fn is_minimal(&self) -> bool {
        let mut seen = HashMap::with_capacity(self.n);
        self.states()
            .all(|s| seen.insert((self.row(s), self.finals[s]), s).is_none())
    }

    /// Merges equivalent states rank by rank, lowest rank first.
    ///
    /// Surviving states keep their relative order; the result has exactly one
    /// pre-dead state.
    pub fn minimize(&self) -> Result<Automaton> {
        let ranks = compute_ranks(self)?;
        let mut rep: Vec<State> = (0..=self.n).collect();
        let mut buf = vec![DEAD; self.k];
        for class in ranks.classes() {
            let mut groups: HashMap<(Vec<State>, bool), State> = HashMap::new();
            for &s in class {
                for (a, slot) in buf.iter_mut().enumerate() {
                    *slot = rep[self.next(s, a)];
                }
                let leader = *groups.entry((buf.clone(), self.finals[s])).or_insert(s);
                rep[s] = leader;
            }
        }
        let mut fresh = vec![DEAD; self.n + 1];
        let mut kept = Vec::new();
        for s in self.states() {
            if rep[s] == s {
                kept.push(s);
                fresh[s] = kept.len();
            }
        }
        let n = kept.len();
        let mut delta = vec![DEAD; (n + 1) * self.k];
        let mut finals = vec![false; n + 1];
        for &s in &kept {
            let ns = fresh[s];
            finals[ns] = self.finals[s];
            for a in 0..self.k {
                delta[ns * self.k + a] = fresh[rep[self.next(s, a)]];
            }
        }
        let initial = fresh[rep[self.initial]];
        Ok(Automaton::from_parts(n, self.k, delta, initial, finals))
    }

    /// Renames states through `perm`, a permutation of `0..=n` fixing 0.
    pub fn relabel(&self, perm: &[State]) -> Result<Automaton> {
        let valid = perm.len() == self.n + 1 && perm[0] == DEAD && {
            let mut seen = vec![false; self.n + 1];
            perm.iter()
                .all(|&p| p <= self.n && !std::mem::replace(&mut seen[p], true))
        };
        if !valid {
            return Err(Error::InvalidAutomaton(
                "relabeling is not a permutation fixing the dead state".into(),
            ));
        }
        let mut delta = vec![DEAD; self.delta.len()];
        let mut finals = vec![false; self.n + 1];
        for s in self.states() {
            finals[perm[s]] = self.finals[s];
            for a in 0..self.k {
                delta[perm[s] * self.k + a] = perm[self.next(s, a)];
            }
        }
        Ok(Automaton::from_parts(
            self.n,
            self.k,
            delta,
            perm[self.initial],
            finals,
        ))
    }

    /// Rank table of this automaton; see [`compute_ranks`].
    pub fn ranks(&self) -> Result<RankTable> {
        compute_ranks(self)
    }
}

/// Isomorphism of trim acyclic automata under the positional symbol correspondence.
pub fn isomorphic(a: &Automaton, b: &Automaton) -> Result<bool> {
    if a.n() != b.n() || a.k() != b.k() {
        return Ok(false);
    }
    use crate::canonical::{encode, Mode};
    Ok(encode(a, Mode::Adfa)? == encode(b, Mode::Adfa)?)
}
