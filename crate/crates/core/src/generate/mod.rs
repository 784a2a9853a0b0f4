//! Exact generation of canonical strings by backtracking.
//!
//! Tuples are chosen state by state, each in lexicographic order, so complete
//! strings come out in strictly increasing lexicographic order. A state opens
//! a new rank as soon as its tuple refers to the rank just below it; at that
//! moment the previous rank is closed and the pending characteristic-word
//! constraints are checked against it (see [`constraints`]).

pub mod constraints;
mod filtered;

use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::canonical::{CanonicalString, Mode};
use crate::error::{Error, Result};
use crate::State;
use constraints::{resolve_rank, ConstraintList, ProbList, RefMap};
pub use filtered::generate_filtered;

/// Generator of all canonical strings with `n` states over `k` symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generator {
    n: usize,
    k: usize,
    mode: Mode,
}

/// A contiguous slice of the search tree, identified by the fixed tuples of
/// the first free states (state 2 onward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    prefixes: Vec<Vec<usize>>,
}

impl Partition {
    pub fn len(&self) -> usize {
        self.prefixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefixes.is_empty()
    }
}

impl Generator {
    pub fn new(n: usize, k: usize, mode: Mode) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidAutomaton(
                "generation needs at least one state and one symbol".into(),
            ));
        }
        Ok(Generator { n, k, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Feeds every flat canonical string to `sink` in increasing order until the sink breaks.
    pub fn for_each<F>(&self, mut sink: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        Search::new(self).descend(2, usize::MAX, &mut sink)
    }

    /// All canonical strings, in increasing order.
    pub fn strings(&self) -> Vec<CanonicalString> {
        let mut out = Vec::new();
        let _ = self.for_each(|flat| {
            out.push(self.wrap(flat));
            ControlFlow::Continue(())
        });
        out
    }

    fn wrap(&self, flat: &[usize]) -> CanonicalString {
        CanonicalString::from_flat_unchecked(self.n, self.k, flat.to_vec())
    }

    /// Number of canonical strings, counted in parallel over search-tree prefixes.
    pub fn count(&self) -> u64 {
        let depth = self.n.saturating_sub(2).min(3);
        self.prefixes(depth)
            .par_iter()
            .map(|p| {
                let mut count = 0u64;
                let _ = self.run_prefix(p, &mut |_: &[usize]| {
                    count += 1;
                    ControlFlow::Continue(())
                });
                count
            })
            .sum()
    }

    /// Tuples of states `2..2 + depth` of every admissible prefix, in lexicographic order.
    fn prefixes(&self, depth: usize) -> Vec<Vec<usize>> {
        let w = self.k + 1;
        let stop = 2 + depth;
        let mut out = Vec::new();
        let _ = Search::new(self).descend(2, stop, &mut |flat: &[usize]| {
            out.push(flat[2 * w..].to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    /// Splits the search tree into at most `parts` non-empty partitions.
    ///
    /// Partitions cover disjoint, consecutive lexicographic intervals; running
    /// them in order reproduces the full ordered stream.
    pub fn partitions(&self, parts: usize) -> Vec<Partition> {
        let parts = parts.max(1);
        let mut depth = 0;
        let mut prefixes = self.prefixes(depth);
        while prefixes.len() < 4 * parts && depth + 2 < self.n {
            depth += 1;
            prefixes = self.prefixes(depth);
        }
        let per = prefixes.len().div_ceil(parts).max(1);
        prefixes
            .chunks(per)
            .map(|c| Partition {
                prefixes: c.to_vec(),
            })
            .collect()
    }

    /// Runs one partition, feeding its strings to `sink` in increasing order.
    pub fn run_partition<F>(&self, partition: &Partition, mut sink: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for p in &partition.prefixes {
            self.run_prefix(p, &mut sink)?;
        }
        ControlFlow::Continue(())
    }

    fn run_prefix<F>(&self, prefix: &[usize], sink: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let mut search = Search::new(self);
        let w = self.k + 1;
        let mut i = 2;
        for tuple in prefix.chunks(w) {
            search.flat[i * w..(i + 1) * w].copy_from_slice(tuple);
            let mut closing = None;
            let step = search
                .admit(i, &mut closing)
                .expect("prefix produced by the same search");
            search.place(i, step, &mut closing);
            i += 1;
        }
        search.descend(i, usize::MAX, sink)
    }
}

/// How an admitted tuple changes the search state.
#[derive(Debug, Clone, Copy)]
struct Step {
    rank: usize,
    opens_rank: bool,
}

/// Backtracking state (partial flat string plus rank and reference bookkeeping).
struct Search {
    n: usize,
    k: usize,
    mode: Mode,
    flat: Vec<usize>,
    rank: Vec<usize>,
    /// First state of each rank opened so far.
    rank_start: Vec<State>,
    indegree: Vec<u32>,
    /// Placed states below `n` that no transition refers to yet.
    unreferenced: usize,
    /// `lists[l]` holds the constraints pending while rank `l` is generated.
    lists: Vec<ProbList>,
}

impl Search {
    fn new(g: &Generator) -> Self {
        let (n, k) = (g.n, g.k);
        let w = k + 1;
        let mut flat = vec![0; (n + 1) * w];
        flat[2 * w - 1] = 1;
        let mut rank = vec![0; n + 1];
        rank[1] = 0;
        Search {
            n,
            k,
            mode: g.mode,
            flat,
            rank,
            rank_start: vec![1],
            indegree: vec![0; n + 1],
            unreferenced: usize::from(n > 1),
            lists: vec![Vec::new()],
        }
    }

    fn w(&self) -> usize {
        self.k + 1
    }

    fn tuple(&self, i: State) -> &[usize] {
        let w = self.w();
        &self.flat[i * w..(i + 1) * w]
    }

    /// Closes the rank containing states `rank_start[l]..end`: settles pending
    /// constraints against its references and adds its equal-tuple runs.
    fn close_rank(&self, l: usize, end: State) -> Option<ProbList> {
        let start = self.rank_start[l];
        let pending = &self.lists[l];
        let mut next = if pending.is_empty() {
            Vec::new()
        } else {
            let refs = RefMap::collect(pending, &self.flat, self.k, start..end);
            resolve_rank(pending, &refs).ok()?
        };
        if self.mode == Mode::Adfa {
            let mut run_start = start;
            for s in start + 1..=end {
                if s == end || self.tuple(s) != self.tuple(run_start) {
                    if s - run_start >= 2 {
                        next.push(ConstraintList::from_run(run_start..s));
                    }
                    run_start = s;
                }
            }
        }
        Some(next)
    }

    /// Checks the candidate tuple already written at state `i`.
    fn admit(&self, i: State, closing: &mut Option<Option<ProbList>>) -> Option<Step> {
        let k = self.k;
        let tuple = self.tuple(i);
        let targets = &tuple[..k];
        let finality = tuple[k];
        let rank = match targets
            .iter()
            .filter(|&&t| t != 0)
            .map(|&t| self.rank[t])
            .max()
        {
            Some(r) => r + 1,
            None if finality == 1 => 0,
            None => return None,
        };
        let cur = self.rank[i - 1];
        if rank == cur {
            if i == self.n {
                return None;
            }
            let prev = self.tuple(i - 1);
            let ordered = match self.mode {
                Mode::Madfa => prev < tuple,
                Mode::Adfa => prev <= tuple,
            };
            if !ordered {
                return None;
            }
        } else if rank == cur + 1 {
            let closed = closing.get_or_insert_with(|| self.close_rank(cur, i));
            closed.as_ref()?;
        } else {
            return None;
        }

        // references still needed versus transitions still to be placed
        let newly_referenced = targets
            .iter()
            .enumerate()
            .filter(|&(m, &t)| {
                t != 0 && t != self.n && self.indegree[t] == 0 && !targets[..m].contains(&t)
            })
            .count();
        let unreferenced = self.unreferenced + usize::from(i < self.n) - newly_referenced;
        let still_to_place = self.n - i;
        if unreferenced + still_to_place.saturating_sub(1) > k * still_to_place {
            return None;
        }
        Some(Step {
            rank,
            opens_rank: rank != cur,
        })
    }

    fn place(&mut self, i: State, step: Step, closing: &mut Option<Option<ProbList>>) {
        let k = self.k;
        let w = self.w();
        for m in 0..k {
            let t = self.flat[i * w + m];
            if t != 0 {
                if self.indegree[t] == 0 && t != self.n {
                    self.unreferenced -= 1;
                }
                self.indegree[t] += 1;
            }
        }
        if i < self.n {
            self.unreferenced += 1;
        }
        self.rank[i] = step.rank;
        if step.opens_rank {
            self.rank_start.push(i);
            let lists = closing
                .as_ref()
                .and_then(Option::as_ref)
                .expect("rank closed before opening the next")
                .clone();
            self.lists.push(lists);
        }
    }

    fn unplace(&mut self, i: State, step: Step) {
        let k = self.k;
        let w = self.w();
        if step.opens_rank {
            self.rank_start.pop();
            self.lists.pop();
        }
        if i < self.n {
            self.unreferenced -= 1;
        }
        for m in 0..k {
            let t = self.flat[i * w + m];
            if t != 0 {
                self.indegree[t] -= 1;
                if self.indegree[t] == 0 && t != self.n {
                    self.unreferenced += 1;
                }
            }
        }
    }

    /// Advances the tuple of state `i` to its lexicographic successor; false once exhausted.
    fn next_candidate(&mut self, i: State) -> bool {
        let w = self.w();
        let base = i * w;
        let f = base + self.k;
        if self.flat[f] == 0 {
            self.flat[f] = 1;
            return true;
        }
        self.flat[f] = 0;
        for p in (base..f).rev() {
            if self.flat[p] + 1 < i {
                self.flat[p] += 1;
                return true;
            }
            self.flat[p] = 0;
        }
        false
    }

    /// Extends states `1..i` in every admissible way. Prefixes reaching state
    /// `stop` are reported as-is instead of being extended.
    fn descend<F>(&mut self, i: State, stop: State, sink: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let w = self.w();
        if i > self.n {
            return self.finish(sink);
        }
        if i == stop {
            return sink(&self.flat[..i * w]);
        }
        let mut closing = None;
        self.flat[i * w..(i + 1) * w].fill(0);
        loop {
            if let Some(step) = self.admit(i, &mut closing) {
                self.place(i, step, &mut closing);
                let flow = self.descend(i + 1, stop, sink);
                self.unplace(i, step);
                flow?;
            }
            if !self.next_candidate(i) {
                break;
            }
        }
        ControlFlow::Continue(())
    }

    fn finish<F>(&mut self, sink: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if self.unreferenced != 0 {
            return ControlFlow::Continue(());
        }
        let top = self.rank[self.n];
        match self.close_rank(top, self.n + 1) {
            None => ControlFlow::Continue(()),
            Some(left) => {
                assert!(
                    left.is_empty(),
                    "unresolved ordering constraints at emission: {left:?}"
                );
                sink(&self.flat)
            }
        }
    }
}

/// All canonical strings for `(n, k, mode)` in increasing order.
pub fn generate(n: usize, k: usize, mode: Mode) -> Result<Vec<CanonicalString>> {
    Ok(Generator::new(n, k, mode)?.strings())
}

/// Number of canonical strings for `(n, k, mode)`.
pub fn count(n: usize, k: usize, mode: Mode) -> Result<u64> {
    Ok(Generator::new(n, k, mode)?.count())
}
