//! Generate-test-reject enumeration over every labeled automaton, deduplicated
//! by canonical string. Exponentially slow; used to certify the generator at
//! small sizes.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::automaton::Automaton;
use crate::canonical::{encode, CanonicalString, Mode};
use crate::error::{Error, Result};
use crate::generate::Generator;

/// Default bound on the number of labeled automata the oracle may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000_000;

/// Labeled automata visited for `(n, k)`: transition tables x final sets x initial states.
pub fn search_space(n: usize, k: usize) -> u128 {
    let tables = (n as u128 + 1).checked_pow((n * k) as u32);
    tables
        .and_then(|t| t.checked_mul(1u128 << n.min(127)))
        .and_then(|t| t.checked_mul(n as u128))
        .unwrap_or(u128::MAX)
}

/// Distinct canonical strings of all trim acyclic (and, in minimal mode,
/// minimal) labeled automata with `n` states over `k` symbols.
pub fn oracle_set(
    n: usize,
    k: usize,
    mode: Mode,
    budget: u128,
) -> Result<BTreeSet<CanonicalString>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidAutomaton(
            "oracle needs at least one state and one symbol".into(),
        ));
    }
    let needed = search_space(n, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    // split on the transition row of state 1
    let first_rows = (n + 1).pow(k as u32);
    let sets: Vec<BTreeSet<CanonicalString>> = (0..first_rows)
        .into_par_iter()
        .map(|first| {
            let mut set = BTreeSet::new();
            let mut delta = vec![0; (n + 1) * k];
            let mut c = first;
            for m in 0..k {
                delta[k + m] = c % (n + 1);
                c /= n + 1;
            }
            loop {
                visit_table(n, k, mode, &delta, &mut set);
                if !advance(&mut delta[2 * k..], n) {
                    break;
                }
            }
            set
        })
        .collect();
    Ok(sets.into_iter().flatten().collect())
}

fn advance(digits: &mut [usize], n: usize) -> bool {
    for d in digits.iter_mut() {
        if *d < n {
            *d += 1;
            return true;
        }
        *d = 0;
    }
    false
}

fn visit_table(
    n: usize,
    k: usize,
    mode: Mode,
    delta: &[usize],
    set: &mut BTreeSet<CanonicalString>,
) {
    let probe = Automaton::from_parts(n, k, delta.to_vec(), 1, vec![false; n + 1]);
    if !probe.is_acyclic() {
        return;
    }
    for initial in 1..=n {
        if !reaches_everything(n, k, delta, initial) {
            continue;
        }
        for mask in 1u32..(1 << n) {
            let mut finals = vec![false; n + 1];
            for (s, f) in finals.iter_mut().enumerate().skip(1) {
                *f = mask >> (s - 1) & 1 == 1;
            }
            if !all_useful(n, k, delta, &finals) {
                continue;
            }
            let aut = Automaton::from_parts(n, k, delta.to_vec(), initial, finals);
            if mode == Mode::Madfa && !aut.is_minimal() {
                continue;
            }
            set.insert(encode(&aut, mode).expect("trim acyclic automaton encodes"));
        }
    }
}

fn reaches_everything(n: usize, k: usize, delta: &[usize], initial: usize) -> bool {
    let mut seen = vec![false; n + 1];
    seen[0] = true;
    seen[initial] = true;
    let mut stack = vec![initial];
    while let Some(s) = stack.pop() {
        for &t in &delta[s * k..(s + 1) * k] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen.iter().all(|&b| b)
}

fn all_useful(n: usize, k: usize, delta: &[usize], finals: &[bool]) -> bool {
    let mut useful = finals.to_vec();
    for _ in 0..n {
        for s in 1..=n {
            if !useful[s]
                && delta[s * k..(s + 1) * k]
                    .iter()
                    .any(|&t| t != 0 && useful[t])
            {
                useful[s] = true;
            }
        }
    }
    useful[1..].iter().all(|&u| u)
}

/// Number of isomorphism classes found by the oracle, within [`DEFAULT_BUDGET`].
pub fn oracle_count(n: usize, k: usize, mode: Mode) -> Result<u64> {
    Ok(oracle_set(n, k, mode, DEFAULT_BUDGET)?.len() as u64)
}

/// Comparison of generator output and oracle output for one `(n, k, mode)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub generator_count: u64,
    pub oracle_count: u64,
    pub only_generated: Vec<CanonicalString>,
    pub only_oracle: Vec<CanonicalString>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.only_generated.is_empty() && self.only_oracle.is_empty()
    }
}

impl std::fmt::Display for CrossCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "n={} k={} {}: generator {} oracle {} (only generated {}, only oracle {})",
            self.n,
            self.k,
            self.mode,
            self.generator_count,
            self.oracle_count,
            self.only_generated.len(),
            self.only_oracle.len()
        )
    }
}

pub fn cross_check(n: usize, k: usize, mode: Mode) -> Result<CrossCheck> {
    let oracle = oracle_set(n, k, mode, DEFAULT_BUDGET)?;
    let generated: BTreeSet<CanonicalString> =
        Generator::new(n, k, mode)?.strings().into_iter().collect();
    Ok(CrossCheck {
        n,
        k,
        mode,
        generator_count: generated.len() as u64,
        oracle_count: oracle.len() as u64,
        only_generated: generated.difference(&oracle).cloned().collect(),
        only_oracle: oracle.difference(&generated).cloned().collect(),
    })
}
