//! Brute-force helpers shared by the integration tests. None of them goes
//! through the library's rank tables, characteristic-word sweep or numbering.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use adfa::canonical::{CharWord, Token};
use adfa::{Automaton, CanonicalString, State, Word, DEAD};
use itertools::Itertools;

/// Every word read from the initial state that ends in a useful state, with that state.
pub fn left_words(aut: &Automaton) -> Vec<(Word, State)> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), aut.initial())];
    while let Some((w, s)) = stack.pop() {
        for a in 0..aut.k() {
            let t = aut.next(s, a);
            if t != DEAD {
                let mut w2 = w.clone();
                w2.push(a);
                stack.push((w2, t));
            }
        }
        out.push((w, s));
    }
    out
}

/// Longest accepted word length from `s`, by exhaustive walk.
pub fn brute_rank(aut: &Automaton, s: State) -> Option<usize> {
    let mut best = aut.is_final(s).then_some(0);
    for a in 0..aut.k() {
        let t = aut.next(s, a);
        if t != DEAD {
            if let Some(r) = brute_rank(aut, t) {
                best = Some(best.map_or(r + 1, |b: usize| b.max(r + 1)));
            }
        }
    }
    best
}

/// Characteristic word of every state: the minimum over all words of the left
/// language of the reversed token sequence.
pub fn brute_words(aut: &Automaton) -> BTreeMap<State, CharWord> {
    let ranks: Vec<usize> = (0..=aut.n())
        .map(|s| {
            if s == DEAD {
                0
            } else {
                brute_rank(aut, s).unwrap()
            }
        })
        .collect();
    let mut best: BTreeMap<State, CharWord> = BTreeMap::new();
    for (word, end) in left_words(aut) {
        let mut q = aut.initial();
        let mut tokens = Vec::new();
        for &a in &word {
            tokens.push(Token {
                rank: ranks[q],
                symbol: a,
                finality: aut.is_final(q) as u8,
            });
            q = aut.next(q, a);
        }
        tokens.reverse();
        let cw = CharWord(tokens);
        best.entry(end)
            .and_modify(|cur| {
                if cw < *cur {
                    *cur = cw.clone()
                }
            })
            .or_insert(cw);
    }
    best
}

/// String obtained by numbering state `s` as `phi[s]`.
fn string_under(aut: &Automaton, phi: &[State]) -> Vec<Vec<usize>> {
    let mut tuples = vec![vec![0; aut.k() + 1]; aut.n() + 1];
    for s in aut.states() {
        let mut t: Vec<usize> = aut.row(s).iter().map(|&q| phi[q]).collect();
        t.push(aut.is_final(s) as usize);
        tuples[phi[s]] = t;
    }
    tuples
}

/// Canonical string found by trying every numbering that lists states by
/// non-decreasing rank and keeping those whose tuples are sorted within each
/// rank with ties ordered by brute-force characteristic word. Returns all
/// survivors; a canonical form is unique iff exactly one survives.
pub fn brute_canonical(aut: &Automaton) -> Vec<CanonicalString> {
    let n = aut.n();
    let rank: Vec<usize> = (0..=n)
        .map(|s| {
            if s == DEAD {
                0
            } else {
                brute_rank(aut, s).unwrap()
            }
        })
        .collect();
    let words = brute_words(aut);
    let d = rank[aut.initial()];
    let classes: Vec<Vec<State>> = (0..=d)
        .map(|l| aut.states().filter(|&s| rank[s] == l).collect())
        .collect();
    let mut out = Vec::new();
    for orders in classes
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()))
        .multi_cartesian_product()
    {
        let mut phi = vec![0; n + 1];
        for (i, s) in orders.iter().flatten().enumerate() {
            phi[*s] = i + 1;
        }
        let tuples = string_under(aut, &phi);
        let inverse: Vec<State> = {
            let mut inv = vec![0; n + 1];
            for s in aut.states() {
                inv[phi[s]] = s;
            }
            inv
        };
        let ok = (2..=n).all(|i| {
            let (a, b) = (inverse[i - 1], inverse[i]);
            rank[a] != rank[b]
                || tuples[i - 1] < tuples[i]
                || (tuples[i - 1] == tuples[i] && words[&a] < words[&b])
        });
        if ok {
            out.push(CanonicalString::from_tuples(&tuples).unwrap());
        }
    }
    out
}

/// Right language of every useful state, by exhaustive walk.
pub fn right_languages(aut: &Automaton) -> BTreeMap<State, BTreeSet<Word>> {
    aut.states()
        .map(|s| (s, aut.right_language(s).unwrap()))
        .collect()
}

/// Random trim acyclic automaton from a seed: each state targets lower states
/// only, useless states are made final, and unreachable ones are dropped.
pub fn automaton_from_choices(k: usize, states: &[(Vec<usize>, bool)]) -> Automaton {
    let n0 = states.len();
    // state i (1-based) may target 0..i
    let mut rows = vec![vec![0; k]];
    let mut finals = vec![false];
    for (i, (choices, fin)) in states.iter().enumerate() {
        let s = i + 1;
        let row: Vec<usize> = (0..k).map(|a| choices[a] % s).collect();
        let fin = *fin || row.iter().all(|&t| t == 0) || s == 1;
        rows.push(row);
        finals.push(fin);
    }
    // keep states reachable from the highest one
    let mut seen = vec![false; n0 + 1];
    let mut stack = vec![n0];
    seen[n0] = true;
    while let Some(s) = stack.pop() {
        for &t in &rows[s] {
            if t != 0 && !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    let kept: Vec<usize> = (1..=n0).filter(|&s| seen[s]).collect();
    let mut fresh = vec![0; n0 + 1];
    for (i, &s) in kept.iter().enumerate() {
        fresh[s] = i + 1;
    }
    let mut new_rows = vec![vec![0; k]];
    let mut new_finals = Vec::new();
    for &s in &kept {
        new_rows.push(rows[s].iter().map(|&t| fresh[t]).collect());
        if finals[s] {
            new_finals.push(fresh[s]);
        }
    }
    Automaton::new(kept.len(), k, &new_rows, fresh[n0], &new_finals).unwrap()
}
