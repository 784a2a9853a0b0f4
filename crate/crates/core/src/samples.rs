//! Small hand-built automata over the alphabet `a < b < c` used in tests and docs.

use crate::automaton::Automaton;
use crate::State;

/// State number of `s_j` in [`nine_state_adfa`].
pub fn nine_state_label(j: usize) -> State {
    j + 1
}

/// A nine-state ADFA with two mergeable pairs (`s2`/`s3` and `s7`/`s8`).
///
/// `s_j` is state `j + 1`; `s0` is initial, `s7` and `s8` are final.
pub fn nine_state_adfa() -> Automaton {
    let s = nine_state_label;
    let mut rows = vec![vec![0; 3]; 10];
    rows[s(0)] = vec![s(1), s(2), s(3)];
    rows[s(1)] = vec![s(4), s(4), 0];
    rows[s(2)] = vec![s(5), 0, 0];
    rows[s(3)] = vec![s(5), 0, 0];
    rows[s(4)] = vec![s(6), s(7), s(7)];
    rows[s(5)] = vec![s(6), s(4), s(6)];
    rows[s(6)] = vec![s(7), s(7), s(8)];
    Automaton::new(9, 3, &rows, s(0), &[s(7), s(8)]).expect("valid sample")
}

/// A seven-state minimal ADFA.
///
/// States `s0..s5` are `1..=6` and the pre-dead state is `7`; `s0` is initial.
pub fn seven_state_madfa() -> Automaton {
    let rows = vec![
        vec![0, 0, 0],
        vec![3, 2, 2], // s0
        vec![4, 0, 0], // s1
        vec![5, 5, 0], // s2
        vec![6, 5, 6], // s3
        vec![6, 7, 7], // s4
        vec![7, 7, 7], // s5
        vec![0, 0, 0], // pre-dead
    ];
    Automaton::new(7, 3, &rows, 1, &[7]).expect("valid sample")
}

/// A five-state ADFA whose two final states need characteristic words to be ordered.
///
/// State 5 is initial; 1 and 2 are final.
pub fn five_state_adfa() -> Automaton {
    let rows = vec![
        vec![0, 0, 0],
        vec![0, 0, 0],
        vec![0, 0, 0],
        vec![2, 0, 2],
        vec![1, 2, 0],
        vec![3, 4, 1],
    ];
    Automaton::new(5, 3, &rows, 5, &[1, 2]).expect("valid sample")
}
