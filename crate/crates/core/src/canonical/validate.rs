//! Checks a canonical string against the N0..N6 conditions (N6' in ADFA mode).
//!
//! Ranks are recomputed from the string itself. A string whose ranks cannot be
//! computed (a cycle, or a state that cannot reach a final tuple) fails N2 at
//! the first offending tuple.

use super::charword::characteristic_words;
use super::string::CanonicalString;
use super::Mode;
use crate::automaton::{Automaton, DEAD};
use crate::error::{Condition, Error, Result, Violation};
use crate::rank::{compute_ranks, longest_paths};

pub fn validate(cs: &CanonicalString, mode: Mode) -> std::result::Result<(), Violation> {
    let (n, k) = (cs.n(), cs.k());
    let flat = cs.flat();
    let w = k + 1;

    // N0: Ω is (0^k, 0) and state 1 is (0^k, 1)
    if let Some(pos) = (0..2 * w).find(|&p| flat[p] != (p == 2 * w - 1) as usize) {
        return Err(Violation::new(Condition::N0, pos));
    }

    // N1
    if let Some(i) = (0..=n).find(|&i| cs.finality(i) > 1) {
        return Err(Violation::new(Condition::N1, cs.tuple_start(i) + k));
    }

    let aut = cs
        .to_automaton_unchecked()
        .expect("N0 and N1 guarantee a structurally valid automaton");

    // N2
    let rank = match longest_paths(&aut) {
        Ok(r) => r,
        Err(Error::Cyclic { state } | Error::NotTrim { state }) => {
            return Err(Violation::new(Condition::N2, cs.tuple_start(state)))
        }
        Err(e) => unreachable!("rank computation failed unexpectedly: {e}"),
    };
    let rk = |i: usize| rank[i].expect("useful state");
    for i in 2..=n {
        let (prev, cur) = (rk(i - 1), rk(i));
        let top = i == n;
        if cur < prev || cur > prev + 1 || (top && cur == prev) {
            return Err(Violation::new(Condition::N2, cs.tuple_start(i)));
        }
    }

    // N3: every state in [1, n[ occurs as a transition target
    let mut seen = vec![false; n + 1];
    for i in 1..=n {
        for &t in cs.targets(i) {
            seen[t] = true;
        }
    }
    if let Some(i) = (1..n).find(|&i| !seen[i]) {
        return Err(Violation::new(Condition::N3, cs.tuple_start(i)));
    }

    // N4
    for i in 1..=n {
        for (m, &t) in cs.targets(i).iter().enumerate() {
            if t != DEAD && rk(t) >= rk(i) {
                return Err(Violation::new(Condition::N4, cs.tuple_start(i) + m));
            }
        }
    }

    // N5
    for i in 1..=n {
        let r = rk(i);
        if r > 0 && !cs.targets(i).iter().any(|&t| t != DEAD && rk(t) + 1 == r) {
            return Err(Violation::new(Condition::N5, cs.tuple_start(i)));
        }
    }

    match mode {
        Mode::Madfa => {
            for i in 2..=n {
                if rk(i) == rk(i - 1) && cs.tuple(i - 1) >= cs.tuple(i) {
                    return Err(Violation::new(Condition::N6, cs.tuple_start(i)));
                }
            }
        }
        Mode::Adfa => {
            let mut words = None;
            for i in 2..=n {
                if rk(i) != rk(i - 1) {
                    continue;
                }
                let violation = Violation::new(Condition::N6Relaxed, cs.tuple_start(i));
                match cs.tuple(i - 1).cmp(cs.tuple(i)) {
                    std::cmp::Ordering::Greater => return Err(violation),
                    std::cmp::Ordering::Less => {}
                    std::cmp::Ordering::Equal => {
                        let words = words.get_or_insert_with(|| {
                            let ranks = compute_ranks(&aut).expect("N2..N5 hold");
                            characteristic_words(&aut, &ranks)
                        });
                        if words[i - 1] >= words[i] {
                            return Err(violation);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Automaton described by a valid canonical string: state `i` is tuple `i`,
/// the initial state is `n`.
pub fn decode(cs: &CanonicalString) -> Result<Automaton> {
    validate(cs, Mode::Adfa).map_err(Error::InvalidString)?;
    cs.to_automaton_unchecked()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::encode;
    use crate::samples;

    fn cs(s: &str) -> CanonicalString {
        s.parse().unwrap()
    }

    const MADFA7: &str =
        "[[0,0,0,0],[0,0,0,1],[1,1,1,0],[2,1,1,0],[2,3,2,0],[3,3,0,0],[4,0,0,0],[5,6,6,0]]";
    const ADFA9: &str = "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[1,1,2,0],[3,1,1,0],[3,4,3,0],[4,4,0,0],[5,0,0,0],[5,0,0,0],[6,7,8,0]]";

    #[test]
    fn madfa_string_is_valid() {
        assert_eq!(validate(&cs(MADFA7), Mode::Madfa), Ok(()));
        assert_eq!(validate(&cs(MADFA7), Mode::Adfa), Ok(()));
    }

    #[test]
    fn swapped_rank_tuples_violate_n6() {
        let s = "[[0,0,0,0],[0,0,0,1],[1,1,1,0],[2,1,1,0],[3,3,0,0],[2,3,2,0],[4,0,0,0],[5,6,6,0]]";
        let v = validate(&cs(s), Mode::Madfa).unwrap_err();
        assert_eq!(v.condition, Condition::N6);
        assert_eq!(v.position, 20);
        let v = validate(&cs(s), Mode::Adfa).unwrap_err();
        assert_eq!(v.condition, Condition::N6Relaxed);
    }

    #[test]
    fn duplicate_tuples_only_valid_in_adfa_mode() {
        assert_eq!(validate(&cs(ADFA9), Mode::Adfa), Ok(()));
        assert_eq!(
            validate(&cs(ADFA9), Mode::Madfa),
            Err(Violation::new(Condition::N6, 8))
        );
    }

    #[test]
    fn misplaced_low_rank_tuple_is_rejected() {
        // tuple 5 = [0,1,0,0] sits in rank 1, not rank 3 as its position demands
        let s = "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[1,1,2,0],[3,1,1,0],[0,1,0,0],[4,4,0,0],[5,0,0,0],[5,0,0,0],[6,7,8,0]]";
        assert!(validate(&cs(s), Mode::Adfa).is_err());
    }

    #[test]
    fn wrong_tie_order_violates_relaxed_n6() {
        // the five-state sample with its two final states numbered the other way round
        let s = "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[2,0,2,0],[1,2,0,0],[3,4,1,0]]";
        let v = validate(&cs(s), Mode::Adfa).unwrap_err();
        assert_eq!(v.condition, Condition::N6Relaxed);
        let good = encode(&samples::five_state_adfa(), Mode::Adfa).unwrap();
        assert_eq!(
            good.to_string(),
            "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[1,0,1,0],[2,1,0,0],[3,4,2,0]]"
        );
        assert_eq!(validate(&good, Mode::Adfa), Ok(()));
    }

    #[test]
    fn condition_failures() {
        let check = |s: &str, mode| validate(&cs(s), mode).unwrap_err();
        let v = check("[[0,0,0],[1,0,0],[1,0,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N0, 3));
        let v = check("[[0,0,0],[0,0,1],[1,0,2]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N1, 8));
        // state 2 cannot reach a final state
        let v = check("[[0,0,0],[0,0,1],[0,0,0],[1,2,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N2, 6));
        // cycle between 2 and 3
        let v = check("[[0,0,0],[0,0,1],[3,0,0],[2,1,0]]", Mode::Adfa);
        assert_eq!(v.condition, Condition::N2);
        // rank 0 after rank 1
        let v = check("[[0,0,0],[0,0,1],[1,0,0],[0,0,1],[2,3,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N2, 9));
        // top rank not unique
        let v = check("[[0,0,0],[0,0,1],[1,0,0],[1,1,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N2, 9));
        // state 2 is never a target
        let v = check("[[0,0,0],[0,0,1],[1,0,0],[1,1,0],[3,0,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N3, 6));
        let v = check("[[0,0,0],[0,0,1],[0,0,1],[1,0,0],[3,0,0]]", Mode::Adfa);
        assert_eq!(v, Violation::new(Condition::N3, 6));
    }

    #[test]
    fn decode_two_state_string() {
        let a = decode(&cs("[[0,0,0],[0,0,1],[1,0,0]]")).unwrap();
        assert_eq!(a.initial(), 2);
        assert_eq!(a.row(2), &[1, 0]);
        assert!(a.is_predead(1) && a.is_final(1));
        assert!(!a.is_final(2));
        assert_eq!(
            encode(&a, Mode::Madfa).unwrap().to_string(),
            "[[0,0,0],[0,0,1],[1,0,0]]"
        );

        let err = decode(&cs("[[0,0,0],[1,0,0],[1,0,0]]")).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidString(Violation {
                condition: Condition::N0,
                ..
            })
        ));
    }

    #[test]
    fn decode_madfa_round_trip() {
        let a = decode(&cs(MADFA7)).unwrap();
        assert!(crate::isomorphic(&a, &samples::seven_state_madfa()).unwrap());
        assert_eq!(encode(&a, Mode::Madfa).unwrap().to_string(), MADFA7);
    }
}
