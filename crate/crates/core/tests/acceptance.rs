//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use adfa::canonical::characteristic_word;
use adfa::formula::{compare_with_generator, formula};
use adfa::generate::generate_filtered;
use adfa::oracle::cross_check;
use adfa::samples;
use adfa::{compute_ranks, decode, encode, validate, Automaton, CanonicalString, Generator, Mode};

const BUDGET: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_counts() -> Outcome {
    let rows: &[(usize, usize, u64, u64)] = &[
        (2, 3, 62, 60),
        (2, 4, 964, 900),
        (2, 5, 20424, 18480),
        (2, 6, 553472, 487560),
        (3, 2, 14, 14),
        (3, 3, 544, 532),
        (3, 4, 44290, 42644),
        (4, 2, 30, 30),
        (4, 3, 3950, 3900),
        (5, 2, 62, 62),
        (5, 3, 26344, 26164),
    ];
    let mut slowest = Duration::ZERO;
    for &(k, n, adfa, madfa) in rows {
        for (mode, want) in [(Mode::Adfa, adfa), (Mode::Madfa, madfa)] {
            let t = Instant::now();
            let got = Generator::new(n, k, mode).unwrap().count();
            let dt = t.elapsed();
            slowest = slowest.max(dt);
            check(got == want, || {
                format!("k={k} n={n} {mode}: got {got}, want {want}")
            })?;
            check(dt <= BUDGET, || format!("k={k} n={n} {mode}: took {dt:?}"))?;
        }
    }
    Ok(format!(
        "{} counts exact, slowest {:.2?}",
        rows.len() * 2,
        slowest
    ))
}

fn oracle_sets() -> Outcome {
    let mut total = 0;
    for (n, k) in [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)] {
        for mode in [Mode::Adfa, Mode::Madfa] {
            let report = cross_check(n, k, mode).map_err(|e| e.to_string())?;
            check(report.passed(), || report.to_string())?;
            total += report.oracle_count;
        }
    }
    Ok(format!("12 set comparisons, {total} strings"))
}

fn differential() -> Outcome {
    let mut cases = Vec::new();
    for n in 1..=4 {
        cases.push((n, 2));
    }
    for n in 1..=3 {
        cases.push((n, 3));
    }
    for (n, k) in cases {
        for mode in [Mode::Adfa, Mode::Madfa] {
            let pruned: BTreeSet<_> = Generator::new(n, k, mode)
                .unwrap()
                .strings()
                .into_iter()
                .collect();
            let filtered: BTreeSet<_> =
                generate_filtered(n, k, mode).unwrap().into_iter().collect();
            check(pruned == filtered, || {
                format!(
                    "n={n} k={k} {mode}: {} pruned vs {} filtered",
                    pruned.len(),
                    filtered.len()
                )
            })?;
        }
    }
    Ok("7 sizes, both modes".into())
}

fn round_trip() -> Outcome {
    let mut seen = 0;
    for mode in [Mode::Adfa, Mode::Madfa] {
        for s in Generator::new(4, 2, mode).unwrap().strings() {
            validate(&s, mode).map_err(|v| format!("{s} {mode}: {v}"))?;
            let aut = decode(&s).map_err(|e| format!("{s}: {e}"))?;
            let back = encode(&aut, mode).map_err(|e| format!("{s}: {e}"))?;
            check(back == s, || format!("{s} re-encodes to {back}"))?;
            seen += 1;
        }
    }
    Ok(format!("{seen} strings"))
}

fn goldens() -> Outcome {
    let seven = samples::seven_state_madfa();
    let seven_string =
        "[[0,0,0,0],[0,0,0,1],[1,1,1,0],[2,1,1,0],[2,3,2,0],[3,3,0,0],[4,0,0,0],[5,6,6,0]]";
    let got = encode(&seven, Mode::Madfa).unwrap().to_string();
    check(got == seven_string, || format!("seven-state string {got}"))?;

    let five = samples::five_state_adfa();
    let ranks = compute_ranks(&five).unwrap();
    let w1 = characteristic_word(&five, &ranks, 1).unwrap().to_string();
    let w2 = characteristic_word(&five, &ranks, 2).unwrap().to_string();
    check(w1 == "1a02b0" && w2 == "1a02a0", || {
        format!("words {w1} {w2}")
    })?;

    let nine = samples::nine_state_adfa();
    let corrected: [(&Automaton, &str); 3] = [
        (&seven, seven_string),
        (
            &nine,
            "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[1,1,2,0],[3,1,1,0],[3,4,3,0],[4,4,0,0],[5,0,0,0],[5,0,0,0],[6,7,8,0]]",
        ),
        (&five, "[[0,0,0,0],[0,0,0,1],[0,0,0,1],[1,0,1,0],[2,1,0,0],[3,4,2,0]]"),
    ];
    for (aut, golden) in corrected {
        // independent search over every rank-respecting numbering
        let brute = common::brute_canonical(aut);
        check(brute.len() == 1, || {
            format!("{} numberings survive for {golden}", brute.len())
        })?;
        check(brute[0].to_string() == golden, || {
            format!("oracle gives {}", brute[0])
        })?;
        let got = encode(aut, Mode::Adfa).unwrap().to_string();
        check(got == golden, || {
            format!("encode gives {got}, oracle {golden}")
        })?;
    }
    Ok("seven-state string, tie words, nine- and five-state strings".into())
}

fn formulas() -> Outcome {
    for n in [2, 3] {
        for k in 1..=6 {
            for mode in [Mode::Adfa, Mode::Madfa] {
                let c = compare_with_generator(n, k, mode).map_err(|e| e.to_string())?;
                check(c.agrees(), || c.to_string())?;
            }
        }
    }
    let mut notes = Vec::new();
    for k in 1..=4 {
        let c = compare_with_generator(4, k, Mode::Adfa).map_err(|e| e.to_string())?;
        println!("    four-state report: {c}");
        notes.push(format!("k={k} {:+}", c.difference()));
    }
    check(formula(4, 2, Mode::Madfa).is_err(), || {
        "M_k(4) unexpectedly supported".into()
    })?;
    Ok(format!(
        "n in {{2,3}}, k in 1..=6 agree; four-state diff {}",
        notes.join(", ")
    ))
}

fn properties() -> Outcome {
    let adfa = Generator::new(4, 2, Mode::Adfa).unwrap().strings();
    let madfa = Generator::new(4, 2, Mode::Madfa).unwrap().strings();
    for stream in [&adfa, &madfa] {
        check(stream.windows(2).all(|w| w[0] < w[1]), || {
            "stream not strictly increasing".into()
        })?;
    }
    let adfa_set: BTreeSet<&CanonicalString> = adfa.iter().collect();
    check(madfa.iter().all(|s| adfa_set.contains(s)), || {
        "minimal string missing from full stream".into()
    })?;

    let mut minimal = 0;
    for s in &adfa {
        let aut = decode(s).unwrap();
        let ranks = compute_ranks(&aut).unwrap();
        // rank descent along every live transition, and rank is the longest accepted word
        for q in aut.states() {
            let r = ranks.rank(q).unwrap();
            check(r == common::brute_rank(&aut, q).unwrap(), || {
                format!("{s}: rank of {q}")
            })?;
            for a in 0..aut.k() {
                let t = aut.next(q, a);
                if t != adfa::DEAD {
                    check(ranks.rank(t).unwrap() < r, || {
                        format!("{s}: {q} -{a}-> {t}")
                    })?;
                }
            }
        }
        // equivalent states have equal rank
        let right = common::right_languages(&aut);
        for p in aut.states() {
            for q in aut.states() {
                if right[&p] == right[&q] {
                    check(ranks.rank(p) == ranks.rank(q), || format!("{s}: {p} ~ {q}"))?;
                }
            }
        }
        // left languages partition the words leading into useful states
        let mut owner: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for (w, end) in common::left_words(&aut) {
            if let Some(prev) = owner.insert(w.clone(), end) {
                return Err(format!("{s}: word {w:?} reaches {prev} and {end}"));
            }
        }
        // minimization
        let m = aut.minimize().unwrap();
        check(m.is_minimal(), || {
            format!("{s}: minimize left a mergeable pair")
        })?;
        check(m.language().unwrap() == aut.language().unwrap(), || {
            format!("{s}: language changed")
        })?;
        check(m.minimize().unwrap() == m, || {
            format!("{s}: minimize not idempotent")
        })?;
        check((m.n() == aut.n()) == aut.is_minimal(), || {
            format!("{s}: state count vs minimality")
        })?;
        if aut.is_minimal() {
            minimal += 1;
        }
    }
    check(minimal == madfa.len(), || {
        format!("{minimal} minimal vs {} generated", madfa.len())
    })?;
    Ok(format!("{} automata, {} minimal", adfa.len(), minimal))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("table counts", table_counts),
        ("oracle set equality", oracle_sets),
        ("pruned vs filtered generation", differential),
        ("round trip at n=4 k=2", round_trip),
        ("golden strings and words", goldens),
        ("closed-form counts", formulas),
        ("properties over n=4 k=2", properties),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let dt = t.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{dt:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{dt:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
