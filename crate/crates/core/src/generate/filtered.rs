//! Reference generator: enumerate every string with monotone ranks and
//! non-decreasing tuples inside each rank, then keep those the validator accepts.
//!
//! Shares nothing with the pruned search beyond the validator, which makes it
//! a differential check on the constraint-list pruning. Only usable for small sizes.

use crate::canonical::{validate, CanonicalString, Mode};
use crate::error::{Error, Result};

pub fn generate_filtered(n: usize, k: usize, mode: Mode) -> Result<Vec<CanonicalString>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidAutomaton(
            "generation needs at least one state and one symbol".into(),
        ));
    }
    let w = k + 1;
    let mut flat = vec![0; (n + 1) * w];
    flat[2 * w - 1] = 1;
    let mut rank = vec![0usize; n + 1];
    let mut out = Vec::new();
    extend(2, n, k, mode, &mut flat, &mut rank, &mut out);
    Ok(out)
}

fn extend(
    i: usize,
    n: usize,
    k: usize,
    mode: Mode,
    flat: &mut Vec<usize>,
    rank: &mut Vec<usize>,
    out: &mut Vec<CanonicalString>,
) {
    let w = k + 1;
    if i > n {
        let cs = CanonicalString::from_flat(n, k, flat.clone()).expect("well-shaped");
        if validate(&cs, mode).is_ok() {
            out.push(cs);
        }
        return;
    }
    // all (k + 1)-tuples with targets below i, as numbers in mixed radix
    let total = i.pow(k as u32) * 2;
    for code in 0..total {
        let mut c = code;
        let finality = c % 2;
        c /= 2;
        for m in (0..k).rev() {
            flat[i * w + m] = c % i;
            c /= i;
        }
        flat[i * w + k] = finality;

        let targets = &flat[i * w..i * w + k];
        let r = match targets
            .iter()
            .filter(|&&t| t != 0)
            .map(|&t| rank[t] + 1)
            .max()
        {
            Some(r) => r,
            None if finality == 1 => 0,
            None => continue,
        };
        if r < rank[i - 1] {
            continue;
        }
        if r == rank[i - 1] {
            let (prev, cur) = flat[(i - 1) * w..(i + 1) * w].split_at(w);
            let ok = match mode {
                Mode::Madfa => prev < cur,
                Mode::Adfa => prev <= cur,
            };
            if !ok {
                continue;
            }
        }
        rank[i] = r;
        extend(i + 1, n, k, mode, flat, rank, out);
    }
}
