//! Deferred ordering constraints between equivalent states.
//!
//! States with equal tuples in one rank must appear in increasing order of
//! characteristic word, but those words depend on predecessors that are only
//! generated in later ranks. Each [`ConstraintList`] records one such pending
//! requirement; when a rank is complete, [`resolve_rank`] inspects how that rank
//! references the constrained states and either settles the order, defers it to
//! the referencing states, or reports a contradiction.

use crate::State;

/// Groups of states whose least characteristic words must strictly increase
/// along the list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintList {
    groups: Vec<Vec<State>>,
}

impl ConstraintList {
    /// List of singleton groups, one per state of an equal-tuple run in numbering order.
    pub fn from_run(states: impl IntoIterator<Item = State>) -> Self {
        ConstraintList {
            groups: states.into_iter().map(|s| vec![s]).collect(),
        }
    }

    pub fn from_groups(groups: Vec<Vec<State>>) -> Self {
        ConstraintList { groups }
    }

    pub fn groups(&self) -> &[Vec<State>] {
        &self.groups
    }

    fn group_of(&self, s: State) -> Option<usize> {
        self.groups.iter().position(|g| g.contains(&s))
    }
}

/// The pending constraint lists (ProbL).
pub type ProbList = Vec<ConstraintList>;

/// A transition `source --symbol--> target` from the rank being closed into a
/// constrained state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reference {
    pub source: State,
    pub symbol: usize,
    pub finality: u8,
    pub target: State,
}

impl Reference {
    /// The `(symbol, finality)` pair the reference contributes to m(target).
    fn label(&self) -> (usize, u8) {
        (self.symbol, self.finality)
    }
}

/// References from one rank into each constraint list, indexed like the list set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RefMap {
    refs: Vec<Vec<Reference>>,
}

impl RefMap {
    /// Collects the references of `states` (tuples read from a flat string of
    /// width `k + 1`) into the states of `lists`.
    pub fn collect(
        lists: &[ConstraintList],
        flat: &[usize],
        k: usize,
        states: std::ops::Range<State>,
    ) -> Self {
        let w = k + 1;
        let refs = lists
            .iter()
            .map(|list| {
                let mut out = Vec::new();
                for source in states.clone() {
                    let tuple = &flat[source * w..(source + 1) * w];
                    for (symbol, &target) in tuple[..k].iter().enumerate() {
                        if target != 0 && list.group_of(target).is_some() {
                            out.push(Reference {
                                source,
                                symbol,
                                finality: tuple[k] as u8,
                                target,
                            });
                        }
                    }
                }
                out
            })
            .collect();
        RefMap { refs }
    }

    pub fn for_list(&self, i: usize) -> &[Reference] {
        self.refs.get(i).map_or(&[], Vec::as_slice)
    }
}

/// Why a partial automaton cannot satisfy a constraint list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contradiction {
    /// A group was referenced while an earlier group of the same list was not.
    Prefix { list: usize },
    /// The leading `(symbol, finality)` pairs decrease along the list.
    Decreasing { list: usize },
}

/// Settles the constraint lists against the references made by a completed rank.
///
/// For each list: referenced groups must form a prefix and their m-values must
/// not decrease. Referenced groups are removed; each run of two or more groups
/// with equal m = `(σ, f)` is replaced by a new list holding, per group, the
/// referencing states that read σ into it and have finality f. Lists left with
/// fewer than two groups are dropped.
pub fn resolve_rank(lists: &[ConstraintList], refs: &RefMap) -> Result<ProbList, Contradiction> {
    let mut out = Vec::with_capacity(lists.len());
    for (li, list) in lists.iter().enumerate() {
        let list_refs = refs.for_list(li);
        if list_refs.is_empty() {
            out.push(list.clone());
            continue;
        }
        let m: Vec<Option<(usize, u8)>> = list
            .groups
            .iter()
            .map(|g| {
                list_refs
                    .iter()
                    .filter(|r| g.contains(&r.target))
                    .map(Reference::label)
                    .min()
            })
            .collect();
        let referenced = m.iter().position(Option::is_none).unwrap_or(m.len());
        if m[referenced..].iter().any(Option::is_some) {
            return Err(Contradiction::Prefix { list: li });
        }
        if m[..referenced].windows(2).any(|w| w[0] > w[1]) {
            return Err(Contradiction::Decreasing { list: li });
        }

        let mut start = 0;
        while start < referenced {
            let end = (start..referenced)
                .find(|&j| m[j] != m[start])
                .unwrap_or(referenced);
            if end - start >= 2 {
                let label = m[start].expect("referenced group");
                let groups = list.groups[start..end]
                    .iter()
                    .map(|g| {
                        let mut preds: Vec<State> = list_refs
                            .iter()
                            .filter(|r| r.label() == label && g.contains(&r.target))
                            .map(|r| r.source)
                            .collect();
                        preds.sort_unstable();
                        preds.dedup();
                        preds
                    })
                    .collect();
                out.push(ConstraintList { groups });
            }
            start = end;
        }

        if list.groups.len() - referenced >= 2 {
            out.push(ConstraintList {
                groups: list.groups[referenced..].to_vec(),
            });
        }
    }
    Ok(out)
}
