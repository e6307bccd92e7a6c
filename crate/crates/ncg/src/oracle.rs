//! Brute-force reference implementations backing the test suites.
//!
//! Nothing here is fast, and the enumeration of divisors is bounded by
//! an orbit radius rather than complete, so the checks are one-sided:
//! a failure is a conclusive bug report, a pass certifies the outputs
//! against everything enumerated.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::curves::DiskModel;
use crate::hurwitz::{base_free_tuple, orbit_ball};
use crate::words::{FreeWord, GroupWord};

/// Divisors of the maximal element enumerated as prefix products of
/// orbit tuples, with the containment relation cached.
pub struct DivisorPoset {
    elements: Vec<FreeWord>,
    interiors: Vec<BTreeSet<u32>>,
    index: HashMap<FreeWord, usize>,
    /// `rel[a][b]` iff `elements[a]` is contained in `elements[b]`.
    rel: Vec<Vec<bool>>,
}

/// All prefix products of tuples in the orbit ball of `(f1..fn)` of the
/// given radius. Contains the identity and the maximal element, and is
/// closed under prefixes by construction.
pub fn enum_divisors(model: &DiskModel, radius: usize) -> DivisorPoset {
    let ball = orbit_ball(&base_free_tuple(model.rank()), radius);
    let mut set: BTreeSet<FreeWord> = BTreeSet::new();
    for tuple in &ball {
        let mut acc = FreeWord::identity();
        set.insert(acc.clone());
        for entry in tuple {
            acc = GroupWord::mul(&acc, entry);
            set.insert(acc.clone());
        }
    }
    let elements: Vec<FreeWord> = set.into_iter().collect();
    let interiors: Vec<BTreeSet<u32>> = elements
        .iter()
        .map(|w| model.realize(w).interior().expect("divisors are embedded"))
        .collect();
    let index = elements.iter().cloned().zip(0..).collect();
    let rel: Vec<Vec<bool>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| model.contains(b, a).expect("divisors are non-crossing"))
                .collect()
        })
        .collect();
    DivisorPoset { elements, interiors, index, rel }
}

impl DivisorPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[FreeWord] {
        &self.elements
    }

    pub fn interior(&self, i: usize) -> &BTreeSet<u32> {
        &self.interiors[i]
    }

    pub fn index_of(&self, w: &FreeWord) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Cached containment: `elements[a]` below `elements[b]`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.rel[a][b]
    }

    /// Elements of a given winding length.
    pub fn by_height(&self, h: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.interiors[i].len() == h).collect()
    }

    /// Line format used by the golden files: `word<TAB>{interior}`.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for (w, ints) in self.elements.iter().zip(&self.interiors) {
            let set: Vec<String> = ints.iter().map(|p| p.to_string()).collect();
            writeln!(out, "{w}\t{{{}}}", set.join(",")).unwrap();
        }
        out
    }
}

/// Verdict of the one-sided meet/join verification.
pub struct BoundReport {
    pub failures: Vec<String>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `m` is a common lower bound of `a, b` dominating every
/// enumerated common lower bound, and that `j` is a common upper bound
/// dominated by every enumerated common upper bound.
pub fn oracle_bound_check(
    model: &DiskModel,
    a: &FreeWord,
    b: &FreeWord,
    m: &FreeWord,
    j: &FreeWord,
    poset: &DivisorPoset,
) -> BoundReport {
    let mut failures = Vec::new();
    let contains = |big: &FreeWord, small: &FreeWord| {
        model.contains(big, small).expect("inputs are non-crossing")
    };

    if !contains(a, m) || !contains(b, m) {
        failures.push(format!("meet `{m}` is not a common lower bound of `{a}`, `{b}`"));
    }
    if !contains(j, a) || !contains(j, b) {
        failures.push(format!("join `{j}` is not a common upper bound of `{a}`, `{b}`"));
    }
    for e in poset.elements() {
        if contains(a, e) && contains(b, e) && !contains(m, e) {
            failures.push(format!("enumerated lower bound `{e}` not below meet `{m}`"));
        }
        if contains(e, a) && contains(e, b) && !contains(e, j) {
            failures.push(format!("join `{j}` not below enumerated upper bound `{e}`"));
        }
    }
    BoundReport { failures }
}

/// Exhaustive intersection minimization over all strand orders: the
/// definitional check that the lexicographic orders are taut.
pub mod brute {
    use itertools::Itertools;

    use crate::curves::diagram::{
        based_layout, basepoint_alternates, cyclic_count, events_of, mutual_crossings,
        self_crossings, Crossing, Cycle, Event, Germ, TAIL,
    };
    use crate::curves::DiskModel;
    use crate::words::FreeWord;

    fn factorial(k: usize) -> usize {
        (1..=k).product::<usize>().max(1)
    }

    /// Minimal self-intersection count of the free class of a
    /// cyclically reduced word, over all gate orders.
    pub fn min_self_cyclic(model: &DiskModel, w: &FreeWord) -> usize {
        let cycle = Cycle { n: model.n() };
        let events = events_of(w);
        let mut per_gate: Vec<Vec<usize>> = vec![Vec::new(); model.n() as usize + 1];
        for (i, ev) in events.iter().enumerate() {
            per_gate[ev.gate as usize].push(i);
        }
        let size: usize = per_gate.iter().fold(1usize, |acc, l| acc.saturating_mul(factorial(l.len())));
        assert!(size <= 5_000_000, "word too large for the brute-force order enumeration");

        let gate_perms: Vec<Vec<Vec<usize>>> = per_gate
            .iter()
            .map(|list| list.iter().copied().permutations(list.len()).collect())
            .collect();
        let mut best = usize::MAX;
        let mut pick = vec![0usize; gate_perms.len()];
        loop {
            let orders: Vec<Vec<usize>> =
                pick.iter().enumerate().map(|(g, &k)| gate_perms[g][k].clone()).collect();
            best = best.min(cyclic_count(&cycle, &events, &orders).len());
            let mut g = 0;
            loop {
                if g == pick.len() {
                    return best;
                }
                pick[g] += 1;
                if pick[g] < gate_perms[g].len() {
                    break;
                }
                pick[g] = 0;
                g += 1;
            }
        }
    }

    /// Intersection counts of one based order assignment.
    pub struct Tally {
        pub selfs: Vec<usize>,
        pub mutual: usize,
    }

    /// Visits every order assignment of a based diagram with the given
    /// decorated event lists (tail crossings included as events).
    pub(crate) fn enumerate_based<F: FnMut(&Tally)>(n: u32, curves: &[Vec<Event>], mut visit: F) {
        let cycle = Cycle { n };
        let mut crossings: Vec<Vec<Crossing>> = vec![Vec::new(); n as usize + 1];
        for (ci, evs) in curves.iter().enumerate() {
            for (i, ev) in evs.iter().enumerate() {
                crossings[ev.gate as usize].push((ci, i));
            }
        }
        let germs: Vec<Germ> = curves
            .iter()
            .enumerate()
            .filter(|(_, evs)| !evs.is_empty())
            .flat_map(|(ci, _)| [(ci, true), (ci, false)])
            .collect();
        let size: usize = crossings
            .iter()
            .fold(factorial(germs.len()), |acc, l| acc.saturating_mul(factorial(l.len())));
        assert!(size <= 5_000_000, "words too large for the brute-force order enumeration");

        let germ_perms: Vec<Vec<Germ>> = germs.iter().copied().permutations(germs.len()).collect();
        let cut_perms: Vec<Vec<Vec<Crossing>>> = crossings
            .iter()
            .map(|list| list.iter().copied().permutations(list.len()).collect())
            .collect();
        let mut pick = vec![0usize; cut_perms.len()];
        loop {
            let orders: Vec<Vec<Crossing>> =
                pick.iter().enumerate().map(|(g, &k)| cut_perms[g][k].clone()).collect();
            for germ_order in &germ_perms {
                let lay = based_layout(&cycle, curves, germ_order, &orders);
                let tally = Tally {
                    selfs: (0..curves.len()).map(|c| self_crossings(&lay, c).len()).collect(),
                    mutual: if curves.len() == 2 {
                        mutual_crossings(&lay).len() + usize::from(basepoint_alternates(germ_order))
                    } else {
                        0
                    },
                };
                visit(&tally);
            }
            let mut g = 0;
            loop {
                if g == pick.len() {
                    return;
                }
                pick[g] += 1;
                if pick[g] < cut_perms[g].len() {
                    break;
                }
                pick[g] = 0;
                g += 1;
            }
        }
    }

    fn tail_decorations(events: &[Event], cap: usize) -> Vec<Vec<Event>> {
        let slots = events.len() + 1;
        let mut picks: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
        for a in 0..slots {
            for dir in [true, false] {
                picks.push(vec![(a, dir)]);
                if cap >= 2 {
                    for b in a + 1..slots {
                        for dir2 in [true, false] {
                            picks.push(vec![(a, dir), (b, dir2)]);
                        }
                    }
                }
            }
        }
        picks
            .into_iter()
            .map(|deco| {
                let mut out = Vec::new();
                for (i, &ev) in events.iter().enumerate() {
                    if let Some(&(_, dir)) = deco.iter().find(|&&(s, _)| s == i) {
                        out.push(Event { gate: TAIL, up: dir });
                    }
                    out.push(ev);
                }
                if let Some(&(_, dir)) = deco.iter().find(|&&(s, _)| s == events.len()) {
                    out.push(Event { gate: TAIL, up: dir });
                }
                out
            })
            .collect()
    }

    /// Minimal mutual intersection count of a pair of non-crossing
    /// loops (basepoint crossing included), over all tail decorations
    /// of bounded size, all orders, requiring both curves embedded.
    pub fn min_mutual_intersections(model: &DiskModel, a: &FreeWord, b: &FreeWord) -> usize {
        let ea = events_of(a);
        let eb = events_of(b);
        let mut best = usize::MAX;
        for da in tail_decorations(&ea, 2) {
            for db in tail_decorations(&eb, 2) {
                enumerate_based(model.n(), &[da.clone(), db.clone()], |t| {
                    if t.selfs[0] == 0 && t.selfs[1] == 0 {
                        best = best.min(t.mutual);
                    }
                });
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Rank;

    fn fw(letters: &[i32]) -> FreeWord {
        FreeWord::new(letters.iter().copied())
    }

    fn model(n: u32) -> DiskModel {
        DiskModel::new(Rank::new(n).unwrap())
    }

    #[test]
    fn radius_zero_divisors() {
        let d = model(2);
        let poset = enum_divisors(&d, 0);
        let expected: Vec<FreeWord> =
            vec![FreeWord::identity(), fw(&[1]), fw(&[1, 2])];
        let mut got = poset.elements().to_vec();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn radius_one_adds_the_two_conjugates() {
        let d = model(2);
        let poset = enum_divisors(&d, 1);
        assert!(poset.index_of(&fw(&[2])).is_some());
        assert!(poset.index_of(&fw(&[1, 2, -1])).is_some());
        assert_eq!(poset.len(), 5);
    }

    #[test]
    fn rank_one_poset_is_the_two_chain() {
        let d = model(1);
        let poset = enum_divisors(&d, 3);
        assert_eq!(poset.elements(), &[FreeWord::identity(), fw(&[1])]);
    }

    #[test]
    fn growth_is_monotone() {
        let d = model(3);
        let small: BTreeSet<FreeWord> = enum_divisors(&d, 1).elements().iter().cloned().collect();
        let large: BTreeSet<FreeWord> = enum_divisors(&d, 2).elements().iter().cloned().collect();
        assert!(small.is_subset(&large));
    }

    #[test]
    fn bound_check_examples() {
        let d = model(2);
        let poset = enum_divisors(&d, 2);
        let report = oracle_bound_check(
            &d,
            &fw(&[1]),
            &fw(&[2]),
            &FreeWord::identity(),
            &fw(&[1, 2]),
            &poset,
        );
        assert!(report.passed(), "{:?}", report.failures);

        let report =
            oracle_bound_check(&d, &fw(&[1]), &fw(&[1]), &fw(&[1]), &fw(&[1]), &poset);
        assert!(report.passed());

        let report = oracle_bound_check(
            &d,
            &fw(&[1]),
            &fw(&[1, 2, -1]),
            &FreeWord::identity(),
            &fw(&[1, 2]),
            &poset,
        );
        assert!(report.passed());

        // A wrong meet is flagged.
        let report =
            oracle_bound_check(&d, &fw(&[1]), &fw(&[2]), &fw(&[1]), &fw(&[1, 2]), &poset);
        assert!(!report.passed());
    }

    #[test]
    fn line_format_is_stable() {
        let d = model(2);
        let poset = enum_divisors(&d, 0);
        let lines = poset.to_lines();
        assert!(lines.contains("f1.f2\t{1,2}"));
        assert!(lines.contains("e\t{}"));
    }
}
