//! Exact anti-forcing numbers.
//!
//! `af(G, M)` is the least number of edges outside `M` whose deletion leaves
//! `M` as the only perfect matching, equivalently a minimum set of non-`M`
//! edges meeting every `M`-alternating cycle. The solver never needs the
//! full cycle family: it repeatedly asks for one alternating cycle that
//! survives the current deletions and branches on that cycle's edges.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clique::CliqueProblem;
use crate::cycles::{enumerate_alternating_cycles, AltCycle, CycleFinder};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::matching::{
    count_restricted, enumerate_perfect_matchings, has_perfect_matching, normal_components, Matching,
    Restriction,
};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AfResult {
    pub value: usize,
    /// A minimum anti-forcing set, sorted.
    pub witness: Vec<EdgeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibleSet {
    pub cycles: Vec<AltCycle>,
}

impl CompatibleSet {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumResult {
    /// Distinct anti-forcing numbers, ascending.
    pub values: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_matching: Option<Vec<(Matching, usize)>>,
}

struct HittingSearch<'a> {
    finder: CycleFinder<'a>,
    best: Vec<EdgeId>,
}

impl HittingSearch<'_> {
    /// Greedy packing of alternating cycles with pairwise disjoint non-matching
    /// parts; each needs its own deleted edge. Returns the packing size and the
    /// first (shortest) cycle, or `None` if some cycle can no longer be hit.
    fn packing(&self, alive: &[bool], forbidden: &[bool]) -> Option<(usize, Option<Vec<EdgeId>>)> {
        let mut live = alive.to_vec();
        let mut count = 0;
        let mut first = None;
        while let Some(c) = self.finder.find(&live) {
            let outside: Vec<EdgeId> = c.iter().copied().filter(|&e| !self.finder.in_matching(e)).collect();
            if outside.iter().all(|&e| forbidden[e]) {
                return None;
            }
            for &e in &outside {
                live[e] = false;
            }
            count += 1;
            if first.is_none() {
                first = Some(c);
            }
        }
        Some((count, first))
    }

    fn branch(&mut self, alive: &mut [bool], forbidden: &mut [bool], chosen: &mut Vec<EdgeId>) {
        if chosen.len() >= self.best.len() {
            return;
        }
        let Some((bound, cycle)) = self.packing(alive, forbidden) else {
            return;
        };
        let Some(cycle) = cycle else {
            self.best = chosen.clone();
            return;
        };
        if chosen.len() + bound >= self.best.len() {
            return;
        }
        let options: Vec<EdgeId> = cycle
            .into_iter()
            .filter(|&e| !self.finder.in_matching(e) && !forbidden[e])
            .collect();
        for &e in &options {
            alive[e] = false;
            chosen.push(e);
            self.branch(alive, forbidden, chosen);
            chosen.pop();
            alive[e] = true;
            // later branches keep e
            forbidden[e] = true;
        }
        for &e in &options {
            forbidden[e] = false;
        }
    }
}

/// Minimum anti-forcing set of `m` by branch and bound over alternating
/// cycles, shortest cycle first, its non-matching edges in id order.
pub fn af_of_matching(g: &Graph, m: &Matching, _caps: &Caps) -> Result<AfResult> {
    m.ensure_perfect(g).map_err(|_| Error::NotPerfect)?;
    let finder = CycleFinder::new(g, m);

    // greedy upper bound
    let mut alive = vec![true; g.edge_count()];
    let mut greedy = Vec::new();
    while let Some(c) = finder.find(&alive) {
        let e = c.into_iter().find(|&e| !finder.in_matching(e)).expect("cycle has non-matching edges");
        alive[e] = false;
        greedy.push(e);
    }

    let mut search = HittingSearch { finder, best: greedy };
    let mut alive = vec![true; g.edge_count()];
    let mut forbidden = vec![false; g.edge_count()];
    search.branch(&mut alive, &mut forbidden, &mut Vec::new());

    let mut witness = search.best;
    witness.sort_unstable();
    assert!(
        count_restricted(g, &Restriction::without_edges(g, &witness), 2) == 1,
        "anti-forcing witness must leave a unique perfect matching"
    );
    Ok(AfResult { value: witness.len(), witness })
}

/// Two alternating cycles are compatible when they share no edge outside
/// the matching. A shared vertex always comes with its shared matching edge,
/// so this is the same as meeting only in matching edges.
pub(crate) fn compatible(a: &AltCycle, b: &AltCycle, in_m: &[bool]) -> bool {
    let (mut i, mut j) = (0, 0);
    let (x, y) = (a.edge_ids(), b.edge_ids());
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if !in_m[x[i]] {
                    return false;
                }
                i += 1;
                j += 1;
            }
        }
    }
    true
}

/// A maximum compatible set of `m`-alternating cycles; among maximum sets,
/// the one with the lexicographically least list of cycle indices in the
/// canonical cycle order.
pub fn c_prime(g: &Graph, m: &Matching, caps: &Caps) -> Result<CompatibleSet> {
    let cycles = enumerate_alternating_cycles(g, m, caps.cycle_cap)?;
    let in_m = m.mask(g);
    let problem = CliqueProblem::new(cycles.len(), |i, j| compatible(&cycles[i], &cycles[j], &in_m));
    let picked = problem.lex_least_maximum();
    Ok(CompatibleSet { cycles: picked.into_iter().map(|i| cycles[i].clone()).collect() })
}

/// Every perfect matching in canonical order with its anti-forcing result.
/// Matchings are solved in parallel; the output order does not depend on
/// scheduling.
pub fn per_matching_af(g: &Graph, caps: &Caps) -> Result<Vec<(Matching, AfResult)>> {
    let matchings = enumerate_perfect_matchings(g, caps.pm_cap)?;
    if matchings.is_empty() {
        return Err(Error::NoPerfectMatching);
    }
    matchings
        .into_par_iter()
        .map(|m| af_of_matching(g, &m, caps).map(|r| (m, r)))
        .collect()
}

/// `af(G)` with the first minimizing matching in canonical order.
pub fn min_anti_forcing(g: &Graph, caps: &Caps) -> Result<(usize, Matching)> {
    let all = per_matching_af(g, caps)?;
    let (m, r) = all
        .into_iter()
        .min_by(|(ma, ra), (mb, rb)| ra.value.cmp(&rb.value).then(ma.cmp(mb)))
        .expect("non-empty");
    Ok((r.value, m))
}

/// `Af(G)` with every maximizing matching in canonical order.
pub fn max_anti_forcing(g: &Graph, caps: &Caps) -> Result<(usize, Vec<Matching>)> {
    let all = per_matching_af(g, caps)?;
    let best = all.iter().map(|(_, r)| r.value).max().expect("non-empty");
    Ok((best, all.into_iter().filter(|(_, r)| r.value == best).map(|(m, _)| m).collect()))
}

pub fn spectrum_exact(g: &Graph, caps: &Caps, detail: bool) -> Result<SpectrumResult> {
    let all = per_matching_af(g, caps)?;
    Ok(spectrum_from(&all, detail))
}

pub fn spectrum_from(all: &[(Matching, AfResult)], detail: bool) -> SpectrumResult {
    let mut values: Vec<usize> = all.iter().map(|(_, r)| r.value).collect();
    values.sort_unstable();
    values.dedup();
    let per_matching = detail.then(|| all.iter().map(|(m, r)| (m.clone(), r.value)).collect());
    SpectrumResult { values, per_matching }
}

fn require_matchable(g: &Graph) -> Result<()> {
    if has_perfect_matching(g) {
        Ok(())
    } else {
        Err(Error::NoPerfectMatching)
    }
}

/// Edges `e` such that `G - e` has exactly one perfect matching.
pub fn anti_forcing_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    require_matchable(g)?;
    Ok((0..g.edge_count())
        .filter(|&e| count_restricted(g, &Restriction::without_edges(g, &[e]), 2) == 1)
        .collect())
}

/// Edges lying in exactly one perfect matching.
pub fn forcing_edges(g: &Graph) -> Result<Vec<EdgeId>> {
    require_matchable(g)?;
    Ok((0..g.edge_count())
        .filter(|&e| {
            let (u, v) = g.edge(e);
            count_restricted(g, &Restriction::without_vertices(g, &[u, v]), 2) == 1
        })
        .collect())
}

/// Whether `Af(G)` reaches the cyclomatic number.
pub fn is_extremal(g: &Graph, caps: &Caps) -> Result<bool> {
    let r = g.cyclomatic_number()?;
    let (max, _) = max_anti_forcing(g, caps)?;
    Ok(max == r)
}

/// Both sides of the component additivity identity: `af(G, M)` and the list
/// of `af(G_i, M_i)` over the elementary components `G_i` with `M_i` the
/// restriction of `M`.
pub fn af_by_components(g: &Graph, m: &Matching, caps: &Caps) -> Result<(usize, Vec<usize>)> {
    let whole = af_of_matching(g, m, caps)?.value;
    let report = normal_components(g)?;
    let mut parts = Vec::with_capacity(report.component_edges.len());
    for edges in &report.component_edges {
        let (sub, _, emap) = g.edge_subgraph(edges);
        let restricted = m.restrict(&emap);
        parts.push(af_of_matching(&sub, &restricted, caps)?.value);
    }
    Ok((whole, parts))
}

pub fn af_additivity_check(g: &Graph, m: &Matching, caps: &Caps) -> Result<bool> {
    let (whole, parts) = af_by_components(g, m, caps)?;
    Ok(whole == parts.iter().sum::<usize>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    fn caps() -> Caps {
        Caps::default()
    }

    /// Smallest subset of non-matching edges leaving `m` unique, by trying
    /// all subsets in order of size.
    fn brute_force_af(g: &Graph, m: &Matching) -> usize {
        let outside: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !m.contains(e)).collect();
        for k in 0..=outside.len() {
            let mut found = false;
            for_each_subset(&outside, k, &mut |s| {
                if !found && count_restricted(g, &Restriction::without_edges(g, s), 2) == 1 {
                    found = true;
                }
            });
            if found {
                return k;
            }
        }
        unreachable!("deleting every outside edge leaves m unique")
    }

    fn for_each_subset(items: &[EdgeId], k: usize, f: &mut dyn FnMut(&[EdgeId])) {
        fn go(items: &[EdgeId], k: usize, start: usize, cur: &mut Vec<EdgeId>, f: &mut dyn FnMut(&[EdgeId])) {
            if cur.len() == k {
                f(cur);
                return;
            }
            for i in start..items.len() {
                cur.push(items[i]);
                go(items, k, i + 1, cur, f);
                cur.pop();
            }
        }
        go(items, k, 0, &mut Vec::new(), f);
    }

    #[test]
    fn c6_and_k4() {
        let c6 = cycle(6);
        for m in enumerate_perfect_matchings(&c6, 10).unwrap() {
            assert_eq!(af_of_matching(&c6, &m, &caps()).unwrap().value, 1);
            assert_eq!(c_prime(&c6, &m, &caps()).unwrap().len(), 1);
        }
        let k4 = k4();
        let m = Matching::perfect(&k4, &[k4.edge_id(0, 1).unwrap(), k4.edge_id(2, 3).unwrap()]).unwrap();
        let r = af_of_matching(&k4, &m, &caps()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.value, brute_force_af(&k4, &m));
        assert_eq!(c_prime(&k4, &m, &caps()).unwrap().len(), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_fixtures() {
        let chorded = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2)]).unwrap();
        let prism = Graph::new(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        for g in [cycle(6), k4(), bridged_hexagons(), path(4), chorded, prism] {
            for m in enumerate_perfect_matchings(&g, 100).unwrap() {
                let r = af_of_matching(&g, &m, &caps()).unwrap();
                assert_eq!(r.value, brute_force_af(&g, &m), "{g:?} {m:?}");
                assert!(r.witness.iter().all(|&e| !m.contains(e)));
                assert!(r.value >= c_prime(&g, &m, &caps()).unwrap().len());
            }
        }
    }

    #[test]
    fn unique_matching_has_zero() {
        let p4 = path(4);
        let m = enumerate_perfect_matchings(&p4, 10).unwrap().remove(0);
        let r = af_of_matching(&p4, &m, &caps()).unwrap();
        assert_eq!(r, AfResult { value: 0, witness: vec![] });
        assert!(c_prime(&p4, &m, &caps()).unwrap().is_empty());
    }

    #[test]
    fn min_max_spectrum_small() {
        let c6 = cycle(6);
        let (v, m) = min_anti_forcing(&c6, &caps()).unwrap();
        assert_eq!(v, 1);
        assert_eq!(m, enumerate_perfect_matchings(&c6, 10).unwrap()[0]);
        assert_eq!(spectrum_exact(&c6, &caps(), false).unwrap().values, vec![1]);
        let (v, _) = max_anti_forcing(&k4(), &caps()).unwrap();
        assert_eq!(v, 2);
        assert!(!is_extremal(&k4(), &caps()).unwrap());
        assert_eq!(min_anti_forcing(&cycle(5), &caps()), Err(Error::NoPerfectMatching));
    }

    #[test]
    fn edge_sets_small() {
        assert_eq!(anti_forcing_edges(&cycle(6)).unwrap(), (0..6).collect::<Vec<_>>());
        assert_eq!(forcing_edges(&cycle(6)).unwrap(), (0..6).collect::<Vec<_>>());
        assert!(anti_forcing_edges(&path(2)).unwrap().is_empty());
        let p4 = path(4);
        assert_eq!(forcing_edges(&p4).unwrap(), vec![p4.edge_id(0, 1).unwrap(), p4.edge_id(2, 3).unwrap()]);
    }

    #[test]
    fn additivity_on_bridged_hexagons() {
        let g = bridged_hexagons();
        for m in enumerate_perfect_matchings(&g, 100).unwrap() {
            let (whole, parts) = af_by_components(&g, &m, &caps()).unwrap();
            assert_eq!(parts, vec![1, 1]);
            assert_eq!(whole, 2);
        }
        let p4 = path(4);
        let m = enumerate_perfect_matchings(&p4, 10).unwrap().remove(0);
        assert_eq!(af_by_components(&p4, &m, &caps()).unwrap(), (0, vec![]));
        let c6 = cycle(6);
        let m = enumerate_perfect_matchings(&c6, 10).unwrap().remove(0);
        assert!(af_additivity_check(&c6, &m, &caps()).unwrap());
    }

    #[test]
    fn rejects_non_perfect() {
        let c6 = cycle(6);
        let bad = Matching::from_unsorted(vec![0]);
        assert_eq!(af_of_matching(&c6, &bad, &caps()), Err(Error::NotPerfect));
    }
}
