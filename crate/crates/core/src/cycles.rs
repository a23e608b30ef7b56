//! Alternating cycles relative to a perfect matching.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeId, Graph, VertexId};
use crate::matching::{first_matchings, Matching, Restriction};

/// A cycle stored as its sorted edge-id set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AltCycle {
    edges: Vec<EdgeId>,
}

impl AltCycle {
    /// Validates that `edges` forms one cycle of `g` alternating with `m`.
    pub fn new(g: &Graph, m: &Matching, edges: &[EdgeId]) -> Result<Self> {
        let c = AltCycle::from_unsorted(edges.to_vec());
        if !c.is_single_cycle(g)? || !c.alternates(g, m) {
            return Err(Error::NotAlternating);
        }
        Ok(c)
    }

    pub(crate) fn from_unsorted(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        AltCycle { edges }
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn vertices(&self, g: &Graph) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.edges.iter().flat_map(|&e| [g.edge(e).0, g.edge(e).1]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    fn is_single_cycle(&self, g: &Graph) -> Result<bool> {
        if self.edges.len() < 3 {
            return Ok(false);
        }
        let mut degree = vec![0usize; g.vertex_count()];
        for &e in &self.edges {
            g.check_edge(e)?;
            let (u, v) = g.edge(e);
            degree[u] += 1;
            degree[v] += 1;
        }
        let vs = self.vertices(g);
        if vs.len() != self.edges.len() || vs.iter().any(|&v| degree[v] != 2) {
            return Ok(false);
        }
        let (sub, _, _) = g.edge_subgraph(&self.edges);
        Ok(sub.is_connected())
    }

    /// Every vertex of the cycle is covered by exactly one cycle edge in `m`.
    pub(crate) fn alternates(&self, g: &Graph, m: &Matching) -> bool {
        let mut hits = vec![0u8; g.vertex_count()];
        for &e in &self.edges {
            if m.contains(e) {
                let (u, v) = g.edge(e);
                hits[u] += 1;
                hits[v] += 1;
            }
        }
        self.len().is_multiple_of(2) && self.vertices(g).iter().all(|&v| hits[v] == 1)
    }
}

/// All `m`-alternating cycles of `g`, sorted by edge set.
///
/// Each cycle is grown once: from its least matching edge `(a, b)`, walking
/// `a -> b` first and then alternating non-matching and matching edges, with
/// every later matching edge required to have a larger id.
pub fn enumerate_alternating_cycles(g: &Graph, m: &Matching, cap: usize) -> Result<Vec<AltCycle>> {
    m.ensure_perfect(g)?;
    let mates = m.mates(g);
    let in_m = m.mask(g);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path: Vec<EdgeId> = Vec::new();

    struct Walk<'a> {
        g: &'a Graph,
        mates: &'a [Option<EdgeId>],
        in_m: &'a [bool],
        start: VertexId,
        first: EdgeId,
        cap: usize,
    }

    fn extend(
        w: &Walk,
        at: VertexId,
        on_path: &mut [bool],
        path: &mut Vec<EdgeId>,
        seen: &mut HashSet<Vec<EdgeId>>,
        out: &mut Vec<AltCycle>,
    ) -> Result<()> {
        // `at` was just reached through a matching edge
        for &(next, e) in w.g.neighbors(at) {
            if w.in_m[e] {
                continue;
            }
            if next == w.start {
                if path.len() >= 3 {
                    let mut edges = path.clone();
                    edges.push(e);
                    edges.sort_unstable();
                    if seen.insert(edges.clone()) {
                        if out.len() >= w.cap {
                            return Err(Error::CapExceeded(w.cap));
                        }
                        out.push(AltCycle { edges });
                    }
                }
                continue;
            }
            if on_path[next] {
                continue;
            }
            let me = w.mates[next].expect("perfect matching covers every vertex");
            if me <= w.first {
                continue;
            }
            let after = w.g.other(me, next);
            if on_path[after] {
                continue;
            }
            on_path[next] = true;
            on_path[after] = true;
            path.push(e);
            path.push(me);
            let r = extend(w, after, on_path, path, seen, out);
            path.pop();
            path.pop();
            on_path[next] = false;
            on_path[after] = false;
            r?;
        }
        Ok(())
    }

    for &first in m.edge_ids() {
        let (a, b) = g.edge(first);
        let walk = Walk { g, mates: &mates, in_m: &in_m, start: a, first, cap };
        on_path[a] = true;
        on_path[b] = true;
        path.push(first);
        let r = extend(&walk, b, &mut on_path, &mut path, &mut seen, &mut out);
        path.clear();
        on_path[a] = false;
        on_path[b] = false;
        r?;
    }
    out.sort_unstable();
    Ok(out)
}

/// `(M - C) ∪ (C - M)`, which is again a perfect matching.
pub fn symmetric_difference(g: &Graph, m: &Matching, c: &AltCycle) -> Result<Matching> {
    m.ensure_perfect(g)?;
    if !c.is_single_cycle(g)? || !c.alternates(g, m) {
        return Err(Error::NotAlternating);
    }
    Ok(xor(m, c.edge_ids()))
}

pub(crate) fn xor(m: &Matching, edges: &[EdgeId]) -> Matching {
    let mut out: Vec<EdgeId> = m.edge_ids().iter().copied().filter(|e| edges.binary_search(e).is_err()).collect();
    out.extend(edges.iter().copied().filter(|&e| !m.contains(e)));
    Matching::from_unsorted(out)
}

/// Precomputed data for repeated alternating-cycle searches against one
/// matching while edges outside it are deleted.
pub(crate) struct CycleFinder<'a> {
    g: &'a Graph,
    m: &'a Matching,
    in_m: Vec<bool>,
    mates: Vec<Option<EdgeId>>,
    coloring: Option<Vec<Color>>,
}

impl<'a> CycleFinder<'a> {
    pub fn new(g: &'a Graph, m: &'a Matching) -> Self {
        CycleFinder { g, m, in_m: m.mask(g), mates: m.mates(g), coloring: g.bipartition() }
    }

    pub fn in_matching(&self, e: EdgeId) -> bool {
        self.in_m[e]
    }

    /// A short alternating cycle using only live edges, as a sorted edge
    /// list, or `None` when `m` is the unique perfect matching of the live
    /// subgraph. In bipartite graphs the result is a shortest such cycle.
    pub fn find(&self, alive: &[bool]) -> Option<Vec<EdgeId>> {
        match &self.coloring {
            Some(colors) => self.shortest_directed(alive, colors),
            None => self.via_second_matching(alive),
        }
    }

    // Orient matching edges black -> white and the rest white -> black;
    // alternating cycles are exactly the directed cycles.
    fn shortest_directed(&self, alive: &[bool], colors: &[Color]) -> Option<Vec<EdgeId>> {
        let g = self.g;
        let n = g.vertex_count();
        let mut best: Option<Vec<EdgeId>> = None;
        let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
        let mut dist = vec![usize::MAX; n];
        for s in 0..n {
            if colors[s] != Color::Black {
                continue;
            }
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = None);
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            let mut closing: Option<(VertexId, EdgeId)> = None;
            'bfs: while let Some(v) = queue.pop_front() {
                if let Some(b) = &best {
                    if dist[v] + 1 >= b.len() {
                        break;
                    }
                }
                if colors[v] == Color::Black {
                    let e = self.mates[v].expect("perfect");
                    let w = g.other(e, v);
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = Some((v, e));
                        queue.push_back(w);
                    }
                } else {
                    for &(w, e) in g.neighbors(v) {
                        if self.in_m[e] || !alive[e] {
                            continue;
                        }
                        if w == s {
                            closing = Some((v, e));
                            break 'bfs;
                        }
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            parent[w] = Some((v, e));
                            queue.push_back(w);
                        }
                    }
                }
            }
            if let Some((last, e)) = closing {
                let mut edges = vec![e];
                let mut v = last;
                while v != s {
                    let (p, pe) = parent[v].expect("BFS tree");
                    edges.push(pe);
                    v = p;
                }
                if best.as_ref().is_none_or(|b| edges.len() < b.len()) {
                    edges.sort_unstable();
                    best = Some(edges);
                }
            }
        }
        best
    }

    fn via_second_matching(&self, alive: &[bool]) -> Option<Vec<EdgeId>> {
        let g = self.g;
        let r = Restriction { edge_alive: alive.to_vec(), vertex_alive: vec![true; g.vertex_count()] };
        let other = first_matchings(g, &r, 2).into_iter().find(|x| x != self.m)?;
        let diff: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| self.in_m[e] != other.contains(e)).collect();
        let (sub, _, emap) = g.edge_subgraph(&diff);
        let mut best: Option<Vec<EdgeId>> = None;
        for comp in sub.components() {
            let (_, _, cmap) = sub.induced_subgraph(&comp);
            let mut edges: Vec<EdgeId> = cmap.iter().map(|&e| emap[e]).collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges.len() < b.len()) {
                best = Some(edges);
            }
        }
        best
    }
}
