//! Perfect matchings: enumeration, bounded counting, allowed and fixed
//! edges, and the decomposition into elementary (normal) components.

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};

/// A perfect matching as a sorted set of edge ids. Ordering is lexicographic
/// on that set, which is the canonical matching order used for tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<EdgeId>,
}

impl Matching {
    /// Validates that `edges` is a perfect matching of `g`.
    pub fn perfect(g: &Graph, edges: &[EdgeId]) -> Result<Self> {
        let mut covered = vec![false; g.vertex_count()];
        for &e in edges {
            g.check_edge(e)?;
            let (u, v) = g.edge(e);
            if covered[u] || covered[v] {
                return Err(Error::NotPerfect);
            }
            covered[u] = true;
            covered[v] = true;
        }
        if covered.iter().any(|&c| !c) {
            return Err(Error::NotPerfect);
        }
        Ok(Self::from_unsorted(edges.to_vec()))
    }

    pub(crate) fn from_unsorted(mut edges: Vec<EdgeId>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
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

    /// Membership flags indexed by edge id.
    pub fn mask(&self, g: &Graph) -> Vec<bool> {
        let mut m = vec![false; g.edge_count()];
        for &e in &self.edges {
            m[e] = true;
        }
        m
    }

    /// For every vertex, the matching edge covering it.
    pub fn mates(&self, g: &Graph) -> Vec<Option<EdgeId>> {
        let mut out = vec![None; g.vertex_count()];
        for &e in &self.edges {
            let (u, v) = g.edge(e);
            out[u] = Some(e);
            out[v] = Some(e);
        }
        out
    }

    /// Restriction to a subgraph whose edges map to parent ids via `edge_map`.
    pub fn restrict(&self, edge_map: &[EdgeId]) -> Matching {
        Matching::from_unsorted(
            edge_map.iter().enumerate().filter(|(_, &p)| self.contains(p)).map(|(i, _)| i).collect(),
        )
    }

    pub(crate) fn ensure_perfect(&self, g: &Graph) -> Result<()> {
        Matching::perfect(g, &self.edges).map(|_| ())
    }
}

/// Which part of a graph a matching search may use.
#[derive(Debug, Clone)]
pub(crate) struct Restriction {
    pub edge_alive: Vec<bool>,
    pub vertex_alive: Vec<bool>,
}

impl Restriction {
    pub fn full(g: &Graph) -> Self {
        Restriction { edge_alive: vec![true; g.edge_count()], vertex_alive: vec![true; g.vertex_count()] }
    }

    pub fn without_edges(g: &Graph, removed: &[EdgeId]) -> Self {
        let mut r = Self::full(g);
        for &e in removed {
            r.edge_alive[e] = false;
        }
        r
    }

    pub fn without_vertices(g: &Graph, removed: &[VertexId]) -> Self {
        let mut r = Self::full(g);
        for &v in removed {
            r.vertex_alive[v] = false;
        }
        r
    }
}

/// Backtracking over perfect matchings of the restricted graph. Branches on
/// the uncovered vertex with the fewest usable edges; a vertex with none
/// prunes the branch. `visit` receives each matching (unsorted) and may stop
/// the search.
pub(crate) fn search_perfect<F>(g: &Graph, r: &Restriction, mut visit: F)
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    let alive_count = r.vertex_alive.iter().filter(|&&a| a).count();
    if alive_count % 2 == 1 {
        return;
    }
    let mut covered: Vec<bool> = r.vertex_alive.iter().map(|&a| !a).collect();
    let mut chosen = Vec::with_capacity(alive_count / 2);
    let _ = recurse(g, r, &mut covered, &mut chosen, n, &mut visit);
}

fn recurse<F>(
    g: &Graph,
    r: &Restriction,
    covered: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    n: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[EdgeId]) -> ControlFlow<()>,
{
    let mut pick: Option<(VertexId, usize)> = None;
    for v in 0..n {
        if covered[v] {
            continue;
        }
        let options = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, e)| !covered[w] && r.edge_alive[e])
            .count();
        if options == 0 {
            return ControlFlow::Continue(());
        }
        if pick.is_none_or(|(_, best)| options < best) {
            pick = Some((v, options));
            if options == 1 {
                break;
            }
        }
    }
    let Some((v, _)) = pick else {
        return visit(chosen);
    };
    covered[v] = true;
    for &(w, e) in g.neighbors(v) {
        if covered[w] || !r.edge_alive[e] {
            continue;
        }
        covered[w] = true;
        chosen.push(e);
        let flow = recurse(g, r, covered, chosen, n, visit);
        chosen.pop();
        covered[w] = false;
        if flow.is_break() {
            covered[v] = false;
            return flow;
        }
    }
    covered[v] = false;
    ControlFlow::Continue(())
}

pub(crate) fn count_restricted(g: &Graph, r: &Restriction, limit: usize) -> usize {
    let mut count = 0;
    if limit == 0 {
        return 0;
    }
    search_perfect(g, r, |_| {
        count += 1;
        if count >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    count
}

/// Up to `limit` perfect matchings of the restricted graph, in discovery order.
pub(crate) fn first_matchings(g: &Graph, r: &Restriction, limit: usize) -> Vec<Matching> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    search_perfect(g, r, |m| {
        out.push(Matching::from_unsorted(m.to_vec()));
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// All perfect matchings in canonical order. Fails with `CapExceeded` as soon
/// as more than `cap` exist; graphs of odd order have none.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    let mut exceeded = false;
    search_perfect(g, &Restriction::full(g), |m| {
        if out.len() >= cap {
            exceeded = true;
            return ControlFlow::Break(());
        }
        out.push(Matching::from_unsorted(m.to_vec()));
        ControlFlow::Continue(())
    });
    if exceeded {
        return Err(Error::CapExceeded(cap));
    }
    out.sort_unstable();
    Ok(out)
}

/// `min(limit, number of perfect matchings)`, stopping early at `limit`.
pub fn count_perfect_matchings_upto(g: &Graph, limit: usize) -> usize {
    count_restricted(g, &Restriction::full(g), limit)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    count_perfect_matchings_upto(g, 1) == 1
}

fn require_matchable(g: &Graph) -> Result<()> {
    if has_perfect_matching(g) {
        Ok(())
    } else {
        Err(Error::NoPerfectMatching)
    }
}

fn allowed_unchecked(g: &Graph, e: EdgeId) -> bool {
    let (u, v) = g.edge(e);
    count_restricted(g, &Restriction::without_vertices(g, &[u, v]), 1) == 1
}

/// Whether `e` lies in some perfect matching of `g`.
pub fn is_allowed_edge(g: &Graph, e: EdgeId) -> Result<bool> {
    g.check_edge(e)?;
    require_matchable(g)?;
    Ok(allowed_unchecked(g, e))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Edges in no perfect matching.
    pub fixed_single: Vec<EdgeId>,
    /// Edges in every perfect matching.
    pub fixed_double: Vec<EdgeId>,
    /// Vertex sets of the elementary components, ordered by least vertex.
    pub elementary_components: Vec<Vec<VertexId>>,
    /// Edge sets of the same components, index-aligned.
    pub component_edges: Vec<Vec<EdgeId>>,
}

pub fn normal_components(g: &Graph) -> Result<ComponentReport> {
    require_matchable(g)?;
    let mut fixed_single = Vec::new();
    let mut fixed_double = Vec::new();
    let mut free = Vec::new();
    for e in 0..g.edge_count() {
        if !allowed_unchecked(g, e) {
            fixed_single.push(e);
        } else if count_restricted(g, &Restriction::without_edges(g, &[e]), 1) == 0 {
            fixed_double.push(e);
        } else {
            free.push(e);
        }
    }

    let (sub, vmap, emap) = g.edge_subgraph(&free);
    let mut elementary_components = Vec::new();
    let mut component_edges = Vec::new();
    for comp in sub.components() {
        let mut inside = vec![false; sub.vertex_count()];
        for &v in &comp {
            inside[v] = true;
        }
        let mut edges: Vec<EdgeId> = (0..sub.edge_count())
            .filter(|&e| inside[sub.edge(e).0])
            .map(|e| emap[e])
            .collect();
        edges.sort_unstable();
        elementary_components.push(comp.iter().map(|&v| vmap[v]).collect());
        component_edges.push(edges);
    }
    Ok(ComponentReport { fixed_single, fixed_double, elementary_components, component_edges })
}

/// Connected, bipartite, matchable, and every edge allowed.
pub fn is_elementary(g: &Graph) -> bool {
    g.vertex_count() > 0
        && g.is_connected()
        && g.is_bipartite()
        && has_perfect_matching(g)
        && (0..g.edge_count()).all(|e| allowed_unchecked(g, e))
}
