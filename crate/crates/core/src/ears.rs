//! Ear decompositions in which every ear closes over a matching edge.
//!
//! The search runs the construction backwards: from the whole graph it
//! repeatedly detaches a maximal path of degree-2 vertices whose two ends are
//! joined by an edge of the matching, until one cycle is left. Failed edge
//! sets are memoized, so the search is bounded by the number of distinct
//! intermediate subgraphs.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::{is_elementary, Matching};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ear {
    /// Vertex path from one end to the other; both ends already present.
    pub path: Vec<VertexId>,
    /// The matching edge joining the two ends.
    pub closing_edge: EdgeId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EarDecomposition {
    /// The starting single edge; it belongs to the matching.
    pub base_edge: EdgeId,
    /// Ears in construction order. The first closes the base edge into a cycle.
    pub ears: Vec<Ear>,
}

impl EarDecomposition {
    /// Checks the defining properties against `g` and `m`: ears add exactly
    /// the edges of `g`, internal vertices are new, ends are joined by a
    /// matching edge of the current stage, and `m` restricted to every stage
    /// is perfect on it.
    pub fn verify(&self, g: &Graph, m: &Matching) -> bool {
        let (a, b) = g.edge(self.base_edge);
        if !m.contains(self.base_edge) {
            return false;
        }
        let mut has_vertex = vec![false; g.vertex_count()];
        let mut has_edge = vec![false; g.edge_count()];
        has_vertex[a] = true;
        has_vertex[b] = true;
        has_edge[self.base_edge] = true;
        for ear in &self.ears {
            let p = &ear.path;
            if p.len() < 3 {
                return false;
            }
            let (u, v) = (p[0], p[p.len() - 1]);
            if !has_vertex[u] || !has_vertex[v] || !has_edge[ear.closing_edge] || !m.contains(ear.closing_edge) {
                return false;
            }
            if g.edge_id(u, v) != Some(ear.closing_edge) {
                return false;
            }
            for &x in &p[1..p.len() - 1] {
                if has_vertex[x] {
                    return false;
                }
                has_vertex[x] = true;
            }
            for w in p.windows(2) {
                match g.edge_id(w[0], w[1]) {
                    Some(e) if !has_edge[e] => has_edge[e] = true,
                    _ => return false,
                }
            }
            // every internal vertex must be matched inside the ear
            for &x in &p[1..p.len() - 1] {
                let ok = g.neighbors(x).iter().any(|&(y, e)| m.contains(e) && p[1..p.len() - 1].contains(&y));
                if !ok {
                    return false;
                }
            }
        }
        has_edge.iter().all(|&h| h) && has_vertex.iter().all(|&h| h)
    }
}

struct Peeler<'a> {
    g: &'a Graph,
    m: &'a Matching,
    failed: HashSet<Vec<bool>>,
    cap: usize,
}

impl Peeler<'_> {
    fn degrees(&self, alive: &[bool]) -> Vec<usize> {
        let mut deg = vec![0; self.g.vertex_count()];
        for (e, &a) in alive.iter().enumerate() {
            if a {
                let (u, v) = self.g.edge(e);
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        deg
    }

    /// Maximal paths whose internal vertices have degree 2, with both ends of
    /// degree at least 3, each listed once.
    fn hanging_paths(&self, alive: &[bool], deg: &[usize]) -> Vec<(Vec<VertexId>, Vec<EdgeId>)> {
        let g = self.g;
        let mut out = Vec::new();
        for start in 0..g.vertex_count() {
            if deg[start] < 3 {
                continue;
            }
            for &(first, e0) in g.neighbors(start) {
                if !alive[e0] {
                    continue;
                }
                let mut verts = vec![start, first];
                let mut edges = vec![e0];
                let (mut prev_edge, mut at) = (e0, first);
                while deg[at] == 2 {
                    let &(next, e) = g
                        .neighbors(at)
                        .iter()
                        .find(|&&(_, e)| alive[e] && e != prev_edge)
                        .expect("degree-2 vertex has a second edge");
                    verts.push(next);
                    edges.push(e);
                    prev_edge = e;
                    at = next;
                }
                let end = at;
                // list each path once, from its smaller end (ties by first edge)
                let keep = start < end || (start == end && e0 < prev_edge);
                if keep && verts.len() >= 3 {
                    out.push((verts, edges));
                }
            }
        }
        out
    }

    fn peel(&mut self, alive: &mut Vec<bool>, ears: &mut Vec<Ear>) -> Result<Option<EdgeId>> {
        let deg = self.degrees(alive);
        if deg.iter().all(|&d| d == 0 || d == 2) {
            // a single cycle remains (the graph stays connected while peeling)
            let base = (0..alive.len()).find(|&e| alive[e] && self.m.contains(e));
            let Some(base) = base else { return Ok(None) };
            let (a, b) = self.g.edge(base);
            let mut path = vec![a];
            let (mut prev, mut at) = (base, a);
            while at != b {
                let &(next, e) = self
                    .g
                    .neighbors(at)
                    .iter()
                    .find(|&&(_, e)| alive[e] && e != prev)
                    .expect("cycle vertex has two edges");
                path.push(next);
                prev = e;
                at = next;
            }
            ears.push(Ear { path, closing_edge: base });
            return Ok(Some(base));
        }
        if self.failed.contains(alive) {
            return Ok(None);
        }
        if self.failed.len() >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        for (verts, edges) in self.hanging_paths(alive, &deg) {
            let (u, v) = (verts[0], verts[verts.len() - 1]);
            let Some(closing) = self.g.edge_id(u, v) else { continue };
            if u == v || !alive[closing] || !self.m.contains(closing) {
                continue;
            }
            for &e in &edges {
                alive[e] = false;
            }
            ears.push(Ear { path: verts, closing_edge: closing });
            if let Some(base) = self.peel(alive, ears)? {
                return Ok(Some(base));
            }
            ears.pop();
            for &e in &edges {
                alive[e] = true;
            }
        }
        self.failed.insert(alive.clone());
        Ok(None)
    }
}

/// Searches for an ear decomposition of the elementary bipartite graph `g`
/// in which `m` restricts to a perfect matching of every stage and each ear's
/// ends are joined by an edge of `m` already present.
pub fn find_extremal_ear_decomposition(
    g: &Graph,
    m: &Matching,
    caps: &Caps,
) -> Result<Option<EarDecomposition>> {
    if !is_elementary(g) {
        return Err(Error::NotElementary);
    }
    m.ensure_perfect(g)?;
    if g.edge_count() == 1 {
        return Ok(Some(EarDecomposition { base_edge: 0, ears: vec![] }));
    }
    let mut peeler = Peeler { g, m, failed: HashSet::new(), cap: caps.cycle_cap };
    let mut alive = vec![true; g.edge_count()];
    let mut ears = Vec::new();
    match peeler.peel(&mut alive, &mut ears)? {
        Some(base) => {
            ears.reverse();
            let d = EarDecomposition { base_edge: base, ears };
            debug_assert!(d.verify(g, m));
            Ok(Some(d))
        }
        None => Ok(None),
    }
}
