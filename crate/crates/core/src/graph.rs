//! Simple undirected graphs with canonical edge indexing.
//!
//! Edges are stored sorted by `(u, v)` with `u < v`; the position of an edge
//! in that order is its [`EdgeId`]. Every edge set reported anywhere in the
//! crate refers to these ids.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl Graph {
    /// Builds the canonical graph. Pairs may be given in either orientation
    /// and any order; loops, repeated pairs and out-of-range endpoints are
    /// rejected.
    pub fn new(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::BadVertex { vertex: v, count: vertex_count });
                }
            }
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut index = HashMap::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
            index.insert((u, v), id);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, edges, adjacency, index })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::BadEdge(e))
        }
    }

    pub fn edge_id(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Neighbors of `v` with the connecting edge id, sorted by neighbor.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(w, _) in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components().len() == 1
    }

    /// Two-coloring by BFS from the lowest uncolored vertex of each
    /// component, that vertex colored black. `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Vec<Color>> {
        let mut color: Vec<Option<Color>> = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(Color::Black);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let cv = color[v].expect("queued vertices are colored");
                for &(w, _) in &self.adjacency[v] {
                    match color[w] {
                        None => {
                            color[w] = Some(cv.flip());
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all vertices colored")).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `|E| - |V| + 1`, defined for connected graphs only.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.vertex_count.max(1))
    }

    /// The subgraph formed by the given edges and their endpoints, with
    /// vertices renumbered in increasing order. Returns the subgraph, the
    /// parent vertex of each new vertex, and the parent edge of each new edge.
    pub fn edge_subgraph(&self, edge_ids: &[EdgeId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let vertices: Vec<VertexId> =
            edge_ids.iter().flat_map(|&e| [self.edges[e].0, self.edges[e].1]).collect();
        self.relabel(vertices, edge_ids)
    }

    /// The subgraph induced on `vertices`, renumbered in increasing order.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        let mut keep = vec![false; self.vertex_count];
        for &v in vertices {
            keep[v] = true;
        }
        let edge_ids: Vec<EdgeId> = (0..self.edges.len())
            .filter(|&e| keep[self.edges[e].0] && keep[self.edges[e].1])
            .collect();
        self.relabel(vertices.to_vec(), &edge_ids)
    }

    fn relabel(
        &self,
        mut vertices: Vec<VertexId>,
        edge_ids: &[EdgeId],
    ) -> (Graph, Vec<VertexId>, Vec<EdgeId>) {
        vertices.sort_unstable();
        vertices.dedup();
        let local: HashMap<VertexId, VertexId> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let pairs: Vec<_> = edge_ids
            .iter()
            .map(|&e| (local[&self.edges[e].0], local[&self.edges[e].1]))
            .collect();
        let sub = Graph::new(vertices.len(), &pairs).expect("subgraph of a simple graph is simple");
        let edge_map = sub
            .edges
            .iter()
            .map(|&(a, b)| self.edge_id(vertices[a], vertices[b]).expect("edge came from parent"))
            .collect();
        (sub, vertices, edge_map)
    }

    /// Converts a closed vertex walk `v0 v1 ... vk-1` (implicitly returning
    /// to v0) into its sorted edge-id set. Fails if a step is not an edge or
    /// a vertex repeats.
    pub fn cycle_edges(&self, vertices: &[VertexId]) -> Result<Vec<EdgeId>> {
        if vertices.len() < 3 {
            return Err(Error::BadFaceSet(format!("cycle {vertices:?} has fewer than 3 vertices")));
        }
        let mut seen = vertices.to_vec();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadFaceSet(format!("cycle {vertices:?} repeats a vertex")));
        }
        let mut out = Vec::with_capacity(vertices.len());
        for i in 0..vertices.len() {
            let a = vertices[i];
            let b = vertices[(i + 1) % vertices.len()];
            if a >= self.vertex_count || b >= self.vertex_count {
                return Err(Error::BadVertex { vertex: a.max(b), count: self.vertex_count });
            }
            match self.edge_id(a, b) {
                Some(e) => out.push(e),
                None => {
                    return Err(Error::BadFaceSet(format!("({a}, {b}) is not an edge")));
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
