use crate::graph::{EdgeId, Graph, VertexId};
use crate::resonance::FaceSet;

use super::ChainSpec;

/// An explicit graph for a chain together with its faces.
#[derive(Debug, Clone)]
pub struct Realized {
    pub graph: Graph,
    pub faces: FaceSet,
    /// `shared[i]` is the edge common to faces `i` and `i + 1`.
    pub shared: Vec<EdgeId>,
}

impl Realized {
    /// Sorted edge ids of faces `first..=last`.
    pub fn face_range_edges(&self, first: usize, last: usize) -> Vec<EdgeId> {
        let mut edges: Vec<EdgeId> =
            self.faces.interior[first..=last].iter().flat_map(|f| f.edges.iter().copied()).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Sorted vertex ids of faces `first..=last`.
    pub fn face_range_vertices(&self, first: usize, last: usize) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> =
            self.faces.interior[first..=last].iter().flat_map(|f| f.vertices.iter().copied()).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Builds the chain face by face.
///
/// Face 1 is the cycle `0, 1, ..., L1 - 1` and leaves through edge `(0, 1)`.
/// Each later face enters through the previous exit edge `(u, v)` and adds
/// the path `v, x1, ..., x(L-2), u` of fresh vertices; its exit edge is path
/// edge number `d + 1` counted from `v`, oriented away from `v`.
pub fn realize(spec: &ChainSpec) -> Realized {
    let lengths = spec.lengths();
    let first = lengths[0];
    let mut pairs: Vec<(VertexId, VertexId)> = (0..first).map(|k| (k, (k + 1) % first)).collect();
    let mut cycles: Vec<Vec<VertexId>> = vec![(0..first).collect()];
    let mut shared_pairs = Vec::new();
    let mut next_vertex = first;
    let mut entry = (0, 1);

    for (i, &length) in lengths.iter().enumerate().skip(1) {
        let (u, v) = entry;
        shared_pairs.push(entry);
        let fresh: Vec<VertexId> = (next_vertex..next_vertex + length - 2).collect();
        next_vertex += length - 2;
        let mut path = Vec::with_capacity(length);
        path.push(v);
        path.extend(&fresh);
        path.push(u);
        for w in path.windows(2) {
            pairs.push((w[0], w[1]));
        }
        let mut cycle = vec![u];
        cycle.extend(&path[..path.len() - 1]);
        cycles.push(cycle);
        if let Some(d) = spec.offset(i) {
            entry = (path[d], path[d + 1]);
        }
    }

    let graph = Graph::new(next_vertex, &pairs).expect("realized chains are simple graphs");
    let shared: Vec<EdgeId> = shared_pairs
        .iter()
        .map(|&(a, b)| graph.edge_id(a, b).expect("shared edge exists"))
        .collect();
    let exterior = boundary_walk(&graph, &shared);
    let faces = FaceSet::new(&graph, cycles, Some(exterior)).expect("realized faces are cycles");
    Realized { graph, faces, shared }
}

// Every non-shared edge lies on the outer boundary, which is a Hamiltonian
// cycle of the chain.
fn boundary_walk(g: &Graph, shared: &[EdgeId]) -> Vec<VertexId> {
    let on_boundary = |e: EdgeId| !shared.contains(&e);
    let mut walk = vec![0];
    let mut prev: Option<EdgeId> = None;
    let mut at = 0;
    loop {
        let &(next, e) = g
            .neighbors(at)
            .iter()
            .find(|&&(_, e)| on_boundary(e) && Some(e) != prev)
            .expect("boundary vertices have two boundary edges");
        if next == 0 {
            break;
        }
        walk.push(next);
        prev = Some(e);
        at = next;
    }
    walk
}
