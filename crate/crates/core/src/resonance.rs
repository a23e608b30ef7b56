//! Computations over an explicit list of face boundaries: resonant faces,
//! the Z-transformation graph and the face characterizations of forcing and
//! anti-forcing edges.
//!
//! No embedding is computed; faces are supplied by the caller (graph file
//! `f` lines or the chain realizer).

use std::collections::{HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cycles::xor;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::matching::{enumerate_perfect_matchings, is_elementary, Matching};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Boundary vertices in cyclic order.
    pub vertices: Vec<VertexId>,
    /// Sorted boundary edge ids.
    pub edges: Vec<EdgeId>,
}

impl Face {
    pub fn new(g: &Graph, vertices: Vec<VertexId>) -> Result<Self> {
        let edges = g.cycle_edges(&vertices)?;
        Ok(Face { vertices, edges })
    }

    pub fn is_alternating(&self, m: &Matching) -> bool {
        // a matching holding half the edges of an even cycle covers each of
        // its vertices exactly once
        self.edges.len().is_multiple_of(2) && self.edges.iter().filter(|&&e| m.contains(e)).count() * 2 == self.edges.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceSet {
    pub interior: Vec<Face>,
    pub exterior: Option<Face>,
}

impl FaceSet {
    /// Validates every boundary against `g`. Repeated interior faces are
    /// rejected; the exterior may coincide with an interior face (a single
    /// cycle).
    pub fn new(g: &Graph, interior: Vec<Vec<VertexId>>, exterior: Option<Vec<VertexId>>) -> Result<Self> {
        let interior: Vec<Face> = interior.into_iter().map(|f| Face::new(g, f)).collect::<Result<_>>()?;
        let mut seen = HashSet::new();
        for (i, f) in interior.iter().enumerate() {
            if !seen.insert(&f.edges) {
                return Err(Error::BadFaceSet(format!("interior face {i} repeats an earlier face")));
            }
        }
        let exterior = exterior.map(|f| Face::new(g, f)).transpose()?;
        Ok(FaceSet { interior, exterior })
    }

    fn check(&self, g: &Graph) -> Result<()> {
        let ok = self
            .interior
            .iter()
            .chain(self.exterior.iter())
            .all(|f| f.edges.iter().all(|&e| e < g.edge_count()));
        if ok {
            Ok(())
        } else {
            Err(Error::BadFaceSet("face edge outside the graph".into()))
        }
    }

    /// Interior faces followed by the exterior face when requested.
    fn counted(&self, include_exterior: bool) -> impl Iterator<Item = &Face> {
        self.interior.iter().chain(self.exterior.iter().filter(move |_| include_exterior))
    }
}

/// Indices of `m`-resonant faces. The exterior face, when included and
/// present, has index `interior.len()`.
pub fn resonant_faces(g: &Graph, faces: &FaceSet, m: &Matching, include_exterior: bool) -> Result<Vec<usize>> {
    faces.check(g)?;
    m.ensure_perfect(g)?;
    Ok(faces
        .counted(include_exterior)
        .enumerate()
        .filter(|(_, f)| f.is_alternating(m))
        .map(|(i, _)| i)
        .collect())
}

/// Nodes are the perfect matchings in canonical order; two are linked when
/// their symmetric difference is one interior face boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZGraph {
    pub nodes: Vec<Matching>,
    pub links: Vec<(usize, usize)>,
}

pub fn z_graph(g: &Graph, faces: &FaceSet, caps: &Caps) -> Result<ZGraph> {
    faces.check(g)?;
    let nodes = enumerate_perfect_matchings(g, caps.pm_cap)?;
    let index: HashMap<&Matching, usize> = nodes.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut links = Vec::new();
    for (i, m) in nodes.iter().enumerate() {
        for f in &faces.interior {
            if !f.is_alternating(m) {
                continue;
            }
            let j = index[&xor(m, &f.edges)];
            if i < j {
                links.push((i, j));
            }
        }
    }
    links.sort_unstable();
    links.dedup();
    Ok(ZGraph { nodes, links })
}

pub fn z_connected(z: &ZGraph) -> bool {
    if z.nodes.is_empty() {
        return true;
    }
    let mut adj = vec![Vec::new(); z.nodes.len()];
    for &(a, b) in &z.links {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; z.nodes.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    reached == z.nodes.len()
}

/// Number of edges on the longest path common to two cycles of `g`, given as
/// edge sets; the full length when the cycles coincide, 0 when they share no
/// edge.
pub fn common_path_length(g: &Graph, a: &[EdgeId], b: &[EdgeId]) -> usize {
    let sb: HashSet<EdgeId> = b.iter().copied().collect();
    let common: Vec<EdgeId> = a.iter().copied().filter(|e| sb.contains(e)).collect();
    if common.is_empty() {
        return 0;
    }
    let (sub, _, _) = g.edge_subgraph(&common);
    // components of a subgraph of a cycle are paths, or the cycle itself
    sub.components()
        .iter()
        .map(|comp| {
            let (c, _, _) = sub.induced_subgraph(comp);
            c.edge_count()
        })
        .max()
        .unwrap_or(0)
}

fn shares_vertex(a: &Face, b: &Face) -> bool {
    let sa: HashSet<VertexId> = a.vertices.iter().copied().collect();
    b.vertices.iter().any(|v| sa.contains(v))
}

/// Whether some perfect matching has exactly two resonant faces whose
/// boundaries share a path of at least three edges. Faces counted are the
/// interior ones plus, when `include_exterior`, the exterior face.
pub fn has_antiforcing_edge_characterization(
    g: &Graph,
    faces: &FaceSet,
    include_exterior: bool,
    caps: &Caps,
) -> Result<bool> {
    if !is_elementary(g) {
        return Err(Error::NotElementary);
    }
    faces.check(g)?;
    let counted: Vec<&Face> = faces.counted(include_exterior).collect();
    for m in enumerate_perfect_matchings(g, caps.pm_cap)? {
        let res: Vec<&Face> = counted.iter().copied().filter(|f| f.is_alternating(&m)).collect();
        if res.len() == 2 && common_path_length(g, &res[0].edges, &res[1].edges) >= 3 {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether some perfect matching has exactly two resonant faces, the
/// exterior face counted, with intersecting boundaries.
pub fn has_forcing_edge_characterization(g: &Graph, faces: &FaceSet, caps: &Caps) -> Result<bool> {
    if !is_elementary(g) {
        return Err(Error::NotElementary);
    }
    faces.check(g)?;
    if faces.exterior.is_none() {
        return Err(Error::BadFaceSet("exterior face required".into()));
    }
    let counted: Vec<&Face> = faces.counted(true).collect();
    for m in enumerate_perfect_matchings(g, caps.pm_cap)? {
        let res: Vec<&Face> = counted.iter().copied().filter(|f| f.is_alternating(&m)).collect();
        if res.len() == 2 && shares_vertex(res[0], res[1]) {
            return Ok(true);
        }
    }
    Ok(false)
}
