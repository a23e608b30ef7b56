//! Plain-text graph format.
//!
//! ```text
//! # anything after '#' is a comment
//! graph 6
//! e 0 1
//! e 1 2
//! f 0 1 2 3 4 5
//! # exterior
//! f 0 1 2 3 4 5
//! ```
//!
//! `graph N` comes first. Each `e U V` line adds an edge; each `f` line lists
//! an interior face boundary in cyclic order. A comment line reading exactly
//! `# exterior` marks the next `f` line as the exterior boundary.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::resonance::{FaceSet, ZGraph};

#[derive(Debug, Clone)]
pub struct GraphFile {
    pub graph: Graph,
    pub interior: Vec<Vec<VertexId>>,
    pub exterior: Option<Vec<VertexId>>,
}

impl GraphFile {
    pub fn has_faces(&self) -> bool {
        !self.interior.is_empty() || self.exterior.is_some()
    }

    pub fn face_set(&self) -> Result<FaceSet> {
        FaceSet::new(&self.graph, self.interior.clone(), self.exterior.clone())
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn read_graph(text: &str) -> Result<GraphFile> {
    let mut count: Option<usize> = None;
    let mut pairs = Vec::new();
    let mut interior = Vec::new();
    let mut exterior = None;
    let mut exterior_next = false;
    let mut exterior_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if comment.trim() == "exterior" {
                exterior_next = true;
                exterior_line = line_no;
            }
            continue;
        }
        let content = trimmed.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let keyword = tokens.next().expect("non-empty line");
        let numbers: Vec<usize> = tokens
            .map(|t| t.parse().map_err(|_| parse_err(line_no, format!("bad number {t:?}"))))
            .collect::<Result<_>>()?;
        match keyword {
            "graph" => {
                if count.is_some() {
                    return Err(parse_err(line_no, "repeated graph header"));
                }
                let [n] = numbers[..] else {
                    return Err(parse_err(line_no, "expected `graph N`"));
                };
                count = Some(n);
            }
            "e" | "f" if count.is_none() => {
                return Err(parse_err(line_no, "`graph N` header must come first"));
            }
            "e" => {
                let [u, v] = numbers[..] else {
                    return Err(parse_err(line_no, "expected `e U V`"));
                };
                pairs.push((u, v));
            }
            "f" => {
                if numbers.len() < 3 {
                    return Err(parse_err(line_no, "a face needs at least 3 vertices"));
                }
                if exterior_next {
                    if exterior.is_some() {
                        return Err(parse_err(line_no, "second exterior face"));
                    }
                    exterior = Some(numbers);
                    exterior_next = false;
                } else {
                    interior.push(numbers);
                }
            }
            other => return Err(parse_err(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    if exterior_next {
        return Err(parse_err(exterior_line, "`# exterior` not followed by an `f` line"));
    }
    let Some(n) = count else {
        return Err(parse_err(0, "missing `graph N` header"));
    };
    let graph = Graph::new(n, &pairs)?;
    let file = GraphFile { graph, interior, exterior };
    if file.has_faces() {
        file.face_set()?;
    }
    Ok(file)
}

/// Writes edges in canonical order, then faces.
pub fn write_graph(g: &Graph, faces: Option<&FaceSet>) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", g.vertex_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    if let Some(faces) = faces {
        for f in &faces.interior {
            writeln!(out, "f {}", join(&f.vertices)).unwrap();
        }
        if let Some(f) = &faces.exterior {
            writeln!(out, "# exterior").unwrap();
            writeln!(out, "f {}", join(&f.vertices)).unwrap();
        }
    }
    out
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// The Z-transformation graph in the graph format (node `i` is the `i`-th
/// matching in canonical order), plus a sidecar with one `m I E...` line per
/// node listing its matching's edge ids.
pub fn write_z_graph(z: &ZGraph) -> (String, String) {
    let mut graph = String::new();
    writeln!(graph, "graph {}", z.nodes.len()).unwrap();
    for &(a, b) in &z.links {
        writeln!(graph, "e {a} {b}").unwrap();
    }
    let mut sidecar = String::new();
    for (i, m) in z.nodes.iter().enumerate() {
        writeln!(sidecar, "m {i} {}", join(m.edge_ids())).unwrap();
    }
    (graph, sidecar)
}
