use crate::error::{Error, Result};
use crate::graph::EdgeId;
use crate::matching::{count_restricted, Restriction};
use crate::solver::anti_forcing_edges;
use crate::Caps;

use super::decompose::segment_decomposition;
use super::realize::realize;
use super::{ChainError, ChainSpec};

/// One anti-forcing edge per segment, as edge ids of `realize(spec)`, such
/// that deleting them leaves a unique perfect matching. Candidate edges of
/// each segment are tried in id order; at most `caps.cycle_cap`
/// combinations are examined.
pub fn min_witness(spec: &ChainSpec, caps: &Caps) -> Result<Vec<EdgeId>> {
    let realized = realize(spec);
    let g = &realized.graph;
    let mut options: Vec<Vec<EdgeId>> = Vec::new();
    for seg in segment_decomposition(spec).segments {
        let edges = realized.face_range_edges(seg.first, seg.last);
        let (sub, _, emap) = g.edge_subgraph(&edges);
        let local = anti_forcing_edges(&sub)?;
        if local.is_empty() {
            return Err(ChainError::Witness(format!("segment {}..={} has no anti-forcing edge", seg.first, seg.last)).into());
        }
        options.push(local.into_iter().map(|e| emap[e]).collect());
    }

    let mut pick = vec![0usize; options.len()];
    for _ in 0..caps.cycle_cap {
        let mut set: Vec<EdgeId> = pick.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        set.sort_unstable();
        set.dedup();
        if set.len() == options.len() && count_restricted(g, &Restriction::without_edges(g, &set), 2) == 1 {
            return Ok(set);
        }
        // odometer over the per-segment choices, last segment fastest
        let mut k = options.len();
        loop {
            if k == 0 {
                return Err(ChainError::Witness("no combination of segment edges is anti-forcing".into()).into());
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < options[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
    Err(Error::CapExceeded(caps.cycle_cap))
}
