//! Linear-time decompositions giving the minimum and maximum anti-forcing
//! numbers of a chain.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexId};
use crate::solver::SpectrumResult;

use super::realize::Realized;
use super::ChainSpec;

/// Faces `first..=last`, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceRange {
    pub first: usize,
    pub last: usize,
}

impl FaceRange {
    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Kink flags of the internal faces; `flags[k]` belongs to face `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KinkFlags {
    pub flags: Vec<bool>,
}

pub fn kink_flags(spec: &ChainSpec) -> KinkFlags {
    KinkFlags { flags: spec.offsets().iter().map(|d| d % 2 == 1).collect() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDecomposition {
    pub segments: Vec<FaceRange>,
}

impl SegmentDecomposition {
    /// The minimum anti-forcing number of the chain.
    pub fn count(&self) -> usize {
        self.segments.len()
    }
}

/// Cuts segments off the left end. A kink is an internal face of the
/// remaining suffix with an odd offset; the first face of a suffix is
/// terminal there and never counts. With no kink the suffix is one segment.
/// Otherwise the segment ends at the first kink if that face is a square,
/// else at the second kink, or runs to the end if there is none.
pub fn segment_decomposition(spec: &ChainSpec) -> SegmentDecomposition {
    let n = spec.len();
    let lengths = spec.lengths();
    let mut segments = Vec::new();
    let mut start = 0;
    while start < n {
        let mut kinks = (start + 1..n.saturating_sub(1)).filter(|&i| spec.is_kink(i));
        let last = match kinks.next() {
            None => n - 1,
            Some(i) if lengths[i] == 4 => i,
            Some(_) => kinks.next().unwrap_or(n - 1),
        };
        segments.push(FaceRange { first: start, last });
        start = last + 1;
    }
    SegmentDecomposition { segments }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<FaceRange>,
    /// Faces dropped between blocks (and after the last one).
    pub skipped: Vec<usize>,
}

impl BlockDecomposition {
    /// The maximum anti-forcing number of the chain.
    pub fn total(&self) -> usize {
        self.blocks.iter().map(FaceRange::len).sum()
    }
}

fn first_non_kink_after(spec: &ChainSpec, start: usize) -> Option<usize> {
    (start + 1..spec.len().saturating_sub(1)).find(|&i| !spec.is_kink(i))
}

/// Repeatedly takes the longest all-kink prefix `B` of the current suffix,
/// which ends at the first internal non-kink face. The next suffix starts
/// right after the first kink following `B`; without such a kink the
/// decomposition stops.
pub fn all_kink_decomposition(spec: &ChainSpec) -> BlockDecomposition {
    let n = spec.len();
    let mut blocks = Vec::new();
    let mut skipped = Vec::new();
    let mut start = 0;
    while start < n {
        let Some(k) = first_non_kink_after(spec, start) else {
            blocks.push(FaceRange { first: start, last: n - 1 });
            break;
        };
        blocks.push(FaceRange { first: start, last: k });
        match (k + 1..n - 1).find(|&j| spec.is_kink(j)) {
            Some(j) => {
                skipped.extend(k + 1..=j);
                start = j + 1;
            }
            None => {
                skipped.extend(k + 1..n);
                break;
            }
        }
    }
    BlockDecomposition { blocks, skipped }
}

/// Removes `drop` from the graph spanned by `keep`, then repeatedly deletes
/// both ends of every pendant edge. Returns the surviving vertices.
fn peel_pendants(g: &Graph, keep: &[VertexId], drop: &[VertexId]) -> Vec<VertexId> {
    let mut alive = vec![false; g.vertex_count()];
    for &v in keep {
        alive[v] = true;
    }
    for &v in drop {
        alive[v] = false;
    }
    let degree = |alive: &[bool], v: VertexId| g.neighbors(v).iter().filter(|&&(w, _)| alive[w]).count();
    loop {
        let pendant = (0..g.vertex_count()).find(|&v| alive[v] && degree(&alive, v) <= 1);
        let Some(v) = pendant else { break };
        alive[v] = false;
        if let Some(&(w, _)) = g.neighbors(v).iter().find(|&&(w, _)| alive[w]) {
            alive[w] = false;
        }
    }
    (0..g.vertex_count()).filter(|&v| alive[v]).collect()
}

/// The all-kink decomposition with the skipping step done on the graph:
/// delete the block's vertices from the current subchain and peel pendant
/// edges until none remain. The survivors must span a suffix of faces, which
/// becomes the next subchain. Returns `None` if they do not.
pub fn all_kink_decomposition_by_peeling(spec: &ChainSpec, realized: &Realized) -> Option<BlockDecomposition> {
    let n = spec.len();
    let g = &realized.graph;
    let mut blocks = Vec::new();
    let mut skipped = Vec::new();
    let mut start = 0;
    while start < n {
        let Some(k) = first_non_kink_after(spec, start) else {
            blocks.push(FaceRange { first: start, last: n - 1 });
            break;
        };
        blocks.push(FaceRange { first: start, last: k });
        let current = realized.face_range_vertices(start, n - 1);
        let block = realized.face_range_vertices(start, k);
        let rest = peel_pendants(g, &current, &block);
        if rest.is_empty() {
            skipped.extend(k + 1..n);
            break;
        }
        let next = (k + 1..n).find(|&f| realized.face_range_vertices(f, n - 1) == rest)?;
        skipped.extend(k + 1..next);
        start = next;
    }
    Some(BlockDecomposition { blocks, skipped })
}

/// `[af, Af]` as consecutive integers.
pub fn spectrum_chain(spec: &ChainSpec) -> SpectrumResult {
    let low = segment_decomposition(spec).count();
    let high = all_kink_decomposition(spec).total();
    SpectrumResult { values: (low..=high).collect(), per_matching: None }
}

/// Number of maximal runs of faces with no internal kink; runs overlap at
/// kinks, so this is the kink count plus one.
pub fn maximal_linear_chain_count(spec: &ChainSpec) -> usize {
    kink_flags(spec).flags.iter().filter(|&&k| k).count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{parse_chain, realize};
    use crate::matching::enumerate_perfect_matchings;
    use crate::testing::cycle;
    use proptest::prelude::*;

    fn chain(s: &str) -> ChainSpec {
        parse_chain(s).unwrap()
    }

    fn sizes(d: &[FaceRange]) -> Vec<usize> {
        d.iter().map(FaceRange::len).collect()
    }

    #[test]
    fn kink_examples() {
        assert_eq!(kink_flags(&chain("6 6@2 6")).flags, vec![false]);
        assert_eq!(kink_flags(&chain("4 4@1 4")).flags, vec![true]);
        assert_eq!(kink_flags(&chain("4 4@0 4")).flags, vec![false]);
    }

    #[test]
    fn segment_examples() {
        let s = segment_decomposition(&chain("6 6@2 6"));
        assert_eq!(s.count(), 1);
        let s = segment_decomposition(&chain("6 6@1 6@1 6@1 6@1 6@1 6@1 6"));
        assert_eq!(
            s.segments,
            vec![FaceRange { first: 0, last: 2 }, FaceRange { first: 3, last: 5 }, FaceRange { first: 6, last: 7 }]
        );
        let s = segment_decomposition(&chain("4 4@1 4@1 4@1 4"));
        assert_eq!(sizes(&s.segments), vec![2, 2, 1]);
        assert_eq!(segment_decomposition(&chain("8")).count(), 1);
    }

    #[test]
    fn block_examples() {
        let b = all_kink_decomposition(&chain("6 6@2 6"));
        assert_eq!(b.blocks, vec![FaceRange { first: 0, last: 1 }]);
        assert_eq!(b.skipped, vec![2]);
        assert_eq!(b.total(), 2);
        assert_eq!(all_kink_decomposition(&chain("6 6@1 6")).total(), 3);
        let b = all_kink_decomposition(&chain("6 6@1 6@2 6@1 6"));
        assert_eq!(b.blocks, vec![FaceRange { first: 0, last: 2 }, FaceRange { first: 4, last: 4 }]);
        assert_eq!(b.skipped, vec![3]);
        assert_eq!(b.total(), 4);
        assert_eq!(all_kink_decomposition(&chain("6")).total(), 1);
        assert_eq!(all_kink_decomposition(&chain("6 8")).total(), 2);
    }

    #[test]
    fn spectrum_and_counts() {
        assert_eq!(spectrum_chain(&chain("6 6@2 6")).values, vec![1, 2]);
        assert_eq!(spectrum_chain(&chain("6 6@1 6")).values, vec![1, 2, 3]);
        assert_eq!(spectrum_chain(&chain("6")).values, vec![1]);
        assert_eq!(maximal_linear_chain_count(&chain("6 6@1 6@1 6@1 6@1 6@1 6@1 6")), 7);
        assert_eq!(maximal_linear_chain_count(&chain("6 6@2 6")), 1);
        assert_eq!(maximal_linear_chain_count(&chain("6 6@1 6@2 6@1 6")), 3);
    }

    /// Kink by definition: some perfect matching of the face cycle, taken on
    /// its own, contains both shared edges.
    fn kink_by_matching(r: &Realized, face: usize) -> bool {
        let f = &r.faces.interior[face];
        let len = f.vertices.len();
        let local = cycle(len);
        let pos = |e| {
            let (a, b) = r.graph.edge(e);
            let ia = f.vertices.iter().position(|&v| v == a).unwrap();
            let ib = f.vertices.iter().position(|&v| v == b).unwrap();
            local.edge_id(ia, ib).unwrap()
        };
        let (left, right) = (pos(r.shared[face - 1]), pos(r.shared[face]));
        enumerate_perfect_matchings(&local, 4).unwrap().iter().any(|m| m.contains(left) && m.contains(right))
    }

    fn any_chain() -> impl Strategy<Value = ChainSpec> {
        proptest::collection::vec(prop_oneof![Just(4usize), Just(6), Just(8)], 1..10).prop_flat_map(|lengths| {
            let n = lengths.len();
            let ranges: Vec<_> = (1..n.saturating_sub(1)).map(|i| 0..=lengths[i] - 2).collect();
            (Just(lengths), ranges).prop_map(|(l, o)| ChainSpec::new(l, o).unwrap())
        })
    }

    proptest! {
        #[test]
        fn parity_rule_matches_definition(spec in any_chain()) {
            let r = realize(&spec);
            let flags = kink_flags(&spec).flags;
            for (k, &flag) in flags.iter().enumerate() {
                prop_assert_eq!(flag, kink_by_matching(&r, k + 1));
            }
        }

        #[test]
        fn decomposition_bounds(spec in any_chain()) {
            let af = segment_decomposition(&spec).count();
            let big = all_kink_decomposition(&spec).total();
            prop_assert!(1 <= af && af <= big && big <= spec.len());
            let all_kink = kink_flags(&spec).flags.iter().all(|&k| k);
            prop_assert_eq!(big == spec.len(), all_kink);
            let spectrum = spectrum_chain(&spec).values;
            prop_assert!(spectrum.windows(2).all(|w| w[1] == w[0] + 1));
        }

        #[test]
        fn segments_partition_faces(spec in any_chain()) {
            let segs = segment_decomposition(&spec).segments;
            prop_assert_eq!(segs[0].first, 0);
            prop_assert_eq!(segs.last().unwrap().last, spec.len() - 1);
            prop_assert!(segs.windows(2).all(|w| w[1].first == w[0].last + 1));
        }

        #[test]
        fn peeling_agrees_with_face_level(spec in any_chain()) {
            let r = realize(&spec);
            prop_assert_eq!(all_kink_decomposition_by_peeling(&spec, &r), Some(all_kink_decomposition(&spec)));
        }

        #[test]
        fn mirror_invariance(spec in any_chain()) {
            let m = spec.mirrored();
            prop_assert_eq!(segment_decomposition(&spec), segment_decomposition(&m));
            prop_assert_eq!(all_kink_decomposition(&spec), all_kink_decomposition(&m));
            prop_assert_eq!(maximal_linear_chain_count(&spec), maximal_linear_chain_count(&m));
        }
    }
}
