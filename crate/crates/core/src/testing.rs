//! Small fixture graphs shared by unit tests.

use crate::graph::Graph;

pub fn cycle(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &pairs).unwrap()
}

pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &pairs).unwrap()
}

pub fn k4() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Hexagons on 0..6 and 6..12 joined by the bridge (0, 6).
pub fn bridged_hexagons() -> Graph {
    let mut pairs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    pairs.extend((0..6).map(|i| (6 + i, 6 + (i + 1) % 6)));
    pairs.push((0, 6));
    Graph::new(12, &pairs).unwrap()
}
