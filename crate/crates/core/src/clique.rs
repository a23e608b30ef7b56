//! Exact maximum clique by branch and bound with a greedy coloring bound.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Self {
        Bits { words: vec![0; n.div_ceil(64)] }
    }

    pub fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Undirected graph on `0..n` given by adjacency bitsets.
pub(crate) struct CliqueProblem {
    adj: Vec<Bits>,
}

impl CliqueProblem {
    pub fn new(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Bits::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        CliqueProblem { adj }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Size of a maximum clique within `cand`.
    fn max_size_in(&self, cand: &Bits) -> usize {
        let mut best = 0;
        self.expand(0, cand.clone(), &mut best);
        best
    }

    fn expand(&self, size: usize, mut cand: Bits, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        let (order, colors) = self.color_sort(&cand);
        for k in (0..order.len()).rev() {
            if size + colors[k] <= *best {
                return;
            }
            let v = order[k];
            self.expand(size + 1, cand.and(&self.adj[v]), best);
            cand.remove(v);
        }
    }

    // Greedy sequential coloring; colors[k] bounds the clique size among
    // order[..=k].
    fn color_sort(&self, cand: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                uncolored.remove(v);
                for w in self.adj[v].iter() {
                    avail.remove(w);
                }
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }

    /// The lexicographically least (as an ascending index list) among all
    /// maximum cliques.
    pub fn lex_least_maximum(&self) -> Vec<usize> {
        let n = self.len();
        let all = Bits::full(n);
        let target = self.max_size_in(&all);
        let mut chosen = Vec::with_capacity(target);
        let mut cand = all;
        for v in 0..n {
            if chosen.len() == target {
                break;
            }
            if !cand.contains(v) {
                continue;
            }
            let mut next = cand.and(&self.adj[v]);
            for w in 0..=v {
                if next.contains(w) {
                    next.remove(w);
                }
            }
            if 1 + self.max_size_in(&next) + chosen.len() >= target {
                chosen.push(v);
                cand = next;
            } else {
                cand.remove(v);
            }
        }
        chosen
    }
}
