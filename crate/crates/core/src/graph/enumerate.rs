//! Lexicographic streams of edge subsets and matchings, addressed by
//! positions in the host's canonical edge list.

use super::{EdgeSet, Graph, Matching};

/// All `k`-combinations of `0..m` in lexicographic order.
#[derive(Clone, Debug)]
pub(crate) struct IndexCombinations {
    m: usize,
    current: Vec<usize>,
    first: bool,
    done: bool,
}

impl IndexCombinations {
    pub(crate) fn new(m: usize, k: usize) -> Self {
        IndexCombinations {
            m,
            current: (0..k).collect(),
            first: true,
            done: k > m,
        }
    }
}

impl Iterator for IndexCombinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.current.clone());
        }
        let k = self.current.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.current[i] < self.m - k + i {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return Some(self.current.clone());
            }
        }
        self.done = true;
        None
    }
}

/// All `k`-matchings of a graph as sorted edge-index vectors, lexicographic.
#[derive(Clone, Debug)]
pub(crate) struct MatchingIndices<'g> {
    graph: &'g Graph,
    k: usize,
    stack: Vec<usize>,
    used: Vec<bool>,
    next: usize,
    done: bool,
}

impl<'g> MatchingIndices<'g> {
    pub(crate) fn new(graph: &'g Graph, k: usize) -> Self {
        MatchingIndices {
            graph,
            k,
            stack: Vec::with_capacity(k),
            used: vec![false; graph.n()],
            next: 0,
            done: k > graph.m(),
        }
    }

    fn pop(&mut self) -> bool {
        match self.stack.pop() {
            Some(last) => {
                let (u, v) = self.graph.edges()[last];
                self.used[u] = false;
                self.used[v] = false;
                self.next = last + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for MatchingIndices<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let m = self.graph.m();
        loop {
            if self.stack.len() == self.k {
                let out = self.stack.clone();
                if !self.pop() {
                    // k == 0: a single empty matching
                    self.done = true;
                }
                return Some(out);
            }
            if m - self.next.min(m) < self.k - self.stack.len() {
                if !self.pop() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let (u, v) = self.graph.edges()[self.next];
            if !self.used[u] && !self.used[v] {
                self.used[u] = true;
                self.used[v] = true;
                self.stack.push(self.next);
            }
            self.next += 1;
        }
    }
}

/// Stream of every `k`-subset of `E(g)`, lexicographic in edge indices.
pub struct EdgeSubsets<'g> {
    graph: &'g Graph,
    inner: IndexCombinations,
}

impl Iterator for EdgeSubsets<'_> {
    type Item = EdgeSet;

    fn next(&mut self) -> Option<EdgeSet> {
        self.inner.next().map(|idx| EdgeSet::from_indices(self.graph, &idx))
    }
}

/// Stream of every `k`-matching of `g`, lexicographic in edge indices.
pub struct Matchings<'g> {
    graph: &'g Graph,
    inner: MatchingIndices<'g>,
}

impl Iterator for Matchings<'_> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        self.inner
            .next()
            .map(|idx| Matching::try_from(EdgeSet::from_indices(self.graph, &idx)).expect("disjoint by construction"))
    }
}

pub fn enumerate_edge_subsets(g: &Graph, k: usize) -> EdgeSubsets<'_> {
    EdgeSubsets {
        graph: g,
        inner: IndexCombinations::new(g.m(), k),
    }
}

pub fn enumerate_matchings(g: &Graph, k: usize) -> Matchings<'_> {
    Matchings {
        graph: g,
        inner: MatchingIndices::new(g, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn matching_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_matchings(&p3, 2).count(), 0);
        let c4: Vec<_> = enumerate_matchings(&cycle(4), 2).collect();
        assert_eq!(c4.len(), 2);
        assert!(c4.iter().all(|m| m.len() == 2));
        assert_eq!(enumerate_matchings(&complete(4), 2).count(), 3);
    }

    #[test]
    fn subset_examples() {
        assert_eq!(enumerate_edge_subsets(&complete(3), 1).count(), 3);
        let all: Vec<_> = enumerate_edge_subsets(&complete(3), 3).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].len(), 3);
        assert_eq!(enumerate_edge_subsets(&cycle(4), 2).count(), 6);
        assert_eq!(enumerate_edge_subsets(&cycle(4), 5).count(), 0);
        assert_eq!(enumerate_edge_subsets(&cycle(4), 0).count(), 1);
    }

    #[test]
    fn streams_are_lexicographic_and_agree() {
        let g = complete(6);
        for k in 1..=3 {
            let subsets: Vec<Vec<usize>> = IndexCombinations::new(g.m(), k).collect();
            assert!(subsets.windows(2).all(|w| w[0] < w[1]));
            let filtered: Vec<Vec<usize>> = subsets
                .into_iter()
                .filter(|s| EdgeSet::from_indices(&g, s).is_matching())
                .collect();
            let matchings: Vec<Vec<usize>> = MatchingIndices::new(&g, k).collect();
            assert_eq!(filtered, matchings);
        }
    }
}
